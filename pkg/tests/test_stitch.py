"""Tests for certificate stitching, corner bounds and sqrt-constant assembly."""

import json
import math

import numpy as np
import pytest
from scipy.integrate import quad

from commbounds.approx import DomainViolation, GaussianParams
from commbounds.formulas import csc1, scaled_cayley_Cc
from commbounds.optimize import BoundPoint, build_paper_grid, optimize_grid
from commbounds.stitch import (
    ArgumentOrder,
    CoverageGap,
    DegenerateNode,
    StitchedCertificate,
    continuity_lift,
    corner_large,
    corner_small,
    gamma_half_integrand,
    gamma_half_via_Cc,
    global_constant,
    sqrt_constant,
    stitch,
)

DUMMY = GaussianParams(1.0, 1.0)


def flat_points(grid, C=1.0):
    return [BoundPoint(float(c), C, DUMMY, False) for c in grid]


class TestContinuityLift:
    def test_lemma_arithmetic(self):
        assert continuity_lift(1.05, 1.0, 1.1) == pytest.approx(1.1025, abs=1e-15)
        assert continuity_lift(1.0, 0.0195, 0.02) == pytest.approx(1.00049, abs=1e-5)

    def test_identity_at_equal_endpoints(self):
        assert continuity_lift(1.07, 2.0, 2.0) == 1.07

    def test_argument_order(self):
        with pytest.raises(ArgumentOrder):
            continuity_lift(1.05, 1.1, 1.0)

    def test_domain(self):
        with pytest.raises(DomainViolation):
            continuity_lift(1.05, 0.0, 1.0)
        with pytest.raises(DomainViolation):
            continuity_lift(0.99, 1.0, 1.1)


class TestStitch:
    def test_single_point(self):
        cert = stitch([BoundPoint(1.0, 1.01, DUMMY, False)])
        assert cert.lifted == (1.01,)
        assert cert.global_C == 1.01
        assert cert.corner_small is None
        assert cert.corner_large is None

    def test_two_points(self):
        cert = stitch(
            [BoundPoint(1.0, 1.01, DUMMY, False), BoundPoint(1.01, 1.01, DUMMY, False)]
        )
        assert cert.lifted[0] == pytest.approx(1.01 * 2.01 / 2.0, abs=1e-15)
        assert cert.lifted[0] == pytest.approx(1.01505, abs=1e-12)
        assert cert.global_C == max(cert.lifted)

    def test_degenerate_node_rejected(self):
        good = BoundPoint(1.0, 1.01, DUMMY, False)
        with pytest.raises(DegenerateNode):
            stitch([good, BoundPoint(2.0, 10.0, DUMMY, True)])
        with pytest.raises(DegenerateNode):
            stitch([good, BoundPoint(2.0, 10.0, DUMMY, False)])

    def test_sorting_and_empty(self):
        with pytest.raises(DomainViolation):
            stitch([BoundPoint(2.0, 1.0, DUMMY, False), BoundPoint(1.0, 1.0, DUMMY, False)])
        with pytest.raises(CoverageGap):
            stitch([])

    def test_lift_dominates_interior(self):
        # Any d inside [c_k, c_{k+1}] is covered by D_k.
        points = optimize_grid([0.9, 1.0, 1.1])
        cert = stitch(points)
        for k, p in enumerate(points[:-1]):
            for d in np.linspace(p.c, points[k + 1].c, 23):
                assert continuity_lift(p.C_k, p.c, float(d)) <= cert.lifted[k] + 1e-15

    def test_per_interval_beats_uniform_lift(self):
        # Constant spacing: every D_k is at most the single coarse lift
        # applied to the largest node constant.
        grid = [1.0 + 0.1 * k for k in range(11)]
        constants = [1.0 + 0.003 * ((k * 7) % 5) for k in range(11)]
        points = [BoundPoint(c, C, DUMMY, False) for c, C in zip(grid, constants)]
        cert = stitch(points)
        uniform = max(constants) * (grid[0] + 0.1 + 1.0) / (grid[0] + 1.0)
        assert max(cert.lifted) <= uniform + 1e-12


class TestCorners:
    def test_corner_small(self):
        assert corner_small(0.0195) == 1.0195
        assert corner_small(1.0) == 2.0
        assert corner_small(1e-12) == pytest.approx(1.0, abs=1e-11)
        with pytest.raises(DomainViolation):
            corner_small(0.0)

    def test_corner_large(self):
        assert corner_large(40.0) == pytest.approx(1.01859375, abs=1e-12)
        assert corner_large(40.0) < 1.0186
        assert corner_large(0.5) == 1.5
        assert corner_large(1e9) == pytest.approx(1.0, abs=1e-8)
        with pytest.raises(DomainViolation):
            corner_large(0.49)

    def test_corner_large_shape(self):
        # The ratio (1 - 1/(4c))(c+1)/c is unimodal on [1/2, inf): it
        # rises to 25/16 at c = 2/3 (the shift constant) and decreases
        # beyond, so the returned value bounds the tail for cn >= 2/3.
        assert corner_large(2.0 / 3.0) == pytest.approx(25.0 / 16.0, abs=1e-14)
        values = [corner_large(float(c)) for c in np.geomspace(2.0 / 3.0, 1e4, 200)]
        assert all(u > v for u, v in zip(values, values[1:]))
        assert corner_large(0.5) < corner_large(2.0 / 3.0)


class TestGlobalConstant:
    def test_hypothetical_unit_constants_on_paper_grid(self):
        cert = global_constant(flat_points(build_paper_grid()), 0.0195, 40.0)
        assert cert.corner_small == 1.0195
        assert cert.corner_large == pytest.approx(1.01859375, abs=1e-12)
        # Unit node constants lift to at most ~1.0046, so the corners win.
        assert cert.global_C == cert.corner_small == 1.0195
        assert len(cert.lifted) == len(cert.points)

    def test_coverage_gap(self):
        with pytest.raises(CoverageGap):
            global_constant([], 1.0, 1.0)
        points = flat_points([1.0, 2.0, 3.0])
        with pytest.raises(CoverageGap):
            global_constant(points, 0.9, 3.0)
        with pytest.raises(CoverageGap):
            global_constant(points, 1.0, 3.5)

    def test_corner_validity_region(self):
        with pytest.raises(DomainViolation):
            global_constant(flat_points([0.1, 0.2]), 0.1, 0.2)


class TestSqrtConstant:
    def test_unit_constants_frozen_value(self):
        value = sqrt_constant(flat_points(build_paper_grid()))
        assert value == pytest.approx(1.0017546, abs=1e-6)
        assert value > 1.0

    def test_riemann_sum_dominates_integral(self):
        # Each stitched summand dominates the corresponding piece of
        # (1/pi) int dt/((1+t) sqrt t) = 1, so with C = 1 the output
        # exceeds 1; scaling the constants scales the middle sum.
        ones = sqrt_constant(flat_points(build_paper_grid()))
        flat = sqrt_constant(flat_points(build_paper_grid(), C=1.0195))
        assert 1.0 < ones < flat

    def test_monotone_in_each_constant(self):
        grid = build_paper_grid()
        base_points = flat_points(grid)
        base = sqrt_constant(base_points)
        bumped = list(base_points)
        k = 1000
        bumped[k] = BoundPoint(base_points[k].c, 1.1, DUMMY, False)
        delta = sqrt_constant(bumped) - base
        expected = (
            0.2 / (grid[k] + 1.0) * (math.sqrt(grid[k + 1]) - math.sqrt(grid[k]))
        ) / math.pi
        assert delta == pytest.approx(expected, rel=1e-9)
        assert delta > 0.0
        # The last node multiplies no interval, so bumping it is flat.
        bumped_last = list(base_points)
        bumped_last[-1] = BoundPoint(base_points[-1].c, 2.0, DUMMY, False)
        assert sqrt_constant(bumped_last) == base

    def test_span_and_degeneracy_contract(self):
        with pytest.raises(CoverageGap):
            sqrt_constant(flat_points([0.02, 1.0, 40.0]))
        with pytest.raises(CoverageGap):
            sqrt_constant(flat_points([0.0195, 1.0, 39.0]))
        bad = flat_points([0.0195, 1.0, 40.0])
        bad[1] = BoundPoint(1.0, 10.0, DUMMY, True)
        with pytest.raises(DegenerateNode):
            sqrt_constant(bad)


class TestSerialization:
    def test_round_trip_is_exact(self):
        points = optimize_grid([0.9, 1.0, 1.1])
        cert = global_constant(points, 0.9, 1.1)
        payload = json.loads(json.dumps(cert.to_dict()))
        back = StitchedCertificate.from_dict(payload)
        assert back == cert
        assert back.global_C == cert.global_C

    def test_round_trip_without_corners(self):
        cert = stitch(optimize_grid([1.0, 1.5]))
        back = StitchedCertificate.from_dict(json.loads(json.dumps(cert.to_dict())))
        assert back == cert
        assert back.corner_small is None

    def test_length_mismatch_rejected(self):
        cert = stitch(optimize_grid([1.0, 1.5]))
        payload = cert.to_dict()
        payload["C_k"] = payload["C_k"][:-1]
        with pytest.raises(CoverageGap):
            StitchedCertificate.from_dict(payload)


class TestGammaHalfIntegral:
    def test_value(self):
        value = gamma_half_via_Cc()
        assert value == pytest.approx(1.1017415, abs=1e-6)
        assert 1.0 < value < 1.102

    def test_matches_unsubstituted_quadrature(self):
        direct, err = quad(gamma_half_integrand, 0.0, math.inf, limit=400)
        assert err / math.pi < 1e-6
        assert gamma_half_via_Cc() == pytest.approx(direct / math.pi, abs=1e-6)

    def test_integrand_csc_branch_at_two_thirds(self):
        t = 2.0 / 3.0
        assert scaled_cayley_Cc(t) == pytest.approx(1.25, abs=1e-12)
        assert 1.25 > csc1()
        expected = csc1() / ((1.0 + t) * math.sqrt(t))
        assert gamma_half_integrand(t) == pytest.approx(expected, abs=1e-12)

    def test_integrand_cayley_branch(self):
        t = 0.1
        assert scaled_cayley_Cc(t) < csc1()
        expected = scaled_cayley_Cc(t) / ((1.0 + t) * math.sqrt(t))
        assert gamma_half_integrand(t) == pytest.approx(expected, abs=1e-14)

    def test_domain(self):
        with pytest.raises(DomainViolation):
            gamma_half_integrand(0.0)
