"""3D R: P polynomials, difference equations, element routes, series."""

from __future__ import annotations

import pytest

from qreflect.exactq import LaurentQ
from qreflect.multipoly import MultiPolyQ, VARS3, variables
import qreflect.threedr as threedr
from qreflect.threedr import (
    hypergeometric_p,
    p_polynomial,
    p_ring_report,
    r_block,
    r_element,
    swap_xz,
    verify_generating_series,
    verify_involution,
    verify_mirror_pairs,
    verify_p_relations,
    verify_route_agreement,
)

X, Y, Z = variables(VARS3)


class TestPPolynomial:
    def test_base(self):
        assert p_polynomial(0) == MultiPolyQ.one(VARS3)
        assert p_polynomial(-1).is_zero

    def test_first_step(self):
        # One step of the recursion from P_0 = 1.
        assert p_polynomial(1) == (1 - X) * (1 - Z) + X * Z * (Y - 1)

    @pytest.mark.parametrize("b", range(4))
    def test_relations(self, b):
        rep = verify_p_relations(b)
        assert rep.passed, rep.summary()

    @pytest.mark.parametrize("b", range(7))
    def test_symmetry(self, b):
        pb = p_polynomial(b)
        assert swap_xz(pb) == pb

    @pytest.mark.parametrize("b", range(7))
    def test_ring_membership(self, b):
        rep = p_ring_report(b)
        assert rep.passed, rep.summary()

    def test_corrupted_p_fails_with_equation_id(self):
        # Alter one coefficient of P_3 in the cache; some relation at b=2
        # or b=3 must then fail, and the report names the equation.
        p_polynomial(4)
        original = threedr._P_CACHE[3]
        exps = next(iter(original.monomial_exponents()))
        corrupted = original + MultiPolyQ.monomial(
            VARS3, exps, LaurentQ.monomial(2)
        )
        threedr._P_CACHE[3] = corrupted
        try:
            reports = [verify_p_relations(2), verify_p_relations(3)]
            assert any(not rep.passed for rep in reports)
            failing = next(rep for rep in reports if not rep.passed)
            assert "relation" in failing.first_failure.location
        finally:
            threedr._P_CACHE[3] = original

    def test_mirror_pairs(self):
        rep = verify_mirror_pairs()
        assert rep.passed, rep.summary()


class TestHypergeometric:
    def test_base(self):
        assert hypergeometric_p(0) == MultiPolyQ.one(VARS3)

    def test_two_term_series(self):
        assert hypergeometric_p(1) == (1 - Z) * (1 - X) + X * Z * (Y - 1)

    @pytest.mark.parametrize("b", range(2, 6))
    def test_matches_recursion(self, b):
        assert hypergeometric_p(b) == p_polynomial(b)


class TestRElement:
    def test_normalization(self):
        assert r_element(0, 0, 0, 0, 0, 0) == LaurentQ.one()

    def test_unit_element(self):
        assert r_element(1, 0, 1, 0, 1, 0) == LaurentQ.one()

    def test_two_term_block(self):
        assert r_element(0, 1, 0, 1, 0, 1) == 1 - LaurentQ.monomial(2)

    def test_weight_violation(self):
        assert r_element(2, 0, 1, 0, 1, 0).is_zero
        assert r_element(0, 0, 0, -1, 1, 0).is_zero

    def test_doublesum_route_directly(self):
        # (lambda, mu) = (0,1) and (1,0) give 1 - q^2 at this key.
        assert r_element(0, 1, 0, 1, 0, 1, route="doublesum") == 1 - LaurentQ.monomial(2)

    @pytest.mark.parametrize("key", [(0, 0, 0, 0, 0, 0), (1, 1, 2, 0, 2, 1), (2, 1, 0, 1, 2, 0)])
    def test_all_routes_agree(self, key):
        r_element(*key, route="all")

    def test_route_agreement_sweep(self):
        rep = verify_route_agreement(3, 3)
        assert rep.passed, rep.summary()

    def test_involution(self):
        for m, n in ((0, 0), (1, 2), (3, 3), (2, 4)):
            rep = verify_involution(m, n)
            assert rep.passed, rep.summary()

    def test_block_shape(self):
        states, matrix = r_block(2, 3)
        assert states == [(0, 2, 1), (1, 1, 2), (2, 0, 3)]
        assert len(matrix) == len(states)


class TestGeneratingSeries:
    def test_order_zero(self):
        rep = verify_generating_series(2, 1, 0, 0)
        assert rep.passed and rep.checked == 1

    @pytest.mark.parametrize("point", [(0, 0, 0), (1, 2, 1), (2, 0, 2)])
    def test_small_orders(self, point):
        rep = verify_generating_series(*point, 4)
        assert rep.passed, rep.summary()
