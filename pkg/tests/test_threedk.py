"""3D K: element routes, transpose symmetry, E equations, parity."""

from __future__ import annotations

import pytest

from qreflect.exactq import LaurentQ
from qreflect.threedk import (
    check_transpose,
    e_residual,
    k_block_states,
    k_element,
    verify_bridge_recursion,
    verify_e,
    verify_e_all,
    verify_route_agreement,
    verify_transpose_block,
    weight_compatible,
)


class TestKElement:
    def test_normalization(self):
        assert k_element(0, 0, 0, 0, 0, 0, 0, 0) == LaurentQ.one()

    def test_weight_violation(self):
        assert k_element(1, 0, 0, 0, 0, 0, 0, 0).is_zero
        assert not weight_compatible(1, 0, 0, 0, 0, 0, 0, 0)

    def test_printed_block(self, printed_k):
        for inp, want in printed_k.items():
            assert k_element(3, 1, 0, 2, *inp) == want

    def test_printed_block_is_exhaustive(self, printed_k):
        # The six printed inputs are the whole (4,3) weight block, and the
        # element vanishes for any input off that block.
        assert k_block_states(4, 3) == sorted(printed_k)
        for inp in ((4, 0, 0, 0), (1, 3, 0, 1), (0, 0, 0, 3), (2, 1, 1, 1)):
            assert k_element(3, 1, 0, 2, *inp).is_zero

    def test_dual_route_matches(self, printed_k):
        for inp, want in printed_k.items():
            assert k_element(3, 1, 0, 2, *inp, route="dual") == want
            assert k_element(3, 1, 0, 2, *inp, route="both") == want

    def test_route_agreement_sweep(self):
        rep = verify_route_agreement(2, 4)
        assert rep.passed, rep.summary()

    def test_parity_and_polynomiality(self):
        for m in range(4):
            for n in range(5):
                for out in k_block_states(m, n):
                    for inp in k_block_states(m, n):
                        value = k_element(*out, *inp)
                        if value.is_zero:
                            continue
                        a, b, c, d = out
                        i, j, k, l = inp
                        eta = (b * d + j * l) % 2
                        assert all(
                            e >= 0 and e % 2 == eta for e, _ in value.items()
                        ), (out, inp)

    def test_odd_parity_example(self):
        value = k_element(0, 1, 0, 1, 1, 0, 0, 2)
        assert value == LaurentQ({1: 1, 3: 1, 5: -1, 7: -1})


class TestTranspose:
    def test_self_transposed(self):
        rep = check_transpose(3, 1, 0, 2, 3, 1, 0, 2)
        assert rep.passed

    def test_printed_pair(self):
        rep = check_transpose(3, 1, 0, 2, 1, 3, 0, 0)
        assert rep.passed, rep.summary()

    @pytest.mark.parametrize("block", [(4, 3), (4, 5)])
    def test_block_scan(self, block):
        rep = verify_transpose_block(*block)
        assert rep.passed, rep.summary()


class TestEEquations:
    def test_e24_base_case(self):
        # (wyz-1) Q00 + (1-w) Q00 - w(z-1) Q00 - w(y-1)z Q00 cancels exactly.
        assert e_residual("E24", 0, 0).is_zero

    def test_all_relations_at_1_1(self):
        rep = verify_e_all(1, 1)
        assert rep.passed, rep.summary()

    def test_boundary_zero_convention(self):
        # At b=0 the terms referencing Q_{-1,c} carry the prefactor
        # q^{2b}-1 = 0, so the zero convention keeps E35 valid.
        rep = verify_e("E35", 0, 1)
        assert rep.passed, rep.summary()

    @pytest.mark.parametrize("name", ["E22", "E33", "E44", "E54"])
    def test_spot_checks_at_2_2(self, name):
        rep = verify_e(name, 2, 2)
        assert rep.passed, rep.summary()


class TestBridgeRecursion:
    @pytest.mark.parametrize(
        "key",
        [
            (3, 1, 0, 2, 1, 3, 0, 0),
            (2, 1, 1, 1, 1, 2, 1, 0),
            (1, 1, 1, 0, 0, 2, 1, 0),
            (0, 2, 0, 1, 1, 1, 0, 2),
            (2, 0, 1, 3, 1, 2, 0, 3),
        ],
    )
    def test_sampled_keys(self, key):
        rep = verify_bridge_recursion(*key)
        assert rep.passed, rep.summary()
