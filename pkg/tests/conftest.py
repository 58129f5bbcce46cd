"""Shared reference data: hand-built polynomials and element values.

Everything here is transcribed independently of the package's own
computation routes (built from explicit factored products), so equality
tests against these are genuine cross-checks.
"""

from __future__ import annotations

import pytest

from qreflect.exactq import LaurentQ
from qreflect.multipoly import MultiPolyQ, VARS4, q_power, variables

X, Y, Z, W = variables(VARS4)


def qc(exp: int, coeff: int = 1) -> MultiPolyQ:
    return q_power(VARS4, exp, coeff)


def laurent(pairs: dict[int, int]) -> LaurentQ:
    return LaurentQ(pairs)


def reference_q10() -> MultiPolyQ:
    return W * X * Y**2 * Z - W - X * Y + 1


def reference_q01() -> MultiPolyQ:
    return qc(2) * (W * X * Y * Z - W * Z - X + 1) - W * Z * reference_q10()


def reference_q20() -> MultiPolyQ:
    return (
        qc(6) * (W - 1) * (X * Y - 1)
        + qc(4) * (-(W**2) * X * Y**2 * Z + W**2 + W * X * Y - W + X * Y**2 - X * Y)
        - qc(2) * X * Y**2 * (W * X * Y * Z - W * Z - X + 1)
        + W * X * Y**2 * Z * reference_q10()
    )


def reference_q11() -> MultiPolyQ:
    return (
        qc(10) * (W - 1) * (X - 1)
        - qc(8) * (W - 1) * W * Z * (X * Y - 1)
        + qc(6)
        * (
            -(W**2) * X * Y * Z
            + W**2 * Z
            - W * X**2 * Y**2 * Z
            + 2 * W * X * Y * Z
            - W * Z
            + X**2 * Y
            - X * Y
        )
        + qc(4)
        * W
        * Z
        * (
            W**2 * X * Y**2 * Z
            - W**2
            + W * X**2 * Y**3 * Z
            - W * X * Y**2 * Z
            - W * X * Y
            + W
            - X**2 * Y**2
            + X * Y
        )
        + qc(2) * W * X * Y**2 * Z * (W * X * Y * Z - W * Z - X + 1)
        - W**2 * X * Y**2 * Z**2 * reference_q10()
    )


def reference_q(b: int, c: int) -> MultiPolyQ:
    builders = {
        (0, 0): lambda: MultiPolyQ.one(VARS4),
        (1, 0): reference_q10,
        (0, 1): reference_q01,
        (2, 0): reference_q20,
        (1, 1): reference_q11,
    }
    return builders[(b, c)]()


def reference_k_values() -> dict[tuple[int, int, int, int], LaurentQ]:
    """The six nonzero elements with out-index (3,1,0,2), factored forms."""
    f = laurent({0: 1, 1: -1, 2: 1}) * laurent({0: 1, 1: 1, 2: 1})
    s = laurent({0: 1, 2: -1, 4: 1, 6: -1, 8: 1, 10: -1, 14: -1})
    two = 1 + LaurentQ.monomial(2)
    return {
        (1, 3, 0, 0): -(f.shifted(6)),
        (2, 1, 1, 0): -(f.shifted(10)),
        (2, 2, 0, 1): two * s,
        (3, 0, 1, 1): (two * s).shifted(6),
        (3, 1, 0, 2): laurent({0: 1, 2: 1, 14: -1, 16: -1, 18: -1}).shifted(6),
        (4, 0, 0, 3): (f * (1 - LaurentQ.monomial(16))).shifted(14),
    }


@pytest.fixture(scope="session")
def printed_q():
    return {
        bc: reference_q(*bc) for bc in ((0, 0), (1, 0), (0, 1), (2, 0), (1, 1))
    }


@pytest.fixture(scope="session")
def printed_k():
    return reference_k_values()
