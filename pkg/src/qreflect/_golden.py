"""Frozen reference values for the golden regression checks.

The renderings below were produced by this package and cross-checked
against independently hand-built polynomials in the test suite; the CLI
`verify golden` recomputes everything and diffs byte-for-byte against
these strings.

The quotient identities express six matrix elements of one small weight
block through special values of Q_{1,0}, Q_{0,1} and Q_{1,1}; they are
stored cross-multiplied, as (numerator shift, Q index, Q evaluation
point, denominator Pochhammer factors).
"""

from __future__ import annotations

GOLDEN_Q_TEXT = {
    (0, 0): "1",
    (1, 0): "w*x*y^2*z - w - x*y + 1",
    (0, 1): "-w^2*x*y^2*z^2 + w^2*z + (1 + q^2)*w*x*y*z - (1 + q^2)*w*z"
            " - q^2*x + q^2",
    (2, 0): "w^2*x^2*y^4*z^2 - (1 + q^4)*w^2*x*y^2*z + q^4*w^2"
            " - (1 + q^2)*w*x^2*y^3*z + (1 + q^2)*w*x*y^2*z"
            " + (q^4 + q^6)*w*x*y - (q^4 + q^6)*w + q^2*x^2*y^2"
            " + (-q^2 + q^4)*x*y^2 - (q^4 + q^6)*x*y + q^6",
    (1, 1): "-w^3*x^2*y^4*z^3 + (1 + q^4)*w^3*x*y^2*z^2 - q^4*w^3*z"
            " + (1 + q^2 + q^4)*w^2*x^2*y^3*z^2"
            " - (1 + q^2 + q^4)*w^2*x*y^2*z^2"
            " - (q^4 + q^6 + q^8)*w^2*x*y*z + (q^4 + q^6 + q^8)*w^2*z"
            " - (q^2 + q^4 + q^6)*w*x^2*y^2*z + q^2*w*x*y^2*z"
            " + (q^4 + 2*q^6 + q^8)*w*x*y*z - (q^6 + q^8)*w*z"
            " + q^10*w*x - q^10*w + q^6*x^2*y - q^6*x*y - q^10*x + q^10",
}

# The weight block carrying the six reference elements: out = (3,1,0,2).
GOLDEN_K_OUT = (3, 1, 0, 2)
GOLDEN_K_BLOCK = (4, 3)

GOLDEN_K_TEXT = {
    (1, 3, 0, 0): "-q^6 - q^8 - q^10",
    (2, 1, 1, 0): "-q^10 - q^12 - q^14",
    (2, 2, 0, 1): "1 - q^12 - q^14 - q^16",
    (3, 0, 1, 1): "q^6 - q^18 - q^20 - q^22",
    (3, 1, 0, 2): "q^6 + q^8 - q^20 - q^22 - q^24",
    (4, 0, 0, 3): "q^14 + q^16 + q^18 - q^30 - q^32 - q^34",
}

# K^{3,1,0,2}_{in} * prod (1 - q^e) = q^shift * Q_{b,c}(point): each entry
# is (in-key, q-shift, (b, c), evaluation exponents, denominator factors
# as q-exponents e of (1 - q^e)).
GOLDEN_QUOTIENTS = (
    ((1, 3, 0, 0), -4, (1, 0), (4, 6, 0, 0), (2,)),
    ((2, 1, 1, 0), 0, (1, 0), (8, 2, 4, 0), (2,)),
    ((2, 2, 0, 1), 0, (1, 0), (8, 4, 0, 2), (2,)),
    ((3, 0, 1, 1), 6, (1, 0), (12, 0, 4, 2), (2,)),
    ((3, 1, 0, 2), 6, (1, 0), (12, 2, 0, 4), (2,)),
    ((4, 0, 0, 3), 14, (1, 0), (16, 0, 0, 6), (2,)),
    ((2, 1, 1, 0), -10, (1, 1), (12, 2, 0, 4), (2, 2, 4, 12)),
    ((3, 0, 1, 1), 4, (0, 1), (12, 2, 0, 4), (2, 4)),
)
