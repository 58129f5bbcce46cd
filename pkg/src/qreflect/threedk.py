"""Matrix elements of the 3D K and the difference equations behind them.

A key (a,b,c,d; i,j,k,l) is nonzero only on the weight block
a+b+c = i+j+k and b+2c+d = j+2k+l.  Two routes produce the element:

  primary: q^{phi_K - phi_{b,c}} Q_{b,c}(q^{4i},q^{2j},q^{4k},q^{2l})
           / ((q^2;q^2)_b (q^4;q^4)_c)
  dual:    q^{phi_K - phi_{j,k}} [l over b,d]_{q^2} [i over a,c]_{q^4}
           Q_{j,k}(q^{4a},q^{2b},q^{4c},q^{2d})

Both reduce by exact division to a polynomial in q lying in
q^eta Z[q^2] with eta = bd + jl mod 2; mismatches of any kind raise.

The module also verifies the fourteen difference equations E22..E55 that
characterize the Q family (each one the image of a generator
intertwining relation), the binomial-transpose symmetry between a key
and its flip, and the element-level recursion bridging the two levels.
"""

from __future__ import annotations

from .exactq import DomainError, LaurentQ, qq_pochhammer
from .multipoly import MultiPolyQ, VARS4, q_power, variables
from .qfamily import phi_bc, phi_k, q_polynomial
from .report import VerificationError, VerificationReport

_ZERO4 = MultiPolyQ.zero(VARS4)
_X, _Y, _Z, _W = variables(VARS4)

_K_ELEMENTS: dict[tuple[int, ...], LaurentQ] = {}

K_ROUTES = ("primary", "dual")


def _q4(exp: int, coeff: int = 1) -> MultiPolyQ:
    return q_power(VARS4, exp, coeff)


def weight_compatible(a: int, b: int, c: int, d: int, i: int, j: int, k: int, l: int) -> bool:
    return a + b + c == i + j + k and b + 2 * c + d == j + 2 * k + l


def _check_element(value: LaurentQ, key: tuple[int, ...]) -> LaurentQ:
    a, b, c, d, i, j, k, l = key
    eta = (b * d + j * l) % 2
    for e, _ in value.items():
        if e < 0 or e % 2 != eta:
            raise VerificationError(
                f"element {key} violates the q^eta Z[q^2] property (exponent {e})"
            )
    return value


def k_element(
    a: int, b: int, c: int, d: int, i: int, j: int, k: int, l: int,
    route: str = "primary",
) -> LaurentQ:
    """K^{a,b,c,d}_{i,j,k,l}; zero off the weight block or at negative indices."""
    if min(a, b, c, d, i, j, k, l) < 0 or not weight_compatible(a, b, c, d, i, j, k, l):
        return LaurentQ.zero()
    key = (a, b, c, d, i, j, k, l)
    if route == "primary":
        cached = _K_ELEMENTS.get(key)
        if cached is not None:
            return cached
        value = q_polynomial(b, c).evaluate_at_q_powers((4 * i, 2 * j, 4 * k, 2 * l))
        num = value.shifted(phi_k(*key) - phi_bc(b, c))
        den = qq_pochhammer(2, b) * qq_pochhammer(4, c)
        result = _check_element(num.exact_div(den), key)
        _K_ELEMENTS[key] = result
        return result
    if route == "dual":
        value = q_polynomial(j, k).evaluate_at_q_powers((4 * a, 2 * b, 4 * c, 2 * d))
        num = value.shifted(phi_k(*key) - phi_bc(j, k))
        num = num * qq_pochhammer(2, l) * qq_pochhammer(4, i)
        den = (
            qq_pochhammer(2, b)
            * qq_pochhammer(2, d)
            * qq_pochhammer(4, a)
            * qq_pochhammer(4, c)
        )
        return _check_element(num.exact_div(den), key)
    if route == "both":
        primary = k_element(*key, route="primary")
        dual = k_element(*key, route="dual")
        if primary != dual:
            raise VerificationError(f"primary/dual routes disagree at {key}")
        return primary
    raise DomainError(f"unknown route {route!r}")


def k_block_states(m: int, n: int) -> list[tuple[int, int, int, int]]:
    """The weight block {(a,b,c,d) >= 0 : a+b+c = m, b+2c+d = n}, sorted."""
    states = []
    for c in range(min(m, n // 2) + 1):
        for b in range(min(m - c, n - 2 * c) + 1):
            states.append((m - b - c, b, c, n - b - 2 * c))
    return sorted(states)


def k_block(
    m: int, n: int, route: str = "primary"
) -> tuple[list[tuple[int, int, int, int]], list[list[LaurentQ]]]:
    """Matrix of K on a weight block: rows are outputs, columns inputs."""
    states = k_block_states(m, n)
    matrix = [
        [k_element(*out, *inp, route=route) for inp in states] for out in states
    ]
    return states, matrix


def verify_route_agreement(max_m: int, max_n: int) -> VerificationReport:
    """primary = dual on every key of every block with m <= max_m, n <= max_n."""
    rep = VerificationReport(f"K route agreement, m<={max_m}, n<={max_n}")
    for m in range(max_m + 1):
        for n in range(max_n + 1):
            states = k_block_states(m, n)
            for out in states:
                for inp in states:
                    try:
                        k_element(*out, *inp, route="both")
                        rep.count()
                    except VerificationError as exc:
                        rep.record(False, str(exc))
    return rep


def check_transpose(
    a: int, b: int, c: int, d: int, i: int, j: int, k: int, l: int
) -> VerificationReport:
    """K^{a,b,c,d}_{i,j,k,l} [j,l over b,d]^{-1}... cross-multiplied:

    K^{abcd}_{ijkl} (q^2)_b (q^2)_d (q^4)_a (q^4)_c
      = (q^2)_j (q^2)_l (q^4)_i (q^4)_k K^{ijkl}_{abcd}.
    """
    rep = VerificationReport(f"transpose symmetry at {(a, b, c, d, i, j, k, l)}")
    lhs = (
        k_element(a, b, c, d, i, j, k, l)
        * qq_pochhammer(2, b)
        * qq_pochhammer(2, d)
        * qq_pochhammer(4, a)
        * qq_pochhammer(4, c)
    )
    rhs = (
        k_element(i, j, k, l, a, b, c, d)
        * qq_pochhammer(2, j)
        * qq_pochhammer(2, l)
        * qq_pochhammer(4, i)
        * qq_pochhammer(4, k)
    )
    rep.record(lhs == rhs, f"transpose at {(a, b, c, d, i, j, k, l)}", str(lhs), str(rhs))
    return rep


def verify_transpose_block(m: int, n: int) -> VerificationReport:
    rep = VerificationReport(f"transpose symmetry on block ({m},{n})")
    states = k_block_states(m, n)
    for out in states:
        for inp in states:
            rep.absorb(check_transpose(*out, *inp))
    return rep


# -- the difference equations E22..E55 -------------------------------------------
#
# Each relation is a list of (coefficient polynomial, (b,c)-offset, q-shift
# of (x,y,z,w)) whose weighted sum of shifted Q polynomials vanishes; Q at
# a negative index is the zero polynomial.

E_RELATION_IDS = (
    "E22", "E23", "E24",
    "E32", "E33", "E34", "E35",
    "E42", "E43", "E44", "E45",
    "E53", "E54", "E55",
)

ETerm = tuple[MultiPolyQ, tuple[int, int], tuple[int, int, int, int]]


def e_relation_terms(name: str, b: int, c: int) -> list[ETerm]:
    x, y, z, w = _X, _Y, _Z, _W
    one = MultiPolyQ.one(VARS4)
    if name == "E22":
        return [
            (y * _q4(-2 * (4 * b + 6 * c + 1)), (0, 1), (0, 0, 0, 0)),
            ((w * y * z - _q4(2 * b + 4 * c + 2)) * _q4(-2 * (4 * b + 6 * c + 1)), (1, 0), (0, 0, 0, 0)),
            ((w - 1) * (y - 1), (0, 0), (0, -2, 0, -2)),
            (w * y * (z - 1) * _q4(-2 * b), (0, 0), (0, 0, -4, 0)),
        ]
    if name == "E23":
        return [
            (-_q4(-2 * (4 * b + 6 * c + 1)) * one, (0, 1), (0, 0, 0, 0)),
            (-w * z * _q4(-2 * (4 * b + 6 * c + 1)), (1, 0), (0, 0, 0, 0)),
            (w * x * (y - 1) * z * _q4(-2 * (b + 2 * c)), (0, 0), (0, -2, 0, 0)),
            ((w - 1) * (x - 1), (0, 0), (-4, 0, 0, -2)),
            (w * (x - 1) * (z - 1) * _q4(-2 * b), (0, 0), (-4, 2, -4, 0)),
        ]
    if name == "E24":
        return [
            (w * y * z * _q4(-2 * (b + 2 * c)) - 1, (0, 0), (0, 0, 0, 0)),
            ((1 - w), (0, 0), (0, 0, 0, -2)),
            (-w * (z - 1) * _q4(-2 * b), (0, 0), (0, 2, -4, 0)),
            (-w * (y - 1) * z * _q4(-2 * (b + 2 * c)), (0, 0), (4, -2, 0, 0)),
        ]
    if name == "E32":
        big = _q4(4 * (b + c)) - x * y * y * z
        return [
            (_q4(-6 * b - 8 * c) * (_q4(2 * (b + 2 * c)) - w * y * z) * big, (0, 0), (0, 0, 0, 0)),
            (-y * (_q4(2 * b) - 1) * _q4(-8 * (b + c)) * big, (-1, 1), (0, 0, 0, 0)),
            (-y * z * _q4(-8 * (b + c)), (1, 0), (0, 0, 0, 0)),
            ((y - 1), (0, 0), (0, -2, 0, 0)),
            (y * (z - 1) * _q4(-2 * b), (0, 0), (0, 0, -4, 2)),
        ]
    if name == "E33":
        big = _q4(4 * (b + c)) - x * y * y * z
        return [
            (w * z * _q4(-6 * b - 8 * c) * big, (0, 0), (0, 0, 0, 0)),
            ((_q4(2 * b) - 1) * _q4(-8 * (b + c)) * big, (-1, 1), (0, 0, 0, 0)),
            (z * _q4(-8 * (b + c)), (1, 0), (0, 0, 0, 0)),
            ((x - 1), (0, 0), (-4, 0, 0, 0)),
            (x * (y - 1) * z * _q4(-2 * (b + 2 * c)), (0, 0), (0, -2, 0, 2)),
            ((x - 1) * (z - 1) * _q4(-2 * b), (0, 0), (-4, 2, -4, 2)),
        ]
    if name == "E34":
        return [
            (y * z * _q4(-2 * (b + 2 * c)) - 1, (0, 0), (0, 0, 0, 0)),
            (
                z * (_q4(4 * c) - 1) * _q4(-2 * (b + 2 * c + 1))
                * (_q4(2 * (b + 2 * c)) - w * y * z * _q4(2)),
                (1, -1),
                (0, 0, 0, 0),
            ),
            (
                (_q4(2 * b) - 1) * _q4(-2 * b)
                * (_q4(2 * (b + 2 * c - 1)) - w * y * z)
                * (_q4(4 * (b + c - 1)) - x * y * y * z),
                (-1, 0),
                (0, 0, 0, 0),
            ),
            (-(z - 1) * _q4(-2 * b), (0, 0), (0, 2, -4, 2)),
            (-(y - 1) * z * _q4(-2 * (b + 2 * c)), (0, 0), (4, -2, 0, 2)),
        ]
    if name == "E35":
        return [
            (-w * z * (_q4(4 * c) - 1), (1, -1), (0, 0, 0, 0)),
            (-one, (0, 0), (0, 0, 0, 2)),
            (
                -w * (_q4(2 * b) - 1) * _q4(4 * c) * (_q4(4 * (b + c - 1)) - x * y * y * z),
                (-1, 0),
                (0, 0, 0, 0),
            ),
            (one, (0, 0), (0, 0, 0, 0)),
        ]
    if name == "E42":
        return [
            (x * y * y * (_q4(2 * b) - 1), (-1, 1), (0, 0, 0, 0)),
            (x * y * _q4(2 * b) * (w * y * z - _q4(2 * (b + 2 * c))), (0, 0), (0, 0, 0, 0)),
            (-(w - 1) * _q4(6 * b + 8 * c), (0, 0), (0, 0, 0, -2)),
            (-one, (1, 0), (0, 0, 0, 0)),
        ]
    if name == "E43":
        return [
            (x * y * y * (1 - _q4(2 * b)), (-1, 1), (0, 0, 0, 0)),
            (w * x * y * _q4(2 * b) * (_q4(2 * (b + 2 * c)) - y * z), (0, 0), (0, 0, 0, 0)),
            (-(w - 1) * x * (y - 1) * _q4(6 * b + 4 * c), (0, 0), (0, -2, 4, -2)),
            (-(w - 1) * (x - 1) * _q4(6 * b + 8 * c), (0, 0), (-4, 2, 0, -2)),
            (one, (1, 0), (0, 0, 0, 0)),
        ]
    if name == "E44":
        return [
            ((_q4(4 * c) - 1) * (_q4(2 * (b + 2 * c - 1)) - w * y * z), (1, -1), (0, 0, 0, 0)),
            (-w * y * _q4(-2 * b), (0, 0), (4, 0, 0, 0)),
            (
                x * y * y * (_q4(2 * b) - 1) * _q4(4 * c)
                * (w * y * z - _q4(2 * (b + 2 * c - 1))),
                (-1, 0),
                (0, 0, 0, 0),
            ),
            ((w - 1) * _q4(4 * c), (0, 0), (0, 2, 0, -2)),
            ((w - 1) * (y - 1), (0, 0), (4, -2, 4, -2)),
            (y, (0, 0), (0, 0, 0, 0)),
        ]
    if name == "E45":
        return [
            (w * x * y * y * z * (_q4(2 * b) - 1) * _q4(4 * c), (-1, 0), (0, 0, 0, 0)),
            (-w * z * (_q4(4 * c) - 1), (1, -1), (0, 0, 0, 0)),
            (-w * _q4(-2 * b), (0, 0), (0, 2, 0, 0)),
            ((w - 1), (0, 0), (0, 0, 4, -2)),
            (one, (0, 0), (0, 0, 0, 0)),
        ]
    if name == "E53":
        return [
            (-x * y * _q4(-2 * (b + 2 * c)), (0, 0), (0, 0, 0, 2)),
            ((x - 1), (0, 0), (-4, 2, 0, 0)),
            (x * (y - 1) * _q4(-4 * c), (0, 0), (0, -2, 4, 0)),
            (one, (0, 0), (0, 0, 0, 0)),
        ]
    if name == "E54":
        return [
            (y * (_q4(2 * b) - 1), (-1, 0), (0, 0, 0, 0)),
            (
                _q4(2 * b) * (_q4(4 * c) - 1) * (_q4(2 * (b + 2 * c - 2)) - w * y * z),
                (0, -1),
                (0, 0, 0, 0),
            ),
            (-_q4(-4 * b - 4 * c + 6) * one, (0, 0), (0, 2, 0, 0)),
            (y * _q4(-6 * b - 8 * c + 6), (0, 0), (4, 0, 0, 2)),
            (-(y - 1) * _q4(-4 * b - 8 * c + 6), (0, 0), (4, -2, 4, 0)),
        ]
    if name == "E55":
        return [
            (-w * z * _q4(2 * b) * (_q4(4 * c) - 1), (0, -1), (0, 0, 0, 0)),
            ((_q4(2 * b) - 1), (-1, 0), (0, 0, 0, 0)),
            (-_q4(-4 * b - 8 * c + 6) * one, (0, 0), (0, 0, 4, 0)),
            (_q4(-6 * b - 8 * c + 6) * one, (0, 0), (0, 2, 0, 2)),
        ]
    raise DomainError(f"unknown relation {name!r}")


def e_residual(name: str, b: int, c: int) -> MultiPolyQ:
    out = _ZERO4
    for coeff, (db, dc), shifts in e_relation_terms(name, b, c):
        qpoly = q_polynomial(b + db, c + dc)
        if qpoly.is_zero:
            continue
        out = out + coeff * qpoly.shift_multi(shifts)
    return out


def verify_e(name: str, b: int, c: int) -> VerificationReport:
    """One difference equation at one (b, c), as an exact polynomial identity."""
    if name not in E_RELATION_IDS:
        raise DomainError(f"unknown relation {name!r}")
    rep = VerificationReport(f"{name} at (b,c)=({b},{c})")
    residual = e_residual(name, b, c)
    if residual.is_zero:
        rep.count()
    else:
        exps = min(residual.monomial_exponents())
        rep.record(
            False,
            f"{name} at ({b},{c}): surviving monomial {exps}",
            str(residual.coeff(exps)),
            "0",
        )
    return rep


def verify_e_all(max_b: int, max_c: int) -> VerificationReport:
    rep = VerificationReport(f"E relations for b<={max_b}, c<={max_c}")
    for name in E_RELATION_IDS:
        for b in range(max_b + 1):
            for c in range(max_c + 1):
                rep.absorb(verify_e(name, b, c))
    return rep


def verify_bridge_recursion(
    a: int, b: int, c: int, d: int, i: int, j: int, k: int, l: int
) -> VerificationReport:
    """Element-level recursion bridging operator relations and E equations:

    q^{b+2c}(1-q^{2d+2}) K^{a,b,c,d+1}_{i,j,k,l}
      = q^{2k+l}(1-q^{2j}) K^{a,b,c,d}_{i+1,j-1,k,l}
      + q^{2i+l}(1-q^{4k}) K^{a,b,c,d}_{i,j+1,k-1,l}
      + q^{2i+j}(1-q^{2l}) K^{a,b,c,d}_{i,j,k,l-1}.
    """
    rep = VerificationReport(f"element recursion at {(a, b, c, d, i, j, k, l)}")
    lhs = (
        k_element(a, b, c, d + 1, i, j, k, l).shifted(b + 2 * c)
        * (1 - LaurentQ.monomial(2 * d + 2))
    )
    rhs = (
        k_element(a, b, c, d, i + 1, j - 1, k, l).shifted(2 * k + l)
        * (1 - LaurentQ.monomial(2 * j))
        + k_element(a, b, c, d, i, j + 1, k - 1, l).shifted(2 * i + l)
        * (1 - LaurentQ.monomial(4 * k))
        + k_element(a, b, c, d, i, j, k, l - 1).shifted(2 * i + j)
        * (1 - LaurentQ.monomial(2 * l))
    )
    rep.record(lhs == rhs, f"bridge at {(a, b, c, d, i, j, k, l)}", str(lhs), str(rhs))
    return rep


def clear_caches() -> None:
    _K_ELEMENTS.clear()
