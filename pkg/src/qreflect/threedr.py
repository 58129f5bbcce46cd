"""The 3D R: polynomials P_b(x,y,z) and matrix elements via three routes.

P_0 = 1 and P_{b+1}(x,y,z) = (1-z) P_b(x,y,q^{-2}z)
                             - q^{-2b} x (1 - q^{-2b} y z) P_b(x,y,z)
is the fixed computation route.  Thirteen further q-difference equations
(and the x<->z symmetry) hold for every b and are checked as exact
polynomial identities.  Matrix elements

    R^{a,b,c}_{i,j,k} = delta^{a+b}_{i+j} delta^{b+c}_{j+k}
                        q^{(a-j)(c-j)} P_b(q^{2i},q^{2j},q^{2k}) / (q^2;q^2)_b

can also be produced from a terminating q-hypergeometric sum, from a
double sum over lambda + mu = b of Gaussian binomials, and from the u^b
coefficient of a four-factor Euler product; all routes agree exactly.
"""

from __future__ import annotations

from .exactq import (
    DomainError,
    LaurentQ,
    PowerSeriesU,
    RationalQ,
    euler_factor_series,
    gaussian_binomial,
    qq_pochhammer,
)
from .multipoly import MultiPolyQ, VARS3, q_power, variables
from .report import VerificationError, VerificationReport

_ZERO3 = MultiPolyQ.zero(VARS3)
_ONE3 = MultiPolyQ.one(VARS3)
_X, _Y, _Z = variables(VARS3)

_P_CACHE: dict[int, MultiPolyQ] = {0: _ONE3}
_R_ELEMENTS: dict[tuple[int, int, int, int, int, int], LaurentQ] = {}


def _q3(exp: int, coeff: int = 1) -> MultiPolyQ:
    return q_power(VARS3, exp, coeff)


def p_polynomial(b: int) -> MultiPolyQ:
    """P_b(x,y,z), memoized; the zero polynomial for b < 0."""
    if b < 0:
        return _ZERO3
    if b in _P_CACHE:
        return _P_CACHE[b]
    start = 0
    while start + 1 in _P_CACHE:
        start += 1
    for n in range(start, b):
        prev = _P_CACHE[n]
        nxt = (1 - _Z) * prev.shift_multi((0, 0, -2)) - (
            _X * _q3(-2 * n) - _X * _Y * _Z * _q3(-4 * n)
        ) * prev
        _P_CACHE[n + 1] = nxt
    return _P_CACHE[b]


def swap_xz(p: MultiPolyQ) -> MultiPolyQ:
    """Interchange the first and third variables."""
    return MultiPolyQ(
        p.names, {(e[2], e[1], e[0]): c for e, c in p.items()}, _trusted=True
    )


# -- the fourteen difference equations ----------------------------------------
#
# Each relation is a list of (coefficient polynomial, b-offset, q-shift of
# (x,y,z)) triples whose weighted sum of shifted P polynomials vanishes.

P_RELATION_IDS = (
    "42", "43", "44", "45", "46", "47", "48",
    "49", "50", "51", "52", "53", "BS", "p22",
)

MIRROR_PAIRS = (("42", "43"), ("44", "45"), ("49", "50"), ("51", "52"))

PTerm = tuple[MultiPolyQ, int, tuple[int, int, int]]


def p_relation_terms(name: str, b: int) -> list[PTerm]:
    x, y, z = _X, _Y, _Z
    if name == "42":
        return [
            (_ONE3, 0, (2, 0, 0)),
            (-_ONE3, 0, (0, 0, 0)),
            (-x * _q3(2 - 2 * b) * (1 - _q3(2 * b)) * (1 - y * z * _q3(2 - 2 * b)), -1, (0, 0, 0)),
        ]
    if name == "43":
        return [
            (_ONE3, 0, (0, 0, 2)),
            (-_ONE3, 0, (0, 0, 0)),
            (-z * _q3(2 - 2 * b) * (1 - _q3(2 * b)) * (1 - x * y * _q3(2 - 2 * b)), -1, (0, 0, 0)),
        ]
    if name == "44":
        return [
            ((1 - x), 0, (-2, 0, 0)),
            (-z * _q3(-2 * b) * (1 - x * y * _q3(-2 * b)), 0, (0, 0, 0)),
            (-_ONE3, 1, (0, 0, 0)),
        ]
    if name == "45":
        return [
            ((1 - z), 0, (0, 0, -2)),
            (-x * _q3(-2 * b) * (1 - y * z * _q3(-2 * b)), 0, (0, 0, 0)),
            (-_ONE3, 1, (0, 0, 0)),
        ]
    if name == "46":
        return [
            (_ONE3, 0, (0, 2, 0)),
            (-_ONE3, 0, (0, 0, 0)),
            (x * y * z * _q3(4 - 4 * b) * (1 - _q3(2 * b)), -1, (0, 0, 0)),
        ]
    if name == "47":
        return [
            (y, 1, (0, 0, 0)),
            ((1 - y), 0, (0, -2, 0)),
            (-(1 - x * y * _q3(-2 * b)) * (1 - y * z * _q3(-2 * b)), 0, (0, 0, 0)),
        ]
    if name == "48":
        return [
            ((y - _q3(2 * b)), 0, (0, 0, 0)),
            ((1 - y), 0, (2, -2, 2)),
            (
                -(1 - _q3(2 * b)) * (1 - x * y * _q3(2 - 2 * b)) * (1 - y * z * _q3(2 - 2 * b)),
                -1,
                (0, 0, 0),
            ),
        ]
    if name == "49":
        return [
            (_ONE3, 0, (0, 0, 0)),
            (-z * _q3(-2 * b), 0, (2, 0, 0)),
            (-(1 - z), 0, (0, 2, -2)),
        ]
    if name == "50":
        return [
            (_ONE3, 0, (0, 0, 0)),
            (-x * _q3(-2 * b), 0, (0, 0, 2)),
            (-(1 - x), 0, (-2, 2, 0)),
        ]
    if name == "51":
        return [
            (x * (1 - y) * _q3(-2 * b), 0, (0, -2, 2)),
            ((1 - x), 0, (-2, 0, 0)),
            (-(1 - x * y * _q3(-2 * b)), 0, (0, 0, 0)),
        ]
    if name == "52":
        return [
            (z * (1 - y) * _q3(-2 * b), 0, (2, -2, 0)),
            ((1 - z), 0, (0, 0, -2)),
            (-(1 - y * z * _q3(-2 * b)), 0, (0, 0, 0)),
        ]
    if name == "53":
        return [
            ((1 - _q3(2 * b)), -1, (0, 0, 0)),
            (-_ONE3, 0, (2, 0, 2)),
            (_q3(2 * b), 0, (0, 2, 0)),
        ]
    if name == "BS":
        return [
            (x * z * (1 - y) * _q3(-2 * b), 0, (0, -2, 0)),
            (-(1 - x) * (1 - z), 0, (-2, 0, -2)),
            (_ONE3, 1, (0, 0, 0)),
        ]
    if name == "p22":
        return [
            (_ONE3, 1, (0, 0, 0)),
            (-(1 - x) * (1 - z), 0, (-2, 2, -2)),
            (-x * z * _q3(-4 * b) * (y - _q3(2 * b)), 0, (0, 0, 0)),
        ]
    raise DomainError(f"unknown relation {name!r}")


def p_relation_residual(name: str, b: int) -> MultiPolyQ:
    out = _ZERO3
    for coeff, db, shifts in p_relation_terms(name, b):
        out = out + coeff * p_polynomial(b + db).shift_multi(shifts)
    return out


def verify_p_relations(b: int) -> VerificationReport:
    """All fourteen difference equations plus the x<->z symmetry, at one b."""
    rep = VerificationReport(f"P relations, b={b}")
    for name in P_RELATION_IDS:
        residual = p_relation_residual(name, b)
        rep.record(residual.is_zero, f"relation {name} at b={b}", str(residual), "0")
    pb = p_polynomial(b)
    rep.record(swap_xz(pb) == pb, f"P_{b}(x,y,z) = P_{b}(z,y,x)")
    return rep


def verify_mirror_pairs() -> VerificationReport:
    """The four mirror pairs map into each other under x<->z, structurally.

    A term (coeff, db, (sx,sy,sz)) maps to (coeff with x,z swapped, db,
    (sz,sy,sx)); the image term multiset must equal the partner's.
    """
    rep = VerificationReport("mirror pairs under x<->z")
    for b in range(4):
        for left, right in MIRROR_PAIRS:
            def canon(terms):
                return sorted(
                    (db, shifts, str(coeff)) for coeff, db, shifts in terms
                )
            image = [
                (swap_xz(coeff), db, (s[2], s[1], s[0]))
                for coeff, db, s in p_relation_terms(left, b)
            ]
            rep.record(
                canon(image) == canon(p_relation_terms(right, b)),
                f"{left} <-> {right} at b={b}",
            )
    return rep


def p_ring_report(b: int) -> VerificationReport:
    """q^{2b(b-1)} P_b has coefficients in Z[q^2]."""
    rep = VerificationReport(f"P_{b} ring membership")
    shift = 2 * b * (b - 1)
    for exps, coeff in p_polynomial(b).items():
        ok = all((e + shift) >= 0 and (e + shift) % 2 == 0 for e, _ in coeff.items())
        rep.record(ok, f"P_{b} coefficient of {exps} in q^(-2b(b-1)) Z[q^2]")
    return rep


def hypergeometric_p(b: int) -> MultiPolyQ:
    """P_b from the terminating q-hypergeometric sum; checked vs the recursion.

    P_b = sum_{n=0}^{b} [(q^{-2b};q^2)_n / (q^2;q^2)_n] (q^{2-2b}yz; q^2)_n
          (q^{2n+2-2b}z; q^2)_{b-n} q^{2n} x^n.
    """
    if b < 0:
        raise DomainError("hypergeometric_p needs b >= 0")
    x, y, z = _X, _Y, _Z
    total = _ZERO3
    for n in range(b + 1):
        scalar = LaurentQ.one()
        for m in range(n):
            scalar = scalar * (1 - LaurentQ.monomial(-2 * b + 2 * m))
        scalar = scalar.exact_div(qq_pochhammer(2, n))
        term = MultiPolyQ.monomial(VARS3, (n, 0, 0), scalar.shifted(2 * n))
        for m in range(n):
            term = term * (1 - y * z * _q3(2 - 2 * b + 2 * m))
        for m in range(b - n):
            term = term * (1 - z * _q3(2 * n + 2 - 2 * b + 2 * m))
        total = total + term
    if total != p_polynomial(b):
        raise VerificationError(f"hypergeometric route mismatch at b={b}")
    return total


# -- matrix elements ------------------------------------------------------------

R_ROUTES = ("poly", "doublesum", "series")


def r_element(
    a: int, b: int, c: int, i: int, j: int, k: int, route: str = "poly"
) -> LaurentQ:
    """R^{a,b,c}_{i,j,k}; zero off the weight block a+b = i+j, b+c = j+k."""
    if min(a, b, c, i, j, k) < 0 or a + b != i + j or b + c != j + k:
        return LaurentQ.zero()
    if route == "poly":
        key = (a, b, c, i, j, k)
        cached = _R_ELEMENTS.get(key)
        if cached is None:
            value = p_polynomial(b).evaluate_at_q_powers((2 * i, 2 * j, 2 * k))
            cached = value.shifted((a - j) * (c - j)).exact_div(qq_pochhammer(2, b))
            _R_ELEMENTS[key] = cached
        return cached
    if route == "doublesum":
        total = LaurentQ.zero()
        for lam in range(b + 1):
            mu = b - lam
            g2 = gaussian_binomial(i, mu, 2)
            if g2.is_zero:
                continue
            g1 = gaussian_binomial(lam + a, lam, 2)
            exp = i * k + b + lam * (c - a) + mu * (mu - i - k - 1)
            sign = -1 if lam % 2 else 1
            total = total + (g1 * g2).shifted(exp) * sign
        return total
    if route == "series":
        product = (
            euler_factor_series((-1, 2 + a + c), False, b)
            * euler_factor_series((-1, -i - k), False, b)
            * euler_factor_series((-1, a - c), True, b)
            * euler_factor_series((-1, c - a), True, b)
        )
        coeff = product.coeffs[b]
        return coeff.num.shifted(i * k + b).exact_div(coeff.den)
    if route == "all":
        values = {r: r_element(a, b, c, i, j, k, r) for r in R_ROUTES}
        first = values["poly"]
        for r, v in values.items():
            if v != first:
                raise VerificationError(
                    f"route {r} disagrees with poly at {(a, b, c, i, j, k)}"
                )
        return first
    raise DomainError(f"unknown route {route!r}")


def r_block_states(m: int, n: int) -> list[tuple[int, int, int]]:
    """The weight block {(a,b,c) : a+b = m, b+c = n}, lexicographic."""
    return sorted((m - bb, bb, n - bb) for bb in range(min(m, n) + 1))


def r_block(
    m: int, n: int, route: str = "poly"
) -> tuple[list[tuple[int, int, int]], list[list[LaurentQ]]]:
    """Matrix of R on a weight block: rows are outputs, columns inputs."""
    states = r_block_states(m, n)
    matrix = [
        [r_element(*out, *inp, route=route) for inp in states] for out in states
    ]
    return states, matrix


def verify_involution(m: int, n: int) -> VerificationReport:
    """R squares to the identity on the (m, n) weight block."""
    rep = VerificationReport(f"R^2 = 1 on block ({m},{n})")
    states, matrix = r_block(m, n)
    size = len(states)
    for row in range(size):
        for col in range(size):
            entry = LaurentQ.zero()
            for mid in range(size):
                entry = entry + matrix[row][mid] * matrix[mid][col]
            want = LaurentQ.one() if row == col else LaurentQ.zero()
            rep.record(
                entry == want,
                f"(R^2)[{states[row]},{states[col]}]",
                str(entry),
                str(want),
            )
    return rep


def verify_route_agreement(max_m: int, max_n: int) -> VerificationReport:
    """poly = doublesum = series on all keys with i+j <= max_m, j+k <= max_n."""
    rep = VerificationReport(f"R route agreement, m<={max_m}, n<={max_n}")
    for m in range(max_m + 1):
        for n in range(max_n + 1):
            states = r_block_states(m, n)
            for inp in states:
                for out in states:
                    try:
                        r_element(*out, *inp, route="all")
                        rep.count()
                    except VerificationError as exc:
                        rep.record(False, str(exc))
    return rep


def verify_generating_series(i: int, j: int, k: int, order: int) -> VerificationReport:
    """Series identity sum_b q^{b(b-1)} u^b P_b(x, q^{2b-2}y, z)/(q^2)_b =
    (-xyzu;q^2)oo (-u;q^2)oo / ((-xu;q^2)oo (-zu;q^2)oo) at q-power points.
    """
    if order < 0:
        raise DomainError("order must be >= 0")
    rep = VerificationReport(f"generating series at ({i},{j},{k}) to order {order}")
    lhs_coeffs = []
    for b in range(order + 1):
        value = p_polynomial(b).evaluate_at_q_powers((2 * i, 2 * j + 2 * b - 2, 2 * k))
        lhs_coeffs.append(RationalQ(value.shifted(b * (b - 1)), qq_pochhammer(2, b)))
    lhs = PowerSeriesU(order, lhs_coeffs)
    rhs = (
        euler_factor_series((-1, 2 * (i + j + k)), False, order)
        * euler_factor_series((-1, 0), False, order)
        * euler_factor_series((-1, 2 * i), True, order)
        * euler_factor_series((-1, 2 * k), True, order)
    )
    for b in range(order + 1):
        rep.record(
            lhs.coeffs[b] == rhs.coeffs[b],
            f"u^{b} coefficient at ({i},{j},{k})",
            str(lhs.coeffs[b]),
            str(rhs.coeffs[b]),
        )
    return rep


def clear_caches() -> None:
    _P_CACHE.clear()
    _P_CACHE[0] = _ONE3
    _R_ELEMENTS.clear()


def p_cache_snapshot() -> dict[int, MultiPolyQ]:
    return dict(_P_CACHE)


def p_cache_install(entries: dict[int, MultiPolyQ]) -> None:
    _P_CACHE.update(entries)
