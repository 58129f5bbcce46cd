"""Exact arithmetic over Z[q, q^-1] and friends.

A Laurent polynomial in q is represented sparsely as a dict mapping the
integer q-exponent to a nonzero Python int coefficient; the zero polynomial
is the empty dict.  All arithmetic is exact: coefficients are arbitrary
precision integers and nothing in this package ever rounds.

On top of LaurentQ the module provides

  * RationalQ         -- a ratio of two LaurentQ values, compared
                         cross-multiplicatively and never auto-reduced;
                         reduce_to_laurent() performs exact division and
                         fails loudly if a remainder survives,
  * q-Pochhammer products (z; q^B)_n and the multi-index q-factorial
    symbol with its zero-extension rule for negative lower indices,
  * PowerSeriesU      -- power series in an auxiliary variable u truncated
                         at a fixed order, with RationalQ coefficients,
  * euler_factor_series -- the u-expansion of (a*u; q^2)_inf or its
                         reciprocal, solved from f(u) = (1 - a*u) f(q^2 u).

Values are immutable after construction and safe to share between threads.
"""

from __future__ import annotations

from functools import lru_cache
from typing import Iterable, Iterator


class ExactDivisionError(ArithmeticError):
    """Raised when an exact polynomial division leaves a remainder."""


class DomainError(ValueError):
    """Raised when an operation is evaluated outside its stated domain."""


class LaurentQ:
    """Sparse Laurent polynomial in q with integer coefficients.

    Invariants: no stored coefficient is zero; the zero polynomial stores
    no terms at all.  Instances are immutable; every operation returns a
    new value.
    """

    __slots__ = ("_terms",)

    def __init__(self, terms: dict[int, int] | None = None, *, _trusted: bool = False):
        if terms is None:
            self._terms: dict[int, int] = {}
        elif _trusted:
            self._terms = terms
        else:
            self._terms = {int(e): int(c) for e, c in terms.items() if c != 0}

    # -- constructors ------------------------------------------------------

    @staticmethod
    def zero() -> LaurentQ:
        return _ZERO

    @staticmethod
    def one() -> LaurentQ:
        return _ONE

    @staticmethod
    def monomial(exp: int, coeff: int = 1) -> LaurentQ:
        if coeff == 0:
            return _ZERO
        return LaurentQ({exp: coeff}, _trusted=True)

    @staticmethod
    def integer(n: int) -> LaurentQ:
        return LaurentQ.monomial(0, n)

    # -- predicates and access ---------------------------------------------

    @property
    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __len__(self) -> int:
        return len(self._terms)

    def coeff(self, exp: int) -> int:
        return self._terms.get(exp, 0)

    def items(self) -> Iterator[tuple[int, int]]:
        return iter(self._terms.items())

    def min_exp(self) -> int:
        if not self._terms:
            raise DomainError("zero polynomial has no minimal exponent")
        return min(self._terms)

    def max_exp(self) -> int:
        if not self._terms:
            raise DomainError("zero polynomial has no maximal exponent")
        return max(self._terms)

    def exponent_range(self) -> tuple[int, int]:
        return (self.min_exp(), self.max_exp())

    def __eq__(self, other: object) -> bool:
        if isinstance(other, int):
            other = LaurentQ.integer(other)
        if not isinstance(other, LaurentQ):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        return hash(frozenset(self._terms.items()))

    # -- arithmetic ---------------------------------------------------------

    def __neg__(self) -> LaurentQ:
        return LaurentQ({e: -c for e, c in self._terms.items()}, _trusted=True)

    def __add__(self, other: LaurentQ | int) -> LaurentQ:
        if isinstance(other, int):
            other = LaurentQ.integer(other)
        if not isinstance(other, LaurentQ):
            return NotImplemented
        if not self._terms:
            return other
        if not other._terms:
            return self
        out = dict(self._terms)
        for e, c in other._terms.items():
            s = out.get(e, 0) + c
            if s:
                out[e] = s
            else:
                del out[e]
        return LaurentQ(out, _trusted=True)

    __radd__ = __add__

    def __sub__(self, other: LaurentQ | int) -> LaurentQ:
        if isinstance(other, int):
            other = LaurentQ.integer(other)
        if not isinstance(other, LaurentQ):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other: int) -> LaurentQ:
        return LaurentQ.integer(other) - self

    def __mul__(self, other: LaurentQ | int) -> LaurentQ:
        if isinstance(other, int):
            if other == 0:
                return _ZERO
            if other == 1:
                return self
            return LaurentQ({e: c * other for e, c in self._terms.items()}, _trusted=True)
        if not isinstance(other, LaurentQ):
            return NotImplemented
        a, b = self._terms, other._terms
        if not a or not b:
            return _ZERO
        if len(a) > len(b):
            a, b = b, a
        if len(a) == 1:
            ((e0, c0),) = a.items()
            return LaurentQ({e + e0: c * c0 for e, c in b.items()}, _trusted=True)
        out: dict[int, int] = {}
        get = out.get
        for ea, ca in a.items():
            for eb, cb in b.items():
                e = ea + eb
                s = get(e, 0) + ca * cb
                if s:
                    out[e] = s
                elif e in out:
                    del out[e]
        return LaurentQ(out, _trusted=True)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> LaurentQ:
        if n < 0:
            raise DomainError("negative powers of a general Laurent polynomial")
        result = _ONE
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base if n > 1 else base
            n >>= 1
        return result

    def shifted(self, k: int) -> LaurentQ:
        """Multiply by q^k."""
        if k == 0 or not self._terms:
            return self
        return LaurentQ({e + k: c for e, c in self._terms.items()}, _trusted=True)

    def exact_div(self, den: LaurentQ) -> LaurentQ:
        """Exact division self / den in Z[q, q^-1]; raises if not exact."""
        if den.is_zero:
            raise ZeroDivisionError("division by the zero polynomial")
        if self.is_zero:
            return _ZERO
        num_lo, num_hi = self.exponent_range()
        den_lo, den_hi = den.exponent_range()
        nspan = num_hi - num_lo
        dspan = den_hi - den_lo
        if nspan < dspan:
            raise ExactDivisionError("degree span of numerator below denominator")
        ncoeffs = [0] * (nspan + 1)
        for e, c in self._terms.items():
            ncoeffs[e - num_lo] = c
        dcoeffs = [0] * (dspan + 1)
        for e, c in den._terms.items():
            dcoeffs[e - den_lo] = c
        dlead = dcoeffs[dspan]
        quot = [0] * (nspan - dspan + 1)
        for pos in range(nspan, dspan - 1, -1):
            c = ncoeffs[pos]
            if c == 0:
                continue
            qc, rem = divmod(c, dlead)
            if rem:
                raise ExactDivisionError("leading coefficient does not divide")
            shift = pos - dspan
            quot[shift] = qc
            for i, dc in enumerate(dcoeffs):
                ncoeffs[shift + i] -= qc * dc
        if any(ncoeffs):
            raise ExactDivisionError("nonzero remainder in exact division")
        offset = num_lo - den_lo
        return LaurentQ(
            {i + offset: c for i, c in enumerate(quot) if c}, _trusted=True
        )

    # -- rendering -----------------------------------------------------------

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        pieces = []
        for e in sorted(self._terms):
            c = self._terms[e]
            if e == 0:
                body = str(abs(c))
            else:
                mono = "q" if e == 1 else f"q^{e}"
                body = mono if abs(c) == 1 else f"{abs(c)}*{mono}"
            if not pieces:
                pieces.append(f"-{body}" if c < 0 else body)
            else:
                pieces.append(f"- {body}" if c < 0 else f"+ {body}")
        return " ".join(pieces)

    def __repr__(self) -> str:
        return f"LaurentQ({self})"

    def to_json(self) -> dict:
        return {"q": [[e, str(self._terms[e])] for e in sorted(self._terms)]}

    @staticmethod
    def from_json(data: dict) -> LaurentQ:
        return LaurentQ({int(e): int(c) for e, c in data["q"]})


_ZERO = LaurentQ({}, _trusted=True)
_ONE = LaurentQ({0: 1}, _trusted=True)


class RationalQ:
    """Ratio of two Laurent polynomials in q.

    The denominator is nonzero and the fraction is not reduced to lowest
    terms: equality is cross-multiplicative (a/b = c/d iff a*d = c*b) and
    reduce_to_laurent() performs the one exact division at the boundary.
    """

    __slots__ = ("num", "den")

    def __init__(self, num: LaurentQ, den: LaurentQ | None = None):
        if den is None:
            den = _ONE
        if den.is_zero:
            raise ZeroDivisionError("RationalQ with zero denominator")
        self.num = num
        self.den = den

    @staticmethod
    def zero() -> RationalQ:
        return RationalQ(_ZERO, _ONE)

    @staticmethod
    def one() -> RationalQ:
        return RationalQ(_ONE, _ONE)

    @staticmethod
    def from_laurent(p: LaurentQ) -> RationalQ:
        return RationalQ(p, _ONE)

    @property
    def is_zero(self) -> bool:
        return self.num.is_zero

    def __eq__(self, other: object) -> bool:
        if isinstance(other, (int, LaurentQ)):
            other = RationalQ(
                other if isinstance(other, LaurentQ) else LaurentQ.integer(other)
            )
        if not isinstance(other, RationalQ):
            return NotImplemented
        return self.num * other.den == other.num * self.den

    def __hash__(self) -> int:  # pragma: no cover - not used as dict key
        raise TypeError("RationalQ is unhashable (no canonical form)")

    def __neg__(self) -> RationalQ:
        return RationalQ(-self.num, self.den)

    def __add__(self, other: RationalQ) -> RationalQ:
        if not isinstance(other, RationalQ):
            return NotImplemented
        if self.is_zero:
            return other
        if other.is_zero:
            return self
        return RationalQ(
            self.num * other.den + other.num * self.den, self.den * other.den
        )

    def __sub__(self, other: RationalQ) -> RationalQ:
        return self + (-other)

    def __mul__(self, other: RationalQ | LaurentQ | int) -> RationalQ:
        if isinstance(other, (int, LaurentQ)):
            return RationalQ(self.num * other, self.den)
        if not isinstance(other, RationalQ):
            return NotImplemented
        return RationalQ(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def inverse(self) -> RationalQ:
        if self.is_zero:
            raise ZeroDivisionError("inverse of zero")
        return RationalQ(self.den, self.num)

    def __truediv__(self, other: RationalQ) -> RationalQ:
        return self * other.inverse()

    def reduce_to_laurent(self) -> LaurentQ:
        """Exact division num/den; raises ExactDivisionError if not polynomial."""
        return self.num.exact_div(self.den)

    def __str__(self) -> str:
        if self.den == _ONE:
            return str(self.num)
        return f"({self.num}) / ({self.den})"

    def __repr__(self) -> str:
        return f"RationalQ({self})"


# -- q-Pochhammer machinery ---------------------------------------------------


@lru_cache(maxsize=None)
def qq_pochhammer(base_exp: int, n: int) -> LaurentQ:
    """(q^B; q^B)_n = prod_{j=1..n} (1 - q^{B*j}) for B = base_exp."""
    if n < 0:
        raise DomainError("qq_pochhammer needs n >= 0")
    if n == 0:
        return _ONE
    return qq_pochhammer(base_exp, n - 1) * (1 - LaurentQ.monomial(base_exp * n))


@lru_cache(maxsize=None)
def qq_pochhammer_tail(base_exp: int, lo: int, hi: int) -> LaurentQ:
    """(q^B; q^B)_hi / (q^B; q^B)_lo = prod_{j=lo+1..hi} (1 - q^{B*j})."""
    if not 0 <= lo <= hi:
        raise DomainError("qq_pochhammer_tail needs 0 <= lo <= hi")
    out = _ONE
    for j in range(lo + 1, hi + 1):
        out = out * (1 - LaurentQ.monomial(base_exp * j))
    return out


def q_pochhammer(a: tuple[int, int], base_exp: int, n: int) -> LaurentQ:
    """(a; q^B)_n = prod_{j=0..n-1} (1 - a q^{B*j}) for a = sign*q^exp.

    a is given as (sign, q-exponent) with sign +1 or -1; n must be
    nonnegative (callers filter their domains first).
    """
    sign, a_exp = a
    if sign not in (1, -1):
        raise DomainError("monomial sign must be +1 or -1")
    if base_exp <= 0 or base_exp % 2:
        raise DomainError("base exponent must be a positive even integer")
    if n < 0:
        raise DomainError("q_pochhammer needs n >= 0")
    out = _ONE
    for j in range(n):
        out = out * (1 - LaurentQ.monomial(a_exp + base_exp * j, sign))
    return out


def q_symbol(uppers: Iterable[int], lowers: Iterable[int], base_exp: int) -> RationalQ:
    """Multi-index q-factorial symbol prod (q^B)_{r_i} / prod (q^B)_{s_j}.

    With all uppers >= 0, a negative lower index makes the symbol exactly
    zero (the 1/(q)_n = 0 rule).  A negative upper index is a domain error:
    the value is indeterminate and shipped formulas pre-filter it away.
    """
    uppers = list(uppers)
    lowers = list(lowers)
    if any(r < 0 for r in uppers):
        raise DomainError(f"negative upper index in q_symbol: {uppers}")
    if any(s < 0 for s in lowers):
        return RationalQ.zero()
    num = _ONE
    for r in uppers:
        num = num * qq_pochhammer(base_exp, r)
    den = _ONE
    for s in lowers:
        den = den * qq_pochhammer(base_exp, s)
    return RationalQ(num, den)


@lru_cache(maxsize=None)
def gaussian_binomial(n: int, k: int, base_exp: int) -> LaurentQ:
    """Gaussian binomial (q^B)_n / ((q^B)_k (q^B)_{n-k}); zero if k outside 0..n."""
    if n < 0:
        raise DomainError("gaussian_binomial needs n >= 0")
    if k < 0 or k > n:
        return _ZERO
    num = qq_pochhammer(base_exp, n)
    den = qq_pochhammer(base_exp, k) * qq_pochhammer(base_exp, n - k)
    return num.exact_div(den)


# -- truncated power series in u ----------------------------------------------


class PowerSeriesU:
    """Power series in u truncated at a fixed order, RationalQ coefficients."""

    __slots__ = ("order", "coeffs")

    def __init__(self, order: int, coeffs: list[RationalQ]):
        if order < 0:
            raise DomainError("series order must be >= 0")
        if len(coeffs) != order + 1:
            raise DomainError("coefficient list must have length order + 1")
        self.order = order
        self.coeffs = list(coeffs)

    @staticmethod
    def one(order: int) -> PowerSeriesU:
        coeffs = [RationalQ.one()] + [RationalQ.zero()] * order
        return PowerSeriesU(order, coeffs)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, PowerSeriesU):
            return NotImplemented
        if self.order != other.order:
            return False
        return all(a == b for a, b in zip(self.coeffs, other.coeffs))

    __hash__ = None  # type: ignore[assignment]

    def _canonical_numerators(self) -> list[LaurentQ] | None:
        """Coefficient k as a Laurent numerator over (q^2; q^2)_k, if exact."""
        nums = []
        for k, c in enumerate(self.coeffs):
            try:
                nums.append((c.num * qq_pochhammer(2, k)).exact_div(c.den))
            except ExactDivisionError:
                return None
        return nums

    def __mul__(self, other: PowerSeriesU) -> PowerSeriesU:
        if not isinstance(other, PowerSeriesU):
            return NotImplemented
        order = min(self.order, other.order)
        a = self._canonical_numerators()
        b = other._canonical_numerators()
        if a is not None and b is not None:
            # n_i/(q^2)_i * m_j/(q^2)_j = n_i m_j C(i+j,i)_{q^2} / (q^2)_{i+j},
            # so each product coefficient again sits over (q^2;q^2)_k.
            coeffs = []
            for k in range(order + 1):
                num = _ZERO
                for i in range(k + 1):
                    if a[i].is_zero or b[k - i].is_zero:
                        continue
                    num = num + a[i] * b[k - i] * gaussian_binomial(k, i, 2)
                coeffs.append(RationalQ(num, qq_pochhammer(2, k)))
            return PowerSeriesU(order, coeffs)
        coeffs = []
        for k in range(order + 1):
            acc = RationalQ.zero()
            for i in range(k + 1):
                acc = acc + self.coeffs[i] * other.coeffs[k - i]
            coeffs.append(acc)
        return PowerSeriesU(order, coeffs)

    def __str__(self) -> str:
        return " + ".join(f"({c})*u^{k}" for k, c in enumerate(self.coeffs))


def euler_factor_series(a: tuple[int, int], invert: bool, order: int) -> PowerSeriesU:
    """u-expansion of (a*u; q^2)_inf, or its reciprocal when invert is set.

    Solved coefficient-by-coefficient from f(u) = (1 - a*u) f(q^2 u):
    c_k = -a q^{2k-2} c_{k-1} / (1 - q^{2k}), and for the reciprocal
    c_k = a c_{k-1} / (1 - q^{2k}); either way the denominator of the
    u^k coefficient divides (q^2; q^2)_k.
    """
    if order < 0:
        raise DomainError("series order must be >= 0")
    sign, a_exp = a
    if sign not in (1, -1):
        raise DomainError("monomial sign must be +1 or -1")
    coeffs = [RationalQ.one()]
    num = _ONE
    for k in range(1, order + 1):
        if invert:
            num = num * LaurentQ.monomial(a_exp, sign)
        else:
            num = num * LaurentQ.monomial(a_exp + 2 * (k - 1), -sign)
        coeffs.append(RationalQ(num, qq_pochhammer(2, k)))
    return PowerSeriesU(order, coeffs)
