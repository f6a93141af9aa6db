"""Exact truncated power series and polynomials over the integers.

A Series holds the coefficients of q^0 .. q^(order-1); coefficients at or
beyond the truncation order are *unknown*, not zero.  Binary operations
propagate the minimum valid order and never pad with fictitious zeros, so
two series can only ever be compared over the range both actually know.
All arithmetic is exact (arbitrary-precision integers); there is no
floating point anywhere in this package.

Multiplication and division are sparse-aware: the kernel iterates over the
nonzero terms of the sparser operand, which makes products and quotients by
theta/pentagonal series cost O(order * nnz) instead of O(order^2).
"""

from __future__ import annotations

from typing import Iterable, Sequence


class SeriesError(Exception):
    """Base class for series-kernel errors."""


class NonUnitConstant(SeriesError):
    """Inversion/division requires a constant coefficient of +1 or -1."""


class BadResidue(SeriesError):
    """Dissection residue out of range."""


class OutOfRange(SeriesError):
    """Coefficient index at or beyond the truncation order."""


def _terms_of(coeffs) -> list[tuple[int, int]]:
    """Nonzero (exponent, coefficient) pairs, ascending exponent."""
    return [(e, c) for e, c in enumerate(coeffs) if c]


def _mul_dense_terms(u: Sequence[int], terms, order: int) -> list[int]:
    """out = u * sum(c*q^e for e, c in terms), truncated to `order`.

    `u` may be shorter than `order`; missing entries are treated as zero
    (the caller guarantees they really are zero, e.g. sparse numerators).
    """
    out = [0] * order
    nu = min(len(u), order)
    for e, c in terms:
        if e >= order:
            break
        m = min(nu, order - e)
        seg = out[e:e + m]
        if c == 1:
            out[e:e + m] = [x + y for x, y in zip(seg, u)]
        elif c == -1:
            out[e:e + m] = [x - y for x, y in zip(seg, u)]
        else:
            out[e:e + m] = [x + c * y for x, y in zip(seg, u)]
    return out


def _mul_pairs(ta, tb, order: int) -> list[int]:
    """Sparse * sparse product of term lists, truncated to `order`."""
    out = [0] * order
    for ea, ca in ta:
        if ea >= order:
            break
        for eb, cb in tb:
            e = ea + eb
            if e >= order:
                break
            out[e] += ca * cb
    return out


def _div_terms(u: Sequence[int], dterms, order: int) -> list[int]:
    """Long division of u by the series with nonzero terms `dterms`.

    The divisor's lowest term must be (0, +1) or (0, -1).  Exact over the
    integers because the leading coefficient is a unit.
    """
    e0, lead = dterms[0]
    if e0 != 0 or lead not in (1, -1):
        raise NonUnitConstant("divisor constant term must be +1 or -1")
    # split the tail into +1 / -1 / general coefficient groups so the hot
    # loop does no multiplications for eta-style divisors
    plus = [e for e, c in dterms[1:] if c == 1]
    minus = [e for e, c in dterms[1:] if c == -1]
    rest = [(e, c) for e, c in dterms[1:] if c not in (1, -1)]
    r = [0] * order
    nu = len(u)
    warm = 0
    for lst in (plus, minus):
        if lst:
            warm = max(warm, lst[-1])
    if rest:
        warm = max(warm, rest[-1][0])
    warm = min(order, warm)
    for n in range(warm):
        acc = u[n] if n < nu else 0
        for e in plus:
            if e > n:
                break
            acc -= r[n - e]
        for e in minus:
            if e > n:
                break
            acc += r[n - e]
        for e, c in rest:
            if e > n:
                break
            acc -= c * r[n - e]
        r[n] = acc if lead == 1 else -acc
    if lead == 1:
        for n in range(warm, order):
            acc = u[n] if n < nu else 0
            for e in plus:
                acc -= r[n - e]
            for e in minus:
                acc += r[n - e]
            for e, c in rest:
                acc -= c * r[n - e]
            r[n] = acc
    else:
        for n in range(warm, order):
            acc = u[n] if n < nu else 0
            for e in plus:
                acc -= r[n - e]
            for e in minus:
                acc += r[n - e]
            for e, c in rest:
                acc -= c * r[n - e]
            r[n] = -acc
    return r


class Series:
    """Truncated power series with exact integer coefficients.

    Immutable after construction; safe to share across threads.
    """

    __slots__ = ("coeffs", "order")

    def __init__(self, coeffs: Iterable[int], order: int | None = None):
        cs = tuple(coeffs)
        if order is not None and order != len(cs):
            raise ValueError(f"order {order} != number of coefficients {len(cs)}")
        object.__setattr__(self, "coeffs", cs)
        object.__setattr__(self, "order", len(cs))

    def __setattr__(self, *a):
        raise AttributeError("Series is immutable")

    # -- constructors -------------------------------------------------

    @classmethod
    def zero(cls, order: int) -> Series:
        return cls([0] * order)

    @classmethod
    def one(cls, order: int) -> Series:
        return cls.from_terms([(0, 1)], order)

    @classmethod
    def from_terms(cls, terms, order: int) -> Series:
        """Series from sparse (exponent, coefficient) pairs.

        The caller asserts every omitted exponent below `order` is zero.
        """
        cs = [0] * order
        for e, c in terms:
            if 0 <= e < order:
                cs[e] += c
            elif e < 0:
                raise ValueError("negative exponent")
        return cls(cs)

    # -- inspection ---------------------------------------------------

    def coeff(self, n: int) -> int:
        """Coefficient of q^n; OutOfRange beyond the truncation order."""
        if not 0 <= n < self.order:
            raise OutOfRange(f"coefficient {n} unknown at order {self.order}")
        return self.coeffs[n]

    def nonzero_terms(self) -> list[tuple[int, int]]:
        return _terms_of(self.coeffs)

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def valuation(self) -> int | None:
        """Exponent of the lowest nonzero coefficient, None if zero."""
        for e, c in enumerate(self.coeffs):
            if c:
                return e
        return None

    def __repr__(self):
        shown = ", ".join(str(c) for c in self.coeffs[:8])
        more = ", ..." if self.order > 8 else ""
        return f"Series([{shown}{more}], order={self.order})"

    # -- ring operations ----------------------------------------------

    def __add__(self, other: Series) -> Series:
        n = min(self.order, other.order)
        a, b = self.coeffs, other.coeffs
        return Series([a[i] + b[i] for i in range(n)])

    def __sub__(self, other: Series) -> Series:
        n = min(self.order, other.order)
        a, b = self.coeffs, other.coeffs
        return Series([a[i] - b[i] for i in range(n)])

    def __neg__(self) -> Series:
        return Series([-c for c in self.coeffs])

    def scale(self, k: int) -> Series:
        return Series([k * c for c in self.coeffs])

    def __mul__(self, other):
        if isinstance(other, int):
            return self.scale(other)
        order = min(self.order, other.order)
        ta = _terms_of(self.coeffs[:order])
        tb = _terms_of(other.coeffs[:order])
        if not ta or not tb:
            return Series.zero(order)
        # pairwise when both operands are sparse, otherwise run the
        # sparser term list against the denser coefficient array
        if len(ta) * len(tb) <= 4 * order:
            return Series(_mul_pairs(ta, tb, order))
        if len(ta) <= len(tb):
            return Series(_mul_dense_terms(other.coeffs, ta, order))
        return Series(_mul_dense_terms(self.coeffs, tb, order))

    __rmul__ = __mul__

    def invert(self) -> Series:
        """Multiplicative inverse; requires constant coefficient +-1."""
        dterms = _terms_of(self.coeffs)
        if not dterms:
            raise NonUnitConstant("cannot invert the zero series")
        return Series(_div_terms([1], dterms, self.order))

    def div(self, other: Series) -> Series:
        """self / other, exact; other must have constant coefficient +-1."""
        order = min(self.order, other.order)
        dterms = _terms_of(other.coeffs[:order])
        if not dterms:
            raise NonUnitConstant("division by the zero series")
        return Series(_div_terms(self.coeffs[:order], dterms, order))

    def __truediv__(self, other: Series) -> Series:
        return self.div(other)

    # -- reindexing ---------------------------------------------------

    def shift(self, k: int) -> Series:
        """Multiply by q^k; the k new low coefficients are known zeros."""
        if k < 0:
            raise ValueError("shift amount must be nonnegative")
        return Series((0,) * k + self.coeffs)

    def substitute_power(self, m: int) -> Series:
        """q -> q^m; order grows to order*m (gaps are known zeros)."""
        if m < 1:
            raise ValueError("substitution power must be >= 1")
        if m == 1:
            return self
        cs = [0] * (self.order * m)
        for e, c in enumerate(self.coeffs):
            cs[e * m] = c
        return Series(cs)

    def substitute_negq(self) -> Series:
        """q -> -q: negate every odd-exponent coefficient."""
        return Series([-c if e & 1 else c for e, c in enumerate(self.coeffs)])

    def dissect(self, m: int, r: int) -> Series:
        """Coefficients on the progression m*n + r, reindexed by n."""
        if not 0 <= r < m:
            raise BadResidue(f"residue {r} not in [0, {m})")
        return Series(self.coeffs[r::m])

    def truncate(self, order: int) -> Series:
        if order > self.order:
            raise OutOfRange(f"cannot extend order {self.order} to {order}")
        return Series(self.coeffs[:order])

    # -- comparison ---------------------------------------------------

    def eq(self, other: Series) -> bool:
        """Exact equality over the common order."""
        return self.first_mismatch(other) is None

    def eq_mod(self, other: Series, m: int) -> bool:
        """Congruence of all shared coefficients mod m (m=0 means exact)."""
        return self.first_mismatch(other, m) is None

    def first_mismatch(self, other: Series, m: int = 0) -> int | None:
        """Lowest exponent where the series differ (mod m), else None."""
        n = min(self.order, other.order)
        a, b = self.coeffs, other.coeffs
        if m == 0:
            for i in range(n):
                if a[i] != b[i]:
                    return i
        else:
            for i in range(n):
                if (a[i] - b[i]) % m:
                    return i
        return None


def eq_mod(a: Series, b: Series, m: int) -> bool:
    return a.eq_mod(b, m)


def coeff_at(a: Series, n: int) -> int:
    return a.coeff(n)


# ---------------------------------------------------------------------
# Exact polynomials (no truncation)
# ---------------------------------------------------------------------


class Poly:
    """Exact integer polynomial; () is the zero polynomial."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[int] = ()):
        cs = list(coeffs)
        while cs and cs[-1] == 0:
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))

    def __setattr__(self, *a):
        raise AttributeError("Poly is immutable")

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def coeff(self, n: int) -> int:
        return self.coeffs[n] if 0 <= n < len(self.coeffs) else 0

    def is_zero(self) -> bool:
        return not self.coeffs

    def __eq__(self, other):
        return isinstance(other, Poly) and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __repr__(self):
        return f"Poly({list(self.coeffs)})"

    def __add__(self, other: Poly) -> Poly:
        n = max(len(self.coeffs), len(other.coeffs))
        return Poly([self.coeff(i) + other.coeff(i) for i in range(n)])

    def __sub__(self, other: Poly) -> Poly:
        n = max(len(self.coeffs), len(other.coeffs))
        return Poly([self.coeff(i) - other.coeff(i) for i in range(n)])

    def __neg__(self) -> Poly:
        return Poly([-c for c in self.coeffs])

    def __mul__(self, other):
        if isinstance(other, int):
            return Poly([other * c for c in self.coeffs])
        if self.is_zero() or other.is_zero():
            return Poly()
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    if b:
                        out[i + j] += a * b
        return Poly(out)

    __rmul__ = __mul__

    def __pow__(self, e: int) -> Poly:
        if e < 0:
            raise ValueError("negative polynomial power")
        result = Poly([1])
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base if e > 1 else base
            e >>= 1
        return result

    def eval_at(self, x: int) -> int:
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc


def poly_mul(a: Poly, b: Poly) -> Poly:
    return a * b


def poly_pow_mod(p: Poly, e: int, m: int) -> Poly:
    """p**e with coefficients reduced into [0, m) at every step."""
    if m < 1:
        raise ValueError("modulus must be >= 1")
    if e < 0:
        raise ValueError("negative polynomial power")

    def red(x: Poly) -> Poly:
        return Poly([c % m for c in x.coeffs])

    result = red(Poly([1]))
    base = red(p)
    while e:
        if e & 1:
            result = red(result * base)
        e >>= 1
        if e:
            base = red(base * base)
    return result


def series_of_rational(num: Poly, den: Poly, order: int) -> Series:
    """Power-series expansion of num/den to `order`; den(0) must be +-1."""
    dterms = _terms_of(den.coeffs)
    if not dterms:
        raise NonUnitConstant("division by the zero polynomial")
    return Series(_div_terms(list(num.coeffs), dterms, order))
