"""Constructors for the named series: eta factors f_r, eta quotients,
theta functions, and the Borwein cubic pair.

Everything here returns an exact `Series`.  The eta factors are sparse
(pentagonal-number support), and 1/f_r is computed by long division against
that sparse support, so quotients stay cheap at large truncation orders.
"""

from __future__ import annotations

import math
from typing import Sequence

from .series import Series, _div_terms

EtaFactors = Sequence[tuple[int, int]]


def pentagonal_terms(scale: int, order: int) -> list[tuple[int, int]]:
    """Nonzero terms of f_scale = prod_k (1 - q^(scale*k)) below `order`.

    Euler: the exponents are scale * k(3k-1)/2 over all integers k, with
    sign (-1)^k.
    """
    terms = [(0, 1)]
    k = 1
    while True:
        sign = -1 if k & 1 else 1
        e1 = scale * (k * (3 * k - 1) // 2)
        if e1 >= order:
            break
        terms.append((e1, sign))
        e2 = scale * (k * (3 * k + 1) // 2)
        if e2 < order:
            terms.append((e2, sign))
        k += 1
    terms.sort()
    return terms


def eta(scale: int, order: int) -> Series:
    """f_scale as a Series of the given order."""
    if scale < 1:
        raise ValueError("eta scale must be >= 1")
    return Series.from_terms(pentagonal_terms(scale, order), order)


def eta_inv(scale: int, order: int) -> Series:
    """1/f_scale via the pentagonal recurrence (sparse long division)."""
    if scale < 1:
        raise ValueError("eta scale must be >= 1")
    return Series(_div_terms([1], pentagonal_terms(scale, order), order))


def eta_quotient(factors: EtaFactors, order: int) -> Series:
    """Product of f_r^e over (r, e) pairs, exact to `order`.

    Scales must be distinct and exponents nonzero.  Positive powers are
    applied as sparse multiplications, negative powers as sparse divisions,
    one pass per unit of exponent.
    """
    seen = set()
    for r, e in factors:
        if r < 1:
            raise ValueError(f"eta scale {r} must be >= 1")
        if e == 0:
            raise ValueError(f"eta exponent for scale {r} must be nonzero")
        if r in seen:
            raise ValueError(f"duplicate eta scale {r}")
        seen.add(r)
    result = Series.one(order)
    for r, e in factors:
        if e > 0:
            f = eta(r, order)
            for _ in range(e):
                result = result * f
    for r, e in factors:
        if e < 0:
            terms = pentagonal_terms(r, order)
            for _ in range(-e):
                result = Series(_div_terms(result.coeffs, terms, order))
    return result


def overpartition_gf(order: int) -> Series:
    """f2/f1^2, the overpartition counting function."""
    return eta_quotient([(2, 1), (1, -2)], order)


def prefactor_a(order: int) -> Series:
    """f1*f6/(f2^2*f3), the multiplier attached to the a=1 closed form."""
    return eta_quotient([(1, 1), (6, 1), (2, -2), (3, -1)], order)


def phi(order: int, sign: int = 1) -> Series:
    """phi(q) = 1 + 2*sum q^(k^2), or phi(-q) when sign=-1."""
    if sign not in (1, -1):
        raise ValueError("sign must be +1 or -1")
    terms = [(0, 1)]
    k = 1
    while k * k < order:
        terms.append((k * k, 2 * (sign ** k)))
        k += 1
    return Series.from_terms(terms, order)


def psi(order: int) -> Series:
    """psi(q) = sum q^(k(k+1)/2) over k >= 0."""
    terms = []
    k = 0
    while k * (k + 1) // 2 < order:
        terms.append((k * (k + 1) // 2, 1))
        k += 1
    return Series.from_terms(terms, order)


def pgen(order: int) -> Series:
    """P(q): coefficient 1 on every generalized pentagonal exponent."""
    terms = [(e, 1) for e, _ in pentagonal_terms(1, order)]
    return Series.from_terms(terms, order)


def borwein_b(order: int) -> Series:
    """Borwein b(q) = f1^3/f3."""
    return eta_quotient([(1, 3), (3, -1)], order)


def borwein_a(order: int) -> Series:
    """Borwein a(q) = sum over the integer lattice of q^(m^2+mn+n^2).

    The quadratic form satisfies m^2+mn+n^2 >= (m^2+n^2)/2, so restricting
    to |m|, |n| <= ceil(2*sqrt(order)) loses nothing below the order.
    """
    bound = math.isqrt(4 * order) + 1
    cs = [0] * order
    for m in range(-bound, bound + 1):
        mm = m * m
        for n in range(-bound, bound + 1):
            e = mm + m * n + n * n
            if e < order:
                cs[e] += 1
    return Series(cs)
