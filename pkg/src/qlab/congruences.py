"""Registry of congruence / vanishing / characterization families, and the
sweep engine that verifies each one exactly over parameter ranges.

Every family is a declarative record: which coefficient sequence it
constrains (a MacMahon-type m_odd family, the prefactor a(n), the
overpartition counts, or one of the c_n(a,t) coefficient families), the
rule t = alpha*J + beta when t is involved, the arithmetic progression of
arguments, the modulus, and optional side conditions.  The engine sweeps
(J, N) ranges, reports the first counterexample when a claim fails, and
never tolerates approximation: all checks are exact integer congruences.

Sequence evaluation routes:

* m_odd families go through the closed forms (prefactor array + c_n
  values), except the a=0 support-pattern families, which would be
  trivially true by construction of the closed form; those run against the
  odd-parts dynamic program instead.
* prefactor / overpartition families read one shared eta-quotient
  expansion.
* coefficient families evaluate c_n(a, t) directly.
"""

from __future__ import annotations

import os
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from math import isqrt
from threading import Lock

from .arith import nu_int
from .macmahon import coeff_c, direct_utilde, modd_explicit_batch
from .special import overpartition_gf, prefactor_a

DEFAULT_BUDGET = 20000
FULL_BUDGET = 150000
OVC_MIN_BUDGET = 50000
DP_WINDOW = 2000

# expected-outcome kinds
CONG_ZERO = "CONG_ZERO"
EXACT_ZERO = "EXACT_ZERO"
PARITY_A2N = "PARITY_A2N"
PARITY_M2_T1 = "PARITY_M2_T1"
VALUATION_TABLE = "VALUATION_TABLE"
EQUALS_MODD_M2 = "EQUALS_MODD_M2"


class BudgetTooSmall(ValueError):
    """No nontrivial coefficient falls inside the requested range."""


class UnknownFamily(KeyError):
    pass


@dataclass(frozen=True)
class CongruenceFamily:
    """One verifiable claim about a coefficient sequence."""

    id: str
    sequence: str                 # MODD(a) | PREFACTOR_A | OVERPARTITION | COEFF(a)
    expected: str                 # one of the kind constants above
    modulus: int = 0              # >= 2 for CONG_ZERO; 0 for exact checks
    t_rule: tuple[int, int] | None = None    # t = alpha*J + beta
    j_min: int = 0
    arg_mod: int = 1
    arg_residues: tuple[int, ...] = (0,)
    n_excluded: tuple[int, tuple[int, ...]] | None = None  # COEFF side condition
    val_table: tuple[tuple[int, int], ...] = ()            # (residue, min nu_2)
    dp_backed: bool = False
    easy3_cross: bool = False     # also assert m_odd(1) == m_odd(-2) mod 3
    note: str = ""

    def t_of(self, j: int) -> int:
        alpha, beta = self.t_rule
        return alpha * j + beta

    def t_rule_str(self) -> str | None:
        if self.t_rule is None:
            return None
        alpha, beta = self.t_rule
        if alpha == 0:
            return f"t={beta}"
        head = "t=J" if alpha == 1 else f"t={alpha}J"
        if beta == 0:
            return head
        return f"{head}{beta:+d}"

    def arg_rule_str(self) -> str:
        if self.expected == PARITY_A2N:
            return "2n, all n"
        if self.arg_mod == 1:
            return "all n"
        rs = ",".join(str(r) for r in self.arg_residues)
        rs = rs if len(self.arg_residues) == 1 else "{" + rs + "}"
        return f"{self.arg_mod}N+{rs}"


@dataclass
class VerifyReport:
    """Outcome of sweeping one family; fail implies a counterexample."""

    family_id: str
    sequence: str
    t_rule: str | None
    arg_rule: str
    modulus: int
    ranges: dict
    status: str                   # "pass" | "fail"
    counterexample: dict | None
    millis: float
    checked: int = 0

    def __post_init__(self):
        assert self.status != "fail" or self.counterexample is not None

    @property
    def passed(self) -> bool:
        return self.status == "pass"

    def to_json(self) -> dict:
        return {
            "id": self.family_id,
            "sequence": self.sequence,
            "t_rule": self.t_rule,
            "arg_rule": self.arg_rule,
            "modulus": self.modulus,
            "ranges": self.ranges,
            "status": self.status,
            "counterexample": self.counterexample,
            "millis": round(self.millis, 1),
        }


def _quadratic_nonresidues(p: int) -> tuple[int, ...]:
    squares = {(r * r) % p for r in range(p)}
    return tuple(r for r in range(1, p) if r not in squares)


def _build_registry() -> list[CongruenceFamily]:
    fams: list[CongruenceFamily] = []
    add = fams.append

    # ----- prefactor a(n) = [q^n] f1 f6/(f2^2 f3) ---------------------
    add(CongruenceFamily(
        "a2n-parity", "PREFACTOR_A", PARITY_A2N, modulus=2, arg_mod=2,
        note="a(2n) odd exactly when n=0 or n is a square not divisible by 3"))
    for label, mod_, m, r in (
        ("a6n4-mod2", 2, 6, 4), ("a6n6-mod2", 2, 6, 6),
        ("a8n4-mod2", 2, 8, 4), ("a8n6-mod2", 2, 8, 6),
        ("a24n13-mod2", 2, 24, 13),
        ("a12n6-mod4", 4, 12, 6), ("a16n6-mod4", 4, 16, 6),
        ("a24n16-mod4", 4, 24, 16), ("a24n22-mod4", 4, 24, 22),
        ("a12n9-mod8", 8, 12, 9), ("a24n19-mod8", 8, 24, 19),
        ("a32n28-mod8", 8, 32, 28), ("a32n20-mod4", 4, 32, 20),
    ):
        add(CongruenceFamily(label, "PREFACTOR_A", CONG_ZERO, modulus=mod_,
                             arg_mod=m, arg_residues=(r,)))
    for p in (5, 7, 11):
        residues = tuple(2 * r for r in _quadratic_nonresidues(p))
        add(CongruenceFamily(
            f"a2pn-mod2-p{p}", "PREFACTOR_A", CONG_ZERO, modulus=2,
            arg_mod=2 * p, arg_residues=residues,
            note=f"arguments 2(pn+r), r a quadratic nonresidue mod {p}"))
    add(CongruenceFamily(
        "pre1-24", "PREFACTOR_A", VALUATION_TABLE, arg_mod=24,
        val_table=((0, 1), (4, 1), (10, 1), (12, 1), (13, 1), (14, 1), (20, 1),
                   (6, 2), (16, 2), (18, 2), (22, 2), (9, 3), (19, 3), (21, 3))))
    add(CongruenceFamily(
        "pre1-32", "PREFACTOR_A", VALUATION_TABLE, arg_mod=32,
        val_table=((4, 1), (10, 1), (12, 1), (14, 1), (16, 1), (24, 1), (26, 1),
                   (30, 1), (6, 2), (20, 2), (22, 2), (28, 3))))

    # ----- overpartition counts --------------------------------------
    add(CongruenceFamily(
        "ovc8", "OVERPARTITION", VALUATION_TABLE, arg_mod=8,
        val_table=((0, 1), (1, 1), (4, 1), (2, 2), (3, 3), (5, 3), (6, 3), (7, 6))))
    add(CongruenceFamily(
        "ovc9", "OVERPARTITION", VALUATION_TABLE, arg_mod=9,
        val_table=((0, 1), (1, 1), (4, 1), (7, 1), (2, 2), (5, 2), (8, 2), (3, 3), (6, 3))))
    add(CongruenceFamily(
        "ovc-16n10-mod8", "OVERPARTITION", CONG_ZERO, modulus=8,
        arg_mod=16, arg_residues=(10,)))
    add(CongruenceFamily(
        "ovc3-27n18-mod3", "OVERPARTITION", CONG_ZERO, modulus=3,
        arg_mod=27, arg_residues=(18,)))

    # ----- coefficient families c_n(a, t) -----------------------------
    for s in range(1, 6):
        add(CongruenceFamily(
            f"cm2-1-s{s}", "COEFF(-2)", CONG_ZERO, modulus=2 ** (s + 1),
            t_rule=(2 ** s, -1), j_min=1, n_excluded=(2, (1,)),
            note="even n only"))
    add(CongruenceFamily("cm2-2", "COEFF(-2)", CONG_ZERO, modulus=3,
                         t_rule=(27, 13), j_min=0, n_excluded=(27, (13, 14))))
    add(CongruenceFamily("cm2-3", "COEFF(-2)", CONG_ZERO, modulus=3,
                         t_rule=(27, -1), j_min=1, n_excluded=(27, (1, 26))))
    add(CongruenceFamily("c0-1a", "COEFF(0)", CONG_ZERO, modulus=4,
                         t_rule=(4, -1), j_min=1, n_excluded=(4, (0, 1))))
    add(CongruenceFamily("c0-1b", "COEFF(0)", CONG_ZERO, modulus=8,
                         t_rule=(8, -1), j_min=1, n_excluded=(4, (0, 1))))
    add(CongruenceFamily("c0-2a", "COEFF(0)", CONG_ZERO, modulus=16,
                         t_rule=(32, -1), j_min=1, n_excluded=(8, (0, 1))))
    add(CongruenceFamily("c0-2b", "COEFF(0)", CONG_ZERO, modulus=32,
                         t_rule=(64, -1), j_min=1, n_excluded=(8, (0, 1))))
    add(CongruenceFamily("c0-3", "COEFF(0)", CONG_ZERO, modulus=3,
                         t_rule=(27, 12), j_min=0, n_excluded=(27, (13, 15))))
    # exceptional set {0,1} mod 27: the n(n-1) support is symmetric under
    # n -> 1-n, and the leading coefficient sits at n = t+1 = 27J
    add(CongruenceFamily("c0-4", "COEFF(0)", CONG_ZERO, modulus=3,
                         t_rule=(27, -1), j_min=1, n_excluded=(27, (0, 1))))
    add(CongruenceFamily("c1-1", "COEFF(1)", CONG_ZERO, modulus=2,
                         t_rule=(2, -1), j_min=1, n_excluded=(2, (1,))))
    for s in range(2, 6):
        half = 2 ** (s - 1)
        add(CongruenceFamily(
            f"c1-2-s{s}", "COEFF(1)", CONG_ZERO, modulus=4,
            t_rule=(2 ** s, -1), j_min=1,
            n_excluded=(half, (1 % half, (half - 1) % half))))
    # halving (1+z)^(64J) mod 8 stops at (1+z^16)^(4J), so the mod-8
    # support of c_n(1,64J-1) is n = +-1 mod 16 (and n^2 = 1 mod 32 still)
    add(CongruenceFamily("c1-3", "COEFF(1)", CONG_ZERO, modulus=8,
                         t_rule=(64, -1), j_min=1, n_excluded=(16, (1, 15))))

    # ----- m_odd(-2, t; .) --------------------------------------------
    add(CongruenceFamily(
        "m2-parity-t1", "MODD(-2)", PARITY_M2_T1, modulus=2, t_rule=(0, 1),
        note="m_odd(-2,1;N) odd exactly when N is an odd square"))
    add(CongruenceFamily("m2-6n5-mod6", "MODD(-2)", CONG_ZERO, modulus=6,
                         t_rule=(0, 1), arg_mod=6, arg_residues=(5,)))
    add(CongruenceFamily("vm2A-1", "MODD(-2)", CONG_ZERO, modulus=4,
                         t_rule=(1, 1), arg_mod=8, arg_residues=(3, 6)))
    add(CongruenceFamily("vm2A-2", "MODD(-2)", CONG_ZERO, modulus=4,
                         t_rule=(1, 1), arg_mod=9, arg_residues=(3, 6)))
    add(CongruenceFamily("vm2A-3", "MODD(-2)", CONG_ZERO, modulus=8,
                         t_rule=(1, 1), arg_mod=8, arg_residues=(7,)))
    add(CongruenceFamily("vm2-1", "MODD(-2)", CONG_ZERO, modulus=4,
                         t_rule=(2, 1), arg_mod=8, arg_residues=(0, 4)))
    add(CongruenceFamily("vm2-1b", "MODD(-2)", CONG_ZERO, modulus=4,
                         t_rule=(2, 0), arg_mod=8, arg_residues=(2,)))
    add(CongruenceFamily("vm2-2", "MODD(-2)", CONG_ZERO, modulus=8,
                         t_rule=(2, 1), arg_mod=8, arg_residues=(6,)))
    add(CongruenceFamily("vm2-2b", "MODD(-2)", CONG_ZERO, modulus=8,
                         t_rule=(2, 0), arg_mod=8, arg_residues=(3,)))
    add(CongruenceFamily("vm2-2c", "MODD(-2)", CONG_ZERO, modulus=8,
                         t_rule=(4, 3), arg_mod=8, arg_residues=(0, 4)))
    add(CongruenceFamily("vm2-2d", "MODD(-2)", CONG_ZERO, modulus=8,
                         t_rule=(4, 2), arg_mod=16, arg_residues=(14,)))
    add(CongruenceFamily("vm2-3", "MODD(-2)", CONG_ZERO, modulus=16,
                         t_rule=(4, 0), arg_mod=8, arg_residues=(7,)))
    add(CongruenceFamily("vm2-3a", "MODD(-2)", CONG_ZERO, modulus=16,
                         t_rule=(8, 7), arg_mod=8, arg_residues=(0,)))
    add(CongruenceFamily("vm2-4", "MODD(-2)", CONG_ZERO, modulus=32,
                         t_rule=(16, 15), arg_mod=8, arg_residues=(0,)))
    add(CongruenceFamily("vm2-5", "MODD(-2)", CONG_ZERO, modulus=64,
                         t_rule=(32, 31), arg_mod=8, arg_residues=(0,)))
    add(CongruenceFamily("vm2-10", "MODD(-2)", CONG_ZERO, modulus=3,
                         t_rule=(27, 13), arg_mod=27, arg_residues=(25,)))
    add(CongruenceFamily("vm2-11", "MODD(-2)", CONG_ZERO, modulus=3,
                         t_rule=(27, 26), arg_mod=27, arg_residues=(19,)))

    # ----- m_odd(0, t; .) ---------------------------------------------
    add(CongruenceFamily(
        "m0-even-vanish", "MODD(0)", EXACT_ZERO, t_rule=(2, 0),
        arg_mod=4, arg_residues=(1, 2, 3), dp_backed=True,
        note="even t: support lies on 4N"))
    add(CongruenceFamily(
        "m0-even-reinterp", "MODD(0)", EQUALS_MODD_M2, t_rule=(2, 0),
        arg_mod=4, arg_residues=(0,), dp_backed=True,
        note="m_odd(0,2t;4N) = m_odd(-2,t;N)"))
    add(CongruenceFamily(
        "m0-odd-vanish", "MODD(0)", EXACT_ZERO, t_rule=(2, 1),
        arg_mod=4, arg_residues=(0, 2, 3), dp_backed=True,
        note="odd t: support lies on 4N+1"))
    add(CongruenceFamily("m0-36n-mod4", "MODD(0)", CONG_ZERO, modulus=4,
                         t_rule=(2, 1), arg_mod=36, arg_residues=(21, 33)))
    add(CongruenceFamily("v0odd-1", "MODD(0)", CONG_ZERO, modulus=4,
                         t_rule=(8, 7), arg_mod=16, arg_residues=(9, 13)))
    add(CongruenceFamily("v0odd-2", "MODD(0)", CONG_ZERO, modulus=8,
                         t_rule=(16, 15), arg_mod=16, arg_residues=(13,)))
    add(CongruenceFamily("v0odd-3", "MODD(0)", CONG_ZERO, modulus=16,
                         t_rule=(64, 63), arg_mod=32, arg_residues=(29,)))
    add(CongruenceFamily("v0odd-3b", "MODD(0)", CONG_ZERO, modulus=32,
                         t_rule=(128, 127), arg_mod=32, arg_residues=(29,)))
    add(CongruenceFamily("v0odd-4", "MODD(0)", CONG_ZERO, modulus=3,
                         t_rule=(54, 25), arg_mod=108, arg_residues=(49,)))
    add(CongruenceFamily("v0odd-5", "MODD(0)", CONG_ZERO, modulus=3,
                         t_rule=(54, 53), arg_mod=108, arg_residues=(73,)))
    add(CongruenceFamily("m0-t1-vanish", "MODD(0)", EXACT_ZERO, t_rule=(0, 1),
                         arg_mod=36, arg_residues=(21, 33),
                         note="t=1: arguments 4(9n+5)+1 and 4(9n+8)+1"))

    # ----- m_odd(1, t; .) ---------------------------------------------
    add(CongruenceFamily("v1-0", "MODD(1)", CONG_ZERO, modulus=2,
                         t_rule=(1, 0), arg_mod=24, arg_residues=(22,)))
    add(CongruenceFamily("v1-0b", "MODD(1)", CONG_ZERO, modulus=2,
                         t_rule=(2, 1), arg_mod=12, arg_residues=(7,)))
    add(CongruenceFamily("v1-0c", "MODD(1)", CONG_ZERO, modulus=4,
                         t_rule=(4, 3), arg_mod=24, arg_residues=(7,)))
    add(CongruenceFamily("v1-1", "MODD(1)", CONG_ZERO, modulus=2,
                         t_rule=(2, 1), arg_mod=8, arg_residues=(5, 7)))
    add(CongruenceFamily("v1-2", "MODD(1)", CONG_ZERO, modulus=4,
                         t_rule=(16, 15), arg_mod=16, arg_residues=(7,)))
    add(CongruenceFamily("v1-2b", "MODD(1)", CONG_ZERO, modulus=4,
                         t_rule=(32, 31), arg_mod=32, arg_residues=(21, 29)))
    add(CongruenceFamily("v1-2c", "MODD(1)", CONG_ZERO, modulus=8,
                         t_rule=(64, 63), arg_mod=32, arg_residues=(29,)))
    add(CongruenceFamily("v1-mod3-13", "MODD(1)", CONG_ZERO, modulus=3,
                         t_rule=(27, 13), arg_mod=27, arg_residues=(25,),
                         easy3_cross=True))
    add(CongruenceFamily("v1-mod3-26", "MODD(1)", CONG_ZERO, modulus=3,
                         t_rule=(27, 26), arg_mod=27, arg_residues=(19,),
                         easy3_cross=True))
    add(CongruenceFamily("m1-t1-6n5", "MODD(1)", EXACT_ZERO, t_rule=(0, 1),
                         arg_mod=6, arg_residues=(5,)))

    ids = [f.id for f in fams]
    assert len(set(ids)) == len(ids), "duplicate family ids"
    return fams


_REGISTRY = _build_registry()
_BY_ID = {f.id: f for f in _REGISTRY}


def registry() -> list[CongruenceFamily]:
    """The complete, duplicate-free family list."""
    return list(_REGISTRY)


def lookup(family_id: str) -> CongruenceFamily:
    try:
        return _BY_ID[family_id]
    except KeyError:
        raise UnknownFamily(family_id) from None


# ---------------------------------------------------------------------
# Shared computation cache
# ---------------------------------------------------------------------


class SweepCache:
    """Prefactor expansions and DP runs, computed once and shared read-only."""

    _BUILDERS = {
        "overpartition": overpartition_gf,
        "prefactor_a": prefactor_a,
    }

    def __init__(self):
        self._series: dict[str, tuple] = {}
        self._dp: dict[tuple, list] = {}
        self._lock = Lock()

    def coeffs(self, kind: str, min_len: int) -> tuple:
        with self._lock:
            have = self._series.get(kind)
            if have is not None and len(have) >= min_len:
                return have
            built = self._BUILDERS[kind](min_len).coeffs
            self._series[kind] = built
            return built

    def dp_utilde(self, a: int, t_max: int, order: int) -> list:
        key = (a, t_max, order)
        with self._lock:
            if key not in self._dp:
                self._dp[key] = direct_utilde(a, t_max, order)
            return self._dp[key]


def _modd_pref_kind(a: int) -> str:
    return "prefactor_a" if a == 1 else "overpartition"


def _is_square(n: int) -> bool:
    r = isqrt(n)
    return r * r == n


# ---------------------------------------------------------------------
# Sweeps
# ---------------------------------------------------------------------


def _args_of(fam: CongruenceFamily, bound: int) -> list[int]:
    out = []
    for r in fam.arg_residues:
        out.extend(range(r, bound + 1, fam.arg_mod))
    out.sort()
    return out


def _sweep_modd(fam, j_values, n_budget, cache):
    a = int(fam.sequence[5:-1])
    checked = 0
    max_budget = 0
    for j in j_values:
        t = fam.t_of(j)
        bound = max(n_budget, t * t + 2000)
        max_budget = max(max_budget, bound)
        args = _args_of(fam, bound)
        if not args:
            raise BudgetTooSmall(f"{fam.id}: no arguments below {bound}")
        pref = cache.coeffs(_modd_pref_kind(a), bound + 1)
        values = modd_explicit_batch(a, t, args, pref)
        cross = None
        if fam.easy3_cross:
            pref2 = cache.coeffs("overpartition", bound + 1)
            cross = modd_explicit_batch(-2, t, args, pref2)
        for i, (x, v) in enumerate(zip(args, values)):
            checked += 1
            if fam.expected == CONG_ZERO:
                if v % fam.modulus:
                    return checked, max_budget, _cex(j, x, v, fam.modulus)
            elif fam.expected == EXACT_ZERO:
                if v != 0:
                    return checked, max_budget, _cex(j, x, v, 0)
            elif fam.expected == PARITY_M2_T1:
                want = 1 if (x % 2 == 1 and _is_square(x)) else 0
                if v % 2 != want:
                    return checked, max_budget, _cex(j, x, v, 2, expected=want)
            else:
                raise ValueError(f"{fam.id}: bad expected kind {fam.expected}")
            if cross is not None and (v - cross[i]) % 3:
                cex = _cex(j, x, v, 3, cross_easy3=str(cross[i]))
                return checked, max_budget, cex
    return checked, max_budget, None


def _sweep_modd0_dp(fam, j_values, cache):
    """a=0 support-pattern families against the dynamic program.

    The closed form for a=0 has these patterns built in, so the DP is the
    only non-circular evaluator; its quadratic cost caps the sweep at
    t^2 + DP_WINDOW.
    """
    checked = 0
    max_order = 0
    for j in j_values:
        t = fam.t_of(j)
        order = t * t + DP_WINDOW + 1
        max_order = max(max_order, order)
        series = cache.dp_utilde(0, t, order)[t]
        if fam.expected == EQUALS_MODD_M2:
            n_top = (order - 1) // 4
            inner = list(range(n_top + 1))
            pref = cache.coeffs("overpartition", n_top + 1)
            rhs = modd_explicit_batch(-2, t // 2, inner, pref)
            for n in inner:
                checked += 1
                lhs = series.coeff(4 * n)
                if lhs != rhs[n]:
                    return checked, max_order, _cex(j, 4 * n, lhs - rhs[n], 0)
        else:
            for x in _args_of(fam, order - 1):
                checked += 1
                v = series.coeff(x)
                if v != 0:
                    return checked, max_order, _cex(j, x, v, 0)
    return checked, max_order, None


def _sweep_coeff(fam, j_values, n_budget, cache):
    a = int(fam.sequence[6:-1])
    n_top = min(n_budget, 1500)
    mod_, excluded = fam.n_excluded if fam.n_excluded else (1, ())
    checked = 0
    for j in j_values:
        t = fam.t_of(j)
        ns = [n for n in range(1, n_top + 1) if n % mod_ not in excluded]
        if not ns:
            raise BudgetTooSmall(f"{fam.id}: no admissible n below {n_top}")
        for n in ns:
            checked += 1
            v = coeff_c(a, t, n)
            if v % fam.modulus:
                return checked, n_top, _cex(j, n, v, fam.modulus)
    return checked, n_top, None


def _sweep_sequence(fam, n_budget, cache):
    kind = "prefactor_a" if fam.sequence == "PREFACTOR_A" else "overpartition"
    coeffs = cache.coeffs(kind, n_budget + 1)
    checked = 0
    if fam.expected == CONG_ZERO:
        args = _args_of(fam, n_budget)
        if not args:
            raise BudgetTooSmall(f"{fam.id}: no arguments below {n_budget}")
        for x in args:
            checked += 1
            if coeffs[x] % fam.modulus:
                return checked, n_budget, _cex(None, x, coeffs[x], fam.modulus)
    elif fam.expected == VALUATION_TABLE:
        for r, bound in fam.val_table:
            for x in range(r if r > 0 else fam.arg_mod, n_budget + 1, fam.arg_mod):
                checked += 1
                v = coeffs[x]
                if v != 0 and nu_int(2, v) < bound:
                    return checked, n_budget, _cex(
                        None, x, v, 1 << bound, required_nu2=bound)
    elif fam.expected == PARITY_A2N:
        for n in range(n_budget // 2 + 1):
            checked += 1
            want = 1 if (n == 0 or (_is_square(n) and n % 3 != 0)) else 0
            if coeffs[2 * n] % 2 != want:
                return checked, n_budget, _cex(None, 2 * n, coeffs[2 * n], 2, expected=want)
    else:
        raise ValueError(f"{fam.id}: bad expected kind {fam.expected}")
    if checked == 0:
        raise BudgetTooSmall(f"{fam.id}: nothing to check below {n_budget}")
    return checked, n_budget, None


def _cex(j, n, value, modulus, **extra):
    out = {"J": j, "N": n, "value": str(value), "modulus": modulus}
    out.update(extra)
    return out


# ---------------------------------------------------------------------
# Entry points
# ---------------------------------------------------------------------


def verify_family(family, j_values=None, n_budget: int = DEFAULT_BUDGET,
                  cache: SweepCache | None = None) -> VerifyReport:
    """Sweep one family (by id or record) and report pass/fail.

    For m_odd families with t*t above the budget, the bound is extended to
    t^2 + 2000 so the sweep always sees coefficients beyond the series'
    leading exponent.  Raises BudgetTooSmall if no argument qualifies.
    """
    fam = lookup(family) if isinstance(family, str) else family
    if cache is None:
        cache = SweepCache()
    if j_values is None:
        j_values = (0, 1) if fam.j_min == 0 else (1, 2)
    j_values = tuple(j_values)
    if fam.t_rule is not None and any(j < fam.j_min for j in j_values):
        raise ValueError(f"{fam.id}: J values below the theorem's J >= {fam.j_min}")
    start = time.perf_counter()
    if fam.sequence.startswith("MODD"):
        if fam.dp_backed:
            checked, bound, cex = _sweep_modd0_dp(fam, j_values, cache)
        else:
            checked, bound, cex = _sweep_modd(fam, j_values, n_budget, cache)
        ranges = {"J": list(j_values), "max_arg": bound}
    elif fam.sequence.startswith("COEFF"):
        checked, bound, cex = _sweep_coeff(fam, j_values, n_budget, cache)
        ranges = {"J": list(j_values), "max_n": bound}
    else:
        checked, bound, cex = _sweep_sequence(fam, n_budget, cache)
        ranges = {"max_arg": bound}
    ranges["checked"] = checked
    millis = 1000 * (time.perf_counter() - start)
    return VerifyReport(
        family_id=fam.id,
        sequence=fam.sequence,
        t_rule=fam.t_rule_str(),
        arg_rule=fam.arg_rule_str(),
        modulus=fam.modulus,
        ranges=ranges,
        status="pass" if cex is None else "fail",
        counterexample=cex,
        millis=millis,
        checked=checked,
    )


def _budget_for(fam: CongruenceFamily, profile: str) -> int:
    if fam.sequence == "OVERPARTITION":
        return OVC_MIN_BUDGET
    if profile == "full" and fam.id in ("v1-2b", "v1-2c"):
        return FULL_BUDGET
    return DEFAULT_BUDGET


def verify_all(profile: str = "quick", ids=None, threads: int | None = None) -> list[VerifyReport]:
    """Sweep every registered family (or the selected ids).

    quick: arguments to 20000 (50000 for the overpartition tables);
    full:  additionally pushes the deep a=1 families to 150000.
    Families run against one shared cache; QLAB_THREADS (or `threads`)
    caps concurrent family checks.
    """
    if profile not in ("quick", "full"):
        raise ValueError(f"unknown profile {profile!r}")
    fams = registry()
    if ids is not None:
        ids = list(ids)
        fams = [lookup(i) for i in ids]
    if not fams:
        raise ValueError("no families selected")
    cache = SweepCache()
    # warm the shared prefactor arrays at the largest order any family needs
    need: dict[str, int] = {}
    for fam in fams:
        budget = _budget_for(fam, profile)
        if fam.sequence.startswith("MODD") and not fam.dp_backed:
            j_top = 1 if fam.j_min == 0 else 2
            t = fam.t_of(j_top)
            bound = max(budget, t * t + 2000) + 1
            kind = _modd_pref_kind(int(fam.sequence[5:-1]))
            need[kind] = max(need.get(kind, 0), bound)
            if fam.easy3_cross:
                need["overpartition"] = max(need.get("overpartition", 0), bound)
        elif fam.sequence == "PREFACTOR_A":
            need["prefactor_a"] = max(need.get("prefactor_a", 0), budget + 1)
        elif fam.sequence == "OVERPARTITION":
            need["overpartition"] = max(need.get("overpartition", 0), budget + 1)
    for kind, order in need.items():
        cache.coeffs(kind, order)

    env_cap = os.environ.get("QLAB_THREADS")
    if threads is None:
        threads = int(env_cap) if env_cap else 1
    elif env_cap:
        threads = min(threads, int(env_cap))
    threads = max(1, min(threads, len(fams)))

    def run(fam):
        return verify_family(fam, n_budget=_budget_for(fam, profile), cache=cache)

    if threads == 1:
        return [run(fam) for fam in fams]
    with ThreadPoolExecutor(max_workers=threads) as pool:
        return list(pool.map(run, fams))
