"""Asymptotic initial degrees and the bounds relating them.

Both Waldschmidt constants are exact LP optima: the Waldschmidt constant over
the symbolic polyhedron, the naive one over the irreducible polyhedron. Powers
of the maximal ideal get their own closed formula, computed two independent
ways.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from math import comb

from .core import MonomialIdeal, alpha, power, require_proper, ideal_contains
from .decomp import (
    IrreducibleComponent,
    IrreducibleDecomposition,
    big_height,
    family_power,
)
from .errors import SizeLimitError
from .poly import ip_hrep, min_over_hrep, min_over_sp, sp_spec


def waldschmidt(I: MonomialIdeal) -> Fraction:
    """Minimum of y_1 + ... + y_n over the symbolic polyhedron."""
    require_proper(I)
    return min_over_sp(sp_spec(I), [1] * I.nvars).value


def naive_waldschmidt(I: MonomialIdeal) -> Fraction:
    """Minimum of y_1 + ... + y_n over the irreducible polyhedron."""
    require_proper(I)
    return min_over_hrep(ip_hrep(I), [1] * I.nvars).value


def alpha_sequence(I: MonomialIdeal, family: str, M: int) -> list[Fraction]:
    """alpha(I_m)/m for m = 1..M in the chosen power family."""
    if M < 1:
        raise ValueError("M must be >= 1")
    require_proper(I)
    out = []
    for m in range(1, M + 1):
        try:
            Im = family_power(I, family, m)
        except SizeLimitError as exc:
            raise SizeLimitError(exc.operation, exc.size, exc.cap, m=m) from None
        out.append(Fraction(alpha(Im), m))
    return out


def compositions(n: int, s: int) -> list[tuple[int, ...]]:
    """All n-tuples of positive integers summing to s, in lex order."""
    if n < 1:
        raise ValueError("n must be positive")
    if s < n:
        return []
    out = []
    # stars and bars: choose n-1 cut points among s-1 gaps
    for cuts in combinations(range(1, s), n - 1):
        bounds = (0,) + cuts + (s,)
        out.append(tuple(bounds[i + 1] - bounds[i] for i in range(n)))
    return out


def max_ideal_power_decomposition(n: int, d: int) -> IrreducibleDecomposition:
    """The decomposition of m_n^d into (x_1^a_1, ..., x_n^a_n), sum a_i = d+n-1."""
    if n < 1 or d < 1:
        raise ValueError("n and d must be positive")
    comps = [
        IrreducibleComponent.from_mapping(n, dict(enumerate(a)))
        for a in compositions(n, d + n - 1)
    ]
    return IrreducibleDecomposition(n, tuple(sorted(comps, key=IrreducibleComponent.sort_key)))


@dataclass(frozen=True)
class BalancedPartition:
    """k parts equal to ``a`` and n-k parts equal to ``b`` = a-1, summing to n+d-1."""

    n: int
    d: int
    k: int
    a: int
    b: int

    @classmethod
    def of(cls, n: int, d: int) -> BalancedPartition:
        if n < 1 or d < 1:
            raise ValueError("n and d must be positive")
        k = (d - 1) % n
        total = n + d - 1
        a, ra = divmod(total + (n - k), n)
        b, rb = divmod(total - k, n)
        assert ra == 0 and rb == 0
        return cls(n, d, k, a, b)

    def parts(self) -> tuple[int, ...]:
        return (self.a,) * self.k + (self.b,) * (self.n - self.k)


def naive_waldschmidt_formula(n: int, d: int) -> Fraction:
    """Closed fraction for the naive Waldschmidt constant of m_n^d."""
    k = (d - 1) % n
    return Fraction((n + d - 1 - k) * (2 * n + d - 1 - k), n * (2 * n + d - 1 - 2 * k))


def naive_waldschmidt_beta(n: int, d: int) -> Fraction:
    """The same value as C(n,k) / (C(n-1,k-1)/a + C(n-1,k)/b)."""
    bp = BalancedPartition.of(n, d)
    k = bp.k
    lower = comb(n - 1, k - 1) if k >= 1 else 0
    return Fraction(comb(n, k)) / (Fraction(lower, bp.a) + Fraction(comb(n - 1, k), bp.b))


def naive_waldschmidt_max_ideal_power(n: int, d: int) -> Fraction:
    if n < 1 or d < 1:
        raise ValueError("n and d must be positive")
    value = naive_waldschmidt_formula(n, d)
    beta = naive_waldschmidt_beta(n, d)
    if value != beta:
        raise AssertionError(f"closed formula {value} disagrees with beta {beta} at n={n}, d={d}")
    return value


def min_reciprocal_sum(n: int, s: int) -> Fraction:
    """min over compositions of s into n parts of sum(1/a_i), from the balanced one."""
    if s < n:
        raise ValueError(f"no composition of {s} into {n} positive parts")
    q, r = divmod(s, n)
    return Fraction(r, q + 1) + Fraction(n - r, q)


def floor_bound(alpha_value: int, height: int) -> int:
    return (alpha_value + height - 1) // height


@dataclass(frozen=True)
class BoundsReport:
    alpha: int
    waldschmidt: Fraction
    naive_waldschmidt: Fraction
    big_height: int
    skoda_bound: Fraction
    chudnovsky_expr: Fraction
    floor_bound: int
    max_ideal_bound: Fraction
    chain_ok: bool
    chudnovsky_holds: bool
    naive_chudnovsky_holds: bool
    weak_chudnovsky_holds: bool


def bounds_report(I: MonomialIdeal) -> BoundsReport:
    """Every invariant and bound for I, with the proven chain checked exactly.

    ``chain_ok`` covers alpha >= waldschmidt >= naive >= alpha/e, and
    naive >= (value for m_n^alpha) >= floor((alpha+n-1)/n), all theorems.
    The Chudnovsky-type fields are conjectures (or known to fail for the
    naive constant) and are only recorded.
    """
    a = alpha(I)
    what = waldschmidt(I)
    tilde = naive_waldschmidt(I)
    e = big_height(I)
    n = I.nvars
    skoda = Fraction(a, e)
    chud = Fraction(a + e - 1, e)
    fb = floor_bound(a, e)
    mx = naive_waldschmidt_max_ideal_power(n, a)
    chain = a >= what >= tilde >= skoda and tilde >= mx >= floor_bound(a, n)
    return BoundsReport(
        alpha=a,
        waldschmidt=what,
        naive_waldschmidt=tilde,
        big_height=e,
        skoda_bound=skoda,
        chudnovsky_expr=chud,
        floor_bound=fb,
        max_ideal_bound=mx,
        chain_ok=chain,
        chudnovsky_holds=what >= chud,
        naive_chudnovsky_holds=tilde >= chud,
        weak_chudnovsky_holds=tilde >= fb,
    )


def monotonicity_check(I: MonomialIdeal, I_prime: MonomialIdeal) -> bool:
    """For I ⊆ I', check naive_waldschmidt(I) >= naive_waldschmidt(I')."""
    if not ideal_contains(I_prime, I):
        raise ValueError("monotonicity_check needs I to be contained in I'")
    return naive_waldschmidt(I) >= naive_waldschmidt(I_prime)


def max_ideal_power(n: int, d: int) -> MonomialIdeal:
    return power(MonomialIdeal.maximal(n), d)
