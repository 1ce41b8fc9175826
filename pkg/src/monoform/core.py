"""Monomials and monomial ideals in canonical form.

An exponent vector is a plain tuple of nonnegative ints. A monomial ideal is
stored as its minimal generators, sorted in graded lexicographic order, so two
ideals are equal exactly when their canonical forms are equal.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import DimensionError, SizeLimitError, UndefinedInvariantError

ExponentVector = tuple[int, ...]

DEFAULT_GEN_CAP = 100_000


def generator_cap() -> int:
    """Current cap on intermediate generator sets (env MONOFORM_GEN_CAP)."""
    raw = os.environ.get("MONOFORM_GEN_CAP")
    if raw is None:
        return DEFAULT_GEN_CAP
    return int(raw)


def _check_cap(operation: str, size: int) -> None:
    cap = generator_cap()
    if size > cap:
        raise SizeLimitError(operation, size, cap)


def grlex_key(v: ExponentVector) -> tuple:
    # lower degree first; within a degree, larger leading exponents first
    return (sum(v), tuple(-e for e in v))


def divides(a: ExponentVector, b: ExponentVector) -> bool:
    """True iff x^a divides x^b."""
    return all(x <= y for x, y in zip(a, b))


def unit_vector(n: int, i: int, power: int = 1) -> ExponentVector:
    return tuple(power if j == i else 0 for j in range(n))


def minimalize(gens: Iterable[Sequence[int]], nvars: int | None = None) -> tuple[ExponentVector, ...]:
    """Return the divisibility-minimal antichain generating the same ideal.

    The result is in canonical (graded lex) order.
    """
    vecs = set()
    for g in gens:
        v = tuple(int(e) for e in g)
        if nvars is None:
            nvars = len(v)
        elif len(v) != nvars:
            raise DimensionError(f"exponent vector {v} has length {len(v)}, expected {nvars}")
        if any(e < 0 for e in v):
            raise ValueError(f"negative exponent in {v}")
        vecs.add(v)
    kept: list[ExponentVector] = []
    # a proper divisor always has smaller degree, so it is visited first
    for v in sorted(vecs, key=grlex_key):
        for g in kept:
            if divides(g, v):
                break
        else:
            kept.append(v)
    return tuple(kept)


@dataclass(frozen=True)
class MonomialIdeal:
    """A monomial ideal in ``nvars`` variables, held in canonical form.

    Build instances with :meth:`from_generators` (or the helpers below); the
    raw constructor trusts its input to be canonical already.
    """

    nvars: int
    gens: tuple[ExponentVector, ...]

    @classmethod
    def from_generators(cls, nvars: int, gens: Iterable[Sequence[int]]) -> MonomialIdeal:
        if nvars < 1:
            raise DimensionError("nvars must be positive")
        return cls(nvars, minimalize(gens, nvars))

    @classmethod
    def zero(cls, nvars: int) -> MonomialIdeal:
        return cls(nvars, ())

    @classmethod
    def unit(cls, nvars: int) -> MonomialIdeal:
        return cls(nvars, ((0,) * nvars,))

    @classmethod
    def maximal(cls, nvars: int) -> MonomialIdeal:
        """The homogeneous maximal ideal (x_1, ..., x_n)."""
        return cls.from_generators(nvars, [unit_vector(nvars, i) for i in range(nvars)])

    @property
    def is_zero(self) -> bool:
        return not self.gens

    @property
    def is_unit(self) -> bool:
        return self.gens == ((0,) * self.nvars,)

    def __len__(self) -> int:
        return len(self.gens)

    def __iter__(self):
        return iter(self.gens)

    def __contains__(self, b) -> bool:
        return contains_monomial(self, b)

    def max_degree(self) -> int:
        return max((max(g) for g in self.gens), default=0)

    def is_squarefree(self) -> bool:
        return all(e <= 1 for g in self.gens for e in g)

    def to_text(self) -> str:
        """Render in the ``x1^2*x2, x3`` grammar understood by the CLI parser."""
        if self.is_zero:
            raise UndefinedInvariantError("the zero ideal has no textual form")
        return ", ".join(monomial_text(g) for g in self.gens)

    def __str__(self) -> str:
        return self.to_text() if not self.is_zero else "(0)"


def monomial_text(v: ExponentVector) -> str:
    factors = []
    for i, e in enumerate(v):
        if e == 1:
            factors.append(f"x{i + 1}")
        elif e > 1:
            factors.append(f"x{i + 1}^{e}")
    return "*".join(factors) if factors else "x1^0"


def _same_ring(I: MonomialIdeal, J: MonomialIdeal) -> None:
    if I.nvars != J.nvars:
        raise DimensionError(f"ideals live in {I.nvars} and {J.nvars} variables")


def require_proper(I: MonomialIdeal) -> None:
    """Reject the zero and unit ideals, where the invariants are undefined."""
    if I.is_zero:
        raise UndefinedInvariantError("undefined for the zero ideal")
    if I.is_unit:
        raise UndefinedInvariantError("undefined for the unit ideal")


def contains_monomial(I: MonomialIdeal, b: Sequence[int]) -> bool:
    if len(b) != I.nvars:
        raise DimensionError(f"monomial has {len(b)} exponents, ideal has {I.nvars} variables")
    return any(divides(g, b) for g in I.gens)


def intersect(I: MonomialIdeal, J: MonomialIdeal) -> MonomialIdeal:
    """Intersection via pairwise lcm of generators."""
    _same_ring(I, J)
    if I.is_zero or J.is_zero:
        return MonomialIdeal.zero(I.nvars)
    if I == J:
        return I
    lcms = {tuple(max(x, y) for x, y in zip(g, h)) for g in I.gens for h in J.gens}
    gens = minimalize(lcms, I.nvars)
    _check_cap("intersect", len(gens))
    return MonomialIdeal(I.nvars, gens)


def intersect_all(ideals: Iterable[MonomialIdeal]) -> MonomialIdeal:
    ideals = list(ideals)
    if not ideals:
        raise ValueError("cannot intersect an empty family")
    # small ideals first keeps the running intersection small
    ideals.sort(key=len)
    acc = ideals[0]
    for J in ideals[1:]:
        acc = intersect(acc, J)
    return acc


def multiply(I: MonomialIdeal, J: MonomialIdeal) -> MonomialIdeal:
    _same_ring(I, J)
    sums = {tuple(x + y for x, y in zip(g, h)) for g in I.gens for h in J.gens}
    gens = minimalize(sums, I.nvars)
    _check_cap("multiply", len(gens))
    return MonomialIdeal(I.nvars, gens)


def power(I: MonomialIdeal, m: int) -> MonomialIdeal:
    """I^m by iterated multiplication, minimalizing after every step."""
    if m < 1:
        raise ValueError(f"power exponent must be >= 1, got {m}")
    acc = I
    for _ in range(m - 1):
        try:
            acc = multiply(acc, I)
        except SizeLimitError as exc:
            raise SizeLimitError("power", exc.size, exc.cap) from None
    return acc


def ideal_contains(I: MonomialIdeal, J: MonomialIdeal) -> bool:
    """True iff J is a subset of I."""
    _same_ring(I, J)
    return all(contains_monomial(I, g) for g in J.gens)


def alpha(I: MonomialIdeal) -> int:
    """Initial degree: least total degree of a minimal generator."""
    require_proper(I)
    return min(sum(g) for g in I.gens)
