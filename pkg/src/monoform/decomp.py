"""Irreducible and combined primary decompositions, and the power families.

Irreducible decompositions are computed by generator splitting: if a minimal
generator factors as x^b' * x^b'' with disjoint supports then
``I = (I + (x^b')) ∩ (I + (x^b''))``. Recursing until every generator is a
pure power leaves a family of irreducible ideals containing ``I`` whose minimal
members form the unique irredundant decomposition.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Mapping

from .core import (
    MonomialIdeal,
    intersect_all,
    minimalize,
    power,
    require_proper,
)
from .errors import DimensionError


@dataclass(frozen=True)
class IrreducibleComponent:
    """The pure-power ideal (x_i^a_i : i in support).

    ``powers`` is a sorted tuple of ``(index, exponent)`` pairs, 0-based.
    """

    nvars: int
    powers: tuple[tuple[int, int], ...]

    def __post_init__(self):
        if not self.powers:
            raise ValueError("an irreducible component needs at least one pure power")
        for i, a in self.powers:
            if a < 1 or not 0 <= i < self.nvars:
                raise ValueError(f"bad pure power x{i + 1}^{a}")

    @classmethod
    def from_mapping(cls, nvars: int, powers: Mapping[int, int]) -> IrreducibleComponent:
        return cls(nvars, tuple(sorted(powers.items())))

    @property
    def as_dict(self) -> dict[int, int]:
        return dict(self.powers)

    @property
    def support(self) -> frozenset[int]:
        return frozenset(i for i, _ in self.powers)

    def dense(self) -> tuple[int, ...]:
        """Exponent per variable, 0 where the variable is absent."""
        d = self.as_dict
        return tuple(d.get(i, 0) for i in range(self.nvars))

    def to_ideal(self) -> MonomialIdeal:
        gens = []
        for i, a in self.powers:
            v = [0] * self.nvars
            v[i] = a
            gens.append(v)
        return MonomialIdeal.from_generators(self.nvars, gens)

    def contains(self, other: IrreducibleComponent) -> bool:
        """True iff ``other`` is a subset of this component."""
        mine = self.as_dict
        return all(i in mine and a >= mine[i] for i, a in other.powers)

    def sort_key(self) -> tuple:
        return tuple(-e for e in self.dense())

    def __str__(self) -> str:
        return "(" + ", ".join(
            f"x{i + 1}" if a == 1 else f"x{i + 1}^{a}" for i, a in self.powers
        ) + ")"


@dataclass(frozen=True)
class IrreducibleDecomposition:
    nvars: int
    components: tuple[IrreducibleComponent, ...]

    def __len__(self) -> int:
        return len(self.components)

    def __iter__(self):
        return iter(self.components)

    def intersection(self) -> MonomialIdeal:
        return intersect_all(c.to_ideal() for c in self.components)


@dataclass(frozen=True)
class MonomialPrime:
    """The prime (x_i : i in support); indices are 0-based."""

    support: tuple[int, ...]

    @classmethod
    def of(cls, indices: Iterable[int]) -> MonomialPrime:
        s = tuple(sorted(set(indices)))
        if not s:
            raise ValueError("a monomial prime needs a nonempty support")
        return cls(s)

    @property
    def height(self) -> int:
        return len(self.support)

    def contained_in(self, other: MonomialPrime) -> bool:
        return set(self.support) <= set(other.support)

    def __str__(self) -> str:
        return "(" + ", ".join(f"x{i + 1}" for i in self.support) + ")"


def irredundantize(components: Iterable[IrreducibleComponent]) -> tuple[IrreducibleComponent, ...]:
    """Drop every component that contains the intersection of the others.

    Irreducible monomial ideals are meet-prime in the lattice of monomial
    ideals (J ⊇ A ∩ B forces J ⊇ A or J ⊇ B), so a component is redundant
    exactly when it contains some other component. Duplicates collapse.
    """
    comps = sorted(set(components), key=IrreducibleComponent.sort_key)
    if not comps:
        raise ValueError("empty component list")
    n = comps[0].nvars
    if any(c.nvars != n for c in comps):
        raise DimensionError("components live in different rings")
    kept = [c for c in comps if not any(d != c and c.contains(d) for d in comps)]
    return tuple(kept)


def _split(gens: tuple, nvars: int, cache: dict) -> frozenset:
    hit = cache.get(gens)
    if hit is not None:
        return hit
    target = None
    for g in gens:
        if sum(1 for e in g if e) >= 2:
            target = g
            break
    if target is None:
        # every generator is a pure power (minimal, so one per variable)
        powers = {}
        for g in gens:
            for i, e in enumerate(g):
                if e:
                    powers[i] = e
        result = frozenset([IrreducibleComponent.from_mapping(nvars, powers)])
    else:
        i = next(k for k, e in enumerate(target) if e)
        head = tuple(target[i] if k == i else 0 for k in range(nvars))
        tail = tuple(0 if k == i else e for k, e in enumerate(target))
        left = _split(minimalize(gens + (head,), nvars), nvars, cache)
        right = _split(minimalize(gens + (tail,), nvars), nvars, cache)
        # keep only the minimal components of the union as we go up
        result = frozenset(irredundantize(left | right))
    cache[gens] = result
    return result


@lru_cache(maxsize=512)
def irreducible_decomposition(I: MonomialIdeal) -> IrreducibleDecomposition:
    """The unique irredundant irreducible decomposition of ``I``."""
    require_proper(I)
    comps = _split(I.gens, I.nvars, {})
    return IrreducibleDecomposition(I.nvars, irredundantize(comps))


def decomposition_from_components(nvars: int, components: Iterable[IrreducibleComponent]) -> IrreducibleDecomposition:
    return IrreducibleDecomposition(nvars, irredundantize(components))


def ass_primes(I: MonomialIdeal) -> tuple[MonomialPrime, ...]:
    """Associated primes: the distinct supports of the irreducible components."""
    D = irreducible_decomposition(I)
    return tuple(sorted({MonomialPrime.of(c.support) for c in D}, key=lambda p: (p.height, p.support)))


def max_primes(I: MonomialIdeal) -> tuple[MonomialPrime, ...]:
    primes = ass_primes(I)
    return tuple(
        p for p in primes
        if not any(q != p and set(p.support) < set(q.support) for q in primes)
    )


def big_height(I: MonomialIdeal) -> int:
    return max(p.height for p in ass_primes(I))


def combined_primary_components(I: MonomialIdeal) -> dict[MonomialPrime, MonomialIdeal]:
    """Map each maximal associated prime P to Q_{⊆P}."""
    D = irreducible_decomposition(I)
    out = {}
    for P in max_primes(I):
        inside = [c.to_ideal() for c in D if c.support <= set(P.support)]
        out[P] = intersect_all(inside)
    return out


def ordinary_power(I: MonomialIdeal, m: int) -> MonomialIdeal:
    return power(I, m)


def symbolic_power(I: MonomialIdeal, m: int) -> MonomialIdeal:
    """I^(m) as the intersection of (Q_{⊆P})^m over the maximal associated primes."""
    if m < 1:
        raise ValueError(f"m must be >= 1, got {m}")
    if m == 1:
        require_proper(I)
        return I
    return intersect_all(power(Q, m) for Q in combined_primary_components(I).values())


def irreducible_power(I: MonomialIdeal, m: int) -> MonomialIdeal:
    """I^{m}: intersection of the m-th powers of the irreducible components."""
    if m < 1:
        raise ValueError(f"m must be >= 1, got {m}")
    if m == 1:
        require_proper(I)
        return I
    return irreducible_power_of(irreducible_decomposition(I).components, m)


def irreducible_power_of(components: Iterable[IrreducibleComponent], m: int) -> MonomialIdeal:
    """Intersection of m-th powers over an arbitrary (possibly redundant) list."""
    return intersect_all(power(c.to_ideal(), m) for c in components)


POWER_FAMILIES = {
    "ordinary": ordinary_power,
    "symbolic": symbolic_power,
    "irreducible": irreducible_power,
}


def family_power(I: MonomialIdeal, kind: str, m: int) -> MonomialIdeal:
    try:
        fn = POWER_FAMILIES[kind]
    except KeyError:
        raise ValueError(f"unknown power family {kind!r}") from None
    return fn(I, m)
