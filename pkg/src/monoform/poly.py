"""Newton, symbolic and irreducible polyhedra of monomial ideals.

Every body here lives in the nonnegative orthant and recedes along it. Newton
polyhedra are kept as V-reps (the minimal generators), irreducible polyhedra
as H-reps read off the irreducible decomposition, and symbolic polyhedra as a
list of V-reps whose intersection is never converted to inequalities. All
queries are exact.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from math import lcm
from typing import Sequence

from .core import ExponentVector, MonomialIdeal, contains_monomial, power, require_proper
from .decomp import (
    IrreducibleDecomposition,
    combined_primary_components,
    irreducible_decomposition,
)
from .errors import DimensionError, NotInBodyError
from .ratlp import LPOutcome, LPProblem, min_over_vrep_intersection, solve_min

RationalPoint = tuple[Fraction, ...]


def as_point(p: Sequence) -> RationalPoint:
    return tuple(x if isinstance(x, Fraction) else Fraction(x) for x in p)


@dataclass(frozen=True)
class PolyhedronVRep:
    """conv(generators) + R_{>=0}^n."""

    nvars: int
    generators: tuple[ExponentVector, ...]


@dataclass(frozen=True)
class PolyhedronHRep:
    """{y >= 0 : row . y >= 1 for every row}."""

    nvars: int
    rows: tuple[tuple[Fraction, ...], ...]

    def __post_init__(self):
        for r in self.rows:
            if len(r) != self.nvars:
                raise DimensionError("H-rep row has the wrong length")
            if any(c < 0 for c in r) or not any(c > 0 for c in r):
                raise ValueError(f"H-rep row {r} must be nonnegative and nonzero")


@dataclass(frozen=True)
class SymbolicPolyhedronSpec:
    """SP(I) as the intersection of the Newton polyhedra of the Q_{⊆P}."""

    components: tuple[PolyhedronVRep, ...]

    @property
    def nvars(self) -> int:
        return self.components[0].nvars


def newton_vrep(I: MonomialIdeal) -> PolyhedronVRep:
    if I.is_zero:
        raise ValueError("the zero ideal has no Newton polyhedron")
    return PolyhedronVRep(I.nvars, I.gens)


def irreducible_hrep(D: IrreducibleDecomposition) -> PolyhedronHRep:
    """One row per component: 1/a at each variable carrying the pure power x^a."""
    rows = []
    for comp in D:
        row = [Fraction(0)] * D.nvars
        for i, a in comp.powers:
            row[i] = Fraction(1, a)
        rows.append(tuple(row))
    return PolyhedronHRep(D.nvars, tuple(rows))


def ip_hrep(I: MonomialIdeal) -> PolyhedronHRep:
    return irreducible_hrep(irreducible_decomposition(I))


def _check_dim(nvars: int, p: Sequence) -> None:
    if len(p) != nvars:
        raise DimensionError(f"point has {len(p)} coordinates, body lives in {nvars}")


def hrep_membership(H: PolyhedronHRep, p: Sequence) -> bool:
    _check_dim(H.nvars, p)
    p = as_point(p)
    if any(x < 0 for x in p):
        return False
    return all(sum((c * x for c, x in zip(row, p)), Fraction(0)) >= 1 for row in H.rows)


def _membership_problem(V: PolyhedronVRep, p: RationalPoint) -> LPProblem:
    t = len(V.generators)
    rows = [([1] * t, "==", 1)]
    for i in range(V.nvars):
        rows.append(([-v[i] for v in V.generators], ">=", -p[i]))
    return LPProblem.build([0] * t, rows)


def caratheodory_certificate(V: PolyhedronVRep, p: Sequence) -> tuple[RationalPoint, RationalPoint] | None:
    """Weights w >= 0 summing to 1 and slack c >= 0 with p = sum w_j v_j + c.

    Returns ``None`` when p is outside the body.
    """
    _check_dim(V.nvars, p)
    p = as_point(p)
    out = solve_min(_membership_problem(V, p))
    if not out.optimal:
        return None
    w = out.point
    hull = [sum((wj * v[i] for wj, v in zip(w, V.generators)), Fraction(0)) for i in range(V.nvars)]
    slack = tuple(pi - hi for pi, hi in zip(p, hull))
    return w, slack


def vrep_membership(V: PolyhedronVRep, p: Sequence) -> bool:
    return caratheodory_certificate(V, p) is not None


def sp_spec(I: MonomialIdeal) -> SymbolicPolyhedronSpec:
    require_proper(I)
    return SymbolicPolyhedronSpec(tuple(newton_vrep(Q) for Q in combined_primary_components(I).values()))


def sp_membership(S: SymbolicPolyhedronSpec, p: Sequence) -> bool:
    return all(vrep_membership(V, p) for V in S.components)


def min_over_sp(S: SymbolicPolyhedronSpec, objective: Sequence) -> LPOutcome:
    return min_over_vrep_intersection(S.components, objective)


def min_over_hrep(H: PolyhedronHRep, objective: Sequence) -> LPOutcome:
    return solve_min(LPProblem.build(objective, [(row, ">=", 1) for row in H.rows]))


@dataclass(frozen=True)
class ChainVerdict:
    np_in_sp: bool
    sp_in_ip: bool
    # generators of I that failed SP membership (empty when np_in_sp)
    np_failures: tuple[ExponentVector, ...]
    # for each IP row: min of row . y over SP and the minimizing y
    row_minima: tuple[tuple[tuple[Fraction, ...], Fraction, RationalPoint], ...]

    @property
    def ok(self) -> bool:
        return self.np_in_sp and self.sp_in_ip


def check_np_sp_ip_chain(I: MonomialIdeal) -> ChainVerdict:
    """Verify NP(I) ⊆ SP(I) ⊆ IP(I) with finitely many exact LP calls.

    NP ⊆ SP: SP is convex and closed under adding the orthant, so it is enough
    that every minimal generator of I lies in SP.
    SP ⊆ IP: IP is cut out by its rows, so it is enough that each row's
    minimum over SP is at least 1.
    """
    S = sp_spec(I)
    failures = tuple(g for g in I.gens if not sp_membership(S, g))
    minima = []
    for row in ip_hrep(I).rows:
        out = min_over_sp(S, row)
        minima.append((row, out.value, out.point[: I.nvars]))
    sp_in_ip = all(v >= 1 for _, v, _ in minima)
    return ChainVerdict(not failures, sp_in_ip, failures, tuple(minima))


def hrep_vertices_2d(H: PolyhedronHRep) -> tuple[RationalPoint, ...]:
    """Vertices of a 2-variable H-rep, sorted by first coordinate.

    Every vertex of a planar polyhedron is the meet of two independent tight
    lines, so intersecting all pairs (rows and both axes) and keeping the
    feasible points is exact.
    """
    if H.nvars != 2:
        raise DimensionError("vertex enumeration is only implemented for 2 variables")
    lines = [(r[0], r[1], Fraction(1)) for r in set(H.rows)]
    lines += [(Fraction(1), Fraction(0), Fraction(0)), (Fraction(0), Fraction(1), Fraction(0))]
    found = set()
    for (a1, b1, c1), (a2, b2, c2) in combinations(lines, 2):
        det = a1 * b2 - a2 * b1
        if det == 0:
            continue
        p = ((c1 * b2 - c2 * b1) / det, (a1 * c2 - a2 * c1) / det)
        if hrep_membership(H, p):
            found.add(p)
    return tuple(sorted(found))


def witness_scaled_membership(p: Sequence, components: Sequence[MonomialIdeal]) -> int:
    """A scale m with x^(m p) integral and inside every J^m.

    m is the lcm of the denominators of one Caratheodory certificate per
    component, so p lies in (1/m) NP(J_1^m ∩ ... ∩ J_s^m).
    """
    p = as_point(p)
    m = 1
    for J in components:
        cert = caratheodory_certificate(newton_vrep(J), p)
        if cert is None:
            raise NotInBodyError(f"point {tuple(str(x) for x in p)} is outside NP({J})")
        w, slack = cert
        for x in w + slack:
            m = lcm(m, x.denominator)
    scaled = tuple(int(x * m) for x in p)
    for J in components:
        if not contains_monomial(power(J, m), scaled):
            raise AssertionError(f"scaled point {scaled} not in ({J})^{m}")
    return m
