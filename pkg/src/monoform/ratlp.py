"""Exact linear programming over the rationals.

``solve_min`` minimizes ``c.z`` subject to rows ``a.z >= b`` / ``a.z == b`` and
``z >= 0``. It runs the primal simplex method on a dictionary (condensed
tableau) of :class:`fractions.Fraction` entries with Bland's rule. Phase one
uses a single auxiliary variable; equality rows are split into two opposite
inequalities. Every optimal answer carries a dual certificate, and every
certificate is re-verified before it is returned.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Sequence

from .errors import DimensionError

OPTIMAL = "optimal"
INFEASIBLE = "infeasible"
UNBOUNDED = "unbounded"

RELATIONS = (">=", "==")


def _frac(x) -> Fraction:
    return x if isinstance(x, Fraction) else Fraction(x)


@dataclass(frozen=True)
class Constraint:
    row: tuple[Fraction, ...]
    relation: str
    rhs: Fraction


@dataclass(frozen=True)
class LPProblem:
    objective: tuple[Fraction, ...]
    constraints: tuple[Constraint, ...] = ()

    @classmethod
    def build(cls, objective: Sequence, constraints: Iterable[tuple[Sequence, str, object]] = ()) -> LPProblem:
        obj = tuple(_frac(c) for c in objective)
        rows = []
        for row, rel, rhs in constraints:
            if rel not in RELATIONS:
                raise ValueError(f"unsupported relation {rel!r}")
            r = tuple(_frac(a) for a in row)
            if len(r) != len(obj):
                raise DimensionError(f"constraint row has {len(r)} entries, objective has {len(obj)}")
            rows.append(Constraint(r, rel, _frac(rhs)))
        return cls(obj, tuple(rows))

    @property
    def nvars(self) -> int:
        return len(self.objective)


@dataclass(frozen=True)
class LPOutcome:
    status: str
    value: Fraction | None = None
    point: tuple[Fraction, ...] | None = None
    dual: tuple[Fraction, ...] | None = None
    ray: tuple[Fraction, ...] | None = None

    @property
    def optimal(self) -> bool:
        return self.status == OPTIMAL


@dataclass
class _Dictionary:
    """x_basis[i] = const[i] + sum_j coef[i][j] * x_nonbasic[j]."""

    basis: list[int]
    nonbasic: list[int]
    const: list[Fraction]
    coef: list[list[Fraction]]
    obj_const: Fraction = Fraction(0)
    obj: list[Fraction] = field(default_factory=list)

    def pivot(self, r: int, j: int) -> None:
        row = self.coef[r]
        p = row[j]
        inv = 1 / p
        new_row = [-a * inv for a in row]
        new_row[j] = inv
        new_const = -self.const[r] * inv
        self.coef[r] = new_row
        self.const[r] = new_const
        for i, other in enumerate(self.coef):
            if i == r:
                continue
            f = other[j]
            if not f:
                continue
            for k, a in enumerate(new_row):
                if a:
                    other[k] = other[k] + f * a if k != j else f * a
                elif k == j:
                    other[k] = Fraction(0)
            self.const[i] += f * new_const
        f = self.obj[j]
        if f:
            for k, a in enumerate(new_row):
                self.obj[k] = self.obj[k] + f * a if k != j else f * a
            self.obj_const += f * new_const
        self.basis[r], self.nonbasic[j] = self.nonbasic[j], self.basis[r]

    def entering(self, forbidden: frozenset = frozenset()) -> int | None:
        best = None
        for j, c in enumerate(self.obj):
            if c < 0 and self.nonbasic[j] not in forbidden:
                if best is None or self.nonbasic[j] < self.nonbasic[best]:
                    best = j
        return best

    def leaving(self, j: int) -> int | None:
        best = None
        best_ratio = None
        for i, row in enumerate(self.coef):
            a = row[j]
            if a < 0:
                ratio = self.const[i] / -a
                if (best is None or ratio < best_ratio
                        or (ratio == best_ratio and self.basis[i] < self.basis[best])):
                    best, best_ratio = i, ratio
        return best

    def run(self, forbidden: frozenset = frozenset()) -> int | None:
        """Bland-rule simplex; returns the unbounded column or None at optimum."""
        while True:
            j = self.entering(forbidden)
            if j is None:
                return None
            r = self.leaving(j)
            if r is None:
                return j
            self.pivot(r, j)

    def set_objective(self, costs: dict[int, Fraction]) -> None:
        self.obj_const = sum((costs.get(b, 0) * c for b, c in zip(self.basis, self.const)), Fraction(0))
        self.obj = []
        for j, v in enumerate(self.nonbasic):
            acc = _frac(costs.get(v, 0))
            for i, b in enumerate(self.basis):
                cb = costs.get(b)
                if cb:
                    acc += cb * self.coef[i][j]
            self.obj.append(acc)


class _Solver:
    """Single-use solver for one problem."""

    def __init__(self, problem: LPProblem):
        self.problem = problem
        n = problem.nvars
        rows: list[tuple[tuple[Fraction, ...], Fraction]] = []
        self.origin: list[tuple[int, int]] = []  # (constraint index, sign)
        for k, c in enumerate(problem.constraints):
            rows.append((c.row, c.rhs))
            self.origin.append((k, 1))
            if c.relation == "==":
                rows.append((tuple(-a for a in c.row), -c.rhs))
                self.origin.append((k, -1))
        self.n = n
        self.rows = rows
        self.aux = n + len(rows)
        self.d = _Dictionary(
            basis=[n + i for i in range(len(rows))],
            nonbasic=list(range(n)),
            const=[-b for _, b in rows],
            coef=[list(a) for a, _ in rows],
        )

    def _phase_one(self) -> bool:
        d = self.d
        if all(c >= 0 for c in d.const):
            return True
        d.nonbasic.append(self.aux)
        for row in d.coef:
            row.append(Fraction(1))
        d.set_objective({self.aux: Fraction(1)})
        r = min(range(len(d.const)), key=lambda i: (d.const[i], d.basis[i]))
        d.pivot(r, len(d.nonbasic) - 1)
        d.run()
        if d.obj_const > 0:
            return False
        if self.aux in d.basis:
            r = d.basis.index(self.aux)
            j = next((j for j, a in enumerate(d.coef[r]) if a), None)
            if j is None:
                del d.basis[r], d.const[r], d.coef[r]
            else:
                d.pivot(r, j)
        j = d.nonbasic.index(self.aux)
        del d.nonbasic[j]
        for row in d.coef:
            del row[j]
        return True

    def solve(self) -> LPOutcome:
        if not self._phase_one():
            return LPOutcome(INFEASIBLE)
        d = self.d
        c = self.problem.objective
        d.set_objective({i: c[i] for i in range(self.n) if c[i]})
        j = d.run()
        if j is not None:
            ray = [Fraction(0)] * self.n
            if d.nonbasic[j] < self.n:
                ray[d.nonbasic[j]] = Fraction(1)
            for i, b in enumerate(d.basis):
                if b < self.n:
                    ray[b] = d.coef[i][j]
            out = LPOutcome(UNBOUNDED, ray=tuple(ray))
            _verify_ray(self.problem, out.ray)
            return out
        point = [Fraction(0)] * self.n
        for b, v in zip(d.basis, d.const):
            if b < self.n:
                point[b] = v
        u = [Fraction(0)] * len(self.rows)
        for j, v in enumerate(d.nonbasic):
            if v >= self.n:
                u[v - self.n] = d.obj[j]
        dual = [Fraction(0)] * len(self.problem.constraints)
        for (k, sign), ui in zip(self.origin, u):
            dual[k] += sign * ui
        out = LPOutcome(OPTIMAL, d.obj_const, tuple(point), tuple(dual))
        verify_certificate(self.problem, out)
        return out


def _dot(a: Sequence[Fraction], b: Sequence[Fraction]) -> Fraction:
    return sum((x * y for x, y in zip(a, b)), Fraction(0))


def verify_certificate(problem: LPProblem, outcome: LPOutcome) -> None:
    """Check primal feasibility, the reported value, and dual optimality exactly."""
    z = outcome.point
    if any(v < 0 for v in z):
        raise AssertionError("negative coordinate in LP point")
    for c in problem.constraints:
        lhs = _dot(c.row, z)
        if (c.relation == ">=" and lhs < c.rhs) or (c.relation == "==" and lhs != c.rhs):
            raise AssertionError(f"LP point violates {c}")
    if _dot(problem.objective, z) != outcome.value:
        raise AssertionError("LP value does not match its point")
    y = outcome.dual
    for c, yk in zip(problem.constraints, y):
        if c.relation == ">=" and yk < 0:
            raise AssertionError("negative dual multiplier on an inequality")
    for i in range(problem.nvars):
        reduced = problem.objective[i] - sum((c.row[i] * yk for c, yk in zip(problem.constraints, y)), Fraction(0))
        if reduced < 0:
            raise AssertionError("dual solution is infeasible")
    if sum((c.rhs * yk for c, yk in zip(problem.constraints, y)), Fraction(0)) != outcome.value:
        raise AssertionError("dual value differs from primal value")


def _verify_ray(problem: LPProblem, ray: Sequence[Fraction]) -> None:
    if any(v < 0 for v in ray) or _dot(problem.objective, ray) >= 0:
        raise AssertionError("bad unbounded ray")
    for c in problem.constraints:
        lhs = _dot(c.row, ray)
        if (c.relation == ">=" and lhs < 0) or (c.relation == "==" and lhs != 0):
            raise AssertionError("unbounded ray leaves the feasible region")


def solve_min(problem: LPProblem) -> LPOutcome:
    """Minimize the objective exactly; infeasible/unbounded come back as statuses."""
    return _Solver(problem).solve()


def vrep_intersection_problem(components: Sequence, objective: Sequence) -> LPProblem:
    """Extended formulation of min c.y over an intersection of V-rep bodies.

    Each component k is conv(v_k1, ..., v_kt) + R_{>=0}^n. Variables are y
    followed by one weight block per component, with sum(weights) = 1 and
    y - sum_j w_kj v_kj >= 0.
    """
    if not components:
        raise ValueError("need at least one component")
    n = components[0].nvars
    if any(V.nvars != n for V in components) or len(objective) != n:
        raise DimensionError("components and objective disagree on dimension")
    total = n + sum(len(V.generators) for V in components)
    rows = []
    offset = n
    for V in components:
        t = len(V.generators)
        eq = [0] * total
        for j in range(t):
            eq[offset + j] = 1
        rows.append((eq, "==", 1))
        for i in range(n):
            row = [0] * total
            row[i] = 1
            for j, v in enumerate(V.generators):
                row[offset + j] = -v[i]
            rows.append((row, ">=", 0))
        offset += t
    return LPProblem.build(list(objective) + [0] * (total - n), rows)


def min_over_vrep_intersection(components: Sequence, objective: Sequence) -> LPOutcome:
    """Minimize ``objective . y`` over the intersection of the given V-rep bodies.

    The outcome's point covers every LP variable; its first ``nvars`` entries
    are the optimal y.
    """
    return solve_min(vrep_intersection_problem(components, objective))
