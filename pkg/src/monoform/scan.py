"""Seeded random monomial ideals and the property / conjecture scan."""

from __future__ import annotations

import random
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction

from .core import MonomialIdeal, alpha
from .decomp import big_height, irreducible_decomposition
from .invariants import (
    floor_bound,
    naive_waldschmidt,
    naive_waldschmidt_max_ideal_power,
    waldschmidt,
)
from .poly import check_np_sp_ip_chain

SHAPES = ("any", "squarefree", "mprimary")

MAX_EXPONENT = 5
MIN_GENS, MAX_GENS = 2, 6
MIN_VARS, MAX_VARS = 2, 4


def random_ideal(rng: random.Random, shape: str = "any", nvars: int | None = None) -> MonomialIdeal:
    """Draw one ideal: 2 to 6 generators with entries in 0..5, none constant.

    ``squarefree`` restricts entries to 0/1; ``mprimary`` adds a pure power of
    every variable so the ideal is primary to the maximal ideal.
    """
    if shape not in SHAPES:
        raise ValueError(f"unknown shape {shape!r}")
    n = nvars if nvars is not None else rng.randint(MIN_VARS, MAX_VARS)
    top = 1 if shape == "squarefree" else MAX_EXPONENT
    gens = []
    for _ in range(rng.randint(MIN_GENS, MAX_GENS)):
        while True:
            v = tuple(rng.randint(0, top) for _ in range(n))
            if any(v):
                break
        gens.append(v)
    if shape == "mprimary":
        for i in range(n):
            gens.append(tuple(rng.randint(1, MAX_EXPONENT) if j == i else 0 for j in range(n)))
    return MonomialIdeal.from_generators(n, gens)


def random_suite(count: int, seed: int, shape: str = "any") -> list[MonomialIdeal]:
    rng = random.Random(seed)
    return [random_ideal(rng, shape) for _ in range(count)]


# names of the proven properties; a failure of any of these is a bug
ASSERTED = (
    "decomposition_sound",
    "np_sp_ip_chain",
    "alpha_ordering",
    "skoda_type",
    "max_ideal_bound",
    "distinct_maximal_radicals_equal",
)
# open or known-false statements; tallied, never fatal
CONJECTURES = ("chudnovsky", "weak_chudnovsky", "naive_chudnovsky")


@dataclass
class IdealVerdict:
    text: str
    asserted: dict[str, bool]
    conjectures: dict[str, bool]
    values: dict[str, object] = field(default_factory=dict)


def check_ideal(I: MonomialIdeal) -> IdealVerdict:
    D = irreducible_decomposition(I)
    a = alpha(I)
    what = waldschmidt(I)
    tilde = naive_waldschmidt(I)
    e = big_height(I)
    chud = Fraction(a + e - 1, e)
    radicals = [c.support for c in D]
    # distinct radicals alone are not enough: an embedded prime merges
    # components in the combined decomposition, e.g. (x^4 y, x^2 y^3)
    separated = len(set(radicals)) == len(radicals) and not any(
        r < s for r in radicals for s in radicals
    )
    asserted = {
        "decomposition_sound": D.intersection() == I,
        "np_sp_ip_chain": check_np_sp_ip_chain(I).ok,
        "alpha_ordering": a >= what >= tilde,
        "skoda_type": tilde >= Fraction(a, e),
        "max_ideal_bound": tilde >= naive_waldschmidt_max_ideal_power(I.nvars, a) >= floor_bound(a, I.nvars),
        "distinct_maximal_radicals_equal": not separated or what == tilde,
    }
    conjectures = {
        "chudnovsky": what >= chud,
        "weak_chudnovsky": tilde >= floor_bound(a, e),
        "naive_chudnovsky": tilde >= chud,
    }
    values = {"alpha": a, "waldschmidt": what, "naive_waldschmidt": tilde, "big_height": e}
    return IdealVerdict(I.to_text(), asserted, conjectures, values)


@dataclass
class ScanReport:
    count: int
    seed: int
    shape: str
    asserted: dict[str, dict[str, int]]
    conjectures: dict[str, dict[str, int]]
    violations: list[dict[str, str]]
    conjecture_violations: list[dict[str, str]]

    @property
    def ok(self) -> bool:
        return not self.violations


def run_scan(count: int, seed: int, shape: str = "any", jobs: int = 1) -> ScanReport:
    ideals = random_suite(count, seed, shape)
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            verdicts = list(pool.map(check_ideal, ideals, chunksize=4))
    else:
        verdicts = [check_ideal(I) for I in ideals]
    asserted = {name: {"checked": 0, "failed": 0} for name in ASSERTED}
    conj = {name: {"checked": 0, "violations": 0} for name in CONJECTURES}
    violations, conj_violations = [], []
    for v in verdicts:
        for name, ok in v.asserted.items():
            asserted[name]["checked"] += 1
            if not ok:
                asserted[name]["failed"] += 1
                violations.append({"property": name, "ideal": v.text})
        for name, ok in v.conjectures.items():
            conj[name]["checked"] += 1
            if not ok:
                conj[name]["violations"] += 1
                conj_violations.append({"conjecture": name, "ideal": v.text})
    return ScanReport(count, seed, shape, asserted, conj, violations, conj_violations)
