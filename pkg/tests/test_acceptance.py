"""End-to-end acceptance checks, all exact.

Run with ``pytest tests/test_acceptance.py -s`` to see one PASS/FAIL line per
criterion as it finishes; a summary table is printed at the end either way.
"""

import random
import time
from contextlib import contextmanager
from fractions import Fraction as F
from functools import lru_cache

import pytest

from conftest import ACCEPTANCE, SEED, ideal
from oracles import brute_compositions, brute_lp_min
from monoform.core import (
    MonomialIdeal,
    alpha,
    contains_monomial,
    ideal_contains,
    intersect_all,
    multiply,
    power,
    unit_vector,
)
from monoform.decomp import (
    MonomialPrime,
    ass_primes,
    big_height,
    irreducible_decomposition,
    irreducible_power,
    symbolic_power,
)
from monoform.invariants import (
    max_ideal_power_decomposition,
    naive_waldschmidt,
    naive_waldschmidt_beta,
    naive_waldschmidt_formula,
    naive_waldschmidt_max_ideal_power,
    waldschmidt,
)
from monoform.poly import (
    check_np_sp_ip_chain,
    hrep_vertices_2d,
    ip_hrep,
    irreducible_hrep,
    min_over_hrep,
    min_over_sp,
    sp_spec,
    witness_scaled_membership,
)
from monoform.ratlp import INFEASIBLE, OPTIMAL, LPProblem, solve_min
from monoform.scan import random_ideal, random_suite, run_scan


@contextmanager
def criterion(num, title, budget=None):
    start = time.perf_counter()
    ok = False
    try:
        yield
        elapsed = time.perf_counter() - start
        if budget is not None:
            assert elapsed < budget, f"took {elapsed:.1f}s, budget {budget}s"
        ok = True
    finally:
        elapsed = time.perf_counter() - start
        ACCEPTANCE[num] = (title, ok)
        print(f"\n{'PASS' if ok else 'FAIL'}  criterion {num:>2}: {title} ({elapsed:.2f}s)")


@pytest.fixture(scope="module")
def suite():
    return random_suite(200, SEED, "any")


def test_01_naive_constant_of_m22():
    with criterion(1, "(x^2,xy,y^2): naive constant 4/3, IP vertices, alpha, big-height", budget=1):
        I = ideal("x1^2, x1*x2, x2^2")
        tilde = naive_waldschmidt(I)
        assert tilde == F(4, 3)
        assert set(hrep_vertices_2d(ip_hrep(I))) == {(2, 0), (0, 2), (F(2, 3), F(2, 3))}
        assert alpha(I) == 2
        e = big_height(I)
        assert e == 2
        assert tilde < F(alpha(I) + e - 1, e) == F(3, 2)


def test_02_waldschmidt_comparison():
    with criterion(2, "Waldschmidt constants 3/2 (triangle) and 2 (m_3^2) via SP LP", budget=1):
        T = ideal("x1*x2, x1*x3, x2*x3")
        M = power(MonomialIdeal.maximal(3), 2)
        assert min_over_sp(sp_spec(T), [1, 1, 1]).value == F(3, 2)
        assert min_over_sp(sp_spec(M), [1, 1, 1]).value == 2
        assert waldschmidt(T) == F(3, 2) and waldschmidt(M) == 2
        assert naive_waldschmidt(T) == waldschmidt(T)


def test_03_closed_formula_matches_lp():
    with criterion(3, "closed formula = LP for m_n^d, n<=5, d<=10 (d<=8 at n=5); both beta forms", budget=300):
        for n in range(1, 6):
            for d in range(1, (8 if n == 5 else 10) + 1):
                lp = naive_waldschmidt(power(MonomialIdeal.maximal(n), d))
                closed = naive_waldschmidt_formula(n, d)
                assert lp == closed, (n, d, lp, closed)
                assert naive_waldschmidt_beta(n, d) == closed


def test_04_max_ideal_power_decomposition():
    with criterion(4, "decomposition of m_n^d is the composition family, n<=4, d<=6", budget=60):
        for n in range(1, 5):
            for d in range(1, 7):
                D = irreducible_decomposition(power(MonomialIdeal.maximal(n), d))
                family = {tuple(c.dense()) for c in D}
                assert family == set(brute_compositions(n, d + n - 1)), (n, d)
                assert set(D.components) == set(max_ideal_power_decomposition(n, d).components)


def test_05_symbolic_square_gains_embedded_primes():
    with criterion(5, "4-variable ideal: symbolic square gains height-3 primes, irreducible square does not",
                   budget=60):
        def prime_ideal(*idx):
            return MonomialIdeal.from_generators(4, [unit_vector(4, i) for i in idx])

        parts = [prime_ideal(i, j) for i in range(4) for j in range(i + 1, 4)]
        I = intersect_all(parts + [power(MonomialIdeal.maximal(4), 4)])
        base = set(ass_primes(I))
        height3 = {MonomialPrime.of(s) for s in ((0, 1, 2), (0, 1, 3), (0, 2, 3), (1, 2, 3))}
        assert not height3 & base
        assert set(ass_primes(symbolic_power(I, 2))) >= base | height3
        assert set(ass_primes(irreducible_power(I, 2))) <= base


def test_06_polyhedra_chain_and_ordering(suite):
    with criterion(6, "200 random ideals: NP <= SP <= IP and alpha >= waldschmidt >= naive", budget=600):
        for I in suite:
            assert check_np_sp_ip_chain(I).ok, I.to_text()
            assert alpha(I) >= waldschmidt(I) >= naive_waldschmidt(I), I.to_text()


@lru_cache(maxsize=None)
def _max_ideal_naive_lp(n, d):
    # LP over the irreducible polyhedron of m_n^d, built from its composition family
    return min_over_hrep(irreducible_hrep(max_ideal_power_decomposition(n, d)), [1] * n).value


def test_07_skoda_and_max_ideal_lower_bounds(suite):
    with criterion(7, "200 random ideals: naive >= alpha/big-height and naive >= naive(m_n^alpha)"):
        for I in suite:
            a, e, tilde = alpha(I), big_height(I), naive_waldschmidt(I)
            assert tilde >= F(a, e), I.to_text()
            floor_value = _max_ideal_naive_lp(I.nvars, a)
            assert floor_value == naive_waldschmidt_max_ideal_power(I.nvars, a)
            assert tilde >= floor_value, I.to_text()


def test_08_power_containments():
    with criterion(8, "50 random ideals: I^m <= I^(m) <= I^{m} (m<=3), I^{a} I^{b} <= I^{a+b} (a+b<=4)"):
        for I in random_suite(50, SEED + 1, "any"):
            irr = {m: irreducible_power(I, m) for m in range(1, 5)}
            for m in range(1, 4):
                sym = symbolic_power(I, m)
                assert ideal_contains(sym, power(I, m)), (I.to_text(), m)
                assert ideal_contains(irr[m], sym), (I.to_text(), m)
            for a in range(1, 4):
                for b in range(1, 5 - a):
                    assert ideal_contains(irr[a + b], multiply(irr[a], irr[b])), (I.to_text(), a, b)


TWO_VARIABLE_IDEALS = [
    "x1^2, x1*x2, x2^2",
    "x1^3, x2",
    "x1^3, x1*x2, x2^2",
    "x1^4*x2, x1^2*x2^3",
    "x1^3, x1^2*x2, x1*x2^2, x2^3",
    "x1^5, x1^3*x2, x1*x2^3, x2^4",
    "x1^2*x2, x1*x2^3",
    "x1^4, x1^3*x2^2, x2^5",
]


def _two_variable_ideals():
    out = [ideal(t) for t in TWO_VARIABLE_IDEALS]
    rng = random.Random(SEED)
    out += [random_ideal(rng, "any", nvars=2) for _ in range(25)]
    return out


def test_09_irreducible_polyhedron_vertices_are_reached():
    with criterion(9, "2-variable ideals: every IP vertex has a witness m, x^(mp) in I^{m}; "
                      "alpha(I^{m})/m = naive constant at optimal vertices"):
        for I in _two_variable_ideals():
            tilde = naive_waldschmidt(I)
            components = [c.to_ideal() for c in irreducible_decomposition(I)]
            optimal_seen = False
            for p in hrep_vertices_2d(ip_hrep(I)):
                m = witness_scaled_membership(p, components)
                scaled = tuple(int(x * m) for x in p)
                assert all(x * m == s for x, s in zip(p, scaled))
                Im = irreducible_power(I, m)
                assert contains_monomial(Im, scaled), (I.to_text(), p, m)
                ratio = F(alpha(Im), m)
                if sum(p) == tilde:
                    optimal_seen = True
                    assert ratio == tilde, (I.to_text(), p, m, ratio)
                else:
                    # a non-optimal vertex only bounds the ratio from above
                    assert tilde <= ratio <= sum(p), (I.to_text(), p, m, ratio)
            assert optimal_seen, I.to_text()


def _random_lp(rng):
    n = rng.randint(1, 3)
    rows = []
    for _ in range(rng.randint(1, 12)):
        row = [F(rng.randint(-3, 4), rng.randint(1, 3)) for _ in range(n)]
        rel = ">=" if rng.random() < 0.8 else "=="
        rows.append((row, rel, F(rng.randint(-3, 4), rng.randint(1, 2))))
    obj = [rng.randint(0, 5) for _ in range(n)]
    return obj, rows


def test_10_simplex_matches_vertex_enumeration():
    with criterion(10, "random LPs (n<=3, <=12 rows): simplex optimum = brute-force basic-point minimum"):
        rng = random.Random(SEED)
        seen = {OPTIMAL: 0, INFEASIBLE: 0}
        for _ in range(150):
            obj, rows = _random_lp(rng)
            out = solve_min(LPProblem.build(obj, rows))
            expected = brute_lp_min(obj, rows)
            if expected is None:
                assert out.status == INFEASIBLE, (obj, rows)
            else:
                assert out.status == OPTIMAL and out.value == expected, (obj, rows, out.value, expected)
            seen[out.status] += 1
        # the generator must exercise both outcomes
        assert seen[OPTIMAL] and seen[INFEASIBLE]


def test_11_conjecture_scan():
    with criterion(11, "square-free suite of 100: no Chudnovsky violations; general suite tabulated"):
        sq = run_scan(100, SEED, "squarefree")
        assert sq.ok
        assert sq.conjectures["chudnovsky"]["violations"] == 0
        print()
        for shape in ("any", "mprimary"):
            rep = run_scan(100, SEED, shape)
            assert rep.ok
            for name, tally in rep.conjectures.items():
                print(f"  {shape:>9} {name:<17} checked {tally['checked']:>3}  violations {tally['violations']}")
