"""Exact invariants of monomial ideals: decompositions, power families,
Newton/symbolic/irreducible polyhedra and Waldschmidt-type constants."""

__version__ = "0.1.0"

from .core import (  # noqa: E402
    MonomialIdeal,
    alpha,
    contains_monomial,
    ideal_contains,
    intersect,
    minimalize,
    multiply,
    power,
)
from .decomp import (  # noqa: E402
    IrreducibleComponent,
    IrreducibleDecomposition,
    MonomialPrime,
    ass_primes,
    big_height,
    combined_primary_components,
    irreducible_decomposition,
    irreducible_power,
    irredundantize,
    max_primes,
    symbolic_power,
)
from .invariants import (  # noqa: E402
    BoundsReport,
    bounds_report,
    naive_waldschmidt,
    naive_waldschmidt_max_ideal_power,
    waldschmidt,
)

__all__ = [
    "MonomialIdeal", "alpha", "contains_monomial", "ideal_contains", "intersect", "minimalize",
    "multiply", "power",
    "IrreducibleComponent", "IrreducibleDecomposition", "MonomialPrime", "ass_primes", "big_height",
    "combined_primary_components", "irreducible_decomposition", "irreducible_power",
    "irredundantize", "max_primes", "symbolic_power",
    "BoundsReport", "bounds_report", "naive_waldschmidt", "naive_waldschmidt_max_ideal_power",
    "waldschmidt",
]
