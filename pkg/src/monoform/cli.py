"""Command-line front end.

Every command prints one JSON report on stdout. Exit status is 0 on success,
1 when the computation fails (the report then carries an ``error`` object),
and 2 for usage errors.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Sequence

from . import __version__
from .core import MonomialIdeal, alpha
from .decomp import (
    ass_primes,
    big_height,
    combined_primary_components,
    family_power,
    irreducible_decomposition,
    max_primes,
)
from .errors import IdealParseError, MonoformError
from .invariants import (
    BalancedPartition,
    alpha_sequence,
    bounds_report,
    max_ideal_power,
    naive_waldschmidt,
    naive_waldschmidt_beta,
    naive_waldschmidt_formula,
    waldschmidt,
)
from .poly import hrep_vertices_2d, ip_hrep, newton_vrep, sp_spec
from .scan import SHAPES, run_scan

TOOL = "monoform"


@dataclass(frozen=True)
class IdealSource:
    text: str
    nvars_override: int | None = None


def parse_ideal(src: IdealSource | str, nvars_override: int | None = None) -> MonomialIdeal:
    """Parse ``monomial (',' monomial)*`` where a monomial is ``x<i>[^e] * ...``."""
    if isinstance(src, IdealSource):
        text, nvars_override = src.text, src.nvars_override
    else:
        text = src
    monomials: list[dict[int, int]] = []
    pos = 0
    n = len(text)

    def skip_ws():
        nonlocal pos
        while pos < n and text[pos].isspace():
            pos += 1

    def read_uint(what: str) -> int:
        nonlocal pos
        start = pos
        while pos < n and text[pos].isdigit():
            pos += 1
        if start == pos:
            raise IdealParseError(f"expected {what}", start)
        return int(text[start:pos])

    skip_ws()
    if pos == n:
        raise IdealParseError("empty ideal", 0)
    while True:
        mono: dict[int, int] = {}
        while True:
            skip_ws()
            if pos >= n or text[pos] != "x":
                raise IdealParseError("expected variable 'x<index>'", pos)
            pos += 1
            at = pos
            index = read_uint("variable index")
            if index < 1:
                raise IdealParseError("variable index must be >= 1", at)
            skip_ws()
            exp = 1
            if pos < n and text[pos] == "^":
                pos += 1
                skip_ws()
                exp = read_uint("exponent")
            mono[index] = mono.get(index, 0) + exp
            skip_ws()
            if pos < n and text[pos] == "*":
                pos += 1
                continue
            break
        monomials.append(mono)
        if pos == n:
            break
        if text[pos] != ",":
            raise IdealParseError(f"unexpected character {text[pos]!r}", pos)
        pos += 1

    inferred = max(i for m in monomials for i in m)
    nvars = inferred
    if nvars_override is not None:
        if nvars_override < inferred:
            raise IdealParseError(f"nvars override {nvars_override} is below the largest index {inferred}", 0)
        nvars = nvars_override
    gens = [[m.get(i + 1, 0) for i in range(nvars)] for m in monomials]
    return MonomialIdeal.from_generators(nvars, gens)


# --- serialization -------------------------------------------------------

def rat(x: Fraction | int) -> str:
    x = Fraction(x)
    return f"{x.numerator}/{x.denominator}"


def vec(v: Sequence) -> list:
    return [int(e) for e in v]


def ideal_json(I: MonomialIdeal) -> dict:
    return {"nvars": I.nvars, "generators": [vec(g) for g in I.gens], "text": I.to_text()}


def prime_json(P) -> list[int]:
    return [i + 1 for i in P.support]


def vrep_json(V) -> dict:
    return {"nvars": V.nvars, "generators": [vec(g) for g in V.generators]}


def hrep_json(H) -> dict:
    return {"nvars": H.nvars, "rows": [[rat(c) for c in r] for r in H.rows]}


def component_json(c) -> dict:
    return {
        "support": [i + 1 for i, _ in c.powers],
        "exponents": [a for _, a in c.powers],
        "text": str(c),
    }


# --- commands ------------------------------------------------------------

def cmd_decompose(I: MonomialIdeal, args) -> dict:
    D = irreducible_decomposition(I)
    return {
        "components": [component_json(c) for c in D],
        "combined_primary": [
            {"prime": prime_json(P), "ideal": ideal_json(Q)}
            for P, Q in combined_primary_components(I).items()
        ],
    }


def cmd_ass(I: MonomialIdeal, args) -> dict:
    return {
        "ass": [prime_json(P) for P in ass_primes(I)],
        "max": [prime_json(P) for P in max_primes(I)],
        "big_height": big_height(I),
    }


def cmd_power(I: MonomialIdeal, args) -> dict:
    P = family_power(I, args.kind, args.m)
    return {"kind": args.kind, "m": args.m, "ideal": ideal_json(P)}


def cmd_polyhedron(I: MonomialIdeal, args) -> dict:
    if args.kind == "newton":
        return {"kind": "newton", "vrep": vrep_json(newton_vrep(I))}
    if args.kind == "symbolic":
        return {"kind": "symbolic", "components": [vrep_json(V) for V in sp_spec(I).components]}
    H = ip_hrep(I)
    out = {"kind": "irreducible", "hrep": hrep_json(H)}
    if H.nvars == 2:
        out["vertices"] = [[rat(x) for x in p] for p in hrep_vertices_2d(H)]
    return out


def cmd_alpha(I: MonomialIdeal, args) -> dict:
    return {"value": rat(alpha(I))}


def cmd_waldschmidt(I: MonomialIdeal, args) -> dict:
    return {"value": rat(waldschmidt(I))}


def cmd_naive(I: MonomialIdeal, args) -> dict:
    return {"value": rat(naive_waldschmidt(I))}


def cmd_bounds(I: MonomialIdeal, args) -> dict:
    r = bounds_report(I)
    out = {}
    for key, value in vars(r).items():
        out[key] = rat(value) if isinstance(value, Fraction) else value
    return out


def cmd_sequence(I: MonomialIdeal, args) -> dict:
    terms = alpha_sequence(I, args.kind, args.max)
    limit = {"ordinary": lambda: alpha(I), "symbolic": lambda: waldschmidt(I),
             "irreducible": lambda: naive_waldschmidt(I)}[args.kind]()
    return {"kind": args.kind, "max": args.max, "terms": [rat(t) for t in terms], "limit": rat(limit)}


def cmd_scan(args) -> tuple[dict, dict, int]:
    rep = run_scan(args.count, args.seed, args.shape, jobs=args.jobs)
    result = {
        "asserted": rep.asserted,
        "conjectures": rep.conjectures,
        "violations": rep.violations,
        "conjecture_violations": rep.conjecture_violations,
        "ok": rep.ok,
    }
    return {"count": args.count, "seed": args.seed, "shape": args.shape}, result, 0 if rep.ok else 1


def cmd_max_ideal_formula(args) -> tuple[dict, dict, int]:
    n, d = args.n, args.d
    bp = BalancedPartition.of(n, d)
    value = naive_waldschmidt_formula(n, d)
    beta = naive_waldschmidt_beta(n, d)
    result = {
        "value": rat(value),
        "k": bp.k,
        "balanced_partition": list(bp.parts()),
        "beta": rat(beta),
        "beta_agrees": beta == value,
    }
    if not args.skip_lp:
        lp = naive_waldschmidt(max_ideal_power(n, d))
        result["lp_value"] = rat(lp)
        result["lp_agrees"] = lp == value
    ok = result["beta_agrees"] and result.get("lp_agrees", True)
    return {"n": n, "d": d}, result, 0 if ok else 1


IDEAL_COMMANDS = {
    "decompose": (cmd_decompose, "irreducible and combined primary decompositions"),
    "ass": (cmd_ass, "associated primes, maximal primes and big-height"),
    "power": (cmd_power, "generators of an ordinary, symbolic or irreducible power"),
    "polyhedron": (cmd_polyhedron, "Newton / symbolic / irreducible polyhedron"),
    "alpha": (cmd_alpha, "initial degree"),
    "waldschmidt": (cmd_waldschmidt, "Waldschmidt constant (LP over SP)"),
    "naive-waldschmidt": (cmd_naive, "naive Waldschmidt constant (LP over IP)"),
    "bounds": (cmd_bounds, "all invariants and lower bounds"),
    "sequence": (cmd_sequence, "alpha(I_m)/m for m = 1..max"),
}


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--pretty", action="store_true", help="human-readable output instead of JSON")
    common.add_argument("--no-timing", action="store_true", help="omit the timing field")

    parser = argparse.ArgumentParser(prog=TOOL, description="Exact invariants of monomial ideals.")
    parser.add_argument("--version", action="version", version=f"{TOOL} {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    for name, (_, help_text) in IDEAL_COMMANDS.items():
        p = sub.add_parser(name, parents=[common], help=help_text)
        p.add_argument("ideal", help='generators, e.g. "x1^2, x1*x2, x2^2"')
        p.add_argument("--nvars", type=int, help="ambient number of variables")
        if name == "power":
            p.add_argument("--kind", choices=["ordinary", "symbolic", "irreducible"], default="ordinary")
            p.add_argument("--m", type=int, required=True)
        elif name == "polyhedron":
            p.add_argument("--kind", choices=["newton", "symbolic", "irreducible"], default="newton")
        elif name == "sequence":
            p.add_argument("--kind", choices=["ordinary", "symbolic", "irreducible"], default="irreducible")
            p.add_argument("--max", type=int, default=5)

    p = sub.add_parser("scan", parents=[common], help="randomized property and conjecture scan")
    p.add_argument("--count", type=int, default=100)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--shape", choices=SHAPES, default="any")
    p.add_argument("--jobs", type=int, default=1)

    p = sub.add_parser("max-ideal-formula", parents=[common],
                       help="closed-form naive Waldschmidt constant of (x1..xn)^d")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--skip-lp", action="store_true", help="skip the LP cross-check")
    return parser


def _pretty(obj: Any, indent: int = 0) -> list[str]:
    pad = "  " * indent
    lines = []
    if isinstance(obj, dict):
        for k, v in obj.items():
            if isinstance(v, (dict, list)) and v:
                lines.append(f"{pad}{k}:")
                lines.extend(_pretty(v, indent + 1))
            else:
                lines.append(f"{pad}{k}: {json.dumps(v) if isinstance(v, (dict, list)) else v}")
    elif isinstance(obj, list):
        for v in obj:
            if isinstance(v, dict):
                lines.append(f"{pad}-")
                lines.extend(_pretty(v, indent + 1))
            else:
                lines.append(f"{pad}- {json.dumps(v) if isinstance(v, list) else v}")
    else:
        lines.append(f"{pad}{obj}")
    return lines


def render(report: dict, pretty: bool) -> str:
    if pretty:
        return "\n".join(_pretty(report))
    return json.dumps(report, separators=(",", ":"))


def run(argv: Sequence[str] | None = None) -> tuple[dict, int]:
    """Parse ``argv`` and execute; returns the report and the exit code."""
    return execute(build_parser().parse_args(argv))


def execute(args: argparse.Namespace) -> tuple[dict, int]:
    report: dict[str, Any] = {"tool": TOOL, "version": __version__, "command": args.command}
    start = time.perf_counter()
    code = 0
    try:
        if args.command == "scan":
            report["input"], report["result"], code = cmd_scan(args)
        elif args.command == "max-ideal-formula":
            report["input"], report["result"], code = cmd_max_ideal_formula(args)
        else:
            report["input"] = {"source": args.ideal}
            I = parse_ideal(IdealSource(args.ideal, args.nvars))
            report["input"] = {"source": args.ideal, **ideal_json(I)}
            report["result"] = IDEAL_COMMANDS[args.command][0](I, args)
    except MonoformError as exc:
        report["error"] = exc.to_dict()
        code = 1
    except (ValueError, ArithmeticError) as exc:
        report["error"] = {"kind": "error", "message": str(exc)}
        code = 1
    if not args.no_timing:
        report["timing_seconds"] = round(time.perf_counter() - start, 6)
    return report, code


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    report, code = execute(args)
    print(render(report, args.pretty))
    return code


if __name__ == "__main__":
    sys.exit(main())
