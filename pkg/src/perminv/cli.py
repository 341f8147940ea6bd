"""Command-line front end.

    perminv certify --family cyclic:4 --json
    perminv molien --n 4 --gens "(1 2 3 4)"
    perminv hilbert --family symmetric:3 --max-degree 4

Exit codes: 0 ok, 1 usage error, 2 cap exceeded, 3 internal inconsistency.
"""
from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass
from math import factorial
from typing import Sequence

from .certify import (
    RuleContradiction,
    analyze,
    certify_non_cm_char2,
    gorenstein_status_char0,
    verdict_other_characteristic,
)
from .molien import MolienInconsistency, burnside_count, molien_series
from .orbits import (
    DEFAULT_ENUM_CAP,
    EnumerationCapExceeded,
    gobel_generators,
    orbit_count,
)
from .perm import (
    DEFAULT_CLOSURE_CAP,
    ClosureCapExceeded,
    MixedDegrees,
    PermGroup,
    Permutation,
    PermutationError,
    generate_group,
    parse_permutation,
)
from .series import render, series_coefficients

COMMANDS = ("analyze", "molien", "hilbert", "gobel", "orbit-dim", "certify")
FAMILIES = ("cyclic", "symmetric", "alternating", "dihedral", "klein")


class UsageError(ValueError):
    pass


@dataclass(frozen=True)
class GroupSpec:
    family: str | None = None
    n: int | None = None
    gens: tuple[str, ...] = ()

    def generators(self) -> tuple[int, list[Permutation]]:
        if self.family is None:
            return self.n, [parse_permutation(g, self.n) for g in self.gens]
        return family_generators(self.family, self.n)


@dataclass
class RunConfig:
    max_degree: int = 12
    closure_cap: int = DEFAULT_CLOSURE_CAP
    enumeration_cap: int = DEFAULT_ENUM_CAP
    output: str = "text"
    characteristic: int = 2

    def __post_init__(self) -> None:
        for name in ("closure_cap", "enumeration_cap"):
            if getattr(self, name) < 1:
                raise UsageError(f"--{name.replace('_', '-')} must be positive")
        if self.max_degree < 0:
            raise UsageError("--max-degree must be nonnegative")


def family_generators(family: str, n: int) -> tuple[int, list[Permutation]]:
    """Generators for a named family; orders are n, n!, n!/2, 2n and 4."""
    if family == "cyclic":
        return n, [Permutation.from_cycles([range(1, n + 1)], n)]
    if family == "symmetric":
        if n == 1:
            return n, []
        return n, [
            Permutation.from_cycles([(1, 2)], n),
            Permutation.from_cycles([range(1, n + 1)], n),
        ]
    if family == "alternating":
        long = range(1, n + 1) if n % 2 else range(2, n + 1)
        return n, [
            Permutation.from_cycles([(1, 2, 3)], n),
            Permutation.from_cycles([long], n),
        ]
    if family == "dihedral":
        reflection = Permutation(tuple(n - 1 - i for i in range(n)))  # i -> n+1-i
        return n, [Permutation.from_cycles([range(1, n + 1)], n), reflection]
    if family == "klein":
        return 4, [
            Permutation.from_cycles([(1, 2), (3, 4)], 4),
            Permutation.from_cycles([(1, 3), (2, 4)], 4),
        ]
    raise UsageError(f"--family: unknown family {family!r}")


def expected_order(family: str, n: int) -> int:
    return {
        "cyclic": n,
        "symmetric": factorial(n),
        "alternating": factorial(n) // 2,
        "dihedral": 2 * n,
        "klein": 4,
    }[family]


_MIN_DEGREE = {"cyclic": 1, "symmetric": 1, "alternating": 3, "dihedral": 3, "klein": 4}


def parse_family(text: str) -> tuple[str, int]:
    name, _, arg = text.partition(":")
    name = name.strip().lower()
    if name not in FAMILIES:
        raise UsageError(f"--family: unknown family {name!r} (choose from {', '.join(FAMILIES)})")
    if name == "klein":
        if arg and arg.strip() != "4":
            raise UsageError("--family: klein is fixed at 4 points")
        return name, 4
    try:
        n = int(arg)
    except ValueError:
        raise UsageError(f"--family: expected NAME:N, got {text!r}") from None
    if n < _MIN_DEGREE[name]:
        raise UsageError(f"--family: {name} needs N >= {_MIN_DEGREE[name]}, got {n}")
    return name, n


def parse_group_spec(args: argparse.Namespace) -> GroupSpec:
    if args.family is not None:
        if args.n is not None or args.gens is not None:
            raise UsageError("--family is mutually exclusive with --n/--gens")
        name, n = parse_family(args.family)
        return GroupSpec(family=name, n=n)
    if args.n is None:
        raise UsageError("--n: give either --family NAME:N or --n N --gens STR")
    if args.n < 1:
        raise UsageError(f"--n must be positive, got {args.n}")
    gens = args.gens if args.gens is not None else ""
    # one permutation per ';'-separated chunk
    parts = tuple(g for g in (s.strip() for s in gens.split(";")) if g)
    return GroupSpec(n=args.n, gens=parts)


def build_group(spec: GroupSpec, config: RunConfig) -> PermGroup:
    n, gens = spec.generators()
    G = generate_group(gens, n=n, cap=config.closure_cap)
    if spec.family is not None and G.order != expected_order(spec.family, n):
        raise RuleContradiction(
            f"{spec.family}({n}) generated order {G.order}, expected {expected_order(spec.family, n)}"
        )
    return G


def _denominator_text(degrees) -> str:
    return "".join(f"(1 - l^{d})" if d > 1 else "(1 - l)" for d in degrees)


def _molien_text(res) -> list[str]:
    terms = []
    for m, ct in res.raw_terms:
        factors = {}
        for d in ct:
            factors[d] = factors.get(d, 0) + 1
        den = "".join(
            ("(1 - l)" if d == 1 else f"(1 - l^{d})") + (f"^{k}" if k > 1 else "")
            for d, k in sorted(factors.items())
        )
        terms.append(f"{m}/{den}")
    return [
        f"H(l) = 1/{res.group_order} * ( " + " + ".join(terms) + " )",
        f"     = ({render(res.numerator)}) / {_denominator_text(res.canonical.degrees)}",
        f"h(1) = {res.numerator_at_one}",
    ]


def _payload(command: str, G: PermGroup, config: RunConfig) -> tuple[dict, list[str]]:
    if command == "molien":
        res = molien_series(G)
        return res.to_json(), _molien_text(res)

    if command == "hilbert":
        res = molien_series(G)
        coeffs = series_coefficients(res.canonical, config.max_degree)
        return (
            {"max_degree": config.max_degree, "coefficients": coeffs},
            [f"dim K[V]^G_{d} = {c}" for d, c in enumerate(coeffs)],
        )

    if command == "orbit-dim":
        res = molien_series(G)
        molien = series_coefficients(res.canonical, config.max_degree)
        rows = []
        for d in range(config.max_degree + 1):
            rows.append(
                {
                    "degree": d,
                    "orbit_count": orbit_count(G, d, config.enumeration_cap),
                    "burnside": burnside_count(G, d),
                    "molien": molien[d],
                }
            )
        text = [
            f"d={r['degree']:>3}  orbits={r['orbit_count']}  burnside={r['burnside']}  molien={r['molien']}"
            for r in rows
        ]
        return {"dimensions": rows}, text

    if command == "gobel":
        orbs = gobel_generators(G, config.enumeration_cap)
        data = [o.to_json() for o in orbs]
        text = [
            f"deg {o.degree}: O({o.representative})  [orbit size {o.size}]" for o in orbs
        ]
        return {"generators": data, "count": len(data)}, text

    if command == "analyze":
        report = analyze(G)
        status = gorenstein_status_char0(G, report)
        data = report.to_json()
        data["gorenstein_char0"] = status.to_json()
        text = [
            f"degree n = {report.n}, |G| = {report.group_order}",
            f"odd permutation: {str(report.has_odd_permutation).lower()}",
            "transpositions: " + (", ".join(map(str, report.transpositions)) or "none"),
            f"G in SL(V): char 0 {str(report.in_sl_char0).lower()}, char 2 true",
            *_molien_text(report.molien),
            f"palindromic: {str(report.palindromic).lower()}",
            f"char 0: {status.status.value} via {status.via}",
        ]
        for c in status.cross_checks:
            verdict = "agrees" if c.agrees else "skipped" if not c.applies else "DISAGREES"
            text.append(f"  {c.rule}: {verdict} ({c.note})")
        return data, text

    if command == "certify":
        p = config.characteristic
        if p != 2:
            verdict = verdict_other_characteristic(G, p)
            return {"characteristic": p, "verdict": verdict}, [f"p = {p}: {verdict}"]
        cert = certify_non_cm_char2(G)
        text = [f"conclusion: {cert.conclusion.value}"]
        if cert.reason:
            text.append(f"reason: {cert.reason}")
        for i, s in enumerate(cert.steps, 1):
            text.append(f"{i}. [{s.rule}] {s.statement}")
            for k, v in s.evidence.items():
                if isinstance(v, bool):
                    v = str(v).lower()
                text.append(f"     {k}: {v}")
        return cert.to_json(), text

    raise UsageError(f"unknown command {command!r}")


def render_json(data: dict) -> str:
    return json.dumps(data, indent=2) + "\n"


def run(command: str, spec: GroupSpec, config: RunConfig) -> str:
    G = build_group(spec, config)
    data, text = _payload(command, G, config)
    if config.output == "json":
        return render_json(data)
    return "\n".join(text) + "\n"


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def make_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    g = common.add_argument_group("group")
    g.add_argument("--family", metavar="NAME:N", help=f"one of {', '.join(FAMILIES)}")
    g.add_argument("--n", type=int, help="degree for --gens")
    g.add_argument(
        "--gens",
        metavar="STR",
        help='generators in cycle notation, separated by ";", e.g. "(1 2);(1 2 3)"',
    )
    common.add_argument("--max-degree", type=int, default=12)
    common.add_argument("--closure-cap", type=int, default=DEFAULT_CLOSURE_CAP)
    common.add_argument("--enum-cap", type=int, default=DEFAULT_ENUM_CAP)
    common.add_argument("--json", action="store_true", help="emit JSON")

    parser = _Parser(prog="perminv", description="Invariant rings of permutation groups.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)
    for name in COMMANDS:
        sp = sub.add_parser(name, parents=[common])
        if name == "certify":
            sp.add_argument(
                "--char", type=int, default=2, dest="characteristic",
                help="characteristic (default 2); others get the nonmodular verdict only",
            )
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    try:
        args = make_parser().parse_args(argv)
        spec = parse_group_spec(args)
        config = RunConfig(
            max_degree=args.max_degree,
            closure_cap=args.closure_cap,
            enumeration_cap=args.enum_cap,
            output="json" if args.json else "text",
            characteristic=getattr(args, "characteristic", 2),
        )
        out = run(args.command, spec, config)
    except (UsageError, PermutationError, MixedDegrees) as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 1
    except (ClosureCapExceeded, EnumerationCapExceeded) as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 2
    except (RuleContradiction, MolienInconsistency) as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 3
    sys.stdout.write(out)
    return 0


if __name__ == "__main__":
    sys.exit(main())
