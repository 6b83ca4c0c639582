"""Command-line surface: counting, enumeration, verification, rendering.

One binary, subcommand style.  All commands are deterministic for fixed
inputs; streams are one JSON record per line.  Exit codes: 0 success,
1 verification mismatch, 2 usage or malformed input, 3 enumeration cap
exceeded.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from typing import Iterator, Sequence

from . import counting, sieving, torsion
from .arcs import PeriodicDiagram
from .config import DEFAULT_CAPS, CapExceeded
from .render import render_torsion_pair
from .series import PowerSeries, series_P, series_torsion
from .torsion import TorsionPair, WingDecomposition


def _input_lines(arg: str | None) -> Iterator[str]:
    if arg is None or arg == "-":
        for line in sys.stdin:
            if line.strip():
                yield line
    else:
        yield arg


def _parse_diagram(data: dict) -> PeriodicDiagram:
    return PeriodicDiagram.from_arcs(data["rank"], (tuple(a) for a in data["orbits"]))


def cmd_count(args: argparse.Namespace) -> int:
    n = args.n
    if args.refined:
        table = counting.refined_table(n)
        if args.format == "json":
            print(json.dumps(
                [{"n": n, "k": k, "l": l, "m": m, "count": c} for (k, l, m), c in table.items()],
                separators=(",", ":"),
            ))
        else:
            print("n,k,l,m,count")
            for (k, l, m), c in table.items():
                print(f"{n},{k},{l},{m},{c}")
    else:
        total = counting.torsion_count(n)
        if args.format == "json":
            print(json.dumps({"n": n, "count": total}, separators=(",", ":")))
        elif args.format == "csv":
            print("n,count")
            print(f"{n},{total}")
        else:
            print(total)
    return 0


def cmd_enumerate(args: argparse.Namespace) -> int:
    for pair in torsion.torsion_pairs(args.n, cap=args.structured_cap):
        print(pair.to_json())
    return 0


def cmd_decompose(args: argparse.Namespace) -> int:
    for line in _input_lines(args.diagram):
        data = json.loads(line)
        diagram = _parse_diagram(data)
        if args.n is not None and diagram.rank != args.n:
            raise ValueError(f"diagram rank {diagram.rank} does not match --n {args.n}")
        wings = torsion.decompose(diagram)
        record = json.loads(wings.to_json())
        if "finite_side" in data:
            record = {"rank": record["rank"], "finite_side": data["finite_side"],
                      "pairs": record["pairs"]}
        print(json.dumps(record, separators=(",", ":")))
    return 0


def cmd_compose(args: argparse.Namespace) -> int:
    for line in _input_lines(args.wings):
        data = json.loads(line)
        wings = WingDecomposition.from_json(line)
        diagram = torsion.compose(wings)
        if "finite_side" in data:
            print(TorsionPair(diagram.rank, diagram, data["finite_side"]).to_json())
        else:
            print(diagram.to_json())
    return 0


def cmd_perp(args: argparse.Namespace) -> int:
    line = next(_input_lines(args.diagram))
    diagram = _parse_diagram(json.loads(line))
    if args.n is not None and diagram.rank != args.n:
        raise ValueError(f"diagram rank {diagram.rank} does not match --n {args.n}")
    if args.arc is not None:
        arc = (args.arc[0], args.arc[1])
        verdict = torsion.perp_contains(diagram, arc)
        print(json.dumps({"arc": list(arc), "in_perp": verdict}, separators=(",", ":")))
    else:
        print(torsion.perp_enumerate(diagram, args.max_length).to_json())
    return 0


def _print_series(series: PowerSeries, name: str, fmt: str) -> None:
    if fmt == "json":
        rows = [
            {"degree": k, "coefficient": str(series.coeffs[k])}
            for k in range(series.order + 1)
        ]
        print(json.dumps({"series": name, "coefficients": rows}, separators=(",", ":")))
    else:
        for k in range(series.order + 1):
            print(f"z^{k}: {series.coeffs[k]}")


def cmd_series(args: argparse.Namespace) -> int:
    if args.kind == "P":
        _print_series(series_P(args.order, cap=args.series_order), "P", args.format)
    else:
        _print_series(series_torsion(args.order, cap=args.series_order), "torsion", args.format)
    return 0


def cmd_sieve(args: argparse.Namespace) -> int:
    records = sieving.csp_verify(args.n, cap=args.structured_cap)
    if args.format == "json":
        print(sieving.csp_report_json(records))
    else:
        print("n,d,k,l,m,polyValue,fixedCount,match")
        for r in records:
            print(f"{r.n},{r.d},{r.k},{r.l},{r.m},{r.poly_value},{r.fixed_count},{r.match}")
    bad = [r for r in records if not r.match]
    if bad:
        print(f"sieving: {len(bad)} mismatching record(s)", file=sys.stderr)
        return 1
    return 0


def cmd_orbits(args: argparse.Namespace) -> int:
    n = args.n
    formula = torsion.orbit_count(n)
    rows = [("orbit count (Burnside formula)", formula)]
    ok = True
    if n <= args.structured_cap:
        direct = torsion.orbit_count_direct(n, cap=args.structured_cap)
        rows.append(("orbit count (direct partition)", direct))
        ok = formula == direct
    for label, value in rows:
        print(f"{label}: {value}")
    if args.refined:
        print("k,l,m,orbits")
        for (k, l, m), c in torsion.orbit_count_refined(n).items():
            print(f"{k},{l},{m},{c}")
    if not ok:
        print("orbits: formula and direct partition disagree", file=sys.stderr)
        return 1
    return 0


def cmd_render(args: argparse.Namespace) -> int:
    if args.pair == "-":
        text = sys.stdin.read()
    else:
        with open(args.pair, "r", encoding="utf-8") as fh:
            text = fh.read()
    pair = TorsionPair.from_json(text)
    if args.n is not None and pair.rank != args.n:
        raise ValueError(f"pair rank {pair.rank} does not match --n {args.n}")
    if not torsion.is_finite_half(pair.finite_half):
        raise ValueError("the given half is not a finite torsion half")
    svg = render_torsion_pair(pair)
    if args.out == "-":
        sys.stdout.write(svg)
    else:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(svg)
    return 0


def cmd_verify(args: argparse.Namespace) -> int:
    n = args.n
    workers = int(os.environ.get("CLUSTERTUBES_THREADS", "1"))
    checks: list[tuple[str, bool]] = []

    formula = counting.torsion_count(n)
    structured = None
    if n <= args.structured_cap:
        if n <= 6:
            structured = torsion.enumerate_structured(n, cap=args.structured_cap)
            count = len(structured)
        else:
            count = torsion.count_structured(n, cap=args.structured_cap, workers=workers)
        checks.append(("2 * |structured| == closed formula", 2 * count == formula))
    if n <= args.brute_cap:
        brute = torsion.enumerate_brute(n, cap=args.brute_cap)
        checks.append(("brute == structured (as sets)", brute == structured))
    series_total = series_torsion(n, 1, 1, 1, cap=max(n, DEFAULT_CAPS.series_order)).coeffs[n]
    checks.append(("series coefficient == closed formula", series_total == formula))
    checks.append((
        "refined formula sums to total",
        sum(counting.refined_table(n).values()) == formula,
    ))
    if n <= args.structured_cap:
        if structured is None:  # degraded mode beyond rank 6: spot checks only
            pool = torsion.sample_halves(n, 1000, seed=n)
        else:
            pool = structured
        round_trips = all(
            torsion.compose(torsion.decompose(X)) == X
            and torsion.from_pointed_cycle(torsion.to_pointed_cycle(X), n) == X
            for X in pool
        )
        label = "decompose/compose and pointed-cycle round trips"
        if structured is None:
            label += " (sampled)"
        checks.append((label, round_trips))
    if structured is not None:
        hist = torsion.statistics_histogram(n, cap=args.structured_cap)
        checks.append((
            "statistics histogram == refined formula",
            dict(hist) == counting.refined_table(n),
        ))
        burnside = torsion.orbit_count(n) == torsion.orbit_count_direct(n, cap=args.structured_cap)
        checks.append(("Burnside orbit count == direct partition", burnside))

    width = max(len(label) for label, _ in checks)
    for label, good in checks:
        print(f"{label:<{width}}  {'pass' if good else 'FAIL'}")

    if structured is not None:
        print()
        print("translation-invariance readings (count of tau^d-invariant pairs):")
        print("d,enumerated,count_at_rank_d,count_at_rank_n/d")
        for d in torsion._divisors(n):
            fixed = 2 * sum(1 for X in structured if X.tau(d) == X)
            print(f"{d},{fixed},{counting.torsion_count(d)},{counting.torsion_count(n // d)}")

    return 0 if all(good for _, good in checks) else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="clustertubes",
        description="Exact combinatorics of torsion pairs in cluster tubes.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_caps(p: argparse.ArgumentParser, brute: bool = False, structured: bool = False,
                 series: bool = False) -> None:
        if brute:
            p.add_argument("--brute-cap", type=int, default=DEFAULT_CAPS.brute_rank,
                           help="largest rank for subset brute force")
        if structured:
            p.add_argument("--structured-cap", type=int, default=DEFAULT_CAPS.structured_rank,
                           help="largest rank for grammar enumeration")
        if series:
            p.add_argument("--series-order", type=int, default=DEFAULT_CAPS.series_order,
                           help="largest allowed series truncation order")

    p = sub.add_parser("count", help="closed-form torsion pair counts")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--refined", action="store_true", help="full (k,l,m) table")
    p.add_argument("--format", choices=("text", "csv", "json"), default="text")
    p.set_defaults(func=cmd_count)

    p = sub.add_parser("enumerate", help="stream every torsion pair as JSON lines")
    p.add_argument("--n", type=int, required=True)
    add_caps(p, structured=True)
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("decompose", help="wing decomposition of finite halves")
    p.add_argument("--n", type=int, default=None)
    p.add_argument("--diagram", default=None,
                   help="diagram JSON (default: read JSON lines from stdin)")
    p.set_defaults(func=cmd_decompose)

    p = sub.add_parser("compose", help="rebuild finite halves from wing JSON")
    p.add_argument("--wings", default=None,
                   help="wing JSON (default: read JSON lines from stdin)")
    p.set_defaults(func=cmd_compose)

    p = sub.add_parser("perp", help="perpendicular membership / bounded listing")
    p.add_argument("--n", type=int, default=None)
    p.add_argument("--diagram", default=None, help="diagram JSON (default: stdin)")
    group = p.add_mutually_exclusive_group(required=True)
    group.add_argument("--arc", type=int, nargs=2, metavar=("I", "J"))
    group.add_argument("--max-length", type=int)
    p.set_defaults(func=cmd_perp)

    p = sub.add_parser("series", help="print generating function coefficients")
    p.add_argument("--order", type=int, default=8)
    p.add_argument("--kind", choices=("P", "torsion"), default="P")
    p.add_argument("--format", choices=("text", "json"), default="text")
    add_caps(p, series=True)
    p.set_defaults(func=cmd_series)

    p = sub.add_parser("sieve", help="verify the cyclic sieving identities")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--format", choices=("text", "json"), default="text")
    add_caps(p, structured=True)
    p.set_defaults(func=cmd_sieve)

    p = sub.add_parser("orbits", help="count translation orbits of torsion pairs")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--refined", action="store_true")
    add_caps(p, structured=True)
    p.set_defaults(func=cmd_orbits)

    p = sub.add_parser("verify", help="cross-check enumeration, formulas and bijections")
    p.add_argument("--n", type=int, required=True)
    add_caps(p, brute=True, structured=True)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("render", help="render a torsion pair to SVG")
    p.add_argument("--n", type=int, default=None)
    p.add_argument("--pair", required=True, help="path to a torsion-pair JSON file, or -")
    p.add_argument("--out", required=True, help="output SVG path, or -")
    p.set_defaults(func=cmd_render)

    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except CapExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except (ValueError, KeyError, TypeError, OSError, json.JSONDecodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
