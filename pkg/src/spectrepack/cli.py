"""Command-line front end.

Exit codes are a stable contract: 0 success, 1 soundness or oracle failure,
2 input error, 3 guard refusal.  All output is deterministic: identical
invocations (including seeds) produce byte-identical JSON and CSV.
"""

from __future__ import annotations

import argparse
import os
import sys

from . import __version__
from .errors import (
    DomainError,
    GuardRefusal,
    NotApplicableError,
    ParseError,
    SpectrePackError,
    ValidationError,
)
from .generators import CAGE_NAMES, generate, load_cage, parse_spec
from .graphs import Graph, from_edge_list, parse_graph6, to_graph6
from .report import CSV_HEADER, SCHEMA, build_report, dumps_canonical, verdict_csv_row
from .rng import SplitMix64, derive_seed
from .selftest import SUITES, run_suites
from .theorems import THEOREM_IDS, GraphAnalysis, run_check

_GRAPH6_EXTENSIONS = (".g6", ".graph6")


def _parse_threads() -> int:
    """Validate SPECTRE_THREADS (0 = auto).  Execution is sequential, which
    respects any cap; the variable is validated so typos fail loudly."""
    raw = os.environ.get("SPECTRE_THREADS", "0")
    try:
        value = int(raw)
    except ValueError:
        raise DomainError(f"SPECTRE_THREADS must be an integer, got {raw!r}") from None
    if value < 0:
        raise DomainError("SPECTRE_THREADS must be >= 0")
    return value


def _int_list(text: str) -> list[int]:
    return [int(x) for x in text.split(",") if x]


def _float_list(text: str) -> list[float]:
    return [float(x) for x in text.split(",") if x]


def _order_range(text: str) -> tuple[int, int]:
    if ".." in text:
        lo, _, hi = text.partition("..")
        return int(lo), int(hi)
    n = int(text)
    return n, n


def _load_graph(source: str) -> tuple[Graph, str, int | None]:
    """Resolve an analyze input: existing file, else generator spec."""
    looks_like_path = os.sep in source or source.lower().endswith(_GRAPH6_EXTENSIONS)
    if os.path.exists(source):
        with open(source, "r", encoding="ascii") as fh:
            data = fh.read()
        if source.lower().endswith(_GRAPH6_EXTENSIONS):
            return parse_graph6(data), source, None
        return _sniff_graph(data), source, None
    if looks_like_path:
        raise FileNotFoundError(f"no such file: {source}")
    spec = parse_spec(source)
    return generate(spec), spec.to_string(), spec.seed


def _sniff_graph(data: str) -> Graph:
    for raw in data.splitlines():
        line = raw.strip()
        if not line:
            continue
        if line.startswith("#") or line.startswith("n ") or " " in line:
            return from_edge_list(data)
        return parse_graph6(data)
    return from_edge_list(data)  # empty input: empty graph


def _write_output(text: str, out_path: str | None) -> None:
    if out_path is None:
        sys.stdout.write(text)
    else:
        with open(out_path, "w", encoding="ascii") as fh:
            fh.write(text)


def cmd_analyze(args) -> int:
    g, source, seed = _load_graph(args.input)
    report = build_report(
        g,
        source=source,
        ks=args.k,
        a_values=args.a,
        full_spectrum=args.spectrum == "full",
        force_tau=args.exact,
        seed=seed,
    )
    _write_output(dumps_canonical(report, pretty=not args.compact) + "\n", args.out)
    return 0


def _verify_instances(args):
    """Yield (spec_string, graph, trial_rng) for the requested grid."""
    if args.family == "cages":
        for name in CAGE_NAMES:
            yield name, load_cage(name), SplitMix64(0)
        return
    lo, hi = args.n
    if args.family in ("complete", "cycle"):
        start = max(lo, 3 if args.family == "cycle" else 1)
        for n in range(start, hi + 1):
            spec = f"{args.family}:n={n}"
            yield spec, generate(parse_spec(spec)), SplitMix64(0)
        return
    if args.family == "random_regular":
        if args.d is None:
            raise DomainError("--family random_regular requires --d")
        orders = [n for n in range(lo, hi + 1) if n * args.d % 2 == 0 and n > args.d]
    else:
        if args.delta is None:
            raise DomainError("--family random_min_degree requires --delta")
        orders = [n for n in range(lo, hi + 1) if n > args.delta]
    if not orders:
        raise DomainError("no feasible order in the requested range")
    for trial in range(args.trials):
        rng = SplitMix64(derive_seed(args.seed, trial))
        n = orders[rng.randbelow(len(orders))]
        gseed = rng.next_u64()
        if args.family == "random_regular":
            spec = f"random_regular:d={args.d},n={n},seed={gseed}"
        else:
            spec = f"random_min_degree:delta={args.delta},n={n},seed={gseed}"
        yield spec, generate(parse_spec(spec)), rng


def cmd_verify(args) -> int:
    csv_lines = [CSV_HEADER]
    detail_rows = []
    any_unsound = False
    for spec, g, rng in _verify_instances(args):
        ana = GraphAnalysis(g)
        verdict = run_check(args.theorem, ana, args.k, args.a, args.b,
                            verify=True, rng=rng)
        csv_lines.append(verdict_csv_row(spec, g, verdict))
        detail_rows.append({
            "spec": spec,
            "graph6": to_graph6(g),
            "verdict": verdict.to_json_dict(),
        })
        if not verdict.sound:
            any_unsound = True
    _write_output("\n".join(csv_lines) + "\n", args.out)
    if args.json_out:
        detail = {
            "schema": SCHEMA,
            "config": {
                "family": args.family,
                "n_min": args.n[0],
                "n_max": args.n[1],
                "d": args.d,
                "delta": args.delta,
                "k": args.k,
                "a": args.a,
                "b": args.b,
                "theorem": args.theorem,
                "trials": args.trials,
                "master_seed": args.seed,
                "tool_version": __version__,
            },
            "rows": detail_rows,
        }
        with open(args.json_out, "w", encoding="ascii") as fh:
            fh.write(dumps_canonical(detail, pretty=True) + "\n")
    rows = len(csv_lines) - 1
    print(f"verified {rows} instances, unsound: {int(any_unsound)}", file=sys.stderr)
    return 1 if any_unsound else 0


def cmd_oracle_test(args) -> int:
    names = list(SUITES) if "all" in args.suite else args.suite
    results = run_suites(names, args.trials, args.seed)
    failed = False
    for result in results:
        status = "pass" if result.passed else "FAIL"
        print(f"{result.name}: {result.trials} trials, {len(result.failures)} failures [{status}]")
        for line in result.failures[:10]:
            print(f"  {line}")
        failed = failed or not result.passed
    return 1 if failed else 0


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="spectre-pack",
        description=(
            "Analyze graphs against girth-aware spectral certificates for "
            "edge-connectivity and spanning-tree packing."
        ),
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    analyze = sub.add_parser("analyze", help="analyze one graph and emit a JSON report")
    analyze.add_argument("input", help="edge-list/graph6 file or generator spec (e.g. petersen, random_regular:n=50,d=6,seed=42)")
    analyze.add_argument("--k", type=_int_list, default=[2], help="comma-separated k values (default 2)")
    analyze.add_argument("--a", type=_float_list, default=[0.0], help="comma-separated diagonal coefficients (default 0)")
    analyze.add_argument("--exact", action="store_true", help="force the exact packing number even for large n")
    analyze.add_argument("--spectrum", choices=("summary", "full"), default="summary")
    analyze.add_argument("--compact", action="store_true", help="compact JSON instead of pretty")
    analyze.add_argument("--out", default=None, help="write the report here instead of stdout")
    analyze.set_defaults(func=cmd_analyze)

    verify = sub.add_parser("verify", help="sweep a family grid and emit verdict CSV")
    verify.add_argument("--family", required=True,
                        choices=("random_regular", "random_min_degree", "cages", "complete", "cycle"))
    verify.add_argument("--n", type=_order_range, default=(4, 12), help="order or range lo..hi")
    verify.add_argument("--d", type=int, default=None, help="degree for random_regular")
    verify.add_argument("--delta", type=int, default=None, help="degree floor for random_min_degree")
    verify.add_argument("--k", type=int, default=2)
    verify.add_argument("--a", type=float, default=0.0)
    verify.add_argument("--b", type=float, default=1.0)
    verify.add_argument("--theorem", choices=THEOREM_IDS, default="MAIN2")
    verify.add_argument("--trials", type=int, default=100)
    verify.add_argument("--seed", type=int, default=0)
    verify.add_argument("--out", default=None, help="write CSV here instead of stdout")
    verify.add_argument("--json-out", default=None, help="write JSON detail here")
    verify.set_defaults(func=cmd_verify)

    oracle = sub.add_parser("oracle-test", help="run implementation-vs-oracle suites")
    oracle.add_argument("--suite", action="append", choices=(*SUITES, "all"), default=None)
    oracle.add_argument("--trials", type=int, default=50)
    oracle.add_argument("--seed", type=int, default=0)
    oracle.set_defaults(func=cmd_oracle_test)
    return parser


def main(argv=None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    if getattr(args, "suite", None) is None and args.command == "oracle-test":
        args.suite = ["all"]
    try:
        _parse_threads()
        return args.func(args)
    except GuardRefusal as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except (ParseError, ValidationError, DomainError, NotApplicableError,
            FileNotFoundError, IsADirectoryError, PermissionError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except SpectrePackError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
