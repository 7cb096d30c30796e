"""Command-line front end: ``circulant-codes <command> ...``.

Exit status: 0 when every requested check passes, 1 on a failed check,
2 on a usage or input error.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from dataclasses import dataclass
from typing import Optional

from . import bounds as bounds_mod
from .distance import (
    WeightClassRow,
    enumerator_string,
    min_distance,
    parse_enumerator,
    weight_distribution,
    weight_table,
)
from .gf2_core import (
    GeneratorVector,
    format_vector,
    is_graph_vector,
    paley_vector,
    parse_connection_set,
    parse_vector,
    vector_from_connection_set,
)
from .instances import BY_NAME, INSTANCES
from .search import classify, improve, Outcome

EXIT_OK, EXIT_CHECK_FAILED, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


@dataclass(frozen=True)
class RunReport:
    name: str
    alpha: GeneratorVector
    d: int
    classification: Optional[str]
    enumerator: Optional[str]
    wall_time: float


def _rows_text(rows) -> str:
    return "{" + ", ".join(str(j) for j in rows) + "}"


def _vector_from_args(args) -> GeneratorVector:
    given = [x for x in (args.vector, args.set, args.paley) if x is not None]
    if len(given) != 1:
        raise UsageError("give exactly one of --vector, --set, --paley")
    try:
        if args.vector is not None:
            return parse_vector(args.vector)
        if args.set is not None:
            return vector_from_connection_set(parse_connection_set(args.set))
        return paley_vector(args.paley)
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def _load_bounds(path: Optional[str]) -> bounds_mod.BoundsTable:
    if path is None:
        return bounds_mod.bundled_bounds()
    try:
        with open(path, "rb") as fh:
            return bounds_mod.load_bounds(fh)
    except (OSError, bounds_mod.BoundsError) as exc:
        raise UsageError(f"cannot load bounds from {path}: {exc}") from None


def _set_threads(args) -> None:
    if getattr(args, "threads", None):
        import numba

        if not 1 <= args.threads <= numba.config.NUMBA_NUM_THREADS:
            raise UsageError(f"--threads must be in 1..{numba.config.NUMBA_NUM_THREADS}")
        numba.set_num_threads(args.threads)


def cmd_gen(args, out) -> int:
    alpha = _vector_from_args(args)
    print(format_vector(alpha.bits), file=out)
    print(f"graph={str(is_graph_vector(alpha)).lower()}", file=out)
    return EXIT_OK


def _table_lines(table: list[WeightClassRow], fmt: str) -> list[str]:
    if fmt == "csv":
        return ["k,a_weight,rows"] + [
            f'{r.k},{r.a_weight},"{" ".join(map(str, r.rows))}"' for r in table
        ]
    return ["k s'_k rows"] + [f"{r.k} {r.a_weight} {_rows_text(r.rows)}" for r in table]


def cmd_mindist(args, out) -> int:
    alpha = _vector_from_args(args)
    start = time.perf_counter()
    result = min_distance(alpha, stop_below=args.stop_below)
    examined = len(result.per_weight_minima)
    if result.exact:
        table = weight_table(alpha, max(examined, min(args.table_upto, alpha.n)))
    else:
        # the early-abort scan stops mid-weight; show its partial row as found
        table = weight_table(alpha, examined - 1)
        k, t = result.per_weight_minima[-1]
        table.append(WeightClassRow(k, t, result.witness_rows))
    elapsed = time.perf_counter() - start
    for line in _table_lines(table, args.format):
        print(line, file=out)
    prefix = "d=" if result.exact else "d<="
    print(f"{prefix}{result.d}", file=out)
    print(f"witness={_rows_text(result.witness_rows)}", file=out)
    print(f"time={elapsed:.3f}s", file=out)
    return EXIT_OK


def cmd_enumerate(args, out) -> int:
    alpha = _vector_from_args(args)
    try:
        dist = weight_distribution(alpha, cap=args.cap)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    if args.format == "csv":
        out.write(dist.to_csv())
    else:
        print(enumerator_string(dist), file=out)
    return EXIT_OK


def cmd_search(args, out) -> int:
    alpha = _vector_from_args(args)
    table = _load_bounds(args.bounds)
    target = args.target
    if target is None:
        try:
            target = table.lookup(2 * alpha.n, alpha.n).lower
        except bounds_mod.BoundsNotFound as exc:
            raise UsageError(f"{exc.args[0]}; pass --target") from None
    start = time.perf_counter()
    trace = improve(alpha, target, args.max_iters)
    elapsed = time.perf_counter() - start
    out.write(trace.export())
    label = None
    if (2 * alpha.n, alpha.n) in table:
        e = table.lookup(2 * alpha.n, alpha.n)
        label = classify(trace.final, table, d=trace.final_d).value
        print(f"bounds=[{e.length},{e.dimension}] lower={e.lower} upper={e.upper}", file=out)
    print(f"final={format_vector(trace.final.bits)}", file=out)
    print(f"d={trace.final_d} outcome={trace.outcome.value} class={label}", file=out)
    print(f"time={elapsed:.3f}s", file=out)
    return EXIT_OK if trace.outcome is Outcome.REACHED else EXIT_CHECK_FAILED


def cmd_classify(args, out) -> int:
    alpha = _vector_from_args(args)
    table = _load_bounds(args.bounds)
    try:
        e = table.lookup(2 * alpha.n, alpha.n)
    except bounds_mod.BoundsNotFound as exc:
        raise UsageError(exc.args[0]) from None
    d = min_distance(alpha).d
    print(f"bounds=[{e.length},{e.dimension}] lower={e.lower} upper={e.upper}", file=out)
    print(f"d={d} class={classify(alpha, table, d=d).value}", file=out)
    return EXIT_OK


def compare_enumerator(printed: str, computed) -> dict:
    """Compare a printed enumerator with a recomputed distribution."""
    coeffs = parse_enumerator(printed, computed.code_length)
    n = computed.code_length // 2
    diffs = [
        (i, p, c) for i, (p, c) in enumerate(zip(coeffs, computed.counts)) if p != c
    ]
    return {
        "printed_sum_ok": sum(coeffs) == 1 << n,
        "printed_sum_gap": sum(coeffs) - (1 << n),
        "diffs": diffs,
    }


def cmd_verify_paper(args, out) -> int:
    table = _load_bounds(args.bounds)
    failed = False
    dists = {}
    reports = []
    for inst in INSTANCES:
        start = time.perf_counter()
        d = min_distance(inst.alpha).d
        label = None
        if (2 * inst.alpha.n, inst.alpha.n) in table:
            label = classify(inst.alpha, table, d=d).value
        needs_dist = inst.printed_enumerator or inst.same_enumerator_as
        enum_text = None
        if needs_dist and inst.alpha.n <= args.max_n:
            dists[inst.name] = weight_distribution(inst.alpha)
            enum_text = enumerator_string(dists[inst.name])
        reports.append(
            RunReport(inst.name, inst.alpha, d, label, enum_text, time.perf_counter() - start)
        )

        status = "-" if inst.expected_d is None else ("ok" if d == inst.expected_d else "FAIL")
        failed |= status == "FAIL"
        expected = "?" if inst.expected_d is None else inst.expected_d
        print(
            f"{inst.name:<12} n={inst.alpha.n:<3} d_expected={expected!s:<3} d={d:<3} "
            f"{status:<4} class={label}",
            file=out,
        )
        if inst.printed_enumerator and inst.name in dists:
            cmp = compare_enumerator(inst.printed_enumerator, dists[inst.name])
            if not cmp["diffs"]:
                print("    enumerator MATCH", file=out)
            else:
                i, p, c = cmp["diffs"][0]
                kind = "MISMATCH" if cmp["printed_sum_ok"] else "MISMATCH (known erratum)"
                print(
                    f"    enumerator {kind}: first difference z^{i} printed {p} computed {c}",
                    file=out,
                )
                if not cmp["printed_sum_ok"]:
                    print(
                        f"    printed coefficients sum to 2^{inst.alpha.n}"
                        f"{cmp['printed_sum_gap']:+d}; all differences: "
                        + ", ".join(f"z^{i}: {p}->{c}" for i, p, c in cmp["diffs"]),
                        file=out,
                    )
                else:
                    failed = True
            print(f"    W(z)={enum_text}", file=out)
        if inst.same_enumerator_as and inst.name in dists:
            other = inst.same_enumerator_as
            if other in dists:
                same = dists[inst.name] == dists[other]
                failed |= not same
                print(
                    f"    enumerator equal to {other}: {'MATCH' if same else 'MISMATCH'}",
                    file=out,
                )
    if args.json:
        print(
            json.dumps(
                [
                    {
                        "name": r.name,
                        "alpha": format_vector(r.alpha.bits),
                        "d": r.d,
                        "class": r.classification,
                        "enumerator": r.enumerator,
                    }
                    for r in reports
                ],
                sort_keys=True,
            ),
            file=out,
        )
    total = sum(r.wall_time for r in reports)
    print(f"result={'FAIL' if failed else 'PASS'}", file=out)
    print(f"time={total:.3f}s", file=out)
    return EXIT_CHECK_FAILED if failed else EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="circulant-codes",
        description="Binary (I|A) codes from circulant generator vectors.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def vector_args(p):
        p.add_argument("--vector", help="comma-separated bits, e.g. 0,1,1,0,1")
        p.add_argument("--set", help="connection set n:a1,a2,..., e.g. 17:1,2,4,8")
        p.add_argument("--paley", type=int, help="prime p = 1 mod 4")
        p.add_argument("--instance", choices=sorted(BY_NAME), help="bundled named vector")
        p.add_argument("--threads", type=int, help="enumeration worker threads")

    p = sub.add_parser("gen", help="build a generator vector")
    vector_args(p)
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("mindist", help="exact minimum distance")
    vector_args(p)
    p.add_argument("--stop-below", type=int, help="stop at the first codeword lighter than this")
    p.add_argument("--table-upto", type=int, default=8, help="show message weights up to k")
    p.add_argument("--format", choices=("text", "csv"), default="text")
    p.set_defaults(func=cmd_mindist)

    p = sub.add_parser("enumerate", help="full weight distribution")
    vector_args(p)
    p.add_argument("--cap", type=int, default=32, help="largest n to enumerate")
    p.add_argument("--format", choices=("text", "csv"), default="text")
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("search", help="bad-element improvement search")
    vector_args(p)
    p.add_argument("--target", type=int, help="target distance (default: bounds lower)")
    p.add_argument("--max-iters", type=int, default=10)
    p.add_argument("--bounds", help="bounds CSV (default: bundled table)")
    p.set_defaults(func=cmd_search)

    p = sub.add_parser("classify", help="compare d with best-known bounds")
    vector_args(p)
    p.add_argument("--bounds", help="bounds CSV (default: bundled table)")
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("verify-paper", help="recompute every bundled published instance")
    p.add_argument("--bounds", help="bounds CSV (default: bundled table)")
    p.add_argument("--max-n", type=int, default=30, help="largest n to fully enumerate")
    p.add_argument("--json", action="store_true", help="also print a JSON report")
    p.add_argument("--threads", type=int, help="enumeration worker threads")
    p.set_defaults(func=cmd_verify_paper)
    return parser


def main(argv=None, out=None) -> int:
    out = out if out is not None else sys.stdout
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        if getattr(args, "instance", None) is not None:
            if any(getattr(args, f) is not None for f in ("vector", "set", "paley")):
                raise UsageError("--instance cannot be combined with another vector form")
            args.vector = format_vector(BY_NAME[args.instance].alpha.bits)
        if getattr(args, "max_iters", 1) < 1:
            raise UsageError("--max-iters must be at least 1")
        _set_threads(args)
        return args.func(args, out)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
