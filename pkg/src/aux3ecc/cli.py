"""Command-line interface: ``aux3ecc {decompose,verify,gen,bench}``.

Exit codes: 0 success, 1 verification or linearity failure, 2 usage, I/O or
parse error.
"""

from __future__ import annotations

import argparse
import sys
from typing import Iterator, Optional, Sequence

from . import bench as bench_mod
from .decomposer import Decomposition, decompose
from .generator import (Block, PlantSpec, gen_planted, gen_random_multigraph,
                        gen_scaling_instance, planted_corpus, random_corpus)
from .graph import GraphError, Multigraph
from .io_formats import (export_dot, format_edge_list, read_edge_list, write_decomposition,
                         write_edge_list)
from .oracle import OracleSizeError, check_equivalence, reference_aux_subgraphs

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def _err(msg: str) -> None:
    print(f"aux3ecc: {msg}", file=sys.stderr)


def _emit(data: bytes, output: Optional[str]) -> None:
    if output:
        with open(output, "wb") as fh:
            fh.write(data)
    else:
        sys.stdout.buffer.write(data)
        sys.stdout.flush()


# ---- decompose --------------------------------------------------------------

def cmd_decompose(args) -> int:
    g = read_edge_list(args.input)
    d = decompose(g)
    data = export_dot(g, d) if args.format == "dot" else write_decomposition(d, args.format)
    _emit(data, args.output)
    return EXIT_OK


# ---- verify -----------------------------------------------------------------

def mutate(d: Decomposition) -> Decomposition:
    """Drop the first edge of the first component that has one."""
    for comp in d.components:
        if comp.alpha:
            comp.alpha.pop(0)
            break
    return d


def _instances(args) -> Iterator[tuple[str, Multigraph]]:
    if args.input:
        yield args.input, read_edge_list(args.input)
        return
    for s, g in random_corpus(args.corpus, args.seed, args.max_n, args.max_m):
        yield f"random seed={s} n={g.n} m={g.m}", g
    for spec, planted in planted_corpus(args.planted, args.seed):
        name = "-".join(map(str, spec.blocks))
        yield f"planted seed={spec.seed} {name}:{spec.skeleton}:{spec.connector}", planted.graph


def cmd_verify(args) -> int:
    if not args.input and args.corpus is None:
        raise UsageError("verify needs -i FILE or --corpus N")
    passed = failed = skipped = 0
    for name, g in _instances(args):
        try:
            ref = reference_aux_subgraphs(g, args.max_edges)
        except OracleSizeError as exc:
            _err(f"warning: skipping {name}: {exc}")
            skipped += 1
            continue
        d = decompose(g, debug=True)
        if args.mutate:
            d = mutate(d)
        verdict = check_equivalence(d, ref)
        if verdict:
            passed += 1
        else:
            failed += 1
        if args.verbose or not verdict:
            print(f"{name}: {verdict}")
    total = passed + failed
    summary = f"{passed}/{total} PASS"
    if skipped:
        summary += f" ({skipped} skipped by size guard)"
    print(summary)
    return EXIT_OK if failed == 0 else EXIT_FAIL


# ---- gen --------------------------------------------------------------------

def parse_gen_spec(text: str, seed: int) -> Multigraph:
    """``random:N:M``, ``planted:BLOCKS:SKELETON:CONNECTOR`` (blocks comma
    separated, e.g. ``K4,W3,D2``) or ``scaling:M``."""
    kind, _, rest = text.partition(":")
    parts = rest.split(":") if rest else []
    try:
        if kind == "random" and len(parts) == 2:
            return gen_random_multigraph(int(parts[0]), int(parts[1]), seed)
        if kind == "planted" and len(parts) == 3:
            blocks = tuple(Block.parse(b) for b in parts[0].split(","))
            return gen_planted(PlantSpec(blocks, parts[1], parts[2], seed=seed)).graph
        if kind == "scaling" and len(parts) == 1:
            return gen_scaling_instance(int(parts[0]))
    except (ValueError, IndexError) as exc:
        raise UsageError(f"bad --spec {text!r}: {exc}") from None
    raise UsageError(f"bad --spec {text!r}; expected random:N:M, "
                     "planted:BLOCKS:SKELETON:CONNECTOR or scaling:M")


def cmd_gen(args) -> int:
    g = parse_gen_spec(args.spec, args.seed)
    if args.output:
        write_edge_list(g, args.output)
    else:
        sys.stdout.write(format_edge_list(g))
    return EXIT_OK


# ---- bench ------------------------------------------------------------------

def _sizes(text: str) -> list[int]:
    try:
        sizes = [int(float(s)) for s in text.split(",") if s.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"bad size list {text!r}") from None
    if not sizes or any(s < 4 for s in sizes):
        raise argparse.ArgumentTypeError("sizes must be integers >= 4")
    return sizes


def cmd_bench(args) -> int:
    report = bench_mod.run_bench(args.sizes, args.reps, log=lambda s: print(s, file=sys.stderr))
    print(report.table())
    if args.json:
        with open(args.json, "w", encoding="utf-8") as fh:
            fh.write(report.to_json())
    return EXIT_OK if report.ok else EXIT_FAIL


# ---- entry point ------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="aux3ecc", description=(
        "3-edge-connected components and their auxiliary subgraphs."))
    sub = p.add_subparsers(dest="command", required=True)

    d = sub.add_parser("decompose", help="decompose an edge-list file")
    d.add_argument("-i", "--input", required=True)
    d.add_argument("-f", "--format", choices=("text", "json", "dot"), default="text")
    d.add_argument("-o", "--output")
    d.set_defaults(func=cmd_decompose)

    v = sub.add_parser("verify", help="check the decomposer against the brute-force oracle")
    v.add_argument("-i", "--input")
    v.add_argument("--corpus", type=int, help="number of random instances")
    v.add_argument("--planted", type=int, default=0, help="number of planted instances")
    v.add_argument("--seed", type=int, default=0)
    v.add_argument("--max-n", type=int, default=10)
    v.add_argument("--max-m", type=int, default=16)
    v.add_argument("--max-edges", type=int, default=64, help="oracle size guard")
    v.add_argument("--mutate", action="store_true",
                   help="drop one output edge per instance to check that failures surface")
    v.add_argument("-v", "--verbose", action="store_true", help="print passing instances too")
    v.set_defaults(func=cmd_verify)

    gn = sub.add_parser("gen", help="write a generated graph as an edge list")
    gn.add_argument("--spec", required=True)
    gn.add_argument("--seed", type=int, required=True)
    gn.add_argument("-o", "--output")
    gn.set_defaults(func=cmd_gen)

    b = sub.add_parser("bench", help="time decompose on doubling scaling instances")
    b.add_argument("--sizes", type=_sizes, default=list(bench_mod.DEFAULT_SIZES))
    b.add_argument("--reps", type=int, default=5)
    b.add_argument("--json", help="also write the JSON report here")
    b.set_defaults(func=cmd_bench)
    return p


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args)
    except (UsageError, GraphError, OSError) as exc:
        _err(str(exc))
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
