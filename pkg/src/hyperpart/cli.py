"""Command-line entry point: ``hyperpart <command> ...``.

Exit status: 0 on success or a passing check, 1 when a mathematical check
fails, 2 on usage or parse errors.
"""

from __future__ import annotations

import argparse
import os
import sys
from math import comb

from hyperpart.collapse import CollapseError, greedy_collapse, structured_collapse_omega1
from hyperpart.construct import (
    GammaKey,
    build_omega,
    build_partition,
    decompose_omega1,
    gamma_abstract,
    gamma_sub,
    phi_map,
)
from hyperpart.fileio import read_hypergraph, serialize
from hyperpart.homology import betti
from hyperpart.hypercore import HypergraphError, are_isomorphic
from hyperpart.verify import SizeGuardError, check_size, verify_construction

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def _emit(text: str, path: str | None) -> None:
    if path:
        with open(path, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _parse_js(raw: str | None) -> tuple[int, ...]:
    if not raw:
        return ()
    try:
        return tuple(int(x) for x in raw.split(",") if x.strip())
    except ValueError:
        raise UsageError(f"--js must be comma-separated integers, got {raw!r}") from None


def _need(args, *names):
    missing = [f"--{n}" for n in names if getattr(args, n) is None]
    if missing:
        raise UsageError(f"{args.command} requires {', '.join(missing)}")


def _edge_line(e) -> str:
    return " ".join(map(str, e))


def cmd_gen(args) -> int:
    _need(args, "r", "d")
    check_size(args.r, args.d, args.force)
    if args.all:
        p = build_partition(args.r, args.d)
        outdir = args.output or "."
        os.makedirs(outdir, exist_ok=True)
        for a, part in enumerate(p.parts, 1):
            name = f"omega_r{args.r}_d{args.d}_part{a}.{args.format}"
            _emit(serialize(part, args.format), os.path.join(outdir, name))
        if args.labels:
            labeled = sorted((e, a) for a, part in enumerate(p.parts, 1) for e in part.edges)
            _emit("".join(f"{_edge_line(e)} {a}\n" for e, a in labeled),
                  os.path.join(outdir, f"labels_r{args.r}_d{args.d}.txt"))
        return EXIT_OK
    if args.part is None:
        raise UsageError("gen requires --part N or --all")
    if not 1 <= args.part <= args.d:
        raise UsageError(f"--part must lie in 1..{args.d}")
    _emit(serialize(build_omega(args.part, args.r, args.d), args.format), args.output)
    return EXIT_OK


def cmd_verify(args) -> int:
    _need(args, "r", "d")
    check_size(args.r, args.d, args.force)
    report = verify_construction(args.r, args.d, args.method, args.mode)
    print("\n".join(report.lines()))
    return EXIT_OK if report.passed else EXIT_FAIL


def cmd_betti(args) -> int:
    _need(args, "input")
    print(betti(read_hypergraph(args.input), args.mode))
    return EXIT_OK


def cmd_collapse(args) -> int:
    if args.strategy == "structured":
        if args.input:
            raise UsageError("the structured strategy works on generated parts only; use --r/--d")
        _need(args, "r", "d")
        check_size(args.r, args.d, args.force)
        try:
            seq = structured_collapse_omega1(args.r, args.d)
        except CollapseError as exc:
            print(f"error: {exc}", file=sys.stderr)
            return EXIT_FAIL
    else:
        if args.input:
            h = read_hypergraph(args.input)
        else:
            _need(args, "r", "d")
            check_size(args.r, args.d, args.force)
            h = build_omega(args.a or 1, args.r, args.d)
        seq = greedy_collapse(h)
    if args.emit == "steps":
        for step in seq.steps:
            print(step)
    else:
        print(f"steps: {len(seq)}")
        print(f"residual: {len(seq.residual)}")
    return EXIT_OK if seq.complete else EXIT_FAIL


def cmd_decompose(args) -> int:
    _need(args, "r", "d")
    check_size(args.r, args.d, args.force)
    dec = decompose_omega1(args.r, args.d)
    for key, piece in dec.nonempty():
        print(f"{key.k} {','.join(map(str, key.js)) or '-'} {len(piece)}")
    print(f"total {dec.total()} (expected {comb(args.r * args.d - 1, args.r - 1)})")
    return EXIT_OK


def cmd_phi(args) -> int:
    _need(args, "r", "d", "a")
    check_size(args.r, args.d, args.force)
    phi = phi_map(args.a, args.r, args.d)
    print(" ".join(map(str, phi.image)))
    if args.check:
        upper = build_omega(args.a + 1, args.r, args.d)
        lower = build_omega(args.a, args.r, args.d)
        ok = phi.apply(upper).edges == lower.edges
        print(f"check: {'pass' if ok else 'FAIL'}")
        return EXIT_OK if ok else EXIT_FAIL
    return EXIT_OK


def cmd_gamma(args) -> int:
    _need(args, "k", "r")
    if args.js is not None:
        _need(args, "d")
        h = gamma_sub(GammaKey(args.k, _parse_js(args.js)), args.r, args.d)
    else:
        _need(args, "a")
        h = gamma_abstract(args.k, args.r, args.a)
    if args.format == "json":
        sys.stdout.write(serialize(h, "json"))
    else:
        for e in h.edges:
            print(_edge_line(e))
    return EXIT_OK


def cmd_iso(args) -> int:
    _need(args, "input", "other")
    a, b = read_hypergraph(args.input), read_hypergraph(args.other)
    if (a.n, a.r) != (b.n, b.r):
        print("not isomorphic (different n or r)")
        return EXIT_FAIL
    perm = are_isomorphic(a, b)
    if perm is None:
        print("not isomorphic")
        return EXIT_FAIL
    print(" ".join(map(str, perm.image)))
    return EXIT_OK


COMMANDS = {
    "gen": (cmd_gen, "write parts of the partition as hypergraph files"),
    "verify": (cmd_verify, "check partition axioms, homogeneity, Betti numbers and collapse"),
    "betti": (cmd_betti, "print reduced Betti numbers b_-1 .. b_r-1 of a hypergraph file"),
    "collapse": (cmd_collapse, "peel leaves off a hypergraph"),
    "decompose": (cmd_decompose, "list the Gamma pieces of part 1 with edge counts"),
    "phi": (cmd_phi, "print the vertex permutation carrying part a+1 onto part a"),
    "gamma": (cmd_gamma, "print the edges of a Gamma hypergraph"),
    "iso": (cmd_iso, "search for an isomorphism between two hypergraph files"),
}


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--r", type=int)
    common.add_argument("--d", type=int)
    common.add_argument("--a", type=int)
    common.add_argument("--k", type=int)
    common.add_argument("--js", help="comma-separated tail vertices, e.g. 5,7")
    common.add_argument("-i", "--input", help="hypergraph file (json or txt)")
    common.add_argument("-j", "--other", help="second hypergraph file (iso)")
    common.add_argument("-o", "--output", help="output file, or directory with gen --all")
    common.add_argument("--format", choices=("json", "txt"), default="json")
    common.add_argument("--force", action="store_true", help="skip the size guard")

    parser = argparse.ArgumentParser(prog="hyperpart", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)
    for name, (_, help_text) in COMMANDS.items():
        sp = sub.add_parser(name, parents=[common], help=help_text)
        if name == "gen":
            sp.add_argument("--part", type=int)
            sp.add_argument("--all", action="store_true")
            sp.add_argument("--labels", action="store_true",
                            help="with --all, also write the edge -> part labeling")
        if name == "verify":
            sp.add_argument("--method", choices=("betti", "collapse", "both"), default="both")
        if name in ("verify", "betti"):
            sp.add_argument("--mode", choices=("auto", "exact", "fast"),
                            default="fast" if name == "verify" else "auto",
                            help="rank computation for Betti numbers")
        if name == "collapse":
            sp.add_argument("--strategy", choices=("greedy", "structured"), default="greedy")
            sp.add_argument("--emit", choices=("steps", "summary"), default="summary")
        if name == "phi":
            sp.add_argument("--check", action="store_true")
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    handler = COMMANDS[args.command][0]
    try:
        return handler(args)
    except (UsageError, SizeGuardError, HypergraphError, OSError) as exc:
        print(f"{parser.prog} {args.command}: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
