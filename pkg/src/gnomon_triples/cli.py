"""Command-line interface.

Exit codes: 0 success, 1 domain errors (reported as ``error: <code>: ...``
on stderr), 2 usage errors.  Data goes to stdout, diagnostics to stderr;
only ``diagram --out`` writes a file.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from .diagrams import KINDS, DiagramSpec, render
from .errors import DomainError
from .gnomons import gnomon_pair, overlap_terms, pair_progressions, scaled_gnomon_pair
from .oracle import brute_force_primitive, euclid_parametrization
from .ordering import render_row, render_table, stream
from .triples import construct, decompose_general, invert, scale


def _positive_int(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"{text!r} is not an integer")
    if value < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {text}")
    return value


def _even_side(text: str) -> int:
    value = _positive_int(text)
    if value % 2 != 0 or value < 2:
        raise argparse.ArgumentTypeError(f"expected a positive even integer, got {text}")
    return value


def _triple_arg(text: str) -> tuple[int, int, int]:
    parts = text.split(",")
    if len(parts) != 3:
        raise argparse.ArgumentTypeError(f"expected X,Y,Z, got {text!r}")
    return tuple(_positive_int(part) for part in parts)  # type: ignore[return-value]


def _print_pair(pair, stdout) -> None:
    t1 = pair.odd_gnomon.thickness
    t2 = pair.even_gnomon.thickness
    print(f"T1={t1} T2={t2} L={pair.odd_gnomon.side_length}", file=stdout)


def cmd_enumerate(args) -> int:
    for row in stream(args.from_s, args.to_s):
        print(render_row(row, args.format), file=sys.stdout)
    return 0


def cmd_table(args) -> int:
    sys.stdout.write(render_table(stream(2, args.to_s), "appendix"))
    return 0


def cmd_invert(args) -> int:
    if args.general:
        k, partition = decompose_general(*args.triple)
        print(f"k={k} S={partition.side} t={partition.t} l={partition.l}")
    else:
        partition = invert(*args.triple)
        print(f"S={partition.side} t={partition.t} l={partition.l}")
    return 0


def cmd_gnomon(args) -> int:
    base = construct(invert(*args.triple))
    pair = scaled_gnomon_pair(scale(base, args.k)) if args.k > 1 else gnomon_pair(base)
    _print_pair(pair, sys.stdout)
    odd, even = pair_progressions(pair)
    shared, _, _ = overlap_terms(pair)
    for name, prog in (("progression_x2", odd), ("progression_y2", even)):
        print(
            f"{name}: first={prog.first_term} count={prog.term_count} "
            f"last={prog.last_term} sum={prog.total}"
        )
    print(f"shared_suffix: first={shared[0]} count={len(shared)} last={shared[-1]}")
    return 0


def cmd_scale(args) -> int:
    base = construct(invert(*args.triple))
    general = scale(base, args.k)
    print(f"k={general.scale} x={general.x} y={general.y} z={general.z}")
    _print_pair(scaled_gnomon_pair(general), sys.stdout)
    return 0


def cmd_verify(args) -> int:
    z_max = args.z_max
    side_cap = z_max - 3
    side_cap -= side_cap % 2
    rows = [row for row in stream(2, side_cap) if row.triple.z <= z_max]
    enumerated = {row.triple for row in rows}
    brute = brute_force_primitive(z_max)
    euclid = euclid_parametrization(z_max)
    print(f"enumerator: {len(enumerated)}")
    print(f"brute_force: {len(brute)}")
    print(f"euclid: {len(euclid)}")
    if len(rows) == len(enumerated) and enumerated == brute == euclid:
        print("PASS")
        return 0
    print("FAIL")
    return 1


def cmd_diagram(args) -> int:
    base = construct(invert(*args.triple))
    spec = DiagramSpec(kind=args.kind, triple=base, scale_k=args.k, unit_px=args.unit)
    Path(args.out).write_text(render(spec), encoding="utf-8")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="gnomon-triples",
        description="Enumerate, invert, and decompose Pythagorean triples "
        "via generating-square splits and gnomons.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("enumerate", help="stream ordered rows for a side range")
    p.add_argument("--from-s", type=_even_side, default=2, help="first side (even, default 2)")
    p.add_argument("--to-s", type=_even_side, required=True, help="last side (even)")
    p.add_argument("--format", choices=("tsv", "jsonl"), default="tsv")
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("table", help="appendix-style table for sides 2..B")
    p.add_argument("--to-s", type=_even_side, required=True, help="last side (even)")
    p.set_defaults(func=cmd_table)

    p = sub.add_parser("invert", help="recover S, t, l from a triple")
    p.add_argument("triple", type=_positive_int, nargs=3, metavar=("X", "Y", "Z"))
    p.add_argument("--general", action="store_true", help="divide out the gcd first")
    p.set_defaults(func=cmd_invert)

    p = sub.add_parser("gnomon", help="gnomon pair and progressions of a triple")
    p.add_argument("triple", type=_positive_int, nargs=3, metavar=("X", "Y", "Z"))
    p.add_argument("--k", type=_positive_int, default=1, help="scale factor (default 1)")
    p.set_defaults(func=cmd_gnomon)

    p = sub.add_parser("scale", help="scale a primitive triple by K")
    p.add_argument("triple", type=_positive_int, nargs=3, metavar=("X", "Y", "Z"))
    p.add_argument("k", type=_positive_int, metavar="K")
    p.set_defaults(func=cmd_scale)

    p = sub.add_parser("verify", help="cross-check the enumerator against both oracles")
    p.add_argument("--z-max", type=_positive_int, default=1000, help="hypotenuse bound")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("diagram", help="write an SVG rendering of one construction")
    p.add_argument("--kind", choices=KINDS, required=True)
    p.add_argument("--triple", type=_triple_arg, required=True, metavar="X,Y,Z")
    p.add_argument("--k", type=_positive_int, default=1, help="lattice scale (default 1)")
    p.add_argument("--unit", type=float, default=10.0, help="pixels per unit (default 10)")
    p.add_argument("--out", required=True, help="output SVG path")
    p.set_defaults(func=cmd_diagram)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.command == "verify" and args.z_max < 5:
        parser.error("--z-max must be at least 5")
    if args.command == "enumerate" and args.from_s > args.to_s:
        parser.error(f"--from-s {args.from_s} exceeds --to-s {args.to_s}")
    try:
        return args.func(args)
    except DomainError as exc:
        print(f"error: {exc.code}: {exc}", file=sys.stderr)
        return 1


def entry_point() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entry_point()
