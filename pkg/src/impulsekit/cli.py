"""``impulsekit`` command line interface.

Subcommands: ``noise``, ``filter``, ``stats``, ``diff``, ``compare`` and
``fixture``. Commands that draw random numbers require ``--seed``.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from . import __version__
from .filters import FilterKind, FilterSpec, apply_filter
from .fixtures import synthetic_board
from .harness import DEFAULT_DENSITY, PRESETS, default_out_dir, preset_noise, run_preset
from .image import BorderPolicy, read_pgm, write_pgm
from .metrics import DiffMode, compute_stats, diff_image
from .noise import NoiseSpec, inject

PROG = "impulsekit"


def _probability(text):
    try:
        p = float(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a number: {text!r}") from None
    if not 0.0 <= p <= 1.0:
        raise argparse.ArgumentTypeError(f"probability must lie in [0, 1], got {p}")
    return p


def _seed(text):
    try:
        s = int(text, 0)
    except ValueError:
        raise argparse.ArgumentTypeError(f"seed must be an integer, got {text!r}") from None
    if not 0 <= s < 2**64:
        raise argparse.ArgumentTypeError("seed must be an unsigned 64-bit integer")
    return s


def _fmt_arg(parser):
    parser.add_argument("--format", choices=("P5", "P2"), default="P5",
                        help="output PGM flavour (default: P5)")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog=PROG, description=__doc__.splitlines()[0])
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True, metavar="COMMAND")

    p = sub.add_parser("noise", help="inject impulse noise into a PGM")
    p.add_argument("input", type=Path)
    p.add_argument("-o", "--output", type=Path, required=True)
    p.add_argument("--seed", type=_seed, required=True)
    p.add_argument("--preset", choices=PRESETS,
                   help="shorthand for --pa/--pb using --density")
    p.add_argument("--density", type=_probability, default=DEFAULT_DENSITY,
                   help="per-impulse-type probability for --preset (default: 0.1)")
    p.add_argument("--pa", type=_probability, default=0.0, help="dark (pepper) probability")
    p.add_argument("--pb", type=_probability, default=0.0, help="light (salt) probability")
    p.add_argument("--a", type=int, default=0, help="dark impulse level (default: 0)")
    p.add_argument("--b", type=int, default=255, help="light impulse level (default: 255)")
    _fmt_arg(p)

    p = sub.add_parser("filter", help="apply one filter to a PGM")
    p.add_argument("input", type=Path)
    p.add_argument("-o", "--output", type=Path, required=True)
    p.add_argument("--kind", required=True, choices=[k.value for k in FilterKind])
    p.add_argument("--window", type=int, default=3)
    p.add_argument("--q", type=float, default=0.0, help="contra-harmonic order")
    p.add_argument("--s-max", type=int, default=5, help="adaptive median maximum window")
    p.add_argument("--border", choices=("replicate", "zero"), default="replicate")
    _fmt_arg(p)

    p = sub.add_parser("stats", help="print mean, std and SNR of PGM images")
    p.add_argument("inputs", type=Path, nargs="+")

    p = sub.add_parser("diff", help="difference image of two PGMs")
    p.add_argument("x", type=Path)
    p.add_argument("y", type=Path)
    p.add_argument("-o", "--output", type=Path, required=True)
    p.add_argument("--mode", choices=("saturating", "absolute"), default="saturating",
                   help="saturating: max(x - y, 0); absolute: |x - y|")
    _fmt_arg(p)

    p = sub.add_parser("compare", help="run a full noise/filter comparison")
    p.add_argument("--preset", choices=PRESETS, required=True)
    p.add_argument("--seed", type=_seed, required=True)
    p.add_argument("--input", type=Path, help="clean PGM (default: synthetic board)")
    p.add_argument("--density", type=_probability, default=DEFAULT_DENSITY)
    p.add_argument("--out", type=Path,
                   help="output directory (default: $IMPULSEKIT_OUT_DIR or ./impulsekit-out)")
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("--size", type=int, nargs=2, metavar=("W", "H"), default=(256, 256),
                   help="synthetic board size when --input is omitted")

    p = sub.add_parser("fixture", help="write the synthetic board image")
    p.add_argument("-o", "--output", type=Path, required=True)
    p.add_argument("--size", type=int, nargs=2, metavar=("W", "H"), default=(256, 256))
    _fmt_arg(p)
    return parser


def _cmd_noise(args):
    if args.preset:
        spec = preset_noise(args.preset, args.seed, args.density)
        spec = NoiseSpec(spec.p_a, spec.p_b, args.a, args.b, args.seed)
    else:
        spec = NoiseSpec(args.pa, args.pb, args.a, args.b, args.seed)
    write_pgm(args.output, inject(read_pgm(args.input), spec), args.format)


def _cmd_filter(args):
    spec = FilterSpec(kind=args.kind, window=args.window, q=args.q, s_max=args.s_max,
                      border=BorderPolicy.parse(args.border))
    write_pgm(args.output, apply_filter(read_pgm(args.input), spec), args.format)


def _cmd_stats(args):
    many = len(args.inputs) > 1
    for path in args.inputs:
        mean, sd, snr = compute_stats(read_pgm(path)).formatted()
        prefix = f"{path}: " if many else ""
        print(f"{prefix}mean={mean} sd={sd} snr={snr}")


def _cmd_diff(args):
    out = diff_image(read_pgm(args.x), read_pgm(args.y), DiffMode.parse(args.mode))
    write_pgm(args.output, out, args.format)


def _cmd_compare(args):
    if args.input is not None:
        clean = read_pgm(args.input)
        source = str(args.input)
    else:
        w, h = args.size
        clean = synthetic_board(w, h)
        source = f"synthetic_board({w}x{h})"
    out = args.out if args.out is not None else default_out_dir()
    report = run_preset(args.preset, clean, args.seed, out, density=args.density,
                        workers=args.workers, clean_source=source)
    sys.stdout.write(report.to_csv())


def _cmd_fixture(args):
    w, h = args.size
    write_pgm(args.output, synthetic_board(w, h), args.format)


_COMMANDS = {
    "noise": _cmd_noise,
    "filter": _cmd_filter,
    "stats": _cmd_stats,
    "diff": _cmd_diff,
    "compare": _cmd_compare,
    "fixture": _cmd_fixture,
}


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        _COMMANDS[args.command](args)
    except FileNotFoundError as exc:
        print(f"{PROG}: error: no such file: {exc.filename}", file=sys.stderr)
        return 1
    except (OSError, ValueError, TypeError) as exc:
        print(f"{PROG}: error: {exc}", file=sys.stderr)
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
