"""Command-line front end.

Exit codes: 0 success (including a Disconnected verdict), 2 invalid or
non-expanding parameters, 3 resource cap exceeded, 4 I/O failure.
"""

from __future__ import annotations

import argparse
import csv
import sys
from concurrent.futures import ProcessPoolExecutor

from .algebra import (
    CollinearDigitSet,
    NotExpandingError,
    Quadratic,
    ResourceLimitError,
    is_expanding,
    require_expanding,
)
from .criteria import (
    Status,
    classify_consecutive,
    classify_nonconsecutive,
    conjecture_threshold,
    proven_threshold,
)
from .figures import reproduce
from .neighbors import DifferenceSet, hata_connected, survivor_set
from .render import RasterConfig, rasterize, write_image

EXIT_OK, EXIT_INVALID, EXIT_RESOURCE, EXIT_IO = 0, 2, 3, 4

SWEEP_HEADER = ["b", "c", "m", "theorem_verdict", "oracle_verdict", "threshold", "agree"]


class UsageError(ValueError):
    pass


def _digit_list(text: str) -> list[int]:
    try:
        return [int(t) for t in text.split(",") if t.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}")


def _digits(args) -> CollinearDigitSet:
    if args.digits is not None:
        if not args.digits:
            raise UsageError("empty digit list")
        return CollinearDigitSet.from_digits(args.digits)
    if args.m is None:
        raise UsageError("give --m or --digits")
    if args.m < 0:
        raise UsageError("--m must be non-negative")
    return CollinearDigitSet.consecutive(args.m)


def _quadratic(args) -> Quadratic:
    q = Quadratic(args.b, args.c)
    require_expanding(q)
    return q


def cmd_classify(args, out):
    q = _quadratic(args)
    if args.m < 1:
        raise UsageError("--m must be at least 1")
    print(classify_consecutive(q, args.m, conjecture=args.conjecture), file=out)


def cmd_classify_gap(args, out):
    try:
        verdict = classify_nonconsecutive(args.p, args.q, args.s)
    except ValueError as exc:
        raise UsageError(str(exc))
    print(verdict, file=out)


def cmd_oracle(args, out):
    q = _quadratic(args)
    digits = _digits(args)
    dd = DifferenceSet.of(digits.digits)
    surv = survivor_set(q, dd)
    print(f"state box: |gamma| <= {surv.box.gamma_max}, |delta| <= {surv.box.delta_max} "
          f"({surv.box.size} states)", file=out)
    print(f"survivors: {len(surv)}", file=out)
    if args.connected:
        ok = hata_connected(q, digits)
        print("Connected" if ok else "Disconnected", file=out)
    else:
        if args.gamma is None or args.delta is None:
            raise UsageError("give --gamma and --delta, or --connected")
        inside = (args.gamma, args.delta) in surv
        print(f"({args.gamma}, {args.delta}) {'in' if inside else 'not in'} T-T", file=out)


def cmd_neighbors(args, out):
    q = _quadratic(args)
    digits = _digits(args)
    for g, d in survivor_set(q, DifferenceSet.of(digits.digits)):
        if (g, d) != (0, 0):
            print(f"{g} {d}", file=out)


def cmd_render(args, out):
    q = _quadratic(args)
    digits = _digits(args)
    if args.size < 1:
        raise UsageError("--size must be positive")
    cfg = RasterConfig(size=args.size, depth=args.depth, embedding=args.embedding, method=args.method)
    result = rasterize(q, digits, cfg)
    write_image(result, args.out, color=args.color)
    print(f"components: {result.component_count}", file=out)
    print(f"depth: {result.depth}  cell diameter: {result.cell_diameter:.3f} px  "
          f"rounding error: {result.rounding_error:.3f} px  points: {result.points}", file=out)


def cmd_figures(args, out):
    cfg = RasterConfig(size=args.size)
    for line in reproduce(args.outdir, cfg):
        print(line, file=out)


def _verdict_word(status: Status) -> str:
    return status.value.lower()


def sweep_rows(q: Quadratic, m_max: int | None = None) -> list[list[str]]:
    """CSV rows for one (b, c); see ``SWEEP_HEADER``."""
    proven = proven_threshold(q)
    if m_max is not None:
        ms = range(1, m_max + 1)
    else:
        t = proven[0] if proven else conjecture_threshold(q).threshold
        ms = [m for m in (t - 1, t, t + 1) if m >= 1]
    rows = []
    for m in ms:
        verdict = classify_consecutive(q, m)
        try:
            oracle = (1, 0) in survivor_set(q, DifferenceSet.consecutive(m))
            oracle_word = "connected" if oracle else "disconnected"
        except ResourceLimitError:
            oracle, oracle_word = None, "skipped"
        if verdict.status is Status.UNKNOWN or oracle is None:
            agree = ""
        else:
            agree = str((verdict.status is Status.CONNECTED) == oracle).lower()
        rows.append([str(q.b), str(q.c), str(m), _verdict_word(verdict.status), oracle_word,
                     "" if proven is None else str(proven[0]), agree])
    return rows


def _sweep_job(job):
    b, c, m_max = job
    return sweep_rows(Quadratic(b, c), m_max)


def cmd_sweep(args, out):
    if args.b_min > args.b_max or args.c_min > args.c_max:
        raise UsageError("empty parameter range")
    if args.m_max is not None and args.m_max < 1:
        raise UsageError("--m-max must be at least 1")
    jobs = [(b, c, args.m_max)
            for b in range(args.b_min, args.b_max + 1)
            for c in range(args.c_min, args.c_max + 1)
            if is_expanding(Quadratic(b, c))]
    if args.jobs > 1:
        with ProcessPoolExecutor(args.jobs) as pool:
            results = list(pool.map(_sweep_job, jobs, chunksize=8))
    else:
        results = [_sweep_job(j) for j in jobs]
    writer = csv.writer(out, lineterminator="\n")
    writer.writerow(SWEEP_HEADER)
    skipped = 0
    for rows in results:
        for row in rows:
            skipped += row[4] == "skipped"
            writer.writerow(row)
    if skipped:
        print(f"{skipped} case(s) skipped: state box over the cap", file=sys.stderr)


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="selfaffine", description=__doc__.splitlines()[0])
    sub = ap.add_subparsers(dest="command", required=True)

    def poly(p):
        p.add_argument("--b", type=int, required=True)
        p.add_argument("--c", type=int, required=True)

    def digits(p, required=True):
        g = p.add_mutually_exclusive_group(required=required)
        g.add_argument("--m", type=int, help="consecutive digits 0..m")
        g.add_argument("--digits", type=_digit_list, help="comma-separated digits, e.g. 0,1,2,4")

    p = sub.add_parser("classify", help="closed-form verdict for D = {0..m}")
    poly(p)
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--conjecture", action="store_true", help="fall back to the conjectured threshold")
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("classify-gap", help="verdict for f=(x-p)(x-q), D={0..|pq|-2, |pq|-1+s}")
    p.add_argument("--p", type=int, required=True)
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--s", type=int, required=True)
    p.set_defaults(func=cmd_classify_gap)

    p = sub.add_parser("oracle", help="exact lattice membership or connectedness")
    poly(p)
    digits(p)
    p.add_argument("--gamma", type=int)
    p.add_argument("--delta", type=int)
    p.add_argument("--connected", action="store_true")
    p.set_defaults(func=cmd_oracle)

    p = sub.add_parser("neighbors", help="list nonzero lattice points of T-T")
    poly(p)
    digits(p)
    p.set_defaults(func=cmd_neighbors)

    p = sub.add_parser("render", help="rasterize the attractor to a PGM/PPM image")
    poly(p)
    digits(p)
    p.add_argument("--size", type=int, default=512)
    p.add_argument("--depth", type=int)
    p.add_argument("--out", required=True)
    p.add_argument("--color", action="store_true", help="write P6 with one colour per component")
    p.add_argument("--embedding", choices=["whitened", "companion"], default="whitened")
    p.add_argument("--method", choices=["grid", "exact"], default="grid")
    p.set_defaults(func=cmd_render)

    p = sub.add_parser("figures", help="render all reference panels")
    p.add_argument("--outdir", required=True)
    p.add_argument("--size", type=int, default=512)
    p.set_defaults(func=cmd_figures)

    p = sub.add_parser("sweep", help="theorem vs oracle CSV over a (b, c) grid")
    p.add_argument("--b-min", type=int, required=True)
    p.add_argument("--b-max", type=int, required=True)
    p.add_argument("--c-min", type=int, required=True)
    p.add_argument("--c-max", type=int, required=True)
    p.add_argument("--m-max", type=int)
    p.add_argument("--jobs", type=int, default=1)
    p.set_defaults(func=cmd_sweep)
    return ap


def run(argv=None, out=None) -> int:
    out = sys.stdout if out is None else out
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        args.func(args, out)
    except NotExpandingError as exc:
        print(f"error: not expanding: {exc}", file=sys.stderr)
        return EXIT_INVALID
    except (UsageError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID
    except ResourceLimitError as exc:
        print(f"error: resource cap exceeded: {exc}", file=sys.stderr)
        return EXIT_RESOURCE
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_IO
    return EXIT_OK


def main() -> None:
    sys.exit(run())
