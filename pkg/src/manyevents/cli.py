"""Command-line front end: quantize, prob, converge, sample, mobius."""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from fractions import Fraction

from .core import MinimumUnit, census, loop_phase_factor, mobius_superposition
from .documents import WaveDocument, load_document
from .probability import (
    DegenerateDiscretizationError,
    born_probability,
    convergence_sweep,
    exact_event_probability,
    product_event_probability,
)
from .sampler import MAX_SEED, sample_events
from .torus import EnumerationLimitError


class CliError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message: str):
        raise CliError(message)


def fmt(x) -> str:
    return f"{float(x):.12g}"


def _csv(header: list[str], rows: list[list]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(header)
    writer.writerows(rows)
    return buf.getvalue()


def _units(arg: str | None) -> tuple[MinimumUnit, ...] | None:
    if arg is None:
        return None
    try:
        return tuple(MinimumUnit(part.strip()) for part in arg.split(","))
    except ValueError as exc:
        raise CliError(f"bad --u value {arg!r}: {exc}") from exc


def _single_unit(args, doc: WaveDocument) -> MinimumUnit:
    units = args.u or doc.units
    if not units:
        raise CliError("no minimum unit: pass --u or set 'u' in the input document")
    if len(units) != 1:
        raise CliError(f"{args.command} takes a single u value, got {len(units)}")
    return units[0]


def _nonzero_census(doc: WaveDocument, unit: MinimumUnit):
    c = census(doc.wave, unit)
    if not any(c.counts):
        raise DegenerateDiscretizationError("degenerate discretization: every state count is zero")
    return c


def cmd_quantize(args) -> str:
    doc = load_document(args.input)
    c = _nonzero_census(doc, _single_unit(args, doc))
    rows = [[x, fmt(r), m] for x, (r, m) in enumerate(zip(doc.wave.modulus, c.counts))]
    return _csv(["x", "modulus", "count"], rows)


def cmd_prob(args) -> str:
    doc = load_document(args.input)
    unit = _single_unit(args, doc)
    counts = _nonzero_census(doc, unit).counts
    if args.mode == "product":
        next_wave = doc.next_wave or doc.wave
        if len(next_wave) != len(doc.wave):
            raise CliError("'next' amplitudes cover a different number of sites")
        event = product_event_probability(counts, census(next_wave, unit).counts)
    else:
        event = exact_event_probability(counts)
    born = born_probability(doc.wave)

    header = ["x", "p_event", "p_born", "abs_diff"] + (["p_event_exact"] if args.exact else [])
    rows = []
    for x, (p, q) in enumerate(zip(event.floats(), born.floats())):
        row = [x, fmt(p), fmt(q), fmt(abs(p - q))]
        if args.exact:
            w = Fraction(event[x])
            row.append(f"{w.numerator}/{w.denominator}")
        rows.append(row)
    return _csv(header, rows)


def cmd_converge(args) -> str:
    doc = load_document(args.input)
    units = args.u or doc.units
    if not units:
        raise CliError("no u values: pass --u or set 'u' in the input document")
    rows = [
        [fmt(rec.u), fmt(rec.linf_error), fmt(rec.l1_error), rec.total_states, rec.total_events]
        for rec in convergence_sweep(doc.wave, units)
    ]
    return _csv(["u", "linf_error", "l1_error", "total_states", "total_events"], rows)


def cmd_sample(args) -> str:
    doc = load_document(args.input)
    c = _nonzero_census(doc, _single_unit(args, doc))
    report = sample_events(c, args.n, args.seed, workers=args.workers)
    payload = {
        "seed": report.seed,
        "n_samples": report.n_samples,
        "positions": [
            {"x": x, "count": m, "tally": t, "frequency": fmt(f)}
            for x, (m, t, f) in enumerate(zip(c.counts, report.tallies, report.empirical))
        ],
        "max_abs_deviation": fmt(report.max_abs_deviation),
    }
    return json.dumps(payload, indent=2) + "\n"


def cmd_mobius(args) -> str:
    lines = [f"k={k} factor={loop_phase_factor(k):+d}" for k in range(args.loops + 1)]
    ok = True
    for k in range(args.loops):
        total = loop_phase_factor(k) + loop_phase_factor(k + 1)
        ok &= total == 0
        lines.append(f"k={k},{k + 1} sum={total} {'cancel' if total == 0 else 'FAIL'}")
    lines.append(f"superposition loops=[1, 2] -> {mobius_superposition(1, [1, 2])}")
    lines.append(f"all adjacent pairs cancel: {'yes' if ok else 'no'}")
    return "\n".join(lines) + "\n"


def _positive_int(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from None
    if value < 1:
        raise argparse.ArgumentTypeError(f"must be positive: {text!r}")
    return value


def _seed(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from None
    if not 0 <= value <= MAX_SEED:
        raise argparse.ArgumentTypeError(f"seed must fit in 64 unsigned bits: {text!r}")
    return value


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="manyevents", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def add(name: str, func, help_text: str, wave_input: bool = True) -> argparse.ArgumentParser:
        p = sub.add_parser(name, help=help_text)
        p.set_defaults(func=func)
        if wave_input:
            p.add_argument("--input", required=True, help="wave-function JSON document")
            p.add_argument("--u", help="minimum unit; comma-separated list for converge")
        p.add_argument("--output", help="output file (default: stdout)")
        return p

    add("quantize", cmd_quantize, "state count per site")
    p = add("prob", cmd_prob, "event probability against the Born rule")
    p.add_argument("--mode", choices=("stationary", "product"), default="stationary")
    p.add_argument("--exact", action="store_true", help="add exact rational column")
    add("converge", cmd_converge, "discretization error for a decreasing list of u")
    p = add("sample", cmd_sample, "uniform event sampling")
    p.add_argument("--n", type=_positive_int, required=True)
    p.add_argument("--seed", type=_seed, required=True)
    p.add_argument("--workers", type=_positive_int, default=1)
    p = add("mobius", cmd_mobius, "loop sign factors and cancellation", wave_input=False)
    p.add_argument("--loops", type=int, default=16, help="largest loop count K (default 16)")
    return parser


def main(argv: list[str] | None = None) -> int:
    try:
        args = build_parser().parse_args(argv)
        if hasattr(args, "u"):
            args.u = _units(args.u)
        if getattr(args, "loops", 0) < 0:
            raise CliError("--loops must be nonnegative")
        text = args.func(args)
        if args.output:
            with open(args.output, "w", encoding="utf-8", newline="") as fh:
                fh.write(text)
        else:
            sys.stdout.write(text)
    except (CliError, ValueError, OSError, EnumerationLimitError) as exc:
        message = str(exc).splitlines()[0] if str(exc) else type(exc).__name__
        print(f"manyevents: error: {message}", file=sys.stderr)
        return 2 if isinstance(exc, CliError) else 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
