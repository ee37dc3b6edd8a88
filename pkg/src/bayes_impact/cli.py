"""``bayes-impact`` command line tool.

Subcommands: fit, table, score, elasticity, stats, compare, simulate.
Exit status is 0 on success, 1 on input/fit errors and 2 on usage errors.
"""

import argparse
import json
import logging
import sys
import numpy as np

from . import __version__
from .analytics import TABLE_COLUMNS, compare_fcr
from .elasticity import elasticity_curves
from .errors import BayesImpactError, InputError
from .estimation import select_model
from .io import _cell, has_fcr_column, output, read_articles, read_counts, read_priors, write_counts, write_fits
from .scoring import (
    DEFAULT_T_GRID,
    DEFAULT_X_GRID,
    ScoreQuery,
    credibility_decomposition,
    display_round,
    impact_score,
    score_table,
)
from .synthetic import GENERATOR, SimulationConfig, sample_negbin, sample_poisson

log = logging.getLogger("bayes_impact")


def parse_grid(text):
    """``"2,4,6,8"`` or ``"start:stop:step"`` (stop inclusive)."""
    text = text.strip()
    try:
        if ":" in text:
            start, stop, step = (float(p) for p in text.split(":"))
            if step <= 0:
                raise ValueError
            values = np.arange(start, stop + step / 2, step)
        else:
            values = [float(p) for p in text.split(",") if p.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"bad grid {text!r}") from None
    if len(values) == 0:
        raise argparse.ArgumentTypeError("empty grid")
    return tuple(int(v) if float(v).is_integer() else float(v) for v in values)


def positive_float(text):
    try:
        v = float(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a number: {text!r}") from None
    if not v > 0:
        raise argparse.ArgumentTypeError(f"must be positive: {text!r}")
    return v


def _fmt(v, digits=2):
    return f"{display_round(v, digits):.{digits}f}"


def _require_priors(priors, journals=None):
    journals = list(priors) if journals is None else journals
    unknown = [j for j in journals if j not in priors]
    if unknown:
        raise InputError(f"unknown journal(s) {unknown}; known: {sorted(priors)}")
    missing = [j for j in journals if priors[j] is None]
    if missing:
        raise InputError(f"no negative binomial parameters for journal(s) {missing}; cannot score")
    return {j: priors[j] for j in journals}


def cmd_fit(args):
    samples = read_counts(args.counts)
    selections = []
    for label, sample in samples.items():
        sel = select_model(sample)
        if sel.negbin is None:
            print(f"warning: {label}: not overdispersed, Poisson fit only", file=sys.stderr)
        selections.append(sel)
    with output(args.out) as fh:
        write_fits(selections, fh, args.format)
    return 0


def cmd_table(args):
    priors = _require_priors(read_priors(args.fits))
    tables = [score_table(p, args.omega, args.t_grid, args.x_grid, label=j) for j, p in priors.items()]
    with output(args.out) as fh:
        if args.format == "json":
            json.dump({
                "omega": args.omega,
                "tables": [
                    {"journal_id": t.label, "t_grid": list(t.t_grid), "x_grid": list(t.x_grid),
                     "values": t.values.tolist()}
                    for t in tables
                ],
            }, fh, indent=2)
            fh.write("\n")
        else:
            fh.write(",".join(["journal_id", "t"] + [str(x) for x in args.x_grid]) + "\n")
            for t in tables:
                for tv, row in zip(t.t_grid, t.values):
                    fh.write(",".join([t.label, str(tv)] + [_fmt(v) for v in row]) + "\n")
    return 0


def cmd_score(args):
    priors = read_priors(args.fits)
    prior = _require_priors(priors, [args.journal])[args.journal]
    q = ScoreQuery(args.citations, args.age, args.omega)
    s = impact_score(prior, q)
    if q.t > 0 or q.x_plus == 0:
        dec = credibility_decomposition(prior, None, q.x_plus, q.t, q.omega)
        parts = {"gamma": dec.gamma, "data_term": dec.sample_mean_term, "prior_term": dec.prior_mean_term}
    else:
        parts = {"gamma": None, "data_term": None, "prior_term": None}
    record = {"journal_id": args.journal, "citations": q.x_plus, "age": q.t, "omega": q.omega,
              "score": s, **parts}
    with output(args.out) as fh:
        if args.format == "json":
            json.dump(record, fh, indent=2)
            fh.write("\n")
        else:
            fh.write(",".join(record) + "\n")
            fh.write(",".join(_cell(v) for v in record.values()) + "\n")
    return 0


def cmd_elasticity(args):
    priors = _require_priors(read_priors(args.fits))
    curves = elasticity_curves(priors, args.x_grid, args.t_grid)
    with output(args.out) as fh:
        if args.format == "json":
            json.dump([{"journal_id": c.label, "axis": c.axis, "grid": c.grid.tolist(),
                        "elasticity": c.elasticities.tolist()} for c in curves], fh, indent=2)
            fh.write("\n")
        else:
            fh.write("journal_id,axis,value,elasticity\n")
            for c in curves:
                for g, e in zip(c.grid, c.elasticities):
                    fh.write(f"{c.label},{c.axis},{float(g):g},{float(e)!r}\n")
    return 0


def _comparison(args):
    if args.reference_year is None:
        raise InputError("--reference-year is required")
    articles = read_articles(args.articles)
    priors = read_priors(args.fits)
    journals = sorted({a.journal_id for a in articles})
    known = {j: p for j, p in priors.items() if p is not None}
    if any(j not in known for j in journals):
        counts = {j: sum(a.journal_id == j for a in articles) for j in journals if j not in known}
        detail = ", ".join(f"{j} ({n} articles)" for j, n in counts.items())
        raise InputError(f"articles reference journals without NB fits: {detail}")
    return compare_fcr(articles, known, args.reference_year, args.omega)


def _write_stats_table(report, fh):
    fh.write(",".join(("metric", "journal_id") + TABLE_COLUMNS) + "\n")
    for metric, stats in (("fcr", report.fcr_stats), ("bayesian_score", report.score_stats)):
        for j, st in stats.items():
            cells = [_cell(v) for v in st.as_row()]
            fh.write(",".join([metric, j] + cells) + "\n")


def cmd_stats(args):
    report = _comparison(args)
    if not has_fcr_column(args.articles) or report.n_pairs == 0:
        print("notice: no FCR values; Bayesian Score statistics only", file=sys.stderr)
    with output(args.out) as fh:
        _write_stats_table(report, fh)
    return 0


def cmd_compare(args):
    report = _comparison(args)
    if report.pearson_r is None:
        print("notice: correlation omitted (fewer than two articles with FCR)", file=sys.stderr)
    with output(args.out) as fh:
        if args.format == "json":
            json.dump(report.to_dict(), fh, indent=2)
            fh.write("\n")
        else:
            _write_stats_table(report, fh)
            r = _cell(report.pearson_r)
            fh.write(f"# pearson_r={r} n_pairs={report.n_pairs}\n")
    return 0


def _journal_spec(text):
    parts = text.split(":")
    try:
        if len(parts) == 3:
            return parts[0], float(parts[1]), float(parts[2])
        if len(parts) == 2:
            return parts[0], float(parts[1]), None
    except ValueError:
        pass
    raise argparse.ArgumentTypeError(f"expected ID:ALPHA:BETA or ID:THETA, got {text!r}")


def _child_seed(seed, index):
    return int(np.random.SeedSequence([seed, index]).generate_state(1, dtype=np.uint64)[0])


def cmd_simulate(args):
    if not args.journal:
        raise InputError("give at least one --journal ID:ALPHA:BETA (or ID:THETA for Poisson)")
    seed = 0 if args.seed is None else args.seed
    if args.n < 1:
        raise InputError("--n must be at least 1")
    samples = []
    for i, (label, a, b) in enumerate(args.journal):
        child = _child_seed(seed, i)
        if b is None:
            samples.append(sample_poisson(a, args.n, child, label=label))
        else:
            samples.append(sample_negbin(SimulationConfig(a, b, args.n, child), label=label))
    specs = " ".join(f"{lbl}:{a:g}" + ("" if b is None else f":{b:g}") for lbl, a, b in args.journal)
    comment = f"bayes_impact {__version__} simulate; {GENERATOR}; seed={seed}; n={args.n}; {specs}"
    with output(args.out) as fh:
        write_counts(samples, fh, comment)
    return 0


def build_parser():
    p = argparse.ArgumentParser(prog="bayes-impact", description="Bayesian Impact Score toolkit")
    p.add_argument("--version", action="version", version=__version__)
    sub = p.add_subparsers(dest="command", required=True)

    def common(sp, fmt=True):
        sp.add_argument("--out", help="output file (default stdout)")
        if fmt:
            sp.add_argument("--format", choices=("csv", "json"), default="csv")

    sp = sub.add_parser("fit", help="fit Poisson and NB models per journal")
    sp.add_argument("counts")
    common(sp)
    sp.set_defaults(func=cmd_fit)

    sp = sub.add_parser("table", help="score grid per journal")
    sp.add_argument("fits")
    sp.add_argument("--omega", type=positive_float, default=1.0)
    sp.add_argument("--t-grid", type=parse_grid, default=DEFAULT_T_GRID)
    sp.add_argument("--x-grid", type=parse_grid, default=DEFAULT_X_GRID)
    common(sp)
    sp.set_defaults(func=cmd_table)

    sp = sub.add_parser("score", help="score one article")
    sp.add_argument("fits")
    sp.add_argument("--journal", required=True)
    sp.add_argument("--citations", type=int, required=True)
    sp.add_argument("--age", type=float, required=True)
    sp.add_argument("--omega", type=positive_float, default=1.0)
    common(sp)
    sp.set_defaults(func=cmd_score)

    sp = sub.add_parser("elasticity", help="citation and time elasticity series")
    sp.add_argument("fits")
    sp.add_argument("--x-grid", type=parse_grid, default=tuple(range(0, 101)))
    sp.add_argument("--t-grid", type=parse_grid, default=tuple(range(0, 21, 2)))
    common(sp)
    sp.set_defaults(func=cmd_elasticity)

    for name, func, fmt in (("stats", cmd_stats, False), ("compare", cmd_compare, True)):
        sp = sub.add_parser(name, help="descriptive statistics" if name == "stats"
                            else "FCR vs Bayesian Score report")
        sp.add_argument("articles")
        sp.add_argument("--fits", required=True)
        sp.add_argument("--reference-year", type=int)
        sp.add_argument("--omega", type=positive_float, default=1.0)
        common(sp, fmt)
        if fmt:
            sp.set_defaults(format="json")
        sp.set_defaults(func=func)

    sp = sub.add_parser("simulate", help="write synthetic counts")
    sp.add_argument("--journal", type=_journal_spec, action="append", metavar="ID:ALPHA:BETA")
    sp.add_argument("--n", type=int, default=100_000)
    sp.add_argument("--seed", type=int)
    common(sp, fmt=False)
    sp.set_defaults(func=cmd_simulate)
    return p


def main(argv=None):
    args = build_parser().parse_args(argv)
    logging.basicConfig(level=logging.WARNING, format="%(levelname)s: %(message)s")
    try:
        return args.func(args)
    except (BayesImpactError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
