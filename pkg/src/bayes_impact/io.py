"""CSV/JSON readers and writers for the command-line tool.

Formats (UTF-8, comma separated, ``#`` lines ignored):

counts    ``journal_id,count``, one observation per row
fits      ``journal_id,n,theta_hat,poisson_aic,alpha_hat,beta_hat,negbin_aic,winner``
          followed by optional ``poisson_loglik,negbin_loglik,converged,iterations``;
          only ``journal_id,alpha_hat,beta_hat`` are needed to score.
          A JSON list of objects with the same keys is accepted too.
articles  ``article_id,journal_id,pub_year,citations,fcr`` with ``fcr``
          optional (column may be missing or cells empty)
"""

import csv
import io
import json
import sys
from collections import defaultdict
from contextlib import contextmanager
from pathlib import Path

import numpy as np

from .analytics import ArticleRecord
from .errors import InputError
from .model import CitationSample, GammaPrior

COUNTS_HEADER = ("journal_id", "count")
FIT_COLUMNS = (
    "journal_id", "n", "theta_hat", "poisson_aic", "alpha_hat", "beta_hat", "negbin_aic", "winner",
    "poisson_loglik", "negbin_loglik", "converged", "iterations",
)
ARTICLE_COLUMNS = ("article_id", "journal_id", "pub_year", "citations", "fcr")


@contextmanager
def _open(source):
    if hasattr(source, "read"):
        yield source
    else:
        with open(source, encoding="utf-8", newline="") as fh:
            yield fh


def _rows(source):
    """Yield (line number, fields) for each non-comment, non-blank line."""
    with _open(source) as fh:
        text = fh.read()
    lines = [(i, ln) for i, ln in enumerate(text.splitlines(), 1)
             if ln.strip() and not ln.lstrip().startswith("#")]
    parsed = csv.reader([ln for _, ln in lines])
    for (lineno, _), fields in zip(lines, parsed):
        yield lineno, [f.strip() for f in fields]


def _header(rows, source, required, optional=()):
    try:
        lineno, header = next(rows)
    except StopIteration:
        raise InputError(f"{source}: file is empty") from None
    missing = [c for c in required if c not in header]
    unknown = [c for c in header if c not in required and c not in optional]
    if missing or unknown:
        raise InputError(
            f"{source}:{lineno}: bad header {header}; expected {list(required) + list(optional)}"
        )
    return {c: header.index(c) for c in header}


def read_counts(source):
    """Counts CSV -> {journal_id: CitationSample}, keys sorted."""
    rows = _rows(source)
    cols = _header(rows, source, COUNTS_HEADER)
    data = defaultdict(list)
    for lineno, fields in rows:
        if len(fields) != len(cols):
            raise InputError(f"{source}:{lineno}: expected {len(cols)} fields, got {len(fields)}")
        journal = fields[cols["journal_id"]]
        raw = fields[cols["count"]]
        if not journal:
            raise InputError(f"{source}:{lineno}: empty journal_id")
        try:
            value = int(raw)
        except ValueError:
            raise InputError(f"{source}:{lineno}: count {raw!r} is not an integer") from None
        if value < 0:
            raise InputError(f"{source}:{lineno}: negative count {value}")
        data[journal].append(value)
    if not data:
        raise InputError(f"{source}: no observations")
    return {j: CitationSample(j, np.array(data[j], dtype=np.int64)) for j in sorted(data)}


def write_counts(samples, fh, comment=None):
    if comment:
        for line in comment.splitlines():
            fh.write(f"# {line}\n")
    fh.write(",".join(COUNTS_HEADER) + "\n")
    for s in samples:
        label = s.label
        fh.write("".join(f"{label},{int(c)}\n" for c in s.counts))


def fit_record(sel):
    """Flatten a ModelSelection to a fits-file row (dict)."""
    nb = sel.negbin
    return {
        "journal_id": sel.label,
        "n": sel.poisson.n,
        "theta_hat": sel.poisson.theta_hat,
        "poisson_aic": sel.poisson.aic,
        "alpha_hat": nb.alpha_hat if nb else None,
        "beta_hat": nb.beta_hat if nb else None,
        "negbin_aic": nb.aic if nb else None,
        "winner": sel.winner.value,
        "poisson_loglik": sel.poisson.log_likelihood,
        "negbin_loglik": nb.log_likelihood if nb else None,
        "converged": nb.converged if nb else None,
        "iterations": nb.iterations if nb else None,
    }


def _cell(v):
    """CSV text for one value: empty for None, full precision for floats."""
    if v is None:
        return ""
    if isinstance(v, (bool, np.bool_)):
        return str(bool(v))
    if isinstance(v, (float, np.floating)):
        return repr(float(v))
    return str(v)


def write_fits(selections, fh, fmt="csv"):
    records = [fit_record(s) for s in selections]
    if fmt == "json":
        json.dump(records, fh, indent=2)
        fh.write("\n")
        return
    fh.write(",".join(FIT_COLUMNS) + "\n")
    for r in records:
        fh.write(",".join(_cell(r[c]) for c in FIT_COLUMNS) + "\n")


def _to_prior(journal, alpha, beta, where):
    if alpha in (None, "") or beta in (None, ""):
        return None
    try:
        return GammaPrior(float(alpha), float(beta))
    except (TypeError, ValueError) as exc:
        raise InputError(f"{where}: journal {journal!r} has invalid parameters: {exc}") from None


def read_priors(source):
    """Fits file (CSV or JSON) -> {journal_id: GammaPrior or None}.

    None marks a journal with no negative binomial fit.
    """
    with _open(source) as fh:
        text = fh.read()
    if text.lstrip().startswith(("[", "{")):
        try:
            records = json.loads(text)
        except json.JSONDecodeError as exc:
            raise InputError(f"{source}: invalid JSON: {exc}") from None
        if isinstance(records, dict):
            records = records.get("fits", [])
        out = {}
        for i, r in enumerate(records):
            if "journal_id" not in r:
                raise InputError(f"{source}: record {i} has no journal_id")
            out[str(r["journal_id"])] = _to_prior(r["journal_id"], r.get("alpha_hat"), r.get("beta_hat"), source)
        if not out:
            raise InputError(f"{source}: no fits")
        return dict(sorted(out.items()))

    rows = _rows(io.StringIO(text))
    cols = _header(rows, source, ("journal_id", "alpha_hat", "beta_hat"),
                   tuple(c for c in FIT_COLUMNS if c not in ("journal_id", "alpha_hat", "beta_hat")))
    out = {}
    for lineno, fields in rows:
        if len(fields) != len(cols):
            raise InputError(f"{source}:{lineno}: expected {len(cols)} fields, got {len(fields)}")
        journal = fields[cols["journal_id"]]
        out[journal] = _to_prior(journal, fields[cols["alpha_hat"]], fields[cols["beta_hat"]],
                                 f"{source}:{lineno}")
    if not out:
        raise InputError(f"{source}: no fits")
    return dict(sorted(out.items()))


def read_articles(source):
    rows = _rows(source)
    cols = _header(rows, source, ARTICLE_COLUMNS[:4], ("fcr",))
    articles = []
    for lineno, fields in rows:
        if len(fields) != len(cols):
            raise InputError(f"{source}:{lineno}: expected {len(cols)} fields, got {len(fields)}")
        get = lambda c: fields[cols[c]]  # noqa: E731
        try:
            fcr = get("fcr") if "fcr" in cols else ""
            articles.append(ArticleRecord(
                article_id=get("article_id"),
                journal_id=get("journal_id"),
                pub_year=int(get("pub_year")),
                citations=int(get("citations")),
                fcr=float(fcr) if fcr != "" else None,
            ))
        except ValueError as exc:
            raise InputError(f"{source}:{lineno}: {exc}") from None
    if not articles:
        raise InputError(f"{source}: no articles")
    return articles


def has_fcr_column(source):
    rows = _rows(source)
    try:
        _, header = next(rows)
    except StopIteration:
        return False
    return "fcr" in header


@contextmanager
def output(path):
    """Text handle for ``path``, or stdout for None / "-"."""
    if path in (None, "-"):
        yield sys.stdout
        return
    Path(path).parent.mkdir(parents=True, exist_ok=True)
    with open(path, "w", encoding="utf-8", newline="") as fh:
        yield fh
