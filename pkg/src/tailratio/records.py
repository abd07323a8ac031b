"""Flat output records and plain-text data ingestion.

Every analysis result serializes to a flat record with a fixed key order,
emitted as a single JSON object or a one-row CSV table.  CSV uses '.' as
the decimal separator, no grouping, and 17 significant digits so 64-bit
floats round-trip losslessly.
"""

import io
import json
import sys


def _fmt(value):
    if value is None:
        return ""
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, float):
        return format(value, ".17g")
    return str(value)


def _params_string(params):
    return ";".join(f"{k}={format(float(v), '.17g')}" for k, v in params.items())


def probability_record(result, family):
    """Record for any ProbabilityResult, keyed by method."""
    ci = result.ci or (None, None)
    return {
        "method": result.method,
        "family": family.name if family is not None else None,
        "params": _params_string(family.params) if family is not None else None,
        "n": result.n,
        "kappa": result.kappa,
        "value": result.value,
        "error_estimate": result.error_estimate,
        "ci_lo": ci[0],
        "ci_hi": ci[1],
        "trials": result.trials,
        "seed": result.seed,
    }


def limit_record(value, kappa, alpha):
    return {
        "method": "limit",
        "family": None,
        "params": f"alpha={format(float(alpha), '.17g')}",
        "n": None,
        "kappa": float(kappa),
        "value": float(value),
        "error_estimate": 0.0,
        "ci_lo": None,
        "ci_hi": None,
        "trials": None,
        "seed": None,
    }


def alpha_record(estimate):
    return {
        "alpha_hat": estimate.alpha_hat,
        "p_hat": estimate.p_hat,
        "kappa": estimate.kappa,
        "block_size": estimate.block_size,
        "blocks": estimate.blocks,
        "ci_lo": estimate.ci[0],
        "ci_hi": estimate.ci[1],
        "confidence": estimate.confidence,
    }


def verdict_record(verdict):
    top = verdict.top_two
    return {
        "is_outlier": verdict.is_outlier,
        "kappa": verdict.kappa,
        "ratio": verdict.ratio,
        "max_magnitude": top.max_magnitude,
        "second_magnitude": top.second_magnitude,
        "max_index": top.max_index,
        "second_index": top.second_index,
    }


def condition_record(report, family, kappa, n):
    return {
        "family": family.name,
        "params": _params_string(family.params),
        "n": n,
        "kappa": kappa,
        "boundary_ratio_limit": report.boundary_ratio_limit,
        "zero_limit_ok": report.zero_limit_ok,
        "integrand_integral": report.integrand_integral,
        "notes": report.notes,
    }


def to_json(record):
    """Single JSON object with the record's fixed key order."""
    return json.dumps(record) + "\n"


def to_csv(record):
    """One header row plus one value row."""
    out = io.StringIO()
    out.write(",".join(record.keys()) + "\n")
    out.write(",".join(_fmt(v).replace(",", ";") for v in record.values()) + "\n")
    return out.getvalue()


def rows_to_csv(header, rows):
    """Plot-ready CSV from an iterable of row tuples."""
    out = io.StringIO()
    out.write(",".join(header) + "\n")
    for row in rows:
        out.write(",".join(_fmt(v) for v in row) + "\n")
    return out.getvalue()


def read_values(path=None):
    """Read newline-delimited numbers from a file path or standard input.

    Blank lines and lines starting with '#' are ignored.
    """
    if path is None or path == "-":
        text = sys.stdin.read()
    else:
        with open(path, encoding="utf-8") as fh:
            text = fh.read()
    values = []
    for lineno, line in enumerate(text.splitlines(), start=1):
        stripped = line.strip()
        if not stripped or stripped.startswith("#"):
            continue
        try:
            values.append(float(stripped))
        except ValueError:
            raise ValueError(
                f"line {lineno}: not a number: {stripped!r}"
            ) from None
    return values
