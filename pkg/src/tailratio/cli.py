"""Command-line front end.

Subcommands cover the whole library: ratio-outlier detection, the k-sigma
baseline, the three probability routes plus the small-n oracle, the
convergence-condition probe, tail-index estimation, and the running-mean
experiments.  All numeric output is reproducible bit-for-bit from the flags:
Monte Carlo subcommands require an explicit --seed (no silent entropy) and
--threads never changes numbers, only scheduling.

Exit codes: 0 success, 2 argument error, 3 capability error, 4 insufficient
data, 5 accuracy failure, 6 degenerate frequency.
"""

import argparse
import json
import sys

from . import lln, probability, records
from .errors import (
    AccuracyError,
    CapabilityError,
    DegenerateFrequencyError,
    InsufficientDataError,
    ParameterDomainError,
)
from .estimation import estimate_alpha_from_data
from .families import parse_family_spec
from .outliers import is_outlier, ksigma_outliers

EXIT_ARGUMENT = 2
EXIT_CAPABILITY = 3
EXIT_INSUFFICIENT = 4
EXIT_ACCURACY = 5
EXIT_DEGENERATE = 6


def _add_output_flags(p):
    p.add_argument(
        "--format",
        choices=["json", "csv"],
        default=None,
        help="output format (default: json)",
    )
    p.add_argument("--output", default=None, help="output file (default: stdout)")
    p.add_argument(
        "--config",
        default=None,
        help="JSON file supplying the same keys as the flags; flags override it",
    )


def _add_dist_flag(p):
    p.add_argument(
        "--dist",
        default=None,
        help="family spec, name:key=value,... "
        "(e.g. pareto:alpha=1.5,xm=1 or stable:alpha=0.6,scale=1)",
    )


def build_parser():
    parser = argparse.ArgumentParser(
        prog="tailratio",
        description="Ratio-based outlier detection and tail-index estimation "
        "for heavy-tailed data.",
    )
    sub = parser.add_subparsers(dest="subcommand", required=True)

    p = sub.add_parser(
        "detect", help="ratio-outlier verdict on newline-delimited input data"
    )
    p.add_argument("--kappa", type=float, default=None, help="ratio threshold in (0,1), default 0.5")
    p.add_argument("--input", default=None, help="input file, one number per line ('-' or omit for stdin)")
    _add_output_flags(p)

    p = sub.add_parser("ksigma", help="classical k-sigma outlier indices (baseline rule)")
    p.add_argument("--k", type=float, default=None, help="number of standard deviations, default 3")
    p.add_argument("--input", default=None, help="input file ('-' or omit for stdin)")
    _add_output_flags(p)

    p = sub.add_parser("prob-limit", help="large-n outlier probability kappa**alpha")
    p.add_argument("--kappa", type=float, default=None, help="ratio threshold in (0,1], default 0.5")
    p.add_argument("--alpha", type=float, default=None, help="tail index, positive (required)")
    _add_output_flags(p)

    p = sub.add_parser("prob-exact", help="finite-n outlier probability by quadrature")
    _add_dist_flag(p)
    p.add_argument("--n", type=int, default=None, help="sample size, >= 2 (required)")
    p.add_argument("--kappa", type=float, default=None, help="ratio threshold in (0,1), default 0.5")
    _add_output_flags(p)

    p = sub.add_parser("prob-mc", help="Monte Carlo outlier probability with Wilson interval")
    _add_dist_flag(p)
    p.add_argument("--n", type=int, default=None, help="sample size, >= 2 (required)")
    p.add_argument("--kappa", type=float, default=None, help="ratio threshold in (0,1), default 0.5")
    p.add_argument("--trials", type=int, default=None, help="number of samples, default 100000")
    p.add_argument("--seed", type=int, default=None, help="64-bit RNG seed (required; no silent entropy)")
    p.add_argument("--confidence", type=float, default=None, help="Wilson interval level, default 0.95")
    p.add_argument("--threads", type=int, default=None, help="worker threads; never changes numeric output (default 1)")
    _add_output_flags(p)

    p = sub.add_parser("prob-oracle", help="small-n probability from the joint top-two density")
    _add_dist_flag(p)
    p.add_argument("--n", type=int, default=None, help="sample size in 2..8 (required)")
    p.add_argument("--kappa", type=float, default=None, help="ratio threshold in (0,1), default 0.5")
    _add_output_flags(p)

    p = sub.add_parser("check-conditions", help="numeric probe of the convergence conditions")
    _add_dist_flag(p)
    p.add_argument("--kappa", type=float, default=None, help="ratio threshold in (0,1), default 0.5")
    p.add_argument("--n", type=int, default=None, help="sample size for the edge probe, default 1000")
    p.add_argument("--probe-lo", type=float, default=None, help="lower end of probe range (default: near support edge)")
    p.add_argument("--probe-hi", type=float, default=None, help="upper end of probe range, default 50")
    p.add_argument("--grid-points", type=int, default=None, help="grid size for the integrand probe, default 401")
    _add_output_flags(p)

    p = sub.add_parser("estimate-alpha", help="tail index from block outlier frequency")
    p.add_argument("--block-size", type=int, default=None, help="observations per block, >= 2 (required)")
    p.add_argument("--kappa", type=float, default=None, help="ratio threshold in (0,1), default 0.5")
    p.add_argument("--confidence", type=float, default=None, help="CI level, default 0.95")
    p.add_argument("--input", default=None, help="input file ('-' or omit for stdin)")
    _add_output_flags(p)

    p = sub.add_parser("lln-demo", help="running-mean trajectories / scaling-exponent experiment")
    _add_dist_flag(p)
    p.add_argument("--mode", choices=["trajectory", "scaling"], default=None, help="default: scaling")
    p.add_argument("--total", type=int, default=None, help="trajectory stream length, default 100000")
    p.add_argument("--checkpoints", default=None, help="comma-separated checkpoints, default 100,1000,10000,100000")
    p.add_argument("--replications", type=int, default=None, help="trajectory/scaling replications, default 200")
    p.add_argument("--ns", default=None, help="comma-separated sample sizes for scaling, default 1000,10000,100000")
    p.add_argument("--seed", type=int, default=None, help="64-bit RNG seed (required)")
    p.add_argument("--threads", type=int, default=None, help="worker threads; never changes numeric output (default 1)")
    _add_output_flags(p)

    return parser


class _Config:
    """Flag values merged over an optional JSON config file."""

    def __init__(self, args):
        self.args = vars(args)
        self.file = {}
        path = self.args.get("config")
        if path:
            with open(path, encoding="utf-8") as fh:
                loaded = json.load(fh)
            if not isinstance(loaded, dict):
                raise ParameterDomainError("config file must hold a JSON object")
            self.file = {str(k).replace("-", "_"): v for k, v in loaded.items()}

    def get(self, key, default=None, required=False, cast=None):
        value = self.args.get(key)
        if value is None:
            value = self.file.get(key)
        if value is None:
            value = default
        if value is None and required:
            raise ParameterDomainError(f"missing required option --{key.replace('_', '-')}")
        if value is not None and cast is not None:
            value = cast(value)
        return value


def _int_list(text):
    if isinstance(text, (list, tuple)):
        return [int(v) for v in text]
    return [int(v) for v in str(text).split(",") if v.strip()]


def _family(cfg):
    spec = cfg.get("dist", required=True, cast=str)
    return parse_family_spec(spec)


def _check_threads(cfg):
    threads = cfg.get("threads", default=1, cast=int)
    if threads < 1:
        raise ParameterDomainError(f"threads must be >= 1, got {threads}")
    return threads


def _run_subcommand(args):
    cfg = _Config(args)
    sc = args.subcommand

    if sc == "detect":
        data = records.read_values(cfg.get("input"))
        verdict = is_outlier(data, cfg.get("kappa", default=0.5, cast=float))
        return records.verdict_record(verdict)

    if sc == "ksigma":
        data = records.read_values(cfg.get("input"))
        idx = ksigma_outliers(data, cfg.get("k", default=3.0, cast=float))
        return {
            "k": cfg.get("k", default=3.0, cast=float),
            "count": len(idx),
            "indices": ";".join(str(i) for i in sorted(idx)),
        }

    if sc == "prob-limit":
        kappa = cfg.get("kappa", default=0.5, cast=float)
        alpha = cfg.get("alpha", required=True, cast=float)
        return records.limit_record(
            probability.limit_probability(kappa, alpha), kappa, alpha
        )

    if sc == "prob-exact":
        family = _family(cfg)
        result = probability.exact_probability(
            family,
            cfg.get("n", required=True, cast=int),
            cfg.get("kappa", default=0.5, cast=float),
        )
        return records.probability_record(result, family)

    if sc == "prob-mc":
        family = _family(cfg)
        _check_threads(cfg)
        result = probability.mc_probability(
            family,
            cfg.get("n", required=True, cast=int),
            cfg.get("kappa", default=0.5, cast=float),
            cfg.get("trials", default=100_000, cast=int),
            cfg.get("seed", required=True, cast=int),
            cfg.get("confidence", default=0.95, cast=float),
        )
        return records.probability_record(result, family)

    if sc == "prob-oracle":
        family = _family(cfg)
        result = probability.joint_oracle_probability(
            family,
            cfg.get("n", required=True, cast=int),
            cfg.get("kappa", default=0.5, cast=float),
        )
        return records.probability_record(result, family)

    if sc == "check-conditions":
        family = _family(cfg)
        kappa = cfg.get("kappa", default=0.5, cast=float)
        n = cfg.get("n", default=1000, cast=int)
        probe_lo = cfg.get("probe_lo", cast=float)
        probe_hi = cfg.get("probe_hi", default=50.0, cast=float)
        probe = None if probe_lo is None else (probe_lo, probe_hi)
        if probe is None and probe_hi is not None:
            probe = (family.support_lo + 0.01, probe_hi)
        report = probability.check_theorem_conditions(
            family,
            kappa,
            n,
            probe_range=probe,
            grid_points=cfg.get("grid_points", default=401, cast=int),
        )
        return records.condition_record(report, family, kappa, n)

    if sc == "estimate-alpha":
        data = records.read_values(cfg.get("input"))
        estimate = estimate_alpha_from_data(
            data,
            cfg.get("block_size", required=True, cast=int),
            cfg.get("kappa", default=0.5, cast=float),
            cfg.get("confidence", default=0.95, cast=float),
        )
        return records.alpha_record(estimate)

    if sc == "lln-demo":
        family = _family(cfg)
        _check_threads(cfg)
        seed = cfg.get("seed", required=True, cast=int)
        mode = cfg.get("mode", default="scaling", cast=str)
        if mode == "trajectory":
            total = cfg.get("total", default=100_000, cast=int)
            cps = _int_list(
                cfg.get("checkpoints", default="100,1000,10000,100000")
            )
            reps = cfg.get("replications", default=1, cast=int)
            rows = []
            for r in range(reps):
                series = lln.running_mean_trajectory(family, total, cps, (seed + r) % 2**64)
                rows.extend(
                    (n, r, m)
                    for n, m in zip(series.checkpoints, series.running_means)
                )
            return ("csv-table", records.rows_to_csv(["n", "replication", "running_mean"], rows))
        result = lln.scaling_exponent_experiment(
            family,
            _int_list(cfg.get("ns", default="1000,10000,100000")),
            cfg.get("replications", default=200, cast=int),
            seed,
        )
        alpha = family.tail_index
        if alpha is None and family.name == "stable":
            alpha = family.params["alpha"]
        theory = lln.theory_slope(alpha) if alpha is not None else None
        rows = [(n, m) for n, m in zip(result.ns, result.per_n_medians)]
        table = records.rows_to_csv(["n", "median_abs_mean"], rows)
        table += records.rows_to_csv(["slope", "theory_slope"], [(result.slope, theory)])
        return ("csv-table", table)

    raise ParameterDomainError(f"unknown subcommand {sc!r}")


def _emit(payload, cfg_args):
    cfg = _Config(cfg_args)
    fmt = cfg.get("format", default="json", cast=str)
    if isinstance(payload, tuple) and payload[0] == "csv-table":
        text = payload[1]
    elif fmt == "csv":
        text = records.to_csv(payload)
    else:
        text = records.to_json(payload)
    out_path = cfg.get("output")
    if out_path:
        with open(out_path, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        payload = _run_subcommand(args)
        _emit(payload, args)
    except DegenerateFrequencyError as exc:
        print(
            f"error: {exc} "
            f"({exc.confidence:.0%} {exc.bound_side} bound on alpha: {exc.bound:.6g})",
            file=sys.stderr,
        )
        return EXIT_DEGENERATE
    except AccuracyError as exc:
        print(
            f"error: {exc} (best estimate {exc.best_estimate!r})", file=sys.stderr
        )
        return EXIT_ACCURACY
    except InsufficientDataError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INSUFFICIENT
    except CapabilityError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CAPABILITY
    except (ParameterDomainError, ValueError, OSError, json.JSONDecodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ARGUMENT
    return 0


if __name__ == "__main__":
    sys.exit(main())
