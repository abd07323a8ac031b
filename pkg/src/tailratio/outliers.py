"""Order-statistic outlier machinery.

Two detectors live here.  The ratio detector declares the largest magnitude
an outlier of order 1/kappa when the second-largest magnitude is at most
kappa times the largest.  The classical k-sigma rule (mean plus k population
standard deviations) is included as the baseline it is meant to replace:
a single huge observation inflates s enough to hide itself, which the ratio
detector is immune to.

All operations are pure functions over immutable sequences.
"""

from dataclasses import dataclass

import numpy as np

from .errors import InsufficientDataError, ParameterDomainError


@dataclass(frozen=True)
class TopTwo:
    """Largest and second-largest magnitudes with their source indices."""

    max_magnitude: float
    second_magnitude: float
    max_index: int
    second_index: int


@dataclass(frozen=True)
class OutlierVerdict:
    """Result of the ratio test: is the top magnitude an outlier of order 1/kappa."""

    is_outlier: bool
    kappa: float
    ratio: float
    top_two: TopTwo


def _check_kappa(kappa):
    kappa = float(kappa)
    if not 0.0 < kappa < 1.0:
        raise ParameterDomainError(f"kappa must lie in (0, 1), got {kappa}")
    return kappa


def top_two_magnitudes(data):
    """Select the two largest absolute values in a single pass.

    Ties are broken by the earlier index taking the higher rank, so the
    result always agrees with a stable sort of the magnitudes.

    Parameters
    ----------
    data : sequence of reals, length >= 2

    Returns
    -------
    TopTwo
    """
    mags = np.abs(np.asarray(data, dtype=float))
    if mags.ndim != 1 or mags.size < 2:
        raise InsufficientDataError(
            f"need at least 2 values to rank the top two, got {mags.size}"
        )
    best = second = -np.inf
    best_i = second_i = -1
    for i, m in enumerate(mags):
        if m > best:
            second, second_i = best, best_i
            best, best_i = m, i
        elif m > second:
            second, second_i = m, i
    return TopTwo(
        max_magnitude=float(best),
        second_magnitude=float(second),
        max_index=best_i,
        second_index=second_i,
    )


def is_outlier(data, kappa):
    """Ratio test: does the second magnitude fall at or below kappa times the max.

    The comparison is non-strict (<=); for continuous data the boundary has
    probability zero, but ties on discrete data count as outliers.
    """
    kappa = _check_kappa(kappa)
    top = top_two_magnitudes(data)
    if top.max_magnitude == 0.0:
        ratio = 0.0
    else:
        ratio = top.second_magnitude / top.max_magnitude
    return OutlierVerdict(
        is_outlier=top.second_magnitude <= kappa * top.max_magnitude,
        kappa=kappa,
        ratio=ratio,
        top_two=top,
    )


def ksigma_outliers(data, k):
    """Indices j with |X_j - mean| > k * s, s the population (1/n) std.

    Returns the empty set for constant data, where s = 0 and no deviation
    can exceed the threshold.
    """
    k = float(k)
    if not k > 0.0:
        raise ParameterDomainError(f"k must be positive, got {k}")
    x = np.asarray(data, dtype=float)
    if x.ndim != 1 or x.size < 2:
        raise InsufficientDataError(
            f"need at least 2 values for the k-sigma rule, got {x.size}"
        )
    s = x.std()  # population convention, divide by n
    if s == 0.0:
        return set()
    return set(np.flatnonzero(np.abs(x - x.mean()) > k * s).tolist())


def block_event_frequency(data, block_size, kappa):
    """Frequency of the outlier event over consecutive disjoint blocks.

    Partitions `data` into floor(len/block_size) blocks of exactly
    `block_size` values, discarding the remainder, and returns the fraction
    of blocks where :func:`is_outlier` holds together with the block count.
    Blocks are never overlapped or shuffled, preserving the i.i.d.-block
    structure a binomial confidence interval assumes.
    """
    kappa = _check_kappa(kappa)
    n = int(block_size)
    if n < 2:
        raise ParameterDomainError(f"block_size must be >= 2, got {block_size}")
    x = np.asarray(data, dtype=float)
    blocks = x.size // n
    if blocks < 1:
        raise InsufficientDataError(
            f"need at least one full block of {n} values, got {x.size}"
        )
    mags = np.abs(x[: blocks * n]).reshape(blocks, n)
    # top-two per row without a full sort
    part = np.partition(mags, n - 2, axis=1)
    hits = part[:, n - 2] <= kappa * part[:, n - 1]
    return float(hits.mean()), blocks
