"""Multiple-copy conversion: geometric-average probabilities over m copies.

For m copies the per-copy figure of merit is ``p_max(x^m -> y^m) ** (1/m)``.
Its supremum over m is bounded above by ``min{1, alpha_n/beta_n}`` and
approaches it. Every threshold decision compares radicands
(``p_max(m copies) >= p**m``), so exact mode never decides anything through
a floating-point root.
"""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional

from ._numeric import EXACT, FLOAT, Scalar, is_exact, power_ge, root, to_scalar
from .errors import CopyCountZeroError, InvalidProbabilityError
from .spectra import CompressedSpectrum, common_mode, tensor_power
from .vidal import closed_form_pe, p_max

DEFAULT_CAP = 20


@dataclass(frozen=True)
class MulticopyEntry:
    m: int
    p_avg: Scalar
    radicand: Scalar
    blocks_source: int
    blocks_target: int


@dataclass(frozen=True)
class MulticopyTrace:
    entries: tuple
    best_m: int
    best_p_avg: Scalar
    closed_form_bound: Scalar
    stopped_early: bool = False


@dataclass(frozen=True)
class FiniteMResult:
    """Outcome of :func:`find_finite_m`.

    ``status`` is ``"found"``, ``"boundary"`` (threshold equals the closed
    form and the capped scan found nothing; undecided) or ``"not-found"``.
    With ``impossible`` set, no copy number can ever reach the threshold;
    otherwise the scan hit ``cap``.
    """

    status: str
    m: Optional[int]
    p: Scalar
    closed_form_bound: Scalar
    cap: int
    impossible: bool = False
    scanned: tuple = field(default=())


def multicopy_radicand(source: CompressedSpectrum, target: CompressedSpectrum, m: int) -> Scalar:
    """p_max of the m-copy conversion (before taking the m-th root)."""
    if m < 1:
        raise CopyCountZeroError("copy count must be at least 1")
    source, target = common_mode(source, target)
    return p_max(tensor_power(source, m), tensor_power(target, m)).p_max


def p_multicopy_avg(source: CompressedSpectrum, target: CompressedSpectrum, m: int) -> Scalar:
    """Geometric-average per-copy probability over m copies.

    Exact when the m-copy probability is a perfect m-th power of a rational
    (in particular 0 and 1), float otherwise.
    """
    return root(multicopy_radicand(source, target, m), m)


def _entry(args) -> MulticopyEntry:
    source, target, m = args
    ps, pt = tensor_power(source, m), tensor_power(target, m)
    r = p_max(ps, pt).p_max
    return MulticopyEntry(m, root(r, m), r, ps.n_blocks, pt.n_blocks)


def _reached(radicand: Scalar, m: int, bound: Scalar, gap) -> bool:
    if gap == 0 and is_exact(radicand) and is_exact(bound):
        return radicand == Fraction(bound) ** m
    return float(bound) - float(root(radicand, m)) <= gap


def estimate_pm(
    source: CompressedSpectrum,
    target: CompressedSpectrum,
    m_max: int,
    early_stop_gap=None,
    workers: int | None = None,
) -> MulticopyTrace:
    """Sweep m = 1..m_max and bracket the multiple-copy optimum.

    ``best_p_avg`` (running maximum) is a certified lower bound and
    ``closed_form_bound`` a certified upper bound. No monotonicity in m is
    assumed. With ``early_stop_gap`` set, the sweep stops at the first m
    whose value is within that gap of the bound (0 means: exactly at it).
    ``workers > 1`` evaluates copy numbers in separate processes; results
    are merged in m order, so the trace does not depend on scheduling.
    """
    if m_max < 1:
        raise CopyCountZeroError("m_max must be at least 1")
    if early_stop_gap is not None and early_stop_gap < 0:
        raise ValueError("early_stop_gap must be nonnegative")
    source, target = common_mode(source, target)
    bound = closed_form_pe(source, target)
    jobs = [(source, target, m) for m in range(1, m_max + 1)]

    entries: list = []
    stopped = False
    if workers and workers > 1 and early_stop_gap is None:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            entries = list(pool.map(_entry, jobs))
    else:
        for job in jobs:
            e = _entry(job)
            entries.append(e)
            if early_stop_gap is not None and _reached(e.radicand, e.m, bound, early_stop_gap):
                stopped = e.m < m_max
                break

    best = entries[0]
    for e in entries[1:]:
        if not power_ge(best.radicand, best.m, e.radicand, e.m):
            best = e
    return MulticopyTrace(tuple(entries), best.m, best.p_avg, bound, stopped)


def find_finite_m(
    source: CompressedSpectrum,
    target: CompressedSpectrum,
    p,
    cap: int = DEFAULT_CAP,
) -> FiniteMResult:
    """Smallest m with ``p_max(m copies) >= p**m``, when one must exist.

    Such an m exists whenever ``p < min{1, alpha_n/beta_n}``, but nothing
    bounds it, so the search is capped. Above the bound no m can work and
    nothing is scanned. Exactly at the bound existence is an open question:
    the scan still runs, a hit is reported as ``"found"``, and a miss as
    ``"boundary"`` rather than ``"not-found"``.
    """
    source, target = common_mode(source, target)
    p = to_scalar(p, EXACT if source.exact else FLOAT)
    if p <= 0 or p > 1:
        raise InvalidProbabilityError(f"threshold {p} is not in (0, 1]")
    if cap < 1:
        raise CopyCountZeroError("cap must be at least 1")
    bound = closed_form_pe(source, target)
    if p > bound:
        return FiniteMResult("not-found", None, p, bound, cap, impossible=True)

    scanned = []
    for m in range(1, cap + 1):
        r = multicopy_radicand(source, target, m)
        scanned.append((m, r))
        if r >= p**m:
            return FiniteMResult("found", m, p, bound, cap, scanned=tuple(scanned))
    if p == bound:
        return FiniteMResult("boundary", None, p, bound, cap, scanned=tuple(scanned))
    return FiniteMResult("not-found", None, p, bound, cap, scanned=tuple(scanned))
