"""Catalyst-assisted conversion and the multi-copy/catalysis simulation.

A catalyst φ is borrowed and returned intact, so the figure of merit is
``p_max(x ⊗ φ -> y ⊗ φ)``. This module builds, from the m-copy problem, a
catalyst that does at least as well as the m-copy per-copy average, and
replays the three-step argument in the opposite direction (make φ from a
maximally entangled state, run m catalyzed conversions, give the maximally
entangled state back), checking every inequality along the way.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction

from ._numeric import Scalar, exact_root, is_exact
from .errors import (
    CopyCountTooSmallError,
    CrossCheckError,
    RankDeficientCatalystError,
    RankExceedsKError,
    UnsupportedDimensionError,
)
from .multicopy import multicopy_radicand
from .spectra import (
    CompressedSpectrum,
    common_mode,
    from_coefficients,
    maximally_entangled,
    tensor_power,
    tensor_product,
    weighted_direct_sum,
)
from .vidal import p_max


@dataclass(frozen=True)
class ProtocolReport:
    """Factors of the make-catalyst / catalyze m times / return protocol.

    ``product_bound = p1 * p2_lower_bound * p3`` never exceeds
    ``m_copy_p_max``; ``inert`` records that appending the maximally
    entangled state left the m-copy probability unchanged.
    """

    p1: Scalar
    p2_lower_bound: Scalar
    p3: Scalar
    product_bound: Scalar
    m_copy_p_max: Scalar
    k: int
    gamma_k: Scalar
    m: int
    catalyzed: Scalar
    inert: bool
    bound_holds: bool


@dataclass(frozen=True)
class CatalystSearchResult:
    best_catalyst: CompressedSpectrum
    best_p: Scalar
    baseline: Scalar
    grid_resolution: int
    k: int


def p_catalyzed(source, target, catalyst) -> Scalar:
    """p_max(source ⊗ catalyst -> target ⊗ catalyst)."""
    source, target, catalyst = common_mode(source, target, catalyst)
    return p_max(tensor_product(source, catalyst), tensor_product(target, catalyst)).p_max


def p_max_from_max_entangled(k: int, target: CompressedSpectrum) -> Scalar:
    """Converting the flat k-dimensional state into ``target``: always 1.

    The flat spectrum is majorized by every spectrum of rank at most k; the
    general formula is evaluated too and must agree.
    """
    if target.rank > k:
        raise RankExceedsKError(f"target rank {target.rank} exceeds k={k}")
    general = p_max(maximally_entangled(k), target).p_max
    one = Fraction(1) if target.exact else 1.0
    if general != one:
        raise CrossCheckError(f"p_max(Phi_{k} -> target) = {general}, expected 1")
    return one


def p_max_to_max_entangled(catalyst: CompressedSpectrum, k: int | None = None) -> Scalar:
    """Converting ``catalyst`` into the flat k-dimensional state: k * gamma_k.

    ``k`` defaults to the catalyst dimension; the catalyst must have full
    rank there, since gamma_k is its least coefficient.
    """
    k = catalyst.dim if k is None else k
    if k != catalyst.dim or catalyst.rank < k:
        raise RankDeficientCatalystError(
            f"catalyst has rank {catalyst.rank} on dimension {catalyst.dim}; need full rank {k}"
        )
    value = k * catalyst.smallest
    general = p_max(catalyst, maximally_entangled(k)).p_max
    if (general != value) if catalyst.exact else abs(general - value) > 1e-12:
        raise CrossCheckError(f"k*gamma_k = {value} but p_max = {general}")
    return value


def _weight_root(radicand: Scalar, m: int):
    """p_m = radicand**(1/m), exact if possible. Returns (p_m, exact)."""
    if is_exact(radicand):
        r = exact_root(Fraction(radicand), m)
        if r is not None:
            return r, True
        return float(radicand) ** (1.0 / m), False
    return radicand ** (1.0 / m), False


def construct_catalyst(source: CompressedSpectrum, target: CompressedSpectrum, m: int) -> CompressedSpectrum:
    """Catalyst that matches the m-copy per-copy average p_m.

    Direct sum over j = 0..m-1 of ``source^(m-1-j) ⊗ target^j`` weighted by
    ``p_m**j``, then renormalized. When p_m is irrational the weights, and
    hence the returned spectrum, are floats (check ``.exact``). Terms with
    zero weight (p_m = 0) are dropped.
    """
    if m < 2:
        raise CopyCountTooSmallError("copy count must be at least 2")
    source, target = common_mode(source, target)
    p_m, _ = _weight_root(multicopy_radicand(source, target, m), m)

    parts = []
    for j in range(m):
        weight = p_m**j
        if weight == 0:
            continue
        if j == 0:
            term = tensor_power(source, m - 1)
        elif j == m - 1:
            term = tensor_power(target, m - 1)
        else:
            term = tensor_product(tensor_power(source, m - 1 - j), tensor_power(target, j))
        parts.append((weight, term))
    return weighted_direct_sum(parts)


def simulate_protocol(source, target, catalyst: CompressedSpectrum, m: int) -> ProtocolReport:
    """Bound the m-copy probability through a borrowed maximally entangled state.

    Step 1 turns the flat state into the catalyst (probability 1), step 2
    runs m catalyzed single-copy conversions (at least ``p_cat**m``), step 3
    turns the catalyst back into the flat state (``k * gamma_k``). Appending
    a flat state never changes a conversion probability, so the product of
    the three factors bounds the plain m-copy probability. Both facts are
    evaluated, not assumed.
    """
    if m < 1:
        raise CopyCountTooSmallError("copy count must be at least 1")
    source, target, catalyst = common_mode(source, target, catalyst)
    k = catalyst.dim
    if catalyst.rank < k:
        raise RankDeficientCatalystError(
            f"catalyst has rank {catalyst.rank} on dimension {k}; need full rank"
        )
    p1 = p_max_from_max_entangled(k, catalyst)
    p_cat = p_catalyzed(source, target, catalyst)
    p2 = p_cat**m
    p3 = p_max_to_max_entangled(catalyst, k)
    bound = p1 * p2 * p3

    src_m, tgt_m = tensor_power(source, m), tensor_power(target, m)
    direct = p_max(src_m, tgt_m).p_max
    flat = maximally_entangled(k)
    with_flat = p_max(tensor_product(src_m, flat), tensor_product(tgt_m, flat)).p_max
    if catalyst.exact:
        inert = with_flat == direct
        holds = direct >= bound
    else:
        inert = abs(with_flat - direct) <= 1e-12
        holds = direct >= bound - 1e-12
    return ProtocolReport(
        p1=p1,
        p2_lower_bound=p2,
        p3=p3,
        product_bound=bound,
        m_copy_p_max=direct,
        k=k,
        gamma_k=catalyst.smallest,
        m=m,
        catalyzed=p_cat,
        inert=inert,
        bound_holds=holds,
    )


def _grid(k: int, resolution: int):
    """Candidate catalysts as nonincreasing coefficient tuples."""
    if k == 2:
        for i in range(resolution):
            g = Fraction(1, 2) + Fraction(i, 2 * resolution)
            yield (g, 1 - g)
        return
    for parts in itertools.combinations_with_replacement(range(resolution, -1, -1), k):
        if sum(parts) == resolution:
            yield tuple(Fraction(p, resolution) for p in parts)


def search_catalyst(source, target, k: int, grid_resolution: int) -> CatalystSearchResult:
    """Grid search for the best k-dimensional catalyst.

    k = 2 sweeps the larger coefficient over [1/2, 1) in steps of
    1/(2R). k = 3, 4 sweep the ordered simplex with denominators R. Ties go
    to the lexicographically smallest coefficient tuple.
    """
    if k not in (2, 3, 4):
        raise UnsupportedDimensionError(f"catalyst dimension {k} not supported (2, 3 or 4)")
    if grid_resolution < 2:
        raise ValueError("grid resolution must be at least 2")
    source, target = common_mode(source, target)
    mode = "exact" if source.exact else "float"
    baseline = p_max(source, target).p_max

    best = None
    for coeffs in _grid(k, grid_resolution):
        cat = from_coefficients(coeffs, mode)
        p = p_catalyzed(source, target, cat)
        if best is None or p > best[0] or (p == best[0] and coeffs < best[1]):
            best = (p, coeffs, cat)
    p, _, cat = best
    return CatalystSearchResult(cat, p, baseline, grid_resolution, k)
