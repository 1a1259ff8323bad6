"""Optimal single-shot conversion probability between pure states.

``p_max(source -> target) = min_l E_l(source) / E_l(target)`` where ``E_l``
is the sum of the Schmidt coefficients from position l onward. The value is
1 exactly when the source is majorized by the target.

Both spectra are zero padded to a common dimension N. The range 1..N is
split into maximal segments on which both spectra are constant; on such a
segment both tails are affine in l, so their ratio is monotone and only the
two endpoints of each segment need checking.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from ._numeric import Scalar
from .errors import CrossCheckError
from .spectra import CompressedSpectrum, common_mode

FLOAT_ONE_TOL = 1e-12


@dataclass(frozen=True)
class ConversionReport:
    """Result of :func:`p_max`.

    ``argmin`` is the 1-based expanded position l* attaining the minimum (the
    smallest such l), with the two tails that form the ratio there.
    """

    p_max: Scalar
    argmin: int
    source_tail: Scalar
    target_tail: Scalar


def _segments(a: CompressedSpectrum):
    """(start, end, value, tail_at_start) per block, positions 1-based."""
    tails = [None] * a.n_blocks
    acc = a.blocks[0][0] * 0
    for i in range(a.n_blocks - 1, -1, -1):
        v, k = a.blocks[i]
        acc = acc + v * k
        tails[i] = acc
    out = []
    pos = 1
    for (v, k), t in zip(a.blocks, tails):
        out.append((pos, pos + k - 1, v, t))
        pos += k
    return out


def suffix_sums(a: CompressedSpectrum, positions=None) -> list:
    """Tail sums E_l at block boundaries.

    By default returns ``(l, E_l)`` at the first and last position of every
    block. ``positions`` requests arbitrary 1-based positions instead; those
    past the last positive coefficient have tail 0.

    >>> from elocc.spectra import from_coefficients
    >>> [(l, str(t)) for l, t in suffix_sums(from_coefficients(["0.4", "0.4", "0.1", "0.1"]))]
    [(1, '1'), (2, '3/5'), (3, '1/5'), (4, '1/10')]
    """
    segs = _segments(a)
    if positions is None:
        out = []
        for s, e, v, t in segs:
            out.append((s, t))
            if e != s:
                out.append((e, t - v * (e - s)))
        return out
    return [(l, _tail_at(segs, l)) for l in positions]


def _tail_at(segs, l: int):
    zero = segs[0][2] * 0
    for s, e, v, t in segs:
        if s <= l <= e:
            return t - v * (l - s)
    return zero


def p_max(source: CompressedSpectrum, target: CompressedSpectrum) -> ConversionReport:
    """Optimal probability of converting ``source`` into ``target`` by LOCC.

    Positions where the target tail vanishes are skipped. A Schmidt rank
    increase is impossible, so ``rank(source) < rank(target)`` gives 0.
    """
    source, target = common_mode(source, target)
    zero = source.blocks[0][0] * 0
    if source.rank < target.rank:
        l = source.rank + 1
        return ConversionReport(zero, l, zero, _tail_at(_segments(target), l))

    sa = _segments(source)
    sb = _segments(target)
    # breakpoints: starts of every block in either spectrum, plus the start
    # of the target's zero region (nonbinding beyond it)
    last = target.rank
    cuts = sorted({s for s, *_ in sa if s <= last} | {s for s, *_ in sb} | {last + 1})

    best = None
    best_l = 1
    best_pair = (zero, zero)
    ia = ib = 0
    for s, nxt in zip(cuts, cuts[1:]):
        e = nxt - 1
        while sa[ia][1] < s:
            ia += 1
        while sb[ib][1] < s:
            ib += 1
        a0, a1, av, at = sa[ia]
        b0, b1, bv, bt = sb[ib]
        for l in (s, e) if e != s else (s,):
            ta = at - av * (l - a0)
            tb = bt - bv * (l - b0)
            r = ta / tb
            if best is None or r < best:
                best, best_l, best_pair = r, l, (ta, tb)
    if best > 1:
        # only reachable through float rounding; E_1 ratio is 1 by definition
        best = type(best)(1)
    return ConversionReport(best, best_l, best_pair[0], best_pair[1])


def is_majorized_by(source: CompressedSpectrum, target: CompressedSpectrum) -> bool:
    """Partial sums from the top: sum_{i<=l} source_i <= sum_{i<=l} target_i.

    The difference of partial sums is affine between consecutive block
    boundaries of either spectrum, so checking at those boundaries suffices.
    """
    source, target = common_mode(source, target)
    tol = 0 if source.exact else FLOAT_ONE_TOL

    def bounds(a):
        pos, out = 0, []
        for _, k in a.blocks:
            pos += k
            out.append(pos)
        return out

    checkpoints = sorted(set(bounds(source)) | set(bounds(target)))
    walkers = [_HeadWalker(source), _HeadWalker(target)]
    for l in checkpoints:
        ha, hb = (w.head(l) for w in walkers)
        if ha > hb + tol:
            return False
    return True


class _HeadWalker:
    """Partial sums at nondecreasing positions in one forward pass."""

    def __init__(self, a: CompressedSpectrum):
        self.blocks = a.blocks
        self.i = 0
        self.pos = 0
        self.acc = a.blocks[0][0] * 0

    def head(self, l: int):
        while self.i < len(self.blocks) and self.pos + self.blocks[self.i][1] <= l:
            v, k = self.blocks[self.i]
            self.acc = self.acc + v * k
            self.pos += k
            self.i += 1
        if self.i == len(self.blocks):
            return self.acc
        return self.acc + self.blocks[self.i][0] * (l - self.pos)


def is_deterministic(source: CompressedSpectrum, target: CompressedSpectrum) -> bool:
    """Whether the conversion succeeds with certainty.

    Computed twice, from the optimal probability and from majorization, and
    the two answers must agree.
    """
    rep = p_max(source, target)
    if isinstance(rep.p_max, Fraction):
        by_prob = rep.p_max == 1
    else:
        by_prob = rep.p_max >= 1 - FLOAT_ONE_TOL
    by_major = is_majorized_by(source, target)
    if by_prob != by_major:
        raise CrossCheckError(f"p_max={rep.p_max} disagrees with majorization={by_major}")
    return by_prob


def closed_form_pe(source: CompressedSpectrum, target: CompressedSpectrum) -> Scalar:
    """min{1, alpha_n / beta_n} on the common dimension.

    alpha_n and beta_n are the last coefficients after zero padding, with
    shared trailing zeros stripped first. A zero beta_n (target of lower
    rank) gives 1; a zero alpha_n (source of lower rank) gives 0. This is
    simultaneously the supremum over catalysts and over copy numbers.
    """
    source, target = common_mode(source, target)
    one = source.blocks[0][0] * 0 + 1
    if source.rank > target.rank:
        return one
    if source.rank < target.rank:
        return one * 0
    ratio = source.smallest / target.smallest
    return ratio if ratio < one else one
