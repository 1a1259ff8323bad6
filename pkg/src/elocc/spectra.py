"""Schmidt spectra in compressed (value, multiplicity) form.

A bipartite pure state enters every LOCC question only through its ordered
Schmidt coefficients, so that vector is all we model. Tensor powers repeat
values heavily (an m-fold power of a spectrum with d distinct values has at
most C(m+d-1, d-1) distinct values), which is why the working type stores
each distinct value once together with its multiplicity. Trailing zeros are
implicit: ``dim`` may exceed the sum of multiplicities.
"""

from __future__ import annotations

import math
from collections import defaultdict
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Iterator, Sequence

from ._numeric import EXACT, FLOAT, MERGE_EPS, NORM_TOL, Scalar, get_mode, is_exact, to_scalar
from .errors import (
    CopyCountZeroError,
    DimensionTooLargeError,
    EmptySpectrumError,
    NegativeCoefficientError,
    NonpositiveWeightError,
    NotNormalizableError,
    SpectrumError,
)

MAX_EXPAND = 10**7

Block = tuple  # (value, multiplicity)


@dataclass(frozen=True)
class CompressedSpectrum:
    """Nonincreasing probability vector stored as distinct-value blocks.

    Attributes
    ----------
    blocks : tuple of (value, multiplicity)
        Strictly decreasing positive values, each with a positive integer
        multiplicity. ``sum(v * k) == 1`` (exactly in exact mode).
    dim : int
        Total dimension including implicit trailing zeros.
    """

    blocks: tuple
    dim: int

    def __post_init__(self):
        if not self.blocks:
            raise EmptySpectrumError("spectrum has no positive coefficient")
        prev = None
        total = 0
        count = 0
        for value, mult in self.blocks:
            if not isinstance(mult, int) or mult < 1:
                raise SpectrumError(f"multiplicity must be a positive integer, got {mult!r}")
            if value <= 0:
                raise SpectrumError(f"block value must be positive, got {value!r}")
            if prev is not None and not value < prev:
                raise SpectrumError("block values must be strictly decreasing")
            prev = value
            total += value * mult
            count += mult
        if count > self.dim:
            raise SpectrumError(f"multiplicities sum to {count} > dim {self.dim}")
        if self.exact:
            if total != 1:
                raise NotNormalizableError(f"coefficients sum to {total}, not 1")
        elif abs(total - 1) > NORM_TOL:
            raise NotNormalizableError(f"coefficients sum to {total!r}, not 1")

    @property
    def exact(self) -> bool:
        return all(isinstance(v, Fraction) for v, _ in self.blocks)

    @property
    def rank(self) -> int:
        """Number of strictly positive coefficients (the Schmidt rank)."""
        return sum(k for _, k in self.blocks)

    @property
    def n_blocks(self) -> int:
        return len(self.blocks)

    @property
    def smallest(self) -> Scalar:
        """Least positive coefficient."""
        return self.blocks[-1][0]

    def __iter__(self) -> Iterator[Block]:
        return iter(self.blocks)

    def __len__(self) -> int:
        return self.dim

    def __str__(self) -> str:
        body = ", ".join(f"({v}, {k})" for v, k in self.blocks)
        return f"[{body}] dim={self.dim}"


def _merge(pairs: Iterable[tuple], dim: int, exact: bool) -> CompressedSpectrum:
    """Collect (value, multiplicity) pairs into canonical blocks.

    Exact values merge on equality. Float values merge when they agree to
    ``MERGE_EPS`` relative to the larger one; the first (largest) value of a
    run represents the merged block.
    """
    if exact:
        acc: dict = defaultdict(int)
        for v, k in pairs:
            if v:
                acc[v] += k
        blocks = tuple(sorted(acc.items(), key=lambda b: b[0], reverse=True))
        return CompressedSpectrum(blocks, dim)

    items = sorted(((float(v), k) for v, k in pairs if v > 0), key=lambda b: b[0], reverse=True)
    blocks: list = []
    for v, k in items:
        if blocks and blocks[-1][0] - v <= MERGE_EPS * blocks[-1][0]:
            blocks[-1][1] += k
        else:
            blocks.append([v, k])
    return CompressedSpectrum(tuple((v, k) for v, k in blocks), dim)


def _renormalized(pairs: list, dim: int, exact: bool) -> CompressedSpectrum:
    total = sum(v * k for v, k in pairs)
    return _merge(((v / total, k) for v, k in pairs), dim, exact)


def from_coefficients(raw: Sequence, mode: str | None = None) -> CompressedSpectrum:
    """Validate, sort, merge and normalize a raw coefficient list.

    In exact mode any list with a positive sum is rescaled to sum 1 exactly.
    In float mode the sum must already be within 1e-9 of 1; it is then
    renormalized.

    >>> from_coefficients(["0.4", "0.4", "0.1", "0.1"]).blocks
    ((Fraction(2, 5), 2), (Fraction(1, 10), 2))
    """
    mode = mode or get_mode()
    if len(raw) == 0:
        raise EmptySpectrumError("empty coefficient list")
    values = []
    for i, x in enumerate(raw):
        v = to_scalar(x, mode)
        if v < 0:
            raise NegativeCoefficientError(f"coefficient {i + 1} ({x!r}) is negative")
        values.append(v)
    total = sum(values)
    if total == 0:
        raise NotNormalizableError("all coefficients are zero")
    if mode == FLOAT and abs(total - 1) > NORM_TOL:
        raise NotNormalizableError(f"coefficients sum to {total!r}; float mode needs 1 within {NORM_TOL}")
    return _renormalized([(v, 1) for v in values if v > 0], len(values), mode == EXACT)


def as_spectrum(x, mode: str | None = None) -> CompressedSpectrum:
    """Accept either a spectrum or a raw coefficient list."""
    if isinstance(x, CompressedSpectrum):
        return x
    return from_coefficients(list(x), mode)


def to_float(a: CompressedSpectrum) -> CompressedSpectrum:
    if not a.exact:
        return a
    return _merge(((float(v), k) for v, k in a.blocks), a.dim, exact=False)


def common_mode(*spectra: CompressedSpectrum) -> tuple:
    """Return the inputs, all converted to float if any of them is float."""
    if all(s.exact for s in spectra):
        return spectra
    return tuple(to_float(s) for s in spectra)


def _integer_form(a: CompressedSpectrum) -> tuple:
    """Write exact block values over a common denominator: (numerators, den)."""
    den = math.lcm(*(v.denominator for v, _ in a.blocks))
    return [v.numerator * (den // v.denominator) for v, _ in a.blocks], den


def tensor_product(a: CompressedSpectrum, b: CompressedSpectrum) -> CompressedSpectrum:
    """Spectrum of the product state: all pairwise products, merged."""
    a, b = common_mode(a, b)
    dim = a.dim * b.dim
    if a.exact:
        na, da = _integer_form(a)
        nb, db = _integer_form(b)
        acc: dict = defaultdict(int)
        for x, (_, ka) in zip(na, a.blocks):
            for y, (_, kb) in zip(nb, b.blocks):
                acc[x * y] += ka * kb
        den = da * db
        blocks = tuple((Fraction(n, den), k) for n, k in sorted(acc.items(), reverse=True))
        return CompressedSpectrum(blocks, dim)
    pairs = [(va * vb, ka * kb) for va, ka in a.blocks for vb, kb in b.blocks]
    return _merge(pairs, dim, exact=False)


def compositions(total: int, parts: int) -> Iterator[tuple]:
    """All tuples of ``parts`` nonnegative ints summing to ``total``.

    There are C(total + parts - 1, parts - 1) of them (stars and bars).
    """
    if parts == 1:
        yield (total,)
        return
    for first in range(total, -1, -1):
        for rest in compositions(total - first, parts - 1):
            yield (first,) + rest


def multinomial(ks: Sequence[int]) -> int:
    """m! / (k_1! ... k_d!) in unbounded integers."""
    out = 1
    running = 0
    for k in ks:
        running += k
        out *= math.comb(running, k)
    return out


def tensor_power(a: CompressedSpectrum, m: int) -> CompressedSpectrum:
    """Spectrum of the m-fold tensor power, by composition enumeration.

    Each composition (k_1..k_d) of m over the d blocks contributes the value
    prod v_i**k_i with multiplicity multinomial(m; k) * prod mult_i**k_i.
    """
    if m < 1:
        raise CopyCountZeroError("copy count must be at least 1")
    if m == 1:
        return a
    dim = a.dim**m
    d = a.n_blocks
    mults = [k for _, k in a.blocks]
    mult_pows = [[k**j for j in range(m + 1)] for k in mults]

    if a.exact:
        nums, den = _integer_form(a)
        val_pows = [[x**j for j in range(m + 1)] for x in nums]
        acc: dict = defaultdict(int)
        for ks in compositions(m, d):
            num = 1
            count = multinomial(ks)
            for i, k in enumerate(ks):
                if k:
                    num *= val_pows[i][k]
                    count *= mult_pows[i][k]
            acc[num] += count
        den_m = den**m
        blocks = tuple((Fraction(n, den_m), k) for n, k in sorted(acc.items(), reverse=True))
        return CompressedSpectrum(blocks, dim)

    vals = [v for v, _ in a.blocks]
    pairs = []
    for ks in compositions(m, d):
        value = 1.0
        count = multinomial(ks)
        for i, k in enumerate(ks):
            if k:
                value *= vals[i] ** k
                count *= mult_pows[i][k]
        pairs.append((value, count))
    return _merge(pairs, dim, exact=False)


def tensor_power_pairwise(a: CompressedSpectrum, m: int) -> CompressedSpectrum:
    """Same as :func:`tensor_power`, by m - 1 repeated products."""
    if m < 1:
        raise CopyCountZeroError("copy count must be at least 1")
    out = a
    for _ in range(m - 1):
        out = tensor_product(out, a)
    return out


def weighted_direct_sum(parts: Sequence[tuple]) -> CompressedSpectrum:
    """Direct sum of spectra scaled by positive weights, then renormalized.

    ``parts`` is a sequence of ``(weight, spectrum)``.
    """
    if not parts:
        raise EmptySpectrumError("direct sum of nothing")
    exact = all(s.exact and is_exact(w) for w, s in parts)
    pairs = []
    dim = 0
    for w, s in parts:
        if w <= 0:
            raise NonpositiveWeightError(f"weight {w!r} is not positive")
        if not exact:
            w = float(w)
        pairs.extend((w * v, k) for v, k in s.blocks)
        dim += s.dim
    return _renormalized(pairs, dim, exact)


def expand(a: CompressedSpectrum) -> tuple:
    """Full nonincreasing coefficient tuple, zero padded to ``a.dim``."""
    if a.dim > MAX_EXPAND:
        raise DimensionTooLargeError(f"dimension {a.dim} exceeds {MAX_EXPAND}")
    out: list = []
    for v, k in a.blocks:
        out.extend([v] * k)
    zero = Fraction(0) if a.exact else 0.0
    out.extend([zero] * (a.dim - len(out)))
    return tuple(out)


def maximally_entangled(k: int) -> CompressedSpectrum:
    """Flat spectrum (1/k, ..., 1/k)."""
    if k < 1:
        raise SpectrumError("k must be at least 1")
    return CompressedSpectrum(((Fraction(1, k), k),), k)


def product_state(dim: int = 1) -> CompressedSpectrum:
    return CompressedSpectrum(((Fraction(1), 1),), dim)
