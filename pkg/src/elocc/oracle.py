"""Brute-force reference implementations.

Nothing here imports from the optimized modules: the point is differential
testing, so a bug shared between the two routes must be impossible by
construction. Inputs are plain sequences of coefficients (``Fraction`` or
``float``), fully expanded, including any zeros.
"""

from __future__ import annotations

import itertools
import math
from typing import Sequence

from .errors import DimensionTooLargeError

MAX_PMAX_DIM = 10**4
MAX_POWER_ENTRIES = 10**6


def brute_p_max(source: Sequence, target: Sequence):
    """Minimum over every l of E_l(source) / E_l(target).

    Both lists are sorted nonincreasing and zero-padded to a common length,
    then scanned position by position. Positions where the target tail is
    zero impose no constraint.
    """
    n = max(len(source), len(target))
    if n > MAX_PMAX_DIM:
        raise DimensionTooLargeError(f"common dimension {n} exceeds {MAX_PMAX_DIM}")
    zero = source[0] * 0
    a = sorted(source, reverse=True) + [zero] * (n - len(source))
    b = sorted(target, reverse=True) + [zero] * (n - len(target))

    tail_a = [zero] * (n + 1)
    tail_b = [zero] * (n + 1)
    for i in range(n - 1, -1, -1):
        tail_a[i] = tail_a[i + 1] + a[i]
        tail_b[i] = tail_b[i + 1] + b[i]

    best = None
    for i in range(n):
        if tail_b[i] == 0:
            continue
        ratio = tail_a[i] / tail_b[i]
        if best is None or ratio < best:
            best = ratio
    return best


def brute_tensor_power(x: Sequence, m: int) -> list:
    """All n**m products of m coefficients, sorted nonincreasing."""
    if m < 1:
        raise ValueError("m must be at least 1")
    if len(x) ** m > MAX_POWER_ENTRIES:
        raise DimensionTooLargeError(f"{len(x)}**{m} entries exceeds {MAX_POWER_ENTRIES}")
    out = [math.prod(combo) for combo in itertools.product(x, repeat=m)]
    out.sort(reverse=True)
    return out


def brute_tensor_product(x: Sequence, y: Sequence) -> list:
    out = [u * v for u in x for v in y]
    out.sort(reverse=True)
    return out
