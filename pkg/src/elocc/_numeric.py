"""Numeric mode handling and scalar helpers.

Exact mode carries every probability as a :class:`fractions.Fraction`;
float mode carries binary floats. The mode governs how raw input is parsed.
Once a spectrum is built, its values decide: any float operand turns a
computation into float arithmetic.
"""

from __future__ import annotations

import contextlib
import contextvars
import math
from decimal import Decimal
from fractions import Fraction
from typing import Union

Scalar = Union[Fraction, float]

EXACT = "exact"
FLOAT = "float"

MERGE_EPS = 1e-12
NORM_TOL = 1e-9

_mode: contextvars.ContextVar[str] = contextvars.ContextVar("elocc_numeric_mode", default=EXACT)


def get_mode() -> str:
    return _mode.get()


def set_mode(mode: str) -> None:
    if mode not in (EXACT, FLOAT):
        raise ValueError(f"unknown numeric mode {mode!r}")
    _mode.set(mode)


@contextlib.contextmanager
def numeric_mode(mode: str):
    """Temporarily switch the numeric mode used for parsing input."""
    if mode not in (EXACT, FLOAT):
        raise ValueError(f"unknown numeric mode {mode!r}")
    token = _mode.set(mode)
    try:
        yield
    finally:
        _mode.reset(token)


def to_scalar(x, mode: str | None = None) -> Scalar:
    """Convert raw input to a scalar of the requested mode.

    Strings are read in base 10 (``"0.4"`` is exactly 2/5, ``"2/5"`` also
    works). In exact mode a Python float is converted through its shortest
    repr, so ``0.4`` also becomes 2/5 rather than the nearest binary double.
    """
    mode = mode or get_mode()
    if isinstance(x, str):
        x = x.strip()
        try:
            q = Fraction(x)
        except (ValueError, ZeroDivisionError) as exc:
            raise ValueError(f"cannot parse coefficient {x!r}") from exc
        return q if mode == EXACT else float(q)
    if isinstance(x, bool):
        raise TypeError("boolean is not a coefficient")
    if mode == EXACT:
        if isinstance(x, Fraction):
            return x
        if isinstance(x, int):
            return Fraction(x)
        if isinstance(x, float):
            if not math.isfinite(x):
                raise ValueError(f"non-finite coefficient {x!r}")
            return Fraction(repr(x))
        if isinstance(x, Decimal):
            return Fraction(x)
        return Fraction(x)
    value = float(x)
    if not math.isfinite(value):
        raise ValueError(f"non-finite coefficient {x!r}")
    return value


def is_exact(x) -> bool:
    return isinstance(x, (Fraction, int))


def close(a: Scalar, b: Scalar, eps: float = MERGE_EPS) -> bool:
    """Equality under the active representation: exact, or relative ``eps``."""
    if is_exact(a) and is_exact(b):
        return a == b
    return abs(a - b) <= eps * max(abs(a), abs(b))


def _int_root(n: int, m: int) -> int | None:
    """Exact integer m-th root of n >= 0, or None."""
    if n < 2:
        return n
    r = round(n ** (1.0 / m)) if n.bit_length() < 1000 else _newton_root(n, m)
    for cand in (r - 1, r, r + 1):
        if cand >= 0 and cand**m == n:
            return cand
    r = _newton_root(n, m)
    return r if r**m == n else None


def _newton_root(n: int, m: int) -> int:
    x = 1 << -(-n.bit_length() // m)
    while True:
        y = ((m - 1) * x + n // x ** (m - 1)) // m
        if y >= x:
            return x
        x = y


def exact_root(q: Fraction, m: int) -> Fraction | None:
    """q**(1/m) when it is rational, otherwise None."""
    if q < 0:
        return None
    num = _int_root(q.numerator, m)
    if num is None:
        return None
    den = _int_root(q.denominator, m)
    if den is None:
        return None
    return Fraction(num, den)


def root(x: Scalar, m: int) -> Scalar:
    """m-th root; stays exact when the radicand is a perfect m-th power."""
    if m == 1:
        return x
    if is_exact(x):
        r = exact_root(Fraction(x), m)
        if r is not None:
            return r
        return _float_root(Fraction(x), m)
    return x ** (1.0 / m)


def _float_root(q: Fraction, m: int) -> float:
    # float(q) underflows for tiny radicands; go through logs instead
    if q == 0:
        return 0.0
    f = float(q)
    if f > 0.0:
        return f ** (1.0 / m)
    lg = math.log(q.numerator) - math.log(q.denominator)
    return math.exp(lg / m)


def power_ge(a: Scalar, ma: int, b: Scalar, mb: int) -> bool:
    """Compare a**(1/ma) >= b**(1/mb) without taking roots when exact."""
    if is_exact(a) and is_exact(b):
        return Fraction(a) ** mb >= Fraction(b) ** ma
    return float(root(a, ma)) >= float(root(b, mb))


def fmt(x: Scalar) -> str:
    """Render a scalar: ``4/5 (0.8)`` in exact mode, a repr in float mode."""
    if isinstance(x, Fraction):
        if x.denominator == 1:
            return str(x.numerator)
        return f"{x} ({float(x):.12g})"
    return f"{x:.12g}"
