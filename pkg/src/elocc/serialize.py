"""JSON encoding of reports.

Every document carries ``"schema": 1``. Exact scalars are written as
``{"num": n, "den": d}`` and floats as JSON numbers, so a document decodes
back to a report equal to the one encoded. Report objects are tagged with
their class name under ``"type"``.
"""

from __future__ import annotations

import dataclasses
import json
from fractions import Fraction

from .catalysis import CatalystSearchResult, ProtocolReport
from .multicopy import FiniteMResult, MulticopyEntry, MulticopyTrace
from .spectra import CompressedSpectrum
from .vidal import ConversionReport

SCHEMA_VERSION = 1

_TYPES = {
    cls.__name__: cls
    for cls in (
        CatalystSearchResult,
        CompressedSpectrum,
        ConversionReport,
        FiniteMResult,
        MulticopyEntry,
        MulticopyTrace,
        ProtocolReport,
    )
}


def encode(obj):
    """Convert a report (or scalar, or container of them) to JSON-ready data."""
    if isinstance(obj, bool) or obj is None or isinstance(obj, (str, int)):
        return obj
    if isinstance(obj, Fraction):
        return {"num": obj.numerator, "den": obj.denominator}
    if isinstance(obj, float):
        return obj
    if dataclasses.is_dataclass(obj):
        out = {"type": type(obj).__name__}
        for f in dataclasses.fields(obj):
            out[f.name] = encode(getattr(obj, f.name))
        return out
    if isinstance(obj, (list, tuple)):
        return [encode(x) for x in obj]
    if isinstance(obj, dict):
        return {str(k): encode(v) for k, v in obj.items()}
    raise TypeError(f"cannot encode {type(obj).__name__}")


def decode(data):
    """Inverse of :func:`encode`. Lists come back as tuples."""
    if isinstance(data, dict):
        if set(data) == {"num", "den"}:
            return Fraction(data["num"], data["den"])
        if "type" in data and data["type"] in _TYPES:
            cls = _TYPES[data["type"]]
            kwargs = {k: decode(v) for k, v in data.items() if k != "type"}
            return cls(**kwargs)
        return {k: decode(v) for k, v in data.items()}
    if isinstance(data, list):
        return tuple(decode(x) for x in data)
    return data


def dumps(command: str, report, **extra) -> str:
    doc = {"schema": SCHEMA_VERSION, "command": command, "report": encode(report)}
    for k, v in extra.items():
        doc[k] = encode(v)
    return json.dumps(doc, indent=2)


def loads(text: str) -> dict:
    doc = json.loads(text)
    if doc.get("schema") != SCHEMA_VERSION:
        raise ValueError(f"unsupported schema {doc.get('schema')!r}")
    return {k: (decode(v) if k not in ("schema", "command") else v) for k, v in doc.items()}
