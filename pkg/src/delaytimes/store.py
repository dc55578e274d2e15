"""JSON/CSV documents for computed tables.

Exact values are encoded without floating point: integers as decimal
strings, rationals as ``{"num": "...", "den": "..."}``, polynomials as
``{"poly": [ascending coefficients]}`` and rational functions as
``{"ratfunc": {"num": <poly>, "den": <poly>}}``.  Floats are only allowed in
documents built with ``exact=False`` (Monte Carlo output, reports).
"""
from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any

from .algebra import Poly, RatFunc

__all__ = ["SCHEMA_VERSION", "TableDocument", "encode_value", "decode_value", "GENERATOR"]

SCHEMA_VERSION = 1
GENERATOR = "delaytimes 0.1.0"


def encode_value(v: Any) -> Any:
    """Map exact Python objects to JSON-safe structures (inverse: :func:`decode_value`)."""
    if isinstance(v, bool):
        return v
    if isinstance(v, int):
        return str(v)
    if isinstance(v, Fraction):
        if v.denominator == 1:
            return str(v.numerator)
        return {"num": str(v.numerator), "den": str(v.denominator)}
    if isinstance(v, RatFunc):
        return {"ratfunc": {"num": encode_value(v.num), "den": encode_value(v.den)}}
    if isinstance(v, Poly):
        return {"poly": [encode_value(c) for c in v.coeffs]}
    if isinstance(v, float):
        return v
    if isinstance(v, (list, tuple)):
        return [encode_value(x) for x in v]
    if isinstance(v, dict):
        return {str(k): encode_value(x) for k, x in v.items()}
    if v is None or isinstance(v, str):
        return v
    raise TypeError(f"cannot encode {type(v).__name__}")


def _decode_scalar(s: str):
    try:
        return int(s)
    except ValueError:
        return s


def decode_value(v: Any) -> Any:
    if isinstance(v, str):
        return _decode_scalar(v)
    if isinstance(v, list):
        return [decode_value(x) for x in v]
    if isinstance(v, dict):
        if set(v) == {"num", "den"} and all(isinstance(x, str) for x in v.values()):
            return Fraction(int(v["num"]), int(v["den"]))
        if set(v) == {"poly"} and isinstance(v["poly"], list):
            return Poly([Fraction(decode_value(c)) for c in v["poly"]])
        if set(v) == {"ratfunc"} and isinstance(v["ratfunc"], dict):
            return RatFunc(decode_value(v["ratfunc"]["num"]), decode_value(v["ratfunc"]["den"]))
        return {k: decode_value(x) for k, x in v.items()}
    return v


def _has_float(v: Any) -> bool:
    if isinstance(v, float):
        return True
    if isinstance(v, list):
        return any(_has_float(x) for x in v)
    if isinstance(v, dict):
        return any(_has_float(x) for x in v.values())
    return False


@dataclass
class TableDocument:
    kind: str
    metadata: dict = field(default_factory=dict)
    payload: Any = None
    exact: bool = True
    schema_version: int = SCHEMA_VERSION

    def to_json_obj(self) -> dict:
        body = encode_value(self.payload)
        if self.exact and _has_float(body):
            raise TypeError("floating-point value in an exact payload")
        meta = {"generator": GENERATOR, **self.metadata}
        return {
            "schema_version": self.schema_version,
            "kind": self.kind,
            "exact": self.exact,
            "metadata": meta,
            "payload": body,
        }

    def to_json(self, indent: int | None = 2) -> str:
        return json.dumps(self.to_json_obj(), indent=indent)

    @classmethod
    def from_json(cls, text: str) -> "TableDocument":
        obj = json.loads(text)
        if obj.get("schema_version") != SCHEMA_VERSION:
            raise ValueError(f"unsupported schema version {obj.get('schema_version')!r}")
        return cls(
            obj["kind"],
            obj["metadata"],
            decode_value(obj["payload"]),
            obj.get("exact", True),
            obj["schema_version"],
        )

    def to_csv(self) -> str:
        """Numeric evaluation of a rectangular payload ``{"columns": [...], "rows": [[...], ...]}``."""
        if not (isinstance(self.payload, dict) and "rows" in self.payload and "columns" in self.payload):
            raise ValueError("CSV output needs a payload with 'columns' and 'rows'")
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(self.payload["columns"])
        for row in self.payload["rows"]:
            w.writerow([_csv_cell(x) for x in row])
        return buf.getvalue()


def _csv_cell(x):
    if isinstance(x, Fraction):
        return repr(float(x)) if x.denominator != 1 else str(x.numerator)
    if isinstance(x, float):
        return repr(x)
    return str(x)
