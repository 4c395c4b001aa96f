"""Serialization: exact ``p/q`` strings, geography datasets, JSON/CSV writers."""

from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass
from decimal import Context, Decimal
from fractions import Fraction
from pathlib import Path
from typing import Iterable

from .enumeration import SweepBox, classify_region_g2, enumerate_admissible
from .invariants import FibrationNumerics, InvariantSet, compute_invariants

__all__ = [
    "GEOGRAPHY_FIELDS",
    "GeographyPoint",
    "ReportIOError",
    "exact",
    "decimal",
    "parse_exact",
    "invariants_document",
    "geography_points",
    "emit_geography",
    "dump_json",
    "write_text",
]

GEOGRAPHY_FIELDS = ("g", "n", "s", "x", "chi_h", "c1sq", "slope", "ratio", "sigma", "region")
_DISPLAY = Context(prec=6)


class ReportIOError(OSError):
    pass


def exact(value) -> str:
    """``p/q`` in lowest terms, denominator always present."""
    q = Fraction(value)
    return f"{q.numerator}/{q.denominator}"


def parse_exact(text: str) -> Fraction:
    p, _, q = text.partition("/")
    return Fraction(int(p), int(q or 1))


def decimal(value) -> str:
    """Six-significant-digit display rendering; never parsed back."""
    q = Fraction(value)
    d = _DISPLAY.divide(Decimal(q.numerator), Decimal(q.denominator))
    return format(d.normalize(_DISPLAY), "f") if d != 0 else "0"


def invariants_document(f: FibrationNumerics, inv: InvariantSet | None = None) -> dict:
    inv = inv or compute_invariants(f)
    rationals = {
        "sigma": inv.sigma,
        "chi_h": inv.chi_h,
        "c1sq": inv.c1sq,
        "k_f_sq": inv.k_f_sq,
        "chi_f": inv.chi_f,
        "slope": inv.slope,
        "ratio": inv.ratio,
    }
    return {
        "g": f.g,
        "n": f.n,
        "sep": list(f.sep),
        "x": inv.x,
        "s": inv.s,
        "euler": inv.euler,
        **{k: exact(v) for k, v in rationals.items()},
        "decimal": {k: decimal(v) for k, v in rationals.items()},
    }


@dataclass(frozen=True)
class GeographyPoint:
    g: int
    n: int
    s: int
    x: int
    chi_h: Fraction
    c1sq: Fraction
    slope: Fraction
    ratio: Fraction
    sigma: Fraction
    region: str | None = None

    @classmethod
    def from_census(cls, f: FibrationNumerics, inv: InvariantSet | None = None) -> "GeographyPoint":
        inv = inv or compute_invariants(f)
        region = classify_region_g2(f).value if f.g == 2 else None
        return cls(f.g, f.n, inv.s, inv.x, inv.chi_h, inv.c1sq, inv.slope, inv.ratio, inv.sigma, region)

    def row(self) -> dict:
        return {
            "g": self.g,
            "n": self.n,
            "s": self.s,
            "x": self.x,
            "chi_h": exact(self.chi_h),
            "c1sq": exact(self.c1sq),
            "slope": exact(self.slope),
            "ratio": exact(self.ratio),
            "sigma": exact(self.sigma),
            "region": self.region,
        }

    def decimals(self) -> dict:
        return {k: decimal(getattr(self, k)) for k in ("chi_h", "c1sq", "slope", "ratio", "sigma")}


def geography_points(box: SweepBox) -> list[GeographyPoint]:
    """One point per distinct ``(g, n, s, x)`` among the admissible censuses of ``box``.

    Censuses differing only in how ``s`` splits into types with the same ``x``
    have identical invariants and collapse to one row (first occurrence kept).
    """
    seen = set()
    points = []
    for f, inv in enumerate_admissible(box):
        key = (f.g, f.n, inv.s, inv.x)
        if key in seen:
            continue
        seen.add(key)
        points.append(GeographyPoint.from_census(f, inv))
    return points


def dump_json(obj) -> str:
    return json.dumps(obj, indent=2) + "\n"


def emit_geography(points: Iterable[GeographyPoint], fmt: str = "csv") -> str:
    rows = [p.row() for p in points]
    if fmt == "json":
        return dump_json(rows)
    if fmt != "csv":
        raise ValueError(f"format must be 'csv' or 'json', got {fmt!r}")
    buf = io.StringIO()
    writer = csv.DictWriter(buf, fieldnames=GEOGRAPHY_FIELDS, lineterminator="\n")
    writer.writeheader()
    for row in rows:
        writer.writerow({k: "" if v is None else v for k, v in row.items()})
    return buf.getvalue()


def write_text(path, text: str) -> None:
    path = Path(path)
    try:
        path.write_text(text, encoding="utf-8")
    except OSError as exc:
        raise ReportIOError(f"cannot write {path}: {exc.strerror or exc}") from exc
