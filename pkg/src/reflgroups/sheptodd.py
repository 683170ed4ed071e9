"""
The bundled classification table of irreducible complex reflection groups:
degrees, codegrees, character fields and regular degrees of the primitive
groups G4..G37 plus symbolic rows for the infinite series.

The table ships as a static, checksum-verified data file; it serves as an
oracle (the primitive groups have no matrix model in this package), so it
is never generated.  Codegrees of well-generated records are reconstructed
from the duality d_i + d*_(n-i+1) = d_n.
"""

from __future__ import annotations

import hashlib
import json
from dataclasses import dataclass
from importlib import resources
from math import prod

__all__ = ["ShephardToddRecord", "SeriesRecord", "load_table", "record"]

_SHA256 = "b1814383266ab091d0e91c284e481fd61dd23bf6624896b33b079a9af3989db8"


@dataclass(frozen=True)
class ShephardToddRecord:
    label: str
    degrees: tuple
    codegrees: tuple
    well_generated: bool
    field: str
    structure: str
    order: int
    regular_degrees: tuple
    coxeter_type: str | None = None

    @property
    def rank(self) -> int:
        return len(self.degrees)


@dataclass(frozen=True)
class SeriesRecord:
    label: str
    constraints: str
    degrees: str
    codegrees: str
    field: str
    regular_degrees: str


def _raw() -> bytes:
    return resources.files("reflgroups").joinpath(
        "data/shephard_todd.json").read_bytes()


def load_table() -> tuple[list[SeriesRecord], list[ShephardToddRecord]]:
    """Parse the bundled table, verifying its checksum and the order
    identity |W| = prod(degrees) on every exceptional record."""
    raw = _raw()
    digest = hashlib.sha256(raw).hexdigest()
    if digest != _SHA256:
        raise RuntimeError(
            f"classification data file is corrupt (sha256 {digest})")
    doc = json.loads(raw)
    series = [SeriesRecord(**row) for row in doc["series"]]
    records = []
    for row in doc["exceptional"]:
        degrees = tuple(row["degrees"])
        well_generated = row["codegrees"] is None
        if well_generated:
            d_n = degrees[-1]
            codegrees = tuple(sorted(d_n - d for d in degrees))
        else:
            codegrees = tuple(row["codegrees"])
        rec = ShephardToddRecord(
            label=row["label"], degrees=degrees, codegrees=codegrees,
            well_generated=well_generated, field=row["field"],
            structure=row["structure"], order=row["order"],
            regular_degrees=tuple(row["regular_degrees"]),
            coxeter_type=row.get("coxeter_type"))
        if prod(rec.degrees) != rec.order:
            raise RuntimeError(f"order mismatch in record {rec.label}")
        records.append(rec)
    return series, records


def record(label: str) -> ShephardToddRecord:
    for rec in load_table()[1]:
        if rec.label == label or rec.coxeter_type == label:
            return rec
    raise KeyError(f"no exceptional record {label!r}")
