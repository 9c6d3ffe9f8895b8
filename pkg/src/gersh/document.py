"""Machine-readable region documents (schema ``gersh/1``).

A document records, per row of the pencil, the two one-sided plain regions,
the combined plain region, the tilde combination, and the simplified
region, together with family summaries and optional cluster/spectrum
sections.  Serialization round-trips bit-for-bit for finite doubles.
"""
from __future__ import annotations

import hashlib
import json
from collections import Counter
from dataclasses import dataclass

from .core import (
    DataError,
    Disk,
    DiskComplement,
    HalfPlane,
    Intersection,
    Pencil,
    PointAtInfinity,
    Region,
    WholePlane,
)
from .counting import Cluster, ClusterReport
from .oracle import Spectrum
from .regions import RegionFamily, inclusion_family, row_stats

__all__ = [
    "SCHEMA",
    "RegionDocument",
    "region_to_dict",
    "region_from_dict",
    "spectrum_to_dict",
    "cluster_report_to_dict",
    "build_region_document",
    "document_to_json",
    "document_from_json",
    "file_sha256",
]

SCHEMA = "gersh/1"


def region_to_dict(region: Region) -> dict:
    if isinstance(region, WholePlane):
        return {"kind": "whole_plane"}
    if isinstance(region, Disk):
        return {
            "kind": "disk",
            "center": {"re": region.center.real, "im": region.center.imag},
            "radius": region.radius,
        }
    if isinstance(region, DiskComplement):
        return {
            "kind": "disk_complement",
            "center": {"re": region.center.real, "im": region.center.imag},
            "radius": region.radius,
        }
    if isinstance(region, HalfPlane):
        return {
            "kind": "half_plane",
            "alpha": {"re": region.alpha.real, "im": region.alpha.imag},
        }
    if isinstance(region, PointAtInfinity):
        return {"kind": "point_at_infinity"}
    if isinstance(region, Intersection):
        return {
            "kind": "intersection",
            "left": region_to_dict(region.left),
            "right": region_to_dict(region.right),
        }
    raise TypeError(f"not a region: {region!r}")


def region_from_dict(data: dict) -> Region:
    kind = data.get("kind")
    if kind == "whole_plane":
        return WholePlane()
    if kind == "disk":
        return Disk(complex(data["center"]["re"], data["center"]["im"]), data["radius"])
    if kind == "disk_complement":
        return DiskComplement(complex(data["center"]["re"], data["center"]["im"]), data["radius"])
    if kind == "half_plane":
        return HalfPlane(complex(data["alpha"]["re"], data["alpha"]["im"]))
    if kind == "point_at_infinity":
        return PointAtInfinity()
    if kind == "intersection":
        return Intersection(region_from_dict(data["left"]), region_from_dict(data["right"]))
    raise DataError(f"unknown region kind {kind!r}")


def spectrum_to_dict(spectrum: Spectrum) -> dict:
    return {
        "finite": [{"re": z.real, "im": z.imag} for z in spectrum.finite],
        "infinite_count": spectrum.infinite_count,
    }


def cluster_report_to_dict(report: ClusterReport, verified: dict[int, bool] | None = None) -> dict:
    clusters = []
    for pos, cluster in enumerate(report.clusters):
        entry = {
            "indices": list(cluster.indices),
            "expected_count": cluster.expected_count,
            "certified": cluster.certified,
        }
        if verified is not None and pos in verified:
            entry["verified"] = verified[pos]
        clusters.append(entry)
    return {"clusters": clusters}


def _family_summary(family: RegionFamily) -> dict:
    kinds = Counter(type(row.combined).__name__ for row in family.rows)
    return {
        "variant": family.variant,
        "kind_counts": {
            "whole_plane": kinds.get("WholePlane", 0),
            "disk": kinds.get("Disk", 0),
            "disk_complement": kinds.get("DiskComplement", 0),
            "half_plane": kinds.get("HalfPlane", 0),
            "point_at_infinity": kinds.get("PointAtInfinity", 0),
            "intersection": kinds.get("Intersection", 0),
        },
    }


@dataclass(frozen=True)
class RegionDocument:
    """Serializable record of all region families of one pencil."""

    meta: dict
    variant: str
    rows: tuple[dict, ...]
    summaries: dict
    cluster_report: dict | None = None
    spectrum: dict | None = None

    def to_dict(self) -> dict:
        data = {
            "schema": SCHEMA,
            "meta": self.meta,
            "variant": self.variant,
            "rows": list(self.rows),
            "summaries": self.summaries,
        }
        if self.cluster_report is not None:
            data["cluster_report"] = self.cluster_report
        if self.spectrum is not None:
            data["spectrum"] = self.spectrum
        return data

    @classmethod
    def from_dict(cls, data: dict) -> "RegionDocument":
        if data.get("schema") != SCHEMA:
            raise DataError(f"unsupported schema {data.get('schema')!r}")
        return cls(
            meta=data["meta"],
            variant=data["variant"],
            rows=tuple(data["rows"]),
            summaries=data["summaries"],
            cluster_report=data.get("cluster_report"),
            spectrum=data.get("spectrum"),
        )


def build_region_document(
    pencil: Pencil,
    variant: str = "plain",
    source_a: str | None = None,
    source_b: str | None = None,
    sha_a: str | None = None,
    sha_b: str | None = None,
    cluster_report: ClusterReport | None = None,
    spectrum: Spectrum | None = None,
    verified: dict[int, bool] | None = None,
) -> RegionDocument:
    """Compute all three families of the pencil and assemble a document."""
    stats = row_stats(pencil)
    plain = inclusion_family(pencil, "plain", stats)
    tilde = inclusion_family(pencil, "tilde", stats)
    simplified = inclusion_family(pencil, "simplified", stats)
    rows = tuple(
        {
            "index": i,
            "gammaB": region_to_dict(plain.rows[i].b_region),
            "gammaA": region_to_dict(plain.rows[i].a_region),
            "gamma": region_to_dict(plain.rows[i].combined),
            "gammaTilde": region_to_dict(tilde.rows[i].combined),
            "gammaS": region_to_dict(simplified.rows[i].combined),
        }
        for i in range(pencil.n)
    )
    meta = {
        "n": pencil.n,
        "source_a": source_a,
        "source_b": source_b,
        "sha256_a": sha_a,
        "sha256_b": sha_b,
    }
    summaries = {
        "plain": _family_summary(plain),
        "tilde": _family_summary(tilde),
        "simplified": _family_summary(simplified),
    }
    return RegionDocument(
        meta=meta,
        variant=variant,
        rows=rows,
        summaries=summaries,
        cluster_report=(
            cluster_report_to_dict(cluster_report, verified) if cluster_report else None
        ),
        spectrum=spectrum_to_dict(spectrum) if spectrum else None,
    )


def document_to_json(doc: RegionDocument) -> str:
    return json.dumps(doc.to_dict(), indent=2, sort_keys=True) + "\n"


def document_from_json(text: str) -> RegionDocument:
    return RegionDocument.from_dict(json.loads(text))


def file_sha256(path) -> str:
    digest = hashlib.sha256()
    with open(path, "rb") as handle:
        digest.update(handle.read())
    return digest.hexdigest()
