"""JSONL catalog of certified graphs.

One JSON object per line.  Appends take an exclusive ``flock`` and write the
whole batch with a single ``os.write`` on an ``O_APPEND`` descriptor, so a
crashed writer never leaves half a record behind a complete one.
"""

from __future__ import annotations

import fcntl
import json
import math
import os
from dataclasses import asdict, dataclass
from datetime import datetime, timezone
from pathlib import Path
from typing import Iterable

from .bounds import BoundConstraint, CertificationReport, certify_maximal
from .graph import Graph, decode_graph6, encode_graph6
from .iso import automorphism_group_order, canonical_form

CATALOG_ENV = "MAXAC_CATALOG"
DEFAULT_CATALOG = "maxac_catalog.jsonl"


class CatalogError(ValueError):
    pass


def default_catalog_path() -> Path:
    return Path(os.environ.get(CATALOG_ENV, DEFAULT_CATALOG))


def _int_or_none(x) -> int | None:
    return None if x is None or (isinstance(x, float) and math.isinf(x)) else int(x)


@dataclass
class CatalogRecord:
    graph6: str
    n: int
    d: int | None
    girth: int | None  # None for forests
    diameter: int | None  # None when disconnected
    ac: float
    bound: float
    attained: bool
    constraint: dict
    aut_order: int
    canonical: str
    provenance: str
    timestamp: str

    def to_json(self) -> str:
        return json.dumps(asdict(self), sort_keys=True)

    @classmethod
    def from_dict(cls, obj: dict) -> "CatalogRecord":
        try:
            return cls(**obj)
        except TypeError as exc:
            raise CatalogError(f"bad record fields: {exc}") from None

    @property
    def bound_constraint(self) -> BoundConstraint:
        return BoundConstraint.from_dict(self.constraint)

    def graph(self) -> Graph:
        return decode_graph6(self.graph6)


def make_record(
    g: Graph,
    c: BoundConstraint,
    provenance: str,
    report: CertificationReport | None = None,
    canonical: str | None = None,
) -> CatalogRecord:
    rep = report or certify_maximal(g, c)
    return CatalogRecord(
        graph6=encode_graph6(g),
        n=g.n,
        d=rep.degree,
        girth=_int_or_none(rep.girth),
        diameter=_int_or_none(rep.diameter),
        ac=float(f"{rep.ac:.12g}"),
        bound=float(f"{rep.bound:.12g}"),
        attained=bool(rep.attained),
        constraint=c.to_dict(),
        aut_order=automorphism_group_order(g),
        canonical=canonical or canonical_form(g).graph6,
        provenance=provenance,
        timestamp=datetime.now(timezone.utc).isoformat(timespec="seconds"),
    )


def append_records(path, records: Iterable[CatalogRecord]) -> int:
    """Append records under an exclusive lock; returns how many were written."""
    lines = [r.to_json() + "\n" for r in records]
    if not lines:
        return 0
    data = "".join(lines).encode()
    path = Path(path)
    if path.parent != Path(""):
        path.parent.mkdir(parents=True, exist_ok=True)
    fd = os.open(path, os.O_WRONLY | os.O_APPEND | os.O_CREAT, 0o644)
    try:
        fcntl.flock(fd, fcntl.LOCK_EX)
        try:
            written = os.write(fd, data)
            if written != len(data):  # pragma: no cover - regular files write fully
                raise OSError(f"short write to {path}")
            os.fsync(fd)
        finally:
            fcntl.flock(fd, fcntl.LOCK_UN)
    finally:
        os.close(fd)
    return len(lines)


def read_catalog(path) -> list[CatalogRecord]:
    path = Path(path)
    if not path.exists():
        raise CatalogError(f"catalog {path} does not exist")
    out = []
    with open(path) as fh:
        for lineno, line in enumerate(fh, 1):
            if not line.strip():
                continue
            try:
                obj = json.loads(line)
            except json.JSONDecodeError as exc:
                raise CatalogError(f"{path}:{lineno}: corrupt record ({exc.msg})") from None
            if not isinstance(obj, dict):
                raise CatalogError(f"{path}:{lineno}: record is not an object")
            try:
                out.append(CatalogRecord.from_dict(obj))
            except CatalogError as exc:
                raise CatalogError(f"{path}:{lineno}: {exc}") from None
    return out


def catalog_query(
    source,
    d: int | None = None,
    D: int | None = None,
    g: int | None = None,
    attained: bool | None = None,
    n_min: int | None = None,
    n_max: int | None = None,
) -> list[CatalogRecord]:
    """Filter a catalog (path or record list), keeping file order."""
    records = source if isinstance(source, list) else read_catalog(source)
    out = []
    for r in records:
        if d is not None and r.d != d:
            continue
        if D is not None and r.diameter != D:
            continue
        if g is not None and r.girth != g:
            continue
        if attained is not None and r.attained != attained:
            continue
        if n_min is not None and r.n < n_min:
            continue
        if n_max is not None and r.n > n_max:
            continue
        out.append(r)
    return out


def known_canonicals(path) -> set[str]:
    path = Path(path)
    if not path.exists():
        return set()
    return {r.canonical for r in read_catalog(path)}
