"""Plain-text store of externally sourced Siegel cusp form dimensions.

Format (UTF-8, comma separated)::

    group,p,k,dim,source
    paramodular_K,277,3,1,some published table

``group`` is one of ``paramodular_K``, ``siegel_Gamma0``,
``klingen_Gamma0prime``. Blank lines and lines starting with ``#`` are
ignored. The store file itself uses the same format and is only appended to.
"""

from __future__ import annotations

import csv
import io
import os
from dataclasses import dataclass, field
from enum import Enum
from pathlib import Path
from typing import Iterable, TextIO

from .arith import is_prime
from .congruences import SiegelDims

HEADER = ("group", "p", "k", "dim", "source")


class Group(str, Enum):
    paramodular_K = "paramodular_K"
    siegel_Gamma0 = "siegel_Gamma0"
    klingen_Gamma0prime = "klingen_Gamma0prime"


@dataclass(frozen=True)
class DimRecord:
    group: Group
    p: int
    k: int
    dim: int
    source: str

    @property
    def key(self) -> tuple[Group, int, int]:
        return (self.group, self.p, self.k)

    def row(self) -> list[str]:
        return [self.group.value, str(self.p), str(self.k), str(self.dim), self.source]


class IngestError(ValueError):
    """Structural problems in an input file; nothing from it was stored."""

    def __init__(self, problems: list[tuple[int, str]]):
        self.problems = problems
        lines = "; ".join(f"line {n}: {msg}" for n, msg in problems)
        super().__init__(f"malformed input, nothing ingested: {lines}")


@dataclass(frozen=True)
class Reject:
    line: int
    reason: str


@dataclass
class IngestResult:
    added: int = 0
    duplicates: int = 0
    rejects: list[Reject] = field(default_factory=list)


def _parse(text: str) -> list[tuple[int, list[str]]]:
    """Split into ``(line number, fields)``; raises ``IngestError`` on structure."""
    rows, problems = [], []
    header_seen = False
    for lineno, line in enumerate(text.splitlines(), start=1):
        stripped = line.strip()
        if not stripped or stripped.startswith("#"):
            continue
        fields = [f.strip() for f in next(csv.reader([stripped], skipinitialspace=True))]
        if not header_seen:
            header_seen = True
            if tuple(fields) != HEADER:
                problems.append((lineno, f"header must be exactly {','.join(HEADER)}"))
            continue
        if len(fields) != len(HEADER):
            problems.append((lineno, f"expected {len(HEADER)} fields, got {len(fields)}"))
            continue
        for name, value in zip(HEADER[1:4], fields[1:4]):
            try:
                int(value)
            except ValueError:
                problems.append((lineno, f"{name} is not an integer: {value!r}"))
        rows.append((lineno, fields))
    if not header_seen:
        problems.append((0, "missing header"))
    if problems:
        raise IngestError(problems)
    return rows


def _validate(fields: list[str]) -> DimRecord | str:
    group, p, k, dim, source = fields
    try:
        g = Group(group)
    except ValueError:
        return f"unknown group {group!r}"
    p, k, dim = int(p), int(k), int(dim)
    if not is_prime(p):
        return f"p = {p} is not prime"
    if k < 3:
        return f"k = {k} is below 3"
    if dim < 0:
        return f"dim = {dim} is negative"
    if not source:
        return "source must not be empty"
    return DimRecord(g, p, k, dim, source)


class DimStore:
    """In-memory index over an append-only dimension table.

    With ``path=None`` the store lives only in memory.
    """

    def __init__(self, path: str | os.PathLike | None = None):
        self.path = Path(path) if path is not None else None
        self._index: dict[tuple[Group, int, int], DimRecord] = {}
        if self.path is not None and self.path.exists():
            result = self._ingest_text(self.path.read_text(encoding="utf-8"), persist=False)
            if result.rejects:
                raise IngestError([(r.line, r.reason) for r in result.rejects])

    def __len__(self) -> int:
        return len(self._index)

    @property
    def records(self) -> list[DimRecord]:
        return sorted(self._index.values(), key=lambda r: (r.group.value, r.p, r.k))

    def ingest(self, path: str | os.PathLike) -> IngestResult:
        return self._ingest_text(Path(path).read_text(encoding="utf-8"), persist=True)

    def ingest_text(self, text: str) -> IngestResult:
        return self._ingest_text(text, persist=True)

    def _ingest_text(self, text: str, persist: bool) -> IngestResult:
        rows = _parse(text)
        result = IngestResult()
        candidates: dict[tuple, list[tuple[int, DimRecord]]] = {}
        for lineno, fields in rows:
            rec = _validate(fields)
            if isinstance(rec, str):
                result.rejects.append(Reject(lineno, rec))
            else:
                candidates.setdefault(rec.key, []).append((lineno, rec))

        accepted = []
        for key, entries in candidates.items():
            dims = {rec.dim for _, rec in entries}
            lines = ", ".join(str(n) for n, _ in entries)
            if len(dims) > 1:
                for lineno, _ in entries:
                    result.rejects.append(
                        Reject(lineno, f"conflicting dims {sorted(dims)} for {_fmt(key)} on lines {lines}")
                    )
                continue
            lineno, rec = entries[0]
            result.duplicates += len(entries) - 1
            existing = self._index.get(key)
            if existing is not None:
                if existing.dim != rec.dim:
                    result.rejects.append(
                        Reject(lineno, f"{_fmt(key)} already stored with dim {existing.dim}")
                    )
                else:
                    result.duplicates += 1
                continue
            accepted.append(rec)

        result.rejects.sort(key=lambda r: r.line)
        accepted.sort(key=lambda r: (r.group.value, r.p, r.k))
        if persist and self.path is not None and accepted:
            self._append(accepted)
        for rec in accepted:
            self._index[rec.key] = rec
        result.added = len(accepted)
        return result

    def _append(self, records: Iterable[DimRecord]) -> None:
        new_file = not self.path.exists() or self.path.stat().st_size == 0
        self.path.parent.mkdir(parents=True, exist_ok=True)
        with open(self.path, "a", encoding="utf-8", newline="") as fh:
            writer = csv.writer(fh, lineterminator="\n")
            if new_file:
                writer.writerow(HEADER)
            for rec in records:
                writer.writerow(rec.row())

    def lookup(self, group: Group | str, p: int, k: int) -> DimRecord | None:
        return self._index.get((Group(group), p, k))

    def siegel_dims(self, p: int, k: int) -> SiegelDims | None:
        """Dimensions for K(p) and Gamma_0(p) at weight k, or None if either is missing."""
        K = self.lookup(Group.paramodular_K, p, k)
        G = self.lookup(Group.siegel_Gamma0, p, k)
        if K is None or G is None:
            return None
        Kl = self.lookup(Group.klingen_Gamma0prime, p, k)
        return SiegelDims(p, k, K.dim, G.dim, Kl.dim if Kl else None, provenance="ingested")

    def export(self, out: TextIO | None = None) -> str:
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(HEADER)
        for rec in self.records:
            writer.writerow(rec.row())
        text = buf.getvalue()
        if out is not None:
            out.write(text)
        return text


def _fmt(key: tuple[Group, int, int]) -> str:
    g, p, k = key
    return f"({g.value}, p={p}, k={k})"
