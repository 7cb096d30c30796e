"""Best-known minimum-distance bounds for binary [n, k] codes."""

from __future__ import annotations

import csv
import io
from dataclasses import dataclass, field
from importlib import resources
from typing import BinaryIO, TextIO, Union

HEADER = ["length", "dimension", "lower", "upper"]


class BoundsError(ValueError):
    """Malformed bounds data."""


class BoundsNotFound(KeyError):
    pass


@dataclass(frozen=True)
class BoundsEntry:
    length: int
    dimension: int
    lower: int
    upper: int

    def __post_init__(self):
        if not 1 <= self.lower <= self.upper <= self.length:
            raise BoundsError(
                f"[{self.length},{self.dimension}]: need 1 <= lower <= upper <= length, "
                f"got lower={self.lower}, upper={self.upper}"
            )


@dataclass(frozen=True)
class BoundsTable:
    entries: dict[tuple[int, int], BoundsEntry] = field(default_factory=dict)

    def lookup(self, length: int, dimension: int) -> BoundsEntry:
        try:
            return self.entries[length, dimension]
        except KeyError:
            raise BoundsNotFound(f"no bounds for [{length},{dimension}]") from None

    def __contains__(self, key) -> bool:
        return key in self.entries

    def __len__(self) -> int:
        return len(self.entries)


def load_bounds(source: Union[BinaryIO, TextIO, str, bytes]) -> BoundsTable:
    """Parse ``length,dimension,lower,upper`` CSV. Lines starting with ``#`` are comments."""
    if isinstance(source, bytes):
        text = source.decode("utf-8")
    elif isinstance(source, str):
        text = source
    else:
        data = source.read()
        text = data.decode("utf-8") if isinstance(data, bytes) else data

    lines = [
        (lineno, line)
        for lineno, line in enumerate(text.splitlines(), start=1)
        if line.strip() and not line.lstrip().startswith("#")
    ]
    if not lines:
        raise BoundsError("bounds file is empty")
    header_no, header = lines[0]
    if [h.strip() for h in header.split(",")] != HEADER:
        raise BoundsError(f"line {header_no}: expected header {','.join(HEADER)!r}")

    entries: dict[tuple[int, int], BoundsEntry] = {}
    errors = []
    for lineno, line in lines[1:]:
        fields = next(csv.reader([line]))
        if len(fields) != 4:
            errors.append(f"line {lineno}: expected 4 fields, got {len(fields)}")
            continue
        try:
            length, dim, lower, upper = (int(f) for f in fields)
        except ValueError:
            errors.append(f"line {lineno}: non-numeric field in {line.strip()!r}")
            continue
        if (length, dim) in entries:
            errors.append(f"line {lineno}: duplicate entry for [{length},{dim}]")
            continue
        try:
            entries[length, dim] = BoundsEntry(length, dim, lower, upper)
        except BoundsError as exc:
            errors.append(f"line {lineno}: {exc}")
    if errors:
        raise BoundsError("; ".join(errors))
    return BoundsTable(entries)


def serialize_bounds(table: BoundsTable) -> str:
    out = io.StringIO()
    out.write(",".join(HEADER) + "\n")
    for key in sorted(table.entries):
        e = table.entries[key]
        out.write(f"{e.length},{e.dimension},{e.lower},{e.upper}\n")
    return out.getvalue()


def bundled_bounds() -> BoundsTable:
    with resources.files("circulant_codes.data").joinpath("bounds.csv").open("rb") as fh:
        return load_bounds(fh)
