"""Catalog of non-trivial zeta zero ordinates on the critical line.

A small set of ordinates ships embedded (the first ten plus four
high-index ones at q = 10^2..10^5, stored at 13-15 significant digits);
larger lists load from LMFDB-style plain-text files, one zero per line.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from pathlib import Path

from .errors import CatalogError, CatalogLookupError, CatalogParseError, DomainError


@dataclass(frozen=True)
class ZetaZero:
    """1-based index q and positive imaginary part t of a zero."""

    q: int
    t: float

    def __post_init__(self):
        if not isinstance(self.q, int) or self.q < 1:
            raise DomainError("zero index q must be a positive integer")
        if not (self.t > 0.0):
            raise DomainError("zero ordinate t must be positive")


class CatalogSource(Enum):
    EMBEDDED = "embedded"
    FILE = "file"


@dataclass(frozen=True)
class ZeroCatalog:
    """Immutable, q-sorted list of zeros with strictly increasing t."""

    source: CatalogSource
    zeros: tuple[ZetaZero, ...]

    def __post_init__(self):
        if not self.zeros:
            raise CatalogError("catalog is empty")
        qs = [z.q for z in self.zeros]
        if sorted(qs) != qs:
            raise CatalogError("catalog zeros must be sorted by q")
        if len(set(qs)) != len(qs):
            raise CatalogError("duplicate zero index q in catalog")
        ts = [z.t for z in self.zeros]
        if any(b <= a for a, b in zip(ts, ts[1:])):
            raise CatalogError("zero ordinates must be strictly increasing with q")

    def __len__(self) -> int:
        return len(self.zeros)

    def indices(self) -> tuple[int, ...]:
        return tuple(z.q for z in self.zeros)


# First ten ordinates plus four high-index ones, 13-15 significant digits.
_EMBEDDED = (
    (1, 14.1347251417347),
    (2, 21.0220396387716),
    (3, 25.0108575801457),
    (4, 30.4248761258595),
    (5, 32.9350615877392),
    (6, 37.5861781588257),
    (7, 40.9187190121475),
    (8, 43.3270732809150),
    (9, 48.0051508811672),
    (10, 49.7738324776723),
    (100, 236.52422966581),
    (1000, 1419.42248094599),
    (10000, 9877.78265400550),
    (100000, 74920.827498994),
)


def builtin_catalog() -> ZeroCatalog:
    """The embedded 14-zero catalog (q = 1..10 and q = 10^2..10^5)."""
    return ZeroCatalog(
        source=CatalogSource.EMBEDDED,
        zeros=tuple(ZetaZero(q, t) for q, t in _EMBEDDED),
    )


def load_catalog(path: str | Path) -> ZeroCatalog:
    """Parse a plain-text zero list.

    Each non-blank, non-comment line is either a bare ordinate ``t`` (the
    index is the running count of usable lines) or an explicit ``q t``
    pair, whitespace-separated.  Lines starting with '#' are skipped.
    """
    path = Path(path)
    zeros: list[ZetaZero] = []
    implicit_q = 0
    with path.open("r", encoding="utf-8") as fh:
        for line_no, raw in enumerate(fh, start=1):
            line = raw.strip()
            if not line or line.startswith("#"):
                continue
            fields = line.split()
            try:
                if len(fields) == 1:
                    implicit_q += 1
                    q = implicit_q
                    t = float(fields[0])
                elif len(fields) == 2:
                    q = int(fields[0])
                    t = float(fields[1])
                else:
                    raise ValueError(f"expected 1 or 2 fields, got {len(fields)}")
                zero = ZetaZero(q, t)
            except (ValueError, DomainError) as exc:
                raise CatalogParseError(line_no, f"{exc} in {line!r}") from exc
            zeros.append(zero)
    if not zeros:
        raise CatalogError(f"no usable zero lines in {path}")
    zeros.sort(key=lambda z: z.q)
    return ZeroCatalog(source=CatalogSource.FILE, zeros=tuple(zeros))


def save_catalog(catalog: ZeroCatalog, path: str | Path) -> None:
    """Write a catalog in the ``q t`` file format with round-trip precision."""
    path = Path(path)
    lines = [f"{z.q} {z.t!r}\n" for z in catalog.zeros]
    path.write_text("".join(lines), encoding="utf-8")


def get_zero(catalog: ZeroCatalog, q: int) -> ZetaZero:
    """Look up index q, reporting the nearest available index on a miss."""
    for z in catalog.zeros:
        if z.q == q:
            return z
    nearest = min(catalog.zeros, key=lambda z: abs(z.q - q))
    raise CatalogLookupError(
        f"zero q={q} not in catalog (nearest available: q={nearest.q})")
