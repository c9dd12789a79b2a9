"""Ribbons, outside decompositions, and subribbon tables.

A ribbon is an edge-connected skew shape with exactly one cell on each
diagonal; reading its cells by increasing content gives a walk of "up" and
"right" steps.  An outside decomposition cuts a host shape into ribbons that
all follow one direction per diagonal, and the minimal containing ribbon
records exactly those directions.  The subribbon table then supplies the
entries of the determinant identities.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from functools import cached_property
from typing import Dict, Optional, Tuple, Union

from .errors import InternalCheckError, PreconditionError
from .shapes import (
    Cell,
    DiagonalTableau,
    SkewShape,
    Tableau,
    content,
    content_set,
    from_cells,
    is_edge_connected,
    tableau_from_entries,
    translation_equivalent,
)

UP = "U"
RIGHT = "R"


def is_ribbon(shape: SkewShape) -> bool:
    """True iff the shape is nonempty, edge-connected, and 2x2-free.

    For skew shapes this is equivalent to having exactly one cell on each
    diagonal of a contiguous content interval.
    """
    if not shape.cells:
        return False
    if not is_edge_connected(shape):
        return False
    contents = [content(c) for c in shape.cells]
    return len(set(contents)) == len(contents)


@dataclass(frozen=True)
class Ribbon:
    """A validated ribbon; exposes its walk by increasing content."""

    shape: SkewShape

    def __post_init__(self) -> None:
        if not is_ribbon(self.shape):
            raise PreconditionError(f"{self.shape} is not a ribbon")

    @cached_property
    def cells_by_content(self) -> Tuple[Cell, ...]:
        return tuple(sorted(self.shape.cells, key=content))

    @property
    def start(self) -> Cell:
        """The cell of smallest content."""
        return self.cells_by_content[0]

    @property
    def end(self) -> Cell:
        """The cell of largest content."""
        return self.cells_by_content[-1]

    @property
    def cmin(self) -> int:
        return content(self.start)

    @property
    def cmax(self) -> int:
        return content(self.end)

    @property
    def n_cells(self) -> int:
        return self.shape.n_cells

    @cached_property
    def steps(self) -> Tuple[str, ...]:
        """The walk directions: steps[k] moves from content cmin+k to cmin+k+1."""
        out = []
        cells = self.cells_by_content
        for (i, j), nxt in zip(cells, cells[1:]):
            if nxt == (i - 1, j):
                out.append(UP)
            elif nxt == (i, j + 1):
                out.append(RIGHT)
            else:
                raise InternalCheckError(
                    f"consecutive-content cells {(i, j)} and {nxt} not adjacent"
                )
        return tuple(out)


def ribbon_from_walk(start: Cell, steps: Tuple[str, ...]) -> Ribbon:
    """Build a ribbon from its smallest-content cell and its step sequence."""
    cells = [start]
    for s in steps:
        i, j = cells[-1]
        if s == UP:
            cells.append((i - 1, j))
        elif s == RIGHT:
            cells.append((i, j + 1))
        else:
            raise PreconditionError(f"unknown step {s!r}; use {UP!r} or {RIGHT!r}")
    return Ribbon(from_cells(cells))


def anchored_ribbon(cmin: int, steps: Tuple[str, ...]) -> Ribbon:
    """The furthest-left ribbon with the given smallest content and steps."""
    ups = sum(1 for s in steps if s == UP)
    i0 = max(ups + 1, 1 - cmin)
    return ribbon_from_walk((i0, i0 + cmin), tuple(steps))


def subribbon_of(r: Ribbon, p: int, q: int) -> Ribbon:
    """The furthest-left subribbon of ``r`` spanning contents ``[p, q]``."""
    if not (r.cmin <= p <= q <= r.cmax):
        raise PreconditionError(
            f"content interval [{p},{q}] not inside [{r.cmin},{r.cmax}]"
        )
    return anchored_ribbon(p, r.steps[p - r.cmin : q - r.cmin])


@dataclass(frozen=True)
class OutsideDecomposition:
    """An ordered cut of a host shape into perimeter-to-perimeter ribbons.

    Pieces keep host coordinates.  Each piece must begin on the left or
    bottom perimeter of the host and end on the right or top perimeter.
    """

    host: SkewShape
    pieces: Tuple[Ribbon, ...]

    def __post_init__(self) -> None:
        covered = [c for p in self.pieces for c in p.shape.cells]
        if len(covered) != len(set(covered)) or set(covered) != self.host.cell_set:
            raise PreconditionError("pieces must partition the host cells")
        hs = self.host.cell_set
        for p in self.pieces:
            si, sj = p.start
            if (si, sj - 1) in hs and (si + 1, sj) in hs:
                raise PreconditionError(
                    f"piece starting at {p.start} is not on the left/bottom perimeter"
                )
            ei, ej = p.end
            if (ei, ej + 1) in hs and (ei - 1, ej) in hs:
                raise PreconditionError(
                    f"piece ending at {p.end} is not on the right/top perimeter"
                )

    @property
    def n_pieces(self) -> int:
        return len(self.pieces)


def decomposition_from_ribbon(shape: SkewShape, r: Ribbon) -> OutsideDecomposition:
    """Cut ``shape`` along the per-diagonal directions of the ribbon ``r``.

    Each diagonal of the host inherits the up/right direction that ``r``
    takes there; maximal direction-following chains of host cells are the
    pieces.  Pieces are ordered by smallest content, bottom-most first on
    ties.  Requires an edge-connected host with c(host) = c(r).
    """
    if not shape.cells or not is_edge_connected(shape):
        raise PreconditionError("host must be a nonempty edge-connected skew shape")
    if content_set(shape) != tuple(range(r.cmin, r.cmax + 1)):
        raise PreconditionError(
            f"ribbon contents [{r.cmin},{r.cmax}] do not match host contents "
            f"{content_set(shape)}"
        )
    dirs = {r.cmin + k: s for k, s in enumerate(r.steps)}
    host = shape.cell_set

    def successor(cell: Cell) -> Optional[Cell]:
        d = dirs.get(content(cell))
        if d is None:
            return None
        i, j = cell
        nxt = (i - 1, j) if d == UP else (i, j + 1)
        return nxt if nxt in host else None

    def has_predecessor(cell: Cell) -> bool:
        d = dirs.get(content(cell) - 1)
        if d is None:
            return False
        i, j = cell
        prev = (i + 1, j) if d == UP else (i, j - 1)
        return prev in host

    starts = [c for c in shape.cells if not has_predecessor(c)]
    starts.sort(key=lambda c: (content(c), -c[0]))
    pieces = []
    covered = 0
    for s in starts:
        walk = [s]
        while (nxt := successor(walk[-1])) is not None:
            walk.append(nxt)
        pieces.append(Ribbon(from_cells(walk)))
        covered += len(walk)
    if covered != shape.n_cells:
        raise InternalCheckError("direction-following chains fail to cover the host")
    return OutsideDecomposition(shape, tuple(pieces))


def trivial_decomposition(r: Ribbon) -> OutsideDecomposition:
    """The one-piece decomposition of a ribbon-shaped host into itself."""
    return decomposition_from_ribbon(r.shape, r)


def minimal_containing_ribbon(theta: OutsideDecomposition) -> Ribbon:
    """The furthest-left ribbon containing every piece, content-aligned.

    The pieces pin a direction on every diagonal: interior steps directly,
    and end/start cells through the host cells adjacent to them (an exit
    into the host rules out that direction's continuation).  For an
    edge-connected host every diagonal gets pinned.
    """
    host = theta.host
    if not is_edge_connected(host):
        raise PreconditionError("host must be edge-connected")
    contents = content_set(host)
    cmin, cmax = contents[0], contents[-1]
    dirs: Dict[int, str] = {}

    def pin(c: int, d: str) -> None:
        if dirs.setdefault(c, d) != d:
            raise PreconditionError(
                f"pieces force both directions on diagonal {c}; they do not nest"
            )

    hs = host.cell_set
    for p in theta.pieces:
        for k, s in enumerate(p.steps):
            pin(p.cmin + k, s)
        ei, ej = p.end
        if p.cmax < cmax:
            up_in, right_in = (ei - 1, ej) in hs, (ei, ej + 1) in hs
            if up_in and right_in:
                raise PreconditionError(
                    f"piece ending at {p.end} has both continuations inside the host"
                )
            if up_in:
                pin(p.cmax, RIGHT)
            if right_in:
                pin(p.cmax, UP)
        si, sj = p.start
        if p.cmin > cmin:
            if (si + 1, sj) in hs:
                pin(p.cmin - 1, RIGHT)
            if (si, sj - 1) in hs:
                pin(p.cmin - 1, UP)

    missing = [c for c in range(cmin, cmax) if c not in dirs]
    if missing:
        raise InternalCheckError(
            f"directions on diagonals {missing} left unpinned; host not edge-connected?"
        )
    r = anchored_ribbon(cmin, tuple(dirs[c] for c in range(cmin, cmax)))
    for p in theta.pieces:
        if not translation_equivalent(subribbon_of(r, p.cmin, p.cmax).shape, p.shape):
            raise InternalCheckError(
                f"piece with contents [{p.cmin},{p.cmax}] does not embed in the ribbon"
            )
    return r


class SubribbonStatus(Enum):
    DEFINED = "defined"
    EMPTY = "empty"
    UNDEFINED = "undefined"


@dataclass(frozen=True)
class SubribbonEntry:
    """One cell of the subribbon table: a ribbon, or the empty/undefined marker."""

    status: SubribbonStatus
    ribbon: Optional[Ribbon] = None

    def __post_init__(self) -> None:
        if (self.ribbon is not None) != (self.status is SubribbonStatus.DEFINED):
            raise PreconditionError("ribbon present iff status is DEFINED")


@dataclass(frozen=True)
class SubribbonTable:
    """The n x n grid of subribbons for a decomposition, 1-based access."""

    ribbon: Ribbon
    entries: Tuple[Tuple[SubribbonEntry, ...], ...]

    @property
    def n(self) -> int:
        return len(self.entries)

    def entry(self, i: int, j: int) -> SubribbonEntry:
        return self.entries[i - 1][j - 1]

    def count(self, status: SubribbonStatus) -> int:
        return sum(1 for row in self.entries for e in row if e.status is status)


def subribbon_table(theta: OutsideDecomposition) -> SubribbonTable:
    """Table entry (i,j): the subribbon spanning [min c(theta_i), max c(theta_j)].

    The interval degenerates to the empty marker when min = max + 1 and to
    the undefined marker when min > max + 1.
    """
    r = minimal_containing_ribbon(theta)
    rows = []
    for pi in theta.pieces:
        row = []
        for pj in theta.pieces:
            p, q = pi.cmin, pj.cmax
            if p == q + 1:
                row.append(SubribbonEntry(SubribbonStatus.EMPTY))
            elif p > q + 1:
                row.append(SubribbonEntry(SubribbonStatus.UNDEFINED))
            else:
                row.append(
                    SubribbonEntry(SubribbonStatus.DEFINED, subribbon_of(r, p, q))
                )
        rows.append(tuple(row))
    return SubribbonTable(r, tuple(rows))


def fill_subribbon(
    k: DiagonalTableau, entry: SubribbonEntry
) -> Union[Tableau, SubribbonStatus]:
    """Decorate a subribbon with the host's diagonal values of equal content.

    Empty and undefined entries pass through as their status markers, to be
    mapped onto the ring elements 1 and 0 downstream.
    """
    if entry.status is not SubribbonStatus.DEFINED:
        return entry.status
    values = k.value_map
    shape = entry.ribbon.shape
    missing = [content(c) for c in shape.cells if content(c) not in values]
    if missing:
        raise PreconditionError(
            f"host tableau has no diagonal values for contents {sorted(set(missing))}"
        )
    return tableau_from_entries(
        shape, {cell: values[content(cell)] for cell in shape.cells}
    )
