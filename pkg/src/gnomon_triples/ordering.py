"""Total order on primitive triples and the table renderings of it.

Rows are indexed (N, n): N = S/2 ranks the generating sides, and n ranks
the splits of one side by ascending t.  Walking sides upward and splits
inward visits every primitive triple exactly once.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Iterable, Iterator

from .partitions import Partition, ensure_side, enumerate_partitions
from .triples import PrimitiveTriple, construct, invert

TABLE_FORMATS = ("appendix", "tsv", "jsonl")


@dataclass(frozen=True)
class OrderIndex:
    """Two-level position of a triple: side rank N, split rank n within it."""

    n1: int
    n2: int

    def __post_init__(self) -> None:
        if self.n1 < 1 or self.n2 < 1:
            raise ValueError(f"index levels must be positive: {self}")

    def label(self) -> str:
        return f"{self.n1}.{self.n2}"


@dataclass(frozen=True)
class TableRow:
    index: OrderIndex
    partition: Partition
    triple: PrimitiveTriple


def stream(from_s: int, to_s: int) -> Iterator[TableRow]:
    """Rows for all sides in [from_s, to_s], ordered by (N, n).

    Lazy: rows for one side are produced without touching later sides.
    """
    ensure_side(from_s)
    ensure_side(to_s)
    if from_s > to_s:
        raise ValueError(f"empty side range: {from_s} > {to_s}")
    for side in range(from_s, to_s + 1, 2):
        for rank, partition in enumerate(enumerate_partitions(side), start=1):
            yield TableRow(
                index=OrderIndex(n1=side // 2, n2=rank),
                partition=partition,
                triple=construct(partition),
            )


def index_of(triple: PrimitiveTriple) -> OrderIndex:
    """Position of a primitive triple in the total order."""
    partition = invert(triple.x, triple.y, triple.z)
    rank = 1 + [p.t for p in enumerate_partitions(partition.side)].index(partition.t)
    return OrderIndex(n1=partition.side // 2, n2=rank)


def _row_cells(row: TableRow, side_cell: str) -> list[str]:
    p, triple = row.partition, row.triple
    return [
        row.index.label(),
        side_cell,
        str(p.t),
        str(p.l),
        str(triple.x),
        str(triple.y),
        str(triple.z),
    ]


def render_row(row: TableRow, fmt: str, first_of_group: bool = True) -> str:
    """One output line for a row, without the trailing newline."""
    if fmt == "appendix":
        side_cell = str(row.partition.side) if first_of_group else ""
        return "\t".join(_row_cells(row, side_cell))
    if fmt == "tsv":
        return "\t".join(_row_cells(row, str(row.partition.side)))
    if fmt == "jsonl":
        record = {
            "n1": row.index.n1,
            "n2": row.index.n2,
            "s": row.partition.side,
            "t": row.partition.t,
            "l": row.partition.l,
            "x": row.triple.x,
            "y": row.triple.y,
            "z": row.triple.z,
        }
        return json.dumps(record, separators=(",", ":"))
    raise ValueError(f"unknown table format {fmt!r}, expected one of {TABLE_FORMATS}")


def render_table(rows: Iterable[TableRow], fmt: str = "appendix") -> str:
    """Render rows as text; empty input renders as empty output.

    The appendix format prints the side only on the first row of each side
    group, mirroring how the ordered table is usually typeset.
    """
    lines = []
    previous_side = None
    for row in rows:
        first = row.partition.side != previous_side
        lines.append(render_row(row, fmt, first_of_group=first))
        previous_side = row.partition.side
    if not lines:
        return ""
    return "\n".join(lines) + "\n"
