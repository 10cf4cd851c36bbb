"""Exhaustive enumeration: the dumb, trustworthy ground truth.

Everything the closed forms and the series engine compute is re-derivable
here by brute force: all pairings of 2n points, all set partitions of [N],
all forest type vectors.  Enumeration order is deterministic, and sizes are
guarded by caps so a typo'd n fails fast instead of running for hours; pass
a larger ``cap`` explicitly to go above a default.
"""

from __future__ import annotations

from collections.abc import Callable, Iterator
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

from .diagrams import Chord, ChordDiagram, _from_canonical, blocks_cross, classify_chords
from .errors import EnumerationCapError
from .formulas import PartitionType

DIAGRAM_CAP = 8
PARTITION_CAP = 10

__all__ = [
    "DIAGRAM_CAP",
    "PARTITION_CAP",
    "CountTable",
    "brute_force_counts",
    "enumerate_diagrams",
    "enumerate_noncrossing_partitions",
    "enumerate_types",
]


def _check_cap(n: int, cap: int, what: str) -> None:
    if n > cap:
        raise EnumerationCapError(
            f"{what} at n={n} exceeds the cap of {cap}; pass a larger cap to override"
        )


def _iter_pairings(points: tuple[int, ...]) -> Iterator[tuple[Chord, ...]]:
    """All perfect matchings of the sorted point tuple.

    The smallest unmatched point is paired with each larger unmatched point
    in ascending order, so the output order is deterministic and every chord
    list arrives in canonical form.
    """
    if not points:
        yield ()
        return
    first = points[0]
    rest = points[1:]
    for index in range(len(rest)):
        chord = (first, rest[index])
        for tail in _iter_pairings(rest[:index] + rest[index + 1 :]):
            yield (chord,) + tail


def enumerate_diagrams(
    n: int,
    visit: Callable[[ChordDiagram], None] | None = None,
    cap: int = DIAGRAM_CAP,
) -> int:
    """Visit all (2n-1)!! diagrams of size n once each; return the visit count."""
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    _check_cap(n, cap, "diagram enumeration")
    count = 0
    for chords in _iter_pairings(tuple(range(1, 2 * n + 1))):
        count += 1
        if visit is not None:
            visit(_from_canonical(chords))
    return count


@dataclass(frozen=True)
class CountTable:
    """Exhaustive per-m tallies over all diagrams with n chords.

    ``forests_by_trees[m]`` counts the forest diagrams with m trees;
    ``rooted_by_trees[m]`` adds, for each such forest, the product of its
    tree sizes, which is the number of ways to pick one root chord per tree.
    """

    n: int
    forests_by_trees: dict[int, int]
    rooted_by_trees: dict[int, int]
    total_diagrams: int

    @property
    def total_forests(self) -> int:
        return sum(self.forests_by_trees.values())

    @property
    def tree_count(self) -> int:
        return self.forests_by_trees.get(1, 0)


def _tally(
    chord_lists: Iterator[tuple[Chord, ...]],
) -> tuple[dict[int, int], dict[int, int], int]:
    forests: dict[int, int] = {}
    rooted: dict[int, int] = {}
    total = 0
    for chords in chord_lists:
        total += 1
        shape = classify_chords(chords)
        if shape.is_forest:
            m = shape.component_count
            product = 1
            for size in shape.tree_sizes:
                product *= size
            forests[m] = forests.get(m, 0) + 1
            rooted[m] = rooted.get(m, 0) + product
    return forests, rooted, total


def brute_force_counts(n: int, cap: int = DIAGRAM_CAP, threads: int = 1) -> CountTable:
    """Classify every size-n diagram and tally forests and rooted forests by m.

    ``threads`` > 1 splits the sweep over the 2n-1 choices of the partner of
    point 1; the merged table is identical to the single-threaded one.
    """
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    if threads < 1:
        raise ValueError(f"threads must be >= 1, got {threads}")
    _check_cap(n, cap, "diagram sweep")
    points = tuple(range(1, 2 * n + 1))
    if threads == 1:
        forests, rooted, total = _tally(_iter_pairings(points))
    else:

        def branch(p: int) -> tuple[dict[int, int], dict[int, int], int]:
            rest = tuple(q for q in points[1:] if q != p)
            return _tally(((1, p),) + tail for tail in _iter_pairings(rest))

        with ThreadPoolExecutor(max_workers=threads) as pool:
            partials = list(pool.map(branch, points[1:]))
        forests, rooted, total = {}, {}, 0
        for part_forests, part_rooted, part_total in partials:
            total += part_total
            for m, value in part_forests.items():
                forests[m] = forests.get(m, 0) + value
            for m, value in part_rooted.items():
                rooted[m] = rooted.get(m, 0) + value
    return CountTable(
        n, dict(sorted(forests.items())), dict(sorted(rooted.items())), total
    )


def enumerate_noncrossing_partitions(
    ground_size: int, cap: int = PARTITION_CAP
) -> dict[PartitionType, int]:
    """Tally the non-crossing partitions of [ground_size] by block-size type.

    All set partitions are generated (restricted-growth order) and filtered
    with the literal block-crossing test; no shortcuts, this is the oracle.
    """
    if ground_size < 1:
        raise ValueError(f"ground_size must be >= 1, got {ground_size}")
    _check_cap(ground_size, cap, "set-partition sweep")
    tallies: dict[PartitionType, int] = {}
    blocks: list[list[int]] = []

    def place(element: int) -> None:
        if element > ground_size:
            for i in range(len(blocks)):
                for j in range(i + 1, len(blocks)):
                    if blocks_cross(blocks[i], blocks[j]):
                        return
            key = PartitionType.from_block_sizes(len(block) for block in blocks)
            tallies[key] = tallies.get(key, 0) + 1
            return
        for block in blocks:
            block.append(element)
            place(element + 1)
            block.pop()
        blocks.append([element])
        place(element + 1)
        blocks.pop()

    place(1)
    return tallies


def _iter_partitions_into_parts(
    n: int, parts: int, max_part: int
) -> Iterator[tuple[int, ...]]:
    """Partitions of n into exactly ``parts`` parts, each <= max_part, descending."""
    if parts == 0:
        if n == 0:
            yield ()
        return
    for largest in range(min(max_part, n - parts + 1), 0, -1):
        if largest * parts < n:
            break
        for rest in _iter_partitions_into_parts(n - largest, parts - 1, largest):
            yield (largest,) + rest


def enumerate_types(
    n: int, m: int, visit: Callable[[PartitionType], None] | None = None
) -> int:
    """Visit every forest type with m trees and n chords total; return the count.

    Types are the vectors (s_1..s_n) of trees per size with sum s_i = m and
    sum i s_i = n, equivalently the partitions of n into exactly m parts.
    """
    if m < 1 or m > n:
        raise ValueError(f"enumerate_types requires 1 <= m <= n, got n={n}, m={m}")
    count = 0
    for parts in _iter_partitions_into_parts(n, m, n - m + 1):
        count += 1
        if visit is not None:
            visit(PartitionType.from_block_sizes(parts))
    return count
