"""Perfect and simple matchings of a dimer quiver."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from functools import lru_cache
from typing import Hashable, Iterable, Iterator, Mapping, Sequence

from .tiling import DimerQuiver, PathWord

PERFECT = "perfect"
SIMPLE = "simple"


@dataclass(frozen=True)
class Matching:
    arrows: frozenset[int]
    kind: str
    index: int

    def sorted_arrows(self) -> list[int]:
        return sorted(self.arrows)

    def __contains__(self, aid: int) -> bool:
        return aid in self.arrows


def exact_cover(
    rows: Mapping[Hashable, Iterable[Hashable]], columns: Sequence[Hashable]
) -> Iterator[list[Hashable]]:
    """Algorithm X over dict-of-sets.

    Every column must be covered exactly once.  Branches on the column with
    the fewest candidate rows, ties going to the column listed first; rows
    are tried in sorted order, so the output sequence is reproducible.
    """
    order = {c: k for k, c in enumerate(columns)}
    row_sets = {r: frozenset(cs) for r, cs in rows.items()}
    col_rows: dict[Hashable, set] = {c: set() for c in columns}
    for r, cs in row_sets.items():
        for c in cs:
            col_rows[c].add(r)

    def select(r) -> list[set]:
        removed = []
        for c in sorted(row_sets[r], key=order.__getitem__):
            for other in col_rows[c]:
                for c2 in row_sets[other]:
                    if c2 != c:
                        col_rows[c2].discard(other)
            removed.append(col_rows.pop(c))
        return removed

    def deselect(r, removed: list[set]) -> None:
        for c in reversed(sorted(row_sets[r], key=order.__getitem__)):
            col_rows[c] = removed.pop()
            for other in col_rows[c]:
                for c2 in row_sets[other]:
                    if c2 != c:
                        col_rows[c2].add(other)

    solution: list = []

    def search() -> Iterator[list]:
        if not col_rows:
            yield list(solution)
            return
        c = min(col_rows, key=lambda c: (len(col_rows[c]), order[c]))
        for r in sorted(col_rows[c]):
            solution.append(r)
            removed = select(r)
            yield from search()
            deselect(r, removed)
            solution.pop()

    yield from search()


@lru_cache(maxsize=None)
def perfect_matchings(q: DimerQuiver) -> tuple[Matching, ...]:
    faces = [f.id for f in sorted(q.faces, key=lambda f: f.id)]
    rows = {}
    for a in q.arrow_ids:
        occ = q.faces_of_arrow[a]
        # an arrow met twice by one face can never be in a perfect matching
        if len(set(occ)) == len(occ):
            rows[a] = occ
    found = sorted(tuple(sorted(sol)) for sol in exact_cover(rows, faces))
    return tuple(Matching(frozenset(s), PERFECT, k) for k, s in enumerate(found))


def nondegenerate(q: DimerQuiver) -> bool:
    covered = set()
    for d in perfect_matchings(q):
        covered |= d.arrows
    return covered == set(q.arrow_ids)


def _strongly_connected_without(q: DimerQuiver, removed: frozenset[int]) -> bool:
    if q.vertices == 0:
        return True
    fwd: dict[int, list[int]] = {v: [] for v in range(q.vertices)}
    bwd: dict[int, list[int]] = {v: [] for v in range(q.vertices)}
    for a in q.arrows:
        if a.id not in removed:
            fwd[a.tail].append(a.head)
            bwd[a.head].append(a.tail)

    def reach(adj) -> int:
        seen = {0}
        todo = deque([0])
        while todo:
            v = todo.popleft()
            for w in adj[v]:
                if w not in seen:
                    seen.add(w)
                    todo.append(w)
        return len(seen)

    return reach(fwd) == q.vertices and reach(bwd) == q.vertices


@lru_cache(maxsize=None)
def simple_matchings(q: DimerQuiver) -> tuple[Matching, ...]:
    """Perfect matchings whose complement has a closed walk through every vertex.

    Such a walk exists exactly when all vertices sit in one strongly connected
    component of the complement.  Indices are renumbered 0.. in the order of
    the perfect matchings; that order is the coordinate order of every
    exponent vector downstream.
    """
    keep = [d for d in perfect_matchings(q) if _strongly_connected_without(q, d.arrows)]
    return tuple(Matching(d.arrows, SIMPLE, k) for k, d in enumerate(keep))


def n_D(p: PathWord | Sequence[int], d: Matching) -> int:
    arrows = p.arrows if isinstance(p, PathWord) else p
    return sum(1 for a in arrows if a in d.arrows)
