"""Paths modulo the dimer relations.

For an arrow ``a`` lying in the two faces ``a p`` and ``a q`` (rotated so that
``a`` comes first), the relation identifies the complements ``p`` and ``q``.
The ideal is generated by differences of paths, so two paths are equal in the
dimer algebra exactly when a chain of such substitutions links them.  This
module explores those chains breadth-first under an explicit state budget.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator

from .tiling import DimerQuiver, PathError, PathWord, homology_class, make_path, winding_sum

DEFAULT_BUDGET = 100_000

YES = "yes"
NO_WITHIN_BUDGET = "no-within-budget"

CANCELLATIVE = "cancellative-up-to-bound"
NON_CANCELLATIVE = "non-cancellative"


@dataclass(frozen=True)
class RewriteSystem:
    # rules[a] = (p, q): a.p and a.q are the two unit cycles through a
    rules: dict[int, tuple[tuple[int, ...], tuple[int, ...]]]

    @property
    def moves(self) -> tuple[tuple[tuple[int, ...], tuple[int, ...]], ...]:
        """Directed substitutions lhs -> rhs, both orientations, deduplicated."""
        out = set()
        for p, q in self.rules.values():
            if p != q:
                out.add((p, q))
                out.add((q, p))
        return tuple(sorted(out))


def _rotate_to(face: tuple[int, ...], aid: int) -> tuple[int, ...]:
    k = face.index(aid)
    return face[k:] + face[:k]


@lru_cache(maxsize=None)
def rewrite_system(q: DimerQuiver) -> RewriteSystem:
    rules = {}
    for aid in q.arrow_ids:
        fids = q.faces_of_arrow[aid]
        if len(fids) != 2:
            raise PathError(f"arrow {aid} does not lie in exactly two faces")
        f1, f2 = (_rotate_to(q.face_by_id[f].arrows, aid) for f in fids)
        rules[aid] = (f1[1:], f2[1:])
    return RewriteSystem(rules)


@lru_cache(maxsize=None)
def _moves_by_first(q: DimerQuiver) -> dict[int, tuple[tuple[tuple[int, ...], tuple[int, ...]], ...]]:
    index: dict[int, list] = {}
    for lhs, rhs in rewrite_system(q).moves:
        if lhs:
            index.setdefault(lhs[0], []).append((lhs, rhs))
    return {k: tuple(v) for k, v in index.items()}


def rewrite_neighbors(q: DimerQuiver, word: tuple[int, ...]) -> Iterator[tuple[int, ...]]:
    """All words reachable from ``word`` by one substitution, in a fixed order."""
    by_first = _moves_by_first(q)
    n = len(word)
    for i, a in enumerate(word):
        for lhs, rhs in by_first.get(a, ()):
            m = len(lhs)
            if i + m <= n and word[i:i + m] == lhs:
                yield word[:i] + rhs + word[i + m:]


@dataclass(frozen=True)
class ClassExploration:
    words: tuple[tuple[int, ...], ...]
    exhausted: bool


def explore_class(q: DimerQuiver, word: tuple[int, ...], budget: int = DEFAULT_BUDGET) -> ClassExploration:
    """Breadth-first closure of ``word`` under the relations.

    ``exhausted`` is true when the whole class was enumerated before the
    budget ran out; only then is non-membership a proof of inequivalence.
    """
    seen = {word}
    order = [word]
    todo = deque([word])
    while todo:
        w = todo.popleft()
        for nb in rewrite_neighbors(q, w):
            if nb not in seen:
                if len(seen) >= budget:
                    return ClassExploration(tuple(order), False)
                seen.add(nb)
                order.append(nb)
                todo.append(nb)
    return ClassExploration(tuple(order), True)


@dataclass(frozen=True)
class Equivalence:
    verdict: str
    steps: int | None
    explored: int
    exhausted: bool

    @property
    def yes(self) -> bool:
        return self.verdict == YES


def equivalent(q: DimerQuiver, p1: PathWord, p2: PathWord, budget: int = DEFAULT_BUDGET) -> Equivalence:
    if (p1.base, p1.end) != (p2.base, p2.end):
        raise PathError(
            f"endpoint mismatch: {p1.base}->{p1.end} versus {p2.base}->{p2.end}"
        )
    start, goal = p1.arrows, p2.arrows
    if start == goal:
        return Equivalence(YES, 0, 1, False)
    depth = {start: 0}
    todo = deque([start])
    while todo:
        w = todo.popleft()
        for nb in rewrite_neighbors(q, w):
            if nb in depth:
                continue
            depth[nb] = depth[w] + 1
            if nb == goal:
                return Equivalence(YES, depth[nb], len(depth), False)
            if len(depth) >= budget:
                return Equivalence(NO_WITHIN_BUDGET, None, len(depth), False)
            todo.append(nb)
    return Equivalence(NO_WITHIN_BUDGET, None, len(depth), True)


def apply_rule(q: DimerQuiver, p: PathWord, position: int, aid: int, forward: bool = True) -> PathWord:
    """Replace the complement path of ``aid`` found at ``position`` by the other one."""
    first, second = rewrite_system(q).rules[aid]
    lhs, rhs = (first, second) if forward else (second, first)
    if p.arrows[position:position + len(lhs)] != lhs:
        raise PathError(f"rule for arrow {aid} does not match at position {position}")
    arrows = p.arrows[:position] + rhs + p.arrows[position + len(lhs):]
    return make_path(q, arrows, p.base)


def unit_cycle_at(q: DimerQuiver, i: int) -> PathWord:
    for f in sorted(q.faces, key=lambda f: f.id):
        for k, aid in enumerate(f.arrows):
            if q.tail(aid) == i:
                return make_path(q, f.arrows[k:] + f.arrows[:k])
    raise PathError(f"vertex {i} lies on no face")


def unit_cycles_at(q: DimerQuiver, i: int) -> list[PathWord]:
    """Every rotation of every face that starts at ``i``."""
    out = []
    for f in sorted(q.faces, key=lambda f: f.id):
        for k, aid in enumerate(f.arrows):
            if q.tail(aid) == i:
                out.append(make_path(q, f.arrows[k:] + f.arrows[:k]))
    return out


def _distance_to(q: DimerQuiver, target: int) -> dict[int, int]:
    dist = {target: 0}
    todo = deque([target])
    while todo:
        v = todo.popleft()
        for aid in q.in_arrows[v]:
            t = q.tail(aid)
            if t not in dist:
                dist[t] = dist[v] + 1
                todo.append(t)
    return dist


def iter_paths(q: DimerQuiver, i: int, length: int) -> Iterator[tuple[int, ...]]:
    """All arrow words of exactly ``length`` starting at ``i``, lexicographically."""
    def rec(v: int, remaining: int, prefix: tuple[int, ...]):
        if remaining == 0:
            yield prefix
            return
        for aid in q.out_arrows[v]:
            yield from rec(q.head(aid), remaining - 1, prefix + (aid,))

    yield from rec(i, length, ())


def enumerate_cycles(q: DimerQuiver, i: int, max_len: int) -> list[PathWord]:
    """Closed walks at ``i`` of length at most ``max_len``, ordered by length
    and then lexicographically by arrow id; the trivial path comes first."""
    dist = _distance_to(q, i)
    out = [PathWord((), i, i)]
    for length in range(1, max_len + 1):
        found = []

        def rec(v: int, remaining: int, prefix: tuple[int, ...]):
            if remaining == 0:
                if v == i:
                    found.append(prefix)
                return
            for aid in q.out_arrows[v]:
                h = q.head(aid)
                if dist.get(h, max_len + 1) <= remaining - 1:
                    rec(h, remaining - 1, prefix + (aid,))

        rec(i, length, ())
        out.extend(PathWord(w, i, i) for w in found)
    return out


def vertex_simple_cycles(q: DimerQuiver) -> list[PathWord]:
    """Cycles that revisit no vertex, one per rotation class.

    Each cycle is rotated to start at its smallest vertex.  Parallel arrows
    give distinct cycles.
    """
    out: list[PathWord] = []
    for s in range(q.vertices):
        def rec(v: int, visited: set[int], prefix: tuple[int, ...]):
            for aid in q.out_arrows[v]:
                h = q.head(aid)
                if h == s:
                    out.append(PathWord(prefix + (aid,), s, s))
                elif h > s and h not in visited:
                    visited.add(h)
                    rec(h, visited, prefix + (aid,))
                    visited.discard(h)

        rec(s, {s}, ())
    return out


@dataclass(frozen=True)
class CancellativityVerdict:
    status: str
    witness: dict | None
    bound: int
    budget: int
    certificate: str | None = None
    complete: bool = True

    def to_dict(self) -> dict:
        return {
            "status": self.status,
            "witness": self.witness,
            "bound": self.bound,
            "budget": self.budget,
            "certificate": self.certificate,
            "complete": self.complete,
        }


def separation_certificate(
    q: DimerQuiver, p: tuple[int, ...], r: tuple[int, ...], budget: int = DEFAULT_BUDGET
) -> str | None:
    """A reason why paths ``p`` and ``r`` differ modulo the relations, or None.

    Invariants are tried first (homology class, then the count of arrows in
    each perfect matching); failing those, an exhaustive enumeration of the
    class of ``p`` that misses ``r`` is accepted.
    """
    from .matchings import n_D, perfect_matchings

    if winding_sum(q, p) != winding_sum(q, r):
        return "homology"
    for d in perfect_matchings(q):
        if n_D(p, d) != n_D(r, d):
            return f"n_D(matching {d.index})"
    cls = explore_class(q, p, budget)
    if cls.exhausted and r not in cls.words:
        return f"exhausted-class({len(cls.words)})"
    return None


def find_non_cancellative_pair(
    q: DimerQuiver, len_bound: int | None = None, budget: int = DEFAULT_BUDGET
) -> CancellativityVerdict:
    """Search for paths p != q with r.p = r.q or p.r = q.r.

    A single arrow ``r`` suffices: if r1.r2.p = r1.r2.q then either
    r2.p = r2.q already, or (r1; r2.p, r2.q) is a pair.  So each class of
    paths of length <= ``len_bound`` is split by its first (respectively
    last) arrow, and any split that lands in two distinct classes, with a
    certificate that they are distinct, is a witness.  Side ``left`` means r
    is traversed first.
    """
    if len_bound is None:
        len_bound = 2 * q.max_face_length
    complete = True
    class_of: dict[tuple[int, ...], int] = {}
    classes: list[ClassExploration] = []

    def class_id(word: tuple[int, ...]) -> int:
        nonlocal complete
        if word not in class_of:
            cls = explore_class(q, word, budget)
            if not cls.exhausted:
                complete = False
            cid = len(classes)
            classes.append(cls)
            for w in cls.words:
                class_of.setdefault(w, cid)
        return class_of[word]

    analysed: set[int] = set()
    for length in range(2, len_bound + 1):
        for i in range(q.vertices):
            for word in iter_paths(q, i, length):
                cid = class_id(word)
                if cid in analysed:
                    continue
                analysed.add(cid)
                cls = classes[cid]
                for side in ("left", "right"):
                    groups: dict[int, dict[int, tuple[int, ...]]] = {}
                    for w in cls.words:
                        if len(w) < 2:
                            continue
                        r, rest = (w[0], w[1:]) if side == "left" else (w[-1], w[:-1])
                        groups.setdefault(r, {}).setdefault(class_id(rest), rest)
                    for r in sorted(groups):
                        reps = [groups[r][k] for k in sorted(groups[r])]
                        for a_idx in range(len(reps)):
                            for b_idx in range(a_idx + 1, len(reps)):
                                pa, pb = reps[a_idx], reps[b_idx]
                                cert = separation_certificate(q, pa, pb, budget)
                                if cert is None:
                                    complete = False
                                    continue
                                witness = {"r": [r], "p": list(pa), "q": list(pb), "side": side}
                                return CancellativityVerdict(
                                    NON_CANCELLATIVE, witness, len_bound, budget, cert, complete
                                )
    return CancellativityVerdict(CANCELLATIVE, None, len_bound, budget, None, complete)


def check_witness(q: DimerQuiver, witness: dict, budget: int = DEFAULT_BUDGET) -> bool:
    """Re-verify a serialized witness: the two products are equivalent and the
    two paths are certified distinct."""
    r, p, s = tuple(witness["r"]), tuple(witness["p"]), tuple(witness["q"])
    if witness["side"] == "left":
        w1, w2 = r + p, r + s
    else:
        w1, w2 = p + r, s + r
    try:
        a, b = make_path(q, w1), make_path(q, w2)
    except PathError:
        return False
    if a.base != b.base or a.end != b.end:
        return False
    if not equivalent(q, a, b, budget).yes:
        return False
    return separation_certificate(q, p, s, budget) is not None


__all__ = [
    "RewriteSystem",
    "rewrite_system",
    "equivalent",
    "explore_class",
    "unit_cycle_at",
    "enumerate_cycles",
    "vertex_simple_cycles",
    "find_non_cancellative_pair",
    "homology_class",
]
