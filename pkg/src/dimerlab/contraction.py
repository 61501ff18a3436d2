"""Arrow contractions between dimer quivers and the monomial maps they induce."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable

from .matchings import Matching, n_D, simple_matchings
from .monomials import DegreeCapExceeded, Monomial, SemigroupAlgebra, semigroup_member
from .paths import (
    DEFAULT_BUDGET,
    NON_CANCELLATIVE,
    equivalent,
    find_non_cancellative_pair,
    rewrite_system,
    vertex_simple_cycles,
)
from .tiling import Arrow, DimerQuiver, Face, PathWord, make_path, validate

CYCLIC = "cyclic"
NOT_CYCLIC = "not-cyclic"
UNKNOWN = "unknown"


class ContractionError(ValueError):
    pass


@dataclass(frozen=True)
class Contraction:
    source: DimerQuiver
    contracted_arrows: frozenset[int]
    target: DimerQuiver
    vertex_map: tuple[int, ...]
    arrow_map: dict[int, int] = field(hash=False)

    @property
    def is_identity(self) -> bool:
        return not self.contracted_arrows

    @cached_property
    def target_simple(self) -> tuple[Matching, ...]:
        return simple_matchings(self.target)

    @property
    def coords(self) -> tuple[str, ...]:
        return matching_coords(self.target)


def matching_coords(q: DimerQuiver) -> tuple[str, ...]:
    """Names for the exponent coordinates: ``D_<labels>`` per simple matching."""
    names = []
    for d in simple_matchings(q):
        names.append("D_" + "".join(q.label(a) for a in d.sorted_arrows()))
    return tuple(names)


def contract(q: DimerQuiver, arrow_set: Iterable[int]) -> Contraction:
    contracted = frozenset(arrow_set)
    for aid in contracted:
        q.arrow(aid)

    parent = list(range(q.vertices))

    def find(v: int) -> int:
        while parent[v] != v:
            parent[v] = parent[parent[v]]
            v = parent[v]
        return v

    for aid in sorted(contracted):
        a = q.arrow(aid)
        ra, rb = find(a.tail), find(a.head)
        if ra == rb:
            raise ContractionError(f"contraction collapses a cycle (arrow {aid})")
        parent[max(ra, rb)] = min(ra, rb)

    roots = sorted({find(v) for v in range(q.vertices)})
    new_id = {r: k for k, r in enumerate(roots)}
    vertex_map = tuple(new_id[find(v)] for v in range(q.vertices))

    # offsets of each vertex from its component root along the contracted tree
    offset: dict[int, tuple[int, int]] = {}
    adj: dict[int, list[tuple[int, Arrow]]] = {v: [] for v in range(q.vertices)}
    for aid in sorted(contracted):
        a = q.arrow(aid)
        adj[a.tail].append((a.head, a))
        adj[a.head].append((a.tail, a))
    for r in roots:
        offset[r] = (0, 0)
        todo = deque([r])
        while todo:
            v = todo.popleft()
            for w, a in adj[v]:
                if w in offset:
                    continue
                ox, oy = offset[v]
                wx, wy = a.winding
                offset[w] = (ox + wx, oy + wy) if a.tail == v else (ox - wx, oy - wy)
                todo.append(w)

    arrow_map: dict[int, int] = {}
    arrows = []
    for aid in q.arrow_ids:
        if aid in contracted:
            continue
        a = q.arrow(aid)
        k = len(arrows)
        arrow_map[aid] = k
        tx, ty = offset[a.tail]
        hx, hy = offset[a.head]
        winding = (a.winding[0] + tx - hx, a.winding[1] + ty - hy)
        arrows.append(Arrow(k, vertex_map[a.tail], vertex_map[a.head], winding, a.label))

    faces = []
    for f in q.faces:
        kept = tuple(arrow_map[a] for a in f.arrows if a not in contracted)
        if len(kept) < 2:
            raise ContractionError(f"face {f.id} shrinks to length {len(kept)}")
        faces.append(Face(f.id, kept, f.color))

    name = q.name if not contracted else f"{q.name}/contract"
    target = DimerQuiver(name, len(roots), tuple(arrows), tuple(faces))
    report = validate(target)
    if not report.ok:
        bad = report.failures()[0]
        raise ContractionError(f"contracted quiver is not a dimer quiver: {bad.name} at {bad.location}")
    return Contraction(q, contracted, target, vertex_map, arrow_map)


def psi(c: Contraction, p: PathWord) -> PathWord:
    arrows = tuple(c.arrow_map[a] for a in p.arrows if a not in c.contracted_arrows)
    return PathWord(arrows, c.vertex_map[p.base], c.vertex_map[p.end])


@dataclass(frozen=True)
class RelationReport:
    results: tuple[dict, ...]
    budget: int

    @property
    def ok(self) -> bool:
        return all(r["ok"] for r in self.results)

    def to_dict(self) -> dict:
        return {"ok": self.ok, "budget": self.budget, "relations": list(self.results)}


def check_relations_preserved(c: Contraction, budget: int = DEFAULT_BUDGET) -> RelationReport:
    """Check that every generator of the source relations maps into the
    target relations.  One generator per source arrow."""
    results = []
    rules = rewrite_system(c.source).rules
    for aid in c.source.arrow_ids:
        p, q = rules[aid]
        base = c.source.head(aid)
        pp = psi(c, make_path(c.source, p, base))
        qq = psi(c, make_path(c.source, q, base))
        eq = equivalent(c.target, pp, qq, budget)
        results.append(
            {
                "arrow": aid,
                "p": list(pp.arrows),
                "q": list(qq.arrows),
                "ok": eq.yes,
                "verdict": eq.verdict,
            }
        )
    return RelationReport(tuple(results), budget)


def tau_bar(q: DimerQuiver, p: PathWord, simple: tuple[Matching, ...] | None = None) -> Monomial:
    if simple is None:
        simple = simple_matchings(q)
    return tuple(n_D(p, d) for d in simple)


def tau_psi(c: Contraction, p: PathWord) -> Monomial:
    return tau_bar(c.target, psi(c, p), c.target_simple)


@dataclass(frozen=True)
class CyclicVerdict:
    verdict: str
    evidence: dict

    def to_dict(self) -> dict:
        return {"verdict": self.verdict, **self.evidence}


def source_cycle_generators(c: Contraction) -> list[Monomial]:
    return [tau_psi(c, p) for p in vertex_simple_cycles(c.source)]


def target_cycle_generators(c: Contraction) -> list[Monomial]:
    simple = c.target_simple
    return [tau_bar(c.target, p, simple) for p in vertex_simple_cycles(c.target)]


def is_cyclic(
    c: Contraction, len_bound: int | None = None, budget: int = DEFAULT_BUDGET
) -> CyclicVerdict:
    """Decide whether the contraction is cyclic.

    The target must be cancellative, which is only ever checked up to a path
    length bound; a clean bounded search is accepted and flagged as such.
    """
    relations = check_relations_preserved(c, budget)
    cancel = find_non_cancellative_pair(c.target, len_bound, budget)
    coords = c.coords
    G = sorted(set(source_cycle_generators(c)))
    Gp = sorted(set(target_cycle_generators(c)))
    evidence: dict = {
        "coords": list(coords),
        "relations_preserved": relations.ok,
        "target_cancellativity": cancel.to_dict(),
        "cancellativity_bounded": True,
        "source_generators": [list(g) for g in G],
        "target_generators": [list(g) for g in Gp],
    }
    if not relations.ok:
        evidence["reason"] = "contraction does not map relations into relations"
        return CyclicVerdict(NOT_CYCLIC, evidence)
    if cancel.status == NON_CANCELLATIVE:
        evidence["reason"] = "target is non-cancellative"
        return CyclicVerdict(NOT_CYCLIC, evidence)
    try:
        missing_in_source = [g for g in Gp if not semigroup_member(g, G)]
        missing_in_target = [g for g in G if not semigroup_member(g, Gp)]
    except DegreeCapExceeded as exc:
        evidence["reason"] = str(exc)
        return CyclicVerdict(UNKNOWN, evidence)
    if missing_in_source or missing_in_target:
        evidence["reason"] = "cycle semigroups differ"
        witness = (missing_in_source or missing_in_target)[0]
        evidence["witness_generator"] = list(witness)
        evidence["witness_side"] = "target" if missing_in_source else "source"
        return CyclicVerdict(NOT_CYCLIC, evidence)
    if not cancel.complete:
        evidence["reason"] = "cancellativity search hit its state budget"
        return CyclicVerdict(UNKNOWN, evidence)
    return CyclicVerdict(CYCLIC, evidence)


def cycle_algebra_of(c: Contraction) -> SemigroupAlgebra:
    return SemigroupAlgebra.from_generators(c.coords, source_cycle_generators(c))
