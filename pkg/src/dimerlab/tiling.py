"""Torus-embedded dimer quivers.

A quiver is stored together with its faces (the oriented boundary cycles of
the complement of the quiver in the torus) and an integer winding vector per
arrow.  Windings record how far an arrow travels in the universal cover
relative to fixed fundamental-domain positions of its endpoints, so that the
homology class of a closed path is the sum of its arrows' windings.
"""

from __future__ import annotations

import json
from collections import deque
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Mapping, Sequence

PLUS = "plus"
MINUS = "minus"


class TilingParseError(ValueError):
    """Raised when a tiling document is malformed."""


class PathError(ValueError):
    """Raised when an arrow sequence does not compose."""


@dataclass(frozen=True)
class Arrow:
    id: int
    tail: int
    head: int
    winding: tuple[int, int]
    label: str | None = None

    @property
    def name(self) -> str:
        return self.label if self.label is not None else f"a{self.id}"


@dataclass(frozen=True)
class Face:
    id: int
    arrows: tuple[int, ...]
    color: str


@dataclass(frozen=True)
class DimerQuiver:
    name: str
    vertices: int
    arrows: tuple[Arrow, ...]
    faces: tuple[Face, ...]
    # named arrow sets carried by fixtures, e.g. "green"
    contractions: Mapping[str, tuple[int, ...]] = field(
        default_factory=dict, compare=False, hash=False
    )

    @cached_property
    def arrow_by_id(self) -> dict[int, Arrow]:
        return {a.id: a for a in self.arrows}

    @cached_property
    def face_by_id(self) -> dict[int, Face]:
        return {f.id: f for f in self.faces}

    @cached_property
    def out_arrows(self) -> dict[int, tuple[int, ...]]:
        out: dict[int, list[int]] = {v: [] for v in range(self.vertices)}
        for a in sorted(self.arrows, key=lambda a: a.id):
            out[a.tail].append(a.id)
        return {v: tuple(ids) for v, ids in out.items()}

    @cached_property
    def in_arrows(self) -> dict[int, tuple[int, ...]]:
        inc: dict[int, list[int]] = {v: [] for v in range(self.vertices)}
        for a in sorted(self.arrows, key=lambda a: a.id):
            inc[a.head].append(a.id)
        return {v: tuple(ids) for v, ids in inc.items()}

    @cached_property
    def faces_of_arrow(self) -> dict[int, tuple[int, ...]]:
        occ: dict[int, list[int]] = {a.id: [] for a in self.arrows}
        for f in self.faces:
            for aid in f.arrows:
                if aid in occ:
                    occ[aid].append(f.id)
        return {aid: tuple(fs) for aid, fs in occ.items()}

    @property
    def arrow_ids(self) -> list[int]:
        return sorted(self.arrow_by_id)

    def arrow(self, aid: int) -> Arrow:
        try:
            return self.arrow_by_id[aid]
        except KeyError:
            raise PathError(f"unknown arrow id {aid}") from None

    def tail(self, aid: int) -> int:
        return self.arrow(aid).tail

    def head(self, aid: int) -> int:
        return self.arrow(aid).head

    def label(self, aid: int) -> str:
        return self.arrow(aid).name

    @property
    def max_face_length(self) -> int:
        return max((len(f.arrows) for f in self.faces), default=0)

    def to_dict(self) -> dict:
        doc: dict = {
            "name": self.name,
            "vertices": self.vertices,
            "arrows": [],
            "faces": [
                {"id": f.id, "arrows": list(f.arrows), "color": f.color}
                for f in self.faces
            ],
        }
        for a in self.arrows:
            entry: dict = {
                "id": a.id,
                "tail": a.tail,
                "head": a.head,
                "winding": list(a.winding),
            }
            if a.label is not None:
                entry["label"] = a.label
            doc["arrows"].append(entry)
        if self.contractions:
            doc["contractions"] = {k: list(v) for k, v in self.contractions.items()}
        return doc


def _require(obj: Mapping, key: str, where: str):
    if not isinstance(obj, Mapping):
        raise TilingParseError(f"{where}: expected an object")
    if key not in obj:
        raise TilingParseError(f"{where}: missing field '{key}'")
    return obj[key]


def _int(value, where: str) -> int:
    if isinstance(value, bool) or not isinstance(value, int):
        raise TilingParseError(f"{where}: expected an integer, got {value!r}")
    return value


def tiling_from_dict(doc: Mapping) -> DimerQuiver:
    """Build a quiver from an already-decoded JSON object.

    Structural sanity (ids, vertex ranges, field types) is enforced here; the
    tiling axioms are left to :func:`validate`.
    """
    name = _require(doc, "name", "tiling")
    if not isinstance(name, str):
        raise TilingParseError("name: expected a string")
    nverts = _int(_require(doc, "vertices", "tiling"), "vertices")
    if nverts < 0:
        raise TilingParseError("vertices: must be nonnegative")

    raw_arrows = _require(doc, "arrows", "tiling")
    if not isinstance(raw_arrows, list):
        raise TilingParseError("arrows: expected a list")
    arrows: list[Arrow] = []
    seen: set[int] = set()
    for k, entry in enumerate(raw_arrows):
        where = f"arrows[{k}]"
        aid = _int(_require(entry, "id", where), f"{where}.id")
        if aid in seen:
            raise TilingParseError(f"{where}.id: duplicate arrow id {aid}")
        seen.add(aid)
        tail = _int(_require(entry, "tail", where), f"{where}.tail")
        head = _int(_require(entry, "head", where), f"{where}.head")
        for key, v in (("tail", tail), ("head", head)):
            if not 0 <= v < nverts:
                raise TilingParseError(f"{where}.{key}: unknown vertex {v}")
        wind = _require(entry, "winding", where)
        if not isinstance(wind, list) or len(wind) != 2:
            raise TilingParseError(f"{where}.winding: expected [int, int]")
        winding = (_int(wind[0], f"{where}.winding"), _int(wind[1], f"{where}.winding"))
        label = entry.get("label")
        if label is not None and not isinstance(label, str):
            raise TilingParseError(f"{where}.label: expected a string")
        arrows.append(Arrow(aid, tail, head, winding, label))

    raw_faces = _require(doc, "faces", "tiling")
    if not isinstance(raw_faces, list):
        raise TilingParseError("faces: expected a list")
    faces: list[Face] = []
    seen_faces: set[int] = set()
    for k, entry in enumerate(raw_faces):
        where = f"faces[{k}]"
        fid = _int(_require(entry, "id", where), f"{where}.id")
        if fid in seen_faces:
            raise TilingParseError(f"{where}.id: duplicate face id {fid}")
        seen_faces.add(fid)
        ids = _require(entry, "arrows", where)
        if not isinstance(ids, list):
            raise TilingParseError(f"{where}.arrows: expected a list")
        ids = tuple(_int(a, f"{where}.arrows") for a in ids)
        for a in ids:
            if a not in seen:
                raise TilingParseError(f"{where}.arrows: unknown arrow {a}")
        color = _require(entry, "color", where)
        if color not in (PLUS, MINUS):
            raise TilingParseError(f"{where}.color: expected 'plus' or 'minus'")
        faces.append(Face(fid, ids, color))

    contractions = {}
    for cname, ids in (doc.get("contractions") or {}).items():
        if not isinstance(ids, list):
            raise TilingParseError(f"contractions.{cname}: expected a list")
        for a in ids:
            if _int(a, f"contractions.{cname}") not in seen:
                raise TilingParseError(f"contractions.{cname}: unknown arrow {a}")
        contractions[cname] = tuple(ids)

    return DimerQuiver(name, nverts, tuple(arrows), tuple(faces), contractions)


def parse_tiling(text: str) -> DimerQuiver:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise TilingParseError(f"malformed JSON: {exc}") from exc
    return tiling_from_dict(doc)


@dataclass(frozen=True)
class Check:
    name: str
    ok: bool
    location: str = ""
    detail: str = ""


@dataclass(frozen=True)
class ValidationReport:
    checks: tuple[Check, ...]

    @property
    def ok(self) -> bool:
        return all(c.ok for c in self.checks)

    def failures(self) -> list[Check]:
        return [c for c in self.checks if not c.ok]

    def failed(self, name: str) -> bool:
        return any(c.name == name and not c.ok for c in self.checks)

    def to_dict(self) -> dict:
        return {
            "ok": self.ok,
            "checks": [
                {"name": c.name, "ok": c.ok, "location": c.location, "detail": c.detail}
                for c in self.checks
            ],
        }


def _connected(q: DimerQuiver) -> bool:
    if q.vertices == 0:
        return False
    adj: dict[int, set[int]] = {v: set() for v in range(q.vertices)}
    for a in q.arrows:
        adj[a.tail].add(a.head)
        adj[a.head].add(a.tail)
    seen = {0}
    todo = deque([0])
    while todo:
        v = todo.popleft()
        for w in adj[v]:
            if w not in seen:
                seen.add(w)
                todo.append(w)
    return len(seen) == q.vertices


def validate(q: DimerQuiver) -> ValidationReport:
    checks: list[Check] = []

    if not q.arrows:
        checks.append(Check("nonempty", False, "arrows", "quiver has no arrows"))

    for f in sorted(q.faces, key=lambda f: f.id):
        loc = f"face {f.id}"
        if len(f.arrows) < 2:
            checks.append(Check("face length >= 2", False, loc, f"length {len(f.arrows)}"))
            continue
        broken = [
            (a, b)
            for a, b in zip(f.arrows, f.arrows[1:] + f.arrows[:1])
            if q.head(a) != q.tail(b)
        ]
        checks.append(
            Check(
                "face is a directed cycle",
                not broken,
                loc,
                "" if not broken else f"arrow {broken[0][0]} does not meet arrow {broken[0][1]}",
            )
        )

    occurrences: dict[int, list[int]] = {a.id: [] for a in q.arrows}
    for f in q.faces:
        for aid in f.arrows:
            occurrences[aid].append(f.id)
    for aid in sorted(occurrences):
        loc = f"arrow {aid}"
        fids = occurrences[aid]
        checks.append(
            Check("arrow in exactly two faces", len(fids) == 2, loc, f"occurs {len(fids)} times")
        )
        if len(fids) == 2:
            colors = sorted(q.face_by_id[fid].color for fid in fids)
            checks.append(
                Check(
                    "arrow faces have opposite colors",
                    colors == [MINUS, PLUS],
                    loc,
                    f"faces {fids} colored {colors}",
                )
            )

    euler = q.vertices - len(q.arrows) + len(q.faces)
    checks.append(
        Check(
            "euler characteristic 0",
            euler == 0,
            "quiver",
            f"{q.vertices} - {len(q.arrows)} + {len(q.faces)} = {euler}",
        )
    )
    checks.append(Check("connected", _connected(q), "quiver"))

    for f in sorted(q.faces, key=lambda f: f.id):
        sx = sum(q.arrow(a).winding[0] for a in f.arrows)
        sy = sum(q.arrow(a).winding[1] for a in f.arrows)
        checks.append(
            Check("face winding sum zero", (sx, sy) == (0, 0), f"face {f.id}", f"sum ({sx},{sy})")
        )
    return ValidationReport(tuple(checks))


def check_composable(q: DimerQuiver, arrows: Sequence[int]) -> None:
    for a, b in zip(arrows, arrows[1:]):
        if q.head(a) != q.tail(b):
            raise PathError(f"arrow {a} (head {q.head(a)}) does not compose with arrow {b} (tail {q.tail(b)})")


def winding_sum(q: DimerQuiver, arrows: Iterable[int]) -> tuple[int, int]:
    x = y = 0
    for a in arrows:
        wx, wy = q.arrow(a).winding
        x += wx
        y += wy
    return (x, y)


@dataclass(frozen=True)
class PathWord:
    """A path in the quiver: arrow ids in traversal order.

    The empty word is the trivial path at ``base``.
    """

    arrows: tuple[int, ...]
    base: int
    end: int

    def __len__(self) -> int:
        return len(self.arrows)

    @property
    def is_trivial(self) -> bool:
        return not self.arrows

    @property
    def is_cycle(self) -> bool:
        return self.base == self.end

    def to_list(self) -> list[int]:
        return list(self.arrows)


def make_path(q: DimerQuiver, arrows: Sequence[int], base: int | None = None) -> PathWord:
    arrows = tuple(arrows)
    if not arrows:
        if base is None:
            raise PathError("a trivial path needs a base vertex")
        if not 0 <= base < q.vertices:
            raise PathError(f"unknown vertex {base}")
        return PathWord((), base, base)
    check_composable(q, arrows)
    start = q.tail(arrows[0])
    if base is not None and base != start:
        raise PathError(f"path starts at {start}, not at base {base}")
    return PathWord(arrows, start, q.head(arrows[-1]))


def concat(q: DimerQuiver, p: PathWord, r: PathWord) -> PathWord:
    """Traverse ``p`` then ``r``."""
    if p.end != r.base:
        raise PathError(f"path ending at {p.end} cannot be followed by a path from {r.base}")
    return PathWord(p.arrows + r.arrows, p.base, r.end)


def homology_class(q: DimerQuiver, p: PathWord | Sequence[int]) -> tuple[int, int]:
    arrows = p.arrows if isinstance(p, PathWord) else tuple(p)
    check_composable(q, arrows)
    return winding_sum(q, arrows)
