"""Cycle algebra, homotopy center and the special fibre.

Two kinds of input are supported.  A :class:`DimerModel` wraps a contraction
of a dimer quiver; its homotopy center is computed from cycles at every
vertex.  A :class:`MonomialModel` is given directly by generators of the
depicting algebra and a center of the form ``k + I`` for a monomial ideal I.

Every monomial set carrying a degree bound is a truncation.  Membership
certificates (cycles per vertex, generator decompositions) are exact; only
completeness is limited by the window.
"""

from __future__ import annotations

import json
from collections import deque
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Protocol, Sequence

from .contraction import Contraction, contract, source_cycle_generators, tau_bar
from .monomials import (
    MonomialIdealLocus,
    Monomial,
    SemigroupAlgebra,
    degree,
    format_monomial,
    ght_gdim,
    in_face,
    lattice_rank,
    locus_of,
    mono_divides,
    mono_mul,
    mono_pow,
    mono_quotient,
    monomial_sort_key,
    one,
    same_lattice,
    semigroup_member,
    sigma_power,
)
from .paths import enumerate_cycles
from .tiling import DimerQuiver, PathWord, homology_class

DEFAULT_DEG_BOUND = 8
DEFAULT_POWER_BOUND = 4


class StructuralError(ValueError):
    pass


def _sorted(monos: Iterable[Monomial]) -> list[Monomial]:
    return sorted(monos, key=monomial_sort_key)


def decompose(g: Monomial, gens: Sequence[Monomial]) -> list[int] | None:
    """Indices of generators summing to g, or None if g is not in the semigroup."""
    if not any(g):
        return []
    for k, h in enumerate(gens):
        if any(h) and mono_divides(h, g):
            rest = mono_quotient(g, h)
            if semigroup_member(rest, gens):
                tail = decompose(rest, gens)
                if tail is not None:
                    return [k] + tail
    return None


def minimal_ideal_generators(monos: Iterable[Monomial], algebra: SemigroupAlgebra) -> tuple[Monomial, ...]:
    """Nonconstant monomials not divisible, within ``algebra``, by another one."""
    pool = _sorted({m for m in monos if any(m)})
    keep: list[Monomial] = []
    for g in pool:
        if not any(mono_divides(h, g) and algebra.contains(mono_quotient(g, h)) for h in keep):
            keep.append(g)
    return tuple(keep)


# -- models ----------------------------------------------------------------


@dataclass(frozen=True)
class RTruncation:
    monomials: frozenset[Monomial]
    certificates: dict[Monomial, dict[int, tuple[int, ...]]] = field(hash=False)
    deg_bound: int
    len_bound: int | None
    # True when some cycle search stopped at len_bound with states left to explore
    len_binding: bool = False

    def __contains__(self, g: Monomial) -> bool:
        return g in self.monomials


class CenterModel(Protocol):
    name: str
    kind: str

    @property
    def coords(self) -> tuple[str, ...]: ...

    @property
    def sigma(self) -> Monomial: ...

    @property
    def S(self) -> SemigroupAlgebra: ...

    def r_truncation(self, deg_bound: int) -> RTruncation: ...

    def in_R(self, g: Monomial) -> dict | None: ...


@dataclass
class DimerModel:
    contraction: Contraction
    len_bound: int | None = None
    kind: str = "dimer"

    def __post_init__(self) -> None:
        if self.len_bound is None:
            self.len_bound = 3 * len(self.contraction.source.arrows)

    @property
    def name(self) -> str:
        return self.contraction.source.name

    @property
    def coords(self) -> tuple[str, ...]:
        return self.contraction.coords

    @property
    def sigma(self) -> Monomial:
        return (1,) * len(self.coords)

    @cached_property
    def S(self) -> SemigroupAlgebra:
        return cycle_algebra(self.contraction)

    def r_truncation(self, deg_bound: int) -> RTruncation:
        return homotopy_center_trunc(self.contraction, self.len_bound, deg_bound)

    def in_R(self, g: Monomial) -> dict | None:
        """Exact membership of g in the homotopy center: a cycle at every
        vertex with image g, or None when some vertex has none."""
        certs = {}
        for i in range(self.contraction.source.vertices):
            word = _cycle_with_image(self.contraction, i, g)
            if word is None:
                return None
            certs[i] = word
        return certs


@dataclass
class MonomialModel:
    """A depicting algebra S with a subalgebra R = k + I·S given by monomials."""

    name: str
    coords_: tuple[str, ...]
    gens: tuple[Monomial, ...]
    ideal: tuple[Monomial, ...]
    sigma_: Monomial
    kind: str = "monomial"

    @property
    def coords(self) -> tuple[str, ...]:
        return self.coords_

    @property
    def sigma(self) -> Monomial:
        return self.sigma_

    @cached_property
    def S(self) -> SemigroupAlgebra:
        return SemigroupAlgebra.from_generators(self.coords_, self.gens)

    def in_R(self, g: Monomial) -> dict | None:
        if not any(g):
            return {"constant": True}
        for k, h in enumerate(self.ideal):
            if mono_divides(h, g):
                cofactor = mono_quotient(g, h)
                parts = decompose(cofactor, self.S.gens)
                if parts is not None:
                    return {"ideal_gen": k, "cofactor_gens": parts}
        return None

    def r_truncation(self, deg_bound: int) -> RTruncation:
        monos = {one(len(self.coords_))}
        certs: dict = {one(len(self.coords_)): {}}
        for s in self.S.elements(deg_bound):
            for h in self.ideal:
                g = mono_mul(h, s)
                if degree(g) <= deg_bound:
                    monos.add(g)
                    certs.setdefault(g, {})
        return RTruncation(frozenset(monos), certs, deg_bound, None)

    @classmethod
    def from_dict(cls, doc: dict) -> "MonomialModel":
        coords = tuple(doc["coords"])
        gens = tuple(tuple(g) for g in doc["gens"])
        center = doc["center"]
        if not center.get("constants", True):
            raise ValueError("only centers of the form k + I are supported")
        ideal = tuple(tuple(g) for g in center["ideal"])
        sigma = tuple(doc.get("sigma") or (1,) * len(coords))
        for g in gens + ideal + (sigma,):
            if len(g) != len(coords):
                raise ValueError(f"monomial {list(g)} does not match coordinates {list(coords)}")
        return cls(doc["name"], coords, gens, ideal, sigma)


# -- cycle algebra and homotopy center ---------------------------------------


def cycle_algebra(c: Contraction) -> SemigroupAlgebra:
    """S from the images of vertex-simple cycles of the source quiver.

    Any cycle factors into cycles without repeated vertices, so these images
    generate the semigroup of all cycle images.
    """
    if not c.target_simple:
        raise StructuralError("target quiver has no simple matchings; contract first")
    gens = source_cycle_generators(c)
    if not gens:
        raise StructuralError("source quiver has no cycles")
    return SemigroupAlgebra.from_generators(c.coords, gens)


def _arrow_images(c: Contraction) -> dict[int, Monomial]:
    simple = c.target_simple
    images = {}
    for aid in c.source.arrow_ids:
        if aid in c.contracted_arrows:
            images[aid] = (0,) * len(simple)
        else:
            images[aid] = tuple(1 if c.arrow_map[aid] in d.arrows else 0 for d in simple)
    return images


def _images_at(
    c: Contraction, i: int, len_bound: int | None, deg_bound: int
) -> tuple[dict[Monomial, tuple[int, ...]], bool]:
    """Images of cycles at i of degree <= deg_bound, each with a shortest word.

    Breadth-first over (vertex, exponent) states; returns the images and
    whether the length bound cut the search short.
    """
    q = c.source
    images = _arrow_images(c)
    zero = (0,) * len(c.coords)
    start = (i, zero)
    word = {start: ()}
    frontier = [start]
    length = 0
    found: dict[Monomial, tuple[int, ...]] = {zero: ()}
    while frontier:
        if len_bound is not None and length >= len_bound:
            return found, True
        nxt = []
        for v, m in frontier:
            for aid in q.out_arrows[v]:
                m2 = mono_mul(m, images[aid])
                if degree(m2) > deg_bound:
                    continue
                st = (q.head(aid), m2)
                if st in word:
                    continue
                word[st] = word[(v, m)] + (aid,)
                nxt.append(st)
                if st[0] == i and m2 not in found:
                    found[m2] = word[st]
        frontier = nxt
        length += 1
    return found, False


def _cycle_with_image(c: Contraction, i: int, g: Monomial) -> tuple[int, ...] | None:
    """A cycle at i with image exactly g.  The state space (vertex, exponent
    below g) is finite, so a negative answer is exact."""
    q = c.source
    images = _arrow_images(c)
    zero = (0,) * len(g)
    if not any(g):
        return ()
    start = (i, zero)
    word = {start: ()}
    todo = deque([start])
    while todo:
        v, m = todo.popleft()
        for aid in q.out_arrows[v]:
            m2 = mono_mul(m, images[aid])
            if not mono_divides(m2, g):
                continue
            st = (q.head(aid), m2)
            if st in word:
                continue
            word[st] = word[(v, m)] + (aid,)
            if st == (i, g):
                return word[st]
            todo.append(st)
    return None


def homotopy_center_trunc(c: Contraction, len_bound: int | None, deg_bound: int) -> RTruncation:
    """Monomials of degree <= deg_bound that are images of cycles at every
    source vertex, with one certificate cycle per vertex."""
    if deg_bound < 0:
        raise ValueError("deg_bound must be nonnegative")
    per_vertex = []
    binding = False
    for i in range(c.source.vertices):
        found, cut = _images_at(c, i, len_bound, deg_bound)
        binding = binding or cut
        per_vertex.append(found)
    common = set(per_vertex[0])
    for found in per_vertex[1:]:
        common &= set(found)
    certs = {g: {i: per_vertex[i][g] for i in range(len(per_vertex))} for g in common}
    return RTruncation(frozenset(common), certs, deg_bound, len_bound, binding)


# -- reduced center ----------------------------------------------------------

CONSTANT = "constant"
SIGMA = "sigma-central"
NOT_DIVISIBLE = "sigma-free-in-R"
SIGMA_SHIFT = "sigma-shift"
PRODUCT = "product"


@dataclass(frozen=True)
class ZhatBound:
    flags: dict[Monomial, tuple[str, ...]] = field(hash=False)
    shifts: dict[Monomial, int] = field(hash=False)
    equal_to_R: bool
    deg_bound: int

    @property
    def monomials(self) -> frozenset[Monomial]:
        return frozenset(self.flags)


def reduced_center_bound(
    S: SemigroupAlgebra, R: RTruncation, sigma: Monomial, deg_bound: int | None = None
) -> ZhatBound:
    """Monomials certified to lie in the reduced center.

    Sources: constants; sigma; elements of R not divisible by sigma; for each
    g in S the least m with g*sigma^m in R, together with the powers
    g^n*sigma^m; and products of all of these inside the window.  The least m
    is a choice: only the existence of a suitable shift is guaranteed.
    """
    if deg_bound is None:
        deg_bound = R.deg_bound
    dim = len(sigma)
    flags: dict[Monomial, set[str]] = {}

    def add(g: Monomial, why: str) -> None:
        if degree(g) <= deg_bound and g in R.monomials:
            flags.setdefault(g, set()).add(why)

    add(one(dim), CONSTANT)
    add(sigma, SIGMA)
    for g in R.monomials:
        if any(g) and not mono_divides(sigma, g):
            add(g, NOT_DIVISIBLE)
    shifts: dict[Monomial, int] = {}
    for g in _sorted(S.elements(deg_bound)):
        if not any(g):
            continue
        m = 0
        while degree(g) + m * degree(sigma) <= deg_bound:
            if mono_mul(g, mono_pow(sigma, m)) in R.monomials:
                shifts[g] = m
                break
            m += 1
        if g in shifts:
            n = 1
            while n * degree(g) + m * degree(sigma) <= deg_bound:
                add(mono_mul(mono_pow(g, n), mono_pow(sigma, m)), SIGMA_SHIFT)
                n += 1
    changed = True
    while changed:
        changed = False
        current = list(flags)
        for a in current:
            for b in current:
                if not any(a) or not any(b):
                    continue
                ab = mono_mul(a, b)
                if degree(ab) <= deg_bound and ab not in flags and ab in R.monomials:
                    flags[ab] = {PRODUCT}
                    changed = True
    frozen = {g: tuple(sorted(v)) for g, v in flags.items()}
    return ZhatBound(frozen, shifts, frozenset(frozen) == R.monomials, deg_bound)


# -- witness, special fibre, dimensions ------------------------------------


@dataclass(frozen=True)
class Witness:
    h: Monomial
    s_decomposition: tuple[int, ...]
    powers_checked: tuple[int, ...]
    powers_exact: bool


def nonnoetherian_witness(
    model: CenterModel, R: RTruncation, power_bound: int = DEFAULT_POWER_BOUND
) -> Witness | None:
    """A monomial h in S, outside R, not divisible by sigma, whose powers up
    to ``power_bound`` also avoid R.

    Candidates are scanned by degree inside the window.  Powers are tested
    with the model's exact membership test, so they may leave the window.
    """
    S, sigma = model.S, model.sigma
    for h in _sorted(S.elements(R.deg_bound)):
        if not any(h) or h in R.monomials or mono_divides(sigma, h):
            continue
        if any(model.in_R(mono_pow(h, n)) is not None for n in range(1, power_bound + 1)):
            continue
        parts = decompose(h, S.gens)
        return Witness(h, tuple(parts), tuple(range(1, power_bound + 1)), True)
    return None


@dataclass(frozen=True)
class SpecialFiber:
    noetherian: bool
    m0_gens: tuple[Monomial, ...] = ()
    z0_gens: tuple[Monomial, ...] = ()
    locus: MonomialIdealLocus | None = None
    locus_from_zhat: MonomialIdealLocus | None = None
    ght: int | None = None
    gdim: int | None = None
    dimR: int | None = None
    U_nonempty: bool | None = None
    U_dense: bool | None = None
    U_coincide: bool | None = None
    sigma_avoids_minimal_faces: bool | None = None


def special_fiber(
    model: CenterModel, R: RTruncation, zhat: ZhatBound, witness: Witness | None
) -> SpecialFiber:
    if witness is None:
        return SpecialFiber(noetherian=True)
    S = model.S
    m0 = minimal_ideal_generators(R.monomials, S)
    if not m0:
        raise StructuralError("the truncated center has no nonconstant monomials")
    z0 = minimal_ideal_generators(zhat.monomials, S)
    dimR = lattice_rank(R.monomials)
    locus = locus_of(S, m0)
    ght, gdim = ght_gdim(S, m0, dimR)
    locus_z = locus_of(S, z0) if z0 else None
    # a proper monomial ideal of a domain cuts out a proper closed set
    nonempty = locus.min_height is not None and all(any(g) for g in m0)
    sigma_ok = not any(in_face(model.sigma, f, S.gens) for f in locus.minimal_faces)
    coincide = locus_z is not None and locus.face_sets(S.gens) == locus_z.face_sets(S.gens)
    return SpecialFiber(
        noetherian=False,
        m0_gens=m0,
        z0_gens=z0,
        locus=locus,
        locus_from_zhat=locus_z,
        ght=ght,
        gdim=gdim,
        dimR=dimR,
        U_nonempty=nonempty,
        U_dense=nonempty,
        U_coincide=coincide,
        sigma_avoids_minimal_faces=sigma_ok,
    )


@dataclass(frozen=True)
class Dimensions:
    dimS: int
    dimR_est: int
    dimZhat_est: int
    frac_equal: bool
    frac_equal_zhat: bool
    expected_dimS: int | None

    @property
    def transcription_error(self) -> bool:
        return self.expected_dimS is not None and self.dimS != self.expected_dimS


def krull_dimensions(model: CenterModel, R: RTruncation, zhat: ZhatBound) -> Dimensions:
    S = model.S
    return Dimensions(
        dimS=S.rank,
        dimR_est=lattice_rank(R.monomials),
        dimZhat_est=lattice_rank(zhat.monomials),
        frac_equal=same_lattice(R.monomials, S.gens),
        frac_equal_zhat=same_lattice(zhat.monomials, S.gens),
        expected_dimS=3 if model.kind == "dimer" else None,
    )


# -- the dimension chain -----------------------------------------------------

CHAIN_CLASSES = {"s1": (1, 0), "t1": (-1, 0), "s2": (0, 1), "t2": (0, -1)}


@dataclass(frozen=True)
class ChainReport:
    status: str
    vertex: int | None = None
    cycles: dict[str, tuple[int, ...]] = field(default_factory=dict, hash=False)
    images: dict[str, Monomial] = field(default_factory=dict, hash=False)
    n1: int | None = None
    n2: int | None = None
    rank_T: int | None = None
    lattice_equal: bool | None = None
    localized_equal: bool | None = None
    max_len: int = 0

    def to_dict(self, coords: Sequence[str] = ()) -> dict:
        return {
            "status": self.status,
            "vertex": self.vertex,
            "cycles": {k: list(v) for k, v in self.cycles.items()},
            "images": {k: list(v) for k, v in self.images.items()},
            "n1": self.n1,
            "n2": self.n2,
            "rank_T": self.rank_T,
            "lattice_equal": self.lattice_equal,
            "localized_equal": self.localized_equal,
            "max_len": self.max_len,
        }


def _member_after_inverting(g: Monomial, gens: Sequence[Monomial], sigma: Monomial, max_shift: int) -> bool:
    return any(
        semigroup_member(mono_mul(g, mono_pow(sigma, m)), gens) for m in range(max_shift + 1)
    )


def verify_dimension_chain(
    q: DimerQuiver, S: SemigroupAlgebra | None = None, max_len: int | None = None
) -> ChainReport:
    """Run the rank-3 chain argument on a (cancellative) dimer quiver.

    Finds cycles of homology (1,0), (-1,0), (0,1), (0,-1) at one vertex,
    checks that s_i*t_i is a power of sigma, that the five monomials
    sigma, s1, s2, t1, t2 span a rank-3 lattice, and that S and this
    subsemigroup agree once sigma is inverted.
    """
    if max_len is None:
        max_len = 2 * q.max_face_length
    ident = contract(q, [])
    if S is None:
        S = cycle_algebra(ident)
    simple = ident.target_simple
    sigma = (1,) * len(simple)
    for j in range(q.vertices):
        chosen: dict[str, tuple[int, ...]] = {}
        for p in enumerate_cycles(q, j, max_len):
            if p.is_trivial:
                continue
            u = homology_class(q, p)
            for name, cls in CHAIN_CLASSES.items():
                if u == cls and name not in chosen:
                    chosen[name] = p.arrows
        if len(chosen) < 4:
            continue
        images = {k: tau_bar(q, PathWord(w, j, j), simple) for k, w in chosen.items()}
        n1 = sigma_power(mono_mul(images["s1"], images["t1"]))
        n2 = sigma_power(mono_mul(images["s2"], images["t2"]))
        T = [sigma, images["s1"], images["s2"], images["t1"], images["t2"]]
        rank_T = lattice_rank(T)
        shift = 2 * max(degree(g) for g in list(S.gens) + T)
        localized = all(_member_after_inverting(g, T, sigma, shift) for g in S.gens) and all(
            _member_after_inverting(g, S.gens, sigma, shift) for g in T
        )
        lattice_eq = same_lattice(T, list(S.gens) + [sigma])
        ok = n1 is not None and n2 is not None and n1 >= 1 and n2 >= 1 and rank_T == 3 and localized
        return ChainReport(
            "verified" if ok else "failed",
            j,
            chosen,
            images,
            n1,
            n2,
            rank_T,
            lattice_eq,
            localized,
            max_len,
        )
    return ChainReport("inconclusive", max_len=max_len)


# -- ascending chain of witness multiples -------------------------------------


@dataclass(frozen=True)
class WitnessChain:
    g: Monomial
    shift: int
    h: tuple[Monomial, ...]
    certificates: tuple[dict, ...]
    last_not_generated: bool
    quotients_outside_R: tuple[Monomial, ...]
    # h_length is not a sum of earlier h_n (the only unit of R is 1)
    last_outside_subsemigroup: bool


def witness_chain(model: CenterModel, g: Monomial, length: int = 4, max_shift: int = 8) -> WitnessChain | None:
    """The monomials h_n = g^n sigma^m, n = 1..length, for the least m that
    puts every h_n in R; and whether h_length lies in the ideal generated by
    the earlier ones.  In a monomial algebra that happens iff some quotient
    g^(length-n) lies in R."""
    sigma = model.sigma
    for m in range(max_shift + 1):
        hs = [mono_mul(mono_pow(g, n), mono_pow(sigma, m)) for n in range(1, length + 1)]
        certs = [model.in_R(h) for h in hs]
        if all(c is not None for c in certs):
            quotients = tuple(mono_pow(g, length - n) for n in range(1, length))
            outside = tuple(qt for qt in quotients if model.in_R(qt) is None)
            sub = not semigroup_member(hs[-1], hs[:-1])
            return WitnessChain(
                g, m, tuple(hs), tuple(certs), len(outside) == len(quotients), outside, sub
            )
    return None


# -- full report ---------------------------------------------------------------


@dataclass(frozen=True)
class CenterReport:
    name: str
    kind: str
    coords: tuple[str, ...]
    S: SemigroupAlgebra
    R: RTruncation
    zhat: ZhatBound
    sigma: Monomial
    dims: Dimensions
    witness: Witness | None
    fiber: SpecialFiber
    deg_bound: int
    len_bound: int | None
    power_bound: int
    cyclic: dict | None = None

    def to_dict(self) -> dict:
        window = f"window(deg={self.deg_bound},len={self.len_bound})"
        coords = list(self.coords)
        fmt = lambda g: format_monomial(g, coords)  # noqa: E731
        fiber = self.fiber
        doc: dict = {
            "name": self.name,
            "kind": self.kind,
            "coords": coords,
            "bounds": {
                "deg_bound": self.deg_bound,
                "len_bound": self.len_bound,
                "power_bound": self.power_bound,
                "len_binding": self.R.len_binding,
            },
            "S": self.S.to_dict(),
            "sigma": list(self.sigma),
            "R_trunc": [list(g) for g in _sorted(self.R.monomials)],
            "Zhat_trunc": [
                {"exps": list(g), "flags": list(self.zhat.flags[g])}
                for g in _sorted(self.zhat.monomials)
            ],
            "Zhat_equals_R": self.zhat.equal_to_R,
            # a mismatch may be a real gap or a window too small to certify
            "Zhat_status": "equal" if self.zhat.equal_to_R else "indeterminate",
            "dims": {
                "dimS": self.dims.dimS,
                "dimR_est": self.dims.dimR_est,
                "dimZhat_est": self.dims.dimZhat_est,
                "frac_equal": self.dims.frac_equal,
                "transcription_error": self.dims.transcription_error,
            },
            "witness": None
            if self.witness is None
            else {
                "h": list(self.witness.h),
                "text": fmt(self.witness.h),
                "s_decomposition": list(self.witness.s_decomposition),
                "powers_checked": list(self.witness.powers_checked),
            },
            "noetherian": fiber.noetherian,
        }
        if not fiber.noetherian:
            doc["special_fiber"] = {
                "m0_gens": [list(g) for g in fiber.m0_gens],
                "z0_gens": [list(g) for g in fiber.z0_gens],
                "minimal_faces": [
                    sorted(list(self.S.gens[j]) for j in f.gens) for f in fiber.locus.minimal_faces
                ],
                "heights": list(fiber.locus.heights),
                "ght": fiber.ght,
                "gdim": fiber.gdim,
                "dimR": fiber.dimR,
                "ght_kind": "depiction-relative upper bound",
                "U": {
                    "description": "complement of the zero locus of m0*S",
                    "nonempty": fiber.U_nonempty,
                    "dense": fiber.U_dense,
                    "coincides_with_zhat_side": fiber.U_coincide,
                },
            }
        if self.cyclic is not None:
            doc["cyclic"] = self.cyclic
        doc["claims"] = {
            "S": "exact",
            "sigma": "exact",
            "R_trunc": window,
            "Zhat_trunc": window,
            "Zhat_equals_R": window,
            "dims": window,
            "witness": "exact" if self.witness is not None else window,
            "special_fiber": window,
        }
        return doc

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2, sort_keys=True)


def witness_chain_dict(chain: WitnessChain) -> dict:
    return {
        "g": list(chain.g),
        "shift": chain.shift,
        "h": [list(h) for h in chain.h],
        "certificates": [
            {str(k): (list(v) if isinstance(v, tuple) else v) for k, v in c.items()}
            for c in chain.certificates
        ],
        "last_not_generated": chain.last_not_generated,
        "quotients_outside_R": [list(g) for g in chain.quotients_outside_R],
        "last_outside_subsemigroup": chain.last_outside_subsemigroup,
    }


def center_report(
    model: CenterModel,
    deg_bound: int = DEFAULT_DEG_BOUND,
    power_bound: int = DEFAULT_POWER_BOUND,
    cyclic: dict | None = None,
) -> CenterReport:
    R = model.r_truncation(deg_bound)
    zhat = reduced_center_bound(model.S, R, model.sigma, deg_bound)
    dims = krull_dimensions(model, R, zhat)
    witness = nonnoetherian_witness(model, R, power_bound)
    fiber = special_fiber(model, R, zhat, witness)
    return CenterReport(
        model.name,
        model.kind,
        tuple(model.coords),
        model.S,
        R,
        zhat,
        model.sigma,
        dims,
        witness,
        fiber,
        deg_bound,
        R.len_bound,
        power_bound,
        cyclic,
    )
