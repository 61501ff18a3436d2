"""Randomized and exhaustive checks against independent oracles."""

import itertools

import sympy
from hypothesis import HealthCheck, given, settings
from hypothesis import strategies as st

from dimerlab.center import reduced_center_bound
from dimerlab.contraction import contract, tau_psi
from dimerlab.matchings import exact_cover, n_D, perfect_matchings
from dimerlab.monomials import (
    SemigroupAlgebra,
    degree,
    in_face,
    lattice_rank,
    locus_of,
    mono_divides,
    mono_mul,
    mono_pow,
    mono_quotient,
    rational_rank,
    semigroup_member,
    sigma_power,
)
from dimerlab.paths import enumerate_cycles, rewrite_neighbors
from dimerlab.tiling import PathWord, homology_class, make_path

CASES = settings(max_examples=250, deadline=None, suppress_health_check=[HealthCheck.function_scoped_fixture])


def random_path(draw, q, max_len):
    v = draw(st.integers(0, q.vertices - 1))
    start = v
    arrows = []
    for _ in range(draw(st.integers(0, max_len))):
        out = q.out_arrows[v]
        aid = draw(st.sampled_from(sorted(out)))
        arrows.append(aid)
        v = q.head(aid)
    return PathWord(tuple(arrows), start, v)


# -- rewriting preserves n_D and homology -------------------------------------


@CASES
@given(data=st.data(), which=st.sampled_from(["conifold", "fig1"]))
def test_n_D_invariant_under_rewriting(data, which, conifold, fig1):
    q = conifold if which == "conifold" else fig1
    p = random_path(data.draw, q, 12)
    word = p.arrows
    for _ in range(data.draw(st.integers(1, 6))):
        moves = sorted(set(rewrite_neighbors(q, word)))
        if not moves:
            break
        word = data.draw(st.sampled_from(moves))
    rewritten = make_path(q, word, p.base)
    assert rewritten.end == p.end
    assert homology_class(q, rewritten) == homology_class(q, p)
    for d in perfect_matchings(q):
        assert n_D(rewritten, d) == n_D(p, d)


# -- tau_psi is multiplicative --------------------------------------------------


@CASES
@given(data=st.data())
def test_tau_psi_multiplicative(data, green):
    q = green.source
    p = random_path(data.draw, q, 10)
    v = p.end
    arrows = []
    for _ in range(data.draw(st.integers(0, 10))):
        aid = data.draw(st.sampled_from(sorted(q.out_arrows[v])))
        arrows.append(aid)
        v = q.head(aid)
    r = PathWord(tuple(arrows), p.end, v)
    pr = PathWord(p.arrows + r.arrows, p.base, r.end)
    assert tau_psi(green, pr) == mono_mul(tau_psi(green, p), tau_psi(green, r))


# -- cycle images: homology determines the image up to sigma --------------------


def _all_cycle_images(c, max_len):
    q = c.source
    for i in range(q.vertices):
        for p in enumerate_cycles(q, i, max_len):
            if not p.is_trivial:
                yield p, homology_class(q, p), tau_psi(c, p)


def test_null_homologous_cycles_map_to_sigma_powers(green, conifold):
    checked = 0
    for c in (green, contract(conifold, [])):
        for p, u, g in _all_cycle_images(c, 8):
            if u == (0, 0):
                n = sigma_power(g)
                assert n is not None and n >= 1, (p, g)
                checked += 1
    assert checked > 0


def test_equal_homology_means_sigma_multiple(green, conifold):
    pairs = 0
    for c in (green, contract(conifold, [])):
        by_class = {}
        for p, u, g in _all_cycle_images(c, 8):
            by_class.setdefault(u, []).append(g)
        for images in by_class.values():
            base = images[0]
            for g in images:
                diff = {a - b for a, b in zip(g, base)}
                assert len(diff) == 1, (base, g)
                pairs += 1
    assert pairs >= 200


# -- window checks on the center --------------------------------------------------


def _window(model, deg):
    R = model.r_truncation(deg)
    return R, model.S.elements(deg)


def test_R_absorbs_S_outside_sigma_powers(fig1_model, kxs_model):
    for model in (fig1_model, kxs_model):
        R, S = _window(model, 8)
        sigma = model.sigma
        for g in R.monomials:
            n, rem = divmod(degree(g), degree(sigma))
            if rem == 0 and g == mono_pow(sigma, n):
                continue
            for h in S:
                gh = mono_mul(g, h)
                if degree(gh) <= 8:
                    assert gh in R.monomials, (g, h)


def test_some_power_of_R_elements_is_certified(fig1_model, kxs_model):
    for model in (fig1_model, kxs_model):
        R, _ = _window(model, 8)
        z = reduced_center_bound(model.S, R, model.sigma, 8)
        for g in R.monomials:
            if not any(g):
                continue
            powers = [mono_pow(g, m) for m in range(1, 9) if m * degree(g) <= 8]
            assert any(p in z.monomials for p in powers), g


def test_sigma_cancels_in_S(fig1_model, kxs_model):
    for model in (fig1_model, kxs_model):
        S, sigma = model.S, model.sigma
        n = len(sigma)
        bound = 8 - degree(sigma)
        for exps in itertools.product(range(bound + 1), repeat=n):
            if sum(exps) > bound:
                continue
            if S.contains(mono_mul(exps, sigma)):
                assert S.contains(exps), exps


# -- semigroup membership vs brute force ----------------------------------------

gens_strategy = st.integers(2, 5).flatmap(
    lambda n: st.lists(
        st.lists(st.integers(0, 2), min_size=n, max_size=n).filter(any).map(tuple),
        min_size=1,
        max_size=4,
    )
)


def brute_member(g, gens):
    ranges = [range(degree(g) // degree(h) + 1) for h in gens]
    for counts in itertools.product(*ranges):
        total = [0] * len(g)
        for c, h in zip(counts, gens):
            for k, x in enumerate(h):
                total[k] += c * x
        if tuple(total) == tuple(g):
            return True
    return False


@CASES
@given(gens=gens_strategy, data=st.data())
def test_semigroup_member_matches_brute_force(gens, data):
    n = len(gens[0])
    g = tuple(data.draw(st.lists(st.integers(0, 3), min_size=n, max_size=n)))
    if degree(g) > 6:
        g = tuple(min(x, 1) for x in g)
    assert semigroup_member(g, gens) == brute_member(g, gens)


# -- lattice rank vs sympy ------------------------------------------------------


@CASES
@given(rows=st.lists(st.lists(st.integers(-4, 4), min_size=4, max_size=4), min_size=1, max_size=6))
def test_lattice_rank_matches_sympy(rows):
    expected = sympy.Matrix(rows).rank()
    assert lattice_rank(rows) == expected
    assert rational_rank(rows) == expected


# -- exact cover vs subset brute force --------------------------------------------


def brute_cover(rows, columns):
    names = sorted(rows)
    out = []
    for k in range(len(names) + 1):
        for subset in itertools.combinations(names, k):
            hits = [c for r in subset for c in rows[r]]
            if sorted(hits) == sorted(columns):
                out.append(tuple(subset))
    return sorted(out)


@CASES
@given(
    faces=st.integers(2, 6),
    data=st.data(),
)
def test_exact_cover_matches_brute_force(faces, data):
    # arrows as edges between faces: each arrow borders two distinct faces
    edges = data.draw(
        st.lists(st.tuples(st.integers(0, faces - 1), st.integers(0, faces - 1)).filter(lambda e: e[0] != e[1]),
                 min_size=1, max_size=12)
    )
    rows = {k: set(e) for k, e in enumerate(edges)}
    got = sorted(tuple(sorted(s)) for s in exact_cover(rows, list(range(faces))))
    assert got == brute_cover(rows, list(range(faces)))


def test_fixture_matchings_match_brute_force(conifold, fig1):
    for q in (conifold, fig1):
        rows = {a: set(q.faces_of_arrow[a]) for a in q.arrow_ids}
        expected = brute_cover(rows, [f.id for f in q.faces])
        assert [tuple(d.sorted_arrows()) for d in perfect_matchings(q)] == expected


# -- locus maximality -----------------------------------------------------------

QUADRIC = SemigroupAlgebra.from_generators("xyzw", [(1, 0, 1, 0), (1, 0, 0, 1), (0, 1, 1, 0), (0, 1, 0, 1)])
SMALL = sorted(g for g in QUADRIC.elements(4) if any(g))


@CASES
@given(ideal=st.lists(st.sampled_from(SMALL), min_size=1, max_size=4))
def test_locus_faces_are_maximal_avoiders(ideal):
    S = QUADRIC
    locus = locus_of(S, ideal)
    avoids = lambda f: not any(in_face(g, f, S.gens) for g in ideal)  # noqa: E731
    for f in locus.minimal_faces:
        assert avoids(f)
        for h in S.faces:
            if f.gens < h.gens:
                assert not avoids(h)
    for h in S.faces:
        if avoids(h):
            assert any(h.gens <= f.gens for f in locus.minimal_faces)


@CASES
@given(g=st.sampled_from(SMALL), h=st.sampled_from(SMALL))
def test_divisibility_helpers(g, h):
    gh = mono_mul(g, h)
    assert mono_divides(g, gh)
    assert mono_quotient(gh, g) == h
