import pytest

from dimerlab.monomials import (
    DegreeCapExceeded,
    SemigroupAlgebra,
    cone_faces,
    format_monomial,
    ght_gdim,
    hermite_basis,
    lattice_rank,
    locus_of,
    minimal_generators,
    same_lattice,
    semigroup_elements,
    semigroup_member,
    sigma_power,
)

QUADRIC = [(1, 0, 1, 0), (1, 0, 0, 1), (0, 1, 1, 0), (0, 1, 0, 1)]


def quadric():
    return SemigroupAlgebra.from_generators(("x", "y", "z", "w"), QUADRIC)


def test_quadric_cone():
    S = quadric()
    assert S.rank == 3
    faces = S.faces
    by_rank = {}
    for f in faces:
        by_rank.setdefault(f.rank, []).append(f)
    # apex, 4 rays, 4 facets, the cone
    assert {r: len(v) for r, v in by_rank.items()} == {0: 1, 1: 4, 2: 4, 3: 1}


def test_membership():
    assert semigroup_member((1, 1, 1, 1), QUADRIC)
    assert not semigroup_member((1, 0, 0, 0), QUADRIC)
    assert not semigroup_member((2, 0, 1, 0), QUADRIC)
    assert semigroup_member((0, 0, 0, 0), QUADRIC)
    with pytest.raises(DegreeCapExceeded):
        semigroup_member((40, 40, 40, 40), QUADRIC, max_degree=64)


def test_minimal_generators_drop_redundant():
    assert minimal_generators([(1, 0), (0, 1), (1, 1), (2, 0)]) == ((1, 0), (0, 1))


def test_elements_window():
    elems = semigroup_elements(QUADRIC, 4, 4)
    assert len(elems) == 1 + 4 + 9


def test_lattice_helpers():
    assert lattice_rank([(2, 0), (0, 2)]) == 2
    assert not same_lattice([(2, 0), (0, 2)], [(1, 0), (0, 1)])
    assert same_lattice([(1, 1), (1, 0)], [(1, 0), (0, 1)])
    assert hermite_basis([]) == ()
    assert sigma_power((3, 3, 3)) == 3
    assert sigma_power((3, 2, 3)) is None


def test_locus_of_sigma_in_quadric():
    S = quadric()
    locus = locus_of(S, [(1, 1, 1, 1)])
    assert sorted(f.rank for f in locus.minimal_faces) == [2, 2, 2, 2]
    assert locus.heights == (1, 1, 1, 1)
    assert ght_gdim(S, [(1, 1, 1, 1)], 3) == (1, 2)


def test_locus_of_maximal_ideal_is_apex():
    S = quadric()
    locus = locus_of(S, QUADRIC)
    assert [f.rank for f in locus.minimal_faces] == [0]
    assert ght_gdim(S, QUADRIC, 3) == (3, 0)


def test_locus_rejects_bad_input():
    S = quadric()
    with pytest.raises(ValueError):
        locus_of(S, [(1, 0, 0, 0)])
    with pytest.raises(ValueError):
        ght_gdim(S, [], 3)
    with pytest.raises(ValueError):
        ght_gdim(S, [(0, 0, 0, 0)], 3)


def test_cone_faces_of_a_ray():
    faces = cone_faces([(2, 2)])
    assert sorted(f.rank for f in faces) == [0, 1]


def test_format_and_round_trip():
    S = quadric()
    assert format_monomial((1, 0, 2, 0), S.coords) == "x*z^2"
    assert format_monomial((0, 0, 0, 0), S.coords) == "1"
    assert SemigroupAlgebra.from_dict(S.to_dict()) == S
