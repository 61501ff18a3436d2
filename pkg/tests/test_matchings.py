from dimerlab.matchings import exact_cover, n_D, nondegenerate, perfect_matchings, simple_matchings
from dimerlab.tiling import make_path


def test_conifold_matchings(conifold):
    perfect = perfect_matchings(conifold)
    assert [d.sorted_arrows() for d in perfect] == [[0], [1], [2], [3]]
    assert len(simple_matchings(conifold)) == 4
    assert nondegenerate(conifold)


def test_fig1_has_no_simple_matchings(fig1):
    assert len(perfect_matchings(fig1)) == 8
    assert simple_matchings(fig1) == ()


def test_contracted_fig1_matches_conifold(green, conifold):
    target = green.target
    assert [d.sorted_arrows() for d in simple_matchings(target)] == [
        d.sorted_arrows() for d in simple_matchings(conifold)
    ]


def test_exact_cover_small():
    rows = {"a": {1, 2}, "b": {3}, "c": {1}, "d": {2, 3}}
    assert sorted(sorted(s) for s in exact_cover(rows, [1, 2, 3])) == [["a", "b"], ["c", "d"]]
    assert list(exact_cover({"a": {1}}, [1, 2])) == []


def test_n_D_counts(conifold):
    p = make_path(conifold, [0, 2, 1, 3])
    for d in perfect_matchings(conifold):
        assert n_D(p, d) == 1
