"""Canonical complex representation and the facet/nonface correspondence."""

import random
from itertools import combinations

import pytest

from simpchrom.complexes import (NonfaceFamily, SimplicialComplex, join,
                                 points_complex)
from simpchrom.report import GuardError
from simpchrom.sampling import random_complex

SC = SimplicialComplex


def triangle_boundary():
    return SC.from_minimal_nonfaces("123", [("1", "2", "3")])


def square_complex():
    return SC.from_minimal_nonfaces("abcd", [("a", "c"), ("b", "d")])


def test_from_facets_reduces_to_antichain():
    s = SC.from_facets("abc", [("a", "b"), ("a",), ("b", "c"), ("a", "b")])
    assert s.facets == (("a", "b"), ("b", "c"))


def test_from_facets_fixtures():
    tri = SC.from_facets("123", [("1", "2"), ("1", "3"), ("2", "3")])
    assert tri.dimension == 1
    full = SC.from_facets("123", [("1", "2", "3")])
    assert full.dimension == 2
    square = SC.from_facets("abcd", [("a", "b"), ("b", "c"), ("c", "d"), ("a", "d")])
    assert square == square_complex()


def test_from_facets_errors():
    with pytest.raises(ValueError, match="duplicate"):
        SC.from_facets(["a", "a"], [("a",)])
    with pytest.raises(ValueError, match="unknown label"):
        SC.from_facets("ab", [("a", "c")])
    with pytest.raises(ValueError, match="in no face"):
        SC.from_facets("abc", [("a", "b")])


def test_from_minimal_nonfaces_fixtures():
    sq = square_complex()
    assert sq.facets == (("a", "b"), ("a", "d"), ("b", "c"), ("c", "d"))
    tri = triangle_boundary()
    assert tri.facets == (("1", "2"), ("1", "3"), ("2", "3"))
    full = SC.from_minimal_nonfaces("12", [])
    assert full.facets == (("1", "2"),)


def test_from_minimal_nonfaces_errors():
    with pytest.raises(ValueError, match="antichain"):
        NonfaceFamily((("a",), ("a", "b")))
    with pytest.raises(ValueError, match="empty generator"):
        NonfaceFamily(((),))
    with pytest.raises(ValueError, match="singleton"):
        SC.from_minimal_nonfaces("ab", [("a",)])
    # relaxed mode carries formal nonface vertices
    t = SC.from_minimal_nonfaces("ab", [("a",), ("b",)], relaxed=True)
    assert t.facet_masks == (0,) and t.n == 2


def test_minimal_nonfaces_of_fixtures():
    assert square_complex().minimal_nonfaces().generators == (("a", "c"), ("b", "d"))
    assert triangle_boundary().minimal_nonfaces().generators == (("1", "2", "3"),)
    full = SC.from_minimal_nonfaces("abc", [])
    assert full.minimal_nonfaces().generators == ()


def test_round_trip_on_random_complexes():
    rng = random.Random(101)
    for _ in range(100):
        s = random_complex(rng, n_max=8)
        gens = s.minimal_nonfaces()
        back = SC.from_minimal_nonfaces(s.vertices, gens)
        assert back == s
        assert back.minimal_nonfaces() == gens


def test_minimal_nonfaces_form_antichain():
    rng = random.Random(7)
    for _ in range(50):
        s = random_complex(rng, n_max=7)
        gens = [set(g) for g in s.minimal_nonfaces().generators]
        for i, g in enumerate(gens):
            for j, h in enumerate(gens):
                assert i == j or not g <= h


def test_f_vector_fixtures():
    full3 = SC.from_minimal_nonfaces("abc", [])
    assert full3.f_vector() == (1, 3, 3, 1)
    assert full3.euler_characteristics() == (1, 0)
    two = points_complex("ab")
    assert two.f_vector() == (1, 2)
    assert two.euler_characteristics() == (2, 1)
    assert square_complex().f_vector() == (1, 4, 4)


def test_face_count_matches_is_face_scan():
    rng = random.Random(23)
    for _ in range(20):
        s = random_complex(rng, n_min=2, n_max=6)
        total = 0
        for k in range(1, s.n + 1):
            for sub in combinations(s.vertices, k):
                if s.is_face(sub):
                    total += 1
        assert total == sum(s.f_vector()[1:])


def test_is_face():
    sq = square_complex()
    assert sq.is_face(("a", "b"))
    assert not sq.is_face(("a", "c"))
    assert sq.is_face(())


def test_join_builds_complete_bipartite():
    k23 = join(points_complex("ab"), points_complex("cde"))
    assert len(k23.facets) == 6
    assert k23.dimension == 1
    assert set(k23.facets) == {("a", "c"), ("a", "d"), ("a", "e"),
                               ("b", "c"), ("b", "d"), ("b", "e")}


def test_join_rejects_label_collision():
    with pytest.raises(ValueError, match="collision"):
        join(points_complex("ab"), points_complex("bc"))


def test_join_f_vector_convolution():
    rng = random.Random(3)
    import string
    for _ in range(15):
        s1 = random_complex(rng, n_min=2, n_max=4)
        n1 = s1.n
        labels2 = list(string.ascii_uppercase[:rng.randint(2, 4)])
        s2 = SC.from_facets(labels2, [labels2])
        f1, f2 = s1.f_vector(), s2.f_vector()
        fj = join(s1, s2).f_vector()
        for k in range(len(fj)):
            conv = sum(f1[i] * f2[k - i]
                       for i in range(len(f1)) if 0 <= k - i < len(f2))
            assert fj[k] == conv


def test_skeleton():
    full = SC.from_minimal_nonfaces("abc", [])
    assert full.skeleton(0) == points_complex("abc")
    assert full.skeleton(1) == SC.from_facets(
        "abc", [("a", "b"), ("a", "c"), ("b", "c")])
    with pytest.raises(ValueError):
        full.skeleton(5)


def test_empty_complex_on_no_vertices():
    empty = SC.from_facets([], [])
    assert empty.n == 0
    assert empty.dimension == -1
    assert empty.f_vector() == (1,)


def test_vertex_guard():
    labels = [f"v{i:02d}" for i in range(26)]
    s = SC.from_facets(labels, [labels])
    with pytest.raises(GuardError) as err:
        s.f_vector()
    assert err.value.limit == "vertex_count"


def test_canonical_order_is_sorted():
    s = SC.from_facets(["b", "a"], [("b", "a")])
    assert s.vertices == ("a", "b")
    assert s.facets == (("a", "b"),)
