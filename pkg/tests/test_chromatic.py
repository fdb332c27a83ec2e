"""Chromatic polynomial engine, its two oracles, and the contraction experiment."""

import random
from itertools import product

import pytest

from simpchrom.chromatic import (Graph, MERGE_VERTEX, REMOVE_ONLY,
                                 add_nonface_as_face, chromatic_polynomial,
                                 complete_graph, complex_of_graph,
                                 component_count, finite_model_count,
                                 graph_chromatic, tidied_contraction,
                                 verify_addition_contraction)
from simpchrom.complexes import SimplicialComplex
from simpchrom.polynomials import IntPolynomial
from simpchrom.report import GuardError
from simpchrom.sampling import random_complex, random_graph

P = IntPolynomial
SC = SimplicialComplex


def triangle_boundary():
    return SC.from_minimal_nonfaces("123", [("1", "2", "3")])


def square_complex():
    return SC.from_minimal_nonfaces("abcd", [("a", "c"), ("b", "d")])


def path_complex():
    return SC.from_minimal_nonfaces("123", [("1", "2"), ("2", "3")])


def falling_factorial(n):
    out = P((1,))
    for k in range(n):
        out = out * P((-k, 1))
    return out


def test_component_count():
    assert component_count([{"a", "c"}, {"b", "d"}]) == 2
    assert component_count([{1, 2}, {2, 3}]) == 1
    assert component_count([{1, 2}, {2, 3}, {4, 5}]) == 2
    with pytest.raises(ValueError):
        component_count([set()])


def test_chromatic_fixtures():
    full = SC.from_minimal_nonfaces("abc", [])
    assert chromatic_polynomial(full) == P((0, 0, 0, 1))
    assert chromatic_polynomial(triangle_boundary()) == P((0, -1, 0, 1))
    assert chromatic_polynomial(square_complex()) == P((0, 0, 1, -2, 1))
    assert chromatic_polynomial(path_complex()) == P((0, 1, -2, 1))


def test_complete_graph_specialization():
    for n in (3, 4, 5):
        g = complete_graph(n)
        assert chromatic_polynomial(complex_of_graph(g)) == falling_factorial(n)


def test_finite_model_count_by_literal_enumeration():
    # independent re-derivation: walk every tuple and test each nonface
    rng = random.Random(12)
    for _ in range(15):
        s = random_complex(rng, n_min=2, n_max=4, r_max=3)
        nonfaces = [set(g) for g in s.minimal_nonfaces().generators]
        for q in range(4):
            brute = 0
            for tup in product(range(q), repeat=s.n):
                colors = dict(zip(s.vertices, tup))
                if all(len({colors[v] for v in nf}) > 1 for nf in nonfaces):
                    brute += 1
            assert finite_model_count(s, q) == brute


def test_finite_model_fixtures():
    assert finite_model_count(triangle_boundary(), 3) == 24  # 27 - 3
    assert finite_model_count(square_complex(), 2) == 4
    full2 = SC.from_minimal_nonfaces("ab", [])
    assert finite_model_count(full2, 5) == 25


def test_oracle_agreement_on_random_sample():
    rng = random.Random(99)
    for _ in range(50):
        s = random_complex(rng, n_max=6, r_max=4)
        p = chromatic_polynomial(s)
        for q in range(s.n + 2):
            assert p.evaluate(q) == finite_model_count(s, q)


def test_chi_at_one_detects_full_simplex():
    rng = random.Random(4)
    for _ in range(30):
        s = random_complex(rng, n_max=6, r_max=4)
        expected = 1 if not s.minimal_nonface_masks else 0
        assert chromatic_polynomial(s).evaluate(1) == expected
        assert s.f_vector()  # complex remains enumerable


def test_leading_coefficient_is_one():
    rng = random.Random(42)
    for _ in range(30):
        s = random_complex(rng, n_max=7)
        p = chromatic_polynomial(s)
        assert p.degree == s.n and p.coeffs[-1] == 1


def test_pairwise_intersecting_nonfaces_have_unit_components():
    from simpchrom.sampling import random_intersecting_complex
    from itertools import combinations
    rng = random.Random(17)
    for _ in range(20):
        s = random_intersecting_complex(rng, n_max=7, r_max=4)
        gens = [set(g) for g in s.minimal_nonfaces().generators]
        for k in range(1, len(gens) + 1):
            for idx in combinations(range(len(gens)), k):
                assert component_count([gens[i] for i in idx]) == 1


def test_graph_chromatic_fixtures():
    k3 = complete_graph(3)
    assert graph_chromatic(k3) == falling_factorial(3)
    path = Graph(("a", "b", "c"), (("a", "b"), ("b", "c")))
    assert graph_chromatic(path) == P((0, 1, -2, 1))  # t(t-1)^2
    edgeless = Graph(("a", "b", "c", "d"), ())
    assert graph_chromatic(edgeless) == P((0, 0, 0, 0, 1))


def test_graph_agreement_on_random_sample():
    rng = random.Random(31)
    for _ in range(25):
        g = random_graph(rng)
        assert chromatic_polynomial(complex_of_graph(g)) == graph_chromatic(g)


def test_graph_validation():
    with pytest.raises(ValueError, match="loop"):
        Graph(("a",), (("a", "a"),))
    with pytest.raises(ValueError, match="duplicate edge"):
        Graph(("a", "b"), (("a", "b"), ("b", "a")))
    with pytest.raises(ValueError, match="unknown"):
        Graph(("a", "b"), (("a", "c"),))


def test_tidied_contraction_two_vertex():
    two = SC.from_minimal_nonfaces("12", [("1", "2")])
    merged = tidied_contraction(two, ("1", "2"), MERGE_VERTEX)
    assert merged.n == 1 and merged.facets == (("w",),)
    removed = tidied_contraction(two, ("1", "2"), REMOVE_ONLY)
    assert removed.n == 0 and removed.facet_masks == (0,)
    assert chromatic_polynomial(removed) == P((1,))


def test_tidied_contraction_path():
    c = tidied_contraction(path_complex(), ("1", "2"), MERGE_VERTEX)
    assert set(c.vertices) == {"3", "w"}
    assert [set(g) for g in c.minimal_nonfaces().generators] == [{"3", "w"}]


def test_tidied_contraction_requires_minimal_nonface():
    with pytest.raises(ValueError, match="not a minimal nonface"):
        tidied_contraction(square_complex(), ("a", "b"))


def test_addition_contraction_two_vertex():
    two = SC.from_minimal_nonfaces("12", [("1", "2")])
    rep = verify_addition_contraction(two, ("1", "2"), MERGE_VERTEX)
    assert rep.passed
    assert rep.details["residual_merge"] == []
    assert rep.details["residual_remove"] == [1, -1]
    rep2 = verify_addition_contraction(two, ("1", "2"), REMOVE_ONLY)
    assert not rep2.passed


def test_addition_contraction_path():
    rep = verify_addition_contraction(path_complex(), ("1", "2"), MERGE_VERTEX)
    assert rep.passed
    assert not rep.details["remove_pass"]
    # pieces: (t^3 - 2t^2 + t) - (t^3 - t^2) + (t^2 - t) = 0
    added = chromatic_polynomial(add_nonface_as_face(path_complex(), ("1", "2")))
    assert added == P((0, 0, -1, 1))


def test_addition_contraction_residuals_are_recorded_not_assumed():
    # the merge reconstruction is validated on the fixtures only; on one
    # edge-nonface with a spectator vertex both conventions leave a residual
    s = SC.from_minimal_nonfaces("abc", [("a", "b")])
    rep = verify_addition_contraction(s, ("a", "b"), MERGE_VERTEX)
    assert not rep.passed
    assert rep.details["residual_merge"] == [0, 1]        # t
    assert rep.details["residual_remove"] == [0, 2, -1]   # 2t - t^2


def test_guards():
    labels = [chr(ord("a") + i) for i in range(13)]
    with pytest.raises(GuardError) as err:
        graph_chromatic(Graph(tuple(labels), ()))
    assert err.value.limit == "graph_vertices"
    with pytest.raises(GuardError) as err:
        finite_model_count(SC.from_minimal_nonfaces("abcdefghij", []), 10 ** 8)
    assert err.value.limit == "model_size"
