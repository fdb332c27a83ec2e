"""Simplicial chromatic polynomials by inclusion-exclusion over nonface subsets.

The polynomial is t^n plus, for every nonempty subset I of the minimal
nonfaces, a signed term t^(n - |union of I| + c(I)) where c(I) counts the
connected components of the intersection graph of I.  Two independent
oracles live alongside: a finite-model tuple counter and the classical
graph chromatic polynomial via deletion-contraction.

Sign convention: the direct inclusion-exclusion expansion of the removed
diagonal union; it reproduces the falling factorial on complete graphs and
matches the finite-model oracle at every integer point.
"""

from __future__ import annotations

from dataclasses import dataclass

from .complexes import (SimplicialComplex, _antichain_max, _bits, _sort_masks,
                        fresh_label)
from .polynomials import IntPolynomial
from .report import CheckReport, GuardError, report

NONFACE_LIMIT = 25
MODEL_LIMIT = 10 ** 8
GRAPH_VERTEX_LIMIT = 12

REMOVE_ONLY = "remove"
MERGE_VERTEX = "merge"


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph on string-labeled vertices."""

    vertices: tuple[str, ...]
    edges: tuple[tuple[str, str], ...]

    def __post_init__(self):
        labs = tuple(sorted(self.vertices))
        if len(set(labs)) != len(labs):
            raise ValueError("duplicate vertex labels")
        seen = set()
        edges = []
        for a, b in self.edges:
            if a == b:
                raise ValueError(f"loop at vertex {a!r}")
            if a not in labs or b not in labs:
                raise ValueError(f"edge ({a!r}, {b!r}) references unknown vertex")
            e = (a, b) if a < b else (b, a)
            if e in seen:
                raise ValueError(f"duplicate edge {e}")
            seen.add(e)
            edges.append(e)
        object.__setattr__(self, "vertices", labs)
        object.__setattr__(self, "edges", tuple(sorted(edges)))


def complete_graph(n: int) -> Graph:
    labs = [chr(ord("a") + i) for i in range(n)]
    return Graph(tuple(labs),
                 tuple((labs[i], labs[j]) for i in range(n) for j in range(i + 1, n)))


def component_count(sets) -> int:
    """Components of the intersection graph: sets adjacent iff they overlap."""
    fsets = [frozenset(s) for s in sets]
    for s in fsets:
        if not s:
            raise ValueError("empty input set")
    parent = list(range(len(fsets)))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for i in range(len(fsets)):
        for j in range(i + 1, len(fsets)):
            if fsets[i] & fsets[j]:
                ri, rj = find(i), find(j)
                if ri != rj:
                    parent[rj] = ri
    return len({find(i) for i in range(len(fsets))})


def chromatic_polynomial(S: SimplicialComplex) -> IntPolynomial:
    """Inclusion-exclusion over all subsets of the minimal nonfaces.

    Subsets are visited in DFS order adding one generator at a time; the
    running union is a bitset and the component list is merged incrementally,
    so each of the 2^r nodes costs one scan over the current components.
    """
    gens = S.minimal_nonface_masks
    r = len(gens)
    if r > NONFACE_LIMIT:
        raise GuardError(
            "nonface_count",
            f"{r} minimal nonfaces exceed the {NONFACE_LIMIT} enumeration limit; "
            "use the auxiliary-complex identity instead")
    n = S.n
    coeff = [0] * (n + 1)
    coeff[n] += 1

    def walk(start, union, comps, sign):
        nsign = -sign
        for j in range(start, r):
            g = gens[j]
            merged = g
            rest = []
            for cm in comps:
                if cm & g:
                    merged |= cm
                else:
                    rest.append(cm)
            rest.append(merged)
            nu = union | g
            coeff[n - nu.bit_count() + len(rest)] += nsign
            walk(j + 1, nu, rest, nsign)

    walk(0, 0, [], 1)
    return IntPolynomial(coeff)


def finite_model_count(S: SimplicialComplex, q: int) -> int:
    """Tuples in {1..q}^n whose coordinates are not all equal on any nonface.

    Independent oracle: exhaustive backtracking over coordinate assignments
    with satisfied constraints dropped and a free-tail shortcut.  Exact.
    """
    if q < 0:
        raise ValueError("q must be nonnegative")
    n = S.n
    if q ** n > MODEL_LIMIT:
        raise GuardError("model_size", f"q^n = {q}^{n} exceeds {MODEL_LIMIT}")
    gens = S.minimal_nonface_masks
    cons = [tuple(_bits(g)) for g in gens]
    colors = [0] * n

    def count(v, unsat):
        if not unsat:
            return q ** (n - v)
        total = 0
        for c in range(q):
            colors[v] = c
            keep = []
            ok = True
            for i in unsat:
                vs = cons[i]
                if v in vs:
                    if v != vs[0] and colors[vs[0]] != c:
                        continue  # some pair differs: satisfied forever
                    if v == vs[-1]:
                        ok = False  # fully assigned and monochromatic
                        break
                keep.append(i)
            if ok:
                total += count(v + 1, keep)
        return total

    return count(0, list(range(len(cons))))


def complex_of_graph(G: Graph) -> SimplicialComplex:
    """Complex whose minimal nonfaces are the edges: faces = independent sets."""
    return SimplicialComplex.from_minimal_nonfaces(G.vertices, G.edges)


def graph_chromatic(G: Graph) -> IntPolynomial:
    """Classical chromatic polynomial by deletion-contraction."""
    if len(G.vertices) > GRAPH_VERTEX_LIMIT:
        raise GuardError("graph_vertices",
                         f"{len(G.vertices)} vertices exceed the "
                         f"{GRAPH_VERTEX_LIMIT} recursion limit")
    t = IntPolynomial((0, 1))

    def rec(nverts, edges):
        if not edges:
            return t ** nverts
        a, b = min(edges)
        deleted = edges - {(a, b)}
        contracted = set()
        for x, y in deleted:
            if x == b:
                x = a
            if y == b:
                y = a
            if x != y:
                contracted.add((x, y) if x < y else (y, x))
        return rec(nverts, deleted) - rec(nverts - 1, frozenset(contracted))

    index = {v: i for i, v in enumerate(G.vertices)}
    edges = frozenset((index[a], index[b]) for a, b in G.edges)
    return rec(len(G.vertices), edges)


def tidied_contraction(S: SimplicialComplex, sigma,
                       convention: str = MERGE_VERTEX) -> SimplicialComplex:
    """Contract a minimal nonface.

    REMOVE_ONLY keeps the faces disjoint from sigma, on the vertex set
    V minus sigma.  MERGE_VERTEX additionally adjoins a fresh vertex w whose
    face relations mimic graph contraction: tau | {w} is a face iff
    tau | {x} was a face for every x in sigma.
    """
    sig = S.mask_of(sigma)
    if sig not in S.minimal_nonface_masks:
        raise ValueError(f"{sorted(sigma)} is not a minimal nonface")
    survivors = [m for m in S.face_masks if not m & sig]
    kept_labels = [v for v in S.vertices if not sig >> S._index[v] & 1]
    if convention == REMOVE_ONLY:
        facets = _antichain_max(survivors)
        return SimplicialComplex(tuple(kept_labels),
                                 _sort_masks(_relabel(facets, S, kept_labels)))
    if convention != MERGE_VERTEX:
        raise ValueError(f"unknown contraction convention {convention!r}")
    w = fresh_label(set(S.vertices), "w")
    sig_bits = list(_bits(sig))
    faces = set(survivors)
    wbit = 1 << S.n  # temporary position for the merge vertex
    face_set = S.face_masks
    for m in survivors:
        if all(m | (1 << x) in face_set for x in sig_bits):
            faces.add(m | wbit)
    facets = _antichain_max(faces)
    new_labels = sorted(kept_labels + [w])
    order = {v: i for i, v in enumerate(new_labels)}
    old_pos = {S._index[v]: order[v] for v in kept_labels}
    old_pos[S.n] = order[w]
    remapped = [_remap(m, old_pos) for m in facets]
    return SimplicialComplex(tuple(new_labels), _sort_masks(remapped))


def _relabel(masks, S, kept_labels):
    order = {v: i for i, v in enumerate(kept_labels)}
    old_pos = {S._index[v]: order[v] for v in kept_labels}
    return [_remap(m, old_pos) for m in masks]


def _remap(mask, old_to_new):
    out = 0
    for b in _bits(mask):
        out |= 1 << old_to_new[b]
    return out


def add_nonface_as_face(S: SimplicialComplex, sigma) -> SimplicialComplex:
    """The complex S with the minimal nonface sigma adjoined as a face."""
    sig = S.mask_of(sigma)
    if sig not in S.minimal_nonface_masks:
        raise ValueError(f"{sorted(sigma)} is not a minimal nonface")
    return S.add_face(sigma)


def verify_addition_contraction(S: SimplicialComplex, sigma,
                                convention: str = MERGE_VERTEX) -> CheckReport:
    """Residual of the addition-contraction relation, per convention.

    Computes chi_c(S) - chi_c(S with sigma adjoined) + chi_c(contraction),
    each complex contributing through its own vertex count.  The report
    carries the residual of both conventions; the verdict is anchored to the
    requested one (zero residual = PASS).
    """
    if convention not in (REMOVE_ONLY, MERGE_VERTEX):
        raise ValueError(f"unknown contraction convention {convention!r}")
    base = chromatic_polynomial(S)
    added = chromatic_polynomial(add_nonface_as_face(S, sigma))
    residuals = {}
    for conv in (MERGE_VERTEX, REMOVE_ONLY):
        contracted = chromatic_polynomial(tidied_contraction(S, sigma, conv))
        residuals[conv] = base - added + contracted
    ok = residuals[convention].is_zero()
    return report(
        "addition_contraction", ok,
        witness=None if ok else {
            "residual": list(residuals[convention].coeffs)},
        convention=convention,
        residual_merge=list(residuals[MERGE_VERTEX].coeffs),
        residual_remove=list(residuals[REMOVE_ONLY].coeffs),
        merge_pass=residuals[MERGE_VERTEX].is_zero(),
        remove_pass=residuals[REMOVE_ONLY].is_zero(),
    )
