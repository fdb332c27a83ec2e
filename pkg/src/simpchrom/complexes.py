"""Finite abstract simplicial complexes stored canonically by facets.

Vertices are label strings, sorted lexicographically; faces live as bitmasks
over that order.  Conversion between the facet description and the minimal
nonface description (the squarefree-ideal generators) is exact both ways.

A complex is "strict" when every vertex is required to be a face; auxiliary
complexes built from companion-set families may carry formal vertices that
are themselves nonfaces, and are constructed with ``relaxed=True``.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from itertools import combinations

from .report import GuardError

VERTEX_LIMIT = 25


def _bits(mask: int):
    while mask:
        b = mask & -mask
        yield b.bit_length() - 1
        mask ^= b


def _antichain_max(masks) -> list[int]:
    """Drop every mask strictly contained in another one.

    Containment needs a strictly larger mask, so each size class is tested
    only against the kept masks of greater size; a family of equal-size
    faces (a pure complex) reduces in linear time.
    """
    by_size: dict[int, list[int]] = {}
    for m in set(masks):
        by_size.setdefault(m.bit_count(), []).append(m)
    out: list[int] = []
    for size in sorted(by_size, reverse=True):
        bigger = list(out)
        out.extend(m for m in by_size[size]
                   if not any(m & k == m for k in bigger))
    return out


def _downward_closure(facet_masks) -> set[int]:
    faces = set()
    stack = list(facet_masks)
    while stack:
        m = stack.pop()
        if m in faces:
            continue
        faces.add(m)
        mm = m
        while mm:
            b = mm & -mm
            stack.append(m & ~b)
            mm ^= b
    if not faces:
        faces.add(0)
    return faces


@dataclass(frozen=True)
class NonfaceFamily:
    """Antichain of vertex-label sets: the squarefree ideal generators."""

    generators: tuple[tuple[str, ...], ...]

    def __post_init__(self):
        gens = [tuple(sorted(g)) for g in self.generators]
        sets = [frozenset(g) for g in gens]
        for i, g in enumerate(sets):
            if not g:
                raise ValueError("empty generator")
            if len(g) != len(gens[i]):
                raise ValueError(f"repeated vertex in generator {gens[i]}")
            for j, h in enumerate(sets):
                if i != j and g <= h:
                    raise ValueError(
                        f"generators are not an antichain: {gens[i]} <= {gens[j]}")
        object.__setattr__(self, "generators", tuple(sorted(gens)))

    def __len__(self):
        return len(self.generators)

    def as_sets(self) -> list[frozenset]:
        return [frozenset(g) for g in self.generators]


class SimplicialComplex:
    """Immutable vertex-labeled complex; all equality is on canonical form."""

    def __init__(self, vertices, facet_masks, relaxed: bool = False):
        self.vertices = tuple(vertices)
        self.facet_masks = tuple(facet_masks)
        self.relaxed = bool(relaxed)

    # -- construction -----------------------------------------------------

    @classmethod
    def from_facets(cls, labels, facets, relaxed: bool = False) -> "SimplicialComplex":
        """Build from maximal faces; facets are reduced to an antichain.

        In strict mode every label must appear in some facet.
        """
        verts = _canonical_labels(labels)
        index = {v: i for i, v in enumerate(verts)}
        masks = []
        for f in facets:
            m = 0
            for lab in f:
                if lab not in index:
                    raise ValueError(f"facet {sorted(f)} references unknown label {lab!r}")
                m |= 1 << index[lab]
            masks.append(m)
        masks = _antichain_max(masks) if masks else [0]
        if not relaxed:
            covered = 0
            for m in masks:
                covered |= m
            missing = [verts[i] for i in range(len(verts)) if not covered >> i & 1]
            if missing:
                raise ValueError(f"labels in no face: {missing}")
        return cls(verts, _sort_masks(masks), relaxed)

    @classmethod
    def from_minimal_nonfaces(cls, labels, generators,
                              relaxed: bool = False) -> "SimplicialComplex":
        """Build the complex whose faces are exactly the generator-free subsets."""
        verts = _canonical_labels(labels)
        if len(verts) > VERTEX_LIMIT:
            raise GuardError("vertex_count",
                             f"{len(verts)} vertices exceed the {VERTEX_LIMIT} limit")
        index = {v: i for i, v in enumerate(verts)}
        family = generators if isinstance(generators, NonfaceFamily) \
            else NonfaceFamily(tuple(tuple(g) for g in generators))
        gen_masks = []
        for g in family.generators:
            m = 0
            for lab in g:
                if lab not in index:
                    raise ValueError(f"generator {list(g)} references unknown label {lab!r}")
                m |= 1 << index[lab]
            gen_masks.append(m)
        if not relaxed:
            for g, m in zip(family.generators, gen_masks):
                if m.bit_count() == 1:
                    raise ValueError(
                        f"singleton generator {list(g)} leaves vertex {g[0]!r} in no face")
        facets = _maximal_generator_free(len(verts), gen_masks)
        out = cls(verts, _sort_masks(facets), relaxed)
        out.__dict__["minimal_nonface_masks"] = tuple(sorted(
            gen_masks, key=lambda m: _mask_key(m)))
        return out

    # -- basic views -------------------------------------------------------

    @property
    def n(self) -> int:
        return len(self.vertices)

    def labels_of(self, mask: int) -> tuple[str, ...]:
        return tuple(self.vertices[i] for i in _bits(mask))

    def mask_of(self, labels) -> int:
        m = 0
        for lab in labels:
            i = self._index.get(lab)
            if i is None:
                raise ValueError(f"unknown label {lab!r}")
            m |= 1 << i
        return m

    @cached_property
    def _index(self) -> dict:
        return {v: i for i, v in enumerate(self.vertices)}

    @property
    def facets(self) -> tuple[tuple[str, ...], ...]:
        return tuple(self.labels_of(m) for m in self.facet_masks)

    def __eq__(self, other):
        if not isinstance(other, SimplicialComplex):
            return NotImplemented
        return (self.vertices == other.vertices
                and self.facet_masks == other.facet_masks)

    def __hash__(self):
        return hash((self.vertices, self.facet_masks))

    def __repr__(self):
        return (f"SimplicialComplex(vertices={list(self.vertices)}, "
                f"facets={[list(f) for f in self.facets]})")

    # -- face enumeration --------------------------------------------------

    def _check_enumeration_guard(self):
        if self.n > VERTEX_LIMIT:
            raise GuardError("vertex_count",
                             f"{self.n} vertices exceed the {VERTEX_LIMIT} limit")

    @cached_property
    def face_masks(self) -> frozenset:
        self._check_enumeration_guard()
        return frozenset(_downward_closure(self.facet_masks))

    def is_face(self, labels) -> bool:
        m = self.mask_of(labels)
        return any(m & f == m for f in self.facet_masks)

    @property
    def dimension(self) -> int:
        return max(m.bit_count() for m in self.facet_masks) - 1

    def f_vector(self) -> tuple[int, ...]:
        """(f_-1, f_0, ..., f_{dim}); f_-1 = 1 counts the empty face."""
        counts = [0] * (self.dimension + 2)
        for m in self.face_masks:
            counts[m.bit_count()] += 1
        return tuple(counts)

    def euler_characteristics(self) -> tuple[int, int]:
        """(chi, chi_reduced): alternating face-count sum and chi - 1."""
        f = self.f_vector()
        chi = sum((-1) ** i * f[i + 1] for i in range(len(f) - 1))
        return chi, chi - 1

    @cached_property
    def minimal_nonface_masks(self) -> tuple[int, ...]:
        faces = self.face_masks
        full = (1 << self.n) - 1
        found = set()
        for m in faces:
            free = full & ~m
            for v in _bits(free):
                cand = m | (1 << v)
                if cand in found or cand in faces:
                    continue
                if all(cand & ~(1 << u) in faces for u in _bits(cand)):
                    found.add(cand)
        return tuple(sorted(found, key=_mask_key))

    def minimal_nonfaces(self) -> NonfaceFamily:
        return NonfaceFamily(tuple(self.labels_of(m)
                                   for m in self.minimal_nonface_masks))

    # -- derived complexes ---------------------------------------------------

    def skeleton(self, k: int) -> "SimplicialComplex":
        """Subcomplex of the faces of dimension at most k."""
        if k < 0 or k > self.dimension:
            raise ValueError(f"skeleton index {k} outside 0..{self.dimension}")
        kept = []
        for m in self.facet_masks:
            if m.bit_count() <= k + 1:
                kept.append(m)
            else:
                kept.extend(_k_subsets(m, k + 1))
        return SimplicialComplex(self.vertices,
                                 _sort_masks(_antichain_max(kept)), self.relaxed)

    def add_face(self, labels) -> "SimplicialComplex":
        """Complex with one additional face (plus its subsets, vacuously)."""
        m = self.mask_of(labels)
        return SimplicialComplex(
            self.vertices,
            _sort_masks(_antichain_max(list(self.facet_masks) + [m])),
            self.relaxed)


def _canonical_labels(labels) -> tuple[str, ...]:
    labs = list(labels)
    if len(set(labs)) != len(labs):
        dup = sorted({x for x in labs if labs.count(x) > 1})
        raise ValueError(f"duplicate labels: {dup}")
    for lab in labs:
        if not isinstance(lab, str):
            raise ValueError(f"labels must be strings, got {lab!r}")
    return tuple(sorted(labs))


def _mask_key(mask: int) -> tuple:
    return tuple(_bits(mask))


def _sort_masks(masks) -> tuple[int, ...]:
    return tuple(sorted(masks, key=_mask_key))


def _k_subsets(mask: int, k: int):
    verts = list(_bits(mask))
    for combo in combinations(verts, k):
        m = 0
        for v in combo:
            m |= 1 << v
        yield m


def _maximal_generator_free(n: int, gen_masks) -> list[int]:
    """All maximal subsets of [n] containing no generator.

    Branching dualization: from a set containing some generator, recurse on
    removing each of that generator's vertices.  Visited-set memoization keeps
    the walk polynomial in the output at desk scale.
    """
    full = (1 << n) - 1
    found = []
    seen = set()
    stack = [full]
    while stack:
        m = stack.pop()
        if m in seen:
            continue
        seen.add(m)
        hit = -1
        for g in gen_masks:
            if g & m == g:
                hit = g
                break
        if hit < 0:
            found.append(m)
        else:
            for v in _bits(hit):
                stack.append(m & ~(1 << v))
    return _antichain_max(found)


def join(s1: SimplicialComplex, s2: SimplicialComplex) -> SimplicialComplex:
    """Join of two complexes on disjoint label sets: faces are unions F1 | F2."""
    overlap = set(s1.vertices) & set(s2.vertices)
    if overlap:
        raise ValueError(f"label collision in join: {sorted(overlap)}")
    labels = s1.vertices + s2.vertices
    facets = [tuple(f1) + tuple(f2) for f1 in s1.facets for f2 in s2.facets]
    return SimplicialComplex.from_facets(labels, facets,
                                         relaxed=s1.relaxed or s2.relaxed)


def points_complex(labels) -> SimplicialComplex:
    """The 0-dimensional complex on the given vertices."""
    return SimplicialComplex.from_facets(labels, [[lab] for lab in labels])


def fresh_label(existing, base: str) -> str:
    """A label not in ``existing``: the base itself, else base0, base1, ..."""
    if base not in existing:
        return base
    k = 0
    while f"{base}{k}" in existing:
        k += 1
    return f"{base}{k}"
