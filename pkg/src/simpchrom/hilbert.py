"""Stanley-Reisner Hilbert-series numerators and f/h-vector conversions.

The numerator K(t) over (1-t)^n is computed two independent ways: by
inclusion-exclusion over generator subsets (union of squarefree supports =
lcm), and from the h-vector as h(t)*(1-t)^(n-d).  The two must agree exactly;
keeping them as separate provenance-tagged values is deliberate, because the
h-polynomial and the K-polynomial coincide only when n = d.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb

from .complexes import NonfaceFamily, SimplicialComplex
from .polynomials import IntPolynomial
from .report import GuardError

GENERATOR_LIMIT = 25
DEGREE_LIMIT = 12

INCLUSION_EXCLUSION = "inclusion_exclusion"
FROM_H = "from_h"


@dataclass(frozen=True)
class KPolynomial:
    """Hilbert-series numerator with a provenance marker."""

    poly: IntPolynomial
    source: str

    def __post_init__(self):
        if self.source not in (INCLUSION_EXCLUSION, FROM_H):
            raise ValueError(f"unknown source {self.source!r}")


@dataclass(frozen=True)
class HVector:
    """Entries h_0..h_d with d = dim + 1."""

    entries: tuple[int, ...]

    @property
    def d(self) -> int:
        return len(self.entries) - 1

    def polynomial(self) -> IntPolynomial:
        return IntPolynomial(self.entries)


def numerator_by_inclusion_exclusion(family: NonfaceFamily) -> KPolynomial:
    """K(t) = sum over generator subsets I of (-1)^|I| t^|union of I|."""
    gens = family.as_sets()
    r = len(gens)
    if r > GENERATOR_LIMIT:
        raise GuardError("generator_count",
                         f"{r} generators exceed the {GENERATOR_LIMIT} limit")
    ground = sorted(set().union(*gens)) if gens else []
    index = {v: i for i, v in enumerate(ground)}
    masks = []
    for g in family.generators:
        m = 0
        for lab in g:
            m |= 1 << index[lab]
        masks.append(m)
    coeff = [0] * (len(ground) + 1)
    coeff[0] += 1

    def walk(start, union, sign):
        nsign = -sign
        for j in range(start, r):
            nu = union | masks[j]
            coeff[nu.bit_count()] += nsign
            walk(j + 1, nu, nsign)

    walk(0, 0, 1)
    return KPolynomial(IntPolynomial(coeff), INCLUSION_EXCLUSION)


def h_from_f(f, d: int) -> tuple[int, ...]:
    """h_j = sum_i (-1)^(j-i) C(d-i, j-i) f_{i-1} for j = 0..d."""
    f = tuple(f)
    if not f or f[0] != 1:
        raise ValueError("f-vector must start with f_-1 = 1")
    if len(f) != d + 1:
        raise ValueError(f"f-vector of length {len(f)} inconsistent with d = {d}")
    return tuple(
        sum((-1) ** (j - i) * comb(d - i, j - i) * f[i] for i in range(j + 1))
        for j in range(d + 1))


def f_from_h(h, d: int) -> tuple[int, ...]:
    """Inverse transform: f_{j-1} = sum_i C(d-i, j-i) h_i."""
    h = tuple(h)
    if len(h) != d + 1:
        raise ValueError(f"h-vector of length {len(h)} inconsistent with d = {d}")
    return tuple(
        sum(comb(d - i, j - i) * h[i] for i in range(j + 1))
        for j in range(d + 1))


def h_vector(S: SimplicialComplex) -> HVector:
    f = S.f_vector()
    h = h_from_f(f, S.dimension + 1)
    if S.facet_masks != (0,):
        if h[0] != 1:
            raise AssertionError(f"h_0 = {h[0]} for a nonempty complex")
        if sum(h) != f[-1]:
            raise AssertionError("h-vector sum does not match the top face count")
    return HVector(h)


def numerator_from_h(S: SimplicialComplex) -> KPolynomial:
    """K(t) = h(t) * (1-t)^(n-d); must equal the inclusion-exclusion route."""
    h = h_vector(S)
    exponent = S.n - (S.dimension + 1)
    one_minus_t = IntPolynomial((1, -1))
    return KPolynomial(h.polynomial() * one_minus_t ** exponent, FROM_H)


def standard_monomial_count(S: SimplicialComplex, m: int) -> int:
    """Monomials of degree m whose support is a face: the degree-m Hilbert value.

    Counts C(m-1, |F|-1) per nonempty face F, plus the empty face at m = 0.
    This is the independent series oracle for K(t)/(1-t)^n.
    """
    if m < 0:
        raise ValueError("degree must be nonnegative")
    if m > DEGREE_LIMIT:
        raise GuardError("monomial_degree", f"degree {m} exceeds {DEGREE_LIMIT}")
    if m == 0:
        return 1
    return sum(comb(m - 1, k - 1)
               for k in (mask.bit_count() for mask in S.face_masks) if k >= 1)


def series_coefficients(S: SimplicialComplex, upto: int) -> list[int]:
    """Coefficients 0..upto of K(t)/(1-t)^n expanded as a power series."""
    k = numerator_by_inclusion_exclusion(S.minimal_nonfaces()).poly
    n = S.n

    def ways(j):  # coefficient of t^j in 1/(1-t)^n
        return 1 if j == 0 else comb(n - 1 + j, j)

    return [
        sum(k[s] * ways(m - s) for s in range(min(m, k.degree) + 1))
        for m in range(upto + 1)
    ]
