"""Companion-set assignments, the auxiliary complex, lifts, and identity checks.

Every minimal nonface sigma_i of a complex S gets a companion set alpha_i
with one fewer element.  When the sizing identity |union sigma_I| - c(I) =
|union alpha_I| holds for every subset I, the chromatic polynomial of S is
the reversed Hilbert numerator of the auxiliary complex T whose minimal
nonfaces are the alpha_i.  The checks below measure that identity, the
intersection condition that is supposed to imply it, and the two lift
constructions that manufacture complexes satisfying it.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations, product
from math import prod

from .complexes import NonfaceFamily, SimplicialComplex, fresh_label
from .chromatic import chromatic_polynomial
from .hilbert import h_vector, numerator_by_inclusion_exclusion
from .polynomials import IntPolynomial, brenti_criterion, reciprocal
from .report import CheckReport, GuardError, NOT_APPLICABLE, report

LITERAL = "literal"
STRICT = "strict"

SUBSET_SCAN_LIMIT = 20
SEARCH_SPACE_LIMIT = 10 ** 6


@dataclass(frozen=True)
class AlphaAssignment:
    """Ordered pairs (sigma_i, alpha_i); |alpha_i| = |sigma_i| - 1 throughout.

    Input order is preserved: witnesses are reported against it.
    """

    pairs: tuple[tuple[frozenset, frozenset], ...]

    def __post_init__(self):
        norm = []
        for sigma, alpha in self.pairs:
            s, a = frozenset(sigma), frozenset(alpha)
            if len(a) != len(s) - 1:
                raise ValueError(
                    f"|alpha| = {len(a)} != |sigma| - 1 = {len(s) - 1} "
                    f"for sigma {sorted(s)}")
            norm.append((s, a))
        object.__setattr__(self, "pairs", tuple(norm))

    def __len__(self):
        return len(self.pairs)

    @property
    def sigmas(self) -> tuple[frozenset, ...]:
        return tuple(s for s, _ in self.pairs)

    @property
    def alphas(self) -> tuple[frozenset, ...]:
        return tuple(a for _, a in self.pairs)


def _union(sets, idx) -> frozenset:
    out = frozenset()
    for i in idx:
        out |= sets[i]
    return out


def _subsets_by_size(r: int, smallest: int = 1):
    for k in range(smallest, r + 1):
        yield from combinations(range(r), k)


def check_intersection_property(assign: AlphaAssignment,
                                mode: str = LITERAL) -> CheckReport:
    """The companion-set intersection condition, in two quantifier readings.

    LITERAL applies the intersection-cardinality clause only for |I| >= 2;
    STRICT applies it for all |I| >= 1, the reading an induction on subset
    size needs for its base case.  Both modes always require alpha_I and
    alpha_p disjoint whenever sigma_I and sigma_p are.
    """
    if mode not in (LITERAL, STRICT):
        raise ValueError(f"unknown mode {mode!r}")
    sigmas, alphas = assign.sigmas, assign.alphas
    r = len(assign)
    for idx in _subsets_by_size(r):
        sig_i = _union(sigmas, idx)
        alf_i = _union(alphas, idx)
        members = set(idx)
        for p in range(r):
            if p in members:
                continue
            inter_s = sig_i & sigmas[p]
            inter_a = alf_i & alphas[p]
            if not inter_s:
                if inter_a:
                    return report(
                        "intersection_property", False,
                        witness={"I": _names(sigmas, idx), "p": _name(sigmas[p]),
                                 "clause": "disjointness",
                                 "alpha_overlap": sorted(inter_a)},
                        mode=mode)
            elif mode == STRICT or len(idx) >= 2:
                if len(inter_a) != len(inter_s) - 1:
                    return report(
                        "intersection_property", False,
                        witness={"I": _names(sigmas, idx), "p": _name(sigmas[p]),
                                 "clause": "cardinality",
                                 "alpha_intersection": len(inter_a),
                                 "sigma_intersection": len(inter_s)},
                        mode=mode)
    return report("intersection_property", True, mode=mode)


def _name(s) -> list:
    return sorted(s)


def _names(sets, idx) -> list:
    return [sorted(sets[i]) for i in idx]


def check_target_invariant(assign: AlphaAssignment) -> CheckReport:
    """|union sigma_I| - c(I) = |union alpha_I| for every nonempty I."""
    r = len(assign)
    if r > SUBSET_SCAN_LIMIT:
        raise GuardError("assignment_size",
                         f"{r} pairs exceed the {SUBSET_SCAN_LIMIT} scan limit")
    sigmas, alphas = assign.sigmas, assign.alphas
    overlap = [[bool(sigmas[i] & sigmas[j]) for j in range(r)] for i in range(r)]
    for idx in _subsets_by_size(r):
        c = _component_count_indices(idx, overlap)
        lhs = len(_union(sigmas, idx)) - c
        rhs = len(_union(alphas, idx))
        if lhs != rhs:
            return report(
                "target_invariant", False,
                witness={"I": _names(sigmas, idx), "sigma_union_size":
                         len(_union(sigmas, idx)), "components": c,
                         "alpha_union_size": rhs},
            )
    return report("target_invariant", True)


def _component_count_indices(idx, overlap) -> int:
    idx = list(idx)
    parent = {i: i for i in idx}

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for a in range(len(idx)):
        for b in range(a + 1, len(idx)):
            if overlap[idx[a]][idx[b]]:
                ra, rb = find(idx[a]), find(idx[b])
                if ra != rb:
                    parent[rb] = ra
    return len({find(i) for i in idx})


def is_apex_assignment(assign: AlphaAssignment) -> bool:
    """Every sigma_i = alpha_i plus one shared vertex absent from all alphas.

    This pattern satisfies the target invariant at any size (every pair of
    sigmas meets at the apex, so c(I) = 1 and unions grow by exactly one),
    which matters when the assignment is too large for the exhaustive scan.
    """
    if not assign.pairs:
        return True
    common = frozenset.intersection(*assign.sigmas)
    for q in sorted(common):
        if all(q not in a and s == a | {q} for s, a in assign.pairs):
            return True
    return False


def search_alpha(family: NonfaceFamily) -> AlphaAssignment | None:
    """First remove-one-element companion assignment passing the invariant.

    Candidates for each alpha_i are the subsets of sigma_i with one element
    removed, tried in lexicographic order; returns None when no combination
    passes (NOT_FOUND is a value, not an error).
    """
    gens = [tuple(g) for g in family.generators]
    if gens and prod(len(g) for g in gens) > SEARCH_SPACE_LIMIT:
        raise GuardError("search_space",
                         f"product of generator sizes exceeds {SEARCH_SPACE_LIMIT}")
    candidate_lists = [
        sorted((tuple(sorted(set(g) - {x})) for x in g))
        for g in gens
    ]
    for choice in product(*candidate_lists):
        assign = AlphaAssignment(tuple(
            (frozenset(g), frozenset(a)) for g, a in zip(gens, choice)))
        if check_target_invariant(assign).passed:
            return assign
    return None


def auxiliary_complex(assign: AlphaAssignment) -> SimplicialComplex:
    """Complex whose minimal nonfaces are the alpha sets, on their union.

    Built relaxed: a single-element alpha makes its vertex a formal nonface
    vertex, which still contributes to the numerator's t-power bookkeeping.
    """
    alphas = assign.alphas
    family = NonfaceFamily(tuple(tuple(sorted(a)) for a in alphas))
    ground = sorted(set().union(*alphas)) if alphas else []
    return SimplicialComplex.from_minimal_nonfaces(ground, family, relaxed=True)


def lift_with_apex(T: SimplicialComplex):
    """One fresh apex vertex adjoined to every minimal nonface of T.

    Returns (S, assignment); the induced assignment always satisfies the
    target invariant since every lifted nonface shares the apex.
    """
    q = fresh_label(set(T.vertices), "q")
    alphas = [frozenset(g) for g in T.minimal_nonfaces().generators]
    sigmas = [a | {q} for a in alphas]
    S = SimplicialComplex.from_minimal_nonfaces(
        list(T.vertices) + [q], [tuple(sorted(s)) for s in sigmas])
    return S, AlphaAssignment(tuple(zip(sigmas, alphas)))


def lift_disjoint(T: SimplicialComplex):
    """One fresh vertex per minimal nonface; requires pairwise-disjoint nonfaces."""
    alphas = [frozenset(g) for g in T.minimal_nonfaces().generators]
    for i in range(len(alphas)):
        for j in range(i + 1, len(alphas)):
            if alphas[i] & alphas[j]:
                raise ValueError(
                    f"nonfaces {sorted(alphas[i])} and {sorted(alphas[j])} "
                    "are not disjoint")
    used = set(T.vertices)
    sigmas = []
    for k, a in enumerate(alphas):
        q = fresh_label(used, f"q{k + 1}")
        used.add(q)
        sigmas.append(a | {q})
    S = SimplicialComplex.from_minimal_nonfaces(
        sorted(used), [tuple(sorted(s)) for s in sigmas])
    return S, AlphaAssignment(tuple(zip(sigmas, alphas)))


def verify_main_theorem(S: SimplicialComplex, assign: AlphaAssignment) -> CheckReport:
    """Is chi_c(S) the reversed numerator of the auxiliary complex?

    Check (a) compares against the K-polynomial of T: the identity the
    subset-term match actually yields.  Check (b) compares against the
    h-polynomial instead; it coincides with (a) only when T's vertex count
    equals dim T + 1, and is recorded informationally.
    """
    sig_family = {frozenset(g) for g in S.minimal_nonfaces().generators}
    if set(assign.sigmas) != sig_family:
        raise ValueError("assignment sigmas differ from the minimal nonfaces of S")
    lhs = chromatic_polynomial(S)
    T = auxiliary_complex(assign)
    k_t = numerator_by_inclusion_exclusion(T.minimal_nonfaces()).poly
    h_t = h_vector(T)
    reversed_lhs = reciprocal(lhs, S.n)
    check_a = reversed_lhs == k_t
    check_b = reversed_lhs == h_t.polynomial()
    return CheckReport(
        "main_theorem", "PASS" if check_a else "FAIL",
        None if check_a else {
            "chromatic_reversed": list(reversed_lhs.coeffs),
            "numerator": list(k_t.coeffs)},
        {
            "check_a_numerator_form": check_a,
            "check_b_h_form": check_b,
            "chromatic": list(lhs.coeffs),
            "numerator_T": list(k_t.coeffs),
            "h_T": list(h_t.entries),
            "n_S": S.n,
            "n_T": T.n,
            "d_T": h_t.d,
            "h_equals_numerator_regime": T.n == h_t.d,
        })


def verify_constant_component(S: SimplicialComplex, a: int) -> CheckReport:
    """c(I) = a for every nonempty I, then the shifted-numerator identity.

    The identity chi_c(S) - t^n = t^(n+a) * (K(1/t) - 1) is checked exactly
    through a degree-(n+a) coefficient reversal, so the Laurent tail must
    cancel to machine-checkable zero.
    """
    gens = S.minimal_nonfaces()
    r = len(gens)
    if r > SUBSET_SCAN_LIMIT:
        raise GuardError("nonface_count",
                         f"{r} nonfaces exceed the {SUBSET_SCAN_LIMIT} scan limit")
    sets = gens.as_sets()
    overlap = [[bool(sets[i] & sets[j]) for j in range(r)] for i in range(r)]
    for idx in _subsets_by_size(r):
        c = _component_count_indices(idx, overlap)
        if c != a:
            return report(
                "constant_component", False,
                witness={"I": _names(sets, idx), "components": c, "expected": a},
                a=a, identity_checked=False)
    lhs = chromatic_polynomial(S) - IntPolynomial.monomial(S.n)
    k = numerator_by_inclusion_exclusion(gens).poly
    rhs = reciprocal(k, S.n + a) - IntPolynomial.monomial(S.n + a)
    ok = lhs == rhs
    return report(
        "constant_component", ok,
        witness=None if ok else {"lhs": list(lhs.coeffs), "rhs": list(rhs.coeffs)},
        a=a, identity_checked=True,
        chromatic_tail=list(lhs.coeffs), numerator=list(k.coeffs))


def hilbert_polynomial_window(S: SimplicialComplex, a: int):
    """Window of K(t) from degree a upward, shifted to degree 0, under the
    Hilbert-polynomial criterion.

    Returns (P, report).  P = sum_r K[a+r] x^r.  An all-zero window is
    NOT_APPLICABLE rather than a verdict.
    """
    pre = verify_constant_component(S, a)
    if not pre.details.get("identity_checked", False):
        raise ValueError(f"constant-component check fails for a = {a}: {pre.witness}")
    k = numerator_by_inclusion_exclusion(S.minimal_nonfaces()).poly
    window = IntPolynomial(k.coeffs[a:]) if k.degree >= a else IntPolynomial.zero()
    if window.is_zero():
        rep = CheckReport("hilbert_window", NOT_APPLICABLE, None,
                          {"a": a, "window": [], "reason": "empty window"})
        return window, rep
    criterion = brenti_criterion(window)
    hypotheses = (all(c >= 1 for c in window.coeffs)
                  and window[1] >= 3 and window[2] >= 3)
    rep = CheckReport(
        "hilbert_window", criterion.verdict, criterion.witness,
        {"a": a, "window": list(window.coeffs),
         "hypotheses_hold": hypotheses,
         "numerator": list(k.coeffs)})
    return window, rep
