"""Exact certification of the cone-Lorentzian property.

A degree-d homogeneous polynomial is cone-Lorentzian when every d-fold
directional derivative along cone directions is positive, and the Hessian
of every (d-2)-fold derivative has exactly one positive eigenvalue.  Both
conditions are decided here in exact rational arithmetic: the eigenvalue
sign counts come from the division-free characteristic polynomial of the
matrix plus Descartes' rule (exact on real-rooted polynomials).
"""

import random
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations_with_replacement
from typing import Optional

from . import cone, poset, subsets
from .errors import (
    DirectionNotInCone,
    DimensionMismatch,
    InternalCheckError,
    NonpositiveValue,
    UnsupportedSupport,
)
from .intervalpoly import (
    cache_for,
    full_contraction,
    interval_polynomial,
    modular_shift_invariance,
)
from .multipoly import (
    SymMatrix,
    dir_derivative,
    gradient_at,
    hessian_at,
    hessian_of_quadratic,
    partial,
)


class InertiaTriple(tuple):
    """Counts (n_plus, n_zero, n_minus) of eigenvalue signs."""

    def __new__(cls, n_plus, n_zero, n_minus):
        return super().__new__(cls, (n_plus, n_zero, n_minus))

    @property
    def n_plus(self):
        return self[0]

    @property
    def n_zero(self):
        return self[1]

    @property
    def n_minus(self):
        return self[2]


def charpoly_descending(A):
    """Coefficients of det(tI - A) by the Berkowitz method, leading first.

    Division free, so it stays exact over any commutative ring; here the
    entries are rationals anyway.
    """
    if isinstance(A, SymMatrix):
        A = A.to_lists()
    n = len(A)
    coeffs = [Fraction(1)]
    for i in range(n):
        items = [Fraction(1), -Fraction(A[i][i])]
        if i:
            row = [Fraction(A[i][j]) for j in range(i)]
            vec = [Fraction(A[j][i]) for j in range(i)]
            for k in range(i):
                items.append(-sum(r * v for r, v in zip(row, vec)))
                if k < i - 1:
                    vec = [
                        sum(Fraction(A[r][c]) * vec[c] for c in range(i))
                        for r in range(i)
                    ]
        new = []
        for s in range(i + 2):
            acc = Fraction(0)
            for j, item in enumerate(items):
                if j > s:
                    break
                if s - j < len(coeffs):
                    acc += item * coeffs[s - j]
            new.append(acc)
        coeffs = new
    return coeffs


def inertia(A):
    """Exact eigenvalue sign counts of a symmetric rational matrix.

    The zero count is the multiplicity of the zero root of the
    characteristic polynomial; the positive count is the number of sign
    variations among the remaining coefficients, which Descartes' rule
    makes exact because symmetric matrices are real rooted.
    """
    if not isinstance(A, SymMatrix):
        A = SymMatrix(A)
    n = A.n
    if n == 0:
        return InertiaTriple(0, 0, 0)
    coeffs = charpoly_descending(A)
    n_zero = 0
    while coeffs and coeffs[-1] == 0:
        coeffs.pop()
        n_zero += 1
    signs = [1 if c > 0 else -1 for c in coeffs if c != 0]
    n_plus = sum(1 for a, b in zip(signs, signs[1:]) if a != b)
    return InertiaTriple(n_plus, n_zero, n - n_plus - n_zero)


def is_irreducible_nonneg_offdiag(A):
    """Off-diagonal entries nonnegative and the graph of strictly positive
    off-diagonal entries connected."""
    if not isinstance(A, SymMatrix):
        A = SymMatrix(A)
    n = A.n
    for i in range(n):
        for j in range(i + 1, n):
            if A[i, j] < 0:
                return False
    if n <= 1:
        return True
    seen = {0}
    queue = [0]
    while queue:
        cur = queue.pop()
        for j in range(n):
            if j != cur and j not in seen and A[cur, j] > 0:
                seen.add(j)
                queue.append(j)
    return len(seen) == n


# -- sampling ---------------------------------------------------------------


def _perturbed_direction(base, coords, rng):
    """Canonical interior point plus a small rational perturbation.

    The canonical point has submodularity margin at least 2 on every
    incomparable pair, so perturbations bounded by 1/4 per coordinate stay
    strictly submodular.
    """
    delta = cone.IntervalVector(
        coords, [Fraction(rng.randint(-16, 16), 64) for _ in range(coords.m)]
    )
    candidate = base + delta
    if not cone.is_strictly_submodular(candidate):
        raise InternalCheckError("perturbed direction left the cone")
    return candidate


def sample_direction_tuples(coords, d, count, seed):
    """Seeded direction tuples: one all-canonical tuple, then perturbations."""
    rng = random.Random(seed)
    base = cone.canonical_interior_point(coords)
    out = []
    for idx in range(count):
        if idx == 0:
            out.append(tuple(base for _ in range(d)))
        else:
            out.append(
                tuple(_perturbed_direction(base, coords, rng) for _ in range(d))
            )
    return out


# -- certificates -------------------------------------------------------------


@dataclass
class SampleResult:
    directions: tuple
    contraction: Fraction
    hessian_inertia: Optional[InertiaTriple]
    passed: bool

    def to_json_obj(self):
        return {
            "directions": [v.to_json_obj() for v in self.directions],
            "contraction": str(self.contraction),
            "inertia": list(self.hessian_inertia)
            if self.hessian_inertia is not None
            else None,
            "passed": self.passed,
        }


@dataclass
class LorentzianCertificate:
    K: int
    L: int
    degree: int
    seed: Optional[int]
    samples: list
    verdict: bool

    def to_json_obj(self):
        return {
            "interval": {
                "K": subsets.elements(self.K),
                "L": subsets.elements(self.L),
            },
            "degree": self.degree,
            "seed": self.seed,
            "samples": [s.to_json_obj() for s in self.samples],
            "verdict": self.verdict,
        }


def _tuple_result(f, directions):
    """Positivity of the full contraction, and when deg >= 2 the inertia of
    the Hessian after contracting along all but the first two directions."""
    d = f.degree
    if len(directions) != d:
        raise DimensionMismatch(f"need {d} directions, got {len(directions)}")
    value = full_contraction(f, directions)
    result_inertia = None
    ok = value > 0
    if d >= 2:
        g = f
        for v in directions[2:]:
            g = dir_derivative(g, v)
        result_inertia = inertia(hessian_of_quadratic(g))
        ok = ok and result_inertia.n_plus == 1
    return value, result_inertia, ok


def certify_cone_lorentzian(P, K, L, samples=20, seed=0, directions=None):
    """Sampled certification of the interval polynomial on its cone.

    Directions may be supplied explicitly as tuples of interval vectors;
    every direction is membership-checked against the strictly submodular
    cone.  The certificate records each contraction value and inertia.
    """
    d = P.interval_degree(K, L)
    coords = cone.IntervalCoords(K, L)
    if directions is None:
        tuples = sample_direction_tuples(coords, d, samples, seed)
        recorded_seed = seed
    else:
        tuples = [tuple(t) for t in directions]
        recorded_seed = None
    for idx, tup in enumerate(tuples):
        if len(tup) != d:
            raise DimensionMismatch(
                f"tuple {idx} has {len(tup)} directions, interval degree is {d}"
            )
        for v in tup:
            if v.coords != coords:
                raise DirectionNotInCone(
                    f"tuple {idx}: direction lives on a different interval"
                )
            if not cone.is_strictly_submodular(v):
                raise DirectionNotInCone(
                    f"tuple {idx}: direction is not strictly submodular"
                )
    f = interval_polynomial(P, K, L)
    results = []
    for tup in tuples:
        value, triple, ok = _tuple_result(f, tup)
        results.append(SampleResult(tup, value, triple, ok))
    verdict = all(r.passed for r in results)
    return LorentzianCertificate(K, L, d, recorded_seed, results, verdict)


# -- orthant Lorentzian test ---------------------------------------------------


def is_lorentzian_orthant(f):
    """Lorentzian test on the positive orthant for full-simplex supports.

    Checks positive coefficients and that the Hessian of every (d-2)-fold
    partial derivative has at most one positive eigenvalue.  Inputs whose
    Hessians pass but whose support misses part of the degree-d simplex are
    rejected as unsupported rather than judged, since deciding those would
    need the general support condition this package does not implement.
    """
    if f.is_zero():
        return True
    if any(c < 0 for c in f.terms.values()):
        return False
    d = f.degree
    n = len(f.vars)
    if d >= 2:
        for combo in combinations_with_replacement(range(n), d - 2):
            g = f
            for idx in combo:
                g = partial(g, f.vars[idx])
            if g.is_zero():
                continue
            if inertia(hessian_of_quadratic(g)).n_plus > 1:
                return False
    full_support = {
        tuple(
            sum(1 for c in combo if c == i) for i in range(n)
        )
        for combo in combinations_with_replacement(range(n), d)
    }
    if set(f.terms) != full_support:
        raise UnsupportedSupport(
            "support is not the full degree simplex; cannot decide"
        )
    return True


def product_check(f, g, sample_tuples):
    """The product passes the same sampled contraction and inertia checks."""
    h = f * g
    if h.is_zero():
        return True
    for tup in sample_tuples:
        _, _, ok = _tuple_result(h, tup)
        if not ok:
            return False
    return True


def hessian_one_positive_equivalence(g, point):
    """At a point where g is positive: the Hessian having exactly one
    positive eigenvalue must coincide with negative semidefiniteness of
    d*g*H - (d-1)*grad*grad^T.  Returns whether the two sides agree."""
    value = g.evaluate(point)
    if value <= 0:
        raise NonpositiveValue(f"g(point) = {value} is not positive")
    d = g.degree
    H = hessian_at(g, point)
    side_a = inertia(H).n_plus == 1
    grad = gradient_at(g, point)
    n = len(grad)
    rows = [
        [
            d * value * H[i, j] - (d - 1) * grad[i] * grad[j]
            for j in range(n)
        ]
        for i in range(n)
    ]
    side_c = inertia(SymMatrix(rows)).n_plus == 0
    return side_a == side_c


# -- hypothesis ladder ----------------------------------------------------------


@dataclass
class HypothesisResult:
    status: str  # "pass" | "fail" | "skipped"
    witness: Optional[str] = None

    def to_json_obj(self):
        return {"status": self.status, "witness": self.witness}


@dataclass
class HypothesesReport:
    K: int
    L: int
    degree: int
    results: dict

    def all_evaluated_pass(self):
        return all(r.status != "fail" for r in self.results.values())

    def to_json_obj(self):
        return {
            "interval": {
                "K": subsets.elements(self.K),
                "L": subsets.elements(self.L),
            },
            "degree": self.degree,
            "hypotheses": {k: r.to_json_obj() for k, r in self.results.items()},
        }


def hypotheses_report(P, K, L, samples=10, seed=0):
    """Per-hypothesis report for the sufficiency ladder behind certification:
    modular shift invariance, positive contractions, irreducible Hessians
    with nonnegative off-diagonal, and certified derivative polynomials."""
    d = P.interval_degree(K, L)
    coords = cone.IntervalCoords(K, L)
    cache = cache_for(P)
    f = cache.polynomial(K, L)
    results = {}

    invariant = modular_shift_invariance(
        P, K, L, trials=samples, seed=seed, require_balanced=False
    )
    results["modular_shift_invariance"] = HypothesisResult(
        "pass" if invariant else "fail",
        None if invariant else "found x, w with pol(x + w) != pol(x)",
    )

    tuples = sample_direction_tuples(coords, d, samples, seed) if d >= 1 else []
    if d >= 1:
        witness = None
        for idx, tup in enumerate(tuples):
            if full_contraction(f, tup) <= 0:
                witness = f"tuple {idx} has nonpositive contraction"
                break
        results["contraction_positivity"] = HypothesisResult(
            "pass" if witness is None else "fail", witness
        )
    else:
        results["contraction_positivity"] = HypothesisResult("skipped")

    if d >= 2:
        witness = None
        for idx, tup in enumerate(tuples):
            g = f
            for v in tup[: d - 2]:
                g = dir_derivative(g, v)
            H = hessian_of_quadratic(g)
            if not is_irreducible_nonneg_offdiag(H):
                parts = poset.disconnection_witness(P, K, L)
                if parts is not None:
                    comp = "{" + "; ".join(
                        "{" + subsets.format_elements(s) + "}" for s in parts[0]
                    ) + "}"
                    witness = (
                        f"tuple {idx}: Hessian reducible, comparability "
                        f"component {comp} is isolated"
                    )
                else:
                    witness = f"tuple {idx}: Hessian fails the sign or connectivity test"
                break
        results["hessian_irreducible_nonneg"] = HypothesisResult(
            "pass" if witness is None else "fail", witness
        )
    else:
        results["hessian_irreducible_nonneg"] = HypothesisResult("skipped")

    if d >= 2:
        witness = None
        truncated = [tup[: d - 1] for tup in tuples]
        for F in f.vars:
            g = partial(f, F)
            for idx, tup in enumerate(truncated):
                _, _, ok = _tuple_result(g, tup)
                if not ok:
                    witness = (
                        "derivative at {{{}}} fails on tuple {}".format(
                            subsets.format_elements(F), idx
                        )
                    )
                    break
            if witness:
                break
        results["derivatives_certified"] = HypothesisResult(
            "pass" if witness is None else "fail", witness
        )
    else:
        results["derivatives_certified"] = HypothesisResult("skipped")

    return HypothesesReport(K, L, d, results)
