"""Degree-d(K,L) polynomials attached to intervals of a graded sub-poset.

The polynomial of an interval is 1 when the interval has rank one, and is
otherwise assembled recursively: each middle element contributes its
variable times the polynomials of the two sub-intervals it splits off,
composed with the linear projections onto those sub-intervals, and the sum
is divided by the interval degree.  Everything is exact.
"""

import random
from fractions import Fraction
from math import comb, factorial

from . import cone, matroid as matroid_mod, poset, subsets
from .errors import (
    ElementOutsideInterval,
    HasLoops,
    MismatchWithDirectComputation,
    NotAnInterval,
    PrerequisiteNotBalanced,
    WrongDegree,
)
from .multipoly import (
    MultiPoly,
    dir_derivative,
    partial,
    restrict_to_directions,
    substitute_affine,
)
from .unipoly import UniPoly


class IntervalPolynomials:
    """Memoized interval polynomials of one poset; variables are the open
    interval's elements in canonical order."""

    def __init__(self, P):
        self.poset = P
        self._memo = {}

    def polynomial(self, K, L):
        key = (K, L)
        if key in self._memo:
            return self._memo[key]
        if K == L:
            raise NotAnInterval("need K strictly below L")
        d = self.poset.interval_degree(K, L)
        flats = tuple(self.poset.open_interval(K, L))
        if d == 0:
            result = MultiPoly.constant((), 1)
        else:
            acc = MultiPoly.zero(flats, degree=d)
            for F in flats:
                low = self._lift_low(K, F, flats)
                high = self._lift_high(F, L, flats)
                acc = acc + MultiPoly.variable(flats, F) * low * high
            result = acc * Fraction(1, d)
        self._memo[key] = result
        return result

    def _lift_low(self, K, F, big_vars):
        """Polynomial of [K, F] composed with the projection onto (K, F),
        written in the big interval's variables."""
        inner = self.polynomial(K, F)
        span = Fraction((F & ~K).bit_count())
        matrix = []
        for S in inner.vars:
            row = [Fraction(0)] * len(big_vars)
            row[big_vars.index(S)] = Fraction(1)
            row[big_vars.index(F)] -= Fraction((S & ~K).bit_count()) / span
            matrix.append(row)
        return substitute_affine(inner, matrix, big_vars)

    def _lift_high(self, F, L, big_vars):
        inner = self.polynomial(F, L)
        span = Fraction((L & ~F).bit_count())
        matrix = []
        for S in inner.vars:
            row = [Fraction(0)] * len(big_vars)
            row[big_vars.index(S)] = Fraction(1)
            row[big_vars.index(F)] -= Fraction((L & ~S).bit_count()) / span
            matrix.append(row)
        return substitute_affine(inner, matrix, big_vars)

    def derivative_factor(self, K, F, L):
        """Product of the lifted sub-interval polynomials at a middle F;
        by the splitting identity this equals d/d t_F of the polynomial."""
        flats = tuple(self.poset.open_interval(K, L))
        return self._lift_low(K, F, flats) * self._lift_high(F, L, flats)


def cache_for(P):
    """The per-poset polynomial cache, created on first use."""
    found = getattr(P, "_interval_polys", None)
    if found is None:
        found = IntervalPolynomials(P)
        P._interval_polys = found
    return found


def interval_polynomial(P, K, L):
    return cache_for(P).polynomial(K, L)


def evaluate_at(P, K, L, point):
    """Exact value of the interval polynomial at a point covering its variables."""
    f = interval_polynomial(P, K, L)
    return f.evaluate(point)


def derivative_factorization_witness(P, K, L):
    """First middle element where d pol / d t_F differs from the product of
    the lifted sub-interval polynomials, or None."""
    cache = cache_for(P)
    f = cache.polynomial(K, L)
    for F in P.open_interval(K, L):
        if partial(f, F) != cache.derivative_factor(K, F, L):
            return F
    return None


def derivative_factorization_holds(P, K, L):
    return derivative_factorization_witness(P, K, L) is None


def _random_fraction(rng, spread=60, max_den=6):
    return Fraction(rng.randint(-spread, spread), rng.randint(1, max_den))


def modular_shift_invariance(P, K, L, trials=50, seed=0, require_balanced=True):
    """pol(x + w) == pol(x) for random rational x and random modular w."""
    if require_balanced and not poset.is_balanced(P):
        raise PrerequisiteNotBalanced("poset is not balanced")
    f = interval_polynomial(P, K, L)
    coords = cone.IntervalCoords(K, L)
    span = (L & ~K).bit_count()
    basis = cone.modular_basis(coords).vectors if span >= 2 else []
    rng = random.Random(seed)
    for _ in range(trials):
        x = {F: _random_fraction(rng) for F in f.vars}
        w = cone.IntervalVector.zero(coords)
        for vec in basis:
            w = w + vec.scale(Fraction(rng.randint(-12, 12), rng.randint(1, 4)))
        shifted = {F: x[F] + w[F] for F in f.vars}
        if f.evaluate(shifted) != f.evaluate(x):
            return False
    return True


def alpha_beta_restriction(P, K, L, i):
    """d! times the polynomial restricted to the span of the alpha and beta
    boundary points, as an exact bivariate polynomial in s and t.

    Cross-checked against the binomial-Mobius expansion over the elements
    below L that avoid i; a mismatch is a bug signal.
    """
    coords = cone.IntervalCoords(K, L)
    if not ((L >> i) & 1) or ((K >> i) & 1):
        raise ElementOutsideInterval(f"element {i} is not in L \\ K")
    d = P.interval_degree(K, L)
    f = interval_polynomial(P, K, L)
    restricted = restrict_to_directions(
        f, [cone.alpha_vector(coords), cone.beta_vector(coords)], ("s", "t")
    )
    lhs = restricted * factorial(d)

    table = poset.mobius(P)
    terms = {}
    for F in P.interval(K, L):
        if F == L or ((F >> i) & 1):
            continue
        r_low = P.interval_rank(K, F)
        d_high = P.interval_degree(F, L)
        key = (d_high, r_low)  # exponents of (s, t)
        terms[key] = terms.get(key, Fraction(0)) + comb(d, r_low) * abs(
            table.mu(K, F)
        )
    rhs = MultiPoly(("s", "t"), terms, degree=d)
    if lhs != rhs:
        raise MismatchWithDirectComputation(
            "bivariate restriction disagrees with the Mobius expansion"
        )
    return lhs


def normalized_profile(P, K, L, i):
    """Coefficients a_k with d! * pol(s a + t b) = sum C(d,k) a_k s^(d-k) t^k."""
    d = P.interval_degree(K, L)
    f = alpha_beta_restriction(P, K, L, i)
    out = []
    for k in range(d + 1):
        coeff = f.terms.get((d - k, k), Fraction(0))
        out.append(coeff / comb(d, k))
    return out


def reduced_charpoly_via_interval_poly(M):
    """Reduced characteristic polynomial recovered from the bivariate
    restriction of the full-interval polynomial, reconciled exactly against
    the direct flat-by-flat computation."""
    if not M.is_loopless():
        raise HasLoops("matroid has loops")
    lattice = matroid_mod.flats_lattice(M)
    i = subsets.elements(lattice.top & ~lattice.bottom)[0]
    profile = normalized_profile(lattice, lattice.bottom, lattice.top, i)
    d = len(profile) - 1
    coeffs_ascending = [Fraction(0)] * (d + 1)
    for k, a in enumerate(profile):
        coeffs_ascending[d - k] = (-1) ** k * a
    recovered = UniPoly(coeffs_ascending)
    direct = matroid_mod.reduced_characteristic_polynomial(M, i)
    if recovered != direct:
        raise MismatchWithDirectComputation(
            "reduced characteristic polynomial mismatch: "
            f"{recovered} vs {direct}"
        )
    return recovered


def sum_of_squares_identity_holds(P, K, L):
    """For a rank-3 interval: twice the polynomial equals the square of the
    rank-1 variable sum minus one square per rank-2 element."""
    if P.interval_rank(K, L) != 3:
        raise NotAnInterval("identity applies to rank-3 intervals")
    f = interval_polynomial(P, K, L)
    flats = f.vars
    rank1 = [F for F in flats if P.interval_rank(K, F) == 1]
    rank2 = [G for G in flats if P.interval_rank(K, G) == 2]
    total = MultiPoly.zero(flats, degree=1)
    for F in rank1:
        total = total + MultiPoly.variable(flats, F)
    rhs = total * total
    for G in rank2:
        diff = MultiPoly.variable(flats, G)
        for F in rank1:
            if subsets.is_proper_subset(F, G):
                diff = diff - MultiPoly.variable(flats, F)
        rhs = rhs - diff * diff
    return 2 * f == rhs


def euler_identity_holds(f):
    """Sum of t_F times the F-partial equals deg(f) times f, exactly."""
    acc = MultiPoly.zero(f.vars, degree=f.degree)
    for var in f.vars:
        acc = acc + MultiPoly.variable(f.vars, var) * partial(f, var)
    return acc == f.degree * f


def full_contraction(f, directions):
    """Value of the iterated directional derivative along a full tuple."""
    g = f
    for v in directions:
        g = dir_derivative(g, v)
    if g.degree != 0 and g.terms:
        raise WrongDegree("direction tuple shorter than the degree")
    return g.constant_value()
