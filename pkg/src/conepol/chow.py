"""Graded quotient ring of an interval in a lattice of flats.

The ring on generators x_F (one per middle element) is cut by two families
of relations: products of incomparable generators vanish, and for any two
elements i, j of L \\ K the sums of generators containing i and containing
j agree.  Each graded piece is handled as plain exact linear algebra over
the monomials supported on chains; monomials touching an incomparable pair
are pruned up front since they are already zero.

The top graded piece must be one dimensional, with all maximal-chain
monomials in the same nonzero class; the induced functional normalizes
them to 1 and generates the volume polynomial.
"""

import random
from fractions import Fraction
from itertools import combinations_with_replacement
from math import factorial

from . import poset, subsets
from .errors import (
    FlagInconsistency,
    NotAnInterval,
    SizeLimitExceeded,
    TopDegreeNotOneDimensional,
    WrongDegree,
)
from .intervalpoly import interval_polynomial
from .multipoly import MultiPoly

MAX_OPEN_FLATS = 16
MAX_DEGREE = 4


def _rref(rows):
    """In-place reduced row echelon form; returns (rank, pivot_columns)."""
    if not rows:
        return 0, []
    ncols = len(rows[0])
    rank = 0
    pivots = []
    for col in range(ncols):
        pivot_row = None
        for r in range(rank, len(rows)):
            if rows[r][col] != 0:
                pivot_row = r
                break
        if pivot_row is None:
            continue
        rows[rank], rows[pivot_row] = rows[pivot_row], rows[rank]
        piv = rows[rank][col]
        rows[rank] = [v / piv for v in rows[rank]]
        for r in range(len(rows)):
            if r != rank and rows[r][col] != 0:
                f = rows[r][col]
                rows[r] = [a - f * b for a, b in zip(rows[r], rows[rank])]
        pivots.append(col)
        rank += 1
        if rank == len(rows):
            break
    return rank, pivots


def _kernel_basis(rows, ncols):
    """Basis of {x : rows . x = 0} from the reduced echelon form."""
    work = [list(r) for r in rows]
    rank, pivots = _rref(work)
    pivot_set = set(pivots)
    free = [c for c in range(ncols) if c not in pivot_set]
    basis = []
    for fc in free:
        vec = [Fraction(0)] * ncols
        vec[fc] = Fraction(1)
        for r, pc in enumerate(pivots):
            vec[pc] = -work[r][fc]
        basis.append(vec)
    return basis


class ChowRing:
    """Graded data of the quotient ring of one interval."""

    def __init__(self, P, K, L):
        d = P.interval_degree(K, L)
        if d < 0:
            raise NotAnInterval("need K <= L in the poset")
        flats = tuple(P.open_interval(K, L))
        if len(flats) > MAX_OPEN_FLATS:
            raise SizeLimitExceeded(
                f"{len(flats)} open flats exceeds the cap of {MAX_OPEN_FLATS}"
            )
        if d > MAX_DEGREE:
            raise SizeLimitExceeded(f"degree {d} exceeds the cap of {MAX_DEGREE}")
        self.poset = P
        self.K = K
        self.L = L
        self.degree = d
        self.flats = flats
        self._comparable = {
            (i, j): subsets.comparable(flats[i], flats[j])
            for i in range(len(flats))
            for j in range(len(flats))
        }
        self.monomials = [self._chain_monomials(k) for k in range(d + 1)]
        self.graded_dims = []
        self._relation_rank = []
        for k in range(d + 1):
            rank = self._relation_space_rank(k)
            self._relation_rank.append(rank)
            self.graded_dims.append(len(self.monomials[k]) - rank)
        self._top_functional = self._build_top_functional()

    # -- monomials -------------------------------------------------------------

    def _chain_monomials(self, k):
        """Exponent tuples of degree k whose support is a chain of flats."""
        n = len(self.flats)
        if k == 0:
            return [tuple([0] * n)]
        out = []
        for combo in combinations_with_replacement(range(n), k):
            distinct = sorted(set(combo))
            ok = all(
                self._comparable[(a, b)]
                for idx, a in enumerate(distinct)
                for b in distinct[idx + 1:]
            )
            if not ok:
                continue
            exps = [0] * n
            for i in combo:
                exps[i] += 1
            out.append(tuple(exps))
        return out

    def _is_chain_exponents(self, exps):
        support = [i for i, e in enumerate(exps) if e]
        return all(
            self._comparable[(a, b)]
            for idx, a in enumerate(support)
            for b in support[idx + 1:]
        )

    # -- relations ---------------------------------------------------------------

    def _linear_form_pairs(self):
        """Element pairs (i, j) of L \\ K indexing the linear relations."""
        els = subsets.elements(self.L & ~self.K)
        return [(a, b) for idx, a in enumerate(els) for b in els[idx + 1:]]

    def _relation_rows(self, k):
        """Images in degree k of monomial times linear relation, projected to
        chain monomials (others are already zero)."""
        if k == 0:
            return []
        index = {m: pos for pos, m in enumerate(self.monomials[k])}
        rows = []
        for m in self.monomials[k - 1]:
            for (i, j) in self._linear_form_pairs():
                row = [Fraction(0)] * len(index)
                touched = False
                for pos, F in enumerate(self.flats):
                    bit = None
                    if (F >> i) & 1:
                        bit = 1
                    if (F >> j) & 1:
                        bit = -1 if bit is None else bit - 1
                    if not bit:
                        continue
                    bumped = list(m)
                    bumped[pos] += 1
                    bumped = tuple(bumped)
                    if self._is_chain_exponents(bumped):
                        row[index[bumped]] += bit
                        touched = True
                if touched and any(v != 0 for v in row):
                    rows.append(row)
        return rows

    def _relation_space_rank(self, k):
        rows = self._relation_rows(k)
        rank, _ = _rref(rows)
        return rank

    # -- the degree functional ------------------------------------------------------

    def _build_top_functional(self):
        d = self.degree
        top = self.monomials[d]
        if d == 0:
            return {top[0]: Fraction(1)}
        rows = self._relation_rows(d)
        kernel = _kernel_basis(rows, len(top))
        if len(kernel) != 1:
            raise TopDegreeNotOneDimensional(
                f"top graded piece has dimension {len(kernel)}"
            )
        phi = dict(zip(top, kernel[0]))
        flag_values = set()
        for chain in self.poset.maximal_chains(self.K, self.L):
            middle = chain[1:-1]
            exps = [0] * len(self.flats)
            for F in middle:
                exps[self.flats.index(F)] += 1
            flag_values.add(phi[tuple(exps)])
        if len(flag_values) != 1:
            raise FlagInconsistency("maximal-chain monomials land in different classes")
        scale = flag_values.pop()
        if scale == 0:
            raise FlagInconsistency("maximal-chain monomials are zero in the quotient")
        return {m: v / scale for m, v in phi.items()}

    # -- public surface ----------------------------------------------------------------

    def degree_map(self, monomial):
        """Normalized top-degree functional; incomparable supports give 0."""
        exps = self._as_exponents(monomial)
        if sum(exps) != self.degree:
            raise WrongDegree(
                f"monomial degree {sum(exps)} != ring top degree {self.degree}"
            )
        if not self._is_chain_exponents(exps):
            return Fraction(0)
        return self._top_functional[exps]

    def _as_exponents(self, monomial):
        if isinstance(monomial, dict):
            exps = [0] * len(self.flats)
            for F, e in monomial.items():
                exps[self.flats.index(F)] += e
            return tuple(exps)
        return tuple(monomial)

    def volume_polynomial(self):
        """(1/d!) deg((sum_F x_F t_F)^d) expanded termwise by multinomials."""
        d = self.degree
        if d == 0:
            return MultiPoly.constant((), 1)
        terms = {}
        for exps in self.monomials[d]:
            value = self._top_functional[exps]
            if value == 0:
                continue
            weight = Fraction(1)
            for e in exps:
                weight /= factorial(e)
            terms[exps] = value * weight
        return MultiPoly(self.flats, terms, degree=d)


def build_chow(P, K, L):
    return ChowRing(P, K, L)


def degree_map(ring, monomial):
    return ring.degree_map(monomial)


def volume_polynomial(ring):
    return ring.volume_polynomial()


def verify_vol_eq_pol(P, K, L):
    """Exact symbolic equality of the volume polynomial and the recursively
    built interval polynomial."""
    return vol_pol_mismatch_witness(P, K, L) is None


def vol_pol_mismatch_witness(P, K, L):
    """First differing term between the two polynomials, or None when equal.

    A non-None answer is a bug signal; it is surfaced in verification
    reports rather than raised.
    """
    ring = ChowRing(P, K, L)
    diff = ring.volume_polynomial() - interval_polynomial(P, K, L)
    if diff.is_zero():
        return None
    exps, coeff = diff.sorted_terms()[0]
    monomial = {
        subsets.format_elements(F): e
        for F, e in zip(ring.flats, exps)
        if e
    }
    return {"monomial": monomial, "difference": str(coeff)}


def tensor_degree_check(P, K, F, L, samples=20, seed=0):
    """deg of (monomial below F) * x_F * (monomial above F) splits as the
    product of the sub-interval degrees, on sampled monomial pairs."""
    if not (P.lt(K, F) and P.lt(F, L)):
        raise NotAnInterval("need K < F < L in the poset")
    big = ChowRing(P, K, L)
    low = ChowRing(P, K, F)
    high = ChowRing(P, F, L)
    rng = random.Random(seed)

    def random_exponents(ring, degree):
        # degree >= 1 implies the open interval is nonempty
        exps = [0] * len(ring.flats)
        for _ in range(degree):
            exps[rng.randrange(len(ring.flats))] += 1
        return tuple(exps)

    for _ in range(samples):
        xi = random_exponents(low, low.degree)
        eta = random_exponents(high, high.degree)
        combined = [0] * len(big.flats)
        for pos, e in zip(low.flats, xi):
            combined[big.flats.index(pos)] += e
        for pos, e in zip(high.flats, eta):
            combined[big.flats.index(pos)] += e
        combined[big.flats.index(F)] += 1
        lhs = big.degree_map(tuple(combined))
        rhs = low.degree_map(xi) * high.degree_map(eta)
        if lhs != rhs:
            return False
    return True
