"""Brute-force reference implementations used to pin expected values.

Everything here works on frozensets and dense integer coefficient lists,
deliberately sharing no code or data layout with the package under test.
"""

from fractions import Fraction
from itertools import chain, combinations


def powerset(universe):
    items = sorted(universe)
    return chain.from_iterable(combinations(items, r) for r in range(len(items) + 1))


def rank_of(bases, S):
    S = frozenset(S)
    return max(len(S & B) for B in bases)


def closure_of(universe, bases, S):
    S = frozenset(S)
    r = rank_of(bases, S)
    return frozenset(e for e in universe if rank_of(bases, S | {e}) == r) | S


def all_flats(universe, bases):
    """Closures of every subset; full 2^n sweep."""
    universe = frozenset(universe)
    return {closure_of(universe, bases, frozenset(s)) for s in powerset(universe)}


def mobius_table(flats):
    """mu(a, b) on the inclusion order via the defining recursion."""
    ordered = sorted(flats, key=lambda f: (len(f), sorted(f)))
    table = {}
    for a in ordered:
        for b in ordered:
            if not a <= b:
                continue
            if a == b:
                table[(a, b)] = 1
            else:
                table[(a, b)] = -sum(
                    table[(a, c)] for c in ordered if a <= c and c < b
                )
    return table


def charpoly_coeffs_ascending(universe, bases):
    """Characteristic polynomial by the Mobius recursion, dense ascending ints."""
    universe = frozenset(universe)
    flats = all_flats(universe, bases)
    table = mobius_table(flats)
    bottom = closure_of(universe, bases, frozenset())
    top_rank = rank_of(bases, universe)
    coeffs = [0] * (top_rank + 1)
    for F in flats:
        coeffs[top_rank - rank_of(bases, F)] += table[(bottom, F)]
    return coeffs


def poly_mul(a, b):
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            out[i + j] += x * y
    return out


def poly_trim(a):
    a = list(a)
    while a and a[-1] == 0:
        a.pop()
    return a


def reduced_coeffs_ascending(universe, bases):
    """chi / (t - 1) by exact synthetic division; remainder must vanish."""
    chi = charpoly_coeffs_ascending(universe, bases)
    # divide ascending-coefficient chi by (t - 1): synthetic division at t=1
    desc = list(reversed(chi))
    out = []
    carry = 0
    for c in desc:
        carry = c + carry
        out.append(carry)
    remainder = out.pop()
    assert remainder == 0, "chi not divisible by t - 1"
    return list(reversed(out))


def spanning_forests(n_vertices, edges):
    """All maximal spanning forests by exhaustive subset check."""
    def is_forest(subset):
        parent = list(range(n_vertices))

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for idx in subset:
            u, v = edges[idx]
            ru, rv = find(u), find(v)
            if ru == rv:
                return False
            parent[ru] = rv
        return True

    best = 0
    forests = []
    for s in powerset(range(len(edges))):
        if is_forest(s):
            if len(s) > best:
                best = len(s)
                forests = [frozenset(s)]
            elif len(s) == best:
                forests.append(frozenset(s))
    return forests


FANO_LINES = [
    frozenset({0, 1, 2}),
    frozenset({0, 3, 4}),
    frozenset({0, 5, 6}),
    frozenset({1, 3, 5}),
    frozenset({1, 4, 6}),
    frozenset({2, 3, 6}),
    frozenset({2, 4, 5}),
]


def fano_bases():
    return [
        frozenset(c)
        for c in combinations(range(7), 3)
        if frozenset(c) not in FANO_LINES
    ]


def float_inertia(rows, tol=1e-9):
    """Sign counts from a floating eigensolver; None if any eigenvalue is
    too small to trust."""
    import numpy as np

    arr = np.array([[float(Fraction(v)) for v in row] for row in rows], dtype=float)
    eigs = np.linalg.eigvalsh(arr)
    if any(abs(e) <= tol for e in eigs):
        return None
    plus = int(sum(1 for e in eigs if e > tol))
    minus = int(sum(1 for e in eigs if e < -tol))
    return (plus, 0, minus)


K4_EDGES = [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]
