"""Coordinates on Boolean intervals and the strictly submodular cone.

For K < L, the ambient space assigns a rational to every strict
intermediate subset K < S < L, with the endpoint convention that K and L
carry the value 0.  Modular vectors span the lineality space of the open
cone of strictly submodular vectors; projections move vectors between
nested intervals.
"""

from fractions import Fraction

from . import exactlp, subsets
from .errors import (
    BadNesting,
    ElementOutsideInterval,
    FeasibilityFailure,
    InvalidParams,
    MissingCoordinate,
    NotInCone,
    TrivialInterval,
)

MAX_INTERVAL_SPAN = 16


class IntervalCoords:
    """Index of all strict intermediate subsets of a Boolean interval."""

    def __init__(self, K, L):
        if not subsets.is_proper_subset(K, L):
            raise InvalidParams("interval needs K strictly inside L")
        span = (L & ~K).bit_count()
        if span > MAX_INTERVAL_SPAN:
            raise InvalidParams(
                f"interval span {span} exceeds the cap of {MAX_INTERVAL_SPAN}"
            )
        self.K = K
        self.L = L
        self.span = span
        self.subsets = tuple(subsets.strict_between(K, L))
        self.index = {s: i for i, s in enumerate(self.subsets)}

    @property
    def m(self):
        return len(self.subsets)

    def __eq__(self, other):
        return (
            isinstance(other, IntervalCoords)
            and self.K == other.K
            and self.L == other.L
        )

    def __hash__(self):
        return hash((self.K, self.L))

    def __repr__(self):
        return "IntervalCoords(K={{{}}}, L={{{}}})".format(
            subsets.format_elements(self.K), subsets.format_elements(self.L)
        )


class IntervalVector:
    """Rational assignment on the strict intermediates, endpoints pinned to 0."""

    __slots__ = ("coords", "values")

    def __init__(self, coords, values):
        vals = tuple(Fraction(v) for v in values)
        if len(vals) != coords.m:
            raise InvalidParams("value count does not match the interval index")
        self.coords = coords
        self.values = vals

    @classmethod
    def zero(cls, coords):
        return cls(coords, [Fraction(0)] * coords.m)

    @classmethod
    def from_mapping(cls, coords, mapping):
        vals = [Fraction(0)] * coords.m
        for S, v in mapping.items():
            if S == coords.K or S == coords.L:
                if Fraction(v) != 0:
                    raise InvalidParams("endpoint coordinates are fixed at 0")
                continue
            if S not in coords.index:
                raise InvalidParams(
                    "subset {{{}}} is not strictly between the endpoints".format(
                        subsets.format_elements(S)
                    )
                )
            vals[coords.index[S]] = Fraction(v)
        return cls(coords, vals)

    def __getitem__(self, S):
        if S == self.coords.K or S == self.coords.L:
            return Fraction(0)
        try:
            return self.values[self.coords.index[S]]
        except KeyError:
            raise MissingCoordinate(
                "subset {{{}}} outside interval".format(subsets.format_elements(S))
            ) from None

    def __add__(self, other):
        self._check_same(other)
        return IntervalVector(
            self.coords, [a + b for a, b in zip(self.values, other.values)]
        )

    def __sub__(self, other):
        self._check_same(other)
        return IntervalVector(
            self.coords, [a - b for a, b in zip(self.values, other.values)]
        )

    def scale(self, c):
        c = Fraction(c)
        return IntervalVector(self.coords, [c * v for v in self.values])

    def _check_same(self, other):
        if self.coords != other.coords:
            raise InvalidParams("vectors live on different intervals")

    def __eq__(self, other):
        return (
            isinstance(other, IntervalVector)
            and self.coords == other.coords
            and self.values == other.values
        )

    def as_dict(self):
        return dict(zip(self.coords.subsets, self.values))

    def to_json_obj(self):
        return {
            "K": subsets.elements(self.coords.K),
            "L": subsets.elements(self.coords.L),
            "values": {
                subsets.format_elements(s): str(v)
                for s, v in zip(self.coords.subsets, self.values)
                if v != 0
            },
        }

    @classmethod
    def from_json_obj(cls, obj, coords=None):
        K = subsets.from_elements(obj["K"])
        L = subsets.from_elements(obj["L"])
        if coords is None:
            coords = IntervalCoords(K, L)
        elif coords.K != K or coords.L != L:
            raise InvalidParams("vector interval does not match the requested one")
        mapping = {
            subsets.parse_elements(key): Fraction(val)
            for key, val in obj.get("values", {}).items()
        }
        return cls.from_mapping(coords, mapping)

    def __repr__(self):
        return f"IntervalVector({self.coords!r}, {list(self.values)})"


class ModularBasis:
    """Basis of the modular subspace, one vector per element beyond the first."""

    def __init__(self, coords, vectors):
        self.coords = coords
        self.vectors = tuple(vectors)

    @property
    def dimension(self):
        return len(self.vectors)


def modular_vector(coords, weights):
    """Expand per-element weights (summing to zero) to a modular vector."""
    total = sum(weights.values(), Fraction(0))
    if total != 0:
        raise InvalidParams("modular weights must sum to zero")
    diff_elements = subsets.elements(coords.L & ~coords.K)
    if set(weights) - set(diff_elements):
        raise ElementOutsideInterval("weight on an element outside L \\ K")
    vals = []
    for S in coords.subsets:
        vals.append(
            sum((weights.get(e, Fraction(0)) for e in subsets.elements(S & ~coords.K)),
                Fraction(0))
        )
    return IntervalVector(coords, vals)


def modular_basis(coords):
    """Vectors with weight +1 on the first element and -1 on another."""
    diff_elements = subsets.elements(coords.L & ~coords.K)
    if len(diff_elements) < 2:
        raise TrivialInterval("modular subspace is zero-dimensional")
    first = diff_elements[0]
    vectors = [
        modular_vector(coords, {first: Fraction(1), other: Fraction(-1)})
        for other in diff_elements[1:]
    ]
    return ModularBasis(coords, vectors)


def _incomparable_pairs(coords):
    subs = coords.subsets
    for i, S in enumerate(subs):
        for T in subs[i + 1:]:
            if not subsets.comparable(S, T):
                yield S, T


def submodularity_margin(v, S, T):
    return v[S] + v[T] - v[S & T] - v[S | T]


def is_strictly_submodular(v):
    """Strict submodular inequality on every incomparable pair."""
    return all(submodularity_margin(v, S, T) > 0 for S, T in _incomparable_pairs(v.coords))


def is_modular(v):
    """Submodular inequality holds with equality on every pair."""
    return all(submodularity_margin(v, S, T) == 0 for S, T in _incomparable_pairs(v.coords))


def canonical_interior_point(coords):
    """v_S = |S \\ K| * |L \\ S|; strictly submodular with all-positive entries."""
    K, L = coords.K, coords.L
    return IntervalVector(
        coords,
        [Fraction((S & ~K).bit_count() * (L & ~S).bit_count()) for S in coords.subsets],
    )


def is_weakly_submodular(v):
    return all(submodularity_margin(v, S, T) >= 0 for S, T in _incomparable_pairs(v.coords))


def effective_decompose(v):
    """Modular shift making a cone point coordinatewise positive.

    Returns (w, epsilon) where w is modular with v + w > 0 in every
    coordinate, and epsilon is the largest 1/2^k for which v minus epsilon
    times the canonical interior point stays weakly submodular.  The shift
    is found by maximizing the minimum slack of v + w over the modular
    degrees of freedom, as an exact rational linear program.
    """
    if not is_strictly_submodular(v):
        raise NotInCone("vector is not strictly submodular")
    coords = v.coords
    diff_elements = subsets.elements(coords.L & ~coords.K)
    if coords.m == 0:
        return IntervalVector.zero(coords), Fraction(1)

    interior = canonical_interior_point(coords)
    eps = Fraction(1)
    while not is_weakly_submodular(v - interior.scale(eps)):
        eps /= 2

    # w_S = sum of w_e over e in S \ K with sum_e w_e = 0; eliminate the
    # last element and maximize min_S (v_S + w_S).
    last = diff_elements[-1]
    coeff_rows = []
    rhs = []
    for S in coords.subsets:
        in_last = (S >> last) & 1
        row = [
            Fraction(((S >> e) & 1) - in_last) for e in diff_elements[:-1]
        ]
        coeff_rows.append(row)
        rhs.append(v[S])
    try:
        slack, wfree = exactlp.max_min_slack(coeff_rows, rhs)
    except exactlp.LPInfeasible as exc:  # pragma: no cover - LP always feasible
        raise FeasibilityFailure(str(exc)) from exc
    if slack <= 0:
        raise FeasibilityFailure(
            "no modular shift yields positive coordinates; slack " + str(slack)
        )
    weights = {e: wfree[j] for j, e in enumerate(diff_elements[:-1])}
    weights[last] = -sum(wfree, Fraction(0))
    w = modular_vector(coords, weights)
    shifted = v + w
    if any(val <= 0 for val in shifted.values):
        raise FeasibilityFailure("LP reported positive slack but a coordinate is not")
    return w, eps


def project(t, F, G):
    """Linear projection onto the sub-interval (F, G).

    Each output coordinate is t_S corrected by the endpoint values t_F and
    t_G in proportion to how far S sits between F and G.
    """
    coords = t.coords
    if not (
        subsets.is_subset(coords.K, F)
        and subsets.is_proper_subset(F, G)
        and subsets.is_subset(G, coords.L)
    ):
        raise BadNesting("need K <= F < G <= L")
    target = IntervalCoords(F, G)
    span = Fraction((G & ~F).bit_count())
    tF = t[F]
    tG = t[G]
    vals = []
    for S in target.subsets:
        vals.append(
            t[S]
            - tG * Fraction((S & ~F).bit_count()) / span
            - tF * Fraction((G & ~S).bit_count()) / span
        )
    return IntervalVector(target, vals)


def alpha_vector(coords):
    """(|S \\ K| / |L \\ K|)_S, the normalized-size point on the cone boundary."""
    span = Fraction((coords.L & ~coords.K).bit_count())
    return IntervalVector(
        coords,
        [Fraction((S & ~coords.K).bit_count()) / span for S in coords.subsets],
    )


def beta_vector(coords):
    """(|L \\ S| / |L \\ K|)_S, the complementary boundary point."""
    span = Fraction((coords.L & ~coords.K).bit_count())
    return IntervalVector(
        coords,
        [Fraction((coords.L & ~S).bit_count()) / span for S in coords.subsets],
    )


def _check_element(coords, i):
    if not ((coords.L >> i) & 1) or ((coords.K >> i) & 1):
        raise ElementOutsideInterval(f"element {i} is not in L \\ K")


def alpha_indicator(coords, i):
    """0/1 vector marking the subsets that contain element i."""
    _check_element(coords, i)
    return IntervalVector(
        coords, [Fraction((S >> i) & 1) for S in coords.subsets]
    )


def beta_indicator(coords, i):
    """0/1 vector marking the subsets that avoid element i."""
    _check_element(coords, i)
    return IntervalVector(
        coords, [Fraction(1 - ((S >> i) & 1)) for S in coords.subsets]
    )
