import random
from fractions import Fraction

import pytest

from conepol import (
    IntervalCoords,
    MultiPoly,
    SymMatrix,
    alpha_vector,
    beta_vector,
    dir_derivative,
    flats_lattice,
    hessian_of_quadratic,
    interval_polynomial,
    partial,
    restrict_to_directions,
    substitute_affine,
    uniform_matroid,
)
from conepol.errors import (
    DimensionMismatch,
    Inhomogeneous,
    MissingCoordinate,
    NotSymmetric,
    UnknownVariable,
    WrongDegree,
)
from conepol.multipoly import to_text


def xy_poly(terms, degree=None):
    return MultiPoly(("x", "y"), terms, degree=degree)


def random_homogeneous(rng, variables, degree, n_terms=6):
    terms = {}
    for _ in range(n_terms):
        exps = [0] * len(variables)
        for _ in range(degree):
            exps[rng.randrange(len(variables))] += 1
        terms[tuple(exps)] = Fraction(rng.randint(-9, 9), rng.randint(1, 3))
    return MultiPoly(variables, terms, degree=degree)


def test_homogeneity_enforced():
    with pytest.raises(Inhomogeneous):
        xy_poly({(1, 0): 1, (2, 0): 1})


def test_partial_examples():
    f = xy_poly({(2, 1): 1})  # x^2 y
    assert partial(f, "x") == xy_poly({(1, 1): 2})
    const = MultiPoly(("x",), {(0,): 5})
    assert partial(const, "x").is_zero()
    with pytest.raises(UnknownVariable):
        partial(f, "z")


def test_euler_identity_random():
    rng = random.Random(2)
    for degree in (1, 2, 3):
        f = random_homogeneous(rng, ("x", "y", "z"), degree)
        acc = MultiPoly.zero(f.vars, degree=degree)
        for v in f.vars:
            acc = acc + MultiPoly.variable(f.vars, v) * partial(f, v)
        assert acc == degree * f


def test_dir_derivative_linear_case():
    f = xy_poly({(1, 0): 1, (0, 1): 1})
    out = dir_derivative(f, {"x": Fraction(2), "y": Fraction(5)})
    assert out.constant_value() == 7


def test_dir_derivative_commutes_and_is_linear():
    rng = random.Random(4)
    f = random_homogeneous(rng, ("x", "y", "z"), 3)
    v = {"x": Fraction(1), "y": Fraction(-2), "z": Fraction(1, 3)}
    w = {"x": Fraction(5), "y": Fraction(0), "z": Fraction(2)}
    assert dir_derivative(dir_derivative(f, v), w) == dir_derivative(
        dir_derivative(f, w), v
    )
    combo = {k: 3 * v[k] + 7 * w[k] for k in v}
    assert dir_derivative(f, combo) == 3 * dir_derivative(f, v) + 7 * dir_derivative(f, w)


def test_dir_derivative_full_contraction_u23():
    L = flats_lattice(uniform_matroid(2, 3))
    f = interval_polynomial(L, L.bottom, L.top)
    ones = {F: Fraction(1) for F in f.vars}
    assert dir_derivative(f, ones).constant_value() == 3


def test_dir_derivative_missing_coordinate():
    f = xy_poly({(1, 1): 1})
    with pytest.raises(MissingCoordinate):
        dir_derivative(f, {"x": Fraction(1)})


def test_hessian_examples():
    assert hessian_of_quadratic(MultiPoly(("x",), {(2,): 1})).to_lists() == [[2]]
    assert hessian_of_quadratic(xy_poly({(1, 1): 1})).to_lists() == [
        [0, 1],
        [1, 0],
    ]
    with pytest.raises(WrongDegree):
        hessian_of_quadratic(xy_poly({(1, 0): 1}))


def test_hessian_of_u33_interval_polynomial():
    L = flats_lattice(uniform_matroid(3, 3))
    f = interval_polynomial(L, L.bottom, L.top)
    H = hessian_of_quadratic(2 * f)
    # variables: three singletons then three pairs; cross entries are 2 for
    # comparable flats, diagonal entries are -2
    expected = [
        [-2, 0, 0, 2, 2, 0],
        [0, -2, 0, 2, 0, 2],
        [0, 0, -2, 0, 2, 2],
        [2, 2, 0, -2, 0, 0],
        [2, 0, 2, 0, -2, 0],
        [0, 2, 2, 0, 0, -2],
    ]
    assert H.to_lists() == expected


def test_substitute_affine_identity_and_zero():
    rng = random.Random(9)
    f = random_homogeneous(rng, ("x", "y"), 2)
    ident = [[1, 0], [0, 1]]
    assert substitute_affine(f, ident, ("x", "y")) == f
    zero = substitute_affine(f, [[0], [0]], ("u",))
    assert zero.is_zero()
    with pytest.raises(DimensionMismatch):
        substitute_affine(f, [[1, 0]], ("u", "v"))


def test_substitute_affine_preserves_homogeneity():
    rng = random.Random(10)
    f = random_homogeneous(rng, ("x", "y", "z"), 3)
    mat = [[1, 2], [0, -1], [Fraction(1, 2), 3]]
    g = substitute_affine(f, mat, ("u", "v"))
    assert g.is_zero() or all(sum(e) == 3 for e in g.terms)


def test_restriction_single_direction_matches_homogeneity():
    rng = random.Random(12)
    f = random_homogeneous(rng, ("x", "y", "z"), 3)
    v = {"x": Fraction(2), "y": Fraction(-1), "z": Fraction(3, 2)}
    g = restrict_to_directions(f, [v], ("y0",))
    assert g.terms.get((3,), Fraction(0)) == f.evaluate(v)


def test_restriction_u23_alpha_beta():
    L = flats_lattice(uniform_matroid(2, 3))
    f = interval_polynomial(L, L.bottom, L.top)
    coords = IntervalCoords(L.bottom, L.top)
    g = restrict_to_directions(
        f, [alpha_vector(coords), beta_vector(coords)], ("s", "t")
    )
    assert g == MultiPoly(("s", "t"), {(1, 0): 1, (0, 1): 2})
    assert to_text(g) == "s + 2 * t"


def test_sym_matrix_validation():
    with pytest.raises(NotSymmetric):
        SymMatrix([[1, 2], [3, 4]])
    with pytest.raises(NotSymmetric):
        SymMatrix([[1, 2]])


def test_to_text_canonical_order():
    L = flats_lattice(uniform_matroid(2, 3))
    f = interval_polynomial(L, L.bottom, L.top)
    assert to_text(f) == "t_{0} + t_{1} + t_{2}"
