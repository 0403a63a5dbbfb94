from fractions import Fraction

import pytest
import sympy as sp
from hypothesis import given
from hypothesis import strategies as st

from mysticum.algebra import I
from mysticum.forms import (
    BinaryForm,
    DegreeMismatch,
    ZeroForm,
    form_from_roots,
    linear_form,
    proportional,
    sextic_from_roots,
    transvectant,
)
from mysticum.plane import (
    INFINITY,
    DegenerateJoin,
    DegenerateTriangle,
    P1Point,
    Triangle,
    apply_flt,
    chasles_center,
    collinear,
    conic_point,
    cross_ratio,
    flt_to_standard,
    incident,
    invert_matrix,
    is_conjugate,
    join_or_meet,
)

from conftest import distinct_points, flt_matrices, small_rationals

forms = st.integers(0, 4).flatmap(
    lambda n: st.lists(small_rationals, min_size=n + 1, max_size=n + 1)).map(BinaryForm)


def sympy_transvectant(f, g, r):
    """Textbook definition via sympy derivatives (independent route)."""
    x, y = sp.symbols("x1 x2")

    def expr(h):
        n = h.degree
        return sum(sp.Rational(c) * x ** (n - i) * y ** i for i, c in enumerate(h.coeffs))
    F, G = expr(f), expr(g)
    m, n = f.degree, g.degree
    tot = 0
    for k in range(r + 1):
        tot += sp.binomial(r, k) * (-1) ** k * sp.diff(F, x, r - k, y, k) * sp.diff(G, x, k, y, r - k)
    tot *= sp.factorial(m - r) * sp.factorial(n - r) / (sp.factorial(m) * sp.factorial(n))
    return sp.expand(tot)


def as_sympy(h):
    x, y = sp.symbols("x1 x2")
    n = h.degree
    return sp.expand(sum(sp.Rational(c) * x ** (n - i) * y ** i for i, c in enumerate(h.coeffs)))


def test_transvectant_normalization():
    assert transvectant(BinaryForm([1, 0, 0]), BinaryForm([0, 0, 1]), 2) == BinaryForm([1])


@given(forms, forms, st.integers(0, 4))
def test_transvectant_matches_sympy(f, g, r):
    if r > min(f.degree, g.degree):
        with pytest.raises(DegreeMismatch):
            transvectant(f, g, r)
        return
    assert as_sympy(transvectant(f, g, r)) == sympy_transvectant(f, g, r)


@given(forms, forms, st.integers(0, 4))
def test_transvectant_symmetry(f, g, r):
    if r > min(f.degree, g.degree):
        return
    assert transvectant(f, g, r) == transvectant(g, f, r).scale((-1) ** r)


@given(forms, forms, st.integers(0, 2), small_rationals, small_rationals, small_rationals)
def test_transvectant_covariance(f, g, r, p, q, s):
    # unimodular substitution (x1, x2) -> (p x1 + q x2, r' x1 + s x2) with ps - q r' = 1
    if r > min(f.degree, g.degree) or p == 0:
        return
    rr = (p * s - 1) / q if q != 0 else None
    if rr is None:
        if p * s != 1:
            return
        rr = Fraction(0)
    M = (p, q, rr, s)
    lhs = transvectant(f.substitute(*M), g.substitute(*M), r)
    rhs = transvectant(f, g, r).substitute(*M)
    assert lhs == rhs


def test_proportional():
    assert proportional(BinaryForm([1, 2, 3]), BinaryForm([2, 4, 6]))
    assert not proportional(BinaryForm([1, 2, 3]), BinaryForm([1, 2, 4]))
    with pytest.raises(ZeroForm):
        proportional(BinaryForm([0, 0, 0]), BinaryForm([1, 0, 0]))


def test_linear_form_and_roots():
    assert linear_form(P1Point(3)) == BinaryForm([1, -3])
    assert linear_form(INFINITY) == BinaryForm([0, 1])
    f = form_from_roots([P1Point(0), P1Point(1), INFINITY])
    assert f(Fraction(1), Fraction(1)) == 0 and f(Fraction(1), Fraction(0)) == 0
    with pytest.raises(ValueError):
        sextic_from_roots([P1Point(0)] * 5)


# -- P1 and the plane --------------------------------------------------------

def test_p1point_rejects_floats():
    with pytest.raises(TypeError):
        P1Point(0.5)
    with pytest.raises(ValueError):
        P1Point(0, 0)
    assert P1Point(2, 4) == P1Point(Fraction(1, 2))
    assert P1Point(5, 0) == INFINITY


@given(distinct_points(n=4), flt_matrices)
def test_cross_ratio_flt_invariant(zs, M):
    moved = [apply_flt(M, z) for z in zs]
    assert cross_ratio(*zs) == cross_ratio(*moved)


@given(distinct_points(n=3), distinct_points(n=1))
def test_flt_to_standard(zs, w):
    M = flt_to_standard(*zs)
    assert [apply_flt(M, z) for z in zs] == [P1Point(0), P1Point(1), INFINITY]
    Minv = invert_matrix(M)
    assert apply_flt(Minv, apply_flt(M, w[0])) == w[0]


def test_cross_ratio_value():
    # <z1,z2,z3,z4> = (z1-z3)(z2-z4)/((z1-z4)(z2-z3))
    z = [P1Point(x) for x in (2, 3, 5, 7)]
    assert cross_ratio(*z) == P1Point(Fraction((2 - 5) * (3 - 7), (2 - 7) * (3 - 5)))
    # (1 - 3/7) / (0 - 3/7)
    assert cross_ratio(P1Point(0), P1Point(1), INFINITY, P1Point(Fraction(3, 7))) == \
        P1Point(Fraction(-4, 3))


@given(distinct_points(n=4))
def test_join_meet_incidences(zs):
    P = [conic_point(z) for z in zs]
    l1, l2 = join_or_meet(P[0], P[1]), join_or_meet(P[2], P[3])
    X = join_or_meet(l1, l2)
    assert incident(X, l1) and incident(X, l2)
    assert incident(P[0], l1) and not incident(P[2], l1)


def test_join_of_equal_points_is_degenerate():
    P = conic_point(P1Point(3))
    with pytest.raises(DegenerateJoin):
        join_or_meet(P, P)


@given(distinct_points(n=3))
def test_collinear_three_conic_points_never(zs):
    assert not collinear(*(conic_point(z) for z in zs))


@given(distinct_points(n=3))
def test_chasles_center_exists(zs):
    c = chasles_center(Triangle(*zs))
    # the centre is not on the conic
    assert not is_conjugate(c, c)


def test_chasles_degenerate():
    with pytest.raises((DegenerateTriangle, ValueError)):
        chasles_center(Triangle(P1Point(1), P1Point(1), P1Point(2)))


def test_gaussian_points():
    zs = [P1Point(0), P1Point(1), INFINITY, P1Point(I)]
    # z3 = inf leaves (z2 - z4)/(z1 - z4) = (1 - i)/(-i) = 1 + i
    assert cross_ratio(*zs) == P1Point(1 + I)
    assert apply_flt(((1, 0), (0, 1)), P1Point(1 + I)) == P1Point(1 + I)
