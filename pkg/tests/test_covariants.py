import random
from fractions import Fraction

import pytest
import sympy as sp
from hypothesis import given, settings
from hypothesis import strategies as st

from mysticum.algebra import I
from mysticum.covariants import (
    OCTAHEDRAL_SEXTIC,
    SPECIAL_P,
    T_FORM,
    f1,
    is_tri_involutive_covariant,
    psi_covariant_profile,
    syzygy_forms,
    theta,
    theta54_numeric,
    verify_syzygies,
)
from mysticum.forms import BinaryForm, DegreeMismatch, generic_sextic, sextic_from_roots, transvectant
from mysticum.plane import INFINITY, P1Point
from mysticum.triinv import find_alignments, psi

from conftest import random_points, random_tri_involutive, small_rationals

sextics = st.lists(small_rationals, min_size=7, max_size=7).map(BinaryForm)


def test_theta_orders():
    t24, t32, t54 = theta(sextic_from_roots(random_points(random.Random(1))))
    assert (t24.degree, t32.degree, t54.degree) == (4, 2, 4)
    with pytest.raises(DegreeMismatch):
        theta(BinaryForm([1, 2, 3]))


def test_syzygies_symbolic():
    forms = syzygy_forms()
    assert forms["(theta54,F)_4"].is_zero()
    assert forms["(theta54,theta24)_4"].is_zero()
    assert verify_syzygies()


def test_syzygy_negative_control():
    rng = random.Random(11)
    f = BinaryForm([Fraction(rng.randint(-9, 9), rng.randint(1, 4)) for _ in range(7)])
    t54 = theta(f)[2]
    assert not transvectant(t54, f, 2).is_zero()


@settings(max_examples=15)
@given(sextics)
def test_syzygies_on_random_sextics(f):
    _, t24, t54 = (None, *theta(f)[::2])
    assert transvectant(t54, f, 4).is_zero()
    assert transvectant(t54, t24, 4).is_zero()


def test_generic_sextic_shape():
    F = generic_sextic()
    assert F.degree == 6


def test_theta24_of_octahedral_sextic():
    assert theta(OCTAHEDRAL_SEXTIC)[0].is_zero()


def test_psi_profile():
    prof = psi_covariant_profile()
    assert prof.ok
    assert prof.f1_constant == Fraction(1, 75)
    p = Fraction(2)
    assert f1(p) == Fraction(25, 2)
    assert prof.theta24_multiple(p) == Fraction(25, 2) * prof.f1_constant


def test_psi_profile_f2_recorded():
    # theta32(psi_p) / T, computed once during the build
    num = [Fraction(-2, 1125), Fraction(1, 125), Fraction(-17, 1125), Fraction(7, 450),
           Fraction(-13, 2250), Fraction(-13, 2250), Fraction(7, 450), Fraction(-17, 1125),
           Fraction(1, 125), Fraction(-2, 1125)]
    m = psi_covariant_profile().theta32_multiple
    p = Fraction(7, 3)
    expected = sum(c * p ** i for i, c in enumerate(num)) / (p ** 3 * (p - 1) ** 3)
    assert m(p) == expected


def test_f1_against_sympy():
    p = sp.symbols("p")
    expr = (p**2 + 1) * (p**2 - 2*p + 2) * (2*p**2 - 2*p + 1) / (p**2 * (p - 1)**2)
    roots = set(sp.solve(sp.numer(sp.together(expr)), p))
    assert roots == {sp.I, -sp.I, 1 + sp.I, 1 - sp.I, (1 + sp.I) / 2, (1 - sp.I) / 2}
    for s in SPECIAL_P:
        assert f1(s) == 0


@pytest.mark.parametrize("p", SPECIAL_P)
def test_theta24_vanishes_at_special_p(p):
    assert theta(sextic_from_roots(list(psi(p))))[0].is_zero()


def test_theta24_nonzero_at_random_p():
    rng = random.Random(5)
    for _ in range(10):
        p = Fraction(rng.randint(-40, 40), rng.randint(1, 9))
        if p in (0, 1):
            continue
        t24 = theta(sextic_from_roots(list(psi(p))))[0]
        assert not t24.is_zero()
        # and it is a multiple of T^2
        assert t24.degree == 4 and t24.coeffs[0] != 0
        assert t24 == (T_FORM * T_FORM).scale(t24.coeffs[0])


@pytest.mark.parametrize("pts, expected", [
    (list(psi(Fraction(7, 3))), True),
    ([P1Point(0), P1Point(1), INFINITY, P1Point(-1), P1Point(3), P1Point(-5)], False),
    (list(psi(I)), True),
])
def test_tri_involutive_covariant(pts, expected):
    assert is_tri_involutive_covariant(pts) == expected


def test_covariant_agrees_with_alignment_search():
    rng = random.Random(99)
    for _ in range(8):
        tri = random_tri_involutive(rng)
        assert is_tri_involutive_covariant(tri) and find_alignments(tri)
        gen = random_points(rng)
        assert is_tri_involutive_covariant(gen) == bool(find_alignments(gen))


def test_numeric_theta54():
    pts = [(complex(z.u), complex(z.v)) for z in psi(Fraction(7, 3))]
    assert theta54_numeric(pts) < 1e-9
    bad = [(complex(z.u), complex(z.v)) for z in
           (P1Point(0), P1Point(1), INFINITY, P1Point(-1), P1Point(3), P1Point(-5))]
    # well separated from the 1e-9 decision tolerance
    assert theta54_numeric(bad) > 1e-6
    assert not is_tri_involutive_covariant(bad, tol=1e-9)
    assert is_tri_involutive_covariant(pts, tol=1e-9)


@settings(max_examples=10)
@given(sextics, small_rationals, small_rationals)
def test_theta_covariance(f, q, s):
    # unimodular substitution [[1, q], [0, 1]] then [[1, 0], [s, 1]]
    for M in ((1, q, 0, 1), (1, 0, s, 1)):
        lhs = theta(f.substitute(*M))
        rhs = [t.substitute(*M) for t in theta(f)]
        assert list(lhs) == rhs
