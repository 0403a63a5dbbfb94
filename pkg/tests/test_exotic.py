import pytest
from hypothesis import given
from hypothesis import strategies as st

from mysticum.exotic import (
    INDICES,
    LETTERS,
    IndexPerm,
    LetterPerm,
    group_closure,
    verify_zeta,
    zeta,
    zeta_inv,
)

letter_perms = st.permutations(LETTERS).map(LetterPerm)
index_perms = st.permutations(INDICES).map(IndexPerm)


def test_zeta_verified():
    assert verify_zeta()


def test_zeta_exhaustive_homomorphism():
    assert verify_zeta(exhaustive=True)


@given(letter_perms, letter_perms)
def test_zeta_homomorphism(s, t):
    assert zeta(s * t) == zeta(s) * zeta(t)


@given(index_perms)
def test_zeta_inverse(s):
    assert zeta(zeta_inv(s)) == s


@given(letter_perms)
def test_zeta_not_inner(s):
    # the exotic map sends transpositions to triple transpositions, so it
    # does not preserve cycle type
    if s.cycle_type() == (2,):
        assert zeta(s).cycle_type() == (2, 2, 2)


@pytest.mark.parametrize("index_cycles, letter_cycles", [
    ("(1 2)", "(A E)(B D)(C F)"),
    ("(1 4)(2 5)(3 6)", "(A B)"),
    ("(4 5)", "(A D)(B E)(C F)"),
    ("(3 4)", "(A E)(B C)(D F)"),
    ("(1 6)", "(A C)(B E)(D F)"),
])
def test_zeta_inv_table_values(index_cycles, letter_cycles):
    assert zeta_inv(IndexPerm.from_cycles(index_cycles)) == LetterPerm.from_cycles(letter_cycles)


def test_perm_basics():
    s = LetterPerm.from_cycles("(A B C)")
    assert s("A") == "B" and s("C") == "A"
    assert (s ** 3).is_identity()
    assert s * s.inverse() == LetterPerm()
    with pytest.raises(ValueError):
        LetterPerm(("A", "A", "B", "C", "D", "E"))
    with pytest.raises(TypeError):
        zeta(IndexPerm())


def test_group_closure_orders():
    assert len(group_closure([LetterPerm.from_cycles("(A B)"),
                              LetterPerm.from_cycles("(A B C D E F)")])) == 720
    assert len(group_closure([IndexPerm.from_cycles("(1 2)"), IndexPerm.from_cycles("(1 3)")])) == 6
