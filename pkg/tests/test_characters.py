from fractions import Fraction
from math import factorial

import pytest

from lie_euler.characters import character_value, even_column_character_sums, rim_hooks, schur_expand
from lie_euler.lie import derivation_character, lie_character
from lie_euler.partitions import conjugate, even_column_partitions, partitions_of, z_factor
from lie_euler.symfunc import exterior_plethysm, p, specialize_dimension


def hook_length_dimension(lam):
    n = sum(lam)
    conj = conjugate(lam)
    prod = 1
    for i, row in enumerate(lam):
        for j in range(row):
            prod *= (row - j - 1) + (conj[j] - i - 1) + 1
    return factorial(n) // prod


def test_character_examples():
    for mu in partitions_of(5):
        assert character_value((5,), mu) == 1
    assert character_value((1, 1), (2,)) == -1
    assert character_value((2, 1), (1, 1, 1)) == 2


def test_size_mismatch_rejected():
    with pytest.raises(ValueError):
        character_value((2, 1), (2,))


@pytest.mark.parametrize("n", range(1, 10))
def test_degrees_match_hook_length_formula(n):
    for lam in partitions_of(n):
        assert character_value(lam, (1,) * n) == hook_length_dimension(lam)


@pytest.mark.parametrize("n", range(1, 8))
def test_row_orthogonality(n):
    parts = partitions_of(n)
    for lam in parts:
        for nu in parts:
            s = sum(Fraction(character_value(lam, mu) * character_value(nu, mu), z_factor(mu)) for mu in parts)
            assert s == (1 if lam == nu else 0)


def test_sign_character():
    for n in range(1, 8):
        for mu in partitions_of(n):
            sign = (-1) ** (n - len(mu))
            assert character_value((1,) * n, mu) == sign


def test_rim_hook_removal():
    assert rim_hooks((2, 1), 3) == (((), -1),)
    assert rim_hooks((3, 1), 2) == (((1, 1), 1),)
    assert rim_hooks((2, 1, 1), 2) == (((2,), -1),)


def test_schur_expand_examples():
    assert schur_expand(p(1, 1)) == {(2,): 1, (1, 1): 1}
    e3 = exterior_plethysm(3, p(1))
    assert schur_expand(e3 * e3) == {(1,) * 6: 1, (2, 1, 1, 1, 1): 1, (2, 2, 1, 1): 1, (2, 2, 2): 1}
    assert schur_expand(lie_character(3).char) == {(2, 1): 1}
    # dimension cross-check: L_3 on C^N has N(N^2-1)/3 elements, s_(2,1) the same
    for n in range(1, 7):
        assert specialize_dimension(lie_character(3).char, n) == Fraction(n * (n * n - 1), 3)
    assert schur_expand(derivation_character(1).char) == {(1, 1, 1): 1}


@pytest.mark.parametrize("n", range(0, 15, 2))
def test_even_column_sums_match_direct_character_sums(n):
    psi = even_column_character_sums(n)
    shapes = even_column_partitions(n)
    for mu in partitions_of(n):
        assert psi.get(mu, 0) == sum(character_value(lam, mu) for lam in shapes)


def test_even_column_sums_odd_degree_empty():
    assert even_column_character_sums(7) == {}
