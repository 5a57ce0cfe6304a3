from fractions import Fraction
from math import comb

import pytest
from hypothesis import given, settings, strategies as st

from lie_euler.characters import schur_expand
from lie_euler.lie import derivation_character
from lie_euler.partitions import partitions_of, z_factor
from lie_euler.symfunc import (
    SymFuncFormatError,
    SymmetricFunction,
    exterior_plethysm,
    hall_inner,
    p,
    plethysm_power,
    sf_mul,
    specialize_dimension,
)

e2 = (p(1, 1) - p(2)) / 2


def test_zero_coefficients_never_stored():
    f = SymmetricFunction({(1,): 1, (2,): 0})
    assert list(f) == [(1,)]
    assert not (p(1) - p(1))
    assert len(p(2) + p(1) - p(2)) == 1


def test_rejects_non_partition_keys():
    with pytest.raises(ValueError):
        SymmetricFunction({(1, 2): 1})


def test_products():
    assert sf_mul(p(1), p(1)) == p(1, 1)
    assert sf_mul(e2, p(1)) == (p(1, 1, 1) - p(2, 1)) / 2
    assert sf_mul(e2, SymmetricFunction.one()) == e2


def test_plethysm_power():
    assert plethysm_power(2, p(1)) == p(2)
    assert plethysm_power(2, e2) == (p(2, 2) - p(4)) / 2
    assert plethysm_power(3, p(1) + p(2)) == p(3) + p(6)
    with pytest.raises(ValueError):
        plethysm_power(0, p(1))


def test_exterior_plethysm_examples():
    f = derivation_character(2).char
    assert exterior_plethysm(0, f) == SymmetricFunction.one()
    assert exterior_plethysm(1, f) == f
    assert exterior_plethysm(2, p(1)) == e2
    assert schur_expand(exterior_plethysm(2, e2)) == {(2, 1, 1): 1}


def test_exterior_plethysm_rejects_inhomogeneous():
    with pytest.raises(ValueError):
        exterior_plethysm(2, p(1) + p(2, 1))
    with pytest.raises(ValueError):
        exterior_plethysm(2, SymmetricFunction.one())


@pytest.mark.parametrize("m", range(1, 8))
def test_elementary_functions(m):
    em = exterior_plethysm(m, p(1))
    assert schur_expand(em) == {(1,) * m: 1}
    for n in range(1, 9):
        assert specialize_dimension(em, n) == comb(n, m)


def _exp_coefficients(f, order):
    # sum_m e_m[f] t^m = exp(X), X = sum_r (-1)^(r-1) p_r[f] t^r / r, by the Taylor series of exp
    x = [SymmetricFunction.zero()] + [plethysm_power(r, f) * Fraction((-1) ** (r - 1), r) for r in range(1, order + 1)]
    out = [SymmetricFunction.one()] + [SymmetricFunction.zero()] * order
    power = list(out)
    fact = 1
    for n in range(1, order + 1):
        nxt = [SymmetricFunction.zero()] * (order + 1)
        for a in range(order + 1):
            for b in range(1, order + 1 - a):
                nxt[a + b] = nxt[a + b] + sf_mul(power[a], x[b])
        power = nxt
        fact *= n
        out = [o + q / fact for o, q in zip(out, power)]
    return out


@pytest.mark.parametrize("f", [p(1), e2, derivation_character(1).char, derivation_character(2).char,
                               derivation_character(4).char, p(1, 1), p(3) - p(2, 1)])
def test_exterior_generating_identity(f):
    d = f.degree()
    order = min(6, max(1, 12 // d))
    want = _exp_coefficients(f, order)
    for m in range(order + 1):
        assert exterior_plethysm(m, f) == want[m]


def test_hall_inner():
    assert hall_inner(p(2), p(2)) == 2
    assert hall_inner(p(1, 1), p(2)) == 0
    assert hall_inner(exterior_plethysm(2, p(1)), exterior_plethysm(2, p(1))) == 1


def test_power_sum_orthogonality():
    for n in range(1, 9):
        lams = partitions_of(n)
        for lam in lams:
            for mu in lams:
                assert hall_inner(p(*lam), p(*mu)) == (z_factor(lam) if lam == mu else 0)


def test_specialize_dimension():
    assert specialize_dimension(p(1), 7) == 7
    assert specialize_dimension(exterior_plethysm(2, p(1)), 4) == 6
    for n in range(3, 9):
        assert specialize_dimension(exterior_plethysm(3, p(1)), n) == Fraction(n * (n - 1) * (n - 2), 6)


# -- serialization ---------------------------------------------------------

def test_text_format():
    text = e2.to_text()
    assert text == "SYMFUNC v1 degree=2 terms=2\n2: -1/2\n1,1: 1/2\n"
    assert SymmetricFunction.one().to_text() == "SYMFUNC v1 degree=0 terms=1\n-: 1/1\n"
    assert SymmetricFunction.from_text(text) == e2


partition_st = st.lists(st.integers(1, 6), max_size=5).map(lambda xs: tuple(sorted(xs, reverse=True)))
coeff_st = st.fractions(max_denominator=10**6).filter(bool)


@settings(max_examples=150)
@given(st.dictionaries(partition_st, coeff_st, max_size=12))
def test_text_roundtrip(terms):
    f = SymmetricFunction(terms)
    text = f.to_text()
    g = SymmetricFunction.from_text(text)
    assert g == f
    assert g.to_text() == text


@pytest.mark.parametrize("bad", [
    "",
    "SYMFUNC v2 degree=1 terms=1\n1: 1/1\n",
    "SYMFUNC v1 degree=1 terms=2\n1: 1/1\n",
    "SYMFUNC v1 degree=1 terms=1\n1: 0/1\n",
    "SYMFUNC v1 degree=2 terms=1\n1: 1/1\n",
    "SYMFUNC v1 degree=2 terms=1\n1,2: 1/1\n",
    "SYMFUNC v1 degree=2 terms=2\n1,1: 1/1\n2: 1/1\n",
    "SYMFUNC v1 degree=1 terms=1\n1: 2/4\n",
])
def test_text_rejects_malformed(bad):
    with pytest.raises(SymFuncFormatError):
        SymmetricFunction.from_text(bad)
