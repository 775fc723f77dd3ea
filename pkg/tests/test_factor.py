import random
from fractions import Fraction as F

import pytest

from ratcurve.factor import factor_rational, is_irreducible, squarefree_decomposition
from ratcurve.qmath import UPoly

t = UPoly.x()


def reassemble(factors):
    out = UPoly((1,))
    for g, m in factors:
        out = out * g ** m
    return out


def test_t4_minus_1():
    facs = factor_rational(t ** 4 - 1)
    assert facs == [((t - 1).monic(), 1), ((t + 1).monic(), 1), ((t * t + 1), 1)]


def test_repeated_quadratic():
    assert factor_rational((t * t + 1) ** 2) == [(t * t + 1, 2)]


def test_t2_minus_2_irreducible():
    # no rational roots by the rational-root theorem
    assert factor_rational(t * t - 2) == [(t * t - 2, 1)]
    assert is_irreducible(t * t - 2)


def test_constant_rejected():
    with pytest.raises(ValueError):
        factor_rational(UPoly((3,)))
    with pytest.raises(ValueError):
        factor_rational(UPoly())


def test_rational_coefficients():
    f = (t - F(1, 2)) * (t + F(3, 4)) * (t * t + F(1, 3))
    facs = factor_rational(f)
    assert reassemble(facs) * f.lc == f.monic() * f.lc
    assert len(facs) == 3


def test_product_reconstruction_random():
    rng = random.Random(20240811)
    for _ in range(40):
        f = UPoly([rng.randint(-6, 6) for _ in range(rng.randint(2, 8))])
        if f.degree < 1:
            continue
        facs = factor_rational(f)
        assert reassemble(facs) == f.monic()
        for g, _ in facs:
            assert g.lc == 1
            assert is_irreducible(g)


def test_squarefree_decomposition():
    f = (t - 1) ** 3 * (t * t + 1) ** 2 * (t + 2)
    dec = squarefree_decomposition(f)
    assert sorted(m for _, m in dec) == [1, 2, 3]
    rebuilt = UPoly((1,))
    for g, m in dec:
        rebuilt = rebuilt * g ** m
    assert rebuilt == f.monic()


def test_degree_stress():
    # six distinct irreducibles (Eisenstein at 2, plus t^2+1), total degree 24
    f = (t * t + 1) * (t ** 3 - 2) * (t ** 4 - 2) * (t ** 4 + 1) * \
        (t ** 5 - 2) * (t ** 6 - 2)
    assert f.degree == 24
    facs = factor_rational(f)
    assert reassemble(facs) == f.monic()
    assert sum(g.degree * m for g, m in facs) == 24
    assert len(facs) == 6


def test_deterministic_output():
    f = t ** 6 - 1
    assert factor_rational(f) == factor_rational(f)
