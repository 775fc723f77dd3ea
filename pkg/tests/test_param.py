import random
from fractions import Fraction as F

import pytest

from ratcurve.errors import ArcMeetsInfinity, ConstantParameterization
from ratcurve.param import (Mobius, Mode, SemialgInput, apply_mobius,
                            conjugate_param, exact_root_value, param_from_affine,
                            param_from_strings, reduce_components)
from ratcurve.qmath import QuadExt, UPoly
from ratcurve.roots import isolate_complex_roots


def proj_equal(p, q):
    """Projective equality of parameterizations (componentwise up to a unit)."""
    ratio = None
    for a, b in zip(p.components, q.components):
        if a.is_zero() != b.is_zero():
            return False
        if a.is_zero():
            continue
        for x, y in zip(a.coeffs, b.coeffs):
            if (x == 0) != (y == 0):
                return False
            if x != 0:
                r = x / y
                if ratio is None:
                    ratio = r
                elif r != ratio:
                    return False
    return True


def test_reduce_forced_common_factor(circle):
    raw = param_from_strings(
        ["t0*(t0^2+t1^2)", "2*t0^2*t1", "t0*(t1^2-t0^2)"])
    assert raw == circle


def test_reduce_idempotent(circle, gerono):
    for p in (circle, gerono):
        again = reduce_components(list(p.components))
        assert proj_equal(again, p)


def test_gerono_stays_reduced(gerono):
    # the degree-4 components are already coprime
    assert gerono.degree == 4


def test_constant_map_rejected():
    with pytest.raises(ConstantParameterization):
        param_from_strings(["t0^2", "2*t0^2", "0"])


def test_unequal_degrees_rejected():
    with pytest.raises(ValueError):
        param_from_strings(["t0^2", "t1", "t0"])


def test_evaluate_circle(circle):
    # [1:1] -> [2:2:0], affine (1, 0)
    coords = circle.evaluate((1, 1))
    assert [c / coords[0] for c in coords] == [1, 1, 0]


def test_evaluate_gerono_at_i(gerono):
    root = next(p for p in isolate_complex_roots(UPoly((1, 0, 1)))
                if p.box[2] > 0)
    coords = gerono.evaluate(root)
    # [0 : 0 : -4i], projectively [0:0:1]
    assert coords[0] == QuadExt(0) and coords[1] == QuadExt(0)
    assert coords[2] == QuadExt(0, -4, -1)


def test_evaluate_line_at_infinity(line):
    coords = line.evaluate((0, 1))
    assert list(coords) == [0, 1, 0]


def test_homogeneity_property(circle, gerono):
    rng = random.Random(17)
    for p in (circle, gerono):
        for _ in range(10):
            lam = F(rng.randint(1, 9), rng.randint(1, 9)) * rng.choice((1, -1))
            t0, t1 = F(rng.randint(-5, 5)), F(rng.randint(-5, 5))
            if t0 == 0 and t1 == 0:
                continue
            a = p.evaluate((t0, t1))
            b = p.evaluate((lam * t0, lam * t1))
            scale = lam ** p.degree
            assert all(y == x * scale for x, y in zip(a, b))


def test_mobius_identity(circle):
    assert proj_equal(apply_mobius(circle, Mobius.identity()), circle)


def test_mobius_swap(line):
    swapped = apply_mobius(line, Mobius(0, 1, 1, 0))
    expect = param_from_strings(["t1", "t0", "0"])
    assert proj_equal(swapped, expect)


def test_mobius_roundtrip(circle, gerono):
    rng = random.Random(23)
    for p in (circle, gerono):
        for _ in range(5):
            while True:
                a, b, c, d = (rng.randint(-4, 4) for _ in range(4))
                if a * d - b * c != 0:
                    break
            m = Mobius(a, b, c, d)
            back = apply_mobius(apply_mobius(p, m), m.inverse())
            assert proj_equal(back, p)


def test_mobius_moves_denominator_root():
    # P0 = t0(t0 + t1): send the root t = 0 of P0(1,t)... here root [1:0]
    p = param_from_strings(["t0*t1", "t0^2", "t1^2"])
    # affine root of P0(1,t) = t is t = 0; send [1:0] to [0:1]
    m = Mobius(0, 1, 1, 0)
    q = apply_mobius(p, m)
    old_roots = p.p0.affine()
    new_aff = q.p0.affine()
    # the image root set is the Moebius image of the old root set
    assert old_roots(F(0)) == 0
    assert q.p0.inf_mult >= 1 or new_aff(F(0)) == 0


def test_conjugate_is_identity(circle, gerono, line):
    for p in (circle, gerono, line):
        assert conjugate_param(p) == p


def test_arc_rejects_denominator_root():
    p = param_from_strings(["t0^2-2*t1^2", "t0*t1", "t1^2"])
    with pytest.raises(ArcMeetsInfinity):
        SemialgInput(p, Mode.ARC, -1, 1)
    # an interval clear of +-1/sqrt(2) is fine
    SemialgInput(p, Mode.ARC, 1, 2)


def test_arc_rejects_root_at_endpoint():
    p = param_from_strings(["t0*t1", "t0^2", "t1^2"])  # real root t = 0
    with pytest.raises(ArcMeetsInfinity):
        SemialgInput(p, Mode.ARC, 0, 1)


def test_arc_needs_ordered_bounds(line):
    with pytest.raises(ValueError):
        SemialgInput(line, Mode.ARC, 1, -1)


def test_affine_input_matches_homogeneous(circle):
    aff = param_from_affine([("2*t", "1+t^2"), ("t^2-1", "1+t^2")])
    assert proj_equal(aff, circle)


def test_exact_root_value_quadratic():
    pts = isolate_complex_roots(UPoly((-2, 0, 1)))  # t^2 - 2
    vals = sorted((exact_root_value(p) for p in pts), key=lambda q: q.sign())
    assert vals[0] == QuadExt(0, -1, 2) and vals[1] == QuadExt(0, 1, 2)
