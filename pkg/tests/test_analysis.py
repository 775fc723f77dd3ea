import random
from fractions import Fraction as F

import pytest

from ratcurve.analysis import (implicitize_plane, infinity_fibers,
                               is_real_trace_bounded, properness_check)
from ratcurve.errors import ImproperParameterization
from ratcurve.param import Mobius, apply_mobius, param_from_strings
from ratcurve.parse import parse_poly, print_mpoly
from ratcurve.qmath import HPoly2, QuadExt
from ratcurve import oracle


class TestProperness:
    def test_circle_proper(self, circle):
        cd = properness_check(circle)
        assert cd.generic_fiber_degree == 1
        assert cd.h.degree(0) == 1 and cd.h.degree(1) == 1
        assert cd.node_pairs == ()

    def test_composed_double_cover(self, circle):
        f0 = HPoly2(2, [1, 0, -1])
        f1 = HPoly2(2, [0, 2, 0])
        cd = properness_check(circle.compose_self_map(f0, f1))
        assert cd.generic_fiber_degree == 2

    def test_gerono_node(self, gerono):
        cd = properness_check(gerono)
        assert cd.generic_fiber_degree == 1
        rational_pairs = set()
        for a, b in cd.node_pairs:
            if not a.is_infinity and not b.is_infinity:
                if a.is_rational() and b.is_rational():
                    rational_pairs.add(frozenset(
                        (a.rational_value(), b.rational_value())))
        # the lemniscate node at the origin identifies t = 1 with t = -1
        assert frozenset((F(1), F(-1))) in rational_pairs

    def test_line_no_nodes(self, line):
        assert properness_check(line).node_pairs == ()


class TestBoundedness:
    def test_power_of_sum_of_squares(self, circle, gerono):
        assert is_real_trace_bounded(circle)
        assert is_real_trace_bounded(gerono)

    def test_monomial_denominator(self, line, parabola):
        assert not is_real_trace_bounded(line)
        assert not is_real_trace_bounded(parabola)

    def test_two_real_roots(self):
        p = param_from_strings(["t0^2-2*t1^2", "t0*t1", "t1^2"])
        assert not is_real_trace_bounded(p)

    def test_agrees_with_probe_on_fixtures(self, circle, gerono, line, parabola):
        for p in (circle, gerono, line, parabola):
            assert is_real_trace_bounded(p) == oracle.boundedness_probe(p, n=2000)


class TestInfinityFibers:
    def test_line(self, line):
        rep = infinity_fibers(line)
        assert not rep.real_trace_bounded
        assert rep.real_root_count_of_P0 == 1
        assert len(rep.fibers) == 1
        f = rep.fibers[0]
        assert f.size == 1 and f.is_real_point and not f.fiber_is_conjugate_pair
        assert f.fiber[0].is_infinity
        assert [c.rational_value() for c in f.point.exact] == [0, 1, 0]

    def test_gerono(self, gerono):
        rep = infinity_fibers(gerono)
        assert rep.real_trace_bounded
        assert len(rep.fibers) == 1
        f = rep.fibers[0]
        assert f.size == 2 and f.is_real_point and f.fiber_is_conjugate_pair
        assert f.multiplicities == (2, 2)
        assert [c.rational_value() for c in f.point.exact] == [0, 0, 1]

    def test_circle(self, circle):
        rep = infinity_fibers(circle)
        assert rep.real_trace_bounded
        assert len(rep.fibers) == 2
        pts = []
        for f in rep.fibers:
            assert f.size == 1 and not f.is_real_point
            pts.append(f.point.exact)
        # exactly {[0:1:i], [0:1:-i]}
        want = {(QuadExt(0), QuadExt(1), QuadExt(0, 1, -1)),
                (QuadExt(0), QuadExt(1), QuadExt(0, -1, -1))}
        assert {tuple(p) for p in pts} == want

    def test_fiber_sizes_sum(self, circle, gerono, line, parabola):
        from ratcurve.qmath import squarefree_part
        for p in (circle, gerono, line, parabola):
            rep = infinity_fibers(p)
            aff = p.p0.affine()
            expected = (squarefree_part(aff).degree if aff.degree >= 1 else 0)
            expected += 1 if p.p0.inf_mult > 0 else 0
            assert sum(f.size for f in rep.fibers) == expected

    def test_conjugation_closed_system(self, circle, gerono):
        for p in (circle, gerono):
            rep = infinity_fibers(p)
            for f in rep.fibers:
                conj_roots = [r.conjugate() for r in f.fiber]
                # the conjugated fiber appears in the report
                assert any(
                    all(any(c.same_box(r) for r in g.fiber) for c in conj_roots)
                    and g.size == f.size
                    for g in rep.fibers)
                if f.is_real_point:
                    assert all(any(c.same_box(r) for r in f.fiber)
                               for c in conj_roots)

    def test_improper_rejected(self, circle):
        f0 = HPoly2(2, [1, 0, -1])
        f1 = HPoly2(2, [0, 2, 0])
        bad = circle.compose_self_map(f0, f1)
        with pytest.raises(ImproperParameterization) as err:
            infinity_fibers(bad)
        assert err.value.evidence["generic_fiber_degree"] == 2

    def test_mobius_invariance_small(self, circle, gerono):
        rng = random.Random(31)
        for p in (circle, gerono):
            base = _fiber_multiset(infinity_fibers(p))
            for _ in range(3):
                while True:
                    a, b, c, d = (rng.randint(-3, 3) for _ in range(4))
                    if a * d - b * c != 0:
                        break
                rep = infinity_fibers(apply_mobius(p, Mobius(a, b, c, d)))
                assert _fiber_multiset(rep) == base


def _fiber_multiset(rep):
    out = []
    for f in rep.fibers:
        pt = tuple(f.point.exact) if f.point.exact is not None else None
        out.append((pt, f.size, f.is_real_point, f.fiber_is_conjugate_pair,
                    tuple(sorted(f.multiplicities))))
    return sorted(out, key=repr)


class TestImplicitize:
    def test_circle(self, circle):
        form = implicitize_plane(circle)
        assert print_mpoly(form, ["x0", "x1", "x2"]) == "-x0^2+x1^2+x2^2"

    def test_gerono(self, gerono):
        form = implicitize_plane(gerono)
        expect = parse_poly("x0^2*(x2^2-x1^2)+x1^4", ["x0", "x1", "x2"])
        assert form == expect

    def test_line(self, line):
        form = implicitize_plane(line)
        assert print_mpoly(form, ["x0", "x1", "x2"]) == "x2"

    def test_vanishes_on_parameterization(self, circle, gerono, line, parabola):
        from ratcurve.multipoly import MPoly
        for p in (circle, gerono, line, parabola):
            form = implicitize_plane(p)
            comp = form.subst([MPoly.from_upoly(c.affine(), 1, 0)
                               for c in p.components])
            assert comp.is_zero()

    def test_parabola(self, parabola):
        form = implicitize_plane(parabola)
        # x1^2 - x0 x2 = 0
        expect = parse_poly("x1^2-x0*x2", ["x0", "x1", "x2"])
        assert form == expect

    def test_wrong_dimension(self):
        p = param_from_strings(["t0", "t1"])
        with pytest.raises(ValueError):
            implicitize_plane(p)
