import csv
import math
import random
from fractions import Fraction as F

import pytest

from ratcurve import oracle
from ratcurve.analysis import implicitize_plane
from ratcurve.param import Mode, param_from_strings
from ratcurve.witness import LaurentPoly, RealPolyMap, Source


class TestSample:
    def test_circle_points_on_circle(self, circle):
        cloud = oracle.sample(circle, mode=Mode.FULL_TRACE, n=256)
        for x, y in cloud.points:
            assert abs(x * x + y * y - 1) < 1e-12

    def test_line_arc_three_points(self, line):
        cloud = oracle.sample(line, mode=Mode.ARC, a=-1, b=1, n=3)
        assert [p for p in cloud.points] == [(-1.0, 0.0), (0.0, 0.0), (1.0, 0.0)]

    def test_gerono_witness_on_curve(self, gerono):
        from ratcurve.param import SemialgInput
        from ratcurve.witness import witness_circle
        w = witness_circle(SemialgInput(gerono, Mode.FULL_TRACE))
        cloud = oracle.sample(w, n=2000)
        for x1, x2 in cloud.points:
            assert abs(x2 * x2 - x1 * x1 + x1 ** 4) < 1e-9

    def test_samples_satisfy_implicit_form(self, circle, gerono, parabola):
        for p in (circle, gerono, parabola):
            form = implicitize_plane(p)
            cloud = oracle.sample(p, mode=Mode.FULL_TRACE, n=500)
            scale = max(1.0, max(abs(x) for pt in cloud.points for x in pt)) ** form.degree()
            for pt in cloud.points:
                assert abs(form.evaluate((1.0,) + pt)) < 1e-8 * scale

    def test_denominator_root_skipped_annotated(self, line):
        cloud = oracle.sample(line, mode=Mode.FULL_TRACE, n=100)
        # theta = pi hits the parameter [0:1] where the line meets infinity
        assert len(cloud.skipped) == 1
        assert abs(cloud.skipped[0] - math.pi) < 1e-12

    def test_nan_rejected(self):
        with pytest.raises(ValueError):
            oracle.SampleCloud([(0.0, float("nan"))])

    def test_too_few(self, circle):
        with pytest.raises(ValueError):
            oracle.sample(circle, n=1)


class TestHausdorff:
    def test_identical_zero(self, circle):
        cloud = oracle.sample(circle, mode=Mode.FULL_TRACE, n=300)
        assert oracle.hausdorff(cloud, cloud) == 0.0

    def test_translation(self):
        n = 200
        a = oracle.SampleCloud([(math.cos(t), math.sin(t))
                                for t in [2 * math.pi * j / n for j in range(n)]])
        b = oracle.SampleCloud([(p[0] + 2.0, p[1]) for p in a.points])
        d = oracle.hausdorff(a, b)
        assert abs(d - 2.0) < 0.05

    def test_symmetric_and_triangle(self):
        rng = random.Random(13)
        clouds = []
        for _ in range(3):
            clouds.append(oracle.SampleCloud(
                [(rng.uniform(-1, 1), rng.uniform(-1, 1)) for _ in range(60)]))
        a, b, c = clouds
        dab = oracle.hausdorff(a, b)
        dba = oracle.hausdorff(b, a)
        dac = oracle.hausdorff(a, c)
        dcb = oracle.hausdorff(c, b)
        assert dab == dba
        assert dab <= dac + dcb + 1e-12

    def test_matches_bruteforce(self):
        rng = random.Random(29)
        a = oracle.SampleCloud([(rng.uniform(-2, 2), rng.uniform(-2, 2))
                                for _ in range(40)])
        b = oracle.SampleCloud([(rng.uniform(-2, 2), rng.uniform(-2, 2))
                                for _ in range(35)])
        brute = max(
            max(min(math.dist(p, q) for q in b.points) for p in a.points),
            max(min(math.dist(p, q) for q in a.points) for p in b.points))
        assert abs(oracle.hausdorff(a, b) - brute) < 1e-12

    def test_dimension_mismatch(self):
        a = oracle.SampleCloud([(0.0, 0.0)])
        b = oracle.SampleCloud([(0.0, 0.0, 0.0)])
        with pytest.raises(ValueError):
            oracle.hausdorff(a, b)


class TestWinding:
    def test_monomials(self):
        for k in (-3, -2, -1, 1, 2, 3):
            assert oracle.winding_number(LaurentPoly.monomial(k)) == k

    def test_doubling_stable(self):
        g = LaurentPoly({2: (1, 0), 0: (F(1, 4), 0)})
        assert oracle.winding_number(g, n=512) == oracle.winding_number(g, n=1024)

    def test_multiplicative(self):
        rng = random.Random(3)
        for _ in range(5):
            g1 = LaurentPoly({rng.randint(1, 3): (1, 0), 0: (F(1, 5), 0)})
            g2 = LaurentPoly({-rng.randint(1, 3): (1, 0), 0: (F(1, 7), 0)})
            w1 = oracle.winding_number(g1)
            w2 = oracle.winding_number(g2)
            assert oracle.winding_number(g1 * g2) == w1 + w2

    def test_vanishing_inconclusive(self):
        # z - 1 vanishes at z = 1 on the circle
        with pytest.raises(ValueError):
            oracle.winding_number(LaurentPoly({1: (1, 0), 0: (-1, 0)}))

    def test_circle_self_map_degree(self):
        # the real circle self-map built from z^(2k) has winding 2k
        g = RealPolyMap(Source.CIRCLE, tuple(
            real for real in _z_power_map(4).components))
        assert oracle.winding_number(g) == 4


def _z_power_map(k):
    from ratcurve.witness import real_from_laurent
    return real_from_laurent(LaurentPoly.monomial(k))


class TestEmit:
    def test_svg(self, tmp_path, gerono):
        cloud = oracle.sample(gerono, mode=Mode.FULL_TRACE, n=400)
        path = tmp_path / "gerono.svg"
        oracle.emit_plot([cloud], str(path), "SVG")
        text = path.read_text()
        assert text.startswith("<?xml")
        assert "<polyline" in text and 'width="800"' in text

    def test_csv(self, tmp_path, line):
        cloud = oracle.sample(line, mode=Mode.ARC, a=-1, b=1, n=3)
        path = tmp_path / "line.csv"
        oracle.emit_plot([cloud], str(path), "CSV")
        with open(path, newline="") as fh:
            rows = list(csv.reader(fh))
        assert rows[0] == ["x1", "x2", "param"]
        assert len(rows) == 4

    def test_empty_rejected(self, tmp_path):
        with pytest.raises(ValueError):
            oracle.emit_plot([], str(tmp_path / "x.svg"))

    def test_svg_needs_plane(self, tmp_path):
        cloud = oracle.SampleCloud([(0.0, 0.0, 0.0), (1.0, 1.0, 1.0)])
        with pytest.raises(ValueError):
            oracle.emit_plot([cloud], str(tmp_path / "x.svg"), "SVG")


class TestBoundednessProbe:
    def test_fixtures(self, circle, gerono, line, parabola):
        assert oracle.boundedness_probe(circle, n=2000)
        assert oracle.boundedness_probe(gerono, n=2000)
        assert not oracle.boundedness_probe(line, n=2000)
        assert not oracle.boundedness_probe(parabola, n=2000)

    def test_affine_real_root(self):
        p = param_from_strings(["t0^2-2*t1^2", "t0*t1", "t1^2"])
        assert not oracle.boundedness_probe(p, n=2000)
