import json
import random
from fractions import Fraction as F

from ratcurve.classify import (INF, CaseLabel, classification_to_dict,
                               classification_to_json, classify)
from ratcurve.param import (Mobius, Mode, SemialgInput, apply_mobius,
                            param_from_strings, reduce_components)


def full(p):
    return SemialgInput(p, Mode.FULL_TRACE)


def arc(p, a, b):
    return SemialgInput(p, Mode.ARC, a, b)


class TestDecisionTable:
    def test_line_arc(self, line):
        c = classify(arc(line, -1, 1))
        assert c.case_label is CaseLabel.CASE1
        assert c.p_ball == 1 and c.p_sphere1 == 1 and c.p_sphere_k_ge2
        assert c.r_ball_sphere == 1 and c.rs_ball_sphere == 1
        assert c.s_compact

    def test_gerono_full(self, gerono):
        c = classify(full(gerono))
        assert c.case_label is CaseLabel.CASE2
        assert c.s_compact and c.report.real_trace_bounded
        assert c.p_ball == INF and c.p_sphere1 == 1
        assert c.laurent_image is True
        assert c.r_ball_sphere == 1

    def test_circle_full(self, circle):
        c = classify(full(circle))
        assert c.case_label is CaseLabel.CASE3
        assert c.p_ball == INF and c.p_sphere1 == 1
        assert not c.p_sphere_k_ge2
        assert c.r_ball_sphere == 1 == c.rs_ball_sphere

    def test_parabola_full_noncompact(self, parabola):
        c = classify(full(parabola))
        assert not c.s_compact
        assert c.p_ball == INF and c.p_sphere1 == INF
        assert c.r_ball_sphere == INF and not c.p_sphere_k_ge2

    def test_parabola_arc(self, parabola):
        c = classify(arc(parabola, 0, 2))
        assert c.case_label is CaseLabel.CASE1
        assert c.p_ball == 1 and c.p_sphere1 == 1 and c.p_sphere_k_ge2

    def test_circle_arc_is_not_sphere_image(self, circle):
        c = classify(arc(circle, -1, 1))
        assert c.case_label is CaseLabel.CASE3
        assert c.p_ball == INF and c.p_sphere1 == INF
        assert c.r_ball_sphere == 1  # compact sub-arc of a rational curve

    def test_line_full_unbounded(self, line):
        c = classify(full(line))
        assert not c.s_compact and c.p_ball == INF and c.p_sphere1 == INF


class TestNoneCase:
    def test_three_infinity_points(self):
        # P0 = t0 (t0^2 + t1^2): roots [0:1] and +-i -> three points
        p = param_from_strings(
            ["t0*(t0^2+t1^2)", "t1^3", "t0*t1^2-t0^3"])
        c = classify(full(p))
        assert c.case_label is CaseLabel.NONE
        assert c.p_sphere1 == INF
        assert c.none_reason is not None

    def test_bounded_none_two_conjugate_pairs(self):
        # P0 = (t0^2+t1^2)(t0^2+4 t1^2): four non-real roots, bounded trace
        p = param_from_strings(
            ["(t0^2+t1^2)*(t0^2+4*t1^2)", "t0^3*t1", "t1^4"])
        c = classify(full(p))
        assert c.s_compact
        assert c.case_label is CaseLabel.NONE
        assert c.p_sphere1 == INF
        assert c.r_ball_sphere == 1


class TestInvariants:
    def test_boundedk_consistency(self, circle, gerono):
        # a compact algebraic curve is never a polynomial image of a ball
        for p in (circle, gerono):
            c = classify(full(p))
            assert c.report.real_trace_bounded
            assert c.p_ball == INF

    def test_type_invariants_hold(self, circle, gerono, line, parabola):
        inputs = [full(circle), full(gerono), arc(line, -1, 1), full(parabola),
                  arc(parabola, 0, 2), arc(circle, -1, 1)]
        for inp in inputs:
            c = classify(inp)
            assert c.rs_ball_sphere == c.r_ball_sphere
            if c.p_ball == 1:
                assert c.p_sphere1 == 1
            if c.p_sphere_k_ge2:
                assert c.case_label is CaseLabel.CASE1
            if c.laurent_image is not None:
                assert c.laurent_image == (c.p_sphere1 == 1)

    def test_target_affine_invariance(self, circle, gerono):
        rng = random.Random(41)
        for p in (circle, gerono):
            base = classify(full(p))
            for _ in range(3):
                q = _affine_target_change(p, rng)
                c = classify(full(q))
                assert c.case_label is base.case_label
                assert c.p_ball == base.p_ball
                assert c.p_sphere1 == base.p_sphere1
                assert c.r_ball_sphere == base.r_ball_sphere

    def test_mobius_invariance(self, circle, gerono, line):
        rng = random.Random(43)
        for p in (circle, gerono, line):
            base = classify(full(p))
            for _ in range(3):
                while True:
                    a, b, cc, d = (rng.randint(-3, 3) for _ in range(4))
                    if a * d - b * cc != 0:
                        break
                c = classify(full(apply_mobius(p, Mobius(a, b, cc, d))))
                assert (c.case_label, c.p_ball, c.p_sphere1, c.p_sphere_k_ge2,
                        c.r_ball_sphere) == \
                       (base.case_label, base.p_ball, base.p_sphere1,
                        base.p_sphere_k_ge2, base.r_ball_sphere)


def _affine_target_change(p, rng):
    m = p.m
    while True:
        mat = [[F(rng.randint(-3, 3)) for _ in range(m)] for _ in range(m)]
        det = mat[0][0] * mat[1][1] - mat[0][1] * mat[1][0] if m == 2 else None
        if det:
            break
    shift = [F(rng.randint(-3, 3)) for _ in range(m)]
    comps = [p.components[0]]
    for i in range(m):
        acc = p.components[0] * shift[i]
        for j in range(m):
            acc = acc + p.components[j + 1] * mat[i][j]
        comps.append(acc)
    return reduce_components(comps)


class TestSerialization:
    def test_stable_json(self, circle):
        c = classify(full(circle))
        s1 = classification_to_json(c)
        s2 = classification_to_json(classify(full(circle)))
        assert s1 == s2
        doc = json.loads(s1)
        assert doc["schema"] == 1
        assert doc["case_label"] == "CASE3"
        assert doc["p_ball"] == "infinity"
        assert doc["p_sphere1"] == 1
        assert doc["p_sphere_k_ge2"] == "NO"
        assert doc["laurent_image"] == "YES"

    def test_infinity_encoding(self, parabola):
        doc = classification_to_dict(classify(full(parabola)))
        assert doc["p_ball"] == "infinity"
        assert doc["r_ball_sphere"] == "infinity"

    def test_no_laurent_field_for_space_curves(self):
        p = param_from_strings(["t0^2+t1^2", "2*t0*t1", "t1^2-t0^2", "t0*t1"])
        doc = classification_to_dict(classify(full(p)))
        assert "laurent_image" not in doc
