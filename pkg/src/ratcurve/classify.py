"""Decision layer: image-of-ball / image-of-sphere invariants.

The classifier consumes the infinity report of a proper parameterization
and the input mode and decides, with exact arithmetic only:

* the case label of the points-at-infinity structure
  (CASE1: one real point with one branch; CASE2: one real point with a
  conjugate pair of branches; CASE3: a conjugate pair of non-real
  points, one branch each; NONE otherwise),
* whether the denoted set is compact,
* the invariants p_ball, p_sphere1, p_sphere_k_ge2, r = rs.

In this input model the set is always irreducible (a continuous image
of a connected parameter set) and its Zariski closure is a rational
curve, so for compact sets the regular/regulous invariants are 1.
"""

from __future__ import annotations

import enum
import json
from dataclasses import dataclass

from .analysis import InfinityReport, infinity_fibers
from .param import Mode, SemialgInput

INF = float("inf")


class CaseLabel(enum.Enum):
    CASE1 = "CASE1"
    CASE2 = "CASE2"
    CASE3 = "CASE3"
    NONE = "NONE"


@dataclass(frozen=True)
class Classification:
    case_label: CaseLabel
    p_ball: float
    p_sphere1: float
    p_sphere_k_ge2: bool
    r_ball_sphere: float
    rs_ball_sphere: float
    laurent_image: bool | None
    s_compact: bool
    mode: Mode
    report: InfinityReport
    none_reason: str | None = None

    def __post_init__(self):
        assert self.rs_ball_sphere == self.r_ball_sphere
        if self.p_ball == 1:
            assert self.p_sphere1 == 1
        if self.p_sphere_k_ge2:
            assert self.case_label is CaseLabel.CASE1
        if self.laurent_image is not None:
            assert self.laurent_image == (self.p_sphere1 == 1)


def _case_label(report: InfinityReport):
    fibers = report.fibers
    if len(fibers) == 1:
        f = fibers[0]
        if f.size == 1 and f.is_real_point:
            return CaseLabel.CASE1, None
        if f.is_real_point and f.fiber_is_conjugate_pair:
            return CaseLabel.CASE2, None
    if len(fibers) == 2:
        f1, f2 = fibers
        if (f1.size == 1 and f2.size == 1
                and not f1.is_real_point and not f2.is_real_point
                and f1.fiber[0].conjugate().same_box(f2.fiber[0])):
            return CaseLabel.CASE3, None
    sizes = [f.size for f in fibers]
    reason = (f"{len(fibers)} points at infinity with fiber sizes {sizes}; "
              "not one real branch, one conjugate branch pair, or a "
              "conjugate point pair")
    return CaseLabel.NONE, reason


def classify(inp: SemialgInput) -> Classification:
    """Decide every invariant for a validated input."""
    report = infinity_fibers(inp.param)
    label, none_reason = _case_label(report)
    arc = inp.mode is Mode.ARC
    s_compact = True if arc else report.real_trace_bounded
    if label is CaseLabel.CASE1 and not arc:
        # one real branch at infinity forces an unbounded trace
        assert not report.real_trace_bounded

    if not s_compact:
        r = INF
        p_ball = INF
        p_s1 = INF
        p_sk = False
    else:
        r = 1
        p_ball = 1 if label is CaseLabel.CASE1 else INF
        if arc:
            p_s1 = 1 if label is CaseLabel.CASE1 else INF
        else:
            p_s1 = 1 if (report.real_trace_bounded
                         and label in (CaseLabel.CASE2, CaseLabel.CASE3)) else INF
        p_sk = arc and label is CaseLabel.CASE1

    laurent = (p_s1 == 1) if inp.param.m == 2 else None
    return Classification(
        case_label=label,
        p_ball=p_ball,
        p_sphere1=p_s1,
        p_sphere_k_ge2=p_sk,
        r_ball_sphere=r,
        rs_ball_sphere=r,
        laurent_image=laurent,
        s_compact=s_compact,
        mode=inp.mode,
        report=report,
        none_reason=none_reason,
    )


# ---------------------------------------------------------------------------
# Serialization


def _inv_json(v):
    return 1 if v == 1 else "infinity"


def _yesno(v):
    return "YES" if v else "NO"


def _point_json(tp):
    if tp.exact is not None:
        out = []
        for c in tp.exact:
            if c.b == 0:
                out.append(str(c.a))
            elif c.a == 0 and c.b == 1:
                out.append(f"sqrt({c.d})")
            elif c.a == 0:
                out.append(f"{c.b}*sqrt({c.d})")
            else:
                out.append(f"{c.a}+{c.b}*sqrt({c.d})".replace("+-", "-"))
        return out
    return {"approx": [[z.real, z.imag] for z in tp.approx()]}


def _fiber_json(f):
    roots = []
    for r in f.fiber:
        if r.is_infinity:
            roots.append("[0:1]")
        else:
            b = r.box
            roots.append({"minpoly_degree": r.minpoly.degree,
                          "box": [str(x) for x in b]})
    return {
        "point": _point_json(f.point),
        "fiber": roots,
        "multiplicities": list(f.multiplicities),
        "is_real_point": f.is_real_point,
        "fiber_is_conjugate_pair": f.fiber_is_conjugate_pair,
    }


def classification_to_dict(c: Classification) -> dict:
    doc = {
        "schema": 1,
        "case_label": c.case_label.value,
        "p_ball": _inv_json(c.p_ball),
        "p_sphere1": _inv_json(c.p_sphere1),
        "p_sphere_k_ge2": _yesno(c.p_sphere_k_ge2),
        "r_ball_sphere": _inv_json(c.r_ball_sphere),
        "rs_ball_sphere": _inv_json(c.rs_ball_sphere),
        "s_compact": c.s_compact,
        "mode": c.mode.value,
        "evidence": {
            "real_trace_bounded": c.report.real_trace_bounded,
            "real_root_count_of_P0": c.report.real_root_count_of_P0,
            "fibers": [_fiber_json(f) for f in c.report.fibers],
        },
    }
    if c.laurent_image is not None:
        doc["laurent_image"] = _yesno(c.laurent_image)
    if c.none_reason is not None:
        doc["none_reason"] = c.none_reason
    return doc


def classification_to_json(c: Classification) -> str:
    return json.dumps(classification_to_dict(c), indent=2, sort_keys=True)
