"""Command-line entry point: parse -> analyze -> classify -> witness -> verify.

Exit codes: 0 success, 1 usage or I/O error, 2 mathematical rejection
(improper parameterization, arc through infinity, unsupported extension
degree, failed verification); rejections carry a machine-readable
``reason`` and ``evidence``.  All documents are JSON with ``"schema": 1``
and sorted keys, so repeated runs are byte-identical.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from . import oracle
from .analysis import implicitize_plane
from .classify import classification_to_dict, classify
from .errors import MathRejection
from .param import Mode, ProjParam, SemialgInput, param_from_affine, param_from_strings
from .parse import parse_poly, print_mpoly
from .witness import (LaurentPoly, RealPolyMap, Source, laurent_from_real,
                      real_from_laurent, verify_witness, witness_circle,
                      witness_interval, witness_sphere_k)

SCHEMA = 1


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise _UsageError(message)


def _load_json(path):
    with open(path, "r", encoding="utf-8") as fh:
        return json.load(fh)


def _emit(doc, out=None):
    text = json.dumps(doc, indent=2, sort_keys=True, default=str)
    if out:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text + "\n")
    else:
        sys.stdout.write(text + "\n")


def load_param_document(path):
    """Read a parameterization document; returns (ProjParam, mode, a, b)."""
    doc = _load_json(path)
    if "affine" in doc:
        pairs = []
        for entry in doc["affine"]:
            if isinstance(entry, dict):
                pairs.append((entry["num"], entry.get("den", "1")))
            else:
                pairs.append((entry[0], entry[1] if len(entry) > 1 else "1"))
        param = param_from_affine(pairs, doc.get("variable", "t"))
    else:
        variables = doc.get("variables", ["t0", "t1"])
        param = param_from_strings(doc["components"], variables)
    mode = doc.get("mode")
    mode = Mode(mode) if mode else None
    a = Fraction(doc["a"]) if "a" in doc else None
    b = Fraction(doc["b"]) if "b" in doc else None
    return param, mode, a, b


def _build_input(args) -> SemialgInput:
    param, fmode, fa, fb = load_param_document(args.param)
    mode = Mode(args.mode) if getattr(args, "mode", None) else fmode
    if mode is None:
        mode = Mode.FULL_TRACE
    a = Fraction(args.a) if getattr(args, "a", None) is not None else fa
    b = Fraction(args.b) if getattr(args, "b", None) is not None else fb
    if mode is Mode.ARC:
        return SemialgInput(param, Mode.ARC, a, b)
    return SemialgInput(param, Mode.FULL_TRACE)


# ---------------------------------------------------------------------------
# Witness / Laurent documents


def witness_to_dict(w: RealPolyMap) -> dict:
    doc = {
        "schema": SCHEMA,
        "type": "witness",
        "source": w.source.value,
        "components": w.printed(),
        "variables": w.var_names(),
        "surd_d": w.surd_d,
    }
    if w.k is not None:
        doc["k"] = w.k
    return doc


def witness_from_dict(doc) -> RealPolyMap:
    source = Source(doc["source"])
    names = doc["variables"]
    comps = tuple(parse_poly(s, names, allow_surd=True) for s in doc["components"])
    return RealPolyMap(source, comps, k=doc.get("k"), surd_d=doc.get("surd_d"))


def laurent_to_dict(g: LaurentPoly) -> dict:
    coeffs = {}
    for k, (re, im) in sorted(g.coeffs.items()):
        coeffs[str(k)] = [re.numerator, re.denominator, im.numerator, im.denominator]
    return {"schema": SCHEMA, "type": "laurent", "coefficients": coeffs}


def laurent_from_dict(doc) -> LaurentPoly:
    coeffs = {}
    for k, (rn, rd, imn, imd) in doc["coefficients"].items():
        coeffs[int(k)] = (Fraction(rn, rd), Fraction(imn, imd))
    return LaurentPoly(coeffs)


# ---------------------------------------------------------------------------
# Commands


def _cmd_classify(args) -> int:
    inp = _build_input(args)
    cls = classify(inp)
    if args.text:
        sys.stdout.write(_classification_table(cls, args.param) + "\n")
    else:
        _emit(classification_to_dict(cls), args.out)
    return 0


def _classification_table(cls, name) -> str:
    def inv(v):
        return "1" if v == 1 else "infinity"

    rows = [
        f"input           : {name} [{cls.mode.value}]",
        f"case            : {cls.case_label.value}",
        f"compact         : {'yes' if cls.s_compact else 'no'}"
        f"   bounded trace : {'yes' if cls.report.real_trace_bounded else 'no'}",
        "invariant       :  p_B    p_S1   p_Sk>=2  r_B=r_S  rs_B=rs_S",
        f"value           :  {inv(cls.p_ball):<6} {inv(cls.p_sphere1):<6} "
        f"{'YES' if cls.p_sphere_k_ge2 else 'NO':<8} {inv(cls.r_ball_sphere):<8} "
        f"{inv(cls.rs_ball_sphere)}",
    ]
    if cls.laurent_image is not None:
        rows.append(f"Laurent image   : {'YES' if cls.laurent_image else 'NO'}")
    if cls.none_reason:
        rows.append(f"reason          : {cls.none_reason}")
    return "\n".join(rows)


def _cmd_witness(args) -> int:
    inp = _build_input(args)
    cls = classify(inp)
    target = args.target
    if target == "interval":
        w = witness_interval(inp, cls)
        _emit(witness_to_dict(w), args.out)
    elif target == "circle":
        w = witness_circle(inp, cls)
        _emit(witness_to_dict(w), args.out)
    elif target.startswith("sphere"):
        k = int(target[len("sphere"):] or "2")
        w = witness_sphere_k(inp, k, cls)
        _emit(witness_to_dict(w), args.out)
    elif target == "laurent":
        w = witness_circle(inp, cls)
        _emit(laurent_to_dict(laurent_from_real(w)), args.out)
    else:
        raise _UsageError(f"unknown witness target {target!r}")
    return 0


def _cmd_laurent(args) -> int:
    doc = _load_json(args.infile)
    if args.direction == "to-real":
        g = real_from_laurent(laurent_from_dict(doc))
        _emit(witness_to_dict(g), args.out)
    else:
        w = witness_from_dict(doc)
        _emit(laurent_to_dict(laurent_from_real(w)), args.out)
    return 0


def _cmd_implicitize(args) -> int:
    param, _, _, _ = load_param_document(args.param)
    form = implicitize_plane(param)
    _emit({
        "schema": SCHEMA,
        "type": "implicit_form",
        "variables": ["x0", "x1", "x2"],
        "form": print_mpoly(form, ["x0", "x1", "x2"]),
    }, args.out)
    return 0


def _cmd_sample(args) -> int:
    inp = _build_input(args)
    cloud = oracle.sample(inp.param, mode=inp.mode, a=inp.a, b=inp.b, n=args.n)
    oracle.emit_plot([cloud], args.out, args.format)
    if cloud.skipped:
        sys.stderr.write(f"skipped {len(cloud.skipped)} degenerate samples\n")
    return 0


def _cmd_check(args) -> int:
    inp = _build_input(args)
    wdoc = _load_json(args.witness)
    if wdoc.get("type") == "laurent":
        w = laurent_from_dict(wdoc)
    else:
        w = witness_from_dict(wdoc)
    rep = verify_witness(w, inp, tol=Fraction(args.tol), n=args.n)
    doc = {
        "schema": SCHEMA,
        "type": "check",
        "passed": rep.passed,
        "exact_ok": rep.exact_ok,
        "exact_detail": rep.exact_detail,
        "endpoints_ok": rep.endpoints_ok,
        "hausdorff": rep.hausdorff,
        "gate": rep.gate,
        "n": rep.n,
    }
    _emit(doc, args.out)
    if not rep.passed:
        raise MathRejection("witness verification failed",
                            hausdorff=rep.hausdorff, gate=rep.gate)
    return 0


def _make_parser() -> _Parser:
    p = _Parser(prog="ratcurve", description=__doc__)
    sub = p.add_subparsers(dest="command", required=True)

    def add_input_flags(sp, need_mode=True):
        sp.add_argument("--param", required=True, help="parameterization JSON file")
        if need_mode:
            sp.add_argument("--mode", choices=["full", "arc"])
            sp.add_argument("--a")
            sp.add_argument("--b")
        sp.add_argument("--out")

    sp = sub.add_parser("classify")
    add_input_flags(sp)
    group = sp.add_mutually_exclusive_group()
    group.add_argument("--json", action="store_true", default=True)
    group.add_argument("--text", action="store_true")
    sp.set_defaults(fn=_cmd_classify)

    sp = sub.add_parser("witness")
    add_input_flags(sp)
    sp.add_argument("--target", required=True,
                    help="interval | circle | sphere2 | sphereK | laurent")
    sp.set_defaults(fn=_cmd_witness)

    sp = sub.add_parser("laurent")
    sp.add_argument("direction", choices=["to-real", "from-real"])
    sp.add_argument("--in", dest="infile", required=True)
    sp.add_argument("--out")
    sp.set_defaults(fn=_cmd_laurent)

    sp = sub.add_parser("implicitize")
    sp.add_argument("--param", required=True)
    sp.add_argument("--out")
    sp.set_defaults(fn=_cmd_implicitize)

    sp = sub.add_parser("sample")
    add_input_flags(sp)
    sp.add_argument("--n", type=int, default=10 ** 4)
    sp.add_argument("--format", choices=["svg", "csv"], default="svg")
    sp.set_defaults(fn=_cmd_sample)

    sp = sub.add_parser("check")
    add_input_flags(sp)
    sp.add_argument("--witness", required=True)
    sp.add_argument("--tol", default="1/1000")
    sp.add_argument("--n", type=int, default=10 ** 4)
    sp.set_defaults(fn=_cmd_check)
    return p


def main(argv=None) -> int:
    parser = _make_parser()
    try:
        args = parser.parse_args(argv)
        return args.fn(args)
    except _UsageError as exc:
        sys.stderr.write(f"usage error: {exc}\n")
        return 1
    except (OSError, json.JSONDecodeError, ValueError, KeyError) as exc:
        sys.stderr.write(f"error: {exc}\n")
        return 1
    except MathRejection as exc:
        _emit({
            "schema": SCHEMA,
            "type": "rejection",
            "reason": exc.reason,
            "message": str(exc),
            "evidence": exc.evidence,
        })
        return 2


if __name__ == "__main__":
    sys.exit(main())
