"""Witness maps certifying the positive classifications.

* interval witness: a real Moebius change of parameter sends the unique
  real denominator root to [0:1], which turns the parameterization into
  a polynomial map on the affine line; an affine rescale maps [-1, 1]
  onto the transported arc.
* circle witness: for the two bounded cases a real Moebius over one
  quadratic extension sends the conjugate root pair of the denominator
  form to {+-i}, making P0 a power of t0^2 + t1^2; substituting
  [t0:t1] = [x:y] then restricts to a polynomial map on the unit circle
  whose image is the full real trace.  In the interval case the witness
  is composed with the first-coordinate surjection of the circle.
* sphere witness: the interval witness composed with the
  first-coordinate projection, which maps any sphere onto [-1, 1].
* the Laurent dictionary: a real polynomial map restricted to the unit
  circle equals a Laurent polynomial via x = (z + 1/z)/2 and
  y = (z - 1/z)/(2i), and conversely by splitting real and imaginary
  parts of sum a_k z^k + a_{-k} (x - i y)^k; both directions are exact
  on Gaussian-rational coefficients and invert each other.

Circle components are kept in the normal form with y-degree <= 1
(y^2 -> 1 - x^2), the unique representative modulo the circle ideal.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from fractions import Fraction

from .classify import CaseLabel, Classification, classify
from .errors import UnsupportedExtension, WrongCase
from .multipoly import MPoly
from .param import Mobius, Mode, SemialgInput, apply_mobius, _compose_linear_quadext
from .qmath import QuadExt, UPoly, squarefree_decompose_int, squarefree_part
from .parse import print_mpoly


class Source(enum.Enum):
    INTERVAL = "interval"
    CIRCLE = "circle"
    SPHERE_K = "sphere"


@dataclass(frozen=True)
class RealPolyMap:
    """Polynomial map from [-1,1], S^1 or S^k with Q(sqrt(d)) coefficients."""

    source: Source
    components: tuple
    k: int | None = None
    surd_d: int | None = None

    @property
    def m(self) -> int:
        return len(self.components)

    def var_names(self):
        if self.source is Source.INTERVAL:
            return ["t"]
        if self.source is Source.CIRCLE:
            return ["x", "y"]
        if self.k == 2:
            return ["x", "y", "z"]
        return [f"x{i}" for i in range(1, self.k + 2)]

    def printed(self):
        names = self.var_names()
        return [print_mpoly(c, names) for c in self.components]

    def evaluate(self, point):
        return tuple(c.evaluate(point) for c in self.components)

    def __repr__(self):
        return f"RealPolyMap({self.source.value}, {self.printed()})"


def reduce_circle(p: MPoly) -> MPoly:
    """Normal form modulo x^2 + y^2 - 1: eliminate y^2, leaving y-degree <= 1."""
    if p.n != 2:
        raise ValueError("circle reduction expects bivariate input")
    x = MPoly.var(2, 0)
    one_minus_x2 = MPoly.const(2, Fraction(1)) - x * x
    out = MPoly(2)
    for (ex, ey), c in p.terms.items():
        q, r = divmod(ey, 2)
        term = MPoly(2, {(ex, r): c})
        if q:
            term = term * one_minus_x2 ** q
        out = out + term
    return out


def _demote(p: MPoly) -> MPoly:
    """Map QuadExt coefficients with zero surd part back to Fraction."""
    if all(isinstance(c, QuadExt) for c in p.terms.values()):
        if all(c.b == 0 for c in p.terms.values()):
            return p.map_coeffs(lambda c: c.a)
    return p


def _rational_sqrt(v2: Fraction):
    """sqrt of a positive rational as (rational, None) or (QuadExt, d)."""
    num, den = v2.numerator, v2.denominator
    s, f = squarefree_decompose_int(num * den)
    if s == 1:
        return QuadExt.of(Fraction(f, den)), None
    return QuadExt(0, Fraction(f, den), s), s


# ---------------------------------------------------------------------------
# Interval witness (ball case)


def witness_interval(inp: SemialgInput, cls: Classification = None) -> RealPolyMap:
    """Polynomial map g with g([-1,1]) = Pi([a,b]), exactly."""
    cls = cls if cls is not None else classify(inp)
    if inp.mode is not Mode.ARC or cls.case_label is not CaseLabel.CASE1:
        raise WrongCase(
            "interval witness requires ARC mode and the single-real-branch case",
            case_label=cls.case_label.value, mode=inp.mode.value)
    param = inp.param
    p0 = param.p0
    sf = squarefree_part(p0.affine()) if p0.affine().degree >= 1 else UPoly((1,))
    if p0.inf_mult > 0 and sf.degree == 0:
        mob = Mobius.identity()
    elif p0.inf_mult == 0 and sf.degree == 1:
        r = -sf.c[0] / sf.c[1]
        mob = Mobius(-r, 1, 1, 0)
    else:
        raise UnsupportedExtension(
            "the real denominator root has degree >= 2 over Q; the witness "
            "construction supports Q and Q(sqrt(d)) only",
            minpoly=repr(sf))
    par2 = apply_mobius(param, mob)
    den = par2.p0.affine()
    if den.degree != 0:
        raise ArithmeticError("Moebius normalization failed to clear the denominator")
    u0 = den.c[0]
    ea = mob.apply_affine(inp.a).rational_value()
    eb = mob.apply_affine(inp.b).rational_value()
    lo, hi = (ea, eb) if ea <= eb else (eb, ea)
    lam = UPoly([(hi + lo) / 2, (hi - lo) / 2])
    comps = []
    for p in par2.components[1:]:
        g = p.affine().compose(lam) * (1 / u0)
        comps.append(MPoly.from_upoly(g, 1, 0))
    return RealPolyMap(Source.INTERVAL, tuple(comps))


# ---------------------------------------------------------------------------
# Circle witness (S^1 case)


def witness_circle(inp: SemialgInput, cls: Classification = None) -> RealPolyMap:
    """Polynomial map f with f(S^1) = S, for any p_sphere1 = 1 input."""
    cls = cls if cls is not None else classify(inp)
    if cls.p_sphere1 != 1:
        raise WrongCase("classifier decides p_sphere1 = infinity",
                        case_label=cls.case_label.value, mode=inp.mode.value)
    if cls.case_label is CaseLabel.CASE1:
        g = witness_interval(inp, cls)
        comps = tuple(_lift_first_var(c, 2) for c in g.components)
        return RealPolyMap(Source.CIRCLE, comps, surd_d=g.surd_d)

    param = inp.param
    sf = squarefree_part(param.p0.affine()).monic()
    if sf.degree != 2:
        raise UnsupportedExtension(
            "conjugate denominator pair is not quadratic over Q",
            minpoly=repr(sf))
    b, c = sf.c[1], sf.c[0]
    u = -b / 2
    v2 = c - b * b / 4
    if v2 <= 0:
        raise WrongCase("denominator roots are real; not the bounded cases")
    v, d = _rational_sqrt(v2)
    mob = Mobius(v, QuadExt.of(0), QuadExt.of(-u), QuadExt.of(1))
    inv = mob.inverse()
    coeff_lists = [_compose_linear_quadext(p, inv) for p in param.components]
    deg = param.degree
    p_half, rem = divmod(deg, 2)
    if rem:
        raise ArithmeticError("bounded-case parameterization degree must be even")
    expected = _binomial_power_coeffs(p_half)
    u0 = coeff_lists[0][0]
    for k, coeff in enumerate(coeff_lists[0]):
        want = u0 * expected[k]
        if coeff != want:
            raise ArithmeticError("P0 did not normalize to a power of t0^2 + t1^2")
    if not u0.is_rational():
        raise ArithmeticError("unit of the normalized denominator is irrational")
    inv_u0 = Fraction(1) / u0.rational_value()
    comps = []
    for coeffs in coeff_lists[1:]:
        terms = {}
        for k, coeff in enumerate(coeffs):
            val = coeff * inv_u0
            if val:
                terms[(deg - k, k)] = val
        comps.append(_demote(reduce_circle(MPoly(2, terms))))
    return RealPolyMap(Source.CIRCLE, tuple(comps), surd_d=d)


def _binomial_power_coeffs(p: int):
    """Coefficient list of (t0^2 + t1^2)^p in t1-degree order."""
    out = [Fraction(0)] * (2 * p + 1)
    for j in range(p + 1):
        out[2 * j] = Fraction(math.comb(p, j))
    return out


def _lift_first_var(p: MPoly, arity: int) -> MPoly:
    return MPoly(arity, {(e[0],) + (0,) * (arity - 1): c for e, c in p.terms.items()})


# ---------------------------------------------------------------------------
# Sphere witness (S^k, k >= 2)


def witness_sphere_k(inp: SemialgInput, k: int = 2,
                     cls: Classification = None) -> RealPolyMap:
    """Interval witness composed with the first-coordinate projection of S^k."""
    if k < 2:
        raise ValueError("sphere witness needs k >= 2 (use witness_circle for k = 1)")
    cls = cls if cls is not None else classify(inp)
    if not cls.p_sphere_k_ge2:
        raise WrongCase("classifier decides p_sphere_k_ge2 = NO",
                        case_label=cls.case_label.value, mode=inp.mode.value)
    g = witness_interval(inp, cls)
    comps = tuple(_lift_first_var(c, k + 1) for c in g.components)
    return RealPolyMap(Source.SPHERE_K, comps, k=k, surd_d=g.surd_d)


# ---------------------------------------------------------------------------
# Laurent dictionary


class LaurentPoly:
    """Finitely supported sum of a_k z^k with Gaussian-rational a_k."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=None):
        c = {}
        for k, (re, im) in (coeffs or {}).items():
            re, im = Fraction(re), Fraction(im)
            if re or im:
                c[int(k)] = (re, im)
        self.coeffs = c

    @classmethod
    def monomial(cls, k: int, re=1, im=0) -> "LaurentPoly":
        return cls({k: (Fraction(re), Fraction(im))})

    def is_zero(self):
        return not self.coeffs

    def __eq__(self, other):
        return isinstance(other, LaurentPoly) and self.coeffs == other.coeffs

    def __add__(self, other):
        c = dict(self.coeffs)
        for k, (re, im) in other.coeffs.items():
            pre, pim = c.get(k, (Fraction(0), Fraction(0)))
            c[k] = (pre + re, pim + im)
        return LaurentPoly(c)

    def __mul__(self, other):
        if isinstance(other, tuple):
            a, b = other
            return LaurentPoly({k: (re * a - im * b, re * b + im * a)
                                for k, (re, im) in self.coeffs.items()})
        c = {}
        for k1, (a1, b1) in self.coeffs.items():
            for k2, (a2, b2) in other.coeffs.items():
                k = k1 + k2
                re, im = c.get(k, (Fraction(0), Fraction(0)))
                c[k] = (re + a1 * a2 - b1 * b2, im + a1 * b2 + b1 * a2)
        return LaurentPoly(c)

    def __pow__(self, n: int):
        result = LaurentPoly.monomial(0)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def evaluate(self, z: complex) -> complex:
        acc = 0j
        for k, (re, im) in self.coeffs.items():
            acc += complex(re, im) * z ** k
        return acc

    def support(self):
        return sorted(self.coeffs)

    def __repr__(self):
        parts = [f"({re}{'+' if im >= 0 else ''}{im}i)z^{k}"
                 for k, (re, im) in sorted(self.coeffs.items())]
        return "LaurentPoly(" + " + ".join(parts) + ")"


def laurent_from_real(g: RealPolyMap) -> LaurentPoly:
    """Gamma with Gamma|S1 = (g1 + i g2)|S1, exact Gaussian-rational."""
    if g.source is not Source.CIRCLE or g.m != 2:
        raise ValueError("laurent_from_real expects a plane circle map")
    comps = []
    for c in g.components:
        c = _demote(c)
        for coeff in c.terms.values():
            if isinstance(coeff, QuadExt) and coeff.b != 0:
                raise UnsupportedExtension(
                    "Laurent coefficients are Gaussian-rational; witness "
                    "coefficients carry a genuine surd", surd_d=coeff.d)
        comps.append(c.map_coeffs(lambda q: q.a if isinstance(q, QuadExt) else q))
    g1, g2 = comps
    x_l = LaurentPoly({1: (Fraction(1, 2), 0), -1: (Fraction(1, 2), 0)})
    y_l = LaurentPoly({1: (0, Fraction(-1, 2)), -1: (0, Fraction(1, 2))})
    monos = set(g1.terms) | set(g2.terms)
    out = LaurentPoly()
    xpow = {0: LaurentPoly.monomial(0)}
    ypow = {0: LaurentPoly.monomial(0)}
    for (k, l) in sorted(monos):
        if k not in xpow:
            xpow[k] = x_l ** k
        if l not in ypow:
            ypow[l] = y_l ** l
        a = g1.terms.get((k, l), Fraction(0))
        b = g2.terms.get((k, l), Fraction(0))
        out = out + (xpow[k] * ypow[l]) * (a, b)
    return out


def real_from_laurent(gamma: LaurentPoly) -> RealPolyMap:
    """Circle-normal-form map (g1, g2) with g|S1 = Gamma|S1."""
    x = MPoly.var(2, 0)
    y = MPoly.var(2, 1)
    re_acc = MPoly(2)
    im_acc = MPoly(2)
    max_pow = max((abs(k) for k in gamma.coeffs), default=0)
    prs, pis = [MPoly.const(2, Fraction(1))], [MPoly(2)]
    for _ in range(max_pow):
        pr, pi = prs[-1], pis[-1]
        prs.append(pr * x - pi * y)
        pis.append(pr * y + pi * x)
    for k, (a, b) in gamma.coeffs.items():
        pr, pi = prs[abs(k)], pis[abs(k)]
        if k < 0:
            pi = -pi
        re_acc = re_acc + pr * a - pi * b
        im_acc = im_acc + pr * b + pi * a
    return RealPolyMap(Source.CIRCLE,
                       (reduce_circle(re_acc), reduce_circle(im_acc)))


# ---------------------------------------------------------------------------
# Verification


@dataclass(frozen=True)
class WitnessReport:
    passed: bool
    exact_ok: bool | None
    exact_detail: str
    endpoints_ok: bool | None
    hausdorff: float
    gate: float
    n: int


def verify_witness(w, inp: SemialgInput, tol=Fraction(1, 10 ** 9),
                   n: int = 10 ** 4) -> WitnessReport:
    """Exact membership identity (m = 2) plus a sampled coverage check.

    The numeric gate is max(tol, discretization bound): a two-sided
    Hausdorff between n-point clouds cannot resolve below the sampling
    gap, so tolerances below it gate only the exact identity.
    """
    from . import oracle
    if isinstance(w, LaurentPoly):
        w = real_from_laurent(w)
    exact_ok = None
    exact_detail = "skipped (exact identity is plane-curve only)"
    if inp.param.m == 2 and w.m == 2:
        exact_ok, exact_detail = _exact_identity(w, inp)
    endpoints_ok = None
    if w.source is Source.INTERVAL:
        endpoints_ok = _endpoints_exact(w, inp)
    cloud_w = oracle.sample(w, n=n)
    cloud_s = oracle.sample(inp.param, mode=inp.mode, a=inp.a, b=inp.b, n=n)
    dist = oracle.hausdorff(cloud_w, cloud_s)
    diam = max(oracle.cloud_diameter(cloud_s), 1e-9)
    gate = max(float(tol), 10.0 * diam / n)
    passed = bool((exact_ok is not False) and (endpoints_ok is not False)
                  and dist <= gate)
    return WitnessReport(passed=passed, exact_ok=exact_ok,
                         exact_detail=exact_detail, endpoints_ok=endpoints_ok,
                         hausdorff=dist, gate=gate, n=n)


def _exact_identity(w: RealPolyMap, inp: SemialgInput):
    from .analysis import implicitize_plane
    form = implicitize_plane(inp.param)
    arity = w.components[0].n
    one = MPoly.const(arity, Fraction(1))
    comp = form.subst([one, w.components[0], w.components[1]])
    if w.source is Source.CIRCLE:
        comp = reduce_circle(comp)
    if comp.is_zero():
        return True, "implicit form vanishes on the witness (exact)"
    return False, "exact identity FAILED: implicit form does not vanish"


def _endpoints_exact(w: RealPolyMap, inp: SemialgInput):
    if inp.mode is not Mode.ARC:
        return None
    ends_w = {w.evaluate((Fraction(-1),)), w.evaluate((Fraction(1),))}
    ends_s = set()
    for t in (inp.a, inp.b):
        coords = inp.param.evaluate((Fraction(1), Fraction(t)))
        den = coords[0]
        ends_s.add(tuple(c / den for c in coords[1:]))

    def norm(pts):
        return {tuple(QuadExt.of(c) for c in p) for p in pts}

    return norm(ends_w) == norm(ends_s)
