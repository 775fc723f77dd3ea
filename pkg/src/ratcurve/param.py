"""Projective parameterizations of rational curves and the input model.

A ``ProjParam`` is a reduced tuple [P0 : ... : Pm] of homogeneous forms
of one common degree with rational coefficients (so the map commutes
with complex conjugation).  ``SemialgInput`` couples a parameterization
with the semialgebraic set it denotes: the full real trace Pi(RP^1), or
the arc Pi([a, b]) for a compact parameter interval avoiding the real
roots of P0.
"""

from __future__ import annotations

import enum
from fractions import Fraction

from .errors import ArcMeetsInfinity, ConstantParameterization
from .multipoly import MPoly
from .qmath import (HPoly2, QuadExt, UPoly, hform_gcd, poly_lcm,
                    squarefree_part, sturm_chain, squarefree_decompose_int,
                    _variations_at)
from .roots import AlgPoint1


class Mode(enum.Enum):
    FULL_TRACE = "full"
    ARC = "arc"


class ProjParam:
    """Reduced homogeneous parameterization [P0 : ... : Pm] over Q."""

    __slots__ = ("m", "degree", "components")

    def __init__(self, components, _checked=False):
        components = tuple(components)
        if len(components) < 2:
            raise ValueError("need at least P0 and P1")
        degs = {p.d for p in components}
        if len(degs) != 1:
            raise ValueError("components must share one degree")
        if all(p.is_zero() for p in components):
            raise ValueError("all components are zero")
        self.m = len(components) - 1
        self.degree = components[0].d
        self.components = components
        if not _checked:
            g = hform_gcd(components)
            if g.d > 0:
                raise ValueError("components are not gcd-reduced; use reduce()")
            if self._coefficient_rank() <= 1:
                raise ConstantParameterization(
                    "all components are proportional: the map is constant")

    def _coefficient_rank(self) -> int:
        rows = [list(p.coeffs) for p in self.components]
        rank = 0
        cols = len(rows[0])
        r = 0
        for c in range(cols):
            piv = None
            for i in range(r, len(rows)):
                if rows[i][c] != 0:
                    piv = i
                    break
            if piv is None:
                continue
            rows[r], rows[piv] = rows[piv], rows[r]
            pr = rows[r]
            for i in range(r + 1, len(rows)):
                if rows[i][c] != 0:
                    f = rows[i][c] / pr[c]
                    rows[i] = [a - f * b for a, b in zip(rows[i], pr)]
            r += 1
            rank += 1
            if rank > 1:
                return rank
        return rank

    @property
    def p0(self) -> HPoly2:
        return self.components[0]

    def affine_components(self):
        return [p.affine() for p in self.components]

    def __eq__(self, other):
        return isinstance(other, ProjParam) and self.components == other.components

    def __repr__(self):
        return f"ProjParam(m={self.m}, d={self.degree})"

    def evaluate_pair(self, t0, t1):
        """Exact evaluation at a rational (or QuadExt) coordinate pair."""
        return tuple(p.evaluate(t0, t1) for p in self.components)

    def evaluate(self, point):
        """Exact projective coordinates at a parameter point.

        Rational pairs and AlgPoint1 of degree <= 2 give exact QuadExt
        coordinates; higher-degree points are rejected here (use
        ``evaluate_boxes`` for certified interval coordinates).
        """
        if isinstance(point, AlgPoint1):
            if point.is_infinity:
                return self.evaluate_pair(Fraction(0), Fraction(1))
            alpha = exact_root_value(point)
            return self.evaluate_pair(QuadExt.of(1), alpha)
        t0, t1 = point
        return self.evaluate_pair(Fraction(t0), Fraction(t1))

    def evaluate_boxes(self, point: AlgPoint1, width):
        """Certified complex-interval coordinates at an algebraic point."""
        from .qmath import eval_upoly_civ
        p = point.refined(width)
        z = p.civ()
        return tuple(eval_upoly_civ(c.affine(), z) for c in self.components)

    def compose_self_map(self, f0: HPoly2, f1: HPoly2) -> "ProjParam":
        """Precompose with the self-map [t0:t1] -> [f0:f1] of the line."""
        return reduce_components([p.compose(f0, f1) for p in self.components])


def reduce_components(raw) -> ProjParam:
    """Divide the components by their gcd and validate the result."""
    raw = [p if isinstance(p, HPoly2) else p for p in raw]
    if all(p.is_zero() for p in raw):
        raise ValueError("all components are zero")
    g = hform_gcd(raw)
    zero_to = lambda d: HPoly2(d, [0] * (d + 1))
    out = []
    d = raw[0].d - g.d
    for p in raw:
        out.append(zero_to(d) if p.is_zero() else p.div_exact(g))
    # canonical sign: first nonzero coefficient of the first nonzero component
    for p in out:
        lead = next((c for c in p.coeffs if c != 0), None)
        if lead is None:
            continue
        if lead < 0:
            out = [q * Fraction(-1) for q in out]
        break
    return ProjParam(out)


def exact_root_value(point: AlgPoint1) -> QuadExt:
    """The algebraic number of a degree <= 2 point, as an exact QuadExt."""
    q = point.minpoly
    if q is None:
        raise ValueError("point at infinity has no affine value")
    if q.degree == 1:
        return QuadExt.of(point.rational_value())
    if q.degree != 2:
        raise ValueError(f"root has degree {q.degree} over Q; only <= 2 is exact")
    qm = q.monic()
    b, c = qm.c[1], qm.c[0]
    disc = b * b - 4 * c
    if disc == 0:
        raise ValueError("minimal polynomial is not squarefree")
    s, f = squarefree_decompose_int(disc.numerator * disc.denominator)
    # sqrt(disc) = (f / denominator) * sqrt(s)
    scale = Fraction(f, disc.denominator)
    re = -b / 2
    half = scale / 2
    if s > 0:
        cand = QuadExt(re, half, s)
        lo, hi = point.box[0], point.box[1]
        inside = (cand - lo).sign() >= 0 and (hi - cand).sign() >= 0
        return cand if inside else QuadExt(re, -half, s)
    sign = 1 if point.box[2] > 0 or point.box[3] > 0 else -1
    return QuadExt(re, sign * half, s)


# ---------------------------------------------------------------------------
# Moebius transformations of the parameter line


class Mobius:
    """Invertible matrix [[a, b], [c, d]] acting by [t0:t1] -> [a t0 + b t1 : c t0 + d t1].

    Entries live in Q or one shared quadratic extension Q(sqrt(d)); the
    matrix is real, so the transformation commutes with conjugation.
    """

    __slots__ = ("a", "b", "c", "d")

    def __init__(self, a, b, c, d):
        self.a, self.b, self.c, self.d = (QuadExt.of(x) for x in (a, b, c, d))
        for x in (self.a, self.b, self.c, self.d):
            if not x.is_real():
                raise ValueError("Moebius entries must be real")
        if not self.det():
            raise ValueError("singular Moebius matrix")

    def det(self) -> QuadExt:
        return self.a * self.d - self.b * self.c

    @classmethod
    def identity(cls) -> "Mobius":
        return cls(1, 0, 0, 1)

    def inverse(self) -> "Mobius":
        return Mobius(self.d, -self.b, -self.c, self.a)

    def is_rational(self) -> bool:
        return all(x.is_rational() for x in (self.a, self.b, self.c, self.d))

    def apply_affine(self, t):
        """Image of the affine parameter t (None encodes [0:1])."""
        if t is None:
            t0, t1 = QuadExt.of(0), QuadExt.of(1)
        else:
            t0, t1 = QuadExt.of(1), QuadExt.of(t)
        u0 = self.a * t0 + self.b * t1
        u1 = self.c * t0 + self.d * t1
        if not u0:
            return None
        return u1 / u0

    def __repr__(self):
        return f"Mobius([[{self.a}, {self.b}], [{self.c}, {self.d}]])"


def apply_mobius(param: ProjParam, mob: Mobius) -> ProjParam:
    """Reparameterize by the inverse action so the image curve is unchanged.

    The result must stay rational (ProjParam is a rational type); a
    transformation with a genuine surd that does not cancel is rejected.
    """
    inv = mob.inverse()
    comps = []
    for p in param.components:
        q = _compose_linear_quadext(p, inv)
        rat = []
        for c in q:
            if not c.is_rational():
                raise ValueError(
                    "transformed components leave Q; apply_mobius requires a "
                    "rational outcome (witness construction handles surds)")
            rat.append(c.rational_value())
        comps.append(HPoly2(p.d, rat))
    return reduce_components(comps)


def _compose_linear_quadext(p: HPoly2, mob: Mobius):
    """Coefficients of p(a t0 + b t1, c t0 + d t1) over QuadExt."""
    d = p.d
    acc = [QuadExt.of(0)] * (d + 1)
    # expand (a t0 + b t1)^(d-k) (c t0 + d t1)^k iteratively
    for k, coeff in enumerate(p.coeffs):
        if coeff == 0:
            continue
        poly = [QuadExt.of(coeff)]  # coefficients in t1-degree order
        for _ in range(d - k):
            poly = _lin_mul(poly, mob.a, mob.b)
        for _ in range(k):
            poly = _lin_mul(poly, mob.c, mob.d)
        for i, c in enumerate(poly):
            acc[i] = acc[i] + c
    return acc


def _lin_mul(poly, u: QuadExt, v: QuadExt):
    out = [QuadExt.of(0)] * (len(poly) + 1)
    for i, c in enumerate(poly):
        out[i] = out[i] + c * u
        out[i + 1] = out[i + 1] + c * v
    return out


def conjugate_param(param: ProjParam) -> ProjParam:
    """sigma . Pi . sigma: the identity on rational parameterizations."""
    return ProjParam([p.conjugate() for p in param.components], _checked=True)


# ---------------------------------------------------------------------------
# Input model


class SemialgInput:
    """A parameterized semialgebraic set: full real trace or a compact arc."""

    __slots__ = ("param", "mode", "a", "b")

    def __init__(self, param: ProjParam, mode: Mode, a=None, b=None):
        self.param = param
        self.mode = mode
        if mode is Mode.ARC:
            if a is None or b is None:
                raise ValueError("ARC mode needs both interval bounds")
            a, b = Fraction(a), Fraction(b)
            if not a < b:
                raise ValueError("ARC interval needs a < b")
            sf = squarefree_part(param.p0.affine())
            if sf.degree >= 1:
                if sf(a) == 0 or sf(b) == 0 or _roots_inside(sf, a, b):
                    raise ArcMeetsInfinity(
                        "the arc interval meets a real root of the denominator "
                        "form P0: the arc would touch infinity",
                        interval=[str(a), str(b)])
            self.a, self.b = a, b
        else:
            self.a = self.b = None

    def __repr__(self):
        if self.mode is Mode.ARC:
            return f"SemialgInput(ARC [{self.a}, {self.b}], {self.param!r})"
        return f"SemialgInput(FULL_TRACE, {self.param!r})"


def _roots_inside(sf: UPoly, a: Fraction, b: Fraction) -> bool:
    chain = sturm_chain(sf)
    return (_variations_at(chain, a) - _variations_at(chain, b)) > 0


# ---------------------------------------------------------------------------
# Construction from text / affine data


def param_from_strings(strings, variables=("t0", "t1")) -> ProjParam:
    """Build a reduced ProjParam from homogeneous component expressions."""
    from .parse import parse_poly
    polys = [parse_poly(s, variables) for s in strings]
    degree = max((p.degree() for p in polys if not p.is_zero()), default=-1)
    comps = []
    for p in polys:
        comps.append(_mpoly_to_hform(p, degree))
    return reduce_components(comps)


def _mpoly_to_hform(p: MPoly, degree: int) -> HPoly2:
    coeffs = [Fraction(0)] * (degree + 1)
    for (e0, e1), c in p.terms.items():
        if e0 + e1 != degree:
            raise ValueError("component is not homogeneous of the common degree")
        coeffs[e1] = c
    return HPoly2(degree, coeffs)


def param_from_affine(pairs, variable="t") -> ProjParam:
    """Homogenize affine rational components (num, den) by clearing denominators."""
    from .parse import parse_poly
    nums, dens = [], []
    for num_s, den_s in pairs:
        nums.append(_mpoly_to_upoly(parse_poly(num_s, [variable])))
        den = _mpoly_to_upoly(parse_poly(den_s, [variable]))
        if den.is_zero():
            raise ValueError("zero denominator component")
        dens.append(den)
    ell = UPoly((1,))
    for den in dens:
        ell = poly_lcm(ell, den)
    comps_affine = [ell] + [n * ell.div_exact(d) for n, d in zip(nums, dens)]
    degree = max(c.degree for c in comps_affine)
    return reduce_components([HPoly2.from_affine(c, degree) for c in comps_affine])


def _mpoly_to_upoly(p: MPoly) -> UPoly:
    d = p.degree(0)
    out = [Fraction(0)] * (max(d, 0) + 1)
    for (e,), c in p.terms.items():
        out[e] = c
    return UPoly(out)
