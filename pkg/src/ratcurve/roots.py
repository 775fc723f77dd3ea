"""Certified isolation of real and complex roots of rational polynomials.

Real roots are isolated by Sturm bisection with rational endpoints.
Non-real roots of a squarefree f are located through the decomposition
f(x + i y) = U(x, y) + i y V(x, y): the conjugate-pair roots are exactly
the solutions of {U = 0, V = 0} with y != 0.  Candidate coordinates come
from the two elimination resultants; candidates are then whittled down
by exact interval evaluation until the number of survivors matches the
root count forced by Sturm's theorem.  Floats never enter any decision.
"""

from __future__ import annotations

from fractions import Fraction

from .factor import factor_rational
from .qmath import (CIv, Iv, UPoly, cauchy_root_bound, eval_upoly_civ,
                    is_squarefree, squarefree_part, sturm_chain,
                    _variations_at, _variations_at_inf)

_MAX_REFINE = 400


class AlgPoint1:
    """Exactly represented algebraic point of the projective parameter line.

    Affine points carry an irreducible minimal polynomial over Q plus an
    isolating rational box (re x im); the point at infinity [0:1] is the
    singleton ``AlgPoint1.INFINITY`` with ``minpoly is None``.  Instances
    are immutable; refinement returns a new point for the same root.
    """

    __slots__ = ("minpoly", "_xiv", "_qx", "_yiv", "_qy", "_ysign")

    INFINITY: "AlgPoint1" = None

    def __init__(self, minpoly, xiv, qx, yiv, qy, ysign):
        self.minpoly = minpoly
        self._xiv = xiv
        self._qx = qx
        self._yiv = yiv
        self._qy = qy
        self._ysign = ysign

    @classmethod
    def real_root(cls, minpoly: UPoly, xiv: Iv, qx: UPoly = None) -> "AlgPoint1":
        return cls(minpoly, xiv, qx if qx is not None else minpoly, Iv(0), None, 0)

    @classmethod
    def rational(cls, r) -> "AlgPoint1":
        r = Fraction(r)
        return cls.real_root(UPoly((-r, 1)), Iv(r, r))

    @property
    def is_infinity(self) -> bool:
        return self.minpoly is None

    @property
    def is_real(self) -> bool:
        if self.is_infinity:
            return True
        return self._ysign == 0

    @property
    def box(self):
        """(re_lo, re_hi, im_lo, im_hi) with rational endpoints."""
        if self.is_infinity:
            raise ValueError("the point at infinity has no affine box")
        y = self._yiv if self._ysign >= 0 else Iv(-self._yiv.hi, -self._yiv.lo)
        if self._ysign == 0:
            y = Iv(0)
        return (self._xiv.lo, self._xiv.hi, y.lo, y.hi)

    def civ(self) -> CIv:
        lo_re, hi_re, lo_im, hi_im = self.box
        return CIv(Iv(lo_re, hi_re), Iv(lo_im, hi_im))

    def conjugate(self) -> "AlgPoint1":
        if self.is_infinity or self._ysign == 0:
            return self
        return AlgPoint1(self.minpoly, self._xiv, self._qx, self._yiv, self._qy,
                         -self._ysign)

    def is_rational(self) -> bool:
        return (not self.is_infinity) and self.minpoly.degree == 1

    def rational_value(self) -> Fraction:
        if not self.is_rational():
            raise ValueError("root is not rational")
        return -self.minpoly.c[0] / self.minpoly.c[1]

    def refined(self, target_width) -> "AlgPoint1":
        """Same root, box of width and height at most target_width."""
        if self.is_infinity:
            return self
        target = Fraction(target_width)
        xiv = self._xiv
        while xiv.width > target:
            xiv = _bisect_interval(self._qx, xiv)
        yiv = self._yiv
        if self._ysign != 0:
            while yiv.width > target:
                yiv = _bisect_interval(self._qy, yiv)
        return AlgPoint1(self.minpoly, xiv, self._qx, yiv, self._qy, self._ysign)

    def approx(self) -> complex:
        if self.is_infinity:
            raise ValueError("point at infinity")
        p = self.refined(Fraction(1, 1 << 30))
        return p.civ().mid_complex()

    def same_box(self, other: "AlgPoint1") -> bool:
        if self.is_infinity or other.is_infinity:
            return self.is_infinity and other.is_infinity
        return self.box == other.box and self.minpoly == other.minpoly

    def __repr__(self):
        if self.is_infinity:
            return "AlgPoint1(infinity [0:1])"
        b = self.box
        return f"AlgPoint1({self.minpoly!r}, re=[{b[0]},{b[1]}], im=[{b[2]},{b[3]}])"


AlgPoint1.INFINITY = AlgPoint1(None, None, None, None, None, 0)


# ---------------------------------------------------------------------------
# Real root isolation


def _count_chain(chain, lo, hi) -> int:
    vlo = _variations_at_inf(chain, False) if lo is None else _variations_at(chain, lo)
    vhi = _variations_at_inf(chain, True) if hi is None else _variations_at(chain, hi)
    return vlo - vhi


def _bisect_interval(q: UPoly, iv: Iv) -> Iv:
    """Halve an isolating interval of a squarefree q (exact roots go thin)."""
    if iv.width == 0:
        return iv
    mid = iv.mid
    if q(mid) == 0:
        return Iv(mid, mid)
    chain = sturm_chain(q)
    if _count_chain(chain, iv.lo, mid) == 1:
        return Iv(iv.lo, mid)
    return Iv(mid, iv.hi)


def isolate_real_roots(q: UPoly):
    """Disjoint isolating intervals (Iv) for all real roots of squarefree q."""
    if q.is_zero():
        raise ValueError("zero polynomial")
    if not is_squarefree(q):
        raise ValueError("isolate_real_roots requires a squarefree polynomial")
    if q.degree < 1:
        return []
    chain = sturm_chain(q)
    bound = cauchy_root_bound(q)
    total = _count_chain(chain, None, None)
    if total == 0:
        return []
    out = []
    queue = [Iv(-bound, bound)]
    while queue:
        iv = queue.pop()
        n = _count_chain(chain, iv.lo, iv.hi)
        if n == 0:
            continue
        if n == 1:
            out.append(iv)
            continue
        mid = iv.mid
        if q(mid) == 0:
            out.append(Iv(mid, mid))
            # exclude the exact root from both halves by a tiny margin
            eps = iv.width / (1 << 12)
            while _count_chain(chain, mid - eps, mid + eps) > 1:
                eps /= 2
            queue.append(Iv(iv.lo, mid - eps))
            queue.append(Iv(mid + eps, iv.hi))
        else:
            queue.append(Iv(iv.lo, mid))
            queue.append(Iv(mid, iv.hi))
    assert len(out) == total
    out.sort(key=lambda iv: (iv.lo, iv.hi))
    # separate touching intervals so the isolating boxes are pairwise disjoint
    changed = True
    guard = 0
    while changed:
        changed = False
        guard += 1
        if guard > _MAX_REFINE:
            raise ArithmeticError("failed to separate real root intervals")
        for i in range(len(out) - 1):
            if out[i].hi >= out[i + 1].lo:
                out[i] = _bisect_interval(q, out[i])
                out[i + 1] = _bisect_interval(q, out[i + 1])
                changed = True
    return out


# ---------------------------------------------------------------------------
# Complex root isolation


def _nested_trim(ns):
    while ns and ns[-1].is_zero():
        ns.pop()
    return ns


def _real_imag_parts(f: UPoly):
    """U, V with f(x + i y) = U(x, y) + i y V(x, y), nested as y-power lists."""
    zero = UPoly()
    re, im = [], []
    x = UPoly.x()
    for a in reversed(f.c):
        # (re + i im) * (x + i y)
        n = max(len(re), len(im)) + 1
        nre = [zero] * n
        nim = [zero] * n
        for k, u in enumerate(re):
            nre[k] = nre[k] + u * x
            if k + 1 < n:
                nim[k + 1] = nim[k + 1] + u
        for k, u in enumerate(im):
            nim[k] = nim[k] + u * x
            nre[k + 1] = nre[k + 1] - u
        if nre:
            nre[0] = nre[0] + UPoly((a,))
        else:
            nre = [UPoly((a,))]
        re, im = _nested_trim(nre), _nested_trim(nim)
    return re, im


def _nested_resultant(a, b) -> UPoly:
    """Resultant w.r.t. the outer variable of two nested UPoly lists."""
    n, m = len(a) - 1, len(b) - 1
    if n < 0 or m < 0:
        raise ValueError("resultant with zero polynomial")
    if n == 0:
        return a[0] ** m
    if m == 0:
        return b[0] ** n
    size = n + m
    zero = UPoly()
    rows = []
    ac = list(reversed(a))
    bc = list(reversed(b))
    for i in range(m):
        rows.append([zero] * i + ac + [zero] * (size - n - 1 - i))
    for i in range(n):
        rows.append([zero] * i + bc + [zero] * (size - m - 1 - i))
    return _bareiss_poly(rows)


def _bareiss_poly(rows) -> UPoly:
    n = len(rows)
    sign = 1
    prev = UPoly((1,))
    for k in range(n - 1):
        if rows[k][k].is_zero():
            for i in range(k + 1, n):
                if not rows[i][k].is_zero():
                    rows[k], rows[i] = rows[i], rows[k]
                    sign = -sign
                    break
            else:
                return UPoly()
        pivot = rows[k][k]
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                rows[i][j] = (rows[i][j] * pivot - rows[i][k] * rows[k][j]).div_exact(prev)
            rows[i][k] = UPoly()
        prev = pivot
    return rows[n - 1][n - 1] * sign


def _positive_root_intervals(q: UPoly):
    """Isolating intervals of the strictly positive real roots of squarefree q."""
    out = []
    for iv in isolate_real_roots(q):
        guard = 0
        while iv.lo < 0 < iv.hi or (iv.lo == 0 and iv.hi > 0):
            if q(Fraction(0)) == 0 and iv.contains(0) and iv.width == 0:
                break
            iv = _bisect_interval(q, iv)
            guard += 1
            if guard > _MAX_REFINE:
                raise ArithmeticError("failed to separate a root from zero")
        if iv.lo > 0:
            out.append(iv)
    return out


def _isolate_factor(g: UPoly):
    """AlgPoint1 list for all roots of an irreducible g (real + conjugate pairs)."""
    points = []
    for iv in isolate_real_roots(g):
        points.append(AlgPoint1.real_root(g, iv))
    n_real = len(points)
    n_pairs, rem = divmod(g.degree - n_real, 2)
    if rem:
        raise ArithmeticError("parity mismatch in root counts")
    if n_pairs == 0:
        return points
    u_nested, v_nested = _real_imag_parts(g)
    v1 = v_nested[1:]  # V = y * V1: strip one y (real-axis zeros removed)
    v1 = _nested_trim(list(v1))
    rx = squarefree_part(_nested_resultant(u_nested, v1))
    # swap nesting: coefficients in y for the x-elimination
    ry = squarefree_part(_nested_resultant(_swap_nested(u_nested), _swap_nested(v1)))
    x_ivs = isolate_real_roots(rx)
    y_ivs = _positive_root_intervals(ry)
    alive = [(xi, yi) for xi in x_ivs for yi in y_ivs]
    guard = 0
    while len(alive) > n_pairs:
        nxt = []
        for xi, yi in alive:
            val = eval_upoly_civ(g, CIv(xi, yi))
            if val.contains_zero():
                nxt.append((xi, yi))
        if len(nxt) == len(alive):
            nxt = [(_bisect_interval(rx, xi), _bisect_interval(ry, yi)) for xi, yi in nxt]
        alive = nxt
        guard += 1
        if guard > _MAX_REFINE:
            raise ArithmeticError("complex root candidates failed to resolve")
    if len(alive) != n_pairs:
        raise ArithmeticError("lost a complex root candidate")
    for xi, yi in alive:
        points.append(AlgPoint1(g, xi, rx, yi, ry, +1))
    return points


def _swap_nested(nested):
    """Reinterpret sum u_k(x) y^k as a nested list over x with UPoly in y."""
    deg_x = max((u.degree for u in nested), default=-1)
    out = []
    for i in range(deg_x + 1):
        out.append(UPoly([u.c[i] if i <= u.degree else 0 for u in nested]))
    return _nested_trim(out)


def isolate_complex_roots(f: UPoly):
    """All deg(f) roots of squarefree f as AlgPoint1, conjugation-paired.

    Boxes are pairwise disjoint; non-real roots appear in mirrored
    conjugate pairs; output order is deterministic.
    """
    if f.is_zero():
        raise ValueError("zero polynomial")
    if not is_squarefree(f):
        raise ValueError("isolate_complex_roots requires a squarefree polynomial")
    if f.degree < 1:
        return []
    upper = []
    for g, _mult in factor_rational(f):
        upper.extend(_isolate_factor(g))
    # separate real and upper-half boxes, then mirror: conjugate boxes stay
    # exact mirrors and cannot collide (their y-intervals are sign-definite)
    upper = _separate_points(upper)
    points = list(upper) + [p.conjugate() for p in upper if p._ysign > 0]
    assert len(points) == f.degree
    points.sort(key=lambda p: p.box)
    return points


def _boxes_overlap(p: AlgPoint1, q: AlgPoint1) -> bool:
    a, b = p.box, q.box
    return a[0] <= b[1] and b[0] <= a[1] and a[2] <= b[3] and b[2] <= a[3]


def _separate_points(points):
    guard = 0
    while True:
        clash = None
        for i in range(len(points)):
            for j in range(i + 1, len(points)):
                if _boxes_overlap(points[i], points[j]):
                    clash = (i, j)
                    break
            if clash:
                break
        if clash is None:
            return points
        i, j = clash
        wi = max(points[i].box[1] - points[i].box[0], points[i].box[3] - points[i].box[2])
        wj = max(points[j].box[1] - points[j].box[0], points[j].box[3] - points[j].box[2])
        w = max(wi, wj, Fraction(1, 1 << 20)) / 4
        points[i] = points[i].refined(w)
        points[j] = points[j].refined(w)
        guard += 1
        if guard > _MAX_REFINE:
            raise ArithmeticError("failed to separate root boxes")


def refine_box(p: AlgPoint1, target_width) -> AlgPoint1:
    """Public refinement: same root, box width/height <= target_width."""
    return p.refined(target_width)


def refine_interval(q: UPoly, iv: Iv, target_width) -> Iv:
    """Shrink an isolating interval of squarefree q to the target width."""
    target = Fraction(target_width)
    while iv.width > target:
        iv = _bisect_interval(q, iv)
    return iv
