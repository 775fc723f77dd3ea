"""Exact analysis of a parameterized curve.

* properness (the coincidence gcd h of the cross differences
  C_ij(t, s) = P_i(1,t) P_j(1,s) - P_j(1,t) P_i(1,s); the map is proper,
  i.e. birational onto its image, exactly when deg_s h = 1),
* the points at infinity with their parameter fibers -- for a proper
  parameterization the fiber cardinality over a point equals the number
  of local branches of the curve there, which is what the classification
  consumes,
* boundedness of the real trace (no real projective root of the reduced
  denominator form P0),
* plane-curve implicitization by resultant elimination.

Pair grouping is decided exactly: the system {q_a(t)=0, q_b(s)=0,
all constraints = 0} is solved inside the finite etale algebra
Q[t,s]/(q_a, q_b).  Linear algebra over Q yields the constraint ideal
and the exact number of solutions; the minimal polynomial of a
separating element t + lambda*s pins the solutions, and isolating-box
matching assigns them to root pairs.  A lambda that fails to separate
is detected and replaced.  Floats never decide anything here.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations

from .errors import ImproperParameterization
from .factor import factor_rational
from .multipoly import MPoly, gcd_bivariate, resultant_mpoly
from .param import ProjParam
from .qmath import (QuadExt, UPoly, is_squarefree, poly_gcd,
                    squarefree_part, sturm_real_root_count)
from .roots import AlgPoint1, isolate_complex_roots

_LAMBDAS = (Fraction(2), Fraction(3), Fraction(1, 2), Fraction(5),
            Fraction(1, 3), Fraction(7), Fraction(2, 3), Fraction(11), Fraction(13))
_MATCH_DEPTH = 64


# ---------------------------------------------------------------------------
# Cross differences and the coincidence gcd


def cross_differences(param: ProjParam):
    """All nonzero C_ij(t, s) over 0 <= i < j <= m as MPoly in (t, s)."""
    a = [MPoly.from_upoly(p.affine(), 2, 0) for p in param.components]
    b = [MPoly.from_upoly(p.affine(), 2, 1) for p in param.components]
    out = []
    for i, j in combinations(range(param.m + 1), 2):
        c = a[i] * b[j] - a[j] * b[i]
        if not c.is_zero():
            out.append(c)
    return out


def coincidence_gcd(param: ProjParam):
    """(h, generic_fiber_degree, D_list) with C_ij = h * D_ij."""
    cs = cross_differences(param)
    if not cs:
        raise ImproperParameterization("constant map has no coincidence structure")
    h = cs[0]
    for c in cs[1:]:
        h = gcd_bivariate(h, c)
    ds = [c.div_exact(h) for c in cs]
    return h, h.degree(1), ds


@dataclass(frozen=True)
class CoincidenceData:
    h: MPoly
    generic_fiber_degree: int
    node_pairs: tuple


def properness_check(param: ProjParam) -> CoincidenceData:
    """Coincidence gcd, generic fiber degree and the finitely many node pairs."""
    h, gfd, ds = coincidence_gcd(param)
    nodes = tuple(_node_pairs(param, ds)) if gfd == 1 else ()
    return CoincidenceData(h=h, generic_fiber_degree=gfd, node_pairs=nodes)


def _node_pairs(param: ProjParam, ds):
    """Solutions of {D_ij = 0} off the diagonal, plus identifications with [0:1]."""
    ds = [d for d in ds if not d.is_constant()]
    out = []
    if len(ds) >= 2:
        elim = UPoly()
        for d1, d2 in combinations(ds, 2):
            r = resultant_mpoly(d1, d2, 0)
            ru = _mpoly1_to_upoly(r)
            if not ru.is_zero():
                elim = poly_gcd(elim, ru) if not elim.is_zero() else ru.monic()
        if elim.is_zero():
            # each pair shares a factor: retry against fixed combinations
            for k in (1, 2, 3, 5):
                combo = ds[0] + ds[1] * Fraction(k)
                for d in ds:
                    r = resultant_mpoly(combo, d, 0)
                    ru = _mpoly1_to_upoly(r)
                    if not ru.is_zero():
                        elim = poly_gcd(elim, ru) if not elim.is_zero() else ru.monic()
                if not elim.is_zero():
                    break
            if elim.is_zero():
                raise ArithmeticError("node elimination degenerated")
        if not elim.is_zero() and elim.degree >= 1:
            q = squarefree_part(elim)
            roots = isolate_complex_roots(q)
            pairs = solve_pair_system(q, q, ds, roots, roots)
            seen = set()
            for i, j in pairs:
                if i == j:
                    continue  # a diagonal zero of the D's is not a node pair
                key = (min(i, j), max(i, j))
                if key in seen:
                    continue
                seen.add(key)
                out.append((roots[key[0]], roots[key[1]]))
    # identifications involving the parameter [0:1]
    x = param.evaluate_pair(Fraction(0), Fraction(1))
    fib = _rational_point_fiber(param, x)
    if not fib.is_zero() and fib.degree >= 1:
        for p in isolate_complex_roots(squarefree_part(fib)):
            out.append((AlgPoint1.INFINITY, p))
    return out


def _rational_point_fiber(param: ProjParam, x) -> UPoly:
    """Gcd of the affine conditions Pi(s)//x ~ for a rational projective x."""
    affine = [p.affine() for p in param.components]
    g = UPoly()
    for i, j in combinations(range(param.m + 1), 2):
        cond = affine[j] * x[i] - affine[i] * x[j]
        g = poly_gcd(g, cond) if not g.is_zero() else cond
        if not g.is_zero() and g.degree == 0:
            break
    return g


def _mpoly1_to_upoly(p: MPoly) -> UPoly:
    if p.n != 1:
        raise ValueError("expected a univariate MPoly")
    d = p.degree(0)
    out = [Fraction(0)] * (max(d, 0) + 1)
    for (e,), c in p.terms.items():
        out[e] = c
    return UPoly(out)


# ---------------------------------------------------------------------------
# Exact solution of {q_a(t) = 0, q_b(s) = 0, constraints = 0}


def solve_pair_system(qa: UPoly, qb: UPoly, constraints, roots_a, roots_b):
    """Exact index pairs (i, j) where every constraint vanishes at (a_i, b_j).

    qa, qb must be squarefree; roots_a/roots_b isolate their roots.  The
    quotient Q[t,s]/(qa, qb) is an etale algebra, so the constraint ideal
    J is radical and dim(Q/J) counts the solutions; box matching against
    the minimal polynomial of a separating t + lambda*s locates them.
    """
    if not (is_squarefree(qa) and is_squarefree(qb)):
        raise ValueError("pair system requires squarefree polynomials")
    qa, qb = qa.monic(), qb.monic()
    na, nb = qa.degree, qb.degree
    if na == 0 or nb == 0:
        return []
    dim = na * nb
    max_t = max((c.degree(0) for c in constraints), default=0)
    max_s = max((c.degree(1) for c in constraints), default=0)
    red_a = _power_rows(qa, max(max_t, na))
    red_b = _power_rows(qb, max(max_s, nb))

    def reduce_mpoly(c: MPoly):
        vec = [Fraction(0)] * dim
        for (et, es), coef in c.terms.items():
            ra = red_a[et]
            rb = red_b[es]
            for u, xu in enumerate(ra):
                if xu:
                    base = u * nb
                    for v, xv in enumerate(rb):
                        if xv:
                            vec[base + v] += coef * xu * xv
        return vec

    def mul_t(vec):
        out = [Fraction(0)] * dim
        top = red_a[na]
        for u in range(na - 1):
            src = u * nb
            dst = (u + 1) * nb
            for v in range(nb):
                out[dst + v] += vec[src + v]
        src = (na - 1) * nb
        for u, xu in enumerate(top):
            if xu:
                dst = u * nb
                for v in range(nb):
                    out[dst + v] += vec[src + v] * xu
        return out

    def mul_s(vec):
        out = [Fraction(0)] * dim
        top = red_b[nb]
        for u in range(na):
            base = u * nb
            for v in range(nb - 1):
                out[base + v + 1] += vec[base + v]
            x = vec[base + nb - 1]
            if x:
                for v, xv in enumerate(top):
                    if xv:
                        out[base + v] += x * xv
        return out

    # span of the ideal generated by the constraints inside Q; rank-driven
    # closure under multiplication by t and s
    basis = _IdealBasis(dim)
    queue = [reduce_mpoly(c) for c in constraints]
    while queue:
        vec = queue.pop()
        red = basis.add(vec)
        if red is not None:
            queue.append(mul_t(red))
            queue.append(mul_s(red))
    reduce_vec = basis.reduce
    d_quot = dim - basis.rank
    if d_quot == 0:
        return []

    for lam in _LAMBDAS:
        result = _match_with_lambda(lam, d_quot, reduce_vec, mul_t, mul_s, dim,
                                    roots_a, roots_b)
        if result is not None:
            return result
    raise ArithmeticError("no separating lambda found (exhausted candidates)")


def _power_rows(q: UPoly, upto: int):
    """t^k reduced mod monic q, for k = 0..upto, as coefficient lists."""
    n = q.degree
    rows = []
    for k in range(min(n, upto + 1)):
        row = [Fraction(0)] * n
        row[k] = Fraction(1)
        rows.append(row)
    top = [-c for c in q.c[:-1]]
    while len(rows) <= upto:
        prev = rows[-1]
        shifted = [Fraction(0)] + list(prev[:-1])
        lead = prev[-1]
        if lead:
            shifted = [a + lead * b for a, b in zip(shifted, top)]
        rows.append(shifted)
    return rows


class _IdealBasis:
    """Incremental row-echelon basis of a subspace of Q^dim."""

    def __init__(self, dim):
        self.dim = dim
        self.rows = {}

    @property
    def rank(self):
        return len(self.rows)

    def reduce(self, vec):
        vec = list(vec)
        for col, brow in self.rows.items():
            if vec[col]:
                f = vec[col]
                vec = [a - f * b for a, b in zip(vec, brow)]
        return vec

    def add(self, vec):
        """Insert vec; returns the reduced new basis row, or None if dependent."""
        vec = self.reduce(vec)
        piv = next((i for i, a in enumerate(vec) if a), None)
        if piv is None:
            return None
        inv = 1 / vec[piv]
        row = [a * inv for a in vec]
        self.rows[piv] = row
        return row


def _match_with_lambda(lam, d_quot, reduce_vec, mul_t, mul_s, dim, roots_a, roots_b):
    # minimal polynomial of w = t + lam*s acting on 1 in Q/J
    one = [Fraction(0)] * dim
    one[0] = Fraction(1)
    iterates = [reduce_vec(one)]
    cur = one
    for _ in range(d_quot):
        cur = [a + lam * b for a, b in zip(mul_t(cur), mul_s(cur))]
        iterates.append(reduce_vec(cur))
    mu = _first_dependence(iterates)
    if mu is None or mu.degree != d_quot or not is_squarefree(mu):
        return None
    gamma = isolate_complex_roots(mu)
    cands = [(i, j) for i in range(len(roots_a)) for j in range(len(roots_b))]
    ra = list(roots_a)
    rb = list(roots_b)
    gm = list(gamma)
    width = Fraction(1, 4)
    for _ in range(_MATCH_DEPTH):
        boxes = {}
        for i, p in enumerate(ra):
            boxes[("a", i)] = p.civ()
        for j, p in enumerate(rb):
            boxes[("b", j)] = p.civ()
        sums = {}
        for i, j in cands:
            sums[(i, j)] = boxes[("a", i)] + lam * boxes[("b", j)]
        claims = {}
        ok = True
        for k, g in enumerate(gm):
            gb = g.civ()
            hits = [(i, j) for (i, j) in cands if sums[(i, j)].overlaps(gb)]
            if len(hits) != 1:
                ok = False
            claims[k] = hits
        cands = sorted({hit for hits in claims.values() for hit in hits})
        if ok:
            matched = [claims[k][0] for k in range(len(gm))]
            if len(set(matched)) == len(gm):
                return sorted(matched)
        width = width / 16
        ra = [p.refined(width) for p in ra]
        rb = [p.refined(width) for p in rb]
        gm = [p.refined(width) for p in gm]
    return None


def _first_dependence(iterates):
    """Monic polynomial of least degree with sum mu_k * iterates[k] = 0."""
    dim = len(iterates[0])
    basis = {}
    coords = []  # expression of each basis row in terms of iterates
    for k, vec in enumerate(iterates):
        row = list(vec)
        expr = [Fraction(0)] * len(iterates)
        expr[k] = Fraction(1)
        for col, (brow, bexpr) in basis.items():
            if row[col]:
                f = row[col]
                row = [a - f * b for a, b in zip(row, brow)]
                expr = [a - f * b for a, b in zip(expr, bexpr)]
        piv = next((i for i, a in enumerate(row) if a), None)
        if piv is None:
            # dependence found: expr gives mu with deg = k
            return UPoly(expr[:k + 1])
        inv = 1 / row[piv]
        basis[piv] = ([a * inv for a in row], [a * inv for a in expr])
    return None


# ---------------------------------------------------------------------------
# Infinity fibers


class TargetPoint:
    """A projective target point, exact over Q(sqrt(d)) when possible."""

    __slots__ = ("exact", "rep_root", "_param")

    def __init__(self, exact, rep_root, param):
        self.exact = exact
        self.rep_root = rep_root
        self._param = param

    @classmethod
    def from_root(cls, param: ProjParam, root: AlgPoint1) -> "TargetPoint":
        if root.is_infinity or root.minpoly.degree <= 2:
            coords = param.evaluate(root)
            return cls(normalize_projective(coords), root, param)
        return cls(None, root, param)

    def boxes(self, width) -> tuple:
        return self._param.evaluate_boxes(self.rep_root, width)

    def approx(self):
        if self.exact is not None:
            return tuple(c.to_complex() for c in self.exact)
        bs = self.boxes(Fraction(1, 1 << 30))
        return tuple(b.mid_complex() for b in bs)

    def __repr__(self):
        if self.exact is not None:
            return "TargetPoint[" + " : ".join(_qx_str(c) for c in self.exact) + "]"
        return f"TargetPoint(minpoly deg {self.rep_root.minpoly.degree})"


def _qx_str(c: QuadExt) -> str:
    if c.b == 0:
        return str(c.a)
    if c.d == -1:
        im = c.b
        if c.a == 0:
            return "i" if im == 1 else ("-i" if im == -1 else f"{im}*i")
        sign = "+" if im > 0 else "-"
        mag = abs(im)
        return f"{c.a}{sign}{'' if mag == 1 else str(mag) + '*'}i"
    return f"{c.a}+{c.b}*sqrt({c.d})".replace("+-", "-")


def normalize_projective(coords):
    coords = [QuadExt.of(c) for c in coords]
    lead = next((c for c in coords if c), None)
    if lead is None:
        raise ValueError("zero projective vector")
    inv = lead.inverse()
    return tuple(c * inv for c in coords)


@dataclass(frozen=True)
class InfinityFiber:
    point: TargetPoint
    fiber: tuple
    multiplicities: tuple
    is_real_point: bool
    fiber_is_conjugate_pair: bool

    @property
    def size(self) -> int:
        return len(self.fiber)


@dataclass(frozen=True)
class InfinityReport:
    fibers: tuple
    real_trace_bounded: bool
    real_root_count_of_P0: int


def is_real_trace_bounded(param: ProjParam) -> bool:
    """Bounded real trace iff squarefree(P0) has no real projective root."""
    p0 = param.p0
    if p0.inf_mult > 0:
        return False
    sf = squarefree_part(p0.affine())
    if sf.degree < 1:
        return True
    return sturm_real_root_count(sf) == 0


def _real_projective_root_count(param: ProjParam) -> int:
    p0 = param.p0
    count = 1 if p0.inf_mult > 0 else 0
    sf = squarefree_part(p0.affine()) if p0.affine().degree >= 0 else UPoly()
    if not sf.is_zero() and sf.degree >= 1:
        count += sturm_real_root_count(sf)
    return count


def infinity_fibers(param: ProjParam) -> InfinityReport:
    """Points at infinity of the image curve, grouped with their fibers."""
    h, gfd, _ds = coincidence_gcd(param)
    if gfd != 1:
        raise ImproperParameterization(
            "parameterization is not proper (generically one-to-one)",
            generic_fiber_degree=gfd)
    p0 = param.p0
    e0 = p0.inf_mult
    affine_p0 = p0.affine()
    roots = []
    if affine_p0.degree >= 1:
        sf = squarefree_part(affine_p0)
        roots = isolate_complex_roots(sf)
    else:
        sf = UPoly((1,))
    n = len(roots)
    parent = list(range(n + 1))  # index n is the point [0:1] when e0 > 0

    def find(i):
        while parent[i] != i:
            parent[i] = parent[parent[i]]
            i = parent[i]
        return i

    def union(i, j):
        ri, rj = find(i), find(j)
        if ri != rj:
            parent[ri] = rj

    if n:
        cs = cross_differences(param)
        pairs = solve_pair_system(sf, sf, cs, roots, roots)
        for i, j in pairs:
            union(i, j)
    if e0 > 0 and n:
        x_inf = param.evaluate_pair(Fraction(0), Fraction(1))
        fib = _rational_point_fiber(param, x_inf)
        if not fib.is_zero() and fib.degree >= 1:
            for i, p in enumerate(roots):
                if (fib % p.minpoly).is_zero():
                    union(i, n)

    mults = _root_multiplicities(param, roots)
    groups = {}
    for i in range(n):
        groups.setdefault(find(i), []).append(i)
    if e0 > 0:
        groups.setdefault(find(n), [])
        if find(n) in groups and n not in groups[find(n)]:
            groups[find(n)].append(n)

    fibers = []
    for members in groups.values():
        pts = [roots[i] if i < n else AlgPoint1.INFINITY for i in sorted(members)]
        if not pts:
            continue
        ms = tuple(mults[i] if i < n else e0 for i in sorted(members))
        is_real = _fiber_conjugation_closed(pts)
        conj_pair = (len(pts) == 2 and not pts[0].is_real and not pts[1].is_real
                     and pts[0].conjugate().same_box(pts[1]))
        rep = next((p for p in pts if p.is_infinity), pts[0])
        fibers.append(InfinityFiber(
            point=TargetPoint.from_root(param, rep),
            fiber=tuple(pts),
            multiplicities=ms,
            is_real_point=is_real,
            fiber_is_conjugate_pair=conj_pair,
        ))
    fibers.sort(key=_fiber_sort_key)
    return InfinityReport(
        fibers=tuple(fibers),
        real_trace_bounded=_real_projective_root_count(param) == 0,
        real_root_count_of_P0=_real_projective_root_count(param),
    )


def _fiber_sort_key(f: InfinityFiber):
    first = f.fiber[0]
    if first.is_infinity:
        return (0,)
    return (1,) + first.box


def _fiber_conjugation_closed(pts) -> bool:
    for p in pts:
        c = p.conjugate()
        if not any(c.same_box(q) for q in pts):
            return False
    return True


def _root_multiplicities(param: ProjParam, roots):
    affine_p0 = param.p0.affine()
    if affine_p0.degree < 1:
        return []
    factors = factor_rational(affine_p0)
    mults = []
    for p in roots:
        mult = next((m for g, m in factors if g == p.minpoly), None)
        if mult is None:
            raise ArithmeticError("root without a matching factor")
        mults.append(mult)
    return mults


# ---------------------------------------------------------------------------
# Plane-curve implicitization


def implicitize_plane(param: ProjParam) -> MPoly:
    """Irreducible defining form of the image curve in [x0:x1:x2].

    Resultant elimination with the chart content stripped; the output is
    integer-primitive, squarefree, vanishes exactly on the
    parameterization, and its degree equals the parameterization degree
    (which certifies no extraneous factor survived).
    """
    if param.m != 2:
        raise ValueError("implicitization is plane-curve only (m = 2)")
    _h, gfd, _ds = coincidence_gcd(param)
    if gfd != 1:
        raise ImproperParameterization(
            "implicitization requires a proper parameterization",
            generic_fiber_degree=gfd)
    # variables: 0,1,2 = x0,x1,x2; 3 = t
    affine = [MPoly.from_upoly(p.affine(), 4, 3) for p in param.components]
    x0 = MPoly.var(4, 0)
    x1 = MPoly.var(4, 1)
    x2 = MPoly.var(4, 2)
    a = x1 * affine[0] - x0 * affine[1]
    b = x2 * affine[0] - x0 * affine[2]
    res = resultant_mpoly(a, b, 3)
    if res.is_zero():
        raise ArithmeticError("vanishing implicitization resultant")
    # strip the chart content x0^k
    while all(e[0] >= 1 for e in res.terms):
        res = res.div_exact(MPoly.var(3, 0))
    _, res = res.primitive_rational()
    res = _squarefree_form(res)
    res = _canonical_form_sign(res)
    if res.degree() != param.degree:
        raise ArithmeticError(
            f"implicit form degree {res.degree()} != parameterization degree "
            f"{param.degree}: extraneous factor detected")
    # exact vanishing on the dense chart t0 = 1 implies vanishing as forms
    comp = res.subst([MPoly.from_upoly(c.affine(), 1, 0) for c in param.components])
    if not comp.is_zero():
        raise ArithmeticError("implicit form does not vanish on the curve")
    return res


def _squarefree_form(res: MPoly) -> MPoly:
    """Squarefree part of a homogeneous trivariate form, via the x0=1 chart."""
    aff_terms = {}
    for (e0, e1, e2), c in res.terms.items():
        key = (e1, e2)
        aff_terms[key] = aff_terms.get(key, 0) + c
    aff = MPoly(2, aff_terms)
    g = gcd_bivariate(aff, aff.derivative(0))
    g = gcd_bivariate(g, aff.derivative(1))
    if not g.is_constant():
        aff = aff.div_exact(g)
    _, aff = aff.primitive_rational()
    deg = aff.degree()
    t = {}
    for (e1, e2), c in aff.terms.items():
        t[(deg - e1 - e2, e1, e2)] = c
    return MPoly(3, t)


def _canonical_form_sign(res: MPoly) -> MPoly:
    # positive leading coefficient in the order x1 > x2 > x0
    lead = max(res.terms, key=lambda e: (e[1], e[2], e[0]))
    if res.terms[lead] < 0:
        return -res
    return res
