"""Floating-point validation layer.

Everything here is 64-bit float sampling and measurement: dense clouds
on parameterizations and witnesses, exact-nearest-neighbor Hausdorff
distances, a boundedness probe, winding numbers of circle self-maps,
and SVG/CSV plot emission.  Oracle results only PASS or FAIL checks;
they never feed back into an exact decision.
"""

from __future__ import annotations

import math
from fractions import Fraction


class SampleCloud:
    """Finite point cloud with parameter annotations; NaN/inf rejected."""

    __slots__ = ("points", "params", "m", "skipped")

    def __init__(self, points, params=None, skipped=None):
        pts = []
        prs = []
        params = params if params is not None else [None] * len(points)
        for p, ann in zip(points, params):
            if not all(math.isfinite(x) for x in p):
                raise ValueError("non-finite point in sample cloud")
            pts.append(tuple(float(x) for x in p))
            prs.append(ann)
        if not pts:
            raise ValueError("empty sample cloud")
        self.points = pts
        self.params = prs
        self.m = len(pts[0])
        self.skipped = list(skipped or [])

    def __len__(self):
        return len(self.points)


def _float_comps(param):
    return [[float(x) for x in p.coeffs] for p in param.components]


def _feval(coeffs, cp, sp, d):
    acc = 0.0
    for k, a in enumerate(coeffs):
        if a:
            acc += a * cp[d - k] * sp[k]
    return acc


def _param_point_f(fcomps, d, c, s):
    cp = [1.0] * (d + 1)
    sp = [1.0] * (d + 1)
    for i in range(1, d + 1):
        cp[i] = cp[i - 1] * c
        sp[i] = sp[i - 1] * s
    den = _feval(fcomps[0], cp, sp, d)
    if den == 0.0:
        return None
    return tuple(_feval(fc, cp, sp, d) / den for fc in fcomps[1:])


def _param_point(param, c, s):
    return _param_point_f(_float_comps(param), param.degree, c, s)


def sample(obj, mode=None, a=None, b=None, n: int = 10 ** 4) -> SampleCloud:
    """Sample a parameterization (FULL_TRACE/ARC) or a witness on its source.

    FULL_TRACE runs over RP^1 via the half-angle substitution, theta
    uniform in (-pi, pi] with theta = pi at the parameter [0:1]; points
    whose evaluation degenerates are skipped with their parameter
    recorded, never silently.
    """
    from .param import Mode, ProjParam
    from .witness import LaurentPoly, RealPolyMap, Source
    if n < 2:
        raise ValueError("need at least 2 samples")
    pts, anns, skipped = [], [], []
    if isinstance(obj, ProjParam):
        fcomps = _float_comps(obj)
        d = obj.degree
        if mode is None or mode is Mode.FULL_TRACE:
            for j in range(n):
                theta = -math.pi + 2 * math.pi * (j + 1) / n
                if j + 1 == n:
                    c, s = 0.0, 1.0  # theta = pi is exactly the parameter [0:1]
                else:
                    c, s = math.cos(theta / 2), math.sin(theta / 2)
                val = _param_point_f(fcomps, d, c, s)
                if val is None or not all(math.isfinite(x) for x in val):
                    skipped.append(theta)
                    continue
                pts.append(val)
                anns.append(theta)
        else:
            if a is None or b is None:
                raise ValueError("ARC sampling needs bounds")
            a, b = float(a), float(b)
            for j in range(n):
                t = a + (b - a) * j / (n - 1)
                val = _param_point_f(fcomps, d, 1.0, t)
                if val is None or not all(math.isfinite(x) for x in val):
                    skipped.append(t)
                    continue
                pts.append(val)
                anns.append(t)
        return SampleCloud(pts, anns, skipped)
    if isinstance(obj, LaurentPoly):
        for j in range(n):
            theta = -math.pi + 2 * math.pi * (j + 1) / n
            z = obj.evaluate(complex(math.cos(theta), math.sin(theta)))
            pts.append((z.real, z.imag))
            anns.append(theta)
        return SampleCloud(pts, anns)
    if isinstance(obj, RealPolyMap):
        for j in range(n):
            if obj.source is Source.CIRCLE:
                theta = -math.pi + 2 * math.pi * (j + 1) / n
                point = (math.cos(theta), math.sin(theta))
                ann = theta
            else:
                t = -1.0 + 2.0 * j / (n - 1)
                if obj.source is Source.INTERVAL:
                    point = (t,)
                else:
                    rest = math.sqrt(max(0.0, 1.0 - t * t))
                    point = (t, rest) + (0.0,) * (obj.k - 1)
                ann = t
            val = obj.evaluate(point)
            val = tuple(v.to_complex().real if hasattr(v, "to_complex") else float(v)
                        for v in val)
            pts.append(val)
            anns.append(ann)
        return SampleCloud(pts, anns)
    raise TypeError(f"cannot sample {type(obj).__name__}")


# ---------------------------------------------------------------------------
# Hausdorff distance with exact nearest neighbors


def _ring_offsets(dim: int, r: int):
    """Integer offsets at Chebyshev radius exactly r."""
    if r == 0:
        return [(0,) * dim]
    out = []
    span = range(-r, r + 1)

    def rec(prefix):
        if len(prefix) == dim:
            if max(abs(o) for o in prefix) == r:
                out.append(tuple(prefix))
            return
        for o in span:
            rec(prefix + [o])

    rec([])
    return out


class _Grid:
    def __init__(self, points):
        dim = len(points[0])
        self.dim = dim
        lo = [min(p[i] for p in points) for i in range(dim)]
        hi = [max(p[i] for p in points) for i in range(dim)]
        diag = math.sqrt(sum((h - l) ** 2 for h, l in zip(hi, lo)))
        self.cell = max(diag / max(2.0, len(points) ** (1.0 / dim)), 1e-300)
        self.lo = lo
        self.max_ring = int(diag / self.cell) + 3
        self.cells = {}
        self._rings = {}
        for p in points:
            self.cells.setdefault(self._key(p), []).append(p)

    def _key(self, p):
        return tuple(int(math.floor((x - l) / self.cell)) for x, l in zip(p, self.lo))

    def nearest_dist(self, p) -> float:
        key = self._key(p)
        best = math.inf
        r = 0
        # cells in ring r hold points at distance >= (r-1)*cell; once that
        # exceeds the best found, the best is exact
        while (r - 1) * self.cell <= best:
            if r not in self._rings:
                self._rings[r] = _ring_offsets(self.dim, r)
            for off in self._rings[r]:
                members = self.cells.get(tuple(k + o for k, o in zip(key, off)))
                if members:
                    for q in members:
                        d = math.dist(p, q)
                        if d < best:
                            best = d
            r += 1
            if best == math.inf and r > self.max_ring:
                # query far outside the cloud: widen geometrically
                best = min(math.dist(p, q) for qs in self.cells.values() for q in qs)
                break
        return best


def _directed_hausdorff(a: SampleCloud, b: SampleCloud) -> float:
    grid = _Grid(b.points)
    return max(grid.nearest_dist(p) for p in a.points)


def hausdorff(a: SampleCloud, b: SampleCloud) -> float:
    """Symmetric Hausdorff distance under the Euclidean norm."""
    if a.m != b.m:
        raise ValueError("clouds live in different dimensions")
    return max(_directed_hausdorff(a, b), _directed_hausdorff(b, a))


def cloud_diameter(cloud: SampleCloud) -> float:
    lo = [min(p[i] for p in cloud.points) for i in range(cloud.m)]
    hi = [max(p[i] for p in cloud.points) for i in range(cloud.m)]
    return math.sqrt(sum((h - l) ** 2 for h, l in zip(hi, lo)))


# ---------------------------------------------------------------------------
# Boundedness probe


def boundedness_probe(param, n: int = 10 ** 4, escape: float = 10 ** 6) -> bool:
    """True when all probe samples stay below the escape norm.

    The probe clusters extra samples near the real denominator roots
    (where an unbounded trace must blow up) and near the parameter
    [0:1]; it is validation only and decides nothing exact.
    """
    from .qmath import squarefree_part
    from .roots import isolate_real_roots

    fcomps = _float_comps(param)
    d = param.degree
    for j in range(n):
        theta = -math.pi + 2 * math.pi * (j + 1) / n
        val = _param_point_f(fcomps, d, math.cos(theta / 2), math.sin(theta / 2))
        if val is None:
            continue
        if max(abs(x) for x in val) > escape:
            return False
    probes = []
    aff = param.p0.affine()
    if aff.degree >= 1:
        sf = squarefree_part(aff)
        from .qmath import sturm_real_root_count
        from .roots import refine_interval
        if sturm_real_root_count(sf) > 0:
            for iv in isolate_real_roots(sf):
                r = float(refine_interval(sf, iv, Fraction(1, 1 << 48)).mid)
                probes.extend(r + eps for k in range(3, 13)
                              for eps in ((10.0 ** -k), -(10.0 ** -k)))
    if param.p0.inf_mult > 0:
        probes.extend([10.0 ** k for k in range(3, 10)])
    for t in probes:
        val = _param_point_f(fcomps, d, 1.0, t)
        if val is None or not all(math.isfinite(x) for x in val):
            continue
        if max(abs(x) for x in val) > escape:
            return False
    return True


# ---------------------------------------------------------------------------
# Winding numbers


def winding_number(obj, n: int = 4096) -> int:
    """Topological degree of a nonvanishing circle map, by argument increments."""
    from .witness import LaurentPoly, RealPolyMap, Source

    def value(theta):
        if isinstance(obj, LaurentPoly):
            return obj.evaluate(complex(math.cos(theta), math.sin(theta)))
        if isinstance(obj, RealPolyMap):
            if obj.source is not Source.CIRCLE or obj.m != 2:
                raise ValueError("winding number needs a plane circle map")
            u, v = obj.evaluate((math.cos(theta), math.sin(theta)))
            u = u.to_complex().real if hasattr(u, "to_complex") else float(u)
            v = v.to_complex().real if hasattr(v, "to_complex") else float(v)
            return complex(u, v)
        raise TypeError(f"cannot wind {type(obj).__name__}")

    while True:
        total = 0.0
        ok = True
        prev = value(-math.pi)
        if abs(prev) < 1e-8:
            raise ValueError("inconclusive: map nearly vanishes on the circle")
        for j in range(1, n + 1):
            theta = -math.pi + 2 * math.pi * j / n
            cur = value(theta)
            if abs(cur) < 1e-8:
                raise ValueError("inconclusive: map nearly vanishes on the circle")
            step = math.atan2((cur / prev).imag, (cur / prev).real)
            if abs(step) >= math.pi / 4:
                ok = False
                break
            total += step
            prev = cur
        if ok:
            return round(total / (2 * math.pi))
        n *= 2
        if n > 2 ** 22:
            raise ValueError("inconclusive: argument steps never settled")


# ---------------------------------------------------------------------------
# Plot emission


def emit_plot(clouds, path: str, format: str = "SVG") -> str:
    """Write clouds as an 800x800 SVG (m = 2) or an RFC-4180 CSV."""
    if not clouds:
        raise ValueError("no clouds to plot")
    fmt = format.upper()
    if fmt == "SVG":
        if any(c.m != 2 for c in clouds):
            raise ValueError("SVG plots are for plane clouds (m = 2)")
        xs = [p[0] for c in clouds for p in c.points]
        ys = [p[1] for c in clouds for p in c.points]
        lo_x, hi_x = min(xs), max(xs)
        lo_y, hi_y = min(ys), max(ys)
        pad_x = 0.05 * max(hi_x - lo_x, 1e-9)
        pad_y = 0.05 * max(hi_y - lo_y, 1e-9)
        vb = (lo_x - pad_x, lo_y - pad_y,
              (hi_x - lo_x) + 2 * pad_x, (hi_y - lo_y) + 2 * pad_y)
        colors = ("#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#8c564b")
        lines = [
            '<?xml version="1.0" encoding="UTF-8"?>',
            f'<svg xmlns="http://www.w3.org/2000/svg" width="800" height="800" '
            f'viewBox="{vb[0]:.6g} {vb[1]:.6g} {vb[2]:.6g} {vb[3]:.6g}">',
        ]
        for i, c in enumerate(clouds):
            pts = " ".join(f"{p[0]:.9g},{p[1]:.9g}" for p in c.points)
            width = vb[2] / 400
            lines.append(
                f'<polyline points="{pts}" fill="none" '
                f'stroke="{colors[i % len(colors)]}" stroke-width="{width:.6g}"/>')
        lines.append("</svg>")
        with open(path, "w", encoding="utf-8") as fh:
            fh.write("\n".join(lines) + "\n")
        return path
    if fmt == "CSV":
        m = clouds[0].m
        if any(c.m != m for c in clouds):
            raise ValueError("CSV clouds must share a dimension")
        rows = [",".join([f"x{i}" for i in range(1, m + 1)] + ["param"])]
        for c in clouds:
            for p, ann in zip(c.points, c.params):
                cells = [f"{x:.17g}" for x in p]
                cells.append("" if ann is None else f"{ann:.17g}")
                rows.append(",".join(cells))
        with open(path, "w", encoding="utf-8", newline="") as fh:
            fh.write("\r\n".join(rows) + "\r\n")
        return path
    raise ValueError(f"unknown plot format {format!r}")
