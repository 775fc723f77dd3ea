"""Exact rational arithmetic kernel: univariate polynomials, binary forms, surds.

Conventions used throughout the package:

* Scalars are `fractions.Fraction` (aliased ``Rat``).  Fraction already
  enforces the reduced-form invariant (coprime numerator/denominator,
  positive denominator).
* ``UPoly`` stores coefficients lowest degree first, with no trailing
  zeros; the zero polynomial is the empty tuple and has degree -1.
* ``HPoly2`` is a homogeneous form in (t0, t1) of explicit degree d;
  coefficient ``k`` multiplies t0^(d-k) * t1^k.  A form factors as
  t0^e * H(u) where u(t) = P(1, t), which is how most operations are
  implemented.
* ``QuadExt`` is a value a + b*sqrt(d) with a, b rational and d a
  squarefree integer; d < 0 yields complex values.  b == 0 embeds the
  rationals (stored with d = None).
* The resultant follows the Sylvester determinant convention:
  Res(f, g) = lc(f)^deg(g) * lc(g)^deg(f) * prod (alpha_i - beta_j).

No floating point is used anywhere in this module; floats never decide.
"""

from __future__ import annotations

import math
from fractions import Fraction

Rat = Fraction

_ZERO = Fraction(0)
_ONE = Fraction(1)


def _as_rat(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    raise TypeError(f"expected a rational, got {type(x).__name__}")


class UPoly:
    """Univariate polynomial over Q, coefficients lowest degree first."""

    __slots__ = ("c",)

    def __init__(self, coeffs=()):
        c = [_as_rat(x) for x in coeffs]
        while c and c[-1] == 0:
            c.pop()
        self.c = tuple(c)

    @classmethod
    def const(cls, x) -> "UPoly":
        return cls((x,))

    @classmethod
    def x(cls) -> "UPoly":
        return cls((0, 1))

    @property
    def degree(self) -> int:
        return len(self.c) - 1

    def is_zero(self) -> bool:
        return not self.c

    @property
    def lc(self) -> Fraction:
        if not self.c:
            return _ZERO
        return self.c[-1]

    def __bool__(self):
        return bool(self.c)

    def __eq__(self, other):
        return isinstance(other, UPoly) and self.c == other.c

    def __hash__(self):
        return hash(self.c)

    def __neg__(self):
        return UPoly(tuple(-a for a in self.c))

    def __add__(self, other):
        if isinstance(other, (int, Fraction)):
            other = UPoly((other,))
        n = max(len(self.c), len(other.c))
        a = list(self.c) + [_ZERO] * (n - len(self.c))
        for i, b in enumerate(other.c):
            a[i] += b
        return UPoly(a)

    __radd__ = __add__

    def __sub__(self, other):
        if isinstance(other, (int, Fraction)):
            other = UPoly((other,))
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            q = _as_rat(other)
            return UPoly(tuple(a * q for a in self.c))
        if not self.c or not other.c:
            return UPoly()
        out = [_ZERO] * (len(self.c) + len(other.c) - 1)
        for i, a in enumerate(self.c):
            if a:
                for j, b in enumerate(other.c):
                    out[i + j] += a * b
        return UPoly(out)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative power")
        result = UPoly((1,))
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __divmod__(self, other: "UPoly"):
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        q = [_ZERO] * max(0, len(self.c) - len(other.c) + 1)
        r = list(self.c)
        dlc = other.lc
        dd = other.degree
        while len(r) - 1 >= dd and any(r):
            while r and r[-1] == 0:
                r.pop()
            if len(r) - 1 < dd:
                break
            k = len(r) - 1 - dd
            f = r[-1] / dlc
            q[k] = f
            for i, b in enumerate(other.c):
                r[k + i] -= f * b
            r.pop()
        return UPoly(q), UPoly(r)

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    def div_exact(self, other: "UPoly") -> "UPoly":
        q, r = divmod(self, other)
        if not r.is_zero():
            raise ArithmeticError("inexact polynomial division")
        return q

    def monic(self) -> "UPoly":
        if self.is_zero():
            return self
        inv = 1 / self.lc
        return UPoly(tuple(a * inv for a in self.c))

    def derivative(self) -> "UPoly":
        return UPoly(tuple(i * a for i, a in enumerate(self.c) if i))

    def __call__(self, x):
        """Horner evaluation; works for Fraction, float, complex, QuadExt..."""
        acc = None
        for a in reversed(self.c):
            acc = a if acc is None else acc * x + a
        if acc is None:
            return type(x)(0) if not isinstance(x, (int, Fraction)) else _ZERO
        return acc

    def compose(self, inner: "UPoly") -> "UPoly":
        acc = UPoly()
        for a in reversed(self.c):
            acc = acc * inner + UPoly((a,))
        return acc

    def primitive_int(self):
        """Return (q, g) with self == q * g, g primitive over Z, q rational > 0."""
        if self.is_zero():
            return _ONE, self
        den = math.lcm(*(a.denominator for a in self.c))
        nums = [a.numerator * (den // a.denominator) for a in self.c]
        g = math.gcd(*(abs(n) for n in nums))
        if nums[-1] < 0:
            g = -g
        return Fraction(g, den), UPoly([Fraction(n // g) for n in nums])

    def __repr__(self):
        if self.is_zero():
            return "UPoly(0)"
        parts = []
        for i in reversed(range(len(self.c))):
            a = self.c[i]
            if a == 0:
                continue
            if i == 0:
                parts.append(f"{a}")
            elif i == 1:
                parts.append(f"{a}*t")
            else:
                parts.append(f"{a}*t^{i}")
        return "UPoly(" + " + ".join(parts) + ")"


def poly_gcd(f: UPoly, g: UPoly) -> UPoly:
    """Monic greatest common divisor; gcd(0, 0) == 0."""
    while not g.is_zero():
        f, g = g, f % g
    return f.monic()


def poly_lcm(f: UPoly, g: UPoly) -> UPoly:
    if f.is_zero() or g.is_zero():
        return UPoly()
    return (f * g).div_exact(poly_gcd(f, g)).monic()


def resultant(f: UPoly, g: UPoly) -> Fraction:
    """Sylvester-matrix determinant via fraction-free elimination over Z."""
    if f.is_zero() or g.is_zero():
        raise ValueError("resultant of the zero polynomial")
    n, m = f.degree, g.degree
    if n == 0:
        return f.c[0] ** m
    if m == 0:
        return g.c[0] ** n
    qf, fi = f.primitive_int()
    qg, gi = g.primitive_int()
    size = n + m
    rows = []
    fc = [a.numerator for a in reversed(fi.c)]  # highest degree first
    gc = [a.numerator for a in reversed(gi.c)]
    for i in range(m):
        rows.append([0] * i + fc + [0] * (size - n - 1 - i))
    for i in range(n):
        rows.append([0] * i + gc + [0] * (size - m - 1 - i))
    det = _bareiss_int(rows)
    return det * qf ** m * qg ** n


def _bareiss_int(rows) -> int:
    """Fraction-free determinant of a square integer matrix (destructive)."""
    n = len(rows)
    sign = 1
    prev = 1
    for k in range(n - 1):
        if rows[k][k] == 0:
            for i in range(k + 1, n):
                if rows[i][k] != 0:
                    rows[k], rows[i] = rows[i], rows[k]
                    sign = -sign
                    break
            else:
                return 0
        pivot = rows[k][k]
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                rows[i][j] = (rows[i][j] * pivot - rows[i][k] * rows[k][j]) // prev
            rows[i][k] = 0
        prev = pivot
    return sign * rows[n - 1][n - 1]


def squarefree_part(f: UPoly) -> UPoly:
    """f / gcd(f, f'), monic: same roots, all simple."""
    if f.is_zero():
        raise ValueError("squarefree part of the zero polynomial")
    if f.degree == 0:
        return UPoly((1,))
    g = poly_gcd(f, f.derivative())
    return f.div_exact(g).monic()


def is_squarefree(f: UPoly) -> bool:
    return f.degree <= 0 or poly_gcd(f, f.derivative()).degree == 0


# ---------------------------------------------------------------------------
# Sturm sequences


def sturm_chain(f: UPoly):
    chain = [f, f.derivative()]
    while not chain[-1].is_zero():
        chain.append(-(chain[-2] % chain[-1]))
    chain.pop()
    return chain


def _sign_variations(values) -> int:
    count = 0
    prev = 0
    for v in values:
        s = (v > 0) - (v < 0)
        if s == 0:
            continue
        if prev and s != prev:
            count += 1
        prev = s
    return count


def _variations_at(chain, x) -> int:
    return _sign_variations([p(x) for p in chain])


def _variations_at_inf(chain, positive: bool) -> int:
    vals = []
    for p in chain:
        if p.is_zero():
            vals.append(_ZERO)
        elif positive or p.degree % 2 == 0:
            vals.append(p.lc)
        else:
            vals.append(-p.lc)
    return _sign_variations(vals)


def sturm_real_root_count(f: UPoly, lo=None, hi=None) -> int:
    """Number of real roots of squarefree f in (lo, hi]; None means +-infinity."""
    if f.is_zero():
        raise ValueError("zero polynomial")
    if not is_squarefree(f):
        raise ValueError("sturm_real_root_count requires a squarefree polynomial")
    if f.degree == 0:
        return 0
    chain = sturm_chain(f)
    vlo = _variations_at_inf(chain, False) if lo is None else _variations_at(chain, _as_rat(lo))
    vhi = _variations_at_inf(chain, True) if hi is None else _variations_at(chain, _as_rat(hi))
    return vlo - vhi


def cauchy_root_bound(f: UPoly) -> Fraction:
    """All complex roots of f have absolute value < the returned rational."""
    if f.degree < 1:
        return _ONE
    lc = abs(f.lc)
    return 1 + max(abs(a) for a in f.c) / lc


# ---------------------------------------------------------------------------
# Homogeneous binary forms


class HPoly2:
    """Homogeneous form in (t0, t1): coefficient k multiplies t0^(d-k) t1^k."""

    __slots__ = ("d", "coeffs")

    def __init__(self, degree: int, coeffs):
        if degree < 0:
            raise ValueError("negative degree")
        c = [_as_rat(x) for x in coeffs]
        if len(c) != degree + 1:
            raise ValueError("need degree+1 coefficients")
        self.d = degree
        self.coeffs = tuple(c)

    @classmethod
    def from_affine(cls, u: UPoly, degree: int) -> "HPoly2":
        """Homogenize u(t) = P(1, t) to the stated degree (t0-padding)."""
        if u.degree > degree:
            raise ValueError("degree too small to homogenize")
        c = list(u.c) + [_ZERO] * (degree - u.degree)
        if u.is_zero():
            c = [_ZERO] * (degree + 1)
        return cls(degree, c)

    def affine(self) -> UPoly:
        """Dehomogenization P(1, t)."""
        return UPoly(self.coeffs)

    def is_zero(self) -> bool:
        return all(a == 0 for a in self.coeffs)

    @property
    def inf_mult(self) -> int:
        """Multiplicity of the root [0:1], i.e. the t0-adic drop at infinity."""
        if self.is_zero():
            raise ValueError("zero form")
        return self.d - self.affine().degree

    def __eq__(self, other):
        return isinstance(other, HPoly2) and self.d == other.d and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.d, self.coeffs))

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return HPoly2(self.d, tuple(a * other for a in self.coeffs))
        prod = self.affine() * other.affine()
        return HPoly2.from_affine(prod, self.d + other.d)

    __rmul__ = __mul__

    def __neg__(self):
        return self * Fraction(-1)

    def __add__(self, other):
        if self.d != other.d:
            raise ValueError("cannot add forms of different degree")
        return HPoly2(self.d, tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    def __sub__(self, other):
        return self + (-other)

    def div_exact(self, other: "HPoly2") -> "HPoly2":
        if other.is_zero():
            raise ZeroDivisionError
        e = self.inf_mult - other.inf_mult
        if e < 0:
            raise ArithmeticError("inexact form division at infinity")
        q = self.affine().div_exact(other.affine())
        return HPoly2.from_affine(q, self.d - other.d)

    def evaluate(self, t0, t1):
        """Evaluate at (t0, t1); generic over the coefficient arithmetic."""
        acc = None
        for k, a in enumerate(self.coeffs):
            term = a
            for _ in range(self.d - k):
                term = term * t0
            for _ in range(k):
                term = term * t1
            acc = term if acc is None else acc + term
        return acc

    def compose(self, f0: "HPoly2", f1: "HPoly2") -> "HPoly2":
        """Substitute (t0, t1) -> (f0, f1) for forms f0, f1 of equal degree."""
        if f0.d != f1.d:
            raise ValueError("substitution forms must share a degree")
        parts = None
        for k, a in enumerate(self.coeffs):
            if a == 0:
                continue
            term = HPoly2(0, (a,))
            for _ in range(self.d - k):
                term = term * f0
            for _ in range(k):
                term = term * f1
            term = HPoly2.from_affine(term.affine(), self.d * f0.d)
            parts = term if parts is None else parts + term
        if parts is None:
            return HPoly2(self.d * f0.d, [_ZERO] * (self.d * f0.d + 1))
        return parts

    def conjugate(self) -> "HPoly2":
        """Complex conjugation fixes rational forms; explicit no-op witness."""
        return self

    def __repr__(self):
        return f"HPoly2(d={self.d}, {list(self.coeffs)})"


def hform_gcd(forms) -> HPoly2:
    """Gcd of homogeneous forms: t0^min(e_i) * gcd of dehomogenizations."""
    forms = [f for f in forms if not f.is_zero()]
    if not forms:
        raise ValueError("gcd of zero forms")
    e = min(f.inf_mult for f in forms)
    g = forms[0].affine()
    for f in forms[1:]:
        g = poly_gcd(g, f.affine())
    return HPoly2.from_affine(g, g.degree + e)


# ---------------------------------------------------------------------------
# Quadratic extensions Q(sqrt(d))


def squarefree_decompose_int(n: int):
    """n = s * f^2 with s squarefree; returns (s, f).  n != 0."""
    if n == 0:
        raise ValueError("zero has no squarefree part")
    s = 1 if n > 0 else -1
    n = abs(n)
    f = 1
    d = 2
    while d * d <= n:
        while n % (d * d) == 0:
            n //= d * d
            f *= d
        d += 1
    return s * n, f


class QuadExt:
    """a + b*sqrt(d), a and b rational, d squarefree != 0, 1 (None when b == 0)."""

    __slots__ = ("a", "b", "d")

    def __init__(self, a, b=0, d=None):
        self.a = _as_rat(a)
        b = _as_rat(b)
        if b == 0:
            d = None
        elif d is None:
            raise ValueError("surd coefficient without a radicand")
        else:
            s, f = squarefree_decompose_int(int(d)) if isinstance(d, int) else (None, None)
            if s is None or s in (0, 1):
                raise ValueError("radicand must be a squarefree integer != 0, 1")
            if s != d:
                b = b * f
                d = s
        self.b = b
        self.d = d

    @classmethod
    def of(cls, x) -> "QuadExt":
        if isinstance(x, QuadExt):
            return x
        return cls(_as_rat(x))

    def is_rational(self) -> bool:
        return self.b == 0

    def is_real(self) -> bool:
        return self.b == 0 or self.d > 0

    def rational_value(self) -> Fraction:
        if self.b != 0:
            raise ValueError("not a rational value")
        return self.a

    def _coerce(self, other):
        if isinstance(other, QuadExt):
            if self.d is not None and other.d is not None and self.d != other.d:
                raise ValueError(f"mixing sqrt({self.d}) with sqrt({other.d})")
            return other
        if isinstance(other, (int, Fraction)):
            return QuadExt(other)
        return None

    def __bool__(self):
        return self.a != 0 or self.b != 0

    def __eq__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self.a == o.a and self.b == o.b and (self.b == 0 or self.d == o.d)

    def __hash__(self):
        return hash((self.a, self.b, self.d))

    def __neg__(self):
        return QuadExt(-self.a, -self.b, self.d)

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return QuadExt(self.a + o.a, self.b + o.b, self.d if self.d is not None else o.d)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        d = self.d if self.d is not None else o.d
        dd = d if d is not None else 0
        return QuadExt(self.a * o.a + self.b * o.b * dd, self.a * o.b + self.b * o.a, d)

    __rmul__ = __mul__

    def norm(self) -> Fraction:
        dd = self.d if self.d is not None else 0
        return self.a * self.a - dd * self.b * self.b

    def galois_conjugate(self) -> "QuadExt":
        """Field conjugate a - b*sqrt(d) (complex conjugate when d < 0)."""
        return QuadExt(self.a, -self.b, self.d)

    def complex_conjugate(self) -> "QuadExt":
        if self.is_real():
            return self
        return self.galois_conjugate()

    def inverse(self) -> "QuadExt":
        n = self.norm()
        if n == 0:
            raise ZeroDivisionError("zero or degenerate surd")
        conj = self.galois_conjugate()
        return QuadExt(conj.a / n, conj.b / n, self.d)

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other):
        return QuadExt.of(other) * self.inverse()

    def sign(self) -> int:
        """Exact sign for real values."""
        if not self.is_real():
            raise ValueError("sign of a non-real value")
        if self.b == 0:
            return (self.a > 0) - (self.a < 0)
        if self.a == 0:
            return (self.b > 0) - (self.b < 0)
        sa = 1 if self.a > 0 else -1
        sb = 1 if self.b > 0 else -1
        if sa == sb:
            return sa
        # |a| vs |b|sqrt(d): compare squares
        lhs = self.a * self.a
        rhs = self.b * self.b * self.d
        if lhs == rhs:
            return 0
        return sa if lhs > rhs else sb

    def to_complex(self) -> complex:
        if self.b == 0:
            return complex(self.a)
        r = math.sqrt(abs(self.d))
        if self.d > 0:
            return complex(self.a + self.b * r)
        return complex(float(self.a), float(self.b) * r)

    def __repr__(self):
        if self.b == 0:
            return f"QuadExt({self.a})"
        return f"QuadExt({self.a} + {self.b}*sqrt({self.d}))"


# ---------------------------------------------------------------------------
# Rational intervals (exact endpoints, used for certified refinement)


class Iv:
    """Closed rational interval [lo, hi]."""

    __slots__ = ("lo", "hi")

    def __init__(self, lo, hi=None):
        lo = _as_rat(lo)
        hi = lo if hi is None else _as_rat(hi)
        if hi < lo:
            raise ValueError("empty interval")
        self.lo = lo
        self.hi = hi

    def __add__(self, other):
        if isinstance(other, (int, Fraction)):
            other = Iv(other)
        return Iv(self.lo + other.lo, self.hi + other.hi)

    __radd__ = __add__

    def __neg__(self):
        return Iv(-self.hi, -self.lo)

    def __sub__(self, other):
        if isinstance(other, (int, Fraction)):
            other = Iv(other)
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            q = _as_rat(other)
            return Iv(self.lo * q, self.hi * q) if q >= 0 else Iv(self.hi * q, self.lo * q)
        cands = (self.lo * other.lo, self.lo * other.hi, self.hi * other.lo, self.hi * other.hi)
        return Iv(min(cands), max(cands))

    __rmul__ = __mul__

    def contains_zero(self) -> bool:
        return self.lo <= 0 <= self.hi

    def contains(self, x) -> bool:
        return self.lo <= x <= self.hi

    def overlaps(self, other) -> bool:
        return self.lo <= other.hi and other.lo <= self.hi

    @property
    def width(self) -> Fraction:
        return self.hi - self.lo

    @property
    def mid(self) -> Fraction:
        return (self.lo + self.hi) / 2

    def __repr__(self):
        return f"Iv({self.lo}, {self.hi})"


class CIv:
    """Rectangular complex interval: re x im with rational endpoints."""

    __slots__ = ("re", "im")

    def __init__(self, re: Iv, im: Iv):
        self.re = re
        self.im = im

    @classmethod
    def point(cls, re, im=0) -> "CIv":
        return cls(Iv(re), Iv(im))

    def __add__(self, other):
        return CIv(self.re + other.re, self.im + other.im)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return CIv(self.re * other, self.im * other)
        return CIv(self.re * other.re - self.im * other.im,
                   self.re * other.im + self.im * other.re)

    __rmul__ = __mul__

    def contains_zero(self) -> bool:
        return self.re.contains_zero() and self.im.contains_zero()

    def overlaps(self, other) -> bool:
        return self.re.overlaps(other.re) and self.im.overlaps(other.im)

    def mid_complex(self) -> complex:
        return complex(float(self.re.mid), float(self.im.mid))

    def __repr__(self):
        return f"CIv({self.re}, {self.im})"


def eval_upoly_civ(f: UPoly, z: CIv) -> CIv:
    """Interval Horner evaluation of a rational polynomial on a complex box."""
    acc = CIv.point(0)
    for a in reversed(f.c):
        acc = acc * z + CIv.point(a)
    return acc
