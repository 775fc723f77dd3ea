"""Sparse multivariate polynomials over a duck-typed coefficient field.

Coefficients are Fraction or QuadExt (anything with field arithmetic and
equality against 0 works).  Exponent vectors are tuples; the zero
polynomial has an empty term dict.  Includes the two exact eliminations
the analysis layer needs: a bivariate gcd over Q (primitive-part Euclid
through the nested UPoly representation) and a Sylvester resultant with
polynomial entries (fraction-free Bareiss with exact division).
"""

from __future__ import annotations

from fractions import Fraction

from .qmath import UPoly, poly_gcd


class MPoly:
    __slots__ = ("n", "terms")

    def __init__(self, n: int, terms=None):
        self.n = n
        t = {}
        if terms:
            for e, c in terms.items():
                if len(e) != n:
                    raise ValueError("exponent arity mismatch")
                if c == 0:
                    continue
                t[tuple(e)] = c
        self.terms = t

    # -- constructors -----------------------------------------------------
    @classmethod
    def zero(cls, n):
        return cls(n)

    @classmethod
    def const(cls, n, c):
        return cls(n, {(0,) * n: c})

    @classmethod
    def var(cls, n, i, exp=1):
        e = [0] * n
        e[i] = exp
        return cls(n, {tuple(e): Fraction(1)})

    @classmethod
    def from_upoly(cls, u: UPoly, n: int, i: int):
        t = {}
        for k, c in enumerate(u.c):
            if c:
                e = [0] * n
                e[i] = k
                t[tuple(e)] = c
        return cls(n, t)

    # -- predicates --------------------------------------------------------
    def is_zero(self):
        return not self.terms

    def is_constant(self):
        return all(all(x == 0 for x in e) for e in self.terms)

    def constant_value(self):
        if self.is_zero():
            return Fraction(0)
        if not self.is_constant():
            raise ValueError("not a constant")
        return next(iter(self.terms.values()))

    def __eq__(self, other):
        return isinstance(other, MPoly) and self.n == other.n and self.terms == other.terms

    def __hash__(self):
        return hash((self.n, frozenset(self.terms.items())))

    def __bool__(self):
        return bool(self.terms)

    # -- arithmetic ---------------------------------------------------------
    def __neg__(self):
        return MPoly(self.n, {e: -c for e, c in self.terms.items()})

    def __add__(self, other):
        if not isinstance(other, MPoly):
            other = MPoly.const(self.n, other)
        t = dict(self.terms)
        for e, c in other.terms.items():
            s = t.get(e, 0) + c
            if s == 0:
                t.pop(e, None)
            else:
                t[e] = s
        return MPoly(self.n, t)

    __radd__ = __add__

    def __sub__(self, other):
        if not isinstance(other, MPoly):
            other = MPoly.const(self.n, other)
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if not isinstance(other, MPoly):
            if other == 0:
                return MPoly(self.n)
            return MPoly(self.n, {e: c * other for e, c in self.terms.items()})
        t = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                s = t.get(e, 0) + c1 * c2
                if s == 0:
                    t.pop(e, None)
                else:
                    t[e] = s
        return MPoly(self.n, t)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative power")
        result = MPoly.const(self.n, Fraction(1))
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    # -- structure -----------------------------------------------------------
    def degree(self, i=None):
        if not self.terms:
            return -1
        if i is None:
            return max(sum(e) for e in self.terms)
        return max(e[i] for e in self.terms)

    def derivative(self, i):
        t = {}
        for e, c in self.terms.items():
            if e[i]:
                e2 = list(e)
                e2[i] -= 1
                t[tuple(e2)] = c * e[i]
        return MPoly(self.n, t)

    def coeff_list(self, i):
        """Coefficients of powers of variable i, as MPoly with var i removed."""
        d = self.degree(i)
        out = [dict() for _ in range(max(d, 0) + 1)]
        for e, c in self.terms.items():
            rest = e[:i] + e[i + 1:]
            out[e[i]][rest] = c
        return [MPoly(self.n - 1, t) for t in out]

    @classmethod
    def from_coeff_list(cls, coeffs, i):
        """Inverse of coeff_list: insert variable i with the listed powers."""
        if not coeffs:
            raise ValueError("empty coefficient list")
        n = coeffs[0].n + 1
        t = {}
        for k, p in enumerate(coeffs):
            for e, c in p.terms.items():
                t[e[:i] + (k,) + e[i:]] = c
        return cls(n, t)

    def subst(self, values):
        """Substitute values[i] for variable i; values are MPoly or scalars.

        All MPoly values must share an arity; scalars are allowed.  Returns
        an MPoly over that arity (or a scalar if none are MPoly).
        """
        target_n = None
        for v in values:
            if isinstance(v, MPoly):
                target_n = v.n
                break
        if target_n is None:
            acc = 0
            for e, c in self.terms.items():
                term = c
                for x, k in zip(values, e):
                    for _ in range(k):
                        term = term * x
                acc = acc + term
            return acc
        acc = MPoly(target_n)
        for e, c in self.terms.items():
            term = MPoly.const(target_n, c)
            for v, k in zip(values, e):
                if k == 0:
                    continue
                vm = v if isinstance(v, MPoly) else MPoly.const(target_n, v)
                term = term * vm ** k
            acc = acc + term
        return acc

    def evaluate(self, point):
        """Numeric evaluation (float/complex/Fraction coordinates)."""
        acc = 0
        for e, c in self.terms.items():
            if hasattr(c, "to_complex"):
                z = c.to_complex()
                term = z.real if z.imag == 0 else z
            else:
                term = c
            for x, k in zip(point, e):
                if k:
                    term = term * x ** k
            acc = acc + term
        return acc

    # -- division ------------------------------------------------------------
    def _lead(self):
        e = max(self.terms, key=lambda e: (sum(e), e))
        return e, self.terms[e]

    def div_exact(self, other: "MPoly") -> "MPoly":
        if other.is_zero():
            raise ZeroDivisionError
        if other.is_constant():
            inv = 1 / other.constant_value()
            return MPoly(self.n, {e: c * inv for e, c in self.terms.items()})
        rem = self
        t = {}
        while not rem.is_zero():
            e, c = rem._lead()
            eo, co = other._lead()
            q = tuple(a - b for a, b in zip(e, eo))
            if any(x < 0 for x in q):
                raise ArithmeticError("inexact multivariate division")
            qc = c / co
            t[q] = t.get(q, 0) + qc
            rem = rem - MPoly(self.n, {q: qc}) * other
        return MPoly(self.n, t)

    def map_coeffs(self, fn):
        return MPoly(self.n, {e: fn(c) for e, c in self.terms.items()})

    def primitive_rational(self):
        """For Fraction coefficients: (unit, primitive integer-coefficient poly)."""
        if self.is_zero():
            return Fraction(1), self
        import math
        den = math.lcm(*(c.denominator for c in self.terms.values()))
        nums = {e: c.numerator * (den // c.denominator) for e, c in self.terms.items()}
        g = math.gcd(*(abs(v) for v in nums.values()))
        lead = max(nums, key=lambda e: (sum(e), e))
        if nums[lead] < 0:
            g = -g
        return Fraction(g, den), MPoly(self.n, {e: Fraction(v // g) for e, v in nums.items()})

    def __repr__(self):
        if self.is_zero():
            return "MPoly(0)"
        parts = []
        for e in sorted(self.terms, key=lambda e: (-sum(e), tuple(-x for x in e))):
            parts.append(f"{self.terms[e]}*x^{e}")
        return "MPoly(" + " + ".join(parts) + ")"


# ---------------------------------------------------------------------------
# Bivariate gcd over Q via primitive-part Euclid in Q[t][s]


def _to_nested(f: MPoly, main: int):
    """MPoly in 2 vars -> list of UPoly in the other var, indexed by main-power."""
    other = 1 - main
    d = f.degree(main)
    cs = [dict() for _ in range(max(d, 0) + 1)]
    for e, c in f.terms.items():
        cs[e[main]][e[other]] = c
    return [UPoly([t.get(i, 0) for i in range(max(t) + 1)]) if t else UPoly() for t in cs]


def _from_nested(nested, main: int) -> MPoly:
    t = {}
    for k, u in enumerate(nested):
        for i, c in enumerate(u.c):
            if c:
                e = (k, i) if main == 0 else (i, k)
                t[e] = c
    return MPoly(2, t)


def _nested_content(nested) -> UPoly:
    g = UPoly()
    for u in nested:
        g = poly_gcd(g, u)
        if g.degree == 0 and not g.is_zero():
            break
    return g if not g.is_zero() else UPoly((1,))


def _nested_trimmed(ns):
    ns = list(ns)
    while ns and ns[-1].is_zero():
        ns.pop()
    return ns


def _nested_scale(ns, u: UPoly):
    return [x * u for x in ns]


def _nested_divide_content(ns, g: UPoly):
    return [x.div_exact(g) for x in ns]


def _nested_pseudo_rem(a, b):
    """Pseudo-remainder of a by b in (Q[t])[s]; b nonzero."""
    a = _nested_trimmed(list(a))
    b = _nested_trimmed(list(b))
    db = len(b) - 1
    lb = b[-1]
    while a and len(a) - 1 >= db:
        da = len(a) - 1
        lead = a[-1]
        a = [x * lb for x in a]
        shift = da - db
        for i in range(db + 1):
            a[shift + i] = a[shift + i] - lead * b[i]
        a = _nested_trimmed(a)
        if len(a) - 1 == da:
            raise ArithmeticError("pseudo-division failed to reduce degree")
    return a


def gcd_bivariate(f: MPoly, g: MPoly) -> MPoly:
    """Gcd in Q[x0, x1] (primitive, deterministic sign)."""
    if f.n != 2 or g.n != 2:
        raise ValueError("gcd_bivariate expects 2 variables")
    if f.is_zero():
        return _normalize_biv(g)
    if g.is_zero():
        return _normalize_biv(f)
    main = 1  # eliminate in x1 with coefficients in Q[x0]
    a = _nested_trimmed(_to_nested(f, main))
    b = _nested_trimmed(_to_nested(g, main))
    ca, cb = _nested_content(a), _nested_content(b)
    cont = poly_gcd(ca, cb)
    a = _nested_divide_content(a, ca)
    b = _nested_divide_content(b, cb)
    if len(a) < len(b):
        a, b = b, a
    while True:
        r = _nested_pseudo_rem(a, b)
        if not r:
            break
        cr = _nested_content(r)
        a, b = b, _nested_divide_content(r, cr)
        if len(b) == 1:
            break
    if len(b) == 1:
        result = _from_nested([cont], main)
    else:
        cb2 = _nested_content(b)
        result = _from_nested(_nested_scale(_nested_divide_content(b, cb2), cont), main)
    return _normalize_biv(result)


def _normalize_biv(p: MPoly) -> MPoly:
    if p.is_zero():
        return p
    _, prim = p.primitive_rational()
    return prim


# ---------------------------------------------------------------------------
# Resultant with polynomial entries (Bareiss)


def resultant_mpoly(f: MPoly, g: MPoly, i: int) -> MPoly:
    """Sylvester resultant of f, g with respect to variable i."""
    fc = f.coeff_list(i)
    gc = g.coeff_list(i)
    n, m = len(fc) - 1, len(gc) - 1
    if f.is_zero() or g.is_zero():
        raise ValueError("resultant with zero polynomial")
    arity = fc[0].n
    one = MPoly.const(arity, Fraction(1))
    zero = MPoly(arity)
    if n == 0:
        return fc[0] ** m
    if m == 0:
        return gc[0] ** n
    size = n + m
    rows = []
    fr = list(reversed(fc))
    gr = list(reversed(gc))
    for k in range(m):
        rows.append([zero] * k + fr + [zero] * (size - n - 1 - k))
    for k in range(n):
        rows.append([zero] * k + gr + [zero] * (size - m - 1 - k))
    sign = 1
    prev = one
    for k in range(size - 1):
        if rows[k][k].is_zero():
            for r in range(k + 1, size):
                if not rows[r][k].is_zero():
                    rows[k], rows[r] = rows[r], rows[k]
                    sign = -sign
                    break
            else:
                return zero
        pivot = rows[k][k]
        for r in range(k + 1, size):
            for c in range(k + 1, size):
                rows[r][c] = (rows[r][c] * pivot - rows[r][k] * rows[k][c]).div_exact(prev)
            rows[r][k] = zero
        prev = pivot
    res = rows[size - 1][size - 1]
    return res if sign == 1 else -res
