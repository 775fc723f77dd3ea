"""Exact factorization of univariate rational polynomials.

Pipeline: Yun's squarefree decomposition over Q, then for each squarefree
primitive integer part the classical Zassenhaus route -- factor modulo a
small good prime (distinct-degree plus Cantor-Zassenhaus splitting),
Hensel-lift the modular factors to a modulus beyond the Landau-Mignotte
coefficient bound, and recombine subsets by trial exact division over Z.

Handles degree up to ~24 comfortably; everything is exact, the only
randomness (Cantor-Zassenhaus splitting polynomials) is drawn from a
fixed-seed generator and the returned factor list is sorted canonically,
so results are deterministic.
"""

from __future__ import annotations

import itertools
import math
import random
from fractions import Fraction

from .qmath import UPoly, poly_gcd

_RNG_SEED = 0x5EED


# ---------------------------------------------------------------------------
# Z/m[x] helpers: coefficient lists, lowest degree first, reduced mod m.


def _trim(a):
    while a and a[-1] == 0:
        a.pop()
    return a


def _zm_mul(a, b, m):
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] = (out[i + j] + x * y) % m
    return _trim(out)


def _zm_add(a, b, m):
    n = max(len(a), len(b))
    out = [0] * n
    for i, x in enumerate(a):
        out[i] = x
    for i, y in enumerate(b):
        out[i] = (out[i] + y) % m
    return _trim(out)


def _zm_sub(a, b, m):
    n = max(len(a), len(b))
    out = [0] * n
    for i, x in enumerate(a):
        out[i] = x
    for i, y in enumerate(b):
        out[i] = (out[i] - y) % m
    return _trim(out)


def _zm_scale(a, k, m):
    k %= m
    return _trim([(x * k) % m for x in a])


def _zm_divmod(a, b, m):
    """Division with invertible leading coefficient of b (mod m)."""
    if not b:
        raise ZeroDivisionError
    inv = pow(b[-1], -1, m)
    a = list(a)
    q = [0] * max(0, len(a) - len(b) + 1)
    while len(a) >= len(b):
        if a[-1] == 0:
            a.pop()
            continue
        k = len(a) - len(b)
        f = (a[-1] * inv) % m
        q[k] = f
        for i, y in enumerate(b):
            a[k + i] = (a[k + i] - f * y) % m
        a.pop()
    return _trim(q), _trim(a)


def _zm_mod(a, b, m):
    return _zm_divmod(a, b, m)[1]


def _gfp_monic(a, p):
    if not a:
        return a
    return _zm_scale(a, pow(a[-1], -1, p), p)


def _gfp_gcd(a, b, p):
    while b:
        a, b = b, _zm_mod(a, b, p)
    return _gfp_monic(a, p)


def _gfp_ext_euclid(a, b, p):
    """Return (s, t) with s*a + t*b == 1 mod p for coprime a, b."""
    r0, r1 = list(a), list(b)
    s0, s1 = [1], []
    t0, t1 = [], [1]
    while r1:
        q, r = _zm_divmod(r0, r1, p)
        r0, r1 = r1, r
        s0, s1 = s1, _zm_sub(s0, _zm_mul(q, s1, p), p)
        t0, t1 = t1, _zm_sub(t0, _zm_mul(q, t1, p), p)
    if len(r0) != 1:
        raise ArithmeticError("inputs not coprime mod p")
    inv = pow(r0[0], -1, p)
    return _zm_scale(s0, inv, p), _zm_scale(t0, inv, p)


def _gfp_powmod(base, e, mod, p):
    result = [1]
    base = _zm_mod(base, mod, p)
    while e:
        if e & 1:
            result = _zm_mod(_zm_mul(result, base, p), mod, p)
        base = _zm_mod(_zm_mul(base, base, p), mod, p)
        e >>= 1
    return result


def _gfp_derivative(a, p):
    return _trim([(i * x) % p for i, x in enumerate(a)][1:])


# ---------------------------------------------------------------------------
# Factorization over GF(p) for squarefree monic input.


def _distinct_degree(f, p):
    out = []
    h = [0, 1]
    d = 0
    while len(f) - 1 > 0:
        d += 1
        if 2 * d > len(f) - 1:
            out.append((f, len(f) - 1))
            break
        h = _gfp_powmod(h, p, f, p)
        g = _gfp_gcd(_zm_sub(h, [0, 1], p), f, p)
        if len(g) > 1:
            out.append((g, d))
            f = _zm_divmod(f, g, p)[0]
            h = _zm_mod(h, f, p)
    return out


def _equal_degree_split(f, d, p, rng):
    n = len(f) - 1
    if n == d:
        return [f]
    e = (p ** d - 1) // 2
    while True:
        r = _trim([rng.randrange(p) for _ in range(n)])
        if len(r) <= 1:
            continue
        u = _zm_sub(_gfp_powmod(r, e, f, p), [1], p)
        g = _gfp_gcd(u, f, p)
        if 1 < len(g) < len(f):
            rest = _zm_divmod(f, g, p)[0]
            return _equal_degree_split(g, d, p, rng) + _equal_degree_split(rest, d, p, rng)


def _factor_gfp(f, p, rng):
    """Monic irreducible factors of a squarefree monic f mod odd p."""
    out = []
    for g, d in _distinct_degree(f, p):
        out.extend(_equal_degree_split(g, d, p, rng))
    return out


# ---------------------------------------------------------------------------
# Hensel lifting (monic pairs), peel-off multifactor variant.


def _hensel_pair(F, g, h, p, M):
    """Lift F == g*h (mod p), all monic, to modulus M = p^(2^j)."""
    s, t = _gfp_ext_euclid(g, h, p)
    m = p
    while m < M:
        m2 = m * m
        e = _zm_sub(F, _zm_mul(g, h, m2), m2)
        q, r = _zm_divmod(_zm_mul(s, e, m2), h, m2)
        g = _zm_add(g, _zm_add(_zm_mul(t, e, m2), _zm_mul(q, g, m2), m2), m2)
        h = _zm_add(h, r, m2)
        b = _zm_sub(_zm_add(_zm_mul(s, g, m2), _zm_mul(t, h, m2), m2), [1], m2)
        c, dd = _zm_divmod(_zm_mul(s, b, m2), h, m2)
        s = _zm_sub(s, dd, m2)
        t = _zm_sub(t, _zm_add(_zm_mul(t, b, m2), _zm_mul(c, g, m2), m2), m2)
        m = m2
    return g, h


def _hensel_lift_all(F, factors, p, M):
    """Lift monic factors of monic F from mod p to mod M, peeling one by one."""
    lifted = []
    rem_mod_p = factors
    while len(rem_mod_p) > 1:
        g = rem_mod_p[0]
        h = [1]
        for other in rem_mod_p[1:]:
            h = _zm_mul(h, other, p)
        g_l, h_l = _hensel_pair(F, g, h, p, M)
        lifted.append(g_l)
        F = h_l
        rem_mod_p = rem_mod_p[1:]
    lifted.append(F)
    return lifted


# ---------------------------------------------------------------------------
# Zassenhaus over Z.


def _symmetric(x, m):
    x %= m
    return x - m if x > m // 2 else x


def _int_poly(u: UPoly):
    return [c.numerator for c in u.c]


def _primitive_int_upoly(coeffs) -> UPoly:
    coeffs = list(coeffs)
    while coeffs and coeffs[-1] == 0:
        coeffs.pop()
    if not coeffs:
        return UPoly()
    g = math.gcd(*(abs(c) for c in coeffs))
    if coeffs[-1] < 0:
        g = -g
    return UPoly([Fraction(c // g) for c in coeffs])


def _next_prime(p):
    p += 1 + (p % 2)
    while True:
        for d in range(3, math.isqrt(p) + 1, 2):
            if p % d == 0:
                break
        else:
            return p
        p += 2


def _factor_squarefree_z(f: UPoly, rng):
    """Irreducible monic factors over Q of a squarefree primitive f in Z[x]."""
    n = f.degree
    if n <= 0:
        return []
    if n == 1:
        return [f.monic()]
    fz = _int_poly(f)
    lc = fz[-1]
    p = 3
    while True:
        if lc % p != 0:
            fp = _gfp_monic([c % p for c in fz], p)
            if len(fp) == n + 1 and len(_gfp_gcd(fp, _gfp_derivative(fp, p), p)) == 1:
                break
        p = _next_prime(p)
    modular = _factor_gfp(fp, p, rng)
    if len(modular) == 1:
        return [f.monic()]
    # Landau-Mignotte style bound on factor coefficients (times lc).
    norm1 = sum(abs(c) for c in fz)
    bound = 2 ** (n + 1) * norm1 * abs(lc)
    M = p
    while M <= 2 * bound:
        M *= M
    linv = pow(lc, -1, M)
    F = _zm_scale([c % M for c in fz], linv, M)
    lifted = _hensel_lift_all(F, modular, p, M)

    factors = []
    remaining = f
    idx = list(range(len(lifted)))
    s = 1
    while 2 * s <= len(idx):
        found = True
        while found:
            found = False
            for combo in itertools.combinations(idx, s):
                prod = [_symmetric(remaining.c[-1].numerator, M) % M]
                for i in combo:
                    prod = _zm_mul(prod, lifted[i], M)
                cand = _primitive_int_upoly([_symmetric(c, M) for c in prod])
                if cand.degree < 1:
                    continue
                q, r = divmod(remaining, cand)
                if r.is_zero():
                    factors.append(cand.monic())
                    remaining = q
                    idx = [i for i in idx if i not in combo]
                    found = True
                    break
            if 2 * s > len(idx):
                break
        s += 1
    if remaining.degree >= 1:
        factors.append(remaining.monic())
    return factors


def squarefree_decomposition(f: UPoly):
    """Yun's algorithm: list of (squarefree factor, multiplicity) over Q."""
    if f.is_zero():
        raise ValueError("zero polynomial")
    out = []
    c = poly_gcd(f, f.derivative())
    if c.degree == 0:
        return [(f.monic(), 1)]
    w = f.div_exact(c)
    y = f.derivative().div_exact(c)
    k = 1
    while w.degree > 0:
        z = y - w.derivative()
        g = poly_gcd(w, z)
        if g.degree > 0:
            out.append((g, k))
        w = w.div_exact(g)
        y = z.div_exact(g)
        k += 1
    return out


def factor_rational(f: UPoly):
    """Irreducible monic factors over Q with multiplicities.

    The product of factor^multiplicity equals f up to a rational unit.
    Output is sorted by (degree, coefficients) and therefore deterministic.
    """
    if f.is_zero():
        raise ValueError("zero polynomial")
    if f.degree < 1:
        raise ValueError("constant polynomial has no factorization")
    rng = random.Random(_RNG_SEED)
    out = []
    for sqf, mult in squarefree_decomposition(f):
        _, prim = sqf.primitive_int()
        for irr in _factor_squarefree_z(prim, rng):
            out.append((irr, mult))
    out.sort(key=lambda fm: (fm[0].degree, fm[0].c))
    return out


def is_irreducible(f: UPoly) -> bool:
    if f.degree < 1:
        return False
    facs = factor_rational(f)
    return len(facs) == 1 and facs[0][1] == 1
