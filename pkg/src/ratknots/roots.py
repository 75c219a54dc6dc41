"""Exact real-root machinery for dense integer polynomials.

Polynomials are plain lists of Python ints, index i = coefficient of x^i.
Everything here is exact: the numeric seeding used by isolate_real_roots is
only an accelerator, the returned count and brackets are certified by Sturm
variation counts and rational sign evaluations.
"""

from __future__ import annotations

import math
from fractions import Fraction

import numpy as np


def normalize(p: list[int]) -> list[int]:
    """Drop trailing zero coefficients; the zero polynomial becomes []."""
    q = list(p)
    while q and q[-1] == 0:
        q.pop()
    return q


def degree(p: list[int]) -> int:
    """Degree of a normalized polynomial; the zero polynomial has degree -1."""
    return len(p) - 1


def content(p: list[int]) -> int:
    g = 0
    for c in p:
        g = math.gcd(g, abs(c))
        if g == 1:
            return 1
    return g


def primitive(p: list[int]) -> list[int]:
    """Divide by the content, preserving sign."""
    p = normalize(p)
    if not p:
        return []
    g = content(p)
    return [c // g for c in p]


def derivative(p: list[int]) -> list[int]:
    return normalize([i * c for i, c in enumerate(p)][1:])


def poly_mul(p: list[int], q: list[int]) -> list[int]:
    if not p or not q:
        return []
    out = [0] * (len(p) + len(q) - 1)
    for i, a in enumerate(p):
        if a:
            for j, b in enumerate(q):
                out[i + j] += a * b
    return normalize(out)


def poly_divexact(p: list[int], q: list[int]) -> list[int]:
    """Exact division over Q, asserting the remainder vanishes.

    Returns integer coefficients when the quotient is integral, which is the
    only way this helper is used.
    """
    p = [Fraction(c) for c in normalize(p)]
    q = normalize(q)
    if not q:
        raise ZeroDivisionError("division by zero polynomial")
    out = [Fraction(0)] * (len(p) - len(q) + 1)
    lead = Fraction(q[-1])
    for k in range(len(out) - 1, -1, -1):
        c = p[k + len(q) - 1] / lead
        out[k] = c
        if c:
            for j, b in enumerate(q):
                p[k + j] -= c * b
    assert all(c == 0 for c in p), "inexact polynomial division"
    assert all(c.denominator == 1 for c in out)
    return normalize([int(c) for c in out])


def _prem_step(p: list[int], q: list[int]) -> list[int]:
    """Pseudo-remainder of p by q (both normalized, deg p >= deg q >= 0)."""
    r = list(p)
    lq = q[-1]
    dq = len(q) - 1
    while len(r) - 1 >= dq and normalize(r):
        r = normalize(r)
        if len(r) - 1 < dq:
            break
        lr = r[-1]
        shift = len(r) - 1 - dq
        r = [lq * c for c in r]
        for j, b in enumerate(q):
            r[shift + j] -= lr * b
        r = normalize(r)
        if not r:
            break
    return r


def prs_gcd(p: list[int], q: list[int]) -> list[int]:
    """Primitive gcd of two integer polynomials (positive leading coeff)."""
    a, b = primitive(p), primitive(q)
    if degree(a) < degree(b):
        a, b = b, a
    while b:
        r = primitive(_prem_step(a, b))
        a, b = b, r
    if not a:
        return []
    return a if a[-1] > 0 else [-c for c in a]


def squarefree_part(p: list[int]) -> list[int]:
    """p divided by gcd(p, p'), primitive, positive leading coefficient."""
    p = primitive(p)
    if degree(p) <= 0:
        return p
    g = prs_gcd(p, derivative(p))
    if degree(g) <= 0:
        w = p
    else:
        w = poly_divexact(p, g)
    w = primitive(w)
    return w if w[-1] > 0 else [-c for c in w]


def sturm_chain(w: list[int]) -> list[list[int]]:
    """Sturm chain of a squarefree polynomial.

    Each negated remainder is reduced to its primitive part; scaling by a
    positive constant preserves the sign-variation property.
    """
    chain = [primitive(w)]
    d = derivative(w)
    if d:
        chain.append(primitive(d))
    while len(chain) >= 2 and degree(chain[-1]) > 0:
        r = _prem_step(chain[-2], chain[-1])
        if not r:
            break
        # The pseudo-remainder multiplies by lc(q)^k; an even/odd power of a
        # negative leading coefficient can flip the intended sign, so redo the
        # sign bookkeeping with an exact fraction remainder instead.
        r = _frac_rem(chain[-2], chain[-1])
        if not r:
            break
        r = [-c for c in r]
        chain.append(_prim_int_from_frac(r))
    return chain


def _frac_rem(p: list[int], q: list[int]) -> list[Fraction]:
    pp = [Fraction(c) for c in p]
    dq = len(q) - 1
    lead = Fraction(q[-1])
    while len(pp) - 1 >= dq:
        c = pp[-1] / lead
        shift = len(pp) - 1 - dq
        for j, b in enumerate(q):
            pp[shift + j] -= c * b
        while pp and pp[-1] == 0:
            pp.pop()
        if not pp:
            break
    return pp


def _prim_int_from_frac(p: list[Fraction]) -> list[int]:
    den = 1
    for c in p:
        den = den * c.denominator // math.gcd(den, c.denominator)
    ints = [int(c * den) for c in p]
    g = content(ints)
    return [c // g for c in ints]


def _variations(signs: list[int]) -> int:
    nz = [s for s in signs if s != 0]
    return sum(1 for a, b in zip(nz, nz[1:]) if a * b < 0)


def sign_at(p: list[int], x: Fraction) -> int:
    """Exact sign of p(x) for rational x."""
    num, den = x.numerator, x.denominator
    acc = 0
    dp = len(p) - 1
    for i, c in enumerate(p):
        acc += c * num**i * den ** (dp - i)
    return (acc > 0) - (acc < 0)


def eval_fraction(p: list[int], x: Fraction) -> Fraction:
    acc = Fraction(0)
    for c in reversed(p):
        acc = acc * x + c
    return acc


def count_real_roots(w: list[int]) -> int:
    """Number of distinct real roots of a squarefree integer polynomial."""
    w = normalize(w)
    if degree(w) <= 0:
        return 0
    chain = sturm_chain(w)
    s_pos = [((q[-1] > 0) - (q[-1] < 0)) for q in chain]
    s_neg = [s * (-1 if (degree(q) % 2) else 1) for s, q in zip(s_pos, chain)]
    return _variations(s_neg) - _variations(s_pos)


def _variations_at(chain: list[list[int]], x: Fraction) -> int:
    return _variations([sign_at(q, x) for q in chain])


def root_bound(p: list[int]) -> Fraction:
    """Cauchy bound: all real roots lie in (-B, B)."""
    p = normalize(p)
    lead = abs(p[-1])
    m = max((abs(c) for c in p[:-1]), default=0)
    return 1 + Fraction(m, lead)


def isolate_real_roots(p: list[int]) -> list[tuple[Fraction, Fraction]]:
    """Certified isolating intervals for the distinct real roots of p.

    Intervals are disjoint, each open interval (lo, hi) contains exactly one
    root of the squarefree part and sign(w(lo)) != sign(w(hi)).  Numeric
    eigenvalue roots seed the brackets; the total count is certified by a
    Sturm count and a full Sturm bisection picks up anything the seeds miss.
    """
    w = squarefree_part(p)
    if degree(w) <= 0:
        return []
    total = count_real_roots(w)
    if total == 0:
        return []
    bound = root_bound(w)
    brackets = _seeded_brackets(w, total, bound)
    if brackets is not None:
        return brackets
    return _sturm_bisect(w, bound, total)


def _seeded_brackets(w, total, bound):
    scale = max(abs(c) for c in w)
    coeffs = [c / scale for c in reversed(w)]
    try:
        rts = np.roots(coeffs)
    except Exception:
        return None
    reals = sorted(float(r.real) for r in rts if abs(r.imag) <= 1e-7)
    if not reals:
        return None
    # merge numerically identical seeds
    merged: list[float] = []
    for r in reals:
        if not merged or r - merged[-1] > 1e-9 * max(1.0, abs(r)):
            merged.append(r)
    if len(merged) != total:
        return None
    out = []
    prev_hi = -bound
    for k, r in enumerate(merged):
        nxt = merged[k + 1] if k + 1 < len(merged) else float(bound)
        gap_lo = max(abs(r) * 1e-6, 1e-6)
        lo = Fraction(math.floor((r - gap_lo) * 2**40), 2**40)
        hi = Fraction(math.ceil((r + gap_lo) * 2**40), 2**40)
        lo = max(lo, prev_hi)
        if not (lo < hi <= Fraction(math.ceil(nxt * 2**40), 2**40)):
            return None
        if sign_at(w, lo) * sign_at(w, hi) >= 0:
            # widen once towards the midpoints before giving up
            lo2 = (lo + prev_hi) / 2 if k else -bound
            hi2 = (hi + Fraction(nxt).limit_denominator(2**40)) / 2 if k + 1 < len(merged) else bound
            lo, hi = lo2, hi2
            if sign_at(w, lo) * sign_at(w, hi) >= 0:
                return None
        out.append((lo, hi))
        prev_hi = hi
    # disjointness by construction; certify the count
    if len(out) != total:
        return None
    return out


def _sturm_bisect(w, bound, total):
    chain = sturm_chain(w)
    out = []

    def rec(lo, hi, v_lo, v_hi):
        n = v_lo - v_hi
        if n == 0:
            return
        if n == 1:
            # shrink until the endpoints bracket a sign change of w itself
            while sign_at(w, lo) == 0 or sign_at(w, hi) == 0 or sign_at(w, lo) * sign_at(w, hi) > 0:
                mid = (lo + hi) / 2
                v_mid = _variations_at(chain, mid)
                if v_lo - v_mid == 1 and sign_at(w, mid) != 0:
                    hi, v_hi = mid, v_mid
                elif v_mid - v_hi == 1 and sign_at(w, mid) != 0:
                    lo, v_lo = mid, v_mid
                else:
                    lo2, hi2 = mid, mid
                    # mid hit the root exactly; nudge outward
                    eps = (hi - lo) / 4
                    lo, hi = mid - eps, mid + eps
                    v_lo, v_hi = _variations_at(chain, lo), _variations_at(chain, hi)
            out.append((lo, hi))
            return
        mid = (lo + hi) / 2
        while sign_at(w, mid) == 0:
            mid = (lo + mid) / 2
        v_mid = _variations_at(chain, mid)
        rec(lo, mid, v_lo, v_mid)
        rec(mid, hi, v_mid, v_hi)

    v_lo = _variations_at(chain, -bound)
    v_hi = _variations_at(chain, bound)
    rec(-bound, bound, v_lo, v_hi)
    out.sort()
    assert len(out) == total
    return out


def refine_root(w: list[int], lo: Fraction, hi: Fraction, width: Fraction) -> tuple[Fraction, Fraction]:
    """Bisect a sign-change bracket of w down to the requested width."""
    s_lo = sign_at(w, lo)
    while hi - lo > width:
        mid = (lo + hi) / 2
        s_mid = sign_at(w, mid)
        if s_mid == 0:
            quarter = (hi - lo) / 4
            lo, hi = mid - quarter, mid + quarter
            s_lo = sign_at(w, lo)
            if s_lo == 0:
                return (mid, mid)
            continue
        if s_mid == s_lo:
            lo = mid
        else:
            hi = mid
    return (lo, hi)


def rational_root_in(p: list[int], lo: Fraction, hi: Fraction, max_den: int = 10**9) -> Fraction | None:
    """Search for an exact rational root of p inside [lo, hi].

    Uses continued-fraction rounding of the interval midpoint under a
    denominator bound, verifying candidates exactly.  Returns None when no
    candidate with denominator <= max_den is a root.
    """
    w = squarefree_part(p)
    cur_lo, cur_hi = lo, hi
    for _ in range(80):
        mid = (cur_lo + cur_hi) / 2
        cand = mid.limit_denominator(max_den)
        if cur_lo <= cand <= cur_hi and eval_fraction(p, cand) == 0:
            return cand
        if cur_hi - cur_lo < Fraction(1, max_den**2 * 4):
            break
        s_lo = sign_at(w, cur_lo)
        s_mid = sign_at(w, mid)
        if s_mid == 0:
            if eval_fraction(p, mid) == 0:
                return mid
            break
        if s_lo == 0 or s_lo * s_mid < 0:
            cur_hi = mid
        else:
            cur_lo = mid
    return None
