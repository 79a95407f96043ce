"""Exact real-root machinery for integer/rational univariate polynomials.

Polynomials are coefficient lists low-degree first, entries Fraction.
Used by the pencil analysis to decide whether families of binary forms
share a common real projective root (Sturm's theorem, exact arithmetic).
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd
from typing import List, Optional, Sequence, Tuple

Poly = List[Fraction]


def poly_trim(p: Sequence[Fraction]) -> Poly:
    out = list(p)
    while out and out[-1] == 0:
        out.pop()
    return out


def poly_degree(p: Sequence[Fraction]) -> int:
    q = poly_trim(p)
    return len(q) - 1 if q else -1


def poly_eval(p: Sequence[Fraction], x: Fraction) -> Fraction:
    acc = Fraction(0)
    for c in reversed(list(p)):
        acc = acc * x + c
    return acc


def poly_derivative(p: Sequence[Fraction]) -> Poly:
    return poly_trim([c * k for k, c in enumerate(p)][1:])


def poly_divmod(a: Sequence[Fraction], b: Sequence[Fraction]) -> Tuple[Poly, Poly]:
    a = poly_trim(a)
    b = poly_trim(b)
    if not b:
        raise ZeroDivisionError("poly division by zero")
    q = [Fraction(0)] * max(0, len(a) - len(b) + 1)
    r = list(a)
    while len(r) >= len(b) and poly_trim(r):
        shift = len(r) - len(b)
        coef = r[-1] / b[-1]
        q[shift] = coef
        for i, bc in enumerate(b):
            r[shift + i] -= coef * bc
        r = poly_trim(r)
        if not r:
            break
    return poly_trim(q), poly_trim(r)


def poly_gcd(a: Sequence[Fraction], b: Sequence[Fraction]) -> Poly:
    """Monic gcd over Q."""
    a = poly_trim(a)
    b = poly_trim(b)
    while b:
        _, r = poly_divmod(a, b)
        a, b = b, r
    if not a:
        return []
    lead = a[-1]
    return [c / lead for c in a]


def squarefree_part(p: Sequence[Fraction]) -> Poly:
    p = poly_trim(p)
    if poly_degree(p) < 1:
        return list(p)
    g = poly_gcd(p, poly_derivative(p))
    if poly_degree(g) < 1:
        return list(p)
    q, _ = poly_divmod(p, g)
    return q


def sturm_chain(p: Sequence[Fraction]) -> List[Poly]:
    p = squarefree_part(p)
    chain = [poly_trim(p), poly_derivative(p)]
    while poly_trim(chain[-1]):
        _, r = poly_divmod(chain[-2], chain[-1])
        if not r:
            break
        chain.append([-c for c in r])
    return [c for c in chain if poly_trim(c)]


def _sign_changes(values: Sequence[Fraction]) -> int:
    signs = [1 if v > 0 else -1 for v in values if v != 0]
    return sum(1 for a, b in zip(signs, signs[1:]) if a != b)


def _sign_at_inf(p: Sequence[Fraction], positive: bool) -> Fraction:
    p = poly_trim(p)
    if not p:
        return Fraction(0)
    lead = p[-1]
    if positive or (len(p) - 1) % 2 == 0:
        return lead
    return -lead


def count_real_roots(p: Sequence[Fraction], lo: Optional[Fraction] = None,
                     hi: Optional[Fraction] = None) -> int:
    """Number of distinct real roots in (lo, hi], whole line when unbounded."""
    p = poly_trim(p)
    if poly_degree(p) < 1:
        return 0
    chain = sturm_chain(p)
    at_lo = [_sign_at_inf(c, False) if lo is None else poly_eval(c, lo) for c in chain]
    at_hi = [_sign_at_inf(c, True) if hi is None else poly_eval(c, hi) for c in chain]
    return _sign_changes(at_lo) - _sign_changes(at_hi)


def has_real_root(p: Sequence[Fraction]) -> bool:
    deg = poly_degree(p)
    if deg < 1:
        return False
    if deg % 2 == 1:
        return True
    return count_real_roots(p) > 0


def rational_roots(p: Sequence[Fraction]) -> List[Fraction]:
    """All rational roots, found exactly via the rational root theorem."""
    p = poly_trim(p)
    if poly_degree(p) < 1:
        return []
    den = 1
    for c in p:
        den = den * c.denominator // gcd(den, c.denominator)
    ip = [int(c * den) for c in p]
    shift = 0
    while ip and ip[0] == 0:
        ip.pop(0)
        shift += 1
    roots = [Fraction(0)] if shift else []
    if not ip:
        return roots
    a0, an = abs(ip[0]), abs(ip[-1])
    num_divs = [d for d in range(1, a0 + 1) if a0 % d == 0]
    den_divs = [d for d in range(1, an + 1) if an % d == 0]
    seen = set(roots)
    for nu in num_divs:
        for de in den_divs:
            for cand in (Fraction(nu, de), Fraction(-nu, de)):
                if cand not in seen and poly_eval(p, cand) == 0:
                    seen.add(cand)
                    roots.append(cand)
    return sorted(roots)


def root_bound(p: Sequence[Fraction]) -> Fraction:
    """Cauchy bound: all real roots lie in [-M, M]."""
    p = poly_trim(p)
    if poly_degree(p) < 1:
        return Fraction(1)
    lead = abs(p[-1])
    return Fraction(1) + max(abs(c) for c in p[:-1]) / lead


def isolate_real_root(p: Sequence[Fraction], precision: Fraction = Fraction(1, 10**12)
                      ) -> Optional[Tuple[Fraction, Fraction]]:
    """Bisect to a small interval around one real root, exactly via Sturm counts."""
    p = squarefree_part(p)
    if not has_real_root(p):
        return None
    m = root_bound(p)
    lo, hi = -m, m
    if poly_eval(p, lo) == 0:
        return (lo, lo)
    while hi - lo > precision:
        mid = (lo + hi) / 2
        if poly_eval(p, mid) == 0:
            return (mid, mid)
        if count_real_roots(p, lo, mid) > 0:
            hi = mid
        else:
            lo = mid
    return (lo, hi)


# Binary forms g(s, t), homogeneous of degree m, stored as the coefficient
# list [c_0, ..., c_m] with c_j multiplying s^(m-j) t^j.


def binary_forms_common_real_root(forms: Sequence[Sequence[Fraction]]
                                  ) -> Tuple[bool, Optional[Tuple[Fraction, Fraction]]]:
    """Decide whether binary forms all vanish at some real projective point.

    Returns (exists, witness) where witness is an exact rational (s, t) when
    one exists, else None even if exists is True (irrational common root).
    """
    trimmed = [list(f) for f in forms if any(c != 0 for c in f)]
    if not trimmed:
        return True, (Fraction(1), Fraction(0))
    # Root at [0 : 1], i.e. s = 0: the pure-t coefficient of every form is 0.
    if all(f[-1] == 0 for f in trimmed):
        return True, (Fraction(0), Fraction(1))
    # Finite roots [1 : u]: common real roots of the dehomogenized polys.
    g: Poly = []
    for f in trimmed:
        g = poly_gcd(g, f) if g else poly_trim(f)
        if poly_degree(g) < 1:
            return False, None
    if not has_real_root(g):
        return False, None
    rats = rational_roots(g)
    if rats:
        return True, (Fraction(1), rats[0])
    return True, None
