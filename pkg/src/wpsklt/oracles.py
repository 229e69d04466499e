"""Slow, independent reference implementations used to cross-check the fast ones.

Nothing here shares code with :mod:`wpsklt.wps` or :mod:`wpsklt.polyhedra`.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import product
from typing import Optional


def brute_force_monomials(weights, d: int) -> tuple[tuple[int, ...], ...]:
    """Every exponent vector of weighted degree ``d``, by exhaustive product."""
    ranges = [range(d // a + 1) for a in weights]
    return tuple(sorted(e for e in product(*ranges) if sum(x * a for x, a in zip(e, weights)) == d))


def _fm_eliminate(rows, var):
    """Fourier-Motzkin: drop variable ``var`` from rows ``(coeffs, rhs)`` meaning ``coeffs . x <= rhs``."""
    pos, neg, keep = [], [], []
    for a, b in rows:
        (pos if a[var] > 0 else neg if a[var] < 0 else keep).append((a, b))
    out = list(keep)
    for ap, bp in pos:
        for an, bn in neg:
            fp, fn = -an[var], ap[var]
            a = tuple(fp * x + fn * y for x, y in zip(ap, an))
            out.append((a, fp * bp + fn * bn))
    return _dedupe(out)


def _dedupe(rows):
    """Normalize each row by its largest coefficient and keep the tightest copy."""
    best = {}
    for a, b in rows:
        scale = max(abs(x) for x in a) or 1
        a, b = tuple(x / scale for x in a), b / scale
        if a not in best or b < best[a]:
            best[a] = b
    return list(best.items())


def fm_max_slack(points, target=None) -> Optional[Fraction]:
    """Largest ``t`` with ``sum lam_v v + t 1 <= target`` for a convex combination, or ``None``.

    Solved by substituting the last coefficient away and projecting out the
    rest with Fourier-Motzkin elimination; ``t`` is left as the only variable.
    """
    pts = [tuple(Fraction(x) for x in p) for p in points]
    m, k = len(pts), len(pts[0])
    target = [Fraction(1)] * k if target is None else [Fraction(x) for x in target]
    last = pts[-1]
    # variables: lam_0..lam_{m-2}, t ; lam_{m-1} = 1 - sum(others)
    rows = []
    for i in range(k):
        coeffs = tuple(pts[j][i] - last[i] for j in range(m - 1)) + (Fraction(1),)
        rows.append((coeffs, target[i] - last[i]))
    nv = m
    for j in range(m):  # every lam_j >= 0, including the substituted one
        if j < m - 1:
            rows.append((tuple(Fraction(-1) if q == j else Fraction(0) for q in range(nv)), Fraction(0)))
        else:
            rows.append((tuple(Fraction(1) if q < m - 1 else Fraction(0) for q in range(nv)), Fraction(1)))
    rows.append((tuple(Fraction(0) for _ in range(m - 1)) + (Fraction(-1),), Fraction(0)))
    for var in range(m - 1):
        rows = _fm_eliminate(rows, var)
    upper, lower = None, Fraction(0)
    for a, b in rows:
        c = a[-1]
        if c > 0:
            upper = b / c if upper is None else min(upper, b / c)
        elif c < 0:
            lower = max(lower, b / c)
        elif b < 0:
            return None
    if upper is None or upper < lower:
        return None
    return upper


def fm_interior(points, target=None) -> bool:
    t = fm_max_slack(points, target)
    return t is not None and t > 0
