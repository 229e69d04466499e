"""Newton polyhedron interior test as an exact rational linear program.

The Newton polyhedron of a finite exponent set ``I`` is ``conv(I) + R_{>=0}^k``.
A point ``p`` with positive entries is interior exactly when some convex
combination of ``I`` lies strictly below ``p`` in every coordinate, so we solve

    maximize t  subject to  sum_v lam_v v + t 1 <= p,  sum_v lam_v = 1,  lam, t >= 0

with a two-phase tableau simplex over :class:`~fractions.Fraction` using
Bland's rule.  The optimal ``lam`` and ``t`` form a certificate that
:func:`verify_certificate` re-checks without the solver.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, NamedTuple, Optional, Sequence

from .exactmath import rat_to_json

Vector = tuple


class NormalityNotCertified(ValueError):
    """Some pair of variables is used by every monomial; normality is unverified."""


class LPStatus(enum.Enum):
    OPTIMAL = "optimal"
    INFEASIBLE = "infeasible"
    UNBOUNDED = "unbounded"


class LPResult(NamedTuple):
    status: LPStatus
    x: Optional[list]
    value: Optional[Fraction]


def _pivot(rows, rhs, r, c):
    piv = rows[r][c]
    if piv != 1:
        rows[r] = [v / piv for v in rows[r]]
        rhs[r] /= piv
    prow = rows[r]
    nz = [j for j, v in enumerate(prow) if v]
    for i in range(len(rows)):
        if i == r:
            continue
        f = rows[i][c]
        if f:
            row = rows[i]
            for j in nz:
                row[j] -= f * prow[j]
            rhs[i] -= f * rhs[r]


def _run_simplex(rows, rhs, basis, cost, allowed):
    """Maximize ``cost . x`` from a feasible basis; Bland's rule throughout."""
    m = len(rows)
    while True:
        # reduced cost of column j: cost_j - sum_i cost_{basis_i} rows[i][j]
        cb = [cost[b] for b in basis]
        entering = None
        for j in allowed:
            if j in basis:
                continue
            red = cost[j] - sum(cb[i] * rows[i][j] for i in range(m) if cb[i] and rows[i][j])
            if red > 0:
                entering = j
                break
        if entering is None:
            return LPStatus.OPTIMAL
        best = None
        for i in range(m):
            a = rows[i][entering]
            if a > 0:
                ratio = rhs[i] / a
                if best is None or ratio < best[0] or (ratio == best[0] and basis[i] < basis[best[1]]):
                    best = (ratio, i)
        if best is None:
            return LPStatus.UNBOUNDED
        r = best[1]
        _pivot(rows, rhs, r, entering)
        basis[r] = entering


def linprog_max(c, A_ub=(), b_ub=(), A_eq=(), b_eq=()) -> LPResult:
    """Exact ``max c.x`` over ``A_ub x <= b_ub``, ``A_eq x = b_eq``, ``x >= 0``."""
    n = len(c)
    cons = [(list(map(Fraction, a)), Fraction(b), True) for a, b in zip(A_ub, b_ub)]
    cons += [(list(map(Fraction, a)), Fraction(b), False) for a, b in zip(A_eq, b_eq)]
    n_slack = sum(1 for _, _, ub in cons if ub)
    rows, rhs, basis = [], [], []
    art_rows = []
    slack_idx = n
    for a, b, ub in cons:
        row = a + [Fraction(0)] * n_slack
        if ub:
            row[slack_idx] = Fraction(1)
        if b < 0:
            row = [-v for v in row]
            b = -b
        if ub and row[slack_idx] == 1:
            basis.append(slack_idx)
        else:
            basis.append(None)
            art_rows.append(len(rows))
        if ub:
            slack_idx += 1
        rows.append(row)
        rhs.append(b)
    total = n + n_slack
    n_art = len(art_rows)
    for i, row in enumerate(rows):
        row.extend([Fraction(0)] * n_art)
    for k, i in enumerate(art_rows):
        rows[i][total + k] = Fraction(1)
        basis[i] = total + k
    width = total + n_art

    if n_art:
        cost1 = [Fraction(0)] * total + [Fraction(-1)] * n_art
        _run_simplex(rows, rhs, basis, cost1, range(width))
        if any(rhs[i] for i, b in enumerate(basis) if b >= total):
            return LPResult(LPStatus.INFEASIBLE, None, None)
        # drive zero-level artificials out of the basis, dropping redundant rows
        i = 0
        while i < len(rows):
            if basis[i] >= total:
                col = next((j for j in range(total) if rows[i][j]), None)
                if col is None:
                    del rows[i], rhs[i], basis[i]
                    continue
                _pivot(rows, rhs, i, col)
                basis[i] = col
            i += 1
        for row in rows:
            del row[total:]

    cost = [Fraction(v) for v in c] + [Fraction(0)] * n_slack
    status = _run_simplex(rows, rhs, basis, cost, range(total))
    if status is LPStatus.UNBOUNDED:
        return LPResult(status, None, None)
    x = [Fraction(0)] * total
    for i, b in enumerate(basis):
        x[b] = rhs[i]
    x = x[:n]
    return LPResult(LPStatus.OPTIMAL, x, sum(Fraction(ci) * xi for ci, xi in zip(c, x)))


@dataclass(frozen=True)
class ExponentSet:
    dim: int
    points: tuple[Vector, ...]

    def __post_init__(self):
        pts = tuple(sorted({tuple(int(e) for e in p) for p in self.points}))
        if not pts:
            raise ValueError("exponent set must be non-empty")
        for p in pts:
            if len(p) != self.dim or any(e < 0 for e in p):
                raise ValueError(f"bad exponent vector {p} for dimension {self.dim}")
        object.__setattr__(self, "points", pts)

    @classmethod
    def of(cls, points: Iterable[Sequence[int]]) -> "ExponentSet":
        points = [tuple(p) for p in points]
        if not points:
            raise ValueError("exponent set must be non-empty")
        return cls(len(points[0]), tuple(points))

    def to_json(self) -> dict:
        return {"dim": self.dim, "points": [list(p) for p in self.points]}

    @classmethod
    def from_json(cls, obj: dict) -> "ExponentSet":
        return cls(int(obj["dim"]), tuple(tuple(int(e) for e in p) for p in obj["points"]))


@dataclass(frozen=True)
class InteriorCertificate:
    target: tuple[Fraction, ...]
    coefficients: tuple[tuple[Vector, Fraction], ...]
    slack: Fraction

    def combination(self) -> tuple[Fraction, ...]:
        k = len(self.target)
        return tuple(sum((lam * v[i] for v, lam in self.coefficients), Fraction(0)) for i in range(k))

    def to_json(self) -> dict:
        return {
            "target": [rat_to_json(x) for x in self.target],
            "coefficients": [{"point": list(v), "lambda": rat_to_json(lam)} for v, lam in self.coefficients],
            "slack": rat_to_json(self.slack),
            "combination": [rat_to_json(x) for x in self.combination()],
        }


def _points_of(I) -> tuple[Vector, ...]:
    if isinstance(I, ExponentSet):
        return I.points
    return tuple(tuple(p) for p in I)


def minimal_points(points: Iterable[Sequence]) -> tuple[Vector, ...]:
    """Drop every point that dominates another one componentwise.

    The Newton polyhedron only depends on the minimal points.
    """
    pts = sorted({tuple(p) for p in points}, key=lambda p: (sum(p), p))
    kept: list[Vector] = []
    for p in pts:
        if not any(all(q[i] <= p[i] for i in range(len(p))) for q in kept):
            kept.append(p)
    return tuple(sorted(kept))


def interior_point_test(I, p: Optional[Sequence] = None, prune: bool = True) -> Optional[InteriorCertificate]:
    """Certificate that ``p`` (default all ones) is interior to the Newton polyhedron, else ``None``."""
    pts = _points_of(I)
    k = len(pts[0])
    target = tuple(Fraction(1) for _ in range(k)) if p is None else tuple(Fraction(x) for x in p)
    if len(target) != k or any(x <= 0 for x in target):
        raise ValueError("target must have positive entries and match the dimension")
    if prune:
        pts = minimal_points(pts)
    m = len(pts)
    # variables: lam_0..lam_{m-1}, t
    A_ub = [[Fraction(v[i]) for v in pts] + [Fraction(1)] for i in range(k)]
    A_eq = [[Fraction(1)] * m + [Fraction(0)]]
    res = linprog_max([0] * m + [1], A_ub, target, A_eq, [1])
    if res.status is not LPStatus.OPTIMAL or res.value <= 0:
        return None
    lam = res.x[:m]
    coeffs = tuple((v, l) for v, l in zip(pts, lam) if l)
    cert = InteriorCertificate(target, coeffs, res.value)
    if not verify_certificate(pts, cert):
        raise AssertionError("simplex produced an invalid certificate")
    return cert


def verify_certificate(I, cert: InteriorCertificate) -> bool:
    """Re-check a certificate by exact evaluation, independently of the solver."""
    pts = set(_points_of(I))
    if cert.slack <= 0:
        return False
    if any(v not in pts or lam < 0 for v, lam in cert.coefficients):
        return False
    if sum((lam for _, lam in cert.coefficients), Fraction(0)) != 1:
        return False
    combo = cert.combination()
    return all(c <= t - cert.slack for c, t in zip(combo, cert.target))


def certificate_from_witness(I, weights: dict, p: Optional[Sequence] = None) -> Optional[InteriorCertificate]:
    """Build a certificate from given convex coefficients, or ``None`` if they do not witness interiority."""
    pts = _points_of(I)
    k = len(pts[0])
    target = tuple(Fraction(1) for _ in range(k)) if p is None else tuple(Fraction(x) for x in p)
    coeffs = tuple(sorted((tuple(v), Fraction(l)) for v, l in weights.items() if l))
    probe = InteriorCertificate(target, coeffs, Fraction(1))
    combo = probe.combination()
    slack = min(t - c for c, t in zip(combo, target))
    cert = InteriorCertificate(target, coeffs, slack)
    return cert if verify_certificate(pts, cert) else None


def normality_pairs_check(I) -> bool:
    """Every pair of variables is avoided by some monomial of ``I``."""
    pts = _points_of(I)
    k = len(pts[0])
    if k < 2:
        raise ValueError("normality check needs at least two variables")
    return all(any(v[i] == 0 and v[j] == 0 for v in pts)
               for i in range(k) for j in range(i + 1, k))


class CanonicalVerdict(enum.Enum):
    CERTIFIED_CANONICAL = "certified-canonical"
    NOT_CERTIFIED = "not-certified"
    CERTIFIED_NOT_CANONICAL = "certified-not-canonical"


class NewtonResult(NamedTuple):
    verdict: CanonicalVerdict
    certificate: Optional[InteriorCertificate]


def canonical_newton(I, assume_normal: bool = False) -> NewtonResult:
    """Canonical-singularity verdict for the general member spanned by ``I``.

    Interior ``(1, ..., 1)`` certifies canonical singularities.  The converse
    only holds without degree-one monomials, hence the three outcomes.

    The criterion presupposes a normal hypersurface.  Unless the caller vouches
    for normality with ``assume_normal``, the pair condition must hold; with
    two variables it never does, since it would need a constant monomial.
    """
    pts = _points_of(I)
    if not assume_normal and not normality_pairs_check(pts):
        raise NormalityNotCertified("some pair of variables appears in every monomial")
    cert = interior_point_test(pts)
    if cert is not None:
        return NewtonResult(CanonicalVerdict.CERTIFIED_CANONICAL, cert)
    if any(sum(v) == 1 for v in pts):
        return NewtonResult(CanonicalVerdict.NOT_CERTIFIED, None)
    return NewtonResult(CanonicalVerdict.CERTIFIED_NOT_CANONICAL, None)
