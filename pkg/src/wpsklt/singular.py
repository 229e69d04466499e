"""klt certification for the general member of a monomial linear system.

Off the base locus the general member is quasi-smooth (Bertini on the
punctured affine cone), so only base-locus points need attention.  A
coordinate point ``P_i`` is handled either by a monomial ``x_i^k`` or
``x_i^k x_j`` (quasi-smooth there) or by the Newton polyhedron test in the
orbifold chart ``x_i = 1``, whose quotient by ``mu_{a_i}`` stays klt.  A
positive-dimensional base stratum is covered by the charts of its vertices,
each of which must then pass the Newton test.

This certifies a sufficient condition; "not certified" never means "not klt".
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from typing import Optional

from .exactmath import int_to_json
from .polyhedra import (
    CanonicalVerdict,
    ExponentSet,
    InteriorCertificate,
    canonical_newton,
    minimal_points,
    verify_certificate,
)
from .wps import HypersurfaceSpec, monomial_variables, well_formedness_report


class PositiveDimensionalBaseLocus(ValueError):
    pass


class HypersurfaceNotWellFormed(ValueError):
    pass


def base_locus_strata(spec: HypersurfaceSpec) -> list[tuple[int, ...]]:
    """Maximal coordinate subsets ``J`` on whose stratum every member vanishes.

    ``J`` qualifies when no support monomial uses only variables from ``J``.
    """
    if not spec.support:
        raise ValueError("empty support")
    k = len(spec.weights)
    supports = [monomial_variables(m) for m in spec.support]
    bad = []
    for size in range(k - 1, 0, -1):
        for J in combinations(range(k), size):
            Js = frozenset(J)
            if any(Js <= b for b in bad):
                continue
            if not any(s <= Js for s in supports):
                bad.append(Js)
    return sorted((tuple(sorted(J)) for J in bad), key=lambda J: (len(J), J))


def quasi_smooth_at_vertex(spec: HypersurfaceSpec, i: int) -> bool:
    """Support contains ``x_i^k`` or ``x_i^k x_j`` (``j != i``, ``k >= 1``)."""
    for m in spec.support:
        if m[i] == 0:
            continue
        others = [(j, e) for j, e in enumerate(m) if j != i and e]
        if not others or (len(others) == 1 and others[0][1] == 1):
            return True
    return False


def localize_chart(spec: HypersurfaceSpec, i: int) -> tuple[ExponentSet, int]:
    """Exponents in the chart ``x_i = 1`` and the order of the chart's cyclic group."""
    pts = {m[:i] + m[i + 1:] for m in spec.support}
    return ExponentSet(len(spec.weights) - 1, tuple(pts)), spec.weights[i]


class VertexStatus(enum.Enum):
    QUASI_SMOOTH = "quasi-smooth"
    NEWTON_CERTIFIED = "newton-certified"
    FAILED = "failed"


@dataclass(frozen=True)
class VertexVerdict:
    vertex: int
    status: VertexStatus
    group_order: Optional[int] = None
    certificate: Optional[InteriorCertificate] = None
    reason: str = ""

    @property
    def ok(self) -> bool:
        return self.status is not VertexStatus.FAILED

    def to_json(self) -> dict:
        out = {"vertex": self.vertex, "status": self.status.value}
        if self.group_order is not None:
            out["group_order"] = int_to_json(self.group_order)
        if self.certificate is not None:
            out["certificate"] = self.certificate.to_json()
        if self.reason:
            out["reason"] = self.reason
        return out


@dataclass(frozen=True)
class KltCertificate:
    weights: tuple[int, ...]
    degree: int
    base_locus: tuple[tuple[int, ...], ...]
    verdicts: dict = field(compare=False)
    overall: bool = False

    @property
    def all_quasi_smooth(self) -> bool:
        return all(v.status is VertexStatus.QUASI_SMOOTH for v in self.verdicts.values())

    def to_json(self) -> dict:
        return {
            "weights": [int_to_json(a) for a in self.weights],
            "degree": int_to_json(self.degree),
            "base_locus": [list(J) for J in self.base_locus],
            "verdicts": [self.verdicts[i].to_json() for i in sorted(self.verdicts)],
            "overall": self.overall,
        }

    def summary(self) -> str:
        parts = [f"P{i}:{self.verdicts[i].status.value}" for i in sorted(self.verdicts)]
        return ("klt certified" if self.overall else "not certified") + (
            " (" + ", ".join(parts) + ")" if parts else " (empty base locus)")


def _newton_verdict(spec: HypersurfaceSpec, i: int) -> VertexVerdict:
    chart, order = localize_chart(spec, i)
    # a dropped point dominates a kept one, so the pair condition is unchanged
    pruned = ExponentSet(chart.dim, minimal_points(chart.points))
    result = canonical_newton(pruned)
    if result.verdict is CanonicalVerdict.CERTIFIED_CANONICAL:
        return VertexVerdict(i, VertexStatus.NEWTON_CERTIFIED, order, result.certificate)
    return VertexVerdict(i, VertexStatus.FAILED, order, None, result.verdict.value)


def klt_certify(spec: HypersurfaceSpec, allow_positive_dimensional: bool = True) -> KltCertificate:
    """Certify that the general member with this support is klt.

    With ``allow_positive_dimensional=False`` a base stratum of positive
    dimension raises :class:`PositiveDimensionalBaseLocus` instead of being
    covered by vertex charts.
    """
    if not well_formedness_report(spec).certified:
        raise HypersurfaceNotWellFormed(f"X_{spec.degree} in P{list(spec.weights)} is not certified well-formed")
    strata = base_locus_strata(spec)
    verdicts: dict[int, VertexVerdict] = {}
    for J in strata:
        if len(J) == 1:
            i = J[0]
            if quasi_smooth_at_vertex(spec, i):
                verdicts[i] = VertexVerdict(i, VertexStatus.QUASI_SMOOTH)
            else:
                verdicts[i] = _newton_verdict(spec, i)
            continue
        if not allow_positive_dimensional:
            raise PositiveDimensionalBaseLocus(f"base locus contains the stratum {J}")
        for i in J:
            if i not in verdicts:
                verdicts[i] = _newton_verdict(spec, i)
    overall = all(v.ok for v in verdicts.values())
    return KltCertificate(spec.weights, spec.degree, tuple(strata), verdicts, overall)


def verify_klt_certificate(spec: HypersurfaceSpec, cert: KltCertificate) -> bool:
    """Recompute the base locus and re-check every Newton certificate."""
    if tuple(base_locus_strata(spec)) != cert.base_locus:
        return False
    covered = {i for J in cert.base_locus for i in J}
    if set(cert.verdicts) != covered:
        return False
    for i, v in cert.verdicts.items():
        if v.status is VertexStatus.QUASI_SMOOTH:
            if not quasi_smooth_at_vertex(spec, i) or any(len(J) > 1 and i in J for J in cert.base_locus):
                return False
        elif v.status is VertexStatus.NEWTON_CERTIFIED:
            chart, order = localize_chart(spec, i)
            if order != v.group_order or not verify_certificate(chart, v.certificate):
                return False
    return cert.overall == all(v.ok for v in cert.verdicts.values())


def fermat_lct(exponents) -> Fraction:
    """lct of ``x_1^{d_1} + ... + x_k^{d_k} = 0``: ``min(1, sum 1/d_i)``."""
    exponents = [int(e) for e in exponents]
    if not exponents or any(e < 2 for e in exponents):
        raise ValueError("exponents must all be at least 2")
    return min(Fraction(1), sum(Fraction(1, e) for e in exponents))
