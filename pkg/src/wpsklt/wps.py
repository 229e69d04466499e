"""Weight systems, monomials and weighted hypersurfaces."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from math import gcd, prod
from typing import Iterable, Optional, Sequence

from .exactmath import int_from_json, int_to_json

DEFAULT_CAP = 10 ** 6

Monomial = tuple[int, ...]


class CapExceeded(RuntimeError):
    """More monomials than the configured cap; the search is misconfigured."""


@dataclass(frozen=True)
class WeightSystem:
    weights: tuple[int, ...]

    def __post_init__(self):
        w = tuple(int(a) for a in self.weights)
        if len(w) < 2:
            raise ValueError("a weight system needs at least two weights")
        if any(a < 1 for a in w):
            raise ValueError(f"weights must be positive: {w}")
        object.__setattr__(self, "weights", w)

    def __len__(self):
        return len(self.weights)

    def __iter__(self):
        return iter(self.weights)

    def __getitem__(self, i):
        return self.weights[i]

    @property
    def dim(self) -> int:
        """Dimension of a hypersurface in this ambient space."""
        return len(self.weights) - 2


def as_weights(ws) -> WeightSystem:
    return ws if isinstance(ws, WeightSystem) else WeightSystem(tuple(ws))


def weighted_degree(m: Sequence[int], ws) -> int:
    return sum(e * a for e, a in zip(m, as_weights(ws)))


@dataclass(frozen=True)
class HypersurfaceSpec:
    ws: WeightSystem
    degree: int
    support: tuple[Monomial, ...]
    coefficients: Optional[dict] = field(default=None, compare=False)

    def __post_init__(self):
        ws = as_weights(self.ws)
        object.__setattr__(self, "ws", ws)
        support = tuple(sorted({tuple(int(e) for e in m) for m in self.support}))
        for m in support:
            if len(m) != len(ws):
                raise ValueError(f"monomial {m} has wrong length for {ws.weights}")
            if any(e < 0 for e in m):
                raise ValueError(f"negative exponent in {m}")
            if weighted_degree(m, ws) != self.degree:
                raise ValueError(f"monomial {m} has degree {weighted_degree(m, ws)}, not {self.degree}")
        object.__setattr__(self, "support", support)

    @property
    def weights(self) -> tuple[int, ...]:
        return self.ws.weights

    @property
    def dim(self) -> int:
        return self.ws.dim

    def to_json(self) -> dict:
        return {
            "weights": [int_to_json(a) for a in self.weights],
            "degree": int_to_json(self.degree),
            "support": [list(m) for m in self.support],
        }

    @classmethod
    def from_json(cls, obj: dict) -> "HypersurfaceSpec":
        ws = WeightSystem(tuple(int_from_json(a) for a in obj["weights"]))
        degree = int_from_json(obj["degree"])
        support = obj.get("support")
        if support is None:
            support = enumerate_monomials(ws, degree)
        return cls(ws, degree, tuple(tuple(int_from_json(e) for e in m) for m in support))


def general_hypersurface(ws, d: int, cap: int = DEFAULT_CAP) -> HypersurfaceSpec:
    """Hypersurface whose support is every monomial of degree ``d``."""
    ws = as_weights(ws)
    return HypersurfaceSpec(ws, d, enumerate_monomials(ws, d, cap))


def is_well_formed_space(ws) -> bool:
    w = as_weights(ws).weights
    for j in range(len(w)):
        g = 0
        for i, a in enumerate(w):
            if i != j:
                g = gcd(g, a)
        if g != 1:
            return False
    return True


def _two_variable_solutions(a: int, b: int, r: int):
    """Non-negative ``(e, f)`` with ``a e + b f = r``, ``e`` ascending."""
    g = gcd(a, b)
    if r % g:
        return 0, 0, 0
    a1, b1, r1 = a // g, b // g, r // g
    e0 = (r1 * pow(a1, -1, b1)) % b1 if b1 > 1 else 0
    emax = r // a
    if e0 > emax:
        return 0, 0, 0
    count = (emax - e0) // b1 + 1
    return count, e0, b1


def enumerate_monomials(ws, d: int, cap: int = DEFAULT_CAP) -> tuple[Monomial, ...]:
    """All exponent vectors ``e >= 0`` with ``sum e_j a_j = d``, sorted.

    Depth-first over the variables in order.  A branch is dropped as soon as
    the remaining degree is not divisible by the gcd of the remaining weights,
    and the last two variables are solved directly as a linear Diophantine
    equation, so long exponent ranges on small final weights cost nothing.
    """
    w = tuple(int(a) for a in (ws.weights if isinstance(ws, WeightSystem) else ws))
    if any(a < 1 for a in w):
        raise ValueError(f"weights must be positive: {w}")
    k = len(w)
    if d < 0:
        return ()
    if k == 0:
        return ((),) if d == 0 else ()
    suffix_gcd = [0] * (k + 1)
    for j in range(k - 1, -1, -1):
        suffix_gcd[j] = gcd(suffix_gcd[j + 1], w[j])
    out: list[Monomial] = []
    prefix = [0] * k

    def emit_tail(j: int, r: int):
        if j == k - 1:
            if r % w[j] == 0:
                if len(out) >= cap:
                    raise CapExceeded(f"more than {cap} monomials of degree {d}")
                prefix[j] = r // w[j]
                out.append(tuple(prefix))
            return
        a, b = w[j], w[j + 1]
        count, e0, step = _two_variable_solutions(a, b, r)
        if not count:
            return
        if len(out) + count > cap:
            raise CapExceeded(f"more than {cap} monomials of degree {d}")
        for e in range(e0, e0 + count * step, step):
            prefix[j] = e
            prefix[j + 1] = (r - a * e) // b
            out.append(tuple(prefix))

    def rec(j: int, r: int):
        if j >= k - 2:
            emit_tail(j, r)
            return
        a = w[j]
        g = suffix_gcd[j + 1]
        for e in range(r // a + 1):
            rest = r - e * a
            if rest % g:
                continue
            prefix[j] = e
            rec(j + 1, rest)
        prefix[j] = 0

    rec(0, d)
    out.sort()
    return tuple(out)


def is_representable(m: int, ws) -> bool:
    """Whether ``m`` is a non-negative integer combination of the weights."""
    w = tuple(as_weights(ws).weights)
    suffix_gcd = [0] * (len(w) + 1)
    for j in range(len(w) - 1, -1, -1):
        suffix_gcd[j] = gcd(suffix_gcd[j + 1], w[j])

    def rec(j, r):
        if r == 0:
            return True
        if j == len(w) or r % suffix_gcd[j]:
            return False
        if j == len(w) - 2:
            return _two_variable_solutions(w[j], w[j + 1], r)[0] > 0
        return any(rec(j + 1, r - e * w[j]) for e in range(r // w[j] + 1))

    return m >= 0 and rec(0, m)


def canonical_degree(ws, d: int) -> int:
    """``d - sum(a_j)``: the twist ``m`` with ``K_X = O_X(m)``."""
    return d - sum(as_weights(ws).weights)


def volume_of_class(ws, d: int, m: int = 1) -> Fraction:
    """Volume of ``O_X(m)`` on a degree-``d`` hypersurface: ``m^n d / prod(a)``."""
    ws = as_weights(ws)
    n = ws.dim
    if n < 1:
        raise ValueError("volume needs a hypersurface of dimension at least 1")
    return Fraction(m ** n * d, prod(ws.weights))


def bottom_weight(ws) -> int:
    """Smallest positive degree carrying a monomial.

    Every positive combination of the weights is at least ``min(ws)`` and
    ``min(ws)`` itself is a single variable, so the semigroup scan stops at
    the first step.  :func:`bottom_weight_scan` performs the scan explicitly.
    """
    return min(as_weights(ws).weights)


def bottom_weight_scan(ws, limit: Optional[int] = None) -> Optional[int]:
    ws = as_weights(ws)
    limit = min(ws.weights) if limit is None else limit
    for m in range(1, limit + 1):
        if is_representable(m, ws):
            return m
    return None


def monomial_variables(m: Sequence[int]) -> frozenset[int]:
    return frozenset(i for i, e in enumerate(m) if e)


@dataclass(frozen=True)
class WellFormednessReport:
    ambient_well_formed: bool
    certified: bool
    # singular coordinate strata with no support monomial living on them
    uncovered: tuple[tuple[int, ...], ...]
    avoids_all_coordinate_subspaces: bool

    def to_json(self) -> dict:
        return {
            "ambient_well_formed": self.ambient_well_formed,
            "certified": self.certified,
            "uncovered": [list(j) for j in self.uncovered],
            "avoids_all_coordinate_subspaces": self.avoids_all_coordinate_subspaces,
        }


def _has_monomial_within(supports: Iterable[frozenset[int]], J: frozenset[int]) -> bool:
    return any(s <= J for s in supports)


def well_formedness_report(spec: HypersurfaceSpec) -> WellFormednessReport:
    """Sufficient check that ``X`` meets the singular locus in codimension 2.

    For every coordinate subset ``J`` with ``|J| >= 2`` whose weights share a
    factor, a support monomial must use only variables in ``J``; then the
    general member does not contain that singular coordinate subspace.
    """
    w = spec.weights
    k = len(w)
    supports = [monomial_variables(m) for m in spec.support]
    ambient = is_well_formed_space(spec.ws)
    uncovered = []
    contains_positive_dim = False
    for size in range(2, k + 1):
        for J in combinations(range(k), size):
            Js = frozenset(J)
            covered = _has_monomial_within(supports, Js)
            if not covered:
                contains_positive_dim = True
            g = 0
            for i in J:
                g = gcd(g, w[i])
            if g > 1 and not covered:
                uncovered.append(J)
    certified = ambient and bool(spec.support) and not uncovered
    return WellFormednessReport(ambient, certified, tuple(uncovered), not contains_positive_dim)


def hypersurface_well_formed(spec: HypersurfaceSpec) -> bool:
    return well_formedness_report(spec).certified
