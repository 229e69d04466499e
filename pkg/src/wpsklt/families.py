"""The four explicit families of weighted hypersurfaces built on Sylvester's sequence.

=============  ==========  ===========================  ===================
kind           dimensions  ``d - sum(a)``               extremal property
=============  ==========  ===========================  ===================
ample-min      n >= 2      +1                           small volume
fano-min       n >= 2      -1                           small volume
fano-bottom    even n >= 4 -1                           large bottom weight
kample-bottom  even n >= 4 +1                           large bottom weight
=============  ==========  ===========================  ===================

In every family ``d = (s_n - 1) x`` and ``a_i = d / s_i`` for ``i < n``; only
``a_n``, ``a_{n+1}``, ``x`` and the exponents of the two mixed monomials vary.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd

from .exactmath import display, exact_div, int_to_json, rat_to_json, sylvester, to_decimal
from .report import Report
from .wps import (
    HypersurfaceSpec,
    WeightSystem,
    bottom_weight,
    canonical_degree,
    enumerate_monomials,
    is_well_formed_space,
    volume_of_class,
    weighted_degree,
    well_formedness_report,
)

ENUMERATION_MAX_DIM = 4


class DimensionOutOfRange(ValueError):
    pass


class IntegralityFailure(ArithmeticError):
    pass


class FamilyKind(enum.Enum):
    AMPLE_MIN = "ample-min"
    FANO_MIN = "fano-min"
    FANO_BOTTOM = "fano-bottom"
    KAMPLE_BOTTOM = "kample-bottom"

    @property
    def canonical_twist(self) -> int:
        return 1 if self in (FamilyKind.AMPLE_MIN, FamilyKind.KAMPLE_BOTTOM) else -1

    @property
    def is_bottom(self) -> bool:
        return self in (FamilyKind.FANO_BOTTOM, FamilyKind.KAMPLE_BOTTOM)

    def valid_dimension(self, n: int) -> bool:
        if self.is_bottom:
            return n >= 4 and n % 2 == 0
        return n >= 2


# Printed values for low dimensions: exact where printed exactly, otherwise
# a decimal string carrying the printed precision.
PRINTED_VALUES = {
    (FamilyKind.AMPLE_MIN, 2): {"weights": (219, 146, 61, 11), "degree": 438,
                                "volume": Fraction(1, 48983)},
    (FamilyKind.AMPLE_MIN, 3): {"weights": (381045, 254030, 108870, 17713, 431), "degree": 762090,
                                "volume_approx": "9.5E-18"},
    (FamilyKind.AMPLE_MIN, 4): {"volume_approx": "8.0E-50"},
    (FamilyKind.FANO_MIN, 2): {"weights": (177, 118, 49, 11), "degree": 354,
                               "volume": Fraction(1, 31801)},
    (FamilyKind.FANO_MIN, 3): {"weights": (379239, 252826, 108354, 17629, 431), "degree": 758478,
                               "volume_approx": "9.6E-18"},
    (FamilyKind.FANO_MIN, 4): {"volume_approx": "8.0E-50"},
    (FamilyKind.FANO_BOTTOM, 4): {"bottom_weight": 1799223},
    (FamilyKind.KAMPLE_BOTTOM, 4): {"bottom_weight": 1793201},
}


@dataclass(frozen=True)
class FamilySpec:
    kind: FamilyKind
    n: int
    spec: HypersurfaceSpec
    x: int
    aux_exponents: dict = field(compare=False)
    expected: dict = field(compare=False)

    @property
    def weights(self) -> tuple[int, ...]:
        return self.spec.weights

    @property
    def degree(self) -> int:
        return self.spec.degree

    @property
    def a_n(self) -> int:
        return self.weights[self.n]

    @property
    def a_last(self) -> int:
        return self.weights[self.n + 1]

    @property
    def volume(self) -> Fraction:
        return volume_of_class(self.spec.ws, self.degree, 1)

    def to_json(self) -> dict:
        out = self.spec.to_json()
        out.update({
            "kind": self.kind.value,
            "n": self.n,
            "x": int_to_json(self.x),
            "b": int_to_json(self.aux_exponents["b"]),
            "c": int_to_json(self.aux_exponents["c"]) if "c" in self.aux_exponents else None,
            "expected": {k: (rat_to_json(v) if isinstance(v, Fraction) else int_to_json(v))
                         for k, v in sorted(self.expected.items())},
        })
        return out


def _div(num: int, den: int, what: str) -> int:
    try:
        return exact_div(num, den, what)
    except ArithmeticError as exc:
        raise IntegralityFailure(str(exc)) from None


def _unit(k: int, i: int, e: int = 1) -> list[int]:
    v = [0] * k
    v[i] = e
    return v


def _fermat_part(n: int) -> list[list[int]]:
    """``x_0^2, x_1^3, ..., x_{n-1}^{s_{n-1}}``."""
    return [_unit(n + 2, i, sylvester(i)) for i in range(n)]


def build_family(kind: FamilyKind | str, n: int) -> FamilySpec:
    kind = FamilyKind(kind)
    if not kind.valid_dimension(n):
        raise DimensionOutOfRange(f"{kind.value} is not defined in dimension {n}")
    s = sylvester(n)
    k = n + 2
    if kind in (FamilyKind.AMPLE_MIN, FamilyKind.FANO_MIN):
        if n % 2 == 0:
            a_last = _div(s * s - s + 2, 4, "a_{n+1}")
        else:
            a_last = _div(s * s - 3 * s + 4, 4, "a_{n+1}")
        sign = kind.canonical_twist
        a_n = (s - 2) * a_last + sign * (s - 1)
        x = sign + a_n + a_last
        if kind is FamilyKind.AMPLE_MIN:
            b_num = s * s - 2 * s + 7 if n % 2 == 0 else s * s - 4 * s + 11
        else:
            b_num = s * s - 2 * s - 1 if n % 2 == 0 else s * s - 4 * s + 3
        b = _div(b_num, 2, "b")
        mixed = [0] + [1] * (n - 1) + [1 if n % 2 == 0 else 2, b]
        vertex = _unit(k, n, s)
        vertex[n + 1] = 1
        monomials = _fermat_part(n) + [vertex, mixed]
        aux = {"b": b}
    else:
        if kind is FamilyKind.FANO_BOTTOM:
            a_last = _div(20 * s * s - 295 * s + 113, 36, "a_{n+1}")
            a_n = _div(20 * s * s - 55 * s + 17, 36, "a_n")
            x = -1 + a_n + a_last
            b = _div(4 * s - 31, 3, "b")
            c = _div(5 * s - 5, 3, "c")
            m1 = [0, 1] + [0] * (n - 2) + [b, 1]
            m2 = [0, 0] + [1] * (n - 2) + [12, c]
        else:
            a_last = _div(20 * s * s - 415 * s + 161, 36, "a_{n+1}")
            a_n = _div(20 * s * s - 175 * s + 65, 36, "a_n")
            x = 1 + a_n + a_last
            b = _div(4 * s - 19, 3, "b")
            c = _div(5 * s - 50, 3, "c")
            m1 = [0, 1] + [0] * (n - 2) + [13, b]
            m2 = [0, 0] + [1] * (n - 2) + [c, 7]
        monomials = _fermat_part(n) + [m1, m2]
        aux = {"b": b, "c": c}
    d = (s - 1) * x
    weights = tuple(_div(d, sylvester(i), f"a_{i}") for i in range(n)) + (a_n, a_last)
    for m in monomials:
        if weighted_degree(m, weights) != d:
            raise IntegralityFailure(f"monomial {m} does not have degree {d}")
    spec = HypersurfaceSpec(WeightSystem(weights), d, tuple(tuple(m) for m in monomials))
    expected = {"volume": volume_of_class(spec.ws, d, 1)}
    if kind.is_bottom:
        expected["bottom_weight"] = a_last
    if kind is FamilyKind.FANO_MIN:
        expected["sigma"] = Fraction((s - 2) * a_last, s - 1)
    return FamilySpec(kind, n, spec, x, aux, expected)


def closed_form_volume(fs: FamilySpec) -> Fraction:
    """``1 / ((s_n - 1)^(n-2) x^(n-1) a_n a_{n+1})``."""
    s, n = sylvester(fs.n), fs.n
    return 1 / (Fraction(s - 1) ** (n - 2) * Fraction(fs.x) ** (n - 1) * fs.a_n * fs.a_last)


def decimal_matches(value, printed: str) -> bool:
    """Whether ``value`` rounds to the printed mantissa at its precision."""
    mantissa = printed.split("E")[0].replace("-", "")
    digits = len(mantissa.replace(".", "").lstrip("0")) or 1
    return to_decimal(value, digits) == to_decimal(Fraction(printed.replace("E", "e")), digits)


def validate_family(fs: FamilySpec, enumerate_support: bool = True) -> Report:
    kind, n = fs.kind, fs.n
    spec = fs.spec
    w, d = spec.weights, spec.degree
    s = sylvester(n)
    rep = Report(f"{kind.value} n={n}: X_{d} in P{list(w)}")

    twist = canonical_degree(spec.ws, d)
    rep.add("canonical degree d - sum(a)", twist == kind.canonical_twist,
            f"{twist} (want {kind.canonical_twist:+d})")
    bad = [m for m in spec.support if weighted_degree(m, w) != d]
    rep.add("listed monomials have degree d", not bad, f"{len(spec.support)} monomials")
    rep.add("degree d = (s_n - 1) x", d == (s - 1) * fs.x)
    rep.add("a_i = d / s_i for i < n", all(w[i] * sylvester(i) == d for i in range(n)))

    rep.add("ambient space well-formed", is_well_formed_space(spec.ws))
    wf = well_formedness_report(spec)
    rep.add("hypersurface well-formed (sufficient criterion)", wf.certified,
            "" if wf.certified else f"uncovered strata {list(wf.uncovered)}")

    rep.add("gcd(a_{n+1}, x) = 1", gcd(fs.a_last, fs.x) == 1)
    rep.add("gcd(a_n, x) = 1", gcd(fs.a_n, fs.x) == 1)
    rep.add("gcd(a_{n+1}, a_n, s_n - 1) = 1", gcd(gcd(fs.a_last, fs.a_n), s - 1) == 1)

    vol = fs.volume
    if not kind.is_bottom:
        rep.add("volume d/prod(a) equals closed form", vol == closed_form_volume(fs), value=vol)
        rep.add("volume < 1/2^(2^n)", vol * 2 ** (2 ** n) < 1, value=vol)
    else:
        rep.add("bottom weight = a_{n+1}", bottom_weight(spec.ws) == fs.a_last, value=bottom_weight(spec.ws))
        rep.add("a_n, a_{n+1} odd", fs.a_n % 2 == 1 and fs.a_last % 2 == 1)
        if kind is FamilyKind.FANO_BOTTOM:
            rep.add("a_{n+1} = 0 mod 3 and a_n = -1 mod 3", fs.a_last % 3 == 0 and fs.a_n % 3 == 2)

    if enumerate_support:
        if n <= ENUMERATION_MAX_DIM:
            full = set(enumerate_monomials(spec.ws, d))
            listed = set(spec.support)
            if kind.is_bottom:
                rep.add("listed monomials lie in the full support", listed <= full,
                        f"full support has {len(full)} monomials")
            else:
                rep.add("listed monomials are all monomials of degree d", listed == full,
                        f"full support has {len(full)} monomials")
        else:
            rep.add("listed monomials are all monomials of degree d", None,
                    f"enumeration skipped above n={ENUMERATION_MAX_DIM}")

    printed = PRINTED_VALUES.get((kind, n), {})
    if "weights" in printed:
        rep.add("weights match printed example", tuple(w) == printed["weights"] and d == printed["degree"])
    if "volume" in printed:
        rep.add("volume matches printed value", vol == printed["volume"], value=vol)
    if "volume_approx" in printed:
        rep.add("volume matches printed decimal", decimal_matches(vol, printed["volume_approx"]),
                f"printed {printed['volume_approx']}, computed {display(vol)}")
    if "bottom_weight" in printed:
        rep.add("bottom weight matches printed value", fs.a_last == printed["bottom_weight"],
                value=fs.a_last)
    return rep
