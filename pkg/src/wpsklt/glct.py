"""Exceptionality ledgers for the minimal-volume Fano family.

The global log canonical threshold of the ``fano-min`` n-fold equals
``sigma_n = (s_n - 2) a_{n+1} / (s_n - 1)``.  The upper bound comes from the
hyperplane section ``x_{n+1} = 0``, whose worst point is a Fermat-type
singularity.  The lower bound is a chain of multiplicity estimates whose
numeric side-conditions are exactly the ledger lines checked here:

even n
  E1  witness lct of the Fermat singularity is ``(s_n - 2)/(s_n - 1)``
  E2  on the smooth locus, ``sigma_n D`` has multiplicity below 1
  E3  at ``[0:...:0:1]`` the weighted-multiplicity bound ``e_n`` reaches ``sigma_n``
  E4  ``lambda_n`` makes the ``r <= 0`` inequality an equality
odd n
  O1, O2  as E1, E2
  O3  ``r <= 0`` on the weighted tangent cone: ``g_n > sigma_n``
  O4  multiplicity of ``sigma_n F`` off the cone's singular point is below 1
  O5  the inductive lct bound at that point: ``f_n > sigma_n``

The quantified divisor arguments themselves are mathematics, not
computation; the ledger only evaluates their finite arithmetic content.
Dimensions above ``MAX_DIM`` are refused rather than approximated.

Whether the ``fano-bottom`` family maximizes the glct among Fano
n-folds is an open question; nothing here computes the glct of the
bottom-weight families.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import prod

from .exactmath import display, rat_to_json, sylvester
from .singular import fermat_lct

MAX_DIM = 12


class RecursionCheckFailed(ArithmeticError):
    pass


class NonpositiveB(ValueError):
    pass


def _check_dim(n: int, low: int):
    if n < low:
        raise ValueError(f"dimension must be at least {low}")
    if n > MAX_DIM:
        raise ValueError(f"dimension {n} exceeds the Sylvester table depth")


def _lambda_value(n: int) -> Fraction:
    if n == 1:
        return Fraction(1)
    s = sylvester(n)
    return Fraction(2) / (Fraction(s) ** (n - 1) * (s + 1) ** 2 * Fraction(s - 1) ** (n - 3))


@dataclass(frozen=True)
class LambdaReport:
    n: int
    value: Fraction
    recursion_ratio: Fraction | None  # lambda_n / (2 lambda_{n-1} / (s_n^(n-1) (s_n + 1)))
    u: Fraction | None


def lambda_report(n: int) -> LambdaReport:
    """``lambda_n`` with its two side-conditions; raises if either fails."""
    _check_dim(n, 1)
    lam = _lambda_value(n)
    if n == 1:
        return LambdaReport(1, lam, None, None)
    s = sylvester(n)
    previous_bound = 2 * _lambda_value(n - 1) / (Fraction(s) ** (n - 1) * (s + 1))
    ratio = lam / previous_bound
    if ratio > 1:
        raise RecursionCheckFailed(f"lambda_{n} exceeds the inductive bound (ratio {ratio})")
    b = [Fraction(s - 1, sylvester(i)) for i in range(n)] + [Fraction(s + 1, 2)]
    u = lam * prod(b[: n - 2], start=Fraction(1)) * b[n] * Fraction(s) ** (n - 1)
    if u > 1:
        raise RecursionCheckFailed(f"u_{n} = {u} exceeds 1")
    return LambdaReport(n, lam, ratio, u)


def lambda_(n: int) -> Fraction:
    return lambda_report(n).value


def _fano_min_weights(n: int):
    s = sylvester(n)
    a_last = (s * s - s + 2) // 4 if n % 2 == 0 else (s * s - 3 * s + 4) // 4
    a_n = (s - 2) * a_last - (s - 1)
    return s, a_n, a_last


def sigma(n: int) -> Fraction:
    """``(s_n - 2) a_{n+1} / (s_n - 1)`` for the ``fano-min`` weights."""
    _check_dim(n, 2)
    s, _, a_last = _fano_min_weights(n)
    return Fraction((s - 2) * a_last, s - 1)


@dataclass(frozen=True)
class LedgerLine:
    label: str
    lhs: Fraction
    relation: str
    rhs: Fraction
    note: str = ""

    @property
    def passed(self) -> bool:
        lhs, rhs = self.lhs, self.rhs
        return {"<": lhs < rhs, "<=": lhs <= rhs, "=": lhs == rhs,
                ">": lhs > rhs, ">=": lhs >= rhs}[self.relation]

    def to_json(self) -> dict:
        return {
            "label": self.label,
            "lhs": rat_to_json(self.lhs), "lhs_decimal": display(self.lhs),
            "relation": self.relation,
            "rhs": rat_to_json(self.rhs), "rhs_decimal": display(self.rhs),
            "pass": self.passed,
            "note": self.note,
        }


@dataclass(frozen=True)
class GlctCertificate:
    n: int
    sigma: Fraction
    witness_lct: Fraction
    ledger: tuple[LedgerLine, ...] = field(default=())

    @property
    def overall(self) -> bool:
        return all(line.passed for line in self.ledger) and self.sigma > 1

    def line(self, label: str) -> LedgerLine:
        for ln in self.ledger:
            if ln.label.split()[0] == label:
                return ln
        raise KeyError(label)

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "parity": "even" if self.n % 2 == 0 else "odd",
            "sigma": rat_to_json(self.sigma), "sigma_decimal": display(self.sigma),
            "witness_lct": rat_to_json(self.witness_lct),
            "ledger": [ln.to_json() for ln in self.ledger],
            "overall": self.overall,
        }

    def render(self) -> str:
        lines = [f"n={self.n}: sigma = {self.sigma} ({display(self.sigma)}), "
                 f"exceptional: {'yes' if self.overall else 'NOT CERTIFIED'}"]
        for ln in self.ledger:
            lines.append(f"  [{'pass' if ln.passed else 'FAIL'}] {ln.label}: "
                         f"{display(ln.lhs)} {ln.relation} {display(ln.rhs)}")
        return "\n".join(lines)


def certify_exceptional(n: int) -> GlctCertificate:
    _check_dim(n, 2)
    s, a_n, a_last = _fano_min_weights(n)
    sig = sigma(n)
    witness = fermat_lct([sylvester(i) for i in range(n)])
    s_prev = sylvester(n - 1)
    one = Fraction(1)
    ledger = []
    tag = "E" if n % 2 == 0 else "O"

    ledger.append(LedgerLine(f"{tag}1 witness lct", witness, "=", Fraction(s - 2, s - 1),
                             "Fermat singularity of the section x_{n+1}=0; sigma = lct * a_{n+1}"))
    ledger.append(LedgerLine(f"{tag}1b sigma = witness * a_{{n+1}}", sig, "=", witness * a_last))
    smooth = Fraction(s_prev * (s - 2) * a_last, (s - 1) * a_n)
    ledger.append(LedgerLine(f"{tag}2 smooth-locus multiplicity", smooth, "<", one,
                             "bound s_{n-1}/a_n on mult of D, times sigma"))
    if n % 2 == 0:
        e_n = Fraction(2 * (s - 1) * a_n, (s + 1) ** 2)
        ledger.append(LedgerLine("E3 e_n >= sigma_n", e_n, ">=", sig))
        lam = lambda_report(n).value
        eq = lam * Fraction(s) ** (n - 1) * (s + 1) ** 2 * Fraction(s - 1) ** (n - 3) / 2
        ledger.append(LedgerLine("E4 lambda_n normalization", eq, "=", one))
    else:
        c_n = Fraction(s + 1, 4)
        g_n = (s - 3) * a_n / (4 * c_n)
        ledger.append(LedgerLine("O3 g_n > sigma_n", g_n, ">", sig, "r <= 0 on the weighted tangent cone"))
        e = s - 1
        c = [Fraction(s - 1, sylvester(i)) for i in range(n)]
        if n == 3:
            chart = sig * e / (c[2] * a_n)
        else:
            chart = sig * e * c_n / (c[n - 2] * c[n - 1] * a_n)
        ledger.append(LedgerLine("O4 chart multiplicity", chart, "<", one))
        f_n = Fraction(8 * (s - 1) ** (n - 2) * a_n) / (
            Fraction(s_prev) ** (n - 2) * (s_prev + 1) ** 2 * Fraction(s_prev - 1) ** (n - 4) * (s + 1))
        ledger.append(LedgerLine("O5 f_n > sigma_n", f_n, ">", sig))
    return GlctCertificate(n, sig, witness, tuple(ledger))


def weighted_mult_lct_bound(a, d: int, mult) -> Fraction:
    """``min(a_{n-1} a_n, b d) / (prod(a) mult)`` with ``b = sum(a) - d``."""
    a = [int(x) for x in a]
    if list(a) != sorted(a, reverse=True):
        raise ValueError("weights must be sorted in non-increasing order")
    b = sum(a) - d
    if b <= 0:
        raise NonpositiveB(f"b = {b} must be positive")
    mult = Fraction(mult)
    if mult <= 0:
        raise ValueError("multiplicity must be positive")
    return Fraction(min(a[-2] * a[-1], b * d)) / (prod(a) * mult)


def jk_mult_bound(a, r: int, deg, avoid_last: bool = False) -> Fraction:
    """Multiplicity bound ``(a_0 ... a_r) deg`` for an ``r``-dimensional substack.

    Off the last coordinate hyperplane the factor ``a_r`` becomes ``a_n``.
    """
    a = [int(x) for x in a]
    if not 0 <= r < len(a):
        raise ValueError("r out of range")
    factors = a[: r + 1]
    if avoid_last:
        factors[-1] = a[-1]
    return prod(factors) * Fraction(deg)


def someweights_bound(a_full, deg) -> Fraction:
    deg = Fraction(deg)
    if deg < 0:
        raise ValueError("degree must be non-negative")
    return list(a_full)[-1] * deg
