"""One test per acceptance criterion; a PASS/FAIL line per criterion is printed in the summary."""

import os

import pytest

from conftest import ACCEPTANCE_LINES
from wpsklt.acceptance import CRITERIA, Options
from wpsklt.exactmath import display

OPTS = Options(workers=os.cpu_count() or 1)
_cache = {}

# The printed n=5 chart value disagrees with its own formula by the factor 4 in c_n; see the
# decisions ledger.  Every other line of criterion 5 must pass.
KNOWN_FAILURES = {5: {"chart value n=5 ~ 0.024"}}


def report_for(number):
    if number not in _cache:
        _, title, fn = next(c for c in CRITERIA if c[0] == number)
        rep = fn(OPTS)
        _cache[number] = rep
        ACCEPTANCE_LINES.append(f"criterion {number} ({title}): {'PASS' if rep.ok else 'FAIL'}")
        for c in rep.failures():
            computed = f"computed {display(c.value)}" if c.value is not None else c.detail
            ACCEPTANCE_LINES.append(f"    failed: {c.label}  {computed}".rstrip())
    return _cache[number]


def _params():
    for number, title, _ in CRITERIA:
        marks = []
        if number in KNOWN_FAILURES:
            marks.append(pytest.mark.xfail(strict=True, reason="printed spot value inconsistent with its formula"))
        yield pytest.param(number, id=f"criterion-{number}-{title.replace(' ', '-')}", marks=marks)


@pytest.mark.parametrize("number", list(_params()))
def test_criterion(number):
    rep = report_for(number)
    print(rep.render())
    assert rep.ok, "\n".join(f"{c.label}: {c.detail}" for c in rep.failures())


@pytest.mark.parametrize("number", sorted(KNOWN_FAILURES))
def test_known_failures_are_the_only_ones(number):
    rep = report_for(number)
    assert {c.label for c in rep.failures()} == KNOWN_FAILURES[number]
