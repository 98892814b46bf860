"""Acceptance criteria 1-9, one test each.

Each test prints a ``[PASS]`` / ``[FAIL]`` line (visible with ``-s`` or in the
captured output of a failure).  Same checks as ``degprinc selftest``.
"""
from __future__ import annotations

import pytest

from degprinc import acceptance as acc


def _report(r):
    print(r.line())
    for f in r.failures[:15]:
        print("   ", f)
    if not r.passed:
        pytest.fail(r.line(), pytrace=False)


def test_criterion_1_bound_table():
    _report(acc.criterion_1())


def test_criterion_2_f4_sextic():
    _report(acc.criterion_2())


def test_criterion_3_d5_jacobian():
    _report(acc.criterion_3())


@pytest.mark.slow
def test_criterion_4_strata_vs_brute_force():
    _report(acc.criterion_4())


def test_criterion_5_jacobian_rank():
    _report(acc.criterion_5())


def test_criterion_6_hyperplane_zeros():
    _report(acc.criterion_6())


@pytest.mark.slow
def test_criterion_7_h4_surrogate():
    _report(acc.criterion_7())


def test_criterion_8_lie_adapter():
    _report(acc.criterion_8())


def test_criterion_9_orders_and_hyperplanes():
    _report(acc.criterion_9())
