"""Bracket tables and module actions: the defining identities hold exactly."""

import random
from fractions import Fraction

import pytest

from wbext.algebra import (
    check_algebra_axioms,
    check_module_axioms,
    free_module,
    make_virasoro,
    make_wb,
    trivial_module,
)


def test_wb_bracket_satisfies_axioms():
    for b in (1, -1, 2, Fraction(-2, 3), Fraction(9, 7)):
        report = check_algebra_axioms(make_wb(b))
        assert report.passed, str(report)


def test_virasoro_bracket_satisfies_axioms():
    report = check_algebra_axioms(make_virasoro())
    assert report.passed, str(report)


def test_b_zero_is_rejected():
    with pytest.raises(ValueError):
        make_wb(0)


def test_free_module_axioms_random_parameters():
    rng = random.Random(20240814)
    for _ in range(15):
        b = Fraction(rng.randint(-8, 8), rng.randint(1, 5))
        if b == 0:
            continue
        alg = make_wb(b)
        alpha = Fraction(rng.randint(-6, 6), rng.randint(1, 4))
        delta = Fraction(rng.randint(-6, 6), rng.randint(1, 4))
        report = check_module_axioms(alg, free_module(alg, alpha, delta))
        assert report.passed, str(report)


def test_trivial_module_axioms():
    alg = make_wb(3)
    report = check_module_axioms(alg, trivial_module(alg, Fraction(-5, 2)))
    assert report.passed, str(report)


def test_virasoro_free_module_axioms():
    alg = make_virasoro()
    report = check_module_axioms(alg, free_module(alg, 0, Fraction(7, 2)))
    assert report.passed, str(report)


def test_report_counts_identities():
    alg = make_wb(2)
    mod = free_module(alg, 0, 1)
    report = check_module_axioms(alg, mod)
    # rank-two algebra: four ordered generator pairs plus two translation rules
    assert len(report.residuals) == 6
    assert "all 6 identities hold" in str(report)
    alg_report = check_algebra_axioms(alg)
    assert report.passed and alg_report.passed
    assert len(alg_report.residuals) == 24


def test_broken_bracket_is_caught():
    from wbext.poly import D, L

    alg = make_wb(1)
    # sabotage the mixed bracket: the skew/Jacobi identities must notice
    alg.bracket[("L", "H")] = {"H": D + 3 * L}
    report = check_algebra_axioms(alg)
    assert not report.passed
    assert report.violations
