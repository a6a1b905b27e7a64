"""Weight-line scans: generic dimensions, certificates, special values."""

import random
from fractions import Fraction

import pytest

from wbext import scanner
from wbext.engine import solve_ext
from wbext.oracle import verify_witness
from wbext.poly import MultiPoly, UniPoly
from wbext.problems import Caps
from wbext.qext import quad
from wbext.scanner import (
    candidate_diffs,
    classify,
    ext_dim_at,
    g_family_witness,
    generic_ext_dim,
    generic_sector_dims,
    scan_dbar,
    scan_delta,
    scan_diff,
    special_values,
)

CAPS = Caps()  # default degree window, spelled out where it matters


def test_weights_at_respects_promotion():
    line = scan_dbar(2, 3)
    assert line.weights_at(Fraction(1)) == (Fraction(4), Fraction(1))
    chart = scan_delta(2, 3)
    assert chart.weights_at(Fraction(4)) == (Fraction(4), Fraction(1))
    ray = scan_diff(2, Fraction(1))
    assert ray.weights_at(Fraction(3)) == (Fraction(4), Fraction(1))


def test_specialize_builds_concrete_problem():
    sp = scan_dbar(2, 3)
    p = sp.specialize(Fraction(1))
    assert (p.delta, p.dbar) == (Fraction(4), Fraction(1))
    assert p.b == 2 and p.shape == 3


def test_b_zero_rejected():
    with pytest.raises(ValueError):
        scan_dbar(0, 2)


def test_candidate_diffs():
    assert candidate_diffs(Fraction(-2, 3), "g") == [
        Fraction(-2, 3),
        Fraction(1, 3),
        Fraction(4, 3),
        Fraction(7, 3),
    ]
    assert candidate_diffs(1, "f") == [Fraction(s) for s in range(7)]
    # integer b merges overlapping lines
    full = candidate_diffs(2, "full")
    assert full == sorted(set(full))
    assert Fraction(5) in full and Fraction(0) in full


def test_line_consistency_random_points():
    """The cached-line evaluator must agree with the direct solver."""
    rng = random.Random(20240815)
    sp = scan_dbar(2, 3, caps=CAPS)
    report = special_values(sp)
    cert = UniPoly.from_multipoly(report.certificate)
    done = 0
    while done < 4:
        t0 = Fraction(rng.randint(-12, 12), rng.randint(1, 4))
        delta, dbar = sp.weights_at(t0)
        if delta == 0 or dbar == 0 or cert.eval(t0) == 0:
            continue
        fast = ext_dim_at(sp, t0)
        slow = solve_ext(sp.specialize(t0), stabilize=False, check=False).ext_dim
        assert fast == slow == report.generic_dim
        done += 1


def test_certificate_completeness_probes():
    """Off the certificate's roots the dimension never moves."""
    rng = random.Random(20240816)
    sp = scan_dbar(Fraction(9, 7), 2 + Fraction(9, 7), sector="g", caps=CAPS)
    report = special_values(sp)
    cert = UniPoly.from_multipoly(report.certificate)
    probes = 0
    while probes < 10:
        t0 = Fraction(rng.randint(-30, 30), rng.choice([1, 2, 5]))
        delta, dbar = sp.weights_at(t0)
        if delta == 0 or dbar == 0 or cert.eval(t0) == 0:
            continue
        assert ext_dim_at(sp, t0) == report.generic_dim
        probes += 1


def test_diff_scan_finds_the_two_family_lines():
    sp = scan_diff(2, Fraction(1), caps=CAPS)
    report = special_values(sp)
    special_ts = [value for value, _dim in report.special_values]
    assert Fraction(2) in special_ts and Fraction(3) in special_ts
    cert = UniPoly.from_multipoly(report.certificate)
    assert cert.eval(Fraction(2)) == 0 and cert.eval(Fraction(3)) == 0


def test_degree2_solutions_pinned_at_dbar():
    """On the m = 2 line a solution exists only at dbar = -b - 1."""
    rng = random.Random(20240817)
    for _ in range(3):
        b = Fraction(rng.randint(1, 9), rng.choice([1, 2, 7]))
        sp = scan_dbar(b, 2 + b, sector="g", caps=CAPS)
        report = special_values(sp)
        assert report.generic_dim == 0
        pinned = [
            (value, dim)
            for value, dim in report.special_values
            if sp.weights_at(value)[0] != 0 and sp.weights_at(value)[1] != 0
        ]
        assert pinned == [(-b - 1, 1)]


def test_degree3_solutions_need_the_exceptional_b():
    sp = scan_dbar(Fraction(-2, 3), Fraction(7, 3), sector="g", caps=CAPS)
    report = special_values(sp)
    assert [v for v, _ in report.special_values] == [Fraction(-2, 3)]
    for b in (Fraction(2), Fraction(9, 7)):
        other = special_values(scan_dbar(b, 3 + b, sector="g", caps=CAPS))
        live = [
            value
            for value, _dim in other.special_values
            if all(w != 0 for w in other.problem.weights_at(value))
        ]
        assert live == []


def test_family_witness_follows_coefficient_law():
    rng = random.Random(20240818)
    for m in (0, 1, 2, 3):
        b = Fraction(-2, 3) if m == 3 else Fraction(rng.randint(1, 7), rng.choice([1, 3]))
        w = g_family_witness(m, b)
        assert w.f.is_zero()
        groups = dict(w.g.coeffs_by(("d", "l")))
        assert groups[(m, 0)] == MultiPoly.const(1)
        from math import comb

        T = MultiPoly.var("t")
        for i in range(1, m + 1):
            expected = (MultiPoly.const(Fraction(comb(m, i + 1))) + T * comb(m, i)) * (
                Fraction(-1) / b
            )
            assert groups[(m - i, i)] == expected


def test_family_witness_specializes_consistently():
    w_sym = g_family_witness(2, 3)
    w_at = g_family_witness(2, 3, symbolic=False, at=Fraction(-4))
    assert w_sym.g.subst("t", MultiPoly.const(Fraction(-4))) == w_at.g
    p = scan_dbar(3, 5, sector="g").specialize(Fraction(-4))
    assert verify_witness(p, w_at).passed


def test_sector_split_matches_joint_scan():
    b = Fraction(2)
    joint = scan_dbar(b, 3, caps=CAPS)
    f_dim, g_dim = generic_sector_dims(joint)
    g_only = special_values(scan_dbar(b, 3, sector="g", caps=CAPS))
    assert g_dim == g_only.generic_dim
    assert f_dim + g_dim == special_values(joint).generic_dim


def test_generic_ext_dim_exposes_pivots():
    sp = scan_dbar(1, 2, sector="g", caps=CAPS)
    dim, pivots = generic_ext_dim(sp)
    assert dim == 1
    assert pivots  # elimination always produces at least one pivot here


def test_virasoro_layer_line_has_quadratic_specials():
    sp = scan_dbar(None, 6, sector="f", caps=CAPS)
    report = special_values(sp)
    assert report.generic_dim == 0
    values = {value for value, dim in report.special_values if dim == 1}
    lo = quad(Fraction(-5, 2), Fraction(-1, 2), 19)
    hi = quad(Fraction(-5, 2), Fraction(1, 2), 19)
    assert {lo, hi} <= values


def test_classify_small_b():
    got = classify(1, caps=CAPS)
    assert [e.diff for e in got.layer] == [Fraction(s) for s in range(7)]
    assert [e.diff for e in got.per_b] == [Fraction(1 + m) for m in range(4)]
    assert got.family_diffs() == [Fraction(1), Fraction(2)]
    assert got.isolated_points() == [(Fraction(1), Fraction(-2))]
    m2 = got.per_b[2]
    assert m2.specials and m2.specials[0].witnesses


def test_classify_rejects_b_zero():
    with pytest.raises(ValueError):
        classify(0)


def test_degenerate_specials_are_annotated():
    sp = scan_dbar(Fraction(-2, 3), Fraction(4, 3), sector="g", caps=CAPS)
    report = special_values(sp)
    by_value = dict(report.special_values)
    assert Fraction(0) in by_value  # the dbar = 0 jump is reported...
    assert any("t=0" in note for note in report.notes)  # ...and flagged


def test_scan_is_deterministic():
    a = special_values(scan_dbar(2, 3, caps=CAPS))
    b = special_values(scan_dbar(2, 3, caps=CAPS))
    assert str(a.certificate) == str(b.certificate)
    assert a.special_values == b.special_values
