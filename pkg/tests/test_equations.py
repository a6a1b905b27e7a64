"""Functional-equation assembly: unknown ordering and coefficient extraction."""

from fractions import Fraction

import pytest

from wbext.equations import (
    Identity,
    assemble_linear_system,
    build_equations,
    unknown_basis,
)
from wbext.linalg import nullspace, rank
from wbext.poly import D, L, MultiPoly
from wbext.problems import Caps, ExtProblem


def test_unknown_basis_shape1_is_univariate():
    keys = unknown_basis(1, Caps(f=3, g=2, h=3, phi=3), "full")
    f_keys = [k for k in keys if k[0] == "f"]
    g_keys = [k for k in keys if k[0] == "g"]
    assert f_keys == [("f", 0, k) for k in (3, 2, 1, 0)]
    assert g_keys == [("g", 0, k) for k in (2, 1, 0)]
    assert keys == f_keys + g_keys  # f block strictly before g block


def test_unknown_basis_shape3_counts():
    caps = Caps(f=4, g=3, h=4, phi=4)
    keys = unknown_basis(3, caps, "full")
    f_keys = [k for k in keys if k[0] == "f"]
    g_keys = [k for k in keys if k[0] == "g"]
    # bivariate monomials of total degree <= cap
    assert len(f_keys) == 5 * 6 // 2
    assert len(g_keys) == 4 * 5 // 2
    assert not any(k[0] == "h" for k in keys)


def test_unknown_basis_shape2_has_h_block():
    keys = unknown_basis(2, Caps(f=2, g=2, h=2, phi=2), "full")
    h_keys = [k for k in keys if k[0] == "h"]
    assert h_keys == [("h", 2, 0), ("h", 1, 0), ("h", 0, 0)]
    assert keys.index(h_keys[0]) > keys.index(("g", 0, 0))


def test_unknown_basis_is_graded_lex_descending():
    keys = unknown_basis(3, Caps(f=2, g=2, h=2, phi=2), "f")
    degrees = [j + k for (_, j, k) in keys]
    assert degrees == sorted(degrees, reverse=True)
    assert keys[0] == ("f", 2, 0)
    assert keys[-1] == ("f", 0, 0)


def test_sector_restriction():
    caps = Caps(f=2, g=2, h=2, phi=2)
    assert all(k[0] == "g" for k in unknown_basis(3, caps, "g"))
    assert all(k[0] == "f" for k in unknown_basis(3, caps, "f"))


def test_assemble_rejects_undeclared_unknowns():
    ident = Identity(name="bad", cols={("f", 0, 0): MultiPoly.const(1)})
    with pytest.raises(ValueError):
        assemble_linear_system([ident], [("g", 0, 0)])


def test_assemble_row_per_monomial():
    ident = Identity(
        name="i", cols={("f", 0, 0): D + 2 * L, ("f", 0, 1): MultiPoly.const(3)}
    )
    system = assemble_linear_system([ident], [("f", 0, 1), ("f", 0, 0)])
    got = {label[1]: row for label, row in zip(system.row_labels, system.rows)}
    # monomial d: only the f00 column; monomial l: coefficient 2; constant: 3*f01
    assert got[(1, 0, 0)][1] == MultiPoly.const(1)
    assert got[(0, 1, 0)][1] == MultiPoly.const(2)
    assert got[(0, 0, 0)][0] == MultiPoly.const(3)


def test_shape1_zero_sum_system_has_known_kernel():
    # alpha + gamma = 0, delta = 2, b = 1: the classification gives two
    # independent cocycles before quotienting (f = l^2 line and g = const)
    p = ExtProblem(shape=1, b=1, alpha=0, gamma=0, delta=2)
    system = assemble_linear_system(
        build_equations(p), unknown_basis(1, p.caps, p.sector)
    )
    rows = system.concrete_rows()
    ncols = len(system.unknowns)
    kernel = nullspace(rows, ncols)
    assert len(kernel) == ncols - rank(rows, ncols)
    assert len(kernel) >= 2


def test_shape1_nonzero_sum_system_is_rigid():
    # alpha + gamma != 0 forces the trivial solution apart from coboundaries
    p = ExtProblem(shape=1, b=5, alpha=2, gamma=1, delta=4)
    system = assemble_linear_system(
        build_equations(p), unknown_basis(1, p.caps, p.sector)
    )
    kernel = nullspace(system.concrete_rows(), len(system.unknowns))
    assert len(kernel) == 1  # exactly the coboundary direction


def test_redundant_identities_do_not_change_the_kernel():
    p = ExtProblem(shape=3, b=2, alpha=0, abar=0, delta=3, dbar=1,
                   caps=Caps(f=5, g=4, h=5, phi=5))
    base = assemble_linear_system(
        build_equations(p, redundant=False), unknown_basis(3, p.caps, p.sector)
    )
    extra = assemble_linear_system(
        build_equations(p, redundant=True), unknown_basis(3, p.caps, p.sector)
    )
    ncols = len(base.unknowns)
    assert rank(base.concrete_rows(), ncols) == rank(extra.concrete_rows(), ncols)
    assert len(extra.rows) > len(base.rows)
