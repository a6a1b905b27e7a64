"""Functional-equation construction for the three extension shapes.

Each commutator identity, applied to the top generator of the extension,
yields a polynomial identity in ``(d, l, u)`` that is linear in the unknown
cocycle coefficients.  We represent an identity as a map

    unknown key  ->  polynomial multiplying that unknown

so the identity reads ``sum_k  c_k * cols[k] == 0`` over the unknown
coefficients ``c_k``.  Keys are ``("f", j, k)`` for the coefficient of
``d^j l^k`` in f, likewise ``("g", j, k)`` and ``("h", j, 0)``.

The builder works over a parameter environment whose values are polynomials,
so a weight promoted to the scan variable ``t`` flows through unchanged.
"""

from __future__ import annotations

from dataclasses import dataclass

from .poly import D, L, MultiPoly, U
from .problems import Caps, ExtProblem

__all__ = [
    "Identity",
    "unknown_basis",
    "build_equations",
    "build_equations_env",
    "LinearSystem",
    "assemble_linear_system",
]


@dataclass
class Identity:
    name: str
    cols: dict  # unknown key -> MultiPoly in (d, l, u[, t])


def _graded_desc(monos):
    return sorted(monos, key=lambda jk: (jk[0] + jk[1], jk), reverse=True)


def unknown_basis(shape: int, caps: Caps, sector: str) -> list:
    """Canonical unknown ordering: f block, then g, then h; graded-lex descending."""
    keys = []
    if sector in ("full", "f"):
        if shape == 1:
            f_monos = [(0, k) for k in range(caps.f + 1)]
        else:
            f_monos = [
                (j, k)
                for j in range(caps.f + 1)
                for k in range(caps.f + 1 - j)
            ]
        keys.extend(("f", j, k) for j, k in _graded_desc(f_monos))
    if sector in ("full", "g"):
        if shape == 1:
            g_monos = [(0, k) for k in range(caps.g + 1)]
        else:
            g_monos = [
                (j, k)
                for j in range(caps.g + 1)
                for k in range(caps.g + 1 - j)
            ]
        keys.extend(("g", j, k) for j, k in _graded_desc(g_monos))
    if shape == 2 and sector in ("full", "f"):
        keys.extend(("h", j, 0) for j in range(caps.h, -1, -1))
    return keys


class _Powers:
    """Cached monomial images under the slot substitutions used by the identities."""

    def __init__(self, cap: int):
        n = cap + 2
        self.d = [D**j for j in range(n)]
        self.l = [L**k for k in range(n)]
        self.u = [U**k for k in range(n)]
        self.dl = [(D + L) ** j for j in range(n)]
        self.du = [(D + U) ** j for j in range(n)]
        self.lu = [(L + U) ** k for k in range(n)]

    def m(self, j, k):  # m(d, l)
        return self.d[j] * self.l[k]

    def m_u(self, j, k):  # m(d, u)
        return self.d[j] * self.u[k]

    def m_dl_u(self, j, k):  # m(d+l, u)
        return self.dl[j] * self.u[k]

    def m_du_l(self, j, k):  # m(d+u, l)
        return self.du[j] * self.l[k]

    def m_lu(self, j, k):  # m(d, l+u)
        return self.d[j] * self.lu[k]


def build_equations(p: ExtProblem, redundant: bool = False) -> list:
    """Identities for a concrete problem; see :func:`build_equations_env`."""
    return build_equations_env(p.shape, p.env(), p.caps, p.sector, redundant)


def build_equations_env(
    shape: int, env: dict, caps: Caps, sector: str, redundant: bool = False
) -> list:
    """Build the identity list for one extension shape.

    With ``redundant=False`` this returns exactly the defining identity set
    (one per commutator actually used in the derivation); ``redundant=True``
    additionally imposes the swapped L-H commutator forms, which are implied
    but kept as a cross-check in the solver.
    """
    alpha = env["alpha"]
    b = env.get("b")
    delta = env.get("delta")
    want_f = sector in ("full", "f")
    want_g = sector in ("full", "g")
    if want_g and b is None:
        raise ValueError("the g sector needs the parameter b")
    keys = unknown_basis(shape, caps, sector)
    f_keys = [k for k in keys if k[0] == "f"]
    g_keys = [k for k in keys if k[0] == "g"]
    h_keys = [k for k in keys if k[0] == "h"]
    identities: list[Identity] = []

    if shape == 1:
        gamma = env["gamma"]
        A = alpha + gamma
        pw = _Powers(max(caps.f, caps.g))
        if want_f:
            cols = {}
            for _, _, k in f_keys:
                cols[("f", 0, k)] = (
                    (A + L + delta * U) * pw.l[k]
                    - (A + U + delta * L) * pw.u[k]
                    - (L - U) * pw.lu[k]
                )
            identities.append(Identity("LL", cols))
        if want_g:
            cols = {}
            for _, _, k in g_keys:
                cols[("g", 0, k)] = (b * L + U) * pw.lu[k] - (A + U + delta * L) * pw.u[k]
            identities.append(Identity("LH", cols))
            if redundant:
                cols = {}
                for _, _, k in g_keys:
                    cols[("g", 0, k)] = (L + b * U) * pw.lu[k] - (A + L + delta * U) * pw.l[k]
                identities.append(Identity("HL", cols))
        return identities

    if shape == 2:
        gamma = env["gamma"]
        pw = _Powers(max(caps.f, caps.g, caps.h))
        act = D + alpha + delta * L  # L-action coefficient on the submodule generator
        act_u = D + alpha + delta * U
        if want_f:
            cols = {}
            for _, j, k in f_keys:
                cols[("f", j, k)] = (
                    act * pw.m_dl_u(j, k)
                    - act_u * pw.m_du_l(j, k)
                    - (L - U) * pw.m_lu(j, k)
                )
            identities.append(Identity("LL", cols))
            cols = {}
            for _, j, k in f_keys:
                cols[("f", j, k)] = (D + L - gamma) * pw.m(j, k)
            for _, j, _ in h_keys:
                cols[("h", j, 0)] = -act * pw.dl[j]
            identities.append(Identity("dL", cols))
        if want_g:
            cols = {}
            for _, j, k in g_keys:
                cols[("g", j, k)] = (D + L - gamma) * pw.m(j, k)
            identities.append(Identity("dH", cols))
            if redundant:
                cols = {}
                for _, j, k in g_keys:
                    cols[("g", j, k)] = act * pw.m_dl_u(j, k) + (b * L + U) * pw.m_lu(j, k)
                identities.append(Identity("LH", cols))
                cols = {}
                for _, j, k in g_keys:
                    cols[("g", j, k)] = act_u * pw.m_du_l(j, k) + (L + b * U) * pw.m_lu(j, k)
                identities.append(Identity("HL", cols))
        return identities

    # shape 3
    abar = env["abar"]
    dbar = env["dbar"]
    pw = _Powers(max(caps.f, caps.g))
    top_l = D + L + delta * U + alpha  # quotient action pieces
    top_u = D + U + delta * L + alpha
    sub_l = D + dbar * L + abar  # submodule action pieces
    sub_u = D + dbar * U + abar
    if want_f:
        cols = {}
        for _, j, k in f_keys:
            cols[("f", j, k)] = (
                top_l * pw.m(j, k)
                + sub_l * pw.m_dl_u(j, k)
                - top_u * pw.m_u(j, k)
                - sub_u * pw.m_du_l(j, k)
                - (L - U) * pw.m_lu(j, k)
            )
        identities.append(Identity("LL", cols))
    if want_g:
        cols = {}
        for _, j, k in g_keys:
            cols[("g", j, k)] = (
                sub_l * pw.m_dl_u(j, k) - top_u * pw.m_u(j, k) + (b * L + U) * pw.m_lu(j, k)
            )
        identities.append(Identity("LH", cols))
        if redundant:
            cols = {}
            for _, j, k in g_keys:
                cols[("g", j, k)] = (
                    top_l * pw.m(j, k) - sub_u * pw.m_du_l(j, k) - (L + b * U) * pw.m_lu(j, k)
                )
            identities.append(Identity("HL", cols))
    return identities


@dataclass
class LinearSystem:
    """Exact linear system: one row per (identity, monomial in d,l,u)."""

    unknowns: list  # unknown keys, fixed order
    rows: list  # list of coefficient-entry lists (entries: MultiPoly in t)
    row_labels: list  # (identity name, (jd, jl, ju))

    def concrete_rows(self):
        """Rows with entries lowered to scalars (requires no ``t`` dependence)."""
        out = []
        for row in self.rows:
            out.append([e.constant_value() for e in row])
        return out


def assemble_linear_system(identities, unknowns) -> LinearSystem:
    """Expand identities into coefficient rows, one per monomial in (d, l, u).

    Row order is deterministic: identities in build order, monomials graded-lex
    descending.  Raises if an identity references an undeclared unknown.
    """
    index = {k: i for i, k in enumerate(unknowns)}
    rows = []
    labels = []
    zero = MultiPoly.zero()
    for ident in identities:
        per_mono: dict[tuple, list] = {}
        for key, poly in ident.cols.items():
            if key not in index:
                raise ValueError(f"identity {ident.name} uses undeclared unknown {key}")
            for mono, coeff in poly.coeffs_by(("d", "l", "u")):
                row = per_mono.get(mono)
                if row is None:
                    row = [zero] * len(unknowns)
                    per_mono[mono] = row
                row[index[key]] = coeff
        for mono in sorted(per_mono, key=lambda m: (sum(m), m), reverse=True):
            rows.append(per_mono[mono])
            labels.append((ident.name, mono))
    return LinearSystem(unknowns=list(unknowns), rows=rows, row_labels=labels)
