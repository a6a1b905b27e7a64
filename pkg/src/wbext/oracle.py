"""Independent checker: naive operator composition on extension elements.

This module re-derives everything the solver needs from the module axioms
alone, with no code shared with the equation builder beyond raw polynomial
arithmetic.  An element of the extension is a pair ``(top, sub)`` of
coefficients against the two generators; the generator actions are applied
literally and the six commutator identities are expanded on both generators.
Dimensions come from a plain forward elimination written here, so the solver
and this oracle can only agree when both transcriptions are right.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .poly import D, L, MultiPoly, U
from .problems import Caps, CocycleWitness, ExtProblem

__all__ = ["VerifyReport", "verify_witness", "verify_witness_env", "brute_dims"]

_LU = L + U


@dataclass
class VerifyReport:
    passed: bool
    residuals: dict = field(default_factory=dict)  # label -> (top, sub) residual pair
    violations: list = field(default_factory=list)

    def __str__(self):
        if self.passed:
            return "witness verifies: all residuals are exactly zero"
        lines = [f"witness FAILS {len(self.violations)} identities:"]
        for label in self.violations:
            top, sub = self.residuals[label]
            lines.append(f"  {label}: top residual {top}, sub residual {sub}")
        return "\n".join(lines)


class _Model:
    """One extension shape with explicit generator actions on (top, sub) pairs.

    Pairs are coefficients against the distinguished generators: shape 1 is
    (free quotient, one-dim sub), shape 2 is (one-dim quotient, free sub) with
    a deformed translation action, shape 3 is (free, free).  Parameters come
    from an environment of constant (or scan-variable) polynomials.
    """

    def __init__(self, shape: int, env: dict, w: CocycleWitness):
        self.shape = shape
        self.alpha = env["alpha"]
        self.b = env.get("b")
        self.gamma = env.get("gamma")
        self.abar = env.get("abar")
        self.delta = env["delta"]
        self.dbar = env.get("dbar")
        self.f = w.f
        self.g = w.g
        self.h = w.h if w.h is not None else MultiPoly.zero()
        if shape == 1 and self.f.uses_var("d"):
            raise ValueError("shape-1 witnesses depend on the bracket variable only")
        if w.h is not None and shape != 2:
            raise ValueError("only shape 2 carries the translation deformation h")
        if w.h is not None and w.h.uses_var("l"):
            raise ValueError("h must be a polynomial in d alone")

    # an action of L with bracket variable `slot` on the free generator
    def _l_coeff(self, slot, alpha, delta):
        return D + alpha + delta * slot

    def apply_d(self, elem):
        top, sub = elem
        if self.shape == 1:
            return (D * top, self.gamma * sub)
        if self.shape == 2:
            return (self.gamma * top, top * self.h + D * sub)
        return (D * top, D * sub)

    def apply_gen(self, gen: str, slot: MultiPoly, elem):
        top, sub = elem
        fs = self.f.subst("l", slot)
        gs = self.g.subst("l", slot)
        if self.shape == 1:
            shifted = top.shift("d", slot)
            if gen == "L":
                new_top = shifted * self._l_coeff(slot, self.alpha, self.delta)
                new_sub = (shifted * fs).subst("d", self.gamma)
            else:
                new_top = MultiPoly.zero()
                new_sub = (shifted * gs).subst("d", self.gamma)
            return (new_top, new_sub)
        if self.shape == 2:
            if gen == "L":
                new_sub = top * fs + sub.shift("d", slot) * self._l_coeff(
                    slot, self.alpha, self.delta
                )
            else:
                new_sub = top * gs
            return (MultiPoly.zero(), new_sub)
        shifted = top.shift("d", slot)
        if gen == "L":
            new_top = shifted * self._l_coeff(slot, self.alpha, self.delta)
            new_sub = shifted * fs + sub.shift("d", slot) * self._l_coeff(
                slot, self.abar, self.dbar
            )
        else:
            new_top = MultiPoly.zero()
            new_sub = shifted * gs
        return (new_top, new_sub)

    @staticmethod
    def _sub(e1, e2):
        return (e1[0] - e2[0], e1[1] - e2[1])

    @staticmethod
    def _scale(c: MultiPoly, e):
        return (c * e[0], c * e[1])

    def commutator_residual(self, a: str, bgen: str, elem):
        """[a_l, b_u] applied to elem, minus the bracket's right-hand side."""
        e1 = self.apply_gen(a, L, self.apply_gen(bgen, U, elem))
        e2 = self.apply_gen(bgen, U, self.apply_gen(a, L, elem))
        comm = self._sub(e1, e2)
        if a == "L" and bgen == "L":
            rhs = self._scale(L - U, self.apply_gen("L", _LU, elem))
        elif a == "L" and bgen == "H":
            rhs = self._scale(-(self.b * L + U), self.apply_gen("H", _LU, elem))
        elif a == "H" and bgen == "L":
            rhs = self._scale(L + self.b * U, self.apply_gen("H", _LU, elem))
        else:
            rhs = (MultiPoly.zero(), MultiPoly.zero())
        return self._sub(comm, rhs)

    def translation_residual(self, a: str, elem):
        """[d, a_l] + l*a_l applied to elem (must vanish)."""
        e1 = self.apply_d(self.apply_gen(a, L, elem))
        e2 = self.apply_gen(a, L, self.apply_d(elem))
        comm = self._sub(e1, e2)
        return self._sub(comm, self._scale(-L, self.apply_gen(a, L, elem)))

    def all_residuals(self) -> dict:
        one = MultiPoly.const(Fraction(1))
        zero = MultiPoly.zero()
        gens = ("L",) if self.b is None else ("L", "H")
        if self.b is None and not self.g.is_zero():
            raise ValueError("a nonzero g needs the second generator; supply b")
        out = {}
        for tag, elem in (("top", (one, zero)), ("sub", (zero, one))):
            for a in gens:
                for bgen in gens:
                    out[f"[{a},{bgen}] on {tag}"] = self.commutator_residual(a, bgen, elem)
            for a in gens:
                out[f"[d,{a}] on {tag}"] = self.translation_residual(a, elem)
        return out


def verify_witness_env(shape: int, env: dict, w: CocycleWitness) -> VerifyReport:
    """Check a witness against an explicit parameter environment.

    Environment values are polynomials, so a weight left as the scan variable
    ``t`` verifies the whole one-parameter family at once.
    """
    model = _Model(shape, env, w)
    residuals = model.all_residuals()
    violations = [k for k, (rt, rs) in residuals.items() if rt or rs]
    return VerifyReport(passed=not violations, residuals=residuals, violations=violations)


def verify_witness(p: ExtProblem, w: CocycleWitness) -> VerifyReport:
    """Check a solver witness by direct substitution into the module identities."""
    return verify_witness_env(p.shape, p.env(), w)


# ---------------------------------------------------------------------------
# brute-force dimension oracle
# ---------------------------------------------------------------------------


def _monomials(shape: int, part: str, caps: Caps):
    """Unknown monomials for one witness part, ascending total degree."""
    cap = {"f": caps.f, "g": caps.g, "h": caps.h}[part]
    if part == "h":
        return [(j, 0) for j in range(cap + 1)]
    if shape == 1:
        return [(0, k) for k in range(cap + 1)]
    return [
        (j, k)
        for total in range(cap + 1)
        for j in range(total, -1, -1)
        for k in (total - j,)
    ]


def _unit_witness(shape: int, part: str, j: int, k: int) -> CocycleWitness:
    mono = MultiPoly.monomial((j, k, 0, 0), Fraction(1))
    zero = MultiPoly.zero()
    f = mono if part == "f" else zero
    g = mono if part == "g" else zero
    h = (mono if part == "h" else zero) if shape == 2 else None
    return CocycleWitness(f=f, g=g, h=h)


def _rank(rows) -> int:
    """Forward elimination over the first field met; no pivoting refinements."""
    work = [list(r) for r in rows]
    if not work:
        return 0
    ncols = len(work[0])
    r = 0
    for col in range(ncols):
        piv = None
        for i in range(r, len(work)):
            if work[i][col] != 0:
                piv = i
                break
        if piv is None:
            continue
        work[r], work[piv] = work[piv], work[r]
        lead = work[r][col]
        for i in range(r + 1, len(work)):
            c = work[i][col]
            if c:
                factor = c / lead
                work[i] = [a - factor * bb for a, bb in zip(work[i], work[r])]
        r += 1
        if r == len(work):
            break
    return r


def _columns_to_rows(columns):
    """Transpose a list of {position: value} columns into dense rows."""
    positions = sorted({pos for col in columns for pos in col})
    index = {pos: i for i, pos in enumerate(positions)}
    rows = [[Fraction(0)] * len(columns) for _ in positions]
    for c, col in enumerate(columns):
        for pos, val in col.items():
            rows[index[pos]][c] = val
    return rows


def _residual_column(shape: int, env: dict, w: CocycleWitness) -> dict:
    col = {}
    for label, (top, sub) in _Model(shape, env, w).all_residuals().items():
        for part_tag, poly in (("t", top), ("s", sub)):
            for exps, c in poly.terms.items():
                col[(label, part_tag, exps)] = c
    return col


def _sector_parts(shape: int, sector: str):
    if sector == "g":
        return ("g",)
    parts = ("f", "h") if shape == 2 else ("f",)
    if sector == "f":
        return parts
    return parts + ("g",)


def brute_dims(p: ExtProblem) -> tuple[int, int, int]:
    """(cocycle dim, coboundary dim, ext dim) by naive enumeration.

    Each candidate monomial becomes a unit witness whose six-identity
    residuals give one matrix column; the kernel count is the cocycle
    dimension.  Coboundaries come from literally re-expanding the split
    action in a moved basis, and their dimension inside the degree caps is
    rank(all coefficients) - rank(out-of-cap coefficients).
    """
    env = p.env()
    unknowns = [
        (part, j, k)
        for part in _sector_parts(p.shape, p.sector)
        for j, k in _monomials(p.shape, part, p.caps)
    ]
    columns = [
        _residual_column(p.shape, env, _unit_witness(p.shape, part, j, k))
        for part, j, k in unknowns
    ]
    nullity = len(unknowns) - _rank(_columns_to_rows(columns))

    cob_maps = _split_basis_change_maps(p, env)
    if not cob_maps:
        return (nullity, 0, nullity)
    in_caps = {(part, j, k) for part, j, k in unknowns}
    full_rows, over_rows = [], []
    keys = sorted({key for m in cob_maps for key in m})
    over_keys = [key for key in keys if key not in in_caps]
    for m in cob_maps:
        full_rows.append([m.get(key, Fraction(0)) for key in keys])
        over_rows.append([m.get(key, Fraction(0)) for key in over_keys])
    cob_dim = _rank(full_rows) - (_rank(over_rows) if over_keys else 0)
    return (nullity, cob_dim, nullity - cob_dim)


def _split_basis_change_maps(p: ExtProblem, env: dict):
    """Witness coefficients obtained by moving the lifted generator.

    The split extension (zero witness) is rewritten in the basis where the
    lifted generator is shifted by phi times the submodule generator; the
    deviation from the split action is a coboundary witness, recorded as a
    {(part, j, k): coefficient} map.
    """
    alpha, delta = env["alpha"], env["delta"]
    maps = []
    if p.shape == 1:
        parts = {"f": -(alpha + env["gamma"] + delta * L)}
        maps.append(_poly_map(parts))
    elif p.shape == 2:
        act = D + alpha + delta * L
        for j in range(p.caps.phi + 1):
            phi = MultiPoly.monomial((j, 0, 0, 0), Fraction(1))
            parts = {"f": phi.shift("d", L) * act, "h": (D - env["gamma"]) * phi}
            maps.append(_poly_map(parts))
    else:
        quot = D + alpha + delta * L
        sub = D + env["abar"] + env["dbar"] * L
        for j in range(p.caps.phi + 1):
            phi = MultiPoly.monomial((j, 0, 0, 0), Fraction(1))
            parts = {"f": phi.shift("d", L) * sub - quot * phi}
            maps.append(_poly_map(parts))
    if p.sector == "g":
        # basis moves never touch the H-side data
        return []
    if p.sector == "f" or p.shape != 2:
        wanted = {"f", "h"} if p.shape == 2 else {"f"}
        maps = [{k: v for k, v in m.items() if k[0] in wanted} for m in maps]
    return [m for m in maps if m]


def _poly_map(parts: dict) -> dict:
    out = {}
    for name, poly in parts.items():
        for exps, c in poly.terms.items():
            if exps[2] or exps[3]:
                raise ValueError("coboundary data must live in (d, l) only")
            out[(name, exps[0], exps[1])] = c
    return out
