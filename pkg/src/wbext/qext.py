"""Exact scalar arithmetic: rationals and real quadratic-extension elements.

Every number in this package is either a ``fractions.Fraction`` (kept in
lowest terms with positive denominator by the stdlib) or a :class:`QuadExt`
value ``p + q*sqrt(disc)`` with rational ``p``, ``q`` and a fixed non-square
integer ``disc``.  Floating point never appears anywhere.
"""

from __future__ import annotations

import math
import re
from fractions import Fraction

__all__ = [
    "Rational",
    "QuadExt",
    "quad",
    "parse_rational",
    "format_rational",
    "split_square",
]

# The canonical exact rational type.  ``Fraction`` already guarantees lowest
# terms and a positive denominator, which is exactly the contract we need.
Rational = Fraction

_RAT_RE = re.compile(r"([+-]?\d+)(?:\s*/\s*(-?\d+))?\Z")


def parse_rational(text: str) -> Fraction:
    """Parse ``p/q`` or an integer literal.  Decimal/float forms are rejected."""
    m = _RAT_RE.match(text.strip())
    if m is None:
        raise ValueError(f"not an exact rational (use p/q or an integer): {text!r}")
    num = int(m.group(1))
    den = int(m.group(2)) if m.group(2) is not None else 1
    if den == 0:
        raise ValueError(f"zero denominator in rational: {text!r}")
    return Fraction(num, den)


def format_rational(x: Fraction) -> str:
    return str(Fraction(x))


def split_square(n: int, bound: int = 100_000) -> tuple[int, int]:
    """Write ``n = s^2 * r`` with ``r`` square-free (best effort) and return ``(s, r)``.

    Trial division runs up to ``bound``; if a larger square factor remains it is
    left inside ``r``.  That only affects normalisation, never exactness: the
    field Q(sqrt(r)) is the same either way.
    """
    if n == 0:
        return 0, 0
    sign = -1 if n < 0 else 1
    n = abs(n)
    s = 1
    p = 2
    while p * p <= n and p <= bound:
        while n % (p * p) == 0:
            n //= p * p
            s *= p
        p += 1 if p == 2 else 2
    # the remainder may still be a perfect square (one large prime squared)
    r = math.isqrt(n)
    if r * r == n:
        s *= r
        n = 1
    return s, sign * n


class QuadExt:
    """An element ``p + q*sqrt(disc)`` of a quadratic extension of Q.

    Instances always have ``q != 0``; purely rational results collapse back to
    ``Fraction`` (see :func:`quad`), so equality and hashing never straddle the
    two types.  ``disc`` is a fixed non-square integer, negative values
    allowed.  Elements over different discriminants cannot be mixed.
    """

    __slots__ = ("p", "q", "disc")

    def __init__(self, p, q, disc: int):
        p = Fraction(p)
        q = Fraction(q)
        if q == 0:
            raise ValueError("QuadExt requires q != 0; use quad() for general construction")
        if disc == 0 or disc == 1:
            raise ValueError(f"invalid discriminant {disc}")
        object.__setattr__(self, "p", p)
        object.__setattr__(self, "q", q)
        object.__setattr__(self, "disc", disc)

    def __setattr__(self, name, value):
        raise AttributeError("QuadExt is immutable")

    # -- helpers -----------------------------------------------------------

    def _match(self, other):
        """Coerce ``other`` into (p, q) parts over this element's field."""
        if isinstance(other, QuadExt):
            if other.disc != self.disc:
                raise ValueError(
                    f"mixed quadratic fields: sqrt({self.disc}) vs sqrt({other.disc})"
                )
            return other.p, other.q
        if isinstance(other, (int, Fraction)):
            return Fraction(other), Fraction(0)
        return None

    def conjugate(self) -> "QuadExt":
        return QuadExt(self.p, -self.q, self.disc)

    def norm(self) -> Fraction:
        """Field norm ``p^2 - disc*q^2`` (rational, nonzero for nonzero elements)."""
        return self.p * self.p - self.disc * self.q * self.q

    # -- arithmetic --------------------------------------------------------

    def __add__(self, other):
        parts = self._match(other)
        if parts is None:
            return NotImplemented
        op, oq = parts
        return quad(self.p + op, self.q + oq, self.disc)

    __radd__ = __add__

    def __neg__(self):
        return QuadExt(-self.p, -self.q, self.disc)

    def __sub__(self, other):
        parts = self._match(other)
        if parts is None:
            return NotImplemented
        op, oq = parts
        return quad(self.p - op, self.q - oq, self.disc)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        parts = self._match(other)
        if parts is None:
            return NotImplemented
        op, oq = parts
        return quad(
            self.p * op + self.q * oq * self.disc,
            self.p * oq + self.q * op,
            self.disc,
        )

    __rmul__ = __mul__

    def inverse(self) -> "QuadExt":
        n = self.norm()
        if n == 0:
            raise ZeroDivisionError("zero norm in quadratic field inverse")
        return QuadExt(self.p / n, -self.q / n, self.disc)

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            if other == 0:
                raise ZeroDivisionError
            return QuadExt(self.p / other, self.q / other, self.disc)
        if isinstance(other, QuadExt):
            return self * other.inverse()
        return NotImplemented

    def __rtruediv__(self, other):
        inv = self.inverse()
        return inv * other

    def __pow__(self, n: int):
        if n < 0:
            return self.inverse() ** (-n)
        out = Fraction(1)
        base = self
        while n:
            if n & 1:
                out = base * out
            base = base * base
            n >>= 1
        return out

    # -- comparison / formatting ------------------------------------------

    def __eq__(self, other):
        if isinstance(other, QuadExt):
            return (self.p, self.q, self.disc) == (other.p, other.q, other.disc)
        if isinstance(other, (int, Fraction)):
            return False  # q != 0 always
        return NotImplemented

    def __hash__(self):
        return hash((self.p, self.q, self.disc))

    def __bool__(self):
        return True

    def __str__(self):
        root = f"sqrt({self.disc})"
        if self.q == 1:
            qs = root
        elif self.q == -1:
            qs = f"-{root}"
        else:
            qs = f"{self.q}*{root}"
        if self.p == 0:
            return qs
        sign = "-" if self.q < 0 else "+"
        mag = qs.lstrip("-") if self.q < 0 else qs
        return f"{self.p}{sign}{mag}"

    def __repr__(self):
        return f"QuadExt({self.p!r}, {self.q!r}, {self.disc})"


def quad(p, q, disc: int):
    """Construct ``p + q*sqrt(disc)``, collapsing to ``Fraction`` when exact.

    Square parts of ``disc`` are folded into ``q`` so that, for example,
    ``quad(0, 1, 12) == quad(0, 2, 3)``; a perfect-square ``disc`` yields a
    plain rational.
    """
    p = Fraction(p)
    q = Fraction(q)
    if q == 0:
        return p
    s, r = split_square(disc)
    if r == 1:
        return p + q * s
    return QuadExt(p, q * s, r)
