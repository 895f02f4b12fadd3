"""Closed-form construction of four-square triples.

Two parametrized families indexed by n (through the conic point
(x, y) = (P(n+1), P(n))):

* the main family, whose a, r, b, c, s come from the polynomial tables in
  `forms` and for which abc+1 = s^2 holds identically, and
* the companion family r = A(n)^2 R(n-1) - A(n-1) - 2, observed to produce
  four-square triples but carrying no algebraic guarantee for abc+1.

Plus the two elementary constructions: completing a pair (a, b) with
ab+1 = r^2 to c = a + b + 2r, and the degenerate a=1 family b = k^2-1,
c = (k+1)^2 - 1.
"""

from dataclasses import dataclass
from typing import Optional

from . import forms
from .certify import Certificate, DomainError, perfect_square_root
from .sequences import ConicPoint, conic_point, seq_A, seq_R

__all__ = [
    "TripleCandidate", "Certificate", "NotDiophantinePair", "ConstructionError",
    "poly_a", "poly_r", "poly_b", "poly_c", "poly_s",
    "make_main", "make_companion", "recurrence_r",
    "regular_complete", "degenerate_family",
]


class NotDiophantinePair(ValueError):
    """ab+1 is not a perfect square, so (a, b) cannot be completed."""


class ConstructionError(RuntimeError):
    """A construction's internal consistency check failed."""


@dataclass(frozen=True)
class TripleCandidate:
    """One family member with all intermediate values.

    Inadmissible candidates (an entry <= 1 or a collision) are returned
    flagged rather than rejected: negative indices legitimately produce them.
    s is the nonnegative root of abc+1 when that is a perfect square.
    """

    n: int
    variant: str  # "main" | "companion" | "external"
    x: int
    y: int
    a: int
    r: int
    b: int
    c: int
    s: Optional[int]
    admissible: bool

    def certificate(self) -> Optional[Certificate]:
        """The four square roots, when abc+1 is a square."""
        if self.s is None:
            return None
        return Certificate(abs(self.r), abs(self.a + self.r),
                           abs(self.b + self.r), self.s)


def _eval_int(table: dict, pt: ConicPoint, what: str) -> int:
    v = forms.evaluate(table, pt.x, pt.y)
    if v.denominator != 1:
        raise ConstructionError(
            f"{what} evaluated to non-integer {v} at ({pt.x}, {pt.y}); "
            f"point is off the conic")
    return int(v)


def poly_a(pt: ConicPoint) -> int:
    """a = 5x^2 - 12xy + 8y^2; equals (x+2y)^2 + 4 on the conic."""
    return _eval_int(forms.ELEM_A, pt, "a")


def poly_r(pt: ConicPoint) -> int:
    """The cubic form for r (root of ab+1); integral on the conic."""
    return _eval_int(forms.ROOT_R, pt, "r")


def poly_b(pt: ConicPoint) -> int:
    return _eval_int(forms.ELEM_B, pt, "b")


def poly_c(pt: ConicPoint) -> int:
    return _eval_int(forms.ELEM_C, pt, "c")


def poly_s(pt: ConicPoint) -> int:
    """Nonnegative root of abc+1; the quintic form may go negative on the
    negative branch, so the absolute value is taken."""
    return abs(_eval_int(forms.ROOT_S, pt, "s"))


def _admissible(a: int, b: int, c: int) -> bool:
    return a > 1 and b > 1 and c > 1 and a != b and a != c and b != c


def make_main(n: int) -> TripleCandidate:
    """Evaluate the proved family at index n, with every invariant checked."""
    pt = conic_point(n)
    a, r, b, c = poly_a(pt), poly_r(pt), poly_b(pt), poly_c(pt)
    s = poly_s(pt)
    assert a * b + 1 == r * r
    assert b * a == r * r - 1 and b == (r * r - 1) // a
    assert c == a + b + 2 * r
    assert a * c + 1 == (a + r) ** 2
    assert b * c + 1 == (b + r) ** 2
    assert a * b * c + 1 == s * s
    return TripleCandidate(n=n, variant="main", x=pt.x, y=pt.y,
                           a=a, r=r, b=b, c=c, s=s,
                           admissible=_admissible(a, b, c))


def make_companion(n: int) -> TripleCandidate:
    """Evaluate the companion family at index n.

    a = A(n)^2 + 4 must divide r^2 - 1; that holds for every index tried but
    is not a proved fact, so violation raises rather than silently truncating.
    abc+1 is tested numerically and s left unset when it is not a square.
    """
    pt = conic_point(n)
    A = seq_A(n)
    a = A * A + 4
    r = A * A * seq_R(n - 1) - seq_A(n - 1) - 2
    if (r * r - 1) % a:
        raise ConstructionError(
            f"companion index {n}: a={a} does not divide r^2-1 (r={r})")
    b = (r * r - 1) // a
    c = a + b + 2 * r
    s = perfect_square_root(a * b * c + 1)
    return TripleCandidate(n=n, variant="companion", x=pt.x, y=pt.y,
                           a=a, r=r, b=b, c=c, s=s,
                           admissible=_admissible(a, b, c))


def recurrence_r(n: int) -> int:
    """r = A(n)^2 R(n) + A(n+1) - 2, the recurrence presentation of poly_r."""
    A = seq_A(n)
    return A * A * seq_R(n) + seq_A(n + 1) - 2


def regular_complete(a: int, b: int) -> tuple:
    """Complete a pair with ab+1 = r^2 to the regular triple (a, b, a+b+2r).

    Returns (c, r).  The completion automatically makes ac+1 = (a+r)^2 and
    bc+1 = (b+r)^2.
    """
    if a < 1 or b < 1:
        raise DomainError(f"regular_complete requires a, b >= 1, got ({a}, {b})")
    r = perfect_square_root(a * b + 1)
    if r is None:
        raise NotDiophantinePair(f"{a}*{b}+1 = {a * b + 1} is not a perfect square")
    c = a + b + 2 * r
    assert a * c + 1 == (a + r) ** 2 and b * c + 1 == (b + r) ** 2
    return c, r


def degenerate_family(k: int) -> tuple:
    """b = k^2 - 1, c = (k+1)^2 - 1: with a = 1 the four conditions collapse
    to three, and {1, b, c} satisfies all of them for every k >= 2."""
    if k < 2:
        raise DomainError(f"degenerate family needs k >= 2, got {k}")
    b = k * k - 1
    c = (k + 1) ** 2 - 1
    assert perfect_square_root(b + 1) is not None
    assert perfect_square_root(c + 1) is not None
    assert perfect_square_root(b * c + 1) is not None
    return b, c
