"""Two-sided evaluation of the linear recurrences P, A, R with exact cross-checks.

All three sequences satisfy s(n) = 4*s(n-1) - s(n-2) (+1 for R) and extend to
negative indices by running the recurrence backwards.  Values are kept signed;
A(-1) = -2, A(-2) = -9, ... even though tables of the negative branch are often
quoted unsigned.
"""

from dataclasses import dataclass


@dataclass(frozen=True)
class ConicPoint:
    """Integer point (x, y) with x^2 - 4xy + y^2 = 1, the family parameter."""

    x: int
    y: int

    def __post_init__(self):
        q = self.x * self.x - 4 * self.x * self.y + self.y * self.y
        if q != 1:
            raise ValueError(f"({self.x}, {self.y}) is not on x^2-4xy+y^2=1 (got {q})")


@dataclass(frozen=True)
class PellNumber:
    """u + v*sqrt(3); powers of 2+sqrt(3) have unit norm u^2 - 3v^2 = 1."""

    u: int
    v: int


def _linear(n: int, s0: int, s1: int, add: int = 0) -> int:
    """Value at index n of s(k+1) = 4 s(k) - s(k-1) + add, run in either direction."""
    if n == 0:
        return s0
    if n > 0:
        lo, hi = s0, s1
        for _ in range(n - 1):
            lo, hi = hi, 4 * hi - lo + add
        return hi
    # backwards: s(k-1) = 4 s(k) - s(k+1) + add
    lo, hi = s0, s1
    for _ in range(-n):
        lo, hi = 4 * lo - hi + add, lo
    return lo


def pell_P(n: int) -> int:
    """P(0)=0, P(1)=1, P(n) = 4P(n-1) - P(n-2); odd under negation."""
    return _linear(n, 0, 1)


def seq_A(n: int) -> int:
    """A(0)=1, A(1)=6, A(n+1) = 4A(n) - A(n-1)."""
    return _linear(n, 1, 6)


def seq_R(n: int) -> int:
    """R(0)=2, R(1)=8, R(n) = 4R(n-1) - R(n-2) + 1."""
    return _linear(n, 2, 8, add=1)


_BASES = {"P": (0, 1, 0), "A": (1, 6, 0), "R": (2, 8, 1)}


def sequence_values(name: str, lo: int, hi: int) -> list:
    """Values of sequence `name` over lo..hi inclusive, in one linear sweep."""
    if name not in _BASES:
        raise ValueError(f"unknown sequence {name!r}; expected one of P, A, R")
    if lo > hi:
        raise ValueError(f"empty index range {lo}..{hi}")
    s0, s1, add = _BASES[name]
    prev, cur = _linear(lo - 1, s0, s1, add), _linear(lo, s0, s1, add)
    out = [cur]
    for _ in range(hi - lo):
        prev, cur = cur, 4 * cur - prev + add
        out.append(cur)
    return out


def conic_point(n: int) -> ConicPoint:
    """The point (P(n+1), P(n)); consecutive P values always land on the conic."""
    return ConicPoint(pell_P(n + 1), pell_P(n))


def binet_exact(n: int) -> PellNumber:
    """(2+sqrt(3))^n as u + v*sqrt(3), by binary exponentiation over Z[sqrt(3)].

    Negative n uses the inverse 2-sqrt(3).  The v component reproduces
    pell_P(n), which gives an evaluation route independent of the recurrence.
    """
    if n < 0:
        base_u, base_v = 2, -1
        n = -n
    else:
        base_u, base_v = 2, 1
    u, v = 1, 0
    while n:
        if n & 1:
            u, v = u * base_u + 3 * v * base_v, u * base_v + v * base_u
        base_u, base_v = (base_u * base_u + 3 * base_v * base_v,
                          2 * base_u * base_v)
        n >>= 1
    return PellNumber(u, v)
