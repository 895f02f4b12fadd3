"""Exact bivariate polynomial arithmetic and canonical reduction modulo the
conic relation x^2 - 4xy + y^2 = 1.

The relation is monic of degree 2 in x, so the quotient ring is a free
rank-2 module over Q[y] with basis {1, x}: every polynomial has a unique
normal form c0(y) + c1(y)*x, and two polynomials agree on the conic iff
their normal forms are equal.  `prove_identities` uses this to machine-check
the entire identity chain behind the main family, ending in abc+1 = s^2.
"""

from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, List, Optional, Tuple

from . import forms

Monomial = Tuple[int, int]  # (x_degree, y_degree)


class BiPoly:
    """Bivariate polynomial over exact rationals, stored sparsely.

    Terms map (x_degree, y_degree) to a nonzero Fraction; the zero polynomial
    has no terms, which makes the representation canonical.
    """

    __slots__ = ("terms",)

    def __init__(self, terms: Optional[Dict[Monomial, Fraction]] = None):
        self.terms: Dict[Monomial, Fraction] = {}
        if terms:
            for mono, coef in terms.items():
                coef = Fraction(coef)
                if coef:
                    self.terms[mono] = coef

    @classmethod
    def x(cls) -> "BiPoly":
        return cls({(1, 0): Fraction(1)})

    @classmethod
    def y(cls) -> "BiPoly":
        return cls({(0, 1): Fraction(1)})

    @classmethod
    def const(cls, v) -> "BiPoly":
        return cls({(0, 0): Fraction(v)})

    def is_zero(self) -> bool:
        return not self.terms

    def total_degree(self) -> int:
        return max((i + j for (i, j) in self.terms), default=0)

    def __eq__(self, other) -> bool:
        if isinstance(other, BiPoly):
            return self.terms == other.terms
        return NotImplemented

    def __add__(self, other: "BiPoly") -> "BiPoly":
        out = dict(self.terms)
        for mono, coef in other.terms.items():
            v = out.get(mono, Fraction(0)) + coef
            if v:
                out[mono] = v
            else:
                out.pop(mono, None)
        return BiPoly(out)

    def __neg__(self) -> "BiPoly":
        return BiPoly({m: -c for m, c in self.terms.items()})

    def __sub__(self, other: "BiPoly") -> "BiPoly":
        return self + (-other)

    def __mul__(self, other) -> "BiPoly":
        if isinstance(other, BiPoly):
            out: Dict[Monomial, Fraction] = {}
            for (i1, j1), c1 in self.terms.items():
                for (i2, j2), c2 in other.terms.items():
                    mono = (i1 + i2, j1 + j2)
                    v = out.get(mono, Fraction(0)) + c1 * c2
                    if v:
                        out[mono] = v
                    else:
                        out.pop(mono, None)
            return BiPoly(out)
        return self.scale(other)

    __rmul__ = __mul__

    def scale(self, q) -> "BiPoly":
        q = Fraction(q)
        return BiPoly({m: c * q for m, c in self.terms.items()})

    def __pow__(self, k: int) -> "BiPoly":
        if not isinstance(k, int) or k < 0:
            raise ValueError(f"power must be a nonnegative integer, got {k}")
        result = BiPoly.const(1)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def evaluate(self, x, y) -> Fraction:
        return sum((c * Fraction(x) ** i * Fraction(y) ** j
                    for (i, j), c in self.terms.items()), start=Fraction(0))

    def __repr__(self) -> str:
        if not self.terms:
            return "BiPoly(0)"
        parts = []
        for (i, j) in sorted(self.terms, key=lambda m: (-(m[0] + m[1]), -m[0])):
            c = self.terms[(i, j)]
            mono = "".join((f"x^{i}" if i > 1 else "x" * i,
                            f"y^{j}" if j > 1 else "y" * j))
            parts.append(f"{c}{'*' if mono else ''}{mono}")
        return "BiPoly(" + " + ".join(parts) + ")"

    @classmethod
    def from_table(cls, table: dict) -> "BiPoly":
        return cls({m: Fraction(c) for m, c in table.items()})


_YPoly = Tuple[Tuple[int, Fraction], ...]  # sorted ((y_degree, coeff), ...)


def _ypoly(d: Dict[int, Fraction]) -> _YPoly:
    return tuple(sorted((j, c) for j, c in d.items() if c))


@dataclass(frozen=True)
class NormalForm:
    """Canonical residue c0(y) + c1(y)*x modulo the conic relation."""

    c0: _YPoly
    c1: _YPoly

    def is_zero(self) -> bool:
        return not self.c0 and not self.c1

    def lift(self) -> BiPoly:
        terms = {(0, j): c for j, c in self.c0}
        terms.update({(1, j): c for j, c in self.c1})
        return BiPoly(terms)

    def evaluate(self, x, y) -> Fraction:
        return self.lift().evaluate(x, y)


def reduce(p: BiPoly) -> NormalForm:
    """Rewrite x^2 -> 4xy - y^2 + 1 until the x-degree is at most 1.

    Equivalent to division by x^2 - 4y*x + (y^2 - 1), monic in x, so the
    result is the unique representative in the quotient and `reduce` is a
    ring homomorphism onto it.
    """
    max_i = max((i for (i, _) in p.terms), default=0)
    cols: List[Dict[int, Fraction]] = [{} for _ in range(max_i + 1)]
    for (i, j), c in p.terms.items():
        cols[i][j] = cols[i].get(j, Fraction(0)) + c
    for i in range(max_i, 1, -1):
        col = cols[i]
        if not col:
            continue
        down1, down2 = cols[i - 1], cols[i - 2]
        for j, c in col.items():
            if not c:
                continue
            down1[j + 1] = down1.get(j + 1, Fraction(0)) + 4 * c
            down2[j + 2] = down2.get(j + 2, Fraction(0)) - c
            down2[j] = down2.get(j, Fraction(0)) + c
        cols[i] = {}
    return NormalForm(_ypoly(cols[0]), _ypoly(cols[1] if max_i >= 1 else {}))


@dataclass(frozen=True)
class IdentityResult:
    name: str
    description: str
    passed: bool
    residual: Optional[NormalForm]  # set on failure for diagnosis
    note: str = ""


@dataclass(frozen=True)
class IdentityReport:
    items: Tuple[IdentityResult, ...]

    @property
    def core_ok(self) -> bool:
        """True when I1..I8, the proof chain proper, all reduced to zero."""
        return all(it.passed for it in self.items if it.name in _CORE_ITEMS)

    def __getitem__(self, name: str) -> IdentityResult:
        for it in self.items:
            if it.name == name:
                return it
        raise KeyError(name)


_CORE_ITEMS = frozenset(f"I{k}" for k in range(1, 9))


def _build_polys(table_overrides: Optional[dict] = None) -> dict:
    """The transcribed forms as BiPolys; overrides support mutation testing."""
    src = {
        "a": forms.ELEM_A, "r": forms.ROOT_R, "b": forms.ELEM_B,
        "c": forms.ELEM_C, "s": forms.ROOT_S, "conic": forms.CONIC_FORM,
        "A": forms.A_FORM, "A_next": forms.A_NEXT_FORM,
        "A_prev": forms.A_PREV_FORM, "R2": forms.R2_FORM,
        "R2_prev": forms.R2_PREV_FORM,
        "abc_f0": forms.ABC_FACTORS[0], "abc_f1": forms.ABC_FACTORS[1],
        "abc_f2": forms.ABC_FACTORS[2], "abc_f3": forms.ABC_FACTORS[3],
    }
    if table_overrides:
        src.update(table_overrides)
    return {k: BiPoly.from_table(t) for k, t in src.items()}


def prove_identities(table_overrides: Optional[dict] = None) -> IdentityReport:
    """Machine-check the identity chain for the main family.

    I1-I8 must reduce to zero in the quotient ring; together they prove that
    every conic point yields a, b, c with ab+1, ac+1, bc+1 and abc+1 all
    perfect squares.  I9 probes whether the homogenized abc+1 = s^2 identity
    already holds before reduction; I10 is a numeric consistency check of the
    companion-family root against its linear-form expression.

    `table_overrides` replaces named coefficient tables (see `_build_polys`),
    used to demonstrate that single-coefficient perturbations are caught.
    """
    P = _build_polys(table_overrides)
    one = BiPoly.const(1)
    a, r, b, c, s = P["a"], P["r"], P["b"], P["c"], P["s"]
    abc_quarter = P["abc_f0"] * P["abc_f1"] * P["abc_f2"] * P["abc_f3"]
    abc_factored = Fraction(1, 4) * abc_quarter

    checks = [
        ("I1", "a*b + 1 = r^2", a * b + one - r * r),
        ("I2", "a*c + 1 = (a+r)^2", a * c + one - (a + r) * (a + r)),
        ("I3", "b*c + 1 = (b+r)^2", b * c + one - (b + r) * (b + r)),
        ("I4", "c = a + b + 2r", c - a - b - BiPoly.const(2) * r),
        ("I5", "a = A^2 + 4", a - P["A"] * P["A"] - BiPoly.const(4)),
        ("I6", "2r = A^2*(2R) + 2*A_next - 4",
         BiPoly.const(2) * r - (P["A"] * P["A"] * P["R2"]
                                + BiPoly.const(2) * P["A_next"]
                                - BiPoly.const(4))),
        ("I7", "a*b*c + 1 = s^2", a * b * c + one - s * s),
        ("I8", "a*b*c = (1/4)(3y+8x)*a*cubic*quartic", a * b * c - abc_factored),
    ]

    items = []
    for name, desc, diff in checks:
        nf = reduce(diff)
        items.append(IdentityResult(name, desc, nf.is_zero(),
                                    None if nf.is_zero() else nf))

    # I9: same combination with 1 written as conic^5; every factor is
    # homogeneous of matching degree, so it may vanish identically.
    probe = abc_factored + P["conic"] ** 5 - s * s
    if probe.is_zero():
        items.append(IdentityResult(
            "I9", "homogenized abc+1 = s^2, pre-reduction", True, None,
            note="holds as an exact polynomial identity"))
    else:
        nf = reduce(probe)
        items.append(IdentityResult(
            "I9", "homogenized abc+1 = s^2, pre-reduction", nf.is_zero(),
            None if nf.is_zero() else nf,
            note="holds only after reduction" if nf.is_zero() else ""))

    # I10: companion root, numeric agreement only (no ring claim is made).
    from .family import make_companion
    from .sequences import conic_point

    comp_expr = (P["A"] * P["A"] * P["R2_prev"]
                 - BiPoly.const(2) * P["A_prev"] - BiPoly.const(4))
    mismatches = []
    for n in range(0, 7):
        pt = conic_point(n)
        want = 2 * make_companion(n).r
        got = comp_expr.evaluate(pt.x, pt.y)
        if got != want:
            mismatches.append(n)
    items.append(IdentityResult(
        "I10", "2*r_companion = A^2*(2R_prev) - 2*A_prev - 4 at n=0..6",
        not mismatches, None,
        note=f"mismatch at n={mismatches}" if mismatches else "numeric check"))

    return IdentityReport(tuple(items))
