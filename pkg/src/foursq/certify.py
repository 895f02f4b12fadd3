"""Exact perfect-square testing and four-condition verification with certificates."""

from dataclasses import dataclass
from typing import Optional


class DomainError(ValueError):
    """Raised when an argument lies outside an operation's domain."""


# Bit v of a mask is set iff v is a quadratic residue mod the modulus.
# Testing mod 64, 63, 65, 11 rejects about 99% of non-squares before any
# root extraction is attempted.
_QR_MODULI = (64, 63, 65, 11)


def _qr_mask(m: int) -> int:
    mask = 0
    for t in range(m):
        mask |= 1 << (t * t % m)
    return mask


_QR_MASKS = tuple((m, _qr_mask(m)) for m in _QR_MODULI)


def isqrt(v: int) -> int:
    """Floor square root of a nonnegative integer, exact at any size.

    Newton iteration seeded from the bit length: the seed is >= the true
    root, each step decreases until the fixed point, then a downward
    correction guards the boundary.
    """
    if v < 0:
        raise DomainError(f"isqrt of negative value {v}")
    if v < 2:
        return v
    x = 1 << ((v.bit_length() + 1) // 2)
    while True:
        y = (x + v // x) // 2
        if y >= x:
            break
        x = y
    while x * x > v:
        x -= 1
    return x


def passes_qr_masks(v: int) -> bool:
    """Cheap residue pre-filter: False means v is certainly not a square."""
    for m, mask in _QR_MASKS:
        if not (mask >> (v % m)) & 1:
            return False
    return True


def perfect_square_root(v: int) -> Optional[int]:
    """Return the nonnegative root if v is a perfect square, else None."""
    if v < 0:
        return None
    if not passes_qr_masks(v):
        return None
    r = isqrt(v)
    return r if r * r == v else None


@dataclass(frozen=True)
class Certificate:
    """The four nonnegative roots witnessing ab+1, ac+1, bc+1, abc+1 squares."""

    r_ab: int
    r_ac: int
    r_bc: int
    r_abc: int


@dataclass(frozen=True)
class VerifyOutcome:
    ok: bool
    certificate: Optional[Certificate]
    first_failure: Optional[str]  # "ab" | "ac" | "bc" | "abc"
    failing_value: Optional[int]


def verify_four(a: int, b: int, c: int) -> VerifyOutcome:
    """Check ab+1, ac+1, bc+1, abc+1 for squareness, in that fixed order.

    Returns a certificate of the four roots on success, or the first failing
    condition together with the offending non-square value.
    """
    if a < 1 or b < 1 or c < 1:
        raise DomainError(f"verify_four requires positive entries, got ({a}, {b}, {c})")
    roots = []
    for name, v in (("ab", a * b + 1), ("ac", a * c + 1),
                    ("bc", b * c + 1), ("abc", a * b * c + 1)):
        root = perfect_square_root(v)
        if root is None:
            return VerifyOutcome(False, None, name, v)
        roots.append(root)
    return VerifyOutcome(True, Certificate(*roots), None, None)
