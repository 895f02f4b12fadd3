"""Exhaustive census of four-square triples up to a bound.

Strategy: enumerate r upward and factor r^2-1 = (r-1)(r+1) through a
smallest-prime-factor sieve to stream every pair 2 <= a < b <= bound with
ab+1 = r^2.  For each pair, candidates for c come from the congruence
s^2 = ac+1 == 1 (mod a): s walks the square roots of unity mod a, giving
c = (s^2-1)/a directly, and only bc+1 / abc+1 still need square tests
(mask-filtered).  A compiled kernel covers the same loop for bounds whose
arithmetic fits in 64 bits; the pure-Python path is the fallback and the
reference for it.

`brute_oracle` is the deliberately dumb cross-check: double pair loop plus a
full scan of c, never sharing code with the fast path.
"""

import math
import os
import time
from dataclasses import dataclass
from multiprocessing import Pool
from typing import Iterator, List, Optional, Tuple

from .certify import Certificate, DomainError, isqrt, perfect_square_root

try:
    from . import _kernel
except ImportError:  # extension not built; pure Python carries the load
    _kernel = None

# Largest bound whose abc+1 (< bound^3) stays below 2^63: past this the
# kernel would overflow, so the arbitrary-precision path takes over.
KERNEL_MAX_BOUND = 1_500_000

ORACLE_MAX_BOUND = 2000

Triple = Tuple[int, int, int, Certificate]


@dataclass(frozen=True)
class SearchStats:
    pairs_scanned: int
    candidates_tested: int
    elapsed: float


@dataclass(frozen=True)
class SearchResult:
    bound: int
    triples: List[Triple]
    stats: SearchStats


def kernel_loaded() -> bool:
    return _kernel is not None


def _use_kernel(bound: int, force_pure: bool) -> bool:
    if force_pure or _kernel is None:
        return False
    if os.environ.get("FOURSQ_PURE"):
        return False
    return bound <= KERNEL_MAX_BOUND


def spf_sieve(limit: int) -> List[int]:
    """spf[i] = smallest prime factor of i, for 0 <= i <= limit."""
    spf = list(range(limit + 1))
    for p in range(2, isqrt(limit) + 1):
        if spf[p] == p:  # p prime
            for m in range(p * p, limit + 1, p):
                if spf[m] == m:
                    spf[m] = p
    return spf


def factorize(n: int, spf: List[int]) -> List[Tuple[int, int]]:
    """Prime factorization via a precomputed sieve; n must be within it."""
    out = []
    while n > 1:
        p = spf[n]
        e = 0
        while n % p == 0:
            n //= p
            e += 1
        out.append((p, e))
    return out


def _merge_factors(f1, f2) -> List[Tuple[int, int]]:
    merged = dict(f1)
    for p, e in f2:
        merged[p] = merged.get(p, 0) + e
    return sorted(merged.items())


def divisors(factors: List[Tuple[int, int]]) -> List[int]:
    divs = [1]
    for p, e in factors:
        pk = 1
        grown = []
        for _ in range(e):
            pk *= p
            grown.extend(d * pk for d in divs)
        divs.extend(grown)
    return divs


def unit_square_roots(m: int, spf: List[int]) -> Tuple[int, ...]:
    """All t in [0, m) with t^2 == 1 (mod m), by CRT over prime powers."""
    if m == 1:
        return (0,)
    roots = [(0, 1)]  # (residue, modulus so far)
    for p, e in factorize(m, spf):
        pe = p ** e
        if p != 2:
            local = (1, pe - 1)
        elif e == 1:
            local = (1,)
        elif e == 2:
            local = (1, 3)
        else:
            half = pe // 2
            local = (1, half - 1, half + 1, pe - 1)
        new_roots = []
        for res, mod in roots:
            # CRT: z == res (mod mod) and z == l (mod pe)
            inv = pow(mod, -1, pe)
            for l in local:
                z = res + mod * ((l - res) * inv % pe)
                new_roots.append((z % (mod * pe), mod * pe))
        roots = new_roots
    return tuple(sorted(z for z, _ in roots))


def find_pairs(bound: int, spf: Optional[List[int]] = None,
               r_lo: int = 3, r_hi: Optional[int] = None
               ) -> Iterator[Tuple[int, int, int]]:
    """Yield every (a, b, r) with 2 <= a < b <= bound and ab+1 = r^2,
    ordered by r and then by a."""
    if bound < 3:
        raise DomainError(f"pair enumeration needs bound >= 3, got {bound}")
    if r_hi is None:
        r_hi = isqrt(bound * (bound - 1) + 1) + 1
    if spf is None:
        spf = spf_sieve(max(r_hi, 3))
    for r in range(r_lo, r_hi):
        n = r * r - 1
        factors = _merge_factors(factorize(r - 1, spf), factorize(r + 1, spf))
        small = [d for d in divisors(factors) if d * d < n]
        small.sort()
        for a in small:
            if a < 2:
                continue
            b = n // a
            if b <= bound:
                yield a, b, r


def _census_chunk_py(bound: int, r_lo: int, r_hi: int,
                     spf: Optional[List[int]] = None
                     ) -> Tuple[List[Tuple[int, ...]], int, int]:
    """Scan pairs with r in [r_lo, r_hi); return raw triples and counters.

    Raw triples are (a, b, c, r_ab, r_ac, r_bc, r_abc) tuples, matching the
    compiled kernel's output exactly.
    """
    if spf is None:
        spf = spf_sieve(max(r_hi, bound + 1, 3))
    found = []
    pairs = 0
    candidates = 0
    roots_cache: dict = {}
    for a, b, r in find_pairs(bound, spf, r_lo, r_hi):
        pairs += 1
        s_max = isqrt(a * bound + 1)
        if s_max <= r:
            continue
        roots = roots_cache.get(a)
        if roots is None:
            roots = unit_square_roots(a, spf)
            roots_cache[a] = roots
        for rho in roots:
            # first s > r with s == rho (mod a); s > r forces c > b
            s = r + 1 + (rho - r - 1) % a
            while s <= s_max:
                candidates += 1
                c = (s * s - 1) // a
                if c > bound:
                    break
                t = perfect_square_root(b * c + 1)
                if t is not None:
                    u = perfect_square_root(a * b * c + 1)
                    if u is not None:
                        found.append((a, b, c, r, s, t, u))
                s += a
    return found, pairs, candidates


def _chunk_worker(args) -> Tuple[List[Tuple[int, ...]], int, int]:
    bound, r_lo, r_hi, force_pure = args
    if _use_kernel(bound, force_pure):
        return _kernel.census_chunk(bound, r_lo, r_hi)
    return _census_chunk_py(bound, r_lo, r_hi)


def search_triples(bound: int, jobs: int = 1,
                   force_pure: bool = False) -> SearchResult:
    """Every (a, b, c) with 1 < a < b < c <= bound and all four of ab+1,
    ac+1, bc+1, abc+1 perfect squares, sorted by (c, b, a) with certificates.

    Deterministic regardless of `jobs`: workers cover disjoint r-ranges and
    the merged output is sorted and deduplicated.
    """
    if bound < 3:
        raise DomainError(f"search needs bound >= 3, got {bound}")
    if jobs < 1:
        raise DomainError(f"jobs must be >= 1, got {jobs}")
    start = time.monotonic()
    r_max = isqrt(bound * (bound - 1) + 1) + 1
    if jobs == 1:
        chunks = [(bound, 3, r_max, force_pure)]
        results = [_chunk_worker(chunks[0])]
    else:
        n_chunks = 4 * jobs
        step = max(1, (r_max - 3 + n_chunks - 1) // n_chunks)
        chunks = [(bound, lo, min(lo + step, r_max), force_pure)
                  for lo in range(3, r_max, step)]
        with Pool(jobs) as pool:
            results = pool.map(_chunk_worker, chunks)
    raw = []
    pairs = candidates = 0
    for found, p, cand in results:
        raw.extend(found)
        pairs += p
        candidates += cand
    raw.sort(key=lambda t: (t[2], t[1], t[0]))
    triples: List[Triple] = []
    for a, b, c, r_ab, r_ac, r_bc, r_abc in raw:
        if triples and triples[-1][:3] == (a, b, c):
            continue
        triples.append((a, b, c, Certificate(r_ab, r_ac, r_bc, r_abc)))
    elapsed = time.monotonic() - start
    return SearchResult(bound, triples, SearchStats(pairs, candidates, elapsed))


def brute_oracle(bound: int) -> SearchResult:
    """Reference census by the dumbest correct method: double pair loop with
    stdlib isqrt, then a full scan over c.  Capped so it stays obviously
    correct and tolerably slow."""
    if bound < 3:
        raise DomainError(f"oracle needs bound >= 3, got {bound}")
    if bound > ORACLE_MAX_BOUND:
        raise DomainError(
            f"oracle capped at {ORACLE_MAX_BOUND} (got {bound}); "
            f"use search_triples for larger bounds")
    start = time.monotonic()
    isq = math.isqrt
    triples: List[Triple] = []
    pairs = 0
    candidates = 0
    for a in range(2, bound + 1):
        for b in range(a + 1, bound + 1):
            ab1 = a * b + 1
            r = isq(ab1)
            if r * r != ab1:
                continue
            pairs += 1
            for c in range(b + 1, bound + 1):
                candidates += 1
                ac1 = a * c + 1
                s = isq(ac1)
                if s * s != ac1:
                    continue
                bc1 = b * c + 1
                t = isq(bc1)
                if t * t != bc1:
                    continue
                abc1 = a * b * c + 1
                u = isq(abc1)
                if u * u == abc1:
                    triples.append((a, b, c, Certificate(r, s, t, u)))
    triples.sort(key=lambda t: (t[2], t[1], t[0]))
    elapsed = time.monotonic() - start
    return SearchResult(bound, triples, SearchStats(pairs, candidates, elapsed))
