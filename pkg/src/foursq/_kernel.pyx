# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled census kernel: same pair/congruence scan as the pure path in
`search`, restricted to bounds whose arithmetic fits in 64 bits.

Must return byte-identical triples and counters to
`search._census_chunk_py`; the test suite enforces that equality.
"""

from libc.stdlib cimport free, malloc
from libc.math cimport sqrtl

ctypedef unsigned long long u64
ctypedef unsigned int u32

# abc+1 < bound^3 must stay below 2^63; keep in sync with search.KERNEL_MAX_BOUND.
DEF MAX_BOUND = 1_500_000
DEF MAX_FACTORS = 16
DEF MAX_ROOTS = 512
DEF MAX_DIVISORS = 16384

cdef u64 _QR64_MASK = 0
cdef unsigned char _QR63[63]
cdef unsigned char _QR65[65]
cdef unsigned char _QR11[11]


cdef void _init_masks() noexcept:
    global _QR64_MASK
    cdef int t
    for t in range(64):
        _QR64_MASK |= (<u64>1) << ((t * t) & 63)
    for t in range(63):
        _QR63[(t * t) % 63] = 1
    for t in range(65):
        _QR65[(t * t) % 65] = 1
    for t in range(11):
        _QR11[(t * t) % 11] = 1

_init_masks()


cdef inline u64 _isqrt(u64 v) noexcept:
    cdef u64 x = <u64>sqrtl(<long double>v)
    while x > 0 and x * x > v:
        x -= 1
    while (x + 1) * (x + 1) <= v:
        x += 1
    return x


cdef inline bint _square_root(u64 v, u64 *root) noexcept:
    """Mask-filtered exact square test; writes the root on success."""
    if not (_QR64_MASK >> (v & 63)) & 1:
        return False
    if not _QR63[v % 63]:
        return False
    if not _QR65[v % 65]:
        return False
    if not _QR11[v % 11]:
        return False
    cdef u64 x = _isqrt(v)
    if x * x == v:
        root[0] = x
        return True
    return False


cdef u32 *_build_spf(u64 limit) noexcept:
    cdef u32 *spf = <u32 *>malloc((limit + 1) * sizeof(u32))
    if spf == NULL:
        return NULL
    cdef u64 i, p, m
    for i in range(limit + 1):
        spf[i] = <u32>i
    p = 2
    while p * p <= limit:
        if spf[p] == p:
            m = p * p
            while m <= limit:
                if spf[m] == m:
                    spf[m] = <u32>p
                m += p
        p += 1
    return spf


cdef int _factor_into(u64 n, u32 *spf, u64 *primes, int *exps) noexcept:
    """Factor n (within the sieve) into ascending prime slots; returns count."""
    cdef int k = 0
    cdef u64 p
    while n > 1:
        p = spf[n]
        primes[k] = p
        exps[k] = 0
        while n % p == 0:
            n //= p
            exps[k] += 1
        k += 1
    return k


cdef int _merge_factors(u64 *p1, int *e1, int k1, u64 *p2, int *e2, int k2,
                        u64 *po, int *eo) noexcept:
    cdef int i = 0, j = 0, k = 0
    while i < k1 or j < k2:
        if j >= k2 or (i < k1 and p1[i] < p2[j]):
            po[k] = p1[i]; eo[k] = e1[i]; i += 1
        elif i >= k1 or p2[j] < p1[i]:
            po[k] = p2[j]; eo[k] = e2[j]; j += 1
        else:
            po[k] = p1[i]; eo[k] = e1[i] + e2[j]; i += 1; j += 1
        k += 1
    return k


cdef long long _inv_mod(long long x, long long m) noexcept:
    cdef long long t = 0, newt = 1, r = m, newr = x % m, q, tmp
    while newr != 0:
        q = r // newr
        tmp = t - q * newt; t = newt; newt = tmp
        tmp = r - q * newr; r = newr; newr = tmp
    if t < 0:
        t += m
    return t


cdef int _unit_roots(u64 a, u32 *spf, u64 *out) noexcept:
    """All t in [0, a) with t*t % a == 1, via CRT over the prime powers of a."""
    cdef u64 primes[MAX_FACTORS]
    cdef int exps[MAX_FACTORS]
    cdef u64 local[4]
    cdef u64 work[MAX_ROOTS]
    cdef int nf, fi, e, nlocal, nout, li, oi, k
    cdef u64 p, pe, mod, inv, res, d, half

    if a == 1:
        out[0] = 0
        return 1
    nf = _factor_into(a, spf, primes, exps)
    nout = 1
    out[0] = 0
    mod = 1
    for fi in range(nf):
        p = primes[fi]
        pe = 1
        for e in range(exps[fi]):
            pe *= p
        if p != 2:
            local[0] = 1; local[1] = pe - 1; nlocal = 2
        elif pe == 2:
            local[0] = 1; nlocal = 1
        elif pe == 4:
            local[0] = 1; local[1] = 3; nlocal = 2
        else:
            half = pe // 2
            local[0] = 1; local[1] = half - 1
            local[2] = half + 1; local[3] = pe - 1
            nlocal = 4
        inv = <u64>_inv_mod(<long long>(mod % pe), <long long>pe)
        k = 0
        for oi in range(nout):
            res = out[oi]
            for li in range(nlocal):
                d = (local[li] + pe - res % pe) % pe
                work[k] = res + mod * (d * inv % pe)
                k += 1
        for oi in range(k):
            out[oi] = work[oi]
        nout = k
        mod *= pe
    return nout


def census_chunk(object bound_obj, object r_lo_obj, object r_hi_obj):
    """Scan pair radicals r in [r_lo, r_hi); return (raw_triples, pairs, candidates).

    Raw triples are (a, b, c, r_ab, r_ac, r_bc, r_abc) tuples sorted however
    the scan finds them; the caller owns ordering and deduplication.
    """
    cdef u64 bound = bound_obj
    cdef u64 r_lo = r_lo_obj
    cdef u64 r_hi = r_hi_obj
    if bound > MAX_BOUND:
        raise ValueError(f"kernel bound cap is {MAX_BOUND}, got {bound}")
    if bound < 3:
        raise ValueError(f"bound must be >= 3, got {bound}")
    if r_lo < 3:
        r_lo = 3

    cdef u64 limit = bound + 2
    cdef u32 *spf = _build_spf(limit)
    if spf == NULL:
        raise MemoryError("smallest-prime-factor sieve allocation failed")
    cdef u64 *divs = <u64 *>malloc(MAX_DIVISORS * sizeof(u64))
    if divs == NULL:
        free(spf)
        raise MemoryError("divisor workspace allocation failed")

    cdef u64 p1[MAX_FACTORS]
    cdef u64 p2[MAX_FACTORS]
    cdef u64 pm[2 * MAX_FACTORS]
    cdef int e1[MAX_FACTORS]
    cdef int e2[MAX_FACTORS]
    cdef int em[2 * MAX_FACTORS]
    cdef u64 roots[MAX_ROOTS]

    cdef list found = []
    cdef u64 pairs = 0, candidates = 0
    cdef u64 r, n, a, b, c, s, s_max, pk, v, w, t_root, u_root, rho
    cdef int k1, k2, km, nd, nd_new, fi, e, di, nroots, ri

    try:
        for r in range(r_lo, r_hi):
            n = r * r - 1
            k1 = _factor_into(r - 1, spf, p1, e1)
            k2 = _factor_into(r + 1, spf, p2, e2)
            km = _merge_factors(p1, e1, k1, p2, e2, k2, pm, em)

            # divisors of n from the merged factorization
            nd = 1
            divs[0] = 1
            for fi in range(km):
                pk = 1
                nd_new = nd
                for e in range(em[fi]):
                    pk *= pm[fi]
                    for di in range(nd):
                        divs[nd_new] = divs[di] * pk
                        nd_new += 1
                nd = nd_new

            for di in range(nd):
                a = divs[di]
                if a < 2 or a * a >= n:
                    continue
                b = n // a
                if b > bound:
                    continue
                pairs += 1
                s_max = _isqrt(a * bound + 1)
                if s_max <= r:
                    continue
                nroots = _unit_roots(a, spf, roots)
                for ri in range(nroots):
                    rho = roots[ri]
                    s = r + 1 + (rho + a - (r + 1) % a) % a
                    while s <= s_max:
                        candidates += 1
                        c = (s * s - 1) // a
                        v = b * c + 1
                        if _square_root(v, &t_root):
                            w = a * b * c + 1
                            if _square_root(w, &u_root):
                                found.append((a, b, c, r, s, t_root, u_root))
                        s += a
    finally:
        free(divs)
        free(spf)
    return found, pairs, candidates
