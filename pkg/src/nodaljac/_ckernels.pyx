# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True, initializedcheck=False
"""Compiled polynomial kernels over F_p for odd primes p < 2**64.

Drop-in replacement for ``_purekernels``: same function names, same list
conventions (ascending canonical residues, no trailing zeros).

Products go into unsigned 128-bit accumulators. For p < 2**56 reduction is
deferred until a coefficient is needed (at most 2**15 terms per
accumulator); otherwise every accumulation is reduced immediately.
"""

from libc.stdint cimport uint64_t
from libc.stdlib cimport malloc, free

cdef extern from *:
    """
    typedef unsigned __int128 nj_u128;
    """
    ctypedef unsigned long long nj_u128

cdef uint64_t LAZY_P_BOUND = (<uint64_t>1) << 56
cdef Py_ssize_t LAZY_MAX_TERMS = 1 << 15


cdef inline bint _lazy(uint64_t p, Py_ssize_t n) noexcept nogil:
    return p < LAZY_P_BOUND and n < LAZY_MAX_TERMS


cdef inline uint64_t _mulred(uint64_t a, uint64_t b, uint64_t p) noexcept nogil:
    return <uint64_t>((<nj_u128>a * b) % p)


cdef uint64_t _inv(uint64_t a, uint64_t p) noexcept nogil:
    # p is prime, so a**(p-2) is the inverse
    cdef uint64_t r = 1, e = p - 2
    while e:
        if e & 1:
            r = _mulred(r, a, p)
        a = _mulred(a, a, p)
        e >>= 1
    return r


cdef void* _alloc(Py_ssize_t n, size_t size) except NULL:
    cdef void* ptr = malloc((n if n > 0 else 1) * size)
    if ptr == NULL:
        raise MemoryError()
    return ptr


cdef uint64_t* _load(object seq, Py_ssize_t cap, Py_ssize_t* n) except NULL:
    cdef Py_ssize_t k = len(seq)
    cdef uint64_t* buf = <uint64_t*>_alloc(cap if cap > k else k, sizeof(uint64_t))
    cdef Py_ssize_t i = 0
    try:
        for c in seq:
            buf[i] = c
            i += 1
    except BaseException:
        free(buf)
        raise
    n[0] = k
    return buf


cdef list _store(const uint64_t* buf, Py_ssize_t n):
    return [buf[i] for i in range(n)]


cdef inline Py_ssize_t _trim(const uint64_t* buf, Py_ssize_t n) noexcept nogil:
    while n > 0 and buf[n - 1] == 0:
        n -= 1
    return n


cdef void _mul_acc(const uint64_t* a, Py_ssize_t na, const uint64_t* b, Py_ssize_t nb,
                   nj_u128* acc, uint64_t p, bint lazy) noexcept nogil:
    """acc[0 .. na+nb-2] = a*b, reduced only if not lazy."""
    cdef Py_ssize_t i, j, n = na + nb - 1
    cdef uint64_t ai
    for i in range(n):
        acc[i] = 0
    if lazy:
        for i in range(na):
            ai = a[i]
            if ai:
                for j in range(nb):
                    acc[i + j] += <nj_u128>ai * b[j]
    else:
        for i in range(na):
            ai = a[i]
            if ai:
                for j in range(nb):
                    acc[i + j] = (acc[i + j] + <nj_u128>ai * b[j]) % p


cdef void _sqr_acc(const uint64_t* a, Py_ssize_t na, nj_u128* acc, uint64_t p, bint lazy) noexcept nogil:
    cdef Py_ssize_t i, j, n = 2 * na - 1
    cdef uint64_t ai, ai2
    for i in range(n):
        acc[i] = 0
    if lazy:
        for i in range(na):
            ai = a[i]
            if ai:
                acc[2 * i] += <nj_u128>ai * ai
                ai2 = ai << 1  # < 2**57, fits
                for j in range(i + 1, na):
                    acc[i + j] += <nj_u128>ai2 * a[j]
    else:
        for i in range(na):
            ai = a[i]
            if ai:
                acc[2 * i] = (acc[2 * i] + <nj_u128>ai * ai) % p
                ai2 = ai << 1 if ai < p - ai else ai - (p - ai)
                for j in range(i + 1, na):
                    acc[i + j] = (acc[i + j] + <nj_u128>ai2 * a[j]) % p


cdef Py_ssize_t _reduce_out(const nj_u128* acc, Py_ssize_t n, uint64_t* out, uint64_t p) noexcept nogil:
    cdef Py_ssize_t i
    for i in range(n):
        out[i] = <uint64_t>(acc[i] % p)
    return _trim(out, n)


cdef void _div_acc(nj_u128* r, Py_ssize_t na, const uint64_t* b, Py_ssize_t nb,
                   uint64_t inv, uint64_t* q, uint64_t p, bint lazy) noexcept nogil:
    """Long division in place: afterwards r[0 .. nb-2] holds the remainder
    (unreduced if lazy) and q, when not NULL, the quotient."""
    cdef Py_ssize_t i, j, off, db = nb - 1
    cdef uint64_t c, nc
    i = na - 1
    while i >= db:
        c = <uint64_t>(r[i] % p)
        off = i - db
        if c:
            c = _mulred(c, inv, p)
            nc = p - c
            if lazy:
                for j in range(db):
                    r[off + j] += <nj_u128>nc * b[j]
            else:
                for j in range(db):
                    r[off + j] = (r[off + j] + <nj_u128>nc * b[j]) % p
        if q != NULL:
            q[off] = c
        i -= 1


cdef Py_ssize_t _mulmod(const uint64_t* a, Py_ssize_t na, const uint64_t* b, Py_ssize_t nb,
                        const uint64_t* m, Py_ssize_t nm, uint64_t inv_m,
                        nj_u128* acc, uint64_t* out, uint64_t p, bint lazy) noexcept nogil:
    """out = a*b mod m (a is b selects squaring); returns the trimmed length."""
    cdef Py_ssize_t n
    if na == 0 or nb == 0:
        return 0
    if a == b and na == nb:
        _sqr_acc(a, na, acc, p, lazy)
    else:
        _mul_acc(a, na, b, nb, acc, p, lazy)
    n = na + nb - 1
    if n >= nm:
        _div_acc(acc, n, m, nm, inv_m, NULL, p, lazy)
        n = nm - 1
    return _reduce_out(acc, n, out, p)


cdef Py_ssize_t _sub_mul(uint64_t* dst, Py_ssize_t nd, const uint64_t* q, Py_ssize_t nq,
                         const uint64_t* src, Py_ssize_t ns, nj_u128* acc, uint64_t p,
                         bint lazy) noexcept nogil:
    """dst -= q*src in place; dst must have room for max(nd, nq+ns-1)."""
    cdef Py_ssize_t i, n
    cdef uint64_t c
    if nq == 0 or ns == 0:
        return nd
    n = nq + ns - 1
    _mul_acc(q, nq, src, ns, acc, p, lazy)
    for i in range(nd, n):
        dst[i] = 0
    for i in range(n):
        c = <uint64_t>(acc[i] % p)
        dst[i] = <uint64_t>((<nj_u128>dst[i] + (p - c)) % p)
    return _trim(dst, n if n > nd else nd)


cdef void _scale(uint64_t* a, Py_ssize_t n, uint64_t c, uint64_t p) noexcept nogil:
    cdef Py_ssize_t i
    for i in range(n):
        a[i] = _mulred(a[i], c, p)


def mul(a, b, uint64_t p):
    cdef Py_ssize_t na, nb, n
    cdef uint64_t *A = NULL
    cdef uint64_t *B = NULL
    cdef uint64_t *out = NULL
    cdef nj_u128* acc = NULL
    if not a or not b:
        return []
    try:
        A = _load(a, 0, &na)
        B = _load(b, 0, &nb)
        n = na + nb - 1
        acc = <nj_u128*>_alloc(n, sizeof(nj_u128))
        out = <uint64_t*>_alloc(n, sizeof(uint64_t))
        with nogil:
            _mul_acc(A, na, B, nb, acc, p, _lazy(p, na if na < nb else nb))
            n = _reduce_out(acc, n, out, p)
        return _store(out, n)
    finally:
        free(A); free(B); free(out); free(acc)


def sqr(a, uint64_t p):
    cdef Py_ssize_t na, n
    cdef uint64_t *A = NULL
    cdef uint64_t *out = NULL
    cdef nj_u128* acc = NULL
    if not a:
        return []
    try:
        A = _load(a, 0, &na)
        n = 2 * na - 1
        acc = <nj_u128*>_alloc(n, sizeof(nj_u128))
        out = <uint64_t*>_alloc(n, sizeof(uint64_t))
        with nogil:
            _sqr_acc(A, na, acc, p, _lazy(p, na))
            n = _reduce_out(acc, n, out, p)
        return _store(out, n)
    finally:
        free(A); free(out); free(acc)


def divrem(a, b, uint64_t p):
    cdef Py_ssize_t na, nb, i, nq, nr
    cdef uint64_t *A = NULL
    cdef uint64_t *B = NULL
    cdef uint64_t *Q = NULL
    cdef uint64_t *R = NULL
    cdef nj_u128* acc = NULL
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    if len(a) < len(b):
        return [], list(a)
    try:
        A = _load(a, 0, &na)
        B = _load(b, 0, &nb)
        nq = na - nb + 1
        acc = <nj_u128*>_alloc(na, sizeof(nj_u128))
        Q = <uint64_t*>_alloc(nq, sizeof(uint64_t))
        R = <uint64_t*>_alloc(nb, sizeof(uint64_t))
        with nogil:
            for i in range(na):
                acc[i] = A[i]
            _div_acc(acc, na, B, nb, _inv(B[nb - 1], p), Q, p, _lazy(p, na))
            nr = _reduce_out(acc, nb - 1, R, p)
            nq = _trim(Q, nq)
        return _store(Q, nq), _store(R, nr)
    finally:
        free(A); free(B); free(Q); free(R); free(acc)


def rem(a, b, uint64_t p):
    return divrem(a, b, p)[1]


def mulmod(a, b, m, uint64_t p):
    cdef Py_ssize_t na, nb, nm, n
    cdef uint64_t *A = NULL
    cdef uint64_t *B = NULL
    cdef uint64_t *M = NULL
    cdef uint64_t *out = NULL
    cdef nj_u128* acc = NULL
    if not m:
        raise ZeroDivisionError("polynomial division by zero")
    if not a or not b:
        return []
    try:
        A = _load(a, 0, &na)
        B = _load(b, 0, &nb)
        M = _load(m, 0, &nm)
        n = na + nb - 1
        acc = <nj_u128*>_alloc(n, sizeof(nj_u128))
        out = <uint64_t*>_alloc(n, sizeof(uint64_t))
        with nogil:
            n = _mulmod(A, na, B, nb, M, nm, _inv(M[nm - 1], p), acc, out, p, _lazy(p, 2 * n))
        return _store(out, n)
    finally:
        free(A); free(B); free(M); free(out); free(acc)


def powmod(a, e, m, uint64_t p):
    cdef Py_ssize_t nm, na, nr, nt, i, cap
    cdef uint64_t *M = NULL
    cdef uint64_t *base = NULL
    cdef uint64_t *res = NULL
    cdef uint64_t *tmp = NULL
    cdef uint64_t *swap
    cdef nj_u128* acc = NULL
    cdef uint64_t inv_m
    cdef bint lazy
    if len(m) < 2:
        raise ValueError("modulus polynomial must have degree >= 1")
    if e < 0:
        raise ValueError("exponent must be non-negative")
    base_list = rem(a, m, p)
    try:
        M = _load(m, 0, &nm)
        cap = 2 * nm
        base = _load(base_list, cap, &na)
        res = <uint64_t*>_alloc(cap, sizeof(uint64_t))
        tmp = <uint64_t*>_alloc(cap, sizeof(uint64_t))
        acc = <nj_u128*>_alloc(cap, sizeof(nj_u128))
        inv_m = _inv(M[nm - 1], p)
        lazy = _lazy(p, cap)
        res[0] = 1
        nr = 1
        for i in range(e.bit_length() - 1, -1, -1):
            nt = _mulmod(res, nr, res, nr, M, nm, inv_m, acc, tmp, p, lazy)
            swap = res; res = tmp; tmp = swap; nr = nt
            if (e >> i) & 1:
                nt = _mulmod(res, nr, base, na, M, nm, inv_m, acc, tmp, p, lazy)
                swap = res; res = tmp; tmp = swap; nr = nt
        return _store(res, nr)
    finally:
        free(M); free(base); free(res); free(tmp); free(acc)


cdef Py_ssize_t _euclid(uint64_t** r0, Py_ssize_t* n0, uint64_t** r1, Py_ssize_t* n1,
                        uint64_t** s0, Py_ssize_t* m0, uint64_t** s1, Py_ssize_t* m1,
                        uint64_t** t0, Py_ssize_t* k0, uint64_t** t1, Py_ssize_t* k1,
                        bint track_s, uint64_t* q, nj_u128* acc, uint64_t p, bint lazy) noexcept nogil:
    """Run Euclid to completion, swapping buffers in place."""
    cdef Py_ssize_t i, nq, na, nb
    cdef uint64_t* sw
    cdef Py_ssize_t sn
    while n1[0] > 0:
        na = n0[0]
        nb = n1[0]
        if na >= nb:
            for i in range(na):
                acc[i] = r0[0][i]
            _div_acc(acc, na, r1[0], nb, _inv(r1[0][nb - 1], p), q, p, lazy)
            nq = na - nb + 1
            n0[0] = _reduce_out(acc, nb - 1, r0[0], p)
            if track_s:
                m0[0] = _sub_mul(s0[0], m0[0], q, nq, s1[0], m1[0], acc, p, lazy)
            k0[0] = _sub_mul(t0[0], k0[0], q, nq, t1[0], k1[0], acc, p, lazy)
        sw = r0[0]; r0[0] = r1[0]; r1[0] = sw
        sn = n0[0]; n0[0] = n1[0]; n1[0] = sn
        sw = s0[0]; s0[0] = s1[0]; s1[0] = sw
        sn = m0[0]; m0[0] = m1[0]; m1[0] = sn
        sw = t0[0]; t0[0] = t1[0]; t1[0] = sw
        sn = k0[0]; k0[0] = k1[0]; k1[0] = sn
    return n0[0]


def xgcd(a, b, uint64_t p):
    """Return ``(g, s, t)`` with ``s*a + t*b == g`` and ``g`` monic."""
    cdef Py_ssize_t n0, n1, m0 = 1, m1 = 0, k0 = 0, k1 = 1, cap
    cdef uint64_t *r0 = NULL
    cdef uint64_t *r1 = NULL
    cdef uint64_t *s0 = NULL
    cdef uint64_t *s1 = NULL
    cdef uint64_t *t0 = NULL
    cdef uint64_t *t1 = NULL
    cdef uint64_t *q = NULL
    cdef nj_u128* acc = NULL
    cdef uint64_t inv
    cap = len(a) + len(b) + 2
    try:
        r0 = _load(a, cap, &n0)
        r1 = _load(b, cap, &n1)
        s0 = <uint64_t*>_alloc(cap, sizeof(uint64_t))
        s1 = <uint64_t*>_alloc(cap, sizeof(uint64_t))
        t0 = <uint64_t*>_alloc(cap, sizeof(uint64_t))
        t1 = <uint64_t*>_alloc(cap, sizeof(uint64_t))
        q = <uint64_t*>_alloc(cap, sizeof(uint64_t))
        acc = <nj_u128*>_alloc(2 * cap, sizeof(nj_u128))
        s0[0] = 1
        t1[0] = 1
        with nogil:
            _euclid(&r0, &n0, &r1, &n1, &s0, &m0, &s1, &m1, &t0, &k0, &t1, &k1,
                    True, q, acc, p, _lazy(p, 2 * cap))
            if n0 > 0:
                inv = _inv(r0[n0 - 1], p)
                _scale(r0, n0, inv, p)
                _scale(s0, m0, inv, p)
                _scale(t0, k0, inv, p)
        if n0 == 0:
            return [], [], []
        return _store(r0, n0), _store(s0, m0), _store(t0, k0)
    finally:
        free(r0); free(r1); free(s0); free(s1); free(t0); free(t1); free(q); free(acc)


def invmod(a, m, uint64_t p):
    """Inverse of ``a`` modulo ``m``, or ``None`` when they share a factor."""
    cdef Py_ssize_t n0, n1, m0 = 0, m1 = 0, k0 = 0, k1 = 1, cap
    cdef uint64_t *r0 = NULL
    cdef uint64_t *r1 = NULL
    cdef uint64_t *t0 = NULL
    cdef uint64_t *t1 = NULL
    cdef uint64_t *s0 = NULL
    cdef uint64_t *s1 = NULL
    cdef uint64_t *q = NULL
    cdef nj_u128* acc = NULL
    a_red = rem(a, m, p)
    cap = 2 * len(m) + 2
    try:
        r0 = _load(m, cap, &n0)
        r1 = _load(a_red, cap, &n1)
        t0 = <uint64_t*>_alloc(cap, sizeof(uint64_t))
        t1 = <uint64_t*>_alloc(cap, sizeof(uint64_t))
        q = <uint64_t*>_alloc(cap, sizeof(uint64_t))
        acc = <nj_u128*>_alloc(2 * cap, sizeof(nj_u128))
        t1[0] = 1
        with nogil:
            _euclid(&r0, &n0, &r1, &n1, &s0, &m0, &s1, &m1, &t0, &k0, &t1, &k1,
                    False, q, acc, p, _lazy(p, 2 * cap))
            if n0 == 1:
                _scale(t0, k0, _inv(r0[0], p), p)
        if n0 != 1:
            return None
        return _store(t0, k0)
    finally:
        free(r0); free(r1); free(t0); free(t1); free(q); free(acc)
