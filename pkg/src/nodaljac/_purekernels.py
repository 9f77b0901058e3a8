"""Pure-Python polynomial kernels over F_p.

Same contract as the compiled ``_ckernels`` module: polynomials are lists of
canonical residues in ascending order with no trailing zeros (``[]`` is the
zero polynomial). Inputs are never mutated.
"""

_KRONECKER_MIN = 24


def _trim(a):
    while a and a[-1] == 0:
        a.pop()
    return a


def _mul_schoolbook(a, b, p):
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] += ai * bj
    return [c % p for c in out]


def _mul_kronecker(a, b, p):
    # pack into one big integer, let CPython's multiplication do the work
    nbits = 2 * (p - 1).bit_length() + min(len(a), len(b)).bit_length()
    w = (nbits + 7) // 8
    A = int.from_bytes(b"".join(c.to_bytes(w, "little") for c in a), "little")
    B = int.from_bytes(b"".join(c.to_bytes(w, "little") for c in b), "little")
    n = len(a) + len(b) - 1
    raw = (A * B).to_bytes(n * w, "little")
    return [int.from_bytes(raw[k * w:(k + 1) * w], "little") % p for k in range(n)]


def mul(a, b, p):
    if not a or not b:
        return []
    if len(a) < _KRONECKER_MIN or len(b) < _KRONECKER_MIN:
        out = _mul_schoolbook(a, b, p)
    else:
        out = _mul_kronecker(a, b, p)
    return _trim(out)


def divrem(a, b, p):
    nb = len(b)
    if nb == 0:
        raise ZeroDivisionError("polynomial division by zero")
    if len(a) < nb:
        return [], list(a)
    db = nb - 1
    inv = pow(b[-1], -1, p)
    r = list(a)
    q = [0] * (len(a) - db)
    for i in range(len(a) - 1, db - 1, -1):
        c = r[i] % p
        if c:
            c = c * inv % p
            q[i - db] = c
            off = i - db
            for j in range(db):
                r[off + j] -= c * b[j]
    rem = [x % p for x in r[:db]]
    return _trim(q), _trim(rem)


def rem(a, b, p):
    return divrem(a, b, p)[1]


def mulmod(a, b, m, p):
    return divrem(mul(a, b, p), m, p)[1]


def powmod(a, e, m, p):
    if len(m) < 2:
        raise ValueError("modulus polynomial must have degree >= 1")
    base = divrem(a, m, p)[1]
    result = [1]
    for bit in bin(e)[2:] if e > 0 else "":
        result = mulmod(result, result, m, p)
        if bit == "1":
            result = mulmod(result, base, m, p)
    return result


def _sub_mul(x, q, y, p):
    """Return x - q*y."""
    prod = mul(q, y, p)
    n = max(len(x), len(prod))
    out = [0] * n
    for i, c in enumerate(x):
        out[i] = c
    for i, c in enumerate(prod):
        out[i] = (out[i] - c) % p
    return _trim(out)


def _scale(a, c, p):
    return [x * c % p for x in a]


def xgcd(a, b, p):
    """Return ``(g, s, t)`` with ``s*a + t*b == g`` and ``g`` monic.

    Both inputs zero gives three zero polynomials.
    """
    r0, r1 = list(a), list(b)
    s0, s1 = [1], []
    t0, t1 = [], [1]
    while r1:
        q, r = divrem(r0, r1, p)
        r0, r1 = r1, r
        s0, s1 = s1, _sub_mul(s0, q, s1, p)
        t0, t1 = t1, _sub_mul(t0, q, t1, p)
    if not r0:
        return [], [], []
    inv = pow(r0[-1], -1, p)
    return _scale(r0, inv, p), _scale(s0, inv, p), _scale(t0, inv, p)


def invmod(a, m, p):
    """Inverse of ``a`` modulo ``m``, or ``None`` when they share a factor."""
    r0, r1 = list(m), divrem(a, m, p)[1]
    t0, t1 = [], [1]
    while r1:
        q, r = divrem(r0, r1, p)
        r0, r1 = r1, r
        t0, t1 = t1, _sub_mul(t0, q, t1, p)
    if len(r0) != 1:
        return None
    return _scale(t0, pow(r0[0], -1, p), p)


def sqr(a, p):
    return mul(a, a, p)
