import itertools
import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from nodaljac.field import ModulusMismatch, PrimeModulus
from nodaljac.poly import (
    ZERO_DEGREE,
    Poly,
    divrem,
    gcd,
    invmod,
    is_irreducible,
    modpow,
    random_irreducible,
    x_is_square_mod_f,
    xgcd,
    xgcd3,
)

pytestmark = pytest.mark.usefixtures("each_backend")

P = 4294967311


def P7(*c):
    return Poly(c, 7)


# --- independent oracles (plain integer lists, no kernels) ----------------


def naive_mul(a, b, p):
    out = [0] * (len(a) + len(b) - 1) if a and b else []
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            out[i + j] = (out[i + j] + x * y) % p
    while out and out[-1] == 0:
        out.pop()
    return out


def naive_rem(a, b, p):
    a = list(a)
    inv = pow(b[-1], -1, p)
    while len(a) >= len(b):
        c = a[-1] * inv % p
        shift = len(a) - len(b)
        for j, y in enumerate(b):
            a[shift + j] = (a[shift + j] - c * y) % p
        while a and a[-1] == 0:
            a.pop()
    return a


def irreducible_by_trial_division(f, p):
    d = len(f) - 1
    for k in range(1, d // 2 + 1):
        for tail in itertools.product(range(p), repeat=k):
            if not naive_rem(f, list(tail) + [1], p):
                return False
    return True


def legendre(a, p):
    return pow(a % p, (p - 1) // 2, p)


# --- worked examples --------------------------------------------------------


def test_ring_examples():
    assert P7(1, 1) * P7(-1, 1) == P7(6, 0, 1)
    a = P7(3, 2, 1)
    assert a + Poly.zero(7) == a
    assert P7(4, 3) * P7(0, 2) == P7(0, 1, 6)


def test_divrem_examples():
    f = P7(1, 0, 1)
    assert divrem(f, f) == (P7(1), Poly.zero(7))
    assert divrem(P7(0, 1, 6), f) == (P7(6), P7(1, 1))
    c = P7(3, 4)
    assert divrem(c, f) == (Poly.zero(7), c)


def test_divrem_by_zero():
    with pytest.raises(ZeroDivisionError):
        divrem(P7(1, 2), Poly.zero(7))


def test_xgcd_examples():
    f = P7(1, 0, 1)
    g, s, t = xgcd(f, P7(1, 1))
    assert g == P7(1)
    assert t == P7(4, 3)
    assert (P7(1, 1) * t) % f == P7(1)

    h = P7(3, 0, 3)
    g, s, t = xgcd(h, Poly.zero(7))
    assert g == h.monic() and s == P7(pow(3, -1, 7)) and t.is_zero()

    assert xgcd(f, P7(0, 1))[0] == P7(1)
    with pytest.raises(ValueError):
        xgcd(Poly.zero(7), Poly.zero(7))


def test_xgcd3_examples():
    g, *_ = xgcd3(P7(0, 1), P7(0, 1), P7(2))
    assert g == P7(1)
    a = P7(2, 3, 5)
    assert xgcd3(a, a, a)[0] == a.monic()
    with pytest.raises(ValueError):
        xgcd3(Poly.zero(7), Poly.zero(7), Poly.zero(7))


def test_xgcd3_nodal_shape():
    # gcd(f^2, f^2, (h1+h2) f) = f when gcd(f, h1+h2) = 1
    rng = random.Random(2)
    f = random_irreducible(5, P, rng)
    s = Poly([rng.randrange(P) for _ in range(5)], P)
    g, s1, s2, s3 = xgcd3(f * f, f * f, s * f)
    assert g == f
    assert s1 * (f * f) + s2 * (f * f) + s3 * (s * f) == g


def test_modpow_examples():
    assert modpow(Poly.x(3), 4, Poly([1, 0, 1], 3)) == Poly([1], 3)
    m = Poly([2, 0, 1], 5)
    assert modpow(Poly([3, 1, 4], 5), 0, m) == Poly([1], 5)
    assert modpow(Poly.x(5), 12, m) == Poly([4], 5)
    with pytest.raises(ValueError):
        modpow(Poly.x(5), 3, Poly([2], 5))


def test_irreducible_examples():
    assert is_irreducible(P7(1, 0, 1))
    assert not is_irreducible(P7(-1, 0, 1))
    for c in range(7):
        assert is_irreducible(P7(c, 1))
    with pytest.raises(ValueError):
        is_irreducible(P7(3))


def test_x_is_square_examples():
    assert x_is_square_mod_f(P7(1, 0, 1))
    assert (P7(2, 2) * P7(2, 2)) % P7(1, 0, 1) == P7(0, 1)
    assert not x_is_square_mod_f(Poly([2, 0, 1], 5))
    for p in (7, 11, 13):
        for a in range(1, p):
            f = Poly([-a, 1], p)  # x - a
            assert x_is_square_mod_f(f) == (legendre(a, p) == 1)


def test_x_is_square_preconditions():
    with pytest.raises(ValueError):
        x_is_square_mod_f(P7(0, 1))
    with pytest.raises(ValueError):
        x_is_square_mod_f(P7(1, 0, 2))


# --- representation -------------------------------------------------------


def test_normalization_and_zero_degree():
    z = Poly([0, 0, 0], 7)
    assert z.is_zero() and z.coeffs == () and z.degree == ZERO_DEGREE
    assert all(ZERO_DEGREE < d for d in range(0, 5))
    assert Poly([7, 14, 8], 7) == P7(0, 0, 1)


def test_text_roundtrip():
    f = Poly.from_text("1,0,1", 7)
    assert f == P7(1, 0, 1)
    assert f.to_text() == "1,0,1"
    assert Poly.zero(7).to_text() == "0"
    assert P7(1).to_text(width=3) == "1,0,0"
    with pytest.raises(ValueError):
        Poly.from_text("1,x", 7)


def test_mixed_moduli_rejected():
    with pytest.raises(ModulusMismatch):
        P7(1, 1) + Poly([1, 1], 5)
    with pytest.raises(ModulusMismatch):
        xgcd(P7(1, 1), Poly([1, 1], 5))
    with pytest.raises(ModulusMismatch):
        Poly([PrimeModulus(5)(1)], 7)


def test_evaluation_and_derivative():
    f = P7(1, 2, 3)
    assert f(2).value == (1 + 4 + 12) % 7
    assert f.derivative() == P7(2, 6)


# --- properties -----------------------------------------------------------

primes = st.sampled_from([3, 7, 101, P, 2**61 - 1])


@st.composite
def two_polys(draw):
    p = draw(primes)
    a = draw(st.lists(st.integers(0, p - 1), max_size=25))
    b = draw(st.lists(st.integers(0, p - 1), max_size=25))
    return Poly(a, p), Poly(b, p)


@given(two_polys())
def test_mul_matches_naive(ab):
    a, b = ab
    assert list((a * b).coeffs) == naive_mul(a.coeffs, b.coeffs, a.p)


@given(two_polys())
def test_divrem_roundtrip(ab):
    a, b = ab
    if b.is_zero():
        return
    q, r = divrem(a, b)
    assert q * b + r == a
    assert r.degree < b.degree


@given(two_polys())
def test_xgcd_certificate(ab):
    a, b = ab
    if a.is_zero() and b.is_zero():
        return
    g, s, t = xgcd(a, b)
    assert s * a + t * b == g
    assert g.is_monic()
    assert (a % g).is_zero() and (b % g).is_zero()


@settings(max_examples=50)
@given(two_polys(), st.integers(0, 2**20))
def test_xgcd3_certificate(ab, seed):
    a, b = ab
    c = Poly([random.Random(seed).randrange(a.p) for _ in range(6)], a.p)
    if a.is_zero() and b.is_zero() and c.is_zero():
        return
    g, s1, s2, s3 = xgcd3(a, b, c)
    assert s1 * a + s2 * b + s3 * c == g
    assert g == gcd(gcd(a, b), c)


def test_modpow_matches_repeated_multiplication():
    rng = random.Random(3)
    for _ in range(40):
        p = rng.choice([5, 7, P])
        m = Poly([rng.randrange(p) for _ in range(rng.randrange(2, 8))] + [rng.randrange(1, p)], p)
        base = Poly([rng.randrange(p) for _ in range(rng.randrange(0, 10))], p)
        acc = [1]
        for e in range(65):
            assert list(modpow(base, e, m).coeffs) == naive_rem(acc, m.coeffs, p)
            acc = naive_rem(naive_mul(acc, base.coeffs, p), m.coeffs, p) if acc else []


def test_invmod():
    f = P7(1, 0, 1)
    assert invmod(P7(1, 1), f) == P7(4, 3)
    assert invmod(Poly.zero(7), f) is None
    assert invmod(P7(0, 0, 1), P7(0, 1)) is None  # x^2 vs x


@pytest.mark.parametrize("p", [3, 5, 7])
def test_irreducibility_matches_trial_division(p):
    for d in range(1, 5):
        for tail in itertools.product(range(p), repeat=d):
            f = list(tail) + [1]
            assert is_irreducible(Poly(f, p)) == irreducible_by_trial_division(f, p), f


def test_random_irreducible():
    rng = random.Random(17)
    for p, d in [(7, 1), (7, 3), (5, 4), (3, 4), (P, 1), (P, 5), (P, 11)]:
        for _ in range(3):
            f = random_irreducible(d, p, rng)
            assert f.degree == d and f.is_monic() and f[0] != 0
            assert is_irreducible(f)
            if p ** (d // 2) < 10**4:
                assert irreducible_by_trial_division(list(f.coeffs), p)


def test_random_irreducible_is_seeded():
    a = random_irreducible(7, P, random.Random(99))
    b = random_irreducible(7, P, random.Random(99))
    assert a == b


def test_x_is_square_matches_brute_force_and_norm():
    # x is a square in F_p[x]/(f) iff some h has h^2 = x mod f, iff the norm
    # (-1)^d f(0) is a square in F_p
    rng = random.Random(8)
    for p, d in [(3, 2), (5, 2), (7, 2), (3, 3), (5, 3), (3, 4)]:
        for _ in range(4):
            f = random_irreducible(d, p, rng)
            brute = any(
                naive_rem(naive_mul(list(h), list(h), p), list(f.coeffs), p) == [0, 1]
                for h in itertools.product(range(p), repeat=d)
            )
            norm = (-1) ** d * f[0]
            assert x_is_square_mod_f(f) == brute == (legendre(norm, p) == 1)
    for d in (5, 11, 23):
        f = random_irreducible(d, P, rng)
        assert x_is_square_mod_f(f) == (legendre((-1) ** d * f[0], P) == 1)
