import itertools
import random

import pytest

from nodaljac.cantor import MumfordDivisor, divisor_validate
from nodaljac.nodal import IDENTITY, InvalidCurve, InvalidElement, JacElement, NodalCurve
from nodaljac.poly import Poly, divrem, invmod, mulmod, random_irreducible

P = 4294967311


@pytest.fixture
def c7():
    return NodalCurve(7, [1, 0, 1])


@pytest.fixture(scope="module")
def big5():
    return NodalCurve(P, random_irreducible(5, P, random.Random(505)))


def el(curve, *c):
    return curve.element(list(c))


def torus_scalar_mul(curve, n, D):
    """n*D computed as (h + y)^n in (F_p[x]/f)[y]/(y^2 - x), modulo scalars.

    Independent of the h-addition formula: the element h stands for the
    class of h + y, and a + b*y with b != 0 stands for h = a/b.
    """
    f, x = curve.f, Poly.x(curve.modulus)
    xr = x % f

    def mul(u, v):
        (a1, b1), (a2, b2) = u, v
        a = (mulmod(a1, a2, f) + mulmod(mulmod(b1, b2, f), xr, f)) % f
        b = (mulmod(a1, b2, f) + mulmod(a2, b1, f)) % f
        return a, b

    if D.is_identity:
        return IDENTITY
    if n < 0:
        n, D = -n, curve.neg(D)
    acc = (Poly.one(curve.modulus), Poly.zero(curve.modulus))
    base = (D.h, Poly.one(curve.modulus))
    while n:
        if n & 1:
            acc = mul(acc, base)
        base = mul(base, base)
        n >>= 1
    a, b = acc
    if b.is_zero():
        return IDENTITY
    return JacElement(mulmod(a, invmod(b, f), f))


# --- construction ---------------------------------------------------------


def test_curve_new(c7):
    assert c7.d == 2 and c7.p == 7


@pytest.mark.parametrize(
    "p, f, match",
    [
        (7, [6, 0, 1], "reducible"),
        (7, [0, 1], "cusp"),
        (7, [2, 0, 3], "monic"),
        (9, [1, 0, 1], "prime"),
        (8, [1, 0, 1], "odd prime"),
        (7, [3], "degree"),
    ],
)
def test_curve_new_errors(p, f, match):
    with pytest.raises(InvalidCurve, match=match):
        NodalCurve(p, f)


# --- validation -------------------------------------------------------------


def test_validate_examples(c7):
    assert c7.validate(Poly([0, 1], 7))
    assert not c7.validate(Poly([2, 2], 7))
    assert not c7.validate(Poly([0, 0, 1], 7))
    assert c7.invalid_reason(Poly([2, 2], 7)) == "h^2 ≡ x (mod f)"
    with pytest.raises(InvalidElement):
        c7.element([5, 5])


# --- group law --------------------------------------------------------------


@pytest.mark.usefixtures("each_backend")
def test_add_examples(c7):
    x, one = el(c7, 0, 1), el(c7, 1)
    assert c7.add(x, one) == el(c7, 1, 1)
    assert c7.add(x, el(c7, 0, 6)) == IDENTITY
    assert c7.add(x, x) == el(c7, 4, 4)
    assert c7.add(IDENTITY, x) == x == c7.add(x, IDENTITY)
    assert c7.add(IDENTITY, IDENTITY) == IDENTITY


def test_neg(c7, big5):
    assert c7.neg(el(c7, 0, 1)) == el(c7, 0, 6)
    assert c7.neg(IDENTITY) == IDENTITY
    rng = random.Random(1)
    for _ in range(100):
        D = big5.random_element(rng)
        assert big5.add(D, big5.neg(D)) == IDENTITY


@pytest.mark.usefixtures("each_backend")
def test_scalar_mul_examples(c7):
    x = el(c7, 0, 1)
    assert c7.scalar_mul(0, x) == IDENTITY
    assert c7.scalar_mul(2, x) == el(c7, 4, 4)
    assert c7.scalar_mul(-1, x) == c7.neg(x)
    for Q in c7.elements():
        assert c7.scalar_mul(48, Q) == IDENTITY


def test_scalar_mul_coherence(big5):
    rng = random.Random(4)
    for _ in range(30):
        D = big5.random_element(rng)
        m, n = rng.randrange(-(10**6), 10**6), rng.randrange(-(10**6), 10**6)
        assert big5.scalar_mul(m + n, D) == big5.add(big5.scalar_mul(m, D), big5.scalar_mul(n, D))
        assert big5.scalar_mul(m, big5.scalar_mul(n, D)) == big5.scalar_mul(m * n, D)


@pytest.mark.usefixtures("each_backend")
def test_scalar_mul_matches_torus_model(c7, big5):
    rng = random.Random(12)
    for curve in (c7, NodalCurve(5, [2, 0, 1]), big5):
        for _ in range(15):
            D = curve.random_element(rng)
            n = rng.randrange(-(2**80), 2**80)
            assert curve.scalar_mul(n, D) == torus_scalar_mul(curve, n, D)


def test_torus_model_exhaustive(c7):
    elems = list(c7.elements())
    for a in elems[1:]:
        for n in range(1, 50):
            assert c7.scalar_mul(n, a) == torus_scalar_mul(c7, n, a)


def test_closure_exhaustive():
    for curve in (NodalCurve(7, [1, 0, 1]), NodalCurve(5, [2, 0, 1])):
        elems = list(curve.elements())
        for a, b in itertools.product(elems, repeat=2):
            s = curve.add(a, b)
            assert s.is_identity or curve.validate(s.h)


@pytest.mark.parametrize("d", [5, 11])
def test_closure_random_large(d):
    curve = NodalCurve(P, random_irreducible(d, P, random.Random(d)))
    rng = random.Random(100 + d)
    for _ in range(5000):
        a, b = curve.random_element(rng), curve.random_element(rng)
        s = curve.add(a, b)
        assert s.is_identity or curve.validate(s.h)


def test_distinct_h_are_distinct_classes(c7):
    # h1 != h2 implies h1 - h2 is not the identity
    elems = [e for e in c7.elements() if not e.is_identity]
    for a, b in itertools.permutations(elems, 2):
        assert c7.add(a, c7.neg(b)) != IDENTITY


# --- sampling -------------------------------------------------------------


def test_random_element(c7):
    rng = random.Random(0)
    seen = set()
    for _ in range(2000):
        e = c7.random_element(rng)
        assert not e.is_identity
        assert c7.validate(e.h)
        seen.add(e.h.coeffs)
    assert (2, 2) not in seen and (5, 5) not in seen
    assert len(seen) == 47


def test_random_element_seeded(big5):
    assert big5.random_element(random.Random(3)) == big5.random_element(random.Random(3))


# --- Mumford embedding ----------------------------------------------------


def test_to_mumford(c7):
    M = c7.to_mumford(el(c7, 0, 1))
    assert M == MumfordDivisor(Poly([1, 0, 2, 0, 1], 7), Poly([0, 1, 0, 1], 7))
    assert c7.to_mumford(IDENTITY) == MumfordDivisor(Poly([1], 7), Poly.zero(7))
    H = c7.hyper_curve
    for e in c7.elements():
        M = c7.to_mumford(e)
        assert divrem(M.v * M.v - H.g, M.u)[1].is_zero()
        assert divisor_validate(H, M.u, M.v)


def test_from_mumford(c7):
    f = c7.f
    x = Poly.x(7)
    assert c7.from_mumford(MumfordDivisor(f * f, x * f)) == el(c7, 0, 1)
    assert c7.from_mumford(MumfordDivisor(Poly.one(7), Poly.zero(7))) == IDENTITY
    with pytest.raises(InvalidElement, match="f\\^2"):
        c7.from_mumford(MumfordDivisor(f, Poly.zero(7)))
    with pytest.raises(InvalidElement, match="divisible"):
        c7.from_mumford(MumfordDivisor(f * f, x))
    with pytest.raises(InvalidElement):
        c7.from_mumford(MumfordDivisor(f * f, Poly([2, 2], 7) * f))
    for e in c7.elements():
        assert c7.from_mumford(c7.to_mumford(e)) == e


# --- order and enumeration -------------------------------------------------


def test_order_examples(c7):
    assert c7.order() == 48
    assert NodalCurve(5, [2, 0, 1]).order() == 26
    assert len(list(NodalCurve(3, [1, 0, 1]).elements())) == 8
    for p in (7, 11, 13):
        for a in range(1, p):
            curve = NodalCurve(p, [(-a) % p, 1])
            euler = pow(a, (p - 1) // 2, p) == 1
            assert curve.order() == (p - 1 if euler else p + 1)


def test_order_matches_enumeration():
    rng = random.Random(21)
    for p, d in [(3, 1), (5, 1), (3, 2), (5, 2), (7, 2), (11, 2), (3, 3), (5, 3), (3, 4)]:
        for _ in range(3):
            curve = NodalCurve(p, random_irreducible(d, p, rng))
            elems = list(curve.elements())
            assert len(elems) == curve.order()
            hs = [e.h.coeffs for e in elems[1:]]
            assert len(set(hs)) == len(hs)
            assert all(curve.validate(e.h) for e in elems[1:])


def test_enumeration_guard():
    curve = NodalCurve(P, random_irreducible(2, P, random.Random(1)))
    with pytest.raises(ValueError, match="too large"):
        next(curve.elements())


def test_annihilation_large(big5):
    rng = random.Random(9)
    N = big5.order()
    for _ in range(5):
        assert big5.scalar_mul(N, big5.random_element(rng)) == IDENTITY


# --- text formats -----------------------------------------------------------


def test_curve_text_roundtrip(big5):
    again = NodalCurve.from_text(big5.to_text())
    assert again == big5
    assert NodalCurve.from_text("p=7\nf=1,0,1\n").f == Poly([1, 0, 1], 7)


@pytest.mark.parametrize(
    "text, exc",
    [("p=7\n", ValueError), ("p=9\nf=1,0,1", InvalidCurve), ("p=7\nf=6,0,1", InvalidCurve),
     ("p=seven\nf=1,0,1", ValueError), ("garbage", ValueError)],
)
def test_curve_text_errors(text, exc):
    with pytest.raises(exc):
        NodalCurve.from_text(text)


def test_element_text(c7):
    assert c7.format_element(IDENTITY) == "identity"
    assert c7.format_element(el(c7, 1)) == "h=1,0"
    assert c7.format_element(el(c7)) == "h=0,0"
    assert c7.parse_element("h=0,1") == el(c7, 0, 1)
    assert c7.parse_element(" identity ") == IDENTITY
    for bad in ["h=1", "h=1,0,0", "h=7,0", "h=-1,0", "x=1,0", "h=a,b"]:
        with pytest.raises(ValueError):
            c7.parse_element(bad)
    with pytest.raises(InvalidElement):
        c7.parse_element("h=2,2")
