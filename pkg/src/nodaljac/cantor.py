"""Mumford pairs and Cantor's algorithm on y^2 = g(x), deg g odd.

Works for singular ``g`` as well: the singular-point condition on a pair is
checked through ``gcd(g, g')`` so no root finding in extensions is needed.
This is the reference arithmetic the nodal group law is checked against and
the baseline it is timed against.
"""

from __future__ import annotations

from dataclasses import dataclass

from .poly import Poly, divrem, gcd, xgcd3

__all__ = [
    "InexactDivision",
    "HyperCurve",
    "MumfordDivisor",
    "divisor_validate",
    "cantor_compose",
    "cantor_reduce",
    "cantor_add",
    "cantor_neg",
    "cantor_scalar_mul",
]


class InexactDivision(ArithmeticError):
    """A division that must be exact left a remainder (an upstream bug)."""


def _exact_div(a: Poly, b: Poly, what: str) -> Poly:
    q, r = divrem(a, b)
    if r:
        raise InexactDivision(f"{what}: remainder {r} is nonzero")
    return q


class HyperCurve:
    """The curve y^2 = g(x) with g monic of odd degree 2G+1 >= 3."""

    def __init__(self, g: Poly):
        if g.degree < 3 or g.degree % 2 == 0:
            raise ValueError(f"curve polynomial must have odd degree >= 3, got {g.degree}")
        if not g.is_monic():
            raise ValueError("curve polynomial must be monic")
        self.g = g
        self.modulus = g.modulus
        self.genus = (g.degree - 1) // 2
        # multiple roots of g = singular points (a, 0)
        self.singular = gcd(g, g.derivative())

    @property
    def p(self) -> int:
        return self.g.p

    def identity(self) -> MumfordDivisor:
        return MumfordDivisor(Poly.one(self.modulus), Poly.zero(self.modulus))

    def __repr__(self):
        return f"HyperCurve(y^2 = {self.g} over F_{self.p})"


@dataclass(frozen=True)
class MumfordDivisor:
    u: Poly
    v: Poly

    def is_identity(self) -> bool:
        return self.u.is_one() and self.v.is_zero()

    def to_text(self) -> str:
        return f"u={self.u.to_text()};v={self.v.to_text()}"

    @classmethod
    def from_text(cls, text: str, modulus) -> MumfordDivisor:
        parts = dict(item.split("=", 1) for item in text.strip().split(";") if "=" in item)
        if set(parts) != {"u", "v"}:
            raise ValueError(f"malformed divisor {text!r}; expected u=<coeffs>;v=<coeffs>")
        return cls(Poly.from_text(parts["u"], modulus), Poly.from_text(parts["v"], modulus))


def divisor_validate(H: HyperCurve, u: Poly, v: Poly) -> bool:
    """Check that ``[u, v]`` is a Mumford pair on ``H``.

    ``u`` monic, ``deg v < deg u``, ``u | v^2 - g``, and at every singular
    point ``(a, 0)`` dividing both ``u`` and ``v``, ``(g - v^2)/u`` does not
    vanish.
    """
    if u.p != H.p or v.p != H.p:
        return False
    if u.is_zero() or not u.is_monic() or v.degree >= u.degree:
        return False
    quot, r = divrem(H.g - v * v, u)
    if r:
        return False
    s = gcd(gcd(u, v), H.singular)
    return gcd(s, quot).degree < 1


def cantor_compose(H: HyperCurve, D1: MumfordDivisor, D2: MumfordDivisor) -> tuple[Poly, Poly]:
    """Composition: ``h = gcd(u1, u2, v1+v2)``, ``u = u1 u2 / h^2`` and
    ``v = (h1 u1 v2 + h2 u2 v1 + h3 (v1 v2 + g)) / h mod u``."""
    u1, v1, u2, v2 = D1.u, D1.v, D2.u, D2.v
    h, h1, h2, h3 = xgcd3(u1, u2, v1 + v2)
    num = h1 * u1 * v2 + h2 * u2 * v1 + h3 * (v1 * v2 + H.g)
    if h.is_one():
        u, v = u1 * u2, num
    else:
        u = _exact_div(u1 * u2, h * h, "u1*u2 / h^2")
        v = _exact_div(num, h, "composition numerator / h")
    return u, v % u


def cantor_reduce(H: HyperCurve, u: Poly, v: Poly) -> MumfordDivisor:
    """Replace ``(u, v)`` by ``((v^2 - g)/u, -(v mod that))`` while
    ``deg u > G``, then scale ``u`` monic."""
    while u.degree > H.genus:
        u = _exact_div(v * v - H.g, u, "(v^2 - g) / u")
        v = -(v % u)
    return MumfordDivisor(u.monic(), v)


def cantor_add(
    H: HyperCurve, D1: MumfordDivisor, D2: MumfordDivisor, reduce: bool = True
) -> MumfordDivisor:
    u, v = cantor_compose(H, D1, D2)
    if reduce:
        return cantor_reduce(H, u, v)
    return MumfordDivisor(u, v)


def cantor_neg(H: HyperCurve, D: MumfordDivisor) -> MumfordDivisor:
    return MumfordDivisor(D.u, -D.v % D.u)


def cantor_scalar_mul(
    H: HyperCurve, n: int, D: MumfordDivisor, reduce: bool = True
) -> MumfordDivisor:
    """Left-to-right double-and-add over :func:`cantor_add`."""
    if n < 0:
        n, D = -n, cantor_neg(H, D)
    acc = H.identity()
    for bit in bin(n)[2:] if n else "":
        acc = cantor_add(H, acc, acc, reduce)
        if bit == "1":
            acc = cantor_add(H, acc, D, reduce)
    return acc
