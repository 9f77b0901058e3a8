"""Dense univariate polynomials over F_p.

Coefficients are stored ascending (``coeffs[i]`` multiplies ``x**i``) as a
tuple of canonical residues with no trailing zeros; the zero polynomial has
an empty tuple and degree ``-1``. The quadratic inner loops run in the
kernel module chosen by :mod:`nodaljac._backend`.
"""

from __future__ import annotations

import random
from typing import Iterable, Union

from . import _backend
from .field import FieldElement, ModulusMismatch, PrimeModulus

__all__ = [
    "ZERO_DEGREE",
    "Poly",
    "divrem",
    "xgcd",
    "xgcd3",
    "gcd",
    "invmod",
    "mulmod",
    "modpow",
    "is_irreducible",
    "random_poly",
    "random_irreducible",
    "x_is_square_mod_f",
]

ZERO_DEGREE = -1

Scalar = Union[int, FieldElement]


def _as_modulus(modulus) -> PrimeModulus:
    return modulus if isinstance(modulus, PrimeModulus) else PrimeModulus(modulus)


def _trim(c: list) -> list:
    while c and c[-1] == 0:
        c.pop()
    return c


class Poly:
    __slots__ = ("coeffs", "modulus")

    def __init__(self, coeffs: Iterable[Scalar], modulus: Union[PrimeModulus, int]):
        modulus = _as_modulus(modulus)
        p = modulus.p
        out = []
        for c in coeffs:
            if isinstance(c, FieldElement):
                if c.modulus.p != p:
                    raise ModulusMismatch(f"coefficient mod {c.modulus.p} in polynomial mod {p}")
                c = c.value
            out.append(int(c) % p)
        self.coeffs = tuple(_trim(out))
        self.modulus = modulus

    @classmethod
    def _make(cls, coeffs, modulus: PrimeModulus) -> Poly:
        # trusted path: coeffs already canonical and trimmed
        obj = cls.__new__(cls)
        obj.coeffs = tuple(coeffs)
        obj.modulus = modulus
        return obj

    @classmethod
    def zero(cls, modulus) -> Poly:
        return cls._make((), _as_modulus(modulus))

    @classmethod
    def one(cls, modulus) -> Poly:
        return cls._make((1,), _as_modulus(modulus))

    @classmethod
    def x(cls, modulus) -> Poly:
        return cls._make((0, 1), _as_modulus(modulus))

    @classmethod
    def constant(cls, c: Scalar, modulus) -> Poly:
        return cls([c], modulus)

    @classmethod
    def from_text(cls, text: str, modulus) -> Poly:
        """Parse ``"c0,c1,...,cn"`` (decimal, ascending powers)."""
        text = text.strip()
        if not text:
            raise ValueError("empty polynomial text")
        try:
            values = [int(tok) for tok in text.split(",")]
        except ValueError:
            raise ValueError(f"malformed polynomial coefficients: {text!r}") from None
        return cls(values, modulus)

    def to_text(self, width: int = 0) -> str:
        """Comma-separated coefficients, zero-padded to ``width`` entries."""
        c = list(self.coeffs) + [0] * max(0, width - len(self.coeffs))
        return ",".join(map(str, c)) if c else "0"

    @property
    def p(self) -> int:
        return self.modulus.p

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def lc(self) -> int:
        """Leading coefficient (0 for the zero polynomial)."""
        return self.coeffs[-1] if self.coeffs else 0

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_one(self) -> bool:
        return self.coeffs == (1,)

    def is_monic(self) -> bool:
        return self.lc == 1

    def __bool__(self):
        return bool(self.coeffs)

    def __getitem__(self, i: int) -> int:
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else 0

    def coefficient(self, i: int) -> FieldElement:
        return FieldElement(self[i], self.modulus)

    def monic(self) -> Poly:
        if not self.coeffs or self.coeffs[-1] == 1:
            return self
        return self.scale(pow(self.coeffs[-1], -1, self.p))

    def scale(self, c: Scalar) -> Poly:
        p = self.p
        c = int(c) % p
        if c == 0:
            return Poly._make((), self.modulus)
        return Poly._make([a * c % p for a in self.coeffs], self.modulus)

    def _other(self, other) -> Poly:
        if isinstance(other, Poly):
            if other.modulus.p != self.modulus.p:
                raise ModulusMismatch(
                    f"cannot combine polynomials mod {self.p} and mod {other.p}"
                )
            return other
        if isinstance(other, (int, FieldElement)):
            return Poly([other], self.modulus)
        return NotImplemented

    def __add__(self, other):
        other = self._other(other)
        if other is NotImplemented:
            return other
        a, b, p = self.coeffs, other.coeffs, self.p
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] = (out[i] + c) % p
        return Poly._make(_trim(out), self.modulus)

    __radd__ = __add__

    def __neg__(self):
        p = self.p
        return Poly._make([(p - c) % p for c in self.coeffs], self.modulus)

    def __sub__(self, other):
        other = self._other(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        other = self._other(other)
        if other is NotImplemented:
            return other
        return other + (-self)

    def __mul__(self, other):
        if isinstance(other, (int, FieldElement)) and not isinstance(other, bool):
            if isinstance(other, FieldElement):
                self._other(other)
            return self.scale(other)
        other = self._other(other)
        if other is NotImplemented:
            return other
        k = _backend.kernels
        if other is self:
            return Poly._make(k.sqr(self.coeffs, self.p), self.modulus)
        return Poly._make(k.mul(self.coeffs, other.coeffs, self.p), self.modulus)

    __rmul__ = __mul__

    def __divmod__(self, other):
        return divrem(self, other)

    def __floordiv__(self, other):
        return divrem(self, other)[0]

    def __mod__(self, other):
        other = self._other(other)
        if other is NotImplemented:
            return other
        if not other.coeffs:
            raise ZeroDivisionError("polynomial division by zero")
        if len(self.coeffs) < len(other.coeffs):
            return self
        return Poly._make(
            _backend.kernels.rem(self.coeffs, other.coeffs, self.p), self.modulus
        )

    def __call__(self, x: Scalar) -> FieldElement:
        p = self.p
        x = int(x) % p
        acc = 0
        for c in reversed(self.coeffs):
            acc = (acc * x + c) % p
        return FieldElement(acc, self.modulus)

    def derivative(self) -> Poly:
        p = self.p
        return Poly._make(
            _trim([i * c % p for i, c in enumerate(self.coeffs)][1:]), self.modulus
        )

    def __eq__(self, other):
        if isinstance(other, Poly):
            return self.modulus.p == other.modulus.p and self.coeffs == other.coeffs
        if isinstance(other, int) and not isinstance(other, bool):
            return self.coeffs == tuple(_trim([other % self.p]))
        return NotImplemented

    def __hash__(self):
        return hash((self.coeffs, self.modulus.p))

    def __repr__(self):
        return f"Poly({list(self.coeffs)}, {self.p})"

    def __str__(self):
        if not self.coeffs:
            return "0"
        terms = []
        for i in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[i]
            if not c:
                continue
            mono = "" if i == 0 else ("x" if i == 1 else f"x^{i}")
            if not mono:
                terms.append(str(c))
            elif c == 1:
                terms.append(mono)
            else:
                terms.append(f"{c}*{mono}")
        return " + ".join(terms)


def _same_field(*polys: Poly) -> int:
    p = polys[0].p
    for f in polys[1:]:
        if f.p != p:
            raise ModulusMismatch(f"polynomials mod {p} and mod {f.p}")
    return p


def divrem(a: Poly, b: Poly) -> tuple[Poly, Poly]:
    """Return ``(q, r)`` with ``a == q*b + r`` and ``deg r < deg b``."""
    p = _same_field(a, b)
    if not b.coeffs:
        raise ZeroDivisionError("polynomial division by zero")
    q, r = _backend.kernels.divrem(a.coeffs, b.coeffs, p)
    return Poly._make(q, a.modulus), Poly._make(r, a.modulus)


def xgcd(a: Poly, b: Poly) -> tuple[Poly, Poly, Poly]:
    """Return ``(g, s, t)`` with ``s*a + t*b == g``, ``g`` the monic gcd."""
    p = _same_field(a, b)
    if not a.coeffs and not b.coeffs:
        raise ValueError("xgcd(0, 0) is undefined")
    g, s, t = _backend.kernels.xgcd(a.coeffs, b.coeffs, p)
    m = a.modulus
    return Poly._make(g, m), Poly._make(s, m), Poly._make(t, m)


def xgcd3(a: Poly, b: Poly, c: Poly) -> tuple[Poly, Poly, Poly, Poly]:
    """Return ``(g, s1, s2, s3)`` with ``s1*a + s2*b + s3*c == g = gcd(a, b, c)``.

    Two chained two-way xgcds; the Bezout coefficients of the first are
    scaled by the cofactor of the second.
    """
    p = _same_field(a, b, c)
    m = a.modulus
    if not (a.coeffs or b.coeffs or c.coeffs):
        raise ValueError("xgcd3(0, 0, 0) is undefined")
    if a.coeffs or b.coeffs:
        d1, s1, t1 = xgcd(a, b)
    else:
        d1 = s1 = t1 = Poly._make((), m)
    g, k1, k2 = _backend.kernels.xgcd(d1.coeffs, c.coeffs, p)
    k1 = Poly._make(k1, m)
    return Poly._make(g, m), k1 * s1, k1 * t1, Poly._make(k2, m)


def gcd(a: Poly, b: Poly) -> Poly:
    if not a.coeffs and not b.coeffs:
        return a
    return xgcd(a, b)[0]


def invmod(a: Poly, m: Poly) -> Poly | None:
    """Inverse of ``a`` modulo ``m``, or ``None`` if ``gcd(a, m) != 1``."""
    p = _same_field(a, m)
    if m.degree < 1:
        raise ValueError("modulus polynomial must have degree >= 1")
    t = _backend.kernels.invmod(a.coeffs, m.coeffs, p)
    return None if t is None else Poly._make(t, a.modulus)


def mulmod(a: Poly, b: Poly, m: Poly) -> Poly:
    p = _same_field(a, b, m)
    if not m.coeffs:
        raise ZeroDivisionError("polynomial division by zero")
    return Poly._make(_backend.kernels.mulmod(a.coeffs, b.coeffs, m.coeffs, p), a.modulus)


def modpow(base: Poly, e: int, m: Poly) -> Poly:
    """``base**e mod m`` by square-and-multiply, reducing after every step."""
    p = _same_field(base, m)
    if m.degree < 1:
        raise ValueError("modulus polynomial must have degree >= 1")
    if e < 0:
        raise ValueError("exponent must be non-negative")
    return Poly._make(_backend.kernels.powmod(base.coeffs, e, m.coeffs, p), base.modulus)


def _prime_factors(n: int) -> list[int]:
    out, q = [], 2
    while q * q <= n:
        if n % q == 0:
            out.append(q)
            while n % q == 0:
                n //= q
        q += 1
    if n > 1:
        out.append(n)
    return out


def is_irreducible(f: Poly) -> bool:
    """Rabin's test: ``x^(p^d) = x mod f`` and ``gcd(x^(p^(d/r)) - x, f) = 1``
    for every prime ``r | d``."""
    d = f.degree
    if d < 1:
        raise ValueError("irreducibility is undefined for constants")
    if d == 1:
        return True
    f = f.monic()
    p, m = f.p, f.modulus
    x = Poly.x(m)
    checkpoints = {d // r for r in _prime_factors(d)}
    frob = x
    for i in range(1, d + 1):
        frob = modpow(frob, p, f)
        if i in checkpoints and not gcd(frob - x, f).is_one():
            return False
    return frob == x


def _ben_or(f: Poly) -> bool:
    # gcd(x^(p^i) - x, f) = 1 for all i <= d/2; rejects most reducible f early
    p, x = f.p, Poly.x(f.modulus)
    frob = x
    for _ in range(f.degree // 2):
        frob = modpow(frob, p, f)
        if not gcd(frob - x, f).is_one():
            return False
    return True


def random_poly(max_degree: int, modulus, rng: random.Random) -> Poly:
    """Uniform polynomial of degree at most ``max_degree``."""
    modulus = _as_modulus(modulus)
    p = modulus.p
    return Poly._make(_trim([rng.randrange(p) for _ in range(max_degree + 1)]), modulus)


def random_irreducible(d: int, modulus, rng: random.Random) -> Poly:
    """Monic irreducible polynomial of degree ``d`` with nonzero constant term."""
    if d < 1:
        raise ValueError("degree must be positive")
    modulus = _as_modulus(modulus)
    p = modulus.p
    while True:
        c = [rng.randrange(1, p)] + [rng.randrange(p) for _ in range(d - 1)] + [1]
        f = Poly._make(c, modulus)
        if d == 1 or _ben_or(f):
            return f


def x_is_square_mod_f(f: Poly) -> bool:
    """Whether ``x`` is a square in ``F_p[x]/(f)`` (Euler's criterion).

    ``f`` must be monic irreducible with ``f(0) != 0``; irreducibility is
    the caller's responsibility.
    """
    if f.degree < 1 or not f.is_monic():
        raise ValueError("f must be monic of degree >= 1")
    if f[0] == 0:
        raise ValueError("f(0) must be nonzero")
    e = (f.p ** f.degree - 1) // 2
    return modpow(Poly.x(f.modulus), e, f).is_one()
