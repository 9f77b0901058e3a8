"""Group law on the generalized Jacobian of nodal curves y^2 = x f(x)^2.

Here ``f`` is monic irreducible of degree ``d`` over F_p with ``f(0) != 0``.
Every non-identity class is the Mumford pair ``[f^2, h f]`` for a unique
``h`` with ``deg h < d`` and ``gcd(f, x - h^2) = 1``, so an element is just
``h``. Adding ``h1`` and ``h2``: solve ``g1 f + g2 (h1 + h2) = 1`` and take
``g2 (h1 h2 + x) mod f``.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass
from functools import cached_property
from typing import Iterator, Optional, Union

from .cantor import HyperCurve, MumfordDivisor
from .field import PrimeModulus
from .poly import Poly, divrem, gcd, invmod, is_irreducible, mulmod, random_poly, x_is_square_mod_f

__all__ = ["InvalidCurve", "InvalidElement", "JacElement", "IDENTITY", "NodalCurve"]

ENUMERATION_LIMIT = 10**6


class InvalidCurve(ValueError):
    pass


class InvalidElement(ValueError):
    pass


@dataclass(frozen=True)
class JacElement:
    """Identity when ``h`` is None, otherwise the class represented by ``h``."""

    h: Optional[Poly] = None

    @property
    def is_identity(self) -> bool:
        return self.h is None

    def __repr__(self):
        return "JacElement(identity)" if self.h is None else f"JacElement({self.h})"


IDENTITY = JacElement()


class NodalCurve:
    """N: y^2 = x f(x)^2 over F_p."""

    def __init__(self, p: Union[int, PrimeModulus], f: Union[Poly, list, tuple]):
        try:
            modulus = p if isinstance(p, PrimeModulus) else PrimeModulus(p)
        except (TypeError, ValueError) as exc:
            raise InvalidCurve(str(exc)) from None
        if not isinstance(f, Poly):
            f = Poly(f, modulus)
        elif f.p != modulus.p:
            raise InvalidCurve(f"f is defined mod {f.p}, curve mod {modulus.p}")
        if f.degree < 1:
            raise InvalidCurve("f must have degree >= 1")
        if not f.is_monic():
            raise InvalidCurve("f must be monic")
        if f[0] == 0:
            raise InvalidCurve("f(0) = 0: the curve has a cusp at the origin, not a node")
        if not is_irreducible(f):
            raise InvalidCurve("f is reducible")
        self.modulus = modulus
        self.f = f
        self.d = f.degree
        self._x = Poly.x(modulus)

    @property
    def p(self) -> int:
        return self.modulus.p

    def __eq__(self, other):
        return isinstance(other, NodalCurve) and self.f == other.f

    def __hash__(self):
        return hash(self.f)

    def __repr__(self):
        return f"NodalCurve(p={self.p}, f={self.f})"

    @cached_property
    def hyper_curve(self) -> HyperCurve:
        """The same curve as y^2 = g(x) with g = x f^2, for Cantor arithmetic."""
        return HyperCurve(self._x * (self.f * self.f))

    # --- elements -----------------------------------------------------

    def invalid_reason(self, h: Poly) -> Optional[str]:
        """None if ``h`` represents an element, otherwise a one-line reason."""
        if h.p != self.p:
            return f"h is defined mod {h.p}, curve mod {self.p}"
        if h.degree >= self.d:
            return f"deg h = {h.degree} >= d = {self.d}"
        if not gcd(self.f, self._x - h * h).is_one():
            # f irreducible, so a common factor means f | x - h^2
            return "h^2 ≡ x (mod f)"
        return None

    def validate(self, h: Poly) -> bool:
        return self.invalid_reason(h) is None

    def element(self, h: Union[Poly, list, tuple]) -> JacElement:
        if not isinstance(h, Poly):
            h = Poly(h, self.modulus)
        reason = self.invalid_reason(h)
        if reason:
            raise InvalidElement(f"invalid element: {reason}")
        return JacElement(h)

    def add(self, D1: JacElement, D2: JacElement) -> JacElement:
        if D1.h is None:
            return D2
        if D2.h is None:
            return D1
        h1, h2, f = D1.h, D2.h, self.f
        s = h1 + h2
        if s.is_zero():
            return IDENTITY
        g2 = invmod(s, f)
        if g2 is None:
            # impossible for valid inputs: f irreducible and deg(h1 + h2) < d
            raise ArithmeticError(f"gcd(f, h1 + h2) != 1 for h1={h1}, h2={h2}")
        return JacElement(mulmod(g2, mulmod(h1, h2, f) + self._x, f))

    def neg(self, D: JacElement) -> JacElement:
        return D if D.h is None else JacElement(-D.h)

    def double(self, D: JacElement) -> JacElement:
        return self.add(D, D)

    def scalar_mul(self, n: int, D: JacElement) -> JacElement:
        """``n * D`` by left-to-right double-and-add; ``n < 0`` uses ``-D``."""
        if n < 0:
            n, D = -n, self.neg(D)
        acc = IDENTITY
        for bit in bin(n)[2:] if n else "":
            acc = self.add(acc, acc)
            if bit == "1":
                acc = self.add(acc, D)
        return acc

    def random_element(self, rng: random.Random) -> JacElement:
        while True:
            h = random_poly(self.d - 1, self.modulus, rng)
            if self.validate(h):
                return JacElement(h)

    @cached_property
    def _order(self) -> int:
        q = self.p**self.d
        return q - 1 if x_is_square_mod_f(self.f) else q + 1

    def order(self) -> int:
        """``p^d - 1`` when x is a square modulo f, else ``p^d + 1``."""
        return self._order

    def elements(self) -> Iterator[JacElement]:
        """Identity, then every valid h in lexicographic coefficient order."""
        if self.p**self.d > ENUMERATION_LIMIT:
            raise ValueError(f"p^d = {self.p}^{self.d} is too large to enumerate")
        yield IDENTITY
        for coeffs in itertools.product(range(self.p), repeat=self.d):
            h = Poly(coeffs, self.modulus)
            if self.validate(h):
                yield JacElement(h)

    # --- Mumford embedding -------------------------------------------

    def to_mumford(self, D: JacElement) -> MumfordDivisor:
        if D.h is None:
            return MumfordDivisor(Poly.one(self.modulus), Poly.zero(self.modulus))
        return MumfordDivisor(self.f * self.f, D.h * self.f)

    def from_mumford(self, M: MumfordDivisor) -> JacElement:
        if M.is_identity():
            return IDENTITY
        if M.u != self.f * self.f:
            raise InvalidElement("u is not f^2")
        h, r = divrem(M.v, self.f)
        if r:
            raise InvalidElement("v is not divisible by f")
        return self.element(h)

    # --- text formats -------------------------------------------------

    def to_text(self) -> str:
        return f"p={self.p}\nf={self.f.to_text()}\n"

    @classmethod
    def from_text(cls, text: str) -> NodalCurve:
        fields = {}
        for line in text.splitlines():
            line = line.strip()
            if not line or line.startswith("#"):
                continue
            key, sep, value = line.partition("=")
            if not sep:
                raise ValueError(f"malformed curve line {line!r}")
            fields[key.strip()] = value.strip()
        if set(fields) != {"p", "f"}:
            raise ValueError("curve file must contain exactly the keys p and f")
        try:
            p = int(fields["p"])
        except ValueError:
            raise ValueError(f"malformed prime {fields['p']!r}") from None
        try:
            modulus = PrimeModulus(p)
        except ValueError as exc:
            raise InvalidCurve(str(exc)) from None
        return cls(modulus, Poly.from_text(fields["f"], modulus))

    def format_element(self, D: JacElement) -> str:
        return "identity" if D.h is None else "h=" + D.h.to_text(width=self.d)

    def parse_element(self, text: str) -> JacElement:
        text = text.strip()
        if text == "identity":
            return IDENTITY
        if not text.startswith("h="):
            raise ValueError(f"malformed element {text!r}; expected 'identity' or 'h=<coeffs>'")
        try:
            values = [int(tok) for tok in text[2:].split(",")]
        except ValueError:
            raise ValueError(f"malformed element coefficients in {text!r}") from None
        if len(values) != self.d:
            raise ValueError(f"element must list exactly d = {self.d} coefficients, got {len(values)}")
        if any(not 0 <= c < self.p for c in values):
            raise ValueError(f"element coefficients must be residues in [0, {self.p})")
        return self.element(values)
