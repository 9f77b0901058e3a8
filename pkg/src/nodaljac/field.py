"""Prime field arithmetic.

Residues are kept canonical (``0 <= value < p``) at every boundary. The
polynomial layer works on plain ``int`` residues for speed; ``FieldElement``
is the checked, operator-friendly view used at the edges.
"""

from __future__ import annotations

import random
from functools import lru_cache

__all__ = [
    "ModulusMismatch",
    "PrimeModulus",
    "FieldElement",
    "is_probable_prime",
    "field_inv",
    "field_pow",
]

_SMALL_PRIMES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41)
# bases 2..41 are a deterministic Miller-Rabin witness set below this bound
_DETERMINISTIC_BOUND = 3317044064679887385961981
_RANDOM_ROUNDS = 48  # 4**-48 = 2**-96


class ModulusMismatch(ValueError):
    """Raised when operands live in different prime fields."""


def is_probable_prime(n: int) -> bool:
    """Strong-pseudoprime test.

    Deterministic for ``n < 3.3e24``; above that, 48 extra rounds with
    bases drawn from a generator seeded by ``n`` itself, so the answer is
    reproducible and wrong with probability below 2**-96.
    """
    if n < 2:
        return False
    for q in _SMALL_PRIMES:
        if n % q == 0:
            return n == q
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1

    def witness(a: int) -> bool:
        x = pow(a, d, n)
        if x == 1 or x == n - 1:
            return False
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                return False
        return True

    if any(witness(a) for a in _SMALL_PRIMES):
        return False
    if n < _DETERMINISTIC_BOUND:
        return True
    rng = random.Random(n)
    return not any(witness(rng.randrange(2, n - 1)) for _ in range(_RANDOM_ROUNDS))


@lru_cache(maxsize=64)
def _checked(p: int) -> bool:
    return is_probable_prime(p)


class PrimeModulus:
    """An odd prime ``p``; calling it builds field elements."""

    __slots__ = ("p",)

    def __init__(self, p: int):
        if isinstance(p, bool) or not isinstance(p, int):
            raise TypeError(f"modulus must be an int, got {type(p).__name__}")
        if p < 3 or p % 2 == 0:
            raise ValueError(f"modulus must be an odd prime, got {p}")
        if not _checked(p):
            raise ValueError(f"modulus {p} is not prime")
        self.p = p

    def __call__(self, value: int) -> FieldElement:
        return FieldElement(value, self)

    def __eq__(self, other):
        return isinstance(other, PrimeModulus) and other.p == self.p

    def __hash__(self):
        return hash(("PrimeModulus", self.p))

    def __repr__(self):
        return f"PrimeModulus({self.p})"

    @property
    def zero(self) -> FieldElement:
        return FieldElement(0, self)

    @property
    def one(self) -> FieldElement:
        return FieldElement(1, self)


class FieldElement:
    __slots__ = ("value", "modulus")

    def __init__(self, value: int, modulus: PrimeModulus):
        self.modulus = modulus
        self.value = int(value) % modulus.p

    def _coerce(self, other) -> int:
        if isinstance(other, FieldElement):
            if other.modulus.p != self.modulus.p:
                raise ModulusMismatch(
                    f"cannot combine elements mod {self.modulus.p} and mod {other.modulus.p}"
                )
            return other.value
        if isinstance(other, int):
            return other % self.modulus.p
        return NotImplemented

    def _new(self, value: int) -> FieldElement:
        return FieldElement(value, self.modulus)

    def __add__(self, other):
        b = self._coerce(other)
        if b is NotImplemented:
            return b
        return self._new(self.value + b)

    __radd__ = __add__

    def __sub__(self, other):
        b = self._coerce(other)
        if b is NotImplemented:
            return b
        return self._new(self.value - b)

    def __rsub__(self, other):
        b = self._coerce(other)
        if b is NotImplemented:
            return b
        return self._new(b - self.value)

    def __mul__(self, other):
        b = self._coerce(other)
        if b is NotImplemented:
            return b
        return self._new(self.value * b)

    __rmul__ = __mul__

    def __truediv__(self, other):
        b = self._coerce(other)
        if b is NotImplemented:
            return b
        return self * self._new(b).inverse()

    def __neg__(self):
        return self._new(-self.value)

    def __pow__(self, e: int):
        return field_pow(self, e)

    def inverse(self) -> FieldElement:
        return field_inv(self)

    def is_zero(self) -> bool:
        return self.value == 0

    def __bool__(self):
        return self.value != 0

    def __int__(self):
        return self.value

    def __eq__(self, other):
        if isinstance(other, FieldElement):
            return self.modulus.p == other.modulus.p and self.value == other.value
        if isinstance(other, int):
            return self.value == other % self.modulus.p
        return NotImplemented

    def __hash__(self):
        return hash((self.value, self.modulus.p))

    def __repr__(self):
        return f"FieldElement({self.value} mod {self.modulus.p})"

    def __str__(self):
        return str(self.value)


def field_inv(a: FieldElement) -> FieldElement:
    if a.value == 0:
        raise ZeroDivisionError("inverse of zero in F_p")
    return FieldElement(pow(a.value, -1, a.modulus.p), a.modulus)


def field_pow(a: FieldElement, e: int) -> FieldElement:
    """``a**e`` for ``e >= 0``; ``0**0`` is 1 (empty product)."""
    if e < 0:
        raise ValueError("exponent must be non-negative")
    return FieldElement(pow(a.value, e, a.modulus.p), a.modulus)
