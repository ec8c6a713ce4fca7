"""Coefficient rings: prime fields F_r and the ring of integers.

Both expose the same small protocol (normalize/add/sub/mul/neg/inv/pow,
characteristic) so the polynomial layer can stay agnostic.  Elements are
plain Python ints; a prime field keeps them reduced to range(r).
"""

from __future__ import annotations


def is_prime(m: int) -> bool:
    """Trial-division primality test, adequate for desk-scale moduli."""
    if m < 2:
        return False
    if m % 2 == 0:
        return m == 2
    d = 3
    while d * d <= m:
        if m % d == 0:
            return False
        d += 2
    return True


class PrimeField:
    """Arithmetic modulo a prime r, elements represented in range(r)."""

    __slots__ = ("r",)

    def __init__(self, r: int):
        if not isinstance(r, int) or not is_prime(r):
            raise ValueError(f"modulus {r!r} is not prime")
        self.r = r

    @property
    def characteristic(self) -> int:
        return self.r

    @property
    def zero(self) -> int:
        return 0

    @property
    def one(self) -> int:
        return 1

    def normalize(self, c: int) -> int:
        return c % self.r

    def add(self, a: int, b: int) -> int:
        return (a + b) % self.r

    def sub(self, a: int, b: int) -> int:
        return (a - b) % self.r

    def mul(self, a: int, b: int) -> int:
        return (a * b) % self.r

    def neg(self, a: int) -> int:
        return (-a) % self.r

    def inv(self, a: int) -> int:
        a %= self.r
        if a == 0:
            raise ZeroDivisionError(f"0 has no inverse in F_{self.r}")
        return pow(a, -1, self.r)

    def pow(self, a: int, e: int) -> int:
        return pow(a, e, self.r)

    def elements(self) -> range:
        return range(self.r)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, PrimeField) and other.r == self.r

    def __hash__(self) -> int:
        return hash(("PrimeField", self.r))

    def __repr__(self) -> str:
        return f"F_{self.r}"


class IntegerRing:
    """Exact integer coefficients; used for telescoping identities and
    formal derivatives, never for Groebner arithmetic."""

    __slots__ = ()

    @property
    def characteristic(self) -> int:
        return 0

    @property
    def zero(self) -> int:
        return 0

    @property
    def one(self) -> int:
        return 1

    def normalize(self, c: int) -> int:
        return c

    def add(self, a: int, b: int) -> int:
        return a + b

    def sub(self, a: int, b: int) -> int:
        return a - b

    def mul(self, a: int, b: int) -> int:
        return a * b

    def neg(self, a: int) -> int:
        return -a

    def inv(self, a: int) -> int:
        if a in (1, -1):
            return a
        raise ZeroDivisionError(f"{a} is not a unit in Z")

    def pow(self, a: int, e: int) -> int:
        return a**e

    def __eq__(self, other: object) -> bool:
        return isinstance(other, IntegerRing)

    def __hash__(self) -> int:
        return hash("IntegerRing")

    def __repr__(self) -> str:
        return "Z"


ZZ = IntegerRing()
