"""Cohomology of a cyclic group of prime-power order q acting on Z/q by
multiplication.

With D = a - 1 and the norm Nm = 1 + a + ... + a^(q-1), the standard
2-periodic resolution gives H^0 = ker D and, in alternation, ker Nm/im D
and ker D/im Nm.  On Z/q the kernel of multiplication by m has order
gcd(m, q) and its image has order q/gcd(m, q), so every order is a gcd
expression; the table is filled by 2-periodicity above degree 0.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd

from .fields import is_prime


def prime_power_split(q: int) -> tuple:
    """(p, h) with q = p^h; rejects non prime powers."""
    if not isinstance(q, int) or q < 2:
        raise ValueError(f"q must be an integer >= 2, got {q!r}")
    p = next(d for d in range(2, q + 1) if q % d == 0)
    if not is_prime(p):
        raise ValueError(f"{q} is not a prime power")
    h = 0
    m = q
    while m % p == 0:
        m //= p
        h += 1
    if m != 1:
        raise ValueError(f"{q} is not a prime power")
    return p, h


@dataclass(frozen=True)
class CyclicAction:
    """Generator acts on Z/q as multiplication by a, with a^q = 1."""

    q: int
    a: int

    def __post_init__(self):
        p, h = prime_power_split(self.q)
        a = self.a
        if not isinstance(a, int) or not 0 <= a < self.q:
            raise ValueError(f"a must lie in 0..{self.q - 1}, got {a!r}")
        if gcd(a, self.q) != 1:
            raise ValueError(f"a={a} is not a unit mod {self.q}")
        if pow(a, self.q, self.q) != 1:
            raise ValueError(
                f"a={a} does not satisfy the order relation a^{self.q} = 1 mod {self.q}"
            )
        # order relation forces a = 1 mod p (Fermat); fail loudly if not
        assert a % p == 1, (a, p)

    @property
    def p(self) -> int:
        return prime_power_split(self.q)[0]

    @property
    def h(self) -> int:
        return prime_power_split(self.q)[1]

    def difference(self) -> int:
        return (self.a - 1) % self.q

    def norm(self) -> int:
        total = 0
        power = 1
        for _ in range(self.q):
            total = (total + power) % self.q
            power = power * self.a % self.q
        return total


def admissible_multipliers(q: int) -> tuple:
    """All a with gcd(a, q) = 1 and a^q = 1 mod q."""
    prime_power_split(q)
    return tuple(
        a for a in range(1, q) if gcd(a, q) == 1 and pow(a, q, q) == 1
    )


@dataclass(frozen=True)
class CohomologyTable:
    action: CyclicAction
    orders: tuple  # orders[i] = |H^i|, i = 0..i_max
    difference: int
    norm: int

    def as_dict(self) -> dict:
        return {i: o for i, o in enumerate(self.orders)}


def cohomology_orders(action: CyclicAction, i_max: int = 6) -> CohomologyTable:
    """Orders of H^0..H^i_max; degrees >= 1 repeat with period 2."""
    if i_max < 0:
        raise ValueError("i_max must be nonnegative")
    q = action.q
    d = action.difference()
    nm = action.norm()
    if nm * d % q:
        raise AssertionError("Nm composed with D must vanish on Z/q")
    ker_d = gcd(d, q)
    ker_nm = gcd(nm, q)
    im_d = q // ker_d
    im_nm = q // ker_nm
    h_odd = ker_nm // im_d
    h_even = ker_d // im_nm
    orders = [ker_d]
    for i in range(1, i_max + 1):
        orders.append(h_odd if i % 2 else h_even)
    return CohomologyTable(action, tuple(orders), d, nm)


def invariant_element(action: CyclicAction) -> int:
    """Class of p^(h-1), fixed by the action since a = 1 mod p."""
    p, h = prime_power_split(action.q)
    x = p ** (h - 1) % action.q
    assert action.a * x % action.q == x % action.q
    return x
