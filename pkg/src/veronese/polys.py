"""Sparse multivariate polynomials with exact coefficients.

Variables are arbitrary sortable, hashable ids; in this package they are
weakly increasing index tuples such as (1, 2).  A ring fixes the variable
list (sorted ascending; the first-listed variable is largest in the term
order) and a monomial order, and polynomials store terms as a dict from
dense exponent tuples to nonzero coefficients.
"""

from __future__ import annotations

from typing import Iterable, Mapping, Sequence, Union

from .fields import ZZ, IntegerRing, PrimeField

Exponents = tuple  # dense exponent tuple aligned with PolyRing.variables

ORDERS = ("degrevlex", "lex")


def variable_name(v) -> str:
    """Render a variable id: x12 for small index tuples, x{10,11} beyond."""
    if isinstance(v, tuple):
        if all(isinstance(i, int) and 0 <= i <= 9 for i in v):
            return "x" + "".join(str(i) for i in v)
        return "x{" + ",".join(str(i) for i in v) + "}"
    return str(v)


class PolyRing:
    """Polynomial ring over a PrimeField or the integers.

    Variables are stored sorted ascending and the term order treats the
    first-listed variable as the largest.
    """

    __slots__ = ("field", "variables", "order", "_pos", "_key")

    def __init__(self, field, variables: Iterable, order: str = "degrevlex"):
        if order not in ORDERS:
            raise ValueError(f"unknown monomial order {order!r}")
        vs = tuple(sorted(variables))
        if len(set(vs)) != len(vs):
            raise ValueError("duplicate variable ids")
        if not vs:
            raise ValueError("need at least one variable")
        self.field = field
        self.variables = vs
        self.order = order
        self._pos = {v: i for i, v in enumerate(vs)}
        if order == "degrevlex":
            self._key = _degrevlex_key
        else:
            self._key = _lex_key

    def key(self, exps: Exponents):
        """Sort key: key(a) > key(b) iff monomial a > monomial b."""
        return self._key(exps)

    @property
    def nvars(self) -> int:
        return len(self.variables)

    def position(self, v) -> int:
        try:
            return self._pos[v]
        except KeyError:
            raise ValueError(f"unknown variable id {v!r}") from None

    def unit_exps(self) -> Exponents:
        return (0,) * self.nvars

    def exps_of(self, pairs: Union[Mapping, Iterable]) -> Exponents:
        """Dense exponent tuple from (variable, exponent) pairs."""
        if isinstance(pairs, Mapping):
            pairs = pairs.items()
        e = [0] * self.nvars
        for v, x in pairs:
            if not isinstance(x, int) or x < 0:
                raise ValueError(f"bad exponent {x!r} for {v!r}")
            e[self.position(v)] += x
        return tuple(e)

    def monomial(self, pairs: Union[Mapping, Iterable, Exponents]) -> "Monomial":
        if isinstance(pairs, tuple) and len(pairs) == self.nvars and all(
            isinstance(x, int) for x in pairs
        ):
            exps = pairs
            if any(x < 0 for x in exps):
                raise ValueError("negative exponent")
        else:
            exps = self.exps_of(pairs)
        return Monomial(self, exps)

    def poly(self, terms: Mapping) -> "Poly":
        """Polynomial from {Monomial|exps|pairs: coefficient}."""
        acc: dict = {}
        for m, c in terms.items():
            if isinstance(m, Monomial):
                exps = m.exps
            elif isinstance(m, tuple) and len(m) == self.nvars and all(
                isinstance(x, int) for x in m
            ):
                exps = m
            else:
                exps = self.exps_of(m)
            c = self.field.normalize(c)
            c = self.field.add(acc.get(exps, 0), c) if exps in acc else c
            if c:
                acc[exps] = c
            else:
                acc.pop(exps, None)
        return Poly(self, acc)

    def zero(self) -> "Poly":
        return Poly(self, {})

    def one(self) -> "Poly":
        return Poly(self, {self.unit_exps(): self.field.one})

    def constant(self, c: int) -> "Poly":
        c = self.field.normalize(c)
        return Poly(self, {self.unit_exps(): c} if c else {})

    def variable(self, v) -> "Poly":
        e = [0] * self.nvars
        e[self.position(v)] = 1
        return Poly(self, {tuple(e): self.field.one})

    def with_field(self, field) -> "PolyRing":
        return PolyRing(field, self.variables, self.order)

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, PolyRing)
            and other.field == self.field
            and other.variables == self.variables
            and other.order == self.order
        )

    def __hash__(self) -> int:
        return hash((self.field, self.variables, self.order))

    def __repr__(self) -> str:
        return f"PolyRing({self.field!r}, {len(self.variables)} vars, {self.order})"


def _degrevlex_key(exps: Exponents):
    # graded, ties broken so the last differing exponent decides reversed
    return (sum(exps), tuple(-x for x in reversed(exps)))


def _lex_key(exps: Exponents):
    return exps


def mono_mul(a: Exponents, b: Exponents) -> Exponents:
    return tuple(x + y for x, y in zip(a, b))


def mono_divides(a: Exponents, b: Exponents) -> bool:
    """True when x^a divides x^b."""
    return all(x <= y for x, y in zip(a, b))


def mono_div(a: Exponents, b: Exponents) -> Exponents:
    """Exponents of x^a / x^b; requires divisibility."""
    out = tuple(x - y for x, y in zip(a, b))
    if any(x < 0 for x in out):
        raise ValueError("monomial quotient is not polynomial")
    return out


def mono_lcm(a: Exponents, b: Exponents) -> Exponents:
    return tuple(max(x, y) for x, y in zip(a, b))


class Monomial:
    """Power product in a fixed ring; exposes the sparse var -> exp view."""

    __slots__ = ("ring", "exps")

    def __init__(self, ring: PolyRing, exps: Exponents):
        self.ring = ring
        self.exps = exps

    def items(self):
        """(variable id, exponent) pairs, zero exponents omitted."""
        return tuple(
            (v, e) for v, e in zip(self.ring.variables, self.exps) if e
        )

    def degree(self) -> int:
        return sum(self.exps)

    def __mul__(self, other: "Monomial") -> "Monomial":
        if other.ring != self.ring:
            raise ValueError("mixed-ring monomials")
        return Monomial(self.ring, mono_mul(self.exps, other.exps))

    def divides(self, other: "Monomial") -> bool:
        return mono_divides(self.exps, other.exps)

    def as_poly(self) -> "Poly":
        return Poly(self.ring, {self.exps: self.ring.field.one})

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, Monomial)
            and other.ring == self.ring
            and other.exps == self.exps
        )

    def __hash__(self) -> int:
        return hash(self.exps)

    def __repr__(self) -> str:
        return monomial_text(self.ring, self.exps)


def monomial_text(ring: PolyRing, exps: Exponents) -> str:
    parts = []
    for v, e in zip(ring.variables, exps):
        if not e:
            continue
        name = variable_name(v)
        parts.append(name if e == 1 else f"{name}^{e}")
    return "*".join(parts) if parts else "1"


class Poly:
    """Immutable-by-convention sparse polynomial."""

    __slots__ = ("ring", "_terms")

    def __init__(self, ring: PolyRing, terms: dict):
        self.ring = ring
        self._terms = terms

    # -- inspection ---------------------------------------------------

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __len__(self) -> int:
        return len(self._terms)

    def terms(self) -> dict:
        """Mapping Monomial -> coefficient (a fresh dict)."""
        return {Monomial(self.ring, e): c for e, c in self._terms.items()}

    def raw_terms(self) -> dict:
        return self._terms

    def total_degree(self) -> int:
        if not self._terms:
            return -1
        return max(sum(e) for e in self._terms)

    def leading(self) -> tuple:
        """(exponent tuple, coefficient) of the order-largest term."""
        if not self._terms:
            raise ValueError("zero polynomial has no leading term")
        e = max(self._terms, key=self.ring.key)
        return e, self._terms[e]

    def leading_monomial(self) -> Monomial:
        return Monomial(self.ring, self.leading()[0])

    def coefficient(self, m) -> int:
        if isinstance(m, Monomial):
            exps = m.exps
        elif (
            isinstance(m, tuple)
            and len(m) == self.ring.nvars
            and all(isinstance(x, int) for x in m)
        ):
            exps = m
        else:
            exps = self.ring.exps_of(m)
        return self._terms.get(exps, 0)

    # -- arithmetic ---------------------------------------------------

    def _check(self, other: "Poly") -> None:
        if other.ring != self.ring:
            a, b = self.ring.field, other.ring.field
            if a != b:
                raise ValueError(f"mixed-modulus operands rejected: {a!r} vs {b!r}")
            raise ValueError("operands live in different rings")

    def __add__(self, other: "Poly") -> "Poly":
        self._check(other)
        f = self.ring.field
        out = dict(self._terms)
        for e, c in other._terms.items():
            s = f.add(out.get(e, 0), c)
            if s:
                out[e] = s
            else:
                out.pop(e, None)
        return Poly(self.ring, out)

    def __sub__(self, other: "Poly") -> "Poly":
        self._check(other)
        f = self.ring.field
        out = dict(self._terms)
        for e, c in other._terms.items():
            s = f.sub(out.get(e, 0), c)
            if s:
                out[e] = s
            else:
                out.pop(e, None)
        return Poly(self.ring, out)

    def __neg__(self) -> "Poly":
        f = self.ring.field
        return Poly(self.ring, {e: f.neg(c) for e, c in self._terms.items()})

    def __mul__(self, other: Union["Poly", int]) -> "Poly":
        f = self.ring.field
        if isinstance(other, int):
            c0 = f.normalize(other)
            if not c0:
                return self.ring.zero()
            out = {}
            for e, c in self._terms.items():
                cc = f.mul(c, c0)
                if cc:
                    out[e] = cc
            return Poly(self.ring, out)
        self._check(other)
        out: dict = {}
        for ea, ca in self._terms.items():
            for eb, cb in other._terms.items():
                e = mono_mul(ea, eb)
                s = f.add(out.get(e, 0), f.mul(ca, cb))
                if s:
                    out[e] = s
                else:
                    out.pop(e, None)
        return Poly(self.ring, out)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "Poly":
        if not isinstance(k, int) or k < 0:
            raise ValueError("exponent must be a nonnegative integer")
        out = self.ring.one()
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base if k > 1 else base
            k >>= 1
        return out

    def monic(self) -> "Poly":
        if not self._terms:
            return self
        f = self.ring.field
        _, lc = self.leading()
        if lc == f.one:
            return self
        inv = f.inv(lc)
        return Poly(self.ring, {e: f.mul(c, inv) for e, c in self._terms.items()})

    # -- maps ---------------------------------------------------------

    def map_field(self, field) -> "Poly":
        """Reduce coefficients into another coefficient ring."""
        ring = self.ring.with_field(field)
        out = {}
        for e, c in self._terms.items():
            cc = field.normalize(c)
            if cc:
                out[e] = cc
        return Poly(ring, out)

    def derivative(self, v) -> "Poly":
        """Formal partial derivative with respect to variable v."""
        i = self.ring.position(v)
        f = self.ring.field
        out = {}
        for e, c in self._terms.items():
            if not e[i]:
                continue
            cc = f.mul(c, f.normalize(e[i]))
            if not cc:
                continue
            ee = e[:i] + (e[i] - 1,) + e[i + 1 :]
            out[ee] = f.add(out.get(ee, 0), cc) if ee in out else cc
            if not out[ee]:
                del out[ee]
        return Poly(self.ring, out)

    def evaluate(self, values: Union[Sequence[int], Mapping]) -> int:
        """Value at a point; values indexed like ring.variables or by id."""
        if isinstance(values, Mapping):
            vals = [values[v] for v in self.ring.variables]
        else:
            vals = list(values)
            if len(vals) != self.ring.nvars:
                raise ValueError("wrong number of coordinates")
        f = self.ring.field
        total = 0
        for e, c in self._terms.items():
            t = c
            for x, k in zip(vals, e):
                if k:
                    t = f.mul(t, f.pow(x, k))
            total = f.add(total, t)
        return total

    # -- identity -----------------------------------------------------

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, Poly)
            and other.ring == self.ring
            and other._terms == self._terms
        )

    def __hash__(self) -> int:
        return hash(frozenset(self._terms.items()))

    def __repr__(self) -> str:
        return self.text()

    def text(self) -> str:
        """Canonical rendering, terms descending in the ring order."""
        if not self._terms:
            return "0"
        out = []
        for e in sorted(self._terms, key=self.ring.key, reverse=True):
            c = self._terms[e]
            mono = monomial_text(self.ring, e)
            neg = isinstance(self.ring.field, IntegerRing) and c < 0
            mag = -c if neg else c
            body = mono if mag == 1 and mono != "1" else (
                str(mag) if mono == "1" else f"{mag}*{mono}"
            )
            if not out:
                out.append(f"-{body}" if neg else body)
            else:
                out.append(f"- {body}" if neg else f"+ {body}")
        return " ".join(out)


def frobenius_power(f: Poly, p: int, k: int) -> Poly:
    """f^(p^k) computed termwise; valid precisely in characteristic p."""
    if not isinstance(k, int) or k < 0:
        raise ValueError("k must be a nonnegative integer")
    ch = f.ring.field.characteristic
    if ch != p:
        raise ValueError(f"characteristic mismatch: ring has {ch}, Frobenius wants {p}")
    if k == 0:
        return f
    q = p**k
    fld = f.ring.field
    out = {}
    for e, c in f.raw_terms().items():
        ee = tuple(x * q for x in e)
        out[ee] = fld.pow(c, q)
    return Poly(f.ring, out)
