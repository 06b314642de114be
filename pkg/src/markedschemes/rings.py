"""Exact coefficient rings: ZZ, QQ, ZZ/p and integer parameter polynomials.

Elements are plain Python values wherever possible (``int`` for ZZ,
``Fraction`` for QQ) so that marked-polynomial code can use ordinary
arithmetic operators.  Prime-field elements are :class:`ModP` and parameter
polynomials are :class:`ParamPoly`; both support mixed arithmetic with ints.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Any

from .monomials import Monomial, deglex_key


class RingMismatch(TypeError):
    pass


# -- prime fields -----------------------------------------------------------


class ModP:
    """Residue class modulo a prime ``p``, stored in ``range(p)``."""

    __slots__ = ("v", "p")

    def __init__(self, v: int, p: int):
        self.v = v % p
        self.p = p

    def _other(self, other) -> int:
        if isinstance(other, ModP):
            if other.p != self.p:
                raise RingMismatch(f"ZZ/{self.p} and ZZ/{other.p} do not mix")
            return other.v
        if isinstance(other, int):
            return other
        return NotImplemented

    def __add__(self, other):
        o = self._other(other)
        if o is NotImplemented:
            return o
        return ModP(self.v + o, self.p)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._other(other)
        if o is NotImplemented:
            return o
        return ModP(self.v - o, self.p)

    def __rsub__(self, other):
        o = self._other(other)
        if o is NotImplemented:
            return o
        return ModP(o - self.v, self.p)

    def __mul__(self, other):
        o = self._other(other)
        if o is NotImplemented:
            return o
        return ModP(self.v * o, self.p)

    __rmul__ = __mul__

    def __neg__(self):
        return ModP(-self.v, self.p)

    def __pow__(self, k: int):
        return ModP(pow(self.v, k, self.p), self.p)

    def inverse(self) -> "ModP":
        if self.v == 0:
            raise ZeroDivisionError(f"0 has no inverse in ZZ/{self.p}")
        return ModP(pow(self.v, -1, self.p), self.p)

    def __truediv__(self, other):
        o = self._other(other)
        if o is NotImplemented:
            return o
        return self * ModP(o, self.p).inverse()

    def __bool__(self):
        return self.v != 0

    def __eq__(self, other):
        if isinstance(other, ModP):
            return self.p == other.p and self.v == other.v
        if isinstance(other, int):
            return (self.v - other) % self.p == 0
        return NotImplemented

    def __hash__(self):
        return hash((self.v, self.p))

    def __repr__(self):
        return f"ModP({self.v}, {self.p})"

    def __str__(self):
        return str(self.v)


# -- parameter polynomials --------------------------------------------------

# A parameter monomial is a sorted tuple of (parameter index, exponent) pairs.
PKey = tuple[tuple[int, int], ...]


def _mul_keys(a: PKey, b: PKey) -> PKey:
    if not a:
        return b
    if not b:
        return a
    d = dict(a)
    for i, e in b:
        d[i] = d.get(i, 0) + e
    return tuple(sorted(d.items()))


class ParamPoly:
    """Sparse polynomial with integer coefficients over a :class:`ParameterRing`."""

    __slots__ = ("ring", "terms")

    def __init__(self, ring: "ParameterRing", terms: dict[PKey, int] | None = None):
        self.ring = ring
        self.terms = {k: c for k, c in (terms or {}).items() if c}

    @classmethod
    def _raw(cls, ring, terms):
        obj = object.__new__(cls)
        obj.ring = ring
        obj.terms = terms
        return obj

    def _other(self, other) -> dict[PKey, int]:
        if isinstance(other, ParamPoly):
            if other.ring is not self.ring and other.ring != self.ring:
                raise RingMismatch("parameter polynomials over different rings")
            return other.terms
        if isinstance(other, int):
            return {(): other} if other else {}
        return NotImplemented

    def __add__(self, other):
        o = self._other(other)
        if o is NotImplemented:
            return o
        terms = dict(self.terms)
        for k, c in o.items():
            v = terms.get(k, 0) + c
            if v:
                terms[k] = v
            else:
                terms.pop(k, None)
        return ParamPoly._raw(self.ring, terms)

    __radd__ = __add__

    def __neg__(self):
        return ParamPoly._raw(self.ring, {k: -c for k, c in self.terms.items()})

    def __sub__(self, other):
        o = self._other(other)
        if o is NotImplemented:
            return o
        terms = dict(self.terms)
        for k, c in o.items():
            v = terms.get(k, 0) - c
            if v:
                terms[k] = v
            else:
                terms.pop(k, None)
        return ParamPoly._raw(self.ring, terms)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        o = self._other(other)
        if o is NotImplemented:
            return o
        terms: dict[PKey, int] = {}
        for ka, ca in self.terms.items():
            for kb, cb in o.items():
                k = _mul_keys(ka, kb)
                v = terms.get(k, 0) + ca * cb
                if v:
                    terms[k] = v
                else:
                    del terms[k]
        return ParamPoly._raw(self.ring, terms)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative powers are not ring elements")
        result = ParamPoly._raw(self.ring, {(): 1})
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        o = self._other(other)
        if o is NotImplemented:
            return o
        return self.terms == o

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def degree(self) -> int:
        """Total degree in the parameters; -1 for the zero polynomial."""
        return max((sum(e for _, e in k) for k in self.terms), default=-1)

    def variables(self) -> set[int]:
        return {i for k in self.terms for i, _ in k}

    def as_single_variable(self) -> tuple[int, int] | None:
        """Return ``(index, sign)`` if this is ``+-`` one parameter, else None."""
        if len(self.terms) != 1:
            return None
        (k, c), = self.terms.items()
        if c in (1, -1) and len(k) == 1 and k[0][1] == 1:
            return k[0][0], c
        return None

    def normalized(self) -> "ParamPoly":
        return ParamPoly(self.ring, self.terms)

    def sorted_terms(self) -> list[tuple[PKey, int]]:
        # graded reverse lexicographic on the ring's parameter order
        n = len(self.ring.params)

        def key(item):
            k = item[0]
            dense = [0] * n
            for i, e in k:
                dense[i] = e
            return (sum(dense),) + tuple(-e for e in reversed(dense))

        return sorted(self.terms.items(), key=key, reverse=True)

    def __repr__(self):
        return f"ParamPoly({self.ring.format(self)})"

    def __str__(self):
        return self.ring.format(self)


@dataclass(frozen=True)
class ParameterVariable:
    """The parameter attached to the tail monomial ``tail`` of the generator ``head``."""

    head: Monomial
    tail: Monomial

    def bracket(self) -> str:
        h = ",".join(map(str, self.head))
        t = ",".join(map(str, self.tail))
        return f"C[{h}|{t}]"

    def subscript(self) -> str:
        # digit strings are x0-first; they are ambiguous once an exponent hits 10
        if max(self.head + self.tail) > 9:
            return self.bracket()
        h = "".join(map(str, self.head))
        t = "".join(map(str, self.tail))
        return f"C_{{{h},{t}}}"

    def __str__(self):
        return self.bracket()


def parameter_sort_key(p: ParameterVariable):
    return (deglex_key(p.head), deglex_key(p.tail))


# -- ring descriptors -------------------------------------------------------


class Ring:
    name = "?"
    is_field = False
    characteristic = 0

    def zero(self):
        return self.from_int(0)

    def one(self):
        return self.from_int(1)

    def from_int(self, n: int):
        raise NotImplementedError

    def coerce(self, x):
        """Bring ``x`` (an int or an element of this ring) into canonical form."""
        raise NotImplementedError

    def div(self, a, b):
        raise TypeError(f"{self.name} is not a field")

    def format(self, e, style: str = "subscript") -> str:
        return str(e)

    def __repr__(self):
        return f"<ring {self.name}>"

    def __str__(self):
        return self.name


class IntegerRing(Ring):
    name = "ZZ"

    def from_int(self, n):
        return int(n)

    def coerce(self, x):
        if isinstance(x, Fraction):
            if x.denominator != 1:
                raise ValueError(f"{x} is not an integer")
            return int(x.numerator)
        if isinstance(x, int):
            return x
        raise RingMismatch(f"cannot coerce {x!r} into ZZ")

    def __eq__(self, other):
        return isinstance(other, IntegerRing)

    def __hash__(self):
        return hash("ZZ")


class RationalField(Ring):
    name = "QQ"
    is_field = True

    def from_int(self, n):
        return Fraction(n)

    def coerce(self, x):
        if isinstance(x, (int, Fraction)):
            return Fraction(x)
        raise RingMismatch(f"cannot coerce {x!r} into QQ")

    def div(self, a, b):
        return Fraction(a) / b

    def format(self, e, style="subscript"):
        return str(Fraction(e))

    def __eq__(self, other):
        return isinstance(other, RationalField)

    def __hash__(self):
        return hash("QQ")


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    i = 2
    while i * i <= p:
        if p % i == 0:
            return False
        i += 1
    return True


class PrimeField(Ring):
    is_field = True

    def __init__(self, p: int):
        if not _is_prime(p):
            raise ValueError(f"{p} is not prime")
        self.p = p
        self.characteristic = p
        self.name = f"ZZ/{p}"

    def from_int(self, n):
        return ModP(n, self.p)

    def coerce(self, x):
        if isinstance(x, ModP):
            if x.p != self.p:
                raise RingMismatch(f"ZZ/{x.p} element in {self.name}")
            return x
        if isinstance(x, int):
            return ModP(x, self.p)
        if isinstance(x, Fraction):
            return ModP(x.numerator, self.p) / ModP(x.denominator, self.p)
        raise RingMismatch(f"cannot coerce {x!r} into {self.name}")

    def div(self, a, b):
        return self.coerce(a) / self.coerce(b)

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self):
        return hash(("ZZ/p", self.p))


class ParameterRing(Ring):
    """``ZZ[params]`` with a fixed parameter order.

    ``params`` may be :class:`ParameterVariable` objects (the ring ZZ[C] of a
    generic marked family) or plain names such as ``"t"``.
    """

    def __init__(self, params):
        self.params = tuple(params)
        self.index = {p: i for i, p in enumerate(self.params)}
        if len(self.index) != len(self.params):
            raise ValueError("duplicate parameters")
        if self.params and all(isinstance(p, str) for p in self.params):
            self.name = "ZZ[" + ",".join(self.params) + "]"
        else:
            self.name = "ZZ[C]"

    def from_int(self, n):
        return ParamPoly._raw(self, {(): n} if n else {})

    def gen(self, p) -> ParamPoly:
        """The element of the parameter ``p`` (a name, variable or index)."""
        i = p if isinstance(p, int) else self.index[p]
        return ParamPoly._raw(self, {((i, 1),): 1})

    def gens(self) -> list[ParamPoly]:
        return [self.gen(i) for i in range(len(self.params))]

    def coerce(self, x):
        if isinstance(x, ParamPoly):
            if x.ring is not self and x.ring != self:
                raise RingMismatch("parameter polynomial from another ring")
            return x
        if isinstance(x, int):
            return self.from_int(x)
        if isinstance(x, Fraction) and x.denominator == 1:
            return self.from_int(int(x))
        raise RingMismatch(f"cannot coerce {x!r} into {self.name}")

    def param_name(self, i: int, style: str = "subscript") -> str:
        p = self.params[i]
        if isinstance(p, ParameterVariable):
            return p.subscript() if style == "subscript" else p.bracket()
        return str(p)

    def format(self, e, style="subscript") -> str:
        e = self.coerce(e)
        if not e.terms:
            return "0"
        pieces = []
        for key, c in e.sorted_terms():
            factors = []
            for i, k in key:
                name = self.param_name(i, style)
                factors.append(name if k == 1 else f"{name}^{k}")
            if not factors:
                body = str(abs(c))
            elif abs(c) == 1:
                body = "*".join(factors)
            else:
                body = str(abs(c)) + "*" + "*".join(factors)
            sign = "-" if c < 0 else "+"
            pieces.append((sign, body))
        first_sign, first = pieces[0]
        out = ("-" if first_sign == "-" else "") + first
        for sign, body in pieces[1:]:
            out += f" {sign} {body}"
        return out

    def __eq__(self, other):
        return isinstance(other, ParameterRing) and other.params == self.params

    def __hash__(self):
        return hash(("ZZ[]", self.params))


ZZ = IntegerRing()
QQ = RationalField()


def parse_ring(text: str, params=None) -> Ring:
    """Parse ``ZZ``, ``QQ``, ``ZZ/p``, ``ZZ[C]`` or ``ZZ[t,u]``.

    ``ZZ[C]`` needs the parameter list of a generic family via ``params``.
    """
    t = text.strip().replace(" ", "")
    if t in ("ZZ", "Z"):
        return ZZ
    if t in ("QQ", "Q"):
        return QQ
    if t.startswith("ZZ/") or t.startswith("GF("):
        digits = t[3:] if t.startswith("ZZ/") else t[3:-1]
        return PrimeField(int(digits))
    if t.startswith("ZZ[") and t.endswith("]"):
        inner = t[3:-1]
        if inner == "C":
            if params is None:
                raise ValueError("ZZ[C] needs the parameters of a generic family")
            return ParameterRing(params)
        return ParameterRing(inner.split(","))
    raise ValueError(f"unknown ring descriptor {text!r}")


def ring_to_string(ring: Ring) -> str:
    if isinstance(ring, ParameterRing) and ring.name == "ZZ[C]":
        return "ZZ[C]"
    return ring.name


# -- homomorphisms ----------------------------------------------------------


class RingHomomorphism:
    """A ring map out of ZZ, or out of a parameter ring by substitution."""

    def __init__(self, source: Ring, target: Ring, assignment: dict | None = None):
        self.source = source
        self.target = target
        self.assignment = {}
        if isinstance(source, ParameterRing):
            assignment = assignment or {}
            missing = [p for p in source.params if p not in assignment]
            if missing:
                raise ValueError(f"assignment misses {len(missing)} parameters, e.g. {missing[0]}")
            self._values = [target.coerce(assignment[p]) for p in source.params]
            self.assignment = dict(assignment)
        elif not isinstance(source, IntegerRing):
            raise TypeError("homomorphisms are defined out of ZZ or ZZ[params]")

    def __call__(self, e):
        return self.evaluate(e)

    def evaluate(self, e: Any):
        if not isinstance(self.source, ParameterRing):
            return self.target.coerce(e)
        e = self.source.coerce(e)
        target = self.target
        powers: dict[tuple[int, int], Any] = {}
        total = target.zero()
        for key, c in e.terms.items():
            term = target.from_int(c)
            for i, k in key:
                pk = powers.get((i, k))
                if pk is None:
                    pk = powers[(i, k)] = self._values[i] ** k
                term = term * pk
            total = total + term
        return target.coerce(total)

