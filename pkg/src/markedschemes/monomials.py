"""Exponent-vector monomials, term orders and the Borel partial order.

A monomial in ``n + 1`` variables ``x0 < x1 < ... < xn`` is a plain tuple of
non-negative integers listed x0-first, so ``(0, 1, 2)`` is ``x2^2*x1``.
Tuples hash and compare structurally, which is all the rest of the package
needs; Python's built-in tuple ordering is never used as a term order.
"""

from __future__ import annotations

import enum
import re
from collections.abc import Iterator

Monomial = tuple[int, ...]


def one(nvars: int) -> Monomial:
    return (0,) * nvars


def variable(i: int, nvars: int) -> Monomial:
    """Return the monomial ``x_i``."""
    if not 0 <= i < nvars:
        raise ValueError(f"variable index {i} out of range for {nvars} variables")
    return tuple(1 if k == i else 0 for k in range(nvars))


def degree(m: Monomial) -> int:
    return sum(m)


def min_var(m: Monomial) -> int:
    """Index of the smallest variable dividing ``m``."""
    for i, e in enumerate(m):
        if e:
            return i
    raise ValueError("min_var is undefined for unit monomial")


def max_var(m: Monomial) -> int:
    """Index of the greatest variable dividing ``m``."""
    for i in range(len(m) - 1, -1, -1):
        if m[i]:
            return i
    raise ValueError("max_var is undefined for unit monomial")


def divides(a: Monomial, b: Monomial) -> bool:
    return all(x <= y for x, y in zip(a, b))


def multiply(a: Monomial, b: Monomial) -> Monomial:
    return tuple(x + y for x, y in zip(a, b))


def divide(b: Monomial, a: Monomial) -> Monomial:
    """Return ``b / a``; ``a`` must divide ``b``."""
    q = tuple(y - x for x, y in zip(a, b))
    if any(e < 0 for e in q):
        raise ValueError(f"{format_monomial(a)} does not divide {format_monomial(b)}")
    return q


def monomials_of_degree(nvars: int, s: int) -> Iterator[Monomial]:
    """Yield every monomial of degree ``s`` (no particular order)."""
    if nvars == 1:
        yield (s,)
        return
    for e in range(s, -1, -1):
        for rest in monomials_of_degree(nvars - 1, s - e):
            yield rest + (e,)


# -- term orders ------------------------------------------------------------


class TermOrder(enum.Enum):
    LEX = "lex"
    DEGLEX = "deglex"
    DEGREVLEX = "degrevlex"

    @classmethod
    def parse(cls, name: str) -> "TermOrder":
        try:
            return cls(name.lower())
        except ValueError:
            raise ValueError(f"unknown term order {name!r}") from None

    def key(self, m: Monomial) -> tuple:
        return _KEYS[self](m)


def lex_key(m: Monomial) -> tuple:
    # x0 < ... < xn: the exponent of the greatest variable decides first
    return m[::-1]


def deglex_key(m: Monomial) -> tuple:
    return (sum(m),) + m[::-1]


def degrevlex_key(m: Monomial) -> tuple:
    # equal degree: the smaller exponent on the smallest variable wins
    return (sum(m),) + tuple(-e for e in m)


_KEYS = {
    TermOrder.LEX: lex_key,
    TermOrder.DEGLEX: deglex_key,
    TermOrder.DEGREVLEX: degrevlex_key,
}


def compare(order: TermOrder, a: Monomial, b: Monomial) -> int:
    """Return -1, 0 or 1 as ``a`` is less than, equal to or greater than ``b``."""
    if len(a) != len(b):
        raise ValueError("monomials live in different numbers of variables")
    ka, kb = order.key(a), order.key(b)
    return (ka > kb) - (ka < kb)


def sorted_desc(monos, order: TermOrder = TermOrder.DEGLEX) -> list[Monomial]:
    return sorted(monos, key=order.key, reverse=True)


def borel_geq(a: Monomial, b: Monomial) -> bool:
    """True iff ``a >=_B b`` in the Borel order.

    ``a`` is reachable from ``b`` by moves replacing a dividing ``x_j`` by
    some ``x_i`` with ``i > j`` exactly when every upper tail sum of the
    exponents of ``a`` dominates the one of ``b``.
    """
    if sum(a) != sum(b):
        raise ValueError("Borel order compares monomials of equal degree only")
    ta = tb = 0
    for i in range(len(a) - 1, -1, -1):
        ta += a[i]
        tb += b[i]
        if ta < tb:
            return False
    return True


# -- text syntax ------------------------------------------------------------

_FACTOR = re.compile(r"^x(\d+)(?:\^(\d+))?$")


def parse_monomial(text: str, nvars: int) -> Monomial:
    """Parse ``x2^2*x1`` style text; ``1`` is the unit monomial."""
    text = text.strip()
    exps = [0] * nvars
    if text == "1":
        return tuple(exps)
    for factor in text.split("*"):
        match = _FACTOR.match(factor.strip())
        if match is None:
            raise ValueError(f"cannot parse monomial factor {factor!r}")
        i = int(match.group(1))
        if i >= nvars:
            raise ValueError(f"variable x{i} out of range for {nvars} variables")
        exps[i] += int(match.group(2) or 1)
    return tuple(exps)


def format_monomial(m: Monomial) -> str:
    factors = []
    for i in range(len(m) - 1, -1, -1):
        if m[i] == 1:
            factors.append(f"x{i}")
        elif m[i] > 1:
            factors.append(f"x{i}^{m[i]}")
    return "*".join(factors) if factors else "1"
