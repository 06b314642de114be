"""Strongly stable monomial ideals and their combinatorics."""

from __future__ import annotations

import json
from dataclasses import dataclass
from functools import cached_property

from .monomials import (
    Monomial,
    deglex_key,
    degree,
    divide,
    divides,
    format_monomial,
    min_var,
    monomials_of_degree,
    multiply,
    parse_monomial,
    variable,
)


class NotStronglyStable(ValueError):
    """Raised with the offending generator and exchange move."""

    def __init__(self, generator: Monomial, j: int, i: int):
        self.generator = generator
        self.moved_from = j
        self.moved_to = i
        moved = multiply(divide(generator, variable(j, len(generator))), variable(i, len(generator)))
        super().__init__(
            f"not strongly stable: (x{i}/x{j})*{format_monomial(generator)} = "
            f"{format_monomial(moved)} is not in the ideal"
        )


def minimalize(gens) -> tuple[Monomial, ...]:
    """Drop every monomial divisible by another one of the set.

    The empty set gives the empty tuple, which stands for the zero ideal.
    """
    unique = sorted(set(gens), key=deglex_key)
    kept: list[Monomial] = []
    for m in unique:
        if not any(divides(g, m) for g in kept):
            kept.append(m)
    return tuple(sorted(kept, key=deglex_key, reverse=True))


@dataclass(frozen=True)
class MonomialIdeal:
    """A monomial ideal given by its minimal generators (descending DegLex)."""

    nvars: int
    generators: tuple[Monomial, ...]

    def __post_init__(self):
        if self.nvars < 1:
            raise ValueError("need at least one variable")
        for g in self.generators:
            if len(g) != self.nvars or any(e < 0 for e in g):
                raise ValueError(f"bad exponent vector {g} for {self.nvars} variables")
        object.__setattr__(self, "generators", minimalize(self.generators))

    def contains(self, m: Monomial) -> bool:
        return any(divides(g, m) for g in self.generators)

    def is_zero(self) -> bool:
        return not self.generators

    def is_unit(self) -> bool:
        return any(degree(g) == 0 for g in self.generators)


def exchange_violation(ideal: MonomialIdeal):
    """First ``(generator, j, i)`` breaking the exchange condition, or None."""
    n = ideal.nvars
    for g in ideal.generators:
        for j in range(n):
            if not g[j]:
                continue
            for i in range(j + 1, n):
                moved = list(g)
                moved[j] -= 1
                moved[i] += 1
                if not ideal.contains(tuple(moved)):
                    return g, j, i
    return None


def is_strongly_stable(ideal: MonomialIdeal) -> bool:
    # checking the generators is enough: every element is a multiple of one
    return exchange_violation(ideal) is None


class StableIdeal:
    """A proper, nonzero strongly stable monomial ideal.

    Caches membership, star decompositions and sous-escalier slices; the
    caches are plain dicts filled idempotently, so concurrent readers can at
    worst recompute an entry.
    """

    def __init__(self, nvars: int, generators):
        base = MonomialIdeal(nvars, tuple(tuple(g) for g in generators))
        if base.is_zero():
            raise ValueError("the zero ideal is not allowed here")
        if base.is_unit():
            raise ValueError("the unit ideal is not allowed here")
        bad = exchange_violation(base)
        if bad is not None:
            raise NotStronglyStable(*bad)
        self.nvars = nvars
        self.generators = base.generators
        self.generator_set = frozenset(self.generators)
        self._member: dict[Monomial, bool] = {}
        self._star: dict[Monomial, tuple[Monomial, Monomial]] = {}
        self._slices: dict[int, tuple[Monomial, ...]] = {}

    @classmethod
    def parse(cls, text: str, nvars: int) -> "StableIdeal":
        """Parse ``x2^2,x2*x1,x1^3``."""
        gens = [parse_monomial(t, nvars) for t in text.split(",") if t.strip()]
        return cls(nvars, gens)

    @classmethod
    def from_json(cls, data) -> "StableIdeal":
        if isinstance(data, str):
            data = json.loads(data)
        return cls(int(data["vars"]), [tuple(g) for g in data["generators"]])

    def to_json(self) -> dict:
        return {"vars": self.nvars, "generators": [list(g) for g in self.generators]}

    def __str__(self):
        return ",".join(format_monomial(g) for g in self.generators)

    def __repr__(self):
        return f"StableIdeal({self.nvars}, '{self}')"

    def __eq__(self, other):
        return (
            isinstance(other, StableIdeal)
            and other.nvars == self.nvars
            and other.generator_set == self.generator_set
        )

    def __hash__(self):
        return hash((self.nvars, self.generator_set))

    @cached_property
    def max_degree(self) -> int:
        """The largest degree ``m`` of a minimal generator."""
        return max(degree(g) for g in self.generators)

    @cached_property
    def min_degree(self) -> int:
        return min(degree(g) for g in self.generators)

    def contains(self, m: Monomial) -> bool:
        hit = self._member.get(m)
        if hit is None:
            hit = self._member[m] = any(divides(g, m) for g in self.generators)
        return hit

    def sous_escalier(self, s: int) -> tuple[Monomial, ...]:
        """Degree-``s`` monomials outside the ideal, descending DegLex."""
        if s < 0:
            raise ValueError("negative degree")
        got = self._slices.get(s)
        if got is None:
            monos = [m for m in monomials_of_degree(self.nvars, s) if not self.contains(m)]
            got = self._slices[s] = tuple(sorted(monos, key=deglex_key, reverse=True))
        return got

    def degree_part(self, s: int) -> tuple[Monomial, ...]:
        """Degree-``s`` monomials of the ideal, descending DegLex."""
        monos = [m for m in monomials_of_degree(self.nvars, s) if self.contains(m)]
        return tuple(sorted(monos, key=deglex_key, reverse=True))

    def star_decompose(self, m: Monomial) -> tuple[Monomial, Monomial]:
        """Return ``(generator, cofactor)`` with ``generator * cofactor == m``.

        The generator is the unique one whose smallest variable is at least the
        greatest variable of the cofactor.  While the current monomial is not a
        minimal generator, dividing by its smallest variable stays in the ideal.
        """
        got = self._star.get(m)
        if got is not None:
            return got
        if not self.contains(m):
            raise ValueError(f"{format_monomial(m)} is not in the ideal")
        cur = list(m)
        cof = [0] * self.nvars
        while tuple(cur) not in self.generator_set:
            j = min_var(cur)
            cur[j] -= 1
            cof[j] += 1
        got = self._star[m] = (tuple(cur), tuple(cof))
        return got

    def truncate(self, m: int) -> "StableIdeal":
        """Minimal generators of the truncation in degrees ``>= m``."""
        gens = []
        for g in self.generators:
            d = degree(g)
            if d >= m:
                gens.append(g)
            else:
                gens.extend(multiply(g, c) for c in monomials_of_degree(self.nvars, m - d))
        return StableIdeal(self.nvars, gens)

    def is_saturated(self) -> bool:
        # for strongly stable ideals saturation only strips powers of x0
        return all(g[0] == 0 for g in self.generators)

    def saturation(self) -> "StableIdeal":
        if any(degree(g) == g[0] for g in self.generators):
            raise ValueError(f"{self} contains a power of x0; its saturation is the unit ideal")
        return StableIdeal(self.nvars, [(0,) + g[1:] for g in self.generators])

    def truncation_witness(self):
        """Return ``(saturation, m)`` if this is ``saturation_{>=m}``, else None.

        Ideals whose saturation is the unit ideal also give None.
        """
        if any(degree(g) == g[0] for g in self.generators):
            return None
        sat = self.saturation()
        if sat == self:
            return sat, self.min_degree
        for m in range(1, self.max_degree + 1):
            if sat.truncate(m) == self:
                return sat, m
        return None

    def is_m_truncation(self) -> bool:
        return self.truncation_witness() is not None

    def rho(self) -> int:
        """Largest degree of a minimal generator divisible by ``x1`` (0 if none)."""
        if self.nvars < 2:
            return 0
        return max((degree(g) for g in self.generators if g[1] > 0), default=0)

    def ek_moves(self):
        """Yield ``(generator, j)`` for every variable ``x_j`` above ``min x^alpha``."""
        for g in sorted(self.generators, key=deglex_key):
            for j in range(min_var(g) + 1, self.nvars):
                yield g, j

    def gens_of_degree(self, d: int) -> tuple[Monomial, ...]:
        return tuple(g for g in self.generators if degree(g) == d)


def borel_closure(nvars: int, monos) -> StableIdeal:
    """Smallest strongly stable ideal containing ``monos``."""
    seen = set()
    stack = [tuple(m) for m in monos]
    while stack:
        m = stack.pop()
        if m in seen:
            continue
        seen.add(m)
        for j in range(nvars):
            if m[j]:
                for i in range(j + 1, nvars):
                    up = list(m)
                    up[j] -= 1
                    up[i] += 1
                    stack.append(tuple(up))
    return StableIdeal(nvars, seen)

