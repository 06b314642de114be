"""Marked polynomials and marked sets over a strongly stable ideal.

A marked polynomial ``f_alpha`` has head ``x^alpha`` (coefficient exactly 1)
and a tail supported on the sous-escalier in the same degree.  Tails are
stored as the coefficients they carry *in f*, so ``f = x^alpha + sum(tail)``.

Reduction never uses a term order: a monomial ``x^eta`` of the ideal is
rewritten through its star decomposition ``x^eta = x^alpha * x^delta`` by
subtracting ``c * x^delta * f_alpha``.
"""

from __future__ import annotations

import json
import random
import sys
from dataclasses import dataclass, field

from .ideals import StableIdeal
from .monomials import (
    Monomial,
    deglex_key,
    degree,
    format_monomial,
    lex_key,
    max_var,
    min_var,
    monomials_of_degree,
    multiply,
    variable,
)
from .polys import Poly, add_scaled, format_polynomial, homogeneous_degree, parse_element, parse_polynomial
from .rings import ParameterVariable, Ring, RingHomomorphism, parameter_sort_key, parse_ring, ring_to_string


class MarkedSetError(ValueError):
    pass


@dataclass(frozen=True, eq=False)
class MarkedPolynomial:
    head: Monomial
    tail: dict  # Monomial -> coefficient in f
    ring: Ring

    def poly(self) -> Poly:
        out = {self.head: self.ring.one()}
        out.update(self.tail)
        return out

    def support(self) -> list[Monomial]:
        return [self.head] + sorted(self.tail, key=deglex_key, reverse=True)

    def __eq__(self, other):
        return (
            isinstance(other, MarkedPolynomial)
            and self.head == other.head
            and self.tail == other.tail
        )

    def __str__(self):
        return format_polynomial(self.poly(), self.ring)


def generic_parameters(J: StableIdeal) -> list[ParameterVariable]:
    """Every admissible ``C[alpha|beta]``, DegLex descending on (head, tail)."""
    params = [
        ParameterVariable(a, b) for a in J.generators for b in J.sous_escalier(degree(a))
    ]
    return sorted(params, key=parameter_sort_key, reverse=True)


class MarkedSet:
    """One marked polynomial per minimal generator of ``ideal``."""

    def __init__(self, ideal: StableIdeal, ring: Ring, polys: dict[Monomial, MarkedPolynomial]):
        self.ideal = ideal
        self.ring = ring
        self.polys = polys
        self._dense = {a: f.poly() for a, f in polys.items()}

    @property
    def nvars(self) -> int:
        return self.ideal.nvars

    def poly(self, alpha: Monomial) -> Poly:
        return self._dense[alpha]

    def __getitem__(self, alpha: Monomial) -> MarkedPolynomial:
        return self.polys[alpha]

    def __iter__(self):
        # heads in ascending DegLex
        return (self.polys[a] for a in reversed(self.ideal.generators))

    def __eq__(self, other):
        return (
            isinstance(other, MarkedSet)
            and self.ideal == other.ideal
            and self.ring == other.ring
            and all(self.polys[a] == other.polys[a] for a in self.ideal.generators)
        )

    def is_monomial(self) -> bool:
        return not any(f.tail for f in self.polys.values())

    def map_coefficients(self, hom: RingHomomorphism) -> "MarkedSet":
        """Push every tail coefficient through ``hom``."""
        tails = {}
        for a, f in self.polys.items():
            for b, c in f.tail.items():
                tails[(a, b)] = hom(c)
        return build_marked_set(self.ideal, hom.target, tails)

    def to_json(self) -> dict:
        style = "bracket"
        polys = []
        for f in self:
            tail = [
                {"monomial": list(b), "coefficient": self.ring.format(f.tail[b], style)}
                for b in sorted(f.tail, key=deglex_key, reverse=True)
            ]
            polys.append({"head": list(f.head), "tail": tail})
        return {"ring": ring_to_string(self.ring), "vars": self.nvars, "polys": polys}

    @classmethod
    def from_json(cls, data, ring: Ring | None = None) -> "MarkedSet":
        if isinstance(data, str):
            data = json.loads(data)
        nvars = int(data["vars"])
        heads = [tuple(p["head"]) for p in data["polys"]]
        J = StableIdeal(nvars, heads)
        if ring is None:
            text = data.get("ring", "ZZ")
            ring = parse_ring(text, generic_parameters(J) if text.replace(" ", "") == "ZZ[C]" else None)
        tails = {}
        for p in data["polys"]:
            a = tuple(p["head"])
            for t in p.get("tail", []):
                tails[(a, tuple(t["monomial"]))] = parse_element(str(t["coefficient"]), ring, nvars)
        return build_marked_set(J, ring, tails)

    def to_text(self, style: str = "subscript") -> str:
        return "\n".join(format_polynomial(f.poly(), self.ring, style) for f in self)

    def __str__(self):
        return "{" + ", ".join(str(f) for f in self) + "}"


def build_marked_set(J: StableIdeal, ring: Ring, tails: dict) -> MarkedSet:
    """Validate ``{(alpha, beta): coefficient}`` into a marked set; missing entries are 0."""
    polys: dict[Monomial, dict] = {a: {} for a in J.generators}
    for (a, b), c in tails.items():
        a, b = tuple(a), tuple(b)
        if a not in polys:
            raise MarkedSetError(f"{format_monomial(a)} is not a minimal generator")
        if degree(b) != degree(a):
            raise MarkedSetError(
                f"tail {format_monomial(b)} has a different degree than {format_monomial(a)}"
            )
        if J.contains(b):
            raise MarkedSetError(
                f"tail {format_monomial(b)} of {format_monomial(a)} lies in the ideal"
            )
        c = ring.coerce(c)
        if c:
            polys[a][b] = c
    return MarkedSet(J, ring, {a: MarkedPolynomial(a, t, ring) for a, t in polys.items()})


def marked_set_from_polynomials(J: StableIdeal, ring: Ring, polys) -> MarkedSet:
    """Identify heads inside plain polynomials: the one support monomial in ``J``."""
    tails = {}
    seen = set()
    for p in polys:
        inside = [m for m in p if J.contains(m)]
        if len(inside) != 1 or inside[0] not in J.generator_set:
            shown = format_polynomial(p, ring)
            raise MarkedSetError(f"{shown} needs exactly one monomial in the ideal, a minimal generator")
        a = inside[0]
        if p[a] != ring.one():
            raise MarkedSetError(f"head {format_monomial(a)} is not monic")
        if a in seen:
            raise MarkedSetError(f"two polynomials with head {format_monomial(a)}")
        seen.add(a)
        for b, c in p.items():
            if b != a:
                tails[(a, b)] = c
    missing = [a for a in J.generators if a not in seen]
    if missing:
        raise MarkedSetError(f"no polynomial with head {format_monomial(missing[0])}")
    return build_marked_set(J, ring, tails)


def parse_marked_set(text: str, J: StableIdeal, ring: Ring) -> MarkedSet:
    """Text form: one polynomial per line (blank lines and ``#`` comments skipped)."""
    polys = []
    for line in text.splitlines():
        line = line.split("#", 1)[0].strip()
        if line:
            polys.append(parse_polynomial(line, J.nvars, ring))
    return marked_set_from_polynomials(J, ring, polys)


# -- reduction --------------------------------------------------------------


@dataclass(frozen=True)
class ReductionStep:
    monomial: Monomial
    coefficient: object
    generator: Monomial
    cofactor: Monomial

    def describe(self, ring: Ring) -> str:
        c = ring.format(self.coefficient)
        mult = format_monomial(self.cofactor)
        return (
            f"{format_monomial(self.monomial)}: subtract ({c})*{mult}*f[{format_monomial(self.generator)}]"
        )


STRATEGIES = ("deglex", "smallest", "random", "auxiliary")


class Reducer:
    """Computes J-remainders for one marked set; caches monomial normal forms."""

    def __init__(self, F: MarkedSet):
        self.F = F
        self.J = F.ideal
        self._nf: dict[Monomial, Poly] = {}

    def reduce(
        self,
        h: Poly,
        strategy: str = "deglex",
        rng: random.Random | None = None,
        trace: list | None = None,
        check_termination: bool = False,
    ) -> Poly:
        homogeneous_degree(h)
        if strategy == "auxiliary":
            return self._reduce_auxiliary(h)
        if strategy not in STRATEGIES:
            raise ValueError(f"unknown strategy {strategy!r}")
        if strategy == "random" and rng is None:
            rng = random.Random(0)
        J, F = self.J, self.F
        h = dict(h)
        metric = termination_metric(J, h) if check_termination else None
        while True:
            inside = [m for m in h if J.contains(m)]
            if not inside:
                return h
            if strategy == "deglex":
                eta = max(inside, key=deglex_key)
            elif strategy == "smallest":
                eta = min(inside, key=deglex_key)
            else:
                eta = rng.choice(sorted(inside, key=deglex_key))
            c = h[eta]
            alpha, delta = J.star_decompose(eta)
            if trace is not None:
                trace.append(ReductionStep(eta, c, alpha, delta))
            add_scaled(h, F.poly(alpha), -c, delta)
            if check_termination:
                after = termination_metric(J, h)
                if not after < metric:
                    raise AssertionError("reduction step did not decrease the cofactor multiset")
                metric = after

    def normal_form(self, eta: Monomial) -> Poly:
        """Remainder of a single monomial, memoized."""
        got = self._nf.get(eta)
        if got is not None:
            return got
        if not self.J.contains(eta):
            return {eta: self.F.ring.one()}
        alpha, delta = self.J.star_decompose(eta)
        out: Poly = {}
        for beta, t in self.F.polys[alpha].tail.items():
            # x^eta = x^delta f_alpha - sum t * x^delta x^beta
            add_scaled(out, self._monomial_nf(multiply(delta, beta)), -t)
        self._nf[eta] = out
        return out

    def _monomial_nf(self, m: Monomial) -> Poly:
        if self.J.contains(m):
            return self.normal_form(m)
        return {m: self.F.ring.one()}

    def _reduce_auxiliary(self, h: Poly) -> Poly:
        out: Poly = {}
        limit = sys.getrecursionlimit()
        need = 4 * len(h) + 1000
        if need > limit:
            sys.setrecursionlimit(need)
        for m, c in h.items():
            add_scaled(out, self._monomial_nf(m), c)
        return out


def termination_metric(J: StableIdeal, h: Poly) -> list:
    """Lex keys of the cofactors of the ideal's monomials in ``h``, largest first."""
    keys = [lex_key(J.star_decompose(m)[1]) for m in h if J.contains(m)]
    return sorted(keys, reverse=True)


def reduce(F: MarkedSet, h: Poly, strategy: str = "deglex", rng=None, trace=None) -> Poly:
    return Reducer(F).reduce(h, strategy=strategy, rng=rng, trace=trace)


# -- degree slices ----------------------------------------------------------


@dataclass(frozen=True)
class Multiple:
    """The polynomial ``x^cofactor * f_generator``."""

    cofactor: Monomial
    generator: Monomial

    @property
    def head(self) -> Monomial:
        return multiply(self.cofactor, self.generator)

    def label(self) -> str:
        c = format_monomial(self.cofactor)
        g = format_monomial(self.generator)
        return f"f[{g}]" if c == "1" else f"{c}*f[{g}]"


def is_star_multiple(cofactor: Monomial, generator: Monomial) -> bool:
    return degree(cofactor) == 0 or max_var(cofactor) <= min_var(generator)


def all_multiples(J: StableIdeal, s: int) -> list[Multiple]:
    """All degree-``s`` multiples, generators DegLex ascending then cofactors DegLex descending."""
    out = []
    for a in sorted(J.generators, key=deglex_key):
        d = s - degree(a)
        if d < 0:
            continue
        for delta in sorted(monomials_of_degree(J.nvars, d), key=deglex_key, reverse=True):
            out.append(Multiple(delta, a))
    return out


@dataclass(frozen=True)
class DegreeSlice:
    s: int
    v_multiples: tuple[Multiple, ...]
    hat_multiples: tuple[Multiple, ...]


def degree_slice(F_or_J, s: int) -> DegreeSlice:
    J = F_or_J.ideal if isinstance(F_or_J, MarkedSet) else F_or_J
    v, hat = [], []
    for mult in all_multiples(J, s):
        (v if is_star_multiple(mult.cofactor, mult.generator) else hat).append(mult)
    v.sort(key=lambda m: deglex_key(m.head), reverse=True)
    return DegreeSlice(s, tuple(v), tuple(hat))


def multiple_poly(F: MarkedSet, mult: Multiple) -> Poly:
    return {multiply(m, mult.cofactor): c for m, c in F.poly(mult.generator).items()}


@dataclass(frozen=True)
class AuxiliaryBasis:
    s: int
    polys: dict  # Monomial in J_s -> MarkedPolynomial with tail on N(J)_s


def auxiliary_basis(F: MarkedSet, s: int, reducer: Reducer | None = None) -> AuxiliaryBasis:
    """``f~_gamma = x^gamma - remainder(x^gamma)`` for every ``x^gamma`` in ``J_s``."""
    red = reducer or Reducer(F)
    out = {}
    for g in F.ideal.degree_part(s):
        tail = {m: -c for m, c in red.normal_form(g).items()}
        out[g] = MarkedPolynomial(g, tail, F.ring)
    return AuxiliaryBasis(s, out)


# -- EK pairs and obstructions ----------------------------------------------


@dataclass(frozen=True)
class EKPair:
    """``S = x_j * f_base - x^nu * f_partner`` with ``x_j x^base = x^partner *_J x^nu``."""

    base: Monomial
    variable: int
    partner: Monomial
    partner_cofactor: Monomial

    @property
    def degree(self) -> int:
        return degree(self.base) + 1

    def label(self) -> str:
        return (
            f"x{self.variable}*f[{format_monomial(self.base)}] - "
            f"{format_monomial(self.partner_cofactor)}*f[{format_monomial(self.partner)}]"
        )

    def to_json(self) -> dict:
        return {
            "base": list(self.base),
            "variable": self.variable,
            "partner": list(self.partner),
            "partner_cofactor": list(self.partner_cofactor),
        }


def ek_pairs(F_or_J) -> list[EKPair]:
    J = F_or_J.ideal if isinstance(F_or_J, MarkedSet) else F_or_J
    out = []
    for a, j in J.ek_moves():
        partner, nu = J.star_decompose(multiply(a, variable(j, J.nvars)))
        out.append(EKPair(a, j, partner, nu))
    return out


def ek_polynomial(F: MarkedSet, pair: EKPair) -> Poly:
    h = multiple_poly(F, Multiple(variable(pair.variable, F.nvars), pair.base))
    add_scaled(h, F.poly(pair.partner), -F.ring.one(), pair.partner_cofactor)
    return h


def syzygy_lift(J: StableIdeal, mult: Multiple) -> Multiple:
    """The star multiple with the same head as a hat multiple."""
    g, d = J.star_decompose(mult.head)
    return Multiple(d, g)


@dataclass(frozen=True)
class ObstructionModule:
    s: int
    sources: tuple[tuple[Multiple, Multiple], ...]  # (hat multiple, its star lift)
    remainders: tuple  # one remainder per source, zeros included

    @property
    def generators(self) -> list:
        return [r for r in self.remainders if r]

    def is_zero(self) -> bool:
        return not self.generators


def obstructions(F: MarkedSet, s: int, reducer: Reducer | None = None) -> ObstructionModule:
    """Reduce every element ``x^delta f_alpha - x^delta' f_alpha'`` of SF in degree ``s``."""
    red = reducer or Reducer(F)
    sources, remainders = [], []
    for mult in degree_slice(F, s).hat_multiples:
        lift = syzygy_lift(F.ideal, mult)
        h = multiple_poly(F, mult)
        add_scaled(h, multiple_poly(F, lift), -F.ring.one())
        sources.append((mult, lift))
        remainders.append(red.reduce(h, strategy="auxiliary"))
    return ObstructionModule(s, tuple(sources), tuple(remainders))


@dataclass
class BasisCertificate:
    basis: bool
    witnesses: list = field(default_factory=list)  # (EKPair, nonzero remainder)


def is_marked_basis(F: MarkedSet, reducer: Reducer | None = None) -> BasisCertificate:
    red = reducer or Reducer(F)
    witnesses = []
    for pair in ek_pairs(F):
        r = red.reduce(ek_polynomial(F, pair), strategy="auxiliary")
        if r:
            witnesses.append((pair, r))
    return BasisCertificate(not witnesses, witnesses)


def degree_bound_basis_test(F: MarkedSet) -> bool:
    red = Reducer(F)
    J = F.ideal
    return all(
        obstructions(F, s, red).is_zero() for s in range(J.min_degree, J.max_degree + 2)
    )


def extract_marked_set(J: StableIdeal, ring: Ring, generators) -> MarkedSet:
    """The unique marked set inside the ideal spanned by ``generators`` (field rings only)."""
    from .verify.linear import unique_marked_set_solver

    tails = unique_marked_set_solver(J, ring, generators)
    return build_marked_set(J, ring, tails)


__all__ = [
    "AuxiliaryBasis",
    "BasisCertificate",
    "DegreeSlice",
    "EKPair",
    "MarkedPolynomial",
    "MarkedSet",
    "MarkedSetError",
    "Multiple",
    "ObstructionModule",
    "Reducer",
    "ReductionStep",
    "STRATEGIES",
    "auxiliary_basis",
    "build_marked_set",
    "degree_bound_basis_test",
    "degree_slice",
    "ek_pairs",
    "ek_polynomial",
    "extract_marked_set",
    "generic_parameters",
    "is_marked_basis",
    "marked_set_from_polynomials",
    "obstructions",
    "parse_marked_set",
    "reduce",
]
