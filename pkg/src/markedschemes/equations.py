"""Equations of marked schemes and Groebner strata in the parameter ring ZZ[C].

The generic marked set has one parameter per admissible pair ``(alpha, beta)``
and ``f_alpha = x^alpha + sum C[alpha|beta] x^beta``.  Reducing every EK
polynomial of it and reading off the coefficients of the residual
sous-escalier monomials gives generators of the defining ideal.
"""

from __future__ import annotations

import json
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

from .hilbert import HilbertData, hilbert_data
from .ideals import StableIdeal
from .marked import (
    EKPair,
    MarkedSet,
    Reducer,
    build_marked_set,
    ek_pairs,
    ek_polynomial,
    generic_parameters,
)
from .monomials import Monomial, TermOrder
from .rings import ParameterRing, ParameterVariable, ParamPoly, RingHomomorphism


@dataclass
class GenericFamily:
    ideal: StableIdeal
    params: list[ParameterVariable]
    ring: ParameterRing
    family: MarkedSet

    def instantiate(self, hom: RingHomomorphism) -> MarkedSet:
        return self.family.map_coefficients(hom)

    def assignment_hom(self, target, values: dict) -> RingHomomorphism:
        """Homomorphism sending each parameter to ``values[param]`` (0 when missing)."""
        full = {p: values.get(p, 0) for p in self.params}
        return RingHomomorphism(self.ring, target, full)


def generic_family(J: StableIdeal) -> GenericFamily:
    params = generic_parameters(J)
    ring = ParameterRing(params)
    tails = {(p.head, p.tail): ring.gen(p) for p in params}
    return GenericFamily(J, params, ring, build_marked_set(J, ring, tails))


def _digits(m: Monomial) -> str:
    if max(m) > 9:
        return ",".join(map(str, m))
    return "".join(map(str, m))


@dataclass(frozen=True)
class EquationGenerator:
    poly: ParamPoly
    ek_pair: EKPair
    residual: Monomial

    def name(self) -> str:
        pair = self.ek_pair
        return f"P^{{{_digits(self.residual)}}}_{{{_digits(pair.base)},{_digits(pair.partner)}}}"

    def c_degree(self) -> int:
        return self.poly.degree()


@dataclass
class SchemeEquations:
    family: GenericFamily
    generators: list[EquationGenerator]
    slots: int  # (pair, residual) positions before zero coefficients are dropped

    @property
    def params(self) -> list[ParameterVariable]:
        return self.family.params

    @property
    def ring(self) -> ParameterRing:
        return self.family.ring

    def polys(self) -> list[ParamPoly]:
        return [g.poly for g in self.generators]

    def max_c_degree(self) -> int:
        return max((g.c_degree() for g in self.generators), default=-1)

    def to_json(self) -> dict:
        ring = self.ring
        gens = []
        for g in self.generators:
            terms = [
                {"coefficient": c, "powers": [[ring.params[i].bracket(), e] for i, e in key]}
                for key, c in g.poly.sorted_terms()
            ]
            gens.append(
                {
                    "name": g.name(),
                    "ek": g.ek_pair.to_json(),
                    "residual": list(g.residual),
                    "poly": terms,
                    "text": ring.format(g.poly, "bracket"),
                }
            )
        return {
            "ideal": self.family.ideal.to_json(),
            "params": [p.bracket() for p in self.params],
            "generators": gens,
            "slots": self.slots,
            "max_c_degree": self.max_c_degree(),
        }

    def to_text(self) -> str:
        lines = [
            f"ideal: {self.family.ideal}",
            f"parameters: {len(self.params)}",
            f"generators: {len(self.generators)}",
        ]
        for g in self.generators:
            lines.append(f"{g.name()} = {self.ring.format(g.poly)}")
        return "\n".join(lines)


# worker state for process pools: one generic reducer per ideal
_WORKER: dict = {}


def _worker_remainders(payload):
    ideal_json, index = payload
    key = json.dumps(ideal_json, sort_keys=True)
    state = _WORKER.get(key)
    if state is None:
        fam = generic_family(StableIdeal.from_json(ideal_json))
        state = _WORKER[key] = (fam, Reducer(fam.family), ek_pairs(fam.family))
    fam, red, pairs = state
    rem = red.reduce(ek_polynomial(fam.family, pairs[index]), strategy="auxiliary")
    return index, {m: c.terms for m, c in rem.items()}


def _remainders(fam: GenericFamily, pairs: list[EKPair], jobs: int) -> list[dict]:
    F = fam.family
    if jobs <= 1 or len(pairs) < 2:
        red = Reducer(F)
        return [red.reduce(ek_polynomial(F, p), strategy="auxiliary") for p in pairs]
    payloads = [(fam.ideal.to_json(), i) for i in range(len(pairs))]
    out: list = [None] * len(pairs)
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        for i, rem in pool.map(_worker_remainders, payloads):
            out[i] = {m: ParamPoly(fam.ring, t) for m, t in rem.items()}
    return out


def marked_scheme_equations(
    J: StableIdeal, jobs: int = 1, family: GenericFamily | None = None
) -> SchemeEquations:
    """Generators of the ideal of the marked scheme, ordered by EK pair then residual (DegLex desc)."""
    fam = family or generic_family(J)
    pairs = ek_pairs(fam.family)
    gens = []
    slots = 0
    for pair, rem in zip(pairs, _remainders(fam, pairs, jobs)):
        residuals = J.sous_escalier(pair.degree)
        slots += len(residuals)
        for delta in residuals:
            c = rem.get(delta)
            if c:
                gens.append(EquationGenerator(c, pair, delta))
    return SchemeEquations(fam, gens, slots)


# -- Groebner strata --------------------------------------------------------


class NotATruncation(ValueError):
    pass


@dataclass
class StratumEquations:
    base: SchemeEquations
    order: TermOrder
    vanishing_params: list[ParameterVariable]
    saturation: StableIdeal
    truncation_degree: int

    def substituted(self) -> list[ParamPoly]:
        """Generators with the vanishing parameters set to zero (zeros dropped).

        Reduction only adds and multiplies coefficients, so substituting before
        or after reducing gives the same polynomials.
        """
        ring = self.base.ring
        kill = set(self.vanishing_params)
        hom = RingHomomorphism(ring, ring, {p: 0 if p in kill else ring.gen(p) for p in ring.params})
        return [q for q in (hom(g.poly) for g in self.base.generators) if q]

    def to_json(self) -> dict:
        data = self.base.to_json()
        data["order"] = self.order.value
        data["vanishing_params"] = [p.bracket() for p in self.vanishing_params]
        data["saturation"] = self.saturation.to_json()
        data["truncation_degree"] = self.truncation_degree
        return data

    def to_text(self) -> str:
        vanish = ", ".join(p.subscript() for p in self.vanishing_params) or "(none)"
        return self.base.to_text() + f"\norder: {self.order.value}\nvanishing parameters: {vanish}"


def vanishing_parameters(params, order: TermOrder) -> list[ParameterVariable]:
    return [p for p in params if order.key(p.tail) > order.key(p.head)]


def groebner_stratum_equations(J: StableIdeal, order: TermOrder, jobs: int = 1) -> StratumEquations:
    witness = J.truncation_witness()
    if witness is None:
        raise NotATruncation(f"{J} is not a truncation of a saturated strongly stable ideal")
    base = marked_scheme_equations(J, jobs=jobs)
    sat, m = witness
    return StratumEquations(base, order, vanishing_parameters(base.params, order), sat, m)


def is_gen_segment(J: StableIdeal, order: TermOrder) -> bool:
    """Every generator beats every sous-escalier monomial of its degree."""
    return not vanishing_parameters(generic_parameters(J), order)


# -- truncations and the Hilbert scheme -------------------------------------


@dataclass(frozen=True)
class DegreeStatus:
    s: int
    equal_to_next: bool  # the marked schemes of J_{>=s-1} and J_{>=s} coincide
    status: str  # "open" or "locally_closed"


@dataclass
class EmbeddingReport:
    saturated_ideal: StableIdeal
    hilbert: HilbertData
    rows: list[DegreeStatus] = field(default_factory=list)

    def to_json(self) -> dict:
        data = {"ideal": self.saturated_ideal.to_json()}
        data.update(self.hilbert.to_json())
        data["degrees"] = [
            {"s": r.s, "equal_to_next": r.equal_to_next, "status": r.status} for r in self.rows
        ]
        return data

    def to_text(self) -> str:
        h = self.hilbert
        lines = [
            f"ideal: {self.saturated_ideal}",
            f"hilbert polynomial: {h.polynomial}",
            f"gotzmann number: {h.gotzmann_number}",
            f"rho: {h.rho}",
            "s  equal_to_next  status",
        ]
        for r in self.rows:
            lines.append(f"{r.s:<2} {str(r.equal_to_next).lower():<14} {r.status}")
        return "\n".join(lines)


def embedding_report(J: StableIdeal, s_range: tuple[int, int] | None = None) -> EmbeddingReport:
    if not J.is_saturated():
        raise ValueError(f"{J} is not saturated")
    data = hilbert_data(J)
    rho = data.rho
    lo, hi = s_range if s_range is not None else (max(1, J.min_degree - 1), data.gotzmann_number)
    rows = []
    for s in range(lo, hi + 1):
        no_x1_gen = not any(g[1] > 0 for g in J.gens_of_degree(s + 1)) if J.nvars > 1 else True
        # J_{>=s-1} and J_{>=s} agree exactly when J has nothing in degree s-1
        same_truncation = s - 1 < J.min_degree
        status = "open" if s >= rho - 1 else "locally_closed"
        rows.append(DegreeStatus(s, no_x1_gen or same_truncation, status))
    return EmbeddingReport(J, data, rows)


def stratum_membership_demo(J: StableIdeal, equations: SchemeEquations | None = None) -> list[ParameterVariable]:
    """Parameters that occur, up to sign, as a generator on their own."""
    eqs = equations or marked_scheme_equations(J)
    ring = eqs.ring
    found = set()
    for g in eqs.generators:
        single = g.poly.as_single_variable()
        if single is not None:
            found.add(single[0])
    return [ring.params[i] for i in sorted(found)]


def degree_bound_holds(eqs: SchemeEquations) -> bool:
    """Every generator has C-degree at most ``deg p(t) + 2``."""
    bound = hilbert_data(eqs.family.ideal).polynomial.degree() + 2
    return eqs.max_c_degree() <= bound


__all__ = [
    "DegreeStatus",
    "EmbeddingReport",
    "EquationGenerator",
    "GenericFamily",
    "NotATruncation",
    "SchemeEquations",
    "StratumEquations",
    "degree_bound_holds",
    "embedding_report",
    "generic_family",
    "groebner_stratum_equations",
    "is_gen_segment",
    "marked_scheme_equations",
    "stratum_membership_demo",
    "vanishing_parameters",
]
