"""Shared fixtures data, random generators and brute-force oracles for the tests."""

from __future__ import annotations

import random
from collections import deque

from markedschemes.ideals import StableIdeal, borel_closure
from markedschemes.marked import build_marked_set, generic_parameters, parse_marked_set
from markedschemes.monomials import divide, divides, max_var, min_var, monomials_of_degree
from markedschemes.polys import parameter_from_token, parse_element, parse_polynomial

J3_TEXT = "x2^2,x2*x1,x1^3"
F_J3_TEXT = """
x2^2 + 3*x1^2 - x2*x0 + x1*x0
x2*x1 - x1*x0
x1^3 - 3*x1^2*x0
"""
X0SQ_SET_TEXT = """
x2^2 + x0^2
x2*x1
x1^3
"""

# reference auxiliary bases of F_J3 in degrees 3 and 4
AUX_3 = {
    "x1^3": "x1^3 - 3*x1^2*x0",
    "x2*x1*x0": "x2*x1*x0 - x1*x0^2",
    "x2*x1^2": "x2*x1^2 - x1^2*x0",
    "x2^2*x0": "x2^2*x0 + 3*x1^2*x0 - x2*x0^2 + x1*x0^2",
    "x2^2*x1": "x2^2*x1 + 10*x1^2*x0 - x1*x0^2",
    "x2^3": "x2^3 + 6*x1^2*x0 - x2*x0^2 + 2*x1*x0^2",
}
AUX_4 = {
    "x1^3*x0": "x1^3*x0 - 3*x1^2*x0^2",
    "x1^4": "x1^4 - 9*x1^2*x0^2",
    "x2*x1*x0^2": "x2*x1*x0^2 - x1*x0^3",
    "x2*x1^2*x0": "x2*x1^2*x0 - x1^2*x0^2",
    "x2*x1^3": "x2*x1^3 - 3*x1^2*x0^2",
    "x2^2*x0^2": "x2^2*x0^2 + 3*x1^2*x0^2 - x2*x0^3 + x1*x0^3",
    "x2^2*x1*x0": "x2^2*x1*x0 + 10*x1^2*x0^2 - x1*x0^3",
    "x2^2*x1^2": "x2^2*x1^2 + 29*x1^2*x0^2",
    "x2^3*x0": "x2^3*x0 + 6*x1^2*x0^2 - x2*x0^3 + 2*x1*x0^3",
    "x2^3*x1": "x2^3*x1 + 20*x1^2*x0^2 - x1*x0^3",
    "x2^4": "x2^4 - 91*x1^2*x0^2 - x2*x0^3 + 3*x1*x0^3",
}

# the eight generators for J3 keyed by (residual, base, partner), digits x0-first
P_J3 = {
    ("120", "011", "002"): "C_{011,020}^2*C_{011,101} + C_{011,020}^2*C_{030,120} + C_{002,101}*C_{011,020}"
    " - C_{002,020}*C_{011,101} - 2*C_{011,020}*C_{011,110} + C_{002,020}*C_{030,120} - C_{002,110}",
    ("201", "011", "002"): "C_{011,020}*C_{011,101}^2 + C_{011,020}^2*C_{030,201} - C_{011,101}*C_{011,110}"
    " + C_{002,020}*C_{030,201} + C_{011,200}",
    ("210", "011", "002"): "C_{011,020}*C_{011,101}*C_{011,110} + C_{011,020}^2*C_{030,210}"
    " - C_{002,110}*C_{011,101} + C_{002,101}*C_{011,110} - C_{011,110}^2 - C_{011,020}*C_{011,200}"
    " + C_{002,020}*C_{030,210} - C_{002,200}",
    ("300", "011", "002"): "C_{011,020}*C_{011,101}*C_{011,200} + C_{011,020}^2*C_{030,300}"
    " - C_{002,200}*C_{011,101} + C_{002,101}*C_{011,200} - C_{011,110}*C_{011,200}"
    " + C_{002,020}*C_{030,300}",
    ("220", "030", "011"): "-C_{011,020}*C_{011,101}^2 - C_{011,020}^2*C_{030,201} + C_{011,101}*C_{011,110}"
    " - C_{002,020}*C_{030,201} - C_{011,200}",
    ("301", "030", "011"): "-C_{011,101}^3 + C_{011,101}^2*C_{030,120} - 2*C_{011,020}*C_{011,101}*C_{030,201}"
    " - C_{002,101}*C_{030,201} + C_{011,110}*C_{030,201} - C_{011,101}*C_{030,210} + C_{030,300}",
    ("310", "030", "011"): "-C_{011,101}^2*C_{011,110} + C_{011,101}*C_{011,110}*C_{030,120}"
    " - C_{011,020}*C_{011,110}*C_{030,201} - C_{011,020}*C_{011,101}*C_{030,210}"
    " + C_{011,101}*C_{011,200} - C_{011,200}*C_{030,120} - C_{002,110}*C_{030,201}"
    " + C_{011,020}*C_{030,300}",
    ("400", "030", "011"): "-C_{011,101}^2*C_{011,200} + C_{011,101}*C_{011,200}*C_{030,120}"
    " - C_{011,020}*C_{011,200}*C_{030,201} - C_{011,020}*C_{011,101}*C_{030,300}"
    " - C_{002,200}*C_{030,201} - C_{011,200}*C_{030,210} + C_{011,110}*C_{030,300}",
}

T_ASSIGNMENT = {
    "C_{002,020}": "1 - t",
    "C_{002,101}": "0",
    "C_{002,110}": "t^3 - t^4",
    "C_{002,200}": "-t^2",
    "C_{011,020}": "0",
    "C_{011,101}": "0",
    "C_{011,110}": "t",
    "C_{011,200}": "t^2 - t",
    "C_{030,120}": "t^3",
    "C_{030,201}": "t",
    "C_{030,210}": "0",
    "C_{030,300}": "-t^2",
}


def j3() -> StableIdeal:
    return StableIdeal.parse(J3_TEXT, 3)


def f_j3(ring):
    return parse_marked_set(F_J3_TEXT, j3(), ring)


def poly(text, ring, nvars=3):
    return parse_polynomial(text, nvars, ring)


def t_assignment(t_ring, nvars=3):
    return {parameter_from_token(k, nvars): parse_element(v, t_ring) for k, v in T_ASSIGNMENT.items()}


# -- random generation -------------------------------------------------------


def random_monomial(rng: random.Random, nvars: int, d: int):
    monos = list(monomials_of_degree(nvars, d))
    return rng.choice(monos)


def random_stable_ideal(rng: random.Random, nvars: int = 3, max_degree: int = 4, max_seeds: int = 3):
    """Borel closure of a few random monomials, all of degree >= 1."""
    while True:
        seeds = [
            random_monomial(rng, nvars, rng.randint(1, max_degree))
            for _ in range(rng.randint(1, max_seeds))
        ]
        J = borel_closure(nvars, seeds)
        if J.max_degree <= max_degree:
            return J


def random_element(rng: random.Random, ring, spread: int = 3):
    return ring.coerce(rng.randint(-spread, spread))


def random_marked_set(rng: random.Random, J: StableIdeal, ring, density: float = 0.5, spread: int = 3):
    tails = {}
    for p in generic_parameters(J):
        if rng.random() < density:
            tails[(p.head, p.tail)] = random_element(rng, ring, spread)
    return build_marked_set(J, ring, tails)


def random_homogeneous(rng: random.Random, nvars: int, d: int, ring, terms: int = 5):
    monos = list(monomials_of_degree(nvars, d))
    out = {}
    for m in rng.sample(monos, min(terms, len(monos))):
        c = random_element(rng, ring, 5)
        if c:
            out[m] = c
    return out


# -- oracles -------------------------------------------------------------------


def bfs_borel_up(b):
    """Every monomial reachable from ``b`` by moves x_j -> x_i with i > j."""
    seen = {b}
    queue = deque([b])
    n = len(b)
    while queue:
        m = queue.popleft()
        for j in range(n):
            if not m[j]:
                continue
            for i in range(j + 1, n):
                up = list(m)
                up[j] -= 1
                up[i] += 1
                up = tuple(up)
                if up not in seen:
                    seen.add(up)
                    queue.append(up)
    return seen


def brute_force_star(J: StableIdeal, m):
    """All ``(g, m/g)`` with ``g`` a minimal generator and ``min g >= max(m/g)``."""
    hits = []
    for g in J.generators:
        if divides(g, m):
            d = divide(m, g)
            if sum(d) == 0 or min_var(g) >= max_var(d):
                hits.append((g, d))
    return hits
