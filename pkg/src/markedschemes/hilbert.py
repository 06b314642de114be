"""Hilbert polynomial, Gotzmann number and rho of a strongly stable ideal."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import factorial

from .ideals import StableIdeal


class NumericalPolynomial:
    """A polynomial in ``t`` with rational coefficients, power basis, low degree first."""

    def __init__(self, coeffs):
        c = [Fraction(x) for x in coeffs]
        while c and c[-1] == 0:
            c.pop()
        self.coeffs = tuple(c)

    @classmethod
    def binomial(cls, shift: int, d: int) -> "NumericalPolynomial":
        """``C(t + shift, d)`` as a polynomial in ``t``."""
        poly = cls([1])
        for i in range(1, d + 1):
            poly = poly * cls([Fraction(shift - d + i, i), Fraction(1, i)])
        return poly

    @classmethod
    def interpolate(cls, points) -> "NumericalPolynomial":
        points = [(Fraction(x), Fraction(y)) for x, y in points]
        total = cls([])
        for i, (xi, yi) in enumerate(points):
            basis = cls([yi])
            for j, (xj, _) in enumerate(points):
                if j != i:
                    basis = basis * cls([-xj / (xi - xj), 1 / (xi - xj)])
            total = total + basis
        return total

    def degree(self) -> int:
        return len(self.coeffs) - 1

    def leading(self) -> Fraction:
        return self.coeffs[-1] if self.coeffs else Fraction(0)

    def __call__(self, t):
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * t + c
        return acc

    def __add__(self, other):
        n = max(len(self.coeffs), len(other.coeffs))
        a = self.coeffs + (0,) * (n - len(self.coeffs))
        b = other.coeffs + (0,) * (n - len(other.coeffs))
        return NumericalPolynomial([x + y for x, y in zip(a, b)])

    def __neg__(self):
        return NumericalPolynomial([-c for c in self.coeffs])

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if not self.coeffs or not other.coeffs:
            return NumericalPolynomial([])
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return NumericalPolynomial(out)

    def __eq__(self, other):
        return isinstance(other, NumericalPolynomial) and self.coeffs == other.coeffs

    def __bool__(self):
        return bool(self.coeffs)

    def binomial_coordinates(self) -> tuple[int, ...]:
        """Coordinates ``a_k`` with ``p(t) = sum a_k C(t+k, k)``.

        They are integers for every integer-valued polynomial.
        """
        rest = self
        coords = [0] * (self.degree() + 1)
        for k in range(self.degree(), -1, -1):
            a = rest.coeffs[k] * factorial(k) if len(rest.coeffs) > k else Fraction(0)
            if a.denominator != 1:
                raise ValueError(f"{self} is not integer valued")
            coords[k] = int(a)
            rest = rest - NumericalPolynomial.binomial(k, k) * NumericalPolynomial([a])
        return tuple(coords)

    def __str__(self):
        if not self.coeffs:
            return "0"
        parts = []
        for k in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[k]
            if c == 0:
                continue
            mag = abs(c)
            if k == 0:
                body = str(mag)
            else:
                var = "t" if k == 1 else f"t^{k}"
                body = var if mag == 1 else f"{mag}*{var}"
            parts.append(("-" if c < 0 else "+", body))
        sign, body = parts[0]
        out = ("-" if sign == "-" else "") + body
        for sign, body in parts[1:]:
            out += f" {sign} {body}"
        return out

    def __repr__(self):
        return f"NumericalPolynomial({self})"


class NotAdmissible(ValueError):
    pass


def gotzmann_decomposition(p: NumericalPolynomial, limit: int = 100_000) -> list[int]:
    """Greedy Gotzmann representation ``p(t) = sum_i C(t + a_i - i, a_i)``.

    Returns ``[a_0, a_1, ...]`` (non-increasing); its length is the Gotzmann
    number.  A polynomial that cannot be written this way raises
    :class:`NotAdmissible`.
    """
    rest = p
    exps: list[int] = []
    while rest:
        d = rest.degree()
        if rest.leading() <= 0:
            raise NotAdmissible(f"{p} is not a Hilbert polynomial (stuck at {rest})")
        if exps and d > exps[-1]:
            raise NotAdmissible(f"{p} is not a Hilbert polynomial (degree went up)")
        rest = rest - NumericalPolynomial.binomial(d - len(exps), d)
        exps.append(d)
        if len(exps) > limit:
            raise NotAdmissible(f"{p}: no Gotzmann decomposition within {limit} terms")
    return exps


def gotzmann_number(p: NumericalPolynomial) -> int:
    return len(gotzmann_decomposition(p))


@dataclass(frozen=True)
class HilbertData:
    polynomial: NumericalPolynomial
    gotzmann_number: int
    rho: int

    @property
    def binomial_coordinates(self) -> tuple[int, ...]:
        return self.polynomial.binomial_coordinates()

    def to_json(self) -> dict:
        return {
            "hilbert_polynomial": str(self.polynomial),
            "coefficients": [str(c) for c in self.polynomial.coeffs],
            "binomial_coordinates": list(self.binomial_coordinates),
            "gotzmann_number": self.gotzmann_number,
            "rho": self.rho,
        }


def hilbert_function(J: StableIdeal, s: int) -> int:
    return len(J.sous_escalier(s))


def hilbert_polynomial(J: StableIdeal) -> NumericalPolynomial:
    """Interpolate ``|N(J)_s|`` on ``s = m..m+n`` and check it at ``m+n+1``."""
    m, n = J.max_degree, J.nvars - 1
    pts = [(s, hilbert_function(J, s)) for s in range(m, m + n + 1)]
    p = NumericalPolynomial.interpolate(pts)
    check = m + n + 1
    if p(check) != hilbert_function(J, check):
        raise RuntimeError(f"Hilbert function of {J} not polynomial from degree {m}")
    return p


def hilbert_data(J: StableIdeal) -> HilbertData:
    p = hilbert_polynomial(J)
    return HilbertData(p, gotzmann_number(p), J.rho())
