"""Degree-by-degree linear algebra over a field.

Nothing here uses the reduction engine: ideal slices are spanned by every
monomial multiple of the generators and then row reduced.  Over ZZ the
direct-sum question is about splitting free modules, which rank cannot see,
so every entry point refuses non-field rings.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from ..ideals import StableIdeal
from ..monomials import Monomial, deglex_key, degree, format_monomial, monomials_of_degree, multiply
from ..polys import Poly
from ..rings import RationalField, Ring


class DirectSumFailure(ValueError):
    """``I_s + <N(J)_s>`` is not a direct sum filling the whole degree."""

    def __init__(self, s: int, reason: str):
        self.degree = s
        self.reason = reason
        super().__init__(f"direct sum fails in degree {s}: {reason}")


def _require_field(ring: Ring):
    if not ring.is_field:
        raise TypeError(f"the linear oracle needs a field, got {ring}; pass to QQ first")


@dataclass(frozen=True)
class DegreeMatrix:
    s: int
    columns: tuple[Monomial, ...]
    rows: tuple[tuple, ...]
    ring: Ring

    @classmethod
    def from_polys(cls, polys, nvars: int, s: int, ring: Ring, columns=None) -> "DegreeMatrix":
        _require_field(ring)
        if columns is None:
            columns = sorted(monomials_of_degree(nvars, s), key=deglex_key, reverse=True)
        index = {m: i for i, m in enumerate(columns)}
        zero = ring.zero()
        rows = []
        for p in polys:
            row = [zero] * len(columns)
            for m, c in p.items():
                if degree(m) != s:
                    raise ValueError(f"{format_monomial(m)} is not of degree {s}")
                row[index[m]] = ring.coerce(c)
            rows.append(tuple(row))
        return cls(s, tuple(columns), tuple(rows), ring)


def rref(rows, ring: Ring):
    """Reduced row echelon form; returns ``(nonzero rows, pivot columns)``."""
    _require_field(ring)
    work = [list(r) for r in rows]
    pivots = []
    r = 0
    ncols = len(work[0]) if work else 0
    for c in range(ncols):
        pivot = next((i for i in range(r, len(work)) if work[i][c]), None)
        if pivot is None:
            continue
        work[r], work[pivot] = work[pivot], work[r]
        inv = ring.div(ring.one(), work[r][c])
        work[r] = [x * inv for x in work[r]]
        for i in range(len(work)):
            if i != r and work[i][c]:
                factor = work[i][c]
                work[i] = [x - factor * y for x, y in zip(work[i], work[r])]
        pivots.append(c)
        r += 1
        if r == len(work):
            break
    return [tuple(row) for row in work[:r]], pivots


def bareiss_rank(rows) -> int:
    """Rank of an integer matrix by fraction-free elimination."""
    m = [list(r) for r in rows]
    if not m:
        return 0
    nrows, ncols = len(m), len(m[0])
    rank = 0
    prev = 1
    for c in range(ncols):
        pivot = next((i for i in range(rank, nrows) if m[i][c]), None)
        if pivot is None:
            continue
        m[rank], m[pivot] = m[pivot], m[rank]
        p = m[rank][c]
        for i in range(rank + 1, nrows):
            a = m[i][c]
            m[i] = [(p * x - a * y) // prev for x, y in zip(m[i], m[rank])]
        prev = p
        rank += 1
        if rank == nrows:
            break
    return rank


def row_space_rank(M: DegreeMatrix) -> int:
    if not M.rows:
        return 0
    if isinstance(M.ring, RationalField) and all(
        Fraction(x).denominator == 1 for row in M.rows for x in row
    ):
        return bareiss_rank([[int(x) for x in row] for row in M.rows])
    return len(rref(M.rows, M.ring)[0])


def ideal_degree_span(generators, nvars: int, s: int, ring: Ring) -> DegreeMatrix:
    """Rows spanning ``I_s``: every degree-``s`` monomial multiple of every generator."""
    polys = []
    for g in generators:
        if not g:
            continue
        d = degree(next(iter(g)))
        if d > s:
            continue
        for mono in monomials_of_degree(nvars, s - d):
            polys.append({multiply(m, mono): c for m, c in g.items()})
    return DegreeMatrix.from_polys(polys, nvars, s, ring)


def _split_columns(J: StableIdeal, s: int):
    inside = list(J.degree_part(s))
    outside = list(J.sous_escalier(s))
    return inside, outside


def _echelon_j_first(M: DegreeMatrix, J: StableIdeal):
    inside, outside = _split_columns(J, M.s)
    order = inside + outside
    pos = {m: i for i, m in enumerate(M.columns)}
    rows = [tuple(row[pos[m]] for m in order) for row in M.rows]
    echelon, pivots = rref(rows, M.ring)
    return order, len(inside), echelon, pivots


def intersect_with_sous_escalier(M: DegreeMatrix, J: StableIdeal) -> list[Poly]:
    """Echelon basis of ``rowspace(M) ∩ <N(J)_s>`` as polynomials."""
    order, n_in, echelon, pivots = _echelon_j_first(M, J)
    basis = []
    for row, p in zip(echelon, pivots):
        if p >= n_in:
            basis.append({order[i]: c for i, c in enumerate(row) if c})
    return basis


def slice_matrix(F, s: int) -> DegreeMatrix:
    """Rows of the star multiples ``x^delta f_alpha`` in degree ``s``."""
    from ..marked import degree_slice, multiple_poly

    polys = [multiple_poly(F, m) for m in degree_slice(F, s).v_multiples]
    return DegreeMatrix.from_polys(polys, F.nvars, s, F.ring)


def linear_basis_test(F) -> bool:
    """True iff ``I_s ∩ <N(J)_s> = 0`` for every ``s <= m+1``, with ``I = (F)``."""
    J = F.ideal
    gens = [F.poly(a) for a in J.generators]
    for s in range(J.min_degree, J.max_degree + 2):
        if intersect_with_sous_escalier(ideal_degree_span(gens, J.nvars, s, F.ring), J):
            return False
    return True


def unique_marked_set_solver(J: StableIdeal, ring: Ring, generators, top: int | None = None) -> dict:
    """Tail coefficients ``{(alpha, beta): c}`` of the marked set inside ``(generators)``.

    The direct sum ``A[x]_s = I_s + <N(J)_s>`` is checked for every degree from
    the smallest generator degree of ``J`` up to ``top`` (default ``m+1``);
    a failure raises :class:`DirectSumFailure` naming the degree.
    """
    _require_field(ring)
    gens = [{m: ring.coerce(c) for m, c in g.items() if c} for g in generators]
    top = J.max_degree + 1 if top is None else top
    tails = {}
    for s in range(J.min_degree, top + 1):
        M = ideal_degree_span(gens, J.nvars, s, ring)
        order, n_in, echelon, pivots = _echelon_j_first(M, J)
        if any(p >= n_in for p in pivots):
            raise DirectSumFailure(s, "the ideal meets the span of the sous-escalier")
        if len(pivots) < n_in:
            raise DirectSumFailure(s, f"rank {len(pivots)} < {n_in} monomials of the ideal")
        for row, p in zip(echelon, pivots):
            alpha = order[p]
            if alpha in J.generator_set:
                for i in range(n_in, len(order)):
                    if row[i]:
                        tails[(alpha, order[i])] = row[i]
    return tails
