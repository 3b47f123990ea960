"""The module presentation tV - V^T and the linking pairing it carries.

Pairing values live in Q(L)/L where L is the integer Laurent ring.  They
are kept as unreduced fractions (num, den) with den = det(V - tV^T); no
canonical residue exists when the leading coefficient of the Alexander
polynomial is not a unit, so equality is decided by cross-multiplied
divisibility instead.
"""

from __future__ import annotations

from dataclasses import dataclass

from .laurent import LaurentPoly, is_multiple
from .seifert import SeifertMatrix, alexander, det_laurent, presentation_entries

T_MINUS_1 = LaurentPoly({1: 1, 0: -1})

# cofactor expansion is exact and fast up to this size; beyond it each
# cofactor determinant is computed by evaluation and interpolation
_COFACTOR_LIMIT = 6


@dataclass(frozen=True)
class ModulePresentation:
    """Square matrix tV - V^T presenting the module of a Seifert matrix."""

    matrix: tuple
    source: SeifertMatrix


def presentation(V: SeifertMatrix) -> ModulePresentation:
    """Presentation matrix tV - V^T; its determinant is t^n Delta(V)."""
    if V.size == 0:
        raise ValueError("the 0x0 matrix presents the trivial module")
    entries = presentation_entries(V)
    det = det_laurent(entries)
    expected = alexander(V).shift(V.size // 2)
    if det != expected:
        raise AssertionError("presentation determinant disagrees with the Alexander polynomial")
    return ModulePresentation(tuple(tuple(row) for row in entries), V)


@dataclass(frozen=True)
class TorsionFraction:
    """A value num/den taken modulo the ring of Laurent polynomials."""

    num: LaurentPoly
    den: LaurentPoly

    def __post_init__(self):
        if self.den.is_zero:
            raise ZeroDivisionError("torsion fraction with zero denominator")

    def bar(self) -> "TorsionFraction":
        return TorsionFraction(self.num.bar(), self.den.bar())

    def scale(self, factor: LaurentPoly) -> "TorsionFraction":
        return TorsionFraction(self.num * factor, self.den)

    def __str__(self):
        return f"{self.num} / {self.den}"


def fractions_equal(f: TorsionFraction, g: TorsionFraction) -> bool:
    """Equality in Q(L)/L: the cross difference must be a multiple of the
    product of denominators."""
    return is_multiple(f.num * g.den - g.num * f.den, f.den * g.den)


def _pairing_matrix_entries(V: SeifertMatrix):
    """Entries of V - tV^T, the matrix inverted by the pairing formula."""
    n = V.size
    return [
        [LaurentPoly({0: V[i][j], 1: -V[j][i]}) for j in range(n)] for i in range(n)
    ]


def _minor(rows, i, j):
    return [
        [entry for l, entry in enumerate(row) if l != j]
        for k, row in enumerate(rows)
        if k != i
    ]


def adjugate_laurent(rows, method: str | None = None):
    """Adjugate of a square Laurent polynomial matrix.

    Convention: adj(M) M = det(M) I, so the adjugate is the transpose of
    the cofactor matrix.
    """
    n = len(rows)
    if n == 0:
        return []
    if method is None:
        method = "cofactor" if n <= _COFACTOR_LIMIT else "interpolate"
    adj = [[None] * n for _ in range(n)]
    for i in range(n):
        for j in range(n):
            cof = det_laurent(_minor(rows, i, j), method=method)
            adj[j][i] = cof if (i + j) % 2 == 0 else -cof
    return adj


def _as_coords(v, n):
    coords = [c if isinstance(c, LaurentPoly) else LaurentPoly.const(c) for c in v]
    if len(coords) != n:
        raise ValueError(f"module element must have {n} coordinates")
    return coords


def pairing(V: SeifertMatrix, v, w) -> TorsionFraction:
    """The sesquilinear pairing v^T (t-1) (V - tV^T)^-1 bar(w) as an exact
    fraction with denominator det(V - tV^T)."""
    if V.size == 0:
        raise ValueError("the 0x0 matrix presents the trivial module")
    n = V.size
    v = _as_coords(v, n)
    w = _as_coords(w, n)
    rows = _pairing_matrix_entries(V)
    adj = adjugate_laurent(rows)
    den = det_laurent(rows)
    wbar = [c.bar() for c in w]
    acc = LaurentPoly.zero()
    for i in range(n):
        if v[i].is_zero:
            continue
        row_sum = LaurentPoly.zero()
        for j in range(n):
            if not wbar[j].is_zero:
                row_sum = row_sum + adj[i][j] * wbar[j]
        acc = acc + v[i] * row_sum
    return TorsionFraction(T_MINUS_1 * acc, den)


def gram_matrix(V: SeifertMatrix):
    """All pairings of the standard generators, as a matrix of fractions."""
    if V.size == 0:
        raise ValueError("the 0x0 matrix presents the trivial module")
    rows = _pairing_matrix_entries(V)
    adj = adjugate_laurent(rows)
    den = det_laurent(rows)
    n = V.size
    return [
        [TorsionFraction(T_MINUS_1 * adj[i][j], den) for j in range(n)]
        for i in range(n)
    ]


def _check_literal_border(outer: SeifertMatrix, inner: SeifertMatrix) -> int:
    """Verify outer = [[eps,0,0],[1,x,M],[0,N^T,inner]] and return eps."""
    m = outer.size
    if m != inner.size + 2:
        raise ValueError("outer matrix must be two rows larger than the inner one")
    rows = outer.rows
    eps = rows[0][0]
    ok = (
        eps in (1, -1)
        and all(rows[0][j] == 0 for j in range(1, m))
        and rows[1][0] == 1
        and all(rows[i][0] == 0 for i in range(2, m))
        and all(rows[i + 2][j + 2] == inner[i][j] for i in range(inner.size) for j in range(inner.size))
    )
    if not ok:
        raise ValueError("outer matrix is not a literal border of the inner matrix")
    return eps


def border_self_pairing_check(outer: SeifertMatrix, inner: SeifertMatrix) -> bool:
    """For a once-bordered matrix, the self-pairing of the new generator
    equals eps * Delta(inner) / Delta(outer) modulo the ring.

    The outer matrix must literally be [[eps,0,0],[1,x,M],[0,N^T,inner]].
    """
    eps = _check_literal_border(outer, inner)
    rows = _pairing_matrix_entries(outer)
    cof = det_laurent(_minor(rows, 0, 0))
    den = det_laurent(rows)
    entry = TorsionFraction(T_MINUS_1 * cof, den)
    target = TorsionFraction(LaurentPoly.const(eps) * alexander(inner), alexander(outer))
    return fractions_equal(entry, target)
