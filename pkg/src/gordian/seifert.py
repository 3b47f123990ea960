"""Seifert matrices, their classical invariants, and the matrix moves.

A Seifert matrix is an even-size integer matrix V with det(V - V^T) = 1.
The 0x0 matrix is allowed and stands for the trivial class.  All arithmetic
is exact: determinants of integer matrices use fraction-free elimination,
polynomial determinants use integer evaluation plus rational interpolation
(with cofactor expansion and fraction-free elimination available as
independent cross-checks), and the signature is computed by congruence
diagonalisation over the rationals.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .laurent import LaurentPoly, divmod_rational


class InvalidMatrixError(ValueError):
    """The entries do not form a Seifert matrix."""


class NotDefiniteError(ValueError):
    """The symmetrised matrix is not positive or negative definite."""


def det_int(rows) -> int:
    """Exact determinant of a square integer matrix (Bareiss elimination)."""
    n = len(rows)
    if n == 0:
        return 1
    a = [[int(x) for x in row] for row in rows]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for i in range(k + 1, n):
                if a[i][k]:
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
            a[i][k] = 0
        prev = a[k][k]
    return sign * a[n - 1][n - 1]


def mat_mul(a, b):
    """Product of two integer matrices given as row lists."""
    n, m = len(a), len(b[0]) if b else 0
    inner = len(b)
    return [
        [sum(a[i][k] * b[k][j] for k in range(inner)) for j in range(m)]
        for i in range(n)
    ]


def transpose(rows):
    return [list(col) for col in zip(*rows)] if rows else []


class SeifertMatrix:
    """An even-size integer matrix V with det(V - V^T) = 1.

    Instances are immutable; constructing one validates both conditions and
    raises InvalidMatrixError naming the violated invariant otherwise.
    """

    __slots__ = ("rows",)

    def __init__(self, entries):
        rows = tuple(tuple(int(x) for x in row) for row in entries)
        n = len(rows)
        for row in rows:
            if len(row) != n:
                raise InvalidMatrixError("matrix must be square")
        if n % 2:
            raise InvalidMatrixError(f"matrix size must be even, got {n}")
        d = det_int([[rows[i][j] - rows[j][i] for j in range(n)] for i in range(n)])
        if d != 1:
            raise InvalidMatrixError(f"det(V - V^T) must be 1, got {d}")
        self.rows = rows

    @property
    def size(self) -> int:
        return len(self.rows)

    def __getitem__(self, i):
        return self.rows[i]

    def __eq__(self, other):
        if isinstance(other, SeifertMatrix):
            return self.rows == other.rows
        return NotImplemented

    def __hash__(self):
        return hash(self.rows)

    def __repr__(self):
        return f"SeifertMatrix({[list(r) for r in self.rows]})"

    def to_text(self) -> str:
        return "\n".join(" ".join(str(x) for x in row) for row in self.rows)


def parse_matrix_text(text: str) -> SeifertMatrix:
    """Parse the matrix file format: one row per line, integers separated
    by spaces, blank lines and ``#`` comments ignored.  The empty file is
    the 0x0 matrix."""
    rows = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        try:
            rows.append([int(tok) for tok in line.split()])
        except ValueError:
            raise InvalidMatrixError(f"line {lineno}: entries must be integers") from None
    return SeifertMatrix(rows)


# -- polynomial determinants -------------------------------------------------


def _interpolate(points, values):
    """Coefficients (Fractions) of the polynomial through the given points."""
    k = len(points)
    coeffs = [Fraction(0)] * k
    for i in range(k):
        basis = [Fraction(1)]
        denom = 1
        for j in range(k):
            if j == i:
                continue
            basis = [Fraction(0)] + basis
            for d in range(len(basis) - 1):
                basis[d] -= points[j] * basis[d + 1]
            denom *= points[i] - points[j]
        scale = Fraction(values[i], denom)
        for d in range(len(basis)):
            coeffs[d] += scale * basis[d]
    return coeffs


def _eval_points(count):
    pts = [0]
    k = 1
    while len(pts) < count:
        pts.append(k)
        if len(pts) < count:
            pts.append(-k)
        k += 1
    return pts[:count]


def _row_shifts(rows):
    """Pull t^v out of each row so every entry is an ordinary polynomial.

    Returns (shift_sum, shifted_rows) or None when some row is zero.
    """
    total = 0
    shifted = []
    for row in rows:
        vals = [p.valuation for p in row if not p.is_zero]
        if not vals:
            return None
        v = min(min(vals), 0)
        total += v
        shifted.append([p.shift(-v) for p in row])
    return total, shifted


def _det_by_interpolation(rows) -> LaurentPoly:
    n = len(rows)
    if n == 0:
        return LaurentPoly.one()
    prepared = _row_shifts(rows)
    if prepared is None:
        return LaurentPoly.zero()
    shift, polys = prepared
    bound = sum(max(p.degree for p in row if not p.is_zero) for row in polys)
    points = _eval_points(bound + 1)
    values = [
        det_int([[p.evaluate(x) if x != 0 else p.coeff(0) for p in row] for row in polys])
        for x in points
    ]
    coeffs = _interpolate(points, values)
    assert all(c.denominator == 1 for c in coeffs)
    return LaurentPoly({d: int(c) for d, c in enumerate(coeffs)}).shift(shift)


def _det_by_cofactors(rows) -> LaurentPoly:
    n = len(rows)
    if n == 0:
        return LaurentPoly.one()
    if n == 1:
        return rows[0][0]
    total = LaurentPoly.zero()
    for i in range(n):
        c = rows[i][0]
        if c.is_zero:
            continue
        minor = [row[1:] for k, row in enumerate(rows) if k != i]
        term = c * _det_by_cofactors(minor)
        total = total + term if i % 2 == 0 else total - term
    return total


def _exact_poly_div(p: LaurentPoly, q: LaurentPoly) -> LaurentPoly:
    quo, rem = divmod_rational(p, q)
    assert rem.is_zero and quo.is_integral
    return quo


def _det_by_fraction_free(rows) -> LaurentPoly:
    """Bareiss elimination over the polynomial ring; every division is exact."""
    n = len(rows)
    if n == 0:
        return LaurentPoly.one()
    prepared = _row_shifts(rows)
    if prepared is None:
        return LaurentPoly.zero()
    shift, a = prepared
    a = [list(row) for row in a]
    sign = 1
    prev = LaurentPoly.one()
    for k in range(n - 1):
        if a[k][k].is_zero:
            for i in range(k + 1, n):
                if not a[i][k].is_zero:
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return LaurentPoly.zero()
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = _exact_poly_div(a[i][j] * a[k][k] - a[i][k] * a[k][j], prev)
            a[i][k] = LaurentPoly.zero()
        prev = a[k][k]
    result = a[n - 1][n - 1] if sign == 1 else -a[n - 1][n - 1]
    return result.shift(shift)


_DET_METHODS = {
    "interpolate": _det_by_interpolation,
    "cofactor": _det_by_cofactors,
    "fraction-free": _det_by_fraction_free,
}


def det_laurent(rows, method: str = "interpolate") -> LaurentPoly:
    """Exact determinant of a square matrix of Laurent polynomials."""
    return _DET_METHODS[method]([list(row) for row in rows])


# -- classical invariants ------------------------------------------------------


def presentation_entries(V: SeifertMatrix):
    """The matrix tV - V^T as Laurent polynomial entries."""
    n = V.size
    return [
        [LaurentPoly({1: V[i][j], 0: -V[j][i]}) for j in range(n)] for i in range(n)
    ]


def alexander(V: SeifertMatrix, method: str = "interpolate") -> LaurentPoly:
    """Alexander polynomial t^-n det(tV - V^T) of a 2n x 2n Seifert matrix.

    The result is symmetric under t -> t^-1 and takes the value 1 at t = 1;
    both are asserted, a failure means a bug rather than bad input.
    """
    n2 = V.size
    if n2 == 0:
        return LaurentPoly.one()
    delta = det_laurent(presentation_entries(V), method=method).shift(-(n2 // 2))
    assert delta.is_bar_symmetric(), "Alexander polynomial must be bar symmetric"
    assert delta.evaluate(1) == 1, "Alexander polynomial must be 1 at t = 1"
    return delta


def signature(V: SeifertMatrix) -> int:
    """Signature of V + V^T by exact congruence diagonalisation over Q."""
    n = V.size
    a = [[Fraction(V[i][j] + V[j][i]) for j in range(n)] for i in range(n)]
    pos = neg = 0
    for k in range(n):
        if a[k][k] == 0:
            swap = next((j for j in range(k + 1, n) if a[j][j] != 0), None)
            if swap is not None:
                a[k], a[swap] = a[swap], a[k]
                for row in a:
                    row[k], row[swap] = row[swap], row[k]
            else:
                j = next((j for j in range(k + 1, n) if a[k][j] != 0), None)
                if j is None:
                    continue
                for l in range(n):
                    a[k][l] += a[j][l]
                for l in range(n):
                    a[l][k] += a[l][j]
        p = a[k][k]
        if p == 0:
            continue
        if p > 0:
            pos += 1
        else:
            neg += 1
        for i in range(k + 1, n):
            f = a[i][k] / p
            if f:
                for j in range(n):
                    a[i][j] -= f * a[k][j]
                for j in range(n):
                    a[j][i] -= f * a[j][k]
    return pos - neg


def knot_determinant(V: SeifertMatrix) -> int:
    """The determinant invariant |Delta(-1)|; always odd for valid input."""
    d = abs(alexander(V).evaluate(-1))
    assert d % 2 == 1, "knot determinant must be odd"
    return d


@dataclass(frozen=True)
class KnotInvariants:
    """The classical triple used by every criterion in the battery."""

    alexander: LaurentPoly
    signature: int
    determinant: int

    def __post_init__(self):
        if not self.alexander.is_bar_symmetric():
            raise ValueError("Alexander polynomial must be symmetric under t -> 1/t")
        if self.alexander.evaluate(1) != 1:
            raise ValueError("Alexander polynomial must evaluate to 1 at t = 1")
        if self.determinant != abs(self.alexander.evaluate(-1)):
            raise ValueError("determinant must equal |Delta(-1)|")
        if self.signature % 2:
            raise ValueError("signature must be even")

    @classmethod
    def from_matrix(cls, V: SeifertMatrix) -> "KnotInvariants":
        return cls(alexander(V), signature(V), knot_determinant(V))


# -- matrix moves --------------------------------------------------------------


def congruent_transform(V: SeifertMatrix, P) -> SeifertMatrix:
    """P V P^T for a unimodular integer matrix P of the same size."""
    rows = [[int(x) for x in row] for row in P]
    if len(rows) != V.size or any(len(r) != V.size for r in rows):
        raise ValueError(f"transform must be {V.size}x{V.size}")
    if det_int(rows) not in (1, -1):
        raise ValueError("transform matrix must be unimodular")
    product = mat_mul(mat_mul(rows, [list(r) for r in V.rows]), transpose(rows))
    return SeifertMatrix(product)


def _bordered(first_row, second_prefix, x, M, N, V):
    n = V.size
    if len(M) != n or len(N) != n:
        raise ValueError(f"border vectors must have length {n}")
    rows = [list(first_row) + [0] * n, list(second_prefix) + [x] + [int(v) for v in M]]
    for i in range(n):
        rows.append([0, int(N[i])] + list(V.rows[i]))
    return SeifertMatrix(rows)


def enlarge(V: SeifertMatrix, kind: str, x: int, M, N) -> SeifertMatrix:
    """One stabilisation step: border V with the row or column block pattern."""
    if kind == "row-border":
        return _bordered([0, 0], [1], x, M, N, V)
    if kind == "column-border":
        return _bordered([0, 1], [0], x, M, N, V)
    raise ValueError(f"kind must be row-border or column-border, got {kind!r}")


def try_reduce(W: SeifertMatrix):
    """Undo a literal enlargement block; None when W matches neither pattern."""
    m = W.size
    if m < 2:
        return None
    rows = W.rows
    inner = [row[2:] for row in rows[2:]]
    col0 = [rows[i][0] for i in range(m)]
    row_pattern = (
        all(c == 0 for c in rows[0])
        and col0[1] == 1
        and all(col0[i] == 0 for i in range(2, m))
    )
    col_pattern = (
        all(c == 0 for c in col0)
        and rows[0][1] == 1
        and all(rows[0][j] == 0 for j in range(2, m))
    )
    if row_pattern or col_pattern:
        return SeifertMatrix(inner)
    return None


BORDER_VARIANTS = ("a+", "a-", "b+", "b-")


def unknotting_border(
    W: SeifertMatrix, eps: int, x: int, M, N, variant: str = "a+"
) -> SeifertMatrix:
    """Border W by one algebraic unknotting step.

    The four variants place the glueing one in either off-diagonal corner of
    the new 2x2 block with either sign; all four give matrices with the same
    Alexander polynomial, signature, and determinant.  Variant ``a+`` is the
    standard form of the operation.
    """
    if eps not in (1, -1):
        raise ValueError(f"eps must be +1 or -1, got {eps}")
    if variant not in BORDER_VARIANTS:
        raise ValueError(f"variant must be one of {BORDER_VARIANTS}, got {variant!r}")
    s = 1 if variant.endswith("+") else -1
    if variant.startswith("a"):
        return _bordered([eps, 0], [s], x, M, N, W)
    return _bordered([eps, s], [0], x, M, N, W)


# -- definite 2x2 normal form ---------------------------------------------------


def _apply_congruence(T, U):
    return mat_mul(mat_mul(T, U), transpose(T))


def definite_normal_form(V: SeifertMatrix):
    """Reduce a definite 2x2 Seifert matrix to its Gauss normal form.

    Returns (normal, P, sign) with P (sign*V) P^T = [[a, b+1], [b, c]] and
    0 < 2b + 1 <= min(a, c).  Raises NotDefiniteError when V + V^T is
    indefinite.
    """
    if V.size != 2:
        raise ValueError("normal form is defined for 2x2 matrices only")
    sym = [[V[i][j] + V[j][i] for j in range(2)] for i in range(2)]
    if det_int(sym) <= 0:
        raise NotDefiniteError("V + V^T is not definite")
    s = 1 if sym[0][0] > 0 else -1
    cur = [[s * V[i][j] for j in range(2)] for i in range(2)]
    P = [[1, 0], [0, 1]]

    def apply(T):
        nonlocal cur, P
        cur = _apply_congruence(T, cur)
        P = mat_mul(T, P)

    while True:
        A, C = cur[0][0], cur[1][1]
        B = cur[0][1] + cur[1][0]
        if abs(B) > A:
            # unique k with B + 2kA in (-A, A]
            k = (A - B) // (2 * A)
            apply([[1, 0], [k, 1]])
        elif A > C:
            apply([[0, 1], [1, 0]])
        else:
            break
    if cur[0][1] + cur[1][0] < 0:
        apply([[1, 0], [0, -1]])
    if cur[0][1] - cur[1][0] == -1:
        apply([[0, 1], [1, 0]])

    a, c = cur[0][0], cur[1][1]
    b = cur[1][0]
    assert cur[0][1] == b + 1
    assert 0 < 2 * b + 1 <= min(a, c)
    expected = _apply_congruence(P, [[s * V[i][j] for j in range(2)] for i in range(2)])
    assert expected == cur
    return SeifertMatrix(cur), P, s


# -- algebraic unknotting number certificates -----------------------------------


SMALL_H = (1, 2, 3, 5)


def h_form(h: int) -> LaurentPoly:
    """The breadth-two symmetric polynomial h t + h t^-1 + 1 - 2h."""
    return LaurentPoly({1: h, -1: h, 0: 1 - 2 * h})


@dataclass(frozen=True)
class UaVerdict:
    """Outcome of the one-step-from-trivial test: Yes with a certificate,
    or Unknown.  The test is one-sided and never answers No."""

    known_one: bool
    certificate: str = ""

    def __bool__(self):
        return self.known_one


def ua_is_one(V: SeifertMatrix) -> UaVerdict:
    """Sufficient conditions for algebraic unknotting number one."""
    delta = alexander(V)
    for h in SMALL_H:
        if delta == h_form(h):
            return UaVerdict(True, f"Alexander polynomial h(t+t^-1)+1-2h with h = {h}")
    if V.size == 2:
        d = abs(det_int(V.rows))
        if d in SMALL_H:
            return UaVerdict(True, f"2x2 matrix with |det V| = {d}")
    return UaVerdict(False)
