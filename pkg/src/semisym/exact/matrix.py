"""Immutable exact matrices and the linear algebra kernel.

Elimination always pivots on the leftmost column that still has a nonzero
entry, taking the topmost such row, so echelon forms are reproducible.  Over
a parametric field "nonzero" means nonzero as a rational function: ranks are
generic ranks.
"""

from __future__ import annotations

from typing import Iterable, Mapping, Sequence

from .scalar import ONE, ZERO, Scalar, ScalarLike, as_scalar
from .unipoly import UniPoly

__all__ = [
    "Matrix",
    "Vector",
    "InconsistentSystem",
    "rref",
    "kernel_basis",
    "solve_linear",
    "rank",
    "char_poly",
    "char_poly_cofactor",
    "min_poly",
    "span_contains",
    "same_span",
    "independent_subset",
    "vec",
    "dot",
]

Vector = tuple  # tuple[Scalar, ...]


def vec(values: Iterable[ScalarLike]) -> Vector:
    return tuple(as_scalar(v) for v in values)


def dot(u: Sequence[Scalar], v: Sequence[Scalar]) -> Scalar:
    acc = ZERO
    for a, b in zip(u, v):
        if not a.is_zero() and not b.is_zero():
            acc = acc + a * b
    return acc


class InconsistentSystem(ValueError):
    """``rank([M|b]) > rank(M)``."""


class Matrix:
    __slots__ = ("rows", "cols", "_data")

    def __init__(self, data: Iterable[Iterable[ScalarLike]], cols: int | None = None):
        rows = tuple(tuple(as_scalar(x) for x in r) for r in data)
        if rows:
            width = len(rows[0])
            if any(len(r) != width for r in rows):
                raise ValueError("ragged matrix")
        else:
            width = cols or 0
        object.__setattr__(self, "_data", rows)
        object.__setattr__(self, "rows", len(rows))
        object.__setattr__(self, "cols", width)

    def __setattr__(self, name, value):
        raise AttributeError("Matrix is immutable")

    # -- constructors -----------------------------------------------------
    @classmethod
    def zeros(cls, rows: int, cols: int | None = None) -> "Matrix":
        cols = rows if cols is None else cols
        return cls([[ZERO] * cols for _ in range(rows)], cols)

    @classmethod
    def identity(cls, n: int) -> "Matrix":
        return cls([[ONE if i == j else ZERO for j in range(n)] for i in range(n)])

    @classmethod
    def diag(cls, entries: Sequence[ScalarLike]) -> "Matrix":
        n = len(entries)
        return cls([[entries[i] if i == j else 0 for j in range(n)] for i in range(n)])

    @classmethod
    def from_columns(cls, columns: Sequence[Sequence[ScalarLike]], rows: int | None = None) -> "Matrix":
        if not columns:
            return cls([[] for _ in range(rows or 0)], 0)
        return cls(list(zip(*columns)))

    # -- access -----------------------------------------------------------
    @property
    def shape(self) -> tuple[int, int]:
        return self.rows, self.cols

    def __getitem__(self, ij):
        i, j = ij
        return self._data[i][j]

    def row(self, i: int) -> Vector:
        return self._data[i]

    def col(self, j: int) -> Vector:
        return tuple(r[j] for r in self._data)

    def tolist(self) -> list[list[Scalar]]:
        return [list(r) for r in self._data]

    def flatten(self) -> Vector:
        return tuple(x for r in self._data for x in r)

    @property
    def T(self) -> "Matrix":
        return Matrix(zip(*self._data), self.rows) if self.cols else Matrix.zeros(0, self.rows)

    @property
    def is_square(self) -> bool:
        return self.rows == self.cols

    def is_zero(self) -> bool:
        return all(x.is_zero() for r in self._data for x in r)

    def is_symmetric(self) -> bool:
        return self.is_square and all(
            self._data[i][j] == self._data[j][i] for i in range(self.rows) for j in range(i)
        )

    def is_antisymmetric(self) -> bool:
        return self.is_square and all(
            (self._data[i][j] + self._data[j][i]).is_zero()
            for i in range(self.rows)
            for j in range(i + 1)
        )

    @property
    def params(self) -> tuple[str, ...]:
        seen: list[str] = []
        for r in self._data:
            for x in r:
                if not x.is_rational:
                    seen.extend(p for p in x.params if p not in seen)
        return tuple(seen)

    # -- arithmetic -------------------------------------------------------
    def __add__(self, other: "Matrix") -> "Matrix":
        _same_shape(self, other)
        return Matrix(
            [[a + b for a, b in zip(ra, rb)] for ra, rb in zip(self._data, other._data)], self.cols
        )

    def __sub__(self, other: "Matrix") -> "Matrix":
        _same_shape(self, other)
        return Matrix(
            [[a - b for a, b in zip(ra, rb)] for ra, rb in zip(self._data, other._data)], self.cols
        )

    def __neg__(self) -> "Matrix":
        return Matrix([[-a for a in r] for r in self._data], self.cols)

    def __mul__(self, other):
        if isinstance(other, Matrix):
            if self.cols != other.rows:
                raise ValueError(f"shape mismatch {self.shape} * {other.shape}")
            ocols = other.T._data if other.cols else ()
            return Matrix([[dot(r, c) for c in ocols] for r in self._data], other.cols)
        c = as_scalar(other)
        return Matrix([[c * a for a in r] for r in self._data], self.cols)

    def __rmul__(self, other):
        return self.__mul__(other)

    def __matmul__(self, other: "Matrix") -> "Matrix":
        return self * other

    def apply(self, v: Sequence[ScalarLike]) -> Vector:
        v = vec(v)
        if len(v) != self.cols:
            raise ValueError("dimension mismatch")
        return tuple(dot(r, v) for r in self._data)

    def __pow__(self, n: int) -> "Matrix":
        out = Matrix.identity(self.rows)
        for _ in range(n):
            out = out * self
        return out

    def __eq__(self, other) -> bool:
        if not isinstance(other, Matrix):
            return NotImplemented
        return self.shape == other.shape and self._data == other._data

    def __hash__(self):
        return hash(self._data)

    def trace(self) -> Scalar:
        acc = ZERO
        for i in range(min(self.rows, self.cols)):
            acc = acc + self._data[i][i]
        return acc

    def commutator(self, other: "Matrix") -> "Matrix":
        return self * other - other * self

    def subs(self, assignment: Mapping[str, ScalarLike]) -> "Matrix":
        return Matrix([[x.subs(assignment) for x in r] for r in self._data], self.cols)

    def hstack(self, other: "Matrix") -> "Matrix":
        return Matrix([ra + rb for ra, rb in zip(self._data, other._data)])

    def vstack(self, other: "Matrix") -> "Matrix":
        if self.rows and other.rows and self.cols != other.cols:
            raise ValueError("column mismatch")
        return Matrix(self._data + other._data, self.cols or other.cols)

    # -- linear algebra ---------------------------------------------------
    def det(self) -> Scalar:
        if not self.is_square:
            raise ValueError("determinant of a non-square matrix")
        m = [list(r) for r in self._data]
        n = self.rows
        sign, acc = ONE, ONE
        for c in range(n):
            p = next((r for r in range(c, n) if not m[r][c].is_zero()), None)
            if p is None:
                return ZERO
            if p != c:
                m[c], m[p] = m[p], m[c]
                sign = -sign
            piv = m[c][c]
            acc = acc * piv
            inv = ONE / piv
            for r in range(c + 1, n):
                f = m[r][c]
                if f.is_zero():
                    continue
                f = f * inv
                for k in range(c + 1, n):
                    if not m[c][k].is_zero():
                        m[r][k] = m[r][k] - f * m[c][k]
        return sign * acc

    def inverse(self) -> "Matrix":
        n = self.rows
        if not self.is_square:
            raise ValueError("inverse of a non-square matrix")
        red, pivots = rref(self.hstack(Matrix.identity(n)))
        if pivots[:n] != list(range(n)) or len(pivots) < n or pivots[n - 1] >= n:
            raise ZeroDivisionError("matrix is singular")
        return Matrix([r[n:] for r in red._data])

    def rank(self) -> int:
        return len(rref(self)[1])

    def kernel(self) -> list[Vector]:
        return kernel_basis(self)

    def __str__(self) -> str:
        cells = [[str(x) for x in r] for r in self._data]
        width = max((len(c) for r in cells for c in r), default=1)
        return "\n".join("[" + "  ".join(c.rjust(width) for c in r) + "]" for r in cells)

    def __repr__(self) -> str:
        return f"Matrix({[[str(x) for x in r] for r in self._data]})"


def _same_shape(a: Matrix, b: Matrix):
    if a.shape != b.shape:
        raise ValueError(f"shape mismatch {a.shape} vs {b.shape}")


def rref(M: Matrix) -> tuple[Matrix, list[int]]:
    """Reduced row echelon form and pivot columns."""
    m = [list(r) for r in M._data]
    nr, nc = M.rows, M.cols
    pivots: list[int] = []
    r = 0
    for c in range(nc):
        if r >= nr:
            break
        p = next((i for i in range(r, nr) if not m[i][c].is_zero()), None)
        if p is None:
            continue
        if p != r:
            m[r], m[p] = m[p], m[r]
        inv = ONE / m[r][c]
        if inv != ONE:
            m[r] = [x * inv if not x.is_zero() else x for x in m[r]]
        pr = m[r]
        nz = [k for k in range(c, nc) if not pr[k].is_zero()]
        for i in range(nr):
            if i == r:
                continue
            f = m[i][c]
            if f.is_zero():
                continue
            row = m[i]
            for k in nz:
                row[k] = row[k] - f * pr[k]
        pivots.append(c)
        r += 1
    return Matrix(m, nc), pivots


def kernel_basis(M: Matrix) -> list[Vector]:
    """Basis of ``{v : M v = 0}`` in reduced-echelon normal form.

    One vector per free column ``f``: a 1 in position ``f``, zeros at the
    other free columns.
    """
    red, pivots = rref(M)
    pivset = set(pivots)
    basis = []
    for f in range(M.cols):
        if f in pivset:
            continue
        v = [ZERO] * M.cols
        v[f] = ONE
        for i, p in enumerate(pivots):
            v[p] = -red[i, f]
        basis.append(tuple(v))
    return basis


def rank(M: Matrix) -> int:
    return M.rank()


def solve_linear(M: Matrix, b: Sequence[ScalarLike]) -> tuple[Vector, list[Vector]]:
    """Return ``(x, kernel)`` with ``M x = b``; raise :class:`InconsistentSystem` otherwise."""
    b = vec(b)
    if len(b) != M.rows:
        raise ValueError("right-hand side length must equal the number of rows")
    aug = Matrix([list(r) + [bi] for r, bi in zip(M._data, b)], M.cols + 1)
    red, pivots = rref(aug)
    if pivots and pivots[-1] == M.cols:
        raise InconsistentSystem("rank([M|b]) > rank(M)")
    x = [ZERO] * M.cols
    for i, p in enumerate(pivots):
        x[p] = red[i, M.cols]
    return tuple(x), kernel_basis(M)


def independent_subset(vectors: Sequence[Sequence[Scalar]]) -> list[int]:
    """Indices of a maximal independent subfamily (greedy, left to right)."""
    if not vectors:
        return []
    _, pivots = rref(Matrix.from_columns(vectors))
    return pivots


def span_contains(basis: Sequence[Sequence[Scalar]], v: Sequence[Scalar]) -> bool:
    """Exact rank comparison: is ``v`` in the span of ``basis``?"""
    if not basis:
        return all(x.is_zero() for x in v)
    r0 = Matrix.from_columns(basis).rank()
    return Matrix.from_columns(list(basis) + [v]).rank() == r0


def same_span(a: Sequence[Sequence[Scalar]], b: Sequence[Sequence[Scalar]]) -> bool:
    ra = Matrix.from_columns(a).rank() if a else 0
    rb = Matrix.from_columns(b).rank() if b else 0
    if ra != rb:
        return False
    if not a:
        return True
    return Matrix.from_columns(list(a) + list(b)).rank() == ra


def char_poly(M: Matrix, var: str = "X") -> UniPoly:
    """``det(X I - M)`` by Faddeev-LeVerrier."""
    if not M.is_square:
        raise ValueError("characteristic polynomial of a non-square matrix")
    n = M.rows
    coeffs = [ZERO] * (n + 1)
    coeffs[n] = ONE
    ident = Matrix.identity(n)
    Mk = Matrix.zeros(n)
    for k in range(1, n + 1):
        Mk = M * Mk + ident * coeffs[n - k + 1]
        coeffs[n - k] = -(M * Mk).trace() / k
    return UniPoly(coeffs, var)


def char_poly_cofactor(M: Matrix, var: str = "X") -> UniPoly:
    """``det(X I - M)`` by Laplace expansion over polynomial entries (oracle)."""
    n = M.rows
    entries = [
        [(UniPoly([-M[i, j], 1], var) if i == j else UniPoly([-M[i, j]], var)) for j in range(n)]
        for i in range(n)
    ]

    def det(rows: list[int], cols: list[int]) -> UniPoly:
        if not rows:
            return UniPoly([1], var)
        i, rest = rows[0], rows[1:]
        acc = UniPoly([], var)
        for k, j in enumerate(cols):
            e = entries[i][j]
            if e.is_zero():
                continue
            term = e * det(rest, cols[:k] + cols[k + 1 :])
            acc = acc + (term if k % 2 == 0 else -term)
        return acc

    return det(list(range(n)), list(range(n)))


def min_poly(M: Matrix, var: str = "X") -> UniPoly:
    """Monic annihilating polynomial of least degree (Krylov on matrix powers)."""
    if not M.is_square:
        raise ValueError("minimal polynomial of a non-square matrix")
    n = M.rows
    powers = [Matrix.identity(n).flatten()]
    P = Matrix.identity(n)
    for d in range(1, n + 1):
        P = P * M
        target = P.flatten()
        basis = Matrix.from_columns(powers)
        try:
            x, _ = solve_linear(basis, target)
        except InconsistentSystem:
            powers.append(target)
            continue
        return UniPoly([-c for c in x] + [ONE], var)
    raise AssertionError("Cayley-Hamilton violated")  # pragma: no cover
