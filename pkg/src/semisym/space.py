"""Pseudo-Euclidean spaces, bivectors and the Hodge operator.

Conventions (fixed throughout the package):

* ``(u ^ v) w = <v, w> u - <u, w> v``  and  ``(u v v) w = (<v, w> u + <u, w> v) / 2``.
* Bivector coordinates are taken on ``b_i ^ b_j`` (``i < j``, lexicographic).
* ``<u ^ v, w ^ t> = <(u ^ v) w, t> = <v, w><u, t> - <u, w><v, t>``.
* A skew endomorphism ``A`` corresponds to the bivector with coordinates
  ``(A G^{-1})_{ij}``; equivalently ``A = X G`` with ``X`` antisymmetric.
"""

from __future__ import annotations

import itertools
import json
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from math import isqrt
from typing import Mapping, Sequence

from .exact import (
    DEFAULT_SEED,
    ONE,
    ZERO,
    Matrix,
    Scalar,
    ScalarLike,
    Vector,
    as_scalar,
    dot,
    generic_points,
    kernel_basis,
    parse_scalar,
    vec,
)

__all__ = [
    "PseudoSpace",
    "DimensionMismatch",
    "NotSkew",
    "endo_kind",
    "permutation_sign",
]


class DimensionMismatch(ValueError):
    pass


class NotSkew(ValueError):
    pass


def permutation_sign(seq: Sequence[int]) -> int:
    """Sign of a permutation given as a sequence; 0 if an entry repeats."""
    seq = list(seq)
    if len(set(seq)) != len(seq):
        return 0
    sign = 1
    for i in range(len(seq)):
        for j in range(i + 1, len(seq)):
            if seq[i] > seq[j]:
                sign = -sign
    return sign


def _exact_sqrt(q: Fraction) -> Fraction | None:
    if q < 0:
        return None
    n, d = isqrt(q.numerator), isqrt(q.denominator)
    if n * n == q.numerator and d * d == q.denominator:
        return Fraction(n, d)
    return None


@dataclass(frozen=True, eq=False)
class PseudoSpace:
    """A finite-dimensional vector space with an explicit symmetric Gram matrix."""

    gram: Matrix
    names: tuple[str, ...] = ()
    params: tuple[str, ...] = ()
    label: str = ""

    def __post_init__(self):
        if not self.gram.is_square:
            raise ValueError("Gram matrix must be square")
        if not self.gram.is_symmetric():
            raise ValueError("Gram matrix must be symmetric")
        n = self.gram.rows
        names = self.names or tuple(f"e{i + 1}" for i in range(n))
        if len(names) != n or len(set(names)) != n:
            raise ValueError("need one distinct basis name per dimension")
        object.__setattr__(self, "names", tuple(names))
        declared = list(self.params)
        declared += [p for p in self.gram.params if p not in declared]
        object.__setattr__(self, "params", tuple(declared))
        if self.gram.det().is_zero():
            raise ValueError("Gram matrix is degenerate")

    # -- construction -----------------------------------------------------
    @classmethod
    def from_pairings(
        cls,
        names: str | Sequence[str],
        pairings: Mapping[tuple[str, str], ScalarLike],
        label: str = "",
    ) -> "PseudoSpace":
        """Build from nonzero products, e.g. ``{("x","z"): 1, ("y","t"): 1}``."""
        if isinstance(names, str):
            names = names.split()
        idx = {n: i for i, n in enumerate(names)}
        g = [[ZERO] * len(names) for _ in names]
        for (a, b), val in pairings.items():
            i, j = idx[a], idx[b]
            g[i][j] = g[j][i] = as_scalar(val)
        return cls(Matrix(g), tuple(names), label=label)

    @classmethod
    def from_json(cls, obj: Mapping) -> "PseudoSpace":
        params = tuple(obj.get("params", ()))
        gram = Matrix([[parse_scalar(str(x), params) for x in row] for row in obj["gram"]])
        dim = obj.get("dim", gram.rows)
        if dim != gram.rows:
            raise ValueError(f"dim {dim} does not match the {gram.rows}x{gram.cols} Gram matrix")
        return cls(gram, tuple(obj.get("basis_names", ())), params, obj.get("label", ""))

    def to_json(self) -> dict:
        return {
            "dim": self.dim,
            "params": list(self.params),
            "gram": [[str(x) for x in r] for r in self.gram.tolist()],
            "basis_names": list(self.names),
        }

    def __eq__(self, other):
        if not isinstance(other, PseudoSpace):
            return NotImplemented
        return self.gram == other.gram and self.names == other.names

    def __hash__(self):
        return hash((self.gram, self.names))

    def __repr__(self):
        return f"PseudoSpace({self.label or ' '.join(self.names)}, dim={self.dim})"

    # -- vectors ----------------------------------------------------------
    @property
    def dim(self) -> int:
        return self.gram.rows

    def index(self, name: str | int) -> int:
        if isinstance(name, int):
            return name
        try:
            return self.names.index(name)
        except ValueError:
            raise KeyError(f"unknown basis vector {name!r}") from None

    def basis_vector(self, name: str | int) -> Vector:
        i = self.index(name)
        return tuple(ONE if k == i else ZERO for k in range(self.dim))

    def vector(self, spec) -> Vector:
        """A vector from a basis name, a coefficient mapping, or coordinates."""
        if isinstance(spec, (str, int)):
            return self.basis_vector(spec)
        if isinstance(spec, Mapping):
            out = [ZERO] * self.dim
            for k, c in spec.items():
                out[self.index(k)] = out[self.index(k)] + as_scalar(c)
            return tuple(out)
        v = vec(spec)
        self._check(v)
        return v

    def _check(self, v: Sequence) -> None:
        if len(v) != self.dim:
            raise DimensionMismatch(f"vector of length {len(v)} in a {self.dim}-dimensional space")

    def inner(self, u, v) -> Scalar:
        return dot(self.vector(u), self.gram.apply(self.vector(v)))

    @cached_property
    def gram_inverse(self) -> Matrix:
        return self.gram.inverse()

    # -- endomorphisms ----------------------------------------------------
    def wedge_endo(self, u, v) -> Matrix:
        """``A_{u,v}``: ``w -> <v,w> u - <u,w> v``."""
        u, v = self.vector(u), self.vector(v)
        gu, gv = self.gram.apply(u), self.gram.apply(v)
        n = self.dim
        return Matrix([[u[i] * gv[j] - v[i] * gu[j] for j in range(n)] for i in range(n)])

    def vee_endo(self, u, v) -> Matrix:
        """``u v v``: ``w -> (<v,w> u + <u,w> v) / 2``."""
        u, v = self.vector(u), self.vector(v)
        gu, gv = self.gram.apply(u), self.gram.apply(v)
        half = Scalar(Fraction(1, 2))
        n = self.dim
        return Matrix([[half * (u[i] * gv[j] + v[i] * gu[j]) for j in range(n)] for i in range(n)])

    def vee_form(self, terms: Sequence[tuple[ScalarLike, object, object]]) -> Matrix:
        """Bilinear form of ``sum c * (u v v)``; ``(u v v)(a, b) = <(u v v) a, b>``."""
        n = self.dim
        half = Scalar(Fraction(1, 2))
        out = Matrix.zeros(n)
        for c, u, v in terms:
            gu, gv = self.gram.apply(self.vector(u)), self.gram.apply(self.vector(v))
            c = as_scalar(c) * half
            out = out + Matrix([[c * (gu[i] * gv[j] + gv[i] * gu[j]) for j in range(n)] for i in range(n)])
        return out

    def vee_terms(self, form: Matrix) -> list[tuple[Scalar, str, str]]:
        """Inverse of :meth:`vee_form`: nonzero ``(c, b_i, b_j)`` with ``i <= j``."""
        Ginv = self.gram_inverse
        S = Ginv * form * Ginv
        out = []
        for i in range(self.dim):
            for j in range(i, self.dim):
                c = S[i, j] if i == j else S[i, j] * 2
                if not c.is_zero():
                    out.append((c, self.names[i], self.names[j]))
        return out

    def is_skew(self, A: Matrix) -> bool:
        return (self.gram * A).is_antisymmetric()

    def is_self_adjoint(self, A: Matrix) -> bool:
        return (self.gram * A).is_symmetric()

    # -- bivectors --------------------------------------------------------
    @cached_property
    def pairs(self) -> tuple[tuple[int, int], ...]:
        return tuple(itertools.combinations(range(self.dim), 2))

    @cached_property
    def pair_index(self) -> dict[tuple[int, int], int]:
        return {p: k for k, p in enumerate(self.pairs)}

    @property
    def bivector_dim(self) -> int:
        return len(self.pairs)

    def pair_name(self, k: int) -> str:
        i, j = self.pairs[k]
        return f"{self.names[i]}^{self.names[j]}"

    def wedge(self, u, v) -> Vector:
        """Coordinates of ``u ^ v`` on the bivector basis."""
        u, v = self.vector(u), self.vector(v)
        return tuple(u[i] * v[j] - u[j] * v[i] for i, j in self.pairs)

    def bivector(self, spec) -> Vector:
        """``("x","z")`` -> ``x ^ z``; a list of ``(coeff, a, b)`` -> the combination; or raw coordinates."""
        if isinstance(spec, tuple) and len(spec) == 2 and all(isinstance(s, (str, int)) for s in spec):
            return self.wedge(*spec)
        if isinstance(spec, (list, tuple)) and spec and isinstance(spec[0], tuple):
            out = [ZERO] * self.bivector_dim
            for c, a, b in spec:
                w = self.wedge(a, b)
                c = as_scalar(c)
                out = [o + c * x for o, x in zip(out, w)]
            return tuple(out)
        v = vec(spec)
        if len(v) != self.bivector_dim:
            raise DimensionMismatch("bivector coordinate length mismatch")
        return v

    @cached_property
    def bivector_gram(self) -> Matrix:
        g = self.gram
        rows = []
        for i, j in self.pairs:
            rows.append([g[j, k] * g[i, l] - g[i, k] * g[j, l] for k, l in self.pairs])
        return Matrix(rows)

    @cached_property
    def bivector_gram_inverse(self) -> Matrix:
        return self.bivector_gram.inverse()

    def bivector_inner(self, alpha: Sequence[Scalar], beta: Sequence[Scalar]) -> Scalar:
        if len(alpha) != self.bivector_dim or len(beta) != self.bivector_dim:
            raise DimensionMismatch("bivector coordinate length mismatch")
        return dot(alpha, self.bivector_gram.apply(beta))

    def so_to_bivector(self, A: Matrix) -> Vector:
        if A.shape != (self.dim, self.dim):
            raise DimensionMismatch("endomorphism shape mismatch")
        if not self.is_skew(A):
            raise NotSkew("endomorphism is not skew with respect to the metric")
        X = A * self.gram_inverse
        return tuple(X[i, j] for i, j in self.pairs)

    def bivector_to_so(self, alpha: Sequence[Scalar]) -> Matrix:
        n = self.dim
        X = [[ZERO] * n for _ in range(n)]
        for (i, j), a in zip(self.pairs, alpha):
            X[i][j] = a
            X[j][i] = -a
        return Matrix(X) * self.gram

    @cached_property
    def so_basis(self) -> tuple[Matrix, ...]:
        return tuple(self.wedge_endo(i, j) for i, j in self.pairs)

    def ad(self, A: Matrix) -> Matrix:
        """Matrix of ``b_i ^ b_j -> A b_i ^ b_j + b_i ^ A b_j`` on the bivector basis."""
        cols = []
        n = self.dim
        for i, j in self.pairs:
            ai, aj = A.col(i), A.col(j)
            ei, ej = self.basis_vector(i), self.basis_vector(j)
            cols.append(tuple(x + y for x, y in zip(self.wedge(ai, ej), self.wedge(ei, aj))))
        return Matrix.from_columns(cols)

    # -- metric invariants -------------------------------------------------
    def orthogonal_basis(self) -> list[Vector]:
        """Exact Gram-Schmidt by congruence (orthogonal, not normalized)."""
        pool = [self.basis_vector(i) for i in range(self.dim)]
        out: list[Vector] = []
        while pool:
            k = next((i for i, v in enumerate(pool) if not self.inner(v, v).is_zero()), None)
            if k is None:
                pair = next(
                    ((i, j) for i in range(len(pool)) for j in range(i + 1, len(pool))
                     if not self.inner(pool[i], pool[j]).is_zero()),
                    None,
                )
                if pair is None:
                    raise ValueError("degenerate metric")
                i, j = pair
                pool[i] = tuple(a + b for a, b in zip(pool[i], pool[j]))
                k = i
            v = pool.pop(k)
            nv = self.inner(v, v)
            out.append(v)
            pool = [tuple(a - (self.inner(w, v) / nv) * b for a, b in zip(w, v)) for w in pool]
        return out

    def signature(self, point: Mapping[str, ScalarLike] | None = None, seed: int = DEFAULT_SEED) -> tuple[int, int]:
        """``(p, q)``: numbers of positive and negative squares, at a generic point if parametric."""
        if point is None and self.params:
            point = generic_points(self.params, 1, seed, nonzero=[self.gram.det()])[0]
        p = q = 0
        for v in self.orthogonal_basis():
            nv = self.inner(v, v)
            if point:
                nv = nv.subs(point)
            if nv.to_fraction() > 0:
                p += 1
            else:
                q += 1
        return p, q

    @cached_property
    def wedge_pairing(self) -> Matrix:
        """``alpha ^ beta = Omega(alpha, beta) b_1 ^ ... ^ b_4``."""
        if self.dim != 4:
            raise DimensionMismatch("the Hodge operator is only defined here for dim 4")
        return Matrix(
            [[permutation_sign((i, j, k, l)) for k, l in self.pairs] for i, j in self.pairs]
        )

    @cached_property
    def volume_scale(self) -> Scalar:
        """``sqrt|det G|``, so that ``b_1 ^ ... ^ b_4 = volume_scale * omega``."""
        det = self.gram.det()
        if not det.is_rational:
            raise ValueError("|det G| must be a rational square to normalize the volume form exactly")
        root = _exact_sqrt(abs(det.to_fraction()))
        if root is None:
            raise ValueError(f"|det G| = {abs(det.to_fraction())} is not a rational square")
        return Scalar(root)

    @cached_property
    def hodge(self) -> Matrix:
        """``J`` on bivectors: ``alpha ^ beta = <J alpha, beta>_1 omega``.

        ``<u^v, w^t>_1 = <u,w><v,t> - <u,t><v,w>`` is the induced metric (the
        negative of ``bivector_gram``); the basis order fixes the orientation.
        """
        if self.dim != 4:
            raise DimensionMismatch("the Hodge operator is only defined here for dim 4")
        return self.bivector_gram_inverse * self.wedge_pairing * (-self.volume_scale)

    def hodge_squared_is_identity(self) -> bool:
        J = self.hodge
        return J * J == Matrix.identity(self.bivector_dim)

    def self_dual_basis(self, sign: int = 1) -> list[Vector]:
        """Basis of the ``+1`` (``sign=1``) or ``-1`` eigenspace of ``J``."""
        J = self.hodge
        return kernel_basis(J - Matrix.identity(self.bivector_dim) * sign)


def endo_kind(space: PseudoSpace, A: Matrix) -> str:
    """``"skew"``, ``"symmetric"`` or ``"general"`` with respect to the metric."""
    if space.is_skew(A):
        return "skew"
    if space.is_self_adjoint(A):
        return "symmetric"
    return "general"


def load_space(path) -> PseudoSpace:
    with open(path) as fh:
        return PseudoSpace.from_json(json.load(fh))
