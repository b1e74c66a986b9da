"""Algebraic curvature tensors on a pseudo-Euclidean space.

An element of ``P = L2 v L2`` (``L2`` the bivectors) is stored as the
symmetric bilinear form it defines on ``L2``.  With the half-normalized
symmetric product, ``alpha v beta`` is the form
``(P, Q) -> (<alpha,P><beta,Q> + <beta,P><alpha,Q>) / 2`` and the associated
endomorphism of ``L2`` is obtained by raising with the bivector Gram matrix.
"""

from __future__ import annotations

import itertools
import json
import os
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from typing import Iterable, Mapping, Sequence

from .exact import (
    DEFAULT_SEED,
    ONE,
    ZERO,
    Factor,
    Matrix,
    Scalar,
    ScalarLike,
    UniPoly,
    Vector,
    as_scalar,
    char_poly,
    dot,
    factor_over_rationals,
    factor_parametric,
    generic_points,
    independent_subset,
    kernel_basis,
    min_poly,
    parse_scalar,
    solve_linear,
    span_contains,
)
from .space import DimensionMismatch, PseudoSpace

__all__ = [
    "PSymTensor",
    "CurvatureTensor",
    "NotBianchi",
    "UnresolvedSpectrum",
    "DecompositionError",
    "RicciType",
    "RicciData",
    "RicciBlock",
    "RicciDecomposition",
    "SemiSymmetry",
    "SelfDualData",
    "make_tensor",
    "bianchi_map",
    "bianchi_map_literal",
    "bianchi_projection",
    "curvature_action",
    "first_bianchi_holds",
    "ricci",
    "ricci_form",
    "ricci_closed_form",
    "ricci_form_by_generators",
    "is_semi_symmetric",
    "semi_symmetric_oracle",
    "ricci_commutes",
    "holonomy_image",
    "classify_ricci",
    "ricci_decomposition",
    "selfdual_spectrum",
    "constant_curvature_tensor",
    "load_tensor",
    "tensor_from_json",
]

HALF = Scalar(Fraction(1, 2))


class NotBianchi(ValueError):
    """The form does not satisfy the first Bianchi identity."""


class UnresolvedSpectrum(ValueError):
    pass


class DecompositionError(ValueError):
    pass


# ---------------------------------------------------------------------------
# tensors


@dataclass(frozen=True, eq=False)
class PSymTensor:
    space: PseudoSpace
    form: Matrix

    def __post_init__(self):
        n = self.space.bivector_dim
        if self.form.shape != (n, n):
            raise DimensionMismatch(f"expected a {n}x{n} form on bivectors, got {self.form.shape}")
        if not self.form.is_symmetric():
            raise ValueError("the form of an element of P must be symmetric")

    @classmethod
    def zero(cls, space: PseudoSpace) -> "PSymTensor":
        return cls(space, Matrix.zeros(space.bivector_dim))

    @cached_property
    def endo(self) -> Matrix:
        """The endomorphism of bivectors: ``<endo(P), Q> = form(P, Q)``."""
        return self.space.bivector_gram_inverse * self.form

    @cached_property
    def contravariant(self) -> Matrix:
        """Coefficients ``T`` with ``self = sum T[p][q] e_p v e_q`` on the basis bivectors."""
        gi = self.space.bivector_gram_inverse
        return gi * self.form * gi

    def __call__(self, alpha: Sequence[Scalar], beta: Sequence[Scalar]) -> Scalar:
        return dot(alpha, self.form.apply(beta))

    @property
    def params(self) -> tuple[str, ...]:
        return self.form.params

    def is_zero(self) -> bool:
        return self.form.is_zero()

    def _same(self, other: "PSymTensor"):
        if not isinstance(other, PSymTensor):
            return False
        if other.space != self.space:
            raise ValueError("tensors live in different spaces")
        return True

    def _result(self, other, form):
        cls = CurvatureTensor if isinstance(self, CurvatureTensor) and (
            other is None or isinstance(other, CurvatureTensor)
        ) else PSymTensor
        return cls(self.space, form)

    def __add__(self, other):
        if not self._same(other):
            return NotImplemented
        return self._result(other, self.form + other.form)

    def __sub__(self, other):
        if not self._same(other):
            return NotImplemented
        return self._result(other, self.form - other.form)

    def __neg__(self):
        return self._result(None, -self.form)

    def __mul__(self, c):
        if isinstance(c, (PSymTensor, Matrix)):
            return NotImplemented
        return self._result(None, self.form * as_scalar(c))

    __rmul__ = __mul__

    def __eq__(self, other):
        if not isinstance(other, PSymTensor):
            return NotImplemented
        return self.space == other.space and self.form == other.form

    def __hash__(self):
        return hash(self.form)

    def subs(self, assignment: Mapping[str, ScalarLike]):
        return type(self)(self.space, self.form.subs(assignment))

    def coordinates(self) -> Vector:
        """Upper-triangular entries of the form (``N(N+1)/2`` of them)."""
        n = self.space.bivector_dim
        return tuple(self.form[i, j] for i in range(n) for j in range(i, n))

    @classmethod
    def from_coordinates(cls, space: PseudoSpace, coords: Sequence[ScalarLike]):
        n = space.bivector_dim
        rows = [[ZERO] * n for _ in range(n)]
        it = iter(coords)
        for i in range(n):
            for j in range(i, n):
                rows[i][j] = rows[j][i] = as_scalar(next(it))
        return cls(space, Matrix(rows))

    def as_curvature(self) -> "CurvatureTensor":
        return CurvatureTensor(self.space, self.form)

    def terms(self) -> list[tuple[Scalar, int, int]]:
        """``[(c, p, q)]`` with ``p <= q`` and ``self = sum c * e_p v e_q``."""
        T = self.contravariant
        n = self.space.bivector_dim
        out = []
        for p in range(n):
            for q in range(p, n):
                c = T[p, q] if p == q else T[p, q] * 2
                if not c.is_zero():
                    out.append((c, p, q))
        return out

    def __str__(self) -> str:
        parts = []
        for c, p, q in self.terms():
            a, b = self.space.pair_name(p), self.space.pair_name(q)
            gen = f"({a})v({a})" if p == q else f"({a})v({b})"
            parts.append(f"({c})*{gen}" if not c.is_rational or " " in str(c) else
                         (gen if c == 1 else f"{c}*{gen}"))
        return " + ".join(parts) if parts else "0"

    def __repr__(self):
        return f"{type(self).__name__}({self})"


class CurvatureTensor(PSymTensor):
    """A ``PSymTensor`` certified to lie in the kernel of the Bianchi map."""

    def __post_init__(self):
        super().__post_init__()
        if not bianchi_map(PSymTensor(self.space, self.form)).is_zero():
            raise NotBianchi("the tensor does not satisfy the first Bianchi identity")


def _as_bivector(space: PseudoSpace, x) -> Vector:
    if isinstance(x, Matrix):
        return space.so_to_bivector(x)
    return space.bivector(x)


def make_tensor(space: PseudoSpace, terms: Iterable[tuple[ScalarLike, object, object]] = ()) -> PSymTensor:
    """``sum c * (alpha v beta)``.

    Bivectors may be coordinate tuples, skew matrices, or basis-name pairs
    such as ``("x", "z")``.
    """
    G = space.bivector_gram
    n = space.bivector_dim
    form = Matrix.zeros(n)
    for c, alpha, beta in terms:
        ga = G.apply(_as_bivector(space, alpha))
        gb = G.apply(_as_bivector(space, beta))
        c = as_scalar(c) * HALF
        form = form + Matrix([[c * (ga[i] * gb[j] + gb[i] * ga[j]) for j in range(n)] for i in range(n)])
    return PSymTensor(space, form)


def constant_curvature_tensor(space: PseudoSpace, c: ScalarLike = 1) -> CurvatureTensor:
    """``K(u, v) = c * (u ^ v)``: the identity on bivectors scaled by ``c``."""
    return CurvatureTensor(space, space.bivector_gram * as_scalar(c))


# ---------------------------------------------------------------------------
# Bianchi map


def _four_tensor(T: PSymTensor):
    space = T.space
    idx = space.pair_index
    F = T.form

    def entry(i, j):
        if i == j:
            return None, 0
        return (idx[(i, j)], 1) if i < j else (idx[(j, i)], -1)

    def R(i, j, k, l):
        p, s = entry(i, j)
        q, t = entry(k, l)
        if not s or not t:
            return ZERO
        v = F[p, q]
        return v if s * t == 1 else -v

    return R


def bianchi_map(T: PSymTensor) -> PSymTensor:
    """Cyclic sum over the first three arguments of ``R(x,y,z,w) = T(x^y, z^w)``."""
    R = _four_tensor(T)
    pairs = T.space.pairs
    rows = [
        [R(i, j, k, l) + R(j, k, i, l) + R(k, i, j, l) for k, l in pairs]
        for i, j in pairs
    ]
    return PSymTensor(T.space, Matrix(rows))


def bianchi_projection(T: PSymTensor) -> CurvatureTensor:
    """``T - B(T)/3``, the projection onto ``ker B`` (``B o B = 3B``)."""
    return CurvatureTensor(T.space, (T - bianchi_map(T) * Scalar(Fraction(1, 3))).form)


def bianchi_map_literal(T: PSymTensor) -> PSymTensor:
    """``B((a^b)v(c^d)) = (a^b)v(c^d) + (b^c)v(a^d) + (c^a)v(b^d)`` applied generator by generator."""
    space = T.space
    C = T.contravariant
    terms = []
    for p, (i, j) in enumerate(space.pairs):
        for q, (k, l) in enumerate(space.pairs):
            c = C[p, q]
            if c.is_zero():
                continue
            terms += [
                (c, (i, j), (k, l)),
                (c, (j, k), (i, l)),
                (c, (k, i), (j, l)),
            ]
    return make_tensor(space, terms)


# ---------------------------------------------------------------------------
# curvature operators


def _action_table(K: PSymTensor) -> dict[tuple[int, int], Matrix]:
    cache = K.__dict__.get("_actions")
    if cache is None:
        space = K.space
        n = space.dim
        cache = {}
        zero = Matrix.zeros(n)
        for i in range(n):
            cache[(i, i)] = zero
        for p, (i, j) in enumerate(space.pairs):
            A = space.bivector_to_so(K.endo.col(p))
            cache[(i, j)] = A
            cache[(j, i)] = -A
        K.__dict__["_actions"] = cache
    return cache


def curvature_action(K: PSymTensor, u, v) -> Matrix:
    """``K(u, v)``: the skew endomorphism attached to ``endo(u ^ v)``."""
    space = K.space
    if isinstance(u, int) and isinstance(v, int):
        return _action_table(K)[(u, v)]
    return space.bivector_to_so(K.endo.apply(space.wedge(u, v)))


def first_bianchi_holds(K: PSymTensor) -> bool:
    """``K(u,v)w + K(v,w)u + K(w,u)v = 0`` on all basis triples."""
    n = K.space.dim
    A = _action_table(K)
    for i, j, k in itertools.combinations(range(n), 3):
        s = [A[(i, j)][r, k] + A[(j, k)][r, i] + A[(k, i)][r, j] for r in range(n)]
        if any(not x.is_zero() for x in s):
            return False
    return True


def holonomy_image(K: PSymTensor) -> list[Matrix]:
    """A basis of ``span{K(u, v)}`` as skew endomorphisms."""
    cols = [K.endo.col(p) for p in range(K.space.bivector_dim)]
    keep = independent_subset(cols)
    return [K.space.bivector_to_so(cols[p]) for p in keep]


# ---------------------------------------------------------------------------
# Ricci


def ricci_form(K: PSymTensor) -> Matrix:
    """``ric(u, v) = tr(a -> K(u, a) v)``."""
    n = K.space.dim
    A = _action_table(K)
    rows = [[sum((A[(i, k)][k, j] for k in range(n)), ZERO) for j in range(n)] for i in range(n)]
    return Matrix(rows)


def ricci_closed_form(space: PseudoSpace, u, v, w, t) -> Matrix:
    """Ricci form of the generator ``(u^v) v (w^t)`` from the closed formula."""
    ip = space.inner
    u, v, w, t = (space.vector(x) for x in (u, v, w, t))
    return space.vee_form(
        [
            (ip(u, w), t, v),
            (ip(v, t), u, w),
            (-ip(v, w), t, u),
            (-ip(u, t), v, w),
        ]
    )


def ricci_form_by_generators(K: PSymTensor) -> Matrix:
    """Ricci form assembled from the closed formula on each basis generator."""
    space = K.space
    C = K.contravariant
    out = Matrix.zeros(space.dim)
    for p, (i, j) in enumerate(space.pairs):
        for q, (k, l) in enumerate(space.pairs):
            if C[p, q].is_zero():
                continue
            out = out + ricci_closed_form(space, i, j, k, l) * C[p, q]
    return out


@dataclass(frozen=True)
class RicciType:
    """One of Flat, RicciFlat, Einstein, Isotropic, ComplexRicci, RealMixed, ComplexMixed."""

    name: str
    eigenvalue: Scalar | None = None  # Einstein constant
    real_part: Scalar | None = None  # ComplexRicci: z = re + i*im
    imag_part: Scalar | None = None
    imag_squared: Scalar | None = None

    def __str__(self):
        if self.name == "Einstein":
            return f"Einstein({self.eigenvalue})"
        if self.name == "ComplexRicci":
            im = self.imag_part if self.imag_part is not None else f"sqrt({self.imag_squared})"
            return f"ComplexRicci({self.real_part} ± i*({im}))"
        return self.name


@dataclass(frozen=True)
class RicciData:
    ric: Matrix
    ric_op: Matrix
    char: UniPoly
    min: UniPoly
    scalar_curv: Scalar
    type_tag: RicciType | None


def ricci(
    K: PSymTensor,
    classify: bool = True,
    nonzero: Iterable[ScalarLike] = (),
    seed: int = DEFAULT_SEED,
) -> RicciData:
    ric = ricci_form(K)
    op = K.space.gram_inverse * ric
    tag = classify_ricci(K, nonzero=nonzero, seed=seed) if classify else None
    return RicciData(ric, op, char_poly(op, "X"), min_poly(op, "X"), op.trace(), tag)


def _quadratic_data(q: UniPoly) -> tuple[Scalar, Scalar]:
    """``(re, disc)`` of a monic quadratic ``X^2 + pX + c``: roots ``re ± sqrt(disc)/2``."""
    p, c = q[1], q[0]
    return -p * HALF, p * p - c * 4


def _tag_from_minpoly(m: UniPoly, factors: list[Factor], point=None) -> RicciType:
    pieces = [f for f in factors if f.kind != "constant"]
    if any(f.kind == "unresolved" for f in pieces):
        raise UnresolvedSpectrum(f"unresolved spectrum: cannot split {m}")
    complex_q = []
    for f in pieces:
        if f.kind == "quadratic":
            re, disc = _quadratic_data(f.poly)
            d = disc.subs(point) if point else disc
            if not d.is_rational:
                raise UnresolvedSpectrum(f"cannot decide the sign of the discriminant {disc}")
            if d.to_fraction() < 0:
                complex_q.append(f)
    if not complex_q:
        return RicciType("RealMixed")
    if len(pieces) == 1 and pieces[0].multiplicity == 1:
        re, disc = _quadratic_data(pieces[0].poly)
        im_sq = -disc * Fraction(1, 4)
        return RicciType("ComplexRicci", real_part=re, imag_part=im_sq.sqrt(), imag_squared=im_sq)
    return RicciType("ComplexMixed")


def _classify_op(K: PSymTensor, op: Matrix, point=None) -> RicciType:
    n = op.rows
    if K.is_zero():
        return RicciType("Flat")
    if op.is_zero():
        return RicciType("RicciFlat")
    lam = op[0, 0]
    if op == Matrix.identity(n) * lam:
        return RicciType("Einstein", eigenvalue=lam)
    if (op * op).is_zero():
        return RicciType("Isotropic")
    m = min_poly(op, "X")
    factors = factor_parametric(m) if m.params else factor_over_rationals(m)
    return _tag_from_minpoly(m, factors, point)


def classify_ricci(
    K: PSymTensor,
    nonzero: Iterable[ScalarLike] = (),
    points: Sequence[Mapping[str, Fraction]] | None = None,
    seed: int = DEFAULT_SEED,
) -> RicciType:
    """Ricci type, symbolic in the parameters and confirmed at generic points.

    ``nonzero`` lists expressions excluded from genericity (e.g. ``b`` or
    ``a - b``); every parameter is also kept away from zero.
    """
    op = K.space.gram_inverse * ricci_form(K)
    params = K.params or op.params
    if not params:
        return _classify_op(K, op)
    guards = [as_scalar(g) for g in nonzero] + [Scalar.parameter(p) for p in params]
    if points is None:
        points = generic_points(params, 5, seed, nonzero=guards)
    sampled = {_classify_op(K.subs(pt), op.subs(pt), None).name for pt in points}
    try:
        symbolic = _classify_op(K, op, points[0])
    except UnresolvedSpectrum:
        symbolic = None
    if symbolic is not None and sampled == {symbolic.name}:
        return symbolic
    if len(sampled) == 1 and symbolic is None:
        return RicciType(sampled.pop())
    raise UnresolvedSpectrum(
        f"Ricci type is not constant on the sampled points: symbolic "
        f"{symbolic.name if symbolic else '?'}, sampled {sorted(sampled)}"
    )


def ricci_commutes(K: PSymTensor) -> bool:
    """``K(u,v) o Ric = Ric o K(u,v)`` on all basis pairs."""
    op = K.space.gram_inverse * ricci_form(K)
    A = _action_table(K)
    return all(A[p].commutator(op).is_zero() for p in itertools.combinations(range(K.space.dim), 2))


# ---------------------------------------------------------------------------
# semi-symmetry


@dataclass(frozen=True)
class SemiSymmetry:
    holds: bool
    witness: tuple[int, int, int, int] | None = None

    def __bool__(self):
        return self.holds


def semi_symmetric_oracle(K: PSymTensor) -> SemiSymmetry:
    """Check ``[K(u,v),K(a,b)] = K(K(u,v)a,b) + K(a,K(u,v)b)`` on all basis quadruples."""
    n = K.space.dim
    A = _action_table(K)

    def K_vec(w: Vector, j: int) -> Matrix:
        out = Matrix.zeros(n)
        for k in range(n):
            if not w[k].is_zero():
                out = out + A[(k, j)] * w[k]
        return out

    for u, v, a, b in itertools.product(range(n), repeat=4):
        S = A[(u, v)]
        lhs = S.commutator(A[(a, b)])
        rhs = K_vec(S.col(a), b) - K_vec(S.col(b), a)
        if lhs != rhs:
            return SemiSymmetry(False, (u, v, a, b))
    return SemiSymmetry(True)


def is_semi_symmetric(K: PSymTensor, method: str = "fast") -> SemiSymmetry:
    """Decide ``K . K = 0``.

    The fast route checks, for each basis bivector ``e``, that the derivation
    induced by ``K(e)`` on bivectors commutes with the curvature operator.  On
    failure the witness comes from the quadruple enumeration.
    """
    if method == "oracle":
        return semi_symmetric_oracle(K)
    if method != "fast":
        raise ValueError(f"unknown method {method!r}")
    space = K.space
    R = K.endo
    for p in range(space.bivector_dim):
        D = space.ad(space.bivector_to_so(R.col(p)))
        if not D.commutator(R).is_zero():
            return semi_symmetric_oracle(K)
    return SemiSymmetry(True)


# ---------------------------------------------------------------------------
# Ricci decomposition


@dataclass(frozen=True)
class RicciBlock:
    factor: UniPoly
    basis: tuple[Vector, ...]
    label: str  # "V0", "Vc" or "Vλ"
    eigenvalue: Scalar | None = None


@dataclass(frozen=True)
class RicciDecomposition:
    blocks: tuple[RicciBlock, ...]
    spans: bool
    orthogonal: bool
    invariant: bool
    cross_vanishing: bool
    dimensions_ok: bool
    signature: tuple[int, int]
    signature_flag: bool  # True when the signature is not of the form (2, n)

    @property
    def ok(self) -> bool:
        return self.spans and self.orthogonal and self.invariant and self.cross_vanishing and self.dimensions_ok


def ricci_decomposition(K: PSymTensor, check: bool = True) -> RicciDecomposition:
    """Split ``V`` into generalized eigenspaces of the Ricci operator and verify the splitting."""
    space = K.space
    n = space.dim
    op = space.gram_inverse * ricci_form(K)
    cp = char_poly(op, "X")
    factors = [f for f in (factor_parametric(cp) if cp.params else factor_over_rationals(cp)) if f.kind != "constant"]
    if any(f.kind == "unresolved" for f in factors):
        raise UnresolvedSpectrum(f"unresolved spectrum: cannot split {cp}")
    blocks = []
    for f in factors:
        basis = tuple(kernel_basis(f.poly(op) ** f.multiplicity))
        if f.kind == "linear":
            lam = -f.poly[0]
            label = "V0" if lam.is_zero() else "Vλ"
            blocks.append(RicciBlock(f.poly, basis, label, lam))
        else:
            blocks.append(RicciBlock(f.poly, basis, "Vc"))

    all_vecs = [v for b in blocks for v in b.basis]
    spans = len(all_vecs) == n and len(independent_subset(all_vecs)) == n
    orthogonal = all(
        space.inner(u, w).is_zero()
        for b1, b2 in itertools.combinations(blocks, 2)
        for u in b1.basis
        for w in b2.basis
    )
    hol = holonomy_image(K)
    invariant = all(span_contains(b.basis, A.apply(v)) for b in blocks for A in hol for v in b.basis)
    cross = all(
        curvature_action(K, u, w).is_zero()
        for b1, b2 in itertools.combinations(blocks, 2)
        for u in b1.basis
        for w in b2.basis
    )
    dims = all(
        (b.label != "Vλ" or len(b.basis) >= 2) and (b.label != "Vc" or len(b.basis) == 4) for b in blocks
    )
    sig = space.signature()
    dec = RicciDecomposition(tuple(blocks), spans, orthogonal, invariant, cross, dims, sig, 2 not in sig)
    if check and not dec.ok:
        failed = [
            name
            for name, ok in (
                ("blocks span V", spans),
                ("blocks pairwise orthogonal", orthogonal),
                ("blocks invariant under h(K)", invariant),
                ("K vanishes on Vi ^ Vj", cross),
                ("block dimensions", dims),
            )
            if not ok
        ]
        raise DecompositionError("checks failed: " + ", ".join(failed))
    return dec


# ---------------------------------------------------------------------------
# self-dual part


@dataclass(frozen=True)
class SelfDualData:
    commutes: bool
    basis: tuple[Vector, ...]
    restricted: Matrix | None
    char: UniPoly | None
    factors: tuple[Factor, ...]
    homothety: bool
    diagonalizable: bool | None

    @property
    def distinct_eigenvalues(self) -> list[Scalar]:
        return [-f.poly[0] for f in self.factors if f.kind == "linear"]


def selfdual_spectrum(K: PSymTensor, sign: int = 1) -> SelfDualData:
    """Restriction of the curvature operator to the ``sign`` eigenspace of the Hodge operator."""
    space = K.space
    if space.dim != 4:
        raise DimensionMismatch("the self-dual spectrum needs a 4-dimensional space")
    J = space.hodge
    R = K.endo
    commutes = (J * R - R * J).is_zero()
    basis = tuple(space.self_dual_basis(sign))
    if not commutes:
        return SelfDualData(False, basis, None, None, (), False, None)
    B = Matrix.from_columns(basis)
    cols = [solve_linear(B, R.apply(v))[0] for v in basis]
    C = Matrix.from_columns(cols)
    cp = char_poly(C, "X")
    facs = tuple(f for f in (factor_parametric(cp) if cp.params else factor_over_rationals(cp)) if f.kind != "constant")
    homothety = C == Matrix.identity(len(basis)) * C[0, 0]
    m = min_poly(C, "X")
    mf = [f for f in (factor_parametric(m) if m.params else factor_over_rationals(m)) if f.kind != "constant"]
    diag = all(f.kind == "linear" and f.multiplicity == 1 for f in mf)
    return SelfDualData(True, basis, C, cp, facs, homothety, diag)


# ---------------------------------------------------------------------------
# JSON


def _parse_pair(space: PseudoSpace, x, params=()):
    """A name pair ``["x", "z"]`` or a combination ``[[c, "x", "z"], ...]``."""
    if x and all(isinstance(t, (list, tuple)) and len(t) == 3 for t in x):
        return space.bivector([(parse_scalar(str(c), params), u, v) for c, u, v in x])
    if len(x) != 2:
        raise ValueError(f"a bivector factor is a pair of names or a list of [coeff, u, v], got {x!r}")
    return tuple(space.index(v) for v in x)


def tensor_from_json(obj: Mapping, base_dir: str = ".") -> PSymTensor:
    """``{"space": {...} or "file.json", "terms": [{"coeff": "a", "a": ["x","z"], "b": ["x","z"]}]}``."""
    sp = obj["space"]
    if isinstance(sp, str):
        with open(os.path.join(base_dir, sp)) as fh:
            sp = json.load(fh)
    space = PseudoSpace.from_json(sp)
    params = tuple(obj.get("params", ())) + space.params
    terms = []
    for t in obj.get("terms", ()):
        c = parse_scalar(str(t.get("coeff", "1")), params)
        terms.append((c, _parse_pair(space, t["a"], params), _parse_pair(space, t["b"], params)))
    return make_tensor(space, terms)


def load_tensor(path) -> PSymTensor:
    with open(path) as fh:
        obj = json.load(fh)
    return tensor_from_json(obj, os.path.dirname(os.path.abspath(path)))
