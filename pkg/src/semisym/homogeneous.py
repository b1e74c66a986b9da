"""Homogeneous pairs and metric Lie algebras: from structure constants to curvature verdicts.

Sign convention: curvature follows ``K(u, v) = L_[u,v] - [L_u, L_v]`` (Lie
group form).  The homogeneous-pair composite
``[nabla(a), nabla(b)] - nabla([a,b]_m) - rho([a,b]_g)`` is therefore negated.
"""

from __future__ import annotations

import itertools
import json
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Mapping, Sequence

from .curvature import (
    CurvatureTensor,
    NotBianchi,
    RicciData,
    RicciDecomposition,
    RicciType,
    SemiSymmetry,
    classify_ricci,
    curvature_action,
    is_semi_symmetric,
    ricci,
    ricci_decomposition,
)
from .exact import (
    DEFAULT_SEED,
    ZERO,
    Matrix,
    Scalar,
    ScalarLike,
    Vector,
    as_scalar,
    kernel_basis,
    parse_scalar,
    span_contains,
    symbols,
)
from .space import PseudoSpace

__all__ = [
    "CURVATURE_CONVENTION",
    "HomogeneousPair",
    "JacobiResult",
    "InvariantMetricFamily",
    "ConnectionData",
    "PairReport",
    "PipelineError",
    "jacobi_check",
    "invariant_metrics",
    "koszul_product",
    "connection",
    "curvature_of_pair",
    "curvature_via_koszul",
    "ricci_of_pair",
    "ricci_literal",
    "is_locally_symmetric",
    "differential_bianchi_holds",
    "splitting_laws",
    "verify_pair",
    "pair_from_json",
    "load_pair",
]

CURVATURE_CONVENTION = "K(u,v) = L_[u,v] - [L_u, L_v]"
HALF = Scalar(Fraction(1, 2))


class PipelineError(RuntimeError):
    """A pipeline stage failed; ``stage`` names it."""

    def __init__(self, stage: str, message: str):
        self.stage = stage
        super().__init__(f"{stage}: {message}")


# ---------------------------------------------------------------------------
# pairs


@dataclass(frozen=True, eq=False)
class HomogeneousPair:
    """Structure constants on ``e_1..e_r`` (isotropy) followed by ``u_1..u_n`` (complement).

    ``brackets[(i, j)]`` for ``i < j`` holds the coordinates of ``[b_i, b_j]``;
    missing entries are zero.
    """

    names: tuple[str, ...]
    isotropy_dim: int
    brackets: Mapping[tuple[int, int], Vector]
    params: tuple[str, ...] = ()
    constraints: tuple[Scalar, ...] = ()
    label: str = ""
    metric: Matrix | None = None

    def __post_init__(self):
        n = len(self.names)
        if len(set(self.names)) != n:
            raise ValueError("basis names must be distinct")
        if not 0 <= self.isotropy_dim <= n:
            raise ValueError("isotropy dimension out of range")
        table = {}
        for (i, j), v in self.brackets.items():
            if len(v) != n:
                raise ValueError(f"bracket [{self.names[i]},{self.names[j]}] has the wrong length")
            if i == j:
                if any(not x.is_zero() for x in v):
                    raise ValueError("[b, b] must vanish")
                continue
            v = tuple(as_scalar(x) for x in v)
            if i > j:
                i, j, v = j, i, tuple(-x for x in v)
            if (i, j) in table and table[(i, j)] != v:
                raise ValueError(f"conflicting brackets for [{self.names[i]},{self.names[j]}]")
            table[(i, j)] = v
        object.__setattr__(self, "brackets", table)
        object.__setattr__(self, "constraints", tuple(as_scalar(c) for c in self.constraints))
        if self.metric is not None and self.metric.shape != (self.dim, self.dim):
            raise ValueError("metric must be an n x n matrix on the complement")

    @classmethod
    def from_table(
        cls,
        names: str | Sequence[str],
        table: Mapping[tuple[str, str], Mapping[str, ScalarLike]],
        isotropy_dim: int = 0,
        **kw,
    ) -> "HomogeneousPair":
        """``from_table("x y", {("x", "y"): {"y": 1}})`` for ``[x, y] = y``."""
        if isinstance(names, str):
            names = names.split()
        names = tuple(names)
        idx = {n: i for i, n in enumerate(names)}
        br = {}
        for (a, b), out in table.items():
            v = [ZERO] * len(names)
            for k, c in out.items():
                v[idx[k]] = v[idx[k]] + as_scalar(c)
            br[(idx[a], idx[b])] = tuple(v)
        return cls(names, isotropy_dim, br, **kw)

    @property
    def total_dim(self) -> int:
        return len(self.names)

    @property
    def dim(self) -> int:
        """Dimension of the complement ``m``."""
        return len(self.names) - self.isotropy_dim

    @property
    def m_names(self) -> tuple[str, ...]:
        return self.names[self.isotropy_dim:]

    def basis(self, i: int) -> Vector:
        return tuple(Scalar(1) if k == i else ZERO for k in range(self.total_dim))

    def bracket_basis(self, i: int, j: int) -> Vector:
        if i == j:
            return (ZERO,) * self.total_dim
        if i < j:
            return self.brackets.get((i, j), (ZERO,) * self.total_dim)
        return tuple(-x for x in self.brackets.get((j, i), (ZERO,) * self.total_dim))

    def bracket(self, u: Sequence[Scalar], v: Sequence[Scalar]) -> Vector:
        out = [ZERO] * self.total_dim
        for i, a in enumerate(u):
            if a.is_zero():
                continue
            for j, b in enumerate(v):
                if b.is_zero() or i == j:
                    continue
                c = a * b
                for k, x in enumerate(self.bracket_basis(i, j)):
                    if not x.is_zero():
                        out[k] = out[k] + c * x
        return tuple(out)

    def m_part(self, v: Sequence[Scalar]) -> Vector:
        return tuple(v[self.isotropy_dim:])

    def g_part(self, v: Sequence[Scalar]) -> Vector:
        return tuple(v[: self.isotropy_dim])

    def lift_m(self, w: Sequence[Scalar]) -> Vector:
        return (ZERO,) * self.isotropy_dim + tuple(w)

    def rho(self, i: int) -> Matrix:
        """Isotropy representation of ``e_i`` on ``m``: column ``j`` is ``[e_i, u_j]_m``."""
        r = self.isotropy_dim
        cols = [self.m_part(self.bracket_basis(i, r + j)) for j in range(self.dim)]
        return Matrix.from_columns(cols, rows=self.dim) if cols else Matrix.zeros(0)

    def subs(self, assignment: Mapping[str, ScalarLike]) -> "HomogeneousPair":
        return HomogeneousPair(
            self.names,
            self.isotropy_dim,
            {k: tuple(x.subs(assignment) for x in v) for k, v in self.brackets.items()},
            tuple(p for p in self.params if p not in assignment),
            tuple(c.subs(assignment) for c in self.constraints),
            self.label,
            self.metric.subs(assignment) if self.metric is not None else None,
        )


@dataclass(frozen=True)
class JacobiResult:
    holds: bool
    witness: tuple[str, str, str] | None = None
    residual: Vector | None = None
    isotropy_closed: bool = True

    def __bool__(self):
        return self.holds and self.isotropy_closed


def jacobi_check(pair: HomogeneousPair) -> JacobiResult:
    """Cyclic sums ``[[a,b],c] + [[b,c],a] + [[c,a],b]`` on basis triples, plus ``[g, g] in g``."""
    N = pair.total_dim
    e = [pair.basis(i) for i in range(N)]
    for i, j, k in itertools.combinations(range(N), 3):
        s = [
            x + y + z
            for x, y, z in zip(
                pair.bracket(pair.bracket_basis(i, j), e[k]),
                pair.bracket(pair.bracket_basis(j, k), e[i]),
                pair.bracket(pair.bracket_basis(k, i), e[j]),
            )
        ]
        if any(not x.is_zero() for x in s):
            return JacobiResult(False, (pair.names[i], pair.names[j], pair.names[k]), tuple(s))
    r = pair.isotropy_dim
    closed = all(
        all(x.is_zero() for x in pair.m_part(pair.bracket_basis(i, j)))
        for i, j in itertools.combinations(range(r), 2)
    )
    return JacobiResult(True, None, None, closed)


# ---------------------------------------------------------------------------
# metrics


def _sym_unit(n: int, p: int, q: int) -> Matrix:
    rows = [[ZERO] * n for _ in range(n)]
    rows[p][q] = rows[q][p] = Scalar(1)
    return Matrix(rows)


@dataclass(frozen=True)
class InvariantMetricFamily:
    basis: tuple[Matrix, ...]
    parameters: tuple[str, ...]
    general: Matrix
    det: Scalar

    @property
    def dim(self) -> int:
        return len(self.basis)

    def contains(self, B: Matrix) -> bool:
        return span_contains([b.flatten() for b in self.basis], B.flatten())

    @property
    def degenerate(self) -> bool:
        """True when no member of the family is nondegenerate."""
        return self.det.is_zero()


def _fresh(prefix: str, k: int, taken: Sequence[str]) -> tuple[str, ...]:
    out, i = [], 1
    while len(out) < k:
        name = f"{prefix}{i}"
        if name not in taken:
            out.append(name)
        i += 1
    return tuple(out)


def invariant_metrics(pair: HomogeneousPair) -> InvariantMetricFamily:
    """Symmetric ``B`` on ``m`` with ``rho(e_i)^T B + B rho(e_i) = 0`` for every ``e_i``."""
    n = pair.dim
    units = [_sym_unit(n, p, q) for p in range(n) for q in range(p, n)]
    rhos = [pair.rho(i) for i in range(pair.isotropy_dim)]
    if rhos:
        cols = []
        for E in units:
            col = []
            for R in rhos:
                M = R.T * E + E * R
                col += [M[p, q] for p in range(n) for q in range(p, n)]
            cols.append(col)
        sol = kernel_basis(Matrix.from_columns(cols))
    else:
        sol = [tuple(Scalar(1) if k == i else ZERO for k in range(len(units))) for i in range(len(units))]
    basis = []
    for v in sol:
        B = Matrix.zeros(n)
        for c, E in zip(v, units):
            if not c.is_zero():
                B = B + E * c
        basis.append(B)
    names = _fresh("t", len(basis), pair.params + pair.names)
    gens = symbols(names) if names else ()
    general = Matrix.zeros(n)
    for t, B in zip(gens, basis):
        general = general + B * t
    return InvariantMetricFamily(tuple(basis), names, general, general.det() if n else Scalar(1))


# ---------------------------------------------------------------------------
# connection


@dataclass(frozen=True)
class ConnectionData:
    """``nabla[k]`` is the matrix of ``nabla(b_k)`` on ``m`` for every basis vector of the pair."""

    nabla: tuple[Matrix, ...]
    nu: Mapping[tuple[int, int], Vector]
    metric: Matrix
    torsion_free: bool
    skew: bool

    def on_m(self, pair: HomogeneousPair, w: Sequence[Scalar]) -> Matrix:
        out = Matrix.zeros(pair.dim)
        for k, c in enumerate(w):
            if not c.is_zero():
                out = out + self.nabla[pair.isotropy_dim + k] * c
        return out


def _check_metric(B: Matrix) -> Matrix:
    if not B.is_symmetric():
        raise ValueError("metric must be symmetric")
    if B.det().is_zero():
        raise ValueError("degenerate metric")
    return B


def connection(pair: HomogeneousPair, B: Matrix) -> ConnectionData:
    """``nabla(x) = rho(x)`` on the isotropy, ``nabla(y)z = [y,z]_m / 2 + nu(y,z)`` on ``m``."""
    B = _check_metric(B)
    n, r = pair.dim, pair.isotropy_dim
    Binv = B.inverse()
    u = [pair.lift_m(tuple(Scalar(1) if k == i else ZERO for k in range(n))) for i in range(n)]
    br_m = {(i, j): pair.m_part(pair.bracket(u[i], u[j])) for i in range(n) for j in range(n)}

    def Bf(x, y):
        return sum((x[i] * B[i, j] * y[j] for i in range(n) for j in range(n)), ZERO)

    nu = {}
    for a in range(n):
        for b in range(a, n):
            w = [HALF * (Bf(br_m[(c, a)], u[b][r:]) + Bf(br_m[(c, b)], u[a][r:])) for c in range(n)]
            nu[(a, b)] = nu[(b, a)] = Binv.apply(w)
    nabla = [pair.rho(i) for i in range(r)]
    for a in range(n):
        cols = [tuple(HALF * x + y for x, y in zip(br_m[(a, z)], nu[(a, z)])) for z in range(n)]
        nabla.append(Matrix.from_columns(cols, rows=n))
    torsion = all(
        tuple(x - y for x, y in zip(nabla[r + a].col(b), nabla[r + b].col(a))) == br_m[(a, b)]
        for a in range(n)
        for b in range(n)
    )
    skew = all((B * nabla[r + a]).is_antisymmetric() for a in range(n))
    return ConnectionData(tuple(nabla), nu, B, torsion, skew)


def koszul_product(pair: HomogeneousPair, B: Matrix) -> list[Matrix]:
    """``L_u`` from ``2<L_u v, w> = <[u,v],w> + <[w,u],v> + <[w,v],u>`` (metric Lie algebras only)."""
    if pair.isotropy_dim:
        raise ValueError("the Koszul product needs isotropy dimension 0")
    B = _check_metric(B)
    n = pair.dim
    Binv = B.inverse()
    e = [pair.basis(i) for i in range(n)]

    def ip(x, y):
        return sum((x[i] * B[i, j] * y[j] for i in range(n) for j in range(n)), ZERO)

    L = []
    for a in range(n):
        cols = []
        for v in range(n):
            rhs = [
                HALF * (ip(pair.bracket(e[a], e[v]), e[w]) + ip(pair.bracket(e[w], e[a]), e[v]) + ip(pair.bracket(e[w], e[v]), e[a]))
                for w in range(n)
            ]
            cols.append(Binv.apply(rhs))
        L.append(Matrix.from_columns(cols, rows=n))
    return L


# ---------------------------------------------------------------------------
# curvature


def _composite(pair: HomogeneousPair, conn: ConnectionData, a: int, b: int) -> Matrix:
    """``[nabla(u_a), nabla(u_b)] - nabla([u_a,u_b]_m) - rho([u_a,u_b]_g)``."""
    r = pair.isotropy_dim
    Na, Nb = conn.nabla[r + a], conn.nabla[r + b]
    br = pair.bracket_basis(r + a, r + b)
    out = Na.commutator(Nb) - conn.on_m(pair, pair.m_part(br))
    for i, c in enumerate(pair.g_part(br)):
        if not c.is_zero():
            out = out - conn.nabla[i] * c
    return out


def _space_of(pair: HomogeneousPair, B: Matrix) -> PseudoSpace:
    params = tuple(dict.fromkeys(pair.params + B.params))
    return PseudoSpace(B, pair.m_names, params, pair.label)


def curvature_of_pair(pair: HomogeneousPair, B: Matrix, conn: ConnectionData | None = None) -> CurvatureTensor:
    """Curvature packaged as ``F(a^b, c^d) = B(K(a,b)c, d)`` on ``(m, B)``."""
    conn = conn or connection(pair, B)
    space = _space_of(pair, B)
    n = pair.dim
    K = {}
    for a, b in itertools.combinations(range(n), 2):
        K[(a, b)] = -_composite(pair, conn, a, b)
    rows = []
    for a, b in space.pairs:
        BK = B * K[(a, b)]
        rows.append([BK[d, c] for c, d in space.pairs])
    form = Matrix(rows)
    if not form.is_symmetric():
        raise NotBianchi("curvature is not pair-symmetric")
    T = CurvatureTensor(space, form)
    for (a, b), M in K.items():
        if curvature_action(T, a, b) != M:
            raise NotBianchi("packaged curvature does not reproduce K(a, b)")
    return T


def curvature_via_koszul(pair: HomogeneousPair, B: Matrix) -> dict[tuple[int, int], Matrix]:
    """``K(u,v) = L_[u,v] - [L_u, L_v]`` on basis pairs (metric Lie algebras only)."""
    L = koszul_product(pair, B)
    n = pair.dim
    out = {}
    for a, b in itertools.combinations(range(n), 2):
        br = pair.bracket_basis(a, b)
        M = Matrix.zeros(n)
        for k, c in enumerate(br):
            if not c.is_zero():
                M = M + L[k] * c
        out[(a, b)] = M - L[a].commutator(L[b])
    return out


def ricci_of_pair(pair: HomogeneousPair, B: Matrix, K: CurvatureTensor | None = None, **kw) -> RicciData:
    K = K or curvature_of_pair(pair, B)
    return ricci(K, **kw)


def ricci_literal(pair: HomogeneousPair, B: Matrix, conn: ConnectionData | None = None) -> Matrix:
    """Index formula ``ric_ij = sum_r K_ri(u_r, u_j)``, read as the ``r``-th component of
    ``K(u_r, u_j) u_i`` with ``K`` the un-negated pair composite."""
    conn = conn or connection(pair, B)
    n = pair.dim

    def comp(a, b):
        if a == b:
            return Matrix.zeros(n)
        return _composite(pair, conn, a, b) if a < b else -_composite(pair, conn, b, a)

    return Matrix([[sum((comp(r, j)[r, i] for r in range(n)), ZERO) for j in range(n)] for i in range(n)])


def _nabla_K(pair: HomogeneousPair, conn: ConnectionData, K: CurvatureTensor, a: int, v: int, w: int) -> Matrix:
    r = pair.isotropy_dim
    N = conn.nabla[r + a]
    n = pair.dim

    def Kvec(x: Vector, j: int) -> Matrix:
        out = Matrix.zeros(n)
        for k, c in enumerate(x):
            if not c.is_zero() and k != j:
                out = out + curvature_action(K, k, j) * c
        return out

    return (
        N.commutator(curvature_action(K, v, w))
        - Kvec(N.col(v), w)
        + Kvec(N.col(w), v)
    )


def is_locally_symmetric(
    pair: HomogeneousPair, B: Matrix, K: CurvatureTensor | None = None, conn: ConnectionData | None = None
) -> tuple[bool, str | None]:
    """``nabla(a) . K = 0`` for every basis direction of ``m``; returns the first failing direction."""
    conn = conn or connection(pair, B)
    K = K or curvature_of_pair(pair, B, conn)
    n = pair.dim
    for a in range(n):
        for v, w in itertools.combinations(range(n), 2):
            if not _nabla_K(pair, conn, K, a, v, w).is_zero():
                return False, pair.m_names[a]
    return True, None


def differential_bianchi_holds(
    pair: HomogeneousPair, B: Matrix, K: CurvatureTensor | None = None, conn: ConnectionData | None = None
) -> bool:
    conn = conn or connection(pair, B)
    K = K or curvature_of_pair(pair, B, conn)
    for u, v, w in itertools.combinations(range(pair.dim), 3):
        s = _nabla_K(pair, conn, K, u, v, w) + _nabla_K(pair, conn, K, v, w, u) + _nabla_K(pair, conn, K, w, u, v)
        if not s.is_zero():
            return False
    return True


def splitting_laws(pair: HomogeneousPair, B: Matrix, decomposition: RicciDecomposition | None = None) -> dict[str, bool]:
    """Check the Levi-Civita product against the Ricci splitting of a metric Lie algebra.

    Keys name the inclusion, e.g. ``"g_j.g_i in g_i"``; blocks without the
    relevant labels make a law vacuous (``True``).
    """
    if pair.isotropy_dim:
        raise ValueError("splitting laws are stated for metric Lie algebras")
    K = curvature_of_pair(pair, B)
    dec = decomposition or ricci_decomposition(K)
    L = koszul_product(pair, B)
    zero = [b for b in dec.blocks if b.label == "V0"]
    g0 = [v for b in zero for v in b.basis]
    nonzero = [list(b.basis) for b in dec.blocks if b.label != "V0"]

    def prod(x, y):
        out = Matrix.zeros(pair.dim)
        for k, c in enumerate(x):
            if not c.is_zero():
                out = out + L[k] * c
        return out.apply(y)

    def inside(xs, ys, target):
        return all(span_contains(target, prod(x, y)) if target else all(c.is_zero() for c in prod(x, y)) for x in xs for y in ys)

    laws = {
        "g_j.g_i in g_i": all(inside(gj, gi, gi) for gi, gj in itertools.permutations(nonzero, 2)),
        "g_i.g_i in g_0+g_i": all(inside(gi, gi, g0 + gi) for gi in nonzero),
        "g_0.g_i in g_i": all(inside(g0, gi, gi) for gi in nonzero),
        "g_0.g_0 in g_0": inside(g0, g0, g0),
        "g_i.g_0 in g_0+g_i": all(inside(gi, g0, g0 + gi) for gi in nonzero),
    }
    return laws


# ---------------------------------------------------------------------------
# pipeline


@dataclass
class PairReport:
    pair: HomogeneousPair
    family: InvariantMetricFamily
    metric: Matrix
    point: dict
    connection: ConnectionData
    curvature: CurvatureTensor
    ricci: RicciData
    ricci_literal_agrees: bool
    semi_symmetric: SemiSymmetry
    locally_symmetric: bool
    locally_symmetric_witness: str | None
    ricci_type: RicciType | None
    decomposition: RicciDecomposition | None
    decomposition_error: str | None
    differential_bianchi: bool
    jacobi: JacobiResult
    koszul_agrees: bool | None
    convention: str = CURVATURE_CONVENTION
    notes: list[str] = field(default_factory=list)


def verify_pair(
    pair: HomogeneousPair,
    metric: Matrix | None = None,
    point: Mapping[str, ScalarLike] | None = None,
    seed: int = DEFAULT_SEED,
    nonzero: Sequence[ScalarLike] = (),
) -> PairReport:
    """Run the full pipeline; every failure is raised as :class:`PipelineError` naming its stage."""
    point = {k: as_scalar(v) for k, v in (point or {}).items()}
    if point:
        try:
            pair = pair.subs(point)
        except ZeroDivisionError as exc:
            raise PipelineError("parameters", str(exc)) from None
        for c in pair.constraints:
            if c.is_zero():
                raise PipelineError("parameters", "point lies on an excluded locus")
    jac = jacobi_check(pair)
    if not jac.holds:
        raise PipelineError("jacobi_check", f"Jacobi identity fails on {jac.witness}")
    if not jac.isotropy_closed:
        raise PipelineError("jacobi_check", "the isotropy subalgebra is not closed")
    try:
        family = invariant_metrics(pair)
    except Exception as exc:  # pragma: no cover - defensive
        raise PipelineError("invariant_metrics", str(exc)) from exc
    notes: list[str] = []
    if metric is None:
        metric = pair.metric if pair.metric is not None else family.general
    if point:
        metric = metric.subs(point)
    if not family.contains(metric):
        raise PipelineError("invariant_metrics", "the selected metric is not invariant")
    if family.degenerate:
        raise PipelineError("invariant_metrics", "every invariant symmetric form is degenerate")
    try:
        conn = connection(pair, metric)
    except ValueError as exc:
        raise PipelineError("connection", str(exc)) from None
    if not conn.torsion_free:
        raise PipelineError("connection", "torsion identity fails")
    if not conn.skew:
        notes.append("some nabla(y) is not B-skew")
    try:
        K = curvature_of_pair(pair, metric, conn)
    except NotBianchi as exc:
        raise PipelineError("curvature", str(exc)) from None
    koszul = None
    if pair.isotropy_dim == 0:
        kz = curvature_via_koszul(pair, metric)
        koszul = all(curvature_action(K, a, b) == M for (a, b), M in kz.items())
        if not koszul:
            raise PipelineError("curvature", "pair composite and Koszul curvature disagree")
    ric = ricci(K, classify=False)
    lit = ricci_literal(pair, metric, conn)
    agrees = lit == ric.ric
    if not agrees:
        notes.append("index-formula Ricci differs from the trace definition")
    semi = is_semi_symmetric(K)
    loc, wit = is_locally_symmetric(pair, metric, K, conn)
    dbi = differential_bianchi_holds(pair, metric, K, conn)
    if not dbi:
        raise PipelineError("differential_bianchi", "cyclic sum of nabla K does not vanish")
    try:
        tag = classify_ricci(K, nonzero=list(nonzero) + list(pair.constraints), seed=seed)
    except ValueError as exc:
        tag = None
        notes.append(f"classify_ricci: {exc}")
    dec, dec_err = None, None
    try:
        dec = ricci_decomposition(K)
    except ValueError as exc:
        dec_err = str(exc)
    ric = RicciData(ric.ric, ric.ric_op, ric.char, ric.min, ric.scalar_curv, tag)
    return PairReport(
        pair, family, metric, {k: str(v) for k, v in point.items()}, conn, K, ric, agrees, semi, loc, wit,
        tag, dec, dec_err, dbi, jac, koszul, notes=notes,
    )


# ---------------------------------------------------------------------------
# JSON


def pair_from_json(obj: Mapping) -> HomogeneousPair:
    """``{"isotropy_dim": r, "dim": n, "basis": [...], "brackets": [{"a","b","out": {name: scalar}}], ...}``.

    An optional ``"metric"`` (n x n scalar strings on the complement) selects a member.
    """
    r = int(obj.get("isotropy_dim", 0))
    names = tuple(obj["basis"])
    if "dim" in obj and int(obj["dim"]) + r != len(names):
        raise ValueError(f"basis has {len(names)} names but isotropy_dim + dim = {r + int(obj['dim'])}")
    params = tuple(obj.get("params", ()))
    idx = {n: i for i, n in enumerate(names)}
    br: dict[tuple[int, int], Vector] = {}
    for entry in obj.get("brackets", ()):
        a, b = idx[entry["a"]], idx[entry["b"]]
        v = [ZERO] * len(names)
        for k, c in entry["out"].items():
            v[idx[k]] = v[idx[k]] + parse_scalar(str(c), params)
        if a > b:
            a, b, v = b, a, [-x for x in v]
        if (a, b) in br:
            raise ValueError(f"bracket [{names[a]},{names[b]}] given twice")
        br[(a, b)] = tuple(v)
    cons = tuple(parse_scalar(str(c), params) for c in obj.get("constraints", ()))
    metric = None
    if "metric" in obj:
        metric = Matrix([[parse_scalar(str(x), params) for x in row] for row in obj["metric"]])
    return HomogeneousPair(names, r, br, params, cons, obj.get("label", ""), metric)


def load_pair(path) -> HomogeneousPair:
    with open(path) as fh:
        return pair_from_json(json.load(fh))
