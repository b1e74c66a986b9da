"""Subalgebras of so(V), the induced action on P, and the spaces R(g) and g_sym."""

from __future__ import annotations

import itertools
import json
import os
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from typing import Callable, Iterable, Mapping, Sequence

from .curvature import (
    CurvatureTensor,
    PSymTensor,
    bianchi_map,
    curvature_action,
    make_tensor,
)
from .exact import (
    DEFAULT_SEED,
    ZERO,
    DenominatorVanishes,
    Matrix,
    Scalar,
    ScalarLike,
    Vector,
    as_scalar,
    generic_points,
    independent_subset,
    kernel_basis,
    parse_scalar,
    same_span,
    span_contains,
)
from .space import NotSkew, PseudoSpace

__all__ = [
    "LieSubalgebra",
    "CurvatureSpaceResult",
    "CatalogueCase",
    "CatalogueEntry",
    "CatalogueReport",
    "action_on_P",
    "action_on_P_termwise",
    "curvature_space",
    "symmetric_curvature_space",
    "lie_closure",
    "komrakov_catalogue",
    "catalogue_entry",
    "verify_catalogue_entry",
    "subalgebra_from_json",
    "load_subalgebra",
]


# ---------------------------------------------------------------------------
# subalgebras


def _span_basis(mats: Sequence[Matrix]) -> list[Matrix]:
    keep = independent_subset([m.flatten() for m in mats])
    return [mats[i] for i in keep]


def _in_span(basis: Sequence[Matrix], m: Matrix) -> bool:
    return span_contains([b.flatten() for b in basis], m.flatten())


@dataclass(frozen=True, eq=False)
class LieSubalgebra:
    """Span of skew endomorphisms; closed under brackets on construction.

    When the given generators do not close, the span is replaced by the
    generated subalgebra and ``extended`` is set.
    """

    space: PseudoSpace
    generators: tuple[Matrix, ...]
    name: str = ""
    constraints: tuple[Scalar, ...] = ()
    extended: bool = field(default=False, init=False)

    def __post_init__(self):
        gens = tuple(self.generators)
        for g in gens:
            if not self.space.is_skew(g):
                raise NotSkew(f"generator of {self.name or 'subalgebra'} is not skew")
        object.__setattr__(self, "generators", gens)
        object.__setattr__(self, "constraints", tuple(as_scalar(c) for c in self.constraints))
        basis = _span_basis(list(gens))
        closed = all(_in_span(basis, x.commutator(y)) for x, y in itertools.combinations(basis, 2))
        if not closed:
            basis = _close(basis)
            object.__setattr__(self, "extended", True)
        object.__setattr__(self, "_basis", tuple(basis))

    @property
    def basis(self) -> tuple[Matrix, ...]:
        return self._basis

    @property
    def dim(self) -> int:
        return len(self._basis)

    @cached_property
    def bivectors(self) -> tuple[Vector, ...]:
        return tuple(self.space.so_to_bivector(m) for m in self._basis)

    @property
    def params(self) -> tuple[str, ...]:
        seen: list[str] = list(self.space.params)
        for m in self._basis:
            seen += [p for p in m.params if p not in seen]
        return tuple(seen)

    def contains(self, A: Matrix) -> bool:
        return _in_span(self._basis, A)

    def subs(self, assignment: Mapping[str, ScalarLike]) -> "LieSubalgebra":
        return LieSubalgebra(
            self.space,
            tuple(m.subs(assignment) for m in self.generators),
            self.name,
            tuple(c.subs(assignment) for c in self.constraints),
        )

    def __repr__(self):
        return f"LieSubalgebra({self.name or '?'}, dim={self.dim})"


def _close(basis: list[Matrix]) -> list[Matrix]:
    basis = list(basis)
    grew = True
    while grew:
        grew = False
        for x, y in itertools.combinations(list(basis), 2):
            c = x.commutator(y)
            if not _in_span(basis, c):
                basis.append(c)
                grew = True
    return basis


def lie_closure(space: PseudoSpace, mats: Iterable[Matrix], name: str = "") -> LieSubalgebra:
    """The Lie subalgebra generated by ``mats``."""
    return LieSubalgebra(space, tuple(mats), name)


# ---------------------------------------------------------------------------
# action on P


def action_on_P(A: Matrix, T: PSymTensor) -> PSymTensor:
    """``A.T``: ``(A.T)(u^v) = [A, T(u^v)] - T(Au^v) - T(u^Av)``."""
    space = T.space
    if not space.is_skew(A):
        raise NotSkew("not skew")
    D = space.ad(A)
    return PSymTensor(space, space.bivector_gram * (D * T.endo - T.endo * D))


def action_on_P_termwise(A: Matrix, T: PSymTensor) -> PSymTensor:
    """The defining formula evaluated on every basis bivector (independent oracle)."""
    space = T.space
    if not space.is_skew(A):
        raise NotSkew("not skew")
    cols = []
    for i, j in space.pairs:
        bi, bj = space.basis_vector(i), space.basis_vector(j)
        val = (
            A.commutator(curvature_action(T, bi, bj))
            - curvature_action(T, A.apply(bi), bj)
            - curvature_action(T, bi, A.apply(bj))
        )
        cols.append(space.so_to_bivector(val))
    return PSymTensor(space, space.bivector_gram * Matrix.from_columns(cols))


# ---------------------------------------------------------------------------
# curvature spaces


def _sym_square_basis(g: LieSubalgebra) -> list[PSymTensor]:
    bv = g.bivectors
    return [make_tensor(g.space, [(1, bv[i], bv[j])]) for i in range(len(bv)) for j in range(i, len(bv))]


def _combine(space: PseudoSpace, tensors: Sequence[PSymTensor], coeffs: Sequence[Scalar]) -> PSymTensor:
    form = Matrix.zeros(space.bivector_dim)
    for c, t in zip(coeffs, tensors):
        if not c.is_zero():
            form = form + t.form * c
    return PSymTensor(space, form)


def _bianchi_matrix(tensors: Sequence[PSymTensor]) -> Matrix:
    return Matrix.from_columns([bianchi_map(t).coordinates() for t in tensors], rows=None)


def curvature_space(g: LieSubalgebra) -> list[CurvatureTensor]:
    """Basis of ``R(g) = ker B`` restricted to ``g v g``."""
    gens = _sym_square_basis(g)
    if not gens:
        return []
    M = _bianchi_matrix(gens)
    return [CurvatureTensor(g.space, _combine(g.space, gens, k).form) for k in kernel_basis(M)]


def symmetric_curvature_space(g: LieSubalgebra, rg: Sequence[PSymTensor] | None = None) -> list[CurvatureTensor]:
    """Basis of ``g_sym``: the elements of ``R(g)`` annihilated by every element of ``g``."""
    if rg is None:
        rg = curvature_space(g)
    if not rg:
        return []
    rows: list[list[Scalar]] = []
    for A in g.basis:
        cols = [action_on_P(A, t).coordinates() for t in rg]
        rows += [list(r) for r in zip(*cols)]
    M = Matrix(rows)
    return [CurvatureTensor(g.space, _combine(g.space, rg, k).form) for k in kernel_basis(M)]


def _coords(ts: Sequence[PSymTensor]) -> list[Vector]:
    return [t.coordinates() for t in ts]


# ---------------------------------------------------------------------------
# catalogue


@dataclass(frozen=True)
class CatalogueCase:
    """One parameter regime of an entry together with the stated spaces.

    ``point`` fixes parameters (``None`` for the generic regime). Claims are
    either generator lists (tensors) or bare dimensions.
    """

    label: str
    point: Mapping[str, Fraction] | None
    rg: tuple[PSymTensor, ...] | None = None
    gsym: tuple[PSymTensor, ...] | None = None
    rg_dim: int | None = None
    gsym_dim: int | None = None

    def claimed_rg_dim(self) -> int:
        return self.rg_dim if self.rg_dim is not None else len(self.rg)

    def claimed_gsym_dim(self) -> int:
        return self.gsym_dim if self.gsym_dim is not None else len(self.gsym)


@dataclass(frozen=True)
class CatalogueEntry:
    name: str
    metric: str
    algebra: LieSubalgebra
    cases: tuple[CatalogueCase, ...]
    ranges: Mapping[str, tuple[Fraction | None, Fraction | None]] = field(default_factory=dict)
    excluded: tuple[Mapping[str, Fraction], ...] = ()
    note: str = ""

    @property
    def params(self) -> tuple[str, ...]:
        return self.algebra.params


@dataclass
class CurvatureSpaceResult:
    name: str
    case: str
    point: dict
    rg_basis: list[CurvatureTensor]
    gsym_basis: list[CurvatureTensor]
    claimed_rg_dim: int
    claimed_gsym_dim: int
    rg_generators_ok: bool | None  # None when the claim is a bare dimension
    gsym_generators_ok: bool | None
    sampled_points: list[dict] = field(default_factory=list)
    rank_nullity: dict | None = None
    notes: list[str] = field(default_factory=list)

    @property
    def rg_dim(self) -> int:
        return len(self.rg_basis)

    @property
    def gsym_dim(self) -> int:
        return len(self.gsym_basis)

    @property
    def match(self) -> bool:
        return (
            self.rg_dim == self.claimed_rg_dim
            and self.gsym_dim == self.claimed_gsym_dim
            and self.rg_generators_ok is not False
            and self.gsym_generators_ok is not False
        )

    @property
    def consistent(self) -> bool:
        """``gsym`` inside ``R(g)``; for rank-nullity reports, ``dim ker + rank = dim(g v g)``."""
        ok = all(span_contains(_coords(self.rg_basis), t.coordinates()) for t in self.gsym_basis)
        if self.rank_nullity:
            rn = self.rank_nullity
            ok = ok and rn["kernel"] + rn["rank"] == rn["sym2_dim"]
        return ok


@dataclass
class CatalogueReport:
    entry: CatalogueEntry
    results: list[CurvatureSpaceResult]

    @property
    def match(self) -> bool:
        return all(r.match for r in self.results)


def _claim_ok(claimed: tuple[PSymTensor, ...] | None, computed: Sequence[PSymTensor]) -> bool | None:
    if claimed is None:
        return None
    c = _coords(claimed)
    return len(independent_subset(c)) == len(c) and same_span(c, _coords(computed))


def _dims(g: LieSubalgebra) -> tuple[int, int]:
    rg = curvature_space(g)
    return len(rg), len(symmetric_curvature_space(g, rg))


def _evaluate_case(entry: CatalogueEntry, case: CatalogueCase, samples: int, seed: int) -> CurvatureSpaceResult:
    g = entry.algebra
    point = dict(case.point or {})
    if point:
        g = g.subs(point)
    rg = curvature_space(g)
    gs = symmetric_curvature_space(g, rg)
    claims_rg = tuple(t.subs(point) for t in case.rg) if case.rg is not None else None
    claims_gs = tuple(t.subs(point) for t in case.gsym) if case.gsym is not None else None
    res = CurvatureSpaceResult(
        entry.name,
        case.label,
        {k: str(v) for k, v in point.items()},
        rg,
        gs,
        case.claimed_rg_dim(),
        case.claimed_gsym_dim(),
        _claim_ok(claims_rg, rg),
        _claim_ok(claims_gs, gs),
    )
    free = [p for p in g.params]
    if free:
        guards = [Scalar.parameter(p) - v for ex in entry.excluded for p, v in ex.items() if p in free]
        guards += list(g.constraints)
        pts = generic_points(free, samples, seed, nonzero=guards, ranges=entry.ranges)
        res.sampled_points = [{k: str(v) for k, v in pt.items()} for pt in pts]
        for pt in pts:
            d = _dims(g.subs(pt))
            if d != (res.rg_dim, res.gsym_dim):
                res.notes.append(f"rank ambiguity: dims {d} at {pt} vs generic {(res.rg_dim, res.gsym_dim)}")
    if entry.name == "6.1^1":
        sym2 = g.dim * (g.dim + 1) // 2
        rank = Matrix.rank(_bianchi_matrix(_sym_square_basis(g)))
        res.rank_nullity = {"sym2_dim": sym2, "rank": rank, "kernel": res.rg_dim, "claimed": case.claimed_rg_dim()}
        res.notes.append(
            f"dim R(g) computed {res.rg_dim} = {sym2} - rank(B) = {sym2} - {rank}; stated {case.claimed_rg_dim()}"
        )
    return res


def _bv(space: PseudoSpace, *terms) -> Vector:
    """``_bv(S, (1,"x","z"), (a,"y","t"))`` -> ``A_xz + a A_yt`` as bivector coordinates."""
    return space.bivector([(c, u, v) for c, u, v in terms])


def _A(space: PseudoSpace, uv: str) -> Vector:
    return space.wedge(uv[0], uv[1])


def _lin(*pairs) -> Vector:
    out = None
    for c, v in pairs:
        c = as_scalar(c)
        w = tuple(c * x for x in v)
        out = w if out is None else tuple(a + b for a, b in zip(out, w))
    return out


def _vv(space: PseudoSpace, *terms) -> PSymTensor:
    """``_vv(S, (c, alpha, beta), ...)`` -> ``sum c alpha v beta``."""
    return make_tensor(space, list(terms))


def _spaces() -> dict[str, PseudoSpace]:
    xyzt = "x y z t"
    return {
        "null": PseudoSpace.from_pairings(xyzt, {("x", "z"): 1, ("y", "t"): 1}, "<x,z>=<y,t>=1"),
        "xt": PseudoSpace.from_pairings(xyzt, {("x", "t"): 1, ("y", "z"): 1}, "<x,t>=<y,z>=1"),
        "diag": PseudoSpace.from_pairings(
            xyzt, {("x", "x"): 1, ("y", "y"): -1, ("z", "z"): 1, ("t", "t"): -1}, "<x,x>=-<y,y>=<z,z>=-<t,t>=1"
        ),
        "lor": PseudoSpace.from_pairings(xyzt, {("x", "z"): 1, ("y", "y"): -1, ("t", "t"): 1}, "<x,z>=-<y,y>=<t,t>=1"),
        "yy": PseudoSpace.from_pairings(xyzt, {("x", "z"): 1, ("y", "y"): 1, ("t", "t"): -1}, "<x,z>=<y,y>=-<t,t>=1"),
    }


def _circle(m: Scalar) -> tuple[Scalar, Scalar]:
    """Rational point ``(cos phi, sin phi)`` with ``m = tan(phi / 2)``."""
    d = m * m + 1
    return (1 - m * m) / d, (m * 2) / d


def _build_catalogue() -> list[CatalogueEntry]:
    sp = _spaces()
    a = Scalar.parameter("a")
    m = Scalar.parameter("m")
    c, s = _circle(m)
    F = Fraction
    out: list[CatalogueEntry] = []

    def so(S, *bvs):
        return tuple(S.bivector_to_so(b) for b in bvs)

    def add(name, key, gens, cases, ranges=None, excluded=(), note="", constraints=()):
        S = sp[key]
        alg = LieSubalgebra(S, so(S, *gens), name, constraints)
        out.append(CatalogueEntry(name, S.label, alg, tuple(cases), ranges or {}, tuple(excluded), note))

    # dim 1
    for name, key in (("1.1^1", "null"), ("1.1^2", "diag")):
        S = sp[key]
        A = lambda uv, S=S: _A(S, uv)  # noqa: E731
        p1 = _lin((1, A("xz")), (a, A("yt")))
        xz2 = _vv(S, (1, A("xz"), A("xz")))
        add(
            name,
            key,
            [p1],
            [
                CatalogueCase("a=0", {"a": F(0)}, rg=(xz2,), gsym=(xz2,)),
                CatalogueCase("a=1", {"a": F(1)}, rg=(), gsym=()),
                CatalogueCase("0<a<1", None, rg=(), gsym=()),
            ],
            ranges={"a": (F(0), F(1))},
            excluded=[{"a": F(0)}, {"a": F(1)}],
        )
    S = sp["null"]
    A = lambda uv: _A(S, uv)  # noqa: E731
    add("1.2^1", "null", [_lin((1, A("xz")), (1, A("xt")), (1, A("yt")))], [CatalogueCase("", {}, rg=(), gsym=())])
    add("1.2^2", "null", [_lin((1, A("xy")), (1, A("xt")), (1, A("yz")))], [CatalogueCase("", {}, rg=(), gsym=())])
    for name, key in (("1.3^1", "xt"), ("1.4^1", "lor")):
        S = sp[key]
        xy2 = _vv(S, (1, _A(S, "xy"), _A(S, "xy")))
        add(name, key, [_A(S, "xy")], [CatalogueCase("", {}, rg=(xy2,), gsym=(xy2,))])
    S = sp["xt"]
    A = lambda uv: _A(S, uv)  # noqa: E731
    add(
        "1.1^5",
        "xt",
        [_lin((c, A("xt")), (c, A("yz")), (s, A("yz")), (s, A("ty")))],
        [CatalogueCase("0<phi<pi/4", None, rg=(), gsym=())],
        ranges={"m": (F(0), F(2, 5))},
        note="phi = 2 atan(m); the endpoint phi = pi/4 has no rational point",
    )
    S = sp["null"]
    A = lambda uv: _A(S, uv)  # noqa: E731
    add(
        "1.1^6",
        "null",
        [_lin((c, A("xt")), (c, A("zy")), (s, A("xz")), (s, A("yt")))],
        [CatalogueCase("0<phi<pi/4", None, rg=(), gsym=())],
        ranges={"m": (F(0), F(2, 5))},
        note="phi = 2 atan(m)",
    )

    # dim 2
    for name, key in (("2.1^1", "null"), ("2.1^3", "diag")):
        S = sp[key]
        xz, yt = _A(S, "xz"), _A(S, "yt")
        claims = (_vv(S, (1, xz, xz)), _vv(S, (1, yt, yt)))
        add(name, key, [xz, yt], [CatalogueCase("", {}, rg=claims, gsym=claims)])
    S = sp["xt"]
    A = lambda uv: _A(S, uv)  # noqa: E731
    p1, p2 = _lin((1, A("xz")), (1, A("ty"))), _lin((1, A("xt")), (1, A("yz")))
    claims = (_vv(S, (1, p1, p1), (-1, p2, p2)), _vv(S, (1, p1, p2)))
    add("2.1^4", "xt", [p1, p2], [CatalogueCase("", {}, rg=claims, gsym=claims)])

    S = sp["null"]
    A = lambda uv: _A(S, uv)  # noqa: E731
    p1, p2 = _lin((1, A("xz")), (a, A("yt"))), A("xt")
    t11, t22, t12 = _vv(S, (1, p1, p1)), _vv(S, (1, p2, p2)), _vv(S, (1, p1, p2))
    add(
        "2.2^1",
        "null",
        [p1, p2],
        [
            CatalogueCase("a=0", {"a": F(0)}, rg=(t11, t22, t12), gsym=()),
            CatalogueCase("a=1", {"a": F(1)}, rg=(t22, t12), gsym=(t22, t12)),
            CatalogueCase("a=-1", {"a": F(-1)}, rg=(t22, t12), gsym=()),
            CatalogueCase("a!=0,1", None, rg=(t22, t12), gsym=()),
        ],
        ranges={"a": (F(-1), F(1))},
        excluded=[{"a": F(0)}, {"a": F(1)}],
    )
    p1 = _lin((c, A("xt")), (c, A("zy")), (s, A("xz")), (s, A("yt")))
    xy = A("xy")
    add(
        "2.2^3",
        "null",
        [p1, xy],
        [CatalogueCase("0<phi<pi/2", None, rg=(_vv(S, (1, xy, xy)), _vv(S, (1, xy, p1))), gsym=())],
        ranges={"m": (F(0), F(1))},
        note="phi = 2 atan(m)",
    )
    p1, p2 = _lin((1, A("xz")), (1, A("xy")), (1, A("ty"))), A("xt")
    add("2.3^1", "null", [p1, p2], [CatalogueCase("", {}, rg=(_vv(S, (1, p2, p2)),), gsym=())])
    S = sp["lor"]
    xz, yx = _A(S, "xz"), _A(S, "yx")
    add(
        "2.4^1",
        "lor",
        [xz, _A(S, "xy")],
        [CatalogueCase("", {}, rg=(_vv(S, (1, xz, xz)), _vv(S, (1, yx, yx)), _vv(S, (1, xz, yx))), gsym=())],
    )
    S = sp["null"]
    xt, xy = A("xt"), A("xy")
    claims = (_vv(S, (1, xy, xy)), _vv(S, (1, xt, xt)), _vv(S, (1, xy, xt)))
    add("2.5^1", "null", [xt, xy], [CatalogueCase("", {}, rg=claims, gsym=claims)])

    # dim 3
    xz, xt, yt = A("xz"), A("xt"), A("yt")
    add(
        "3.1^1",
        "null",
        [xz, xt, yt],
        [
            CatalogueCase(
                "",
                {},
                rg=(
                    _vv(S, (1, xz, xz)),
                    _vv(S, (1, xt, xt)),
                    _vv(S, (1, yt, yt)),
                    _vv(S, (1, xt, yt)),
                    _vv(S, (1, xz, xt)),
                ),
                gsym=(),
            )
        ],
        note="the fifth stated generator 'A_xz, A_xt' is read as A_xz v A_xt",
    )
    p1, p2, p3 = _lin((1, A("xz")), (a, A("yt"))), A("xt"), A("xy")
    V = lambda i, j: _vv(S, (1, (p1, p2, p3)[i], (p1, p2, p3)[j]))  # noqa: E731
    rest = (V(1, 1), V(2, 2), V(1, 2), V(0, 1), V(0, 2))
    add(
        "3.2^1",
        "null",
        [p1, p2, p3],
        [
            CatalogueCase("a=0", {"a": F(0)}, rg=(V(0, 0),) + rest, gsym=()),
            CatalogueCase("a=1", {"a": F(1)}, rg=rest, gsym=()),
            CatalogueCase("a>0,a!=1", None, rg=rest, gsym=(V(1, 1),)),
        ],
        ranges={"a": (F(0), None)},
        excluded=[{"a": F(0)}, {"a": F(1)}],
    )
    p1, p2, p3 = A("yt"), A("xt"), A("xy")
    V = lambda i, j: _vv(S, (1, (p1, p2, p3)[i], (p1, p2, p3)[j]))  # noqa: E731
    add(
        "3.3^1",
        "null",
        [p1, p2, p3],
        [CatalogueCase("", {}, rg=(V(0, 0), V(1, 1), V(2, 2), V(1, 2), V(0, 1), V(0, 2)), gsym=(V(1, 2),))],
    )
    p1, p2, p3 = _lin((1, A("xz")), (1, A("ty"))), A("xt"), A("yz")
    V = lambda i, j: _vv(S, (1, (p1, p2, p3)[i], (p1, p2, p3)[j]))  # noqa: E731
    add(
        "3.4^1",
        "null",
        [p1, p2, p3],
        [
            CatalogueCase(
                "",
                {},
                rg=(_vv(S, (1, p1, p1), (-2, p2, p3)), V(1, 1), V(2, 2), V(0, 1), V(0, 2)),
                gsym=(),
            )
        ],
    )
    S = sp["yy"]
    p1, p2, p3 = _A(S, "xz"), _A(S, "xy"), _A(S, "yz")
    V = lambda i, j: _vv(S, (1, (p1, p2, p3)[i], (p1, p2, p3)[j]))  # noqa: E731
    add(
        "3.5^1",
        "yy",
        [p1, p2, p3],
        [
            CatalogueCase(
                "",
                {},
                rg=(V(0, 0), V(1, 1), V(2, 2), V(0, 1), V(0, 2), V(1, 2)),
                gsym=(_vv(S, (1, p1, p1), (2, p2, p3)),),
            )
        ],
    )

    # dim 4
    S = sp["null"]
    xy, xz, xt, yt, yz = A("xy"), A("xz"), A("xt"), A("yt"), A("yz")
    add(
        "4.1^1",
        "null",
        [xy, xz, xt, yt],
        [
            CatalogueCase(
                "",
                {},
                rg=tuple(
                    _vv(S, (1, u, v))
                    for u, v in (
                        (xy, xy), (xz, xz), (xy, xz), (xt, xz), (xt, xt),
                        (yt, xt), (xy, xt), (yt, yt), (xy, yt),
                    )
                ),
                gsym=(),
            )
        ],
    )
    add(
        "4.2^1",
        "null",
        [xt, xz, yt, yz],
        [
            CatalogueCase(
                "",
                {},
                rg=(
                    _vv(S, (1, xz, xz)),
                    _vv(S, (1, xt, xt)),
                    _vv(S, (1, yz, yz)),
                    _vv(S, (1, yt, yt)),
                    _vv(S, (1, xz, xt)),
                    _vv(S, (1, xz, yz)),
                    _vv(S, (1, xz, yt), (1, xt, yz)),
                    _vv(S, (1, xt, yt)),
                    _vv(S, (1, yz, yt)),
                ),
                gsym=(_vv(S, (1, xz, xz), (1, yt, yt), (1, xz, yt), (1, xt, yz)),),
            )
        ],
    )
    p = (xy, xt, _lin((1, A("ty")), (1, xz)), yz)
    V = lambda i, j: _vv(S, (1, p[i], p[j]))  # noqa: E731
    add(
        "4.3^1",
        "null",
        list(p),
        [
            CatalogueCase(
                "",
                {},
                rg=(
                    V(0, 0), V(1, 1), _vv(S, (1, p[2], p[2]), (-2, p[1], p[3])), V(3, 3),
                    V(0, 1), V(0, 2), V(0, 3), V(1, 2), V(2, 3),
                ),
                gsym=(V(0, 0),),
            )
        ],
    )

    # dim 5, 6
    add("5.1^1", "null", [xy, xz, xt, yz, yt], [CatalogueCase("", {}, rg_dim=14, gsym=())])
    k6 = _vv(S, (1, xz, xz), (1, yt, yt), (1, xz, yt), (2, xt, yz), (2, xy, A("tz")))
    add(
        "6.1^1",
        "null",
        [xy, xz, xt, yz, yt, A("zt")],
        [CatalogueCase("", {}, rg_dim=19, gsym=(k6,))],
    )
    return out


_CATALOGUE: list[CatalogueEntry] | None = None


def komrakov_catalogue() -> list[CatalogueEntry]:
    """All 26 subalgebras of so(2,2) with their stated curvature spaces."""
    global _CATALOGUE
    if _CATALOGUE is None:
        _CATALOGUE = _build_catalogue()
    return list(_CATALOGUE)


def catalogue_entry(name: str) -> CatalogueEntry:
    key = name.replace("_", "^")
    for e in komrakov_catalogue():
        if e.name == key:
            return e
    raise KeyError(f"unknown catalogue entry {name!r}")


def verify_catalogue_entry(
    name: str,
    point: Mapping[str, ScalarLike] | None = None,
    samples: int = 3,
    seed: int = DEFAULT_SEED,
) -> CatalogueReport:
    """Recompute ``R(g)`` and ``g_sym`` for every stated case (or only the case covering ``point``)."""
    entry = catalogue_entry(name)
    cases = list(entry.cases)
    if point:
        pt = {k: as_scalar(v).to_fraction() for k, v in point.items()}
        unknown = set(pt) - set(entry.params)
        if unknown:
            raise KeyError(f"{entry.name} has no parameter(s) {', '.join(sorted(unknown))}")
        for k, (lo, hi) in entry.ranges.items():
            if k in pt and ((lo is not None and pt[k] < lo) or (hi is not None and pt[k] > hi)):
                raise ValueError(f"{k}={pt[k]} lies outside the range of {entry.name}")
        for c in entry.algebra.constraints:
            if c.subs(pt).is_zero():
                raise ValueError(f"point lies on the excluded locus {c} = 0")
        special = [c for c in cases if c.point and all(pt.get(k) == v for k, v in c.point.items())]
        chosen = special[0] if special else next(c for c in cases if c.point is None or not entry.params)
        cases = [CatalogueCase(chosen.label, pt, chosen.rg, chosen.gsym, chosen.rg_dim, chosen.gsym_dim)]
    return CatalogueReport(entry, [_evaluate_case(entry, c, samples, seed) for c in cases])


# ---------------------------------------------------------------------------
# JSON


def _generator_from_json(space: PseudoSpace, g, params) -> Matrix:
    if isinstance(g, dict) and "wedge" in g:
        u, v = g["wedge"]
        return space.wedge_endo(u, v) * parse_scalar(str(g.get("coeff", "1")), params)
    if isinstance(g, list) and len(g) == 2 and all(isinstance(x, (str, int)) for x in g):
        return space.wedge_endo(g[0], g[1])
    if isinstance(g, list) and g and all(isinstance(x, dict) for x in g):
        out = Matrix.zeros(space.dim)
        for term in g:
            out = out + _generator_from_json(space, term, params)
        return out
    if isinstance(g, list) and len(g) == space.dim:
        return Matrix([[parse_scalar(str(x), params) for x in row] for row in g])
    raise ValueError(f"cannot read generator {g!r}")


def subalgebra_from_json(obj: Mapping, base_dir: str = ".") -> LieSubalgebra:
    """``{"space": ..., "generators": [["x","z"], [[...matrix...]], [{"coeff":"a","wedge":["y","t"]}, ...]], "name": ..., "constraints": [...]}``."""
    sp = obj["space"]
    if isinstance(sp, str):
        with open(os.path.join(base_dir, sp)) as fh:
            sp = json.load(fh)
    space = PseudoSpace.from_json(sp)
    params = tuple(obj.get("params", ())) + space.params
    gens = tuple(_generator_from_json(space, g, params) for g in obj["generators"])
    cons = tuple(parse_scalar(str(c), params) for c in obj.get("constraints", ()))
    return LieSubalgebra(space, gens, obj.get("name", ""), cons)


def load_subalgebra(path) -> LieSubalgebra:
    with open(path) as fh:
        obj = json.load(fh)
    return subalgebra_from_json(obj, os.path.dirname(os.path.abspath(path)))
