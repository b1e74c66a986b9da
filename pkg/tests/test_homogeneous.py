import pytest
from hypothesis import assume, given, settings
from hypothesis import strategies as st

from semisym.curvature import classify_ricci, curvature_action, make_tensor, ricci_decomposition
from semisym.exact import Matrix, symbols
from semisym.homogeneous import (
    CURVATURE_CONVENTION,
    HomogeneousPair,
    PipelineError,
    connection,
    curvature_of_pair,
    curvature_via_koszul,
    differential_bianchi_holds,
    invariant_metrics,
    is_locally_symmetric,
    jacobi_check,
    koszul_product,
    load_pair,
    ricci_literal,
    ricci_of_pair,
    splitting_laws,
    verify_pair,
)
from semisym.space import PseudoSpace

from fixtures import DATA

A_, B_, C_, D_ = symbols("A B C D")
RICCI_FLAT = load_pair(DATA / "ricci_flat_pair.json")
RICCI_FLAT_METRIC = RICCI_FLAT.metric
RICCI_FLAT_SPACE = PseudoSpace(RICCI_FLAT_METRIC, tuple("xyzt"), ("A", "B", "C", "D"))
TWO = HomogeneousPair.from_table("x y", {("x", "y"): {"y": 1}})
AFF2 = HomogeneousPair.from_table("x y z t", {("x", "y"): {"y": 1}, ("z", "t"): {"t": 1}})


# -- Jacobi -------------------------------------------------------------------------


def test_jacobi_abelian_and_ricci_flat():
    assert jacobi_check(load_pair(DATA / "abelian_pair.json"))
    assert jacobi_check(RICCI_FLAT)


def test_jacobi_violation_witness():
    res = jacobi_check(load_pair(DATA / "jacobi_violation_pair.json"))
    assert not res
    assert res.witness == ("x", "y", "z")
    assert any(not c.is_zero() for c in res.residual)


def test_isotropy_must_close():
    p = HomogeneousPair.from_table("e f u", {("e", "f"): {"u": 1}}, isotropy_dim=2)
    assert not jacobi_check(p).isotropy_closed


# -- invariant metrics ------------------------------------------------------------------


def test_trivial_isotropy_gives_all_symmetric_forms():
    assert invariant_metrics(HomogeneousPair.from_table("x y z t", {})).dim == 10


def test_rotation_isotropy():
    rot = HomogeneousPair.from_table("e u v", {("e", "u"): {"v": 1}, ("e", "v"): {"u": -1}}, isotropy_dim=1)
    fam = invariant_metrics(rot)
    assert fam.dim == 1 and fam.contains(Matrix.identity(2))


def test_boost_isotropy():
    hyp = HomogeneousPair.from_table("e u v", {("e", "u"): {"u": 1}, ("e", "v"): {"v": -1}}, isotropy_dim=1)
    fam = invariant_metrics(hyp)
    assert fam.dim == 1 and fam.contains(Matrix([[0, 1], [1, 0]]))
    assert not fam.contains(Matrix.identity(2))


def test_isotropy_1_3_1_family():
    p = load_pair(DATA / "isotropy_1_3_1_pair.json")
    fam = invariant_metrics(p)
    t1 = symbols(fam.parameters[0])[0]
    assert fam.det == t1 ** 4
    for B in ([[0, 0, 0, -1], [0, 0, 1, 0], [0, 1, 0, 0], [-1, 0, 0, 0]],
              [[0, 0, 0, -1], [0, 0, 1, 0], [0, 1, 2, 3], [-1, 0, 3, 5]]):
        assert fam.contains(Matrix(B))


@pytest.mark.xfail(strict=True, reason="the invariant family has one more free entry than listed")
def test_isotropy_1_3_1_family_dimension_listed():
    assert invariant_metrics(load_pair(DATA / "isotropy_1_3_1_pair.json")).dim == 3


# -- connection and Koszul --------------------------------------------------------------


def test_koszul_two_dim():
    Lx, Ly = koszul_product(TWO, Matrix.identity(2))
    assert Lx.is_zero()
    assert Ly.apply((1, 0)) == (0, -1)
    assert Ly.apply((0, 1)) == (1, 0)


def test_connection_matches_koszul_without_isotropy():
    B = Matrix.diag([1, 1, -1, -1])
    conn = connection(AFF2, B)
    assert list(conn.nabla) == koszul_product(AFF2, B)
    assert conn.torsion_free and conn.skew


def test_degenerate_metric_rejected():
    with pytest.raises(ValueError):
        connection(TWO, Matrix([[1, 0], [0, 0]]))


# -- curvature ----------------------------------------------------------------------------


def test_convention_string():
    assert CURVATURE_CONVENTION == "K(u,v) = L_[u,v] - [L_u, L_v]"


def test_two_dim_curvature_and_ricci():
    K = curvature_of_pair(TWO, Matrix.identity(2))
    assert curvature_action(K, (1, 0), (0, 1)) == K.space.wedge_endo(0, 1)
    assert ricci_of_pair(TWO, Matrix.identity(2)).ric == -Matrix.identity(2)


def test_ricci_flat_curvature_computed():
    K = curvature_of_pair(RICCI_FLAT, RICCI_FLAT_METRIC)
    assert K == make_tensor(RICCI_FLAT_SPACE, [(-4 * A_ * C_, ("x", "t"), ("x", "t"))])


@pytest.mark.xfail(strict=True, reason="computed curvature has the opposite sign; see notes")
def test_ricci_flat_curvature_listed():
    K = curvature_of_pair(RICCI_FLAT, RICCI_FLAT_METRIC)
    assert K == make_tensor(RICCI_FLAT_SPACE, [(4 * A_ * C_, ("x", "t"), ("x", "t"))])


def test_ricci_flat_curvature_koszul_route():
    K = curvature_of_pair(RICCI_FLAT, RICCI_FLAT_METRIC)
    for (i, j), M in curvature_via_koszul(RICCI_FLAT, RICCI_FLAT_METRIC).items():
        assert curvature_action(K, i, j) == M


def test_ricci_flat_ricci_flat_semi_symmetric_not_symmetric():
    K = curvature_of_pair(RICCI_FLAT, RICCI_FLAT_METRIC)
    assert ricci_of_pair(RICCI_FLAT, RICCI_FLAT_METRIC, K).ric.is_zero()
    assert ricci_literal(RICCI_FLAT, RICCI_FLAT_METRIC).is_zero()
    assert classify_ricci(K, nonzero=[B_]).name == "RicciFlat"
    assert is_locally_symmetric(RICCI_FLAT, RICCI_FLAT_METRIC, K) == (False, "y")
    assert differential_bianchi_holds(RICCI_FLAT, RICCI_FLAT_METRIC, K)


def test_constant_curvature_group():
    rep = verify_pair(load_pair(DATA / "constant_curvature_group.json"))
    assert rep.ricci_type.name == "Einstein" and rep.ricci_type.eigenvalue == -3
    assert rep.semi_symmetric and rep.locally_symmetric
    assert rep.koszul_agrees and rep.ricci_literal_agrees


def test_splitting_laws_aff_sum():
    B = Matrix.diag([1, 1, -1, -1])
    dec = ricci_decomposition(curvature_of_pair(AFF2, B))
    assert len(dec.blocks) == 2
    laws = splitting_laws(AFF2, B, dec)
    assert len(laws) == 5 and all(laws.values())


# -- pipeline --------------------------------------------------------------------------------


def test_verify_ricci_flat_at_point():
    rep = verify_pair(RICCI_FLAT, point={"A": 1, "B": 1, "C": 1, "D": 1})
    assert rep.ricci_type.name == "RicciFlat"
    assert rep.semi_symmetric and not rep.locally_symmetric
    assert rep.locally_symmetric_witness == "y"


def test_verify_pair_stages():
    with pytest.raises(PipelineError) as exc:
        verify_pair(load_pair(DATA / "jacobi_violation_pair.json"))
    assert exc.value.stage == "jacobi_check"
    with pytest.raises(PipelineError) as exc:
        verify_pair(RICCI_FLAT, point={"A": 1, "B": 0, "C": 1, "D": 1})
    assert exc.value.stage == "parameters"
    with pytest.raises(PipelineError) as exc:
        verify_pair(TWO, metric=Matrix([[1, 0], [0, 0]]))
    assert exc.value.stage == "connection"
    rot = HomogeneousPair.from_table("e u v", {("e", "u"): {"v": 1}, ("e", "v"): {"u": -1}}, isotropy_dim=1)
    with pytest.raises(PipelineError) as exc:
        verify_pair(rot, metric=Matrix.diag([1, 2]))
    assert exc.value.stage == "invariant_metrics"


def test_verify_flat_examples():
    for name in ("abelian_pair", "isotropy_1_3_1_pair"):
        rep = verify_pair(load_pair(DATA / f"{name}.json"))
        assert rep.curvature.is_zero() and rep.ricci_type.name == "Flat"


# -- properties -----------------------------------------------------------------------------------

small = st.integers(-2, 2)


@st.composite
def semidirect_pairs(draw):
    """``[x, v] = M v`` on ``R x R^3``: Jacobi holds for every ``M``."""
    M = draw(st.lists(st.lists(small, min_size=3, max_size=3), min_size=3, max_size=3))
    names = "x u v w".split()
    table = {("x", names[j + 1]): {names[i + 1]: M[i][j] for i in range(3)} for j in range(3)}
    rows = draw(st.lists(st.lists(small, min_size=4, max_size=4), min_size=4, max_size=4))
    G = Matrix([[rows[i][j] + rows[j][i] for j in range(4)] for i in range(4)])
    return HomogeneousPair.from_table(names, table), G


@settings(max_examples=25)
@given(semidirect_pairs())
def test_random_metric_lie_algebras(data):
    pair, G = data
    assume(not G.det().is_zero())
    assert jacobi_check(pair)
    conn = connection(pair, G)
    assert conn.torsion_free and conn.skew
    K = curvature_of_pair(pair, G, conn)
    for (i, j), M in curvature_via_koszul(pair, G).items():
        assert curvature_action(K, i, j) == M
    assert differential_bianchi_holds(pair, G, K, conn)
    assert ricci_literal(pair, G, conn) == ricci_of_pair(pair, G, K, classify=False).ric
