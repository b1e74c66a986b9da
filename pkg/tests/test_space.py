import itertools
import json

import pytest
from hypothesis import given
from hypothesis import strategies as st

from semisym.exact import Matrix, Scalar, symbols
from semisym.space import DimensionMismatch, NotSkew, PseudoSpace, endo_kind, load_space

from fixtures import DIAG, NULL

x, y, z, t = (NULL.basis_vector(n) for n in "xyzt")
ZERO4 = (0, 0, 0, 0)


def test_wedge_endo_examples():
    A = NULL.wedge_endo("x", "z")
    assert A.apply(x) == x
    assert A.apply(z) == tuple(-c for c in z)
    assert A.apply(y) == ZERO4


def test_vee_endo_examples():
    assert NULL.vee_endo("x", "x").apply(z) == x
    assert NULL.vee_endo("x", "z").apply(x) == tuple(Scalar(1) / 2 * c for c in x)
    assert NULL.vee_endo("x", "z").apply(y) == ZERO4


def test_bivector_inner_examples():
    B = NULL.bivector
    assert NULL.bivector_inner(B(("x", "z")), B(("x", "z"))) == 1
    assert NULL.bivector_inner(B(("x", "y")), B(("z", "t"))) == -1
    assert NULL.bivector_inner(B(("x", "y")), B(("x", "y"))) == 0


def test_so_bivector_identification():
    assert NULL.so_to_bivector(NULL.wedge_endo("x", "z")) == NULL.bivector(("x", "z"))
    assert NULL.so_to_bivector(Matrix.zeros(4)) == (0,) * 6
    S = NULL.wedge_endo("x", "y") + NULL.wedge_endo("z", "t")
    assert NULL.so_to_bivector(S) == tuple(
        p + q for p, q in zip(NULL.bivector(("x", "y")), NULL.bivector(("z", "t")))
    )
    with pytest.raises(NotSkew):
        NULL.so_to_bivector(Matrix.identity(4))


def test_round_trip_on_so_basis():
    for A in NULL.so_basis:
        assert NULL.bivector_to_so(NULL.so_to_bivector(A)) == A


def test_endo_kinds():
    assert endo_kind(NULL, NULL.wedge_endo("x", "y")) == "skew"
    assert endo_kind(NULL, NULL.vee_endo("x", "t")) == "symmetric"
    assert endo_kind(NULL, Matrix([[1, 1, 0, 0], [0, 0, 0, 0], [0, 0, 0, 0], [0, 0, 0, 0]])) == "general"


def test_bivector_inner_matches_action():
    for i, j, k, l in itertools.product(range(4), repeat=4):
        if i == j or k == l:
            continue
        lhs = NULL.bivector_inner(NULL.wedge(i, j), NULL.wedge(k, l))
        rhs = NULL.inner(NULL.wedge_endo(i, j).apply(NULL.basis_vector(k)), NULL.basis_vector(l))
        assert lhs == rhs


def test_bivector_gram_nondegenerate():
    assert not NULL.bivector_gram.det().is_zero()
    assert not DIAG.bivector_gram.det().is_zero()


def test_signature():
    assert NULL.signature() == (2, 2)
    assert DIAG.signature() == (2, 2)
    p = symbols("p")[0]
    S = PseudoSpace(Matrix([[p * p + 1, 0], [0, -1]]), ("u", "v"), ("p",))
    assert S.signature() == (1, 1)


def test_dimension_mismatch():
    with pytest.raises(DimensionMismatch):
        NULL.inner((1, 0, 0), (1, 0, 0))


def test_degenerate_gram_rejected():
    with pytest.raises(ValueError):
        PseudoSpace(Matrix([[1, 0], [0, 0]]), ("u", "v"))


# -- Hodge ------------------------------------------------------------------------


def test_hodge_squares_to_identity():
    assert DIAG.hodge * DIAG.hodge == Matrix.identity(6)
    assert NULL.hodge_squared_is_identity()


def test_selfdual_dimensions():
    for S in (DIAG, NULL):
        plus, minus = S.self_dual_basis(1), S.self_dual_basis(-1)
        assert len(plus) == len(minus) == 3
        assert Matrix.from_columns(plus + minus).rank() == 6


def test_hodge_on_orthonormal_basis():
    # signs (+,+,-,-): reorder DIAG's basis so that e1, e2 are spacelike
    S = PseudoSpace(Matrix.diag([1, 1, -1, -1]), ("e1", "e2", "e3", "e4"))
    e12, e34 = S.bivector(("e1", "e2")), S.bivector(("e3", "e4"))
    assert S.hodge.apply(e12) == e34
    assert S.hodge.apply(e34) == e12
    plus = S.self_dual_basis(1)
    assert Matrix.from_columns(plus).hstack(Matrix.from_columns([tuple(p + q for p, q in zip(e12, e34))])).rank() == 3
    minus = S.self_dual_basis(-1)
    assert Matrix.from_columns(minus).hstack(Matrix.from_columns([tuple(p - q for p, q in zip(e12, e34))])).rank() == 3


def test_hodge_defining_relation():
    """Solve <J alpha, beta>_1 * omega = alpha ^ beta directly over the basis."""
    S = PseudoSpace(Matrix.diag([1, 1, -1, -1]), ("e1", "e2", "e3", "e4"))
    G1 = -S.bivector_gram  # induced metric <u^v, w^t>_1 = <u,w><v,t> - <u,t><v,w>
    Omega = S.wedge_pairing  # orthonormal basis: b1^..^b4 = omega
    J = S.hodge
    assert (J.T * G1) == Omega


def test_hodge_requires_dim_four():
    S = PseudoSpace(Matrix.diag([1, -1, 1]), ("u", "v", "w"))
    with pytest.raises(DimensionMismatch):
        S.hodge


def test_space_json_round_trip(tmp_path):
    p = tmp_path / "s.json"
    p.write_text(json.dumps(NULL.to_json()))
    assert load_space(p) == NULL


# -- properties --------------------------------------------------------------------

coef = st.integers(-4, 4)
vec4 = st.tuples(coef, coef, coef, coef)


@given(vec4, vec4, vec4)
def test_wedge_is_skew_and_vee_symmetric(u, v, w):
    A = NULL.wedge_endo(u, v)
    assert NULL.is_skew(A)
    assert NULL.is_self_adjoint(NULL.vee_endo(u, v))
    assert NULL.wedge_endo(v, u) == -A
    assert NULL.vee_endo(u, w) == NULL.vee_endo(w, u)


@given(vec4, vec4, vec4, vec4)
def test_bivector_inner_closed_form(u, v, w, s):
    lhs = NULL.bivector_inner(NULL.wedge(u, v), NULL.wedge(w, s))
    ip = NULL.inner
    assert lhs == ip(v, w) * ip(u, s) - ip(u, w) * ip(v, s)
