from __future__ import annotations

import pytest
from hypothesis import given
from hypothesis import strategies as st

from abelrad.chevalley import (
    ORDERS,
    AlgebraElement,
    adapted_triple,
    bracket,
    build_basis,
    orbit_dimension_tangent,
    string_p,
)
from abelrad.orbits import canonical_string, representative
from abelrad.parabolic import parabolic_from_node
from abelrad.rootsys import build_root_system, coroot, coroot_epsilon, pairing
from abelrad.selftest import root_system_types


@pytest.mark.parametrize("order", ORDERS)
@pytest.mark.parametrize("kind,n", root_system_types())
def test_jacobi_exhaustive(kind, n, order):
    B = build_basis(build_root_system(kind, n), order)
    count, first = B.jacobi_violations()
    assert count == 0, first


@pytest.mark.parametrize("kind,n", [("A", 2), ("C", 3), ("E", 7)])
def test_flipped_sign_breaks_jacobi(kind, n):
    R = build_root_system(kind, n)
    B = build_basis(R)
    flip = (R.simple_root(0), R.simple_root(1)) if (R.simple_root(0), R.simple_root(1)) in B.N else next(iter(B.N))
    assert B.jacobi_violations(flip=flip)[0] > 0


def test_small_examples():
    A1 = build_basis(build_root_system("A", 1))
    assert A1.N == {}
    x, y = AlgebraElement.root_vector(A1.R, (1,)), AlgebraElement.root_vector(A1.R, (-1,))
    assert bracket(A1, x, y) == AlgebraElement.torus(coroot(A1.R, (1,)))
    A2 = build_basis(build_root_system("A", 2))
    assert abs(A2.n((1, 0), (0, 1))) == 1
    C2 = build_root_system("C", 2)
    B = build_basis(C2)
    # alpha_1 = e1 - e2 (short), alpha_2 = 2 e2 (long)
    assert abs(B.n((1, 0), (0, 1))) == 1
    assert abs(B.n((1, 0), (1, 1))) == 2 == string_p(C2, (1, 0), (1, 1)) + 1


@pytest.mark.parametrize("kind,n", root_system_types(7))
def test_antisymmetry_and_magnitudes(kind, n):
    R = build_root_system(kind, n)
    B = build_basis(R)
    for (a, b), v in B.N.items():
        assert B.N[(b, a)] == -v
        assert abs(v) == string_p(R, a, b) + 1


def test_c3_adapted_triple():
    C3 = build_root_system("C", 3)
    B = build_basis(C3)
    S = [(2, 2, 1), (0, 2, 1)]  # 2e1, 2e2
    t = adapted_triple(B, S)
    assert t.check(B)
    h_eps = [sum(c) for c in zip(*(coroot_epsilon(C3, g) for g in S))]
    # (2e_i)^vee = e_i, so h acts on the natural module with weights +-1, 0
    assert h_eps == [1, 1, 0]
    assert [pairing(t.h, g) for g in S] == [2, 2]


def test_adapted_triple_rejects_non_orthogonal():
    B = build_basis(build_root_system("A", 2))
    with pytest.raises(ValueError):
        adapted_triple(B, [(1, 0), (0, 1)])


def test_empty_triple_is_zero():
    B = build_basis(build_root_system("D", 5))
    t = adapted_triple(B, [])
    assert t.e.is_zero() and t.f.is_zero() and not any(t.h)


@pytest.mark.parametrize("n", range(2, 7))
def test_tangent_dimension_type_c(n):
    P = parabolic_from_node(build_root_system("C", n), n)
    B = build_basis(P.R)
    for i in range(n + 1):
        assert orbit_dimension_tangent(B, representative(P, i), P.lam) == i * (2 * n + 1 - i) // 2


def test_tangent_dimension_e6():
    P = parabolic_from_node(build_root_system("E", 6), 1)
    B = build_basis(P.R)
    assert orbit_dimension_tangent(B, representative(P, 1), P.lam) == 11
    assert orbit_dimension_tangent(B, AlgebraElement.zero(6), P.lam) == 0


@pytest.mark.parametrize("kind,n,node", [("C", 4, 4), ("E", 7, 7), ("D", 6, 1), ("A", 5, 3)])
def test_sign_independence(kind, n, node):
    P = parabolic_from_node(build_root_system(kind, n), node)
    gam = canonical_string(P)
    dims = {}
    for order in ORDERS:
        B = build_basis(P.R, order)
        dims[order] = [orbit_dimension_tangent(B, representative(P, i), P.lam) for i in range(len(gam) + 1)]
        for i in range(len(gam) + 1):
            assert adapted_triple(B, gam[:i]).check(B)
    assert dims["lex"] == dims["revlex"]
    assert any(build_basis(P.R, "lex").N[k] != v for k, v in build_basis(P.R, "revlex").N.items()) or n < 3


kinds = st.sampled_from([("A", 3), ("B", 3), ("C", 3), ("D", 4), ("E", 6)])


@given(kinds, st.data())
def test_bracket_properties(kn, data):
    R = build_root_system(*kn)
    B = build_basis(R)

    def element():
        roots = data.draw(st.dictionaries(st.sampled_from(R.roots), st.integers(-3, 3), max_size=4))
        cart = tuple(data.draw(st.lists(st.integers(-2, 2), min_size=R.rank, max_size=R.rank)))
        return AlgebraElement(roots, cart)

    x, y, z = element(), element(), element()
    assert bracket(B, x, x).is_zero()
    assert bracket(B, x, y) == bracket(B, y, x).scale(-1)
    assert bracket(B, x, y + z) == bracket(B, x, y) + bracket(B, x, z)
    jac = bracket(B, x, bracket(B, y, z)) + bracket(B, y, bracket(B, z, x)) + bracket(B, z, bracket(B, x, y))
    assert jac.is_zero()


@given(kinds, st.data())
def test_bracket_grading(kn, data):
    R = build_root_system(*kn)
    B = build_basis(R)
    a, b = data.draw(st.sampled_from(R.roots)), data.draw(st.sampled_from(R.roots))
    lam = tuple(data.draw(st.lists(st.integers(0, 1), min_size=R.rank, max_size=R.rank)))
    y = bracket(B, AlgebraElement.root_vector(R, a), AlgebraElement.root_vector(R, b))
    if y.roots:
        assert y.degree_support(lam) == {pairing(lam, a) + pairing(lam, b)}
    h = tuple(data.draw(st.lists(st.integers(-3, 3), min_size=R.rank, max_size=R.rank)))
    assert bracket(B, AlgebraElement.torus(h), AlgebraElement.root_vector(R, b)) == AlgebraElement.root_vector(
        R, b, pairing(h, b)
    )
