from __future__ import annotations

import pytest

from abelrad.cases import all_supported_cases
from abelrad.orbits import (
    TRIVIAL,
    Z2,
    canonical_string,
    component_group,
    expected_partition,
    format_partition,
    forced_connected,
    g_orbit_label,
    orbit_count,
    orbit_table,
    partition_from_weights,
    regularity_matches_w0,
)
from abelrad.parabolic import parabolic_from_node
from abelrad.rootsys import build_root_system, epsilon_coords, format_epsilon
from abelrad.weyl import double_coset_count

IDS = lambda c: f"{c[0]}{c[1]}-{c[2]}"  # noqa: E731


def datum(k, n, node):
    return parabolic_from_node(build_root_system(k, n), node)


def eps(P, roots):
    return [format_epsilon(epsilon_coords(P.R, g)) for g in roots]


def test_canonical_string_examples():
    for n in range(2, 7):
        P = datum("C", n, n)
        assert eps(P, canonical_string(P)) == [f"2e{i}" for i in range(1, n + 1)]
    P = datum("E", 7, 7)
    assert eps(P, canonical_string(P)) == ["-e7+e8", "e5+e6", "-e5+e6"]
    for n in range(2, 7):
        P = datum("B", n, 1)
        assert eps(P, canonical_string(P)) == ["e1+e2", "e1-e2"]
    P = datum("E", 6, 1)
    assert eps(P, canonical_string(P)) == [
        "1/2e1+1/2e2+1/2e3+1/2e4+1/2e5-1/2e6-1/2e7+1/2e8",
        "-1/2e1-1/2e2-1/2e3-1/2e4+1/2e5-1/2e6-1/2e7+1/2e8",
    ]


@pytest.mark.parametrize("case", all_supported_cases(), ids=IDS)
def test_orbit_table_invariants(case):
    P = datum(*case)
    table = orbit_table(P)
    r = len(canonical_string(P))
    assert len(table) == r + 1 == orbit_count(P) == double_coset_count(P.R, P.J, P.lam)
    dims = [o.dim for o in table]
    assert dims == sorted(set(dims)) and dims[0] == 0 and dims[-1] == P.dim_V
    for o in table:
        assert o.dim_tangent == o.dim_weyl
        assert table[o.dual_index].dual_index == o.index
    assert len({o.weighted_dynkin for o in table}) == len(table)
    assert len({o.g_orbit_label for o in table}) == len(table)
    assert regularity_matches_w0(P)


def test_dimension_oracles():
    for n in range(2, 7):
        assert [o.dim for o in orbit_table(datum("C", n, n))] == [i * (2 * n + 1 - i) // 2 for i in range(n + 1)]
    assert [o.dim for o in orbit_table(datum("E", 6, 1))] == [0, 11, 16]
    assert [o.dim for o in orbit_table(datum("E", 6, 6))] == [0, 11, 16]
    assert [o.dim for o in orbit_table(datum("E", 7, 7))] == [0, 17, 26, 27]


@pytest.mark.parametrize("N", range(2, 9))
def test_type_a_dims(N):
    for l in range(1, N):
        k = N - l
        dims = [o.dim for o in orbit_table(datum("A", N - 1, l))]
        assert dims == [i * (l + k - i) for i in range(min(l, k) + 1)]


@pytest.mark.parametrize("kind", ["B", "D"])
def test_spin_dims_are_dimv_minus_one_and_dimv(kind):
    for n in range(4, 8):
        P = datum(kind, n, 1)
        assert [o.dim for o in orbit_table(P)] == [0, P.dim_V - 1, P.dim_V]


def test_component_groups():
    assert component_group(datum("C", 3, 3), 2) == Z2
    assert component_group(datum("E", 7, 7), 2) == TRIVIAL
    assert component_group(datum("E", 7, 7), 3) == Z2
    for case in all_supported_cases(6):
        assert component_group(datum(*case), 0) == TRIVIAL


@pytest.mark.parametrize("case", all_supported_cases(), ids=IDS)
def test_forced_connected_agrees_with_fixtures(case):
    P = datum(*case)
    table = orbit_table(P)
    for i in forced_connected(P, [o.dim for o in table]):
        assert component_group(P, i) == TRIVIAL


@pytest.mark.parametrize("case", [c for c in all_supported_cases() if c[0] != "E"], ids=IDS)
def test_classical_partitions(case):
    P = datum(*case)
    for o in orbit_table(P):
        assert o.g_orbit_label == expected_partition(P, o.index)


def test_label_examples():
    P = datum("A", 7, 4)
    assert [g_orbit_label(P, i)[1] for i in range(5)] == ["(1^8)", "(2,1^6)", "(2^2,1^4)", "(2^3,1^2)", "(2^4)"]
    P = datum("B", 4, 1)
    assert g_orbit_label(P, 2)[1] == "(3,1^6)"
    assert [g_orbit_label(datum("E", 6, 1), i)[1] for i in range(3)] == ["1", "A1", "2A1"]
    assert [g_orbit_label(datum("E", 7, 7), i)[1] for i in range(4)] == ["1", "A1", "2A1", "(3A1)''"]


def test_partition_helpers():
    assert partition_from_weights([1, -1, 0, 0]) == (2, 1, 1)
    assert partition_from_weights([2, 0, -2, 0]) == (3, 1)
    assert format_partition((2, 2, 1, 1, 1)) == "(2^2,1^3)"
