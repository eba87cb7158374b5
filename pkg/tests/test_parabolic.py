from __future__ import annotations

import pytest

from abelrad.cases import all_nodes, table1_row
from abelrad.chevalley import AlgebraElement, bracket, build_basis
from abelrad.parabolic import (
    NonAbelianRadical,
    is_abelian_radical,
    levi_label,
    module_decomposition,
    parabolic_from_node,
)
from abelrad.orbits import canonical_string
from abelrad.rootsys import build_root_system, pairing


def datum(k, n, node):
    return parabolic_from_node(build_root_system(k, n), node)


def test_dim_v_examples():
    assert datum("A", 3, 2).dim_V == 4
    assert datum("E", 7, 7).dim_V == 27
    assert datum("C", 2, 2).dim_V == 3


def test_abelian_examples():
    for n in range(2, 8):
        assert is_abelian_radical(datum("C", n, n))
        P = datum("C", n, 1)
        assert not is_abelian_radical(P)
        assert P.levels[P.witness] == 2
    assert is_abelian_radical(datum("E", 7, 7))
    assert not is_abelian_radical(datum("E", 7, 1))


@pytest.mark.parametrize("case", list(all_nodes(8)), ids=lambda c: f"{c[0]}{c[1]}-{c[2]}")
def test_abelian_classification_recomputed(case):
    P = datum(*case)
    row = table1_row(*case)
    assert is_abelian_radical(P) == (row is not None)
    if row is not None:
        assert P.dim_V == row.dim_V
        assert P.M_label == row.M
    for b, lvl in P.levels.items():
        assert lvl == pairing(P.lam, b)
    assert [b for b, l in P.levels.items() if l == 1] == list(P.V_weights)


def test_module_decomposition_single_summand():
    (shape, top, dim), = module_decomposition(datum("E", 6, 1))
    assert dim == 16 and top == build_root_system("E", 6).highest_root
    (_, _, dim), = module_decomposition(datum("B", 5, 1))
    assert dim == 9
    for case in all_nodes(6):
        assert len(module_decomposition(datum(*case))) == 1


def test_levi_labels():
    assert levi_label(build_root_system("A", 5), 2) == "GL(2)×GL(4)"
    assert levi_label(build_root_system("E", 6), 1) == "GL(1)×Spin(10)"
    assert levi_label(build_root_system("E", 6), 6) == "GL(1)×Spin(10)"
    assert levi_label(build_root_system("E", 7), 7) == "E6×GL(1)"
    assert levi_label(build_root_system("B", 2), 1) == "GL(1)×Spin(3)"
    assert levi_label(build_root_system("D", 4), 1) == "GL(1)×Spin(6)"


@pytest.mark.parametrize("case", [("A", 3, 2), ("C", 3, 3), ("B", 3, 1), ("D", 5, 5), ("E", 6, 1)])
def test_abelian_radical_brackets_vanish(case):
    P = datum(*case)
    B = build_basis(P.R)
    for a in P.V_weights:
        for b in P.V_weights:
            assert bracket(B, AlgebraElement.root_vector(P.R, a), AlgebraElement.root_vector(P.R, b)).is_zero()


def test_non_abelian_diagnostic():
    P = datum("C", 4, 1)
    with pytest.raises(NonAbelianRadical) as info:
        canonical_string(P)
    assert "level 2" in str(info.value)
    assert info.value.datum is P


def test_node_range():
    with pytest.raises(ValueError):
        datum("A", 3, 4)
