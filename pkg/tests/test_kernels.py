from __future__ import annotations

import os
import subprocess
import sys
from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from abelrad import kernels
from abelrad.chevalley import build_basis
from abelrad.rootsys import build_root_system


def fraction_rank(rows):
    m = [[Fraction(x) for x in r] for r in rows]
    rank = 0
    ncols = len(m[0]) if m else 0
    for col in range(ncols):
        piv = next((i for i in range(rank, len(m)) if m[i][col] != 0), None)
        if piv is None:
            continue
        m[rank], m[piv] = m[piv], m[rank]
        for i in range(len(m)):
            if i != rank and m[i][col] != 0:
                f = m[i][col] / m[rank][col]
                m[i] = [a - f * b for a, b in zip(m[i], m[rank])]
        rank += 1
    return rank


matrices = st.integers(1, 8).flatmap(
    lambda c: st.lists(st.lists(st.integers(-6, 6), min_size=c, max_size=c), min_size=1, max_size=9)
)


@given(matrices)
def test_exact_rank_matches_fractions(rows):
    assert kernels.exact_rank(rows) == fraction_rank(rows)


@given(matrices, st.integers(1, 3))
def test_exact_rank_of_products(rows, k):
    # stacking scaled copies and sums never changes the rank
    extra = [[k * x for x in rows[0]]] + [[a + b for a, b in zip(rows[0], r)] for r in rows[1:]]
    assert kernels.exact_rank(rows + extra) == kernels.exact_rank(rows)


@pytest.mark.skipif(not kernels.HAVE_NUMBA, reason="numba missing")
@given(matrices)
def test_rank_mod_p_backends_agree(rows):
    mat = np.array(rows, dtype=np.int64)
    a = kernels.rank_mod_p(mat, backend="numba")
    b = kernels.rank_mod_p(mat, backend="numpy")
    assert a == b == kernels.exact_rank(rows)


def test_rank_mod_small_prime_can_drop():
    # det = 7, so the rank collapses mod 7 but not over Q
    rows = [[1, 2], [3, 13]]
    assert kernels.exact_rank(rows) == 2
    assert kernels.rank_mod_p(rows, p=7, backend="numpy") == 1
    if kernels.HAVE_NUMBA:
        assert kernels.rank_mod_p(rows, p=7, backend="numba") == 1


def test_empty():
    assert kernels.exact_rank([]) == 0
    assert kernels.rank_mod_p(np.zeros((0, 3), dtype=np.int64)) == 0


@pytest.mark.skipif(not kernels.HAVE_NUMBA, reason="numba missing")
@pytest.mark.parametrize("kind,n", [("A", 3), ("C", 3), ("B", 4), ("E", 6)])
def test_jacobi_backends_agree_on_mutants(kind, n):
    B = build_basis(build_root_system(kind, n))
    table = B.structure_table()
    assert kernels.jacobi_violations(*table, B.dim, backend="numba")[0] == 0
    assert kernels.jacobi_violations(*table, B.dim, backend="numpy")[0] == 0
    for flip in list(B.N)[:: max(1, len(B.N) // 5)]:
        bad = B.structure_table(flip)
        a = kernels.jacobi_violations(*bad, B.dim, backend="numba")
        b = kernels.jacobi_violations(*bad, B.dim, backend="numpy")
        assert a[0] == b[0] > 0


def test_set_backend_roundtrip():
    prev = kernels.set_backend("numpy")
    try:
        assert kernels.BACKEND == "numpy"
    finally:
        kernels.set_backend(prev)
    with pytest.raises(ValueError):
        kernels.set_backend("cuda")


def test_env_flag_selects_numpy():
    env = dict(os.environ, ABELRAD_NO_NUMBA="1")
    out = subprocess.run(
        [sys.executable, "-c", "from abelrad import kernels; print(kernels.BACKEND)"],
        env=env, capture_output=True, text=True, check=True,
    )
    assert out.stdout.strip() == "numpy"


@pytest.mark.parametrize("kind,n", [("E", 7), ("B", 8)])
def test_numpy_backend_end_to_end(kind, n):
    prev = kernels.set_backend("numpy")
    try:
        B = build_basis(build_root_system(kind, n), "revlex")
        assert B.jacobi_violations()[0] == 0
    finally:
        kernels.set_backend(prev)
