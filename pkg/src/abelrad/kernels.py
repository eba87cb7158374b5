"""Hot numeric loops, compiled with numba when available.

Set ``ABELRAD_NO_NUMBA=1`` to force the pure-numpy implementations.  Both
paths are always importable so they can be compared against each other
(see ``benchmarks/bench_kernels.py``).
"""

from __future__ import annotations

import os

import numpy as np

try:
    import numba
except ImportError:  # pragma: no cover
    numba = None

HAVE_NUMBA = numba is not None
_DISABLED = os.environ.get("ABELRAD_NO_NUMBA", "").strip().lower() not in ("", "0", "false", "no")

BACKEND = "numba" if HAVE_NUMBA and not _DISABLED else "numpy"


def set_backend(name: str) -> str:
    """Switch the active backend; returns the previous one."""
    global BACKEND
    if name not in ("numba", "numpy"):
        raise ValueError(name)
    if name == "numba" and not HAVE_NUMBA:
        raise RuntimeError("numba is not installed")
    prev, BACKEND = BACKEND, name
    return prev


def _njit(fn):
    if numba is None:
        return fn
    return numba.njit(cache=True)(fn)


# --------------------------------------------------------------------------
# Jacobi identity over a sparse structure-constant table.
#
# The bracket [e_a, e_b] = sum_k vals[k] e_{cols[k]} for k in
# ptr[a*dim + b] .. ptr[a*dim + b + 1].


def _jacobi_numba_impl(ptr, cols, vals, dim):
    acc = np.zeros(dim, dtype=np.int64)
    touched = np.zeros(dim, dtype=np.int64)
    bad = 0
    first = np.full(3, -1, dtype=np.int64)
    for a in range(dim):
        for b in range(a + 1, dim):
            for c in range(b + 1, dim):
                nt = 0
                # [a,[b,c]] + [b,[c,a]] + [c,[a,b]]
                for rot in range(3):
                    if rot == 0:
                        x, y, z = a, b, c
                    elif rot == 1:
                        x, y, z = b, c, a
                    else:
                        x, y, z = c, a, b
                    p0 = ptr[y * dim + z]
                    p1 = ptr[y * dim + z + 1]
                    for k in range(p0, p1):
                        mid = cols[k]
                        v1 = vals[k]
                        q0 = ptr[x * dim + mid]
                        q1 = ptr[x * dim + mid + 1]
                        for m in range(q0, q1):
                            t = cols[m]
                            if acc[t] == 0:
                                touched[nt] = t
                                nt += 1
                            acc[t] += v1 * vals[m]
                nonzero = False
                for s in range(nt):
                    t = touched[s]
                    if acc[t] != 0:
                        nonzero = True
                    acc[t] = 0
                if nonzero:
                    if bad == 0:
                        first[0] = a
                        first[1] = b
                        first[2] = c
                    bad += 1
    return bad, first


_jacobi_numba = _njit(_jacobi_numba_impl)


def _jacobi_numpy(ptr, cols, vals, dim):
    counts = np.diff(ptr)
    pair = np.repeat(np.arange(dim * dim, dtype=np.int64), counts)
    ea, eb = pair // dim, pair % dim
    ec, ev = cols.astype(np.int64), vals.astype(np.int64)
    if ea.size == 0:
        return 0, np.full(3, -1, dtype=np.int64)
    # entries grouped by their second index, for the outer bracket [x, e_k]
    order = np.argsort(eb, kind="stable")
    by_b_a, by_b_c, by_b_v = ea[order], ec[order], ev[order]
    start = np.searchsorted(eb[order], np.arange(dim))
    stop = np.searchsorted(eb[order], np.arange(dim), side="right")
    n_outer = (stop - start)[ec]
    inner_idx = np.repeat(np.arange(ea.size), n_outer)
    offs = np.arange(inner_idx.size) - np.repeat(np.cumsum(n_outer) - n_outer, n_outer)
    outer_idx = start[ec][inner_idx] + offs
    y, z = ea[inner_idx], eb[inner_idx]
    x = by_b_a[outer_idx]
    f = by_b_c[outer_idx]
    v = ev[inner_idx] * by_b_v[outer_idx]
    d = np.int64(dim)

    def key(p, q, s):
        return ((p * d + q) * d + s) * d + f

    # T(x,y,z) = [x,[y,z]] feeds J(x,y,z), J(z,x,y), J(y,z,x)
    keys = np.concatenate([key(x, y, z), key(z, x, y), key(y, z, x)])
    vv = np.concatenate([v, v, v])
    uk, inv = np.unique(keys, return_inverse=True)
    sums = np.bincount(inv.ravel(), weights=vv.astype(np.float64), minlength=uk.size)
    badkeys = uk[np.abs(sums) > 0.5]
    triples = np.unique(badkeys // d)
    ta, rest = triples // (d * d), triples % (d * d)
    tb, tc = rest // d, rest % d
    mask = (ta < tb) & (tb < tc)
    sel = triples[mask]
    first = np.full(3, -1, dtype=np.int64)
    if sel.size:
        t0 = sel[0]
        first[:] = (t0 // (d * d), (t0 // d) % d, t0 % d)
    return int(sel.size), first


def jacobi_violations(ptr, cols, vals, dim, backend: str | None = None):
    """Count triples ``a < b < c`` of basis elements violating Jacobi.

    Returns ``(count, first_bad_triple)``; the triple is ``(-1, -1, -1)``
    when there is none.
    """
    backend = backend or BACKEND
    ptr = np.ascontiguousarray(ptr, dtype=np.int64)
    cols = np.ascontiguousarray(cols, dtype=np.int64)
    vals = np.ascontiguousarray(vals, dtype=np.int64)
    if backend == "numba":
        bad, first = _jacobi_numba(ptr, cols, vals, dim)
    else:
        bad, first = _jacobi_numpy(ptr, cols, vals, dim)
    return int(bad), tuple(int(t) for t in first)


# --------------------------------------------------------------------------
# Rank modulo a prime: a fast lower bound for the exact rank over Q.


def _rank_mod_p_numba_impl(mat, p):
    m = mat.copy() % p
    rows, ncols = m.shape
    r = 0
    for col in range(ncols):
        piv = -1
        for i in range(r, rows):
            if m[i, col] != 0:
                piv = i
                break
        if piv < 0:
            continue
        if piv != r:
            for j in range(ncols):
                tmp = m[r, j]
                m[r, j] = m[piv, j]
                m[piv, j] = tmp
        # inverse by Fermat
        inv = 1
        base = m[r, col]
        e = p - 2
        while e > 0:
            if e & 1:
                inv = (inv * base) % p
            base = (base * base) % p
            e >>= 1
        for j in range(ncols):
            m[r, j] = (m[r, j] * inv) % p
        for i in range(rows):
            if i != r and m[i, col] != 0:
                f = m[i, col]
                for j in range(ncols):
                    m[i, j] = (m[i, j] - f * m[r, j]) % p
        r += 1
        if r == rows:
            break
    return r


_rank_mod_p_numba = _njit(_rank_mod_p_numba_impl)


def _rank_mod_p_numpy(mat, p):
    m = np.array(mat, dtype=np.int64) % p
    rows, ncols = m.shape
    r = 0
    for col in range(ncols):
        nz = np.nonzero(m[r:, col])[0]
        if nz.size == 0:
            continue
        piv = r + nz[0]
        if piv != r:
            m[[r, piv]] = m[[piv, r]]
        inv = pow(int(m[r, col]), p - 2, p)
        m[r] = (m[r] * inv) % p
        f = m[:, col].copy()
        f[r] = 0
        m = (m - np.outer(f, m[r])) % p
        r += 1
        if r == rows:
            break
    return r


DEFAULT_PRIME = 2_147_483_629


def rank_mod_p(mat, p: int = DEFAULT_PRIME, backend: str | None = None) -> int:
    """Rank of an integer matrix over ``F_p`` (``p < 2**31``)."""
    backend = backend or BACKEND
    mat = np.ascontiguousarray(mat, dtype=np.int64)
    if mat.size == 0:
        return 0
    if backend == "numba":
        return int(_rank_mod_p_numba(mat, np.int64(p)))
    return int(_rank_mod_p_numpy(mat, p))


def exact_rank(rows) -> int:
    """Rank over Q by fraction-free elimination on Python integers."""
    m = [list(map(int, r)) for r in rows]
    if not m:
        return 0
    ncols = len(m[0])
    rank = 0
    prev = 1
    for col in range(ncols):
        piv = next((i for i in range(rank, len(m)) if m[i][col] != 0), None)
        if piv is None:
            continue
        m[rank], m[piv] = m[piv], m[rank]
        pr = m[rank]
        for i in range(rank + 1, len(m)):
            row = m[i]
            # Bareiss step keeps entries integral
            row[:] = [(pr[col] * row[j] - row[col] * pr[j]) // prev for j in range(ncols)]
        prev = pr[col]
        rank += 1
        if rank == len(m):
            break
    return rank
