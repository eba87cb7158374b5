"""M-orbits on an abelian nilradical: canonical string, dimensions, labels."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Dict, List, Optional, Sequence, Tuple

from .chevalley import AlgebraElement, ChevalleyBasis, build_basis, orbit_dimension_tangent, strongly_orthogonal
from .parabolic import NonAbelianRadical, ParabolicDatum, is_abelian_radical
from .rootsys import Coweight, Root, coroot, coroot_epsilon, height
from .weyl import WeylWord, dominant_representative, double_coset_count, minimal_double_coset_reps, w0_negates

TRIVIAL = "1"
Z2 = "Z/2"


class ConsistencyError(RuntimeError):
    """Two independent computations of the same quantity disagree."""


def family(P: ParabolicDatum) -> str:
    """Which row of the abelian classification a (type, node) belongs to."""
    k, n, node = P.R.kind, P.R.rank, P.node
    if k == "A":
        return "A"
    if k == "C" and node == n:
        return "C"
    if k == "B" and node == 1:
        return "spin_odd"
    if k == "D" and node == 1:
        return "spin_even"
    if k == "D" and node in (n - 1, n):
        return "D_wedge"
    if k == "E" and n == 6 and node in (1, 6):
        return "E6"
    if k == "E" and n == 7 and node == 7:
        return "E7"
    return "non_abelian"


def _require_abelian(P: ParabolicDatum) -> None:
    if not is_abelian_radical(P):
        raise NonAbelianRadical(P)


def _dominates(a: Sequence[int], b: Sequence[int]) -> bool:
    return all(x >= y for x, y in zip(a, b))


@lru_cache(maxsize=None)
def canonical_string(P: ParabolicDatum) -> Tuple[Root, ...]:
    """Upper canonical string: greedy highest level-1 roots, pairwise orthogonal."""
    _require_abelian(P)
    R = P.R
    chosen: List[Root] = []
    while True:
        cand = [b for b in P.V_weights if all(R.inner(b, g) == 0 for g in chosen)]
        if not cand:
            break
        top = max(cand, key=lambda b: (height(b), b))
        if not all(_dominates(top, c) for c in cand):
            raise ConsistencyError(f"no unique highest root among {len(cand)} candidates")
        chosen.append(top)
    for i, a in enumerate(chosen):
        for b in chosen[i + 1:]:
            if not strongly_orthogonal(R, a, b):
                raise ConsistencyError(f"{a}, {b} not strongly orthogonal")
    return tuple(chosen)


def representative(P: ParabolicDatum, i: int) -> AlgebraElement:
    gam = canonical_string(P)
    return AlgebraElement({g: 1 for g in gam[:i]}, (0,) * P.R.rank)


def h_element(P: ParabolicDatum, roots: Sequence[Root]) -> Coweight:
    out = (0,) * P.R.rank
    for g in roots:
        out = tuple(a + b for a, b in zip(out, coroot(P.R, g)))
    return out


# --------------------------------------------------------------------------
# component groups (fixture data) and connectedness corroboration

def component_group(P: ParabolicDatum, i: int) -> str:
    _require_abelian(P)
    r = len(canonical_string(P))
    if not 0 <= i <= r:
        raise ValueError(f"orbit index must be in 0..{r}")
    fam = family(P)
    if i == 0:
        return TRIVIAL
    if fam == "C":
        return Z2
    if fam in ("spin_odd", "spin_even"):
        return Z2 if i == 2 else TRIVIAL
    if fam == "E7":
        return Z2 if i == 3 else TRIVIAL
    return TRIVIAL


def forced_connected(P: ParabolicDatum, dims: Sequence[int]) -> Dict[int, str]:
    """Orbits whose isotropy must be connected by the two general criteria.

    * ``M = H x GL(1)`` acting on an irreducible H-module: the highest-weight
      orbit ``O_1`` has connected isotropy.
    * Complement of the open orbit of codimension >= 2: the open orbit is
      simply connected.
    """
    out: Dict[int, str] = {}
    r = len(dims) - 1
    if family(P) in ("spin_odd", "spin_even", "E6", "E7") and r >= 1:
        out[1] = "highest-weight vector for H x GL(1)"
    if r >= 1 and dims[r] - dims[r - 1] >= 2:
        out[r] = "open orbit with boundary of codimension >= 2"
    return out


# --------------------------------------------------------------------------
# nilpotent G-orbit labels

CARTER_LABELS = {
    "E6": {
        (0, 0, 0, 0, 0, 0): "1",
        (0, 1, 0, 0, 0, 0): "A1",
        (1, 0, 0, 0, 0, 1): "2A1",
    },
    "E7": {
        (0, 0, 0, 0, 0, 0, 0): "1",
        (1, 0, 0, 0, 0, 0, 0): "A1",
        (0, 0, 0, 0, 0, 1, 0): "2A1",
        (0, 0, 0, 0, 0, 0, 2): "(3A1)''",
        (0, 0, 1, 0, 0, 0, 0): "(3A1)'",
    },
}


def natural_weights(P: ParabolicDatum, h_eps: Sequence[Fraction]) -> List[Fraction]:
    """Eigenvalues of a torus element on the natural representation."""
    k = P.R.kind
    if k == "A":
        return list(h_eps)
    vals = [x for x in h_eps] + [-x for x in h_eps]
    if k == "B":
        vals.append(Fraction(0))
    return vals


def partition_from_weights(weights: Sequence[Fraction]) -> Tuple[int, ...]:
    """Jordan type of ``e`` from the ``h``-eigenvalues of an sl2-module."""
    pool: Dict[Fraction, int] = {}
    for w in weights:
        pool[w] = pool.get(w, 0) + 1
    parts = []
    while pool:
        top = max(pool)
        m = top
        string = []
        while m >= -top:
            if pool.get(m, 0) <= 0:
                raise ConsistencyError(f"weights {sorted(weights)} are not an sl2-module")
            string.append(m)
            m -= 2
        for m in string:
            pool[m] -= 1
            if not pool[m]:
                del pool[m]
        parts.append(int(top) + 1)
    return tuple(sorted(parts, reverse=True))


def format_partition(parts: Sequence[int]) -> str:
    out = []
    for p in sorted(set(parts), reverse=True):
        k = list(parts).count(p)
        out.append(f"{p}^{k}" if k > 1 else f"{p}")
    return "(" + ",".join(out) + ")"


def g_orbit_label(P: ParabolicDatum, i: int) -> Tuple[Tuple[int, ...], Optional[str]]:
    """Weighted Dynkin diagram of ``h_i`` and the class label (``None`` if unknown)."""
    gam = canonical_string(P)[:i]
    dom, _ = dominant_representative(P.R, h_element(P, gam))
    fam = family(P)
    if P.R.kind in "ABCD":
        h_eps = [Fraction(0)] * len(coroot_epsilon(P.R, P.R.simple_root(0)))
        for g in gam:
            h_eps = [a + b for a, b in zip(h_eps, coroot_epsilon(P.R, g))]
        label = format_partition(partition_from_weights(natural_weights(P, h_eps)))
    else:
        label = CARTER_LABELS.get(fam, {}).get(dom)
    return dom, label


def expected_partition(P: ParabolicDatum, i: int) -> Optional[str]:
    """Closed-form partition labels for the classical families."""
    fam, n = family(P), P.R.rank

    def fmt(*pairs):
        return format_partition([p for p, k in pairs for _ in range(k)])

    if fam == "A":
        N = n + 1
        return fmt((2, i), (1, N - 2 * i))
    if fam == "C":
        return fmt((2, i), (1, 2 * (n - i)))
    if fam in ("spin_odd", "spin_even"):
        m = 2 * n - 1 if fam == "spin_odd" else 2 * n - 2
        return [fmt((1, m + 2)), fmt((2, 2), (1, m - 2)), fmt((3, 1), (1, m - 1))][i]
    if fam == "D_wedge":
        return fmt((2, 2 * i), (1, 2 * n - 4 * i))
    return None


# --------------------------------------------------------------------------
# orbit table


@dataclass(frozen=True)
class OrbitDatum:
    index: int
    representative: Tuple[Root, ...]
    dim: int
    dim_tangent: int
    dim_weyl: int
    weyl_word: WeylWord
    weyl_K: Tuple[int, ...]
    dual_index: int
    component_group: str
    weighted_dynkin: Tuple[int, ...]
    g_orbit_label: Optional[str]


def orbit_table(P: ParabolicDatum, B: Optional[ChevalleyBasis] = None) -> List[OrbitDatum]:
    _require_abelian(P)
    B = B or build_basis(P.R)
    gam = canonical_string(P)
    r = len(gam)
    reps = minimal_double_coset_reps(P.R, P.J, P.lam)
    if len(reps) != r + 1:
        raise ConsistencyError(f"{len(reps)} double cosets but canonical string of length {r}")
    for d in reps:
        if d.w_prime_length != d.w_prime_length_by_word:
            raise ConsistencyError(f"l(w') mismatch for {d.word}")
    out = []
    for i in range(r + 1):
        dt = orbit_dimension_tangent(B, representative(P, i), P.lam)
        rep = reps[i]
        if dt != rep.dimension:
            raise ConsistencyError(f"orbit {i}: tangent dim {dt} != l(w)+l(w') = {rep.dimension}")
        wd, label = g_orbit_label(P, i)
        out.append(
            OrbitDatum(
                index=i,
                representative=gam[:i],
                dim=dt,
                dim_tangent=dt,
                dim_weyl=rep.dimension,
                weyl_word=rep.word,
                weyl_K=tuple(sorted(rep.K)),
                dual_index=r - i,
                component_group=component_group(P, i),
                weighted_dynkin=wd,
                g_orbit_label=label,
            )
        )
    dims = [o.dim for o in out]
    if any(a >= b for a, b in zip(dims, dims[1:])):
        raise ConsistencyError(f"orbit dimensions not increasing: {dims}")
    if dims[-1] != P.dim_V:
        raise ConsistencyError("open orbit does not have full dimension")
    for i, why in forced_connected(P, dims).items():
        if out[i].component_group != TRIVIAL:
            raise ConsistencyError(f"orbit {i} should be connected ({why})")
    return out


def orbit_count(P: ParabolicDatum) -> int:
    """``|M \\ V|`` as the number of ``(W_J, W_J)`` double cosets."""
    return double_coset_count(P.R, P.J, P.lam)


def is_regular(P: ParabolicDatum, table: Optional[List[OrbitDatum]] = None) -> bool:
    """Boundary of the open orbit is a hypersurface."""
    table = table or orbit_table(P)
    return table[-1].dim - table[-2].dim == 1


def regularity_matches_w0(P: ParabolicDatum) -> bool:
    return is_regular(P) == w0_negates(P.R, P.lam)
