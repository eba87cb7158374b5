"""Irreducible root systems of types A-E with exact integer data.

Roots are stored as integer coefficient vectors over the simple roots
(Bourbaki numbering).  Elements of the Cartan subalgebra ("coweights") are
integer tuples in the basis of fundamental coweights, so the pairing of a
coweight with the simple root ``alpha_j`` is simply its ``j``-th coordinate.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Dict, List, Sequence, Tuple

Root = Tuple[int, ...]
Coweight = Tuple[int, ...]

SUPPORTED_KINDS = ("A", "B", "C", "D", "E")
MAX_RANK = 8

# classical |Phi^+| counts, used to validate the reflection closure
_POSITIVE_COUNTS = {
    "A": lambda n: n * (n + 1) // 2,
    "B": lambda n: n * n,
    "C": lambda n: n * n,
    "D": lambda n: n * (n - 1),
    "E": lambda n: {6: 36, 7: 63, 8: 120}[n],
}


class RootSystemError(ValueError):
    """Unsupported or malformed root-system request."""


def cartan_matrix(kind: str, rank: int) -> List[List[int]]:
    """Cartan matrix ``a[i][j] = <alpha_i^vee, alpha_j>`` in Bourbaki numbering."""
    kind = kind.upper()
    _check_kind_rank(kind, rank)
    n = rank
    a = [[2 if i == j else 0 for j in range(n)] for i in range(n)]

    def link(i: int, j: int, aij: int = -1, aji: int = -1) -> None:
        a[i][j] = aij
        a[j][i] = aji

    if kind in "ABC":
        for i in range(n - 1):
            link(i, i + 1)
        if kind == "B" and n >= 2:
            # alpha_n short
            link(n - 2, n - 1, -1, -2)
        if kind == "C" and n >= 2:
            # alpha_n long
            link(n - 2, n - 1, -2, -1)
    elif kind == "D":
        for i in range(n - 2):
            link(i, i + 1)
        link(n - 3, n - 1)
    else:
        # E: 1-3-4-5-6-7-8 with 2 attached to 4
        link(0, 2)
        link(1, 3)
        for i in range(2, n - 1):
            link(i, i + 1)
    return a


def _check_kind_rank(kind: str, rank: int) -> None:
    if kind not in SUPPORTED_KINDS:
        raise RootSystemError(f"unsupported root system type {kind!r}")
    if not isinstance(rank, int) or rank < 1 or rank > MAX_RANK:
        raise RootSystemError(f"rank must be in 1..{MAX_RANK}, got {rank!r}")
    minimum = {"A": 1, "B": 2, "C": 2, "D": 4, "E": 6}[kind]
    if rank < minimum:
        raise RootSystemError(f"type {kind} needs rank >= {minimum}")
    if kind == "E" and rank > 7:
        raise RootSystemError("E8 has no abelian-radical maximal parabolic and is not supported")


def _symmetrizer(kind: str, rank: int) -> List[int]:
    # d_i = |alpha_i|^2 / 2 with short roots of squared length 2
    if kind == "B":
        return [2] * (rank - 1) + [1]
    if kind == "C":
        return [1] * (rank - 1) + [2]
    return [1] * rank


@dataclass(frozen=True)
class RootSystem:
    kind: str
    rank: int
    cartan: Tuple[Tuple[int, ...], ...]
    positive_roots: Tuple[Root, ...]
    # |alpha_i|^2, integers (2 for short/simply-laced, 4 for long in B/C)
    simple_norms: Tuple[int, ...]
    root_index: Dict[Root, int] = field(repr=False, compare=False, hash=False)
    roots: Tuple[Root, ...] = field(repr=False, compare=False, hash=False)

    @property
    def name(self) -> str:
        return f"{self.kind}{self.rank}"

    @property
    def highest_root(self) -> Root:
        return max(self.positive_roots, key=height)

    @property
    def n_positive(self) -> int:
        return len(self.positive_roots)

    def is_root(self, v: Sequence[int]) -> bool:
        return tuple(v) in self.root_index

    def index(self, v: Sequence[int]) -> int:
        return self.root_index[tuple(v)]

    def simple_root(self, i: int) -> Root:
        return tuple(1 if j == i else 0 for j in range(self.rank))

    def inner(self, x: Sequence[int], y: Sequence[int]) -> int:
        """Invariant symmetric form, normalised so short roots have norm 2."""
        total = 0
        for i, xi in enumerate(x):
            if not xi:
                continue
            d = self.simple_norms[i] // 2
            row = self.cartan[i]
            for j, yj in enumerate(y):
                if yj:
                    total += xi * d * row[j] * yj
        return total

    def norm(self, x: Sequence[int]) -> int:
        return self.inner(x, x)

    @property
    def long_norm(self) -> int:
        return max(self.simple_norms)

    def is_long(self, beta: Sequence[int]) -> bool:
        return self.norm(beta) == self.long_norm

    def reflect_root(self, i: int, beta: Sequence[int]) -> Root:
        """Simple reflection ``s_i`` applied to a root (or any root-lattice vector)."""
        c = sum(self.cartan[i][j] * b for j, b in enumerate(beta))
        out = list(beta)
        out[i] -= c
        return tuple(out)

    def subsystem_positive(self, nodes) -> List[Root]:
        """Positive roots supported on the given node subset."""
        nodes = set(nodes)
        return [b for b in self.positive_roots if all(c == 0 or j in nodes for j, c in enumerate(b))]


def height(beta: Sequence[int]) -> int:
    return sum(beta)


def _closure(a: List[List[int]], rank: int) -> List[Root]:
    simple = [tuple(1 if j == i else 0 for j in range(rank)) for i in range(rank)]
    seen = set(simple)
    frontier = list(simple)
    while frontier:
        nxt = []
        for beta in frontier:
            for i in range(rank):
                c = sum(a[i][j] * b for j, b in enumerate(beta))
                img = list(beta)
                img[i] -= c
                img = tuple(img)
                if img not in seen:
                    seen.add(img)
                    nxt.append(img)
        frontier = nxt
    return sorted(seen, key=lambda r: (height(r), r))


@lru_cache(maxsize=None)
def build_root_system(kind: str, rank: int) -> RootSystem:
    """Generate the root system by reflection closure of the simple roots."""
    kind = kind.upper()
    _check_kind_rank(kind, rank)
    a = cartan_matrix(kind, rank)
    all_roots = _closure(a, rank)
    positive = [r for r in all_roots if all(c >= 0 for c in r)]
    if any(any(c > 0 for c in r) and any(c < 0 for c in r) for r in all_roots):
        raise RootSystemError("closure produced a root of mixed sign")
    expected = _POSITIVE_COUNTS[kind](rank)
    if len(positive) != expected or len(all_roots) != 2 * expected:
        raise RootSystemError(f"{kind}{rank}: got {len(positive)} positive roots, expected {expected}")
    positive.sort(key=lambda r: (height(r), r))
    negative = [tuple(-c for c in r) for r in positive]
    roots = tuple(positive + negative)
    norms = tuple(2 * d for d in _symmetrizer(kind, rank))
    return RootSystem(
        kind=kind,
        rank=rank,
        cartan=tuple(tuple(row) for row in a),
        positive_roots=tuple(positive),
        simple_norms=norms,
        root_index={r: k for k, r in enumerate(roots)},
        roots=roots,
    )


def fundamental_coweight(R: RootSystem, node: int) -> Coweight:
    """``omega_node^vee`` with ``node`` 1-based."""
    return tuple(1 if j == node - 1 else 0 for j in range(R.rank))


def pairing(lam: Sequence[int], beta: Sequence[int]) -> int:
    """``<lam, beta>`` for a coweight in fundamental coordinates and a root in simple coordinates."""
    return sum(c * b for c, b in zip(lam, beta))


def coroot(R: RootSystem, beta: Sequence[int]) -> Coweight:
    """``beta^vee`` in fundamental-coweight coordinates, i.e. ``(<beta^vee, alpha_j>)_j``."""
    nb = R.norm(beta)
    out = []
    for j in range(R.rank):
        num = 2 * R.inner(beta, R.simple_root(j))
        if num % nb:
            raise RootSystemError(f"non-integral coroot pairing for {beta}")
        out.append(num // nb)
    return tuple(out)


def coroot_simple_coords(R: RootSystem, beta: Sequence[int]) -> Tuple[int, ...]:
    """``beta^vee`` expanded over the simple coroots."""
    nb = R.norm(beta)
    out = []
    for i, b in enumerate(beta):
        num = b * R.simple_norms[i]
        if num % nb:
            raise RootSystemError(f"non-integral coroot expansion for {beta}")
        out.append(num // nb)
    return tuple(out)


def reflect(R: RootSystem, beta: Sequence[int], v: Sequence[int]) -> Coweight:
    """``s_beta(v) = v - <v, beta> beta^vee`` on coweights."""
    c = pairing(v, beta)
    cv = coroot(R, beta)
    return tuple(x - c * y for x, y in zip(v, cv))


def simple_reflect_coweight(R: RootSystem, i: int, v: Sequence[int]) -> Coweight:
    # alpha_i^vee in fundamental coordinates is row i of the Cartan matrix
    c = v[i]
    row = R.cartan[i]
    return tuple(x - c * row[k] for k, x in enumerate(v))


def cartan_solve(R: RootSystem, v: Sequence[int]) -> Tuple[Fraction, ...]:
    """Express a fundamental-coordinate coweight over the simple coroots.

    Solves ``v = sum_i x_i alpha_i^vee`` exactly; used as an independent
    check of :func:`coroot` against :func:`coroot_simple_coords`.
    """
    n = R.rank
    # row i of Cartan = alpha_i^vee in fundamental coordinates, so v = A^T x
    m = [[Fraction(R.cartan[i][k]) for i in range(n)] + [Fraction(v[k])] for k in range(n)]
    for col in range(n):
        piv = next(r for r in range(col, n) if m[r][col] != 0)
        m[col], m[piv] = m[piv], m[col]
        p = m[col][col]
        m[col] = [x / p for x in m[col]]
        for r in range(n):
            if r != col and m[r][col] != 0:
                f = m[r][col]
                m[r] = [x - f * y for x, y in zip(m[r], m[col])]
    return tuple(m[k][n] for k in range(n))


# --- epsilon coordinates (display and classical natural representations) ---

def _simple_epsilon(kind: str, rank: int) -> List[Tuple[Fraction, ...]]:
    h = Fraction(1, 2)
    if kind == "A":
        n = rank + 1
        return [tuple(Fraction(1 if k == i else -1 if k == i + 1 else 0) for k in range(n)) for i in range(rank)]
    if kind in "BCD":
        n = rank
        rows = [tuple(Fraction(1 if k == i else -1 if k == i + 1 else 0) for k in range(n)) for i in range(n - 1)]
        if kind == "B":
            last = [0] * n
            last[n - 1] = 1
        elif kind == "C":
            last = [0] * n
            last[n - 1] = 2
        else:
            last = [0] * n
            last[n - 2] = last[n - 1] = 1
        rows.append(tuple(Fraction(x) for x in last))
        return rows
    # E6/E7 inside the E8 lattice, Bourbaki coordinates on R^8
    rows = [tuple([h, -h, -h, -h, -h, -h, -h, h])]
    e = lambda i: tuple(Fraction(1 if k == i else 0) for k in range(8))  # noqa: E731
    sub = lambda x, y: tuple(a - b for a, b in zip(x, y))  # noqa: E731
    add = lambda x, y: tuple(a + b for a, b in zip(x, y))  # noqa: E731
    rows.append(add(e(0), e(1)))
    for i in range(1, 7):
        rows.append(sub(e(i), e(i - 1)))
    return rows[:rank]


def epsilon_coords(R: RootSystem, beta: Sequence[int]) -> Tuple[Fraction, ...]:
    """Bourbaki epsilon coordinates of a root-lattice vector."""
    basis = _simple_epsilon(R.kind, R.rank)
    dim = len(basis[0])
    out = [Fraction(0)] * dim
    for c, row in zip(beta, basis):
        if c:
            for k in range(dim):
                out[k] += c * row[k]
    return tuple(out)


def coroot_epsilon(R: RootSystem, beta: Sequence[int]) -> Tuple[Fraction, ...]:
    """``2 beta / (beta, beta)`` in epsilon coordinates (standard dot product)."""
    v = epsilon_coords(R, beta)
    nn = sum(x * x for x in v)
    return tuple(2 * x / nn for x in v)


def format_epsilon(vec: Sequence[Fraction]) -> str:
    terms = []
    for k, c in enumerate(vec, start=1):
        if c == 0:
            continue
        if c == 1:
            s = f"+e{k}"
        elif c == -1:
            s = f"-e{k}"
        else:
            s = f"{'+' if c > 0 else '-'}{abs(c)}e{k}"
        terms.append(s)
    out = "".join(terms) or "0"
    return out[1:] if out.startswith("+") else out
