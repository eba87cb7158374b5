"""Chevalley basis, brackets and Lie triples.

Structure constants come from the extraspecial-pair algorithm: positive
roots are totally ordered (height, then lexicographic or reverse
lexicographic within a height), every extraspecial pair gets the sign
``+(p+1)`` and all other constants follow from the standard identities
between ``N_{a,b}`` for triples and quadruples of roots summing to zero.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Dict, Iterable, List, Mapping, Optional, Sequence, Tuple

import numpy as np

from . import kernels
from .rootsys import Coweight, Root, RootSystem, coroot, coroot_simple_coords, height, pairing

ORDERS = ("lex", "revlex")


class ChevalleyError(RuntimeError):
    pass


def _neg(v: Sequence[int]) -> Root:
    return tuple(-c for c in v)


def _add(x: Sequence[int], y: Sequence[int]) -> Root:
    return tuple(a + b for a, b in zip(x, y))


def _sub(x: Sequence[int], y: Sequence[int]) -> Root:
    return tuple(a - b for a, b in zip(x, y))


def string_p(R: RootSystem, a: Sequence[int], b: Sequence[int]) -> int:
    """Largest ``p`` with ``b - p a`` a root."""
    p = 0
    cur = _sub(b, a)
    while R.is_root(cur):
        p += 1
        cur = _sub(cur, a)
    return p


@dataclass(frozen=True)
class ChevalleyBasis:
    R: RootSystem
    order: str
    # N[(a, b)] for every ordered pair of roots (as tuples) with a + b a root
    N: Mapping[Tuple[Root, Root], int] = field(repr=False)
    extraspecial: Mapping[Root, Tuple[Root, Root]] = field(repr=False)

    def n(self, a: Sequence[int], b: Sequence[int]) -> int:
        return self.N.get((tuple(a), tuple(b)), 0)

    @property
    def dim(self) -> int:
        return len(self.R.roots) + self.R.rank

    def structure_table(self, flip: Optional[Tuple[Root, Root]] = None):
        """CSR arrays ``(ptr, cols, vals)`` of brackets on the Chevalley basis.

        Basis order: all roots in ``R.roots`` order, then the simple coroots
        ``H_1..H_n``.  ``flip`` negates one constant ``N(a,b)`` (and
        ``N(b,a)``), producing a deliberately broken table for mutation tests.
        """
        R = self.R
        nroot = len(R.roots)
        dim = self.dim
        entries: List[List[Tuple[int, int]]] = [[] for _ in range(dim * dim)]
        flipped = set()
        if flip is not None:
            a, b = tuple(flip[0]), tuple(flip[1])
            if (a, b) not in self.N:
                raise ChevalleyError(f"{a}+{b} is not a root")
            flipped = {(a, b), (b, a)}
        for i, a in enumerate(R.roots):
            for j, b in enumerate(R.roots):
                s = _add(a, b)
                if not any(s):
                    hv = coroot_simple_coords(R, a)
                    entries[i * dim + j] = [(nroot + k, c) for k, c in enumerate(hv) if c]
                elif R.is_root(s):
                    v = self.N[(a, b)]
                    if (a, b) in flipped:
                        v = -v
                    entries[i * dim + j] = [(R.index(s), v)]
        for k in range(R.rank):
            row = R.cartan[k]
            for j, b in enumerate(R.roots):
                c = sum(row[t] * b[t] for t in range(R.rank))
                if c:
                    entries[(nroot + k) * dim + j] = [(j, c)]
                    entries[j * dim + nroot + k] = [(j, -c)]
        counts = np.array([len(e) for e in entries], dtype=np.int64)
        ptr = np.zeros(dim * dim + 1, dtype=np.int64)
        np.cumsum(counts, out=ptr[1:])
        cols = np.array([c for e in entries for c, _ in e], dtype=np.int64)
        vals = np.array([v for e in entries for _, v in e], dtype=np.int64)
        return ptr, cols, vals

    def jacobi_violations(self, flip=None, backend=None):
        ptr, cols, vals = self.structure_table(flip)
        return kernels.jacobi_violations(ptr, cols, vals, self.dim, backend=backend)


def _positive_order(R: RootSystem, order: str) -> List[Root]:
    if order == "lex":
        return sorted(R.positive_roots, key=lambda r: (height(r), r))
    if order == "revlex":
        return sorted(R.positive_roots, key=lambda r: (height(r), tuple(-c for c in r)))
    raise ValueError(f"unknown order {order!r}")


@lru_cache(maxsize=None)
def build_basis(R: RootSystem, order: str = "lex") -> ChevalleyBasis:
    """Structure constants for a Chevalley basis of the Lie algebra of ``R``."""
    pos = _positive_order(R, order)
    rank_of = {r: k for k, r in enumerate(pos)}
    norm = {r: R.norm(r) for r in R.roots}
    table: Dict[Tuple[Root, Root], Fraction] = {}

    def N(x: Root, y: Root) -> Fraction:
        s = _add(x, y)
        if not R.is_root(s):
            return Fraction(0)
        xp = x in rank_of
        yp = y in rank_of
        if xp and yp:
            return table[(x, y)] if rank_of[x] < rank_of[y] else -table[(y, x)]
        if not xp and not yp:
            return -N(_neg(x), _neg(y))
        if not xp:
            return -N(y, x)
        # x positive, y negative; x + y + (-s) = 0
        if s in rank_of:
            return -Fraction(norm[s], norm[x]) * N(_neg(y), s)
        return Fraction(norm[s], norm[y]) * N(_neg(s), x)

    extraspecial: Dict[Root, Tuple[Root, Root]] = {}
    by_height: Dict[int, List[Root]] = {}
    for z in pos:
        by_height.setdefault(height(z), []).append(z)
    for h in sorted(by_height):
        if h == 1:
            continue
        for z in by_height[h]:
            pairs = [(a, _sub(z, a)) for a in pos if _sub(z, a) in rank_of and rank_of[a] < rank_of[_sub(z, a)]]
            if not pairs:
                raise ChevalleyError(f"no decomposition for root {z}")
            pairs.sort(key=lambda pr: rank_of[pr[0]])
            a, b = pairs[0]
            extraspecial[z] = (a, b)
            table[(a, b)] = Fraction(string_p(R, a, b) + 1)
            nab = table[(a, b)]
            for xi, eta in pairs[1:]:
                t = Fraction(0)
                d1 = _sub(b, xi)
                if R.is_root(d1):
                    t += N(b, _neg(xi)) * N(a, _neg(eta)) / norm[d1]
                d2 = _sub(a, xi)
                if R.is_root(d2):
                    t += N(_neg(xi), a) * N(b, _neg(eta)) / norm[d2]
                table[(xi, eta)] = Fraction(norm[z]) / nab * t
    full: Dict[Tuple[Root, Root], int] = {}
    for x in R.roots:
        for y in R.roots:
            if R.is_root(_add(x, y)):
                v = N(x, y)
                if v.denominator != 1:
                    raise ChevalleyError(f"non-integral N{x, y} = {v}")
                full[(x, y)] = int(v)
    basis = ChevalleyBasis(R=R, order=order, N=full, extraspecial=extraspecial)
    _check_basis(basis)
    return basis


def _check_basis(B: ChevalleyBasis) -> None:
    R = B.R
    for (x, y), v in B.N.items():
        if B.N[(y, x)] != -v:
            raise ChevalleyError(f"antisymmetry fails at {x}, {y}")
        if abs(v) != string_p(R, x, y) + 1:
            raise ChevalleyError(f"|N{x, y}| = {abs(v)} but p+1 = {string_p(R, x, y) + 1}")


# --------------------------------------------------------------------------
# algebra elements


@dataclass(frozen=True)
class AlgebraElement:
    """Sparse element: root-vector coefficients plus a Cartan part.

    ``roots`` maps root tuples to integer coefficients; ``cartan`` is a
    coweight in fundamental-coweight coordinates.
    """

    roots: Mapping[Root, int]
    cartan: Coweight

    @classmethod
    def zero(cls, rank: int) -> "AlgebraElement":
        return cls({}, (0,) * rank)

    @classmethod
    def root_vector(cls, R: RootSystem, beta: Sequence[int], coeff: int = 1) -> "AlgebraElement":
        return cls({tuple(beta): coeff}, (0,) * R.rank)

    @classmethod
    def torus(cls, h: Sequence[int]) -> "AlgebraElement":
        return cls({}, tuple(h))

    def is_zero(self) -> bool:
        return not any(self.roots.values()) and not any(self.cartan)

    def __add__(self, other: "AlgebraElement") -> "AlgebraElement":
        roots = dict(self.roots)
        for r, c in other.roots.items():
            roots[r] = roots.get(r, 0) + c
        return AlgebraElement({r: c for r, c in roots.items() if c}, _add(self.cartan, other.cartan))

    def scale(self, k: int) -> "AlgebraElement":
        return AlgebraElement({r: k * c for r, c in self.roots.items() if k * c}, tuple(k * c for c in self.cartan))

    def __sub__(self, other: "AlgebraElement") -> "AlgebraElement":
        return self + other.scale(-1)

    def __eq__(self, other) -> bool:
        if not isinstance(other, AlgebraElement):
            return NotImplemented
        return (self - other).is_zero()

    def __hash__(self):  # pragma: no cover - elements are compared, not hashed
        return hash((tuple(sorted((r, c) for r, c in self.roots.items() if c)), self.cartan))

    def support(self) -> List[Root]:
        return sorted(r for r, c in self.roots.items() if c)

    def degree_support(self, lam: Sequence[int]) -> set:
        return {pairing(lam, r) for r, c in self.roots.items() if c}


def bracket(B: ChevalleyBasis, x: AlgebraElement, y: AlgebraElement) -> AlgebraElement:
    R = B.R
    roots: Dict[Root, int] = {}
    cart = [0] * R.rank
    for a, ca in x.roots.items():
        if not ca:
            continue
        for b, cb in y.roots.items():
            if not cb:
                continue
            s = _add(a, b)
            if not any(s):
                for k, v in enumerate(coroot(R, a)):
                    cart[k] += ca * cb * v
            elif R.is_root(s):
                roots[s] = roots.get(s, 0) + ca * cb * B.N[(a, b)]
    # [h, X_b] = <h, b> X_b
    for b, cb in y.roots.items():
        c = pairing(x.cartan, b)
        if c and cb:
            roots[b] = roots.get(b, 0) + c * cb
    for a, ca in x.roots.items():
        c = pairing(y.cartan, a)
        if c and ca:
            roots[a] = roots.get(a, 0) - c * ca
    return AlgebraElement({r: c for r, c in roots.items() if c}, tuple(cart))


# --------------------------------------------------------------------------
# Lie triples


@dataclass(frozen=True)
class LieTriple:
    e: AlgebraElement
    h: Coweight
    f: AlgebraElement

    @property
    def h_element(self) -> AlgebraElement:
        return AlgebraElement.torus(self.h)

    def check(self, B: ChevalleyBasis) -> bool:
        """``[h,e] = 2e``, ``[h,f] = -2f``, ``[e,f] = h``."""
        H = self.h_element
        return (
            bracket(B, H, self.e) == self.e.scale(2)
            and bracket(B, H, self.f) == self.f.scale(-2)
            and bracket(B, self.e, self.f) == H
        )

    def __add__(self, other: "LieTriple") -> "LieTriple":
        return LieTriple(self.e + other.e, _add(self.h, other.h), self.f + other.f)


def strongly_orthogonal(R: RootSystem, a: Sequence[int], b: Sequence[int]) -> bool:
    s, d = _add(a, b), _sub(a, b)
    return any(s) and any(d) and not R.is_root(s) and not R.is_root(d)


def adapted_triple(B: ChevalleyBasis, S: Iterable[Sequence[int]]) -> LieTriple:
    """Triple ``(sum X_g, sum g^vee, sum X_-g)`` over strongly orthogonal roots ``S``."""
    R = B.R
    S = [tuple(g) for g in S]
    for i, a in enumerate(S):
        for b in S[i + 1:]:
            if not strongly_orthogonal(R, a, b):
                raise ValueError(f"roots {a} and {b} are not strongly orthogonal")
    e = AlgebraElement({g: 1 for g in S}, (0,) * R.rank)
    f = AlgebraElement({_neg(g): 1 for g in S}, (0,) * R.rank)
    h = (0,) * R.rank
    for g in S:
        h = _add(h, coroot(R, g))
    return LieTriple(e, h, f)


def brackets_commute(B: ChevalleyBasis, t1: LieTriple, t2: LieTriple) -> bool:
    """All nine cross-brackets between the two triples vanish."""
    left = (t1.e, t1.h_element, t1.f)
    right = (t2.e, t2.h_element, t2.f)
    return all(bracket(B, u, v).is_zero() for u in left for v in right)


def tangent_matrix(B: ChevalleyBasis, x: AlgebraElement, lam: Sequence[int]) -> List[List[int]]:
    """Matrix of ``m -> g_1, m |-> [m, x]`` with ``m`` the degree-0 part of ``ad(lam)``.

    Rows run over a basis of ``m`` (fundamental coweights, then degree-0
    root vectors); columns over the degree-1 roots.
    """
    R = B.R
    cols = [b for b in R.roots if pairing(lam, b) == 1]
    col_idx = {b: k for k, b in enumerate(cols)}
    basis: List[AlgebraElement] = []
    for i in range(R.rank):
        basis.append(AlgebraElement.torus(tuple(1 if k == i else 0 for k in range(R.rank))))
    for b in R.roots:
        if pairing(lam, b) == 0:
            basis.append(AlgebraElement.root_vector(R, b))
    rows = []
    for m in basis:
        y = bracket(B, m, x)
        if any(y.cartan):
            raise ChevalleyError("bracket left g_1")
        row = [0] * len(cols)
        for r, c in y.roots.items():
            row[col_idx[r]] = c
        rows.append(row)
    return rows


def orbit_dimension_tangent(B: ChevalleyBasis, x: AlgebraElement, lam: Sequence[int]) -> int:
    """``dim M.x`` as the exact rank of ``[m, x]``."""
    if x.degree_support(lam) - {1} or any(x.cartan):
        raise ValueError("x must lie in g_1")
    if x.is_zero():
        return 0
    return kernels.exact_rank(tangent_matrix(B, x, lam))


def orbit_dimension_modp(B: ChevalleyBasis, x: AlgebraElement, lam: Sequence[int], backend: Optional[str] = None) -> int:
    """Same rank over a large prime field; a lower bound that agrees in practice."""
    if x.is_zero():
        return 0
    return kernels.rank_mod_p(tangent_matrix(B, x, lam), backend=backend)
