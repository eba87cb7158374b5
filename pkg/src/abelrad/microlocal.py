"""Simple equivariant objects, characteristic cycles, packets, Fourier involution, quivers.

A simple object is a pair (orbit index, character of the component group).
Characteristic cycles are multiplicity vectors over orbit indices; packets
are always read off from them, never copied from a list.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Dict, FrozenSet, List, Sequence, Tuple

from .orbits import Z2, canonical_string, component_group, family
from .parabolic import NonAbelianRadical, ParabolicDatum, is_abelian_radical

TRIV = "triv"
SGN = "sgn"


class MicrolocalConsistencyError(RuntimeError):
    pass


@dataclass(frozen=True)
class SimpleObject:
    orbit: int
    character: str = TRIV

    def __lt__(self, other: "SimpleObject") -> bool:
        return (self.orbit, self.character == SGN) < (other.orbit, other.character == SGN)

    @property
    def label(self) -> str:
        return f"({self.orbit})" + ("′" if self.character == SGN else "")

    def __str__(self) -> str:
        return self.label


def obj(i: int, primed: bool = False) -> SimpleObject:
    """``(i)`` or ``(i)′``, applying the convention ``(0)′ = (0)``."""
    return SimpleObject(i, SGN if primed and i > 0 else TRIV)


CharacteristicCycle = Tuple[int, ...]


def _require(P: ParabolicDatum) -> int:
    if not is_abelian_radical(P):
        raise NonAbelianRadical(P)
    return len(canonical_string(P))


def simple_objects(P: ParabolicDatum) -> List[SimpleObject]:
    r = _require(P)
    out = []
    for i in range(r + 1):
        out.append(obj(i))
        if component_group(P, i) == Z2:
            out.append(obj(i, True))
    return out


def _cc_support(P: ParabolicDatum, S: SimpleObject) -> FrozenSet[int]:
    fam, n = family(P), P.R.rank
    i, primed = S.orbit, S.character == SGN
    if fam in ("A", "D_wedge", "E6"):
        return frozenset({i})
    if fam == "C":
        if i == 0:
            return frozenset({0})
        single = (n - i) % 2 == 0
        if primed:
            single = not single
        return frozenset({i}) if single else frozenset({i, i - 1})
    if fam == "spin_odd":
        return {
            obj(0): frozenset({0}),
            obj(1): frozenset({0, 1}),
            obj(2): frozenset({2}),
            obj(2, True): frozenset({1, 2}),
        }[S]
    if fam == "spin_even":
        return {
            obj(0): frozenset({0}),
            obj(1): frozenset({1}),
            obj(2): frozenset({2}),
            obj(2, True): frozenset({0, 1, 2}),
        }[S]
    if fam == "E7":
        # the cuspidal object on the open orbit meets every conormal
        return frozenset({0, 1, 2, 3}) if primed else frozenset({i})
    raise MicrolocalConsistencyError(f"no characteristic-cycle rule for {P.case_id}")


def characteristic_cycle(P: ParabolicDatum, S: SimpleObject) -> CharacteristicCycle:
    """Multiplicity of each conormal bundle ``T*_{O_j} V`` in ``CC(S)``."""
    r = _require(P)
    if S not in simple_objects(P):
        raise ValueError(f"{S} is not a simple object for {P.case_id}")
    sup = _cc_support(P, S)
    return tuple(1 if j in sup else 0 for j in range(r + 1))


def all_cycles(P: ParabolicDatum) -> Dict[SimpleObject, CharacteristicCycle]:
    return {S: characteristic_cycle(P, S) for S in simple_objects(P)}


def microlocal_packets(P: ParabolicDatum) -> Dict[int, List[SimpleObject]]:
    """``A(O_j) = {S : m_j(S) != 0}``."""
    r = _require(P)
    cc = all_cycles(P)
    return {j: sorted(S for S, m in cc.items() if m[j]) for j in range(r + 1)}


# --------------------------------------------------------------------------
# tabulated packet lists and the comparison against derived packets


def listed_packets(P: ParabolicDatum) -> Dict[int, List[SimpleObject]]:
    """Tabulated packet lists, with no corrections applied."""
    r = _require(P)
    fam = family(P)
    if fam in ("A", "D_wedge", "E6"):
        return {i: [obj(i)] for i in range(r + 1)}
    if fam == "C":
        n = r
        out = {0: [obj(0), obj(1)], n: [obj(n), obj(n, True)]}
        for i in range(1, n):
            out[i] = [obj(i), obj(i, True), obj(i + 1)]
        return {i: sorted(v) for i, v in out.items()}
    if fam == "spin_odd":
        return {2: sorted([obj(2), obj(2, True)]), 1: sorted([obj(1), obj(2, True)]), 0: [obj(0), obj(1)]}
    if fam == "spin_even":
        return {i: sorted([obj(i), obj(2, True)]) for i in range(3)}
    if fam == "E7":
        # tabulated with (2)′, an object that does not exist here
        return {i: sorted({obj(i), SimpleObject(2, SGN)}) for i in range(4)}
    raise MicrolocalConsistencyError(P.case_id)


@dataclass(frozen=True)
class PacketDiscrepancy:
    orbit: int
    derived: Tuple[str, ...]
    listed: Tuple[str, ...]
    kind: str  # "prime-ambiguity" (type C) or "nonexistent-object" (E7) or "unexplained"


def compare_packets(P: ParabolicDatum) -> List[PacketDiscrepancy]:
    """Differences between derived and listed packets, each classified."""
    derived, listed = microlocal_packets(P), listed_packets(P)
    valid = set(simple_objects(P))
    out = []
    for j in sorted(derived):
        d, l = set(derived[j]), set(listed[j])
        if d == l:
            continue
        strip = lambda xs: sorted((s.orbit for s in xs))  # noqa: E731
        if family(P) == "C" and strip(d) == strip(l) and {s for s in d if s.orbit == j} == {s for s in l if s.orbit == j}:
            kind = "prime-ambiguity"
        elif not l <= valid and d - l <= valid and all(s.orbit == j or s.character == SGN for s in d ^ l):
            kind = "nonexistent-object"
        else:
            kind = "unexplained"
        out.append(PacketDiscrepancy(j, tuple(map(str, sorted(d))), tuple(map(str, sorted(l))), kind))
    return out


# --------------------------------------------------------------------------
# twisted Fourier involution


def _dual_cycle(m: CharacteristicCycle) -> CharacteristicCycle:
    # O_j -> O_{r-j}
    return tuple(reversed(m))


@dataclass(frozen=True)
class FourierResult:
    mapping: Dict[SimpleObject, SimpleObject]
    n_solutions: int

    @property
    def unique(self) -> bool:
        return self.n_solutions == 1

    def fixed_points(self) -> List[SimpleObject]:
        return sorted(S for S, T in self.mapping.items() if S == T)


def fourier_candidates(P: ParabolicDatum) -> List[Dict[SimpleObject, SimpleObject]]:
    """All involutions of the simple objects meeting the three constraints.

    (b) ``CC(F S)`` is ``CC(S)`` with every orbit replaced by its dual;
    (c) ``F`` swaps ``(0)`` with the trivial object on the open orbit;
    (a) the dual of the support of ``S`` occurs in ``CC(F S)``.
    """
    r = _require(P)
    objs = simple_objects(P)
    cc = all_cycles(P)
    options = {S: [T for T in objs if cc[T] == _dual_cycle(cc[S]) and r - S.orbit in {j for j, c in enumerate(cc[T]) if c}] for S in objs}
    sols: List[Dict[SimpleObject, SimpleObject]] = []

    def extend(i: int, cur: Dict[SimpleObject, SimpleObject]) -> None:
        if i == len(objs):
            sols.append(dict(cur))
            return
        S = objs[i]
        if S in cur:
            extend(i + 1, cur)
            return
        for T in options[S]:
            if T in cur and cur[T] != S:
                continue
            if T != S and (T in cur):
                continue
            if S not in options[T]:
                continue
            cur[S] = T
            cur[T] = S
            extend(i + 1, cur)
            del cur[S]
            cur.pop(T, None)

    extend(0, {})
    zero, open_triv = obj(0), obj(r)
    return [s for s in sols if s[zero] == open_triv]


def fourier_involution(P: ParabolicDatum) -> FourierResult:
    sols = fourier_candidates(P)
    if not sols:
        raise MicrolocalConsistencyError(f"{P.case_id}: no involution is compatible with the characteristic cycles")
    if len(sols) > 1:
        raise MicrolocalConsistencyError(f"{P.case_id}: {len(sols)} compatible involutions")
    return FourierResult(sols[0], len(sols))


def support_rule_violations(P: ParabolicDatum) -> List[SimpleObject]:
    """Objects ``S`` for which ``supp F(S)`` is not the dual of ``supp S``.

    Only objects whose cycle has more than one conormal can appear here.
    """
    r = _require(P)
    F = fourier_involution(P).mapping
    return sorted(S for S, T in F.items() if T.orbit != r - S.orbit)


# --------------------------------------------------------------------------
# quivers


@dataclass(frozen=True)
class Quiver:
    vertices: Tuple[SimpleObject, ...]
    edges: FrozenSet[FrozenSet[SimpleObject]]
    relations: str = "all 2-cycles are zero"

    @property
    def isolated(self) -> List[SimpleObject]:
        touched = {v for e in self.edges for v in e}
        return [v for v in self.vertices if v not in touched]

    def components(self) -> List[List[SimpleObject]]:
        seen, comps = set(), []
        for v in self.vertices:
            if v in seen:
                continue
            comp, stack = [], [v]
            seen.add(v)
            while stack:
                u = stack.pop()
                comp.append(u)
                for e in self.edges:
                    if u in e:
                        (w,) = e - {u}
                        if w not in seen:
                            seen.add(w)
                            stack.append(w)
            comps.append(sorted(comp))
        return comps

    def is_automorphism(self, mapping: Dict[SimpleObject, SimpleObject]) -> bool:
        img = {frozenset(mapping[v] for v in e) for e in self.edges}
        return img == set(self.edges) and set(mapping) == set(self.vertices)


def _chain(vs: Sequence[SimpleObject]) -> List[FrozenSet[SimpleObject]]:
    return [frozenset((a, b)) for a, b in zip(vs, vs[1:])]


def quiver(P: ParabolicDatum) -> Quiver:
    r = _require(P)
    fam, n = family(P), P.R.rank
    verts = tuple(simple_objects(P))
    edges: List[FrozenSet[SimpleObject]] = []
    if fam == "A":
        if 2 * P.node == n + 1:
            edges = _chain([obj(i) for i in range(r + 1)])
    elif fam == "D_wedge":
        if n % 2 == 0:
            edges = _chain([obj(i) for i in range(r + 1)])
    elif fam == "E6":
        edges = []
    elif fam == "C":
        eps = n % 2
        first = [obj(i) for i in range(1 - eps, n, 2)] + [obj(n)]
        second = [obj(i, True) for i in range(eps, n + 1, 2)]
        edges = _chain(first) + _chain(second)
    elif fam == "spin_odd":
        edges = _chain([obj(1), obj(2)]) + _chain([obj(0), obj(2, True)])
    elif fam == "spin_even":
        edges = _chain([obj(0), obj(1), obj(2)])
    elif fam == "E7":
        edges = _chain([obj(i) for i in range(4)])
    q = Quiver(verts, frozenset(edges))
    touched = {v for e in q.edges for v in e}
    if not touched <= set(verts):
        raise MicrolocalConsistencyError(f"{P.case_id}: quiver uses unknown vertices")
    return q
