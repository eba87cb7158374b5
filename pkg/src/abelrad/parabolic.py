"""Maximal parabolic data attached to a single Dynkin node."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Dict, List, Optional, Sequence, Tuple

from .rootsys import Coweight, Root, RootSystem, fundamental_coweight, height, pairing


class NonAbelianRadical(ValueError):
    """Raised when orbit analysis is requested for a non-abelian nilradical."""

    def __init__(self, P: "ParabolicDatum"):
        self.datum = P
        super().__init__(
            f"{P.R.name} node {P.node}: nilradical is not abelian "
            f"(root {P.witness} has level {pairing(P.lam, P.witness)})"
        )


@dataclass(frozen=True)
class ParabolicDatum:
    R: RootSystem
    node: int
    lam: Coweight
    J: Tuple[int, ...]
    levels: Dict[Root, int] = field(compare=False, hash=False, repr=False)
    V_weights: Tuple[Root, ...] = field(repr=False)
    M_label: str = ""

    @property
    def dim_V(self) -> int:
        return len(self.V_weights)

    @property
    def max_level(self) -> int:
        return max(self.levels.values())

    @property
    def higher_levels_empty(self) -> bool:
        return self.max_level <= 1

    @property
    def witness(self) -> Optional[Root]:
        """A positive root of level >= 2 (the highest one), if any."""
        high = [b for b, l in self.levels.items() if l >= 2]
        return max(high, key=lambda b: (height(b), b)) if high else None

    @property
    def case_id(self) -> str:
        return f"{self.R.name}/node{self.node}"


def parabolic_from_node(R: RootSystem, node: int) -> ParabolicDatum:
    if not 1 <= node <= R.rank:
        raise ValueError(f"node must be in 1..{R.rank}")
    lam = fundamental_coweight(R, node)
    levels = {b: pairing(lam, b) for b in R.positive_roots}
    V = tuple(b for b in R.positive_roots if levels[b] == 1)
    J = tuple(j for j in range(1, R.rank + 1) if j != node)
    return ParabolicDatum(R, node, lam, J, levels, V, levi_label(R, node))


def is_abelian_radical(P: ParabolicDatum) -> bool:
    return P.higher_levels_empty


def module_decomposition(P: ParabolicDatum) -> List[Tuple[Root, Root, int]]:
    """``(shape, highest weight, dimension)`` for each irreducible summand of ``g_1``."""
    R = P.R
    out_nodes = [i for i in range(R.rank) if P.lam[i]]
    groups: Dict[Root, List[Root]] = {}
    for b in P.V_weights:
        shape = tuple(b[i] if i in out_nodes else 0 for i in range(R.rank))
        groups.setdefault(shape, []).append(b)
    out = []
    for shape, roots in sorted(groups.items()):
        top = [b for b in roots if all(all(x >= y for x, y in zip(b, c)) for c in roots)]
        if len(top) != 1:
            raise ValueError(f"no unique maximal root of shape {shape}")
        out.append((shape, top[0], len(roots)))
    return out


# --------------------------------------------------------------------------
# Levi labels


def _components(R: RootSystem, nodes: Sequence[int]) -> List[List[int]]:
    nodes = set(nodes)
    comps = []
    seen = set()
    for s in sorted(nodes):
        if s in seen:
            continue
        comp, stack = [], [s]
        seen.add(s)
        while stack:
            u = stack.pop()
            comp.append(u)
            for v in nodes:
                if v not in seen and R.cartan[u - 1][v - 1] != 0:
                    seen.add(v)
                    stack.append(v)
        comps.append(sorted(comp))
    return comps


def diagram_type(R: RootSystem, comp: Sequence[int]) -> Tuple[str, int]:
    """Cartan type of a connected sub-diagram (nodes 1-based)."""
    comp = list(comp)
    n = len(comp)
    deg = {u: sum(1 for v in comp if v != u and R.cartan[u - 1][v - 1]) for u in comp}
    double = [(u, v) for u in comp for v in comp if R.cartan[u - 1][v - 1] == -2]
    if double:
        # a[u][v] = -2 means alpha_u is the short end of the double bond
        short, long_ = double[0]
        if n == 2:
            return ("B", 2)
        return ("B", n) if deg[short] == 1 else ("C", n)
    branch = [u for u in comp if deg[u] == 3]
    if not branch:
        return ("A", n)
    b = branch[0]
    arms = []
    for start in (v for v in comp if v != b and R.cartan[b - 1][v - 1]):
        length, prev, cur = 1, b, start
        while True:
            nxt = [v for v in comp if v not in (prev, cur) and R.cartan[cur - 1][v - 1]]
            if not nxt:
                break
            prev, cur = cur, nxt[0]
            length += 1
        arms.append(length)
    arms.sort()
    if arms[0] == 1 and arms[1] == 1:
        return ("D", n)
    return ("E", n)


def _group_name(kind: str, n: int) -> str:
    if kind == "A":
        return f"SL({n + 1})"
    if kind == "B":
        return f"Spin({2 * n + 1})"
    if kind == "C":
        return f"Sp({2 * n})"
    if kind == "D":
        return f"Spin({2 * n})"
    return f"E{n}"


def levi_label(R: RootSystem, node: int) -> str:
    """Human-readable Levi factor for ``J = Delta - {node}``."""
    J = [j for j in range(1, R.rank + 1) if j != node]
    comps = _components(R, J)
    if R.kind == "A":
        n = R.rank + 1
        return f"GL({node})×GL({n - node})"
    types = [diagram_type(R, c) for c in comps]
    # the tails D_3 = A_3 and B_1 = A_1 would otherwise be misnamed
    if R.kind == "D" and node == 1:
        return f"GL(1)×Spin({2 * (R.rank - 1)})"
    if R.kind == "B" and node == 1:
        return f"GL(1)×Spin({2 * R.rank - 1})"
    if len(types) == 1 and types[0][0] == "A":
        return f"GL({types[0][1] + 1})"
    if len(types) == 1 and types[0][0] == "E":
        return f"{_group_name(*types[0])}×GL(1)"
    return "×".join(["GL(1)"] + [_group_name(k, n) for k, n in types])
