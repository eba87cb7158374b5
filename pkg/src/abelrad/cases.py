"""Case grids and the closed-form rows of the abelian classification table."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, List, Optional, Tuple

from .rootsys import MAX_RANK

Case = Tuple[str, int, int]


@dataclass(frozen=True)
class TableRow:
    kind: str
    rank: int
    node: int
    M: str
    V: str
    dim_V: int
    orbits: int


def table1_row(kind: str, rank: int, node: int) -> Optional[TableRow]:
    """Closed-form row for an abelian (type, node), or ``None`` if the node is not listed."""
    n = rank
    if kind == "A":
        N, l = n + 1, node
        return TableRow(kind, n, node, f"GL({l})×GL({N - l})", f"C^{l}⊗C^{N - l}", l * (N - l), min(l, N - l) + 1)
    if kind == "C" and node == n:
        return TableRow(kind, n, node, f"GL({n})", f"S^2 C^{n}", n * (n + 1) // 2, n + 1)
    if kind == "B" and node == 1:
        return TableRow(kind, n, node, f"GL(1)×Spin({2 * n - 1})", f"C⊗C^{2 * n - 1}", 2 * n - 1, 3)
    if kind == "D" and node == 1:
        return TableRow(kind, n, node, f"GL(1)×Spin({2 * n - 2})", f"C⊗C^{2 * n - 2}", 2 * n - 2, 3)
    if kind == "D" and node in (n - 1, n):
        return TableRow(kind, n, node, f"GL({n})", f"∧^2 C^{n}", n * (n - 1) // 2, n // 2 + 1)
    if kind == "E" and n == 6 and node in (1, 6):
        return TableRow(kind, n, node, "GL(1)×Spin(10)", "C⊗S (half-spin)", 16, 3)
    if kind == "E" and n == 7 and node == 7:
        return TableRow(kind, n, node, "E6×GL(1)", "V(27)⊗C", 27, 4)
    return None


def table1_cases(max_rank: int = MAX_RANK) -> List[Case]:
    """Every listed (type, rank, node) with ``2 <= rank <= max_rank``."""
    return [c for c in all_supported_cases(max_rank) if c[1] >= 2]


def acceptance_grid() -> List[Case]:
    """A_{n-1} for 3 <= n <= 8, C_n and B_n for 2 <= n <= 6, D_n for 4 <= n <= 8, E6, E7."""
    out: List[Case] = []
    for n in range(3, 9):
        out += [("A", n - 1, l) for l in range(1, n)]
    out += [("C", n, n) for n in range(2, 7)]
    out += [("B", n, 1) for n in range(2, 7)]
    for n in range(4, 9):
        out += [("D", n, 1), ("D", n, n - 1), ("D", n, n)]
    return out + [("E", 6, 1), ("E", 6, 6), ("E", 7, 7)]


def all_supported_cases(max_rank: int = MAX_RANK) -> List[Case]:
    """Every abelian (type, rank, node) with rank <= ``max_rank``."""
    out: List[Case] = []
    for n in range(1, max_rank + 1):
        out += [("A", n, l) for l in range(1, n + 1)]
    for n in range(2, max_rank + 1):
        out += [("B", n, 1), ("C", n, n)]
    for n in range(4, max_rank + 1):
        out += [("D", n, 1), ("D", n, n - 1), ("D", n, n)]
    if max_rank >= 6:
        out += [("E", 6, 1), ("E", 6, 6)]
    if max_rank >= 7:
        out.append(("E", 7, 7))
    return out


def all_nodes(max_rank: int = MAX_RANK) -> Iterator[Case]:
    """Every (type, rank, node) the root-system module can build."""
    for n in range(1, max_rank + 1):
        for k in ("A", "B", "C", "D", "E"):
            if (k in "BC" and n < 2) or (k == "D" and n < 4) or (k == "E" and n not in (6, 7)):
                continue
            for node in range(1, n + 1):
                yield (k, n, node)
