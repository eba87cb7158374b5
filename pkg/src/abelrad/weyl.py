"""Weyl-group computations done through actions on coweights and roots.

No group element is ever stored as an abstract object: a Weyl element is a
word in simple reflections (1-based node labels) and is only ever applied.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Dict, FrozenSet, Iterable, List, Sequence, Tuple

from .rootsys import Coweight, Root, RootSystem, simple_reflect_coweight

WeylWord = Tuple[int, ...]

ORBIT_LIMIT = 10_000


class OrbitOverflow(RuntimeError):
    pass


def dominant_representative(R: RootSystem, v: Sequence[int]) -> Tuple[Coweight, WeylWord]:
    """Return ``(mu, word)`` with ``mu`` dominant and ``mu = word . v``.

    The word is written left to right as group multiplication, so the
    reflection applied first is the rightmost letter.
    """
    cur = tuple(v)
    applied: List[int] = []
    while True:
        neg = next((i for i, c in enumerate(cur) if c < 0), None)
        if neg is None:
            break
        cur = simple_reflect_coweight(R, neg, cur)
        applied.append(neg + 1)
    return cur, tuple(reversed(applied))


def act_on_coweight(R: RootSystem, word: Sequence[int], v: Sequence[int]) -> Coweight:
    cur = tuple(v)
    for i in reversed(word):
        cur = simple_reflect_coweight(R, i - 1, cur)
    return cur


def act_on_root(R: RootSystem, word: Sequence[int], beta: Sequence[int]) -> Root:
    cur = tuple(beta)
    for i in reversed(word):
        cur = R.reflect_root(i - 1, cur)
    return cur


def w0_negates(R: RootSystem, lam: Sequence[int]) -> bool:
    """True iff ``w0 . lam = -lam`` for dominant ``lam``."""
    lam = tuple(lam)
    if any(c < 0 for c in lam):
        raise ValueError("w0_negates expects a dominant coweight")
    mu, _ = dominant_representative(R, tuple(-c for c in lam))
    return mu == lam


def parabolic_longest_length(R: RootSystem, J: Iterable[int]) -> int:
    """Length of the longest element of ``W_J`` (``J`` given as 1-based nodes)."""
    return len(R.subsystem_positive({j - 1 for j in J}))


def inversion_length(R: RootSystem, word: Sequence[int]) -> int:
    """Number of positive roots made negative by the word's action."""
    if not word:
        return 0
    return sum(1 for b in R.positive_roots if any(c < 0 for c in act_on_root(R, word, b)))


def is_reduced(R: RootSystem, word: Sequence[int]) -> bool:
    return inversion_length(R, word) == len(word)


def longest_word(R: RootSystem, J: Iterable[int] | None = None) -> WeylWord:
    """A reduced word for the longest element of ``W_J`` (all of ``W`` by default)."""
    nodes = sorted(range(1, R.rank + 1) if J is None else set(J))
    cur = tuple(-1 for _ in range(R.rank))
    applied: List[int] = []
    while True:
        neg = next((i for i in nodes if cur[i - 1] < 0), None)
        if neg is None:
            break
        cur = simple_reflect_coweight(R, neg - 1, cur)
        applied.append(neg)
    return tuple(reversed(applied))


def weyl_orbit(R: RootSystem, lam: Sequence[int], limit: int = ORBIT_LIMIT) -> List[Coweight]:
    """The orbit ``W . lam`` by breadth-first reflection closure."""
    start = tuple(lam)
    seen = {start}
    order = [start]
    frontier = [start]
    while frontier:
        nxt = []
        for v in frontier:
            for i in range(R.rank):
                if v[i] == 0:
                    continue
                u = simple_reflect_coweight(R, i, v)
                if u not in seen:
                    seen.add(u)
                    order.append(u)
                    nxt.append(u)
                    if len(seen) > limit:
                        raise OrbitOverflow(f"|W.lam| exceeds {limit}")
        frontier = nxt
    return order


def _j_orbits(R: RootSystem, orbit: List[Coweight], J: Iterable[int]) -> List[List[Coweight]]:
    Jn = [j - 1 for j in J]
    members = set(orbit)
    assigned: Dict[Coweight, int] = {}
    classes: List[List[Coweight]] = []
    for v in orbit:
        if v in assigned:
            continue
        cls = [v]
        assigned[v] = len(classes)
        stack = [v]
        while stack:
            u = stack.pop()
            for i in Jn:
                w = simple_reflect_coweight(R, i, u)
                if w not in assigned:
                    assert w in members
                    assigned[w] = len(classes)
                    cls.append(w)
                    stack.append(w)
        classes.append(cls)
    return classes


def double_coset_count(R: RootSystem, J: Iterable[int], lam: Sequence[int], limit: int = ORBIT_LIMIT) -> int:
    """Number of ``(W_J, W_J)`` double cosets, counted as ``W_J``-orbits on ``W . lam``.

    Requires ``J`` to be exactly the set of nodes where ``lam`` vanishes, so
    that ``W . lam`` is the coset space ``W / W_J``.
    """
    J = sorted(set(J))
    if J != [i + 1 for i, c in enumerate(lam) if c == 0]:
        raise ValueError("J must be the vanishing set of lam")
    return len(_j_orbits(R, weyl_orbit(R, lam, limit), J))


def _positive_negative_count(R: RootSystem, mu: Sequence[int]) -> int:
    return sum(1 for b in R.positive_roots if sum(c * x for c, x in zip(mu, b)) < 0)


def image_of_simple_set(R: RootSystem, word: Sequence[int], J: Iterable[int]) -> FrozenSet[int]:
    """``J cap w(J)``: nodes ``k`` in ``J`` with ``alpha_k = w(alpha_j)`` for some ``j`` in ``J``."""
    J = set(J)
    out = set()
    for j in J:
        img = act_on_root(R, word, R.simple_root(j - 1))
        if sum(img) == 1 and all(c >= 0 for c in img):
            k = img.index(1) + 1
            if k in J:
                out.add(k)
    return frozenset(out)


@dataclass(frozen=True)
class DoubleCosetRep:
    word: WeylWord
    length: int
    K: FrozenSet[int]
    w_prime_length: int
    w_prime_length_by_word: int

    @property
    def dimension(self) -> int:
        return self.length + self.w_prime_length


def w_prime_lengths(R: RootSystem, word: Sequence[int], J: Iterable[int]) -> Tuple[FrozenSet[int], int, int]:
    """``K = J cap w(J)`` and ``l(w')`` for ``w' = w_J^0 w_K^0``, computed two ways.

    The first is ``l(w_J^0) - l(w_K^0)``; the second is the inversion count of
    the concatenated reduced words.  Callers assert the two agree.
    """
    J = frozenset(J)
    K = image_of_simple_set(R, word, J)
    by_difference = parabolic_longest_length(R, J) - parabolic_longest_length(R, K)
    by_word = inversion_length(R, longest_word(R, J) + longest_word(R, K))
    return K, by_difference, by_word


def minimal_double_coset_reps(R: RootSystem, J: Iterable[int], lam: Sequence[int]) -> List[DoubleCosetRep]:
    """Minimal-length representatives of ``W_J \\ W / W_J`` with their orbit dimensions.

    Each ``W_J``-orbit on ``W . lam`` is one double coset; the element of the
    orbit with the fewest negative pairings gives the minimal representative,
    and dominating it yields a reduced word.
    """
    J = sorted(set(J))
    reps = []
    for cls in _j_orbits(R, weyl_orbit(R, lam), J):
        mu = min(cls, key=lambda v: (_positive_negative_count(R, v), v))
        dom, word_to_dom = dominant_representative(R, mu)
        assert dom == tuple(lam)
        # word_to_dom . mu = lam, so w = word_to_dom^{-1} maps lam to mu
        word = tuple(reversed(word_to_dom))
        K, by_diff, by_word = w_prime_lengths(R, word, J)
        reps.append(DoubleCosetRep(word, inversion_length(R, word), K, by_diff, by_word))
    reps.sort(key=lambda d: (d.dimension, d.word))
    return reps


def is_minimal_in_double_coset(R: RootSystem, word: Sequence[int], J: Iterable[int]) -> bool:
    """No left or right descent in ``J``."""
    n = inversion_length(R, word)
    for j in J:
        if inversion_length(R, (j,) + tuple(word)) < n:
            return False
        if inversion_length(R, tuple(word) + (j,)) < n:
            return False
    return True


# Reference double-coset representatives for the exceptional cases, by orbit
# index.  "w0w0J" stands for the product of the longest words of W and W_J.
DOUBLE_COSET_FIXTURES = {
    ("E", 6, 1): [(), (1,), "w0w0J"],
    ("E", 7, 7): [(), (7,), (7, 6, 5, 4, 2, 3, 4, 5, 6, 7), "w0w0J"],
}


@dataclass(frozen=True)
class FixtureCheck:
    index: int
    word: WeylWord
    length: int
    minimal: bool
    K: FrozenSet[int]
    formula_dimension: int


def check_fixture_words(R: RootSystem, node: int) -> List[FixtureCheck]:
    """Evaluate the reference representatives: length, minimality, ``K`` and ``l(w)+l(w')``."""
    J = [j for j in range(1, R.rank + 1) if j != node]
    out = []
    for i, w in enumerate(DOUBLE_COSET_FIXTURES[(R.kind, R.rank, node)]):
        if w == "w0w0J":
            w = reduced_form(R, longest_word(R) + longest_word(R, J))
        K, by_diff, by_word = w_prime_lengths(R, w, J)
        assert by_diff == by_word
        n = inversion_length(R, w)
        out.append(FixtureCheck(i, tuple(w), n, is_minimal_in_double_coset(R, w, J), K, n + by_diff))
    return out


def reduced_form(R: RootSystem, word: Sequence[int]) -> WeylWord:
    """A reduced word for the same element, read off from its action on a regular coweight."""
    rho = tuple(1 for _ in range(R.rank))
    _, back = dominant_representative(R, act_on_coweight(R, word, rho))
    return tuple(reversed(back))


def same_element(R: RootSystem, u: Sequence[int], v: Sequence[int]) -> bool:
    rho = tuple(1 for _ in range(R.rank))
    return act_on_coweight(R, u, rho) == act_on_coweight(R, v, rho)
