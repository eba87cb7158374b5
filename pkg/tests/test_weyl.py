from __future__ import annotations

import pytest
from hypothesis import given
from hypothesis import strategies as st

from abelrad.cases import all_supported_cases
from abelrad.parabolic import parabolic_from_node
from abelrad.rootsys import build_root_system, fundamental_coweight
from abelrad.selftest import root_system_types
from abelrad.weyl import (
    OrbitOverflow,
    act_on_coweight,
    check_fixture_words,
    dominant_representative,
    double_coset_count,
    inversion_length,
    is_minimal_in_double_coset,
    is_reduced,
    longest_word,
    minimal_double_coset_reps,
    parabolic_longest_length,
    reduced_form,
    same_element,
    w0_negates,
    w_prime_lengths,
    weyl_orbit,
)


def test_dominant_examples():
    A1 = build_root_system("A", 1)
    assert dominant_representative(A1, (-1,)) == ((1,), (1,))
    E6 = build_root_system("E", 6)
    mu, word = dominant_representative(E6, (-1, 0, 0, 0, 0, 0))
    assert mu == (0, 0, 0, 0, 0, 1)
    assert act_on_coweight(E6, word, (-1, 0, 0, 0, 0, 0)) == mu
    lam = (0, 1, 0, 0, 0, 0)
    assert dominant_representative(E6, lam) == (lam, ())


def test_w0_negates_examples():
    for n in range(1, 8):
        A = build_root_system("A", n)
        for l in range(1, n + 1):
            assert w0_negates(A, fundamental_coweight(A, l)) == (2 * l == n + 1)
    assert w0_negates(build_root_system("C", 5), fundamental_coweight(build_root_system("C", 5), 5))
    assert not w0_negates(build_root_system("E", 6), (1, 0, 0, 0, 0, 0))


@pytest.mark.parametrize("kind,n", [("B", 5), ("C", 6), ("D", 4), ("D", 6), ("D", 8), ("E", 7)])
def test_w0_central_types_negate_every_vertex(kind, n):
    R = build_root_system(kind, n)
    for node in range(1, n + 1):
        assert w0_negates(R, fundamental_coweight(R, node))


def test_parabolic_longest_lengths():
    E6 = build_root_system("E", 6)
    assert parabolic_longest_length(E6, range(1, 7)) == 36
    assert parabolic_longest_length(E6, []) == 0
    assert parabolic_longest_length(E6, [2, 3, 4, 5, 6]) == 20
    E7 = build_root_system("E", 7)
    assert parabolic_longest_length(E7, range(1, 7)) == 36


@pytest.mark.parametrize("kind,n", root_system_types(7))
def test_longest_word_is_reduced_and_negates(kind, n):
    R = build_root_system(kind, n)
    w = longest_word(R)
    assert len(w) == len(R.positive_roots)
    assert is_reduced(R, w)
    assert inversion_length(R, w) == len(R.positive_roots)


def test_double_coset_count_examples():
    E7 = build_root_system("E", 7)
    assert double_coset_count(E7, range(1, 7), fundamental_coweight(E7, 7)) == 4
    for n in range(2, 7):
        C = build_root_system("C", n)
        assert double_coset_count(C, range(1, n), fundamental_coweight(C, n)) == n + 1
    A1 = build_root_system("A", 1)
    assert double_coset_count(A1, [], (1,)) == 2
    assert len(weyl_orbit(E7, fundamental_coweight(E7, 7))) == 56


def test_double_coset_count_rejects_wrong_J():
    E7 = build_root_system("E", 7)
    with pytest.raises(ValueError):
        double_coset_count(E7, [1, 2], fundamental_coweight(E7, 7))


def test_orbit_guard():
    E7 = build_root_system("E", 7)
    with pytest.raises(OrbitOverflow):
        weyl_orbit(E7, (1,) * 7, limit=1000)


def test_inversion_length_examples():
    E7 = build_root_system("E", 7)
    J = list(range(1, 7))
    assert inversion_length(E7, ()) == 0
    assert inversion_length(E7, (7,)) == 1
    K, by_diff, by_word = w_prime_lengths(E7, (7,), J)
    assert K == frozenset({1, 2, 3, 4, 5}) and by_diff == by_word == 16
    w1 = (7, 6, 5, 4, 2, 3, 4, 5, 6, 7)
    assert inversion_length(E7, w1) == 10
    K, by_diff, _ = w_prime_lengths(E7, w1, J)
    assert 10 + by_diff == 26


def test_e6_s1_fixture():
    E6 = build_root_system("E", 6)
    K, by_diff, by_word = w_prime_lengths(E6, (1,), [2, 3, 4, 5, 6])
    assert K == frozenset({2, 4, 5, 6})
    assert by_diff == by_word == 10


def test_fixture_words_e7_all_minimal():
    checks = check_fixture_words(build_root_system("E", 7), 7)
    assert [c.minimal for c in checks] == [True] * 4
    assert [c.formula_dimension for c in checks] == [0, 17, 26, 27]


def test_fixture_w0w0J_in_e6_is_not_minimal():
    # w0 w0_J maps J onto its image under the diagram flip, so K != J and the
    # element has a descent in J; the genuine minimal representative has length 8
    E6 = build_root_system("E", 6)
    checks = check_fixture_words(E6, 1)
    assert [c.minimal for c in checks] == [True, True, False]
    assert checks[2].length == 16 and checks[2].K == frozenset({2, 3, 4, 5})
    reps = minimal_double_coset_reps(E6, [2, 3, 4, 5, 6], fundamental_coweight(E6, 1))
    assert [r.length for r in reps] == [0, 1, 8]
    assert [r.dimension for r in reps] == [0, 11, 16]


@pytest.mark.parametrize("case", all_supported_cases(), ids=lambda c: f"{c[0]}{c[1]}-{c[2]}")
def test_minimal_reps_are_minimal(case):
    P = parabolic_from_node(build_root_system(case[0], case[1]), case[2])
    for rep in minimal_double_coset_reps(P.R, P.J, P.lam):
        assert is_reduced(P.R, rep.word)
        assert is_minimal_in_double_coset(P.R, rep.word, P.J)
        assert rep.w_prime_length == rep.w_prime_length_by_word


types7 = st.sampled_from(root_system_types(7))


@given(types7, st.data())
def test_dominant_representative_properties(kn, data):
    R = build_root_system(*kn)
    v = tuple(data.draw(st.lists(st.integers(-4, 4), min_size=R.rank, max_size=R.rank)))
    mu, word = dominant_representative(R, v)
    assert min(mu) >= 0
    assert act_on_coweight(R, word, v) == mu
    # w0 negation is a property of the W-orbit
    if min(v) >= 0:
        assert w0_negates(R, v) == w0_negates(R, mu)


@given(types7, st.data())
def test_reduced_form(kn, data):
    R = build_root_system(*kn)
    w = tuple(data.draw(st.lists(st.integers(1, R.rank), max_size=12)))
    u = reduced_form(R, w)
    assert same_element(R, u, w)
    assert is_reduced(R, u)
    assert len(u) == inversion_length(R, w) <= len(w)
