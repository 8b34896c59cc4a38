import json

import pytest
from hypothesis import given
from hypothesis import strategies as st

from sturmpal.counting import (
    CountReport,
    full_report,
    lemma3_original_occurrences,
    lemma5_breakdown,
    theorem1_counts,
    theorem2_distinct_count,
)
from sturmpal.engine import enumerate_centers, locate_occurrences
from sturmpal.words import DefiningSequence, ParameterPair, apply_morphism, balanced_word, expand

pairs = st.integers(1, 8).flatmap(
    lambda p: st.sampled_from([q for q in (p - 1, p + 1) if q >= 1]).map(lambda q: ParameterPair(p, q))
)
counts = st.tuples(st.integers(0, 50), st.integers(0, 50)).filter(lambda t: sum(t) >= 1)


def test_theorem1_examples():
    r = theorem1_counts(ParameterPair(2, 1), 1, 1)
    assert (r.k_a, r.k_b, r.k_aa, r.k_total) == (3, 2, 1, 6)
    r = theorem1_counts(ParameterPair(1, 2), 1, 0)
    assert (r.k_a, r.k_b, r.k_aa, r.k_total) == (1, 1, 0, 2)
    r = theorem1_counts(ParameterPair(2, 1), 1, 0)
    assert (r.k_a, r.k_b, r.k_aa, r.k_total) == (2, 1, 1, 4)
    assert len(enumerate_centers("aab")) == 4


def test_theorem1_rejects_empty_word():
    with pytest.raises(ValueError):
        theorem1_counts(ParameterPair(2, 1), 0, 0)


@given(pairs, counts)
def test_theorem1_against_materialized_centers(pair, c):
    y = balanced_word(*c)
    x = apply_morphism(pair, y)
    r = theorem1_counts(pair, *c)
    assert r.k_total == 2 * len(x) - 2 * len(y)
    kinds = [k.kind.value for k in enumerate_centers(x)]
    assert (kinds.count("a"), kinds.count("b"), kinds.count("aa")) == (r.k_a, r.k_b, r.k_aa)


def test_lemma3_examples():
    assert lemma3_original_occurrences(ParameterPair(2, 1), ParameterPair(1, 2), 1, 0) == 4
    k_x = theorem1_counts(ParameterPair(2, 1), 1, 1).k_total
    k_y = theorem1_counts(ParameterPair(1, 2), 1, 0).k_total
    assert k_x - k_y == 4
    assert lemma3_original_occurrences(ParameterPair(1, 2), ParameterPair(2, 1), 1, 0) == 4


@given(pairs, pairs, counts)
def test_lemma3_is_a_difference_of_theorem1(px, py, c):
    za, zb = c
    ya, yb = za * py.p + zb * py.p_prime, za + zb
    diff = theorem1_counts(px, ya, yb).k_total - theorem1_counts(py, za, zb).k_total
    assert lemma3_original_occurrences(px, py, za, zb) == diff >= 0


def test_lemma5_examples():
    assert lemma5_breakdown(ParameterPair(2, 1)) == (1, 1, 0, 2)
    assert lemma5_breakdown(ParameterPair(3, 2)) == (1, 1, 1, 3)
    assert lemma5_breakdown(ParameterPair(5, 4)) == (1, 2, 2, 5)


@given(pairs)
def test_lemma5_parity_phrasing(pair):
    b, a, aa, total = lemma5_breakdown(pair)
    k = pair.p_min
    assert a == sum(1 for i in range(1, k + 1) if i % 2)
    assert aa == sum(1 for i in range(1, k + 1) if i % 2 == 0)
    assert total == max(pair.p, pair.p_prime) == theorem2_distinct_count([pair])


def test_theorem2_examples():
    assert theorem2_distinct_count("1,2;2,1") == 4
    assert theorem2_distinct_count("3,2") == 3
    assert theorem2_distinct_count(DefiningSequence.of((1, 2)).cycled(5)) == 10


def test_count_report_json_and_invariants():
    r = CountReport(1, 2, 3, 6, 4, 2)
    assert json.loads(r.to_json()) == {
        "k_a": 1, "k_b": 2, "k_aa": 3, "k_total": 6, "originals_total": 4, "m_distinct": 2,
    }
    with pytest.raises(ValueError):
        CountReport(1, 1, 1, 4)
    with pytest.raises(ValueError):
        CountReport(-1, 1, 0, 0)


def test_counts_stay_exact_at_huge_levels():
    pi = DefiningSequence.of((9, 10)).cycled(40)
    r = full_report(pi)
    assert r.k_total > 2**63
    assert r.k_total == r.k_a + r.k_b + r.k_aa


@pytest.mark.parametrize("pi,seed", [("2,1", "a"), ("1,2;2,1", "a"), ("3,2;2,3;1,2", "aba"), ("2,1", "abba")])
def test_full_report_matches_engine(pi, seed):
    lw = expand(pi, seed)
    table = locate_occurrences(lw)
    r = full_report(pi, seed)
    assert r.k_total == len(table)
    assert r.originals_total == table.count_original()
