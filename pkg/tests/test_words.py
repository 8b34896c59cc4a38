import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from sturmpal.errors import InvalidPair, NotBlockComplete, ParseError, SizeLimitExceeded
from sturmpal.words import (
    BinaryWord,
    DefiningSequence,
    ParameterPair,
    apply_morphism,
    balanced_word,
    block_decompose,
    expand,
    fibonacci_prefix,
    image_length,
    invert_morphism,
    parse_defining_sequence,
    predicted_counts,
    validate_pair,
)

pairs = st.integers(1, 6).flatmap(
    lambda p: st.sampled_from([q for q in (p - 1, p + 1) if q >= 1]).map(lambda q: ParameterPair(p, q))
)
words = st.text(alphabet="ab", max_size=40)


def test_binary_word_basics():
    w = BinaryWord("aabab")
    assert len(w) == 5
    assert str(w) == "aabab"
    assert w.count_a == 3 and w.count_b == 2 and w.weight == 2
    assert w.at(3) == "b"
    assert w.factor(2, 4) == "aba"
    assert w.reverse() == "babaa"
    assert not w.is_palindrome()
    assert BinaryWord("abaaba").is_palindrome()
    assert w == BinaryWord(np.array([0, 0, 1, 0, 1], dtype=np.uint8))
    assert w + "a" == "aababa"


def test_binary_word_rejects_other_letters():
    with pytest.raises(ValueError):
        BinaryWord("abc")


def test_binary_word_is_read_only():
    w = BinaryWord("ab")
    with pytest.raises(ValueError):
        w.letters[0] = 1


def test_validate_pair():
    pr = validate_pair(2, 1)
    assert (pr.p, pr.p_prime, pr.p_min, pr.p_max) == (2, 1, 1, 2)
    for bad in [(1, 1), (0, 1), (2, 4), (-1, 0)]:
        with pytest.raises(InvalidPair):
            validate_pair(*bad)


def test_apply_morphism_examples():
    assert apply_morphism(ParameterPair(2, 1), "ab") == "aabab"
    assert apply_morphism(ParameterPair(1, 2), "a") == "ab"
    assert apply_morphism(ParameterPair(1, 2), "") == ""


def test_invert_morphism_examples():
    assert invert_morphism(ParameterPair(2, 1), "aabab") == "ab"
    assert invert_morphism(ParameterPair(1, 2), "") == ""
    with pytest.raises(NotBlockComplete):
        invert_morphism(ParameterPair(2, 1), "aaba")
    with pytest.raises(NotBlockComplete):
        invert_morphism(ParameterPair(2, 1), "aaab")


def test_expand_examples():
    assert [str(w) for w in expand([(2, 1)]).levels] == ["a", "aab"]
    assert [str(w) for w in expand("1,2;2,1").levels] == ["a", "ab", "aabab"]
    with pytest.raises(SizeLimitExceeded):
        expand(DefiningSequence.of((1, 2)).cycled(30), cap=10**6)


def test_expand_rejects_empty_seed():
    with pytest.raises(ValueError):
        expand("1,2", seed="")


def test_predicted_counts_examples():
    assert predicted_counts(ParameterPair(2, 1), 1, 1) == (5, 3, 2)
    assert predicted_counts(ParameterPair(1, 2), 1, 0) == (2, 1, 1)
    assert predicted_counts(ParameterPair(3, 4), 0, 0) == (0, 0, 0)


def test_block_decompose_examples():
    d = block_decompose(ParameterPair(2, 1), "aabab")
    assert [(b.kind, b.start, b.end) for b in d.blocks] == [("long", 1, 3), ("short", 4, 5)]
    assert [(s.start, s.end) for s in d.a_sequences] == [(1, 2), (4, 4)]
    d = block_decompose(ParameterPair(1, 2), "abaab")
    assert [b.kind for b in d.blocks] == ["short", "long"]
    assert [(s.start, s.end, s.length) for s in d.a_sequences] == [(1, 1, 1), (3, 4, 2)]
    with pytest.raises(NotBlockComplete):
        block_decompose(ParameterPair(2, 1), "aabaa")


def test_parse_defining_sequence():
    assert parse_defining_sequence("1,2;2,1").pairs == (ParameterPair(1, 2), ParameterPair(2, 1))
    assert parse_defining_sequence(" 3 , 2 ").pairs == (ParameterPair(3, 2),)
    assert str(parse_defining_sequence("1,2; 2,1 ;3,2")) == "1,2;2,1;3,2"


def test_parse_errors_carry_pair_index():
    with pytest.raises(InvalidPair) as exc:
        parse_defining_sequence("2,4")
    assert exc.value.index == 1
    with pytest.raises(InvalidPair) as exc:
        parse_defining_sequence("1,2;5,5")
    assert exc.value.index == 2
    for text in ["", "1,2;", "1;2", "a,b", "1,2,3"]:
        with pytest.raises(ParseError):
            parse_defining_sequence(text)


def test_sequence_cycling_and_slicing():
    pi = DefiningSequence.of((1, 2), (2, 1))
    assert str(pi.cycled(5)) == "1,2;2,1;1,2;2,1;1,2"
    assert str(pi[1:]) == "2,1"
    assert str(pi + "3,2") == "1,2;2,1;3,2"


def test_prefix_index():
    lw = expand("1,2;2,1")
    ca, cb = lw.prefix_index(2)
    assert ca.tolist() == [0, 1, 2, 2, 3, 3]
    assert cb.tolist() == [0, 0, 0, 1, 1, 2]
    assert lw.prefix_counts(2, 5) == (3, 2)


def test_fibonacci_prefix():
    assert fibonacci_prefix(21) == "abaababaabaababaababa"


def test_balanced_word_counts():
    for za, zb in [(1, 0), (0, 1), (3, 2), (7, 13)]:
        w = balanced_word(za, zb)
        assert (w.count_a, w.count_b) == (za, zb)


@given(pairs, words)
def test_property1_counts_match(pair, y):
    x = apply_morphism(pair, y)
    yw = BinaryWord(y)
    assert (len(x), x.count_a, x.count_b) == predicted_counts(pair, yw.count_a, yw.count_b)


@given(pairs, words)
def test_round_trip(pair, y):
    assert invert_morphism(pair, apply_morphism(pair, y)) == y


@settings(max_examples=50)
@given(st.lists(pairs, min_size=1, max_size=4), st.sampled_from(["a", "b", "ab", "aba"]))
def test_levels_are_block_complete(pis, seed):
    lw = expand(pis, seed)
    for level in range(1, lw.n + 1):
        pair = lw.pair_into(level)
        d = block_decompose(pair, lw.levels[level])
        assert all(s.length in (pair.p, pair.p_prime) for s in d.a_sequences)
        assert invert_morphism(pair, lw.levels[level]) == lw.levels[level - 1]
    assert image_length(pis, seed) == len(lw.ultimate)
