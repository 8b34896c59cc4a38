"""Closed-form occurrence and distinct-palindrome counts.

Everything here is integer arithmetic on parameter pairs and letter counts;
no word is ever built.  Python ints never overflow, so the counts stay exact
at any level.
"""
from __future__ import annotations

import json
from dataclasses import asdict, dataclass

from .words import ParameterPair, as_sequence, as_word, predicted_counts


@dataclass(frozen=True)
class CountReport:
    k_a: int = 0
    k_b: int = 0
    k_aa: int = 0
    k_total: int = 0
    originals_total: int = 0
    m_distinct: int = 0

    def __post_init__(self):
        if min(self.k_a, self.k_b, self.k_aa, self.k_total, self.originals_total, self.m_distinct) < 0:
            raise ValueError("counts must be non-negative")
        if self.k_total != self.k_a + self.k_b + self.k_aa:
            raise ValueError("k_total must equal k_a + k_b + k_aa")

    def to_dict(self) -> dict:
        return asdict(self)

    def to_json(self) -> str:
        return json.dumps(self.to_dict())


def _check_counts(ya: int, yb: int):
    if ya < 0 or yb < 0 or ya + yb < 1:
        raise ValueError("need ya, yb >= 0 and ya + yb >= 1")


def theorem1_counts(pair: ParameterPair, ya: int, yb: int) -> CountReport:
    """Center counts of alpha(Y) given the letter counts of Y."""
    _check_counts(ya, yb)
    p, q = pair.p, pair.p_prime
    k_a = p * ya + q * yb
    k_b = ya + yb
    k_aa = (p - 1) * ya + (q - 1) * yb
    total = k_a + k_b + k_aa
    length, _, _ = predicted_counts(pair, ya, yb)
    assert total == 2 * (p * ya + q * yb) == 2 * length - 2 * (ya + yb)
    y = ya + yb
    # the case-split forms reduce to the same value since |p - q| = 1
    alt = 2 * yb + 2 * p * y if p < q else 2 * p * y - 2 * yb
    assert alt == total
    return CountReport(k_a, k_b, k_aa, total)


def lemma3_original_occurrences(pair_x: ParameterPair, pair_y: ParameterPair, za: int, zb: int) -> int:
    """Occurrences original at X = alpha_x(alpha_y(Z)), from the counts of Z."""
    _check_counts(za, zb)
    value = 2 * (pair_x.p - 1) * (za * pair_y.p + zb * pair_y.p_prime) + 2 * (za + zb) * pair_x.p_prime
    ya, yb = za * pair_y.p + zb * pair_y.p_prime, za + zb
    diff = theorem1_counts(pair_x, ya, yb).k_total - theorem1_counts(pair_y, za, zb).k_total
    assert value == diff
    return value


def lemma5_breakdown(pair: ParameterPair) -> tuple[int, int, int, int]:
    """(b-centered, a-centered, aa-centered, total) originals of one level."""
    m = pair.p_min
    a_count = (m + 1) // 2
    aa_count = m // 2
    total = 1 + a_count + aa_count
    assert total == pair.p_max
    return 1, a_count, aa_count, total


def theorem2_distinct_count(pi) -> int:
    return sum(pair.p_max for pair in as_sequence(pi))


def full_report(pi, seed="a") -> CountReport:
    """CountReport for the top level of ``pi`` applied to ``seed``.

    With two or more levels the originals follow from letter counts alone.
    A single level reflects every seed letter and every equal-letter pair
    of the seed, so those are read off the seed itself.
    """
    pi = as_sequence(pi)
    s = str(as_word(seed))
    ya, yb = s.count("a"), s.count("b")
    za = zb = None
    for pair in pi.pairs[:-1]:
        za, zb = ya, yb
        _, ya, yb = predicted_counts(pair, ya, yb)
    rep = theorem1_counts(pi[-1], ya, yb)
    if za is None:
        pairs = sum(x == y for x, y in zip(s, s[1:]))
        originals = rep.k_total - len(s) - pairs
    else:
        originals = lemma3_original_occurrences(pi[-1], pi[-2], za, zb)
    return CountReport(rep.k_a, rep.k_b, rep.k_aa, rep.k_total, originals, theorem2_distinct_count(pi))
