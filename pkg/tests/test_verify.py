import json

from sturmpal.verify import (
    fibonacci_fixture_report,
    lemma6_report,
    random_sequences,
    run_verification,
    verify_sequence,
)


def test_fixture_report_passes():
    rep = fibonacci_fixture_report()
    assert rep.passed, [c for c in rep.checks if not c.passed]


def test_verify_sequence_values():
    rep = verify_sequence("1,2;2,1")
    assert rep.passed
    c = rep.check("occurrence_count")
    assert (c.formula, c.oracle) == (6, 6)
    c = rep.check("distinct_count")
    assert (c.formula, c.oracle) == (4, 4)
    c = rep.check("original_count")
    assert (c.formula, c.oracle) == (4, 4)


def test_single_level_has_no_lemma3_line():
    rep = verify_sequence("3,2")
    assert rep.passed
    assert "original_count" not in [c.name for c in rep.checks]


def test_random_sequences_deterministic():
    a = random_sequences(7, 10, 5, 4)
    b = random_sequences(7, 10, 5, 4)
    assert [str(x) for x in a] == [str(x) for x in b]
    assert all(1 <= len(x) <= 5 and all(p.p_max <= 4 for p in x) for x in a)


def test_report_json_is_stable():
    a = run_verification("2,1;1,2", rng_seed=3, count=5).to_json()
    b = run_verification("2,1;1,2", rng_seed=3, count=5).to_json()
    assert a == b
    doc = json.loads(a)
    assert doc["passed"] and doc["sequences"] == 7


def test_lemma6_report():
    rep = lemma6_report("1,2;2,1;1,2", margin=2)
    assert rep.passed and len(rep.checks) == 6
    rep = lemma6_report("1,2;2,1;1,2", margin=0)
    assert not rep.passed
    assert {c.detail for c in rep.checks if not c.passed} <= {"inconclusive", "not maximal in context"}
