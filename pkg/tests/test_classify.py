import json

import pytest

from oracles import partitions
from specht import (
    ClassificationReport,
    DomainError,
    Status,
    certify,
    classify_all,
    conjugate,
    enumerate_unbroken_doubly_singular_cores,
    is_char0_irreducible,
    is_doubly_singular,
)
from specht.classify import Rule, Verdict, jm_exponents


def upto(n, lo=1):
    for k in range(lo, n + 1):
        yield from partitions(k)


def test_examples(cache):
    assert certify((2, 2), 2, cache=cache).status is Status.IRREDUCIBLE
    r = certify((4, 2, 2), 5, cache=cache)
    assert r.status is Status.REDUCIBLE and r.decisive.rule is Rule.BROKEN
    r = certify((4, 4, 1), 5, cache=cache)
    assert r.status is Status.REDUCIBLE
    assert r.decisive.label == "CHAR0_REDUCIBLE(2)"
    r = certify((3, 1), 3, cache=cache)
    assert r.status is Status.OUT_OF_SCOPE
    assert r.certificates[0].rule is Rule.REGULAR
    r = certify("6^2,5,4", 5, cache=cache)
    assert r.status is Status.UNKNOWN
    with pytest.raises(DomainError):
        certify((2, 2), 6, cache=cache)


def test_cheap_first_prefers_jm(cache):
    # (4^2,1) is not 10-JM? it is a 10-core, so the JM rule passes and the row sum decides
    assert certify((4, 4, 1), 5, cache=cache, cheap_first=True).decisive.label == "CHAR0_REDUCIBLE(2)"
    la = (3, 3, 3, 1)  # unbroken doubly-singular, not a 6-core
    default = certify(la, 3, cache=cache)
    cheap = certify(la, 3, cache=cache, cheap_first=True)
    assert default.status is cheap.status is Status.REDUCIBLE
    assert cheap.decisive.rule is Rule.NOT_JM


def test_char0_irreducible(cache):
    assert is_char0_irreducible((2, 2), 2, cache)[0]
    assert not is_char0_irreducible((4, 4, 1), 2, cache)[0]
    ok, ev = is_char0_irreducible((2, 1), 3, cache)
    assert not ok and ev["method"] == "jm"


def test_jm_exponents():
    assert jm_exponents((2, 2), 5) == [1]
    assert jm_exponents((10, 10), 3) == [1]  # largest hook 11 < 18
    assert jm_exponents((17, 2), 3) == [1, 2]
    assert jm_exponents((2, 2), 3, max_i=3) == [1, 2, 3]


def test_out_of_scope_never_decided_n14(cache):
    for la in upto(14):
        if is_doubly_singular(la):
            continue
        for p in (2, 3, 5):
            assert certify(la, p, cache=cache).status is Status.OUT_OF_SCOPE


def test_conjugation_invariance_n14(cache):
    for la in upto(14):
        if not is_doubly_singular(la) or la > conjugate(la):
            continue
        for p in (2, 3, 5):
            assert certify(la, p, cache=cache).status is certify(conjugate(la), p, cache=cache).status, (la, p)


def test_non_candidates_reducible_n20():
    for p in (2, 3):
        cands = set(enumerate_unbroken_doubly_singular_cores(p))
        for la in upto(20):
            if is_doubly_singular(la) and la not in cands:
                r = certify(la, p, cheap_first=True, row_sum=False)
                assert r.status is Status.REDUCIBLE, (la, p, r)


def test_candidates_for_small_p(cache):
    for p, count in ((2, 1), (3, 10)):
        report = classify_all(p, cache=cache)
        assert report.counts()["Irreducible"] == count == len(report.verdicts)


def test_monotone_in_max_i(cache):
    for la in upto(16, lo=4):
        if not is_doubly_singular(la):
            continue
        for p in (2, 3):
            prev = None
            for max_i in (1, 2, 3):
                s = certify(la, p, max_i=max_i, cache=cache, row_sum=False).status
                if prev in (Status.REDUCIBLE, Status.IRREDUCIBLE):
                    assert s is prev
                elif prev is Status.UNKNOWN:
                    assert s in (Status.UNKNOWN, Status.REDUCIBLE)
                prev = s


def test_never_irreducible_beyond_three(cache):
    for la in enumerate_unbroken_doubly_singular_cores(5)[:40]:
        if la.size <= 20:
            assert certify(la, 5, cache=cache).status is not Status.IRREDUCIBLE
    for la in enumerate_unbroken_doubly_singular_cores(7)[-20:]:
        assert certify(la, 7, row_sum=False).status is Status.UNKNOWN


def test_verdict_json_round_trip(cache):
    for la in [(2, 2), (4, 2, 2), (4, 4, 1), (6, 6, 5, 4), (3, 1)]:
        v = certify(la, 5, cache=cache)
        again = Verdict.from_json_dict(json.loads(json.dumps(v.to_json_dict())))
        assert again == v


def test_report_json_round_trip(cache):
    report = classify_all(3, cache=cache)
    text = report.to_json()
    again = ClassificationReport.from_json(text)
    assert again.verdicts == report.verdicts
    assert again.to_json() == text
    doc = json.loads(text)
    assert doc["schema_version"] == 1
    doc["schema_version"] = 7
    with pytest.raises(DomainError):
        ClassificationReport.from_json_dict(doc)


def test_row_sum_limit_only_drops_work(cache):
    full = classify_all(3, cache=cache)
    limited = classify_all(3, cache=cache, row_sum_size_limit=5)
    assert [v.status for v in full.verdicts] == [v.status for v in limited.verdicts]
    assert limited.row_sums_computed() < full.row_sums_computed()
