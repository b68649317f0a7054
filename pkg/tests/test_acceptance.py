"""Acceptance criteria, one recorded PASS/FAIL line each.

Timings use a fresh in-memory block cache so they include the LLT work.
"""

import io
import json
import time

import pytest

import test_fock
import test_llt
import test_partitions
from conftest import record
from decomposition_tables import TABLES
from oracles import partitions
from specht import (
    BlockCache,
    Status,
    certify,
    classify_all,
    conjugate,
    decomposition_row,
    enumerate_unbroken_doubly_singular_cores,
    format_partition,
    is_e_jm,
    row_sum_at_one,
)
from specht.cli import main

SIX_CORES = [
    (2, 2), (3, 3), (2, 2, 2), (3, 3, 1), (3, 2, 2),
    (4, 4), (3, 3, 2), (2, 2, 2, 2), (3, 3, 3), (4, 3, 3, 1),
]


class Clock:
    def __enter__(self):
        self.start = time.perf_counter()
        return self

    def __exit__(self, *exc):
        self.seconds = time.perf_counter() - self.start


def cli(*argv):
    out = io.StringIO()
    code = main(list(argv), stdout=out, stderr=io.StringIO())
    return code, out.getvalue()


def test_criterion_1_p2(tmp_path):
    with Clock() as c:
        code, out = cli("classify", "--p", "2", "--json", "--jobs", "1", "--cache-dir", str(tmp_path))
    doc = json.loads(out)
    recs = doc["records"]
    ok = (code == 0 and len(recs) == 1 and recs[0]["partition"] == "2^2"
          and recs[0]["status"] == "Irreducible" and c.seconds < 1)
    assert record(1, ok, f"p=2: {len(recs)} candidate(s) {[r['partition'] + ' ' + r['status'] for r in recs]}, {c.seconds:.2f}s")


def test_criterion_2_p3():
    with Clock() as c:
        report = classify_all(3, cache=BlockCache())
    got = sorted(report.candidates)
    ok = (got == sorted(SIX_CORES)
          and all(v.status is Status.IRREDUCIBLE for v in report.verdicts) and c.seconds < 5)
    assert record(2, ok, f"p=3: {len(got)} candidates, counts {report.counts()}, {c.seconds:.2f}s")


def test_criterion_3_p5_enumeration():
    with Clock() as c:
        found = enumerate_unbroken_doubly_singular_cores(5)
    ok = len(found) == 227 and len(set(found)) == 227 and c.seconds < 5
    assert record(3, ok, f"p=5: {len(found)} candidates, largest size {max(la.size for la in found)}, {c.seconds:.2f}s")


def test_criterion_4_standard_tier():
    cache = BlockCache()
    with Clock() as c:
        report = classify_all(5, cache=cache, row_sum_size_limit=24)
    small = [v for v in report.verdicts if v.partition.size <= 24]
    consistent = all(
        (v.status is Status.UNKNOWN) == (v.evidence["row_sum_e2"] == 1)
        and (v.status is Status.REDUCIBLE) == (v.evidence["row_sum_e2"] >= 2)
        for v in small
    )
    sums = {v.partition: v.evidence["row_sum_e2"] for v in small}
    symmetric = all((sums[la] == 1) == (sums[conjugate(la)] == 1) for la in sums if conjugate(la) in sums)
    one = sum(1 for s in sums.values() if s == 1)
    red = sum(1 for s in sums.values() if s >= 2)
    rest = len(report.verdicts) - len(small)
    ok = (consistent and symmetric and len(small) == report.row_sums_computed()
          and one <= 115 and red <= 112 and one + red + rest == 227)
    assert record(4, ok, f"standard tier: {len(small)} candidates of size <= 24 checked, "
                         f"{one} with row sum 1, {red} reducible; {rest} larger left to the extended tier; "
                         f"{c.seconds:.1f}s")


@pytest.mark.extended
def test_criterion_4_extended(tmp_path):
    with Clock() as c:
        report = classify_all(5, cache=BlockCache(tmp_path))
    counts = report.counts()
    ok = (report.row_sum_one_count() == 115 and report.row_sums_computed() == 227
          and report.counts_by_rule() == {"CHAR0_REDUCIBLE(2)": 112}
          and counts["Unknown"] == 115 and counts["Irreducible"] == 0)
    for b in report.blocks:
        print(f"  block e=2 core={b['core']} n={b['n']}: {b['partitions']} partitions, "
              f"{b['columns']} columns, {b['seconds']:.2f}s")
    assert record("4 (extended)", ok, f"p=5 census: {report.row_sum_one_count()} with row sum 1, "
                                      f"{counts['Reducible']} reducible, {counts['Unknown']} unknown, "
                                      f"{len(report.blocks)} blocks, {c.seconds:.0f}s")


def test_criterion_5_jm_oracle():
    cache = BlockCache()
    bad = []
    checked = 0
    with Clock() as c:
        for e in (3, 4, 5):
            for n in range(1, 11):
                for la in partitions(n):
                    checked += 1
                    if is_e_jm(la, e) != (row_sum_at_one(la, e, cache) == 1):
                        bad.append((e, la))
    ok = not bad and c.seconds < 60
    assert record(5, ok, f"JM <=> row sum 1 on {checked} (e, partition) pairs, {len(bad)} mismatches, {c.seconds:.1f}s")


def test_criterion_6_rectangles():
    cache = BlockCache()
    rects = [(a,) * b for a in range(1, 25) for b in range(1, 25) if a * b <= 24]
    with Clock() as c:
        sums = {la: row_sum_at_one(la, 2, cache) for la in rects}
    ok = all(s == 1 for s in sums.values()) and c.seconds < 60
    assert record(6, ok, f"{len(rects)} rectangles with ab <= 24 all have row sum 1 at e=2: {ok}, {c.seconds:.1f}s")


def test_criterion_7_reducible_fixture():
    with Clock() as c:
        s = row_sum_at_one((4, 4, 1), 2, BlockCache())
    ok = s >= 2 and c.seconds < 1
    assert record(7, ok, f"row sum of 4^2,1 at e=2 is {s}, {c.seconds:.2f}s")


def test_criterion_8_transcribed_tables():
    cache = BlockCache()
    rows = mismatches = 0
    for e in (2, 3):
        for n in range(1, 7):
            for la in partitions(n):
                rows += 1
                got = {format_partition(mu): d for mu, d in decomposition_row(la, e, cache).at_one().items() if d}
                if got != TABLES[e][n][format_partition(la)]:
                    mismatches += 1
    ok = mismatches == 0
    assert record(8, ok, f"{rows} rows at e in {{2,3}}, n <= 6 compared at v=1, {mismatches} mismatches")


PROPERTIES = [
    test_partitions.test_conjugate_involution_n20,
    test_partitions.test_hook_symmetry_n15,
    test_partitions.test_broken_conjugation_n18,
    test_partitions.test_core_implies_jm_n15,
    test_partitions.test_unbroken_singular_jm_is_core_n25,
    test_partitions.test_last_repeat_bound_for_cores_n25,
    test_partitions.test_hook_interval_n18,
    test_fock.test_divided_power_identity_n8,
    test_fock.test_grading_and_blocks_n10,
]


def test_criterion_9_properties():
    failed = []
    with Clock() as c:
        for fn in PROPERTIES:
            try:
                fn()
            except AssertionError:
                failed.append(fn.__name__)
        for p in (2, 3, 5):
            try:
                test_partitions.test_candidates_within_bound_and_stable(p)
            except AssertionError:
                failed.append(f"box bound p={p}")
        try:
            test_llt.test_invariants_every_block(BlockCache())
        except AssertionError:
            failed.append("block invariants")
    ok = not failed and c.seconds < 300
    assert record(9, ok, f"{len(PROPERTIES) + 4} property suites, failures {failed or 'none'}, {c.seconds:.1f}s")


def test_criterion_10_certify_fixture():
    with Clock() as c:
        v = certify("6^2,5,4", 5, cache=BlockCache())
    ev = v.evidence
    ok = (v.status is Status.UNKNOWN and ev["is_2p_core"] and ev["unbroken"] and ev["doubly_singular"]
          and ev["row_sum_e2"] == 1 and c.seconds < 30)
    assert record(10, ok, f"6^2,5,4 at p=5: {v.status.value}, 10-core={ev['is_2p_core']}, "
                          f"unbroken={ev['unbroken']}, doubly-singular={ev['doubly_singular']}, "
                          f"row sum={ev['row_sum_e2']}, {c.seconds:.2f}s")
