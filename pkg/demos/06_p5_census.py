"""The p = 5 candidates and their row sums at e = 2.

By default only candidates of size <= 24 get a row sum, which takes a few
seconds; pass --all for every candidate (the largest block has 37 boxes).
"""

import sys
import time

from specht import BlockCache, classify_all

limit = None if "--all" in sys.argv else 24
start = time.perf_counter()
report = classify_all(5, cache=BlockCache(), row_sum_size_limit=limit)
print(f"{len(report.verdicts)} candidates in {time.perf_counter() - start:.1f}s")
print("counts:", report.counts())
print("by rule:", report.counts_by_rule())
print(f"row sums computed: {report.row_sums_computed()}, equal to 1: {report.row_sum_one_count()}")

sizes = {}
for v in report.verdicts:
    sizes.setdefault(v.partition.size, []).append(v.status.value[0])
for n in sorted(sizes):
    print(f"  size {n:2}: {''.join(sizes[n])}")

print("largest blocks:")
for b in sorted(report.blocks, key=lambda b: -b["partitions"])[:5]:
    print(f"  core={b['core']:>12} n={b['n']}: {b['partitions']} partitions, {b['seconds']:.2f}s")
