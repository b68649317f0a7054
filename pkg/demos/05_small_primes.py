"""End-to-end classification for p = 2 and p = 3."""

from specht import BlockCache, classify_all

cache = BlockCache()
for p in (2, 3):
    report = classify_all(p, cache=cache)
    print(f"p={p}: {len(report.verdicts)} unbroken doubly-singular {2 * p}-cores")
    for v in report.verdicts:
        print("   ", v)
    print("   ", report.counts())
