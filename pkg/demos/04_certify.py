"""Certificates for single partitions in characteristic p."""

from specht import BlockCache, certify

cache = BlockCache()

cases = [
    ((2, 2), 2),         # the only candidate at p = 2
    ((4, 3, 3, 1), 3),   # on the known list for p = 3
    ((4, 2, 2), 5),      # broken
    ((4, 4, 1), 5),      # 10-core, but reducible at e = 2
    ((3, 3, 3, 1), 3),   # not 6-JM
    ((6, 6, 5, 4), 5),   # nothing known
    ((3, 1), 5),         # 2-regular conjugate: handled elsewhere
]
for la, p in cases:
    verdict = certify(la, p, cache=cache)
    print(verdict)
    for step in verdict.certificates:
        print("    ", step.justification)
