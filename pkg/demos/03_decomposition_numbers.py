"""Canonical basis vectors and decomposition rows from the LLT algorithm."""

from specht import BlockCache, canonical_basis_block, decomposition_row, format_partition, row_sum_at_one

cache = BlockCache()

# the principal 2-block of size 5: two columns
for mu, g in canonical_basis_block((1,), 5, 2, cache).items():
    print(f"G({format_partition(mu)}) =", g)
print()

# a row of the matrix, and its value at v = 1
row = decomposition_row((1, 1, 1), 2, cache)
print("row of 1^3 at e=2:", row)
for la in [(2, 2), (3, 3), (4, 4, 1), (6, 6, 5, 4)]:
    print(f"row sum of {format_partition(la):>8} at e=2:", row_sum_at_one(la, 2, cache))
print()

# the block of 6^2,5,4 (2-core 1, weight 10) was computed for the row sum above
block = cache.get((1,), 21, 2)
print(f"block e=2 core=1 n=21: {block.num_partitions} partitions, "
      f"{len(block.columns)} columns, computed in {block.seconds:.2f}s")
print("row of 6^2,5,4:", decomposition_row((6, 6, 5, 4), 2, cache))
