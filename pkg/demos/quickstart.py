"""Count inversions in a few sequences and read the run statistics."""

from invcount import count_inversions, fenwick_count, merge_count, stats_lines

keys = [3, 1, 4, 1, 5, 9, 2, 6]
count, stats = count_inversions(keys)
print(f"keys          {keys}")
print(f"inversions    {count}")
print()
print("run statistics:")
for line in stats_lines(stats):
    print(f"  {line}")

# the inner counter only changes how blocks are counted at the end,
# never the result
for inner in (merge_count, fenwick_count):
    again, _ = count_inversions(keys, inner=inner)
    assert again == count

# ties are not inversions
print()
print("all-equal keys:", count_inversions([7] * 10)[0], "inversions")
print("reverse sorted:", count_inversions(list(range(10, 0, -1)))[0],
      "inversions (= 10*9/2)")
