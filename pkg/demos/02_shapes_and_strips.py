"""Partitions, content coloring, staircase extensions, and border strips."""

from loopschur import (
    Partition,
    content_color,
    enumerate_border_strips,
    is_border_strip,
    make_extended,
    make_extended_row,
    make_young,
)

lam = Partition.of(4, 3, 3, 1)
n = 3

# The color of a cell is its content (col - row) mod n; colors are constant
# along diagonals.
print(f"coloring of {lam} mod {n}:")
shape = make_young(lam, n)
for r in range(1, len(lam) + 1):
    line = " ".join(str(shape.color(r, c)) for c in range(1, lam.part(r) + 1))
    print("  " + line)

# The staircase extension prepends N - j + 1 cells to row j, ending at
# column 0, so row lengths strictly decrease.
ext = make_extended(Partition.of(2, 1), 5, n)
print("staircase extension of 2,1 with N=5 has row lengths:",
      [ext.row_length(r) for r in range(1, 6)])
print("row 3 spans columns", ext.bounds(3))

# Appending k*n cells to one row gives the shapes the pairing maps act on.
aug = make_extended_row(Partition.of(2, 1), 5, 3, 4, n)
print("after appending 3 cells to row 4:",
      [aug.row_length(r) for r in range(1, 6)])

# Border strips: connected skew shapes with no 2x2 block.  The height is
# the number of occupied rows minus one, and it drives the signs in the
# expansion identities.
print("length-3 strips on the empty partition:")
for strip in enumerate_border_strips(Partition(), 3):
    print(f"  sigma={strip.sigma}  height={strip.height}")

# The predicate checks the definition directly on the cell set.
print("is (2,1) \\ (1) a 2-strip?", is_border_strip(Partition.of(2, 1), Partition.of(1), 2))
print("is (3) \\ (1) a 2-strip?  ", is_border_strip(Partition.of(3), Partition.of(1), 2))
