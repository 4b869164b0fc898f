"""The border-strip expansion of a power-sum product, checked exactly.

Multiplying a truncated loop Schur function by a loop power sum expands as a
sign-alternating sum of loop Schur functions over all ways of adding a
length k*n border strip, the sign being (-1) to the strip height.  The
verifier computes both sides and insists on exact equality.
"""

from loopschur import (
    Partition,
    enumerate_border_strips,
    loop_power_sum,
    loop_schur,
    verify_murnaghan_nakayama,
)

lam = Partition.of(2, 1)
n, k, N = 2, 1, 5

print(f"expanding p_{k} * s_{lam} with n={n} at truncation N={N}")
print("strips of length", k * n, "on", lam, ":")
for strip in enumerate_border_strips(lam, k * n):
    sign = "+" if strip.height % 2 == 0 else "-"
    print(f"  {sign} s_{strip.sigma}   (height {strip.height})")

lhs = loop_power_sum(k, n, N) * loop_schur(lam, n, N)
print("left side has", len(lhs), "terms")

report = verify_murnaghan_nakayama(lam, n, k, N)
print(report.text())
assert report.passed

# The identity survives truncation at any admissible N; watch the term
# counts grow while equality stays exact.
for N in range(k * n + len(lam), 8):
    report = verify_murnaghan_nakayama(lam, n, k, N)
    print(f"  N={N}: {report.details['lhs_terms']} terms, pass={report.passed}")
