"""The degree floor for shifted signed border-strip sums.

With a nontrivial shift, the alternating sum of shifted loop Schur functions
over border-strip enlargements no longer vanishes at finite truncation, but
its minimum degree is bounded below by N - k*n - (l/n)*N and climbs as the
truncation N grows, so every fixed monomial is eventually cancelled.
"""

from loopschur import Partition, verify_degree_bound

k = 1
for lam, n, l in ((Partition(), 2, 1), (Partition.of(1), 3, 1), (Partition.of(1), 3, 2)):
    print(f"lambda={lam} n={n} l={l}")
    print(f"  {'N':>2} {'achieved':>10} {'floor':>8} {'proof floor':>12}")
    for N in range(k * n + len(lam) + 1, 9):
        report = verify_degree_bound(lam, n, k, N, l)
        assert report.passed
        print(f"  {N:>2} {report.details['achieved_min_degree']:>10}"
              f" {report.details['stated_bound']:>8} {report.details['proof_bound']:>12}")
    print()
