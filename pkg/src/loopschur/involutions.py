"""Row-labeled tableau families on staircase extensions and the four pairing maps.

A member of a family is a pair (T, tau): a row-weakly-increasing filling of a
staircase extension with entries in {1..N}, together with row labels tau (a
permutation of 1..N) such that the leftmost entry of row j is at least tau_j.
The pair contributes sgn(tau) times its weight monomial to a signed sum.

The base family lives on the plain staircase extension of the partition; the
augmented family lives on the staircase extension with k*n cells appended to
the right of one row i, ranging over i = 1..N.  Four involutions act on these
families:

``i1``
    finds the rightmost, then highest, vertically adjacent cell pair whose
    upper entry is at least the lower entry, swaps every entry strictly left
    of the upper cell with the entry to its southeast, and transposes the two
    row labels.  Fixed points are exactly the column-strict fillings.
``i2``
    on the augmented family: moves the leading k*n cells of the lengthened
    row to the row labeled by their last entry.  Fixed points are the members
    whose lengthened row starts with k*n copies of its own label.
``i3``
    swaps the two equal-length rows outright when the lengthened row ties
    another row; otherwise slides the lengthened row northwest until row
    lengths strictly decrease, applies ``i1`` there, and slides back.
``i4``
    like ``i2`` but compensates entries by +-k*l so that the shifted weight
    is preserved; defined on members whose lengthened row stays at or below
    N - k*l, and it has no fixed points for l >= 1.

Every map is an involution, reverses the label sign on non-fixed points, and
preserves the (shifted, where stated) weight monomial.  Cells only ever move
along their diagonals or jump a multiple of n columns, which is why the
weights survive.  All rows of the extended shapes start at column r - N, so a
cell's content depends only on its index within its row; the maps below
exploit this by operating on row tuples positionally.
"""

from __future__ import annotations

import bisect
import math
import random
from dataclasses import dataclass
from functools import lru_cache
from itertools import accumulate, combinations_with_replacement, permutations, product
from typing import Iterator

from .errors import CapExceededError, MembershipError
from .polyring import Monomial, Polynomial
from .shapes import (
    EXTENDED,
    EXTENDED_ROW,
    Partition,
    Shape,
    make_extended,
    make_extended_row,
)
from .tableaux import ShiftParams, Tableau, shifted_weight_monomial, weight_monomial

DEFAULT_CAP = 10**7


def permutation_sign(tau: tuple[int, ...]) -> int:
    inversions = sum(
        1
        for a in range(len(tau))
        for b in range(a + 1, len(tau))
        if tau[a] > tau[b]
    )
    return -1 if inversions % 2 else 1


@dataclass(frozen=True, slots=True)
class SignedTableau:
    """A tableau on a staircase extension plus row labels tau; sign = sgn(tau)."""

    tableau: Tableau
    tau: tuple[int, ...]

    @property
    def shape(self) -> Shape:
        return self.tableau.shape

    @property
    def rows(self) -> tuple[tuple[int, ...], ...]:
        return self.tableau.rows

    @property
    def sign(self) -> int:
        return permutation_sign(self.tau)

    def monomial(self, l: int = 0) -> Monomial:
        if l == 0:
            return weight_monomial(self.tableau)
        return shifted_weight_monomial(self.tableau, ShiftParams(self.shape.n, l))

    def to_document(self) -> dict:
        shape = self.shape
        doc = {
            "kind": shape.kind,
            "lambda": list(shape.lam.parts),
            "N": shape.N,
            "n": shape.n,
            "rows": [list(row) for row in self.rows],
            "tau": list(self.tau),
        }
        if shape.kind == EXTENDED_ROW:
            doc["extra"] = shape.extra
            doc["extended_row"] = shape.row
        return doc


def validate_member(st: SignedTableau) -> None:
    """Check the family constraints; raise :class:`MembershipError` on failure."""
    shape = st.shape
    if shape.kind not in (EXTENDED, EXTENDED_ROW):
        raise MembershipError(f"shape kind {shape.kind!r} is not a staircase extension")
    N = shape.N
    if sorted(st.tau) != list(range(1, N + 1)):
        raise MembershipError(f"labels {st.tau} are not a permutation of 1..{N}")
    for r, row in enumerate(st.rows, start=1):
        for idx, value in enumerate(row):
            if not 1 <= value <= N:
                raise MembershipError(f"entry {value} in row {r} outside 1..{N}")
            if idx and row[idx - 1] > value:
                raise MembershipError(f"row {r} is not weakly increasing: {row}")
        if row[0] < st.tau[r - 1]:
            raise MembershipError(
                f"row {r} starts with {row[0]}, below its label {st.tau[r - 1]}"
            )


def _with_rows(st: SignedTableau, shape: Shape, rows, tau) -> SignedTableau:
    out = SignedTableau(Tableau(shape, tuple(tuple(r) for r in rows)), tuple(tau))
    validate_member(out)
    return out


# ---------------------------------------------------------------------------
# Family counting, enumeration, and uniform sampling
# ---------------------------------------------------------------------------


def _row_lengths(lam: Partition, N: int, extra: int = 0, row: int = 0) -> list[int]:
    return [
        lam.part(r) + (N - r + 1) + (extra if r == row else 0)
        for r in range(1, N + 1)
    ]


def count_weakly_increasing(lo: int, hi: int, length: int) -> int:
    """Number of weakly increasing sequences of the given length over [lo, hi]."""
    values = hi - lo + 1
    if length == 0:
        return 1
    if values <= 0:
        return 0
    return math.comb(values + length - 1, length)


def unrank_weakly_increasing(lo: int, hi: int, length: int, index: int) -> tuple[int, ...]:
    """The index-th weakly increasing sequence over [lo, hi] in lexicographic order."""
    total = count_weakly_increasing(lo, hi, length)
    if not 0 <= index < total:
        raise ValueError(f"index {index} outside 0..{total - 1}")
    seq = []
    current = lo
    for pos in range(length):
        for value in range(current, hi + 1):
            block = count_weakly_increasing(value, hi, length - pos - 1)
            if index < block:
                seq.append(value)
                current = value
                break
            index -= block
    return tuple(seq)


def _label_weight(tau: tuple[int, ...], lengths: list[int], N: int) -> int:
    w = 1
    for label, length in zip(tau, lengths):
        w *= count_weakly_increasing(label, N, length)
        if w == 0:
            return 0
    return w


def count_staircase_tableaux(lam: Partition, N: int) -> int:
    """Exact size of the base family, summed over all labelings."""
    lengths = _row_lengths(lam, N)
    return sum(
        _label_weight(tau, lengths, N) for tau in permutations(range(1, N + 1))
    )


def count_augmented_tableaux(lam: Partition, k: int, n: int, N: int) -> int:
    """Exact size of the augmented family, summed over the lengthened row i."""
    total = 0
    for i in range(1, N + 1):
        lengths = _row_lengths(lam, N, extra=k * n, row=i)
        total += sum(
            _label_weight(tau, lengths, N) for tau in permutations(range(1, N + 1))
        )
    return total


def _enumerate_on_shape(shape: Shape) -> Iterator[SignedTableau]:
    N = shape.N
    lengths = [shape.row_length(r) for r in range(1, N + 1)]
    for tau in permutations(range(1, N + 1)):
        options = [
            combinations_with_replacement(range(tau[r], N + 1), lengths[r])
            for r in range(N)
        ]
        for rows in product(*options):
            yield SignedTableau(Tableau(shape, rows), tau)


def enumerate_staircase_tableaux(
    lam: Partition, n: int, N: int, cap: int = DEFAULT_CAP
) -> Iterator[SignedTableau]:
    """Deterministic exhaustive stream of the base family on the staircase extension.

    Refuses with :class:`CapExceededError` when the exact member count
    exceeds ``cap``.
    """
    count = count_staircase_tableaux(lam, N)
    if count > cap:
        raise CapExceededError(count, cap)
    yield from _enumerate_on_shape(make_extended(lam, N, n))


def enumerate_augmented_tableaux(
    lam: Partition, n: int, k: int, N: int, cap: int = DEFAULT_CAP
) -> Iterator[SignedTableau]:
    """Deterministic exhaustive stream of the augmented family, i ascending."""
    count = count_augmented_tableaux(lam, k, n, N)
    if count > cap:
        raise CapExceededError(count, cap)
    for i in range(1, N + 1):
        yield from _enumerate_on_shape(make_extended_row(lam, N, k * n, i, n))


def _as_rng(seed: int | random.Random) -> random.Random:
    return seed if isinstance(seed, random.Random) else random.Random(seed)


@lru_cache(maxsize=256)
def _staircase_weight_table(parts: tuple[int, ...], N: int):
    lengths = _row_lengths(Partition(parts), N)
    taus = list(permutations(range(1, N + 1)))
    cumulative = list(accumulate(_label_weight(tau, lengths, N) for tau in taus))
    return taus, cumulative


@lru_cache(maxsize=256)
def _augmented_weight_table(parts: tuple[int, ...], k: int, n: int, N: int):
    choices = []
    weights = []
    for i in range(1, N + 1):
        lengths = _row_lengths(Partition(parts), N, extra=k * n, row=i)
        for tau in permutations(range(1, N + 1)):
            choices.append((i, tau))
            weights.append(_label_weight(tau, lengths, N))
    return choices, list(accumulate(weights))


def _sample_rows(shape: Shape, tau: tuple[int, ...], rng: random.Random) -> SignedTableau:
    N = shape.N
    rows = []
    for r in range(1, N + 1):
        length = shape.row_length(r)
        lo = tau[r - 1]
        idx = rng.randrange(count_weakly_increasing(lo, N, length))
        rows.append(unrank_weakly_increasing(lo, N, length, idx))
    return SignedTableau(Tableau(shape, tuple(rows)), tau)


def sample_staircase_tableau(
    lam: Partition, n: int, N: int, seed: int | random.Random
) -> SignedTableau:
    """A uniformly random member of the base family, deterministic given a seed.

    Labelings are drawn proportionally to the number of fillings they admit,
    then each row is unranked uniformly, which makes the overall draw uniform
    over the family.
    """
    rng = _as_rng(seed)
    taus, cumulative = _staircase_weight_table(lam.parts, N)
    tau = taus[_weighted_index(cumulative, rng)]
    return _sample_rows(make_extended(lam, N, n), tau, rng)


def sample_augmented_tableau(
    lam: Partition, n: int, k: int, N: int, seed: int | random.Random
) -> SignedTableau:
    """A uniformly random member of the augmented family, deterministic given a seed."""
    rng = _as_rng(seed)
    choices, cumulative = _augmented_weight_table(lam.parts, k, n, N)
    i, tau = choices[_weighted_index(cumulative, rng)]
    return _sample_rows(make_extended_row(lam, N, k * n, i, n), tau, rng)


def _weighted_index(cumulative: list[int], rng: random.Random) -> int:
    total = cumulative[-1] if cumulative else 0
    if total <= 0:
        raise ValueError("family is empty")
    return bisect.bisect_right(cumulative, rng.randrange(total))


# ---------------------------------------------------------------------------
# The pairing maps
# ---------------------------------------------------------------------------


def _find_column_violation(st: SignedTableau) -> tuple[int, int] | None:
    """Rightmost, then highest, vertical pair with upper entry >= lower entry.

    Returns (row, prefix) where the violating upper cell is the prefix-th
    entry of its row (0-based index), or None when the filling is
    column-strict.  A cell's column is its row index offset by its position,
    so the pair at column c sits at positions q and q-1 of rows r and r+1.
    """
    shape = st.shape
    N = shape.N
    best: tuple[int, int] | None = None
    best_col = None
    for r in range(1, N):
        upper, lower = st.rows[r - 1], st.rows[r]
        # Shared columns: position q in row r aligns with q-1 in row r+1.
        for q in range(min(len(upper), len(lower) + 1) - 1, 0, -1):
            if upper[q] >= lower[q - 1]:
                col = (r - N) + q
                if best_col is None or col > best_col or (col == best_col and r < best[0]):
                    best = (r, q)
                    best_col = col
                break
    return best


def is_column_strict(st: SignedTableau) -> bool:
    return _find_column_violation(st) is None


def staircase_entries_standard(st: SignedTableau) -> bool:
    """True when every cell in columns <= 0 carries its own row index."""
    for r, row in enumerate(st.rows, start=1):
        staircase_cells = st.shape.N - r + 1
        if any(value != r for value in row[:staircase_cells]):
            return False
    return True


def i1(st: SignedTableau) -> SignedTableau:
    """First pairing map, on the base family.

    Locates the rightmost-then-highest column violation, exchanges the
    prefixes of the two rows along their diagonals, and transposes the two
    labels.  Column-strict members are fixed; for them the staircase entries
    are forced to their row index and the labels to the identity.
    """
    validate_member(st)
    if st.shape.kind != EXTENDED:
        raise MembershipError("the first pairing map acts on plain staircase extensions")
    hit = _find_column_violation(st)
    if hit is None:
        return st
    r, q = hit
    rows = [list(row) for row in st.rows]
    rows[r - 1][:q], rows[r][:q] = rows[r][:q], rows[r - 1][:q]
    tau = list(st.tau)
    tau[r - 1], tau[r] = tau[r], tau[r - 1]
    return _with_rows(st, st.shape, rows, tau)


def _augmented_params(st: SignedTableau) -> tuple[Partition, int, int, int, int]:
    shape = st.shape
    if shape.kind != EXTENDED_ROW:
        raise MembershipError("expected a staircase extension with a lengthened row")
    return shape.lam, shape.n, shape.N, shape.extra, shape.row


def i2(st: SignedTableau) -> SignedTableau:
    """Second pairing map, on the augmented family.

    Fixed when the lengthened row i starts with extra copies of its label.
    Otherwise the leading block ends with some value v > tau_i: the block
    moves to the left end of the row labeled v, that row slides right to make
    room, and the two labels swap.  Entries never change, and the vacated and
    filled cells cover the same contents, so the weight is preserved while
    the sign flips.
    """
    validate_member(st)
    lam, n, N, d, i = _augmented_params(st)
    row_i = st.rows[i - 1]
    label = st.tau[i - 1]
    if row_i[d - 1] == label:
        return st
    value = row_i[d - 1]
    j = st.tau.index(value) + 1
    rows = [list(row) for row in st.rows]
    removed = rows[i - 1][:d]
    rows[i - 1] = rows[i - 1][d:]
    rows[j - 1] = removed + rows[j - 1]
    tau = list(st.tau)
    tau[i - 1], tau[j - 1] = tau[j - 1], tau[i - 1]
    return _with_rows(st, make_extended_row(lam, N, d, j, n), rows, tau)


def i2_is_fixed(st: SignedTableau) -> bool:
    lam, n, N, d, i = _augmented_params(st)
    return st.rows[i - 1][d - 1] == st.tau[i - 1]


def extract_power_sum_factor(st: SignedTableau) -> tuple[SignedTableau, int]:
    """Split a fixed point of :func:`i2` into a base-family member and its row.

    Drops the leading block of the lengthened row i; the block contributes
    the k-th power of the product of all colors at weight tau_i, so the
    weight of the input equals that factor times the weight of the output.
    The labels, and hence the sign, are untouched.
    """
    if not i2_is_fixed(st):
        raise MembershipError("member is not fixed by the second pairing map")
    lam, n, N, d, i = _augmented_params(st)
    rows = [list(row) for row in st.rows]
    rows[i - 1] = rows[i - 1][d:]
    return _with_rows(st, make_extended(lam, N, n), rows, st.tau), i


def insert_power_sum_factor(st: SignedTableau, i: int, k: int) -> SignedTableau:
    """Inverse of :func:`extract_power_sum_factor`."""
    shape = st.shape
    if shape.kind != EXTENDED:
        raise MembershipError("expected a plain staircase extension")
    d = k * shape.n
    rows = [list(row) for row in st.rows]
    rows[i - 1] = [st.tau[i - 1]] * d + rows[i - 1]
    return _with_rows(st, make_extended_row(shape.lam, shape.N, d, i, shape.n), rows, st.tau)


def _equal_length_partner(st: SignedTableau) -> int | None:
    """The row sharing the lengthened row's cell count, if any.

    At most one duplicate length can occur and it must involve the lengthened
    row; both facts are asserted.
    """
    _, _, N, _, i = _augmented_params(st)
    lengths = [len(row) for row in st.rows]
    partners = [r for r in range(1, N + 1) if r != i and lengths[r - 1] == lengths[i - 1]]
    if len(partners) > 1:
        raise AssertionError(f"more than two rows share a length: {lengths}")
    others = [lengths[r - 1] for r in range(1, N + 1) if r != i]
    if len(set(others)) != len(others):
        raise AssertionError(f"two unlengthened rows share a length: {lengths}")
    return partners[0] if partners else None


def _slide_to_decreasing(rows: list, tau: list, i: int) -> int:
    """Slide row i northwest (swapping whole rows) until lengths strictly decrease.

    Rows start at column r - N, so exchanging the row tuples moves every cell
    one step along its diagonal.  Returns the number of slides.
    """
    p = i
    while p > 1 and len(rows[p - 2]) <= len(rows[p - 1]):
        rows[p - 2], rows[p - 1] = rows[p - 1], rows[p - 2]
        tau[p - 2], tau[p - 1] = tau[p - 1], tau[p - 2]
        p -= 1
    return i - p


def _lengths_to_partition(rows: list, N: int) -> Partition:
    parts = [len(rows[r - 1]) - (N - r + 1) for r in range(1, N + 1)]
    while parts and parts[-1] == 0:
        parts.pop()
    return Partition(tuple(parts))


def i3(st: SignedTableau) -> SignedTableau:
    """Third pairing map, on the augmented family.

    Equal-length branch: when the lengthened row i ties another row j, the
    two rows cover the same contents, so swapping their entries and labels
    preserves the weight and flips the sign.  Distinct-length branch: slide
    row i northwest until row lengths strictly decrease, landing on the
    staircase extension of a border-strip enlargement; apply :func:`i1`
    there; slide back.  Fixed points are the members whose slide lands on a
    column-strict filling.
    """
    validate_member(st)
    lam, n, N, d, i = _augmented_params(st)
    partner = _equal_length_partner(st)
    rows = [list(row) for row in st.rows]
    tau = list(st.tau)
    if partner is not None:
        j = partner
        rows[i - 1], rows[j - 1] = rows[j - 1], rows[i - 1]
        tau[i - 1], tau[j - 1] = tau[j - 1], tau[i - 1]
        return _with_rows(st, st.shape, rows, tau)
    slides = _slide_to_decreasing(rows, tau, i)
    sigma = _lengths_to_partition(rows, N)
    slid = _with_rows(st, make_extended(sigma, N, n), rows, tau)
    paired = i1(slid)
    rows = [list(row) for row in paired.rows]
    tau = list(paired.tau)
    for p in range(i - slides, i):
        rows[p - 1], rows[p] = rows[p], rows[p - 1]
        tau[p - 1], tau[p] = tau[p], tau[p - 1]
    return _with_rows(st, st.shape, rows, tau)


def slide_to_border_strip(st: SignedTableau) -> tuple[Partition, int, SignedTableau]:
    """Carry a fixed point of :func:`i3` to its border-strip staircase family.

    Returns (sigma, height, member): sigma enlarges the base partition by a
    border strip whose height equals the number of slides, and the member is
    a column-strict (hence :func:`i1`-fixed) element of the base family of
    sigma with the same weight.  The sign picks up (-1)**height.
    """
    validate_member(st)
    lam, n, N, d, i = _augmented_params(st)
    if _equal_length_partner(st) is not None:
        raise MembershipError("member has an equal-length row pair, so it is not fixed")
    rows = [list(row) for row in st.rows]
    tau = list(st.tau)
    slides = _slide_to_decreasing(rows, tau, i)
    sigma = _lengths_to_partition(rows, N)
    slid = _with_rows(st, make_extended(sigma, N, n), rows, tau)
    if not is_column_strict(slid):
        raise MembershipError("member is not fixed by the third pairing map")
    return sigma, slides, slid


def slide_from_border_strip(member: SignedTableau, lam: Partition) -> SignedTableau:
    """Inverse of :func:`slide_to_border_strip` for the given base partition."""
    shape = member.shape
    if shape.kind != EXTENDED:
        raise MembershipError("expected a plain staircase extension")
    sigma, N, n = shape.lam, shape.N, shape.n
    if not sigma.contains(lam):
        raise ValueError(f"{sigma} does not contain {lam}")
    strip_rows = [r for r in range(1, max(len(sigma), len(lam)) + 1) if sigma.part(r) > lam.part(r)]
    if not strip_rows:
        raise ValueError(f"{sigma} equals {lam}; no strip to undo")
    top, bottom = strip_rows[0], strip_rows[-1]
    if strip_rows != list(range(top, bottom + 1)):
        raise ValueError(f"{sigma} minus {lam} does not occupy contiguous rows")
    d = sigma.size - lam.size
    rows = [list(row) for row in member.rows]
    tau = list(member.tau)
    for p in range(top, bottom):
        rows[p - 1], rows[p] = rows[p], rows[p - 1]
        tau[p - 1], tau[p] = tau[p], tau[p - 1]
    return _with_rows(member, make_extended_row(lam, N, d, bottom, n), rows, tau)


def i4(st: SignedTableau, shift: ShiftParams) -> SignedTableau:
    """Fourth pairing map, on augmented members whose lengthened row stays low.

    Requires every entry of the lengthened row i to be at most N - k*l.  The
    leading block of row i moves to the row labeled m + k*l, where m is the
    block's last entry; the remainder of row i slides left k*n columns with
    k*l added to each entry, and the receiving row slides right with k*l
    subtracted.  Entry compensation exactly offsets the column jumps, so the
    shifted weight is preserved while the sign flips.  For l >= 1 the map has
    no fixed points.
    """
    validate_member(st)
    lam, n, N, d, i = _augmented_params(st)
    if shift.n != n:
        raise ValueError(f"shift modulus {shift.n} does not match shape modulus {n}")
    if d % n != 0:
        raise ValueError(f"appended cell count {d} is not a multiple of {n}")
    k = d // n
    kl = k * shift.l
    row_i = st.rows[i - 1]
    if row_i[-1] > N - kl:
        raise MembershipError(
            f"row {i} reaches {row_i[-1]}, above the bound {N - kl}"
        )
    removed = list(row_i[:d])
    m = removed[-1]
    j = st.tau.index(m + kl) + 1
    rows = [list(row) for row in st.rows]
    rows[i - 1] = [value + kl for value in row_i[d:]]
    rows[j - 1] = removed + [value - kl for value in rows[j - 1]]
    tau = list(st.tau)
    tau[i - 1], tau[j - 1] = tau[j - 1], tau[i - 1]
    return _with_rows(st, make_extended_row(lam, N, d, j, n), rows, tau)


def in_low_family(st: SignedTableau, shift: ShiftParams) -> bool:
    """True when the lengthened row stays at or below N - k*l."""
    _, n, N, d, i = _augmented_params(st)
    return st.rows[i - 1][-1] <= N - (d // n) * shift.l


# ---------------------------------------------------------------------------
# Signed weight sums
# ---------------------------------------------------------------------------


def staircase_signed_sum(
    lam: Partition, n: int, N: int, l: int = 0, cap: int = DEFAULT_CAP
) -> Polynomial:
    """Sum of sgn(tau) times the (shifted) weight over the base family."""
    terms: dict[Monomial, int] = {}
    for st in enumerate_staircase_tableaux(lam, n, N, cap):
        m = st.monomial(l)
        terms[m] = terms.get(m, 0) + st.sign
    return Polynomial(n, terms)


def augmented_signed_sum(
    lam: Partition, n: int, k: int, N: int, l: int = 0, cap: int = DEFAULT_CAP
) -> Polynomial:
    """Sum of sgn(tau) times the (shifted) weight over the augmented family.

    This is the generating function that equals both the power-sum product
    and the signed border-strip sum.
    """
    terms: dict[Monomial, int] = {}
    for st in enumerate_augmented_tableaux(lam, n, k, N, cap):
        m = st.monomial(l)
        terms[m] = terms.get(m, 0) + st.sign
    return Polynomial(n, terms)
