"""Semistandard tableaux and the generating-function builders.

The weight of a filled cell is its entry; the monomial attached to a tableau
multiplies one variable ``x(color, weight)`` per cell.  Shifted weights add
``l * content / n`` to the entry, where the content is the true ``col - row``
of the cell (not reduced mod n).  Keeping the raw content makes the shifted
weight invariant under every move that shifts a cell by a multiple of n
columns while compensating the entry, which is exactly what the pairing maps
in :mod:`loopschur.involutions` do.  On an ordinary Young diagram all shifted
weights stay positive; on staircase extensions they may reach zero or below.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator

from .polyring import Monomial, Polynomial
from .shapes import Partition, Shape, make_extended, make_young


@dataclass(frozen=True, slots=True)
class ShiftParams:
    """Modulus ``n`` and shift ``l`` with 0 <= l < n."""

    n: int
    l: int = 0

    def __post_init__(self):
        if self.n < 1:
            raise ValueError(f"modulus must be positive, got {self.n}")
        if not 0 <= self.l < self.n:
            raise ValueError(f"shift must satisfy 0 <= l < {self.n}, got {self.l}")


@dataclass(frozen=True, slots=True)
class Tableau:
    """An assignment of positive integers to the cells of a shape.

    ``rows[r-1]`` lists the entries of row r from its leftmost column on.
    """

    shape: Shape
    rows: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        expected = [self.shape.row_length(r) for r in range(1, self.shape.num_rows + 1)]
        got = [len(row) for row in self.rows]
        if expected != got:
            raise ValueError(f"row lengths {got} do not match shape rows {expected}")

    def entry(self, r: int, c: int) -> int:
        lo, hi = self.shape.bounds(r)
        if not lo <= c <= hi:
            raise ValueError(f"cell ({r}, {c}) outside row bounds {lo}..{hi}")
        return self.rows[r - 1][c - lo]

    def cells(self) -> Iterator[tuple[int, int, int]]:
        """Yield (row, col, entry) in reading order."""
        for r in range(1, self.shape.num_rows + 1):
            lo, _ = self.shape.bounds(r)
            for idx, value in enumerate(self.rows[r - 1]):
                yield r, lo + idx, value


def enumerate_ssyt(lam: Partition, N: int, n: int = 1) -> Iterator[Tableau]:
    """Stream all semistandard tableaux of shape ``lam`` with entries in [1, N].

    Rows weakly increase left to right, columns strictly increase top to
    bottom.  Emission is lexicographic in the row-by-row reading word.  The
    stream is empty when N < len(lam); the empty partition yields exactly the
    empty tableau.
    """
    shape = make_young(lam, n)
    if not lam.parts:
        yield Tableau(shape, ())
        return
    if len(lam) > N:
        return
    rows: list[list[int]] = [[0] * p for p in lam.parts]

    def fill(r: int, c: int) -> Iterator[Tableau]:
        if r == len(lam.parts):
            yield Tableau(shape, tuple(tuple(row) for row in rows))
            return
        next_r, next_c = (r, c + 1) if c + 1 < lam.parts[r] else (r + 1, 0)
        lo = 1
        if c > 0:
            lo = max(lo, rows[r][c - 1])
        if r > 0 and c < lam.parts[r - 1]:
            lo = max(lo, rows[r - 1][c] + 1)
        for value in range(lo, N + 1):
            rows[r][c] = value
            yield from fill(next_r, next_c)
        rows[r][c] = 0

    yield from fill(0, 0)


def weight_monomial(t: Tableau) -> Monomial:
    """Product over cells of ``x(color, entry)``."""
    n = t.shape.n
    return Monomial.from_variables(
        ((c - r) % n, n * w) for r, c, w in t.cells()
    )


def shifted_weight_monomial(t: Tableau, shift: ShiftParams) -> Monomial:
    """Product over cells of ``x(color, entry + l * content / n)``.

    Weight numerators are ``n * entry + l * (col - row)``; the color index is
    still the content mod n.  With l = 0 this is :func:`weight_monomial`.
    """
    if shift.n != t.shape.n:
        raise ValueError(f"shift modulus {shift.n} does not match shape modulus {t.shape.n}")
    n, l = shift.n, shift.l
    return Monomial.from_variables(
        ((c - r) % n, n * w + l * (c - r)) for r, c, w in t.cells()
    )


def _monomial_sum(n: int, monomials: Iterator[Monomial]) -> Polynomial:
    terms: dict[Monomial, int] = {}
    for m in monomials:
        terms[m] = terms.get(m, 0) + 1
    return Polynomial(n, terms)


def loop_schur(lam: Partition, n: int, N: int) -> Polynomial:
    """Truncated loop Schur function: the weight generating function of
    semistandard tableaux of ``lam`` with entries at most N, colored mod n."""
    return _monomial_sum(n, (weight_monomial(t) for t in enumerate_ssyt(lam, N, n)))


def shifted_loop_schur(lam: Partition, shift: ShiftParams, N: int) -> Polynomial:
    """Truncated shifted loop Schur function over the same tableau family."""
    return _monomial_sum(
        shift.n,
        (shifted_weight_monomial(t, shift) for t in enumerate_ssyt(lam, N, shift.n)),
    )


def loop_power_sum(k: int, n: int, N: int) -> Polynomial:
    """The truncated loop power sum: sum over j <= N of (prod_i x(i, j))^k."""
    if k < 1:
        raise ValueError(f"exponent must be positive, got {k}")
    terms: dict[Monomial, int] = {}
    for j in range(1, N + 1):
        m = Monomial.from_exponents({(i, n * j): k for i in range(n)})
        terms[m] = terms.get(m, 0) + 1
    return Polynomial(n, terms)


def standard_staircase(N: int, n: int) -> Tableau:
    """The tableau on the empty-partition staircase whose row j is filled with j."""
    if N < 1:
        raise ValueError(f"need at least one row, got {N}")
    shape = make_extended(Partition(), N, n)
    return Tableau(shape, tuple(tuple([j] * (N - j + 1)) for j in range(1, N + 1)))


def staircase_monomial(N: int, n: int, l: int = 0) -> Monomial:
    """(Shifted) weight monomial of the standard staircase filling.

    This is the common monomial factor carried by every fixed point of the
    first pairing map, and the minimum-degree term among row-weakly-increasing
    fillings of the staircase.
    """
    return shifted_weight_monomial(standard_staircase(N, n), ShiftParams(n, l))
