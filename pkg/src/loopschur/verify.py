"""Identity verifiers, the classical determinant oracle, and the grid runner.

Every verifier returns a :class:`VerificationReport` whose canonical rendering
is byte-stable: equal inputs produce identical documents.  Wall time is
measured but excluded from canonical output.
"""

from __future__ import annotations

import json
import time
from dataclasses import dataclass, field
from fractions import Fraction

from .errors import ConfigError, MembershipError, PreconditionError
from .involutions import (
    DEFAULT_CAP,
    SignedTableau,
    augmented_signed_sum,
    enumerate_augmented_tableaux,
    enumerate_staircase_tableaux,
    extract_power_sum_factor,
    i1,
    i2,
    i2_is_fixed,
    i3,
    i4,
    in_low_family,
    insert_power_sum_factor,
    is_column_strict,
    sample_augmented_tableau,
    sample_staircase_tableau,
    slide_from_border_strip,
    slide_to_border_strip,
    staircase_entries_standard,
    staircase_signed_sum,
)
from .polyring import (
    Monomial,
    Polynomial,
    poly_mul,
    specialize_forget_color,
    to_document,
)
from .shapes import Partition, enumerate_border_strips, is_border_strip
from .tableaux import (
    ShiftParams,
    loop_power_sum,
    loop_schur,
    shifted_loop_schur,
    staircase_monomial,
)


@dataclass
class VerificationReport:
    """Outcome of one check.  ``passed`` is true iff the witness is absent."""

    check: str
    params: dict
    passed: bool
    witness: dict | None = None
    details: dict = field(default_factory=dict)
    wall_time_s: float = 0.0

    def to_document(self, include_timing: bool = False) -> dict:
        doc = {
            "check": self.check,
            "params": self.params,
            "pass": self.passed,
            "witness": self.witness,
            "details": self.details,
        }
        if include_timing:
            doc["wall_time_s"] = round(self.wall_time_s, 6)
        return doc

    def to_json(self) -> str:
        return json.dumps(self.to_document(), sort_keys=True, separators=(",", ":"))

    def text(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        params = " ".join(f"{k}={v}" for k, v in sorted(self.params.items()))
        extras = " ".join(f"{k}={v}" for k, v in sorted(self.details.items()))
        line = f"{status} {self.check} {params}"
        if extras:
            line += f" | {extras}"
        if not self.passed and self.witness is not None:
            line += f" | witness={json.dumps(self.witness, sort_keys=True, separators=(',', ':'))}"
        return line


def _difference_witness(diff: Polynomial) -> dict | None:
    if diff.is_zero:
        return None
    return {"difference": to_document(diff)}


# ---------------------------------------------------------------------------
# Classical oracle
# ---------------------------------------------------------------------------

_H_CACHE: dict[int, list[Polynomial]] = {}
_SCHUR_CACHE: dict[tuple[tuple[int, ...], int], Polynomial] = {}


def _homogeneous_basis(N: int, max_m: int) -> list[Polynomial]:
    """Complete homogeneous sums h_0..h_max in y_1..y_N, by the one-variable
    recurrence h_m(y_1..y_j) = h_m(y_1..y_{j-1}) + y_j h_{m-1}(y_1..y_j)."""
    cached = _H_CACHE.get(N)
    if cached is not None and len(cached) > max_m:
        return cached
    hs = [Polynomial.one(1)] + [Polynomial.zero(1)] * max_m
    for j in range(1, N + 1):
        y_j = Polynomial.from_term(1, Monomial.from_exponents({(0, j): 1}))
        for m in range(1, max_m + 1):
            hs[m] = hs[m] + y_j * hs[m - 1]
    _H_CACHE[N] = hs
    return hs


def _determinant(entries: list[list[Polynomial]]) -> Polynomial:
    size = len(entries)
    if size == 0:
        return Polynomial.one(1)
    memo: dict[tuple[int, ...], Polynomial] = {}

    def minor(cols: tuple[int, ...]) -> Polynomial:
        row = size - len(cols)
        if not cols:
            return Polynomial.one(1)
        if cols in memo:
            return memo[cols]
        total = Polynomial.zero(1)
        for t, c in enumerate(cols):
            term = entries[row][c] * minor(cols[:t] + cols[t + 1:])
            total = total + term if t % 2 == 0 else total - term
        memo[cols] = total
        return total

    return minor(tuple(range(size)))


def classical_schur(lam: Partition, N: int) -> Polynomial:
    """Classical Schur polynomial in y_1..y_N via the Jacobi-Trudi determinant.

    Entirely determinant-based: shares no code with the tableau enumerators,
    so it serves as an independent oracle for the color-forgetting
    specialization of the loop Schur builders.
    """
    key = (lam.parts, N)
    if key in _SCHUR_CACHE:
        return _SCHUR_CACHE[key]
    ell = len(lam)
    if ell == 0:
        result = Polynomial.one(1)
    elif ell > N:
        result = Polynomial.zero(1)
    else:
        max_m = lam.part(1) + ell - 1
        hs = _homogeneous_basis(N, max_m)
        zero = Polynomial.zero(1)
        matrix = [
            [
                hs[lam.part(i) - i + j] if 0 <= lam.part(i) - i + j <= max_m else zero
                for j in range(1, ell + 1)
            ]
            for i in range(1, ell + 1)
        ]
        result = _determinant(matrix)
    _SCHUR_CACHE[key] = result
    return result


# ---------------------------------------------------------------------------
# Top-level identity verifiers
# ---------------------------------------------------------------------------


def _signed_border_strip_sum(lam: Partition, n: int, k: int, N: int, l: int = 0) -> tuple[Polynomial, int]:
    total = Polynomial.zero(n)
    strips = enumerate_border_strips(lam, k * n)
    for addition in strips:
        if l == 0:
            part = loop_schur(addition.sigma, n, N)
        else:
            part = shifted_loop_schur(addition.sigma, ShiftParams(n, l), N)
        total = total + part if addition.height % 2 == 0 else total - part
    return total, len(strips)


def verify_murnaghan_nakayama(lam: Partition, n: int, k: int, N: int) -> VerificationReport:
    """Check that the power-sum product equals the signed border-strip sum.

    Both sides are truncated at N; equality must be exact.  The common
    staircase monomial factor is omitted, which is equivalent because
    dividing by a monomial is exact.
    """
    if n < 1 or k < 1:
        raise PreconditionError(f"n and k must be positive, got n={n}, k={k}")
    required = k * n + len(lam)
    if N < required:
        raise PreconditionError(
            f"need N >= {required} for lambda={lam}, n={n}, k={k}; got N={N}",
            required_truncation=required,
        )
    start = time.perf_counter()
    lhs = poly_mul(loop_power_sum(k, n, N), loop_schur(lam, n, N))
    rhs, strip_count = _signed_border_strip_sum(lam, n, k, N)
    diff = lhs - rhs
    return VerificationReport(
        check="mn-verify",
        params={"lambda": str(lam), "n": n, "k": k, "N": N},
        passed=diff.is_zero,
        witness=_difference_witness(diff),
        details={"strips": strip_count, "lhs_terms": len(lhs), "rhs_terms": len(rhs)},
        wall_time_s=time.perf_counter() - start,
    )


def verify_degree_bound(lam: Partition, n: int, k: int, N: int, l: int) -> VerificationReport:
    """Check the degree floor of the signed shifted border-strip sum.

    The sum must have minimum degree at least N - k*n - (l/n)*N; the zero
    polynomial passes with infinite degree.  The proof actually yields the
    stronger floor N - k*l - (l/n)*N, reported alongside for reference.
    """
    if not 1 <= l < n:
        raise PreconditionError(
            f"the degree bound applies to shifts 1 <= l < n, got l={l}, n={n}"
        )
    if k < 1:
        raise PreconditionError(f"k must be positive, got {k}")
    start = time.perf_counter()
    total, strip_count = _signed_border_strip_sum(lam, n, k, N, l)
    achieved = total.min_degree()
    stated = Fraction(N * (n - l), n) - k * n
    stronger = Fraction(N * (n - l), n) - k * l
    passed = achieved >= stated
    witness = None
    if not passed:
        low_terms = [
            {"coeff": str(c), "vars": [list(v) for v in m.vars]}
            for m, c in total.terms()
            if m.degree(n) == achieved
        ]
        witness = {"min_degree_terms": low_terms}
    return VerificationReport(
        check="thm2-verify",
        params={"lambda": str(lam), "n": n, "k": k, "N": N, "l": l},
        passed=passed,
        witness=witness,
        details={
            "achieved_min_degree": str(achieved),
            "stated_bound": str(stated),
            "proof_bound": str(stronger),
            "strips": strip_count,
            "terms": len(total),
        },
        wall_time_s=time.perf_counter() - start,
    )


def verify_expansion(
    which: int, lam: Partition, n: int, k: int, N: int, cap: int = DEFAULT_CAP
) -> VerificationReport:
    """Check one of the three signed-family expansion identities exactly.

    1: the base-family signed sum equals the staircase monomial times the
       loop Schur function.
    2: the augmented-family signed sum equals the power sum times that
       product.
    3: the augmented-family signed sum equals the signed border-strip sum
       times the staircase monomial.
    """
    if which not in (1, 2, 3):
        raise PreconditionError(f"identity index must be 1, 2 or 3, got {which}")
    if which != 1 and k < 1:
        raise PreconditionError(f"k must be positive, got {k}")
    start = time.perf_counter()
    staircase = Polynomial.from_term(n, staircase_monomial(N, n))
    if which == 1:
        lhs = staircase_signed_sum(lam, n, N, cap=cap)
        rhs = staircase * loop_schur(lam, n, N)
    elif which == 2:
        lhs = augmented_signed_sum(lam, n, k, N, cap=cap)
        rhs = loop_power_sum(k, n, N) * staircase * loop_schur(lam, n, N)
    else:
        lhs = augmented_signed_sum(lam, n, k, N, cap=cap)
        strip_sum, _ = _signed_border_strip_sum(lam, n, k, N)
        rhs = staircase * strip_sum
    diff = lhs - rhs
    params = {"which": which, "lambda": str(lam), "n": n, "N": N}
    if which != 1:
        params["k"] = k
    return VerificationReport(
        check="lemma-verify",
        params=params,
        passed=diff.is_zero,
        witness=_difference_witness(diff),
        details={"lhs_terms": len(lhs), "rhs_terms": len(rhs)},
        wall_time_s=time.perf_counter() - start,
    )


def check_specialization(lam: Partition, n: int, N: int) -> VerificationReport:
    """Check that forgetting colors turns the loop Schur function into the
    classical Schur polynomial computed by the determinant oracle."""
    start = time.perf_counter()
    specialized = specialize_forget_color(loop_schur(lam, n, N))
    oracle = classical_schur(lam, N)
    diff = specialized - oracle
    return VerificationReport(
        check="specialize-check",
        params={"lambda": str(lam), "n": n, "N": N},
        passed=diff.is_zero,
        witness=_difference_witness(diff),
        details={"terms": len(oracle)},
        wall_time_s=time.perf_counter() - start,
    )


# ---------------------------------------------------------------------------
# Involution checking
# ---------------------------------------------------------------------------


def _power_sum_factor(n: int, value: int, k: int) -> Monomial:
    return Monomial.from_exponents({(c, n * value): k for c in range(n)})


def _check_i1_member(st: SignedTableau, failures: list) -> bool:
    image = i1(st)
    again = i1(image)
    if again != st:
        failures.append(("involution", st))
        return False
    fixed = image == st
    if fixed != is_column_strict(st):
        failures.append(("fixed_iff_column_strict", st))
        return False
    if fixed:
        if not staircase_entries_standard(st) or st.tau != tuple(range(1, st.shape.N + 1)):
            failures.append(("fixed_point_shape", st))
            return False
    else:
        if image.sign != -st.sign or image.monomial() != st.monomial():
            failures.append(("sign_or_weight", st))
            return False
        if st.shape.n > 1 and image.monomial(1) != st.monomial(1):
            failures.append(("shifted_weight", st))
            return False
    return fixed


def _check_i2_member(st: SignedTableau, failures: list) -> bool:
    image = i2(st)
    if i2(image) != st:
        failures.append(("involution", st))
        return False
    fixed = image == st
    if fixed != i2_is_fixed(st):
        failures.append(("fixed_point_rule", st))
        return False
    if fixed:
        base, i = extract_power_sum_factor(st)
        k = st.shape.extra // st.shape.n
        factor = _power_sum_factor(st.shape.n, st.tau[i - 1], k)
        if base.sign != st.sign or factor * base.monomial() != st.monomial():
            failures.append(("factor_weight_law", st))
            return False
        if insert_power_sum_factor(base, i, k) != st:
            failures.append(("factor_roundtrip", st))
            return False
    else:
        if image.sign != -st.sign or image.monomial() != st.monomial():
            failures.append(("sign_or_weight", st))
            return False
    return fixed


def _check_i3_member(st: SignedTableau, failures: list, l: int, lam: Partition) -> bool:
    image = i3(st)
    if i3(image) != st:
        failures.append(("involution", st))
        return False
    fixed = image == st
    if fixed:
        sigma, height, member = slide_to_border_strip(st)
        if not is_border_strip(sigma, lam, st.shape.extra):
            failures.append(("strip_shape", st))
            return False
        if not is_column_strict(member) or i1(member) != member:
            failures.append(("landing_not_fixed", st))
            return False
        sign_factor = -1 if height % 2 else 1
        if st.sign != sign_factor * member.sign or member.monomial() != st.monomial():
            failures.append(("slide_sign_or_weight", st))
            return False
        if slide_from_border_strip(member, lam) != st:
            failures.append(("slide_roundtrip", st))
            return False
    else:
        if image.sign != -st.sign or image.monomial() != st.monomial():
            failures.append(("sign_or_weight", st))
            return False
        if l and image.monomial(l) != st.monomial(l):
            failures.append(("shifted_weight", st))
            return False
    return fixed


def _check_i4_member(st: SignedTableau, failures: list, shift: ShiftParams) -> bool:
    image = i4(st, shift)
    if i4(image, shift) != st:
        failures.append(("involution", st))
        return False
    if not in_low_family(image, shift):
        failures.append(("closure", st))
        return False
    if shift.l >= 1 and image == st:
        failures.append(("unexpected_fixed_point", st))
        return False
    if image != st:
        if image.sign != -st.sign:
            failures.append(("sign", st))
            return False
        if image.monomial(shift.l) != st.monomial(shift.l):
            failures.append(("shifted_weight", st))
            return False
    return image == st


def check_involution(
    which: str,
    lam: Partition,
    n: int,
    k: int,
    N: int,
    l: int = 0,
    mode: str = "exhaustive",
    samples: int = 1000,
    seed: int = 0,
    cap: int = DEFAULT_CAP,
) -> VerificationReport:
    """Exercise one pairing map over its family and report property failures.

    Exhaustive mode walks the whole family (subject to the cap); sampled mode
    draws the requested number of members with the given seed.  Checked per
    member: the involution property, closure in the family, sign reversal and
    weight preservation off fixed points, and the fixed-point behavior
    specific to the map.  The fourth map additionally requires l >= 1 and, in
    exhaustive mode, the members it cannot reach must carry the whole signed
    shifted sum.
    """
    which = which.upper()
    if which not in ("I1", "I2", "I3", "I4"):
        raise PreconditionError(f"unknown pairing map {which!r}")
    if which == "I4" and not 1 <= l < n:
        raise PreconditionError(f"the fourth map needs 1 <= l < n, got l={l}, n={n}")
    if mode not in ("exhaustive", "samples"):
        raise PreconditionError(f"mode must be 'exhaustive' or 'samples', got {mode!r}")
    start = time.perf_counter()
    failures: list[tuple[str, SignedTableau]] = []
    fixed_count = 0
    total = 0
    shift = ShiftParams(n, l)

    def handle(st: SignedTableau) -> None:
        nonlocal fixed_count, total
        total += 1
        if which == "I1":
            fixed = _check_i1_member(st, failures)
        elif which == "I2":
            fixed = _check_i2_member(st, failures)
        elif which == "I3":
            fixed = _check_i3_member(st, failures, l, lam)
        else:
            fixed = _check_i4_member(st, failures, shift)
        if fixed:
            fixed_count += 1

    if mode == "exhaustive":
        if which == "I1":
            for st in enumerate_staircase_tableaux(lam, n, N, cap):
                handle(st)
        elif which in ("I2", "I3"):
            for st in enumerate_augmented_tableaux(lam, n, k, N, cap):
                handle(st)
        else:
            unreachable: dict[Monomial, int] = {}
            for st in enumerate_augmented_tableaux(lam, n, k, N, cap):
                if in_low_family(st, shift):
                    handle(st)
                else:
                    m = st.monomial(l)
                    unreachable[m] = unreachable.get(m, 0) + st.sign
            whole = augmented_signed_sum(lam, n, k, N, l, cap)
            if Polynomial(n, unreachable) != whole:
                failures.append(("unreachable_sum_mismatch", None))
    else:
        import random

        rng = random.Random(seed)
        for _ in range(samples):
            if which == "I1":
                handle(sample_staircase_tableau(lam, n, N, rng))
            elif which in ("I2", "I3"):
                handle(sample_augmented_tableau(lam, n, k, N, rng))
            else:
                attempts = 0
                while True:
                    st = sample_augmented_tableau(lam, n, k, N, rng)
                    if in_low_family(st, shift):
                        break
                    attempts += 1
                    if attempts > 100000:
                        raise MembershipError("could not sample a low-family member")
                handle(st)

    witness = None
    if failures:
        name, member = failures[0]
        witness = {
            "property": name,
            "member": member.to_document() if member is not None else None,
        }
    params = {"which": which, "lambda": str(lam), "n": n, "k": k, "N": N, "mode": mode}
    if l:
        params["l"] = l
    if mode == "samples":
        params["samples"] = samples
        params["seed"] = seed
    return VerificationReport(
        check="involution-check",
        params=params,
        passed=not failures,
        witness=witness,
        details={"checked": total, "fixed": fixed_count, "moved": total - fixed_count,
                 "failures": len(failures)},
        wall_time_s=time.perf_counter() - start,
    )


# ---------------------------------------------------------------------------
# Grid runner
# ---------------------------------------------------------------------------

GRID_KINDS = ("mn", "thm2", "lemma", "involution", "specialize")


@dataclass(frozen=True)
class GridEntry:
    kind: str
    options: dict
    line: int = 0


def parse_grid_config(text: str) -> list[GridEntry]:
    """Parse the line-oriented grid configuration.

    Each non-blank, non-comment line is ``<kind> key=value ...``; kinds are
    mn, thm2, lemma, involution and specialize.
    """
    entries = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        tokens = line.split()
        kind = tokens[0]
        if kind not in GRID_KINDS:
            raise ConfigError(f"unknown check kind {kind!r}", lineno)
        options = {}
        for token in tokens[1:]:
            if "=" not in token:
                raise ConfigError(f"expected key=value, got {token!r}", lineno)
            key, _, value = token.partition("=")
            if key in options:
                raise ConfigError(f"duplicate key {key!r}", lineno)
            options[key] = value
        entries.append(GridEntry(kind, options, lineno))
    return entries


def _opt_int(entry: GridEntry, key: str, default: int | None = None) -> int:
    if key not in entry.options:
        if default is None:
            raise ConfigError(f"{entry.kind} requires {key}=", entry.line)
        return default
    try:
        return int(entry.options[key])
    except ValueError:
        raise ConfigError(f"bad integer for {key}: {entry.options[key]!r}", entry.line)


def _opt_partition(entry: GridEntry) -> Partition:
    if "lambda" not in entry.options:
        raise ConfigError(f"{entry.kind} requires lambda=", entry.line)
    try:
        return Partition.from_text(entry.options["lambda"])
    except ValueError as exc:
        raise ConfigError(str(exc), entry.line)


def execute_entry(entry: GridEntry, seed: int = 0, cap: int = DEFAULT_CAP) -> VerificationReport:
    allowed = {
        "mn": {"lambda", "n", "k", "N"},
        "thm2": {"lambda", "n", "k", "N", "l"},
        "lemma": {"which", "lambda", "n", "k", "N", "cap"},
        "involution": {"which", "lambda", "n", "k", "N", "l", "mode", "samples", "seed", "cap"},
        "specialize": {"lambda", "n", "N"},
    }[entry.kind]
    for key in entry.options:
        if key not in allowed:
            raise ConfigError(f"{entry.kind} does not accept {key}=", entry.line)
    lam = _opt_partition(entry)
    n = _opt_int(entry, "n")
    if entry.kind == "mn":
        return verify_murnaghan_nakayama(lam, n, _opt_int(entry, "k"), _opt_int(entry, "N"))
    if entry.kind == "thm2":
        return verify_degree_bound(
            lam, n, _opt_int(entry, "k"), _opt_int(entry, "N"), _opt_int(entry, "l")
        )
    if entry.kind == "lemma":
        return verify_expansion(
            _opt_int(entry, "which"), lam, n, _opt_int(entry, "k", 1),
            _opt_int(entry, "N"), _opt_int(entry, "cap", cap),
        )
    if entry.kind == "involution":
        which = entry.options.get("which")
        if which is None:
            raise ConfigError("involution requires which=", entry.line)
        mode = entry.options.get("mode", "exhaustive")
        return check_involution(
            which, lam, n, _opt_int(entry, "k", 1), _opt_int(entry, "N"),
            l=_opt_int(entry, "l", 0), mode=mode,
            samples=_opt_int(entry, "samples", 1000),
            seed=_opt_int(entry, "seed", seed), cap=_opt_int(entry, "cap", cap),
        )
    return check_specialization(lam, n, _opt_int(entry, "N"))


def run_grid(entries: list[GridEntry], seed: int = 0, cap: int = DEFAULT_CAP) -> list[VerificationReport]:
    """Execute every entry in order; deterministic for a fixed seed."""
    return [execute_entry(entry, seed=seed, cap=cap) for entry in entries]


DEFAULT_GRID = """\
# Default verification grid: one quick instance of every check kind.
mn lambda=0 n=1 k=1 N=2
mn lambda=1 n=2 k=1 N=4
mn lambda=2,1 n=3 k=1 N=5
thm2 lambda=0 n=2 k=1 N=5 l=1
thm2 lambda=1 n=3 k=1 N=6 l=2
lemma which=1 lambda=1 n=2 N=3
lemma which=2 lambda=0 n=1 k=1 N=2
lemma which=3 lambda=1 n=2 k=1 N=3
involution which=I1 lambda=1 n=2 N=3 mode=exhaustive
involution which=I2 lambda=0 n=1 k=1 N=2 mode=exhaustive
involution which=I3 lambda=1 n=2 k=1 N=3 mode=exhaustive
involution which=I4 lambda=0 n=2 k=1 N=3 l=1 mode=exhaustive
specialize lambda=2,1 n=3 N=4
"""


def default_grid_config() -> str:
    return DEFAULT_GRID
