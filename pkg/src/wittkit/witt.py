"""The Witt transform of a truncated power series and its identity suite.

The order-r transform of f is (1/r) sum_{d|r} mu(d) f(z^d)^{r/d}; its
z^j coefficient is written m(j, r).  For an integer-coefficient input the
transform is again integral, and the division by r is performed exactly so
that any violation raises instead of silently producing fractions.

verify_identity evaluates both sides of the classical identities for the
transform (product rule, power rule, sign rule, Moebius inversion, and the
necklace-polynomial specializations) at a shared truncation and reports
the first differing coefficient, if any.  monotonicity_scan checks the
coefficient-monotonicity families on finite windows; it certifies the
claims on the scanned window only.
"""

from __future__ import annotations

import math
import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, List, Optional, Sequence, Tuple

from .arith import divisors, moebius
from .errors import IntegralityError, PreconditionError
from .necklace import necklace_poly
from .series import Coeff, TruncatedSeries

__all__ = [
    "witt_transform",
    "c_transform",
    "witt_table",
    "WittTable",
    "moebius_invert_series",
    "moebius_sum_series",
    "IdentityReport",
    "verify_identity",
    "IDENTITY_IDS",
    "ScanReport",
    "monotonicity_scan",
    "SCAN_FAMILIES",
]


def c_transform(f: TruncatedSeries, r: int) -> TruncatedSeries:
    """Normalized transform sum_{d|r} mu(d) f(z^d)^{r/d} (r times the
    Witt transform); always integral for integral f."""
    if r < 1:
        raise ValueError(f"transform order must be >= 1, got {r}")
    acc = TruncatedSeries.zero(f.order)
    for d in divisors(r):
        mu = moebius(d)
        if mu == 0:
            continue
        term = f.inflate(d) ** (r // d)
        acc = acc + (term if mu == 1 else -term)
    return acc


def witt_transform(f: TruncatedSeries, r: int) -> TruncatedSeries:
    """Order-r Witt transform of f at f's truncation order.

    Integer-coefficient input must give an integer-coefficient result;
    a failed exact division raises IntegralityError (a bug, not bad input).
    """
    acc = c_transform(f, r)
    if f.is_integral():
        try:
            return acc.divexact(r)
        except IntegralityError as exc:
            raise IntegralityError(
                f"witt_transform(r={r}) of an integral series is not integral: {exc}"
            ) from exc
    return acc * Fraction(1, r)


@dataclass(frozen=True)
class WittTable:
    """Coefficient table m(j, r) for 0 <= j <= degree, 1 <= r <= order."""

    f: TruncatedSeries
    rows: Tuple[TruncatedSeries, ...]

    @property
    def order(self) -> int:
        return len(self.rows)

    @property
    def degree(self) -> int:
        return self.rows[0].order

    def m(self, j: int, r: int) -> Coeff:
        if not 1 <= r <= self.order:
            raise IndexError(f"row r={r} outside 1..{self.order}")
        return self.rows[r - 1].coeff(j)

    def to_json_dict(self) -> dict:
        return {
            "degree": self.degree,
            "order": self.order,
            "m": [[str(c) for c in row.coeffs] for row in self.rows],
        }


def witt_table(f: TruncatedSeries, order: int, degree: int | None = None) -> WittTable:
    """Rows 1..order of Witt transforms of f, truncated to `degree`.

    Rows are independent; WITTKIT_THREADS > 1 computes them in a thread
    pool, assembled in row order so the result is identical either way.
    """
    if order < 1:
        raise ValueError(f"table order must be >= 1, got {order}")
    if degree is None:
        degree = f.order
    if degree > f.order:
        raise ValueError(
            f"requested degree {degree} exceeds input truncation {f.order}"
        )
    try:
        threads = int(os.environ.get("WITTKIT_THREADS", "1") or "1")
    except ValueError:
        threads = 1
    orders = range(1, order + 1)
    if threads > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            rows = list(pool.map(lambda r: witt_transform(f, r), orders))
    else:
        # sequential path shares inflation powers across rows; the rows are
        # identical to the per-row path (exact arithmetic either way)
        inflated = {d: f.inflate(d) for d in range(1, order + 1)}
        powers: dict = {}

        def power(d: int, e: int) -> TruncatedSeries:
            got = powers.get((d, e))
            if got is None:
                got = inflated[d] if e == 1 else power(d, e - 1) * inflated[d]
                powers[(d, e)] = got
            return got

        rows = []
        integral = f.is_integral()
        for r in orders:
            acc = TruncatedSeries.zero(f.order)
            for d in divisors(r):
                mu = moebius(d)
                if mu == 0:
                    continue
                term = power(d, r // d)
                acc = acc + (term if mu == 1 else -term)
            rows.append(acc.divexact(r) if integral else acc * Fraction(1, r))
    rows = [row.truncate(degree) for row in rows]
    table = WittTable(f=f.truncate(degree), rows=tuple(rows))
    _check_constant_row(table)
    return table


def _check_constant_row(table: WittTable) -> None:
    # m(0, r) must equal the necklace polynomial of the constant term.
    a0 = table.f.coeff(0)
    if not isinstance(a0, int):
        return
    for r in range(1, table.order + 1):
        expected = necklace_poly(a0, r)
        if table.m(0, r) != expected:
            raise IntegralityError(
                f"m(0,{r}) = {table.m(0, r)} != necklace_poly({a0},{r}) = {expected}"
            )


# -- Moebius inversion for sequences of series ------------------------


def moebius_invert_series(seq: Sequence[TruncatedSeries]) -> List[TruncatedSeries]:
    """B(r) = sum_{d|r} mu(d) A(r/d)(z^d) for r = 1..len(seq)."""
    n = min(s.order for s in seq)
    out = []
    for r in range(1, len(seq) + 1):
        acc = TruncatedSeries.zero(n)
        for d in divisors(r):
            mu = moebius(d)
            if mu == 0:
                continue
            term = seq[r // d - 1].truncate(n).inflate(d)
            acc = acc + (term if mu == 1 else -term)
        out.append(acc)
    return out


def moebius_sum_series(seq: Sequence[TruncatedSeries]) -> List[TruncatedSeries]:
    """A(r) = sum_{d|r} B(r/d)(z^d); inverse of moebius_invert_series."""
    n = min(s.order for s in seq)
    out = []
    for r in range(1, len(seq) + 1):
        acc = TruncatedSeries.zero(n)
        for d in divisors(r):
            acc = acc + seq[r // d - 1].truncate(n).inflate(d)
        out.append(acc)
    return out


# -- identity verification --------------------------------------------


@dataclass(frozen=True)
class IdentityReport:
    ident: str
    params: Dict[str, int]
    lhs: TruncatedSeries
    rhs: TruncatedSeries
    passed: bool
    first_mismatch: Optional[int] = None

    def to_json_dict(self) -> dict:
        return {
            "id": self.ident,
            "params": self.params,
            "passed": self.passed,
            "first_mismatch": self.first_mismatch,
            "lhs": self.lhs.to_json_dict(),
            "rhs": self.rhs.to_json_dict(),
        }


def _compare(ident: str, params: Dict[str, int], lhs: TruncatedSeries,
             rhs: TruncatedSeries) -> IdentityReport:
    n = min(lhs.order, rhs.order)
    lhs, rhs = lhs.truncate(n), rhs.truncate(n)
    mismatch = next((j for j in range(n + 1) if lhs.coeffs[j] != rhs.coeffs[j]), None)
    return IdentityReport(ident, params, lhs, rhs, mismatch is None, mismatch)


def _require_order(ident: str, f: TruncatedSeries, needed: int) -> None:
    if f.order < needed:
        raise ValueError(
            f"{ident}: truncation {f.order} too small, need at least {needed} "
            "to cover the highest transform degree"
        )


def _shift(f: TruncatedSeries, k: int) -> TruncatedSeries:
    coeffs = [0] * (f.order + 1)
    for j, c in enumerate(f.coeffs):
        if j + k <= f.order:
            coeffs[j + k] = c
    return TruncatedSeries(coeffs, f.order)


def _verify_t31(f, r, k):
    _require_order("T3.1", f, max(r, k * r))
    lhs = witt_transform(_shift(f, k), r)
    rhs = _shift(witt_transform(f, r), k * r)
    return lhs, rhs


def _verify_t32(f, r):
    _require_order("T3.2", f, r)
    acc = TruncatedSeries.zero(f.order)
    for d in divisors(r):
        acc = acc + witt_transform(f, r // d).inflate(d) * (r // d)
    return acc, f**r


def _verify_t33(f, r):
    _require_order("T3.3", f, r)
    lhs = witt_transform(-f, r)
    if r % 2 == 1:
        lhs = -lhs
    rhs = witt_transform(f, r)
    if r % 4 == 2:
        rhs = rhs + witt_transform(f, r // 2).inflate(2)
    return lhs, rhs


def _verify_t34(f, g, r):
    _require_order("T3.4", f, r)
    _require_order("T3.4", g, r)
    lhs = witt_transform(f * g, r)
    rhs = TruncatedSeries.zero(lhs.order)
    for i in divisors(r):
        for j in divisors(r):
            if math.lcm(i, j) != r:
                continue
            term = witt_transform(f, i).inflate(r // i) * witt_transform(g, j).inflate(
                r // j
            )
            rhs = rhs + term * math.gcd(i, j)
    return lhs, rhs


def _verify_t35(f, r, k):
    _require_order("T3.5", f, r * k)
    lhs = witt_transform(f**k, r)
    rhs = TruncatedSeries.zero(lhs.order)
    for j in divisors(r * k):
        if math.lcm(j, k) != r * k:
            continue
        if j % r:
            raise IntegralityError(
                f"T3.5: index j={j} in the summation set is not a multiple of r={r}"
            )
        rhs = rhs + witt_transform(f, j).inflate(r * k // j) * (j // r)
    return lhs, rhs


def _verify_t36(f, g, r, v, w):
    # Composing the product and power rules gives the two-series mixed-power
    # identity with arguments z^(r*w'/i) and z^(r*v'/j), w' = w/(v,w),
    # v' = v/(v,w); the summation-set condition then forces i | r*w' and
    # j | r*v', which is asserted rather than assumed.
    gg = math.gcd(v, w)
    w1, v1 = w // gg, v // gg
    _require_order("T3.6", f, r * max(w1, v1))
    _require_order("T3.6", g, r * max(w1, v1))
    lhs = witt_transform((f**w1) * (g**v1), r)
    rhs = TruncatedSeries.zero(lhs.order)
    for i in range(1, r * w1 + 1):
        for j in range(1, r * v1 + 1):
            d = math.gcd(v * i, w * j)
            if i * j * gg != d * r:
                continue
            if (r * w1) % i or (r * v1) % j:
                raise IntegralityError(
                    f"T3.6: set member (i,j)=({i},{j}) violates "
                    f"i | {r * w1}, j | {r * v1}"
                )
            term = witt_transform(f, i).inflate(r * w1 // i) * witt_transform(
                g, j
            ).inflate(r * v1 // j)
            rhs = rhs + term * (d // gg)
    return lhs, rhs


def _verify_t11(alpha, beta, n):
    # necklace-polynomial product rule, evaluated through constant series
    lhs = witt_transform(TruncatedSeries.constant(alpha * beta, 0), n)
    acc = 0
    for i in divisors(n):
        for j in divisors(n):
            if math.lcm(i, j) != n:
                continue
            wa = witt_transform(TruncatedSeries.constant(alpha, 0), i).coeff(0)
            wb = witt_transform(TruncatedSeries.constant(beta, 0), j).coeff(0)
            acc += math.gcd(i, j) * wa * wb
    return lhs, TruncatedSeries.constant(acc, 0)


def _verify_t12(beta, r, n):
    # necklace-polynomial power rule, evaluated through constant series
    lhs = witt_transform(TruncatedSeries.constant(beta**r, 0), n)
    acc = 0
    for j in divisors(n * r):
        if math.lcm(j, r) != n * r:
            continue
        if j % n:
            raise IntegralityError(
                f"T1.2: index j={j} in the summation set is not a multiple of n={n}"
            )
        acc += (j // n) * witt_transform(TruncatedSeries.constant(beta, 0), j).coeff(0)
    return lhs, TruncatedSeries.constant(acc, 0)


IDENTITY_IDS = ("T1.1", "T1.2", "T3.1", "T3.2", "T3.3", "T3.4", "T3.5", "T3.6")


def verify_identity(
    ident: str,
    f: Optional[TruncatedSeries] = None,
    g: Optional[TruncatedSeries] = None,
    *,
    r: Optional[int] = None,
    k: Optional[int] = None,
    v: Optional[int] = None,
    w: Optional[int] = None,
    alpha: Optional[int] = None,
    beta: Optional[int] = None,
    n: Optional[int] = None,
) -> IdentityReport:
    """Evaluate both sides of the named identity exactly and compare."""

    def need(**kwargs):
        missing = [name for name, val in kwargs.items() if val is None]
        if missing:
            raise ValueError(f"{ident} requires parameters: {', '.join(missing)}")

    if ident == "T3.1":
        need(f=f, r=r, k=k)
        lhs, rhs = _verify_t31(f, r, k)
        params = {"r": r, "k": k}
    elif ident == "T3.2":
        need(f=f, r=r)
        lhs, rhs = _verify_t32(f, r)
        params = {"r": r}
    elif ident == "T3.3":
        need(f=f, r=r)
        lhs, rhs = _verify_t33(f, r)
        params = {"r": r}
    elif ident == "T3.4":
        need(f=f, g=g, r=r)
        lhs, rhs = _verify_t34(f, g, r)
        params = {"r": r}
    elif ident == "T3.5":
        need(f=f, r=r, k=k)
        lhs, rhs = _verify_t35(f, r, k)
        params = {"r": r, "k": k}
    elif ident == "T3.6":
        need(f=f, g=g, r=r, v=v, w=w)
        lhs, rhs = _verify_t36(f, g, r, v, w)
        params = {"r": r, "v": v, "w": w}
    elif ident == "T1.1":
        need(alpha=alpha, beta=beta, n=n)
        lhs, rhs = _verify_t11(alpha, beta, n)
        params = {"alpha": alpha, "beta": beta, "n": n}
    elif ident == "T1.2":
        need(beta=beta, r=r, n=n)
        lhs, rhs = _verify_t12(beta, r, n)
        params = {"beta": beta, "r": r, "n": n}
    else:
        raise ValueError(f"unknown identity id {ident!r}; known: {IDENTITY_IDS}")
    return _compare(ident, params, lhs, rhs)


# -- monotonicity scans ------------------------------------------------

SCAN_FAMILIES = (
    "T5.1",
    "T5.2",
    "T5.3a",
    "T5.3b",
    "T5.3c",
    "T5.4a",
    "T5.4b",
    "T5.4c",
    "P6",
)


@dataclass(frozen=True)
class ScanReport:
    family: str
    params: Dict[str, int]
    passed: bool
    checked: int
    violations: Tuple[str, ...] = field(default_factory=tuple)
    note: str = "finite-window check; certifies the claim on this window only"

    def to_json_dict(self) -> dict:
        return {
            "family": self.family,
            "params": self.params,
            "passed": self.passed,
            "checked": self.checked,
            "violations": list(self.violations),
            "note": self.note,
        }


def _require_nonneg_integral(f: TruncatedSeries, family: str) -> None:
    if not f.is_integral():
        raise PreconditionError(f"{family}: coefficients must be integers")
    if any(c < 0 for c in f.coeffs):
        raise PreconditionError(f"{family}: coefficients must be non-negative")
    if f.coeff(0) <= 0:
        raise PreconditionError(f"{family}: constant term must be positive")


def _require_nondecreasing(f: TruncatedSeries, upto: int, family: str) -> None:
    upto = min(upto, f.order)
    for j in range(upto):
        if f.coeffs[j] > f.coeffs[j + 1]:
            raise PreconditionError(
                f"{family}: coefficient sequence must be non-decreasing on the "
                f"window (fails at a_{j} > a_{j + 1})"
            )


def _signed_neg_table(f: TruncatedSeries, rmax: int, kmax: int):
    """Rows of (-1)^r * transform of -f, truncated to degree kmax."""
    rows = []
    for r in range(1, rmax + 1):
        row = witt_transform(-f, r)
        rows.append((-row if r % 2 else row).truncate(kmax))
    return rows


def monotonicity_scan(
    f: Optional[TruncatedSeries],
    family: str,
    *,
    kmax: int = 8,
    rmax: int = 12,
    cmax: int = 6,
) -> ScanReport:
    """Check one coefficient-monotonicity family on a finite window.

    Hypotheses of the selected family are checked, not assumed; a violated
    hypothesis raises PreconditionError naming it.  For T5.3*/T5.4* the
    non-decreasing hypothesis is checked on coefficients a_0..a_{kmax+1}
    (the window the conclusions depend on).
    """
    if family not in SCAN_FAMILIES:
        raise ValueError(f"unknown family {family!r}; known: {SCAN_FAMILIES}")
    violations: List[str] = []
    checked = 0

    if family == "P6":
        beta = {2: 2, 3: 2}
        for c in range(2, cmax + 1):
            start = beta.get(c, 1)
            prev = None
            for r in range(start, rmax + 1):
                val = necklace_poly(c, r)
                if prev is not None:
                    checked += 1
                    if val <= prev:
                        violations.append(f"M({c};r) not strict at r={r}")
                prev = val
        for r in range(1, rmax + 1):
            prev = None
            for c in range(1, cmax + 1):
                val = necklace_poly(c, r)
                if prev is not None:
                    checked += 1
                    if val <= prev:
                        violations.append(f"M(c;{r}) not strict at c={c}")
                prev = val
        return ScanReport("P6", {"cmax": cmax, "rmax": rmax}, not violations, checked,
                          tuple(violations))

    if f is None:
        raise ValueError(f"family {family} requires a series")
    _require_nonneg_integral(f, family)
    if f.order < kmax:
        raise ValueError(f"series order {f.order} < kmax {kmax}")
    params = {"kmax": kmax, "rmax": rmax}

    if family in ("T5.1", "T5.2"):
        kmin = 2 if family == "T5.1" else 3
        if family == "T5.1":
            rows = [witt_transform(f, r).truncate(kmax) for r in range(1, rmax + 1)]
        else:
            rows = _signed_neg_table(f, rmax, kmax)
        for k in range(kmin, kmax + 1):
            seq = [row.coeff(k) for row in rows]
            for r in range(1, len(seq)):
                checked += 1
                if seq[r] < seq[r - 1]:
                    violations.append(f"k={k}: decreases at r={r + 1}")
        return ScanReport(family, params, not violations, checked, tuple(violations))

    # T5.3* / T5.4* additionally need a non-decreasing coefficient window
    _require_nondecreasing(f, kmax + 1, family)
    signed = family.startswith("T5.4")
    sub = family[-1]
    rows = (
        _signed_neg_table(f, rmax, kmax)
        if signed
        else [witt_transform(f, r).truncate(kmax) for r in range(1, rmax + 1)]
    )
    for r in range(1, rmax + 1):
        row = rows[r - 1]
        if sub == "a":
            for k in range(1, kmax + 1):
                checked += 1
                if row.coeff(k) < 1:
                    violations.append(f"m({k},{r}) = {row.coeff(k)} < 1")
        elif sub == "b":
            for k in range(1, kmax + 1):
                checked += 1
                if row.coeff(k) < row.coeff(k - 1):
                    violations.append(f"r={r}: decreases at k={k}")
        elif sub == "c":
            if r < 3:
                continue
            for k in range(3, kmax + 1):
                checked += 1
                if row.coeff(k) <= row.coeff(k - 1):
                    violations.append(f"r={r}: not strict at k={k}")
    return ScanReport(family, params, not violations, checked, tuple(violations))
