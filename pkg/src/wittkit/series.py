"""Dense truncated formal power series over exact rationals.

A TruncatedSeries of order N stores the coefficients of z^0 .. z^N and
nothing else; arithmetic never pretends to know more.  Binary operations
on series of different orders truncate to the smaller order, so a result's
order is always an honest claim about which coefficients are exact.

Coefficients are Python ints whenever possible and Fractions otherwise
(a Fraction with denominator 1 is normalized back to int), so integer
series stay on the fast int path.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence, Tuple, Union

from .errors import IntegralityError

__all__ = [
    "Coeff",
    "TruncatedSeries",
    "RationalFunction",
    "ps_add",
    "ps_mul",
    "ps_pow",
    "ps_inflate",
    "ps_recip",
    "ratfun_expand",
]

Coeff = Union[int, Fraction]


def _norm(x: Coeff) -> Coeff:
    if isinstance(x, Fraction) and x.denominator == 1:
        return int(x)
    return x


def _parse_coeff(text: str) -> Coeff:
    text = text.strip()
    if "/" in text:
        return _norm(Fraction(text))
    return int(text)


class TruncatedSeries:
    """Immutable truncated power series; `order` is the last stored degree."""

    __slots__ = ("order", "coeffs", "_all_int")

    def __init__(self, coeffs: Sequence[Coeff], order: int | None = None):
        if any(isinstance(c, float) for c in coeffs):
            raise TypeError("coefficients must be exact (int, Fraction, or string)")
        coeffs = [_norm(Fraction(c) if isinstance(c, str) else c) for c in coeffs]
        if order is None:
            order = len(coeffs) - 1
        if order < 0:
            raise ValueError("series order must be >= 0")
        if len(coeffs) < order + 1:
            coeffs = coeffs + [0] * (order + 1 - len(coeffs))
        coeffs = tuple(coeffs[: order + 1])
        object.__setattr__(self, "order", order)
        object.__setattr__(self, "coeffs", coeffs)
        object.__setattr__(self, "_all_int", all(type(c) is int for c in coeffs))

    @classmethod
    def _unsafe(cls, coeffs: Tuple[Coeff, ...], order: int,
                all_int: bool) -> "TruncatedSeries":
        # internal fast path: caller guarantees normalized coeffs of full length
        obj = object.__new__(cls)
        object.__setattr__(obj, "order", order)
        object.__setattr__(obj, "coeffs", coeffs)
        object.__setattr__(obj, "_all_int", all_int)
        return obj

    def __setattr__(self, name, value):  # pragma: no cover - immutability guard
        raise AttributeError("TruncatedSeries is immutable")

    # -- constructors ------------------------------------------------

    @classmethod
    def zero(cls, order: int) -> "TruncatedSeries":
        return cls([0], order)

    @classmethod
    def one(cls, order: int) -> "TruncatedSeries":
        return cls([1], order)

    @classmethod
    def constant(cls, c: Coeff, order: int) -> "TruncatedSeries":
        return cls([c], order)

    @classmethod
    def monomial(cls, c: Coeff, degree: int, order: int) -> "TruncatedSeries":
        coeffs = [0] * (order + 1)
        if degree <= order:
            coeffs[degree] = c
        return cls(coeffs, order)

    # -- basic queries -----------------------------------------------

    def coeff(self, j: int) -> Coeff:
        if not 0 <= j <= self.order:
            raise IndexError(f"coefficient {j} outside stored range 0..{self.order}")
        return self.coeffs[j]

    def is_integral(self) -> bool:
        return self._all_int

    def truncate(self, order: int) -> "TruncatedSeries":
        if order > self.order:
            raise ValueError(
                f"cannot extend truncation {self.order} to {order}: "
                "higher coefficients are unknown"
            )
        if order == self.order:
            return self
        coeffs = self.coeffs[: order + 1]
        all_int = self._all_int or all(type(c) is int for c in coeffs)
        return TruncatedSeries._unsafe(coeffs, order, all_int)

    def __eq__(self, other) -> bool:
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        return self.order == other.order and all(
            a == b for a, b in zip(self.coeffs, other.coeffs)
        )

    def __hash__(self):
        return hash((self.order, self.coeffs))

    def __repr__(self) -> str:
        terms = [f"{c}*z^{j}" for j, c in enumerate(self.coeffs) if c != 0]
        body = " + ".join(terms) if terms else "0"
        return f"<series {body} + O(z^{self.order + 1})>"

    # -- ring operations ---------------------------------------------

    def _common_order(self, other: "TruncatedSeries") -> int:
        return min(self.order, other.order)

    @staticmethod
    def _finish(out: list, order: int, fast: bool) -> "TruncatedSeries":
        if fast:
            return TruncatedSeries._unsafe(tuple(out), order, True)
        out = tuple(_norm(c) for c in out)
        return TruncatedSeries._unsafe(out, order, all(type(c) is int for c in out))

    def __add__(self, other):
        if isinstance(other, (int, Fraction)):
            other = TruncatedSeries.constant(other, self.order)
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        n = self._common_order(other)
        out = [a + b for a, b in zip(self.coeffs[: n + 1], other.coeffs[: n + 1])]
        return self._finish(out, n, self._all_int and other._all_int)

    __radd__ = __add__

    def __neg__(self):
        return TruncatedSeries._unsafe(
            tuple(-c for c in self.coeffs), self.order, self._all_int
        )

    def __sub__(self, other):
        if isinstance(other, (int, Fraction)):
            other = TruncatedSeries.constant(other, self.order)
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            out = [c * other for c in self.coeffs]
            return self._finish(out, self.order,
                                self._all_int and isinstance(other, int))
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        n = self._common_order(other)
        a, b = self.coeffs, other.coeffs
        out = [0] * (n + 1)
        for i in range(n + 1):
            ai = a[i]
            if ai == 0:
                continue
            for j in range(n + 1 - i):
                bj = b[j]
                if bj != 0:
                    out[i + j] += ai * bj
        return self._finish(out, n, self._all_int and other._all_int)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if not isinstance(k, int):
            return NotImplemented
        if k < 0:
            raise ValueError("negative powers are not defined; use recip()")
        result = TruncatedSeries.one(self.order)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def inflate(self, d: int) -> "TruncatedSeries":
        """Substitute z -> z^d; truncation order is preserved."""
        if d < 1:
            raise ValueError(f"inflate requires d >= 1, got {d}")
        if d == 1:
            return self
        out = [0] * (self.order + 1)
        for j, c in enumerate(self.coeffs):
            if j * d > self.order:
                break
            out[j * d] = c
        return self._finish(out, self.order, self._all_int)

    def recip(self) -> "TruncatedSeries":
        """Multiplicative inverse at the same truncation (a(0) != 0)."""
        a0 = self.coeffs[0]
        if a0 == 0:
            raise ValueError("series with zero constant term has no reciprocal")
        inv0 = _norm(Fraction(1, 1) / a0)
        out: list[Coeff] = [inv0]
        for n in range(1, self.order + 1):
            acc = sum(self.coeffs[i] * out[n - i] for i in range(1, n + 1))
            out.append(_norm(-acc * inv0))
        return TruncatedSeries(out, self.order)

    def divexact(self, r: int) -> "TruncatedSeries":
        """Divide every coefficient by r; ints must divide exactly."""
        if r == 0:
            raise ZeroDivisionError("divexact by zero")
        out = []
        for j, c in enumerate(self.coeffs):
            if isinstance(c, int):
                q, rem = divmod(c, r)
                if rem:
                    raise IntegralityError(
                        f"coefficient of z^{j} ({c}) is not divisible by {r}"
                    )
                out.append(q)
            else:
                out.append(_norm(c / r))
        return self._finish(out, self.order, self._all_int)

    # -- serialization -----------------------------------------------

    def to_json_dict(self) -> dict:
        return {"order": self.order, "coeffs": [str(c) for c in self.coeffs]}

    @classmethod
    def from_json_dict(cls, obj: dict) -> "TruncatedSeries":
        coeffs = []
        for c in obj["coeffs"]:
            if isinstance(c, str):
                coeffs.append(_parse_coeff(c))
            elif isinstance(c, int) and not isinstance(c, bool):
                coeffs.append(c)
            else:
                raise ValueError(f"coefficient {c!r} must be a string or integer")
        return cls(coeffs, int(obj["order"]))


@dataclass(frozen=True)
class RationalFunction:
    """Quotient of integer polynomials, ascending coefficients, den[0] != 0."""

    num: Tuple[int, ...]
    den: Tuple[int, ...]

    def __init__(self, num: Sequence[int], den: Sequence[int]):
        num = tuple(int(c) for c in num)
        den = tuple(int(c) for c in den)
        if not den or den[0] == 0:
            raise ValueError("denominator must have a nonzero constant term")
        object.__setattr__(self, "num", num)
        object.__setattr__(self, "den", den)

    def expand(self, order: int) -> TruncatedSeries:
        """Taylor expansion at 0 to the given truncation order."""
        num = TruncatedSeries(list(self.num) or [0], order)
        den = TruncatedSeries(list(self.den), order)
        return num * den.recip()

    def to_json_dict(self) -> dict:
        return {"num": list(self.num), "den": list(self.den)}

    @classmethod
    def from_json_dict(cls, obj: dict) -> "RationalFunction":
        return cls(obj["num"], obj["den"])


# Named aliases matching the operation-level API.

def ps_add(a: TruncatedSeries, b: TruncatedSeries) -> TruncatedSeries:
    return a + b


def ps_mul(a: TruncatedSeries, b: TruncatedSeries) -> TruncatedSeries:
    return a * b


def ps_pow(a: TruncatedSeries, k: int) -> TruncatedSeries:
    return a**k


def ps_inflate(a: TruncatedSeries, d: int) -> TruncatedSeries:
    return a.inflate(d)


def ps_recip(a: TruncatedSeries) -> TruncatedSeries:
    return a.recip()


def ratfun_expand(h: RationalFunction, order: int) -> TruncatedSeries:
    return h.expand(order)
