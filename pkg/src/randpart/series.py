"""Exact multivariate polynomials truncated at a weighted total degree.

Variables come in three families: ``t1, t2, ...`` and ``u1, u2, ...`` (the two
parameter families of the measure, with weight k for index k) plus a single
specialization variable ``s`` of weight 1.  Coefficients are exact rationals;
every operation drops monomials above the truncation order, so arithmetic is
closed at a fixed order.

Monomials are stored as sorted tuples of (variable code, exponent) with codes
``+k`` for t_k, ``-k`` for u_k and ``0`` for s.
"""

from __future__ import annotations

from fractions import Fraction
from math import factorial
from typing import Iterable, Mapping, Union

Scalar = Union[int, Fraction]
Monomial = tuple[tuple[int, int], ...]

_ONE: Monomial = ()


def variable_code(name: str) -> int:
    if name == "s":
        return 0
    if len(name) >= 2 and name[0] in "tu" and name[1:].isdigit():
        k = int(name[1:])
        if k >= 1:
            return k if name[0] == "t" else -k
    raise ValueError(f"unknown variable {name!r}")


def variable_name(code: int) -> str:
    if code == 0:
        return "s"
    return f"t{code}" if code > 0 else f"u{-code}"


def variable_weight(code: int) -> int:
    return 1 if code == 0 else abs(code)


def monomial_weight(mono: Monomial) -> int:
    return sum(e * variable_weight(c) for c, e in mono)


def _merge(m1: Monomial, m2: Monomial) -> Monomial:
    if not m1:
        return m2
    if not m2:
        return m1
    out = dict(m1)
    for c, e in m2:
        out[c] = out.get(c, 0) + e
    return tuple(sorted(out.items()))


class TruncSeries:
    """Exact polynomial truncated at weighted total degree ``order``."""

    __slots__ = ("order", "coeffs")

    def __init__(self, order: int, coeffs: Mapping[Monomial, Scalar] | None = None):
        if order < 0:
            raise ValueError("order must be >= 0")
        clean: dict[Monomial, Fraction] = {}
        if coeffs:
            for mono, c in coeffs.items():
                c = Fraction(c)
                if c and monomial_weight(mono) <= order:
                    clean[mono] = c
        object.__setattr__(self, "order", order)
        object.__setattr__(self, "coeffs", clean)

    def __setattr__(self, name, value):
        raise AttributeError("TruncSeries is immutable")

    @classmethod
    def _raw(cls, order: int, coeffs: dict[Monomial, Fraction]) -> "TruncSeries":
        self = object.__new__(cls)
        object.__setattr__(self, "order", order)
        object.__setattr__(self, "coeffs", {m: c for m, c in coeffs.items() if c})
        return self

    @classmethod
    def zero(cls, order: int) -> "TruncSeries":
        return cls._raw(order, {})

    @classmethod
    def one(cls, order: int) -> "TruncSeries":
        return cls._raw(order, {_ONE: Fraction(1)})

    @classmethod
    def constant(cls, order: int, value: Scalar) -> "TruncSeries":
        return cls(order, {_ONE: Fraction(value)})

    @classmethod
    def variable(cls, order: int, name: str, power: int = 1) -> "TruncSeries":
        code = variable_code(name)
        return cls(order, {((code, power),): Fraction(1)})

    # -- queries ----------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.coeffs

    def constant_term(self) -> Fraction:
        return self.coeffs.get(_ONE, Fraction(0))

    def valuation(self) -> int | None:
        """Smallest monomial weight present, or None for the zero series."""
        if not self.coeffs:
            return None
        return min(monomial_weight(m) for m in self.coeffs)

    def coefficient(self, mono: Mapping[str, int] | Monomial) -> Fraction:
        if isinstance(mono, Mapping):
            mono = tuple(sorted((variable_code(n), e) for n, e in mono.items() if e))
        return self.coeffs.get(mono, Fraction(0))

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, TruncSeries)
            and self.order == other.order
            and self.coeffs == other.coeffs
        )

    def __repr__(self) -> str:
        n = len(self.coeffs)
        show = self.pretty(max_terms=4)
        return f"TruncSeries(D={self.order}, {n} terms: {show})"

    def pretty(self, max_terms: int = 12) -> str:
        if not self.coeffs:
            return "0"
        items = sorted(self.coeffs.items(), key=lambda kv: (monomial_weight(kv[0]), kv[0]))
        chunks = []
        for mono, c in items[:max_terms]:
            vars_ = "*".join(
                variable_name(code) + (f"^{e}" if e > 1 else "") for code, e in mono
            )
            if not vars_:
                chunks.append(str(c))
            elif c == 1:
                chunks.append(vars_)
            elif c == -1:
                chunks.append(f"-{vars_}")
            else:
                chunks.append(f"{c}*{vars_}")
        if len(items) > max_terms:
            chunks.append("...")
        return " + ".join(chunks).replace("+ -", "- ")

    # -- ring operations --------------------------------------------------

    def _check(self, other: "TruncSeries") -> None:
        if self.order != other.order:
            raise ValueError(f"order mismatch: {self.order} != {other.order}")

    def __add__(self, other):
        if isinstance(other, (int, Fraction)):
            other = TruncSeries.constant(self.order, other)
        if not isinstance(other, TruncSeries):
            return NotImplemented
        self._check(other)
        out = dict(self.coeffs)
        for m, c in other.coeffs.items():
            out[m] = out.get(m, Fraction(0)) + c
        return TruncSeries._raw(self.order, out)

    __radd__ = __add__

    def __neg__(self):
        return TruncSeries._raw(self.order, {m: -c for m, c in self.coeffs.items()})

    def __sub__(self, other):
        if isinstance(other, (int, Fraction)):
            other = TruncSeries.constant(self.order, other)
        if not isinstance(other, TruncSeries):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            c = Fraction(other)
            return TruncSeries._raw(self.order, {m: v * c for m, v in self.coeffs.items()})
        if not isinstance(other, TruncSeries):
            return NotImplemented
        self._check(other)
        order = self.order
        right = sorted(
            ((monomial_weight(m), m, c) for m, c in other.coeffs.items()),
            key=lambda t: t[0],
        )
        out: dict[Monomial, Fraction] = {}
        for m1, c1 in self.coeffs.items():
            w1 = monomial_weight(m1)
            for w2, m2, c2 in right:
                if w1 + w2 > order:
                    break
                m = _merge(m1, m2)
                prev = out.get(m)
                out[m] = c1 * c2 if prev is None else prev + c1 * c2
        return TruncSeries._raw(order, out)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if not isinstance(n, int) or n < 0:
            raise ValueError("powers must be non-negative integers")
        result = TruncSeries.one(self.order)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base if n > 1 else base
            n >>= 1
        return result

    # -- calculus ---------------------------------------------------------

    def diff(self, name: str) -> "TruncSeries":
        """Partial derivative; the result is exact only to a lower order."""
        code = variable_code(name)
        w = variable_weight(code)
        if self.order < w:
            raise ValueError(f"cannot differentiate an order-{self.order} series by {name}")
        out: dict[Monomial, Fraction] = {}
        for mono, c in self.coeffs.items():
            for idx, (vc, e) in enumerate(mono):
                if vc == code:
                    rest = mono[:idx] + ((vc, e - 1),) + mono[idx + 1 :] if e > 1 else mono[:idx] + mono[idx + 1 :]
                    out[rest] = out.get(rest, Fraction(0)) + c * e
                    break
        return TruncSeries._raw(self.order - w, out)

    def exp(self) -> "TruncSeries":
        """exp of a series with zero constant term (a programming invariant)."""
        if self.constant_term():
            raise ValueError("exp requires a zero constant term")
        val = self.valuation()
        result = TruncSeries.one(self.order)
        if val is None:
            return result
        power = TruncSeries.one(self.order)
        for m in range(1, self.order // val + 1):
            power = power * self
            result = result + power * Fraction(1, factorial(m))
        return result

    def truncate(self, order: int) -> "TruncSeries":
        if order > self.order:
            raise ValueError("cannot raise the truncation order")
        if order == self.order:
            return self
        return TruncSeries._raw(
            order, {m: c for m, c in self.coeffs.items() if monomial_weight(m) <= order}
        )

    def rename_family(self, src: str, dst: str) -> "TruncSeries":
        """Relabel one indexed family into another, e.g. every t_k -> u_k."""
        src_sign = {"t": 1, "u": -1}[src]
        dst_sign = {"t": 1, "u": -1}[dst]
        out: dict[Monomial, Fraction] = {}
        for mono, c in self.coeffs.items():
            new = tuple(
                sorted(
                    (
                        (dst_sign * abs(code), e)
                        if code != 0 and (code > 0) == (src_sign > 0)
                        else (code, e)
                    )
                    for code, e in mono
                )
            )
            if len(dict(new)) != len(new):
                raise ValueError("family rename would collide with existing variables")
            out[new] = out.get(new, Fraction(0)) + c
        return TruncSeries._raw(self.order, out)

    # -- serialization ----------------------------------------------------

    def to_records(self) -> list[dict]:
        """Shared wire format: one record per monomial, exact num/den strings."""
        records = []
        items = sorted(self.coeffs.items(), key=lambda kv: (monomial_weight(kv[0]), kv[0]))
        for mono, c in items:
            records.append(
                {
                    "exponents": {variable_name(code): e for code, e in mono},
                    "num": str(c.numerator),
                    "den": str(c.denominator),
                }
            )
        return records

    @classmethod
    def from_records(cls, order: int, records: Iterable[Mapping]) -> "TruncSeries":
        coeffs: dict[Monomial, Fraction] = {}
        for rec in records:
            mono = tuple(
                sorted((variable_code(name), int(e)) for name, e in rec["exponents"].items())
            )
            coeffs[mono] = coeffs.get(mono, Fraction(0)) + Fraction(
                int(rec["num"]), int(rec["den"])
            )
        return cls(order, coeffs)


def series_det(matrix: list[list[TruncSeries]]) -> TruncSeries:
    """Determinant by minor expansion with memoized column subsets.

    Division-free on purpose: the truncated ring has zero divisors, so
    elimination-style algorithms are not safe.  Sizes here are <= 8.
    """
    n = len(matrix)
    if n == 0:
        raise ValueError("empty matrix has no fixed order; use TruncSeries.one")
    order = matrix[0][0].order
    memo: dict[tuple[int, ...], TruncSeries] = {(): TruncSeries.one(order)}

    def minor(cols: tuple[int, ...]) -> TruncSeries:
        if cols in memo:
            return memo[cols]
        row = n - len(cols)
        acc = TruncSeries.zero(order)
        for idx, col in enumerate(cols):
            entry = matrix[row][col]
            if entry.is_zero():
                continue
            sub = minor(cols[:idx] + cols[idx + 1 :])
            term = entry * sub
            acc = acc + term if idx % 2 == 0 else acc - term
        memo[cols] = acc
        return acc

    return minor(tuple(range(n)))
