"""Power-sum parameters, Schur polynomials and symmetric group characters.

Parameters enter through the power-sum coordinates t_k (weight k).  They may
be exact rationals, formal variables, or series in the specialization
variable ``s`` — everything downstream works uniformly on truncated series.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from types import MappingProxyType
from typing import Mapping, Sequence, Union

from .partitions import Partition, rim_hook_removals
from .series import Scalar, TruncSeries, series_det

ParamValue = Union[Fraction, TruncSeries]


@dataclass(frozen=True)
class MiwaParams:
    """A finite family of power-sum parameters; unlisted indices are zero."""

    values: Mapping[int, ParamValue] = field(default_factory=dict)

    def __post_init__(self):
        clean: dict[int, ParamValue] = {}
        for k, v in self.values.items():
            if not isinstance(k, int) or k < 1:
                raise ValueError(f"power-sum index must be a positive integer, got {k}")
            if isinstance(v, TruncSeries):
                if not v.is_zero():
                    clean[k] = v
            else:
                v = Fraction(v)
                if v:
                    clean[k] = v
        object.__setattr__(self, "values", MappingProxyType(clean))

    @classmethod
    def zero(cls) -> "MiwaParams":
        return cls({})

    @classmethod
    def symbolic(cls, kmax: int, order: int, family: str = "t") -> "MiwaParams":
        """t_k (or u_k) as formal variables for k = 1..kmax."""
        return cls({k: TruncSeries.variable(order, f"{family}{k}") for k in range(1, kmax + 1)})

    def negated(self) -> "MiwaParams":
        return MiwaParams({k: -v for k, v in self.values.items()})

    def max_index(self) -> int:
        return max(self.values, default=0)

    def value_series(self, k: int, order: int) -> TruncSeries:
        v = self.values.get(k)
        if v is None:
            return TruncSeries.zero(order)
        if isinstance(v, Fraction):
            return TruncSeries.constant(order, v)
        if v.order < order:
            raise ValueError(f"parameter t_{k} was built at order {v.order} < {order}")
        return v.truncate(order)


def miwa_from_alphabet(alphabet: Sequence[Scalar], kmax: int) -> MiwaParams:
    """Power sums of a finite alphabet: t_k = (1/k) sum_i x_i^k."""
    if kmax < 1:
        raise ValueError("kmax must be >= 1")
    xs = [Fraction(x) for x in alphabet]
    values: dict[int, Fraction] = {}
    for k in range(1, kmax + 1):
        values[k] = Fraction(sum(x**k for x in xs), k)
    return MiwaParams(values)


def h_coeffs(t: MiwaParams, order: int, count: int | None = None) -> list[TruncSeries]:
    """Complete homogeneous coefficients h_0..h_count of exp(sum_k t_k z^k).

    ``count`` defaults to ``order``.  Uses the derivative recurrence
    n*h_n = sum_j j*t_j*h_{n-j}, which stays exact over rationals.
    """
    if order < 0:
        raise ValueError("order must be >= 0")
    if count is None:
        count = order
    vals = {k: t.value_series(k, order) for k in t.values if k <= count}
    h = [TruncSeries.one(order)]
    for n in range(1, count + 1):
        acc = TruncSeries.zero(order)
        for j, tj in vals.items():
            if j > n:
                continue
            acc = acc + (tj * h[n - j]) * j
        h.append(acc * Fraction(1, n))
    return h


def _is_symbolic(t: MiwaParams) -> bool:
    return any(isinstance(v, TruncSeries) for v in t.values.values())


def schur(lam: Partition, t: MiwaParams, order: int) -> TruncSeries:
    """The Schur polynomial s_lam in the power-sum parameters, via Jacobi-Trudi."""
    return skew_schur(lam, Partition(), t, order)


def skew_schur(lam: Partition, mu: Partition, t: MiwaParams, order: int) -> TruncSeries:
    """Skew Schur polynomial det(h_{lam_i - mu_j + j - i}) of size len(lam).

    Non-containment of mu in lam makes the determinant vanish, which is the
    returned value rather than an error.
    """
    if _is_symbolic(t) and lam.size - mu.size > order:
        raise ValueError(
            f"|lam/mu| = {lam.size - mu.size} exceeds the truncation order {order}; "
            "the symbolic result would silently vanish"
        )
    n = len(lam)
    if n == 0:
        return TruncSeries.one(order)
    needed = max(
        (lam.part(i) - mu.part(j) + j - i for i in range(1, n + 1) for j in range(1, n + 1)),
        default=0,
    )
    h = h_coeffs(t, order, count=max(needed, 0))
    zero = TruncSeries.zero(order)

    def entry(i: int, j: int) -> TruncSeries:
        idx = lam.part(i) - mu.part(j) + j - i
        if idx < 0:
            return zero
        return h[idx]

    matrix = [[entry(i, j) for j in range(1, n + 1)] for i in range(1, n + 1)]
    return series_det(matrix)


@lru_cache(maxsize=None)
def _character(lam_parts: tuple[int, ...], rho_parts: tuple[int, ...]) -> int:
    if not rho_parts:
        return 1 if not lam_parts else 0
    r, rest = rho_parts[0], rho_parts[1:]
    total = 0
    for smaller, height in rim_hook_removals(Partition(lam_parts), r):
        total += (-1) ** height * _character(smaller.parts, rest)
    return total


def character(lam: Partition, rho: Partition) -> int:
    """Symmetric group character chi^lam_rho by the rim-hook recursion."""
    if lam.size != rho.size:
        raise ValueError(f"character needs |lam| == |rho|, got {lam.size} != {rho.size}")
    return _character(lam.parts, rho.parts)
