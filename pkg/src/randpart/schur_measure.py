"""Determinantal structure of the two-parameter partition measure.

The measure gives a partition the weight s_lam(t) * s_lam(t') / Z.  The
probability that a finite set X of half-integers lies inside the descent set
equals a determinant in the kernel built from the Laurent coefficients of
exp(sum t_k z^k - sum t'_k z^{-k}); ``correlation_oracle`` recomputes the
same probability by summing partition weights directly, so the two paths
cross-verify each other exactly.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from types import MappingProxyType
from typing import Iterable, Mapping

from .errors import DomainError
from .partitions import HalfInt, Partition, contains, iter_partitions
from .series import TruncSeries, series_det
from .symfunc import MiwaParams, h_coeffs, schur


@dataclass(frozen=True)
class SchurParams:
    """Two power-sum parameter families plus the common truncation order."""

    t: MiwaParams
    tprime: MiwaParams
    order: int

    def __post_init__(self):
        if self.order < 0:
            raise ValueError("order must be >= 0")
        hi = max(self.t.max_index(), self.tprime.max_index())
        if hi > self.order:
            raise ValueError(
                f"parameter index {hi} exceeds the truncation order {self.order}; "
                "it cannot affect any degree-bounded result"
            )

    @classmethod
    def symbolic(cls, order: int, kmax: int | None = None) -> "SchurParams":
        """Fully formal parameters: t_k and u_k as variables for k <= kmax."""
        kmax = order if kmax is None else kmax
        return cls(
            t=MiwaParams.symbolic(kmax, order, family="t"),
            tprime=MiwaParams.symbolic(kmax, order, family="u"),
            order=order,
        )

    @classmethod
    def numeric(cls, t: Mapping[int, Fraction], tprime: Mapping[int, Fraction], order: int) -> "SchurParams":
        return cls(t=MiwaParams(dict(t)), tprime=MiwaParams(dict(tprime)), order=order)

    def negated(self) -> "SchurParams":
        return SchurParams(t=self.t.negated(), tprime=self.tprime.negated(), order=self.order)

    def swapped(self) -> "SchurParams":
        return SchurParams(t=self.tprime, tprime=self.t, order=self.order)

    def pairing(self) -> TruncSeries:
        """sum_k k * t_k * t'_k as a series; the log of the normalizing sum."""
        acc = TruncSeries.zero(self.order)
        common = set(self.t.values) & set(self.tprime.values)
        for k in common:
            acc = acc + (self.t.value_series(k, self.order) * self.tprime.value_series(k, self.order)) * k
        return acc

    def z_inverse(self) -> TruncSeries:
        """1/Z as exp of the negated pairing (never series division).

        Requires the pairing to have zero constant term; for two overlapping
        purely numeric families 1/Z is transcendental and has no exact series.
        """
        pairing = self.pairing()
        if pairing.constant_term():
            raise DomainError(
                "1/Z is not an exact series when both parameter families are "
                "numeric with overlapping support; use a specialization variable"
            )
        return (-pairing).exp()

    def z_series(self) -> TruncSeries:
        pairing = self.pairing()
        if pairing.constant_term():
            raise DomainError("Z is not an exact series for these parameters")
        return pairing.exp()


def plancherel_params(order: int) -> SchurParams:
    """Both families (s, 0, 0, ...) in the formal variable s; xi = s^2."""
    s = TruncSeries.variable(order, "s")
    return SchurParams(t=MiwaParams({1: s}), tprime=MiwaParams({1: s}), order=order)


def z_measure_params(z: Fraction, zprime: Fraction, order: int) -> SchurParams:
    """t_k = z s^k / k and t'_k = z' s^k / k with s the formal square root of xi."""
    z, zprime = Fraction(z), Fraction(zprime)
    t = {k: TruncSeries.variable(order, "s", k) * Fraction(z, k) for k in range(1, order + 1)}
    tp = {k: TruncSeries.variable(order, "s", k) * Fraction(zprime, k) for k in range(1, order + 1)}
    return SchurParams(t=MiwaParams(t), tprime=MiwaParams(tp), order=order)


@dataclass(frozen=True)
class JCoeffs:
    """Laurent coefficients J_n of exp(sum t_k z^k - sum t'_k z^{-k}), |n| <= order."""

    table: Mapping[int, TruncSeries]
    order: int

    def __post_init__(self):
        object.__setattr__(self, "table", MappingProxyType(dict(self.table)))

    def __getitem__(self, n: int) -> TruncSeries:
        got = self.table.get(n)
        return got if got is not None else TruncSeries.zero(self.order)


def j_coeffs(params: SchurParams) -> JCoeffs:
    """All J_n with |n| <= order; J_n has valuation >= |n|, so nothing is lost."""
    order = params.order
    plus = h_coeffs(params.t, order)  # z^{+a} side
    minus = h_coeffs(params.tprime.negated(), order)  # z^{-b} side
    table: dict[int, TruncSeries] = {}
    for n in range(-order, order + 1):
        acc = TruncSeries.zero(order)
        for a in range(max(n, 0), order + 1):
            b = a - n
            if b > order:
                continue
            if plus[a].is_zero() or minus[b].is_zero():
                continue
            va = plus[a].valuation()
            vb = minus[b].valuation()
            if va is not None and vb is not None and va + vb > order:
                continue
            acc = acc + plus[a] * minus[b]
        table[n] = acc
    return JCoeffs(table=table, order=order)


class KernelTables:
    """J-coefficients at (t, t') and at (-t, -t'), computed once per params."""

    def __init__(self, params: SchurParams):
        self.params = params
        self.jc = j_coeffs(params)
        self.jc_neg = j_coeffs(params.negated())

    def entry(self, i: HalfInt, j: HalfInt) -> TruncSeries:
        order = self.params.order
        acc = TruncSeries.zero(order)
        kk = 1  # doubled positive half-integer summation index
        while True:
            a2 = i.twice + kk
            b2 = j.twice + kk
            if a2 > 2 * order or b2 > 2 * order:
                break
            acc = acc + self.jc[a2 // 2] * self.jc_neg[-(b2 // 2)]
            kk += 2
        return acc


def kernel_entry(
    params: SchurParams, i: HalfInt, j: HalfInt, tables: KernelTables | None = None
) -> TruncSeries:
    """K(i, j) = sum over positive half-integers k of J_{i+k} * J_{-j-k}(-t, -t')."""
    if tables is None:
        tables = KernelTables(params)
    return tables.entry(i, j)


def correlation(
    params: SchurParams, points: Iterable[HalfInt], tables: KernelTables | None = None
) -> TruncSeries:
    """Containment probability of the point set, as det[K(x_i, x_j)]."""
    pts = sorted(set(points), reverse=True)
    if not pts:
        return TruncSeries.one(params.order)
    if tables is None:
        tables = KernelTables(params)
    matrix = [[tables.entry(xi, xj) for xj in pts] for xi in pts]
    return series_det(matrix)


def oracle_weight_terms(params: SchurParams) -> list[tuple[Partition, TruncSeries]]:
    """s_lam(t) * s_lam(t') for every lam with |lam| <= order and a surviving product.

    Shared by the brute-force correlation sums so a batch of point sets can
    reuse one sweep of Schur polynomial evaluations.
    """
    order = params.order
    sym_pair = _symbolic_mirror(params)
    terms: list[tuple[Partition, TruncSeries]] = []
    for n in range(order + 1):
        for lam in iter_partitions(n):
            left = schur(lam, params.t, order)
            if left.is_zero():
                continue
            if sym_pair:
                right = left.rename_family("t", "u")
            else:
                right = schur(lam, params.tprime, order)
            if right.is_zero():
                continue
            lv, rv = left.valuation(), right.valuation()
            if lv is not None and rv is not None and lv + rv > order:
                continue
            terms.append((lam, left * right))
    return terms


def _symbolic_mirror(params: SchurParams) -> bool:
    """True when t' is exactly the u-relabeling of a fully symbolic t."""
    tv, uv = params.t.values, params.tprime.values
    if set(tv) != set(uv):
        return False
    for k in tv:
        t_k, u_k = tv[k], uv[k]
        if not (isinstance(t_k, TruncSeries) and isinstance(u_k, TruncSeries)):
            return False
        if t_k.coeffs != {((k, 1),): Fraction(1)} or u_k.coeffs != {((-k, 1),): Fraction(1)}:
            return False
    return True


def correlation_oracle(
    params: SchurParams,
    points: Iterable[HalfInt],
    terms: list[tuple[Partition, TruncSeries]] | None = None,
) -> TruncSeries:
    """Brute-force containment probability: sum the weights of every partition
    of size <= order whose descent set contains the point set, times 1/Z."""
    pts = list(set(points))
    if terms is None:
        terms = oracle_weight_terms(params)
    acc = TruncSeries.zero(params.order)
    for lam, term in terms:
        if all(contains(lam, x) for x in pts):
            acc = acc + term
    return acc * params.z_inverse()


def weight(params: SchurParams, lam: Partition) -> TruncSeries:
    """Measure weight of one partition: s_lam(t) * s_lam(t') / Z."""
    if lam.size > params.order:
        raise DomainError(
            f"|lam| = {lam.size} exceeds the truncation order {params.order}"
        )
    left = schur(lam, params.t, params.order)
    right = schur(lam, params.tprime, params.order)
    return left * right * params.z_inverse()
