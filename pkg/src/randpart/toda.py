"""Tau sequences from translated correlations and the bilinear lattice check.

tau_n = Z * rho(X - n) as an exact series in the two parameter families.  The
lattice equation in t_1, t'_1 is verified in its bilinear form

    tau_n * d2(tau_n) - d_t(tau_n) * d_u(tau_n) - tau_{n+1} * tau_{n-1}

which is total (no division by a series with zero constant term) and must
vanish identically through degree order - 2.
"""

from __future__ import annotations

from dataclasses import dataclass
from types import MappingProxyType
from typing import Iterable, Literal, Mapping

from .partitions import HalfInt
from .schur_measure import KernelTables, SchurParams, correlation, correlation_oracle, oracle_weight_terms
from .series import TruncSeries


@dataclass(frozen=True)
class TauSequence:
    """tau_n for n in [n_min, n_max], all at one truncation order."""

    points: tuple[HalfInt, ...]
    taus: Mapping[int, TruncSeries]
    order: int
    n_min: int
    n_max: int

    def __post_init__(self):
        object.__setattr__(self, "taus", MappingProxyType(dict(self.taus)))

    def __getitem__(self, n: int) -> TruncSeries:
        if not self.n_min <= n <= self.n_max:
            raise KeyError(f"tau index {n} outside [{self.n_min}, {self.n_max}]")
        return self.taus[n]


def tau_sequence(
    points: Iterable[HalfInt],
    n_min: int,
    n_max: int,
    order: int,
    params: SchurParams | None = None,
    method: Literal["kernel", "oracle"] = "kernel",
) -> TauSequence:
    """Build tau_n = Z * rho(X - n) for n in [n_min, n_max]."""
    if n_min > n_max:
        raise ValueError("n_min must be <= n_max")
    pts = tuple(sorted(set(points), reverse=True))
    if params is None:
        params = SchurParams.symbolic(order)
    if params.order != order:
        raise ValueError("params order must match the requested order")
    z = params.z_series()
    taus: dict[int, TruncSeries] = {}
    if method == "kernel":
        tables = KernelTables(params)
        for n in range(n_min, n_max + 1):
            rho = correlation(params, [x - n for x in pts], tables=tables)
            taus[n] = z * rho
    elif method == "oracle":
        terms = oracle_weight_terms(params)
        zinv = params.z_inverse()
        for n in range(n_min, n_max + 1):
            rho = correlation_oracle(params, [x - n for x in pts], terms=terms)
            taus[n] = z * rho
    else:
        raise ValueError(f"unknown method {method!r}")
    return TauSequence(points=pts, taus=taus, order=order, n_min=n_min, n_max=n_max)


def toda_bilinear_check(seq: TauSequence, n: int) -> TruncSeries:
    """Bilinear lattice residual at site n, exact through degree order - 2.

    A zero residual is a PASS; the caller inspects `.is_zero()`.
    """
    if not (seq.n_min <= n - 1 and n + 1 <= seq.n_max):
        raise ValueError(f"need tau at n-1, n, n+1; {n} +/- 1 outside [{seq.n_min}, {seq.n_max}]")
    d = seq.order - 2
    if d < 0:
        raise ValueError("order must be >= 2 for the bilinear check")
    tau = seq[n]
    dd = tau.diff("t1").diff("u1")  # exact through order - 2
    dt = tau.diff("t1").truncate(d)
    du = tau.diff("u1").truncate(d)
    tau_d = tau.truncate(d)
    neighbors = (seq[n + 1] * seq[n - 1]).truncate(d)
    return tau_d * dd - dt * du - neighbors
