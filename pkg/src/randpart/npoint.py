"""n-point functions of the q-weighted measure on all partitions.

Two independent evaluators:

- ``npoint_direct``: the defining sum over partitions with |lam| <= cutoff.
  Each row sum splits into the finite head over actual rows and the closed
  geometric tail over the empty rows, so the only truncation left is in the
  partition size itself.  For n = 1 the sum is regrouped exactly by (row
  index, part value) which turns it into a small counting table; for n >= 2
  the partitions are walked row by row with incremental state.
- ``npoint_theta``: the closed form as a permutation sum of theta-derivative
  determinants divided by a chain of theta values.

Their agreement is the headline cross-check of the closed form.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .errors import DomainError, NumericGuardError
from .thetas import ThetaContext, _theta11_reduced, qpochhammer


@dataclass(frozen=True)
class NPointRequest:
    """Evaluation points plus the q context they are evaluated in."""

    ts: tuple[float, ...]
    ctx: ThetaContext

    def __post_init__(self):
        if not self.ts:
            raise DomainError("at least one evaluation point is required")
        object.__setattr__(self, "ts", tuple(float(t) for t in self.ts))

    @property
    def q(self) -> float:
        return self.ctx.q

    @property
    def n(self) -> int:
        return len(self.ts)

    def check_direct_domain(self) -> None:
        """Direct summation needs |t_i| > 1 and |t_1 ... t_n| < 1/q."""
        if any(abs(t) <= 1.0 for t in self.ts):
            raise DomainError(f"direct summation needs |t_i| > 1, got {self.ts}")
        prod = abs(math.prod(self.ts))
        if self.q > 0 and prod >= 1.0 / self.q:
            raise DomainError(
                f"direct summation needs |t_1...t_n| < 1/q = {1.0 / self.q:.6g}, got {prod:.6g}"
            )


@dataclass(frozen=True)
class NPointValue:
    value: float
    error_estimate: float
    cutoff: int


def _geometric_tail(t: float, rows: int) -> float:
    """sum_{i > rows} t^{-i + 1/2} in closed form, |t| > 1."""
    return t ** (-rows - 0.5) / (1.0 - 1.0 / t)


@lru_cache(maxsize=None)
def _bounded_part_counts(cutoff: int) -> "np.ndarray":
    """counts[c, m] = number of partitions of c with parts <= m (floats)."""
    counts = np.zeros((cutoff + 1, cutoff + 1))
    counts[0, :] = 1.0
    for c in range(1, cutoff + 1):
        for m in range(1, cutoff + 1):
            counts[c, m] = counts[c, m - 1] + (counts[c - m, m] if c >= m else 0.0)
    return counts


def _single_point_sum(t: float, q: float, cutoff: int) -> float:
    """sum over |lam| <= cutoff of q^{|lam|} * (head + tail) for one point.

    Exact regrouping of the per-partition sum: the head is summed by the
    (row index i, part value m) of each cell's row, counting partitions with
    lam_i = m through bounded-part tables; the tail is summed by the number
    of rows.  Equals the naive per-partition sum at the same cutoff.
    """
    counts = _bounded_part_counts(cutoff)
    qpow = q ** np.arange(cutoff + 1)
    # head: rows above i have parts >= m (shift by m each), rows below <= m
    head = 0.0
    for m in range(1, cutoff + 1):
        below = qpow[: cutoff + 1] * counts[:, m]
        for i in range(1, cutoff // m + 1):
            budget = cutoff - m * i
            if budget < 0:
                break
            above = qpow[: budget + 1] * counts[: budget + 1, i - 1] if i > 1 else None
            if i == 1:
                mass = below[: budget + 1].sum()
            else:
                mass = np.convolve(above, below[: budget + 1])[: budget + 1].sum()
            head += (q ** (m * i)) * (t ** (m - i + 0.5)) * mass
    # tail: partitions with exactly ell rows; exactly ell <-> largest part ell
    # in the conjugate, so the count is counts[b - ell, ell]
    tail = _geometric_tail(t, 0)  # ell = 0, lam empty
    for ell in range(1, cutoff + 1):
        budget = cutoff - ell
        mass = (qpow[: budget + 1] * counts[: budget + 1, ell]).sum() * q**ell
        tail += _geometric_tail(t, ell) * mass
    return head + tail


def _multi_point_sum(ts: tuple[float, ...], q: float, cutoff: int, prune_eps: float) -> tuple[float, float]:
    """Row-by-row walk over all partitions of size <= cutoff.

    Every node of the walk is one partition; the per-point head sums update
    incrementally.  Subtrees whose total possible contribution is provably
    below ``prune_eps`` are skipped and accounted into the returned bound.
    """
    n = len(ts)
    inv_gap = [1.0 / (1.0 - 1.0 / t) for t in ts]
    qq_inv = 1.0
    if q > 0:
        # sum over nonempty partitions of q^{|mu|} <= 1/(q;q)_inf - 1
        prod = 1.0
        term = q
        while term > 1e-18:
            prod *= 1.0 - term
            term *= q
        qq_inv = 1.0 / prod - 1.0

    total = 0.0
    pruned = 0.0

    def visit(heads: list[float], rows: int, budget: int, maxpart: int, qpow: float) -> None:
        nonlocal total, pruned
        value = qpow
        for k in range(n):
            value_k = heads[k] + _geometric_tail(ts[k], rows)
            value *= value_k
        total += value
        if budget == 0 or maxpart == 0:
            return
        # bound everything below this node: completions add >= 1 cell each
        bound = qpow * qq_inv
        for k in range(n):
            t = ts[k]
            ub = heads[k] + (t ** (maxpart - rows - 0.5) + t ** (-rows - 0.5)) * inv_gap[k]
            bound *= ub
        if bound < prune_eps:
            pruned += bound
            return
        for p in range(min(budget, maxpart), 0, -1):
            new_heads = [heads[k] + ts[k] ** (p - rows - 0.5) for k in range(n)]
            visit(new_heads, rows + 1, budget - p, p, qpow * q**p)

    visit([0.0] * n, 0, cutoff, cutoff, 1.0)
    return total, pruned


def _truncation_estimate(ts: tuple[float, ...], q: float, cutoff: int) -> float:
    """Crude geometric bound on the partition-size tail beyond the cutoff."""
    big_t = math.prod(max(abs(t), 1.0) for t in ts)
    g = q * big_t
    if g >= 1.0 or q == 0.0:
        return 0.0 if q == 0.0 else math.inf
    row_consts = math.prod(1.0 + 1.0 / (math.sqrt(abs(t)) - 1.0 / math.sqrt(abs(t))) for t in ts)
    return g ** (cutoff + 1) / (1.0 - g) * row_consts


def npoint_direct(req: NPointRequest, cutoff: int) -> NPointValue:
    """Defining sum over partitions with |lam| <= cutoff, tail rows in closed form."""
    req.check_direct_domain()
    if cutoff < 0:
        raise DomainError("cutoff must be >= 0")
    q = req.q
    if len(req.ts) == 1:
        raw = _single_point_sum(req.ts[0], q, cutoff)
        pruned = 0.0
    else:
        # keep pruning far below the attainable accuracy
        scale = abs(math.prod(_geometric_tail(t, 0) for t in req.ts))
        raw, pruned = _multi_point_sum(req.ts, q, cutoff, prune_eps=1e-19 * max(scale, 1e-3))
    norm = qpochhammer(req.ctx)
    est = norm * (_truncation_estimate(req.ts, q, cutoff) + pruned)
    return NPointValue(value=norm * raw, error_estimate=est, cutoff=cutoff)


def _theta_chain(req: NPointRequest, sigma: tuple[int, ...]) -> float:
    """Denominator theta(t_{s1}) theta(t_{s1} t_{s2}) ... theta(t_{s1}..t_{sn})."""
    ctx = req.ctx
    prod = 1.0
    arg = 1.0
    for idx in sigma:
        arg *= req.ts[idx]
        val = _theta11_reduced(arg, ctx)
        if abs(val) < ctx.pole_tol:
            raise NumericGuardError(
                f"theta argument {arg:.8g} is within {ctx.pole_tol} of a zero"
            )
        prod *= val
    return prod


def npoint_theta(req: NPointRequest) -> float:
    """Closed form: permutation sum of theta-derivative determinants.

    All theta values use the common reduced normalization, in which the
    formula is homogeneous of degree zero, so the prefactor choice drops out;
    this also makes q = 0 a regular point.
    """
    ctx = req.ctx
    n = req.n
    total = 0.0
    inv_fact = [1.0 / math.factorial(k) for k in range(n + 2)]
    for sigma in itertools.permutations(range(n)):
        prefix = [1.0] * (n + 1)
        for m in range(1, n + 1):
            prefix[m] = prefix[m - 1] * req.ts[sigma[m - 1]]
        matrix = np.empty((n, n))
        for i in range(1, n + 1):
            for j in range(1, n + 1):
                k = j - i + 1
                if k < 0:
                    matrix[i - 1, j - 1] = 0.0
                else:
                    matrix[i - 1, j - 1] = (
                        _theta11_reduced(prefix[n - j], ctx, k=k) * inv_fact[k]
                    )
        det = float(np.linalg.det(matrix)) if n > 1 else matrix[0, 0]
        total += det / _theta_chain(req, sigma)
    return total


def qdiff_residual(req: NPointRequest) -> float:
    """|LHS - RHS| of the q-difference relation, both sides via the closed form.

    F(q t_1, t_2, ..., t_n) = -q^{1/2} t_1...t_n *
        sum over subsets S of {2..n} of (-1)^{|S|}
        F(t_1 * prod_S t_i, rest without S).
    """
    ctx = req.ctx
    q = ctx.q
    if q == 0.0:
        raise DomainError("the q-difference relation degenerates at q = 0")
    lhs_points = (q * req.ts[0],) + req.ts[1:]
    lhs = npoint_theta(NPointRequest(ts=lhs_points, ctx=ctx))
    rest = list(range(1, req.n))
    rhs_sum = 0.0
    for size in range(len(rest) + 1):
        for subset in itertools.combinations(rest, size):
            first = req.ts[0] * math.prod(req.ts[i] for i in subset)
            others = tuple(req.ts[i] for i in rest if i not in subset)
            value = npoint_theta(NPointRequest(ts=(first,) + others, ctx=ctx))
            rhs_sum += (-1.0) ** size * value
    rhs = -math.sqrt(q) * math.prod(req.ts) * rhs_sum
    return abs(lhs - rhs)
