"""The q-weighted measure on all partitions: Frobenius correlations, expected
size, bulk limit, limit shape and an exact sampler.

The sampler draws the multiplicity of each part size independently from a
geometric law, which is exactly the product factorization of the partition
generating function; everything else is either a contour integral over one
period or a direct enumeration used as its cross-check.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

import numpy as np

from .errors import DomainError
from .partitions import HalfInt, Partition
from .thetas import ThetaContext, qpochhammer, theta3_circle

SQRT6 = math.sqrt(6.0)


# ---------------------------------------------------------------------------
# Frobenius-coordinate correlations


def frobenius_corr_integral(points: Iterable[HalfInt], ctx: ThetaContext) -> float:
    """Correlation of X inside the Frobenius coordinates, by quadrature.

    Integrates  prod_x e^{sgn(x) pi (i s - r x)} / (2 cosh(pi (i s - r x)))
    times theta3 on the unit circle over one period, with q = e^{-2 pi r}.
    The integrand is periodic and analytic, so the trapezoid rule converges
    spectrally; the node count doubles until two refinements agree.
    """
    pts = sorted(set(points), reverse=True)
    if ctx.q == 0.0:
        return 1.0 if not pts else 0.0
    r = -math.log(ctx.q) / (2.0 * math.pi)
    xs = np.array([p.twice / 2.0 for p in pts])
    signs = np.sign(xs)

    def evaluate(m: int) -> float:
        s = -0.5 + np.arange(m) / m
        w = 1j * s[:, None] - r * xs[None, :]
        factors = np.exp(signs[None, :] * math.pi * w) / (2.0 * np.cosh(math.pi * w))
        integrand = factors.prod(axis=1) * theta3_circle(s, r, ctx)
        return float(integrand.real.mean())

    m = 64
    prev = evaluate(m)
    for _ in range(8):
        m *= 2
        curr = evaluate(m)
        if abs(curr - prev) <= ctx.tail_eps * max(1.0, abs(curr)):
            return curr
        prev = curr
    return prev


def _window_masses(
    window: Sequence[HalfInt], qs: Sequence[float], cutoff: int
) -> dict[float, list[float]]:
    """For each q, the total q-mass of partitions by Frobenius membership mask.

    One depth-first sweep over all partitions of size <= cutoff, adding rows
    in weakly decreasing order.  Membership is detected through the descent
    set: a positive x is a Frobenius coordinate iff some row satisfies
    lam_i - i = x - 1/2, a negative x iff no row does AND the partition has
    at least -x + 1/2 rows (otherwise x sits in the untouched tail).
    masses[q][mask] sums q^{|lam|} over partitions hitting exactly the window
    subset encoded by the mask bits.
    """
    pos_bits: dict[int, int] = {}  # row delta lam_i - i -> bits to set
    neg_bits: dict[int, int] = {}  # row delta -> "already in descent set" bits
    neg_req: list[tuple[int, int]] = []  # (bit value, minimum row count)
    for bit, x in enumerate(window):
        m = (x.twice - 1) // 2
        if x.twice > 0:
            pos_bits[m] = pos_bits.get(m, 0) | (1 << bit)
        else:
            neg_bits[m] = neg_bits.get(m, 0) | (1 << bit)
            neg_req.append((1 << bit, -m))
    qlist = list(qs)
    masses: dict[float, list[float]] = {q: [0.0] * (1 << len(window)) for q in qlist}
    qpows = {q: [q**i for i in range(cutoff + 1)] for q in qlist}

    def visit(nrows: int, size: int, maxpart: int, pos_mask: int, seen_mask: int) -> None:
        node_mask = pos_mask
        for bitval, minrows in neg_req:
            if not seen_mask & bitval and nrows >= minrows:
                node_mask |= bitval
        for q in qlist:
            masses[q][node_mask] += qpows[q][size]
        if size == cutoff:
            return
        i = nrows + 1
        for p in range(min(maxpart, cutoff - size), 0, -1):
            delta = p - i
            visit(
                i,
                size + p,
                p,
                pos_mask | pos_bits.get(delta, 0),
                seen_mask | neg_bits.get(delta, 0),
            )

    visit(0, 0, cutoff, 0, 0)
    return masses


def _mask_correlation(
    masses: Sequence[float], window: Sequence[HalfInt], points: Sequence[HalfInt], norm: float
) -> float:
    want = 0
    for bit, x in enumerate(window):
        if x in points:
            want |= 1 << bit
    total = sum(
        masses[mask] for mask in range(len(masses)) if mask & want == want
    )
    return norm * float(total)


def frobenius_corr_enum(
    points: Iterable[HalfInt], ctx: ThetaContext, cutoff: int
) -> float:
    """Brute-force Frobenius correlation over partitions of size <= cutoff."""
    pts = sorted(set(points), reverse=True)
    if not pts:
        window: list[HalfInt] = []
    else:
        window = pts
    masses = _window_masses(window, [ctx.q], cutoff)[ctx.q]
    return _mask_correlation(masses, window, pts, qpochhammer(ctx))


def frobenius_corr_enum_batch(
    window: Sequence[HalfInt],
    point_sets: Sequence[Sequence[HalfInt]],
    qs: Sequence[float],
    cutoff: int,
    tail_eps: float = 1e-15,
) -> dict[tuple[float, tuple[HalfInt, ...]], float]:
    """All correlations for subsets of one window, sharing a single sweep."""
    window = list(window)
    masses = _window_masses(window, qs, cutoff)
    out = {}
    for q in qs:
        norm = qpochhammer(ThetaContext(q=q, tail_eps=tail_eps))
        for pts in point_sets:
            key = (q, tuple(sorted(pts, reverse=True)))
            out[key] = _mask_correlation(masses[q], window, list(pts), norm)
    return out


# ---------------------------------------------------------------------------
# Expected size, bulk limit, limit shape


@dataclass(frozen=True)
class ExpectedSize:
    """Divisor-sum coefficients sigma_1(1..nmax) and the numeric sum at q."""

    coeffs: tuple[int, ...]
    value: float
    q: float


def sigma1_coeffs(nmax: int) -> list[int]:
    """sigma_1(n) for n = 1..nmax by a divisor sieve."""
    sums = [0] * (nmax + 1)
    for d in range(1, nmax + 1):
        for mult in range(d, nmax + 1, d):
            sums[mult] += d
    return sums[1:]


def expected_size(ctx: ThetaContext, nmax: int) -> ExpectedSize:
    """Mean partition size: the generating function sum_n sigma_1(n) q^n."""
    if nmax < 1:
        raise DomainError("nmax must be >= 1")
    coeffs = sigma1_coeffs(nmax)
    q = ctx.q
    total = 0.0
    qpow = 1.0
    for n, c in enumerate(coeffs, start=1):
        qpow *= q
        term = c * qpow
        total += term
        if term < ctx.tail_eps * max(total, 1.0) and n > 8:
            break
    return ExpectedSize(coeffs=tuple(coeffs), value=total, q=q)


def size_variance(ctx: ThetaContext) -> float:
    """Var|lam| = sum_k k^2 q^k / (1 - q^k)^2 from the independent multiplicities."""
    q = ctx.q
    total = 0.0
    k = 1
    while k < ctx.max_terms:
        qk = q**k
        if qk < ctx.tail_eps and k > 8:
            break
        total += k * k * qk / (1.0 - qk) ** 2
        k += 1
    return total


def bulk_limit(xis: Sequence[float]) -> float:
    """Limiting correlation at scaled positions: prod (1 + e^{pi |xi| / sqrt 6})^{-1}."""
    out = 1.0
    for xi in xis:
        out /= 1.0 + math.exp(math.pi * abs(xi) / SQRT6)
    return out


def vershik(u: float) -> tuple[float, float]:
    """Limit shape in rotated coordinates: v = Y(u), plus its slope.

    Y(u) = (2 sqrt 6 / pi) log(2 cosh(pi u / (2 sqrt 6))), Y'(u) = tanh of the
    same argument; (1 - |Y'|)/2 reproduces the one-point bulk limit.
    """
    a = math.pi * u / (2.0 * SQRT6)
    # log(2 cosh a) = |a| + log(1 + e^{-2|a|}), stable for large |a|
    upsilon = (2.0 * SQRT6 / math.pi) * (abs(a) + math.log1p(math.exp(-2.0 * abs(a))))
    return upsilon, math.tanh(a)


# ---------------------------------------------------------------------------
# Sampler


def _part_cutoff(q: float, eps: float) -> int:
    """Largest part K with total tail probability of any part > K below eps."""
    if q <= 0.0:
        return 1
    return max(1, math.ceil(math.log(eps * (1.0 - q)) / math.log(q)))


def sample(ctx: ThetaContext, seed: int) -> Partition:
    """One draw from the measure, deterministic in the seed."""
    return next(iter(sample_many(ctx, 1, seed)))


def sample_many(
    ctx: ThetaContext, count: int, seed: int, threads: int = 1, chunk: int = 10_000
) -> Iterator[Partition]:
    """Stream of draws; chunked so the output never depends on thread count.

    Each chunk gets an independent child generator spawned from the seed, and
    chunks are emitted in index order, so any parallel execution of chunks
    reduces deterministically.
    """
    if not 0.0 < ctx.q < 1.0:
        raise DomainError("sampling requires q in (0, 1)")
    if count < 1:
        raise DomainError("count must be >= 1")
    kmax = _part_cutoff(ctx.q, min(ctx.tail_eps, 1e-12))
    nchunks = (count + chunk - 1) // chunk
    children = np.random.SeedSequence(seed).spawn(nchunks)

    def draw_chunk(idx: int) -> "np.ndarray":
        rng = np.random.default_rng(children[idx])
        size = min(chunk, count - idx * chunk)
        probs = 1.0 - ctx.q ** np.arange(1, kmax + 1)
        return rng.geometric(p=probs, size=(size, kmax)) - 1

    if threads > 1 and nchunks > 1:
        from concurrent.futures import ThreadPoolExecutor

        with ThreadPoolExecutor(max_workers=threads) as pool:
            chunks = list(pool.map(draw_chunk, range(nchunks)))
    else:
        chunks = [draw_chunk(i) for i in range(nchunks)]

    for mults in chunks:
        for row in mults:
            parts: list[int] = []
            for k in range(kmax, 0, -1):
                parts.extend([k] * int(row[k - 1]))
            yield Partition(parts)
