"""Genus-1 theta functions and q-series evaluation.

The odd theta function is normatively defined by its sum

    theta11(x; q) = sum_n (-1)^n q^{(n+1/2)^2/2} x^{n+1/2}

and the product form carries the prefactor q^{1/8} forced by the n = 0 term.
All evaluators truncate two-sided sums when a term falls below ``tail_eps``
relative to the largest term seen, with a hard ``max_terms`` cap for q near 1.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import DomainError


@dataclass(frozen=True)
class ThetaContext:
    """q plus truncation and guard policy for every numeric q-series."""

    q: float
    tail_eps: float = 1e-15
    max_terms: int = 20_000
    deriv_cap: int = 12
    pole_tol: float = 1e-12

    def __post_init__(self):
        if not 0.0 <= self.q < 1.0:
            raise DomainError(f"q must lie in [0, 1), got {self.q}")
        if self.tail_eps <= 0:
            raise ValueError("tail_eps must be positive")


def qpoch(a: float, ctx: ThetaContext) -> float:
    """(a; q)_infinity = prod_{n>=0} (1 - a q^n)."""
    q = ctx.q
    prod = 1.0
    term = a
    for _ in range(ctx.max_terms):
        prod *= 1.0 - term
        term *= q
        if abs(term) < ctx.tail_eps:
            break
    return prod


def qpochhammer(ctx: ThetaContext) -> float:
    """(q; q)_infinity."""
    return qpoch(ctx.q, ctx)


def _theta11_reduced(x: float, ctx: ThetaContext, k: int = 0) -> float:
    """theta11 / q^{1/8} via the pairing n <-> -n-1; finite and 1 at q = 0 scale.

    The n-th reduced term is (-1)^n q^{(n^2+n)/2} (n+1/2)^k (x^{n+1/2} -+ x^{-n-1/2}),
    with - for even k and + for odd k.
    """
    if x <= 0:
        raise DomainError("theta evaluators take x on the positive real axis")
    q = ctx.q
    sqrt_x = math.sqrt(x)
    total = 0.0
    scale = 0.0
    qpow = 1.0  # q^{(n^2+n)/2}
    xpow_p = sqrt_x  # x^{n+1/2}
    xpow_m = 1.0 / sqrt_x  # x^{-n-1/2}
    sign = 1.0
    for n in range(ctx.max_terms):
        half = n + 0.5
        hk = half**k
        mirror = -1.0 if k % 2 == 0 else 1.0
        term = sign * qpow * hk * (xpow_p + mirror * xpow_m)
        total += term
        mag = abs(qpow) * hk * (abs(xpow_p) + abs(xpow_m))
        scale = max(scale, mag)
        if mag < ctx.tail_eps * max(scale, 1e-300) and n >= 2:
            break
        qpow *= q ** (n + 1)
        xpow_p *= x
        xpow_m /= x
        sign = -sign
    return total


def theta11(x: float, ctx: ThetaContext) -> float:
    """Odd theta sum; at q = 0 the q^{1/8} prefactor is normalized to 1."""
    reduced = _theta11_reduced(x, ctx, k=0)
    if ctx.q == 0.0:
        return reduced
    return ctx.q**0.125 * reduced


def theta11_product(x: float, ctx: ThetaContext) -> float:
    """Product form q^{1/8} (x^{1/2} - x^{-1/2}) (q;q)(qx;q)(q/x;q), all infinite."""
    if x <= 0:
        raise DomainError("theta evaluators take x on the positive real axis")
    q = ctx.q
    prefactor = 1.0 if q == 0.0 else q**0.125
    sqrt_x = math.sqrt(x)
    return (
        prefactor
        * (sqrt_x - 1.0 / sqrt_x)
        * qpochhammer(ctx)
        * qpoch(q * x, ctx)
        * qpoch(q / x, ctx)
    )


def theta_deriv(k: int, x: float, ctx: ThetaContext) -> float:
    """(x d/dx)^k theta11, termwise; same q = 0 normalization as theta11."""
    if k < 0:
        raise ValueError("derivative index must be >= 0")
    if k > ctx.deriv_cap:
        raise DomainError(f"derivative order {k} exceeds the configured cap {ctx.deriv_cap}")
    reduced = _theta11_reduced(x, ctx, k=k)
    if ctx.q == 0.0:
        return reduced
    return ctx.q**0.125 * reduced


def theta3(z: float, ctx: ThetaContext) -> float:
    """theta3(z; q) = sum_n q^{n^2/2} z^n, symmetric two-sided sum."""
    if z == 0:
        raise DomainError("theta3 requires z != 0")
    q = ctx.q
    total = 1.0
    scale = 1.0
    zp = 1.0
    zm = 1.0
    for n in range(1, ctx.max_terms):
        zp *= z
        zm /= z
        qn = q ** (n * n / 2.0)
        term = qn * (zp + zm)
        total += term
        mag = qn * (abs(zp) + abs(zm))
        scale = max(scale, mag)
        if mag < ctx.tail_eps * scale:
            break
    return total


def theta3_product(z: float, ctx: ThetaContext) -> float:
    """Triple product (q;q) (q^{1/2} z; q) (q^{1/2}/z; q)."""
    if z == 0:
        raise DomainError("theta3 requires z != 0")
    sq = math.sqrt(ctx.q)
    return qpochhammer(ctx) * qpoch(sq * z, ctx) * qpoch(sq / z, ctx)


def theta3_circle(s: "np.ndarray", r: float, ctx: ThetaContext) -> "np.ndarray":
    """theta3(e^{2 pi i s}; e^{-2 pi r}) on the unit circle, vectorized and real.

    For r < 0.05 the modular rewrite r^{-1/2} sum_n exp(-pi (s-n)^2 / r)
    converges in a couple of terms where the direct series would need many.
    """
    import numpy as np

    s = np.asarray(s, dtype=float)
    if r <= 0:
        raise DomainError("theta3_circle requires r > 0")
    if r < 0.05:
        total = np.zeros_like(s)
        nmax = int(math.ceil(math.sqrt(r * 700.0 / math.pi))) + 2
        for n in range(-nmax, nmax + 1):
            total += np.exp(-math.pi * (s - n) ** 2 / r)
        return total / math.sqrt(r)
    q = math.exp(-2.0 * math.pi * r)
    total = np.ones_like(s)
    for n in range(1, ctx.max_terms):
        qn = q ** (n * n / 2.0)
        if qn < ctx.tail_eps:
            break
        total += 2.0 * qn * np.cos(2.0 * math.pi * n * s)
    return total
