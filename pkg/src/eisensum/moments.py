"""First-moment sums of S(1,c)/√N(c) over arithmetic progressions.

Everything is weighted by a fixed smooth bump g supported in [1, 2]
(the concrete choice g(t) = exp(−1/((t−1)(2−t))) keeps outputs
reproducible).  The signed sums exhibit the cancellation coming from the
X^{5/6} main term; the harness reports a power-law fit of |sum| against X
but treats the cancellation ratio, not the exponent, as the meaningful
desk-scale statistic.

Float accumulation uses math.fsum (exactly rounded), and terms are always
enumerated in ascending (norm(c), a, b) order, so within-platform results
are deterministic and the one-pass Σ(D) evaluation agrees bit-for-bit with
the naive flat double loop over the same term multiset.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Callable, Sequence

import numpy as np
from scipy.integrate import quad

from . import core
from .core import Eisenstein, as_eisenstein
from .sums import s_cubic_value


@dataclass(frozen=True)
class SmoothBump:
    """g(t) = scale·exp(−1/((t−1)(2−t))) on (1, 2), zero elsewhere.

    Smooth, nonnegative, and flat to all orders at both endpoints.
    """

    scale: float = 1.0
    support: tuple[float, float] = (1.0, 2.0)

    def __call__(self, t):
        t = np.asarray(t, dtype=np.float64)
        lo, hi = self.support
        inside = (t > lo) & (t < hi)
        out = np.zeros_like(t)
        u = np.where(inside, (t - lo) * (hi - t), 1.0)
        out = np.where(inside, self.scale * np.exp(-1.0 / u), 0.0)
        return float(out) if out.ndim == 0 else out


def mellin(g: Callable[[float], float], s: complex,
           support: tuple[float, float] | None = None) -> complex:
    """ĝ(s) = ∫ g(t) t^{s−1} dt by adaptive quadrature, abs error ≤ 1e−10."""
    if support is None:
        support = getattr(g, "support", (1.0, 2.0))
    lo, hi = support
    s = complex(s)

    def integrand_re(t):
        return (g(t) * t ** (s - 1)).real

    def integrand_im(t):
        return (g(t) * t ** (s - 1)).imag

    re, re_err = quad(integrand_re, lo, hi, epsabs=1e-12, epsrel=1e-12, limit=300)
    im, im_err = quad(integrand_im, lo, hi, epsabs=1e-12, epsrel=1e-12, limit=300)
    if re_err + im_err > 1e-10:
        raise ArithmeticError(f"Mellin quadrature error {re_err + im_err:.2e} above tolerance")
    return complex(re, im)


@dataclass(frozen=True)
class MomentRow:
    """One first-moment evaluation: Σ S(1,c)/√N(c) · g(N(c)/X) over c ≡ 0 (d)."""

    X: float
    d: Eisenstein
    sum_value: float
    abs_sum_value: float
    term_count: int


def progression_moduli(X: float, d: Eisenstein) -> list[Eisenstein]:
    """Primary c ≡ 0 (mod d) with N(c) ∈ [X, 2X], ascending (norm, a, b).

    Each ideal multiple of (d) coprime to λ has exactly one primary
    generator, obtained as the primary associate of d·m with m primary.
    """
    d = as_eisenstein(d)
    nd = d.norm()
    lo = max(1, math.ceil(X / nd))
    hi = math.floor(2.0 * X / nd) + 1
    out = [core.primary_associate(d * m)[1] for m in core.primary_in_range(lo, hi)]
    out.sort(key=Eisenstein.key)
    return out


def first_moment(X: float, d: Eisenstein, g: SmoothBump) -> MomentRow:
    """Signed and absolute first moments over primary c ≡ 0 (mod d)."""
    d = as_eisenstein(d)
    if not d.is_primary():
        raise ValueError("d must be primary (hence coprime to 3)")
    if X < 10:
        raise ValueError("X must be at least 10")
    terms = []
    count = 0
    for c in progression_moduli(X, d):
        n = c.norm()
        w = float(g(n / X))
        if w == 0.0:
            continue
        count += 1
        s = s_cubic_value(core.ONE, c).real / math.sqrt(n)
        terms.append((s * w, abs(s) * w))
    return MomentRow(
        X=X, d=d,
        sum_value=math.fsum(t[0] for t in terms),
        abs_sum_value=math.fsum(t[1] for t in terms),
        term_count=count,
    )


def moment_series(Xs: Sequence[float], d: Eisenstein, g: SmoothBump) -> list[MomentRow]:
    return [first_moment(X, d, g) for X in Xs]


def sigma_D(X: float, D: float, g: SmoothBump) -> float:
    """Σ(D) = Σ_{N(d) ≤ D, d primary} first_moment(X, d), in one pass over c.

    Each primary c is credited once per primary divisor d with N(d) ≤ D
    (divisors read off its factorization); the flat fsum over all (d, c)
    term values makes this bit-identical to the naive double loop.
    """
    if D < 1:
        raise ValueError("D must be at least 1")
    terms = []
    for c in core.primary_in_range(max(1, math.ceil(X)), math.floor(2 * X) + 1):
        n = c.norm()
        w = float(g(n / X))
        if w == 0.0:
            continue
        fact = core.factor(c)
        multiplicity = sum(1 for _ in fact.divisors(max_norm=int(D)))
        value = s_cubic_value(core.ONE, c, fact).real / math.sqrt(n) * w
        terms.extend([value] * multiplicity)
    return math.fsum(terms)


@dataclass(frozen=True)
class SlopeFit:
    exponent: float
    stderr: float


def slope_fit(series: Sequence[MomentRow]) -> SlopeFit:
    """OLS slope of log|sum| against log X, with its standard error."""
    if len(series) < 4:
        raise ValueError("need at least 4 grid points")
    if any(row.sum_value == 0.0 for row in series):
        raise ValueError("all sums must be nonzero for a log fit")
    x = np.log([row.X for row in series])
    y = np.log([abs(row.sum_value) for row in series])
    if np.ptp(x) == 0:
        raise ValueError("degenerate grid: all X equal")
    xbar = x.mean()
    sxx = float(np.sum((x - xbar) ** 2))
    slope = float(np.sum((x - xbar) * (y - y.mean())) / sxx)
    resid = y - (y.mean() + slope * (x - xbar))
    dof = len(series) - 2
    stderr = float(math.sqrt(float(np.sum(resid ** 2)) / dof / sxx)) if dof > 0 else float("nan")
    return SlopeFit(exponent=slope, stderr=stderr)


def theta_term_estimate(row: MomentRow, g: SmoothBump) -> float:
    """Empirical sum / (ĝ(1/6)·X^{5/6}): a desk estimate of the progression
    constant in the first-moment main term (its true value is not computed
    here)."""
    gh = mellin(g, 1.0 / 6.0).real
    return row.sum_value / (gh * row.X ** (5.0 / 6.0))
