"""Vertical Sato-Tate experiments, the sign-change census, triple products.

The vertical law says the angles θ_{a,π}, a running over residues mod π,
equidistribute for the semicircle-type measure

    μ_ST([α, β]) = (β − α)/π − (sin 2β − sin 2α)/(2π)   (density 2/π·sin²)

as N(π) → ∞.  The census counts sign classes of S(1, c) over almost-prime
primary moduli; the triple-product experiment measures how often the angle
of one prime factor of c = π₁π₂π₃ falls in a prescribed interval I, which
drives the lower bound for sums of |S(1,c)|.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence

import numpy as np
from scipy.optimize import brentq
from scipy.stats import kstest

from . import core, sieve
from .core import Eisenstein, as_eisenstein
from .moments import SmoothBump
from .sums import (
    AngleSample,
    angle_table,
    angles_for_prime,
    s_cubic_direct,
    s_cubic_value,
)


# ---------------------------------------------------------------------------
# The measure
# ---------------------------------------------------------------------------

def mu_st(alpha: float, beta: float) -> float:
    """μ_ST([α, β]) = (β−α)/π − (sin 2β − sin 2α)/(2π), for 0 ≤ α ≤ β ≤ π."""
    if not (0.0 <= alpha <= beta <= math.pi + 1e-15):
        raise ValueError("need 0 ≤ α ≤ β ≤ π")
    return (beta - alpha) / math.pi - (math.sin(2 * beta) - math.sin(2 * alpha)) / (2 * math.pi)


def mu_st_cdf(theta):
    """μ_ST([0, θ]), vectorized."""
    theta = np.asarray(theta, dtype=np.float64)
    out = theta / math.pi - np.sin(2 * theta) / (2 * math.pi)
    return float(out) if out.ndim == 0 else out


def solve_interval_t(mass: float) -> float:
    """t ∈ (0, π/2) with μ_ST([0,t] ∪ [π−t, π]) = mass, i.e. (2t − sin 2t)/π = mass."""
    if not 0.0 < mass < 1.0:
        raise ValueError("mass must lie strictly between 0 and 1")
    return float(brentq(lambda t: (2 * t - math.sin(2 * t)) / math.pi - mass,
                        0.0, math.pi / 2, xtol=1e-14, rtol=8.9e-16))


def in_symmetric_interval(theta: float, t: float) -> bool:
    """θ ∈ I = [0, t] ∪ [π − t, π]."""
    return theta <= t or theta >= math.pi - t


# ---------------------------------------------------------------------------
# Vertical Sato-Tate experiment
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class SatoTateResult:
    prime: Eisenstein
    samples: list[AngleSample]
    ks_distance: float


def sato_tate_experiment(pi: Eisenstein, collect_samples: bool = True) -> SatoTateResult:
    """Angles θ_{a,π} for all a ≢ 0 (mod π) and their KS distance from μ_ST."""
    pi = as_eisenstein(pi)
    n = pi.norm()
    if n < 5 or n == 3 or not core.is_prime(pi):
        raise ValueError("need a prime π with N(π) ≥ 5 and π ∤ 3")
    theta = angles_for_prime(pi)
    ks = float(kstest(theta, mu_st_cdf).statistic)
    samples: list[AngleSample] = []
    if collect_samples:
        d1, _, d2 = core.hermite_box(pi)
        idx = 0
        for a2 in range(d2):
            for a1 in range(d1):
                if a1 == 0 and a2 == 0:
                    continue
                samples.append(AngleSample(prime=pi, twist=Eisenstein(a1, a2),
                                           theta=float(theta[idx])))
                idx += 1
    return SatoTateResult(prime=pi, samples=samples, ks_distance=ks)


def split_prime_of_norm_near(target: int) -> Eisenstein:
    """A primary split prime whose norm is the smallest prime ≥ target, ≡ 1 mod 3."""
    p = max(7, int(target))
    while True:
        if p % 3 == 1 and core._is_prime_rational(p):
            return core.split_rational_prime(p)
        p += 1


# ---------------------------------------------------------------------------
# Sign census (almost-prime moduli)
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class CensusRow:
    X: int
    u: float
    positives: int
    negatives: int
    zeros: int
    total: int

    def __post_init__(self):
        assert self.positives + self.negatives + self.zeros == self.total


#: below this norm a borderline |S| is re-classified by the exact zero test
_EXACT_ZERO_NORM_LIMIT = 4096


def sign_census(X: int, u: float) -> CensusRow:
    """Sign classes of S(1, c) over primary c, X ≤ N(c) < 2X, all prime
    factors of norm ≥ X^{1/u}; zero means |S| ≤ 10⁻⁶√N(c)."""
    if X < 10 or u < 1:
        raise ValueError("need X ≥ 10 and u ≥ 1")
    z = float(X) ** (1.0 / u)
    pos = neg = zer = 0
    for c in core.primary_in_range(X, 2 * X):
        n = c.norm()
        if sieve.min_prime_norm_of_norm(n) < z:
            continue
        s = s_cubic_value(core.ONE, c).real
        eps = 1e-6 * math.sqrt(n)
        if abs(s) <= eps:
            if n <= _EXACT_ZERO_NORM_LIMIT and not s_cubic_direct(core.ONE, c).is_zero_exact():
                # borderline float but provably nonzero: classify by the sign
                pos, neg = (pos + 1, neg) if s > 0 else (pos, neg + 1)
            else:
                zer += 1
        elif s > 0:
            pos += 1
        else:
            neg += 1
    return CensusRow(X=X, u=u, positives=pos, negatives=neg, zeros=zer,
                     total=pos + neg + zer)


# ---------------------------------------------------------------------------
# Triple-product experiment
# ---------------------------------------------------------------------------

class EmptyRangeError(ValueError):
    """The dyadic prime windows are empty at this X (bounds too tight)."""


#: exponent bounds (μ₃⁻, μ₃⁺, μ₂⁻, μ₂⁺) used by the asymptotic argument
PAPER_EXPONENTS = (7.0 / 42.0, 13.0 / 42.0, 13.0 / 42.0, 1.0 / 3.0)


def dyadic_windows(X: float, bounds: Sequence[float]) -> tuple[tuple[float, float], tuple[float, float]]:
    """Norm windows [P⁻, 2P⁺) for π₃ and π₂ from the exponent bounds.

    P⁺ is the largest dyadic multiple 2^λ·X^{μ⁻} (λ ≥ 1) below X^{μ⁺}/2;
    raises EmptyRangeError when no such multiple exists, which happens for
    every desk-scale X with the asymptotic exponents.
    """
    mu3m, mu3p, mu2m, mu2p = bounds

    def window(mu_lo, mu_hi):
        p_lo = X ** mu_lo
        cap = X ** mu_hi / 2.0
        p_hi = None
        lam = 1
        while 2.0 ** lam * p_lo < cap:
            p_hi = 2.0 ** lam * p_lo
            lam += 1
        if p_hi is None:
            raise EmptyRangeError(
                f"no dyadic 2^λ·X^{mu_lo:.4g} below X^{mu_hi:.4g}/2 at X = {X:g}")
        return (p_lo, 2.0 * p_hi)

    return window(mu3m, mu3p), (window(mu2m, mu2p))


@dataclass(frozen=True)
class TripleProductResult:
    X: float
    u: float
    t: float
    interval_mass: float
    m_e: float
    m_e1: float
    m_e2: float
    m_e3: float
    m_all: float          # weight with all three angles constrained
    triple_count: int

    @property
    def ratios(self) -> tuple[float, float, float]:
        return (self.m_e1 / self.m_e, self.m_e2 / self.m_e, self.m_e3 / self.m_e)

    @property
    def lower_bound_functional(self) -> float:
        """8 cos³t · (3μ_ST(I) − 2) · m(E), the §-level lower-bound driver."""
        return 8.0 * math.cos(self.t) ** 3 * (3.0 * self.interval_mass - 2.0) * self.m_e


def triple_product_experiment(X: float, u: float,
                              bounds: Sequence[float] = PAPER_EXPONENTS,
                              interval_mass: float = 0.75,
                              g: SmoothBump | None = None) -> TripleProductResult:
    """Weighted counts over c = π₁π₂π₃ with and without θ_i ∈ I constraints.

    π₃ and π₂ run over the dyadic windows from ``bounds``; π₁ covers the
    support of g(N(c)/X); all three must satisfy N(π) > X^{1/u}.  The
    angle of π_i is taken at the twist (Π_{j≠i} π_j)⁻¹ mod π_i.
    """
    if u < 3:
        raise ValueError("need u ≥ 3")
    g = g or SmoothBump()
    t = solve_interval_t(interval_mass)
    (w3_lo, w3_hi), (w2_lo, w2_hi) = dyadic_windows(X, bounds)
    zu = X ** (1.0 / u)
    w3_lo, w2_lo = max(w3_lo, zu), max(w2_lo, zu)
    if w3_lo >= w3_hi or w2_lo >= w2_hi:
        raise EmptyRangeError("roughness cut X^{1/u} empties a prime window")

    all_primes = core.primary_primes_up_to(int(2 * X / max(1.0, w3_lo * w2_lo)) + 1)
    p3s = [p for p in all_primes if w3_lo <= p.norm() < w3_hi]
    p2s = [p for p in all_primes if w2_lo <= p.norm() < w2_hi]
    if not p3s or not p2s:
        raise EmptyRangeError("no primes in a dyadic window")

    tables = {p: angle_table(p) for p in {*p3s, *p2s}}
    me, me1, me2, me3, mall = [], [], [], [], []
    count = 0
    for p3 in p3s:
        n3 = p3.norm()
        for p2 in p2s:
            n2 = p2.norm()
            lo1 = max(X / (n2 * n3), zu)
            hi1 = 2.0 * X / (n2 * n3)
            if hi1 <= lo1:
                continue
            for p1 in (p for p in core.primary_primes_up_to(math.floor(hi1))
                       if p.norm() > lo1):
                if p1 == p2 or p1 == p3 or p2 == p3:
                    continue
                c_norm = p1.norm() * n2 * n3
                w = float(g(c_norm / X))
                if w == 0.0:
                    continue
                count += 1
                th1 = _twisted_angle(p1, p2 * p3)
                th2 = tables[p2][core.reduce_mod(core.inverse_mod(core.reduce_mod(p1 * p3, p2), p2), p2)]
                th3 = tables[p3][core.reduce_mod(core.inverse_mod(core.reduce_mod(p1 * p2, p3), p3), p3)]
                in1, in2, in3 = (in_symmetric_interval(th, t) for th in (th1, th2, th3))
                me.append(w)
                if in1:
                    me1.append(w)
                if in2:
                    me2.append(w)
                if in3:
                    me3.append(w)
                if in1 and in2 and in3:
                    mall.append(w)
    if not me:
        raise EmptyRangeError("no admissible triples at this X")
    return TripleProductResult(
        X=X, u=u, t=t, interval_mass=interval_mass,
        m_e=math.fsum(me), m_e1=math.fsum(me1), m_e2=math.fsum(me2),
        m_e3=math.fsum(me3), m_all=math.fsum(mall), triple_count=count,
    )


def _twisted_angle(pi: Eisenstein, other: Eisenstein) -> float:
    """θ_{π, m} at the twist m = other⁻¹ mod π."""
    tw = core.inverse_mod(core.reduce_mod(other, pi), pi)
    val = s_cubic_value(tw, pi).real
    x = val / (2.0 * math.sqrt(pi.norm()))
    return math.acos(min(1.0, max(-1.0, x)))
