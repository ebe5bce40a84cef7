"""Sieve machinery: σ₂ density, rough-number sums, F_λ, direct G-sums.

The density σ₂ is quadratic below 2 and solves a delay equation above:

    σ₂(u) = e^{−2γ} u²/8                 on [0, 2]
    (u⁻² σ₂(u))′ = −2 σ₂(u−2)/u³         for u > 2, continuous at 2,

so y(u) = u⁻²σ₂(u) is constant e^{−2γ}/8 on [0, 2] and satisfies the pure
delayed quadrature y′(u) = −2(u−2)² y(u−2)/u³.  (The power of u in the
derivative is forced: σ₂ must be the nondecreasing solution with limit 1,
and the constant state σ₂ ≡ 1 solves exactly this equation.)  Then
1/σ₂(t) = 1 − h₂(t) with h₂ superexponentially small.

The weighted sequences over primary c with λ ∤ c, N(c) ∈ [X, 2X]:

    b_c  = g(N(c)/X) · 2^{Ω(c)}
    a_c± = g(N(c)/X) · (±S(1,c)/√N(c) + 2^{Ω(c)})   (nonnegative by Weil)

are summed over rough c (all prime-factor norms ≥ X^{1/u}) and compared to
the main term e^{−2γ}·ĝ(1)·(X/log X)(u² + 2u).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from . import core
from .core import Eisenstein, as_eisenstein
from .moments import SmoothBump, mellin
from .sums import s_cubic_value

#: Euler–Mascheroni constant (literal; no runtime derivation)
EULER_GAMMA = 0.5772156649015328606065120900824024310421593359399

#: residue of the Dedekind zeta function of Q(ω) at s = 1: α = π/(3√3)
ALPHA = math.pi / (3.0 * math.sqrt(3.0))


class BudgetExceededError(RuntimeError):
    """A configured enumeration budget was exhausted."""


# ---------------------------------------------------------------------------
# σ₂ and h₂
# ---------------------------------------------------------------------------

class Sigma2Table:
    """Dense solution of the σ₂ delay equation on [0, u_max].

    Marches y(u) = u⁻²σ₂(u) with Simpson steps (the right-hand side does not
    involve y(u) itself); lagged midpoint values use 4-point cubic
    interpolation of the stored grid.  Step 1e−3 resolves 1 − σ₂ well below
    the 1e−8 scale needed by the u ≥ 60 check.
    """

    def __init__(self, u_max: float = 64.0, step: float = 1e-3):
        self.step = float(step)
        self.n2 = round(2.0 / self.step)
        if abs(self.n2 * self.step - 2.0) > 1e-12:
            raise ValueError("step must divide 2 exactly")
        self.u_max = max(4.0, float(u_max))
        self.c0 = math.exp(-2.0 * EULER_GAMMA) / 8.0
        n_total = int(math.ceil(self.u_max / self.step)) + 1
        ys = np.empty(n_total)
        ys[: self.n2 + 1] = self.c0
        h = self.step
        for i in range(self.n2, n_total - 1):
            u = i * h
            g0 = self._rhs(u, ys)
            gm = self._rhs(u + 0.5 * h, ys)
            g1 = self._rhs(u + h, ys)
            ys[i + 1] = ys[i] + h / 6.0 * (g0 + 4.0 * gm + g1)
        self.ys = ys

    def _lag(self, v: float, ys: np.ndarray) -> float:
        """y(v) for v on or before the solved range (v = u − 2 ≥ 0)."""
        if v <= 2.0:
            return self.c0
        x = v / self.step
        j = int(x)
        frac = x - j
        if frac < 1e-12:
            return float(ys[j])
        ym1, y0, y1, y2 = ys[j - 1], ys[j], ys[j + 1], ys[j + 2]
        # Catmull-Rom cubic through the four surrounding grid values
        return float(
            y0
            + 0.5 * frac * (y1 - ym1
                            + frac * (2 * ym1 - 5 * y0 + 4 * y1 - y2
                                      + frac * (3 * (y0 - y1) + y2 - ym1)))
        )

    def _rhs(self, u: float, ys: np.ndarray) -> float:
        if u <= 2.0:
            return 0.0
        v = u - 2.0
        return -2.0 * v * v * self._lag(v, ys) / (u * u * u)

    def y(self, u: float) -> float:
        if u < 0:
            raise ValueError("u must be nonnegative")
        if u <= 2.0:
            return self.c0
        if u > self.u_max:
            raise ValueError(f"u = {u} beyond table range {self.u_max}")
        return self._lag(u, self.ys)

    def sigma2(self, u: float) -> float:
        if u < 0:
            raise ValueError("u must be nonnegative")
        if u <= 2.0:
            return math.exp(-2.0 * EULER_GAMMA) * u * u / 8.0
        return u * u * self.y(u)


_TABLE: Sigma2Table | None = None


def _table_for(u: float) -> Sigma2Table:
    global _TABLE
    if _TABLE is None or u > _TABLE.u_max:
        _TABLE = Sigma2Table(u_max=max(64.0, u + 4.0))
    return _TABLE


def sigma2(u: float) -> float:
    """The sieve density σ₂(u): closed form below 2, delay solve above."""
    return _table_for(max(u, 0.0)).sigma2(u)


def h2(u: float) -> float:
    """h₂(u) = 1 − 1/σ₂(u) (so 1/σ₂ = 1 − h₂); requires σ₂(u) > 0."""
    if u <= 0:
        raise ValueError("need u > 0")
    s = sigma2(u)
    if s == 0.0:
        raise ZeroDivisionError("σ₂(u) = 0")
    return 1.0 - 1.0 / s


# ---------------------------------------------------------------------------
# The Euler product F_λ and prime-norm enumeration
# ---------------------------------------------------------------------------

def prime_norms_up_to(cutoff: float) -> list[int]:
    """Norms of primes ≠ λ with norm ≤ cutoff, with multiplicity (split
    rational primes contribute their norm twice)."""
    out = []
    for p in range(2, int(cutoff) + 1):
        if not core._is_prime_rational(p):
            continue
        if p % 3 == 1 and p <= cutoff:
            out.extend([p, p])
        elif p % 3 == 2 and p * p <= cutoff:
            out.append(p * p)
    out.sort()
    return out


def f_lambda(cutoff: int) -> tuple[float, float]:
    """Partial product of F_λ(1) = Π_{π≠λ} (1 + 1/(N(π)(N(π)−2))) and a tail bound.

    Each omitted log-factor is ≤ 2/N² (N ≥ 4) and there are at most two
    primes per norm, so log-tail ≤ Σ_{n>cutoff} 4/n² ≤ 4/cutoff; the bound
    reported is the resulting multiplicative deficit.
    """
    if cutoff < 4:
        raise ValueError("cutoff must be at least 4")
    value = 1.0
    for n in prime_norms_up_to(cutoff):
        value *= 1.0 + 1.0 / (n * (n - 2.0))
    tail = value * (math.exp(4.0 / cutoff) - 1.0)
    return value, tail


@lru_cache(maxsize=None)
def f_lambda_value(cutoff: int = 10 ** 6) -> float:
    return f_lambda(cutoff)[0]


# ---------------------------------------------------------------------------
# Rough primary numbers and sieve weights
# ---------------------------------------------------------------------------

def min_prime_norm_of_norm(n: int) -> int:
    """Smallest prime-factor norm of any c with N(c) = n, from n alone:
    a rational prime p | n contributes norm p if p ≡ 1 (3), p² if p ≡ 2 (3),
    and 3 for p = 3."""
    if n == 1:
        return 0
    best = None
    for p in core.factor_rational(n):
        cand = p if (p % 3 == 1 or p == 3) else p * p
        best = cand if best is None else min(best, cand)
    return best


def big_omega_of_norm(n: int) -> int:
    """Ω(c) for any c with N(c) = n: split/ramified exponents count fully,
    inert rational exponents are halved."""
    omega = 0
    for p, a in core.factor_rational(n).items():
        if p % 3 == 2:
            assert a % 2 == 0
            omega += a // 2
        else:
            omega += a
    return omega


def rough_primary(X: float, z: float) -> list[Eisenstein]:
    """Primary c with N(c) ∈ [X, 2X] and every prime-factor norm ≥ z."""
    lo = max(1, math.ceil(X))
    hi = math.floor(2.0 * X) + 1
    return [c for c in core.primary_in_range(lo, hi)
            if min_prime_norm_of_norm(c.norm()) >= z]


@dataclass(frozen=True)
class SieveWeights:
    """Per-modulus weights b_c and a_c± over an enumerated range of c."""

    X: float
    cs: tuple[Eisenstein, ...]
    g_vals: np.ndarray
    two_omega: np.ndarray
    s_norm: np.ndarray        # S(1,c)/√N(c)

    @property
    def b(self) -> np.ndarray:
        return self.g_vals * self.two_omega

    def a(self, sign: int) -> np.ndarray:
        out = self.g_vals * (sign * self.s_norm + self.two_omega)
        return out


def build_weights(X: float, g: SmoothBump, z: float | None = None) -> SieveWeights:
    """Weights over primary c ∈ [X, 2X] (rough for threshold z if given)."""
    cs = rough_primary(X, z) if z is not None else rough_primary(X, 0.0)
    gv, tw, sn = [], [], []
    for c in cs:
        n = c.norm()
        gv.append(float(g(n / X)))
        tw.append(2.0 ** big_omega_of_norm(n))
        sn.append(s_cubic_value(core.ONE, c).real / math.sqrt(n))
    w = SieveWeights(X=X, cs=tuple(cs), g_vals=np.array(gv),
                     two_omega=np.array(tw), s_norm=np.array(sn))
    if np.any(w.a(+1) < 0) or np.any(w.a(-1) < 0):
        raise AssertionError("Weil bound violated: a_c± must be nonnegative")
    return w


def main_term(X: float, u: float, g: SmoothBump) -> float:
    """e^{−2γ}·ĝ(1)·(X/log X)·(u² + 2u)."""
    g_hat_1 = mellin(g, 1.0).real
    return math.exp(-2.0 * EULER_GAMMA) * g_hat_1 * (X / math.log(X)) * (u * u + 2.0 * u)


@dataclass(frozen=True)
class RoughSumReport:
    X: float
    u: float
    z: float
    count: int
    value: float
    main_term: float
    signed_total: float      # Σ S(1,c)/√N(c)·g over the rough range
    h2_u: float
    h2_u_half: float

    @property
    def ratio(self) -> float:
        return self.value / self.main_term


def rough_sum_B(X: float, u: float, g: SmoothBump) -> RoughSumReport:
    """S(B, X^{1/u}) = Σ b_c over rough c, with the main-term comparison."""
    if X < 100 or u < 1:
        raise ValueError("need X ≥ 100 and u ≥ 1")
    z = X ** (1.0 / u)
    w = build_weights(X, g, z)
    return RoughSumReport(
        X=X, u=u, z=z, count=len(w.cs),
        value=math.fsum(w.b.tolist()),
        main_term=main_term(X, u, g),
        signed_total=math.fsum((w.g_vals * w.s_norm).tolist()),
        h2_u=h2(u), h2_u_half=h2(u / 2.0) if u > 2.0 else float("nan"),
    )


def rough_sum_A(X: float, u: float, g: SmoothBump, sign: int) -> RoughSumReport:
    """S(A±, X^{1/u}) = Σ a_c± over rough c.

    Reported as B ± (signed total), after reconciling with the direct
    elementwise sum Σ a_c± to machine precision.
    """
    if sign not in (+1, -1):
        raise ValueError("sign must be ±1")
    b_rep = rough_sum_B(X, u, g)
    z = X ** (1.0 / u)
    w = build_weights(X, g, z)
    direct = math.fsum(w.a(sign).tolist())
    value = b_rep.value + sign * b_rep.signed_total
    if abs(direct - value) > 1e-9 * max(1.0, abs(value)):
        raise AssertionError("a± decompositions disagree beyond roundoff")
    return RoughSumReport(
        X=X, u=u, z=z, count=b_rep.count, value=value,
        main_term=b_rep.main_term, signed_total=b_rep.signed_total,
        h2_u=b_rep.h2_u, h2_u_half=b_rep.h2_u_half,
    )


# ---------------------------------------------------------------------------
# Direct G-sums
# ---------------------------------------------------------------------------

def sieve_g(pi_norm: int) -> float:
    """g(π) = ρ(π)/ρ*(π) with ρ(π) = 2, ρ*(π) = N(π) − 2 (π ≠ λ)."""
    return 2.0 / (pi_norm - 2.0)


def g_sum(T: float, z: float, c: Eisenstein = core.ONE,
          max_nodes: int = 10 ** 7) -> float:
    """G_c(T, z) = Σ g(d) over squarefree primary d | 𝒫(z), N(d) ≤ T,
    gcd(d, c) = 1; depth-first over primes of norm ≤ z."""
    if T < 1 or z < 2:
        raise ValueError("need T ≥ 1 and z ≥ 2")
    c = as_eisenstein(c)
    primes = [p for p in core.primary_primes_up_to(int(z))
              if not core.divides(p, c)]
    norms = [p.norm() for p in primes]
    budget = [max_nodes]
    terms: list[float] = []

    def dfs(i: int, prod_norm: float, weight: float):
        budget[0] -= 1
        if budget[0] < 0:
            raise BudgetExceededError("g_sum node budget exhausted")
        terms.append(weight)
        for j in range(i, len(norms)):
            nn = prod_norm * norms[j]
            if nn > T:
                continue
            dfs(j + 1, nn, weight * sieve_g(norms[j]))

    dfs(0, 1.0, 1.0)
    return math.fsum(terms)


def g_sum_asymptotic(T: float, z: float, c: Eisenstein = core.ONE) -> float:
    """The sieve-theorem shape α²(4/9)e^{2γ}F_λ(1)·Π_{π|c,π≠λ}(1−2/N(π))·
    σ₂(2τ)·log²z with τ = log T / log z."""
    tau = math.log(T) / math.log(z)
    val = ALPHA ** 2 * (4.0 / 9.0) * math.exp(2.0 * EULER_GAMMA) * f_lambda_value()
    c = as_eisenstein(c)
    if not c.is_unit():
        for p, _ in core.factor(c).factors:
            if p != core.LAMBDA:
                val *= 1.0 - 2.0 / p.norm()
    return val * sigma2(2.0 * tau) * math.log(z) ** 2
