"""Cubic exponential sums S(a,c), twisted Kloosterman sums K₃(m,n,c), angles.

S(a, c)     = Σ_{x mod c} e(a(x³ − 3x)/c)
K₃(m, n, c) = Σ_{x x̄ ≡ 1 mod c} (x/c)₃ e((m x + n x̄)/c),   gcd(c, 3) = 1
e(z)        = exp(2πi(z + z̄)) = exp(2πi Tr z)

Values are exact sums of roots of unity, represented by :class:`SumValue`
exponent histograms; identities (S = K₃ for gcd(a,c)=1, twisted
multiplicativity, reality) can therefore be tested exactly, not just in
floating point.  For gcd(a,c)=1, gcd(c,3)=1 the fast path evaluates S(a,c)
as K₃(a,a,c) split into coprime prime-power blocks:

    K₃(m,n,c₁c₂) = (c₁/c₂)₃(c₂/c₁)₃ · K₃(m, n·c̄₂², c₁) · K₃(m, n·c̄₁², c₂)
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from . import _engine, core
from .core import Eisenstein, as_eisenstein, reduce_mod
from .symbols import CubicSymbol, cubic_symbol


class WeilViolationError(ArithmeticError):
    """|S(a, π)| exceeded 2√N(π) beyond tolerance: bad prime or a bug."""


class SumValue:
    """Exact value Σ counts[k]·ζ^k with ζ = e^{2πi/order}.

    ``counts`` is a dense nonnegative int64 histogram of exponents; the float
    projection does one cosine/sine pass over the nonzero bins.  Exact
    equality and zero tests reduce the histogram to the tensor power basis of
    Z[ζ] (one pass of the relation 1 + ζ^{p^{e−1}} + ... + ζ^{(p−1)p^{e−1}} = 0
    per prime power of the order).
    """

    __slots__ = ("order", "counts", "_value")

    def __init__(self, order: int, counts: np.ndarray):
        self.order = int(order)
        counts = np.asarray(counts, dtype=np.int64)
        if counts.shape != (self.order,):
            raise ValueError("counts must have length == order")
        self.counts = counts
        self._value = None

    # -- construction ---------------------------------------------------------

    @classmethod
    def zero(cls) -> "SumValue":
        return cls(1, np.zeros(1, dtype=np.int64))

    @classmethod
    def one(cls) -> "SumValue":
        return cls(1, np.ones(1, dtype=np.int64))

    # -- projections ----------------------------------------------------------

    @property
    def value(self) -> complex:
        if self._value is None:
            self._value = _engine.project(self.counts, self.order)
        return self._value

    @property
    def real(self) -> float:
        return self.value.real

    @property
    def imag(self) -> float:
        return self.value.imag

    @property
    def num_terms(self) -> int:
        return int(self.counts.sum())

    # -- exact structure --------------------------------------------------------

    def lifted(self, target_order: int) -> "SumValue":
        if target_order % self.order:
            raise ValueError("target order must be a multiple of the order")
        step = target_order // self.order
        counts = np.zeros(target_order, dtype=np.int64)
        counts[::step] = self.counts
        return SumValue(target_order, counts)

    def rotated(self, omega_exponent: int) -> "SumValue":
        """Multiply by ω^j exactly; requires 3 | order."""
        j = omega_exponent % 3
        if j == 0:
            return self
        if self.order % 3:
            raise ValueError("order must be divisible by 3 to rotate by ω")
        return SumValue(self.order, np.roll(self.counts, j * (self.order // 3)))

    def __mul__(self, other: "SumValue") -> "SumValue":
        L = math.lcm(self.order, other.order)
        k1 = np.nonzero(self.counts)[0] * (L // self.order)
        k2 = np.nonzero(other.counts)[0] * (L // other.order)
        w1 = self.counts[np.nonzero(self.counts)[0]]
        w2 = other.counts[np.nonzero(other.counts)[0]]
        idx = np.add.outer(k1, k2).ravel() % L
        wts = np.outer(w1, w2).ravel()
        counts = np.zeros(L, dtype=np.int64)
        np.add.at(counts, idx, wts)
        return SumValue(L, counts)

    def _basis_residue(self, signed_counts: np.ndarray) -> np.ndarray:
        order = self.order
        if order == 1:
            return signed_counts.copy()
        fact = core.factor_rational(order)
        shape = tuple(p ** e for p, e in fact.items())
        k = np.arange(order)
        arr = np.zeros(shape, dtype=np.int64)
        arr[tuple((k % pe) for pe in shape)] = signed_counts
        for ax, (p, e) in enumerate(fact.items()):
            pe = p ** e
            step = pe // p
            view = np.moveaxis(arr, ax, 0)
            top = view[(p - 1) * step: pe].copy()
            for j in range(p - 1):
                view[j * step:(j + 1) * step] -= top
            view[(p - 1) * step: pe] = 0
        return arr

    def is_zero_exact(self) -> bool:
        return not self._basis_residue(self.counts).any()

    def equals_exact(self, other: "SumValue") -> bool:
        L = math.lcm(self.order, other.order)
        a = self.lifted(L)
        b = other.lifted(L)
        return not a._basis_residue(a.counts - b.counts).any()

    def is_real_exact(self) -> bool:
        mirrored = np.roll(self.counts[::-1], 1)  # k ↦ −k mod order
        return not self._basis_residue(self.counts - mirrored).any()

    def nonzero_items(self) -> list[tuple[int, int]]:
        ks = np.nonzero(self.counts)[0]
        return [(int(k), int(self.counts[k])) for k in ks]

    def __repr__(self):
        return f"SumValue(order={self.order}, terms={self.num_terms}, value={self.value:.6g})"


# ---------------------------------------------------------------------------
# Direct evaluators
# ---------------------------------------------------------------------------

def s_cubic_direct(a: Eisenstein, c: Eisenstein) -> SumValue:
    """S(a, c) by full residue enumeration; exact histogram mod N(c)."""
    a, c = as_eisenstein(a), as_eisenstein(c)
    if c.is_zero():
        raise ZeroDivisionError("S(a, c) needs c ≠ 0")
    return SumValue(c.norm(), _engine.s_histogram(a, c))


def k3_direct(m: Eisenstein, n: Eisenstein, c: Eisenstein) -> SumValue:
    """K₃(m, n, c) by enumeration of invertible residues; histogram mod 3N(c)."""
    c = as_eisenstein(c)
    if c.is_zero():
        raise ZeroDivisionError("K₃ needs c ≠ 0")
    return SumValue(3 * c.norm(), _engine.k3_histogram(m, n, c))


def k3_fast(m: Eisenstein, n: Eisenstein, c: Eisenstein) -> SumValue:
    """K₃ via twisted multiplicativity over coprime prime-power blocks.

    Exact: block histograms are convolved over the lcm root order and the
    cross symbol factors (c₁/c₂)₃(c₂/c₁)₃ enter as exact ω-rotations.
    """
    m, n, c = as_eisenstein(m), as_eisenstein(n), as_eisenstein(c)
    if c.is_zero():
        raise ZeroDivisionError("K₃ needs c ≠ 0")
    if core.divides(core.LAMBDA, c):
        raise core.RamifiedInputError("K₃ needs gcd(c, 3) = 1")
    fact = core.factor(c)
    if not fact.factors:
        return k3_direct(m, n, c)
    return _k3_fast_blocks(m, n, list(fact.factors))


def _k3_fast_blocks(m, n, blocks) -> SumValue:
    if len(blocks) == 1:
        pi, e = blocks[0]
        return k3_direct(m, n, pi ** e)
    half = len(blocks) // 2
    left, right = blocks[:half], blocks[half:]
    c1 = _engine._prod_blocks(left)
    c2 = _engine._prod_blocks(right)
    inv2 = core.inverse_mod(c2, c1)
    inv1 = core.inverse_mod(c1, c2)
    sym = cubic_symbol(c1, c2) * cubic_symbol(c2, c1)
    v1 = _k3_fast_blocks(m, reduce_mod(n * inv2 * inv2, c1), left)
    v2 = _k3_fast_blocks(m, reduce_mod(n * inv1 * inv1, c2), right)
    return (v1 * v2).rotated(sym.exponent)


def s_cubic(a: Eisenstein, c: Eisenstein) -> SumValue:
    """S(a, c); uses S = K₃(a, a, c) when gcd(a,c) = 1 and gcd(c,3) = 1.

    Outside that domain it falls back to direct evaluation, so any c ≠ 0 is
    accepted.  Note the fast path reports the histogram over 3N(c)-th roots.
    """
    a, c = as_eisenstein(a), as_eisenstein(c)
    if c.is_zero():
        raise ZeroDivisionError("S(a, c) needs c ≠ 0")
    if not a.is_zero() and not core.divides(core.LAMBDA, c) and core.gcd(a, c).is_unit():
        return k3_fast(a, a, c)
    return s_cubic_direct(a, c)


def s_cubic_value(a: Eisenstein, c: Eisenstein, fact: core.Factorization | None = None) -> complex:
    """Float S(a, c) for bulk experiments (block-combined, no exact histogram)."""
    return _engine.s_value(a, c, fact)


def geometric_kloosterman(m: Eisenstein, n: Eisenstein, c: Eisenstein,
                          d: Eisenstein) -> SumValue:
    """Cusp-pair Kloosterman sum in reduced form: K₃(m,n,c) when c ≡ ±1 (mod 3)
    and d | c, zero otherwise."""
    c, d = as_eisenstein(c), as_eisenstein(d)
    if not d.is_primary():
        raise ValueError("the level d must be primary")
    if c.is_zero():
        return SumValue.zero()
    pm3 = (c.a % 3, c.b % 3)
    if pm3 not in ((1, 0), (2, 0)):
        return SumValue.zero()
    if not core.divides(d, c):
        return SumValue.zero()
    return k3_fast(m, n, c)


# ---------------------------------------------------------------------------
# Angles
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class AngleSample:
    """θ with cos θ = S(a, π)/(2√N(π)), θ ∈ [0, π]."""

    prime: Eisenstein
    twist: Eisenstein
    theta: float


#: |S|/2√N may exceed 1 by at most this much before we call it a violation
CLAMP_TOLERANCE = 1e-9


def _theta_from_value(s: float, n: int) -> float:
    x = s / (2.0 * math.sqrt(n))
    if abs(x) > 1.0 + CLAMP_TOLERANCE:
        raise WeilViolationError(f"|S| = {abs(s)} > 2√{n} + tolerance")
    return math.acos(min(1.0, max(-1.0, x)))


def angle(a: Eisenstein, pi: Eisenstein) -> AngleSample:
    """θ_{a,π} for a prime π with π ∤ 3a."""
    a, pi = as_eisenstein(a), as_eisenstein(pi)
    if not core.is_prime(pi):
        raise ValueError("π must be prime")
    if pi.norm() == 3 or core.divides(pi, a):
        raise ValueError("need π ∤ 3a")
    val = s_cubic_value(a, pi)
    return AngleSample(prime=pi, twist=a, theta=_theta_from_value(val.real, pi.norm()))


def angles_for_prime(pi: Eisenstein) -> np.ndarray:
    """θ_{a,π} for all a ≢ 0 (mod π), in canonical residue order."""
    pi = as_eisenstein(pi)
    if not core.is_prime(pi) or pi.norm() == 3:
        raise ValueError("need a prime π with π ∤ 3")
    n = pi.norm()
    vals = _engine.all_twist_values(pi)
    vals = np.delete(vals, 0)  # residue 0 sits at index 0
    x = vals / (2.0 * math.sqrt(n))
    if np.max(np.abs(x)) > 1.0 + CLAMP_TOLERANCE:
        raise WeilViolationError(f"Weil bound violated at {pi!r}")
    return np.arccos(np.clip(x, -1.0, 1.0))


def angle_table(pi: Eisenstein) -> dict[Eisenstein, float]:
    """θ_{a,π} keyed by canonical residue a (for repeated lookups)."""
    pi = as_eisenstein(pi)
    n = pi.norm()
    vals = _engine.all_twist_values(pi)
    d1, _, d2 = core.hermite_box(pi)
    out = {}
    for a2 in range(d2):
        for a1 in range(d1):
            if a1 == 0 and a2 == 0:
                continue
            out[Eisenstein(a1, a2)] = _theta_from_value(vals[a2 * d1 + a1], n)
    return out
