"""Vectorized integer kernels behind the exponential-sum evaluators.

Every summand of S(a, c) or K₃(m, n, c) is an N(c)-th (resp. 3N(c)-th) root
of unity whose exponent is an exact integer:

    e(a f(x)/c) = exp(2πi · T(x)/N(c)),   T(x) = Tr(a f(x) conj(c)) ∈ Z,

and the trace is Z-linear in the coordinates of a f(x), so the whole inner
loop runs in int64 arithmetic mod N(c).  Sums are accumulated as histograms
(`numpy.bincount`) and projected to floats in one trig pass at the end.

int64 safety: all residue coordinates are < N(c), so intermediate products
stay below N(c)² ≤ ~1e11 for the norms used here (≤ 3·10⁵), far inside the
int64 range even through the reduction steps (≤ N³ ~ 2.7e16 < 2⁶³).
"""

from __future__ import annotations

import math

import numpy as np

from . import core
from .core import Eisenstein, as_eisenstein, hermite_box, reduce_mod


# ---------------------------------------------------------------------------
# Residue grids and modular pair arithmetic
# ---------------------------------------------------------------------------

def residue_coords(c: Eisenstein) -> tuple[np.ndarray, np.ndarray | None, int, int]:
    """Coordinates of all canonical residues mod c.

    Returns (x1, x2, d1, d2); x2 is None when the quotient ring is cyclic
    (d2 == 1), in which case residues are the plain integers 0..d1−1.
    Index convention: residue x1 + x2·ω sits at position x2·d1 + x1.
    """
    d1, _, d2 = hermite_box(c)
    if d2 == 1:
        return np.arange(d1, dtype=np.int64), None, d1, 1
    x1 = np.tile(np.arange(d1, dtype=np.int64), d2)
    x2 = np.repeat(np.arange(d2, dtype=np.int64), d1)
    return x1, x2, d1, d2


class PairMod:
    """Vectorized arithmetic on canonical residue coordinates mod c."""

    def __init__(self, c: Eisenstein):
        self.c = as_eisenstein(c)
        self.d1, self.k, self.d2 = hermite_box(self.c)

    def reduce(self, y1, y2):
        t = y2 // self.d2
        y2 = y2 - t * self.d2
        y1 = (y1 - t * self.k) % self.d1
        return y1, y2

    def reduce_scalar(self, z: Eisenstein) -> tuple[int, int]:
        r = reduce_mod(z, self.c)
        return r.a, r.b

    def mul(self, a1, a2, b1, b2):
        # (a1 + a2 ω)(b1 + b2 ω) with ω² = −1−ω
        c1 = a1 * b1 - a2 * b2
        c2 = a1 * b2 + a2 * b1 - a2 * b2
        return self.reduce(c1, c2)

    def pow(self, x1, x2, e: int):
        r1 = np.full_like(x1, 0)
        r2 = np.zeros_like(x1)
        one1, one2 = self.reduce_scalar(core.ONE)
        r1 += one1
        r2 += one2
        b1, b2 = self.reduce(np.asarray(x1), np.asarray(x2))
        while e:
            if e & 1:
                r1, r2 = self.mul(r1, r2, b1, b2)
            e >>= 1
            if e:
                b1, b2 = self.mul(b1, b2, b1, b2)
        return r1, r2


def unit_group_order(fact: core.Factorization) -> int:
    """#(Z[ω]/c)* = Π N(π)^{e−1} (N(π) − 1) over the factorization of c."""
    phi = 1
    for p, e in fact.factors:
        n = p.norm()
        phi *= n ** (e - 1) * (n - 1)
    return phi


# ---------------------------------------------------------------------------
# Trace constants
# ---------------------------------------------------------------------------

def _trace_pair(w: Eisenstein, n: int) -> tuple[int, int]:
    """(Tr(w), Tr(wω)) mod n: T(w·z) = z1·Tr(w) + z2·Tr(wω) for z = z1+z2ω."""
    return w.trace() % n, (w * core.OMEGA).trace() % n


def _mul_coords(m: Eisenstein, x1, x2, n: int):
    """Coordinates of m·(x1 + x2 ω) mod n for vector x1, x2."""
    ma, mb = m.a % n, m.b % n
    if x2 is None:
        return (ma * x1) % n, (mb * x1) % n
    w1 = (ma * x1 - mb * x2) % n
    w2 = (ma * x2 + mb * x1 - mb * x2) % n
    return w1, w2


# ---------------------------------------------------------------------------
# Histograms for S(a, c) and K₃(m, n, c)
# ---------------------------------------------------------------------------

def s_histogram(a: Eisenstein, c: Eisenstein) -> np.ndarray:
    """Histogram (length N(c)) of exponents T(x) = Tr(a(x³−3x)conj c) mod N."""
    a, c = as_eisenstein(a), as_eisenstein(c)
    n = c.norm()
    ta, tb = _trace_pair(a * c.conj(), n)
    x1, x2, d1, d2 = residue_coords(c)
    if x2 is None:
        f = (x1 * x1 % n * x1 - 3 * x1) % n
        t = f * ta % n
    else:
        s1 = (x1 * x1 - x2 * x2) % n
        s2 = (2 * x1 * x2 - x2 * x2) % n
        f1 = (s1 * x1 - s2 * x2 - 3 * x1) % n
        f2 = (s1 * x2 + s2 * x1 - s2 * x2 - 3 * x2) % n
        t = (f1 * ta + f2 * tb) % n
    return np.bincount(t, minlength=n)


def _symbol_exponents(x1, x2, c: Eisenstein, fact: core.Factorization) -> np.ndarray:
    """(x/c)₃ as ω-exponents per residue (garbage where x is not invertible)."""
    j = np.zeros_like(x1)
    for pi, e in fact.factors:
        npi = pi.norm()
        exp3 = (npi - 1) // 3
        if x2 is None and hermite_box(pi)[2] == 1:
            p = npi  # split prime power: integer residues, ω ≡ r mod p
            box = hermite_box(pi)
            r = (p - box[1]) % p  # second lattice vector is (k, 1): ω ≡ −k
            y = _int_powmod(x1 % p, exp3, p)
            jp = np.zeros_like(y)
            jp[y == r] = 1
            jp[y == (r * r) % p] = 2
        else:
            pm = PairMod(pi)
            y1, y2 = pm.reduce(x1, 0 * x1 if x2 is None else x2)
            y1, y2 = pm.pow(y1, y2, exp3)
            jp = np.zeros_like(y1)
            for kk in range(1, 3):
                w1, w2 = pm.reduce_scalar(core.omega_power(kk))
                jp[(y1 == w1) & (y2 == w2)] = kk
        j = j + e * jp
    return j % 3


def _int_powmod(x: np.ndarray, e: int, n: int) -> np.ndarray:
    r = np.ones_like(x)
    b = x % n
    while e:
        if e & 1:
            r = r * b % n
        e >>= 1
        if e:
            b = b * b % n
    return r


def k3_histogram(m: Eisenstein, n_tw: Eisenstein, c: Eisenstein,
                 fact: core.Factorization | None = None) -> np.ndarray:
    """Histogram (length 3N(c)) for K₃(m, n, c); symbol folded as ±N shifts."""
    m, n_tw, c = as_eisenstein(m), as_eisenstein(n_tw), as_eisenstein(c)
    if core.divides(core.LAMBDA, c):
        raise core.RamifiedInputError("K₃ needs gcd(c, 3) = 1")
    if fact is None:
        fact = core.factor(c)
    n = c.norm()
    if n == 1:
        # single residue x = 0 with 0·0 ≡ 1 (mod 1): one term, value 1
        return np.array([1, 0, 0], dtype=np.int64)
    phi = unit_group_order(fact)
    x1, x2, d1, d2 = residue_coords(c)
    if x2 is None:
        xinv = _int_powmod(x1, phi - 1, d1)
        mask = (x1 * xinv) % d1 == 1
        i1, i2 = xinv, None
    else:
        pm = PairMod(c)
        i1, i2 = pm.pow(x1, x2, phi - 1)
        p1, p2 = pm.mul(x1, x2, i1, i2)
        one1, one2 = pm.reduce_scalar(core.ONE)
        mask = (p1 == one1) & (p2 == one2)
    j = _symbol_exponents(x1, x2, c, fact)
    ta, tb = _trace_pair(c.conj(), n)
    w1m, w2m = _mul_coords(m, x1, x2, n)
    w1n, w2n = _mul_coords(n_tw, i1, i2, n)
    w1 = (w1m + w1n) % n
    w2 = (w2m + w2n) % n
    t = (w1 * ta + w2 * tb) % n
    expo = (3 * t + j * n) % (3 * n)
    return np.bincount(expo[mask], minlength=3 * n)


# ---------------------------------------------------------------------------
# Float projection
# ---------------------------------------------------------------------------

def project(counts: np.ndarray, order: int) -> complex:
    """Σ counts[k]·e^{2πik/order} in one cosine/sine pass over the bins."""
    k = np.nonzero(counts)[0]
    if len(k) == 0:
        return 0j
    ang = (2.0 * math.pi / order) * k
    w = counts[k].astype(np.float64)
    return complex(np.dot(w, np.cos(ang)), np.dot(w, np.sin(ang)))


# ---------------------------------------------------------------------------
# Fast block-combined values (float path for bulk experiments)
# ---------------------------------------------------------------------------

def _prod_blocks(blocks: list[tuple[Eisenstein, int]]) -> Eisenstein:
    out = core.ONE
    for pi, e in blocks:
        out = out * pi ** e
    return out


def _block_value(m: Eisenstein, n_tw: Eisenstein, block: Eisenstein,
                 fact: core.Factorization) -> complex:
    counts = k3_histogram(m, n_tw, block, fact)
    return project(counts, 3 * block.norm())


def k3_value_blocks(m: Eisenstein, n_tw: Eisenstein,
                    blocks: list[tuple[Eisenstein, int]]) -> complex:
    """K₃(m, n, Π πᵢ^{eᵢ}) by the coprime product rule, float combination."""
    if len(blocks) == 1:
        pi, e = blocks[0]
        block = pi ** e
        bf = core.Factorization(unit=core.ONE, factors=((pi, e),))
        return _block_value(reduce_mod(m, block), reduce_mod(n_tw, block), block, bf)
    half = len(blocks) // 2
    left, right = blocks[:half], blocks[half:]
    c1 = _prod_blocks(left)
    c2 = _prod_blocks(right)
    inv2 = core.inverse_mod(c2, c1)
    inv1 = core.inverse_mod(c1, c2)
    from .symbols import cubic_symbol
    sym = cubic_symbol(c1, c2) * cubic_symbol(c2, c1)
    v1 = k3_value_blocks(m, reduce_mod(n_tw * inv2 * inv2, c1), left)
    v2 = k3_value_blocks(m, reduce_mod(n_tw * inv1 * inv1, c2), right)
    phase = complex(sym.value())
    return phase * v1 * v2


def s_value(a: Eisenstein, c: Eisenstein, fact: core.Factorization | None = None) -> complex:
    """S(a, c) as a float, by prime-power blocks when the identity applies."""
    a, c = as_eisenstein(a), as_eisenstein(c)
    if c.is_zero():
        raise ZeroDivisionError("S(a, c) needs c ≠ 0")
    if fact is None:
        fact = core.factor(c)
    lam_free = all(p != core.LAMBDA for p, _ in fact.factors)
    coprime = not any(core.divides(p, a) for p, _ in fact.factors)
    if lam_free and coprime and fact.factors:
        return k3_value_blocks(a, a, list(fact.factors))
    return project(s_histogram(a, c), c.norm())


# ---------------------------------------------------------------------------
# All-twist sums at a prime (vertical experiments)
# ---------------------------------------------------------------------------

def all_twist_values(pi: Eisenstein) -> np.ndarray:
    """S(a, π) for every canonical residue a, indexed by x2·d1 + x1.

    Split primes use one FFT of the exponent histogram (O(p log p) for all
    p − 1 twists at once); inert primes fall back to a table-gather loop.
    """
    pi = as_eisenstein(pi)
    n = pi.norm()
    x1, x2, d1, d2 = residue_coords(pi)
    ta, tb = _trace_pair(pi.conj(), n)
    if x2 is None:
        f = (x1 * x1 % n * x1 - 3 * x1) % n
        base = f * ta % n  # T(a, x) = a·base(x) mod p
        hist = np.bincount(base, minlength=n).astype(np.float64)
        fft = np.fft.fft(hist)
        idx = (n - np.arange(n)) % n
        return fft[idx].real
    # generic path: T(a, x) = a1·P(x) + a2·Q(x) mod n
    s1 = (x1 * x1 - x2 * x2) % n
    s2 = (2 * x1 * x2 - x2 * x2) % n
    f1 = (s1 * x1 - s2 * x2 - 3 * x1) % n
    f2 = (s1 * x2 + s2 * x1 - s2 * x2 - 3 * x2) % n
    # Tr((a1+a2ω)w) = a1 Tr(w) + a2 Tr(ωw) with w = f·conj(pi), ω² = −1−ω
    pvec = (f1 * ta + f2 * tb) % n
    qvec = (f1 * tb + f2 * ((-ta - tb) % n)) % n
    cos_t = np.cos(2.0 * math.pi * np.arange(n) / n)
    out = np.empty(n)
    for a2 in range(d2):
        for a1 in range(d1):
            t = (a1 * pvec + a2 * qvec) % n
            out[a2 * d1 + a1] = cos_t[t].sum()
    return out
