"""Exact arithmetic in the ring of Eisenstein integers Z[ω], ω = e^{2πi/3}.

Elements are stored as a + bω with unbounded Python integers, so every
operation is exact.  Useful identities (basis (1, ω), ω² = −1−ω):

    N(a + bω)    = a² − ab + b²          (multiplicative, ≥ 0)
    conj(a + bω) = (a − b) − bω
    Tr(a + bω)   = 2a − b

The six units are ±1, ±ω, ±ω².  An element coprime to 3 is *primary* when
it is ≡ 1 (mod 3); each associate class coprime to 3 contains exactly one
primary element.  The ramified prime above 3 is λ = 1 − ω with λ² = −3ω.

All functions here are pure; the only shared state is a per-process memo
table for rational prime splitting, which is safe under concurrent use.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator, Sequence


class NotInvertibleError(ArithmeticError):
    """Residue is not invertible modulo the given modulus (gcd ≠ 1)."""


class RamifiedInputError(ValueError):
    """Operation requires an argument coprime to λ = 1 − ω."""


class Eisenstein:
    """Immutable element a + bω of Z[ω]."""

    __slots__ = ("a", "b")

    def __init__(self, a: int, b: int = 0):
        object.__setattr__(self, "a", int(a))
        object.__setattr__(self, "b", int(b))

    def __setattr__(self, *_):
        raise AttributeError("Eisenstein values are immutable")

    # -- ring operations ----------------------------------------------------

    def __add__(self, other: "Eisenstein | int") -> "Eisenstein":
        other = as_eisenstein(other)
        return Eisenstein(self.a + other.a, self.b + other.b)

    def __radd__(self, other):
        return self.__add__(other)

    def __sub__(self, other: "Eisenstein | int") -> "Eisenstein":
        other = as_eisenstein(other)
        return Eisenstein(self.a - other.a, self.b - other.b)

    def __rsub__(self, other):
        return as_eisenstein(other).__sub__(self)

    def __mul__(self, other: "Eisenstein | int") -> "Eisenstein":
        other = as_eisenstein(other)
        a, b, c, d = self.a, self.b, other.a, other.b
        # (a+bω)(c+dω) with ω² = −1−ω
        return Eisenstein(a * c - b * d, a * d + b * c - b * d)

    def __rmul__(self, other):
        return self.__mul__(other)

    def __neg__(self) -> "Eisenstein":
        return Eisenstein(-self.a, -self.b)

    def __pow__(self, n: int) -> "Eisenstein":
        if n < 0:
            raise ValueError("negative powers are not ring elements")
        result, base = ONE, self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def conj(self) -> "Eisenstein":
        return Eisenstein(self.a - self.b, -self.b)

    def norm(self) -> int:
        return self.a * self.a - self.a * self.b + self.b * self.b

    def trace(self) -> int:
        return 2 * self.a - self.b

    # -- predicates ----------------------------------------------------------

    def is_zero(self) -> bool:
        return self.a == 0 and self.b == 0

    def is_unit(self) -> bool:
        return self.norm() == 1

    def is_primary(self) -> bool:
        """True when ≡ 1 (mod 3), i.e. a ≡ 1 and b ≡ 0 mod 3."""
        return self.a % 3 == 1 and self.b % 3 == 0

    # -- misc ----------------------------------------------------------------

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            return self.a == other and self.b == 0
        return isinstance(other, Eisenstein) and self.a == other.a and self.b == other.b

    def __hash__(self):
        return hash((self.a, self.b))

    def __complex__(self) -> complex:
        return complex(self.a - 0.5 * self.b, 0.8660254037844386 * self.b)

    def __repr__(self):
        if self.b == 0:
            return f"Eis({self.a})"
        sign = "+" if self.b >= 0 else "-"
        return f"Eis({self.a}{sign}{abs(self.b)}w)"

    def key(self) -> tuple[int, int, int]:
        """Deterministic sort key (norm, a, b)."""
        return (self.norm(), self.a, self.b)


def as_eisenstein(x) -> Eisenstein:
    if isinstance(x, Eisenstein):
        return x
    if isinstance(x, int):
        return Eisenstein(x, 0)
    raise TypeError(f"cannot interpret {x!r} as an Eisenstein integer")


ZERO = Eisenstein(0, 0)
ONE = Eisenstein(1, 0)
OMEGA = Eisenstein(0, 1)
OMEGA2 = Eisenstein(-1, -1)
LAMBDA = Eisenstein(1, -1)  # 1 − ω, the ramified prime; λ² = −3ω

#: the six units of Z[ω]
UNITS = (ONE, -ONE, OMEGA, -OMEGA, OMEGA2, -OMEGA2)

#: ω-exponent of each unit, ±ω^k ↦ k (the sign is invisible to cubic symbols)
_UNIT_OMEGA_EXP = {ONE: 0, -ONE: 0, OMEGA: 1, -OMEGA: 1, OMEGA2: 2, -OMEGA2: 2}


def omega_power(k: int) -> Eisenstein:
    return (ONE, OMEGA, OMEGA2)[k % 3]


# ---------------------------------------------------------------------------
# Euclidean structure
# ---------------------------------------------------------------------------

def divrem(x: Eisenstein, y: Eisenstein) -> tuple[Eisenstein, Eisenstein]:
    """Division with remainder: x = q·y + r, N(r) < N(y).

    q is a nearest lattice point to x/y (hexagonal lattice, so in fact
    N(r) ≤ N(y)/3); among the four floor/ceil rounding candidates ties are
    broken by smaller |q.a|, then smaller |q.b|, then lexicographic (a, b).
    """
    x, y = as_eisenstein(x), as_eisenstein(y)
    if y.is_zero():
        raise ZeroDivisionError("division by zero in Z[ω]")
    n = y.norm()
    t = x * y.conj()  # x/y = t/n exactly
    qa0, qb0 = t.a // n, t.b // n
    best = None
    for qa in (qa0, qa0 + 1):
        for qb in (qb0, qb0 + 1):
            q = Eisenstein(qa, qb)
            r = x - q * y
            cand = (r.norm(), abs(qa), abs(qb), qa, qb, q, r)
            if best is None or cand[:5] < best[:5]:
                best = cand
    return best[5], best[6]


def gcd(x: Eisenstein, y: Eisenstein) -> Eisenstein:
    """A gcd of x and y, normalized to λ^k · (primary part).

    For arguments coprime to λ this is the unique primary associate.
    """
    x, y = as_eisenstein(x), as_eisenstein(y)
    if x.is_zero() and y.is_zero():
        raise ValueError("gcd(0, 0) is undefined")
    while not y.is_zero():
        x, y = y, divrem(x, y)[1]
    return _normalize_gcd(x)


def _normalize_gcd(g: Eisenstein) -> Eisenstein:
    k = 0
    while divides(LAMBDA, g) and not g.is_unit():
        g = exact_div(g, LAMBDA)
        k += 1
    _, p = primary_associate(g)
    return LAMBDA ** k * p


def xgcd(x: Eisenstein, y: Eisenstein) -> tuple[Eisenstein, Eisenstein, Eisenstein]:
    """Extended Euclid: (g, s, t) with s·x + t·y = g (g not normalized)."""
    x, y = as_eisenstein(x), as_eisenstein(y)
    r0, r1 = x, y
    s0, s1 = ONE, ZERO
    t0, t1 = ZERO, ONE
    while not r1.is_zero():
        q, r = divrem(r0, r1)
        r0, r1 = r1, r
        s0, s1 = s1, s0 - q * s1
        t0, t1 = t1, t0 - q * t1
    return r0, s0, t0


def divides(d: Eisenstein, x: Eisenstein) -> bool:
    d, x = as_eisenstein(d), as_eisenstein(x)
    if d.is_zero():
        return x.is_zero()
    return divrem(x, d)[1].is_zero()


def exact_div(x: Eisenstein, d: Eisenstein) -> Eisenstein:
    q, r = divrem(x, d)
    if not r.is_zero():
        raise ValueError(f"{d!r} does not divide {x!r}")
    return q


def primary_associate(c: Eisenstein) -> tuple[Eisenstein, Eisenstein]:
    """Write c = u·p with u a unit and p ≡ 1 (mod 3); returns (u, p).

    The primary associate is unique: the six units hit the six unit residues
    of Z[ω]/3, so exactly one unit multiple of c lands on 1 mod 3.
    """
    c = as_eisenstein(c)
    if c.is_zero() or divides(LAMBDA, c):
        raise RamifiedInputError("primary associate requires gcd(c, 3) = 1")
    for u in UNITS:
        p = u * c
        if p.is_primary():
            # u·c = p, so c = u⁻¹·p; unit inverses: (±ω^k)⁻¹ = ±ω^(3−k)
            u_inv = exact_div(ONE, u) if u.norm() == 1 else None
            return u_inv, p
    raise AssertionError("unreachable: one associate must be primary")


# ---------------------------------------------------------------------------
# Rational integer factorization (norms stay small; trial division + rho)
# ---------------------------------------------------------------------------

_SMALL_PRIMES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


def _is_prime_rational(n: int) -> bool:
    if n < 2:
        return False
    for p in _SMALL_PRIMES:
        if n % p == 0:
            return n == p
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):  # deterministic < 3.3e24
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def _pollard_rho(n: int) -> int:
    if n % 2 == 0:
        return 2
    for c in range(1, 50):
        x = y = 2
        d = 1
        while d == 1:
            x = (x * x + c) % n
            y = (y * y + c) % n
            y = (y * y + c) % n
            d = math.gcd(abs(x - y), n)
        if d != n:
            return d
    raise ArithmeticError(f"rho failed on {n}")


def factor_rational(n: int) -> dict[int, int]:
    """Factor a positive rational integer; {prime: exponent}, sorted keys."""
    if n <= 0:
        raise ValueError("need n >= 1")
    out: dict[int, int] = {}
    for p in range(2, 20000):
        if p * p > n:
            break
        while n % p == 0:
            out[p] = out.get(p, 0) + 1
            n //= p
    stack = [n] if n > 1 else []
    while stack:
        m = stack.pop()
        if m == 1:
            continue
        if _is_prime_rational(m):
            out[m] = out.get(m, 0) + 1
            continue
        d = _pollard_rho(m)
        stack.extend([d, m // d])
    return dict(sorted(out.items()))


@lru_cache(maxsize=None)
def _cube_root_of_unity(p: int) -> int:
    """Smallest-witness primitive cube root of unity mod p (p ≡ 1 mod 3)."""
    e = (p - 1) // 3
    for g in range(2, p):
        r = pow(g, e, p)
        if r != 1:
            return r
    raise AssertionError("no cube root of unity found")


@lru_cache(maxsize=None)
def split_rational_prime(p: int) -> Eisenstein:
    """A primary prime of Z[ω] above the rational prime p ≡ 1 (mod 3)."""
    if p % 3 != 1:
        raise ValueError("only split primes p ≡ 1 (mod 3)")
    r = _cube_root_of_unity(p)
    pi = gcd(Eisenstein(p), Eisenstein(r, 0) - OMEGA)
    if pi.norm() != p:
        pi = gcd(Eisenstein(p), Eisenstein(r * r % p, 0) - OMEGA)
    if pi.norm() != p:
        raise AssertionError(f"failed to split {p}")
    return primary_associate(pi)[1]


# ---------------------------------------------------------------------------
# Factorization in Z[ω]
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class Factorization:
    """unit · Π primeᵢ^expᵢ, every prime primary except λ (stored as 1−ω)."""

    unit: Eisenstein
    factors: tuple[tuple[Eisenstein, int], ...]

    @property
    def big_omega(self) -> int:
        """Ω: number of prime factors with multiplicity."""
        return sum(e for _, e in self.factors)

    @property
    def little_omega(self) -> int:
        """ω: number of distinct prime factors."""
        return len(self.factors)

    @property
    def tau(self) -> int:
        """τ: number of divisors (up to units)."""
        out = 1
        for _, e in self.factors:
            out *= e + 1
        return out

    def value(self) -> Eisenstein:
        out = self.unit
        for p, e in self.factors:
            out = out * p ** e
        return out

    def min_prime_norm(self) -> int:
        return min((p.norm() for p, _ in self.factors), default=0)

    def divisors(self, max_norm: int | None = None) -> Iterator[Eisenstein]:
        """All primary divisors (norm ≤ max_norm if given), λ-parts excluded.

        Divisors involving λ are not primary, so they are skipped; for inputs
        coprime to λ this enumerates every divisor once, primary-normalized.
        """
        prims = [(p, e) for p, e in self.factors if p != LAMBDA]

        def rec(i: int, cur: Eisenstein):
            if max_norm is not None and cur.norm() > max_norm:
                return
            if i == len(prims):
                yield primary_associate(cur)[1]
                return
            p, e = prims[i]
            val = cur
            for _ in range(e + 1):
                yield from rec(i + 1, val)
                val = val * p
                if max_norm is not None and val.norm() > max_norm:
                    break

        yield from rec(0, ONE)


def factor(c: Eisenstein) -> Factorization:
    """Factor c ≠ 0 into a unit times primary prime powers (λ for p = 3).

    Strategy: factor N(c) over Z, then lift each rational prime: p = 3 gives
    λ; p ≡ 2 (mod 3) is inert; p ≡ 1 (mod 3) splits via a cube root of unity
    mod p, and divisibility decides how the exponent spreads over π, π̄.
    """
    c = as_eisenstein(c)
    if c.is_zero():
        raise ZeroDivisionError("cannot factor 0")
    rest = c
    factors: list[tuple[Eisenstein, int]] = []
    for p, a in factor_rational(c.norm()).items():
        if p == 3:
            factors.append((LAMBDA, a))
            for _ in range(a):
                rest = exact_div(rest, LAMBDA)
        elif p % 3 == 2:
            q = primary_associate(Eisenstein(p))[1]  # inert; primary is −p
            assert a % 2 == 0
            factors.append((q, a // 2))
            for _ in range(a // 2):
                rest = exact_div(rest, q)
        else:
            pi = split_rational_prime(p)
            pib = primary_associate(pi.conj())[1]
            for prime in (pi, pib):
                e = 0
                while divides(prime, rest):
                    rest = exact_div(rest, prime)
                    e += 1
                if e:
                    factors.append((prime, e))
    if not rest.is_unit():
        raise AssertionError(f"factorization of {c!r} left non-unit {rest!r}")
    factors.sort(key=lambda pe: pe[0].key())
    return Factorization(unit=rest, factors=tuple(factors))


def is_prime(c: Eisenstein) -> bool:
    """Primality in Z[ω]: prime norm, or norm q² with q ≡ 2 (mod 3) inert."""
    c = as_eisenstein(c)
    n = c.norm()
    if n <= 1:
        return False
    if _is_prime_rational(n):
        return True  # split primes (n ≡ 1 mod 3) and λ associates (n = 3)
    q = math.isqrt(n)
    # the only ideal of norm q² is (q) itself, so the associate check is safety
    return q * q == n and q % 3 == 2 and _is_prime_rational(q) and any(u * c == Eisenstein(q) for u in UNITS)


# ---------------------------------------------------------------------------
# Residue systems
# ---------------------------------------------------------------------------

def hermite_box(c: Eisenstein) -> tuple[int, int, int]:
    """Triangular basis of the lattice cZ[ω]: vectors (d1, 0) and (k, d2).

    d1·d2 = N(c) and the box {x + yω : 0 ≤ x < d1, 0 ≤ y < d2} is a full
    residue system mod c.
    """
    c = as_eisenstein(c)
    if c.is_zero():
        raise ZeroDivisionError("zero modulus")
    # lattice generated by c·1 = (a, b) and c·ω = (−b, a−b)
    v1, v2 = (c.a, c.b), (-c.b, c.a - c.b)
    g, s, t = _xgcd_int(v1[1], v2[1])
    n = c.norm()
    if g == 0:
        # b = 0 and a − b = 0 impossible for c ≠ 0; g = 0 only if both second
        # coords vanish, i.e. c = 0
        raise AssertionError
    d2 = abs(g)
    w = (s * v1[0] + t * v2[0], g)
    d1 = n // d2
    k = (w[0] * (1 if g > 0 else -1)) % d1
    return d1, k, d2


def _xgcd_int(a: int, b: int) -> tuple[int, int, int]:
    old_r, r = a, b
    old_s, s = 1, 0
    old_t, t = 0, 1
    while r:
        q = old_r // r
        old_r, r = r, old_r - q * r
        old_s, s = s, old_s - q * s
        old_t, t = t, old_t - q * t
    return old_r, old_s, old_t


def reduce_mod(z: Eisenstein, c: Eisenstein) -> Eisenstein:
    """Canonical representative of z mod c inside the hermite_box of c."""
    z = as_eisenstein(z)
    d1, k, d2 = hermite_box(c)
    t = z.b // d2
    y = z.b - t * d2
    x = (z.a - t * k) % d1
    return Eisenstein(x, y)


@dataclass(frozen=True)
class ResidueSystem:
    modulus: Eisenstein
    representatives: tuple[Eisenstein, ...]


def residues(c: Eisenstein) -> ResidueSystem:
    """All N(c) canonical residues mod c (the hermite_box enumeration)."""
    d1, _, d2 = hermite_box(c)
    reps = tuple(Eisenstein(x, y) for y in range(d2) for x in range(d1))
    assert len(reps) == as_eisenstein(c).norm()
    return ResidueSystem(modulus=as_eisenstein(c), representatives=reps)


def inverse_mod(x: Eisenstein, c: Eisenstein) -> Eisenstein:
    """y with x·y ≡ 1 (mod c), canonical; NotInvertibleError when gcd ≠ 1."""
    x, c = as_eisenstein(x), as_eisenstein(c)
    if c.is_zero():
        raise ZeroDivisionError("zero modulus")
    g, s, _ = xgcd(x, c)
    if not g.is_unit():
        raise NotInvertibleError(f"{x!r} is not invertible mod {c!r}")
    inv = exact_div(ONE, g) * s
    inv = reduce_mod(inv, c)
    assert divides(c, x * inv - ONE)
    return inv


def mulmod(x: Eisenstein, y: Eisenstein, c: Eisenstein) -> Eisenstein:
    return reduce_mod(x * y, c)


def powmod(x: Eisenstein, n: int, c: Eisenstein) -> Eisenstein:
    result = reduce_mod(ONE, c)
    base = reduce_mod(x, c)
    while n:
        if n & 1:
            result = mulmod(result, base, c)
        base = mulmod(base, base, c)
        n >>= 1
    return result


# ---------------------------------------------------------------------------
# Enumeration
# ---------------------------------------------------------------------------

def enumerate_primary(max_norm: int) -> list[Eisenstein]:
    """All primary c with N(c) ≤ max_norm, sorted by (norm, a, b)."""
    return primary_in_range(1, max_norm + 1)


def primary_in_range(lo: int, hi: int) -> list[Eisenstein]:
    """Primary c with lo ≤ N(c) < hi, sorted by (norm, a, b).

    Lattice scan over the bounding box of the norm ellipse a² − ab + b² < hi:
    |b| ≤ 2√(hi/3), and for each b the a-range solves the quadratic.
    """
    if hi <= lo or hi <= 1:
        return []
    out = []
    bmax = math.isqrt(4 * (hi - 1) // 3) + 1
    for b in range(-3 * (bmax // 3), bmax + 1, 3):
        disc = 4 * (hi - 1) - 3 * b * b
        if disc < 0:
            continue
        half = math.isqrt(disc)
        a_lo, a_hi = (b - half + 1) // 2 - 1, (b + half) // 2 + 1
        a = a_lo + (1 - a_lo) % 3  # a ≡ 1 (mod 3)
        while a <= a_hi:
            n = a * a - a * b + b * b
            if lo <= n < hi:
                out.append(Eisenstein(a, b))
            a += 3
    out.sort(key=Eisenstein.key)
    return out


def primary_primes_up_to(max_norm: int) -> list[Eisenstein]:
    """Primary primes (λ excluded) with norm ≤ max_norm, sorted by (norm, a, b)."""
    out = []
    for p in range(2, max_norm + 1):
        if not _is_prime_rational(p):
            continue
        if p % 3 == 1:
            pi = split_rational_prime(p)
            pib = primary_associate(pi.conj())[1]
            out.extend([pi, pib])
        elif p % 3 == 2 and p * p <= max_norm:
            out.append(primary_associate(Eisenstein(p))[1])
    out.sort(key=Eisenstein.key)
    return out
