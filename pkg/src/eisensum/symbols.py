"""Cubic residue symbol (·/·)₃ on Z[ω] and the Kubota symbol on Γ₁.

Two independent evaluation routes are provided:

* ``cubic_symbol_euler`` — the Euler criterion at a prime π ∤ 3:
  (x/π)₃ is the cube root of unity ≡ x^{(N(π)−1)/3} (mod π).
* ``cubic_symbol`` — a gcd-like descent on arbitrary moduli coprime to 3,
  driven by cubic reciprocity for primary arguments plus the two
  supplementary laws (both verified against the Euler oracle at scale):

      (ω/c)₃ = ω^{(N(c)−1)/3}
      (λ/c)₃ = ω^{(a−1)/3}        for primary c = a + bω

  Both exponent formulas are additive under multiplication of primary
  arguments, so proving them at primes extends them to all primary c.

The Kubota symbol κ on Γ₁ = {γ ∈ SL₂(Z[ω]) : γ ≡ 1 mod 3} is (c/a)₃ for
lower-left entry c ≠ 0 and 1 otherwise; it is a group homomorphism.
"""

from __future__ import annotations

from dataclasses import dataclass

from .core import (
    Eisenstein,
    LAMBDA,
    ONE,
    OMEGA,
    RamifiedInputError,
    _UNIT_OMEGA_EXP,
    as_eisenstein,
    divides,
    divrem,
    exact_div,
    is_prime,
    omega_power,
    powmod,
    primary_associate,
    reduce_mod,
)


@dataclass(frozen=True)
class CubicSymbol:
    """Element of {0, 1, ω, ω²}: exponent k for ω^k, or None for zero."""

    exponent: int | None

    @property
    def tag(self) -> str:
        return ("one", "omega", "omega2")[self.exponent] if self.exponent is not None else "zero"

    @property
    def is_zero(self) -> bool:
        return self.exponent is None

    def __mul__(self, other: "CubicSymbol") -> "CubicSymbol":
        if self.exponent is None or other.exponent is None:
            return ZERO_SYMBOL
        return CubicSymbol((self.exponent + other.exponent) % 3)

    def __pow__(self, n: int) -> "CubicSymbol":
        if self.exponent is None:
            return ONE_SYMBOL if n == 0 else ZERO_SYMBOL
        return CubicSymbol(self.exponent * n % 3)

    def conjugate(self) -> "CubicSymbol":
        if self.exponent is None:
            return self
        return CubicSymbol(-self.exponent % 3)

    def value(self) -> Eisenstein:
        if self.exponent is None:
            return Eisenstein(0)
        return omega_power(self.exponent)

    def __complex__(self) -> complex:
        return complex(self.value()) if self.exponent is not None else 0j

    def __repr__(self):
        return f"CubicSymbol({self.tag})"


ZERO_SYMBOL = CubicSymbol(None)
ONE_SYMBOL = CubicSymbol(0)
OMEGA_SYMBOL = CubicSymbol(1)
OMEGA2_SYMBOL = CubicSymbol(2)


def cubic_symbol_euler(x: Eisenstein, pi: Eisenstein) -> CubicSymbol:
    """(x/π)₃ by the Euler criterion; π must be a prime not dividing 3.

    Two distinct cube roots of unity differ by an element of norm 3, so for
    N(π) > 3 the congruence class mod π pins the value down exactly.
    """
    x, pi = as_eisenstein(x), as_eisenstein(pi)
    if not is_prime(pi) or pi.norm() == 3:
        raise RamifiedInputError("Euler criterion needs a prime with π ∤ 3")
    if divides(pi, x):
        return ZERO_SYMBOL
    n = pi.norm()
    y = powmod(x, (n - 1) // 3, pi)
    for k in range(3):
        if y == reduce_mod(omega_power(k), pi):
            return CubicSymbol(k)
    raise AssertionError(f"Euler criterion produced a non-root of unity for {x!r} mod {pi!r}")


def cubic_symbol(x: Eisenstein, c: Eisenstein) -> CubicSymbol:
    """(x/c)₃ for any c ≠ 0 with gcd(c, 3) = 1, without factoring c.

    Descent: reduce x mod c (remainder division, so norms shrink by ≥ 3×),
    strip λ-powers and the unit via the supplements, then flip the primary
    parts by reciprocity.  Equals the product of Euler symbols over the
    factorization of c; returns zero exactly when gcd(x, c) ≠ 1.
    """
    x, c = as_eisenstein(x), as_eisenstein(c)
    if c.is_zero() or divides(LAMBDA, c):
        raise RamifiedInputError("cubic symbol needs gcd(c, 3) = 1, c ≠ 0")
    c = primary_associate(c)[1]  # unit factors of the modulus are invisible
    acc = 0
    while True:
        if c.norm() == 1:
            return CubicSymbol(acc % 3)
        x = divrem(x, c)[1]
        if x.is_zero():
            return ZERO_SYMBOL
        lam_exp = 0
        while divides(LAMBDA, x):
            x = exact_div(x, LAMBDA)
            lam_exp += 1
        u_inv, xp = primary_associate(x)
        unit_exp = _UNIT_OMEGA_EXP[u_inv]
        acc += lam_exp * ((c.a - 1) // 3)          # (λ/c)₃ = ω^{(a−1)/3}
        acc += unit_exp * ((c.norm() - 1) // 3)    # (ω/c)₃ = ω^{(N−1)/3}
        x, c = c, xp                               # (xp/c)₃ = (c/xp)₃


def cubic_symbol_factored(x: Eisenstein, fact) -> CubicSymbol:
    """Oracle route: product of Euler symbols over a Factorization of c."""
    out = ONE_SYMBOL
    for p, e in fact.factors:
        out = out * cubic_symbol_euler(x, p) ** e
    return out


# ---------------------------------------------------------------------------
# Kubota symbol
# ---------------------------------------------------------------------------

class GammaMembershipError(ValueError):
    """Matrix is not in Γ₁ (det 1 and ≡ identity mod 3 required)."""


@dataclass(frozen=True)
class GammaOneMatrix:
    """Element of Γ₁: det = 1 and (a, b, c, d) ≡ (1, 0, 0, 1) mod 3."""

    a: Eisenstein
    b: Eisenstein
    c: Eisenstein
    d: Eisenstein

    def __post_init__(self):
        det = self.a * self.d - self.b * self.c
        if det != ONE:
            raise GammaMembershipError("determinant must be 1")
        if not (
            self.a.a % 3 == 1 and self.a.b % 3 == 0
            and self.d.a % 3 == 1 and self.d.b % 3 == 0
            and self.b.a % 3 == 0 and self.b.b % 3 == 0
            and self.c.a % 3 == 0 and self.c.b % 3 == 0
        ):
            raise GammaMembershipError("matrix must be ≡ identity mod 3")

    def __mul__(self, other: "GammaOneMatrix") -> "GammaOneMatrix":
        return GammaOneMatrix(
            self.a * other.a + self.b * other.c,
            self.a * other.b + self.b * other.d,
            self.c * other.a + self.d * other.c,
            self.c * other.b + self.d * other.d,
        )

    @classmethod
    def identity(cls) -> "GammaOneMatrix":
        return cls(ONE, Eisenstein(0), Eisenstein(0), ONE)

    @classmethod
    def upper(cls, t: Eisenstein) -> "GammaOneMatrix":
        """n[3t]: unipotent upper with entry 3t."""
        return cls(ONE, 3 * as_eisenstein(t), Eisenstein(0), ONE)

    @classmethod
    def lower(cls, t: Eisenstein) -> "GammaOneMatrix":
        """Transposed unipotent with lower-left entry 3t."""
        return cls(ONE, Eisenstein(0), 3 * as_eisenstein(t), ONE)


def kubota(gamma: GammaOneMatrix) -> CubicSymbol:
    """κ(γ) = (c/a)₃ when the lower-left entry c ≠ 0, else 1."""
    if gamma.c.is_zero():
        return ONE_SYMBOL
    return cubic_symbol(gamma.c, gamma.a)
