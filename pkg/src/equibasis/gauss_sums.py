"""Quadratic Gauss sums, their reciprocity laws, and the closed-form amplitudes.

All sums are evaluated by direct accumulation. Phase numerators are kept as
exact Python integers and reduced modulo the phase period before any float
conversion, so arguments passed to exp() never grow with the summation index.
"""

import cmath
import math
from dataclasses import dataclass

import numpy as np

# above this many terms, switch to exactly rounded (compensated) accumulation
_FSUM_THRESHOLD = 1000

_I_POWERS = (1 + 0j, 1j, -1 + 0j, -1j)


@dataclass(frozen=True)
class GaussSumParams:
    """Integer parameters (p, m, n) of the quadratic and generalized sums.

    The reciprocity-specific parity condition (m*p + n even) is checked at the
    call site, not here.
    """

    p: int
    m: int
    n: int = 0

    def __post_init__(self):
        if self.p < 1 or self.m < 1:
            raise ValueError(f"p and m must be positive, got p={self.p}, m={self.m}")
        if self.n < 0:
            raise ValueError(f"n must be nonnegative, got n={self.n}")


def _check_pm(p: int, m: int) -> None:
    if p < 1 or m < 1:
        raise ValueError(f"p and m must be positive, got p={p}, m={m}")


def _root_of_unity_sum(numerators, modulus: int) -> complex:
    """Sum of exp(2*pi*i*q/modulus) over integer numerators q."""
    reduced = [q % modulus for q in numerators]
    scale = 2.0 * math.pi / modulus
    if len(reduced) > _FSUM_THRESHOLD:
        terms = np.exp(1j * scale * np.asarray(reduced, dtype=float))
        return complex(math.fsum(terms.real), math.fsum(terms.imag))
    return sum(cmath.exp(1j * scale * q) for q in reduced)


def quadratic_gauss_sum(p: int, m: int) -> complex:
    """Sum over j < p of exp(2*pi*i*j^2*m/p)."""
    _check_pm(p, m)
    return _root_of_unity_sum([j * j * m for j in range(p)], p)


def generalized_gauss_sum(p: int, m: int, n: int = 0) -> complex:
    """Sum over j < p of exp(2*pi*i*(j^2*m + j*n)/p); n=0 recovers the quadratic sum."""
    _check_pm(p, m)
    if n < 0:
        raise ValueError(f"n must be nonnegative, got n={n}")
    return _root_of_unity_sum([j * j * m + j * n for j in range(p)], p)


def landsberg_schaar_residual(p: int, m: int) -> float:
    """|LHS - RHS| of the Landsberg-Schaar reciprocity identity.

    LHS is the length-p quadratic sum over sqrt(p); RHS trades it for a
    length-2m sum in the half-angle convention. Zero in exact arithmetic.
    """
    _check_pm(p, m)
    lhs = quadratic_gauss_sum(p, m) / math.sqrt(p)
    inner = _root_of_unity_sum([-j * j * p for j in range(2 * m)], 4 * m)
    rhs = cmath.exp(1j * math.pi / 4) / math.sqrt(2 * m) * inner
    return abs(lhs - rhs)


def generalized_reciprocity_residual(p: int, m: int, n: int) -> float:
    """|LHS - RHS| of the half-angle reciprocity law for generalized sums.

    Both sides use exp(pi*i*.../p) phases (half-angle convention, distinct
    from `generalized_gauss_sum`). Requires m*p + n to be even.
    """
    _check_pm(p, m)
    if n < 0:
        raise ValueError(f"n must be nonnegative, got n={n}")
    if (m * p + n) % 2 != 0:
        raise ValueError(
            f"parity condition violated: m*p + n = {m * p + n} must be even"
        )
    lhs = _root_of_unity_sum([j * j * m + j * n for j in range(p)], 2 * p) / math.sqrt(p)
    inner = _root_of_unity_sum([-(j * j * p + j * n) for j in range(m)], 2 * m)
    prefactor = cmath.exp(1j * math.pi * (m * p - n * n) / (4 * m * p))
    rhs = prefactor * inner / math.sqrt(m)
    return abs(lhs - rhs)


def amplitude_closed_form(D: int, k: int) -> complex:
    """Closed form of the k-th coefficient amplitude at full interpolation (t=1).

    Even D: e^{i*pi/4}/sqrt(D) * exp(-i*pi*k^2/D).
    Odd D:  e^{i*pi/4}/sqrt(D) * exp(-i*pi*k^2/(2D)) * (1 - i^{2k+D})/sqrt(2).

    Either way the modulus is exactly 1/sqrt(D). Phase numerators are reduced
    modulo the exact period (2D resp. 4D) before float conversion.
    """
    if D < 1:
        raise ValueError(f"dimension must be positive, got {D}")
    if not 0 <= k < D:
        raise ValueError(f"index k must lie in [0, {D - 1}], got {k}")
    prefactor = cmath.exp(1j * math.pi / 4) / math.sqrt(D)
    if D % 2 == 0:
        return prefactor * cmath.exp(-1j * math.pi * ((k * k) % (2 * D)) / D)
    phase = cmath.exp(-1j * math.pi * ((k * k) % (4 * D)) / (2 * D))
    return prefactor * phase * (1 - _I_POWERS[(2 * k + D) % 4]) / math.sqrt(2)
