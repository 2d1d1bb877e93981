"""The Fourier-phase family of equally entangled bipartite bases.

One real phase per index drives everything: the coefficient vector a(t) is
the discrete Fourier transform of exp(i*t*theta), and the D^2 basis states
are cyclic-shift placements of a(t) inside a D x D coefficient matrix.
"""

import math
from dataclasses import dataclass

import numpy as np


@dataclass(frozen=True)
class BasisFamilySpec:
    """Which family to build: dimension, interpolation parameter, construction tag."""

    D: int
    t: float
    construction: str = "gauss"

    def __post_init__(self):
        if self.D < 1:
            raise ValueError(f"dimension must be positive, got {self.D}")
        if self.construction not in ("gauss", "graph"):
            raise ValueError(f"unknown construction {self.construction!r}")
        _check_t(self.t)


def _check_t(t: float) -> None:
    if not math.isfinite(t):
        raise ValueError(f"interpolation parameter must be finite, got {t!r}")
    if not 0.0 <= t <= 1.0:
        raise ValueError(f"interpolation parameter must lie in [0, 1], got {t}")


def quadratic_phases(D: int) -> np.ndarray:
    """The quadratic phase profile that reaches maximal entanglement at t=1.

    theta_j = pi*j^2/D for even D and 2*pi*j^2/D for odd D. The values are
    deliberately NOT reduced mod 2*pi: reduction would leave a(1) alone but
    change a(t) at every interior t.
    """
    if D < 1:
        raise ValueError(f"dimension must be positive, got {D}")
    j = np.arange(D, dtype=float)
    scale = math.pi / D if D % 2 == 0 else 2.0 * math.pi / D
    return scale * j * j


def amplitudes(phases, t: float) -> np.ndarray:
    """Coefficient vector a_k(t) = (1/D) * sum_j exp(i*t*theta_j) * omega^(k*j).

    omega = exp(2*pi*i/D). The result always has unit 2-norm (unitarity of
    the transform). t=0 gives the delta vector, i.e. a product state.
    """
    theta = np.asarray(phases, dtype=float)
    if theta.ndim != 1 or len(theta) < 1:
        raise ValueError("phases must be a nonempty 1-D array")
    if not np.all(np.isfinite(theta)):
        raise ValueError("phases must be finite")
    _check_t(t)
    D = len(theta)
    kj = np.outer(np.arange(D), np.arange(D)) % D  # exact integer reduction
    fourier = np.exp((2j * np.pi / D) * kj)
    return fourier @ (np.exp(1j * t * theta) / D)


def orthonormality_residual(coeffs) -> float:
    """Max cyclic-autocorrelation defect of a coefficient vector.

    Returns max over m of |sum_k conj(a_k) a_{k (+) m} - delta_{m,0}|, which is
    zero exactly when the D^2 shifted states built from `coeffs` are an
    orthonormal basis. O(D^2), versus O(D^4) for the full Gram matrix.
    """
    a = np.asarray(coeffs, dtype=complex)
    worst = 0.0
    for m in range(len(a)):
        corr = np.vdot(a, np.roll(a, -m))
        target = 1.0 if m == 0 else 0.0
        worst = max(worst, abs(corr - target))
    return worst


def basis_state(coeffs, m: int, n: int) -> np.ndarray:
    """Coefficient matrix of the (m, n) shifted state.

    Entry (k (+) m, k (+) m (+) n) holds a_k ((+) is addition mod D); all other
    entries vanish. Rows index the first qudit, columns the second.
    """
    a = np.asarray(coeffs, dtype=complex)
    D = len(a)
    if not (0 <= m < D and 0 <= n < D):
        raise ValueError(f"shift indices must lie in [0, {D - 1}], got m={m}, n={n}")
    k = np.arange(D)
    omega = np.zeros((D, D), dtype=complex)
    omega[(k + m) % D, (k + m + n) % D] = a
    return omega


def gauss_family(spec: BasisFamilySpec) -> list:
    """All D^2 states of the family at spec.t, ordered row-major in (m, n)."""
    if spec.construction != "gauss":
        raise ValueError(f"expected construction 'gauss', got {spec.construction!r}")
    a = amplitudes(quadratic_phases(spec.D), spec.t)
    return [basis_state(a, m, n) for m in range(spec.D) for n in range(spec.D)]
