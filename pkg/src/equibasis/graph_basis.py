"""Equally entangled bases from a controlled-phase gate of tunable strength.

The bipartite family applies phases omega^(j*k*t) to the uniform product state
and shifts with local clock operators; its coefficient matrix is a scaled
Vandermonde matrix in the nodes omega^(j*t), which gives exact control over
rank and determinant. The same gate on every edge of the complete graph yields
the multipartite extension.
"""

import math
from dataclasses import dataclass, field

import numpy as np

DEFAULT_AMPLITUDE_CAP = 2**24


def _check_t(t: float) -> None:
    if not math.isfinite(t):
        raise ValueError(f"interpolation parameter must be finite, got {t!r}")
    if not 0.0 <= t <= 1.0:
        raise ValueError(f"interpolation parameter must lie in [0, 1], got {t}")


def _check_dim(D: int) -> None:
    if D < 1:
        raise ValueError(f"dimension must be positive, got {D}")


def fourier_state(D: int, m: int) -> np.ndarray:
    """The m-th Fourier-basis vector Z^m|+> = (1, omega^m, omega^{2m}, ...)/sqrt(D)."""
    _check_dim(D)
    if not 0 <= m < D:
        raise ValueError(f"index m must lie in [0, {D - 1}], got {m}")
    k = np.arange(D)
    return np.exp((2j * np.pi / D) * ((m * k) % D)) / math.sqrt(D)


def cp_gate(D: int, t: float) -> np.ndarray:
    """Phase table of the tunable controlled-phase gate: entry (j, k) = omega^(j*k*t).

    Acts on a two-qudit amplitude matrix by elementwise multiplication. t=0 is
    the identity; t=1 the full controlled-phase gate. The product j*k is NOT
    reduced mod D before scaling: t is real, so reduction would change every
    phase except at t in {0, 1}.
    """
    _check_dim(D)
    _check_t(t)
    jk = np.outer(np.arange(D), np.arange(D))
    return np.exp((2j * np.pi * t / D) * jk)


@dataclass(frozen=True)
class GraphFamilyState:
    """One member of the bipartite family with its coefficient matrix."""

    D: int
    t: float
    m: int
    n: int
    omega: np.ndarray = field(repr=False, compare=False)


def graph_family_state(D: int, t: float, m: int, n: int) -> GraphFamilyState:
    """State (m, n) of the family: Omega_jk = omega^(j*m) omega^(k*n) omega^(j*k*t)/D.

    Every entry has modulus 1/D, so the Frobenius norm is exactly one. At t=0
    this is the product state |m-bar>|n-bar>; at t=1 with m=n=0 it is the
    maximally entangled two-qudit graph state.
    """
    _check_dim(D)
    _check_t(t)
    if not (0 <= m < D and 0 <= n < D):
        raise ValueError(f"shift indices must lie in [0, {D - 1}], got m={m}, n={n}")
    j = np.arange(D)
    zrow = np.exp((2j * np.pi / D) * ((m * j) % D))
    zcol = np.exp((2j * np.pi / D) * ((n * j) % D))
    omega = zrow[:, None] * cp_gate(D, t) * zcol[None, :] / D
    return GraphFamilyState(D=D, t=float(t), m=m, n=n, omega=omega)


def vandermonde_det(D: int, t: float) -> complex:
    """det of D*Omega(t) as the explicit node product prod_{j>k} (omega^(j*t) - omega^(k*t)).

    Computed term by term, not by elimination. The complex value may
    under/overflow for extreme (D, t); use `vandermonde_logdet` in that regime.
    """
    _check_dim(D)
    nodes = np.exp((2j * np.pi * t / D) * np.arange(D))
    det = 1.0 + 0.0j
    for j in range(D):
        for k in range(j):
            det *= nodes[j] - nodes[k]
    return complex(det)


def vandermonde_logdet(D: int, t: float) -> tuple:
    """(log|det|, unit phase) of the node product, safe from under/overflow.

    Returns (-inf, 1) when some factor vanishes (coincident nodes).
    """
    _check_dim(D)
    nodes = np.exp((2j * np.pi * t / D) * np.arange(D))
    log_abs = 0.0
    phase = 1.0 + 0.0j
    for j in range(D):
        for k in range(j):
            factor = nodes[j] - nodes[k]
            r = abs(factor)
            if r == 0.0:
                return float("-inf"), 1.0 + 0.0j
            log_abs += math.log(r)
            phase *= factor / r
    return log_abs, phase


def full_rank_certificate(D: int, t: float, tol: float = 1e-12) -> bool:
    """True when every Schmidt coefficient of the t-family state is nonzero.

    The Vandermonde product vanishes exactly when r*t is a multiple of D for
    some 1 <= r <= D-1 (coincident nodes); no such t exists in (0, 1], so the
    certificate holds on the whole family. Values of t outside [0, 1] are
    accepted for diagnostics, where such collisions do occur.
    """
    _check_dim(D)
    if not math.isfinite(t):
        raise ValueError(f"interpolation parameter must be finite, got {t!r}")
    for r in range(1, D):
        q = r * t / D
        if abs(q - round(q)) <= tol:
            return False
    return True


def ghz_graph_state(
    n_sites: int, D: int, t: float, max_amplitudes: int = DEFAULT_AMPLITUDE_CAP
) -> np.ndarray:
    """Complete-graph state on n qudits as a (D,)*n amplitude tensor.

    The amplitude at computational index (q_1, ..., q_n) is
    D^(-n/2) * omega^(t * sum_{i<j} q_i q_j): one tunable controlled-phase
    gate per site pair, applied to the uniform product state.
    """
    if n_sites < 2:
        raise ValueError(f"need at least 2 sites, got {n_sites}")
    _check_dim(D)
    _check_t(t)
    size = D**n_sites
    if size > max_amplitudes:
        raise ValueError(
            f"state needs {size} amplitudes, exceeding the cap of {max_amplitudes}"
        )
    q = np.indices((D,) * n_sites)
    total = q.sum(axis=0)
    # sum over site pairs q_i*q_j via the square trick; always an even integer
    pair_sum = (total * total - (q * q).sum(axis=0)) // 2
    return np.exp((2j * np.pi * t / D) * pair_sum) / math.sqrt(size)


def multipartite_family(
    n_sites: int,
    D: int,
    t: float,
    shifts,
    max_amplitudes: int = DEFAULT_AMPLITUDE_CAP,
) -> np.ndarray:
    """Site-local clock shifts applied to the complete-graph state.

    `shifts` gives one Z power per site; the amplitude at index q gains the
    phase omega^(sum_i shifts_i * q_i). Running over all D^n shift tuples
    enumerates an orthonormal basis of the n-qudit space.
    """
    shifts = tuple(int(s) for s in shifts)
    if len(shifts) != n_sites:
        raise ValueError(f"expected {n_sites} shifts, got {len(shifts)}")
    if any(not 0 <= s < D for s in shifts):
        raise ValueError(f"shifts must lie in [0, {D - 1}], got {shifts}")
    psi = ghz_graph_state(n_sites, D, t, max_amplitudes=max_amplitudes)
    q = np.indices((D,) * n_sites)
    weight = sum(s * q[i] for i, s in enumerate(shifts)) % D
    return psi * np.exp((2j * np.pi / D) * weight)


def orthonormality_residual(omega) -> float:
    """Max Gram defect of the D^2 clock-shifted states sharing this matrix.

    Inner products of two shifted states depend only on the shift difference
    (a, b) and equal the 2-D Fourier transform of |Omega|^2 at (a, b), so the
    full D^2 x D^2 Gram check reduces to one FFT. Returns the max deviation
    from delta_{a,0} delta_{b,0}.
    """
    weights = np.abs(np.asarray(omega, dtype=complex)) ** 2
    transform = np.fft.fft2(weights)
    transform[0, 0] -= 1.0
    return float(np.max(np.abs(transform)))
