"""Schmidt spectra and the entanglement measures evaluated on both families."""

import math
from dataclasses import dataclass, field

import numpy as np

from . import gauss_basis, graph_basis
from .linalg import log_abs_determinant, pivot_log_abs_determinant

NORM_TOL = 1e-10
# spectrum weights below this are treated as exact zeros in the entropy
ZERO_CLAMP = 1e-15

CONSTRUCTIONS = ("gauss", "graph")
MEASURES = ("entropy", "g_concurrence", "schmidt_coefficient")


def schmidt_spectrum(state) -> np.ndarray:
    """Descending squared singular values of a unit-norm coefficient matrix.

    Renormalized to sum to one exactly, so downstream measures never see
    rounding-induced norm drift. Rejects inputs whose Frobenius norm differs
    from one by more than 1e-10.
    """
    omega = np.asarray(state, dtype=complex)
    norm = float(np.linalg.norm(omega))
    if abs(norm - 1.0) > NORM_TOL:
        raise ValueError(f"state must have unit Frobenius norm, got {norm!r}")
    lam = np.linalg.svd(omega, compute_uv=False) ** 2
    return lam / lam.sum()


def entropy_of_entanglement(spectrum, dim: int | None = None) -> float:
    """Normalized entropy -sum lambda_k log_dim(lambda_k), with 0*log(0) := 0.

    `dim` is the logarithm base and defaults to the spectrum length, so a
    uniform spectrum scores exactly 1 and a pure spectrum 0. Weights below
    1e-15 are clamped to zero before the log; the result is clipped to [0, 1].
    """
    lam = np.asarray(spectrum, dtype=float)
    if dim is None:
        dim = len(lam)
    if dim < 2:
        return 0.0
    nonzero = lam[lam >= ZERO_CLAMP]
    value = -float(np.sum(nonzero * np.log(nonzero))) / math.log(dim)
    return min(max(value, 0.0), 1.0) + 0.0  # +0.0 flushes IEEE negative zero


def g_concurrence_numeric(state) -> float:
    """D * |det Omega|^(2/D) for a unit-norm square coefficient matrix.

    Evaluated as D * exp((2/D) * log|det|) with log|det| taken from LU pivots,
    so tiny determinants at large D do not underflow along the way.
    """
    omega = np.asarray(state, dtype=complex)
    D = omega.shape[0]
    log_abs = log_abs_determinant(omega)
    if log_abs == float("-inf"):
        return 0.0
    return D * math.exp((2.0 / D) * log_abs)


def g_concurrence_reference(D: int, t: float) -> float:
    """Numeric G-concurrence of the tunable-gate family, in extended precision.

    log|det Omega(t)| is exponentially ill-conditioned at mid-range t for
    larger D: double-rounded matrix entries only pin it to ~kappa*eps, which
    is worse than 1e-9 already near D=30. Building the matrix AND eliminating
    in 80-bit arithmetic keeps this route independent of the closed form while
    staying accurate where doubles cannot.
    """
    if D < 1:
        raise ValueError(f"dimension must be positive, got {D}")
    pi_ext = np.arccos(np.longdouble(-1.0))
    jk = np.outer(np.arange(D), np.arange(D)).astype(np.longdouble)
    angle = (2.0 * pi_ext * np.longdouble(t) / D) * jk
    omega = (np.cos(angle) + 1j * np.sin(angle)) / D
    log_abs = pivot_log_abs_determinant(omega)
    if log_abs == float("-inf"):
        return 0.0
    return D * math.exp((2.0 / D) * log_abs)


def g_concurrence_closed_form(D: int, t: float) -> float:
    """Closed form (2^(D-1)/D) * prod_r [sin^2(pi*r*t/D)]^((D-r)/D) for the graph family.

    Evaluated in log space; exact zero at t=0 (all factors vanish).
    """
    if D < 1:
        raise ValueError(f"dimension must be positive, got {D}")
    if D == 1:
        return 1.0
    if t == 0.0:
        return 0.0
    r = np.arange(1, D, dtype=float)
    sines = np.sin(np.pi * r * t / D)
    if np.any(sines == 0.0):
        return 0.0
    log_cg = (
        (D - 1) * math.log(2.0)
        - math.log(D)
        + float(np.sum(((D - r) / D) * 2.0 * np.log(np.abs(sines))))
    )
    return math.exp(log_cg)


def log_g_concurrence_derivative(D: int, t: float) -> float:
    """d/dt of log of the closed-form monotone: (2*pi/D^2) * sum_r r(D-r) cot(pi*r*t/D).

    Pole at t=0; exactly zero at t=1, where the r and D-r terms cancel in
    pairs. Each cotangent argument is range-reduced to (-1/2, 1/2] periods
    with exact integer arithmetic on the numerator, which preserves that
    pairwise cancellation in floating point.
    """
    if D < 1:
        raise ValueError(f"dimension must be positive, got {D}")
    if not 0.0 < t <= 1.0:
        raise ValueError(f"need 0 < t <= 1 (pole at t=0), got {t}")
    terms = []
    for r in range(1, D):
        w = r * t
        k = round(w / D)
        v = (w - k * D) / D  # in [-1/2, 1/2], never 0 for t in (0, 1]
        cot = math.cos(math.pi * v) / math.sin(math.pi * v)
        terms.append(r * (D - r) * cot)
    return 2.0 * math.pi / (D * D) * math.fsum(terms)


@dataclass(frozen=True)
class EntanglementCurve:
    """One entanglement measure sampled on an ascending t grid."""

    t_grid: np.ndarray = field(compare=False)
    values: np.ndarray = field(compare=False)
    measure: str = "entropy"


def default_t_grid(points: int = 201) -> np.ndarray:
    """Uniform grid on [0, 1] including both endpoints."""
    return np.linspace(0.0, 1.0, points)


def representative_state(construction: str, D: int, t: float) -> np.ndarray:
    """Coefficient matrix of the (0, 0) member; all members share its spectrum."""
    if construction == "gauss":
        a = gauss_basis.amplitudes(gauss_basis.quadratic_phases(D), t)
        return gauss_basis.basis_state(a, 0, 0)
    if construction == "graph":
        return graph_basis.graph_family_state(D, t, 0, 0).omega
    raise ValueError(f"unknown construction {construction!r}")


def curve(
    construction: str, D: int, measure: str, t_grid, k: int | None = None
) -> EntanglementCurve:
    """Evaluate one measure for the (construction, D) family over a t grid.

    measure is 'entropy', 'g_concurrence', or 'schmidt_coefficient' (the k-th
    largest Schmidt coefficient; requires k). The graph family's G-concurrence
    uses the closed form; everything else goes through the Schmidt spectrum or
    the determinant of the representative state.
    """
    if construction not in CONSTRUCTIONS:
        raise ValueError(f"unknown construction {construction!r}")
    if measure not in MEASURES:
        raise ValueError(f"unknown measure {measure!r}")
    if measure == "schmidt_coefficient":
        if k is None or not 0 <= k < D:
            raise ValueError(f"schmidt_coefficient needs an index k in [0, {D - 1}]")
    grid = np.asarray(t_grid, dtype=float)
    if grid.ndim != 1 or len(grid) < 1 or not np.all(np.isfinite(grid)):
        raise ValueError("t grid must be a nonempty finite 1-D array")
    if np.any(np.diff(grid) <= 0.0):
        raise ValueError("t grid must be strictly ascending")

    values = []
    for t in grid:
        if measure == "g_concurrence" and construction == "graph":
            values.append(g_concurrence_closed_form(D, float(t)))
            continue
        omega = representative_state(construction, D, float(t))
        if measure == "entropy":
            values.append(entropy_of_entanglement(schmidt_spectrum(omega)))
        elif measure == "g_concurrence":
            values.append(g_concurrence_numeric(omega))
        else:
            values.append(float(schmidt_spectrum(omega)[k]))
    tag = measure if k is None else f"schmidt_coefficient({k})"
    return EntanglementCurve(t_grid=grid, values=np.asarray(values), measure=tag)


def spectra_spread(states) -> float:
    """Largest per-coefficient spread of Schmidt spectra across a set of states."""
    spectra = np.array([schmidt_spectrum(s) for s in states])
    return float(np.max(spectra.max(axis=0) - spectra.min(axis=0)))


def _cut_matrix(psi: np.ndarray, sites: tuple) -> np.ndarray:
    n = psi.ndim
    rest = tuple(i for i in range(n) if i not in sites)
    rows = int(np.prod([psi.shape[i] for i in sites]))
    return np.transpose(psi, sites + rest).reshape(rows, -1)


def _check_sites(psi: np.ndarray, sites) -> tuple:
    cleaned = tuple(sorted({int(s) for s in sites}))
    if not cleaned or len(cleaned) >= psi.ndim:
        raise ValueError("sites must be a nonempty proper subset of the sites")
    if cleaned[0] < 0 or cleaned[-1] >= psi.ndim:
        raise ValueError(f"site indices must lie in [0, {psi.ndim - 1}], got {sites}")
    return cleaned


def bipartition_spectrum(psi, sites) -> np.ndarray:
    """Schmidt spectrum across the cut (sites | rest) of an n-qudit amplitude tensor.

    Reshapes the tensor into the cut matrix and takes singular values, which
    avoids forming the reduced density matrix.
    """
    psi = np.asarray(psi, dtype=complex)
    cleaned = _check_sites(psi, sites)
    lam = np.linalg.svd(_cut_matrix(psi, cleaned), compute_uv=False) ** 2
    return lam / lam.sum()


def single_site_density(psi, site: int) -> np.ndarray:
    """Reduced density matrix of one site, as M M-dagger of the cut matrix."""
    psi = np.asarray(psi, dtype=complex)
    cleaned = _check_sites(psi, (site,))
    mat = _cut_matrix(psi, cleaned)
    return mat @ mat.conj().T
