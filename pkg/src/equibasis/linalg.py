"""Complex linear-algebra layer shared by the basis constructions.

Everything here is a thin, contract-checking wrapper around LAPACK (via
numpy): SVD for Schmidt spectra, partial-pivot LU for determinants, and
Hermitian eigensolves for reduced density matrices.
"""

import numpy as np

HERMITIAN_TOL = 1e-10


def as_complex_matrix(a) -> np.ndarray:
    """Validate `a` as a 2-D complex array with finite entries."""
    m = np.asarray(a, dtype=complex)
    if m.ndim != 2:
        raise ValueError(f"expected a 2-D array, got ndim={m.ndim}")
    if m.shape[0] < 1 or m.shape[1] < 1:
        raise ValueError(f"matrix must be at least 1x1, got shape {m.shape}")
    if not np.all(np.isfinite(m)):
        raise ValueError("matrix entries must be finite")
    return m


def _require_square(m: np.ndarray) -> None:
    if m.shape[0] != m.shape[1]:
        raise ValueError(f"matrix must be square, got shape {m.shape}")


def matmul(a, b) -> np.ndarray:
    """Standard matrix product with an explicit shape check."""
    a = as_complex_matrix(a)
    b = as_complex_matrix(b)
    if a.shape[1] != b.shape[0]:
        raise ValueError(f"incompatible shapes {a.shape} x {b.shape}")
    return a @ b


def conj_transpose(a) -> np.ndarray:
    """Conjugate transpose."""
    return as_complex_matrix(a).conj().T


def singular_values(a) -> np.ndarray:
    """Singular values of a square matrix, descending and nonnegative."""
    a = as_complex_matrix(a)
    _require_square(a)
    return np.linalg.svd(a, compute_uv=False)


def determinant(a) -> complex:
    """Determinant via partial-pivot LU."""
    a = as_complex_matrix(a)
    _require_square(a)
    return complex(np.linalg.det(a))


def log_abs_determinant(a) -> float:
    """log|det a| accumulated from LU pivots (-inf for a singular matrix).

    Immune to under/overflow of the determinant itself, which matters for
    the |det|^(2/D) entanglement monotone at large dimension.
    """
    a = as_complex_matrix(a)
    _require_square(a)
    _, logabs = np.linalg.slogdet(a)
    return float(logabs)


def pivot_log_abs_determinant(a) -> float:
    """log|det a| via partial-pivot elimination, accumulating pivot logs.

    Runs in extended (clongdouble) arithmetic and never forms the determinant
    itself, so nothing under/overflows on the way and the result stays
    meaningful well past the conditioning range of double LAPACK. Pass
    clongdouble entries to benefit fully; double entries are upcast as-is.
    """
    work = np.asarray(a, dtype=np.clongdouble)
    if work.ndim != 2 or work.shape[0] != work.shape[1]:
        raise ValueError(f"matrix must be square, got shape {work.shape}")
    if not np.all(np.isfinite(work)):
        raise ValueError("matrix entries must be finite")
    work = work.copy()
    n = work.shape[0]
    log_abs = 0.0
    for col in range(n):
        pivot_row = col + int(np.argmax(np.abs(work[col:, col])))
        pivot = work[pivot_row, col]
        if pivot == 0:
            return float("-inf")
        if pivot_row != col:
            work[[col, pivot_row]] = work[[pivot_row, col]]
        log_abs += float(np.log(np.abs(pivot)))
        factors = work[col + 1 :, col] / pivot
        work[col + 1 :, col + 1 :] -= np.outer(factors, work[col, col + 1 :])
    return log_abs


def hermitian_eigenvalues(a, tol: float = HERMITIAN_TOL) -> np.ndarray:
    """Real eigenvalues of a Hermitian matrix, descending.

    Rejects inputs whose max entrywise deviation from self-adjointness
    exceeds `tol`.
    """
    a = as_complex_matrix(a)
    _require_square(a)
    deviation = float(np.max(np.abs(a - a.conj().T)))
    if deviation > tol:
        raise ValueError(
            f"matrix is not Hermitian: max |a - a^dag| = {deviation:.3e} exceeds {tol:.1e}"
        )
    return np.linalg.eigvalsh(a)[::-1]


def gram_residual(states) -> float:
    """Max deviation of the Gram matrix of the given states from the identity.

    `states` is an iterable of equal-size complex arrays; each is flattened
    and treated as one vector.
    """
    vectors = np.array([np.ravel(np.asarray(s, dtype=complex)) for s in states])
    gram = vectors.conj() @ vectors.T
    return float(np.max(np.abs(gram - np.eye(len(vectors)))))
