"""Dense complex-matrix kernels.

Everything else in the library is built on the three operations here:
functions of Hermitian matrices through the eigendecomposition, the polar
decomposition Z = P U of a complex symmetric matrix, and the Autonne-Takagi
factorization S = R R^T of a symmetric unitary.
"""

from __future__ import annotations

from typing import Callable, Sequence

import numpy as np

from .errors import (
    DomainError,
    NotHermitian,
    NotSymmetric,
    NotUnitary,
    SingularInput,
)
from .tolerances import DEFAULT_TOLERANCES, Tolerances


def as_complex_matrix(values, *, square: bool = True) -> np.ndarray:
    """Coerce to a complex 2-D array, rejecting NaN/Inf entries."""
    m = np.asarray(values, dtype=complex)
    if m.ndim != 2:
        raise ValueError(f"expected a 2-D matrix, got ndim={m.ndim}")
    if square and m.shape[0] != m.shape[1]:
        raise ValueError(f"matrix must be square, got shape {m.shape}")
    if not np.all(np.isfinite(m.real)) or not np.all(np.isfinite(m.imag)):
        raise ValueError("matrix entries must be finite")
    return m


def max_abs(m) -> float:
    """Max-entry modulus; zero for empty input."""
    a = np.asarray(m)
    return float(np.max(np.abs(a))) if a.size else 0.0


def symmetry_defect(m) -> float:
    m = np.asarray(m)
    return max_abs(m - m.T)


def hermiticity_defect(m) -> float:
    m = np.asarray(m)
    return max_abs(m - m.conj().T)


def unitarity_defect(m) -> float:
    m = np.asarray(m)
    return max_abs(m @ m.conj().T - np.eye(m.shape[0]))


def realness_defect(m) -> float:
    return max_abs(np.asarray(m).imag)


def is_symmetric(m, tol: float = 1e-9) -> bool:
    return symmetry_defect(m) <= tol * max(1.0, max_abs(m))


def is_hermitian(m, tol: float = 1e-9) -> bool:
    return hermiticity_defect(m) <= tol * max(1.0, max_abs(m))


def is_unitary(m, tol: float = 1e-9) -> bool:
    return unitarity_defect(m) <= tol


def is_real(m, tol: float = 1e-9) -> bool:
    return realness_defect(m) <= tol * max(1.0, max_abs(m))


def hermitian_eigh(
    m, tol: Tolerances = DEFAULT_TOLERANCES
) -> tuple[np.ndarray, np.ndarray]:
    """Eigendecomposition of a Hermitian matrix.

    Returns ascending real eigenvalues and a unitary matrix of column
    eigenvectors.  Raises :class:`NotHermitian` when the max-entry residual
    of ``m - m.conj().T`` exceeds the relative tolerance.
    """
    m = as_complex_matrix(m)
    if not is_hermitian(m, tol.rtol):
        raise NotHermitian(
            f"hermiticity defect {hermiticity_defect(m):.3e} exceeds tolerance"
        )
    w, q = np.linalg.eigh((m + m.conj().T) / 2.0)
    return w, q


def ordered_eigh(
    m, tol: Tolerances = DEFAULT_TOLERANCES
) -> tuple[np.ndarray, np.ndarray]:
    """Hermitian eigendecomposition with a deterministic eigenvector phase.

    Each column is rescaled so its first component of non-negligible modulus
    is real and positive.  Eigenvalues stay in ascending order; contracts
    downstream remain residual-based, the fixed phase only stabilizes output
    for repeated runs.
    """
    w, q = hermitian_eigh(m, tol)
    q = q.copy()
    for j in range(q.shape[1]):
        col = q[:, j]
        idx = np.nonzero(np.abs(col) > 1e-8 * max(1.0, max_abs(col)))[0]
        if idx.size:
            pivot = col[idx[0]]
            q[:, j] = col * (pivot.conjugate() / abs(pivot))
    return w, q


def hermitian_apply(
    m,
    f: Callable[[np.ndarray], np.ndarray],
    tol: Tolerances = DEFAULT_TOLERANCES,
) -> np.ndarray:
    """Evaluate a scalar function on a Hermitian matrix.

    Computes ``Q f(L) Q^dagger`` from the eigendecomposition ``m = Q L
    Q^dagger``.  ``f`` may be a NumPy ufunc or a plain scalar callable; it
    must be defined on every eigenvalue (e.g. ``log`` needs a positive
    spectrum), otherwise :class:`DomainError` is raised.
    """
    w, q = hermitian_eigh(m, tol)
    with np.errstate(all="ignore"):
        try:
            values = np.asarray(f(w), dtype=complex)
            if values.shape != w.shape:
                raise TypeError("scalar function did not broadcast")
        except (TypeError, ValueError):
            try:
                values = np.asarray([complex(f(x)) for x in w], dtype=complex)
            except (ValueError, ZeroDivisionError, OverflowError) as exc:
                raise DomainError(
                    f"function undefined on an eigenvalue: {exc}"
                ) from None
    if not np.all(np.isfinite(values.real)) or not np.all(np.isfinite(values.imag)):
        bad = w[~np.isfinite(values.real) | ~np.isfinite(values.imag)]
        raise DomainError(f"function is undefined at eigenvalue(s) {bad}")
    return (q * values[None, :]) @ q.conj().T


def polar_decompose_symmetric(
    z, tol: Tolerances = DEFAULT_TOLERANCES
) -> tuple[np.ndarray, np.ndarray]:
    """Polar decomposition Z = P U of a complex symmetric matrix.

    P = (Z Z^dagger)^(1/2) is Hermitian positive definite and U is unitary.
    Symmetry of Z makes U symmetric as well and gives the commutation
    P U = U conj(P) used throughout the squeezing algebra.

    Raises :class:`NotSymmetric` for asymmetric input and
    :class:`SingularInput` when sigma_min / sigma_max falls below the
    singularity threshold; only non-singular matrices define a valid
    multi-mode squeezing interaction.
    """
    zm = as_complex_matrix(z)
    scale = max(1.0, max_abs(zm))
    if symmetry_defect(zm) > tol.rtol * scale:
        raise NotSymmetric(
            f"symmetry defect {symmetry_defect(zm):.3e} exceeds tolerance"
        )
    gram = zm @ zm.conj().T
    w, q = np.linalg.eigh((gram + gram.conj().T) / 2.0)
    sigma = np.sqrt(np.clip(w, 0.0, None))
    if sigma[-1] == 0.0 or sigma[0] < tol.singular * sigma[-1]:
        raise SingularInput(
            f"sigma_min/sigma_max = {sigma[0]:.3e}/{sigma[-1]:.3e} below "
            f"threshold {tol.singular:.1e}"
        )
    p = (q * sigma[None, :]) @ q.conj().T
    p = (p + p.conj().T) / 2.0
    u = (q * (1.0 / sigma)[None, :]) @ q.conj().T @ zm
    return p, u


def symmetric_unitary_angles(
    s, tol: Tolerances = DEFAULT_TOLERANCES
) -> tuple[np.ndarray, np.ndarray]:
    """Joint real-orthogonal diagonalization of a symmetric unitary.

    For symmetric unitary S the real and imaginary parts commute, so a single
    real orthogonal Q gives S = Q e^{i L} Q^T with real angles L.  Re(S) is
    diagonalized first; inside each degenerate eigenspace (gap below the
    degeneracy tolerance times ||S||) Im(S) is re-diagonalized, which fixes
    the exactly-degenerate cases produced by structured graphs.  Angles are
    on the principal branch (-pi, pi], with -pi mapped to +pi.
    """
    sm = as_complex_matrix(s)
    n = sm.shape[0]
    if unitarity_defect(sm) > tol.rtol * n:
        raise NotUnitary(
            f"unitarity defect {unitarity_defect(sm):.3e} exceeds tolerance"
        )
    if symmetry_defect(sm) > tol.rtol * max(1.0, max_abs(sm)):
        raise NotSymmetric(
            f"symmetry defect {symmetry_defect(sm):.3e} exceeds tolerance"
        )
    re = (sm.real + sm.real.T) / 2.0
    im = (sm.imag + sm.imag.T) / 2.0
    w, q = np.linalg.eigh(re)
    gap = tol.degeneracy * max(1.0, float(np.linalg.norm(sm, 2)))
    groups = _cluster_ascending(w, gap)
    for g in groups:
        if len(g) > 1:
            block = q[:, g].T @ im @ q[:, g]
            _, v = np.linalg.eigh((block + block.T) / 2.0)
            q[:, g] = q[:, g] @ v
    d = np.einsum("ij,ij->j", q, sm @ q)
    angles = np.angle(d)
    angles = np.where(angles < -np.pi + 1e-12, angles + 2.0 * np.pi, angles)
    return q, angles


def takagi_symmetric_unitary(
    s, tol: Tolerances = DEFAULT_TOLERANCES
) -> np.ndarray:
    """Autonne-Takagi factor R of a symmetric unitary: R unitary, R R^T = S.

    Built as R = Q e^{i L / 2} from :func:`symmetric_unitary_angles`; the
    factorization is not unique, so callers must check it only through the
    residual ``R @ R.T - S``.
    """
    q, angles = symmetric_unitary_angles(s, tol)
    return q * np.exp(0.5j * angles)[None, :]


def _cluster_ascending(values: np.ndarray, gap: float) -> list[list[int]]:
    """Group indices of an ascending 1-D array into gap-separated clusters."""
    groups: list[list[int]] = []
    start = 0
    n = len(values)
    for i in range(1, n + 1):
        if i == n or values[i] - values[i - 1] > gap:
            groups.append(list(range(start, i)))
            start = i
    return groups


def spectrum_clusters(
    values: Sequence[float], gap: float
) -> list[list[int]]:
    """Public wrapper over the ascending-cluster helper (ascending input)."""
    return _cluster_ascending(np.asarray(values, dtype=float), gap)
