"""Dense symmetric eigenvalues by cyclic Jacobi rotations."""
from __future__ import annotations

import numpy as np

JACOBI_MAX_DIM = 200


def jacobi_eigenvalues(A, tol: float = 1e-12, max_sweeps: int = 60) -> np.ndarray:
    """Eigenvalues of a real symmetric matrix, ascending.

    Classical cyclic Jacobi: each sweep zeroes every off-diagonal entry once by
    a plane rotation. Stops when the off-diagonal Frobenius norm falls below
    ``tol`` times the full norm.
    """
    a = np.array(A, dtype=float, copy=True)
    n = a.shape[0]
    if a.shape != (n, n):
        raise ValueError("matrix must be square")
    if not np.allclose(a, a.T):
        raise ValueError("matrix must be symmetric")
    scale = np.linalg.norm(a) or 1.0
    for _ in range(max_sweeps):
        off = np.sqrt(max(np.sum(a * a) - np.sum(np.diag(a) ** 2), 0.0))
        if off <= tol * scale:
            break
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = a[p, q]
                if abs(apq) <= 1e-300:
                    continue
                theta = (a[q, q] - a[p, p]) / (2.0 * apq)
                t = np.sign(theta) / (abs(theta) + np.sqrt(theta * theta + 1.0)) if theta else 1.0
                c = 1.0 / np.sqrt(t * t + 1.0)
                s = t * c
                ap, aq = a[:, p].copy(), a[:, q].copy()
                a[:, p] = c * ap - s * aq
                a[:, q] = s * ap + c * aq
                rp, rq = a[p, :].copy(), a[q, :].copy()
                a[p, :] = c * rp - s * rq
                a[q, :] = s * rp + c * rq
    return np.sort(np.diag(a))


def symmetric_eigenvalues(A, max_dim: int = JACOBI_MAX_DIM):
    """(eigenvalues, method): Jacobi up to ``max_dim``, LAPACK beyond."""
    A = np.asarray(A, dtype=float)
    if A.shape[0] <= max_dim:
        return jacobi_eigenvalues(A), "jacobi"
    return np.linalg.eigvalsh(A), "lapack"
