"""Small dense linear algebra for two-qubit problems.

Everything here works on plain numpy arrays (anything accepted by
``np.asarray``, including :class:`qcorr.states.DensityMatrix`). Dimensions are
tiny (2, 3 or 4), so clarity wins over speed.
"""
import math
from typing import NamedTuple

import numpy as np

HERMITIAN_TOL = 1e-10
PSD_TOL = 1e-10
JACOBI_TOL = 1e-14
MAX_SWEEPS = 64

IDENTITY2 = np.eye(2, dtype=complex)
SIGMA_X = np.array([[0, 1], [1, 0]], dtype=complex)
SIGMA_Y = np.array([[0, -1j], [1j, 0]], dtype=complex)
SIGMA_Z = np.array([[1, 0], [0, -1]], dtype=complex)
PAULIS = (SIGMA_X, SIGMA_Y, SIGMA_Z)

SWAP = np.array(
    [[1, 0, 0, 0],
     [0, 0, 1, 0],
     [0, 1, 0, 0],
     [0, 0, 0, 1]], dtype=complex)


class NotHermitianError(ValueError):
    pass


class NotPSDError(ValueError):
    pass


class EigenDecomposition(NamedTuple):
    """Ascending eigenvalues and the matching orthonormal eigenvector columns."""
    eigenvalues: np.ndarray
    eigenvectors: np.ndarray


def hermitian_defect(a):
    a = np.asarray(a)
    return float(np.max(np.abs(a - a.conj().T))) if a.size else 0.0


def _check_square(a):
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise ValueError(f"expected a square matrix, got shape {a.shape}")


def _offdiag_norm(a):
    n = len(a)
    return math.sqrt(sum(abs(a[i][j]) ** 2 for i in range(n) for j in range(n) if i != j))


def _fix_phases(vecs, tol=1e-12):
    # first component above tol made real positive
    out = vecs.copy()
    for k in range(out.shape[1]):
        col = out[:, k]
        idx = np.flatnonzero(np.abs(col) > tol)
        if idx.size:
            x = col[idx[0]]
            out[:, k] = col * (np.conj(x) / abs(x))
            out[idx[0], k] = abs(x)
    return out


def jacobi_eigh(a, tol=JACOBI_TOL, max_sweeps=MAX_SWEEPS):
    """Cyclic Jacobi diagonalization of a Hermitian (or real symmetric) matrix.

    Each rotation first strips the phase of the pivot element and then applies
    the usual real Jacobi rotation, so the complex case needs no embedding.
    Sweeps stop once the off-diagonal Frobenius norm drops below
    ``tol * max(1, ||a||_F)``. Plain Python scalars are used on purpose: for
    n <= 4 they beat numpy's per-call overhead by a wide margin.

    Returns
    -------
    w : (n,) float array, unsorted
    v : (n, n) array whose columns are eigenvectors
    """
    arr = np.asarray(a)
    is_complex = np.iscomplexobj(arr)
    a = [[complex(x) for x in row] for row in arr.tolist()]
    n = len(a)
    v = [[1.0 + 0j if i == j else 0j for j in range(n)] for i in range(n)]
    threshold = tol * max(1.0, float(np.linalg.norm(arr)))

    for _ in range(max_sweeps):
        if _offdiag_norm(a) < threshold:
            break
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = a[p][q]
                mag = abs(apq)
                if mag == 0.0:
                    continue
                phase = apq / mag
                theta = (a[q][q].real - a[p][p].real) / (2.0 * mag)
                if abs(theta) > 1e150:
                    t = 0.5 / theta
                else:
                    t = math.copysign(1.0, theta) / (abs(theta) + math.sqrt(theta * theta + 1.0))
                c = 1.0 / math.sqrt(t * t + 1.0)
                s = t * c
                # G = [[c, s e^{i phi}], [-s e^{-i phi}, c]] on (p, q); A <- G^H A G
                sp, sm = s * phase, s * phase.conjugate()
                for m in (a, v):
                    for row in m:
                        xp, xq = row[p], row[q]
                        row[p] = c * xp - sm * xq
                        row[q] = sp * xp + c * xq
                rp, rq = a[p], a[q]
                for k in range(n):
                    xp, xq = rp[k], rq[k]
                    rp[k] = c * xp - sp * xq
                    rq[k] = sm * xp + c * xq
                a[p][q] = a[q][p] = 0j
    else:
        if _offdiag_norm(a) >= threshold:
            raise np.linalg.LinAlgError("Jacobi iteration did not converge")

    w = np.array([a[i][i].real for i in range(n)])
    v = np.array(v)
    return w, (v if is_complex else v.real.copy())


def hermitian_eig(a, tol=HERMITIAN_TOL):
    """Full eigendecomposition of a Hermitian matrix.

    Eigenvalues come back ascending; every eigenvector has its first non-zero
    component real and positive, so the output is reproducible run to run.

    Raises
    ------
    NotHermitianError
        If ``a`` deviates from its conjugate transpose by more than ``tol``.
    """
    a = np.asarray(a)
    _check_square(a)
    defect = hermitian_defect(a)
    if defect > tol:
        raise NotHermitianError(f"matrix is not Hermitian (max |A - A^H| = {defect:.3e})")
    a = 0.5 * (a + a.conj().T)
    w, v = jacobi_eigh(a)
    order = np.argsort(w, kind="stable")
    return EigenDecomposition(w[order], _fix_phases(v[:, order]))


def eigvalsh(a):
    return hermitian_eig(a).eigenvalues


def matrix_sqrt_psd(a, tol=PSD_TOL):
    """Principal square root of a positive semidefinite Hermitian matrix.

    Eigenvalues in ``[-tol, 0)`` are treated as round-off and clamped to zero,
    as are positive ones below ``8 * eps * max(eigenvalue)``: their square
    roots (~1e-8) would otherwise dominate the error for rank-deficient input.
    """
    w, v = hermitian_eig(a)
    if w[0] < -tol:
        raise NotPSDError(f"matrix has eigenvalue {w[0]:.3e} < -{tol:g}")
    cutoff = 8 * np.finfo(float).eps * max(w[-1], 0.0)
    w = np.where(w <= cutoff, 0.0, w)
    root = (v * np.sqrt(w)) @ v.conj().T
    return 0.5 * (root + root.conj().T)


def partial_transpose(rho, subsystem="A"):
    """Transpose one qubit of a 4x4 two-qubit operator.

    ``subsystem`` is ``"A"`` (first tensor factor) or ``"B"``.
    """
    rho = np.asarray(rho)
    if rho.shape != (4, 4):
        raise ValueError(f"expected a 4x4 two-qubit operator, got shape {rho.shape}")
    t = rho.reshape(2, 2, 2, 2)  # (a, b, a', b')
    if subsystem == "A":
        t = t.transpose(2, 1, 0, 3)
    elif subsystem == "B":
        t = t.transpose(0, 3, 2, 1)
    else:
        raise ValueError(f"subsystem must be 'A' or 'B', not {subsystem!r}")
    return t.reshape(4, 4).copy()


def kron(a, b):
    return np.kron(np.asarray(a), np.asarray(b))


def dag(a):
    return np.asarray(a).conj().T


def commutator(a, b):
    a, b = np.asarray(a), np.asarray(b)
    return a @ b - b @ a


def trace_product(*mats):
    """Tr(m1 m2 ... mk) as a complex number."""
    out = np.asarray(mats[0])
    for m in mats[1:]:
        out = out @ np.asarray(m)
    return complex(np.trace(out))
