"""Negativity, Wigner-Yanase skew information and local quantum uncertainty.

Generic routines take any two-qubit state; the ``*_family`` variants are the
closed forms for the X-state family in :mod:`qcorr.states`.
"""
import math
from dataclasses import dataclass, field

import numpy as np

from . import linalg
from .states import XStateParams, build_xstate, validate_density


@dataclass(frozen=True)
class LocalObservable:
    """K = n . sigma on qubit A, spectrum {+1, -1}."""
    bloch: tuple

    def __post_init__(self):
        n = np.asarray(self.bloch, dtype=float)
        if n.shape != (3,):
            raise ValueError("Bloch vector must have 3 components")
        norm = np.linalg.norm(n)
        if abs(norm - 1.0) > 1e-12:
            raise ValueError(f"Bloch vector must be unit norm, got |n| = {norm!r}")
        object.__setattr__(self, "bloch", tuple(float(x) for x in n))

    @classmethod
    def normalized(cls, n):
        n = np.asarray(n, dtype=float)
        return cls(tuple(n / np.linalg.norm(n)))

    def local_matrix(self):
        """2x2 operator on qubit A."""
        return sum(c * p for c, p in zip(self.bloch, linalg.PAULIS))

    def matrix(self):
        """4x4 operator K x I."""
        return linalg.kron(self.local_matrix(), linalg.IDENTITY2)


@dataclass(frozen=True)
class BetaBranches:
    beta1: float
    beta2: float
    beta3: float

    def max(self):
        return max(self.beta1, self.beta2, self.beta3)

    def as_tuple(self):
        return (self.beta1, self.beta2, self.beta3)


@dataclass(frozen=True)
class CorrelationReport:
    t: float
    params_t: XStateParams
    negativity: float
    lqu: float
    betas: BetaBranches
    w_eigs: tuple = field(default=())

    def to_json(self):
        return {
            "t": self.t,
            "r": self.params_t.r,
            "s": self.params_t.s,
            "negativity": self.negativity,
            "lqu": self.lqu,
            "beta1": self.betas.beta1,
            "beta2": self.betas.beta2,
            "beta3": self.betas.beta3,
            "w_eigs": list(self.w_eigs),
        }


def negativity(rho):
    """Sum over |eta| - eta for the eigenvalues eta of the partial transpose.

    Zero exactly for PPT states, 1 for a Bell state.
    """
    rho = validate_density(rho)
    eta = linalg.eigvalsh(linalg.partial_transpose(rho.matrix, "A"))
    return float(np.sum(np.abs(eta) - eta))


def pt_spectrum_family(params):
    """Partial-transpose eigenvalues (eta1..eta4) of a family state, in closed form."""
    r, s = params.r, params.s
    return (0.5, 2.0 * r - 0.5, 0.5 - r - s, 0.5 - r + s)


def negativity_family(params):
    eta = np.array(pt_spectrum_family(params))
    return float(np.sum(np.abs(eta) - eta))


def skew_information(rho, K):
    """Wigner-Yanase skew information -1/2 Tr([sqrt(rho), K]^2)."""
    rho = validate_density(rho)
    K = np.asarray(K)
    if linalg.hermitian_defect(K) > linalg.HERMITIAN_TOL:
        raise linalg.NotHermitianError("observable must be Hermitian")
    c = linalg.commutator(linalg.matrix_sqrt_psd(rho.matrix), K)
    return float(-0.5 * np.trace(c @ c).real)


def local_quantum_coherence(rho, observable):
    """Skew information of ``rho`` with respect to ``K x I``.

    ``observable`` is a :class:`LocalObservable` or a 2x2 Hermitian matrix.
    """
    if isinstance(observable, LocalObservable):
        K = observable.matrix()
    else:
        K = linalg.kron(observable, linalg.IDENTITY2)
    return skew_information(rho, K)


def w_matrix(rho):
    """3x3 real symmetric matrix W_ij = Tr(sqrt(rho) s_i sqrt(rho) s_j), s_i = sigma_i x I."""
    rho = validate_density(rho)
    root = linalg.matrix_sqrt_psd(rho.matrix)
    ops = [linalg.kron(p, linalg.IDENTITY2) for p in linalg.PAULIS]
    left = [root @ op for op in ops]
    w = np.array([[linalg.trace_product(left[i], left[j]).real for j in range(3)] for i in range(3)])
    return 0.5 * (w + w.T)


def lqu_generic(rho):
    """Local quantum uncertainty on qubit A: 1 - largest eigenvalue of W."""
    return min(max(1.0 - float(linalg.eigvalsh(w_matrix(rho))[-1]), 0.0), 1.0)


def optimal_observable(rho):
    """The local observable attaining the LQU: Bloch vector along W's top eigenvector."""
    w, v = linalg.hermitian_eig(w_matrix(rho))
    return LocalObservable.normalized(v[:, -1].real)


def beta_branches(params):
    r, s = params.r, params.s
    a, minus, plus = max(1.0 - 2.0 * r, 0.0), max(r - s, 0.0), max(r + s, 0.0)
    return BetaBranches(math.sqrt(a * minus), math.sqrt(a * plus), math.sqrt(minus * plus))


def lqu_family(params):
    """Closed-form LQU of a family state, 1 - 2 max(beta1, beta2, beta3)."""
    if not isinstance(params, XStateParams):
        params = XStateParams(*params)
    betas = beta_branches(params)
    return min(max(1.0 - 2.0 * betas.max(), 0.0), 1.0), betas


def lqu_asymptotic(r):
    """LQU of the s = 0 fixed point reached as t -> infinity."""
    return max(1.0 - 2.0 * max(math.sqrt(max(r * (1.0 - 2.0 * r), 0.0)), r), 0.0)


def report(params_t, t=0.0, with_w=False):
    """Correlation snapshot of a family state via the closed forms.

    With ``with_w`` the W-matrix eigenvalues are computed numerically as well.
    """
    lqu, betas = lqu_family(params_t)
    w_eigs = ()
    if with_w:
        w_eigs = tuple(float(x) for x in linalg.eigvalsh(w_matrix(build_xstate(params_t))))
    return CorrelationReport(float(t), params_t, negativity_family(params_t), lqu, betas, w_eigs)
