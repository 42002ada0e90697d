"""Two-qubit density matrices and the two-parameter X-state family.

The family is

    rho(r, s) = 1/2 * [[2r,     0,      0,    2s],
                       [ 0,  1-2r,   1-2r,     0],
                       [ 0,  1-2r,   1-2r,     0],
                       [2s,     0,      0,    2r]]

with spectrum {0, 1-2r, r-s, r+s}; it is a valid state on the closed triangle
``|s| <= r <= 1/2``.
"""
from dataclasses import dataclass

import numpy as np

from . import linalg

TRACE_TOL = 1e-12
HERMITIAN_TOL = 1e-12
PSD_TOL = 1e-10
FAMILY_TOL = 1e-9


class InvalidStateError(ValueError):
    """Raised when a matrix fails one or more density-matrix checks."""

    def __init__(self, violations):
        self.violations = list(violations)
        super().__init__("; ".join(self.violations))


class InvalidParamsError(ValueError):
    pass


class NotInFamilyError(ValueError):
    def __init__(self, message, residual):
        self.residual = residual
        super().__init__(message)


def _frozen(a):
    a = np.array(a, dtype=complex)
    a.setflags(write=False)
    return a


@dataclass(frozen=True, eq=False)
class DensityMatrix:
    """A validated 4x4 two-qubit state. Construct via :func:`validate_density`."""
    matrix: np.ndarray

    def __post_init__(self):
        object.__setattr__(self, "matrix", _frozen(self.matrix))

    def __array__(self, dtype=None, copy=None):
        return self.matrix if dtype is None else self.matrix.astype(dtype)

    def __getitem__(self, idx):
        return self.matrix[idx]

    def to_json(self):
        """Row-major nested list of ``[re, im]`` pairs."""
        return [[[float(z.real), float(z.imag)] for z in row] for row in self.matrix]

    @classmethod
    def from_json(cls, data):
        arr = np.array(data, dtype=float)
        return validate_density(arr[..., 0] + 1j * arr[..., 1])


@dataclass(frozen=True)
class FamilySpectrum:
    lambda1: float
    lambda2: float
    lambda3: float
    lambda4: float

    def as_tuple(self):
        return (self.lambda1, self.lambda2, self.lambda3, self.lambda4)


@dataclass(frozen=True)
class XStateParams:
    """Family coordinates ``(r, s)``. Physicality is checked on construction."""
    r: float
    s: float

    def __post_init__(self):
        object.__setattr__(self, "r", float(self.r))
        object.__setattr__(self, "s", float(self.s))
        problems = param_violations(self.r, self.s)
        if problems:
            raise InvalidParamsError(
                f"unphysical parameters r={self.r!r}, s={self.s!r}: " + "; ".join(problems))

    @property
    def spectrum(self):
        r, s = self.r, self.s
        return FamilySpectrum(0.0, 1.0 - 2.0 * r, r - s, r + s)

    def mirrored(self):
        """The s -> -s partner state."""
        return XStateParams(self.r, -self.s)

    def to_json(self):
        return {"r": self.r, "s": self.s}

    @classmethod
    def from_json(cls, data):
        return cls(data["r"], data["s"])


def param_violations(r, s):
    """Human-readable list of violated eigenvalue constraints (empty if valid)."""
    out = []
    if not (np.isfinite(r) and np.isfinite(s)):
        return ["r and s must be finite"]
    if r < 0.0:
        out.append(f"r = {r!r} < 0 (lambda4 + lambda3 = 2r must be >= 0)")
    if 1.0 - 2.0 * r < 0.0:
        out.append(f"lambda2 = 1 - 2r = {1.0 - 2.0 * r!r} < 0")
    if r - s < 0.0:
        out.append(f"lambda3 = r - s = {r - s!r} < 0")
    if r + s < 0.0:
        out.append(f"lambda4 = r + s = {r + s!r} < 0")
    return out


def is_physical(r, s):
    return not param_violations(r, s)


def xstate_matrix(r, s):
    """Raw family matrix, no validation."""
    a = 1.0 - 2.0 * r
    return 0.5 * np.array(
        [[2 * r, 0, 0, 2 * s],
         [0, a, a, 0],
         [0, a, a, 0],
         [2 * s, 0, 0, 2 * r]], dtype=complex)


def build_xstate(params):
    """Density matrix of the family member ``params``."""
    if not isinstance(params, XStateParams):
        params = XStateParams(*params)
    return DensityMatrix(xstate_matrix(params.r, params.s))


def validate_density(matrix):
    """Check trace, Hermiticity and positivity; wrap as :class:`DensityMatrix`.

    Every violated condition is reported in the raised
    :class:`InvalidStateError`.
    """
    if isinstance(matrix, DensityMatrix):
        return matrix
    a = np.asarray(matrix, dtype=complex)
    if a.shape != (4, 4):
        raise InvalidStateError([f"shape {a.shape} is not (4, 4)"])
    if not np.all(np.isfinite(a)):
        raise InvalidStateError(["matrix has non-finite entries"])

    violations = []
    tr = np.trace(a)
    if abs(tr - 1.0) > TRACE_TOL:
        violations.append(f"trace {tr.real:.6g}{tr.imag:+.3g}j differs from 1")
    defect = linalg.hermitian_defect(a)
    if defect > HERMITIAN_TOL:
        violations.append(f"not Hermitian (max |A - A^H| = {defect:.3e})")
    herm = 0.5 * (a + a.conj().T)
    wmin = linalg.hermitian_eig(herm).eigenvalues[0]
    if wmin < -PSD_TOL:
        violations.append(f"negative eigenvalue {wmin:.6g}")
    if violations:
        raise InvalidStateError(violations)
    return DensityMatrix(a)


def family_residual(rho):
    """Max-abs distance of ``rho`` from the family template built from its own
    ``r = rho[0,0]`` and ``s = Re rho[0,3]``."""
    a = np.asarray(rho)
    r, s = a[0, 0].real, a[0, 3].real
    return float(np.max(np.abs(a - xstate_matrix(r, s)))), r, s


def extract_params(rho, tol=FAMILY_TOL):
    """Inverse of :func:`build_xstate`.

    Raises
    ------
    NotInFamilyError
        If ``rho`` is further than ``tol`` (max-abs) from the family shape.
    """
    residual, r, s = family_residual(rho)
    if residual > tol:
        raise NotInFamilyError(
            f"state is not in the X-state family (max residual {residual:.3e})", residual)
    r = min(max(r, 0.0), 0.5)
    return XStateParams(r, min(max(s, -r), r))


def random_density(rng, rank=4):
    """Random state G G^H / Tr(G G^H) with a complex Gaussian G of shape (4, rank)."""
    g = rng.normal(size=(4, rank)) + 1j * rng.normal(size=(4, rank))
    m = g @ g.conj().T
    return DensityMatrix(m / np.trace(m).real)


def random_pure(rng):
    psi = rng.normal(size=4) + 1j * rng.normal(size=4)
    psi /= np.linalg.norm(psi)
    return psi


def random_params(rng, r_range=(0.0, 0.5)):
    """Uniform-ish sample from the physical triangle, restricted to ``r_range``."""
    r = rng.uniform(*r_range)
    s = rng.uniform(-r, r)
    return XStateParams(r, s)


def swap_qubits(rho):
    a = np.asarray(rho)
    return linalg.SWAP @ a @ linalg.SWAP
