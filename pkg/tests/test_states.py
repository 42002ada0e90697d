import json

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from qcorr import linalg
from qcorr.states import (
    DensityMatrix, InvalidParamsError, InvalidStateError, NotInFamilyError,
    XStateParams, build_xstate, extract_params, random_density, swap_qubits,
    validate_density,
)


@st.composite
def valid_params(draw):
    r = draw(st.floats(0, 0.5))
    s = draw(st.floats(-1, 1)) * r
    return XStateParams(r, s)


def test_bell_corner_is_psi_plus():
    psi = np.array([0, 1, 1, 0]) / np.sqrt(2)
    np.testing.assert_allclose(build_xstate(XStateParams(0, 0)).matrix, np.outer(psi, psi))


def test_classical_mixture_corner():
    np.testing.assert_array_equal(build_xstate(XStateParams(0.5, 0)).matrix,
                                  np.diag([0.5, 0, 0, 0.5]))


def test_unphysical_params_name_the_eigenvalue():
    with pytest.raises(InvalidParamsError, match="lambda3"):
        XStateParams(0.2, 0.3)
    with pytest.raises(InvalidParamsError, match="lambda4"):
        XStateParams(0.2, -0.3)
    with pytest.raises(InvalidParamsError, match="lambda2"):
        XStateParams(0.6, 0.0)


@pytest.mark.parametrize("r,s", [(0, 0), (0.5, 0.5), (0.5, -0.5), (0.25, 0.25), (0.5, 0)])
def test_boundary_points_are_valid(r, s):
    validate_density(build_xstate(XStateParams(r, s)).matrix)


@settings(max_examples=200, deadline=None)
@given(valid_params())
def test_spectrum_matches_closed_form(p):
    w = linalg.eigvalsh(build_xstate(p))
    np.testing.assert_allclose(w, sorted(p.spectrum.as_tuple()), atol=1e-10)
    assert abs(sum(p.spectrum.as_tuple()) - 1) < 1e-15


@settings(max_examples=200, deadline=None)
@given(valid_params())
def test_round_trip(p):
    q = extract_params(build_xstate(p))
    assert abs(q.r - p.r) <= 1e-12 and abs(q.s - p.s) <= 1e-12


@settings(max_examples=100, deadline=None)
@given(valid_params())
def test_swap_invariance(p):
    rho = build_xstate(p).matrix
    np.testing.assert_array_equal(swap_qubits(rho), rho)


def test_validate_accepts_and_rejects():
    validate_density(np.eye(4) / 4)
    validate_density(build_xstate(XStateParams(0.15, 0.07)).matrix)
    with pytest.raises(InvalidStateError, match="negative eigenvalue"):
        validate_density(np.diag([0.6, 0.6, -0.1, -0.1]))


def test_validate_reports_every_violation():
    bad = np.array([[0.5, 1, 0, 0], [0, 0.5, 0, 0], [0, 0, 0.5, 0], [0, 0, 0, -0.1]])
    with pytest.raises(InvalidStateError) as err:
        validate_density(bad)
    assert len(err.value.violations) == 3


def test_validate_shape():
    with pytest.raises(InvalidStateError):
        validate_density(np.eye(2) / 2)


def test_extract_rejects_off_family():
    with pytest.raises(NotInFamilyError) as err:
        extract_params(DensityMatrix(np.eye(4) / 4))
    assert err.value.residual == pytest.approx(0.25)


def test_density_matrix_is_immutable():
    rho = build_xstate(XStateParams(0.2, 0.1))
    with pytest.raises(ValueError):
        rho.matrix[0, 0] = 1


def test_json_round_trip(rng):
    p = XStateParams(0.32, 0.3)
    assert XStateParams.from_json(json.loads(json.dumps(p.to_json()))) == p
    rho = random_density(rng)
    back = DensityMatrix.from_json(json.loads(json.dumps(rho.to_json())))
    np.testing.assert_array_equal(back.matrix, rho.matrix)
