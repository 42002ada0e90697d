"""Build members of the two-parameter X-state family and check what makes them physical.

Run: python demos/state_family.py
"""
import numpy as np

from qcorr.states import InvalidParamsError, XStateParams, build_xstate, extract_params

np.set_printoptions(precision=3, suppress=True)

# r is the weight on |00>,|11>; s is the coherence between them.
p = XStateParams(0.37, 0.35)
rho = build_xstate(p)
print("rho(0.37, 0.35) =\n", rho.matrix.real)
print("spectrum:", p.spectrum.as_tuple())

# A density matrix in the family can be read back to (r, s).
print("recovered:", extract_params(rho))

# Outside the triangle |s| <= r <= 1/2, some eigenvalue goes negative.
try:
    XStateParams(0.2, 0.3)
except InvalidParamsError as err:
    print("rejected:", err)

# The two Bell-like corners and the r = 0 corner are pure.
for r, s in [(0.0, 0.0), (0.5, 0.5), (0.5, -0.5)]:
    m = build_xstate(XStateParams(r, s)).matrix
    print(f"({r}, {s}) purity = {np.trace(m @ m).real:.3f}")
