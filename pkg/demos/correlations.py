"""Negativity and local quantum uncertainty (LQU), computed two ways.

The generic routes work for any two-qubit state: a partial-transpose
eigensolve for the negativity and the top eigenvalue of W for the LQU. On the
X-state family both reduce to closed forms.
"""
import numpy as np

from qcorr.correlations import (
    LocalObservable, beta_branches, local_quantum_coherence, lqu_family, lqu_generic,
    negativity, negativity_family, optimal_observable, w_matrix,
)
from qcorr.states import XStateParams, build_xstate, random_density

for r, s in [(0.15, 0.07), (0.32, 0.3), (0.37, 0.35), (0.45, 0.35)]:
    p = XStateParams(r, s)
    rho = build_xstate(p)
    lqu, b = lqu_family(p)
    print(f"({r}, {s})  N={negativity_family(p):.4f} (eig {negativity(rho):.4f})  "
          f"LQU={lqu:.6f} (W {lqu_generic(rho):.6f})  betas={b.beta1:.4f},{b.beta2:.4f},{b.beta3:.4f}")

# The LQU is the smallest skew information over local observables n.sigma on qubit A.
rng = np.random.default_rng(3)
rho = random_density(rng)
print("\nW for a random state:\n", np.round(w_matrix(rho), 4))
trial = min(local_quantum_coherence(rho, LocalObservable.normalized(rng.normal(size=3))) for _ in range(500))
best = optimal_observable(rho)
print(f"best of 500 random observables: {trial:.6f}")
print(f"top eigenvector of W, n={np.round(best.bloch, 4)}: {local_quantum_coherence(rho, best):.6f}")
print(f"LQU: {lqu_generic(rho):.6f}")
