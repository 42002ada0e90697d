"""Four dynamical regimes of entanglement and LQU under collective dephasing.

Frozen entanglement, sudden death with growing LQU, sudden death with an LQU
kink, and sudden death with decaying LQU. Each pair is sampled on a coarse
time grid and printed as a table.
"""
import numpy as np

from qcorr import analysis
from qcorr.channel import ChannelParams
from qcorr.states import XStateParams

ch = ChannelParams(1.0)
pairs = [(0.15, 0.07), (0.32, 0.3), (0.37, 0.35), (0.45, 0.35)]
show = np.linspace(0, 3, 7)

for r, s in pairs:
    p = XStateParams(r, s)
    tag = analysis.classify(p)
    ev = analysis.event_times(p, ch)
    traj = analysis.trajectory(p, ch, t_max=3.0, n_steps=301)
    print(f"\n({r}, {s})  region={tag.region.value}  lqu regime={tag.subregion and tag.subregion.value}")
    print(f"  t_sd={ev.t_sd}  t_st={ev.t_st}")
    for t in show:
        k = int(np.argmin(np.abs(traj.times - t)))
        print(f"  t={traj.times[k]:.2f}  N={traj.negativity[k]:.4f}  LQU={traj.lqu[k]:.4f}")
