"""Region geometry, event times and trajectories for the X-state family.

Under collective dephasing a family state moves on a vertical line of the
(r, s) triangle toward s = 0. Where it starts decides what happens:

* red, r < 1/4: negativity 1 - 4r never changes;
* green / blue, r + |s| > 1/2: negativity dies at a finite time t_sd;
* gray: separable from the start.

The LQU regime depends on where ``|s|e^{-2 Gamma t}`` sits relative to 3r - 1,
which is where the beta2 (or beta1) and beta3 branches cross.
"""
import enum
import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from typing import Optional

import numpy as np

from . import linalg
from .channel import ChannelParams, _channel, apply_dephasing, evolve_params
from .correlations import (
    CorrelationReport, lqu_asymptotic, lqu_family, lqu_generic, negativity,
    negativity_family, pt_spectrum_family, report, w_matrix,
)
from .states import XStateParams, build_xstate, is_physical

BOUNDARY_TOL = 1e-12
BISECT_TOL = 1e-12
BISECT_SPAN = 50.0  # bracket [0, 50/Gamma]
ENDPOINT_TOL = 1e-8


class Region(str, enum.Enum):
    RED_INVARIANT = "RED_INVARIANT"
    GREEN_SD = "GREEN_SD"
    BLUE_SD = "BLUE_SD"
    GRAY_SEPARABLE = "GRAY_SEPARABLE"
    BOUNDARY = "BOUNDARY"


class SubRegion(str, enum.Enum):
    MONOTONE_LQU_GROWTH = "MONOTONE_LQU_GROWTH"
    SUDDEN_CHANGE = "SUDDEN_CHANGE"
    MONOTONE_LQU_DECAY = "MONOTONE_LQU_DECAY"


@dataclass(frozen=True)
class RegionTag:
    region: Region
    subregion: Optional[SubRegion] = None

    @property
    def entangled(self):
        return self.region in (Region.RED_INVARIANT, Region.GREEN_SD, Region.BLUE_SD)

    def to_json(self):
        return {"region": self.region.value,
                "subregion": self.subregion.value if self.subregion else None}


@dataclass(frozen=True)
class EventTimes:
    t_sd: Optional[float] = None
    t_st: Optional[float] = None

    def to_json(self):
        return {"t_sd": self.t_sd, "t_st": self.t_st}


@dataclass(frozen=True)
class Trajectory:
    params: XStateParams
    channel: ChannelParams
    times: np.ndarray
    reports: tuple
    events: EventTimes
    region: RegionTag
    endpoint_residual: float = 0.0

    @property
    def negativity(self):
        return np.array([rep.negativity for rep in self.reports])

    @property
    def lqu(self):
        return np.array([rep.lqu for rep in self.reports])

    @property
    def betas(self):
        return np.array([rep.betas.as_tuple() for rep in self.reports])

    def __len__(self):
        return len(self.reports)


def lqu_regime(params, tol=BOUNDARY_TOL):
    """How the LQU of ``params`` evolves; ``None`` on the fixed line s = 0.

    Ties on 3r - |s| = 1 go to the decay side, ties on r = 1/3 to growth.
    """
    sigma = abs(params.s)
    if sigma == 0.0:
        return None
    if 3.0 * params.r - sigma >= 1.0 - tol:
        return SubRegion.MONOTONE_LQU_DECAY
    if params.r > 1.0 / 3.0 + tol:
        return SubRegion.SUDDEN_CHANGE
    return SubRegion.MONOTONE_LQU_GROWTH


def classify(params, allow_boundary=True, tol=BOUNDARY_TOL):
    """Region of the (r, s) triangle a family state sits in.

    Points whose eta2, eta3 or eta4 is zero within ``tol`` are tagged
    ``BOUNDARY``; with ``allow_boundary=False`` they fall to the separable side
    instead.
    """
    _, e2, e3, e4 = pt_spectrum_family(params)
    if allow_boundary and min(abs(e2), abs(e3), abs(e4)) <= tol:
        return RegionTag(Region.BOUNDARY)
    if e2 < -tol:
        return RegionTag(Region.RED_INVARIANT)
    if e3 < -tol:
        return RegionTag(Region.GREEN_SD, lqu_regime(params, tol))
    if e4 < -tol:
        return RegionTag(Region.BLUE_SD, lqu_regime(params, tol))
    return RegionTag(Region.GRAY_SEPARABLE)


def sudden_death_time(params, ch=None):
    """Time at which a green/blue state becomes separable, else ``None``.

    States on r = 1/2 only get there asymptotically and return ``None``.
    """
    ch = _channel(ch)
    tag = classify(params, allow_boundary=False)
    if tag.region not in (Region.GREEN_SD, Region.BLUE_SD) or params.r >= 0.5:
        return None
    sigma = abs(params.s)
    return -math.log((1.0 - 2.0 * params.r) / (2.0 * sigma)) / (2.0 * ch.damping_rate)


def sudden_transition_time(params, ch=None):
    """Time at which the LQU switches from the beta2 (beta1) branch to beta3.

    Defined whenever r > 1/3 and 3r - |s| < 1, whether or not the state is
    entangled.
    """
    ch = _channel(ch)
    if lqu_regime(params) is not SubRegion.SUDDEN_CHANGE:
        return None
    return -math.log((3.0 * params.r - 1.0) / abs(params.s)) / (2.0 * ch.damping_rate)


def event_times(params, ch=None):
    return EventTimes(sudden_death_time(params, ch), sudden_transition_time(params, ch))


def bisect(f, lo, hi, tol=BISECT_TOL, max_iter=200):
    """Root of ``f`` on ``[lo, hi]`` by bisection; signs at the ends must differ."""
    flo, fhi = f(lo), f(hi)
    if flo == 0.0:
        return lo
    if fhi == 0.0:
        return hi
    if (flo > 0) == (fhi > 0):
        raise ValueError("root is not bracketed")
    for _ in range(max_iter):
        mid = 0.5 * (lo + hi)
        fmid = f(mid)
        if fmid == 0.0:
            return mid
        if (fmid > 0) == (flo > 0):
            lo, flo = mid, fmid
        else:
            hi = mid
        if hi - lo <= tol:
            break
    return 0.5 * (lo + hi)


def sudden_death_time_numeric(params, ch=None):
    """t_sd located by bisection on the smallest partial-transpose eigenvalue of
    the numerically evolved density matrix."""
    ch = _channel(ch)
    rho0 = build_xstate(params)

    def min_eta(t):
        rho_t = apply_dephasing(rho0, t, ch)
        return linalg.eigvalsh(linalg.partial_transpose(rho_t.matrix))[0]

    return bisect(min_eta, 0.0, BISECT_SPAN / ch.damping_rate)


def sudden_transition_time_numeric(params, ch=None):
    """t_st located by bisection on the gap between the largest single-flip
    entry of W and its zz entry, with W built from the evolved density matrix."""
    ch = _channel(ch)
    rho0 = build_xstate(params)

    def gap(t):
        w = w_matrix(apply_dephasing(rho0, t, ch))
        return max(w[0, 0], w[1, 1]) - w[2, 2]

    return bisect(gap, 0.0, BISECT_SPAN / ch.damping_rate)


def _family_w_eigs(betas):
    return tuple(sorted(2.0 * b for b in betas.as_tuple()))


def trajectory(params, ch=None, t_max=8.0, n_steps=400):
    """Closed-form correlation history on ``n_steps`` uniformly spaced times in
    ``[0, t_max]``.

    The first and last points are recomputed through the generic
    density-matrix route; a disagreement above 1e-8 raises ``RuntimeError``.
    """
    ch = _channel(ch)
    if not t_max > 0:
        raise ValueError("t_max must be positive")
    if n_steps < 2:
        raise ValueError("n_steps must be >= 2")
    times = np.linspace(0.0, t_max, n_steps)

    reports = []
    for t in times:
        p_t = evolve_params(params, float(t), ch)
        rep = report(p_t, t=float(t))
        reports.append(CorrelationReport(rep.t, p_t, rep.negativity, rep.lqu, rep.betas,
                                         _family_w_eigs(rep.betas)))

    residual = 0.0
    rho0 = build_xstate(params)
    for idx in (0, n_steps - 1):
        rho_t = apply_dephasing(rho0, float(times[idx]), ch)
        residual = max(residual,
                       abs(negativity(rho_t) - reports[idx].negativity),
                       abs(lqu_generic(rho_t) - reports[idx].lqu))
    if residual > ENDPOINT_TOL:
        raise RuntimeError(f"closed-form and generic routes disagree by {residual:.3e}")

    return Trajectory(params, ch, times, tuple(reports), event_times(params, ch),
                      classify(params), residual)


@dataclass(frozen=True)
class PhasePoint:
    r: float
    s: float
    physical: bool
    tag: Optional[RegionTag] = None
    negativity0: Optional[float] = None
    lqu0: Optional[float] = None
    lqu_inf: Optional[float] = None
    events: EventTimes = field(default_factory=EventTimes)


def grid_axes(grid_n):
    """r in [0, 1/2] with ``grid_n`` points and s in [-1/2, 1/2] with the same
    spacing (2 grid_n - 1 points). Values are k / (2(grid_n - 1)) so that
    corners such as r = s = 1/4 land exactly."""
    if grid_n < 2:
        raise ValueError("grid_n must be >= 2")
    d = 2 * (grid_n - 1)
    r = np.arange(grid_n) / d
    s = np.arange(-(grid_n - 1), grid_n) / d
    return r, s


def phase_point(r, s, ch=None):
    r, s = float(r), float(s)
    if not is_physical(r, s):
        return PhasePoint(r, s, False)
    p = XStateParams(r, s)
    return PhasePoint(r, s, True, classify(p), negativity_family(p), lqu_family(p)[0],
                      lqu_asymptotic(r), event_times(p, ch))


def phase_diagram(grid_n=201, ch=None, workers=1):
    """Evaluate every point of the (r, s) grid, r-major, s-minor.

    Output order is the grid order regardless of ``workers``.
    """
    ch = _channel(ch)
    r_axis, s_axis = grid_axes(grid_n)

    def row(r):
        return [phase_point(r, s, ch) for s in s_axis]

    if workers > 1:
        with ThreadPoolExecutor(workers) as pool:
            rows = list(pool.map(row, r_axis))
    else:
        rows = [row(r) for r in r_axis]
    return [pt for rw in rows for pt in rw]
