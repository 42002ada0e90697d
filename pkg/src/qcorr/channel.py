"""Collective (global) pure dephasing of two qubits.

Both qubits see the same white-noise field xi(t) through

    H(t) = -xi(t)/2 * (Z x I + I x Z),   <xi(t) xi(t')> = Gamma delta(t - t').

Two routes are provided: the closed-form channel (:func:`apply_dephasing`),
and a Monte Carlo average of ``U rho U^H`` over noise realizations
(:func:`monte_carlo_evolve`) that serves as an independent check of it.
"""
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import NamedTuple, Optional

import numpy as np

from . import linalg
from .states import DensityMatrix, XStateParams, validate_density

# powers of gamma(t) multiplying each element of rho
DEPHASING_EXPONENTS = np.array(
    [[0, 1, 1, 4],
     [1, 0, 0, 1],
     [1, 0, 0, 1],
     [4, 1, 1, 0]])

# Z x I + I x Z
COLLECTIVE_Z = linalg.kron(linalg.SIGMA_Z, linalg.IDENTITY2) + linalg.kron(linalg.IDENTITY2, linalg.SIGMA_Z)

DEFAULT_CHUNK = 10_000


@dataclass(frozen=True)
class ChannelParams:
    """Damping rate Gamma (inverse time). With the default of 1, times are in units of 1/Gamma."""
    damping_rate: float = 1.0

    def __post_init__(self):
        if not (np.isfinite(self.damping_rate) and self.damping_rate > 0):
            raise ValueError(f"damping rate must be positive, got {self.damping_rate!r}")


@dataclass(frozen=True)
class NoiseSampleConfig:
    """Monte Carlo settings.

    Samples are drawn in fixed-size chunks, chunk ``k`` from the ``k``-th child
    of ``SeedSequence(seed, spawn_key=(stream,))`` (PCG64). The result
    therefore depends only on ``(seed, stream, n_samples, chunk_size)`` and not
    on ``workers``.
    ``path_steps`` switches from sampling the accumulated phase directly to
    summing ``path_steps`` Euler increments of the noise.
    """
    n_samples: int = 100_000
    seed: int = 42
    chunk_size: int = DEFAULT_CHUNK
    workers: int = 1
    path_steps: Optional[int] = None
    stream: int = 0

    def __post_init__(self):
        if self.n_samples < 1:
            raise ValueError("n_samples must be >= 1")
        if self.chunk_size < 1:
            raise ValueError("chunk_size must be >= 1")
        if not 0 <= self.seed < 2**64:
            raise ValueError("seed must be a 64-bit unsigned integer")
        if self.path_steps is not None and self.path_steps < 1:
            raise ValueError("path_steps must be >= 1")


class MonteCarloResult(NamedTuple):
    state: DensityMatrix
    max_abs_error: float
    error_bound: np.ndarray  # elementwise 3-sigma


def _channel(ch):
    if ch is None:
        return ChannelParams()
    if isinstance(ch, ChannelParams):
        return ch
    return ChannelParams(float(ch))


def decay_factor(t, params=None):
    """gamma(t) = exp(-Gamma t / 2). Works elementwise on arrays."""
    ch = _channel(params)
    t_arr = np.asarray(t, dtype=float)
    if np.any(t_arr < 0):
        raise ValueError("time must be non-negative")
    out = np.exp(-0.5 * ch.damping_rate * t_arr)
    return float(out) if out.ndim == 0 else out


def dephasing_mask(t, params=None):
    """4x4 array of multipliers gamma(t)**k applied elementwise to rho."""
    return decay_factor(t, params) ** DEPHASING_EXPONENTS


def apply_dephasing(rho0, t, params=None):
    """Exact state at time ``t`` for any initial two-qubit state.

    Single-flip coherences pick up gamma, the |00><11| coherence gamma**4;
    populations and the {|01>, |10>} block are left alone.
    """
    rho0 = validate_density(rho0)
    return DensityMatrix(rho0.matrix * dephasing_mask(t, params))


def evolve_params(params, t, ch=None):
    """Family coordinates at time ``t``: r is conserved, s -> s exp(-2 Gamma t)."""
    ch = _channel(ch)
    if t < 0:
        raise ValueError("time must be non-negative")
    return XStateParams(params.r, params.s * np.exp(-2.0 * ch.damping_rate * t))


def _sample_phases(rng, n, t, gamma_rate, path_steps):
    """Accumulated phase Phi = int_0^t xi dt', one value per realization."""
    variance = gamma_rate * t
    if path_steps is None:
        return rng.normal(0.0, np.sqrt(variance), size=n)
    dt = t / path_steps
    # xi_k ~ N(0, Gamma/dt) held constant over each step
    xi = rng.normal(0.0, np.sqrt(gamma_rate / dt), size=(n, path_steps)) if dt > 0 else np.zeros((n, path_steps))
    return xi.sum(axis=1) * dt


def _chunk_moments(rho0, gen_diag, seed_seq, n, t, gamma_rate, path_steps):
    rng = np.random.Generator(np.random.PCG64(seed_seq))
    phi = _sample_phases(rng, n, t, gamma_rate, path_steps)
    # U = exp(-i int H dt') = exp(i Phi/2 * (Z x I + I x Z)) = diag(exp(i theta_k)),
    # so (U rho U^H)_jk = exp(i (theta_j - theta_k)) rho_jk
    theta = 0.5 * phi[:, None] * gen_diag[None, :]
    phases = np.exp(1j * (theta[:, :, None] - theta[:, None, :]))
    # moments of the deviation from rho0 keep the zero-noise case exact
    dev = (phases - 1.0) * rho0[None, :, :]
    re, im = dev.real, dev.imag
    return (dev.sum(axis=0), (re * re).sum(axis=0), (im * im).sum(axis=0))


def monte_carlo_evolve(rho0, t, ch=None, cfg=None):
    """Ensemble average of ``U rho0 U^H`` over sampled noise realizations.

    Returns
    -------
    MonteCarloResult
        ``state`` is the trace-renormalized sample mean; ``error_bound`` holds
        three standard errors of each complex entry and ``max_abs_error`` its
        maximum.
    """
    rho0 = validate_density(rho0).matrix
    ch = _channel(ch)
    cfg = cfg or NoiseSampleConfig()
    if t < 0:
        raise ValueError("time must be non-negative")

    generator = COLLECTIVE_Z
    if np.any(generator != np.diag(np.diag(generator))):
        raise AssertionError("collective generator is expected to be diagonal")
    gen_diag = np.diag(generator).real

    sizes = [cfg.chunk_size] * (cfg.n_samples // cfg.chunk_size)
    if cfg.n_samples % cfg.chunk_size:
        sizes.append(cfg.n_samples % cfg.chunk_size)
    children = np.random.SeedSequence(cfg.seed, spawn_key=(cfg.stream,)).spawn(len(sizes))

    def work(k):
        return _chunk_moments(rho0, gen_diag, children[k], sizes[k], t, ch.damping_rate, cfg.path_steps)

    if cfg.workers > 1:
        with ThreadPoolExecutor(cfg.workers) as pool:
            parts = list(pool.map(work, range(len(sizes))))
    else:
        parts = [work(k) for k in range(len(sizes))]

    n = cfg.n_samples
    total = sum(p[0] for p in parts)
    sq_re = sum(p[1] for p in parts)
    sq_im = sum(p[2] for p in parts)
    shift = total / n
    var = np.clip(sq_re / n - shift.real ** 2, 0, None) + np.clip(sq_im / n - shift.imag ** 2, 0, None)
    bound = 3.0 * np.sqrt(var / n)

    mean = rho0 + shift
    # trace is conserved per realization; this only removes accumulated round-off
    mean = mean * (np.trace(rho0).real / np.trace(mean).real)
    return MonteCarloResult(DensityMatrix(mean), float(bound.max()), bound)
