"""Numerical fiducial search by minimizing the SIC defect on the unit sphere."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np
from scipy.optimize import minimize

from .errors import NotNormalized
from .weyl import _overlap_phases, _shift_index, overlap_table

NORM_TOL = 1e-9


def _check_norm(psi: np.ndarray) -> np.ndarray:
    psi = np.asarray(psi, dtype=complex)
    n = np.linalg.norm(psi)
    if abs(n - 1.0) > NORM_TOL:
        raise NotNormalized(f"vector norm {n} is not 1 within {NORM_TOL}")
    return psi


def _defect_and_wgrad(psi: np.ndarray) -> tuple[float, np.ndarray]:
    # f = sum_{p != 0} g_p^2 with g_p = |a_p|^2 - 1/(d+1), a_p = <psi|D_p|psi>.
    # Since a_{-p} = conj(a_p), df/dconj(psi) = 4 sum_p g_p conj(a_p) D_p psi.
    d = psi.shape[0]
    a = overlap_table(psi)
    g = np.abs(a) ** 2 - 1.0 / (d + 1)
    g[0, 0] = 0.0
    f = float(np.sum(g * g))
    coef = g * a.conj()
    # (sum_p c_p D_p psi)[r + p1] += c_p tau^(p1 p2 + 2 r p2) psi_r
    contrib = np.einsum("ab,abr,r->ar", coef, _overlap_phases(d), psi)
    w = np.zeros(d, dtype=complex)
    np.add.at(w, _shift_index(d).ravel(), contrib.ravel())
    return f, 4.0 * w


def sic_defect(psi: np.ndarray) -> float:
    """``sum_{p != 0} (|<psi|D_p psi>|^2 - 1/(d+1))^2`` for a unit vector."""
    psi = _check_norm(psi)
    return _defect_and_wgrad(psi)[0]


def sic_defect_gradient(psi: np.ndarray) -> np.ndarray:
    """Gradient of the (unconstrained) defect in the real coordinates ``(Re psi, Im psi)``."""
    psi = np.asarray(psi, dtype=complex)
    w = _defect_and_wgrad(psi)[1]
    # for real f, the real gradient is 2 df/dconj(psi) split into parts
    return np.concatenate([2 * w.real, 2 * w.imag])


def _to_complex(x: np.ndarray) -> np.ndarray:
    d = x.shape[0] // 2
    return x[:d] + 1j * x[d:]


def _sphere_objective(x: np.ndarray) -> tuple[float, np.ndarray]:
    # f(x / |x|); the gradient is projected onto the tangent space and scaled by 1/|x|
    n = np.linalg.norm(x)
    y = x / n
    psi = _to_complex(y)
    f, w = _defect_and_wgrad(psi)
    g = np.concatenate([2 * w.real, 2 * w.imag])
    g = (g - np.dot(g, y) * y) / n
    return f, g


@dataclass(frozen=True)
class SearchConfig:
    d: int
    restarts: int = 8
    max_iterations: int = 2000
    seed: int = 0
    target_defect: float = 1e-12
    gtol: float = 1e-16
    history: int = 20

    def __post_init__(self) -> None:
        if self.d < 1:
            raise ValueError(f"dimension must be positive, got {self.d}")
        if self.restarts < 1:
            raise ValueError("restarts must be at least 1")
        if self.max_iterations < 1:
            raise ValueError("max_iterations must be at least 1")
        if not self.target_defect > 0:
            raise ValueError("target_defect must be positive")


@dataclass
class SearchOutcome:
    best_vector: np.ndarray
    best_defect: float
    iterations_used: int
    converged: bool
    restart_index: int = 0

    def to_dict(self) -> dict:
        return {
            "best_defect": self.best_defect,
            "iterations_used": self.iterations_used,
            "converged": self.converged,
            "restart_index": self.restart_index,
        }


def _local_minimize(psi: np.ndarray, max_iterations: int, gtol: float, history: int):
    x0 = np.concatenate([psi.real, psi.imag])
    res = minimize(
        _sphere_objective,
        x0,
        jac=True,
        method="L-BFGS-B",
        options={"maxiter": max_iterations, "ftol": 0.0, "gtol": gtol, "maxcor": history},
    )
    out = _to_complex(res.x / np.linalg.norm(res.x))
    return out, float(res.fun), int(res.nit)


def search_fiducial(cfg: SearchConfig) -> SearchOutcome:
    """Multi-start quasi-Newton minimization of :func:`sic_defect`.

    Each restart draws its start from its own PCG64 stream split off
    ``cfg.seed``; the best defect wins, ties going to the lower restart index.
    """
    d = cfg.d
    if d == 1:
        return SearchOutcome(np.ones(1, dtype=complex), 0.0, 0, True)
    streams = np.random.SeedSequence(cfg.seed).spawn(cfg.restarts)
    best: SearchOutcome | None = None
    total_iters = 0
    for i, ss in enumerate(streams):
        rng = np.random.Generator(np.random.PCG64(ss))
        start = rng.standard_normal(d) + 1j * rng.standard_normal(d)
        start /= np.linalg.norm(start)
        psi, f, nit = _local_minimize(start, cfg.max_iterations, cfg.gtol, cfg.history)
        total_iters += nit
        if best is None or f < best.best_defect:
            best = SearchOutcome(psi, f, 0, f <= cfg.target_defect, i)
    assert best is not None
    best.iterations_used = total_iters
    return best


@dataclass
class PolishResult:
    vector: np.ndarray
    defect: float
    improved: bool


def polish(psi: np.ndarray, target: float = 1e-12, max_iterations: int = 5000) -> PolishResult:
    """Local refinement from ``psi``; returns the input unchanged when nothing improves."""
    psi = np.asarray(psi, dtype=complex)
    psi = psi / np.linalg.norm(psi)
    start = _defect_and_wgrad(psi)[0]
    if psi.shape[0] == 1 or start == 0.0:
        return PolishResult(psi, start, False)
    out, f, _ = _local_minimize(psi, max_iterations, 1e-16, 20)
    if f < start:
        return PolishResult(out, f, True)
    return PolishResult(psi, start, False)
