"""Displacement operators, the symplectic form and dense operator helpers.

Conventions: ``T|e_r> = omega^r |e_r>``, ``S|e_r> = |e_{r+1}>`` and
``D_p = tau^(p1 p2) S^p1 T^p2`` with ``omega = exp(2 pi i/d)`` and
``tau = -exp(pi i/d)``. Every phase is a power of ``tau`` and is looked up
from a table of exact ``exp(i pi k (d+1)/d)`` values, never accumulated by
repeated multiplication.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from typing import Sequence

import numpy as np

from .errors import DimensionMismatch
from .numtheory import dbar


@dataclass(frozen=True)
class PhaseContext:
    d: int
    tau_powers: np.ndarray = field(repr=False, compare=False)

    @property
    def omega(self) -> complex:
        return complex(self.tau_powers[2 % (2 * self.d)])

    @property
    def tau(self) -> complex:
        return complex(self.tau_powers[1 % (2 * self.d)])

    def tau_pow(self, k):
        """``tau**k`` for integer ``k`` (scalar or array)."""
        return self.tau_powers[np.mod(k, 2 * self.d)]

    def omega_pow(self, k):
        return self.tau_powers[np.mod(2 * np.asarray(k), 2 * self.d)]


@lru_cache(maxsize=None)
def phase_context(d: int) -> PhaseContext:
    if d < 1:
        raise ValueError(f"dimension must be positive, got {d}")
    k = np.arange(2 * d)
    # tau = exp(i pi (d+1)/d); reduce the numerator mod 2d before exponentiating
    table = np.exp(1j * np.pi * ((k * (d + 1)) % (2 * d)) / d)
    table.setflags(write=False)
    return PhaseContext(d, table)


def symplectic_form(p: Sequence[int], q: Sequence[int]) -> int:
    """``<p, q> = p2 q1 - p1 q2`` (unreduced)."""
    return int(p[1]) * int(q[0]) - int(p[0]) * int(q[1])


def displacement(p: Sequence[int], d: int) -> np.ndarray:
    """Dense ``d x d`` matrix of ``D_p``.

    ``p`` may be any integer pair; the prefactor uses the unreduced product
    ``p1 p2`` so the sign rule for ``D_{p + d q}`` in even dimension holds.
    """
    ctx = phase_context(d)
    p1, p2 = int(p[0]), int(p[1])
    r = np.arange(d)
    out = np.zeros((d, d), dtype=complex)
    # D_p |e_r> = tau^(p1 p2 + 2 r p2) |e_{r + p1}>
    out[(r + p1) % d, r] = ctx.tau_pow(p1 * p2 + 2 * r * p2)
    return out


@lru_cache(maxsize=None)
def displacement_stack(d: int) -> np.ndarray:
    """All ``D_p`` for ``p`` in ``Z_d x Z_d``, indexed ``[p1, p2]``."""
    stack = np.empty((d, d, d, d), dtype=complex)
    for p1 in range(d):
        for p2 in range(d):
            stack[p1, p2] = displacement((p1, p2), d)
    stack.setflags(write=False)
    return stack


@lru_cache(maxsize=None)
def _overlap_phases(d: int) -> np.ndarray:
    # phases[p1, p2, r] = tau^(p1 p2 + 2 r p2)
    p1, p2, r = np.meshgrid(np.arange(d), np.arange(d), np.arange(d), indexing="ij")
    phases = phase_context(d).tau_pow(p1 * p2 + 2 * r * p2)
    phases.setflags(write=False)
    return phases


@lru_cache(maxsize=None)
def _shift_index(d: int) -> np.ndarray:
    # idx[p1, r] = (r + p1) mod d
    return (np.arange(d)[None, :] + np.arange(d)[:, None]) % d


def overlap_table(psi: np.ndarray) -> np.ndarray:
    """``<psi|D_p|psi>`` for all ``p`` in ``Z_d x Z_d`` as a ``d x d`` array.

    Uses the shift-times-diagonal structure of ``D_p``; O(d) per entry.
    """
    psi = np.asarray(psi, dtype=complex)
    d = psi.shape[0]
    shifted = psi[_shift_index(d)].conj()
    return np.einsum("ar,abr,r->ab", shifted, _overlap_phases(d), psi)


def overlap(psi: np.ndarray, p: Sequence[int]) -> complex:
    """``<psi|D_p|psi>`` for an arbitrary integer pair ``p``."""
    psi = np.asarray(psi, dtype=complex)
    d = psi.shape[0]
    p1, p2 = int(p[0]), int(p[1])
    r = np.arange(d)
    phases = phase_context(d).tau_pow(p1 * p2 + 2 * r * p2)
    return complex(np.sum(psi[(r + p1) % d].conj() * phases * psi))


def extended_overlap_table(psi: np.ndarray) -> np.ndarray:
    """``<psi|D_p|psi>`` for ``p`` over ``Z_dbar x Z_dbar``.

    Needed to look up ``D_{Fp}`` with ``Fp`` reduced mod ``dbar`` rather
    than mod ``d`` (the two differ by a sign in even dimension).
    """
    psi = np.asarray(psi, dtype=complex)
    d = psi.shape[0]
    m = dbar(d)
    base = overlap_table(psi)
    if m == d:
        return base
    p1, p2 = np.meshgrid(np.arange(m), np.arange(m), indexing="ij")
    # D_{p + d q} = (-1)^<p, q> D_p with q in {0, 1}^2
    q1, q2 = p1 // d, p2 // d
    r1, r2 = p1 % d, p2 % d
    sign = np.where((r2 * q1 - r1 * q2) % 2 == 0, 1.0, -1.0)
    return sign * base[r1, r2]


@dataclass(frozen=True, eq=False)
class OperatorMatrix:
    """Dense operator; when ``antilinear`` it acts as ``v -> matrix @ conj(v)``."""

    matrix: np.ndarray
    antilinear: bool = False

    @property
    def d(self) -> int:
        return self.matrix.shape[0]

    def apply(self, psi: np.ndarray) -> np.ndarray:
        psi = np.asarray(psi, dtype=complex)
        if psi.shape != (self.d,):
            raise DimensionMismatch(f"vector of length {psi.shape[0]} for a {self.d}-dim operator")
        return self.matrix @ (psi.conj() if self.antilinear else psi)

    def __matmul__(self, other: "OperatorMatrix") -> "OperatorMatrix":
        if other.d != self.d:
            raise DimensionMismatch(f"cannot compose dimensions {self.d} and {other.d}")
        # A K^a (B K^b) = A conj^a(B) K^(a xor b)
        right = other.matrix.conj() if self.antilinear else other.matrix
        return OperatorMatrix(self.matrix @ right, self.antilinear != other.antilinear)

    def power(self, k: int) -> "OperatorMatrix":
        out = OperatorMatrix(np.eye(self.d, dtype=complex))
        for _ in range(k):
            out = self @ out
        return out

    def conjugate(self, op: np.ndarray) -> np.ndarray:
        """``U op U^dagger`` for a linear ``op``."""
        inner = op.conj() if self.antilinear else op
        return self.matrix @ inner @ self.matrix.conj().T

    def is_unitary(self, atol: float = 1e-10) -> bool:
        m = self.matrix
        return bool(np.allclose(m.conj().T @ m, np.eye(self.d), atol=atol))

    def proportional_to(self, other: "OperatorMatrix", atol: float = 1e-9) -> bool:
        """Equality up to a global phase: flags match and ``|Tr(A^dagger B)| = d``."""
        if self.antilinear != other.antilinear or self.d != other.d:
            return False
        t = np.vdot(self.matrix, other.matrix)
        return abs(abs(t) - self.d) <= atol
