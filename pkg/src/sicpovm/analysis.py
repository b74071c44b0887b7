"""Fiducial vectors under the extended Clifford group.

Verification of the fiducial condition, closed-form fiducials in small
dimensions, the group action on states, eigenspace dimensions of order-k
operations, stabilizer subgroups and orbit counting, conjugacy to the
Zauner operation, and diagonal canonical order-3 operations.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Iterable

import numpy as np

from .clifford import (
    DEFAULT_ENUMERATION_CAP,
    ZAUNER,
    CliffordElement,
    _canonical_raw,
    _matrices_with_det,
    canonicalize,
    compose,
    element_order,
    enumerate_group,
    group_order,
    identity,
    inverse,
    is_canonical_order3,
    synthesize,
    validate_element,
)
from .errors import (
    CapExceeded,
    DimensionMismatch,
    NonDivisible,
    NonIntegerTrace,
    UnknownRecipe,
)
from .numtheory import dbar, legendre_symbol, solve_unity_cube_root
from .tables import ORDER3_ROWS, ZAUNER_CONJUGATORS
from .weyl import extended_overlap_table, overlap_table, phase_context

FIDUCIAL_TOL = 1e-8
EIGEN_TOL = 1e-9
TRACE_SLACK = 0.01
# full sweeps above this group order need an explicit opt-in (d = 19 is ~4.9M)
STABILIZER_CAP = 200_000


@dataclass
class FiducialReport:
    d: int
    norm_error: float
    overlaps: dict[tuple[int, int], float]
    max_deviation: float
    tolerance: float
    passed: bool

    def to_dict(self) -> dict:
        return {
            "d": self.d,
            "norm_error": self.norm_error,
            "max_deviation": self.max_deviation,
            "tolerance": self.tolerance,
            "passed": self.passed,
        }


def verify_fiducial(psi: np.ndarray, tol: float = FIDUCIAL_TOL) -> FiducialReport:
    """Check ``|<psi|D_p|psi>| = 1/sqrt(d+1)`` for every ``p != 0`` and unit norm."""
    psi = np.asarray(psi, dtype=complex)
    d = psi.shape[0]
    if d < 2:
        raise DimensionMismatch("fiducial verification needs d >= 2")
    mags = np.abs(overlap_table(psi))
    target = 1.0 / math.sqrt(d + 1)
    overlaps = {
        (p1, p2): float(mags[p1, p2]) for p1 in range(d) for p2 in range(d) if (p1, p2) != (0, 0)
    }
    max_dev = max(abs(v - target) for v in overlaps.values())
    norm_error = abs(float(np.linalg.norm(psi)) - 1.0)
    return FiducialReport(
        d=d,
        norm_error=norm_error,
        overlaps=overlaps,
        max_deviation=max_dev,
        tolerance=tol,
        passed=max_dev <= tol and norm_error <= tol,
    )


# -- closed-form fiducials ---------------------------------------------------

def _psi_d2() -> np.ndarray:
    s3 = math.sqrt(3)
    return np.array(
        [math.sqrt((3 + s3) / 6), np.exp(1j * math.pi / 4) * math.sqrt((3 - s3) / 6)]
    )


def _psi_d3(t: float) -> np.ndarray:
    return np.array([0, np.exp(-1j * t), -np.exp(1j * t)]) / math.sqrt(2)


def _psi_d4() -> np.ndarray:
    s5 = math.sqrt(5)
    scale = math.sqrt((5 - s5) / 40)
    lo, hi = np.exp(-1j * math.pi / 8), np.exp(1j * math.pi / 8)
    big = math.sqrt(2 + s5)
    return scale * np.array(
        [
            2 * math.cos(math.pi / 8),
            1j * (lo + big * hi),
            2j * math.sin(math.pi / 8),
            1j * (lo - big * hi),
        ]
    )


def _psi_d7a() -> np.ndarray:
    s2 = math.sqrt(2)
    a0 = 0.5 * (math.sqrt(1 / (4 - s2)) + 1j * math.sqrt((4 - s2) / 2))
    a1 = 0.25 * math.sqrt((8 - 5 * s2) / 7)
    a2 = 2 ** (-7 / 4)
    return np.array([a0] + [-(a1 + legendre_symbol(r, 7) * a2) for r in range(1, 7)])


def _legendre_phase_vector(p: int, b0: float, b1: float, theta: float) -> np.ndarray:
    tail = [b1 * np.exp(1j * legendre_symbol(r, p) * theta) for r in range(1, p)]
    return np.array([b0] + tail, dtype=complex)


def _psi_d7b() -> np.ndarray:
    s2 = math.sqrt(2)
    return _legendre_phase_vector(
        7,
        math.sqrt((2 + 3 * s2) / 14),
        math.sqrt((4 - s2) / 28),
        math.acos(-math.sqrt(s2 + 1) / 2),
    )


def _psi_d19() -> np.ndarray:
    s5 = math.sqrt(5)
    return _legendre_phase_vector(
        19,
        math.sqrt((5 + 9 * s5) / 95),
        math.sqrt((10 - s5) / 190),
        math.acos(math.sqrt((s5 - 1) / 8)),
    )


RECIPES = ("d2", "d3", "d4", "d7a", "d7b", "d19")


def exact_fiducial(recipe: str, t: float | None = None) -> np.ndarray:
    """Closed-form fiducial by name; ``d3`` takes the real parameter ``t`` (radians)."""
    if recipe == "d3":
        if t is None:
            raise ValueError("recipe d3 needs a parameter t")
        return _psi_d3(float(t))
    builders = {"d2": _psi_d2, "d4": _psi_d4, "d7a": _psi_d7a, "d7b": _psi_d7b, "d19": _psi_d19}
    try:
        return builders[recipe]()
    except KeyError:
        raise UnknownRecipe(f"unknown recipe {recipe!r}; choose from {', '.join(RECIPES)}") from None


def d3_representative(t: float) -> float:
    """The ``t'`` in ``[0, pi/6]`` with ``t' = n pi/3 +- t`` (same orbit)."""
    u = math.fmod(t, math.pi / 3)
    if u < 0:
        u += math.pi / 3
    return math.pi / 3 - u if u > math.pi / 6 else u


# -- group action ---------------------------------------------------------------

def _check_dim(e: CliffordElement, psi: np.ndarray) -> np.ndarray:
    psi = np.asarray(psi, dtype=complex)
    if psi.shape != (e.d,):
        raise DimensionMismatch(f"vector of length {psi.shape[0]} for dimension {e.d}")
    return psi


def apply(e: CliffordElement, psi: np.ndarray) -> np.ndarray:
    psi = _check_dim(e, psi)
    return synthesize(e).apply(psi)


def is_eigenvector(e: CliffordElement, psi: np.ndarray, tol: float = EIGEN_TOL) -> bool:
    psi = _check_dim(e, psi)
    psi = psi / np.linalg.norm(psi)
    return abs(abs(np.vdot(psi, apply(e, psi))) - 1.0) <= tol


def eigenspace_dims(e: CliffordElement) -> tuple[int, ...]:
    """Dimensions of the eigenspaces of a unitary operation, sorted ascending.

    With ``k`` the order of ``e``, the synthesized ``U`` is rescaled so that
    ``U^k = 1``; the projector onto the eigenvalue ``exp(2 pi i r/k)`` is
    ``(1/k) sum_j exp(-2 pi i j r/k) U^j``. Empty eigenspaces are dropped.
    """
    if not e.is_unitary:
        raise ValueError("eigenspace dimensions are defined for unitary operations")
    k = element_order(e)
    u = synthesize(e).matrix
    d = e.d
    uk = np.linalg.matrix_power(u, k)
    scalar = np.trace(uk) / d
    u = u * np.exp(-1j * np.angle(scalar) / k)
    traces = np.empty(k, dtype=complex)
    power = np.eye(d, dtype=complex)
    for j in range(k):
        traces[j] = np.trace(power)
        power = power @ u
    dims = []
    for r in range(k):
        t = np.sum(np.exp(-2j * np.pi * np.arange(k) * r / k) * traces) / k
        n = round(t.real)
        if abs(t - n) > TRACE_SLACK:
            raise NonIntegerTrace(f"projector trace {t} is not an integer")
        if n:
            dims.append(int(n))
    return tuple(sorted(dims))


# -- stabilizers and orbits -------------------------------------------------------

@dataclass
class StabilizerResult:
    elements: list[CliffordElement]
    order: int
    generator_hint: CliffordElement | None = None

    def to_dict(self) -> dict:
        return {
            "order": self.order,
            "cyclic": self.generator_hint is not None,
            "generator": None if self.generator_hint is None else _element_dict(self.generator_hint),
            "elements": [_element_dict(e) for e in self.elements],
        }


def _element_dict(e: CliffordElement) -> dict:
    return {"F": list(e.F), "chi": list(e.chi), "d": e.d, "unitary": e.is_unitary}


def cyclic_subgroup(e: CliffordElement) -> list[CliffordElement]:
    out, x = [], canonicalize(identity(e.d))
    for _ in range(element_order(e)):
        out.append(x)
        x = canonicalize(compose(x, e))
    return out


def _stabilizer_candidates(psi: np.ndarray, extended: bool, tol: float) -> Iterable[CliffordElement]:
    # A fixed state satisfies a_p = w^<chi,Fp> a_Fp (unitary) or conj(a_p) =
    # w^<chi,Fp> a_Fp (anti-unitary) for all p, a_p = <psi|D_p|psi>. Testing
    # p = (1,0), (0,1) first discards almost every element without synthesis.
    d = psi.shape[0]
    m = dbar(d)
    table = extended_overlap_table(psi)
    a10, a01 = table[1 % m, 0], table[0, 1 % m]
    w = phase_context(d).omega_pow(np.arange(d))
    c1, c2 = np.meshgrid(np.arange(d), np.arange(d), indexing="ij")
    c1, c2 = c1.ravel(), c2.ravel()
    for F in _matrices_with_det(d, extended):
        alpha, beta, gamma, delta = F
        unitary = (alpha * delta - beta * gamma) % m == 1 % m
        t10 = a10 if unitary else np.conj(a10)
        t01 = a01 if unitary else np.conj(a01)
        # Fp for p = (1,0) is (alpha, gamma); for p = (0,1) it is (beta, delta)
        e1 = (c2 * alpha - c1 * gamma) % d
        e2 = (c2 * beta - c1 * delta) % d
        ok = (np.abs(t10 - w[e1] * table[alpha, gamma]) <= tol) & (
            np.abs(t01 - w[e2] * table[beta, delta]) <= tol
        )
        for i in np.flatnonzero(ok):
            chi = (int(c1[i]), int(c2[i]))
            Fc, chic = _canonical_raw(F, chi, d, m)
            if (Fc, chic) == (F, chi):
                yield CliffordElement(F, chi, d)


def stabilizer(
    psi: np.ndarray,
    tol: float = EIGEN_TOL,
    extended: bool = True,
    full_sweep: bool = False,
) -> StabilizerResult:
    """All operations of which ``psi`` is an eigenvector.

    Sweeps the whole group (canonical forms) and keeps elements passing
    :func:`is_eigenvector`; a cheap overlap-based necessary condition runs
    first. Groups larger than ``STABILIZER_CAP`` need ``full_sweep=True``.
    """
    psi = np.asarray(psi, dtype=complex)
    psi = psi / np.linalg.norm(psi)
    d = psi.shape[0]
    n = group_order(d, extended)
    cap = DEFAULT_ENUMERATION_CAP if full_sweep else STABILIZER_CAP
    if n > cap:
        raise CapExceeded(f"group of order {n} exceeds stabilizer cap {cap}")
    prefilter_tol = max(1e-6, 100 * tol)
    elements = [
        e for e in _stabilizer_candidates(psi, extended, prefilter_tol) if is_eigenvector(e, psi, tol)
    ]
    elements.sort(key=lambda e: (e.F, e.chi))
    order = len(elements)
    hint = next((e for e in elements if element_order(e) == order), None)
    return StabilizerResult(elements, order, hint)


def orbit_stats(psi: np.ndarray, tol: float = EIGEN_TOL, full_sweep: bool = False) -> tuple[int, int]:
    """``(orbit size, number of SIC-POVMs)`` of the extended Clifford orbit of ``psi``."""
    psi = np.asarray(psi, dtype=complex)
    d = psi.shape[0]
    stab = stabilizer(psi, tol, full_sweep=full_sweep)
    total = group_order(d, extended=True)
    if total % stab.order:
        raise NonDivisible(f"stabilizer order {stab.order} does not divide {total}")
    orbit = total // stab.order
    if orbit % (d * d):
        raise NonDivisible(f"orbit size {orbit} is not a multiple of d^2 = {d * d}")
    return orbit, orbit // (d * d)


# -- conjugacy and special operations -----------------------------------------

def conjugate(l: CliffordElement, e: CliffordElement) -> CliffordElement:
    """``l o e o l^-1`` in canonical form."""
    if l.d != e.d:
        raise DimensionMismatch(f"dimensions {l.d} and {e.d} differ")
    return canonicalize(compose(compose(l, e), inverse(l)))


def zauner_element(d: int) -> CliffordElement:
    return canonicalize(validate_element(ZAUNER, (0, 0), d))


def table_order3_element(d: int) -> CliffordElement:
    F, chi, _, _ = ORDER3_ROWS[d]
    return validate_element(F, chi, d)


def table_conjugator(d: int) -> CliffordElement:
    L, eta = ZAUNER_CONJUGATORS[d]
    return validate_element(L, eta, d)


def zauner_check(d: int) -> bool:
    """Whether the tabulated ``[L_d, eta_d]`` conjugates ``[F_d, chi_d]`` to ``[Z, 0]``."""
    return conjugate(table_conjugator(d), table_order3_element(d)) == zauner_element(d)


def diag_order3(d: int) -> CliffordElement | None:
    """Canonical order-3 operation ``[diag(a, -a-1), 0]`` when one exists."""
    alpha = solve_unity_cube_root(d)
    if alpha is None:
        return None
    return validate_element((alpha, 0, 0, -alpha - 1), (0, 0), d)


@dataclass
class ConjectureReport:
    d: int
    stabilizer_order: int
    canonical_order3: list[CliffordElement] = field(default_factory=list)
    zauner_witness: tuple[CliffordElement, CliffordElement] | None = None

    @property
    def has_canonical_order3(self) -> bool:
        return bool(self.canonical_order3)

    @property
    def conjugate_to_zauner(self) -> bool:
        return self.zauner_witness is not None

    def to_dict(self) -> dict:
        w = self.zauner_witness
        return {
            "d": self.d,
            "stabilizer_order": self.stabilizer_order,
            "has_canonical_order3": self.has_canonical_order3,
            "canonical_order3": [_element_dict(e) for e in self.canonical_order3],
            "conjugate_to_zauner": self.conjugate_to_zauner,
            "witness": None if w is None else {"l": _element_dict(w[0]), "stabilizing": _element_dict(w[1])},
        }


def conjecture_scan(psi: np.ndarray, tol: float = EIGEN_TOL, full_sweep: bool = False) -> ConjectureReport:
    """Look for a canonical order-3 stabilizing element, and one conjugate to ``[Z, 0]``.

    The conjugator search runs over the whole extended group and compares
    ``l o s`` with ``Z o l`` to avoid computing inverses.
    """
    psi = np.asarray(psi, dtype=complex)
    d = psi.shape[0]
    stab = stabilizer(psi, tol, full_sweep=full_sweep)
    order3 = [e for e in stab.elements if is_canonical_order3(e)]
    report = ConjectureReport(d, stab.order, order3)
    if not order3:
        return report
    z = zauner_element(d)
    for l in enumerate_group(d, extended=True):
        zl = canonicalize(compose(z, l))
        for s in order3:
            if canonicalize(compose(l, s)) == zl:
                report.zauner_witness = (l, s)
                return report
    return report
