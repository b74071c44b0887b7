"""The extended Clifford group modulo phases.

An operation is a pair ``(F, chi)`` with ``F`` a 2x2 integer matrix mod
``dbar`` of determinant +1 (unitary) or -1 (anti-unitary) and ``chi`` in
``Z_d x Z_d``. Pairs compose by the semidirect rule
``(F1, c1) o (F2, c2) = (F1 F2, c1 + F1 c2)``. For even ``d`` eight pairs
map to the identity operation; :func:`canonicalize` picks one
representative per coset so that equality of operations is equality of
canonical pairs.

Matrices are stored row-major as 4-tuples ``(alpha, beta, gamma, delta)``.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import product
from math import gcd
from typing import Iterator, Sequence

import numpy as np

from .errors import (
    BadDeterminant,
    CapExceeded,
    DimensionMismatch,
    OrderOverflow,
    PrimeInput,
)
from .numtheory import dbar as _dbar
from .numtheory import mod_inverse, nu_count
from .weyl import OperatorMatrix, displacement, phase_context

Mat = tuple[int, int, int, int]
Vec = tuple[int, int]

DEFAULT_ENUMERATION_CAP = 10**7

J_TILDE: Mat = (1, 0, 0, -1)
ZAUNER: Mat = (0, -1, 1, -1)


def _as_mat(F) -> Mat:
    arr = np.asarray(F, dtype=object).reshape(-1)
    if arr.shape != (4,):
        raise ValueError(f"expected a 2x2 matrix, got {F!r}")
    return tuple(int(x) for x in arr)  # type: ignore[return-value]


def _reduce(F: Sequence[int], m: int) -> Mat:
    return (F[0] % m, F[1] % m, F[2] % m, F[3] % m)


def _mul(F: Mat, G: Mat, m: int) -> Mat:
    a, b, c, d = F
    e, f, g, h = G
    return ((a * e + b * g) % m, (a * f + b * h) % m, (c * e + d * g) % m, (c * f + d * h) % m)


def _act(F: Mat, v: Vec, m: int) -> Vec:
    return ((F[0] * v[0] + F[1] * v[1]) % m, (F[2] * v[0] + F[3] * v[1]) % m)


def _det(F: Sequence[int]) -> int:
    return F[0] * F[3] - F[1] * F[2]


@dataclass(frozen=True)
class CliffordElement:
    """An extended Clifford operation ``[F, chi]`` in dimension ``d``.

    Build with :func:`validate_element` (or :meth:`make`), which reduces the
    entries and checks the determinant.
    """

    F: Mat
    chi: Vec
    d: int

    @classmethod
    def make(cls, F, chi=(0, 0), d: int | None = None) -> "CliffordElement":
        if d is None:
            raise TypeError("dimension d is required")
        return validate_element(F, chi, d)

    @property
    def dbar(self) -> int:
        return _dbar(self.d)

    @property
    def parity(self) -> int:
        """+1 for unitary operations, -1 for anti-unitary ones."""
        return 1 if _det(self.F) % self.dbar == 1 % self.dbar else -1

    @property
    def is_unitary(self) -> bool:
        return self.parity == 1

    @property
    def matrix(self) -> np.ndarray:
        return np.array(self.F, dtype=np.int64).reshape(2, 2)

    def __matmul__(self, other: "CliffordElement") -> "CliffordElement":
        return compose(self, other)

    def __str__(self) -> str:
        a, b, c, d = self.F
        kind = "U" if self.is_unitary else "A"
        return f"[[{a},{b}],[{c},{d}]] chi=({self.chi[0]},{self.chi[1]}) d={self.d} {kind}"


def validate_element(F, chi=(0, 0), d: int = 0) -> CliffordElement:
    if d < 1:
        raise ValueError(f"dimension must be positive, got {d}")
    m = _dbar(d)
    Fm = _reduce(_as_mat(F), m)
    det = _det(Fm) % m
    if det not in (1 % m, (m - 1) % m):
        raise BadDeterminant(f"det F = {det} (mod {m}) is not +-1")
    c = (int(chi[0]) % d, int(chi[1]) % d)
    return CliffordElement(Fm, c, d)


def identity(d: int) -> CliffordElement:
    return CliffordElement(_reduce((1, 0, 0, 1), _dbar(d)), (0, 0), d)


def _check_same(a: CliffordElement, b: CliffordElement) -> None:
    if a.d != b.d:
        raise DimensionMismatch(f"dimensions {a.d} and {b.d} differ")


def _compose_raw(F1: Mat, c1: Vec, F2: Mat, c2: Vec, d: int, m: int) -> tuple[Mat, Vec]:
    Fc = _act(F1, c2, d)
    return _mul(F1, F2, m), ((c1[0] + Fc[0]) % d, (c1[1] + Fc[1]) % d)


def compose(a: CliffordElement, b: CliffordElement) -> CliffordElement:
    _check_same(a, b)
    F, chi = _compose_raw(a.F, a.chi, b.F, b.chi, a.d, a.dbar)
    return CliffordElement(F, chi, a.d)


def inverse(e: CliffordElement) -> CliffordElement:
    m = e.dbar
    a, b, c, d = e.F
    # det is +-1, its own inverse
    s = _det(e.F) % m
    Finv = _reduce((s * d, -s * b, -s * c, s * a), m)
    v = _act(Finv, e.chi, e.d)
    return CliffordElement(Finv, ((-v[0]) % e.d, (-v[1]) % e.d), e.d)


def power(e: CliffordElement, k: int) -> CliffordElement:
    if k < 0:
        return power(inverse(e), -k)
    out, base = identity(e.d), e
    while k:
        if k & 1:
            out = compose(out, base)
        base = compose(base, base)
        k >>= 1
    return out


@lru_cache(maxsize=None)
def _kernel_raw(d: int) -> tuple[tuple[Mat, Vec], ...]:
    if d % 2:
        return (((1, 0, 0, 1), (0, 0)),)
    m = 2 * d
    out = []
    for r, s, t in product((0, 1), repeat=3):
        F = _reduce((1 + r * d, s * d, t * d, 1 + r * d), m)
        out.append((F, ((s * d // 2) % d, (t * d // 2) % d)))
    return tuple(out)


def kernel_elements(d: int) -> list[CliffordElement]:
    """Pairs mapping to the identity operation: 8 for even ``d``, 1 for odd."""
    return [CliffordElement(F, chi, d) for F, chi in _kernel_raw(d)]


def _canonical_raw(F: Mat, chi: Vec, d: int, m: int) -> tuple[Mat, Vec]:
    if d % 2:
        return F, chi
    return min(_compose_raw(F, chi, K, kc, d, m) for K, kc in _kernel_raw(d))


def canonicalize(e: CliffordElement) -> CliffordElement:
    """Lexicographically smallest member (F row-major, then chi) of the kernel coset."""
    F, chi = _canonical_raw(e.F, e.chi, e.d, e.dbar)
    return CliffordElement(F, chi, e.d)


def elements_equal(a: CliffordElement, b: CliffordElement) -> bool:
    _check_same(a, b)
    return canonicalize(a) == canonicalize(b)


def clifford_trace(e: CliffordElement) -> int:
    return (e.F[0] + e.F[3]) % e.d


def is_canonical_order3(e: CliffordElement) -> bool:
    """Unitary with Clifford trace -1 and ``F`` not the identity mod ``d``."""
    if not e.is_unitary:
        return False
    d = e.d
    not_identity = _reduce(e.F, d) != _reduce((1, 0, 0, 1), d)
    return clifford_trace(e) == (-1) % d and not_identity


def group_order(d: int, extended: bool = True) -> int:
    """``|C(d)/I(d)| = d^2 sum_n nu(n, d) nu(n+1, d)``, doubled for the extended group."""
    if d < 1:
        raise ValueError(f"dimension must be positive, got {d}")
    sl2 = sum(nu_count(n, d) * nu_count(n + 1, d) for n in range(d))
    order = d * d * sl2
    return 2 * order if extended else order


def element_order(e: CliffordElement, bound: int | None = None) -> int:
    if bound is None:
        bound = group_order(e.d, extended=True)
    ident = canonicalize(identity(e.d))
    x, k = e, 1
    while canonicalize(x) != ident:
        k += 1
        if k > bound:
            raise OrderOverflow(f"order of {e} exceeds {bound}")
        x = compose(x, e)
    return k


@lru_cache(maxsize=None)
def _matrices_with_det(d: int, extended: bool) -> tuple[Mat, ...]:
    m = _dbar(d)
    a, b, c, dd = np.meshgrid(*(np.arange(m),) * 4, indexing="ij")
    det = (a * dd - b * c) % m
    mask = det == 1 % m
    if extended:
        mask |= det == (m - 1) % m
    rows = np.stack([a[mask], b[mask], c[mask], dd[mask]], axis=1)
    return tuple(tuple(int(x) for x in row) for row in rows)  # type: ignore[misc]


def enumerate_group(
    d: int, extended: bool = True, cap: int = DEFAULT_ENUMERATION_CAP
) -> Iterator[CliffordElement]:
    """Yield every operation exactly once, in canonical form.

    A pair is emitted only when it is the canonical member of its kernel
    coset, which deduplicates without storing the group.
    """
    n = group_order(d, extended)
    if n > cap:
        raise CapExceeded(f"group of order {n} exceeds enumeration cap {cap}")
    m = _dbar(d)
    chis = [(x, y) for x in range(d) for y in range(d)]
    for F in _matrices_with_det(d, extended):
        for chi in chis:
            if d % 2 == 0 and _canonical_raw(F, chi, d, m) != (F, chi):
                continue
            yield CliffordElement(F, chi, d)


def is_prime_matrix(F, d: int) -> bool:
    """``beta`` nonzero and invertible mod ``dbar``."""
    m = _dbar(d)
    beta = _as_mat(F)[1] % m
    return beta != 0 and gcd(beta, m) == 1


def decompose_nonprime(F, d: int) -> tuple[Mat, Mat]:
    """Split a non-prime ``F`` of determinant 1 into prime factors ``F1 F2``.

    ``F1 = [[0, -1], [1, x]]`` and ``F2 = [[gamma + x alpha, delta + x beta],
    [-alpha, -beta]]`` with ``x`` the smallest nonnegative integer making
    ``delta + x beta`` a unit mod ``dbar``.
    """
    m = _dbar(d)
    alpha, beta, gamma, delta = _reduce(_as_mat(F), m)
    if _det((alpha, beta, gamma, delta)) % m != 1 % m:
        raise BadDeterminant("decomposition needs det F = 1")
    if is_prime_matrix((alpha, beta, gamma, delta), d):
        raise PrimeInput("matrix is already prime")
    for x in range(m):
        y = (delta + x * beta) % m
        if y != 0 and gcd(y, m) == 1:
            F1 = _reduce((0, -1, 1, x), m)
            F2 = _reduce((gamma + x * alpha, y, -alpha, -beta), m)
            return F1, F2
    raise AssertionError("no decomposition parameter found")


@lru_cache(maxsize=16384)
def _v_matrix(F: Mat, d: int) -> np.ndarray:
    m = _dbar(d)
    alpha, beta, _, delta = F
    binv = mod_inverse(beta, m)
    r = np.arange(d)[:, None]
    s = np.arange(d)[None, :]
    expo = (binv * (alpha * s * s - 2 * r * s + delta * r * r)) % m
    out = phase_context(d).tau_pow(expo) / np.sqrt(d)
    out.setflags(write=False)
    return out


def v_operator(F, d: int) -> np.ndarray:
    """``V_F`` for a prime matrix: ``V_F D_p V_F^dagger = D_{Fp}``."""
    Fm = _reduce(_as_mat(F), _dbar(d))
    if not is_prime_matrix(Fm, d):
        raise PrimeInput("V_F is only defined for prime matrices")
    return _v_matrix(Fm, d)


def _unitary_matrix(F: Mat, chi: Vec, d: int) -> np.ndarray:
    if d == 1:
        return np.ones((1, 1), dtype=complex)
    if is_prime_matrix(F, d):
        v = _v_matrix(F, d)
    else:
        F1, F2 = decompose_nonprime(F, d)
        v = _v_matrix(F1, d) @ _v_matrix(F2, d)
    return displacement(chi, d) @ v


@lru_cache(maxsize=4096)
def synthesize(e: CliffordElement) -> OperatorMatrix:
    """An operator in the class ``[F, chi]``.

    Unitary: ``D_chi V_F`` (or ``D_chi V_F1 V_F2`` for non-prime ``F``).
    Anti-unitary: ``J`` composed with the unitary for ``[J~F, J~chi]``,
    i.e. ``v -> conj(U' v)``, stored as matrix ``conj(U')`` with the
    antilinear flag.
    """
    if e.is_unitary:
        mat = _unitary_matrix(e.F, e.chi, e.d)
        op = OperatorMatrix(mat)
    else:
        m, d = e.dbar, e.d
        Fp = _mul(_reduce(J_TILDE, m), e.F, m)
        chip = (e.chi[0] % d, (-e.chi[1]) % d)
        op = OperatorMatrix(_unitary_matrix(Fp, chip, d).conj(), antilinear=True)
    op.matrix.setflags(write=False)
    return op


def conjugation_phase_exponent(e: CliffordElement, p: Sequence[int]) -> tuple[int, tuple[int, int]]:
    """``(<chi, Fp> mod d, Fp mod dbar)`` for the relation ``U D_p U^dagger = omega^<chi,Fp> D_Fp``."""
    m = e.dbar
    Fp = ((e.F[0] * p[0] + e.F[1] * p[1]) % m, (e.F[2] * p[0] + e.F[3] * p[1]) % m)
    expo = (e.chi[1] * Fp[0] - e.chi[0] * Fp[1]) % e.d
    return expo, Fp
