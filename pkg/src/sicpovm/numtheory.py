"""Modular arithmetic primitives used by the group algebra.

All reductions return least nonnegative representatives. Moduli here are
small (a few hundred at most), so factorization is plain trial division.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import gcd, prod

from .errors import InvalidModulus, NotInvertible


@dataclass(frozen=True)
class Modulus:
    """Dimension ``d`` together with the matrix modulus ``dbar``."""

    d: int

    def __post_init__(self) -> None:
        if self.d < 1:
            raise InvalidModulus(f"dimension must be positive, got {self.d}")

    @property
    def dbar(self) -> int:
        return dbar(self.d)


def dbar(d: int) -> int:
    """``d`` for odd ``d``, ``2d`` for even ``d``."""
    return d if d % 2 else 2 * d


def mod_inverse(a: int, m: int) -> int:
    if m < 1:
        raise InvalidModulus(f"modulus must be positive, got {m}")
    if gcd(a, m) != 1:
        raise NotInvertible(f"{a} has no inverse modulo {m}")
    return pow(a, -1, m)


@lru_cache(maxsize=None)
def factorize(n: int) -> tuple[tuple[int, int], ...]:
    """Prime factorization of ``n`` as ``((p, k), ...)`` with ascending ``p``."""
    if n < 1:
        raise ValueError(f"cannot factorize {n}")
    out = []
    p = 2
    while p * p <= n:
        if n % p == 0:
            k = 0
            while n % p == 0:
                n //= p
                k += 1
            out.append((p, k))
        p += 1 if p == 2 else 2
    if n > 1:
        out.append((n, 1))
    return tuple(out)


def is_prime(n: int) -> bool:
    return n >= 2 and factorize(n) == ((n, 1),)


def euler_phi(n: int) -> int:
    return prod((p - 1) * p ** (k - 1) for p, k in factorize(n))


def legendre_symbol(r: int, p: int) -> int:
    """Legendre symbol ``(r/p)`` via Euler's criterion."""
    if p < 3 or not is_prime(p):
        raise InvalidModulus(f"{p} is not an odd prime")
    r %= p
    if r == 0:
        return 0
    return 1 if pow(r, (p - 1) // 2, p) == 1 else -1


def nu_count(n: int, d: int) -> int:
    """Number of ordered pairs ``(x, y)`` in ``Z_d`` squared with ``x*y = n (mod d)``.

    For fixed ``x`` with ``g = gcd(x, d)`` the congruence ``x*y = n`` has
    ``g`` solutions when ``g | n`` and none otherwise.
    """
    if d < 1:
        raise InvalidModulus(f"modulus must be positive, got {d}")
    n %= d
    total = 0
    for x in range(d):
        g = gcd(x, d)
        if n % g == 0:
            total += g
    return total


def residue_count_table(d: int) -> list[int]:
    return [nu_count(n, d) for n in range(d)]


def multiplicative_order(g: int, m: int) -> int:
    """Order of ``g`` in the unit group mod ``m``."""
    if gcd(g, m) != 1:
        raise NotInvertible(f"{g} is not a unit modulo {m}")
    phi = euler_phi(m)
    order = phi
    for q, _ in factorize(phi) if phi > 1 else ():
        while order % q == 0 and pow(g, order // q, m) == 1:
            order //= q
    return order


def primitive_root(p: int, n: int = 1) -> int:
    """Smallest ``g >= 2`` generating the unit group mod ``p**n``.

    For ``n >= 2`` a generator mod ``p**n`` generates mod every ``p**k``.
    """
    if p < 3 or not is_prime(p):
        raise InvalidModulus(f"{p} is not an odd prime")
    if n < 1:
        raise InvalidModulus(f"exponent must be positive, got {n}")
    m = p**n
    phi = (p - 1) * p ** (n - 1)
    for g in range(2, m):
        if gcd(g, m) == 1 and multiplicative_order(g, m) == phi:
            return g
    raise AssertionError("unreachable: odd prime powers have primitive roots")


def crt(residues: list[int], moduli: list[int]) -> int:
    """Solve ``x = r_i (mod m_i)`` for pairwise coprime moduli."""
    if len(residues) != len(moduli):
        raise ValueError("residues and moduli differ in length")
    x, m = 0, 1
    for r, mi in zip(residues, moduli):
        if gcd(m, mi) != 1:
            raise NotInvertible(f"moduli {m} and {mi} are not coprime")
        t = ((r - x) * mod_inverse(m, mi)) % mi
        x += m * t
        m *= mi
    return x % m


def diag_conditions(d: int) -> bool:
    """Factorization test for a diagonal canonical order-3 ``F`` in dimension ``d``.

    True iff some prime divisor is 1 mod 3, none is 2 mod 3, and 9 does not
    divide ``d``.
    """
    if d < 2:
        return False
    primes = [p for p, _ in factorize(d)]
    return (
        any(p % 3 == 1 for p in primes)
        and not any(p % 3 == 2 for p in primes)
        and d % 9 != 0
    )


def unity_cube_root_scan(d: int) -> int | None:
    """Smallest ``a`` with ``a*a + a + 1 = 0 (mod d)`` and ``a != 1 (mod d)``.

    ``a = 1`` only solves the congruence for ``d = 3`` and there gives the
    identity matrix, so it is excluded.
    """
    for a in range(d):
        if (a * a + a + 1) % d == 0 and a % d != 1 % d:
            return a
    return None


def unity_cube_root_construct(d: int) -> int | None:
    """Primitive-root construction per prime power, glued by CRT."""
    if not diag_conditions(d):
        return None
    residues, moduli = [], []
    for p, n in factorize(d):
        pn = p**n
        if p == 3:
            residues.append(1)
            moduli.append(3)
            continue
        k = (p - 1) // 3
        g = primitive_root(p, max(n, 2))
        residues.append(pow(g, k * p ** (n - 1), pn))
        moduli.append(pn)
    return crt(residues, moduli)


SCAN_LIMIT = 1000


def solve_unity_cube_root(d: int) -> int | None:
    """Nontrivial solution of ``a*a + a + 1 = 0 (mod d)`` or ``None``."""
    if d < 2:
        return None
    if d < SCAN_LIMIT:
        return unity_cube_root_scan(d)
    return unity_cube_root_construct(d)
