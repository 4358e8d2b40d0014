"""Integer arithmetic helpers: divisor sums over gated cofactors, primality,
Moebius, Bernoulli numbers.

The central object is ``divisor_sum_general``: a weighted divisor power sum
where only divisors whose cofactor lands in a chosen set of residue classes
contribute, and where a sign ``eps`` in {+1, -1} is raised to the divisor.
Everything else here is a thin specialization or a standard utility.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import cache


@dataclass(frozen=True)
class ResidueClassSet:
    """A non-empty set of residues modulo a fixed positive modulus."""

    modulus: int
    residues: frozenset[int]

    def __post_init__(self) -> None:
        if self.modulus < 1:
            raise ValueError(f"modulus must be positive, got {self.modulus}")
        if not isinstance(self.residues, frozenset):
            object.__setattr__(self, "residues", frozenset(self.residues))
        if not self.residues:
            raise ValueError("residue set must be non-empty")
        for r in self.residues:
            if not 0 <= r < self.modulus:
                raise ValueError(f"residue {r} out of range for modulus {self.modulus}")

    def __contains__(self, n: int) -> bool:
        return n % self.modulus in self.residues

    @property
    def is_symmetric(self) -> bool:
        """True when the set is closed under r -> -r mod N."""
        return all((-r) % self.modulus in self.residues for r in self.residues)


def residue_classes(modulus: int, residues) -> ResidueClassSet:
    return ResidueClassSet(modulus, frozenset(residues))


def units_mod(modulus: int) -> ResidueClassSet:
    """Residues coprime to the modulus.  For modulus 1 this is {0}."""
    if modulus < 1:
        raise ValueError(f"modulus must be positive, got {modulus}")
    return ResidueClassSet(
        modulus, frozenset(r for r in range(modulus) if math.gcd(r, modulus) == 1)
    )


def _check_eps(eps: int) -> int:
    if eps not in (1, -1):
        raise ValueError(f"eps must be +1 or -1, got {eps!r}")
    return eps


def divisors(n: int) -> list[int]:
    """All positive divisors of n, ascending."""
    if n < 1:
        raise ValueError(f"n must be positive, got {n}")
    small, large = [], []
    for d in range(1, math.isqrt(n) + 1):
        if n % d == 0:
            small.append(d)
            if d != n // d:
                large.append(n // d)
    return small + large[::-1]


def divisor_sum_general(classes: ResidueClassSet, eps: int, k: int, n: int) -> int:
    """Sum of eps**d * d**k over divisors d of n whose cofactor n/d lies in
    the given residue classes.

    Returns 0 when no divisor qualifies; n must be positive, k non-negative.
    """
    _check_eps(eps)
    if k < 0:
        raise ValueError(f"power k must be non-negative, got {k}")
    if n < 1:
        raise ValueError(f"n must be positive, got {n}")
    total = 0
    for d in divisors(n):
        if (n // d) in classes:
            term = d**k
            total += -term if (eps == -1 and d % 2 == 1) else term
    return total


def sigma(n: int, k: int = 1) -> int:
    """Classical divisor power sum sigma_k(n)."""
    if n < 1:
        raise ValueError(f"n must be positive, got {n}")
    return sum(d**k for d in divisors(n))


def sigma_odd_cofactor(n: int, k: int) -> int:
    """Divisor power sum restricted to divisors with odd cofactor."""
    return sum(d**k for d in divisors(n) if (n // d) % 2 == 1)


def sigma_gated(n: int, k: int, a: int, modulus: int) -> int:
    """sigma_k(n) when n = a mod modulus, else 0."""
    return sigma(n, k) if n % modulus == a % modulus else 0


def sigma_coprime_cofactor(n: int, k: int, modulus: int) -> int:
    """Divisor power sum restricted to divisors whose cofactor is coprime
    to the modulus."""
    return sum(d**k for d in divisors(n) if math.gcd(n // d, modulus) == 1)


def is_prime(n: int) -> bool:
    """Trial division by 2, 3 and then 6k+-1 up to sqrt(n)."""
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0 or n % 3 == 0:
        return False
    f = 5
    while f * f <= n:
        if n % f == 0 or n % (f + 2) == 0:
            return False
        f += 6
    return True


def primes_up_to(limit: int) -> list[int]:
    """Sieve of Eratosthenes."""
    if limit < 2:
        return []
    flags = bytearray([1]) * (limit + 1)
    flags[0] = flags[1] = 0
    for p in range(2, math.isqrt(limit) + 1):
        if flags[p]:
            flags[p * p :: p] = bytearray(len(range(p * p, limit + 1, p)))
    return [i for i, f in enumerate(flags) if f]


def factorize(n: int) -> dict[int, int]:
    """Prime factorization as {prime: exponent}."""
    if n < 1:
        raise ValueError(f"n must be positive, got {n}")
    out: dict[int, int] = {}
    for p in (2, 3):
        while n % p == 0:
            out[p] = out.get(p, 0) + 1
            n //= p
    f = 5
    while f * f <= n:
        for p in (f, f + 2):
            while n % p == 0:
                out[p] = out.get(p, 0) + 1
                n //= p
        f += 6
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return out


def moebius(n: int) -> int:
    fac = factorize(n)
    if any(e > 1 for e in fac.values()):
        return 0
    return -1 if len(fac) % 2 else 1


def is_power_of(n: int, p: int) -> bool:
    """True when n = p**l for some l >= 1, by repeated exact division."""
    if n < 2 or p < 2:
        return False
    while n % p == 0:
        n //= p
    return n == 1


@cache
def bernoulli(k: int) -> Fraction:
    """Bernoulli number B_k (B_1 = -1/2 convention), via the defining
    recurrence sum(binom(m+1, j) * B_j for j <= m) = 0.

    Only even k (and the seeds k = 0, 1) are meaningful here; odd k > 1 is
    rejected rather than silently returning 0.
    """
    if k < 0:
        raise ValueError(f"k must be non-negative, got {k}")
    if k % 2 == 1 and k > 1:
        raise ValueError(f"odd Bernoulli index {k} rejected (would be zero)")
    if k == 0:
        return Fraction(1)
    acc = Fraction(0)
    for j in range(k):
        if j % 2 == 1 and j > 1:
            continue
        acc += math.comb(k + 1, j) * bernoulli(j)
    return -acc / (k + 1)
