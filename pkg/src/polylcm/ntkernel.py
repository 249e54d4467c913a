"""Prime generation, p-adic valuations, integer factoring, prime log-sums.

Everything here is exact integer arithmetic except the two floating
log-sums, which accumulate in ascending prime order (error budget ~1e-9
relative per 1e6 terms, so far below the 1e-4 tolerances used by tests).

Factoring strategy: trial division by primes <= 1e5, then Brent-cycle
Pollard rho with deterministic Miller-Rabin certification.  Inputs are
capped at |m| < 2**128; sequence values at desk scale stay well below.
"""

from __future__ import annotations

import math
import random
from bisect import bisect_right
from dataclasses import dataclass
from functools import reduce

import numpy as np

from .errors import ResourceLimitError, UnsupportedSizeError

# Hard cap on sieve size; a limit above this raises instead of swapping.
SIEVE_LIMIT_MAX = 1 << 27

FACTOR_INPUT_MAX = 1 << 128

_TRIAL_DIVISION_BOUND = 100_000

_SEGMENT = 1 << 17

# Miller-Rabin with these fixed bases is a proven primality test for all
# n < 3.317e24 (Sorenson-Webster), which covers the 64-bit range with room.
_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)
_MR_PROVEN_BOUND = 3_317_044_064_679_887_385_961_981


@dataclass(frozen=True)
class PrimeTable:
    """Immutable sorted run of all primes <= limit; safe to share."""

    limit: int
    primes: tuple[int, ...]

    def __len__(self) -> int:
        return len(self.primes)

    def __iter__(self):
        return iter(self.primes)

    def __getitem__(self, i):
        return self.primes[i]

    def __contains__(self, n: int) -> bool:
        i = bisect_right(self.primes, n) - 1
        return i >= 0 and self.primes[i] == n

    def upto(self, n: int) -> tuple[int, ...]:
        """Primes <= n (requires n <= limit)."""
        if n > self.limit:
            raise ValueError(f"table only covers primes <= {self.limit}")
        return self.primes[: bisect_right(self.primes, n)]


@dataclass(frozen=True)
class Factorization:
    """|value| = prod p**e with primes strictly increasing."""

    value: int
    factors: tuple[tuple[int, int], ...]

    def product(self) -> int:
        return reduce(lambda acc, pe: acc * pe[0] ** pe[1], self.factors, 1)

    def primes(self) -> tuple[int, ...]:
        return tuple(p for p, _ in self.factors)

    def divisors(self) -> list[int]:
        """All positive divisors of |value|, sorted."""
        divs = [1]
        for p, e in self.factors:
            divs = [d * p**k for d in divs for k in range(e + 1)]
        return sorted(divs)


def _plain_sieve(limit: int) -> bytearray:
    flags = bytearray(b"\x01") * (limit + 1)
    flags[0:2] = b"\x00\x00"
    for p in range(2, math.isqrt(limit) + 1):
        if flags[p]:
            start = p * p
            flags[start :: p] = b"\x00" * ((limit - start) // p + 1)
    return flags


def _sieve_list(limit: int) -> list[int]:
    # Segmented: base primes to sqrt(limit), then fixed-size windows.
    root = math.isqrt(limit)
    base_flags = _plain_sieve(root)
    base = [p for p in range(2, root + 1) if base_flags[p]]
    primes = list(base)
    low = root + 1
    while low <= limit:
        high = min(low + _SEGMENT - 1, limit)
        flags = bytearray(b"\x01") * (high - low + 1)
        for p in base:
            start = max(p * p, (low + p - 1) // p * p)
            if start > high:
                continue
            flags[start - low :: p] = b"\x00" * ((high - start) // p + 1)
        primes.extend(n for n in range(low, high + 1) if flags[n - low])
        low = high + 1
    return primes


_shared_table: PrimeTable | None = None


def sieve_primes(limit: int) -> PrimeTable:
    """All primes <= limit.  Results are cached and shared (immutable)."""
    if limit < 2:
        raise ValueError(f"sieve limit must be >= 2, got {limit}")
    if limit > SIEVE_LIMIT_MAX:
        raise ResourceLimitError(f"sieve limit {limit} exceeds budget {SIEVE_LIMIT_MAX}")
    global _shared_table
    if _shared_table is not None and _shared_table.limit >= limit:
        return PrimeTable(limit, _shared_table.upto(limit))
    table = PrimeTable(limit, tuple(_sieve_list(limit)))
    _shared_table = table
    return table


def nu(p: int, m: int) -> int:
    """p-adic valuation: the largest k with p**k | m.  Requires m != 0."""
    if m == 0:
        raise ValueError("valuation of 0 is undefined")
    if p < 2:
        raise ValueError(f"p must be a prime >= 2, got {p}")
    m = abs(m)
    k = 0
    while m % p == 0:
        m //= p
        k += 1
    return k


def _mr_witness(n: int, a: int, d: int, s: int) -> bool:
    # True when 'a' certifies compositeness.
    x = pow(a, d, n)
    if x == 1 or x == n - 1:
        return False
    for _ in range(s - 1):
        x = x * x % n
        if x == n - 1:
            return False
    return True


def _jacobi(a: int, n: int) -> int:
    # n odd positive
    a %= n
    result = 1
    while a:
        while a % 2 == 0:
            a //= 2
            if n % 8 in (3, 5):
                result = -result
        a, n = n, a
        if a % 4 == 3 and n % 4 == 3:
            result = -result
        a %= n
    return result if n == 1 else 0


def _strong_lucas_prp(n: int) -> bool:
    # Selfridge parameter choice; n odd, not a perfect square.
    D = 5
    while _jacobi(D, n) != -1:
        D = -(D + 2) if D > 0 else -(D - 2)
    Q = (1 - D) // 4
    d = n + 1
    s = 0
    while d % 2 == 0:
        d //= 2
        s += 1
    # Lucas sequence by binary ladder on index d (P = 1).
    U, V, qk = 1, 1, Q % n
    for bit in bin(d)[3:]:
        U = U * V % n
        V = (V * V - 2 * qk) % n
        qk = qk * qk % n
        if bit == "1":
            U, V = (U + V) % n, (V + D * U) % n
            if U % 2:
                U += n
            if V % 2:
                V += n
            U, V = U // 2 % n, V // 2 % n
            qk = qk * Q % n
    if U == 0 or V == 0:
        return True
    for _ in range(s - 1):
        V = (V * V - 2 * qk) % n
        if V == 0:
            return True
        qk = qk * qk % n
    return False


def is_prime(n: int) -> bool:
    """Deterministic below 3.3e24 (fixed Miller-Rabin bases); above that a
    strong BPSW certificate (MR base set + strong Lucas) up to 2**128."""
    if n < 2:
        return False
    for p in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        if n % p == 0:
            return n == p
    d = n - 1
    s = 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _MR_BASES:
        if _mr_witness(n, a, d, s):
            return False
    if n < _MR_PROVEN_BOUND:
        return True
    if math.isqrt(n) ** 2 == n:
        return False
    return _strong_lucas_prp(n)


def _rho_brent(n: int, rng: random.Random) -> int:
    # Nontrivial factor of odd composite n.
    while True:
        y = rng.randrange(1, n)
        c = rng.randrange(1, n)
        m = 128
        g = r = q = 1
        x = ys = y
        while g == 1:
            x = y
            for _ in range(r):
                y = (y * y + c) % n
            k = 0
            while k < r and g == 1:
                ys = y
                for _ in range(min(m, r - k)):
                    y = (y * y + c) % n
                    q = q * abs(x - y) % n
                g = math.gcd(q, n)
                k += m
            r <<= 1
        if g == n:
            g = 1
            while g == 1:
                ys = (ys * ys + c) % n
                g = math.gcd(abs(x - ys), n)
        if g != n:
            return g


def factor(m: int) -> Factorization:
    """Complete factorization of |m| with certified prime factors."""
    if m == 0:
        raise ValueError("cannot factor 0")
    if abs(m) >= FACTOR_INPUT_MAX:
        raise UnsupportedSizeError(f"|m| >= 2**128 unsupported (got {abs(m).bit_length()} bits)")
    n = abs(m)
    counts: dict[int, int] = {}
    if n > 1:
        for p in sieve_primes(_TRIAL_DIVISION_BOUND):
            if p * p > n:
                break
            while n % p == 0:
                counts[p] = counts.get(p, 0) + 1
                n //= p
        if n > 1:
            if n < _TRIAL_DIVISION_BOUND * _TRIAL_DIVISION_BOUND or is_prime(n):
                # below the square of the trial bound the cofactor is prime
                counts[n] = counts.get(n, 0) + 1
            else:
                stack = [n]
                rng = random.Random(n ^ 0x9E3779B97F4A7C15)
                while stack:
                    x = stack.pop()
                    if is_prime(x):
                        counts[x] = counts.get(x, 0) + 1
                        continue
                    d = _rho_brent(x, rng)
                    stack.append(d)
                    stack.append(x // d)
    return Factorization(m, tuple(sorted(counts.items())))


def mertens_sum(N: int) -> float:
    """sum over primes p <= N of ln(p)/p, ascending."""
    if N < 2:
        raise ValueError(f"N must be >= 2, got {N}")
    return sum(math.log(p) / p for p in sieve_primes(N))


def divisor_logsum(k: int) -> float:
    """sum of ln(p)/p over the distinct prime divisors of k (|k| > 1)."""
    if abs(k) <= 1:
        raise ValueError(f"|k| must be > 1, got {k}")
    return sum(math.log(p) / p for p in factor(k).primes())


def divisor_logsum_table(limit: int) -> np.ndarray:
    """divisor_logsum(k) for every 0 <= k <= limit in one sieve pass.

    Entries 0 and 1 are 0.0 (divisor_logsum is undefined there).  Used for
    range-exhaustive bound checks; spot-agreement with divisor_logsum is
    part of the test suite.
    """
    if limit < 2:
        raise ValueError(f"limit must be >= 2, got {limit}")
    out = np.zeros(limit + 1, dtype=np.float64)
    for p in sieve_primes(limit):
        out[p::p] += math.log(p) / p
    return out
