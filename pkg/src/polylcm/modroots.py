"""Roots of f_a modulo p and p^k, root counts rho/sigma, Hensel lifting,
and complete exponential sums with the Weil bound.

Root finding mod p is brute-force enumeration below 2**14 (vectorized);
for larger p it extracts the linear part of f via gcd(x^p - x, f) and
splits it with seeded equal-degree splitting, so cost is O(d^2 log p)
per prime instead of O(p).  Identical seeds give identical transcripts.
"""

from __future__ import annotations

import cmath
import math
import random
from dataclasses import dataclass

import numpy as np

from .errors import DegenerateReductionError, InternalConsistencyError, SingularRootError
from .polyring import IntPoly, PolyLike, ShiftedPoly, as_poly, discriminant

BRUTE_FORCE_LIMIT = 1 << 14

DEFAULT_SEED = 0x5EED_1E55_C0FFEE

_NUMPY_CUTOFF = 512


@dataclass(frozen=True)
class RootSetModPk:
    """Complete duplicate-free set of roots of f mod p**k."""

    p: int
    k: int
    roots: tuple[int, ...]

    @property
    def modulus(self) -> int:
        return self.p**self.k

    @property
    def count(self) -> int:
        return len(self.roots)


@dataclass(frozen=True)
class SigmaValue:
    """sigma(a; p) = rho(a; p) - 1, the mean-zero root-count fluctuation."""

    a: int
    p: int
    sigma: int


def _coeffs_mod(f: PolyLike, p: int) -> list[int]:
    return [c % p for c in as_poly(f).coeffs]


def _mix64(*parts: int) -> int:
    h = 0xCBF29CE484222325
    for v in parts:
        v &= (1 << 64) - 1
        while True:
            h ^= v & 0xFFFFFFFFFFFFFFFF
            h = h * 0x100000001B3 % (1 << 64)
            v >>= 64
            if not v:
                break
    return h


def _brute_roots(coeffs: list[int], p: int) -> list[int]:
    if p <= _NUMPY_CUTOFF:
        out = []
        for x in range(p):
            acc = 0
            for c in reversed(coeffs):
                acc = (acc * x + c) % p
            if acc == 0:
                out.append(x)
        return out
    xs = np.arange(p, dtype=np.int64)
    acc = np.zeros(p, dtype=np.int64)
    for c in reversed(coeffs):
        acc = (acc * xs + c) % p
    return [int(x) for x in np.nonzero(acc == 0)[0]]


def _fq_trim(a: list[int]) -> list[int]:
    while a and a[-1] == 0:
        a.pop()
    return a


def _fq_mul(a: list[int], b: list[int], p: int) -> list[int]:
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] = (out[i + j] + x * y) % p
    return _fq_trim(out)


def _fq_rem(a: list[int], b: list[int], p: int) -> list[int]:
    # b monic
    a = list(a)
    db = len(b) - 1
    while len(a) - 1 >= db:
        c = a[-1]
        if c:
            off = len(a) - 1 - db
            for j, y in enumerate(b):
                a[off + j] = (a[off + j] - c * y) % p
        a.pop()
    return _fq_trim(a)


def _fq_quo(a: list[int], b: list[int], p: int) -> list[int]:
    # exact quotient by monic b
    a = list(a)
    db = len(b) - 1
    q = [0] * (len(a) - db)
    for i in range(len(q) - 1, -1, -1):
        c = a[i + db]
        q[i] = c
        if c:
            for j, y in enumerate(b):
                a[i + j] = (a[i + j] - c * y) % p
    return _fq_trim(q)


def _fq_monic(a: list[int], p: int) -> list[int]:
    inv = pow(a[-1], p - 2, p)
    return [c * inv % p for c in a]


def _fq_gcd(a: list[int], b: list[int], p: int) -> list[int]:
    a, b = _fq_trim(list(a)), _fq_trim(list(b))
    while b:
        r = _fq_rem(a, _fq_monic(b, p), p)
        a, b = b, r
    return _fq_monic(a, p) if a else a


def _fq_powmod(base: list[int], e: int, mod: list[int], p: int) -> list[int]:
    result = [1]
    base = _fq_rem(list(base), mod, p)
    while e:
        if e & 1:
            result = _fq_rem(_fq_mul(result, base, p), mod, p)
        e >>= 1
        if e:
            base = _fq_rem(_fq_mul(base, base, p), mod, p)
    return result


def _cz_roots(coeffs: list[int], p: int, seed: int) -> list[int]:
    # p odd prime; coeffs mod p, not all zero.
    f = _fq_trim(list(coeffs))
    if len(f) <= 1:
        return []
    f = _fq_monic(f, p)
    xp = _fq_powmod([0, 1], p, f, p)
    lin = _fq_gcd(_fq_trim([(x - y) % p for x, y in _zip_pad(xp, [0, 1])]), f, p)
    if not lin or len(lin) == 1:
        return []
    rng = random.Random(_mix64(seed, p, *coeffs))
    roots: list[int] = []
    stack = [lin]
    while stack:
        h = stack.pop()
        deg = len(h) - 1
        if deg == 0:
            continue
        if deg == 1:
            roots.append(-h[0] % p)
            continue
        while True:
            delta = rng.randrange(p)
            w = _fq_powmod([delta, 1], (p - 1) // 2, h, p)
            w = _fq_trim([(w[0] - 1) % p] + w[1:]) if w else [p - 1]
            u = _fq_gcd(w, h, p)
            if 0 < len(u) - 1 < deg:
                stack.append(u)
                stack.append(_fq_quo(h, u, p))
                break
    return roots


def _zip_pad(a: list[int], b: list[int]):
    n = max(len(a), len(b))
    return zip(a + [0] * (n - len(a)), b + [0] * (n - len(b)))


def roots_mod_p(f: PolyLike, p: int, seed: int = DEFAULT_SEED) -> RootSetModPk:
    """All roots of f mod p.  Degenerate images (f == 0 mod p) raise with
    rho = p attached."""
    coeffs = _coeffs_mod(f, p)
    if not any(coeffs):
        raise DegenerateReductionError(p, rho=p)
    if p < BRUTE_FORCE_LIMIT:
        roots = _brute_roots(coeffs, p)
    else:
        roots = _cz_roots(coeffs, p, seed)
    return RootSetModPk(p, 1, tuple(sorted(roots)))


def rho(f: PolyLike, p: int, seed: int = DEFAULT_SEED) -> int:
    return roots_mod_p(f, p, seed).count


def sigma(f0: IntPoly, a: int, p: int, seed: int = DEFAULT_SEED) -> SigmaValue:
    """sigma(a; p) = rho(a; p) - 1; always in [-1, d-1] for monic f0."""
    if not f0.is_monic:
        raise ValueError("sigma requires a monic base polynomial")
    r = rho(ShiftedPoly(f0, a), p, seed)
    s = r - 1
    if not -1 <= s <= f0.degree - 1:
        raise InternalConsistencyError(f"sigma {s} outside [-1, d-1]")
    return SigmaValue(a, p, s)


def roots_mod_pk(f: PolyLike, p: int, k: int, seed: int = DEFAULT_SEED) -> RootSetModPk:
    """Roots of f mod p**k by level lifting; singular roots (p | disc) are
    handled by branching, so this works at discriminant primes too."""
    if k < 1:
        raise ValueError(f"k must be >= 1, got {k}")
    poly = as_poly(f)
    pk = p**k
    if not any(c % pk for c in poly.coeffs):
        raise DegenerateReductionError(p, rho=pk, message=f"polynomial vanishes mod {p}**{k}")
    level = list(roots_mod_p(poly, p, seed).roots)
    deriv = poly.derivative()
    pj = p
    for _ in range(1, k):
        nxt = []
        for r in level:
            fr = poly(r)
            fpr = deriv(r) % p
            if fpr:
                t = (-(fr // pj) * pow(fpr, p - 2, p)) % p
                nxt.append(r + pj * t)
            elif fr % (pj * p) == 0:
                nxt.extend(r + pj * t for t in range(p))
        level = nxt
        pj *= p
    return RootSetModPk(p, k, tuple(sorted(level)))


def count_roots_mod_pk(f: PolyLike, p: int, k: int, seed: int = DEFAULT_SEED) -> int:
    return roots_mod_pk(f, p, k, seed).count


def hensel_lift(f: ShiftedPoly, p: int, k: int, seed: int = DEFAULT_SEED) -> RootSetModPk:
    """Unique lift of each mod-p root to mod p**k; requires p to not divide
    the discriminant (all roots simple)."""
    if k < 1:
        raise ValueError(f"k must be >= 1, got {k}")
    poly = as_poly(f)
    if poly.degree >= 2 and discriminant(poly) % p == 0:
        raise SingularRootError(f"p = {p} divides disc; use count_roots_mod_pk")
    base = roots_mod_p(poly, p, seed)
    deriv = poly.derivative()
    lifted = []
    for r in base.roots:
        fpr_inv = pow(deriv(r) % p, p - 2, p)
        pj = p
        for _ in range(1, k):
            t = (-(poly(r) // pj) * fpr_inv) % p
            r += pj * t
            pj *= p
        lifted.append(r)
    if len(lifted) != base.count:
        raise InternalConsistencyError("Hensel lift changed the root count")
    return RootSetModPk(p, k, tuple(sorted(lifted)))


# ---------------------------------------------------------------------------
# Exponential sums
# ---------------------------------------------------------------------------


def _values_mod_p(f0: IntPoly, p: int) -> list[int]:
    coeffs = [c % p for c in f0.coeffs]
    if p < BRUTE_FORCE_LIMIT and p > _NUMPY_CUTOFF:
        xs = np.arange(p, dtype=np.int64)
        acc = np.zeros(p, dtype=np.int64)
        for c in reversed(coeffs):
            acc = (acc * xs + c) % p
        return acc.tolist()
    out = []
    for x in range(p):
        acc = 0
        for c in reversed(coeffs):
            acc = (acc * x + c) % p
        out.append(acc)
    return out


def weil_sum(f0: IntPoly, b: int, p: int) -> complex:
    """S(b, p) = sum over x mod p of exp(2 pi i b f0(x) / p)."""
    if not f0.is_monic:
        raise ValueError("weil_sum requires a monic polynomial")
    if not 0 <= b < p:
        raise ValueError(f"need 0 <= b < p, got b={b}")
    table = [cmath.exp(2j * math.pi * t / p) for t in range(p)]
    total = 0j
    for v in _values_mod_p(f0, p):
        total += table[b * v % p]
    return total


def weil_bound(d: int, p: int) -> float:
    """(d-1) sqrt(p): valid for primitive f0 of degree d at primes p > d."""
    return (d - 1) * math.sqrt(p)


def sigma_via_expsum(f0: IntPoly, a: int, p: int) -> float:
    """sigma(a; p) recovered from the exponential-sum identity
    (1/p) * sum_{t != 0} e(-at/p) * S(t, p); the imaginary part must vanish."""
    if f0.lc % p == 0:
        raise ValueError("p must not divide the leading coefficient")
    counts = np.bincount(np.array(_values_mod_p(f0, p), dtype=np.int64), minlength=p)
    omega = np.exp(2j * np.pi * np.arange(p) / p)
    ts = np.arange(1, p, dtype=np.int64)
    cs = np.arange(p, dtype=np.int64)
    s_t = omega[(ts[:, None] * cs[None, :]) % p] @ counts.astype(np.float64)
    val = complex(np.dot(omega[(-(a % p) * ts) % p], s_t)) / p
    if abs(val.imag) > 1e-6:
        raise InternalConsistencyError(f"imaginary part {val.imag} too large")
    return val.real


# ---------------------------------------------------------------------------
# Shared per-residue caches (sigma and root lookups depend only on a mod p)
# ---------------------------------------------------------------------------


class RootTable:
    """Lazy per-prime map f0(x) mod p -> preimages x; serves roots, rho and
    sigma for every shift a at lookup cost.  Build cost O(p) per prime, paid
    once per (f0, p); primes >= BRUTE_FORCE_LIMIT fall through to direct
    root extraction."""

    def __init__(self, f0: IntPoly, seed: int = DEFAULT_SEED):
        self.f0 = f0
        self.seed = seed
        self._tables: dict[int, dict[int, tuple[int, ...]]] = {}

    def _table(self, p: int) -> dict[int, tuple[int, ...]]:
        tab = self._tables.get(p)
        if tab is None:
            grouped: dict[int, list[int]] = {}
            for x, v in enumerate(_values_mod_p(self.f0, p)):
                grouped.setdefault(v, []).append(x)
            tab = {v: tuple(xs) for v, xs in grouped.items()}
            self._tables[p] = tab
        return tab

    def roots(self, a: int, p: int) -> tuple[int, ...]:
        if p >= BRUTE_FORCE_LIMIT:
            return roots_mod_p(ShiftedPoly(self.f0, a), p, self.seed).roots
        return self._table(p).get(a % p, ())

    def rho(self, a: int, p: int) -> int:
        return len(self.roots(a, p))

    def sigma(self, a: int, p: int) -> int:
        return self.rho(a, p) - 1
