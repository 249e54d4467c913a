"""Exact integer-polynomial arithmetic for the shift family f_a = f0 - a.

Covers discriminants via the subresultant form of Res(f, f'), exact
irreducibility over Q (complete for degree <= 10), the divided difference
G(m, n) = (f0(m) - f0(n)) / (m - n), and the zero-free threshold C1 for G.

Irreducibility pipeline (all stages exact; no probabilistic answers):
  stage 0  binomial criterion for x^d - c (perfect-power / -4b^4 test)
  stage 1  rational-root search (settles degree <= 3 outright)
  stage 2  factor-degree patterns modulo primes not dividing lc*disc;
           an irreducible image, or incompatible subset sums, certify
           irreducibility
  stage 3  Kronecker interpolation search over the surviving factor
           degrees, pruned with a Mignotte coefficient bound
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from fractions import Fraction
from functools import reduce
from typing import NamedTuple, Union

from . import ntkernel
from .errors import InternalConsistencyError


@dataclass(frozen=True)
class IntPoly:
    """Dense integer polynomial, coefficients ascending (c0 ... cd)."""

    coeffs: tuple[int, ...]

    def __post_init__(self):
        c = tuple(int(x) for x in self.coeffs)
        while c and c[-1] == 0:
            c = c[:-1]
        object.__setattr__(self, "coeffs", c)

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1  # -1 for the zero polynomial

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def lc(self) -> int:
        if self.is_zero:
            raise ValueError("zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    @property
    def is_monic(self) -> bool:
        return not self.is_zero and self.coeffs[-1] == 1

    def __call__(self, n: int) -> int:
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * n + c
        return acc

    def __add__(self, other: "IntPoly") -> "IntPoly":
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        return IntPoly(tuple(x + y for x, y in itertools.zip_longest(a, b, fillvalue=0)))

    def __neg__(self) -> "IntPoly":
        return IntPoly(tuple(-c for c in self.coeffs))

    def __sub__(self, other: "IntPoly") -> "IntPoly":
        return self + (-other)

    def __mul__(self, other: "IntPoly") -> "IntPoly":
        if self.is_zero or other.is_zero:
            return IntPoly(())
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return IntPoly(tuple(out))

    def scale(self, k: int) -> "IntPoly":
        return IntPoly(tuple(k * c for c in self.coeffs))

    def derivative(self) -> "IntPoly":
        return IntPoly(tuple(i * c for i, c in enumerate(self.coeffs) if i))

    def content(self) -> int:
        if self.is_zero:
            return 0
        return reduce(math.gcd, (abs(c) for c in self.coeffs))

    def primitive_part(self) -> "IntPoly":
        c = self.content()
        if c in (0, 1):
            return self
        return IntPoly(tuple(x // c for x in self.coeffs))

    @classmethod
    def parse(cls, text: str) -> "IntPoly":
        """Ascending comma-separated coefficients, e.g. "0,2,0,1" = x^3+2x."""
        try:
            return cls(tuple(int(t.strip()) for t in text.split(",")))
        except ValueError as exc:
            raise ValueError(f"bad polynomial text {text!r}: {exc}") from None

    def format(self) -> str:
        return ",".join(str(c) for c in self.coeffs)


@dataclass(frozen=True)
class ShiftedPoly:
    """f_a(x) = f0(x) - a."""

    base: IntPoly
    shift: int

    @property
    def degree(self) -> int:
        return self.base.degree

    def __call__(self, n: int) -> int:
        return self.base(n) - self.shift

    def to_poly(self) -> IntPoly:
        c = list(self.base.coeffs) or [0]
        c[0] -= self.shift
        return IntPoly(tuple(c))


PolyLike = Union[IntPoly, ShiftedPoly]


def as_poly(f: PolyLike) -> IntPoly:
    return f.to_poly() if isinstance(f, ShiftedPoly) else f


def _prem(A: IntPoly, B: IntPoly) -> IntPoly:
    # Pseudo-remainder: lc(B)^(degA-degB+1) * A = Q*B + R with deg R < deg B.
    dB = B.degree
    lcB = B.lc
    R = A
    e = A.degree - dB + 1
    while not R.is_zero and R.degree >= dB:
        shift = R.degree - dB
        S = IntPoly((0,) * shift + B.coeffs).scale(R.lc)
        R = R.scale(lcB) - S
        e -= 1
    if e > 0:
        R = R.scale(lcB**e)
    return R


def resultant(f: IntPoly, g: IntPoly) -> int:
    """Res(f, g) by the subresultant polynomial remainder sequence."""
    if f.is_zero or g.is_zero:
        return 0
    A, B = f, g
    s = 1
    if A.degree < B.degree:
        if A.degree % 2 == 1 and B.degree % 2 == 1:
            s = -1
        A, B = B, A
    if A.degree == 0:
        return 1
    ca, cb = A.content(), B.content()
    A, B = A.primitive_part(), B.primitive_part()
    t = ca**B.degree * cb**A.degree
    if B.degree == 0:
        return s * t * B.coeffs[0] ** A.degree
    g_, h = 1, 1
    while True:
        delta = A.degree - B.degree
        if A.degree % 2 == 1 and B.degree % 2 == 1:
            s = -s
        R = _prem(A, B)
        if R.is_zero:
            return 0  # nontrivial gcd
        A = B
        B = IntPoly(tuple(c // (g_ * h**delta) for c in R.coeffs))
        g_ = A.lc
        h = h if delta == 0 else g_**delta // h ** (delta - 1)
        if B.degree == 0:
            break
    return s * t * (B.coeffs[0] ** A.degree // h ** (A.degree - 1))


def discriminant(f: PolyLike) -> int:
    """disc(f) = (-1)^(d(d-1)/2) * Res(f, f') / lc(f), exactly."""
    f = as_poly(f)
    d = f.degree
    if d < 2:
        raise ValueError(f"discriminant needs degree >= 2, got {d}")
    res = resultant(f, f.derivative())
    sign = -1 if (d * (d - 1) // 2) % 2 else 1
    return sign * res // f.lc


def is_primitive(f: IntPoly) -> bool:
    """True iff no prime divides all coefficients."""
    if f.is_zero:
        raise ValueError("primitivity of the zero polynomial is undefined")
    return f.content() == 1


def divided_difference(f0: IntPoly, m: int, n: int) -> int:
    """G(m, n) = (f0(m) - f0(n)) / (m - n); always an exact integer."""
    if m == n:
        raise ValueError("divided difference needs m != n")
    num = f0(m) - f0(n)
    q, r = divmod(num, m - n)
    if r:
        raise InternalConsistencyError("divided difference not integral")
    return q


class FindC1Result(NamedTuple):
    scan_bound: int
    analytic_bound: int


def find_C1(f0: IntPoly, scan_limit: int) -> FindC1Result:
    """Zero-free threshold for G: scan_bound is the largest n <= scan_limit
    with G(m, n) = 0 for some 1 <= m < n (0 if none); analytic_bound is the
    smallest n0 with n0^(d-1) > sum_j |c_j| * j * n0^(j-1) over 1 <= j < d,
    which suffices for G != 0 whenever max(m, n) exceeds it."""
    if not f0.is_monic or f0.degree < 2:
        raise ValueError("find_C1 requires a monic polynomial of degree >= 2")
    d = f0.degree
    inner = tuple(f0.coeffs[1:d])  # c_1 ... c_{d-1}; c_0 never enters G
    n0 = 1
    while n0 ** (d - 1) <= sum(abs(c) * j * n0 ** (j - 1) for j, c in enumerate(inner, start=1)):
        n0 += 1
    values = [f0(n) for n in range(0, scan_limit + 1)]
    scan_bound = 0
    for n in range(2, scan_limit + 1):
        fn = values[n]
        for m in range(1, n):
            if values[m] == fn:  # G(m, n) = 0 iff f0(m) = f0(n)
                scan_bound = n
                if n > n0:
                    raise InternalConsistencyError(
                        f"G({m},{n}) = 0 beyond the analytic bound {n0}"
                    )
    return FindC1Result(scan_bound, n0)


# ---------------------------------------------------------------------------
# Irreducibility over Q
# ---------------------------------------------------------------------------


def _integer_nth_root(n: int, k: int) -> int:
    # floor(n ** (1/k)) for n >= 0, by integer Newton iteration
    if n < 0:
        raise ValueError
    if n in (0, 1) or k == 1:
        return n
    r = 1 << ((n.bit_length() + k - 1) // k)
    while True:
        nr = ((k - 1) * r + n // r ** (k - 1)) // k
        if nr >= r:
            break
        r = nr
    while r**k > n:
        r -= 1
    while (r + 1) ** k <= n:
        r += 1
    return r


def _perfect_power_root(c: int, t: int) -> int | None:
    # b with b**t == c, or None.
    if c == 0:
        return 0
    if t % 2 == 0 and c < 0:
        return None
    r = _integer_nth_root(abs(c), t)
    if r**t != abs(c):
        return None
    return -r if c < 0 else r


def _binomial_irreducible(d: int, c: int) -> bool:
    # Capelli: x^d - c irreducible over Q iff c is not a p-th power for any
    # prime p | d, and (when 4 | d) c != -4 b^4.
    for t in set(ntkernel.factor(d).primes()):
        if _perfect_power_root(c, t) is not None:
            return False
    if d % 4 == 0:
        if c < 0 and (-c) % 4 == 0 and _perfect_power_root((-c) // 4, 4) is not None:
            return False
    return True


def _has_rational_root(f: IntPoly) -> bool:
    # f primitive with f(0) != 0.
    c0 = abs(f.coeffs[0])
    lc = abs(f.lc)
    denoms = ntkernel.factor(lc).divisors() if lc > 1 else [1]
    d = f.degree
    for u in ntkernel.factor(c0).divisors():
        for v in denoms:
            if math.gcd(u, v) != 1:
                continue
            # v^d * f(±u/v) as an exact integer
            for uu in (u, -u):
                if sum(c * uu**i * v ** (d - i) for i, c in enumerate(f.coeffs)) == 0:
                    return True
    return False


def _poly_mod_p(coeffs: tuple[int, ...], p: int) -> list[int]:
    out = [c % p for c in coeffs]
    while out and out[-1] == 0:
        out.pop()
    return out


def _pm_trim(a: list[int]) -> list[int]:
    while a and a[-1] == 0:
        a.pop()
    return a


def _pm_mul(a: list[int], b: list[int], p: int) -> list[int]:
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] = (out[i + j] + x * y) % p
    return _pm_trim(out)


def _pm_rem(a: list[int], b: list[int], p: int) -> list[int]:
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
    return _pm_trim(a)


def _pm_monic(a: list[int], p: int) -> list[int]:
    inv = pow(a[-1], p - 2, p)
    return [c * inv % p for c in a]


def _pm_gcd(a: list[int], b: list[int], p: int) -> list[int]:
    a, b = _pm_trim(list(a)), _pm_trim(list(b))
    while b:
        r = _pm_rem(a, _pm_monic(b, p), p)
        a, b = b, r
    return _pm_monic(a, p) if a else a


def _pm_powmod(base: list[int], e: int, mod: list[int], p: int) -> list[int]:
    # mod monic, deg >= 1
    result = [1]
    base = _pm_rem(list(base), mod, p)
    while e:
        if e & 1:
            result = _pm_rem(_pm_mul(result, base, p), mod, p)
        e >>= 1
        if e:
            base = _pm_rem(_pm_mul(base, base, p), mod, p)
    return result


def _degree_pattern_mod_p(f: IntPoly, p: int) -> list[int] | None:
    """Multiset of irreducible-factor degrees of f mod p, or None when the
    reduction is unusable (degree drop or non-squarefree image)."""
    fb = _poly_mod_p(f.coeffs, p)
    if len(fb) - 1 != f.degree:
        return None
    fb = _pm_monic(fb, p)
    deriv = _pm_trim([i * c % p for i, c in enumerate(fb)][1:])
    if not deriv or len(_pm_gcd(fb, deriv, p)) != 1:
        return None
    pattern = []
    v = fb
    h = [0, 1]  # x
    i = 0
    while len(v) - 1 >= 2 * (i + 1):
        i += 1
        h = _pm_powmod(h, p, v, p)
        delta = _pm_trim([(x - y) % p for x, y in itertools.zip_longest(h, [0, 1], fillvalue=0)])
        g = _pm_gcd(delta, v, p)
        if len(g) > 1:
            deg_g = len(g) - 1
            pattern.extend([i] * (deg_g // i))
            v = _pm_quo(v, g, p)
            h = _pm_rem(h, v, p) if len(v) > 1 else []
    if len(v) - 1 > 0:
        pattern.append(len(v) - 1)
    return sorted(pattern)


def _pm_quo(a: list[int], b: list[int], p: int) -> list[int]:
    # exact quotient, b monic divides a
    a = list(a)
    db = len(b) - 1
    q = [0] * (len(a) - db)
    for i in range(len(q) - 1, -1, -1):
        c = a[i + db]
        q[i] = c
        if c:
            for j, y in enumerate(b):
                a[i + j] = (a[i + j] - c * y) % p
    return _pm_trim(q)


def _subset_sums(pattern: list[int], d: int) -> set[int]:
    bits = 1
    for deg in pattern:
        bits |= bits << deg
    return {k for k in range(1, d) if bits >> k & 1}


_PATTERN_PRIME_COUNT = 20


def _lagrange_basis(xs: list[int]) -> list[list[Fraction]]:
    basis = []
    for i, xi in enumerate(xs):
        num = [Fraction(1)]
        den = Fraction(1)
        for j, xj in enumerate(xs):
            if j == i:
                continue
            num = [
                (num[k - 1] if k else Fraction(0)) - xj * (num[k] if k < len(num) else Fraction(0))
                for k in range(len(num) + 1)
            ]
            den *= xi - xj
        basis.append([c / den for c in num])
    return basis


def _divides(g: IntPoly, f: IntPoly) -> bool:
    # over Q; g nonzero
    rem = [Fraction(c) for c in f.coeffs]
    gq = [Fraction(c) for c in g.coeffs]
    dg = len(gq) - 1
    while len(rem) - 1 >= dg:
        c = rem[-1] / gq[-1]
        off = len(rem) - 1 - dg
        for j, y in enumerate(gq):
            rem[off + j] -= c * y
        rem.pop()
        while rem and rem[-1] == 0:
            rem.pop()
    return not rem


def _kronecker_has_factor_of_degree(f: IntPoly, k: int) -> bool:
    # Complete search for a degree-<=k factor (k >= 2 here; linear factors
    # were excluded by the rational-root stage).
    xs = []
    x = 0
    while len(xs) < k + 1:
        if f(x) != 0:
            xs.append(x)
        x = -x if x > 0 else -x + 1
    norm2 = math.sqrt(sum(c * c for c in f.coeffs))
    height = math.comb(k, k // 2) * norm2 * abs(f.lc)  # Mignotte factor bound
    divisor_lists = []
    for i, xi in enumerate(xs):
        cap = height * sum(abs(xi) ** j for j in range(k + 1))
        divs = [d for d in ntkernel.factor(f(xi)).divisors() if d <= cap]
        signed = divs if i == 0 else [s * d for d in divs for s in (1, -1)]
        divisor_lists.append(signed)
    basis = _lagrange_basis(xs)
    for combo in itertools.product(*divisor_lists):
        coeffs = [Fraction(0)] * (k + 1)
        for val, b in zip(combo, basis):
            for idx, c in enumerate(b):
                coeffs[idx] += val * c
        if any(c.denominator != 1 for c in coeffs):
            continue
        g = IntPoly(tuple(int(c) for c in coeffs))
        if 0 < g.degree <= k and _divides(g, f):
            return True
    return False


def is_irreducible_over_Q(f: IntPoly) -> bool:
    """Exact irreducibility over the rationals (complete for degree <= 10)."""
    d = f.degree
    if d < 1:
        raise ValueError("irreducibility needs degree >= 1")
    if not is_primitive(f):
        raise ValueError("irreducibility test requires a primitive polynomial")
    if d == 1:
        return True
    if f.coeffs[0] == 0:
        return False  # x divides
    if f.lc == 1 and all(c == 0 for c in f.coeffs[1:d]):
        return _binomial_irreducible(d, -f.coeffs[0])
    if _has_rational_root(f):
        return False
    if d <= 3:
        return True  # reducible quadratic/cubic must have a rational root
    disc = discriminant(f)
    if disc == 0:
        return False  # repeated factor
    candidates = set(range(2, d // 2 + 1))
    used = 0
    for p in ntkernel.sieve_primes(5000):
        if used >= _PATTERN_PRIME_COUNT or not candidates:
            break
        if f.lc % p == 0 or disc % p == 0:
            continue
        pattern = _degree_pattern_mod_p(f, p)
        if pattern is None:
            continue
        used += 1
        if pattern == [d]:
            return True
        candidates &= _subset_sums(pattern, d)
        candidates = {k for k in candidates if k <= d // 2}
    if not candidates:
        return True
    for k in sorted(candidates):
        if _kronecker_has_factor_of_degree(f, k):
            return False
    return True
