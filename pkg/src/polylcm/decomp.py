"""Exact L_a(N) by two independent engines and its term decomposition.

log L splits exactly (an identity of the prime ledgers) as

    log L = log P + sum_{p<=N} beta_p log p
            - Bad_N - sum_{p<=N, p not| D} alpha_p log p - Delta_N

with Bad_N the discriminant-prime contribution, Delta_N the large-prime
overcount, and C_N the Hensel-predicted density sum.  Every report checks
the identity to 1e-6 relative; below CROSS_CHECK_LIMIT the big-integer
gcd-chain engine is also run and compared bit-for-bit against the ledger
product.
"""

from __future__ import annotations

import json
import math
import time
from dataclasses import dataclass
from typing import NamedTuple

from . import ntkernel, valengine
from .errors import InternalConsistencyError, IrreducibilityRequiredError, ZeroValueError
from .modroots import DEFAULT_SEED, RootTable
from .polyring import IntPoly, ShiftedPoly, discriminant, is_irreducible_over_Q
from .valengine import ValuationLedger, build_ledgers, count_k1

# Above this N only the ledger engine runs (the gcd chain grows quadratically).
CROSS_CHECK_LIMIT = 2000

IDENTITY_RTOL = 1e-6

CSV_HEADER = "a,N,log_L,log_P,bad,b1,b2,delta,c_N,e_N,d_N,residual,irreducible"


def lcm_bigint(f: ShiftedPoly, N: int) -> int:
    """Exact L_a(N) by the incremental gcd chain; the oracle engine."""
    L = 1
    for n in range(1, N + 1):
        v = f(n)
        if v == 0:
            raise ZeroValueError(n)
        L = math.lcm(L, abs(v))
    return L


def lcm_ledger(f: ShiftedPoly, N: int, B: int | None = None, **kw) -> ValuationLedger:
    """Full-range beta ledger; its product equals lcm_bigint exactly."""
    return build_ledgers(f, N, B, **kw)[1]


class BadSplit(NamedTuple):
    total: float
    b1: float
    b2: float


def _disc_primes(D: int, N: int) -> list[int]:
    if D == 0:
        raise ValueError("discriminant is zero (multiple root); Bad/C/E/D undefined")
    if abs(D) == 1:
        return []
    return [p for p in ntkernel.factor(D).primes() if p <= N]


def bad_N(f0: IntPoly, a: int, N: int, seed: int = DEFAULT_SEED) -> BadSplit:
    """Bad_N(a) = sum over p <= N, p | D(a) of alpha_p log p, split into the
    k = 1 part (B1) and the k >= 2 remainder (B2)."""
    f = ShiftedPoly(f0, a)
    D = discriminant(f.to_poly())
    total = b1 = 0.0
    for p in _disc_primes(D, N):
        ap = valengine.alpha_p(f, N, p, seed)
        c1 = count_k1(f, N, p, seed)
        total += ap * math.log(p)
        b1 += c1 * math.log(p)
    return BadSplit(total, b1, total - b1)


def delta_N(f0: IntPoly, a: int, N: int, seed: int = DEFAULT_SEED, **kw) -> float:
    """Delta_N(a) = sum over p > N of (alpha_p - beta_p) log p."""
    alpha, beta, _ = build_ledgers(ShiftedPoly(f0, a), N, seed=seed, **kw)
    return _delta_from_ledgers(alpha, beta, N)


def _delta_from_ledgers(alpha: ValuationLedger, beta: ValuationLedger, N: int) -> float:
    total = 0.0
    for p in sorted(alpha.entries):
        if p > N:
            diff = alpha.entries[p] - beta.entries.get(p, 0)
            if diff:
                total += diff * math.log(p)
    return total


def c_N(
    f0: IntPoly, a: int, N: int, root_table: RootTable | None = None, seed: int = DEFAULT_SEED
) -> float:
    """C_N(a) = sum over p <= N, p not dividing D(a), of rho(a;p) log p/(p-1)."""
    D = discriminant(ShiftedPoly(f0, a).to_poly())
    if D == 0:
        raise ValueError("discriminant is zero")
    table = root_table if root_table is not None and root_table.f0 == f0 else RootTable(f0, seed)
    total = 0.0
    if N >= 2:
        for p in ntkernel.sieve_primes(N):
            if D % p == 0:
                continue
            r = table.rho(a, p)
            if r:
                total += r * math.log(p) / (p - 1)
    return total


def e_N_d_N(
    f0: IntPoly, a: int, N: int, root_table: RootTable | None = None, seed: int = DEFAULT_SEED
) -> tuple[float, float]:
    """E_N = sum over discriminant primes <= N of log p/p;
    D_N = sum over the other primes <= N of sigma(a;p) log p/p."""
    D = discriminant(ShiftedPoly(f0, a).to_poly())
    if D == 0:
        raise ValueError("discriminant is zero")
    table = root_table if root_table is not None and root_table.f0 == f0 else RootTable(f0, seed)
    e_sum = d_sum = 0.0
    if N >= 2:
        for p in ntkernel.sieve_primes(N):
            if D % p == 0:
                e_sum += math.log(p) / p
            else:
                s = table.sigma(a, p)
                if s:
                    d_sum += s * math.log(p) / p
    return e_sum, d_sum


@dataclass
class DecompositionReport:
    f0: IntPoly
    a: int
    N: int
    log_L: float
    log_P: float
    bad: float
    delta: float
    c_N: float
    e_N: float
    d_N: float
    b1: float
    b2: float
    beta_small_logsum: float
    alpha_small_nondisc_logsum: float
    residual: float
    irreducible: bool
    engine_timings: dict[str, float]

    def identity_gap(self) -> float:
        rhs = (
            self.log_P
            + self.beta_small_logsum
            - self.bad
            - self.alpha_small_nondisc_logsum
            - self.delta
        )
        return abs(self.log_L - rhs)

    def identity_ok(self, rtol: float = IDENTITY_RTOL) -> bool:
        return self.identity_gap() <= rtol * max(1.0, abs(self.log_L))

    def to_dict(self) -> dict:
        return {
            "f0": list(self.f0.coeffs),
            "a": self.a,
            "N": self.N,
            "log_L": self.log_L,
            "log_P": self.log_P,
            "bad": self.bad,
            "delta": self.delta,
            "c_N": self.c_N,
            "e_N": self.e_N,
            "d_N": self.d_N,
            "b1": self.b1,
            "b2": self.b2,
            "beta_small_logsum": self.beta_small_logsum,
            "alpha_small_nondisc_logsum": self.alpha_small_nondisc_logsum,
            "residual": self.residual,
            "irreducible": self.irreducible,
            "engine_timings": self.engine_timings,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True)

    def csv_row(self) -> str:
        cells = [
            self.a,
            self.N,
            self.log_L,
            self.log_P,
            self.bad,
            self.b1,
            self.b2,
            self.delta,
            self.c_N,
            self.e_N,
            self.d_N,
            self.residual,
            int(self.irreducible),
        ]
        return ",".join(repr(c) if isinstance(c, float) else str(c) for c in cells)


def decomposition_report(
    f0: IntPoly,
    a: int,
    N: int,
    allow_reducible: bool = False,
    B: int | None = None,
    root_table: RootTable | None = None,
    seed: int = DEFAULT_SEED,
    cross_check_limit: int = CROSS_CHECK_LIMIT,
) -> DecompositionReport:
    """All decomposition terms for one (f0, a, N), each by its own path,
    with the exact ledger identity enforced."""
    f = ShiftedPoly(f0, a)
    fa = f.to_poly()
    irreducible = is_irreducible_over_Q(fa)
    if not irreducible and not allow_reducible:
        raise IrreducibilityRequiredError(f"f0 - ({a}) is reducible over Q")
    D = discriminant(fa)
    if D == 0:
        raise ValueError("discriminant is zero; decomposition terms undefined")

    t0 = time.perf_counter()
    alpha, beta, _ = build_ledgers(f, N, B=B, root_table=root_table, seed=seed)
    ledger_time = time.perf_counter() - t0
    log_L = beta.logsum()
    timings = {"ledger": ledger_time}

    if N <= cross_check_limit:
        t0 = time.perf_counter()
        L = lcm_bigint(f, N)
        timings["bigint"] = time.perf_counter() - t0
        if beta.product() != L:
            raise InternalConsistencyError("ledger product != gcd-chain lcm")
        log_L = math.log(L)

    log_p = valengine.log_P(f, N)
    disc_primes = set(_disc_primes(D, N))

    bad = b1 = 0.0
    for p in sorted(disc_primes):
        ap = alpha.entries.get(p, 0)
        if ap:
            bad += ap * math.log(p)
            b1 += count_k1(f, N, p, seed) * math.log(p)
    b2 = bad - b1

    delta = _delta_from_ledgers(alpha, beta, N)
    beta_small = beta.logsum(hi=N)
    alpha_small_nondisc = sum(
        alpha.entries[p] * math.log(p)
        for p in sorted(alpha.entries)
        if p <= N and p not in disc_primes
    )

    table = root_table if root_table is not None and root_table.f0 == f0 else RootTable(f0, seed)
    cn = c_N(f0, a, N, table, seed)
    en, dn = e_N_d_N(f0, a, N, table, seed)

    d = f0.degree
    residual = log_L - (d * N * math.log(N) - bad - delta - N * cn) if N >= 2 else log_L

    report = DecompositionReport(
        f0=f0,
        a=a,
        N=N,
        log_L=log_L,
        log_P=log_p,
        bad=bad,
        delta=delta,
        c_N=cn,
        e_N=en,
        d_N=dn,
        b1=b1,
        b2=b2,
        beta_small_logsum=beta_small,
        alpha_small_nondisc_logsum=alpha_small_nondisc,
        residual=residual,
        irreducible=irreducible,
        engine_timings=timings,
    )
    if not report.identity_ok():
        raise InternalConsistencyError(
            f"decomposition identity violated by {report.identity_gap():.3e}"
        )
    return report
