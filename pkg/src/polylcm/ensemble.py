"""Averaging over shifts |a| <= T with irreducibility filtering.

The averaging operator normalizes by the exact count of irreducible
shifts.  Exhaustive mode walks every a in [-T, T]; random mode samples
uniformly with a fixed seed and rejects reducible shifts.  Aggregation is
an ordered reduction (values sorted by a), so identical inputs and seed
produce byte-identical reports.
"""

from __future__ import annotations

import json
import math
import random
import warnings
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

from . import constants, decomp, ntkernel
from .errors import EmptyEnsembleError, WindowViolationError
from .modroots import BRUTE_FORCE_LIMIT, DEFAULT_SEED, RootTable, roots_mod_p
from .polyring import IntPoly, ShiftedPoly, is_irreducible_over_Q

STATISTICS = ("bad", "b2", "delta", "cn", "dn", "loglratio")

QUANTILE_GRID = (0.05, 0.25, 0.5, 0.75, 0.95)

RANDOM_SAMPLING_CUTOFF = 10_000
DEFAULT_N_SAMPLES = 200


@dataclass(frozen=True)
class WindowSpec:
    """Admissible (T, N) range T^(1/(d-1)) < N < T / log T."""

    T: int
    N: int
    d: int

    @property
    def lower(self) -> float:
        return self.T ** (1.0 / (self.d - 1))

    @property
    def upper(self) -> float:
        return self.T / math.log(self.T)

    @property
    def holds(self) -> bool:
        return self.lower < self.N < self.upper


@dataclass
class EnsembleStats:
    T: int
    N: int
    statistic_name: str
    count_total: int
    count_irreducible: int
    mean: float
    variance: float
    quantiles: list[tuple[float, float]]
    seed: int
    sampling: str
    n_samples: int | None = None
    f0_coeffs: tuple[int, ...] = field(default_factory=tuple)

    def to_dict(self) -> dict:
        return {
            "T": self.T,
            "N": self.N,
            "statistic": self.statistic_name,
            "count_total": self.count_total,
            "count_irreducible": self.count_irreducible,
            "mean": self.mean,
            "variance": self.variance,
            "quantiles": [[q, v] for q, v in self.quantiles],
            "seed": self.seed,
            "sampling": self.sampling,
            "n_samples": self.n_samples,
            "f0": list(self.f0_coeffs),
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True)


def reducible_count(f0: IntPoly, T: int) -> int:
    """Exact number of a in [-T, T] with f0 - a reducible over Q."""
    if not f0.is_monic or f0.degree < 2:
        raise ValueError("reducible_count requires a monic polynomial of degree >= 2")
    return sum(
        0 if is_irreducible_over_Q(ShiftedPoly(f0, a).to_poly()) else 1
        for a in range(-T, T + 1)
    )


def _irreducible(f0: IntPoly, a: int) -> bool:
    return is_irreducible_over_Q(ShiftedPoly(f0, a).to_poly())


def _exhaustive_shifts(f0: IntPoly, T: int) -> tuple[list[int], int]:
    shifts = [a for a in range(-T, T + 1) if _irreducible(f0, a)]
    return shifts, 2 * T + 1


def _sample_shifts(f0: IntPoly, T: int, n_samples: int, seed: int) -> tuple[list[int], int]:
    rng = random.Random(seed)
    shifts: list[int] = []
    draws = 0
    cap = max(50 * n_samples, 1000)
    while len(shifts) < n_samples and draws < cap:
        a = rng.randint(-T, T)
        draws += 1
        if _irreducible(f0, a):
            shifts.append(a)
    return shifts, draws


def _quantiles(sorted_vals: list[float]) -> list[tuple[float, float]]:
    out = []
    n = len(sorted_vals)
    for q in QUANTILE_GRID:
        pos = q * (n - 1)
        lo = int(math.floor(pos))
        hi = min(lo + 1, n - 1)
        frac = pos - lo
        out.append((q, sorted_vals[lo] * (1 - frac) + sorted_vals[hi] * frac))
    return out


def _eval_statistic(
    f0: IntPoly,
    a: int,
    N: int,
    statistic: str,
    root_table: RootTable | None,
    seed: int,
) -> float:
    if statistic == "bad":
        return decomp.bad_N(f0, a, N, seed).total
    if statistic == "b2":
        return decomp.bad_N(f0, a, N, seed).b2
    if statistic == "delta":
        return decomp.delta_N(f0, a, N, seed=seed, root_table=root_table)
    if statistic == "cn":
        return decomp.c_N(f0, a, N, root_table, seed)
    if statistic == "dn":
        return decomp.e_N_d_N(f0, a, N, root_table, seed)[1]
    if statistic == "loglratio":
        rep = decomp.decomposition_report(f0, a, N, root_table=root_table, seed=seed)
        return rep.log_L / ((f0.degree - 1) * N * math.log(N))
    raise ValueError(f"unknown statistic {statistic!r}; choose from {STATISTICS}")


def _eval_chunk(args) -> list[tuple[int, float]]:
    f0_coeffs, shifts, N, statistic, seed = args
    f0 = IntPoly(f0_coeffs)
    table = RootTable(f0, seed)
    return [(a, _eval_statistic(f0, a, N, statistic, table, seed)) for a in shifts]


def ensemble_average(
    f0: IntPoly,
    T: int,
    N: int,
    statistic: str,
    sampling: str = "auto",
    seed: int = DEFAULT_SEED,
    n_samples: int = DEFAULT_N_SAMPLES,
    threads: int = 1,
    root_table: RootTable | None = None,
    return_values: bool = False,
):
    """Mean/variance/quantiles of a per-shift statistic over irreducible
    shifts |a| <= T.  Variance is the population variance of the sample."""
    if T < 1 or N < 1:
        raise ValueError("need T >= 1 and N >= 1")
    if statistic not in STATISTICS:
        raise ValueError(f"unknown statistic {statistic!r}; choose from {STATISTICS}")
    if sampling == "auto":
        sampling = "random" if T > RANDOM_SAMPLING_CUTOFF else "exhaustive"
    if sampling not in ("exhaustive", "random"):
        raise ValueError(f"sampling must be exhaustive/random/auto, got {sampling!r}")
    d = f0.degree
    if N >= 2 and T >= 3:
        win = WindowSpec(T, N, d)
        if not win.holds:
            warnings.warn(
                f"(T={T}, N={N}) outside the admissible window "
                f"({win.lower:.1f}, {win.upper:.1f}); averaged bounds may not apply",
                stacklevel=2,
            )
    if sampling == "exhaustive":
        shifts, count_total = _exhaustive_shifts(f0, T)
    else:
        shifts, count_total = _sample_shifts(f0, T, n_samples, seed)
    if not shifts:
        raise EmptyEnsembleError(f"no irreducible shifts for |a| <= {T}")

    ordered = sorted(shifts)
    if threads > 1 and len(ordered) > 1:
        chunks = [ordered[i::threads] for i in range(threads)]
        args = [(f0.coeffs, chunk, N, statistic, seed) for chunk in chunks if chunk]
        with ProcessPoolExecutor(max_workers=threads) as pool:
            pairs = [pair for chunk_out in pool.map(_eval_chunk, args) for pair in chunk_out]
        pairs.sort(key=lambda t: t[0])
    else:
        table = root_table if root_table is not None and root_table.f0 == f0 else RootTable(f0, seed)
        pairs = [(a, _eval_statistic(f0, a, N, statistic, table, seed)) for a in ordered]

    values = [v for _, v in pairs]
    n = len(values)
    mean = sum(values) / n
    variance = sum((v - mean) ** 2 for v in values) / n
    stats = EnsembleStats(
        T=T,
        N=N,
        statistic_name=statistic,
        count_total=count_total,
        count_irreducible=n,
        mean=mean,
        variance=variance,
        quantiles=_quantiles(sorted(values)),
        seed=seed,
        sampling=sampling,
        n_samples=n_samples if sampling == "random" else None,
        f0_coeffs=f0.coeffs,
    )
    if return_values:
        return stats, pairs
    return stats


def covariance_sigma(
    f0: IntPoly,
    p: int,
    q: int,
    T: int,
    include_reducible: bool = False,
    seed: int = DEFAULT_SEED,
) -> float:
    """Average of sigma(a;p) * sigma(a;q) over irreducible |a| <= T, by
    direct enumeration with per-residue caching (sigma depends on a mod p).
    include_reducible drops the filter, exposing the exact cancellation over
    complete residue systems mod pq."""
    if p == q:
        raise ValueError("covariance needs distinct primes")
    d = f0.degree
    if p <= d or q <= d:
        raise ValueError(f"primes must exceed the degree {d}")
    if p >= BRUTE_FORCE_LIMIT or q >= BRUTE_FORCE_LIMIT:
        raise ValueError("covariance caching expects p, q below the brute-force limit")
    sig_p = _sigma_cache(f0, p, seed)
    sig_q = _sigma_cache(f0, q, seed)
    total = 0
    count = 0
    for a in range(-T, T + 1):
        if include_reducible or _irreducible(f0, a):
            total += sig_p[a % p] * sig_q[a % q]
            count += 1
    if count == 0:
        raise EmptyEnsembleError(f"no shifts admitted for |a| <= {T}")
    return total / count


def _sigma_cache(f0: IntPoly, p: int, seed: int) -> list[int]:
    table = RootTable(f0, seed)
    return [table.sigma(c, p) for c in range(p)]


def mean_rho(f: IntPoly, x: int, seed: int = DEFAULT_SEED) -> float:
    """(1/pi(x)) * sum over p <= x of rho_f(p); tends to 1 for irreducible f."""
    if x < 2:
        raise ValueError(f"x must be >= 2, got {x}")
    if not is_irreducible_over_Q(f):
        raise ValueError("mean_rho requires an irreducible polynomial")
    primes = ntkernel.sieve_primes(x)
    total = sum(roots_mod_p(f, p, seed).count for p in primes)
    return total / len(primes)


@dataclass
class TheoremReport:
    f0_coeffs: tuple[int, ...]
    T: int
    N: int
    d: int
    seed: int
    epsilon: float
    n_shifts: int
    window_lower: float
    window_upper: float
    window_holds: bool
    fraction_ratio_within_epsilon: float
    fraction_cn_within_band: float
    fraction_bad_within_band: float
    fraction_delta_within_band: float
    median_ratio: float
    mean_ratio: float

    def to_dict(self) -> dict:
        return {
            "f0": list(self.f0_coeffs),
            "T": self.T,
            "N": self.N,
            "d": self.d,
            "seed": self.seed,
            "epsilon": self.epsilon,
            "n_shifts": self.n_shifts,
            "window": {
                "lower": self.window_lower,
                "upper": self.window_upper,
                "holds": self.window_holds,
            },
            "fractions": {
                "ratio_within_epsilon": self.fraction_ratio_within_epsilon,
                "cn_within_band": self.fraction_cn_within_band,
                "bad_within_band": self.fraction_bad_within_band,
                "delta_within_band": self.fraction_delta_within_band,
            },
            "median_ratio": self.median_ratio,
            "mean_ratio": self.mean_ratio,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True)


def theorem_check(
    f0: IntPoly,
    T: int,
    N: int,
    n_samples: int = DEFAULT_N_SAMPLES,
    seed: int = DEFAULT_SEED,
    epsilon: float = 0.5,
    override_window: bool = False,
    threads: int = 1,
) -> TheoremReport:
    """Desk-scale check of log L_a(N) ~ (d-1) N log N over sampled
    irreducible shifts, with per-component bands for C_N, Bad_N, Delta_N."""
    d = f0.degree
    win = WindowSpec(T, N, d)
    if not win.holds and not override_window:
        raise WindowViolationError(
            f"N = {N} outside ({win.lower:.1f}, {win.upper:.1f}) for T = {T}, d = {d}"
        )
    if T > RANDOM_SAMPLING_CUTOFF:
        shifts, _ = _sample_shifts(f0, T, n_samples, seed)
    else:
        shifts, _ = _exhaustive_shifts(f0, T)
        if len(shifts) > n_samples:
            rng = random.Random(seed)
            shifts = rng.sample(shifts, n_samples)
    if not shifts:
        raise EmptyEnsembleError(f"no irreducible shifts for |a| <= {T}")
    ordered = sorted(shifts)

    if threads > 1 and len(ordered) > 1:
        chunks = [ordered[i::threads] for i in range(threads)]
        args = [(f0.coeffs, chunk, N, seed) for chunk in chunks if chunk]
        with ProcessPoolExecutor(max_workers=threads) as pool:
            rows = [r for chunk_out in pool.map(_theorem_chunk, args) for r in chunk_out]
        rows.sort(key=lambda t: t[0])
    else:
        table = RootTable(f0, seed)
        rows = [_theorem_row(f0, a, N, table, seed) for a in ordered]

    n = len(rows)
    denom = (d - 1) * N * math.log(N)
    lnln = math.log(math.log(N))
    ratios = sorted(r[1] / denom for r in rows)
    frac_ratio = sum(1 for v in ratios if abs(v - 1) < epsilon) / n
    frac_cn = (
        sum(1 for r in rows if abs(r[2] - math.log(N)) <= constants.THEOREM_CN_BAND * lnln) / n
    )
    frac_bad = sum(1 for r in rows if r[3] <= constants.THEOREM_BAD_BAND * N * lnln) / n
    frac_delta = sum(1 for r in rows if r[4] <= constants.THEOREM_DELTA_BAND * N * lnln) / n
    mid = (n - 1) / 2
    median = (ratios[int(math.floor(mid))] + ratios[int(math.ceil(mid))]) / 2
    return TheoremReport(
        f0_coeffs=f0.coeffs,
        T=T,
        N=N,
        d=d,
        seed=seed,
        epsilon=epsilon,
        n_shifts=n,
        window_lower=win.lower,
        window_upper=win.upper,
        window_holds=win.holds,
        fraction_ratio_within_epsilon=frac_ratio,
        fraction_cn_within_band=frac_cn,
        fraction_bad_within_band=frac_bad,
        fraction_delta_within_band=frac_delta,
        median_ratio=median,
        mean_ratio=sum(ratios) / n,
    )


def _theorem_row(
    f0: IntPoly, a: int, N: int, table: RootTable, seed: int
) -> tuple[int, float, float, float, float]:
    rep = decomp.decomposition_report(f0, a, N, root_table=table, seed=seed)
    return (a, rep.log_L, rep.c_N, rep.bad, rep.delta)


def _theorem_chunk(args) -> list[tuple[int, float, float, float, float]]:
    f0_coeffs, shifts, N, seed = args
    f0 = IntPoly(f0_coeffs)
    table = RootTable(f0, seed)
    return [_theorem_row(f0, a, N, table, seed) for a in shifts]
