"""polylcm: exact least common multiples of shifted polynomial sequences,
their prime-valuation decomposition, and shift-ensemble statistics."""

from .decomp import (
    CROSS_CHECK_LIMIT,
    DecompositionReport,
    bad_N,
    c_N,
    decomposition_report,
    delta_N,
    e_N_d_N,
    lcm_bigint,
    lcm_ledger,
)
from .ensemble import (
    EnsembleStats,
    TheoremReport,
    WindowSpec,
    covariance_sigma,
    ensemble_average,
    mean_rho,
    reducible_count,
    theorem_check,
)
from .modroots import (
    RootSetModPk,
    RootTable,
    SigmaValue,
    count_roots_mod_pk,
    hensel_lift,
    roots_mod_p,
    roots_mod_pk,
    sigma,
    sigma_via_expsum,
    weil_sum,
)
from .ntkernel import (
    Factorization,
    PrimeTable,
    divisor_logsum,
    factor,
    is_prime,
    mertens_sum,
    nu,
    sieve_primes,
)
from .polyring import (
    IntPoly,
    ShiftedPoly,
    discriminant,
    divided_difference,
    find_C1,
    is_irreducible_over_Q,
    is_primitive,
    resultant,
)
from .valengine import (
    ValuationLedger,
    alpha_approx_residual,
    alpha_ledger,
    alpha_p,
    beta_ledger,
    beta_p,
    build_ledgers,
    log_P,
)

__version__ = "0.1.0"

__all__ = [
    "CROSS_CHECK_LIMIT",
    "DecompositionReport",
    "EnsembleStats",
    "Factorization",
    "IntPoly",
    "PrimeTable",
    "RootSetModPk",
    "RootTable",
    "ShiftedPoly",
    "SigmaValue",
    "TheoremReport",
    "ValuationLedger",
    "WindowSpec",
    "alpha_approx_residual",
    "alpha_ledger",
    "alpha_p",
    "bad_N",
    "beta_ledger",
    "beta_p",
    "build_ledgers",
    "c_N",
    "count_roots_mod_pk",
    "covariance_sigma",
    "decomposition_report",
    "delta_N",
    "discriminant",
    "divided_difference",
    "divisor_logsum",
    "e_N_d_N",
    "ensemble_average",
    "factor",
    "find_C1",
    "hensel_lift",
    "is_irreducible_over_Q",
    "is_prime",
    "is_primitive",
    "lcm_bigint",
    "lcm_ledger",
    "log_P",
    "mean_rho",
    "mertens_sum",
    "nu",
    "reducible_count",
    "resultant",
    "roots_mod_p",
    "roots_mod_pk",
    "sieve_primes",
    "sigma",
    "sigma_via_expsum",
    "theorem_check",
    "weil_sum",
]
