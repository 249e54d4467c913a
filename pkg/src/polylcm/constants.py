"""Frozen empirical constants for the asymptotic bound checks.

The bounds being verified are all of "<=" type with unspecified implied
constants; the multipliers below were calibrated once against brute-force
runs at desk scale and are treated as frozen.  Changing any value is a
reviewed act: tests pin behaviour to these numbers.
"""

# |sum_{p<=N} log p / p - log N| band, N in [10, 1e6].
MERTENS_BAND = 2.0

# divisor_logsum(k) <= A * lnln|k| + B, checked exhaustively on [3, 1e6].
DIVISOR_LOGSUM_SLOPE = 3.0
DIVISOR_LOGSUM_OFFSET = 3.0

# E_N <= A * lnln|D(a)| + B whenever |D(a)| >= 3.
EN_SLOPE = 3.0
EN_OFFSET = 3.0

# Ensemble means: <Bad_N>, <Delta_N> <= C * N * lnln N.
AVG_BAD_FACTOR = 10.0
AVG_DELTA_FACTOR = 10.0

# <|C_N - ln N|^2> <= C * (lnln N)^2.
VAR_CN_FACTOR = 10.0

# |<sigma(.;p) sigma(.;q)>| <= C * (sqrt(pq) ln(pq)/T + 1/sqrt(T)).
COV_SIGMA_FACTOR = 20.0

# #{|a| <= T : f0 - a reducible} <= C * sqrt(T) for the x^4 family.
REDUCIBLE_SQRT_FACTOR = 5.0

# |c_N - (mertens_sum - E_N + D_N)| <= this (the O(1) gap
# sum rho(p) log p * (1/(p-1) - 1/p) over p <= N).
CN_SPLIT_GAP = 2.0

# theorem_check component bands: |C_N - ln N| <= C * lnln N,
# Bad_N and Delta_N <= C * N * lnln N.
THEOREM_CN_BAND = 10.0
THEOREM_BAD_BAND = 10.0
THEOREM_DELTA_BAND = 10.0
