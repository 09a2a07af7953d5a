"""collatzlab: generalized hailstone orbits, red/blue path combinatorics,
Fibonacci growth asymptotics, prime-valuation theorems, and a parallel
range scanner.

The scanner's inner loop is a compiled extension when available; set
COLLATZLAB_BACKEND=python to force the pure-Python fallback.
"""

from ._backend import DEFAULT_BACKEND_NAME as backend_name
from .asymptotics import (
    ConvergenceThreshold,
    LimitResult,
    Ordering,
    PhiRatio,
    convergence_threshold,
    fib,
    golden_gap,
    growth_crossover,
    growth_log,
    growth_vs_inverse,
    path_sum,
    path_sum_limit,
    phi_ratio,
)
from .core import (
    DEFAULT_LIMITS,
    EdgeColor,
    OrbitLimits,
    OrbitRecord,
    OrbitStats,
    OrbitStatus,
    blue_red_ratio,
    orbit,
    orbit_min,
    orbit_stats,
    step,
)
from .figures import FigureSeries, emit_figure
from .paths import (
    EdgeCensus,
    admissible_children,
    alternating_path_value,
    combinations_count,
    edge_counts,
    edge_quotient,
    enumerate_words,
    is_admissible,
)
from .primes import (
    IntervalWitness,
    NewPrimeReport,
    PrimeSet,
    binomial_valuation,
    carry_count,
    factorial_divisibility_check,
    factorial_valuation,
    fib_coprimality,
    gcd_coprime_binomials,
    interfib_prime_witnesses,
    is_prime,
    new_prime_divisibility,
    new_primes,
    reconstruct_primes,
    sieve,
)
from .scanner import ScanSummary, ratio_extrema, ratio_rows, scan

__version__ = "0.1.0"

__all__ = [
    "backend_name",
    "ConvergenceThreshold",
    "LimitResult",
    "Ordering",
    "PhiRatio",
    "convergence_threshold",
    "fib",
    "golden_gap",
    "growth_crossover",
    "growth_log",
    "growth_vs_inverse",
    "path_sum",
    "path_sum_limit",
    "phi_ratio",
    "DEFAULT_LIMITS",
    "EdgeColor",
    "OrbitLimits",
    "OrbitRecord",
    "OrbitStats",
    "OrbitStatus",
    "blue_red_ratio",
    "orbit",
    "orbit_min",
    "orbit_stats",
    "step",
    "FigureSeries",
    "emit_figure",
    "EdgeCensus",
    "admissible_children",
    "alternating_path_value",
    "combinations_count",
    "edge_counts",
    "edge_quotient",
    "enumerate_words",
    "is_admissible",
    "IntervalWitness",
    "NewPrimeReport",
    "PrimeSet",
    "binomial_valuation",
    "carry_count",
    "factorial_divisibility_check",
    "factorial_valuation",
    "fib_coprimality",
    "gcd_coprime_binomials",
    "interfib_prime_witnesses",
    "is_prime",
    "new_prime_divisibility",
    "new_primes",
    "reconstruct_primes",
    "sieve",
    "ScanSummary",
    "ratio_extrema",
    "ratio_rows",
    "scan",
    "__version__",
]
