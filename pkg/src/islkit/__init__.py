"""Integrated sidelobe level of rotated Legendre sequence sets.

Direct (oracle) correlation sums, the root-of-unity spectral route with
closed-form kernel sums, asymptotic limits in the rotation fractions,
and a rotation optimizer, all behind one CLI.
"""

from .asymptotic import (
    AsymptoticIsl,
    auto_energy_limit,
    cross_energy_limit,
    isl_limit,
    mod1,
    re_dilog_on_circle,
)
from .correlation import (
    CorrelationProfile,
    IslReport,
    aperiodic_correlation,
    auto_sidelobe_energy,
    cross_energy,
    isl_report,
    periodic_autocorrelation,
)
from .optimize import (
    ExactCheck,
    OptResult,
    exact_validate,
    grid_search,
    optimize_rotations,
    refine_local,
)
from .sequences import (
    RotationSet,
    bind_rotations,
    is_prime,
    legendre_sequence,
    legendre_symbol,
    next_prime,
    primes_in_range,
    rotate_left,
)
from .spectral import (
    KernelIndices,
    PatternSums,
    SpectralEvaluation,
    auto_sidelobe_energy_spectral,
    cross_energy_spectral,
    gf_at_negated_roots,
    gf_at_roots,
    gf_eval,
    interpolate_negated_root,
    kernel_sum_closed_form,
    kernel_sum_direct,
    legendre_gf_closed_form,
    pattern_decomposition,
    power_sum_at_negated_roots,
    power_sum_at_roots,
    roots_of_unity,
)

__version__ = "0.1.0"

__all__ = [
    "AsymptoticIsl",
    "CorrelationProfile",
    "ExactCheck",
    "IslReport",
    "KernelIndices",
    "OptResult",
    "PatternSums",
    "RotationSet",
    "SpectralEvaluation",
    "aperiodic_correlation",
    "auto_energy_limit",
    "auto_sidelobe_energy",
    "auto_sidelobe_energy_spectral",
    "bind_rotations",
    "cross_energy",
    "cross_energy_limit",
    "cross_energy_spectral",
    "exact_validate",
    "gf_at_negated_roots",
    "gf_at_roots",
    "gf_eval",
    "grid_search",
    "interpolate_negated_root",
    "is_prime",
    "isl_limit",
    "isl_report",
    "kernel_sum_closed_form",
    "kernel_sum_direct",
    "legendre_gf_closed_form",
    "legendre_sequence",
    "legendre_symbol",
    "mod1",
    "next_prime",
    "optimize_rotations",
    "pattern_decomposition",
    "periodic_autocorrelation",
    "power_sum_at_negated_roots",
    "power_sum_at_roots",
    "primes_in_range",
    "re_dilog_on_circle",
    "refine_local",
    "roots_of_unity",
    "rotate_left",
]
