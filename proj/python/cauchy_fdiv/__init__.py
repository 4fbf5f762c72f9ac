"""f-divergences between Cauchy-type distributions."""

from ._cauchy_fdiv import (
    chebyshev_center,
    chernoff,
    chi,
    chi_power_divergence,
    divergence,
    entropy,
    family_divergence,
    fisher_rao_distance,
    fit_h_polynomial,
    fr_to_bhat,
    h_of_chi,
    j_polynomial,
    kl_bivariate,
    mc_divergence,
    oracle_divergence,
    run_suite,
    series_coefficient,
    sup_density_ratio,
    taylor_divergence,
)

__all__ = [
    "chebyshev_center",
    "chernoff",
    "chi",
    "chi_power_divergence",
    "divergence",
    "entropy",
    "family_divergence",
    "fisher_rao_distance",
    "fit_h_polynomial",
    "fr_to_bhat",
    "h_of_chi",
    "j_polynomial",
    "kl_bivariate",
    "mc_divergence",
    "oracle_divergence",
    "run_suite",
    "series_coefficient",
    "sup_density_ratio",
    "taylor_divergence",
]
