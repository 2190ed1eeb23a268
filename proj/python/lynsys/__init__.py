"""Alternate-order Lyndon systems and (-beta)-expansions."""

from ._core import (
    admissible,
    beta,
    classify,
    compare,
    compare_with_fixed_point,
    count_interval,
    dstar,
    entropy_positive,
    enumerate_words,
    expand,
    f_eval,
    gf_residual,
    hn,
    letter_at,
    lyn_witness,
    normalize,
    omega_check,
    phi_power,
    phi_prefix,
    run_acceptance,
    rstar,
    shift,
    thue_morse_runlengths,
)

__all__ = [
    "admissible",
    "beta",
    "classify",
    "compare",
    "compare_with_fixed_point",
    "count_interval",
    "dstar",
    "entropy_positive",
    "enumerate_words",
    "expand",
    "f_eval",
    "gf_residual",
    "hn",
    "letter_at",
    "lyn_witness",
    "normalize",
    "omega_check",
    "phi_power",
    "phi_prefix",
    "run_acceptance",
    "rstar",
    "shift",
    "thue_morse_runlengths",
]
