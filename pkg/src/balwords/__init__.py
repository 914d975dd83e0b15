"""Christoffel words and binary balanced words as digital segment approximations."""

from .balance import (
    FactorClass,
    ImbalanceWitness,
    enumerate_balanced,
    in_digital_bar,
    is_balanced,
    is_circularly_balanced,
    is_prefix_normal,
    unbalance_witness,
)
from .christoffel import (
    ChristoffelMatrix,
    Factorization,
    central_word,
    christoffel_matrix,
    is_central,
    lower_christoffel,
    palindromic_factorization,
    period_inverses,
    standard_factorization,
    upper_christoffel,
)
from .counting import (
    CountReport,
    count_balanced,
    count_balanced_report,
    count_heavy_factors,
    count_period_factors,
)
from .farey import PlcEntry, enumerate_plc, farey_sequence, is_plc, plc_farey_bijection, plc_root
from .forbidden import MFWord, enumerate_mab, enumerate_mf, is_minimal_forbidden
from .words import Parikh, conjugates, is_lyndon, is_palindrome, parikh, reversal, smallest_period

__all__ = [
    "ChristoffelMatrix",
    "CountReport",
    "FactorClass",
    "Factorization",
    "ImbalanceWitness",
    "MFWord",
    "Parikh",
    "PlcEntry",
    "central_word",
    "christoffel_matrix",
    "conjugates",
    "count_balanced",
    "count_balanced_report",
    "count_heavy_factors",
    "count_period_factors",
    "enumerate_balanced",
    "enumerate_mab",
    "enumerate_mf",
    "enumerate_plc",
    "farey_sequence",
    "in_digital_bar",
    "is_balanced",
    "is_central",
    "is_circularly_balanced",
    "is_lyndon",
    "is_minimal_forbidden",
    "is_palindrome",
    "is_plc",
    "is_prefix_normal",
    "lower_christoffel",
    "palindromic_factorization",
    "parikh",
    "period_inverses",
    "plc_farey_bijection",
    "plc_root",
    "reversal",
    "smallest_period",
    "standard_factorization",
    "unbalance_witness",
    "upper_christoffel",
]

__version__ = "0.1.0"
