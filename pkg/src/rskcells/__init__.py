"""Exact computation of Kazhdan-Lusztig bases and cells of the symmetric group,
RSK bases for group-ring quotients, and Specht-module Gram determinants.

Everything is exact (integer or Laurent-polynomial arithmetic); every closed
formula has an independently computed brute-force counterpart in the test
suite.
"""

from .combinat import (
    Partition,
    PowerDiagram,
    Tableau,
    Tabloid,
    beta_sequence,
    carter_condition,
    count_standard,
    dominates,
    enumerate_standard,
    hook_lengths,
    lambda_nd,
    power_diagram,
    signed_d,
    transpose,
)
from .laurent import FieldSpec, Laurent, quantum_int_q, quantum_int_v, specialize
from .rsk import RskPair, rsk, rsk_inverse, rsk_shape
from .symgroup import Perm, bruhat_leq, length, multiply, parabolic, prefixes

__all__ = [
    "Partition",
    "PowerDiagram",
    "Tableau",
    "Tabloid",
    "beta_sequence",
    "carter_condition",
    "count_standard",
    "dominates",
    "enumerate_standard",
    "hook_lengths",
    "lambda_nd",
    "power_diagram",
    "signed_d",
    "transpose",
    "FieldSpec",
    "Laurent",
    "quantum_int_q",
    "quantum_int_v",
    "specialize",
    "RskPair",
    "rsk",
    "rsk_inverse",
    "rsk_shape",
    "Perm",
    "bruhat_leq",
    "length",
    "multiply",
    "parabolic",
    "prefixes",
]

__version__ = "0.1.0"
