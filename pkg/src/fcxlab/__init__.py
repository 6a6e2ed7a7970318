"""Exact computations in the ring C_c(X)_F over four decidable space models."""

from .errors import FcxError, InputError
from .ring import RingElem, chi, classify, constant, discontinuity_set, indicator, membership, sequence
from .spaces import CONV_SEQ, COFINITE_N, DISCRETE_N, INF, SpaceKind, SpaceModel, UPSet, finite, make_space
from .verify import VerifyConfig, run_verify_suite
from .zdgraph import witness_graph

__version__ = "0.1.0"

__all__ = [
    "CONV_SEQ",
    "COFINITE_N",
    "DISCRETE_N",
    "INF",
    "FcxError",
    "InputError",
    "RingElem",
    "SpaceKind",
    "SpaceModel",
    "UPSet",
    "VerifyConfig",
    "chi",
    "classify",
    "constant",
    "discontinuity_set",
    "finite",
    "indicator",
    "make_space",
    "membership",
    "run_verify_suite",
    "sequence",
    "witness_graph",
]
