"""Staircase tableaux, their insertion bijections, and the exclusion process they describe."""

from .ansatz import STAR, LambdaSequence, stationary_tableaux, weight_of_state, weight_of_state_b
from .kernel import BACKEND
from .markov import stationary_exact, transition_matrix
from .poly import ParamPoint, Polynomial
from .results import RationalDistribution, Report
from .state import State
from .symbols import InsertionEvent, Label, Letter, Triple
from .tableau_a import StaircaseTableau, enumerate_tableaux, insert, partition_fn, uninsert, weight
from .tableau_b import HalfTableauB, enumerate_b, insert_b, partition_fn_b, uninsert_b, weight_b

__all__ = [
    "BACKEND",
    "HalfTableauB",
    "InsertionEvent",
    "Label",
    "LambdaSequence",
    "Letter",
    "ParamPoint",
    "Polynomial",
    "RationalDistribution",
    "Report",
    "STAR",
    "StaircaseTableau",
    "State",
    "Triple",
    "enumerate_b",
    "enumerate_tableaux",
    "insert",
    "insert_b",
    "partition_fn",
    "partition_fn_b",
    "stationary_exact",
    "stationary_tableaux",
    "transition_matrix",
    "uninsert",
    "uninsert_b",
    "weight",
    "weight_b",
    "weight_of_state",
    "weight_of_state_b",
]
