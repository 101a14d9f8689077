"""Bipolar neutrosophic soft expert sets: number algebra, set operations,
dataset files and score-based ranking."""

from .errors import BNSESError, DomainError, ParseError, ValidationError
from .number import (
    ADD_IDENTITY,
    DEFAULT_TOLERANCE,
    MULTIPLY_IDENTITY,
    BipolarNeutrosophicNumber,
    Ordering,
    accuracy,
    add,
    certainty,
    compare,
    multiply,
    power,
    scale,
    score,
)
from .softset import (
    EMPTY,
    AssessmentKey,
    Opinion,
    ParameterLiteral,
    SoftExpertSet,
    complement,
    complement_value,
    equals,
    intersection,
    intersection_value,
    is_null,
    is_subset,
    is_superset,
    key,
    make_null,
    negate_parameter,
    not_set,
    restrict_agree,
    restrict_disagree,
    union,
    union_value,
)
from .dataset import Dataset, dump, export_ranking, load, parse, serialize
from .ranking import RankedAlternative, Ranking, compare_values, rank

BNN = BipolarNeutrosophicNumber

__version__ = "0.1.0"
