"""Signed Gauss words of curves on surfaces and their finite-type invariants."""

__version__ = "0.1.0"

from .cyclic import (
    CyclicClass,
    WordVector,
    class_key,
    class_sum,
    enumerate_classes,
    is_nu_invariant,
    normalized_class,
    nu_shift,
    orbit,
)
from .sci import Functional, compose_sci, iota, iota_inv, relation_audit, sci, sci_linear
from .singular import (
    SingularCurve,
    SingularPoint,
    expanded_invariant,
    finite_type_check,
    insert_singularity,
    resolve,
    resolve_all,
    validate_singular,
)
from .surface import arnold_check, genus, is_planar, plane_curve, rotation_number, surface_data
from .words import (
    EMPTY,
    Letter,
    SignedWord,
    WordParseError,
    WordValidationError,
    are_isomorphic,
    canonical_form,
    enumerate_words,
    format_word,
    indicator,
    pairing,
    parse_word,
    subwords_of_size,
)
