"""Free cartesian closed categories: equality, polynomial extension and functional completeness."""

from .completeness import functor_F, functor_G, gamma_double, gamma_prime, phi_double, phi_prime
from .errors import (
    BadIndeterminateType,
    CCCError,
    DuplicateName,
    MissingInterpretation,
    ModelTooLarge,
    NoIndeterminate,
    ParseError,
    TypeMismatch,
    UnknownIdentifier,
)
from .generate import GenConfig, TermGenerator
from .laws import Report, law_suite
from .models import FiniteModel, interpret_finite, random_model
from .normal_form import BACKEND, arrows_equal, normal_form, simplify, to_lambda
from .poly import heritage, instantiate, poly_equal
from .rewrite import Verdict, oracle_equal
from .syntax import (
    ArrowType,
    Atom,
    Bang,
    Comp,
    Const,
    Curry,
    Eval,
    Exp,
    Id,
    Indet,
    Pair,
    Prod,
    Proj,
    Signature,
    T,
    derived,
    type_of,
)
from .text import parse_arrow, parse_object, parse_signature, print_arrow, print_signature, show

__version__ = "0.1.0"
