"""Exact computer algebra for omni-Lie color algebras and their higher analogues.

Scalars live in the cyclotomic field Q(zeta_m); every identity is checked
exactly and reported as a :class:`~omnicolor.verdicts.Verdict`.
"""

from .coloralg import (ColorAlgebra, QuadraticForm, Representation, check_leibniz, check_lie_color,
                       check_quadratic, check_representation, gl_bracket)
from .fileformat import AlgebraFile, dump_algebra_file, parse_algebra_file
from .fixtures import FIXTURES, fixture
from .grading import Bicharacter, Degree, GradingGroup, validate_bicharacter
from .gvs import GradedMap, GradedSpace, MultilinearMap, Subspace, Vec
from .lc2 import (Color2VectorSpace, LieColor2Algebra, Morphism2, check_jacobiator_identity,
                  lc2_roundtrip)
from .linf2 import (CrossedModule, SkeletalQuadruple, TwoTermAlgebra, check_axioms,
                    check_crossed_module, crossed_to_strict, skeletal_to_quadruple,
                    strict_to_crossed, string_from_quadratic, two_term_from_omni)
from .omni import OmniAlgebra, OmniElement
from .scalars import Scalar, format_literal, parse_literal
from .verdicts import Check, Verdict, Witness

__version__ = "0.1.0"

__all__ = [
    "AlgebraFile", "Bicharacter", "Check", "Color2VectorSpace", "ColorAlgebra", "CrossedModule",
    "Degree", "FIXTURES", "GradedMap", "GradedSpace", "GradingGroup", "LieColor2Algebra",
    "Morphism2", "MultilinearMap", "OmniAlgebra", "OmniElement", "QuadraticForm", "Representation",
    "Scalar", "SkeletalQuadruple", "Subspace", "TwoTermAlgebra", "Vec", "Verdict", "Witness",
    "check_axioms", "check_crossed_module", "check_jacobiator_identity", "check_leibniz",
    "check_lie_color", "check_quadratic", "check_representation", "crossed_to_strict",
    "dump_algebra_file", "fixture", "format_literal", "gl_bracket", "lc2_roundtrip",
    "parse_algebra_file", "parse_literal", "skeletal_to_quadruple", "strict_to_crossed", "string_from_quadratic",
    "two_term_from_omni", "validate_bicharacter",
]
