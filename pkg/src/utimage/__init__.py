"""Images of multilinear polynomials on upper triangular matrix algebras."""

from .cring import CPoly, Rat, cpoly_add, cpoly_eval, cpoly_mul, fmt_rat, parse_rat
from .errors import (DegreeCapExceeded, MissingAssignment, NotMultilinear, PolySyntaxError,
                     SizeMismatch, SolveFailure, TargetOutsideImage, UTImageError,
                     WitnessSearchExhausted)
from .imageclass import (ImageClass, SampleReport, WitnessBundle, classify,
                         conjecture_predict, sample_image, verdict_from_normal_form,
                         witness_for_target)
from .mpoly import (MultilinearPoly, expand, parse, poly, substitute, sum_of_coefficients,
                    to_text)
from .pitest import is_identity, is_identity_randomized, max_identity_level
from .relfree import BasisTerm, NormalForm, enumerate_basis, family_support, normal_form
from .utalg import UTMatrix, ad_D, commutator, mat_mul, radical_level

__version__ = "0.1.0"
