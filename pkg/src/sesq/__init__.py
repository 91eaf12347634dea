"""Exact sesquilinear forms over finite-dimensional algebras with involution.

The package builds every object concretely over an exact field context
(prime fields, small extensions, rationals): algebras from structure
constants, right modules from action matrices, forms from Gram arrays of
algebra elements.  Forms embed into a category of double-arrow objects
whose duality turns isometry questions into unit congruence in an
endomorphism ring, and verification suites check cancellation, odd-degree
descent, radical reduction and the group-bilinear correspondence.
"""

from .errors import SesqError
from .exactfield import (ExtField, Field, PrimeField, RationalField,
                         field_make, find_irreducible)
from .algebra import (InvAlgebra, algebra_validate, cyclic_group_json,
                      group_ring, matrix_algebra, trivial_algebra)
from .amodule import (ModuleHom, RightModule, direct_sum, double_dual_map,
                      dual_hom, dual_module, hom_space, module_validate,
                      reflexive_check, regular_module)
from .sesqform import (GBilinearForm, SesqForm, SesqSystem, form_validate,
                       gbilinear_to_sesq, isometry_criterion, left_adjoint,
                       orth_sum, random_form, right_adjoint,
                       sesq_to_gbilinear, unimodular_check)
from .darrow import (DAMorphism, DoubleArrow, HermPair, IsoResult,
                     canonical_double_dual, da_dual, da_isomorphic,
                     da_morphism_check, f_on_morphism, form_of_herm,
                     herm_check, herm_pushforward, q_of_form)
from .endoring import (EndoRing, endo_compute, herm_classes,
                       induced_involution, quotient_radical, radical,
                       transfer_class, units_enumerate)
from .decide import (DecisionReport, SuiteReport, enumerate_forms,
                     gbilinear_isometry, isometry_bruteforce,
                     isometry_decide, isometry_transfer, springer_check,
                     summand_enumerate, transfer_setup,
                     witt_cancellation_check)
from .serialize import dumps, load, loads, save

__version__ = "0.1.0"

__all__ = [name for name in dir() if not name.startswith("_")]
