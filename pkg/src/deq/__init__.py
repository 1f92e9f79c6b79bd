"""Exact tools for the operator equation R12 R23 = R23 R12.

Membership checks for the equation and its relatives, the universal
bialgebra of a solution, Long dimodules and graded modules, D-maps with
their convolution calculus, and exhaustive classification over small
prime fields.
"""

from .fields import (Field, FunctionField, MathError, PrimeField, QQ,
                     UsageError, field_from_header)
from .linalg import Matrix, kernel_basis, matrix_inverse, rref, solve_linear
from .tensor_ops import (EndoPair, FormVerdicts, check_commuting_pair,
                         check_d, check_equivalent_forms, check_hopf,
                         check_pentagon, check_qybe, conjugate,
                         diagonal_solution, first_violation, flip_pair,
                         identity_pair, invert, lift, product_solution)
from .coalg import (BilinearForm, Coalgebra, Coideal, Comodule,
                    QuotientCoalgebra, coideal, comatrix, convolution_inverse,
                    convolve, counit_form, grouplike_coalgebra, is_coideal,
                    quotient)
from .frt import (FrtPresentation, GeneratorAction, NotASolutionError,
                  ObstructionSet, annihilation_check, d_bialgebra,
                  defect_pairing, frt_col_order, generator_action,
                  obstruction_coideal, obstructions, relation_strings,
                  require_solution, standard_comodule, universal_map)
from .dimodule import (FinAlgebra, FinBialgebra, GradedModule, LongDimodule,
                       check_long_compat, compatible_subalgebra,
                       dimodule_from_grading, grading_from_dimodule,
                       group_bialgebra, induce_from_comodule,
                       induce_from_module, r_from_dimodule, tensor_dimodule,
                       trivial_comodule, trivial_module)
from .dmap import (DMap, convolution_inverse_of_sigma, delta_form,
                   first_symmetry_violation, is_dmap, r_sigma, sigma_form,
                   sigma_from_r, strong_dmap_from_symmetric)
from .classify import CensusReport, enumerate_solutions, operator_count, orbit_reduce
from .fileio import (ParseError, read_cayley, read_coalgebra,
                     read_graded_module, read_matrix, write_cayley,
                     write_coalgebra, write_graded_module, write_matrix,
                     write_report)
from . import catalog

__all__ = [name for name in dir() if not name.startswith("_")]
