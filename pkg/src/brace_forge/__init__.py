"""Rota–Baxter operators on finite groups, the skew left braces they induce and
the set-theoretic Yang–Baxter solutions built from those braces."""

from .errors import (BoundExceeded, BraceForgeError, Check, InternalError, PreconditionError,
                     ValidationError)
from .groups import (FiniteGroup, HolomorphGroup, Subgroup, alternating, automorphisms, build_group,
                     cyclic, dihedral, direct_product, holomorph, isomorphic, opposite,
                     quaternion8, regular_subgroups, semidirect_product, structure_report,
                     symmetric, verify_group_table)
from .rb_algebra import RbMatrix, algebra_rb_orbits, enumerate_algebra_rb, group_rb_from_matrix
from .rota_baxter import (RbOperator, classify_rb_orbits, construct_rb, derived_circle_group,
                          enumerate_rb_operators, is_rb_operator, transform_rb)
from .braces import (SkewBrace, brace_from_rb, brace_from_rb_neg1, brace_from_regular_subgroup,
                     brace_isomorphic, enumerate_braces, invariant_subsets, is_lambda_homomorphic,
                     lambda_analysis, parity_brace_window, semidirect_brace, star_and_series,
                     two_sided_cocycle_check, verify_brace)
from .embedding import TildeGroup, build_tilde, recover_rb_complete, verify_embedding, zeta_series
from .ybe import (Rack, YbeSolution, conj_quandle, conjugate_solution, direct_rb_solution,
                  rack_form, rack_quandle_check, solution_from_brace, solution_from_rack,
                  solution_from_rb, verify_solution)
from .multibrace import MultiBrace, build_multibrace, verify_multibrace

__version__ = "0.1.0"
