"""Symbolic computation for (free) skew Boolean algebras.

Decides term equality in the four varieties, computes atomic normal forms in
finite free algebras, and solves structural problems (rank, free covers,
epimorphism existence, minimal generating sets, centers, intersections) for
finite algebras, cross-validated against independently constructed models.
"""

from .errors import CapExceeded
from .terms import (Alphabet, Diff, Join, Meet, ParseError, Term, Variable, Zero,
                    format_term, parse, variables)
from .primitive import (PrimitiveShape, cayley_table, format_shape, parse_shape,
                        prim_diff, prim_join, prim_meet)
from .orthosum import (AlgebraSignature, HomSpec, apply_hom, center, closure,
                       elem_diff, elem_join, elem_meet, format_element,
                       format_signature, green_d, green_l, green_r, identity_hom,
                       intersection, is_central, is_epi, kimura_project,
                       kimura_signatures, natural_leq, natural_preceq, parse_signature)
from .free import (FreeAtom, FreeElement, Variety, atom_count, element_from_json,
                   element_to_json, enumerate_elements, eval_term, extend_alphabet,
                   format_orthosum, free_center_size, free_intersection,
                   free_signature, free_size, from_finite, generator_embedding,
                   is_central_free, kimura_left, kimura_right, normal_form_terms,
                   to_finite)
from .decide import (Verdict, Witness, decide_equal, decide_equal_nf, decide_leq,
                     decide_preceq, identity_suite, union_alphabet)
from .structure import (BindingConstraint, RankReport, epi_exists, gamma,
                        min_generators, rank, rank_table)
from .models import (PartialFn, PfunIso, SXSpace, pfun_diff, pfun_iso, pfun_join,
                     pfun_meet, sx_closure_size, sx_diff, sx_generator, sx_join,
                     sx_meet, sx_verify_free)

__version__ = "0.1.0"
