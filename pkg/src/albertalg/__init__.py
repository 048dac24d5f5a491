"""Exact arithmetic in 27-dimensional exceptional Jordan algebras.

Three presentations of Albert algebras over number fields (reduced
hermitian H3 over an octonion algebra and the two Tits constructions),
with structure-group words, factorization of inner automorphisms into
U-operator products, fixed-point analysis, and the positive unipotent
group of the associated Moufang hexagon. All arithmetic is exact over
the rationals and small number fields.
"""

from .albert import (FIRST, REDUCED, SECOND, AlbertAlgebra, AlbertElem,
                     LinOp, adjoint, cross, invert, jmul, newton_norm,
                     trace, trace_form, trace_norm, u_apply, u_op)
from .assoc3 import (CYCLIC, MATRIX3, Assoc3Algebra, AssocElem,
                     UnitaryInvolution, unitary_data)
from .cayley import CayleyAlgebra, CayleyElem, cayley_u_op, reflection
from .errors import AlbertError
from .fields import CYCLIC7, GAUSS, QQ, FieldElem, NumberField, hilbert90
from .fixpoint import (Subspace, element_fixed_set, fixed_subspace,
                       has_fixed_vector_in_A0, subalgebra_closure,
                       trace_zero)
from .hexagon import HexElem, group_commutator, hex_inv, hex_mul, \
    relation_audit
from .innerfact import (CommutatorWitness, WedderburnData, chi_map,
                        commutator_decomp_cyclic, cube_commutators,
                        ia_word, jp_word, jp_word_from_witness,
                        min_poly_is_cyclic, phi_p_word, psi_word,
                        reduce_similarity, reduce_to_isometry,
                        wedderburn_factor)
from .ratio import rat, rat_str
from .strmaps import (InstrWord, PrimitiveGen, ScalarGen, UGen, classify,
                      conjugate_word, eval_word, make_ia, make_jp,
                      make_phi, make_psi, make_rt, verify_automorphism)
from .suites import SUITES, run_suite
from .workspace import Workspace, builtin_workspace

__version__ = "0.1.0"
