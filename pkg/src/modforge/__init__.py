"""Local freeness and GL_E representability over finite local rings."""

__version__ = "0.1.0"

from .config import Caps, caps, using_caps
from .errors import (AlreadyFreeError, AnnihilatorError, CapExceeded, InvariantViolation,
                     ModforgeError, NotLocalError, NotNilpotentError, NotPrincipalError,
                     PipelineError, PreconditionError, RingAxiomError, SpecError)
from .ring import (FiniteRing, RingHom, build_ring, nilradical_elements, ring_to_spec,
                   truncated_poly, units_of, zmod)
from .ideal import (Ideal, LocalStructure, enumerate_ideals, ideal_arith, ideal_closure,
                    ideal_power, ideal_product, ideal_sum, local_structure,
                    minimal_generators, quotient_ring, residue_dimension,
                    subalgebra_generates)
from .module import (FPModule, ModuleHom, Presentation, base_change, direct_sum,
                     elements_of, find_isomorphism, flattening_ideal, free_module,
                     hom_enumerate, is_free_oracle, minimal_presentation, minimize,
                     standard_module, verify_flattening_universal)
from .decompose import (DecompositionCertificate, ReductionTrace, freemodule_remark_check,
                        reduce_to_obstruction, split_principal)
from .functor import (AutGroup, ObstructionCertificate, ParabolicSubgroup,
                      certify_nonrepresentable, gl_points, kernel_block_check,
                      parabolic_points, phantom_family, recheck, restriction_kernel,
                      units_functor_points)
