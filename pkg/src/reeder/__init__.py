"""Orbit counting for the generalized Reeder puzzle on (twisted) Dynkin diagrams.

Galois cohomology of real reductive groups and component counts of real
homogeneous spaces, computed by exhaustive enumeration over labelings.
"""

from .dynkin import DynkinDiagram, DynkinType, ExtendedDiagram, automorphisms, build_diagram, extend, subdiagram
from .errors import (CapExceededError, CatalogError, InvalidSpecError, InvalidTypeError, KacValidationError,
                     NotAvailableError, ReederError, UnsupportedFormError, UnsupportedIsogenyError,
                     UnsupportedSubsetError)
from .forms import (KacDiagram, RealFormSpec, closed_form_count, h1_cardinality, h1_representatives,
                    kac_to_twisting, named_form, reduce_outer, validate_kac)
from .homspace import Pi0Result, pi0_count, pi0_with_custom_embedding, reduced_pi0, spin_odd_odd_pi0
from .lattice import (EmbeddingMap, SubgroupSpec, coroot_matrix, embedding_mod2, fundamental_group_order,
                      induced_coloring, smith_normal_form)
from .puzzle import (DEFAULT_CAP, OrbitDecomposition, PuzzleInstance, apply_move, class_of_zero, component_count,
                     counted_neighbors, enumerate_orbits, is_fixed, orbit_of, product_decomposition)

__version__ = "0.1.0"
