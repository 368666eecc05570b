"""gcd-graphs over finite commutative rings.

Construct rings as products of quotient-polynomial towers, build gcd-graphs
from principal-ideal divisor lists, decide connectivity and bound diameters,
and compute exact integer spectra via generalized Ramanujan sums — all
cross-checkable against brute-force oracles.
"""

from .cyclotomic import CycInt, cyclotomic_poly
from .dsl import (ParseError, format_element, format_ring, parse_element,
                  parse_ring_spec)
from .functional import (LinearFunctional, canonical_functional,
                         enumerate_functionals, induced_functional,
                         is_nondegenerate)
from .graph import (CubelikeGraph, DivisorList, GcdGraph, INFINITE,
                    build_gcd_graph, connectivity_predict, cubelike_reduction,
                    diameter_bounds, generating_set_decomposition,
                    min_cover_t, quotient_morphism_check, sum_of_two_units)
from .oracle import (adjacency_matrix, charpoly_exact, eigs_float,
                     poly_from_roots, verify_spectrum)
from .ramanujan import (classical_ramanujan, quotient_compatibility_check,
                        ramanujan_sum_closed, ramanujan_sum_direct)
from .rings import (Element, Ideal, LocalFactor, QuotientRing, RingDescriptor,
                    TowerFactor, euler_phi, local_decomposition, moebius)
from .spectrum import (SpectrumReport, character_eigen_check,
                       classical_spectrum_zn, eigenvalue, full_spectrum,
                       unit_orbits)

__version__ = "0.1.0"
