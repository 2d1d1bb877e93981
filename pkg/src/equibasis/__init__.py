"""Equally entangled families of bipartite qudit bases.

Two constructions of orthonormal bases whose members all carry the same
entanglement, interpolating continuously from a product basis (t=0) to a
maximally entangled basis (t=1): one driven by quadratic Gauss-sum phases,
one by a controlled-phase gate of tunable strength (with a complete-graph
multipartite extension).
"""

from . import entanglement, gauss_basis, gauss_sums, graph_basis, linalg, verify
from .entanglement import (
    EntanglementCurve,
    bipartition_spectrum,
    curve,
    default_t_grid,
    entropy_of_entanglement,
    g_concurrence_closed_form,
    g_concurrence_numeric,
    g_concurrence_reference,
    log_g_concurrence_derivative,
    representative_state,
    schmidt_spectrum,
    single_site_density,
    spectra_spread,
)
from .gauss_basis import (
    BasisFamilySpec,
    amplitudes,
    basis_state,
    gauss_family,
    orthonormality_residual,
    quadratic_phases,
)
from .gauss_sums import (
    GaussSumParams,
    amplitude_closed_form,
    generalized_gauss_sum,
    generalized_reciprocity_residual,
    landsberg_schaar_residual,
    quadratic_gauss_sum,
)
from .graph_basis import (
    GraphFamilyState,
    cp_gate,
    fourier_state,
    full_rank_certificate,
    ghz_graph_state,
    graph_family_state,
    multipartite_family,
    vandermonde_det,
    vandermonde_logdet,
)

__version__ = "0.1.0"
