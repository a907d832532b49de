"""Eccentricity matrices of trees: spectra, closed forms, extremal checks."""

__version__ = "0.1.0"

from ._accel import backend
from .closed_forms import (
    broom_argmax_candidates,
    f_a_quartic,
    gamma_d,
    h_eps_poly,
    h_equality_condition,
    h_least_eigenvalue,
    rho_squared_broom,
)
from .enumerate import free_trees, labeled_tree_oracle, trees_with_diameter
from .families import FamilySpec, double_broom, path, spider_h, star
from .formats import graph6_decode, graph6_encode
from .graph import DistanceProfile, Graph, ahu_canonical, distance_profile, graph_from_edges, is_tree
from .spectra import (
    EccentricityMatrix,
    Spectrum,
    char_poly_eval,
    eccentricity_matrix,
    eigenvalues_symmetric,
    perron_pair,
    support_is_connected,
)

__all__ = [
    "DistanceProfile",
    "EccentricityMatrix",
    "FamilySpec",
    "Graph",
    "Spectrum",
    "ahu_canonical",
    "backend",
    "broom_argmax_candidates",
    "char_poly_eval",
    "distance_profile",
    "double_broom",
    "eccentricity_matrix",
    "eigenvalues_symmetric",
    "f_a_quartic",
    "free_trees",
    "gamma_d",
    "graph6_decode",
    "graph6_encode",
    "graph_from_edges",
    "h_eps_poly",
    "h_equality_condition",
    "h_least_eigenvalue",
    "is_tree",
    "labeled_tree_oracle",
    "path",
    "perron_pair",
    "rho_squared_broom",
    "spider_h",
    "star",
    "support_is_connected",
    "trees_with_diameter",
]
