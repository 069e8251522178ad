"""Minimum Roman dominating distance energy of graphs."""

from .graph import (
    UNREACHABLE,
    DistanceMatrix,
    Family,
    FamilySpec,
    Graph,
    all_pairs_distances,
    diameter,
    disjoint_union,
    generate,
    is_connected,
    new_graph,
    parse_edge_list,
    read_edge_list,
    wiener_index,
)
from .roman import (
    RomanDominatingFunction,
    brute_force_min_rdf,
    check_sandwich,
    enumerate_min_rdfs,
    is_valid_rdf,
    min_domination,
    min_roman_domination,
)
from .spectral import (
    CharPoly,
    MRDDMatrix,
    Spectrum,
    build_mrdd,
    char_poly,
    eigenvalues,
    energy,
    mrdd_for,
    poly_roots_check,
)
from .families import FamilyPrediction, expand_factors, predict, verify_family, verify_union
from .verify import audit_graph, compute_invariants

__version__ = "0.1.0"


def roman_energy(g: Graph) -> float:
    """E_RDd of ``g`` under its canonical minimum Roman dominating function."""
    _, f = min_roman_domination(g)
    return eigenvalues(mrdd_for(g, f)).energy
