"""Rainbow fractional matchings, their LP certificates and the collapsible
complexes behind them, all in exact rational arithmetic."""

from .complex import (
    CollapseSequence,
    CollapseStep,
    CollapseTrace,
    SimplicialComplex,
    blow_up_complex,
    blow_up_sequence,
    boundary_complex,
    brute_force_collapsible,
    build_nu_complex,
    full_simplex,
    generate_collapse,
    verify_collapse,
)
from .constructions import (
    bgs_example,
    copies,
    drisko_example,
    odd_cycle_family,
    truncated_projective_plane,
    two_odd_cycles_family,
)
from .core import (
    ColoredFamily,
    Hypergraph,
    InstanceError,
    ScaleError,
    Verdict,
    WeightSystem,
    edge_set,
    incidence_vector,
    unit_weights,
)
from .instance import Instance, parse_instance, read_instance
from .lp import dual_is_unique, matching_number, nu_star, tau_star
from .matroid import ContainmentError, PartitionMatroid, color_matroid, km_witness, labeled_complex
from .rainbow import find_rainbow_fractional, find_rainbow_integral, verify_certificate

__version__ = "0.1.0"


__all__ = [
    "CollapseSequence",
    "CollapseStep",
    "CollapseTrace",
    "SimplicialComplex",
    "blow_up_complex",
    "blow_up_sequence",
    "boundary_complex",
    "brute_force_collapsible",
    "build_nu_complex",
    "full_simplex",
    "generate_collapse",
    "verify_collapse",
    "bgs_example",
    "copies",
    "drisko_example",
    "odd_cycle_family",
    "truncated_projective_plane",
    "two_odd_cycles_family",
    "ColoredFamily",
    "Hypergraph",
    "InstanceError",
    "ScaleError",
    "Verdict",
    "WeightSystem",
    "edge_set",
    "incidence_vector",
    "unit_weights",
    "Instance",
    "parse_instance",
    "read_instance",
    "dual_is_unique",
    "matching_number",
    "nu_star",
    "tau_star",
    "ContainmentError",
    "PartitionMatroid",
    "color_matroid",
    "km_witness",
    "labeled_complex",
    "find_rainbow_fractional",
    "find_rainbow_integral",
    "verify_certificate",
]
