"""Dimer quivers, their contractions, and the monomial geometry of their centers."""

from .center import (
    CenterReport,
    DimerModel,
    MonomialModel,
    StructuralError,
    center_report,
    cycle_algebra,
    homotopy_center_trunc,
    krull_dimensions,
    nonnoetherian_witness,
    reduced_center_bound,
    special_fiber,
    verify_dimension_chain,
    witness_chain,
)
from .contraction import (
    Contraction,
    ContractionError,
    check_relations_preserved,
    contract,
    is_cyclic,
    psi,
    tau_bar,
    tau_psi,
)
from .matchings import n_D, perfect_matchings, simple_matchings
from .monomials import SemigroupAlgebra, lattice_rank, locus_of, semigroup_member
from .paths import enumerate_cycles, equivalent, find_non_cancellative_pair
from .tiling import DimerQuiver, PathWord, homology_class, make_path, parse_tiling, validate

__version__ = "0.1.0"
