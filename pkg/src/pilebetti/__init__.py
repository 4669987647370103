"""Multigraded Betti numbers of weighted Veronese rings via pile complexes."""

from .betti import BettiTable, betti_bh, betti_dual, betti_table, zgraded
from .complex import SimplicialComplex, alexander_dual, divisor_complex, f_vector, pile_complex
from .homology import RATIONALS, FieldSpec, HomologyProfile, boundary_matrix, reduced_betti_dims, reduced_cohomology_dims
from .invariants import (
    HighestSyzygyReport,
    RegularityReport,
    gorenstein_condition,
    gorenstein_symmetry_check,
    highest_syzygy,
    partition_count,
    pn_highest_rank,
    projective_dimension,
    regularity_bound,
)
from .lattice import (
    GeneratorSet,
    WeightsVector,
    check_complement,
    cone_contains_orthant,
    custom_generators,
    in_lattice,
    in_semigroup,
    make_weights,
    veronese_generators,
    zdegree,
)
from .verify import (
    FuzzConfig,
    fuzz_duality,
    verify_alexander,
    verify_conditions,
    verify_duality,
    verify_equivalence,
    verify_star_lemma,
)

__version__ = "0.1.0"
