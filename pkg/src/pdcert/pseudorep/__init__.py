"""Two-dimensional pseudo-characters of small finite groups over small finite
local rings, and the generalized matrix algebras that carry them."""

from .characters import (
    AxiomReport,
    PseudoCharacter,
    Reducibility,
    characters,
    check_axioms,
    find_breaking_perturbation,
    from_characters,
    h1_dimension,
    is_reducible,
    residual_characters,
    triple_defect,
)
from .gma import (
    DeskGMA,
    GMABuild,
    GMARepresentation,
    NakayamaBound,
    RModule,
    build_gma_from_rep,
    free_rank_one_transport,
    ideal_reduction_is_reducible,
    nakayama_bound,
    rep_matrix_check,
)
from .groups import CATALOG_GROUPS, FiniteGroup, catalog_group
from .representations import (
    DEFAULT_BUDGET,
    Representation,
    SearchResult,
    arises_from_representation,
    random_representation,
)
from .rings import CATALOG_RINGS, MAX_RING_SIZE, FiniteLocalRing, catalog_ring
from .specimens import Specimen, catalog_specimens

verify_pseudo_axioms = check_axioms

__all__ = [
    "AxiomReport",
    "CATALOG_GROUPS",
    "CATALOG_RINGS",
    "DEFAULT_BUDGET",
    "DeskGMA",
    "FiniteGroup",
    "FiniteLocalRing",
    "GMABuild",
    "GMARepresentation",
    "MAX_RING_SIZE",
    "NakayamaBound",
    "PseudoCharacter",
    "RModule",
    "Reducibility",
    "Representation",
    "SearchResult",
    "Specimen",
    "arises_from_representation",
    "build_gma_from_rep",
    "catalog_group",
    "catalog_ring",
    "catalog_specimens",
    "characters",
    "check_axioms",
    "find_breaking_perturbation",
    "free_rank_one_transport",
    "from_characters",
    "h1_dimension",
    "ideal_reduction_is_reducible",
    "is_reducible",
    "nakayama_bound",
    "random_representation",
    "rep_matrix_check",
    "residual_characters",
    "triple_defect",
    "verify_pseudo_axioms",
]
