"""Clique tilings of dense graphs kept free of alternating red bags, and the
(k, ell)-papartition families they encode."""

from .graph import (
    ConditionReport,
    Graph,
    InstanceInfeasible,
    Params,
    TwoColoredInstance,
    check_degree_conditions,
    max_degree,
    min_degree,
    random_dense_instance,
)
from .tiling import (
    Decomposition,
    NoPartner,
    RepairFailed,
    almost_ell_decomposition,
    find_bipartite_partner,
    is_clique,
    retile_pair,
)
from .compound import compound_partners, lemma2_lower_bound
from .repair import Bag, NoValidSwap, RepairTrace, bag_free_decomposition, find_alternating_bag, lemma3_swap
from .papartition import (
    ConstructionFailed,
    Papartition,
    SubsetUniverse,
    build_meta_instance,
    construct_papartitions,
    subset_rank,
    subset_unrank,
    too_close,
)
from .wreath import Wreath, verify_wreath_decomposition, wreath_decomposition_search, wreath_expand

__version__ = "0.1.0"
