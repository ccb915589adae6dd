"""Berge paths and cycles in uniform hypergraphs.

Exact detectors with checkable certificates, the extremal constructions and
closed-form Turán numbers for long Berge cycles and paths, a constructive
structural witness finder, and an exhaustive small-n census.
"""

from .berge import (
    BergeCycle,
    BergePath,
    SemiPath,
    find_berge_cycle_at_least,
    find_berge_path,
    longest_berge_cycle,
    maximum_semi_path,
    verify_certificate,
)
from .census import (
    CensusResult,
    SearchConfig,
    enumerate_extremal,
    jackson_check,
    turan_census,
)
from .constructions import (
    BlockTreeTemplate,
    ExtremalQuery,
    apex_extend,
    block_tree,
    extremal_value,
    r_star,
    recognize,
)
from .core import (
    Hypergraph,
    canonical_form,
    hyperedge_neighborhood,
    incidence_graph,
    read_hgr,
    shadow_blocks,
    two_shadow,
    validate,
    write_hgr,
)
from .witness import Witness, find_witness, verify_witness

__all__ = [
    "BergeCycle", "BergePath", "BlockTreeTemplate", "CensusResult", "ExtremalQuery",
    "Hypergraph", "SearchConfig", "SemiPath", "Witness", "apex_extend", "block_tree",
    "canonical_form", "enumerate_extremal", "extremal_value", "find_berge_cycle_at_least",
    "find_berge_path", "find_witness", "hyperedge_neighborhood", "incidence_graph",
    "jackson_check", "longest_berge_cycle", "maximum_semi_path", "r_star", "read_hgr",
    "recognize", "shadow_blocks", "turan_census", "two_shadow", "validate",
    "verify_certificate", "verify_witness", "write_hgr",
]
