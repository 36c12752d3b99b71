"""Certified coloring toolkit for {P3 u P2, gem}-free graphs."""

__version__ = "0.1.0"

from .coloring import (
    CertificationError,
    ClassViolationError,
    ColoringTrace,
    color_cograph,
    color_three_omega,
    color_two_omega,
    greedy_coloring,
    verify_proper,
)
from .exact import (
    ChiResult,
    CliqueResult,
    SizeGuardError,
    chi_alpha2_shortcut,
    chromatic_number,
    independence_number,
    max_clique,
)
from .generators import (
    ExpansionSpec,
    SamplingError,
    complete_expansion,
    groetzsch_graph,
    mycielskian,
    named_graph,
    random_class_member,
    schlafli_complement,
)
from .graphs import (
    Coloring,
    Graph,
    GraphError,
    bits,
    bracket_complete,
    bracket_empty,
    build_graph,
    complement,
    disjoint_union,
    induced_subgraph,
    join,
    mask_of,
)
from .partition import WBCPartition, build_partition, partition_for, run_all_checks
from .patterns import (
    Pattern,
    PatternError,
    PatternWitness,
    find_induced,
    is_class_member,
    is_isomorphic,
    is_p3_free,
    is_p4_free,
    pattern,
)
