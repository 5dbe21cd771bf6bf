"""Exact hitting numbers of maximum independent sets, and a checker for the
bound h(G) <= 10 t^t omega^(3t-3) log omega on graphs without induced
matchings of size t."""

from .family import (
    MaxISFamily,
    RationalWeights,
    Transversal,
    enumerate_max_independent_sets,
    fractional_transversal,
    hitting_number,
    is_shattered,
    is_transversal,
    vc_dimension,
)
from .graph import (
    Graph,
    Graph6Error,
    GeneratorSpec,
    all_graphs_stream,
    complement,
    generate,
    induced_subgraph,
    parse_graph6,
    random_stream,
    to_graph6,
)
from .invariants import (
    ChromaticBudgetExceeded,
    FamilyCapExceeded,
    InvariantValue,
    alpha,
    chromatic_number,
    induced_matching_number,
    omega,
    wagon_bound,
)
from .proof import (
    ChainReport,
    NetSample,
    ShatterWitness,
    WitnessConstructionError,
    check_final_arithmetic,
    epsilon_net_sample,
    hw_bound,
    main_bound,
    ramsey_binomial_bound,
    verify_chain,
    witness_from_shattered,
)

__version__ = "0.1.0"
