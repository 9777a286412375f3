"""Graph representation and the combinatorial routines the rest of the package uses."""

from .core import (
    Edge, Graph, GuardError, bits, co_line_graph, complement, complete_bipartite,
    complete_graph, component_of, connected_components, cycle_graph, cycle_power,
    disjoint_union, empty_graph, line_graph, mycielski_grotzsch, path_graph,
    prism_graph, star_graph, wheel_graph,
)
from .chromatic import (
    COLOR_GUARD, CriticalityReport, chromatic_number_exact, is_4_critical,
    is_k_colorable, is_proper,
)
from .linegraph import Root, check_root, root_graph
from .matching import (
    EarDecomposition, has_perfect_matching, is_factor_critical, iter_maximum_matchings,
    matching_number, max_matching, odd_ear_decomposition,
)
from .structure import (
    DEFAULT_CYCLE_CAP, STABLE_SET_GUARD, CycleLimitError, contains_induced,
    contract_stable_neighborhood, enumerate_cliques, enumerate_simple_cycles,
    enumerate_stable_sets, find_clique, find_subgraph, is_bipartite, is_clique,
    is_isomorphic, is_stable, is_two_connected, iter_simple_cycles, max_cliques_by_size,
    omega, shortest_odd_cycle, two_coloring,
)
