"""Graphs, generators, edge-list ingestion and the walk's transition matrix"""

from walkpy.graphs.graph import Graph, build_graph, parse_edge_list, read_edge_list,\
    format_edge_list, is_complete, is_cycle, is_path, is_bipartite
from walkpy.graphs.generators import generate_graph, KINDS
from walkpy.graphs.matrices import TransitionMatrix, transition_matrix, stationary_distribution,\
    walk_distribution
