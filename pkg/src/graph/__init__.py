from src.graph.generators import (SUPPORTED_MODELS, ModelParameterError,
                                  from_networkx, generate, to_networkx)
from src.graph.io import (GraphFormatError, format_graph, graph_digest,
                          load_graph, parse_graph, save_graph)
from src.graph.multigraph import (EDGE_ID_LIMIT, INFINITY, Distance,
                                  DuplicateEdgeError, EdgeIdRangeError,
                                  EmptyGraphError, GraphError,
                                  InvalidPartitionError, MultiGraph,
                                  NodeRangeError, Partition, SelfLoopError,
                                  bfs_distances, build_graph, cluster_graph,
                                  diameter, edges_between, induced_subgraph,
                                  spanning_subgraph)
from src.graph.trees import ClusterTree, TreeHeightError

__all__ = [
    "EDGE_ID_LIMIT",
    "INFINITY",
    "SUPPORTED_MODELS",
    "ClusterTree",
    "Distance",
    "DuplicateEdgeError",
    "EdgeIdRangeError",
    "EmptyGraphError",
    "GraphError",
    "GraphFormatError",
    "InvalidPartitionError",
    "ModelParameterError",
    "MultiGraph",
    "NodeRangeError",
    "Partition",
    "SelfLoopError",
    "TreeHeightError",
    "bfs_distances",
    "build_graph",
    "cluster_graph",
    "diameter",
    "edges_between",
    "format_graph",
    "from_networkx",
    "generate",
    "graph_digest",
    "induced_subgraph",
    "load_graph",
    "parse_graph",
    "save_graph",
    "spanning_subgraph",
    "to_networkx",
]
