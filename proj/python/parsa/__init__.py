"""Vertex-cut bipartite graph partitioning for parameter-server workloads.

The heavy lifting lives in the C++ extension; this package re-exports it.
"""

from ._core import (
    UNBOUNDED_DELAY,
    BipartiteGraph,
    evaluate,
    exhaustive_partition,
    from_edges,
    improvement_vs_random,
    load_edge_list,
    load_libsvm,
    partition_u,
    partition_v,
    read_binary_cache,
    run_pipeline,
    synthetic_powerlaw,
    write_binary_cache,
    __version__,
)

__all__ = [
    "UNBOUNDED_DELAY",
    "BipartiteGraph",
    "evaluate",
    "exhaustive_partition",
    "from_edges",
    "improvement_vs_random",
    "load_edge_list",
    "load_libsvm",
    "partition_u",
    "partition_v",
    "read_binary_cache",
    "run_pipeline",
    "synthetic_powerlaw",
    "write_binary_cache",
    "__version__",
]
