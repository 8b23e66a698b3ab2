from src.verify.counts import (CONCENTRATION_FLOOR, budget_bound, check_counts,
                               check_edges, check_node_counts, check_protocol,
                               edge_formula, heavy_clustering)
from src.verify.dataclass import (ClusterDiameter, CountsReport, DiameterCheck,
                                  EdgeCountCheck, HeavyClusteringReport,
                                  NodeCountCheck, PartitionCheck,
                                  ProtocolCheck, StretchCheck,
                                  StretchViolation, VerificationReport)
from src.verify.oracles import (SpannerDistances, check_cluster_diameters,
                                check_partition, check_stretch,
                                completeness_misses, measure_stretch)
from src.verify.report import verify_run

__all__ = [
    "CONCENTRATION_FLOOR",
    "ClusterDiameter",
    "CountsReport",
    "DiameterCheck",
    "EdgeCountCheck",
    "HeavyClusteringReport",
    "NodeCountCheck",
    "PartitionCheck",
    "ProtocolCheck",
    "SpannerDistances",
    "StretchCheck",
    "StretchViolation",
    "VerificationReport",
    "budget_bound",
    "check_cluster_diameters",
    "check_counts",
    "check_edges",
    "check_node_counts",
    "check_partition",
    "check_protocol",
    "check_stretch",
    "completeness_misses",
    "edge_formula",
    "heavy_clustering",
    "measure_stretch",
    "verify_run",
]
