"""
T(1, q) of the multigraphs K_{m+1}^{b,a} by brute-force subset enumeration.
"""
import logging
import math
from dataclasses import dataclass
from typing import List
from typing import Optional
from typing import Tuple

from jlambda import settings
from jlambda.exceptions import GuardViolation
from jlambda.qpoly import IntPoly

from ._ranges import merge_counts

logger = logging.getLogger(__name__)

Edge = Tuple[int, int, int]

# Subset ranges handed to each task.
_CHUNK_BITS = 14


@dataclass(frozen=True)
class Multigraph:
    vertex_count: int
    edges: Tuple[Edge, ...]

    def __post_init__(self) -> None:
        if self.vertex_count < 1:
            raise ValueError(f"a graph needs a vertex, found {self.vertex_count}")
        for u, v, multiplicity in self.edges:
            if u == v:
                raise ValueError(f"loop at vertex {u}")
            if not (0 <= u < self.vertex_count and 0 <= v < self.vertex_count):
                raise ValueError(f"edge ({u}, {v}) leaves the vertex range")
            if multiplicity < 1:
                raise ValueError(f"edge ({u}, {v}) has multiplicity {multiplicity}")

    @property
    def edge_count(self) -> int:
        return sum(multiplicity for _, _, multiplicity in self.edges)

    def instances(self) -> List[Tuple[int, int]]:
        """Every parallel copy as its own edge."""
        return [(u, v) for u, v, k in self.edges for _ in range(k)]

    def component_count(self, instances: List[Tuple[int, int]]) -> int:
        parent = list(range(self.vertex_count))

        def find(x: int) -> int:
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        components = self.vertex_count
        for u, v in instances:
            ru, rv = find(u), find(v)
            if ru != rv:
                parent[ru] = rv
                components -= 1
        return components


def build_K(m: int, a: int, b: int) -> Multigraph:
    """
    Vertices 0..m, a parallel edges from 0 to every other vertex and b parallel
    edges between every pair of the others. m = 0 is the single vertex.
    """
    if m < 0 or a < 1 or b < 1:
        raise ValueError(f"build_K needs m >= 0, a >= 1, b >= 1, found {(m, a, b)}")
    spokes = [(0, i, a) for i in range(1, m + 1)]
    rim = [(i, j, b) for i in range(1, m + 1) for j in range(i + 1, m + 1)]
    return Multigraph(m + 1, tuple(spokes + rim))


def _count_range(graph: Multigraph, lo: int, hi: int) -> List[int]:
    instances = graph.instances()
    tree_size = graph.vertex_count - 1
    counts = [0] * (len(instances) - tree_size + 1)
    for mask in range(lo, hi):
        size = bin(mask).count("1")
        if size < tree_size:
            continue
        chosen = [edge for k, edge in enumerate(instances) if mask >> k & 1]
        if graph.component_count(chosen) == 1:
            counts[size - tree_size] += 1
    return counts


def connected_spanning_sum(graph: Multigraph, threads: Optional[int] = None) -> IntPoly:
    """Σ t^(|A| - (V - 1)) over the edge subsets A that connect every vertex."""
    edges = graph.edge_count
    if edges > settings.subset_guard:
        raise GuardViolation("subset_guard", settings.subset_guard, edges)
    total = 1 << edges
    step = 1 << _CHUNK_BITS
    ranges = [(lo, min(lo + step, total)) for lo in range(0, total, step)]
    logger.debug(
        "Enumerating edge subsets",
        extra={"vertices": graph.vertex_count, "edges": edges, "ranges": len(ranges)},
    )
    counts = merge_counts(lambda span: _count_range(graph, *span), ranges, threads)
    return IntPoly(counts)


def tutte_I(m: int, a: int, b: int, threads: Optional[int] = None) -> IntPoly:
    """I_m^(a,b)(q) = T(1, q) of build_K(m, a, b)."""
    return connected_spanning_sum(build_K(m, a, b), threads).substitute_shift(-1)


def expected_degree(m: int, a: int, b: int) -> int:
    """Edge count minus the size of a spanning tree."""
    return m * a + b * math.comb(m, 2) - m
