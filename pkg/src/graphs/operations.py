"""Graph surgeries. Every operation returns a new graph; inputs are never mutated."""

from typing import Iterable, List

from shared.settings import get_settings
from shared.validators import validate_vertex, validate_vertex_count

from .bitset import full_mask, iter_bits, lowest_bit
from .models import Graph, Subgraph, VertexSet


def induced_subgraph(g: Graph, s: VertexSet) -> Subgraph:
    """
    Restrict a graph to a vertex set.

    Vertices keep their relative order: subgraph vertex i is the i-th
    smallest member of s, recorded in the returned labels.

    Args:
        g: Parent graph
        s: Vertices to keep

    Returns:
        The induced subgraph and its relabeling map

    Raises:
        ValidationError: If s names a vertex outside g
    """
    g.check_vertex_set(s)
    labels = tuple(iter_bits(s.bits))
    position = {old: new for new, old in enumerate(labels)}

    adj = []
    for old in labels:
        row = 0
        for u in iter_bits(g.adj[old] & s.bits):
            row |= 1 << position[u]
        adj.append(row)

    return Subgraph(graph=Graph.trusted(len(labels), adj), labels=labels)


def delete_closed_neighborhood(g: Graph, v: int) -> Subgraph:
    """
    Remove N[v] from a graph.

    Args:
        g: Parent graph
        v: Vertex whose closed neighborhood is deleted

    Returns:
        The subgraph induced on V(g) minus N[v] and its relabeling map

    Raises:
        ValidationError: If v is out of range
    """
    v = validate_vertex(g.n, v)
    keep = g.vertex_mask & ~(g.adj[v] | 1 << v)
    return induced_subgraph(g, VertexSet(bits=keep))


def disjoint_union(g: Graph, h: Graph) -> Graph:
    """
    Vertex-disjoint union; vertices of h are shifted by g.n.

    Raises:
        VertexLimitError: If the combined vertex count exceeds the cap
    """
    n = validate_vertex_count(g.n + h.n, get_settings().max_vertices, "disjoint union")
    return Graph.trusted(n, g.adj + tuple(row << g.n for row in h.adj))


def disjoint_union_all(graphs: Iterable[Graph]) -> Graph:
    """Vertex-disjoint union of several graphs, in order."""
    result = Graph.empty(0)
    for graph in graphs:
        result = disjoint_union(result, graph)
    return result


def complement(g: Graph) -> Graph:
    """Complement graph: u~v iff u != v and u, v are not adjacent in g."""
    everything = g.vertex_mask
    return Graph.trusted(
        g.n, tuple(everything & ~row & ~(1 << v) for v, row in enumerate(g.adj))
    )


def connected_components(g: Graph) -> List[int]:
    """
    Connected components as vertex masks, ordered by smallest vertex.

    Args:
        g: Graph

    Returns:
        One mask per component
    """
    remaining = full_mask(g.n)
    components = []
    while remaining:
        frontier = 1 << lowest_bit(remaining)
        component = frontier
        while frontier:
            reached = 0
            for v in iter_bits(frontier):
                reached |= g.adj[v]
            frontier = reached & ~component
            component |= frontier
        components.append(component)
        remaining &= ~component
    return components
