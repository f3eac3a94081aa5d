"""Graph data models."""

from typing import Iterable, Iterator, List, Sequence, Tuple

from pydantic import BaseModel, ConfigDict, Field, model_validator

from shared.exceptions import InvalidGraphError
from shared.settings import get_settings
from shared.validators import validate_vertex, validate_vertex_bits, validate_vertex_count

from .bitset import bits_from, full_mask, iter_bits, popcount


class VertexSet(BaseModel):
    """Bit-indexed subset of the vertices of a graph."""

    model_config = ConfigDict(frozen=True)

    bits: int = Field(0, ge=0)

    @classmethod
    def of(cls, vertices: Iterable[int]) -> "VertexSet":
        """Build a vertex set from vertex indices."""
        vertices = list(vertices)
        if any(v < 0 for v in vertices):
            raise InvalidGraphError("Vertex indices must be nonnegative")
        return cls(bits=bits_from(vertices))

    def __len__(self) -> int:
        return popcount(self.bits)

    def __iter__(self) -> Iterator[int]:  # type: ignore[override]
        return iter_bits(self.bits)

    def __contains__(self, v: int) -> bool:
        return v >= 0 and bool(self.bits >> v & 1)

    def to_list(self) -> List[int]:
        """Members in ascending order."""
        return list(iter_bits(self.bits))

    def __str__(self) -> str:
        return "{" + ",".join(str(v) for v in self) + "}"


class Graph(BaseModel):
    """
    Immutable simple graph on vertices 0..n-1.

    adj[v] is the open neighborhood N(v) as a bit-indexed vertex set.
    """

    model_config = ConfigDict(frozen=True)

    n: int = Field(0, ge=0)
    adj: Tuple[int, ...] = ()

    @model_validator(mode="after")
    def _check_invariants(self) -> "Graph":
        validate_vertex_count(self.n, get_settings().max_vertices)

        if len(self.adj) != self.n:
            raise InvalidGraphError(
                f"Adjacency has {len(self.adj)} rows for a graph on {self.n} vertices"
            )

        for v, row in enumerate(self.adj):
            if row < 0 or row >> self.n:
                raise InvalidGraphError(f"Neighborhood of {v} leaves [0, {self.n})")
            if row >> v & 1:
                raise InvalidGraphError(f"Vertex {v} is adjacent to itself")
            for u in iter_bits(row):
                if not self.adj[u] >> v & 1:
                    raise InvalidGraphError(f"Edge {v}-{u} is not symmetric")

        return self

    @classmethod
    def empty(cls, n: int = 0) -> "Graph":
        """Edgeless graph on n vertices."""
        return cls(n=n, adj=(0,) * n)

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[Sequence[int]]) -> "Graph":
        """
        Build a graph from an edge list.

        Args:
            n: Vertex count
            edges: Pairs (u, v) with u != v

        Returns:
            The graph

        Raises:
            InvalidGraphError: If an edge is a loop or leaves [0, n)
        """
        validate_vertex_count(n, get_settings().max_vertices)
        adj = [0] * n
        for u, v in edges:
            u = validate_vertex(n, u)
            v = validate_vertex(n, v)
            if u == v:
                raise InvalidGraphError(f"Loop at vertex {u}")
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        return cls(n=n, adj=tuple(adj))

    @classmethod
    def trusted(cls, n: int, adj: Sequence[int]) -> "Graph":
        """Wrap adjacency rows already known to satisfy the invariants."""
        return cls.model_construct(n=n, adj=tuple(adj))

    @property
    def vertex_mask(self) -> int:
        """Mask of all vertices."""
        return full_mask(self.n)

    @property
    def edges(self) -> List[Tuple[int, int]]:
        """Edges (u, v) with u < v, in lexicographic order."""
        return [
            (u, v)
            for u in range(self.n)
            for v in iter_bits(self.adj[u] >> (u + 1) << (u + 1))
        ]

    @property
    def edge_count(self) -> int:
        """Number of edges."""
        return sum(popcount(row) for row in self.adj) // 2

    def degree(self, v: int) -> int:
        """Degree of v."""
        return popcount(self.adj[validate_vertex(self.n, v)])

    def neighbors(self, v: int) -> VertexSet:
        """Open neighborhood N(v)."""
        return VertexSet(bits=self.adj[validate_vertex(self.n, v)])

    def closed_neighborhood(self, v: int) -> VertexSet:
        """Closed neighborhood N[v] = N(v) + {v}."""
        v = validate_vertex(self.n, v)
        return VertexSet(bits=self.adj[v] | 1 << v)

    def closed_rows(self) -> Tuple[int, ...]:
        """N[v] masks for every vertex."""
        return tuple(row | 1 << v for v, row in enumerate(self.adj))

    def check_vertex_set(self, s: VertexSet) -> VertexSet:
        """Ensure s only names vertices of this graph."""
        validate_vertex_bits(self.n, s.bits)
        return s


class Subgraph(BaseModel):
    """An induced subgraph together with its relabeling map."""

    model_config = ConfigDict(frozen=True)

    graph: Graph
    labels: Tuple[int, ...] = Field(
        default=(), description="labels[i] is the parent vertex of subgraph vertex i"
    )

    def lift(self, s: VertexSet) -> VertexSet:
        """Map a vertex set of the subgraph back to parent labels."""
        self.graph.check_vertex_set(s)
        return VertexSet(bits=bits_from(self.labels[i] for i in s))
