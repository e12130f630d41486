"""General-graph resolving-set oracle.

Distances come from plain breadth-first search on adjacency lists, with no
shared machinery with the bit-parallel hypercube path; that independence is
what makes this module usable as a cross-check oracle.  It also carries the
K2 cartesian product used to lift resolving sets one dimension up.
"""

from __future__ import annotations

import time
from collections import deque
from dataclasses import dataclass
from typing import Iterable, Sequence

from .core import check_dimension
from .resolve import VerificationReport

UNREACHABLE = -1

# Adjacency for Q^n has n * 2^(n-1) edges; 16 keeps materialization sane.
HYPERCUBE_CAP = 16


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph as sorted adjacency lists."""

    vertex_count: int
    adjacency: tuple[tuple[int, ...], ...]


@dataclass(frozen=True)
class DistanceMatrix:
    """All-pairs hop counts; UNREACHABLE marks disconnected pairs."""

    dist: tuple[tuple[int, ...], ...]


def graph_from_edges(vertex_count: int, edges: Iterable[tuple[int, int]]) -> Graph:
    """Build and validate a Graph from an edge list.

    Rejects self-loops, duplicate edges and out-of-range endpoints.
    """
    if vertex_count < 1:
        raise ValueError(f"graph needs at least one vertex, got {vertex_count}")
    seen: set[tuple[int, int]] = set()
    neighbours: list[list[int]] = [[] for _ in range(vertex_count)]
    for u, v in edges:
        if not (0 <= u < vertex_count and 0 <= v < vertex_count):
            raise ValueError(f"edge ({u},{v}) out of range 0..{vertex_count - 1}")
        if u == v:
            raise ValueError(f"self-loop at vertex {u}")
        key = (min(u, v), max(u, v))
        if key in seen:
            raise ValueError(f"duplicate edge ({u},{v})")
        seen.add(key)
        neighbours[u].append(v)
        neighbours[v].append(u)
    return Graph(vertex_count, tuple(tuple(sorted(ns)) for ns in neighbours))


def build_hypercube(n: int) -> Graph:
    """Q^n as an explicit graph: vertex v adjacent to v XOR 2^i for each i."""
    check_dimension(n)
    if n > HYPERCUBE_CAP:
        raise ValueError(f"explicit hypercube adjacency is capped at n={HYPERCUBE_CAP}")
    size = 1 << n
    return Graph(size, tuple(tuple(sorted(v ^ (1 << i) for i in range(n))) for v in range(size)))


def bfs_distances(g: Graph, source: int) -> list[int]:
    """Hop counts from source to every vertex; UNREACHABLE where disconnected."""
    if not 0 <= source < g.vertex_count:
        raise ValueError(f"source {source} out of range 0..{g.vertex_count - 1}")
    dist = [UNREACHABLE] * g.vertex_count
    dist[source] = 0
    queue = deque((source,))
    while queue:
        u = queue.popleft()
        du = dist[u]
        for w in g.adjacency[u]:
            if dist[w] == UNREACHABLE:
                dist[w] = du + 1
                queue.append(w)
    return dist


def is_connected(g: Graph) -> bool:
    return UNREACHABLE not in bfs_distances(g, 0)


def distance_matrix(g: Graph) -> DistanceMatrix:
    """All-pairs distances via one BFS per vertex (test-oracle use)."""
    return DistanceMatrix(tuple(tuple(bfs_distances(g, v)) for v in range(g.vertex_count)))


def is_resolving_general(g: Graph, landmarks: Sequence[int]) -> VerificationReport:
    """BFS-based resolving check; same report contract as resolve.is_resolving."""
    t0 = time.perf_counter()
    if not landmarks:
        raise ValueError("empty landmark set cannot be verified")
    for s in landmarks:
        if not 0 <= s < g.vertex_count:
            raise ValueError(f"landmark {s} out of range 0..{g.vertex_count - 1}")
    if len(set(landmarks)) != len(landmarks):
        raise ValueError("landmarks must be pairwise distinct")
    if not is_connected(g):
        raise ValueError("resolving sets are only defined here for connected graphs")
    dists = [bfs_distances(g, s) for s in landmarks]
    groups: dict[tuple[int, ...], list[int]] = {}
    for v in range(g.vertex_count):
        groups.setdefault(tuple(d[v] for d in dists), []).append(v)
    witness: tuple[int, int] | None = None
    for members in groups.values():
        if len(members) >= 2:
            pair = (members[0], members[1])  # ascending: vertices were scanned in order
            if witness is None or pair < witness:
                witness = pair
    return VerificationReport(
        resolving=witness is None,
        witness=witness,
        vertices_checked=g.vertex_count,
        elapsed=time.perf_counter() - t0,
    )


def cartesian_product_k2(g: Graph) -> Graph:
    """Two copies of g plus a perfect matching between corresponding vertices.

    Copy-0 vertex v keeps index v; copy-1 vertex v becomes v + vertex_count.
    With that map, the product of Q^n with an edge is exactly Q^{n+1}.
    """
    size = g.vertex_count
    copy0 = tuple(ns + (v + size,) for v, ns in enumerate(g.adjacency))
    copy1 = tuple((v,) + tuple(u + size for u in g.adjacency[v]) for v in range(size))
    return Graph(2 * size, copy0 + copy1)


def parse_graph(text: str) -> Graph:
    """Parse the edge-list format: '#' comments, then 'p <count>', then 'u v' lines."""
    vertex_count: int | None = None
    edges: list[tuple[int, int]] = []
    seen: set[tuple[int, int]] = set()
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        fields = line.split()
        if vertex_count is None:
            if fields[0] != "p" or len(fields) != 2 or not fields[1].isdigit():
                raise ValueError(f"line {lineno}: expected 'p <vertex_count>', got {raw!r}")
            vertex_count = int(fields[1])
            if vertex_count < 1:
                raise ValueError(f"line {lineno}: vertex count must be >= 1")
            continue
        if len(fields) != 2:
            raise ValueError(f"line {lineno}: expected 'u v', got {raw!r}")
        try:
            u, v = int(fields[0]), int(fields[1])
        except ValueError:
            raise ValueError(f"line {lineno}: non-integer endpoint in {raw!r}") from None
        if not (0 <= u < vertex_count and 0 <= v < vertex_count):
            raise ValueError(f"line {lineno}: edge ({u},{v}) out of range 0..{vertex_count - 1}")
        if u == v:
            raise ValueError(f"line {lineno}: self-loop at vertex {u}")
        key = (min(u, v), max(u, v))
        if key in seen:
            raise ValueError(f"line {lineno}: duplicate edge ({u},{v})")
        seen.add(key)
        edges.append((u, v))
    if vertex_count is None:
        raise ValueError("missing 'p <vertex_count>' line")
    return graph_from_edges(vertex_count, edges)


def load_graph(path: str) -> Graph:
    with open(path, "r", encoding="utf-8") as fh:
        return parse_graph(fh.read())
