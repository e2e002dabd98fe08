"""Immutable simple graphs with dense vertex ids, generators, and queries."""

from __future__ import annotations

import math
import random
from dataclasses import dataclass
from typing import Iterable, Iterator

from .errors import InputFormatError, PreconditionError

# Distinguished "no bound" value.  Compares correctly against every integer
# and never collides with a finite bound.
UNBOUNDED = math.inf


@dataclass(frozen=True)
class Graph:
    """Undirected simple graph on vertex ids 0..n-1, stored as adjacency sets.

    Instances are immutable; vertex deletion produces a new graph together
    with an old-id -> new-id table (see remove_vertices).
    """

    adjacency: tuple[frozenset[int], ...]

    def __post_init__(self) -> None:
        n = len(self.adjacency)
        for v, nbrs in enumerate(self.adjacency):
            if v in nbrs:
                raise InputFormatError(f"self-loop at vertex {v}")
            for u in nbrs:
                if not 0 <= u < n:
                    raise InputFormatError(f"neighbor {u} of vertex {v} out of range")
                if v not in self.adjacency[u]:
                    raise InputFormatError(f"asymmetric adjacency between {v} and {u}")

    @property
    def n(self) -> int:
        return len(self.adjacency)

    @property
    def m(self) -> int:
        return sum(len(nbrs) for nbrs in self.adjacency) // 2

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    def degrees(self) -> list[int]:
        return [len(nbrs) for nbrs in self.adjacency]

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.adjacency[u]

    def edges(self) -> Iterator[tuple[int, int]]:
        """Yield each edge once as (u, v) with u < v."""
        for u, nbrs in enumerate(self.adjacency):
            for v in nbrs:
                if u < v:
                    yield u, v


def graph_from_edges(n: int, edges: Iterable[tuple[int, int]]) -> Graph:
    """Build a graph on n vertices; rejects loops, duplicates, and bad ids."""
    if n < 0:
        raise PreconditionError("vertex count must be nonnegative")
    adj: list[set[int]] = [set() for _ in range(n)]
    for u, v in edges:
        if not (0 <= u < n and 0 <= v < n):
            raise InputFormatError(f"edge ({u}, {v}) out of range for n={n}")
        if u == v:
            raise InputFormatError(f"self-loop at vertex {u}")
        if v in adj[u]:
            raise InputFormatError(f"duplicate edge ({u}, {v})")
        adj[u].add(v)
        adj[v].add(u)
    return Graph(tuple(frozenset(s) for s in adj))


# ---- generators -------------------------------------------------------------


def complete_bipartite(n: int) -> Graph:
    """K_{n,n} with side X on ids 0..n-1 and side Y on ids n..2n-1."""
    if n < 1:
        raise PreconditionError("complete_bipartite needs n >= 1")
    xs = frozenset(range(n))
    ys = frozenset(range(n, 2 * n))
    return Graph(tuple(ys if v < n else xs for v in range(2 * n)))


def path(n: int) -> Graph:
    """Path on n vertices, ids in path order."""
    if n < 1:
        raise PreconditionError("path needs n >= 1")
    return graph_from_edges(n, [(i, i + 1) for i in range(n - 1)])


def cycle(n: int) -> Graph:
    """Cycle on n vertices.  Needs n >= 3 to stay loop- and multi-edge-free."""
    if n < 3:
        raise PreconditionError("cycle needs n >= 3 to remain a simple graph")
    return graph_from_edges(n, [(i, (i + 1) % n) for i in range(n)])


# Chord offsets for the dodecahedral graph: ring 0..19 plus i -> i + shift.
_DODECAHEDRON_SHIFTS = (10, 7, 4, -4, -7, 10, -4, 7, -7, 4)


def dodecahedron() -> Graph:
    """The 20-vertex 3-regular planar graph of girth 5."""
    es: set[tuple[int, int]] = set()
    for i in range(20):
        for j in ((i + 1) % 20, (i + _DODECAHEDRON_SHIFTS[i % 10]) % 20):
            es.add((min(i, j), max(i, j)))
    return graph_from_edges(20, sorted(es))


def hex_grid(rows: int, cols: int) -> Graph:
    """Brick-wall patch of rows x cols hexagonal cells; girth exactly 6.

    Each cell is a 6-cycle drawn as a brick two grid columns wide; odd brick
    rows are shifted one grid column to the right.
    """
    if rows < 1 or cols < 1:
        raise PreconditionError("hex_grid needs rows >= 1 and cols >= 1")
    coord_edges: set[tuple[tuple[int, int], tuple[int, int]]] = set()
    for br in range(rows):
        x0 = br % 2
        for bc in range(cols):
            x = 2 * bc + x0
            ring = [
                (br, x), (br, x + 1), (br, x + 2),
                (br + 1, x + 2), (br + 1, x + 1), (br + 1, x),
            ]
            for p, q in zip(ring, ring[1:] + ring[:1]):
                coord_edges.add((min(p, q), max(p, q)))
    verts = sorted({p for e in coord_edges for p in e})
    index = {p: i for i, p in enumerate(verts)}
    return graph_from_edges(
        len(verts), sorted((index[p], index[q]) for p, q in coord_edges)
    )


def maximal_outerplanar_random(n: int, seed: int) -> Graph:
    """Random triangulated polygon on n vertices, deterministic per seed.

    Boundary cycle 0..n-1 plus n-3 chords, so 2n-3 edges for n >= 2.
    """
    if n < 1:
        raise PreconditionError("maximal_outerplanar_random needs n >= 1")
    if n == 1:
        return graph_from_edges(1, [])
    rng = random.Random(seed)
    edges = [(i, i + 1) for i in range(n - 1)]
    if n >= 3:
        edges.append((0, n - 1))
        stack = [(0, n - 1)]
        while stack:
            i, j = stack.pop()
            if j - i < 2:
                continue
            k = rng.randint(i + 1, j - 1)
            if k - i >= 2:
                edges.append((i, k))
            if j - k >= 2:
                edges.append((k, j))
            stack.append((i, k))
            stack.append((k, j))
    return graph_from_edges(n, edges)


# ---- structural queries -----------------------------------------------------


def connected_components(g: Graph) -> list[list[int]]:
    """Components as sorted vertex lists, ordered by smallest member."""
    seen = [False] * g.n
    comps: list[list[int]] = []
    for s in range(g.n):
        if seen[s]:
            continue
        seen[s] = True
        comp = [s]
        queue = [s]
        for u in queue:
            for v in g.adjacency[u]:
                if not seen[v]:
                    seen[v] = True
                    comp.append(v)
                    queue.append(v)
        comp.sort()
        comps.append(comp)
    return comps


def is_forest(g: Graph) -> bool:
    """A graph is a forest iff every component is a tree (m = n - #components)."""
    return g.m == g.n - len(connected_components(g))


def max_degree(g: Graph) -> int:
    return max(g.degrees(), default=0)


def _bfs_dists(g: Graph, s: int) -> list[int]:
    dist = [-1] * g.n
    dist[s] = 0
    queue = [s]
    for u in queue:
        du = dist[u] + 1
        for v in g.adjacency[u]:
            if dist[v] < 0:
                dist[v] = du
                queue.append(v)
    return dist


def component_diameter_max(g: Graph) -> int:
    """Largest diameter over connected components (0 for the empty graph)."""
    best = 0
    for comp in connected_components(g):
        if len(comp) <= 1:
            continue
        for s in comp:
            ecc = max(_bfs_dists(g, s)[v] for v in comp)
            if ecc > best:
                best = ecc
    return best


def girth(g: Graph) -> int | float:
    """Length of a shortest cycle, or UNBOUNDED when g is a forest.

    BFS from every root; any non-tree edge (u, w) closes a walk of length
    dist(u) + dist(w) + 1 that contains a cycle no longer than that, and a
    root lying on a shortest cycle attains its exact length.
    """
    best: int | float = UNBOUNDED
    edge_list = list(g.edges())
    for root in range(g.n):
        dist = [-1] * g.n
        parent = [-1] * g.n
        dist[root] = 0
        queue = [root]
        for u in queue:
            du = dist[u] + 1
            for v in g.adjacency[u]:
                if dist[v] < 0:
                    dist[v] = du
                    parent[v] = u
                    queue.append(v)
        for u, w in edge_list:
            if dist[u] < 0 or dist[w] < 0:
                continue
            if parent[u] == w or parent[w] == u:
                continue
            cand = dist[u] + dist[w] + 1
            if cand < best:
                best = cand
    return best


def remove_vertices(g: Graph, drop: Iterable[int]) -> tuple[Graph, dict[int, int]]:
    """Delete a vertex set; return the reduced graph and old-id -> new-id map."""
    removed = set(drop)
    for v in removed:
        if not 0 <= v < g.n:
            raise PreconditionError(f"vertex {v} out of range for removal")
    keep = [v for v in range(g.n) if v not in removed]
    remap = {old: new for new, old in enumerate(keep)}
    adjacency = tuple(
        frozenset(remap[u] for u in g.adjacency[old] if u not in removed)
        for old in keep
    )
    return Graph(adjacency), remap


# ---- edge-list text format --------------------------------------------------


def parse_edge_list(text: str) -> Graph:
    """Parse the plain edge-list format.

    Optional first line ``p <n> <m>``; every other non-blank line is ``u v``
    with 0-based ids.  Duplicate edges and self-loops are rejected.
    """
    header: tuple[int, int] | None = None
    raw: list[tuple[int, int]] = []
    for lineno, line in enumerate(text.splitlines(), start=1):
        tokens = line.split()
        if not tokens:
            continue
        if tokens[0] == "p":
            if header is not None or raw:
                raise InputFormatError(f"line {lineno}: header must come first")
            if len(tokens) != 3:
                raise InputFormatError(f"line {lineno}: header must be 'p <n> <m>'")
            try:
                hn, hm = int(tokens[1]), int(tokens[2])
            except ValueError as exc:
                raise InputFormatError(f"line {lineno}: non-integer header field") from exc
            if hn < 0 or hm < 0:
                raise InputFormatError(f"line {lineno}: negative header field")
            header = (hn, hm)
            continue
        if len(tokens) != 2:
            raise InputFormatError(f"line {lineno}: expected 'u v'")
        try:
            u, v = int(tokens[0]), int(tokens[1])
        except ValueError as exc:
            raise InputFormatError(f"line {lineno}: non-integer vertex id") from exc
        if u < 0 or v < 0:
            raise InputFormatError(f"line {lineno}: negative vertex id")
        raw.append((u, v))
    if header is not None:
        n, m = header
        if m != len(raw):
            raise InputFormatError(f"header declares {m} edges, found {len(raw)}")
    else:
        n = 1 + max((max(u, v) for u, v in raw), default=-1)
    return graph_from_edges(n, raw)


def format_edge_list(g: Graph) -> str:
    """Serialize a graph in the edge-list format, with header line."""
    lines = [f"p {g.n} {g.m}"]
    lines.extend(f"{u} {v}" for u, v in sorted(g.edges()))
    return "\n".join(lines) + "\n"
