"""Invariants of simple undirected graphs, computed by breadth-first search."""

from __future__ import annotations

from collections import deque
from dataclasses import asdict, dataclass
from typing import Iterable, Union

INF = "inf"
DISCONNECTED = "disconnected"
UNREACHABLE = "unreachable"


@dataclass(frozen=True)
class PlainGraph:
    vertex_count: int
    edges: frozenset[tuple[int, int]]

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> PlainGraph:
        norm = set()
        for u, v in edges:
            if u == v:
                raise ValueError(f"self-loop at {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge {(u, v)} outside 0..{n - 1}")
            norm.add((min(u, v), max(u, v)))
        return cls(n, frozenset(norm))


@dataclass(frozen=True)
class InvariantSummary:
    vertex_count: int
    edge_count: int
    degree_sequence: tuple[int, ...]
    min_degree: int
    max_degree: int
    connected: bool
    diameter: Union[int, str]
    girth: Union[int, str]
    bipartite: bool
    tree: bool
    regular: bool
    eulerian: bool
    path_graph: bool
    cycle_graph: bool
    star_graph: bool
    complete_graph: bool
    pendant_count: int

    def to_dict(self) -> dict:
        d = asdict(self)
        d["degree_sequence"] = list(self.degree_sequence)
        return d


def adjacency(g) -> list[list[int]]:
    adj = getattr(g, "adjacency", None)
    if adj is not None:
        return adj
    out: list[list[int]] = [[] for _ in range(g.vertex_count)]
    for u, v in sorted(g.edges):
        out[u].append(v)
        out[v].append(u)
    return out


def bfs_distances(adj: list[list[int]], source: int) -> list[int]:
    dist = [-1] * len(adj)
    dist[source] = 0
    queue = deque([source])
    while queue:
        u = queue.popleft()
        for v in adj[u]:
            if dist[v] < 0:
                dist[v] = dist[u] + 1
                queue.append(v)
    return dist


def distance(g, u: int, v: int) -> Union[int, str]:
    adj = adjacency(g)
    if not (0 <= u < len(adj) and 0 <= v < len(adj)):
        raise IndexError(f"vertex out of range: {u}, {v}")
    d = bfs_distances(adj, u)[v]
    return UNREACHABLE if d < 0 else d


def diameter(adj: list[list[int]]) -> Union[int, str]:
    best = 0
    for s in range(len(adj)):
        dist = bfs_distances(adj, s)
        if min(dist) < 0:
            return DISCONNECTED
        best = max(best, max(dist))
    return best


def girth(adj: list[list[int]]) -> Union[int, str]:
    """Shortest cycle length; a BFS from every vertex catches the shortest
    cycle through that vertex exactly."""
    best = None
    n = len(adj)
    for s in range(n):
        dist = [-1] * n
        parent = [-1] * n
        dist[s] = 0
        queue = deque([s])
        while queue:
            u = queue.popleft()
            if best is not None and 2 * dist[u] >= best:
                break
            for v in adj[u]:
                if dist[v] < 0:
                    dist[v] = dist[u] + 1
                    parent[v] = u
                    queue.append(v)
                elif parent[u] != v:
                    length = dist[u] + dist[v] + 1
                    if best is None or length < best:
                        best = length
    return INF if best is None else best


def is_bipartite(adj: list[list[int]]) -> bool:
    color = [-1] * len(adj)
    for s in range(len(adj)):
        if color[s] >= 0:
            continue
        color[s] = 0
        queue = deque([s])
        while queue:
            u = queue.popleft()
            for v in adj[u]:
                if color[v] < 0:
                    color[v] = 1 - color[u]
                    queue.append(v)
                elif color[v] == color[u]:
                    return False
    return True


def cycle_lengths_through(adj: list[list[int]], root: int, max_len: int | None = None) -> set[int]:
    """Lengths of simple cycles through ``root`` (exhaustive DFS; small graphs only)."""
    n = len(adj)
    limit = n if max_len is None else min(n, max_len)
    found: set[int] = set()
    on_path = [False] * n
    on_path[root] = True

    def dfs(u: int, depth: int) -> None:
        for v in adj[u]:
            if v == root and depth >= 3:
                found.add(depth)
            elif not on_path[v] and depth < limit:
                on_path[v] = True
                dfs(v, depth + 1)
                on_path[v] = False

    for v in adj[root]:
        on_path[v] = True
        dfs(v, 2)
        on_path[v] = False
    return found


def summarize(g) -> InvariantSummary:
    n = g.vertex_count
    if n < 1:
        raise ValueError("graph has no vertices")
    adj = adjacency(g)
    m = len(g.edges)
    degs = [len(a) for a in adj]
    diam = diameter(adj)
    connected = diam != DISCONNECTED
    ones = degs.count(1)
    regular = len(set(degs)) == 1
    path = connected and (n == 1 or (ones == 2 and degs.count(2) == n - 2))
    cycle = connected and n >= 3 and all(d == 2 for d in degs)
    star = n >= 2 and m == n - 1 and max(degs) == n - 1
    return InvariantSummary(
        vertex_count=n,
        edge_count=m,
        degree_sequence=tuple(sorted(degs)),
        min_degree=min(degs),
        max_degree=max(degs),
        connected=connected,
        diameter=diam,
        girth=girth(adj),
        bipartite=is_bipartite(adj),
        tree=connected and m == n - 1,
        regular=regular,
        eulerian=connected and all(d % 2 == 0 for d in degs),
        path_graph=path,
        cycle_graph=cycle,
        star_graph=star,
        complete_graph=m == n * (n - 1) // 2,
        pendant_count=ones,
    )
