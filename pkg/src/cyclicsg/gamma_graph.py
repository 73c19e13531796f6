"""The cyclic subgroup graph of a finite group.

Vertices are the cyclic subgroups; ``H1 ~ H2`` when one is a maximal subgroup
of the other.  Production edges use the prime-index rule.  The literal
no-intermediate-subgroup rule is kept alongside as an independent oracle.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Sequence

from .group_core import Group, Subgroup, big_omega, is_prime


@dataclass(frozen=True, eq=False)
class GammaGraph:
    vertices: tuple[Subgroup, ...]
    edges: frozenset[tuple[int, int]]
    parent_order: int

    @property
    def vertex_count(self) -> int:
        return len(self.vertices)

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    @cached_property
    def edge_list(self) -> list[tuple[int, int]]:
        return sorted(self.edges)

    @cached_property
    def adjacency(self) -> list[list[int]]:
        adj: list[list[int]] = [[] for _ in self.vertices]
        for u, v in self.edge_list:
            adj[u].append(v)
            adj[v].append(u)
        for nbrs in adj:
            nbrs.sort()
        return adj

    @cached_property
    def labels(self) -> list[str]:
        """``Z<order>#<idx>``, idx counting vertices of equal order in vertex order."""
        seen: dict[int, int] = {}
        out = []
        for H in self.vertices:
            k = seen.get(H.order, 0)
            seen[H.order] = k + 1
            out.append(f"Z{H.order}#{k}")
        return out

    def index_of(self, order: int, idx: int) -> int:
        """Vertex index for the selector ``order:idx``."""
        label = f"Z{order}#{idx}"
        try:
            return self.labels.index(label)
        except ValueError:
            raise KeyError(label) from None

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])


def es_value(H: Subgroup) -> int:
    """Number of prime factors of |H| with multiplicity."""
    return big_omega(H.order)


def is_maximal_prime_index(H1: Subgroup, H2: Subgroup) -> bool:
    if H1.order >= H2.order or H2.order % H1.order:
        return False
    return is_prime(H2.order // H1.order) and H1.issubset(H2)


def is_maximal_generic(
    G: Group, H1: Subgroup, H2: Subgroup, candidates: Sequence[Subgroup] | None = None
) -> bool:
    """H1 < H2 with no subgroup strictly between.

    With the default candidates (the cyclic subgroups of G) this is exact: any
    K with H1 < K < H2 is a subgroup of the cyclic group H2 and therefore
    cyclic itself.  Passing the full lattice as ``candidates`` checks the
    definition verbatim.
    """
    if H1.order >= H2.order or not H1.issubset(H2):
        return False
    if candidates is None:
        candidates = G.cyclic_subgroups
    m1, m2 = H1.mask, H2.mask
    for K in candidates:
        if H1.order < K.order < H2.order and m1 & ~K.mask == 0 and K.mask & ~m2 == 0:
            return False
    return True


def _edges(vertices: Sequence[Subgroup], rule) -> frozenset[tuple[int, int]]:
    edges = set()
    for j, H2 in enumerate(vertices):
        for i in range(j):
            H1 = vertices[i]
            if H1.order < H2.order and rule(H1, H2):
                edges.add((i, j))
    return frozenset(edges)


def build_gamma(G: Group) -> GammaGraph:
    vertices = G.cyclic_subgroups
    return GammaGraph(vertices, _edges(vertices, is_maximal_prime_index), G.order)


def generic_edges(G: Group, candidates: Sequence[Subgroup] | None = None) -> frozenset[tuple[int, int]]:
    """Edge set of the literal definition; vertices in ``build_gamma`` order."""
    vertices = G.cyclic_subgroups
    return _edges(vertices, lambda a, b: is_maximal_generic(G, a, b, candidates))


def es_parity_ok(gamma: GammaGraph) -> bool:
    es = [es_value(H) for H in gamma.vertices]
    return all((es[u] - es[v]) % 2 for u, v in gamma.edges)


def induced_edges(gamma: GammaGraph, within: Subgroup) -> tuple[list[int], set[tuple[int, int]]]:
    """Vertices of ``gamma`` contained in ``within`` and the induced edges."""
    keep = [v for v, H in enumerate(gamma.vertices) if H.issubset(within)]
    kept = set(keep)
    return keep, {e for e in gamma.edges if e[0] in kept and e[1] in kept}
