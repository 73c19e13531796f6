"""Slow, package-independent reference computations used as test oracles."""

from __future__ import annotations

import cmath
from itertools import combinations

import networkx as nx


def table_from_elements(elements, mul, key) -> list[list[int]]:
    """Cayley table of a finite set closed under ``mul``, identity first."""
    index = {key(x): i for i, x in enumerate(elements)}
    return [[index[key(mul(a, b))] for b in elements] for a in elements]


def close(gens, mul, identity, key):
    elems = [identity]
    seen = {key(identity)}
    frontier = [identity]
    while frontier:
        nxt = []
        for x in frontier:
            for g in gens:
                y = mul(x, g)
                if key(y) not in seen:
                    seen.add(key(y))
                    elems.append(y)
                    nxt.append(y)
        frontier = nxt
    return elems


def dihedral_permutations(n: int) -> list[list[int]]:
    """D_2n acting on the vertices of an n-gon (n >= 3)."""
    rot = tuple((i + 1) % n for i in range(n))
    ref = tuple((-i) % n for i in range(n))
    ident = tuple(range(n))
    mul = lambda p, q: tuple(p[q[i]] for i in range(n))
    elems = close([rot, ref], mul, ident, lambda x: x)
    return table_from_elements(elems, mul, lambda x: x)


def _matmul(a, b):
    return (
        (a[0][0] * b[0][0] + a[0][1] * b[1][0], a[0][0] * b[0][1] + a[0][1] * b[1][1]),
        (a[1][0] * b[0][0] + a[1][1] * b[1][0], a[1][0] * b[0][1] + a[1][1] * b[1][1]),
    )


def _ckey(m):
    return tuple(complex(round(z.real, 6), round(z.imag, 6)) for row in m for z in row)


def dicyclic_matrices(n: int) -> list[list[int]]:
    """Dic_n (order 4n) as complex 2x2 matrices."""
    z = cmath.exp(2j * cmath.pi / (2 * n))
    a = ((z, 0), (0, 1 / z))
    b = ((0, -1), (1, 0))
    ident = ((1, 0), (0, 1))
    elems = close([a, b], _matmul, ident, _ckey)
    return table_from_elements(elems, _matmul, _ckey)


def cyclic_subgroup_sets(table) -> list[frozenset[int]]:
    n = len(table)
    out = set()
    for g in range(n):
        h, gen = 0, {0}
        while True:
            h = table[h][g]
            if h == 0:
                break
            gen.add(h)
        out.add(frozenset(gen))
    return sorted(out, key=lambda s: (len(s), sorted(s)))


def all_subgroup_sets(table) -> list[frozenset[int]]:
    """Every subset closed under multiplication (tiny groups only)."""
    n = len(table)
    out = []
    for k in range(n):
        for rest in combinations(range(1, n), k):
            s = frozenset((0, *rest))
            if all(table[a][b] in s for a in s for b in s):
                out.append(s)
    return out


def gamma_nx(table) -> nx.Graph:
    """Cyclic subgroup graph by the literal no-intermediate rule over all cyclic subgroups."""
    subs = cyclic_subgroup_sets(table)
    g = nx.Graph()
    g.add_nodes_from(subs)
    for h1 in subs:
        for h2 in subs:
            if h1 < h2 and not any(h1 < k < h2 for k in subs):
                g.add_edge(h1, h2)
    return g


def to_nx(gamma) -> nx.Graph:
    g = nx.Graph()
    g.add_nodes_from(range(gamma.vertex_count))
    g.add_edges_from(gamma.edges)
    return g
