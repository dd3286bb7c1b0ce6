"""Shared generators and tiny independent oracles for the test suite.

The oracles here are deliberately written against plain Python data (sets,
dicts, itertools), not the package's bitmask machinery, so they stay an
independent route to the same numbers.
"""

from __future__ import annotations

import random
from itertools import combinations, product

from chromapoly.graphs import Graph, build_graph, is_isomorphic


def all_graphs(n: int):
    """Every labeled simple graph on exactly n vertices."""
    slots = list(combinations(range(n), 2))
    for picks in product((0, 1), repeat=len(slots)):
        yield build_graph(n, [e for e, bit in zip(slots, picks) if bit])


def all_graphs_up_to(max_n: int, max_e: int | None = None):
    for n in range(max_n + 1):
        for g in all_graphs(n):
            if max_e is None or g.edge_count <= max_e:
                yield g


def random_graph(rng: random.Random, max_n: int, min_n: int = 0,
                 p: float = 0.5) -> Graph:
    n = rng.randint(min_n, max_n)
    edges = [(u, v) for u in range(n) for v in range(u + 1, n)
             if rng.random() < p]
    return build_graph(n, edges)


def connected_oracle(n: int, edges) -> bool:
    if n == 0:
        return True
    seen = {0}
    frontier = [0]
    while frontier:
        v = frontier.pop()
        for a, b in edges:
            w = b if a == v else a if b == v else None
            if w is not None and w not in seen:
                seen.add(w)
                frontier.append(w)
    return len(seen) == n


def random_connected_graph(rng: random.Random, max_n: int,
                           min_n: int = 1, p: float = 0.5) -> Graph:
    while True:
        g = random_graph(rng, max_n, min_n, p)
        if connected_oracle(g.n, g.edges):
            return g


def nonisomorphic_connected(max_edges: int, max_n: int):
    """Connected simple graphs with at most max_edges edges, one per
    isomorphism class (brute-force dedup; intended for tiny sizes)."""
    out: list[Graph] = []
    for n in range(1, max_n + 1):
        slots = list(combinations(range(n), 2))
        for picks in product((0, 1), repeat=len(slots)):
            edges = [e for e, bit in zip(slots, picks) if bit]
            if len(edges) > max_edges:
                continue
            if not connected_oracle(n, edges):
                continue
            g = build_graph(n, edges)
            if any(h.n == g.n and is_isomorphic(g, h) for h in out):
                continue
            out.append(g)
    return out


def naive_count(g: Graph, predicate, k: int, domain: str = "vertex") -> int:
    """Plain product-loop counting with a caller-supplied predicate."""
    size = g.n if domain == "vertex" else g.edge_count
    return sum(1 for colors in product(range(1, k + 1), repeat=size)
               if predicate(g, colors, k))
