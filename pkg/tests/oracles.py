"""Deliberately naive reference implementations used only by tests."""

import networkx as nx


def square_edges_nx(g) -> set[frozenset]:
    sq = nx.power(g.to_networkx(), 2)
    return {frozenset(e) for e in sq.edges}


def colorable_naive(g, k: int) -> bool:
    """Plain backtracking in vertex-index order over the networkx square."""
    sq = nx.power(g.to_networkx(), 2)
    order = sorted(sq.nodes)
    color = {}

    def go(i):
        if i == len(order):
            return True
        v = order[i]
        used = {color[u] for u in sq.adj[v] if u in color}
        for c in range(k):
            if c not in used:
                color[v] = c
                if go(i + 1):
                    return True
                del color[v]
        return False

    return go(0)


def chi2_naive(g) -> int:
    k = 1
    while not colorable_naive(g, k):
        k += 1
    return k
