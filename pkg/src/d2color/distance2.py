"""Square graphs and exact / greedy 2-distance colouring.

Colours are 1-based, matching the palette ``{1, ..., k}``.  The exact solver
is DSATUR-ordered backtracking over the square graph with bitmask domains,
forward checking, a greedily found clique precoloured for symmetry breaking,
and at most one "fresh" colour tried per node.  Effort is measured in
decisions (colour assignments), never wall time, so runs are reproducible.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from typing import Hashable, Iterable, Mapping

DEFAULT_BUDGET = 10 ** 7
THEOREM_BOUND = 17


def adjacency_of(g) -> dict[Hashable, set]:
    """Accept an EmbeddedGraph, a networkx graph, or a ``{v: neighbours}`` mapping."""
    if hasattr(g, "adjacency") and hasattr(g, "out_half_edges"):
        return g.adjacency()
    if hasattr(g, "adj") and hasattr(g, "nodes"):
        return {v: set(g.adj[v]) for v in g.nodes}
    return {v: set(nbrs) for v, nbrs in g.items()}


@dataclass
class SquareGraph:
    vertices: list
    adj: dict[Hashable, set]

    @property
    def edges(self) -> set[frozenset]:
        return {frozenset((u, v)) for u in self.adj for v in self.adj[u]}

    def degree(self, v) -> int:
        return len(self.adj[v])

    def max_degree(self) -> int:
        return max((len(a) for a in self.adj.values()), default=0)


def square(g) -> SquareGraph:
    adj = adjacency_of(g)
    sq = {}
    for v, nbrs in adj.items():
        reach = set(nbrs)
        for u in nbrs:
            reach |= adj[u]
        reach.discard(v)
        sq[v] = reach
    return SquareGraph(sorted(adj), sq)


@dataclass
class Coloring:
    assignment: dict
    palette_size: int

    def __post_init__(self):
        for v, c in self.assignment.items():
            if not 1 <= c <= self.palette_size:
                raise ValueError(f"colour {c} of vertex {v} outside 1..{self.palette_size}")

    def is_complete(self, g) -> bool:
        return set(adjacency_of(g)) <= set(self.assignment)

    def conflicts(self, g) -> list[tuple]:
        return conflicting_pairs(g, self.assignment)

    def is_valid(self, g) -> bool:
        return not self.conflicts(g)

    def num_colors(self) -> int:
        return len(set(self.assignment.values()))


def conflicting_pairs(g, assignment: Mapping) -> list[tuple]:
    """Pairs at distance 1 or 2 with equal colours, re-derived by explicit 2-step walks."""
    adj = adjacency_of(g)
    bad = set()
    for v in adj:
        if v not in assignment:
            continue
        for u in adj[v]:
            for w in [u, *adj[u]]:
                if w != v and w in assignment and assignment[w] == assignment[v]:
                    bad.add(tuple(sorted((v, w), key=repr)))
    return sorted(bad, key=repr)


def forbidden_colors(g, coloring: Coloring | Mapping, v) -> set[int]:
    """C_phi(v): colours on coloured vertices within distance two of ``v``."""
    assignment = coloring.assignment if isinstance(coloring, Coloring) else coloring
    adj = adjacency_of(g)
    out = set()
    for u in adj[v]:
        for w in [u, *adj[u]]:
            if w != v and w in assignment:
                out.add(assignment[w])
    return out


class Status(enum.Enum):
    SAT = "sat"
    UNSAT = "unsat"
    BUDGET = "budget-exhausted"


@dataclass
class ColorResult:
    status: Status
    k: int
    coloring: Coloring | None = None
    decisions: int = 0

    @property
    def ok(self) -> bool:
        return self.status is Status.SAT


def greedy_clique(sq: SquareGraph) -> list:
    """Maximal clique grown from the highest-degree vertex (ties: lowest index)."""
    order = sorted(sq.vertices, key=lambda v: (-sq.degree(v), sq.vertices.index(v)))
    if not order:
        return []
    clique = [order[0]]
    cand = set(sq.adj[order[0]])
    for v in order[1:]:
        if v in cand:
            clique.append(v)
            cand &= sq.adj[v]
    return clique


def color_exact(g, k: int, budget: int = DEFAULT_BUDGET) -> ColorResult:
    if k < 1:
        raise ValueError("palette size must be >= 1")
    sq = square(g)
    verts = sq.vertices
    n = len(verts)
    if n == 0:
        return ColorResult(Status.SAT, k, Coloring({}, k))
    index = {v: i for i, v in enumerate(verts)}
    nbrs = [[index[u] for u in sq.adj[v]] for v in verts]
    deg = [len(a) for a in nbrs]
    full = (1 << k) - 1

    clique = [index[v] for v in greedy_clique(sq)]
    if len(clique) > k:
        return ColorResult(Status.UNSAT, k)

    color = [0] * n
    domain = [full] * n
    decisions = 0

    def assign(v, c):
        """Set colour and prune neighbours; returns undo list or None on wipe-out."""
        color[v] = c
        bit = 1 << (c - 1)
        touched = []
        for u in nbrs[v]:
            if color[u] == 0 and domain[u] & bit:
                domain[u] &= ~bit
                touched.append(u)
                if domain[u] == 0:
                    return touched, False
        return touched, True

    def undo(v, c, touched):
        color[v] = 0
        bit = 1 << (c - 1)
        for u in touched:
            domain[u] |= bit

    for i, v in enumerate(clique):
        _, alive = assign(v, i + 1)
        if not alive:
            return ColorResult(Status.UNSAT, k)

    remaining = n - len(clique)
    max_used = len(clique)

    def pick():
        best, key = -1, None
        for v in range(n):
            if color[v]:
                continue
            kk = (bin(domain[v]).count("1"), -deg[v], v)
            if key is None or kk < key:
                best, key = v, kk
        return best

    class _OutOfBudget(Exception):
        pass

    def search(remaining, max_used):
        nonlocal decisions
        if remaining == 0:
            return True
        v = pick()
        dom = domain[v]
        for c in range(1, min(k, max_used + 1) + 1):
            if not dom & (1 << (c - 1)):
                continue
            if decisions >= budget:
                raise _OutOfBudget
            decisions += 1
            touched, alive = assign(v, c)
            if alive and search(remaining - 1, max(max_used, c)):
                return True
            undo(v, c, touched)
        return False

    try:
        found = search(remaining, max_used)
    except _OutOfBudget:
        return ColorResult(Status.BUDGET, k, decisions=decisions)
    if not found:
        return ColorResult(Status.UNSAT, k, decisions=decisions)
    coloring = Coloring({verts[i]: color[i] for i in range(n)}, k)
    assert not coloring.conflicts(g)
    return ColorResult(Status.SAT, k, coloring, decisions)


def color_greedy_dsatur(g, k: int) -> Coloring | None:
    """One DSATUR pass; ``None`` means it failed, not that no colouring exists."""
    sq = square(g)
    verts = sq.vertices
    order_key = {v: i for i, v in enumerate(verts)}
    color: dict = {}
    seen: dict = {v: set() for v in verts}
    while len(color) < len(verts):
        v = min((u for u in verts if u not in color),
                key=lambda u: (-len(seen[u]), -sq.degree(u), order_key[u]))
        c = next((c for c in range(1, k + 1) if c not in seen[v]), None)
        if c is None:
            return None
        color[v] = c
        for u in sq.adj[v]:
            seen[u].add(c)
    return Coloring(color, k)


@dataclass
class Chi2Result:
    value: int | None
    lo: int
    hi: int
    coloring: Coloring | None = None
    decisions: int = 0
    exhausted: bool = False
    probes: list[tuple[int, str]] = field(default_factory=list)


def max_degree_of(g) -> int:
    return max((len(a) for a in adjacency_of(g).values()), default=0)


def chi2(g, budget: int = DEFAULT_BUDGET) -> Chi2Result:
    """Smallest k admitting a 2-distance k-colouring.

    ``lo`` starts at max(Delta + 1, greedy clique size); ``hi`` at
    1 + maxdeg(square), capped at 17 when Delta <= 5, then tightened by a
    DSATUR pass.  Binary search between them; ``budget`` bounds each probe.
    """
    adj = adjacency_of(g)
    if not adj:
        return Chi2Result(0, 0, 0, Coloring({}, 1))
    sq = square(g)
    delta = max_degree_of(g)
    lo = max(delta + 1, len(greedy_clique(sq)))
    hi = 1 + sq.max_degree()
    if delta <= 5:
        hi = min(hi, THEOREM_BOUND)
    best = None
    greedy = color_greedy_dsatur(g, hi)
    if greedy is not None:
        used = max(greedy.assignment.values())
        best = Coloring(dict(greedy.assignment), used)
        hi = min(hi, used)
    res = Chi2Result(None, lo, hi)
    if best is None:
        r = color_exact(g, hi, budget)
        res.decisions += r.decisions
        res.probes.append((hi, r.status.value))
        if r.status is Status.BUDGET:
            res.exhausted = True
            return res
        if r.status is Status.UNSAT:
            # cap was not a valid upper bound for this input; fall back to greedy bound
            hi = 1 + sq.max_degree()
            res.hi = hi
            r = color_exact(g, hi, budget)
            res.decisions += r.decisions
            res.probes.append((hi, r.status.value))
            if not r.ok:
                res.exhausted = r.status is Status.BUDGET
                return res
        best = r.coloring
    while lo < hi:
        mid = (lo + hi) // 2
        r = color_exact(g, mid, budget)
        res.decisions += r.decisions
        res.probes.append((mid, r.status.value))
        if r.status is Status.SAT:
            hi, best = mid, r.coloring
        elif r.status is Status.UNSAT:
            lo = mid + 1
        else:
            res.lo, res.hi, res.coloring, res.exhausted = lo, hi, best, True
            return res
    res.lo = res.hi = lo
    res.value = lo
    res.coloring = Coloring(dict(best.assignment), lo) if best else None
    return res
