"""Reproducible random planar graphs with maximum degree 5, and the 17-colour experiment.

PRNG: xorshift64* (Vigna), seeded through one splitmix64 step::

    seed mixing  z = seed + 0x9E3779B97F4A7C15
                 z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9
                 z = (z ^ (z >> 27)) * 0x94D049BB133111EB
                 state = z ^ (z >> 31)          (0 is replaced by the golden constant)
    step         x ^= x >> 12; x ^= x << 25; x ^= x >> 27
    output       x * 0x2545F4914F6CDD1D

all modulo 2**64.  ``randbelow(n)`` rejects outputs at or above the largest
multiple of ``n`` below 2**64, so every residue is equally likely.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from pathlib import Path

import networkx as nx

from . import graphio
from .distance2 import DEFAULT_BUDGET, THEOREM_BOUND, Status, chi2, color_exact
from .planar import EmbeddedGraph

MASK = (1 << 64) - 1
GOLDEN = 0x9E3779B97F4A7C15
METHODS = ("triangulation-prune", "grid-patch")


def splitmix64(seed: int) -> int:
    z = (seed + GOLDEN) & MASK
    z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & MASK
    z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & MASK
    return z ^ (z >> 31)


class Xorshift64Star:
    def __init__(self, seed: int):
        self.state = splitmix64(seed & MASK) or GOLDEN

    def next_u64(self) -> int:
        x = self.state
        x ^= x >> 12
        x ^= (x << 25) & MASK
        x ^= x >> 27
        self.state = x
        return (x * 0x2545F4914F6CDD1D) & MASK

    def randbelow(self, n: int) -> int:
        if n <= 0:
            raise ValueError("randbelow needs n >= 1")
        limit = (1 << 64) - ((1 << 64) % n)
        while True:
            x = self.next_u64()
            if x < limit:
                return x % n


@dataclass(frozen=True)
class GenSpec:
    seed: int
    n: int
    method: str = "triangulation-prune"
    max_degree: int = 5

    def __post_init__(self):
        if self.n < 3:
            raise ValueError("need n >= 3")
        if self.method not in METHODS:
            raise ValueError(f"unknown method {self.method!r}; choose from {METHODS}")
        if self.max_degree != 5:
            raise ValueError("max_degree is fixed at 5")


def generate(spec: GenSpec) -> EmbeddedGraph:
    rng = Xorshift64Star(spec.seed)
    if spec.method == "grid-patch":
        return _grid_patch(spec.n, rng)
    g = _random_triangulation(spec.n, rng)
    _prune(g, spec.max_degree)
    return g


def _random_triangulation(n: int, rng: Xorshift64Star) -> EmbeddedGraph:
    g = EmbeddedGraph.from_rotations({0: [1, 2], 1: [2, 0], 2: [0, 1]})
    for _ in range(n - 3):
        faces = g.faces()
        f = faces[rng.randbelow(len(faces))]
        corners = [(g.origin(h), g.origin(h ^ 1)) for h in f.half_edges]
        w = g.add_vertex()
        prev = None
        for x, y in corners:
            # at x the face sits just after y counterclockwise
            g.add_edge(w, x, prev, y)
            prev = x
    return g


def _prune(g: EmbeddedGraph, cap: int) -> None:
    """Drop edges at overfull vertices, never a bridge, until max degree <= cap."""
    while g.max_degree() > cap:
        bridges = {frozenset(e) for e in nx.bridges(g.to_networkx())}
        pick = None
        for want in (2, 1):
            for e in g.edge_ids():
                u, v = g.endpoints(e)
                if frozenset((u, v)) in bridges:
                    continue
                if (g.degree(u) > cap) + (g.degree(v) > cap) >= want:
                    pick = e
                    break
            if pick is not None:
                break
        if pick is None:
            raise RuntimeError("cannot lower the maximum degree without disconnecting")
        g.remove_edge(pick)


def _grid_patch(n: int, rng: Xorshift64Star) -> EmbeddedGraph:
    cols = math.ceil(math.sqrt(n))
    pts = [(i % cols, i // cols) for i in range(n)]
    at = {p: i for i, p in enumerate(pts)}
    edges = []
    for i, (x, y) in enumerate(pts):
        for q in ((x + 1, y), (x, y + 1)):
            if q in at:
                edges.append((i, at[q]))
    deg = [0] * n
    for u, v in edges:
        deg[u] += 1
        deg[v] += 1
    for i, (x, y) in enumerate(pts):
        cell = [(x, y), (x + 1, y), (x, y + 1), (x + 1, y + 1)]
        if not all(c in at for c in cell):
            continue
        r = rng.randbelow(3)  # 0: none, 1: main diagonal, 2: anti-diagonal
        if r == 0:
            continue
        u, v = (at[cell[0]], at[cell[3]]) if r == 1 else (at[cell[1]], at[cell[2]])
        if deg[u] < 5 and deg[v] < 5:
            edges.append((u, v))
            deg[u] += 1
            deg[v] += 1
    return EmbeddedGraph.from_coordinates(pts, edges)


# ----------------------------------------------------------------------
# experiment

class CounterexampleFound(RuntimeError):
    def __init__(self, path: Path | None, record: dict):
        super().__init__(f"no 17-colouring exists for graph {record} (saved to {path})")
        self.path = path
        self.record = record


@dataclass
class ExperimentSummary:
    count: int
    seed: int
    n_range: tuple[int, int]
    sat: int = 0
    unsat: int = 0
    budget_exhausted: int = 0
    max_chi2: int | None = None
    records: list[dict] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return self.unsat == 0 and self.sat + self.budget_exhausted == self.count

    def as_dict(self) -> dict:
        return {
            "count": self.count,
            "seed": self.seed,
            "n_range": list(self.n_range),
            "sat": self.sat,
            "unsat": self.unsat,
            "budget_exhausted": self.budget_exhausted,
            "max_chi2": self.max_chi2,
            "ok": self.ok,
            "records": self.records,
        }


def run_theorem_experiment(count: int, n_range: tuple[int, int], seed: int,
                           budget: int = DEFAULT_BUDGET, method: str = "triangulation-prune",
                           measure_chi2: bool = True, dump_dir: str | Path | None = None,
                           ) -> ExperimentSummary:
    lo, hi = n_range
    if lo < 3 or hi < lo:
        raise ValueError("bad n range")
    rng = Xorshift64Star(seed)
    summary = ExperimentSummary(count, seed, (lo, hi))
    for i in range(count):
        n = lo + rng.randbelow(hi - lo + 1)
        gseed = rng.next_u64()
        g = generate(GenSpec(gseed, n, method))
        rec = {"index": i, "seed": gseed, "n": n, "method": method,
               "edges": g.num_edges, "max_degree": g.max_degree()}
        res = color_exact(g, THEOREM_BOUND, budget)
        rec["status"] = res.status.value
        rec["decisions"] = res.decisions
        if res.status is Status.UNSAT:
            summary.unsat += 1
            path = None
            if dump_dir is not None:
                path = Path(dump_dir) / f"counterexample-{gseed}.d2g"
                path.parent.mkdir(parents=True, exist_ok=True)
                graphio.dump(g, path)
            summary.records.append(rec)
            raise CounterexampleFound(path, rec)
        if res.status is Status.BUDGET:
            summary.budget_exhausted += 1
        else:
            summary.sat += 1
        if measure_chi2:
            c = chi2(g, budget)
            rec["chi2"] = c.value
            rec["chi2_bounds"] = [c.lo, c.hi]
            if c.value is not None:
                summary.max_chi2 = c.value if summary.max_chi2 is None else max(summary.max_chi2, c.value)
        summary.records.append(rec)
    return summary
