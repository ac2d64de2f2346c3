"""Small named embeddings used by tests, docs and the CLI."""

from __future__ import annotations

import itertools
import math

from .planar import EmbeddedGraph


def _polyhedron(points: list[tuple[float, float, float]]) -> EmbeddedGraph:
    # edges = closest pairs; rotation = angle in the tangent plane seen from outside
    n = len(points)
    d = {(i, j): math.dist(points[i], points[j]) for i, j in itertools.combinations(range(n), 2)}
    shortest = min(d.values())
    edges = [e for e, x in d.items() if abs(x - shortest) < 1e-9]
    nbrs = {i: [] for i in range(n)}
    for i, j in edges:
        nbrs[i].append(j)
        nbrs[j].append(i)
    rot = {}
    for v in range(n):
        p = points[v]
        norm = math.sqrt(sum(c * c for c in p))
        nrm = [c / norm for c in p]
        ref = [1.0, 0.0, 0.0] if abs(nrm[0]) < 0.9 else [0.0, 1.0, 0.0]
        e1 = _unit(_cross(nrm, ref))
        e2 = _cross(nrm, e1)

        def angle(u, p=p, e1=e1, e2=e2):
            w = [points[u][k] - p[k] for k in range(3)]
            return math.atan2(_dot(w, e2), _dot(w, e1))

        rot[v] = sorted(nbrs[v], key=angle)
    return EmbeddedGraph.from_rotations(rot)


def _cross(a, b):
    return [a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]]


def _dot(a, b):
    return sum(x * y for x, y in zip(a, b))


def _unit(a):
    n = math.sqrt(_dot(a, a))
    return [x / n for x in a]


def tetrahedron() -> EmbeddedGraph:
    return _polyhedron([(1, 1, 1), (1, -1, -1), (-1, 1, -1), (-1, -1, 1)])


def cube() -> EmbeddedGraph:
    return _polyhedron(list(itertools.product((-1, 1), repeat=3)))


def octahedron() -> EmbeddedGraph:
    return _polyhedron([(1, 0, 0), (-1, 0, 0), (0, 1, 0), (0, -1, 0), (0, 0, 1), (0, 0, -1)])


def icosahedron() -> EmbeddedGraph:
    phi = (1 + 5 ** 0.5) / 2
    pts = []
    for a, b in itertools.product((-1, 1), repeat=2):
        pts += [(0, a, b * phi), (a, b * phi, 0), (b * phi, 0, a)]
    return _polyhedron(pts)


def dodecahedron() -> EmbeddedGraph:
    phi = (1 + 5 ** 0.5) / 2
    pts = list(itertools.product((-1, 1), repeat=3))
    for a, b in itertools.product((-1, 1), repeat=2):
        pts += [(0, a / phi, b * phi), (a / phi, b * phi, 0), (b * phi, 0, a / phi)]
    return _polyhedron(pts)


def cycle(n: int) -> EmbeddedGraph:
    pts = [(math.cos(2 * math.pi * i / n), math.sin(2 * math.pi * i / n)) for i in range(n)]
    return EmbeddedGraph.from_coordinates(pts, [(i, (i + 1) % n) for i in range(n)])


def path(n: int) -> EmbeddedGraph:
    return EmbeddedGraph.from_coordinates([(i, 0) for i in range(n)], [(i, i + 1) for i in range(n - 1)])


def star(leaves: int) -> EmbeddedGraph:
    pts = [(0, 0)] + [(math.cos(2 * math.pi * i / leaves), math.sin(2 * math.pi * i / leaves))
                      for i in range(leaves)]
    return EmbeddedGraph.from_coordinates(pts, [(0, i + 1) for i in range(leaves)])


def wheel(rim: int) -> EmbeddedGraph:
    """Hub 0 joined to a rim cycle ``1..rim``."""
    pts = [(0, 0)] + [(math.cos(2 * math.pi * i / rim), math.sin(2 * math.pi * i / rim)) for i in range(rim)]
    edges = [(0, i + 1) for i in range(rim)] + [(i + 1, (i + 1) % rim + 1) for i in range(rim)]
    return EmbeddedGraph.from_coordinates(pts, edges)


def k2() -> EmbeddedGraph:
    return path(2)


def k4() -> EmbeddedGraph:
    return tetrahedron()


NAMED = {
    "tetrahedron": tetrahedron,
    "k4": k4,
    "cube": cube,
    "octahedron": octahedron,
    "icosahedron": icosahedron,
    "dodecahedron": dodecahedron,
    "k2": k2,
    "c5": lambda: cycle(5),
    "p3": lambda: path(3),
    "star5": lambda: star(5),
    "w5": lambda: wheel(5),
}
