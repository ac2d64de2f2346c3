"""Half-edge representation of simple planar graphs with a fixed rotation system.

Edge ``e`` owns half-edges ``2e`` and ``2e + 1``; the twin of ``h`` is ``h ^ 1``.
Around each vertex the outgoing half-edges form one cyclic list in
counterclockwise order (``rot_next`` / ``rot_prev``).  Deleted edges and
vertices are tombstoned so indices stay stable across edits.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Iterable, Mapping, Sequence

import networkx as nx


class EmbeddingError(ValueError):
    """Structural validation failure; ``half_edge`` names the offender when known."""

    def __init__(self, message: str, half_edge: int | None = None):
        if half_edge is not None:
            message = f"half-edge {half_edge}: {message}"
        super().__init__(message)
        self.half_edge = half_edge


@dataclass(frozen=True)
class Face:
    half_edges: tuple[int, ...]
    vertices: tuple[int, ...]
    signature: tuple[int, ...] = field(default=())

    @property
    def degree(self) -> int:
        return len(self.half_edges)

    @property
    def has_repeated_vertex(self) -> bool:
        return len(set(self.vertices)) != len(self.vertices)


class EmbeddedGraph:
    def __init__(self) -> None:
        self._origin: list[int] = []
        self._rot_next: list[int] = []
        self._rot_prev: list[int] = []
        self._edge_alive: list[bool] = []
        self._vertex_alive: list[bool] = []
        self._first_out: list[int] = []
        self._faces: list[Face] | None = None
        self._face_of: dict[int, int] | None = None

    # ------------------------------------------------------------------
    # construction

    @classmethod
    def from_rotations(cls, rotations: Mapping[int, Sequence[int]] | Sequence[Sequence[int]]) -> "EmbeddedGraph":
        """Build from per-vertex counterclockwise neighbour lists.

        Vertices are ``0..n-1``; ``rotations`` may be a list or a dict keyed by
        vertex.  Symmetry (``u`` lists ``v`` iff ``v`` lists ``u``) is enforced.
        """
        if not isinstance(rotations, Mapping):
            rotations = dict(enumerate(rotations))
        n = 1 + max(rotations, default=-1)
        g = cls()
        for _ in range(n):
            g.add_vertex()
        rot = {v: list(rotations.get(v, ())) for v in range(n)}
        for v, nbrs in rot.items():
            if len(set(nbrs)) != len(nbrs):
                raise EmbeddingError(f"vertex {v} lists a neighbour twice (parallel edge)")
            for u in nbrs:
                if u == v:
                    raise EmbeddingError(f"loop at vertex {v}")
                if u not in rot or v not in rot[u]:
                    raise EmbeddingError(f"asymmetric rotation: {v} lists {u} but not conversely")
        half: dict[tuple[int, int], int] = {}
        for v in range(n):
            for u in rot[v]:
                if (v, u) in half:
                    continue
                e = len(g._edge_alive)
                g._edge_alive.append(True)
                g._origin += [v, u]
                g._rot_next += [-1, -1]
                g._rot_prev += [-1, -1]
                half[(v, u)] = 2 * e
                half[(u, v)] = 2 * e + 1
        for v in range(n):
            hs = [half[(v, u)] for u in rot[v]]
            for i, h in enumerate(hs):
                g._rot_next[h] = hs[(i + 1) % len(hs)]
                g._rot_prev[h] = hs[i - 1]
            g._first_out[v] = hs[0] if hs else -1
        return g

    @classmethod
    def from_coordinates(cls, points: Sequence[Sequence[float]], edges: Iterable[tuple[int, int]]) -> "EmbeddedGraph":
        """Rotation from a straight-line drawing: neighbours sorted by angle."""
        nbrs: dict[int, list[int]] = {i: [] for i in range(len(points))}
        for u, v in edges:
            nbrs[u].append(v)
            nbrs[v].append(u)
        rot = {}
        for v, us in nbrs.items():
            x0, y0 = points[v][0], points[v][1]
            rot[v] = sorted(us, key=lambda u: math.atan2(points[u][1] - y0, points[u][0] - x0))
        return cls.from_rotations(rot)

    def copy(self) -> "EmbeddedGraph":
        g = EmbeddedGraph()
        g._origin = self._origin[:]
        g._rot_next = self._rot_next[:]
        g._rot_prev = self._rot_prev[:]
        g._edge_alive = self._edge_alive[:]
        g._vertex_alive = self._vertex_alive[:]
        g._first_out = self._first_out[:]
        return g

    def _touch(self) -> None:
        self._faces = None
        self._face_of = None

    def add_vertex(self) -> int:
        self._vertex_alive.append(True)
        self._first_out.append(-1)
        self._touch()
        return len(self._vertex_alive) - 1

    def add_edge(self, u: int, v: int, u_after: int | None = None, v_after: int | None = None) -> int:
        """Insert edge ``uv``.

        In ``u``'s rotation the new edge goes right after (counterclockwise)
        the existing neighbour ``u_after``; likewise for ``v``.  The anchor may
        be omitted only when that endpoint is isolated.
        """
        self._check_vertex(u)
        self._check_vertex(v)
        if u == v:
            raise EmbeddingError(f"loop at vertex {u}")
        if self.has_edge(u, v):
            raise EmbeddingError(f"edge {u}-{v} already present")
        e = len(self._edge_alive)
        self._edge_alive.append(True)
        self._origin += [u, v]
        self._rot_next += [-1, -1]
        self._rot_prev += [-1, -1]
        self._splice(2 * e, u, u_after)
        self._splice(2 * e + 1, v, v_after)
        self._touch()
        return e

    def _splice(self, h: int, v: int, after: int | None) -> None:
        if self._first_out[v] == -1:
            if after is not None:
                raise EmbeddingError(f"vertex {v} is isolated; no anchor {after}")
            self._rot_next[h] = self._rot_prev[h] = h
            self._first_out[v] = h
            return
        if after is None:
            raise EmbeddingError(f"vertex {v} needs a rotation anchor")
        a = self.half_edge(v, after)
        b = self._rot_next[a]
        self._rot_next[a] = h
        self._rot_prev[h] = a
        self._rot_next[h] = b
        self._rot_prev[b] = h

    def remove_edge(self, e: int) -> None:
        if not self._edge_alive[e]:
            raise KeyError(f"edge {e} already removed")
        for h in (2 * e, 2 * e + 1):
            v = self._origin[h]
            a, b = self._rot_prev[h], self._rot_next[h]
            if a == h:
                self._first_out[v] = -1
            else:
                self._rot_next[a] = b
                self._rot_prev[b] = a
                if self._first_out[v] == h:
                    self._first_out[v] = b
        self._edge_alive[e] = False
        self._touch()

    def remove_vertex(self, v: int) -> None:
        self._check_vertex(v)
        for h in list(self.out_half_edges(v)):
            self.remove_edge(h >> 1)
        self._vertex_alive[v] = False
        self._touch()

    # ------------------------------------------------------------------
    # queries

    def _check_vertex(self, v: int) -> None:
        if not (0 <= v < len(self._vertex_alive)) or not self._vertex_alive[v]:
            raise KeyError(f"unknown vertex {v}")

    @property
    def vertices(self) -> list[int]:
        return [v for v, ok in enumerate(self._vertex_alive) if ok]

    @property
    def edges(self) -> list[tuple[int, int]]:
        return [(self._origin[2 * e], self._origin[2 * e + 1]) for e, ok in enumerate(self._edge_alive) if ok]

    def edge_ids(self) -> list[int]:
        return [e for e, ok in enumerate(self._edge_alive) if ok]

    def endpoints(self, e: int) -> tuple[int, int]:
        return self._origin[2 * e], self._origin[2 * e + 1]

    @property
    def num_vertices(self) -> int:
        return sum(self._vertex_alive)

    @property
    def num_edges(self) -> int:
        return sum(self._edge_alive)

    def origin(self, h: int) -> int:
        return self._origin[h]

    def twin(self, h: int) -> int:
        return h ^ 1

    def rot_next(self, h: int) -> int:
        return self._rot_next[h]

    def rot_prev(self, h: int) -> int:
        return self._rot_prev[h]

    def face_next(self, h: int) -> int:
        return self._rot_prev[h ^ 1]

    def out_half_edges(self, v: int) -> list[int]:
        self._check_vertex(v)
        start = self._first_out[v]
        if start == -1:
            return []
        out, h = [start], self._rot_next[start]
        while h != start:
            out.append(h)
            h = self._rot_next[h]
        return out

    def neighbors(self, v: int) -> list[int]:
        """Neighbours in counterclockwise rotation order."""
        return [self._origin[h ^ 1] for h in self.out_half_edges(v)]

    def rotation(self, v: int) -> list[int]:
        return self.neighbors(v)

    def degree(self, v: int) -> int:
        return len(self.out_half_edges(v))

    def half_edge(self, u: int, v: int) -> int:
        for h in self.out_half_edges(u):
            if self._origin[h ^ 1] == v:
                return h
        raise KeyError(f"no edge {u}-{v}")

    def has_edge(self, u: int, v: int) -> bool:
        return any(self._origin[h ^ 1] == v for h in self.out_half_edges(u))

    def adjacency(self) -> dict[int, set[int]]:
        return {v: set(self.neighbors(v)) for v in self.vertices}

    def to_networkx(self) -> nx.Graph:
        G = nx.Graph()
        G.add_nodes_from(self.vertices)
        G.add_edges_from(self.edges)
        return G

    def max_degree(self) -> int:
        return max((self.degree(v) for v in self.vertices), default=0)

    def min_degree(self) -> int:
        return min((self.degree(v) for v in self.vertices), default=0)

    def is_connected(self) -> bool:
        vs = self.vertices
        if not vs:
            return True
        seen, stack = {vs[0]}, [vs[0]]
        while stack:
            for u in self.neighbors(stack.pop()):
                if u not in seen:
                    seen.add(u)
                    stack.append(u)
        return len(seen) == len(vs)

    def validate(self) -> None:
        """Raise :class:`EmbeddingError` unless twin/rotation links are consistent."""
        for e, alive in enumerate(self._edge_alive):
            if not alive:
                continue
            for h in (2 * e, 2 * e + 1):
                t = h ^ 1
                if t ^ 1 != h or t == h:
                    raise EmbeddingError("twin is not a fixed-point-free involution", h)
                if self._origin[h] == self._origin[t]:
                    raise EmbeddingError("loop", h)
                for nxt in (self._rot_next[h], self._rot_prev[h]):
                    if not (0 <= nxt < len(self._origin)) or not self._edge_alive[nxt >> 1]:
                        raise EmbeddingError("rotation link points at a missing half-edge", h)
                    if self._origin[nxt] != self._origin[h]:
                        raise EmbeddingError("rotation link leaves its origin vertex", h)
                if self._rot_prev[self._rot_next[h]] != h:
                    raise EmbeddingError("rot_next/rot_prev disagree", h)
        by_origin: dict[int, set[int]] = {v: set() for v in self.vertices}
        for e, alive in enumerate(self._edge_alive):
            if alive:
                for h in (2 * e, 2 * e + 1):
                    if self._origin[h] not in by_origin:
                        raise EmbeddingError("half-edge leaves a deleted vertex", h)
                    by_origin[self._origin[h]].add(h)
        for v in self.vertices:
            expected = by_origin[v]
            if not expected:
                if self._first_out[v] != -1:
                    raise EmbeddingError(f"isolated vertex {v} has a rotation", self._first_out[v])
                continue
            if self._first_out[v] not in expected:
                raise EmbeddingError(f"vertex {v} anchor is not one of its half-edges", self._first_out[v])
            cycle = self.out_half_edges(v)
            if set(cycle) != expected or len(cycle) != len(expected):
                missing = sorted(expected - set(cycle))
                raise EmbeddingError(f"rotation at vertex {v} is not a single cycle", missing[0] if missing else None)
            ends = [self._origin[h ^ 1] for h in cycle]
            if len(set(ends)) != len(ends):
                raise EmbeddingError(f"parallel edges at vertex {v}", cycle[0])

    def euler_characteristic(self) -> int:
        return self.num_vertices - self.num_edges + len(self.faces())

    def check_planar(self) -> None:
        """Raise unless the rotation system has genus 0 on every component.

        An isolated vertex has no face walk, so it contributes 1 instead of 2.
        """
        self.validate()
        nx_g = self.to_networkx()
        comps = list(nx.connected_components(nx_g))
        isolated = sum(1 for c in comps if len(c) == 1)
        expected = 2 * (len(comps) - isolated) + isolated
        chi = self.euler_characteristic()
        if chi != expected:
            raise EmbeddingError(f"V - E + F = {chi}, expected {expected}: the rotation system is not planar")
        if sum(f.degree for f in self.faces()) != 2 * self.num_edges:
            raise EmbeddingError("face degrees do not sum to 2|E|")

    # ------------------------------------------------------------------
    # faces

    def faces(self) -> list[Face]:
        if self._faces is None:
            self._faces, self._face_of = self._trace_faces()
        return self._faces

    def face_of(self, h: int) -> int:
        self.faces()
        return self._face_of[h]

    def _trace_faces(self) -> tuple[list[Face], dict[int, int]]:
        self.validate()
        faces: list[Face] = []
        face_of: dict[int, int] = {}
        for e, alive in enumerate(self._edge_alive):
            if not alive:
                continue
            for start in (2 * e, 2 * e + 1):
                if start in face_of:
                    continue
                walk, h = [], start
                while h not in face_of:
                    face_of[h] = len(faces)
                    walk.append(h)
                    h = self.face_next(h)
                if h != start:
                    raise EmbeddingError("face walk does not close", h)
                vs = tuple(self._origin[x] for x in walk)
                sig = tuple(sorted((self.degree(x) for x in vs), reverse=True))
                faces.append(Face(tuple(walk), vs, sig))
        return faces, face_of

    def faces_at(self, v: int) -> list[Face]:
        """Incident faces in rotation order, one per outgoing half-edge."""
        fs = self.faces()
        return [fs[self._face_of[h]] for h in self.out_half_edges(v)]


def derive_faces(g: EmbeddedGraph) -> list[Face]:
    return g.faces()


def triangle_count(g: EmbeddedGraph, v: int) -> int:
    """t(v): distinct 3-faces whose boundary contains ``v``.

    Walks the face boundary locally from each outgoing half-edge rather than
    going through the global face list.
    """
    seen: set[frozenset[int]] = set()
    for h in g.out_half_edges(v):
        a = g.face_next(h)
        b = g.face_next(a)
        if g.face_next(b) == h:
            seen.add(frozenset((h, a, b)))
    return len(seen)


def classify_face(g: EmbeddedGraph, f: Face) -> tuple[int, ...]:
    """Degree signature of ``f``, sorted descending: e.g. ``(5, 5, 4)``."""
    return tuple(sorted((g.degree(v) for v in f.vertices), reverse=True))


def is_5553(sig: Sequence[int]) -> bool:
    return tuple(sig) == (5, 5, 5, 3)


def is_4plus_quad(sig: Sequence[int]) -> bool:
    return len(sig) == 4 and min(sig) >= 4


def face_label(sig: Sequence[int]) -> str:
    k = len(sig)
    if k <= 3 or is_5553(sig):
        return "(" + ",".join(map(str, sig)) + ")"
    if is_4plus_quad(sig):
        return "(4+,4+,4+,4+)"
    return f"{k}-face"


# ----------------------------------------------------------------------
# structural lemmas


@dataclass
class PredicateResult:
    name: str
    statement: str
    ok: bool
    witnesses: list = field(default_factory=list)

    def witness_vertices(self) -> set[int]:
        out: set[int] = set()
        for w in self.witnesses:
            if isinstance(w, int):
                out.add(w)
            else:
                out.update(w)
        return out


def _result(name, statement, witnesses) -> PredicateResult:
    return PredicateResult(name, statement, not witnesses, witnesses)


def bridges(g: EmbeddedGraph) -> list[tuple[int, int]]:
    return sorted(tuple(sorted(e)) for e in nx.bridges(g.to_networkx()))


def structural_predicates(g: EmbeddedGraph) -> list[PredicateResult]:
    """Lemmas 1-5 and 7-9 evaluated on ``g``, each with violation witnesses.

    Witnesses are vertices or tuples of vertices (edges, face boundaries).
    """
    deg = {v: g.degree(v) for v in g.vertices}
    faces = g.faces()
    t = {v: triangle_count(g, v) for v in g.vertices}
    out = []

    if g.is_connected():
        out.append(_result("L1", "connected", []))
    else:
        comps = list(nx.connected_components(g.to_networkx()))
        out.append(_result("L1", "connected", [tuple(sorted(c)) for c in comps[1:]]))

    out.append(_result("L2", "no cut edge", bridges(g)))
    out.append(_result("L3", "min degree >= 3", [v for v in g.vertices if deg[v] < 3]))
    out.append(_result("L4", "3-vertex adjacent to three 5-vertices",
                       [v for v in g.vertices if deg[v] == 3 and any(deg[u] != 5 for u in g.neighbors(v))]))
    out.append(_result("L5", "no 3-vertex on a 3-face",
                       [f.vertices for f in faces if f.degree == 3 and 3 in f.signature]))
    out.append(_result("L7", "at most one 3-vertex on a 5-face",
                       [f.vertices for f in faces if f.degree == 5
                        and sum(deg[v] == 3 for v in set(f.vertices)) > 1]))
    out.append(_result("L8", "4-vertex on at most one 3-face",
                       [v for v in g.vertices if deg[v] == 4 and t[v] > 1]))
    bad9 = []
    for f in faces:
        if f.degree != 4:
            continue
        for i, v in enumerate(f.vertices):
            if deg[v] == 3 and any(deg[u] != 5 for j, u in enumerate(f.vertices) if j != i):
                bad9.append(f.vertices)
                break
    out.append(_result("L9", "3-vertex on a 4-face has 5-vertices elsewhere on it", bad9))
    return out
