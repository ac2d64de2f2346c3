"""Text formats: ``d2graph v1`` embeddings, colouring files, and DOT export.

Graph file::

    d2graph v1
    n 3
    rot 0: 1 2
    rot 1: 2 0
    rot 2: 0 1

Each ``rot`` line lists that vertex's neighbours counterclockwise.
Colouring file: one ``color <v> <c>`` line per coloured vertex.
"""

from __future__ import annotations

from pathlib import Path
from typing import Mapping

from .planar import EmbeddedGraph, EmbeddingError

HEADER = "d2graph v1"


class FormatError(ValueError):
    pass


def loads(text: str) -> EmbeddedGraph:
    lines = [ln.strip() for ln in text.splitlines()]
    lines = [ln for ln in lines if ln and not ln.startswith("#")]
    if not lines or lines[0] != HEADER:
        raise FormatError(f"missing header {HEADER!r}")
    if len(lines) < 2 or not lines[1].startswith("n "):
        raise FormatError("second line must be 'n <vertex-count>'")
    try:
        n = int(lines[1][2:])
    except ValueError:
        raise FormatError(f"bad vertex count: {lines[1]!r}") from None
    if n < 0:
        raise FormatError("negative vertex count")
    rot: dict[int, list[int]] = {}
    for ln in lines[2:]:
        head, sep, rest = ln.partition(":")
        parts = head.split()
        if not sep or len(parts) != 2 or parts[0] != "rot":
            raise FormatError(f"bad line: {ln!r}")
        try:
            v = int(parts[1])
            nbrs = [int(x) for x in rest.split()]
        except ValueError:
            raise FormatError(f"bad line: {ln!r}") from None
        if not 0 <= v < n or any(not 0 <= u < n for u in nbrs):
            raise FormatError(f"vertex out of range in {ln!r}")
        if v in rot:
            raise FormatError(f"duplicate rotation for vertex {v}")
        rot[v] = nbrs
    for v in range(n):
        rot.setdefault(v, [])
    try:
        return EmbeddedGraph.from_rotations(rot)
    except EmbeddingError as exc:
        raise FormatError(str(exc)) from exc


def dumps(g: EmbeddedGraph) -> str:
    """Serialise with live vertices relabelled ``0..n-1`` in ascending order."""
    vs = g.vertices
    idx = {v: i for i, v in enumerate(vs)}
    out = [HEADER, f"n {len(vs)}"]
    for v in vs:
        nbrs = g.neighbors(v)
        if nbrs:
            # start each rotation at its smallest neighbour so output is canonical
            k = min(range(len(nbrs)), key=lambda i: idx[nbrs[i]])
            nbrs = nbrs[k:] + nbrs[:k]
            out.append(f"rot {idx[v]}: " + " ".join(str(idx[u]) for u in nbrs))
        else:
            out.append(f"rot {idx[v]}:")
    return "\n".join(out) + "\n"


def load(path: str | Path) -> EmbeddedGraph:
    return loads(Path(path).read_text())


def dump(g: EmbeddedGraph, path: str | Path) -> None:
    Path(path).write_text(dumps(g))


def to_dot(g: EmbeddedGraph, name: str = "G", colors: Mapping[int, int] | None = None) -> str:
    out = [f"graph {name} {{"]
    for v in g.vertices:
        label = f' [label="{v}:{colors[v]}"]' if colors and v in colors else ""
        out.append(f"  {v}{label};")
    for u, v in g.edges:
        out.append(f"  {u} -- {v};")
    out.append("}")
    return "\n".join(out) + "\n"


def loads_coloring(text: str) -> dict[int, int]:
    out: dict[int, int] = {}
    for ln in text.splitlines():
        ln = ln.strip()
        if not ln or ln.startswith("#"):
            continue
        parts = ln.split()
        if len(parts) != 3 or parts[0] != "color":
            raise FormatError(f"bad colouring line: {ln!r}")
        v, c = int(parts[1]), int(parts[2])
        if v in out:
            raise FormatError(f"vertex {v} coloured twice")
        out[v] = c
    return out


def dumps_coloring(assignment: Mapping[int, int]) -> str:
    return "".join(f"color {v} {assignment[v]}\n" for v in sorted(assignment))
