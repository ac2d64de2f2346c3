"""Reducible configurations and the colour-counting checks behind them.

A configuration is described the way a proof describes it: a handful of
named faces (``"vv1v2"`` is the triangle on v, v1, v2), explicit
neighbourhoods, degree constraints, and an edit string such as
``"G - {v,v6} + v1v5 + v3v4 + v1v7"``.  From that we build a gadget:

* faces listed become cycles; faces not listed are left open, so two
  neighbours of a vertex share nothing unless a face says so;
* every vertex within distance one of an uncoloured vertex is padded to its
  degree with fresh pendant stubs (``v1~1``, ``v1~2``, ...).  Stubs are
  pairwise distinct, which is the worst case for colour counting.

Vertices with no stated degree are taken at the maximum degree 5, which is
again the worst case.  A configuration built with ``default_degree=None``
raises :class:`AmbiguousGadget` instead.
"""

from __future__ import annotations

import itertools
import re
from dataclasses import dataclass, field
from functools import cached_property

import networkx as nx

PALETTE = 17
MAX_DEGREE = 5

_TOKEN = re.compile(r"[a-z]\d*")
_EDIT = re.compile(r"([+-])\s*(\{[^}]*\}|[a-z0-9]+)")


class AmbiguousGadget(ValueError):
    pass


class UnknownConfiguration(KeyError):
    pass


def split_names(s: str) -> list[str]:
    names = _TOKEN.findall(s)
    if "".join(names) != s:
        raise ValueError(f"cannot split {s!r} into vertex names")
    return names


@dataclass(frozen=True)
class Edit:
    kind: str  # "delete-vertex", "delete-edge" or "add-edge"
    u: str
    v: str | None = None

    def __str__(self):
        if self.kind == "delete-vertex":
            return f"-{self.u}"
        sign = "-" if self.kind == "delete-edge" else "+"
        return f"{sign}{self.u}{self.v}"


def parse_edits(text: str) -> tuple[Edit, ...]:
    body = text.strip()
    if not body.startswith("G"):
        raise ValueError(f"edit string must start with G: {text!r}")
    body = body[1:].strip()
    out = []
    pos = 0
    for m in _EDIT.finditer(body):
        if body[pos:m.start()].strip():
            raise ValueError(f"unparsed text in {text!r}")
        pos = m.end()
        sign, arg = m.groups()
        if arg.startswith("{"):
            if sign != "-":
                raise ValueError("only deletions take a vertex set")
            out += [Edit("delete-vertex", x.strip()) for x in arg[1:-1].split(",")]
            continue
        names = split_names(arg)
        if sign == "-" and len(names) == 1:
            out.append(Edit("delete-vertex", names[0]))
        elif len(names) == 2:
            out.append(Edit("delete-edge" if sign == "-" else "add-edge", *names))
        else:
            raise ValueError(f"bad edit term {sign}{arg}")
    if body[pos:].strip():
        raise ValueError(f"unparsed text in {text!r}")
    return tuple(out)


@dataclass
class LocalConfiguration:
    lemma_id: str
    case_id: str | None
    statement: str
    faces: tuple[str, ...]
    edit_text: str
    uncolored: tuple[str, ...]
    claimed: dict[str, int]
    degrees: dict[str, int] = field(default_factory=dict)
    neighborhoods: dict[str, tuple[str, ...]] = field(default_factory=dict)
    claim: str = "eq"  # "eq": computed must equal claimed; "le": must not exceed it
    figure_derived: bool = False
    flags: tuple[str, ...] = ()
    note: str = ""
    default_degree: int | None = MAX_DEGREE

    @property
    def key(self) -> str:
        return self.lemma_id if self.case_id is None else f"{self.lemma_id}/{self.case_id}"

    @cached_property
    def edits(self) -> tuple[Edit, ...]:
        return parse_edits(self.edit_text)

    @cached_property
    def degree_constraints(self) -> dict[str, int]:
        out = dict(self.degrees)
        for x, nb in self.neighborhoods.items():
            if x in out and out[x] != len(nb):
                raise AmbiguousGadget(f"{self.key}: degree of {x} conflicts with its neighbourhood")
            out[x] = len(nb)
        return out

    @cached_property
    def gadget(self) -> nx.Graph:
        return _build_gadget(self)

    @property
    def stubs(self) -> set[str]:
        return {x for x in self.gadget if "~" in x}

    def declared_degree(self, x: str) -> int:
        d = self.degree_constraints.get(x, self.default_degree)
        if d is None:
            raise AmbiguousGadget(f"{self.key}: no degree known for {x}")
        return d

    @property
    def colored(self) -> set[str]:
        return set(self.gadget) - set(self.uncolored)

    @cached_property
    def g_prime(self) -> nx.Graph:
        h = self.gadget.copy()
        for e in self.edits:
            if e.kind == "delete-vertex":
                h.remove_node(e.u)
            elif e.kind == "delete-edge":
                h.remove_edge(e.u, e.v)
            else:
                h.add_edge(e.u, e.v)
        return h


def _build_gadget(cfg: LocalConfiguration) -> nx.Graph:
    g = nx.Graph()
    for f in cfg.faces:
        names = split_names(f)
        if len(set(names)) != len(names) or len(names) < 3:
            raise AmbiguousGadget(f"{cfg.key}: bad face {f!r}")
        nx.add_cycle(g, names)
    for x, nb in cfg.neighborhoods.items():
        for y in nb:
            g.add_edge(x, y)
    for e in cfg.edits:
        g.add_nodes_from([e.u] + ([e.v] if e.v else []))
    g.add_nodes_from(cfg.uncolored)
    fixed = cfg.neighborhoods

    def pad(x):
        want = cfg.declared_degree(x)
        have = g.degree(x)
        if have > want:
            raise AmbiguousGadget(f"{cfg.key}: {x} has {have} neighbours but degree {want}")
        if x in fixed and have != want:
            raise AmbiguousGadget(f"{cfg.key}: neighbourhood of {x} is not closed")
        for i in range(1, want - have + 1):
            g.add_edge(x, f"{x}~{i}")

    for x in cfg.uncolored:
        if "~" not in x:
            pad(x)
    ring = sorted({y for x in cfg.uncolored for y in g[x]} - set(cfg.uncolored))
    for y in ring:
        if g.degree(y) < cfg.declared_degree(y) or y in fixed:
            pad(y)
    for x, d in cfg.degree_constraints.items():
        if x in g and g.degree(x) > d:
            raise AmbiguousGadget(f"{cfg.key}: {x} exceeds its degree {d}")
    return g


def ball2(g: nx.Graph, x) -> set:
    """Vertices at distance 1 or 2 from ``x`` (``x`` itself excluded)."""
    near = set(g[x])
    for y in g[x]:
        near |= set(g[y])
    near.discard(x)
    return near


def forbidden_bound(cfg: LocalConfiguration, v: str) -> int:
    """Coloured gadget vertices within distance two of ``v`` in G."""
    if v not in cfg.uncolored:
        raise ValueError(f"{v} is not uncoloured in {cfg.key}")
    return len(ball2(cfg.gadget, v) - set(cfg.uncolored))


def check_distance_preservation(cfg: LocalConfiguration) -> bool:
    return not preservation_failures(cfg)


def preservation_failures(cfg: LocalConfiguration) -> list[tuple[str, str]]:
    """Coloured pairs within distance two in G that drift apart in G'."""
    g, h = cfg.gadget, cfg.g_prime
    keep = set(h) - set(cfg.uncolored)
    bad = []
    for x in sorted(keep):
        for y in sorted(ball2(g, x) & keep):
            if x < y and y not in ball2(h, x):
                bad.append((x, y))
    return bad


def edit_problems(cfg: LocalConfiguration) -> list[str]:
    """Structural problems with the edit list, including degree overflow in G'."""
    g = cfg.gadget
    probs = []
    deleted = {e.u for e in cfg.edits if e.kind == "delete-vertex"}
    removed: dict[str, int] = {}
    added: dict[str, int] = {}
    for e in cfg.edits:
        if e.kind == "delete-vertex":
            if e.u not in g:
                probs.append(f"deleted vertex {e.u} not in gadget")
                continue
            for y in g[e.u]:
                removed[y] = removed.get(y, 0) + 1
        elif e.kind == "delete-edge":
            if not g.has_edge(e.u, e.v):
                probs.append(f"deleted edge {e.u}{e.v} not in gadget")
            for y in (e.u, e.v):
                removed[y] = removed.get(y, 0) + 1
        else:
            if e.u in deleted or e.v in deleted:
                probs.append(f"added edge {e.u}{e.v} touches a deleted vertex")
            if g.has_edge(e.u, e.v):
                probs.append(f"added edge {e.u}{e.v} already present")
            for y in (e.u, e.v):
                added[y] = added.get(y, 0) + 1
    for y in sorted(set(removed) | set(added)):
        if y in deleted:
            continue
        base = max(cfg.declared_degree(y), g.degree(y)) if "~" not in y else cfg.default_degree
        if base - removed.get(y, 0) + added.get(y, 0) > MAX_DEGREE:
            probs.append(f"{y} exceeds degree {MAX_DEGREE} in G'")
    if not set(cfg.uncolored) <= set(g):
        probs.append("uncoloured vertex missing from gadget")
    h = cfg.g_prime
    if h.number_of_nodes() + h.number_of_edges() >= g.number_of_nodes() + g.number_of_edges():
        probs.append("G' is not smaller than G")
    return probs


def check_max_degree(cfg: LocalConfiguration) -> bool:
    return not any("exceeds degree" in p for p in edit_problems(cfg))


def check_extension(cfg: LocalConfiguration, palette: int = PALETTE) -> bool:
    """Sequential greedy argument: some order gives every vertex a spare colour."""
    slack = {u: palette - forbidden_bound(cfg, u) for u in cfg.uncolored}
    g = cfg.gadget
    first = tuple(sorted(cfg.uncolored, key=lambda u: (slack[u], cfg.uncolored.index(u))))
    orders = [first] + [p for p in itertools.permutations(cfg.uncolored) if p != first]
    for order in orders:
        if all(slack[u] > sum(1 for w in order[:i] if w in ball2(g, u))
               for i, u in enumerate(order)):
            return True
    return False


def exhaustive_extension(cfg: LocalConfiguration, palette: int = PALETTE) -> bool:
    """Brute-force worst-case completion, up to permutations of colours.

    Any colouring of G' restricted to the gadget is summarised, up to renaming
    colours, by the colour sets seen from each uncoloured vertex.  For two
    uncoloured vertices we enumerate every (|FA|, |FB|, |FA & FB|) an
    adversary could reach, bounding the overlap by the shared vertices plus a
    maximum matching of non-shared vertices far enough apart to repeat a
    colour, and search all completions for each.  Distances are recomputed
    here with networkx rather than reusing the counting code.
    """
    g = cfg.gadget
    unc = list(cfg.uncolored)

    def ball(x):
        d = nx.single_source_shortest_path_length(g, x, cutoff=2)
        return {y for y, k in d.items() if k >= 1} - set(unc)

    colors = range(1, palette + 1)
    if len(unc) == 1:
        a_max = min(len(ball(unc[0])), palette)
        for a in range(a_max + 1):
            fa = set(range(1, a + 1))
            if not any(c not in fa for c in colors):
                return False
        return True
    if len(unc) != 2:
        raise NotImplementedError("oracle handles at most two uncoloured vertices")
    u1, u2 = unc
    A, B = ball(u1), ball(u2)
    shared = A & B
    dist = dict(nx.all_pairs_shortest_path_length(g, cutoff=2))
    only_a, only_b = sorted(A - B), sorted(B - A)
    bip = nx.Graph()
    bip.add_nodes_from(("a", x) for x in only_a)
    bip.add_nodes_from(("b", y) for y in only_b)
    bip.add_edges_from((("a", x), ("b", y)) for x in only_a for y in only_b if y not in dist[x])
    match = nx.bipartite.maximum_matching(bip, top_nodes=[("a", x) for x in only_a])
    overlap_max = len(shared) + len(match) // 2
    close = u2 in dist[u1]
    for a in range(min(len(A), palette) + 1):
        for b in range(min(len(B), palette) + 1):
            for k in range(max(0, a + b - palette), min(a, b, overlap_max) + 1):
                fa = set(range(1, a + 1))
                fb = set(range(a - k + 1, a - k + b + 1))
                if not any(c1 not in fa and c2 not in fb and (c1 != c2 or not close)
                           for c1 in colors for c2 in colors):
                    return False
    return True


@dataclass
class LemmaReport:
    lemma_id: str
    case_id: str | None
    bounds: dict[str, tuple[int, int]]  # vertex -> (claimed, computed)
    claim: str
    distance_preserved: bool
    max_degree_ok: bool
    extension_ok: bool
    exhaustive_ok: bool | None = None
    problems: list[str] = field(default_factory=list)
    figure_derived: bool = False
    flags: tuple[str, ...] = ()

    @property
    def primary(self) -> str:
        return next(iter(self.bounds))

    @property
    def claimed_bound(self) -> int:
        return self.bounds[self.primary][0]

    @property
    def computed_bound(self) -> int:
        return self.bounds[self.primary][1]

    @property
    def slack(self) -> int:
        return PALETTE - self.computed_bound

    @property
    def bound_ok(self) -> bool:
        if self.claim == "eq":
            return all(c == k for c, k in self.bounds.values())
        return all(k <= c for c, k in self.bounds.values())

    @property
    def verified(self) -> bool:
        return (self.bound_ok and self.distance_preserved and self.max_degree_ok
                and self.extension_ok and self.exhaustive_ok is not False)

    def as_dict(self) -> dict:
        return {
            "lemma": self.lemma_id,
            "case": self.case_id,
            "claimed_bound": self.claimed_bound,
            "computed_bound": self.computed_bound,
            "slack": self.slack,
            "bounds": {v: {"claimed": c, "computed": k} for v, (c, k) in self.bounds.items()},
            "claim": self.claim,
            "distance_preserved": self.distance_preserved,
            "max_degree_ok": self.max_degree_ok,
            "extension_ok": self.extension_ok,
            "exhaustive_ok": self.exhaustive_ok,
            "figure_derived": self.figure_derived,
            "flags": list(self.flags),
            "problems": self.problems,
            "verified": self.verified,
        }


def report(cfg: LocalConfiguration, exhaustive: bool = True) -> LemmaReport:
    bounds = {u: (cfg.claimed[u], forbidden_bound(cfg, u)) for u in cfg.uncolored}
    probs = edit_problems(cfg)
    pres = preservation_failures(cfg)
    probs += [f"{x},{y} no longer within distance 2" for x, y in pres]
    return LemmaReport(
        cfg.lemma_id, cfg.case_id, bounds, cfg.claim,
        distance_preserved=not pres,
        max_degree_ok=not any("exceeds degree" in p for p in probs),
        extension_ok=check_extension(cfg),
        exhaustive_ok=exhaustive_extension(cfg) if exhaustive else None,
        problems=probs,
        figure_derived=cfg.figure_derived,
        flags=cfg.flags,
    )


def find(lemma_id: str, case_id: str | None = None) -> list[LocalConfiguration]:
    lemma_id = str(lemma_id)
    hits = [c for c in catalog() if c.lemma_id == lemma_id
            and (case_id is None or c.case_id == str(case_id))]
    if not hits:
        raise UnknownConfiguration(f"no configuration {lemma_id}" + (f"/{case_id}" if case_id else ""))
    return hits


def verify_lemma(lemma_id: str, case_id: str | None = None, exhaustive: bool = True) -> LemmaReport:
    hits = find(lemma_id, case_id)
    if len(hits) > 1:
        raise UnknownConfiguration(f"lemma {lemma_id} has cases {[c.case_id for c in hits]}; pick one")
    return report(hits[0], exhaustive)


def verify_all(exhaustive: bool = True) -> list[LemmaReport]:
    return [report(c, exhaustive) for c in catalog()]


# --------------------------------------------------------------------------
# the catalogue

def _c(lemma, case, statement, faces, edits, uncolored, claimed, **kw) -> LocalConfiguration:
    return LocalConfiguration(
        lemma_id=lemma, case_id=case, statement=statement,
        faces=tuple(faces.split()), edit_text=edits,
        uncolored=tuple(uncolored.split()), claimed=claimed, **kw)


_FIVE = "v1v2v3v4v5"
_FAN_V1 = "v1v2a v1ab v1bc v1cv5"
_FAN_V5 = "v5cr v5rs v5sv4"
_N5 = {"v": ("v1", "v2", "v3", "v4", "v5")}
_N4 = {"v": ("v1", "v2", "v3", "v4")}


def catalog() -> list[LocalConfiguration]:
    return list(_CATALOG)


_CATALOG: tuple[LocalConfiguration, ...] = (
    _c("6", None, "no (4,4,4)-face",
       "vv1v2", "G - vv1", "v v1", {"v": 15, "v1": 15},
       degrees={"v": 4, "v1": 4, "v2": 4}),
    _c("10", None, "a 5-vertex lies on at most four 3-faces",
       "vv1v2 vv2v3 vv3v4 vv4v5 vv5v1", "G - {v}", "v", {"v": 15},
       neighborhoods=_N5),
    _c("11", None, "a 5-vertex with t=4 has only 5-neighbours",
       "vv1v2 vv2v3 vv3v4 vv4v5", "G - {v} + v1v5", "v", {"v": 16},
       neighborhoods=_N5, degrees={"v1": 4}),

    _c("12", "1", "t=3 with three (5,5,5)-faces: not two (5,5,5,3)-faces",
       "vv1v2 vv2v3 vv4v5 vv5v6v1 vv3v8v4", "G - {v,v6} + v1v5 + v3v4 + v1v7",
       "v v6", {"v": 16, "v6": 13}, neighborhoods={**_N5, "v6": ("v1", "v5", "v7"),
                                                    "v8": ("v3", "v4", "v9")}),
    _c("12", "2.1", "t=3 with three (5,5,5)-faces, shared 3-vertex on both 4-faces",
       "vv1v2 vv2v3 vv5v1 vv3v6v4 vv4v7v5", "G - {v4} + v6v7",
       "v4", {"v4": 13}, neighborhoods={**_N5, "v4": ("v", "v6", "v7")}),
    _c("12", "2.2", "t=3 with three (5,5,5)-faces, two 3-vertices off v",
       "vv1v2 vv2v3 vv5v1 vv3v6v4 vv4v7v5", "G - {v,v7} + v3v4 + v4v5 + v5v9",
       "v v7", {"v": 16, "v7": 13}, neighborhoods={**_N5, "v6": ("v3", "v4", "v8"),
                                                    "v7": ("v4", "v5", "v9")}),

    _c("13", "1", "three (5,5,5) + one (5,5,5,3): last face not a 4+ quad",
       "vv1v2 vv2v3 vv4v5 vv5v7v1 vv3v6v4", "G - {v,v7} + v1v5 + v3v4 + v1v8",
       "v v7", {"v": 16, "v7": 13}, neighborhoods={**_N5, "v7": ("v1", "v5", "v8")}),
    _c("13", "2", "three (5,5,5) + one (5,5,5,3): last face not a 4+ quad",
       "vv1v2 vv2v3 vv5v1 vv4v7v5 vv3v6v4", "G - {v,v7} + v3v4 + v4v5 + v5v8",
       "v v7", {"v": 16, "v7": 13}, neighborhoods={**_N5, "v7": ("v4", "v5", "v8")}),

    _c("14", None, "two (5,5,5) + one (5,4,4): no 4-face",
       "vv1v2 vv2v3 vv4v5 vv5v6v1", "G - {v} + v1v5 + v3v4", "v", {"v": 16},
       neighborhoods=_N5, degrees={"v4": 4, "v5": 4}),

    _c("15", "1", "two (5,5,5) + one (5,5,4): no (5,5,5,3)-face",
       "vv1v2 vv2v3 vv4v5 vv3v6v4", "G - {v,v6} + v1v5 + v3v4 + v4v7",
       "v v6", {"v": 16, "v6": 13},
       neighborhoods={**_N5, "v6": ("v3", "v4", "v7")}, degrees={"v5": 4}),
    _c("15", "2", "two (5,5,5) + one (5,5,4): no (5,5,5,3)-face",
       "vv2v3 vv4v5 vv1v2 vv3v6v4", "G - {v,v6} + v1v5 + v3v4 + v4v7",
       "v v6", {"v": 16, "v6": 13},
       neighborhoods={**_N5, "v6": ("v3", "v4", "v7")}, degrees={"v1": 4}),
    _c("15", "3", "two (5,5,5) + one (5,5,4): no (5,5,5,3)-face",
       "vv1v2 vv2v3 vv5v1 vv3v6v4", "G - {v,v6} + v4v5 + v3v4 + v3v7",
       "v v6", {"v": 16, "v6": 13},
       neighborhoods={**_N5, "v6": ("v3", "v4", "v7")}, degrees={"v5": 4},
       figure_derived=True,
       note="v4 taken as a 5-vertex; the 3-vertex alternative is a separate configuration"),

    _c("16", "1", "two (5,5,5) + one (5,5,4): not two 4+ quads",
       "vv1v2 vv2v3 vv4v5 vv5v7v1 vv3v6v4", "G - {v} + v1v5 + v3v4", "v", {"v": 16},
       neighborhoods=_N5, degrees={"v5": 4}),
    _c("16", "2", "two (5,5,5) + one (5,5,4): not two 4+ quads",
       "vv2v3 vv4v5 vv1v2 vv5v7v1 vv3v6v4", "G - {v} + v1v5 + v3v4", "v", {"v": 16},
       neighborhoods=_N5, degrees={"v1": 4}),
    _c("16", "3", "two (5,5,5) + one (5,5,4): not two 4+ quads",
       "vv1v2 vv2v3 vv5v1 vv3v6v4 vv4v7v5", "G - vv5", "v v5", {"v": 15, "v5": 15},
       neighborhoods=_N5, degrees={"v5": 4}, figure_derived=True,
       note="edge deletion; v4 taken as a 5-vertex"),

    _c("17", "1", "one (5,5,5) + two (5,5,4): no 4-face",
       "vv1v2 vv2v3 vv5v1 vv3v6v4", "G - vv3", "v v3", {"v": 15, "v3": 15},
       neighborhoods=_N5, degrees={"v3": 4, "v5": 4}),
    _c("17", "2", "one (5,5,5) + two (5,5,4): no 4-face",
       "vv2v3 vv1v2 vv4v5 vv3v6v4", "G - {v} + v1v5 + v3v4", "v", {"v": 16},
       neighborhoods=_N5, degrees={"v1": 4, "v5": 4}),
    _c("17", "3", "one (5,5,5) + two (5,5,4): no 4-face",
       "vv2v3 vv1v2 vv4v5 vv3v6v4", "G - {v} + v1v5 + v3v4", "v", {"v": 16},
       neighborhoods=_N5, degrees={"v1": 4, "v4": 4}),
    _c("17", "4", "one (5,5,5) + two (5,5,4): no 4-face",
       "vv4v5 vv1v2 vv2v3 vv3v6v4", "G - {v} + v1v5 + v3v4", "v", {"v": 16},
       neighborhoods=_N5, degrees={"v1": 4, "v3": 4}),

    _c("18", "1", "t=2 with (5,5,5) and (5,4,4): not two 4-faces",
       "vv3v4 vv1v2 vv4v6v5 vv2v7v3", "G - {v} + v2v3 + v4v5 + v1v5", "v", {"v": 15},
       neighborhoods=_N5, degrees={"v1": 4, "v2": 4, "v5": 3}),
    _c("18", "2", "t=2 with (5,5,5) and (5,4,4): not two 4-faces",
       "vv3v4 vv1v2 vv4v6v5 vv5v7v1", "G - vv1", "v v1", {"v": 16, "v1": 15},
       neighborhoods=_N5, degrees={"v1": 4, "v2": 4, "v6": 3}, figure_derived=True),
    _c("18", "3", "t=2 with (5,5,5) and (5,4,4): not two 4-faces",
       "vv3v4 vv1v2 vv4v6v5 vv2v7v3", "G - vv2", "v v2", {"v": 16, "v2": 15},
       neighborhoods=_N5, degrees={"v1": 4, "v2": 4, "v6": 3}, figure_derived=True),
    _c("18", "4", "t=2 with (5,5,5) and (5,4,4): not two 4-faces",
       "vv3v4 vv1v2 vv2v6v3 vv5v7v1", "G - vv1", "v v1", {"v": 16, "v1": 15},
       neighborhoods=_N5, degrees={"v1": 4, "v2": 4}, figure_derived=True),
    _c("18", "5", "t=2 with (5,5,5) and (5,4,4): not two 4-faces",
       "vv3v4 vv1v2 vv4v6v5 vv5v7v1", "G - vv1", "v v1", {"v": 16, "v1": 15},
       neighborhoods=_N5, degrees={"v1": 4, "v2": 4}, figure_derived=True),
    _c("18", "6", "t=2 with (5,5,5) and (5,4,4): not two 4-faces",
       "vv3v4 vv1v2 vv2v7v3 vv4v6v5", "G - vv2", "v v2", {"v": 16, "v2": 15},
       neighborhoods=_N5, degrees={"v1": 4, "v2": 4}, figure_derived=True),

    _c("19", "1", "t=2 with two (5,5,4): not two (5,5,5,3)-faces",
       "vv1v2 vv3v4 vv4v6v5 vv5v7v1", "G - vv5", "v v5", {"v": 14, "v5": 12},
       neighborhoods={**_N5, "v5": ("v", "v6", "v7")}, degrees={"v2": 4, "v3": 4}),
    _c("19", "2", "t=2 with two (5,5,4): not two (5,5,5,3)-faces",
       "vv1v2 vv3v4 vv4v6v5 vv5v7v1", "G - {v,v7} + v2v3 + v4v5 + v1v5 + v1v9",
       "v v7", {"v": 16, "v7": 13},
       neighborhoods={**_N5, "v6": ("v4", "v5", "v8"), "v7": ("v1", "v5", "v9")},
       degrees={"v2": 4, "v3": 4}),

    _c("20", "1", "three t=4 vertices v1, v2, v5 on a 5-face",
       f"{_FIVE} {_FAN_V1} v2ap v2pq v2qv3 {_FAN_V5}", "G - {v1} + v2v5", "v1", {"v1": 15}),
    _c("20", "2", "three t=4 vertices v1, v3, v5 on a 5-face",
       f"{_FIVE} {_FAN_V1} v3v2x1 v3x1x2 v3x2x3 v3x3v4 {_FAN_V5}", "G - {v1} + v2v5",
       "v1", {"v1": 16}),
    _c("21", None, "two adjacent t=4 vertices on a 5-face",
       f"{_FIVE} {_FAN_V1} {_FAN_V5}", "G - {v1} + v2v5", "v1", {"v1": 16}),

    _c("22", None, "4-vertex with t=1: the other faces are not all 4-faces",
       "vv4v1 vv1xv2 vv2yv3 vv3zv4", "G - {v} + v1v2 + v3v4", "v", {"v": 15},
       neighborhoods=_N4),

    _c("23", "1", "4-vertex on a (5,4,4)-face: not two 4-faces and a 5-face",
       "vv4v1 vv1wv2 vv2xv3 vv3yzv4", "G - {v} + v1v2 + v3v4", "v", {"v": 15},
       neighborhoods=_N4, degrees={"v1": 4}),
    _c("23", "2", "4-vertex on a (5,4,4)-face: not two 4-faces and a 5-face",
       "vv4v1 vv1wv2 vv2xv3 vv3yzv4", "G - {v} + v1v2 + v3v4", "v", {"v": 15},
       neighborhoods=_N4, degrees={"v4": 4}),
    _c("23", "3", "4-vertex on a (5,4,4)-face: not two 4-faces and a 5-face",
       "vv4v1 vv1wv2 vv3zv4 vv2xyv3", "G - {v} + v1v2 + v1v3", "v", {"v": 15},
       neighborhoods=_N4, degrees={"v1": 4}),
    _c("23", "4", "4-vertex on a (5,4,4)-face: not two 4-faces and a 5-face",
       "vv4v1 vv1wv2 vv3zv4 vv2xyv3", "G - {v} + v2v4 + v3v4", "v", {"v": 15},
       neighborhoods=_N4, degrees={"v4": 4}),

    _c("24", "1", "4-vertex on a (5,4,4)-face: not a 4-face and two 5-faces",
       "vv4v1 vv1uv2 vv2wxv3 vv3yzv4", "G - {v} + v1v2 + v1v3", "v", {"v": 16},
       neighborhoods=_N4, degrees={"v1": 4}),
    _c("24", "2", "4-vertex on a (5,4,4)-face: not a 4-face and two 5-faces",
       "vv4v1 vv1uv2 vv2wxv3 vv3yzv4", "G - {v} + v2v4 + v3v4", "v", {"v": 16},
       neighborhoods=_N4, degrees={"v4": 4}),
    _c("24", "3", "4-vertex on a (5,4,4)-face: not a 4-face and two 5-faces",
       "vv4v1 vv2xv3 vv1uwv2 vv3yzv4", "G - {v} + v1v2 + v1v3", "v", {"v": 16},
       neighborhoods=_N4, degrees={"v1": 4}),
    _c("24", "4", "4-vertex on a (5,4,4)-face: not a 4-face and two 5-faces",
       "vv4v1 vv2xv3 vv1uwv2 vv3yzv4", "G - {v} + v2v4 + v3v4", "v", {"v": 16},
       neighborhoods=_N4, degrees={"v4": 4}),

    _c("A.1", "1", "t=3, triangles at v1v2, v2v3, v5v1; v4 a 3-vertex",
       "vv1v2 vv2v3 vv5v1 vv3av4 vv4bv5", "G - {v} + v3v4 + v4v5", "v", {"v": 16},
       neighborhoods={**_N5, "v4": ("v", "a", "b")}, claim="le", figure_derived=True),
    _c("A.1", "2", "t=3, triangles at v1v2, v2v3, v4v5; no (5,5,5)-face",
       "vv1v2 vv2v3 vv4v5", "G - {v} + v3v4 + v1v5", "v", {"v": 16},
       neighborhoods=_N5, degrees={"v1": 4, "v3": 4, "v4": 4}, claim="le",
       figure_derived=True),
    _c("A.2", "1", "t=2, triangles at v1v2 and v5v1, other faces 4-faces",
       "vv1v2 vv5v1 vv2av3 vv3bv4 vv4cv5", "G - {v} + v2v3 + v3v4 + v4v5", "v", {"v": 16},
       neighborhoods=_N5, degrees={"v3": 4, "v4": 4}, claim="le", figure_derived=True),
    _c("A.2", "2", "t=2, a (5,4,4)-face at v1v2 and a (5,5,5)-face at v3v4",
       "vv1v2 vv3v4 vv4bv5 vv5cv1", "G - {v} + v2v3 + v4v5 + v1v5", "v", {"v": 16},
       neighborhoods=_N5, degrees={"v1": 4, "v2": 4, "v5": 4}, claim="le",
       figure_derived=True),
    _c("A.3", None, "t=1, the other four faces 4-faces",
       "vv1v2 vv2av3 vv3bv4 vv4cv5 vv5dv1", "G - {v} + v2v3 + v3v4 + v4v5 + v1v5",
       "v", {"v": 17}, neighborhoods=_N5, degrees={"v3": 4, "v4": 4, "v5": 4},
       claim="le", figure_derived=True, flags=("non-strict-claim",),
       note="stated as at most 17, which alone leaves no spare colour"),
)
