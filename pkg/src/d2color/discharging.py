"""Exact-rational discharging: initial charges, rules R1-R11, case table, audit.

Vertices start at ``2 deg(v) - 6`` and faces at ``deg(f) - 6``; on a connected
plane graph these sum to -12.  Transfers are computed for every (vertex, face)
incidence and then summed, so the result never depends on iteration order.
No floating point is used anywhere in this module.
"""

from __future__ import annotations

import itertools
from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction as F

from .planar import EmbeddedGraph, PredicateResult, structural_predicates, triangle_count


class DomainError(ValueError):
    pass


class RuleConflict(RuntimeError):
    pass


# ----------------------------------------------------------------------
# face classes and rules

def face_classes(sig: tuple[int, ...]) -> frozenset[str]:
    """Labels a face belongs to, from its descending degree signature."""
    k = len(sig)
    out = {f"{k}-face"}
    if k == 3:
        out.add("(" + ",".join(map(str, sig)) + ")")
    elif k == 4:
        if sig == (5, 5, 5, 3):
            out.add("(5,5,5,3)")
        if min(sig) >= 4:
            out.add("(4+,4+,4+,4+)")
    return frozenset(out)


@dataclass(frozen=True)
class Rule:
    rule_id: str
    sender_degree: int
    receiver: str  # a face class label
    amount: F
    text: str


RULES: tuple[Rule, ...] = (
    Rule("R1", 5, "(5,5,5)", F(1), "5-vertex to each incident (5,5,5)-face"),
    Rule("R2", 5, "(5,5,4)", F(7, 6), "5-vertex to each incident (5,5,4)-face"),
    Rule("R3", 5, "(5,4,4)", F(1), "5-vertex to each incident (5,4,4)-face"),
    Rule("R4", 5, "(5,5,5,3)", F(2, 3), "5-vertex to each incident (5,5,5,3)-face"),
    Rule("R5", 5, "(4+,4+,4+,4+)", F(1, 2), "5-vertex to each incident (4+,4+,4+,4+)-face"),
    Rule("R6", 5, "5-face", F(1, 3), "5-vertex to each incident 5-face"),
    Rule("R7", 4, "(5,5,4)", F(2, 3), "4-vertex to each incident (5,5,4)-face"),
    Rule("R8", 4, "(5,4,4)", F(1), "4-vertex to each incident (5,4,4)-face"),
    Rule("R9", 4, "4-face", F(1, 2), "4-vertex to each incident 4-face"),
    Rule("R10", 4, "5-face", F(1, 3), "4-vertex to each incident 5-face"),
)
R11_TEXT = "a 5-vertex with t(v) = 4 sends only along R1"
AMOUNT = {r.rule_id: r.amount for r in RULES}
_R11_KEEP = {"R1"}


def matching_rule(deg: int, t: int, classes: frozenset[str]) -> Rule | None:
    hits = [r for r in RULES if r.sender_degree == deg and r.receiver in classes]
    if len(hits) > 1:
        raise RuleConflict(f"degree-{deg} sender matches {[r.rule_id for r in hits]} on {sorted(classes)}")
    if not hits:
        return None
    if deg == 5 and t == 4 and hits[0].rule_id not in _R11_KEEP:
        return None
    return hits[0]


# ----------------------------------------------------------------------
# charges

@dataclass
class Transfer:
    vertex: int
    face: int
    rule_id: str
    amount: F


@dataclass
class ChargeState:
    vertex_initial: dict[int, F]
    face_initial: dict[int, F]
    vertex_final: dict[int, F] = field(default_factory=dict)
    face_final: dict[int, F] = field(default_factory=dict)
    transfers: list[Transfer] = field(default_factory=list)
    skipped_faces: list[int] = field(default_factory=list)

    @property
    def total_initial(self) -> F:
        return sum(self.vertex_initial.values(), F(0)) + sum(self.face_initial.values(), F(0))

    @property
    def total_final(self) -> F:
        return sum(self.vertex_final.values(), F(0)) + sum(self.face_final.values(), F(0))

    def negatives(self) -> list[tuple[str, int, F]]:
        out = [("vertex", v, c) for v, c in sorted(self.vertex_final.items()) if c < 0]
        out += [("face", f, c) for f, c in sorted(self.face_final.items()) if c < 0]
        return out


def initial_charges(g: EmbeddedGraph) -> ChargeState:
    if not g.is_connected():
        raise DomainError("charge identity needs a connected graph")
    vc = {v: F(2 * g.degree(v) - 6) for v in g.vertices}
    fc = {i: F(f.degree - 6) for i, f in enumerate(g.faces())}
    st = ChargeState(vc, fc, dict(vc), dict(fc))
    return st


def apply_rules(g: EmbeddedGraph, state: ChargeState | None = None) -> ChargeState:
    """Return a new state with every rule transfer applied."""
    if state is None:
        state = initial_charges(g)
    faces = g.faces()
    t = {v: triangle_count(g, v) for v in g.vertices}
    transfers, skipped = [], []
    for i, f in enumerate(faces):
        if f.degree >= 6:
            continue
        if f.has_repeated_vertex:
            skipped.append(i)
            continue
        classes = face_classes(f.signature)
        for v in f.vertices:
            r = matching_rule(g.degree(v), t[v], classes)
            if r is not None:
                transfers.append(Transfer(v, i, r.rule_id, r.amount))
    vf = dict(state.vertex_initial)
    ff = dict(state.face_initial)
    for tr in transfers:
        vf[tr.vertex] -= tr.amount
        ff[tr.face] += tr.amount
    return ChargeState(dict(state.vertex_initial), dict(state.face_initial), vf, ff, transfers, skipped)


# ----------------------------------------------------------------------
# symbolic case table

@dataclass(frozen=True)
class CaseRow:
    group: str
    label: str
    initial: F
    terms: tuple[tuple[str, int], ...]  # (rule id, multiplicity)
    expected: F
    relation: str = "="  # "=" or ">="
    receives: bool = False  # faces receive, vertices send
    computed_override: F | None = None

    @property
    def computed(self) -> F:
        if self.computed_override is not None:
            return self.computed_override
        moved = sum((AMOUNT[r] * n for r, n in self.terms), F(0))
        return self.initial + moved if self.receives else self.initial - moved

    @property
    def ok(self) -> bool:
        if self.relation == "=":
            return self.computed == self.expected
        return self.computed >= self.expected


# The eleven 5-face degree patterns, cyclically; "3" marks the 3-vertex.
FIVE_FACE_CASES: tuple[tuple[str, tuple[int, ...], F, str], ...] = (
    ("Case1", (3, 5, 5, 5, 5), F(0), "="),
    ("Case2", (3, 5, 4, 5, 5), F(1, 3), "="),
    ("Case3", (3, 5, 4, 4, 5), F(1, 3), "="),
    ("Case4", (5, 5, 5, 5, 5), F(0), "="),
    ("Case5", (4, 5, 5, 5, 5), F(1, 3), "="),
    ("Case6", (4, 4, 5, 5, 5), F(1, 3), "="),
    ("Case7", (4, 5, 4, 5, 5), F(2, 3), "="),
    ("Case8", (4, 4, 4, 5, 5), F(0), ">="),
    ("Case9", (4, 4, 5, 4, 5), F(0), ">="),
    ("Case10", (4, 4, 4, 4, 5), F(0), ">="),
    ("Case11", (4, 4, 4, 4, 4), F(0), ">="),
)


def five_face_markings(pattern: tuple[int, ...]) -> list[frozenset[int]]:
    """Sets of positions that may hold t=4 vertices.

    A t=4 vertex is a 5-vertex whose neighbours all have degree 5, at most
    two occur on a 5-face and no two are consecutive on it.
    """
    n = len(pattern)
    cand = [i for i in range(n) if pattern[i] == 5
            and pattern[i - 1] == 5 and pattern[(i + 1) % n] == 5]
    out = []
    for k in range(3):
        for s in itertools.combinations(cand, k):
            if all((a + 1) % n != b and (b + 1) % n != a for a, b in itertools.combinations(s, 2)):
                out.append(frozenset(s))
    return out


def five_face_min(pattern: tuple[int, ...]) -> F:
    best = None
    for marks in five_face_markings(pattern):
        ch = F(-1)
        for i, d in enumerate(pattern):
            if d == 4:
                ch += AMOUNT["R10"]
            elif d == 5 and i not in marks:
                ch += AMOUNT["R6"]
        best = ch if best is None else min(best, ch)
    return best


def case_table() -> list[CaseRow]:
    rows: list[CaseRow] = []
    add = rows.append
    f3, f4 = F(-3), F(-2)
    add(CaseRow("3-face", "(5,5,5)", f3, (("R1", 3),), F(0), receives=True))
    add(CaseRow("3-face", "(5,5,4)", f3, (("R2", 2), ("R7", 1)), F(0), receives=True))
    add(CaseRow("3-face", "(5,4,4)", f3, (("R3", 1), ("R8", 2)), F(0), receives=True))
    add(CaseRow("4-face", "(5,5,5,3)", f4, (("R4", 3),), F(0), receives=True))
    add(CaseRow("4-face", "(4+,4+,4+,4+)", f4, (("R5", 4),), F(0), receives=True))
    for label, pat, want, rel in FIVE_FACE_CASES:
        add(CaseRow("5-face", f"{label} {''.join(map(str, pat))}", F(-1), (), want, rel,
                    receives=True, computed_override=five_face_min(pat)))

    v4 = F(2)
    add(CaseRow("4-vertex", "(5,5,4) + two 4-faces + one 5-face", v4, (("R7", 1), ("R9", 2), ("R10", 1)), F(0)))
    add(CaseRow("4-vertex", "(5,5,4) + one 4-face + two 5-faces", v4, (("R7", 1), ("R9", 1), ("R10", 2)), F(1, 6)))
    add(CaseRow("4-vertex", "(5,5,4) + three 5-faces", v4, (("R7", 1), ("R10", 3)), F(1, 3)))
    add(CaseRow("4-vertex", "(5,4,4) + three 5-faces", v4, (("R8", 1), ("R10", 3)), F(0)))
    add(CaseRow("4-vertex", "no 3-face: four 4-faces", v4, (("R9", 4),), F(0)))
    add(CaseRow("4-vertex", "no 3-face: three 4-faces + one 5-face", v4, (("R9", 3), ("R10", 1)), F(1, 6)))
    add(CaseRow("4-vertex", "no 3-face: two 4-faces + two 5-faces", v4, (("R9", 2), ("R10", 2)), F(1, 3)))
    add(CaseRow("4-vertex", "no 3-face: one 4-face + three 5-faces", v4, (("R9", 1), ("R10", 3)), F(1, 2)))
    add(CaseRow("4-vertex", "no 3-face: four 5-faces", v4, (("R10", 4),), F(2, 3)))

    v5 = F(4)
    ge = ">="
    add(CaseRow("5-vertex", "t=4: four (5,5,5)", v5, (("R1", 4),), F(0)))
    add(CaseRow("5-vertex", "t=3: three (5,5,5) + (5,5,5,3) + 5-face", v5, (("R1", 3), ("R4", 1), ("R6", 1)), F(0), ge))
    add(CaseRow("5-vertex", "t=3: three (5,5,5) + two (4+)-quads", v5, (("R1", 3), ("R5", 2)), F(0), ge))
    add(CaseRow("5-vertex", "t=3: two (5,5,5) + (5,5,4) + quad + 5-face", v5,
                (("R1", 2), ("R2", 1), ("R5", 1), ("R6", 1)), F(0), ge))
    add(CaseRow("5-vertex", "t=3: two (5,5,5) + (5,4,4) + two 5-faces", v5,
                (("R1", 2), ("R3", 1), ("R6", 2)), F(1, 3), ge))
    add(CaseRow("5-vertex", "t=3: one (5,5,5) + two (5,5,4) + two 5-faces", v5,
                (("R1", 1), ("R2", 2), ("R6", 2)), F(0), ge))
    add(CaseRow("5-vertex", "t=2: two (5,5,5) + three (5,5,5,3)", v5, (("R1", 2), ("R4", 3)), F(0), ge))
    add(CaseRow("5-vertex", "t=2: (5,5,5) + (5,5,4) + two (5,5,5,3) + quad", v5,
                (("R1", 1), ("R2", 1), ("R4", 2), ("R5", 1)), F(0), ge))
    add(CaseRow("5-vertex", "t=2: (5,5,5) + (5,4,4) + (5,5,5,3) + two 5-faces", v5,
                (("R1", 1), ("R3", 1), ("R4", 1), ("R6", 2)), F(2, 3), ge))
    add(CaseRow("5-vertex", "t=2: two (5,5,4) + (5,5,5,3) + two quads", v5,
                (("R2", 2), ("R4", 1), ("R5", 2)), F(0), ge))
    add(CaseRow("5-vertex", "t=1: (5,5,5) + four (5,5,5,3)", v5, (("R1", 1), ("R4", 4)), F(1, 3), ge))
    add(CaseRow("5-vertex", "t=1: (5,5,4) + three (5,5,5,3) + quad", v5,
                (("R2", 1), ("R4", 3), ("R5", 1)), F(1, 3), ge))
    add(CaseRow("5-vertex", "t=1: (5,4,4) + two (5,5,5,3) + two quads", v5,
                (("R3", 1), ("R4", 2), ("R5", 2)), F(2, 3), ge))
    add(CaseRow("5-vertex", "t=0: five (5,5,5,3)", v5, (("R4", 5),), F(2, 3), ge))
    return rows


# ----------------------------------------------------------------------
# local exclusions around one vertex

@dataclass(frozen=True)
class Ring:
    """What a vertex sees: neighbour degrees and the faces between them.

    ``faces[i]`` lies between neighbours ``i`` and ``i + 1`` (cyclically) and
    is given by its descending degree signature.
    """
    degree: int
    nbr_degrees: tuple[int, ...]
    faces: tuple[tuple[int, ...], ...]

    @property
    def t(self) -> int:
        return sum(len(s) == 3 for s in self.faces)

    def tri(self) -> Counter:
        return Counter(s for s in self.faces if len(s) == 3)

    def count(self, label: str) -> int:
        return sum(label in face_classes(s) for s in self.faces)

    def charge(self) -> F:
        ch = F(2 * self.degree - 6)
        for s in self.faces:
            r = matching_rule(self.degree, self.t, face_classes(s))
            if r is not None:
                ch -= r.amount
        return ch


def ring_violations(r: Ring) -> list[str]:
    """Lemmas whose excluded configuration appears around this vertex."""
    out = []
    tri = r.tri()
    n555, n554, n544 = tri[(5, 5, 5)], tri[(5, 5, 4)], tri[(5, 4, 4)]
    q3, q4, quads = r.count("(5,5,5,3)"), r.count("(4+,4+,4+,4+)"), r.count("4-face")
    fives = r.count("5-face")
    t = r.t
    if r.degree == 5:
        if t >= 5:
            out.append("L10")
        if t == 4 and any(d != 5 for d in r.nbr_degrees):
            out.append("L11")
        if t == 3:
            if n555 == 3 and q3 >= 2:
                out.append("L12")
            if n555 == 3 and q3 >= 1 and q4 >= 1:
                out.append("L13")
            if n555 == 2 and n544 == 1 and quads:
                out.append("L14")
            if n555 == 2 and n554 == 1 and q3:
                out.append("L15")
            if n555 == 2 and n554 == 1 and q4 >= 2:
                out.append("L16")
            if n555 == 1 and quads:
                out.append("L17")
            if n555 == 0:
                out.append("A.1/2")
            on_tri = set()
            k = len(r.nbr_degrees)
            for i, s in enumerate(r.faces):
                if len(s) == 3:
                    on_tri |= {i, (i + 1) % k}
            if any(r.nbr_degrees[i] == 3 for i in range(k) if i not in on_tri):
                out.append("A.1/1")
        if t == 2:
            if n555 == 1 and n544 == 1 and quads >= 2:
                out.append("L18")
            if n554 == 2 and q3 >= 2:
                out.append("L19")
    if r.degree == 4 and t == 1:
        others = [s for s in r.faces if len(s) != 3]
        n4 = sum(len(s) == 4 for s in others)
        if n4 == 3:
            out.append("L22")
        if n544 == 1 and n4 == 2 and fives == 1:
            out.append("L23")
        if n544 == 1 and n4 == 1 and fives == 2:
            out.append("L24")
    return out


def _ring_cited_ok(r: Ring) -> bool:
    """Structural lemmas 3-5 and 7-9 as far as they are visible locally."""
    k = len(r.nbr_degrees)
    for i, s in enumerate(r.faces):
        a, b = r.nbr_degrees[i], r.nbr_degrees[(i + 1) % k]
        if len(s) == 3 and 3 in s:
            return False
        if len(s) == 4 and 3 in s and s != (5, 5, 5, 3):
            return False
        if len(s) == 5 and a == 3 and b == 3:
            return False
        if len(s) == 3 and s == (4, 4, 4):
            return False
    if r.degree == 4 and r.t > 1:
        return False
    for i in range(k):
        if r.nbr_degrees[i] == 4 and len(r.faces[i - 1]) == 3 and len(r.faces[i]) == 3:
            return False
        if r.nbr_degrees[i] == 3 and r.degree != 5:
            return False
    return True


def _rings(degree: int, with_big: bool):
    """All local pictures around a vertex, up to the information rules use.

    A 4-face is ``[v, a, x, b]``; only ``x`` in {3, 5} matters (4 and 5
    classify the same unless a 3-vertex is present, where 4 is excluded).
    6+-faces are dominated by 5-faces for a 5-vertex, so they are only
    enumerated when ``with_big`` is set.
    """
    kinds = ["T", "Q3", "Q5", "P"] + (["B"] if with_big else [])
    for nd in itertools.product((3, 4, 5), repeat=degree):
        for ks in itertools.product(kinds, repeat=degree):
            faces = []
            for i, kind in enumerate(ks):
                a, b = nd[i], nd[(i + 1) % degree]
                if kind == "T":
                    faces.append(tuple(sorted((degree, a, b), reverse=True)))
                elif kind in ("Q3", "Q5"):
                    x = 3 if kind == "Q3" else 5
                    faces.append(tuple(sorted((degree, a, x, b), reverse=True)))
                elif kind == "P":
                    faces.append((9,) * 5)  # only the length matters
                else:
                    faces.append((9,) * 6)
            yield Ring(degree, nd, tuple(faces))


@dataclass
class MinimumRow:
    degree: int
    category: tuple
    minimum: F | None  # None: no admissible local picture
    expected: F | None
    witness: Ring | None

    @property
    def ok(self) -> bool:
        if self.minimum is None:
            return True
        if self.expected is None:
            return self.minimum >= 0
        return self.minimum == self.expected


_EXPECTED_5 = {
    (4, 4, 0, 0): F(0),
    (3, 3, 0, 0): F(0), (3, 2, 1, 0): F(0), (3, 2, 0, 1): F(1, 3), (3, 1, 2, 0): F(0),
    (2, 2, 0, 0): F(0), (2, 1, 1, 0): F(0), (2, 1, 0, 1): F(2, 3), (2, 0, 2, 0): F(0),
    (1, 1, 0, 0): F(1, 3), (1, 0, 1, 0): F(1, 3), (1, 0, 0, 1): F(2, 3),
    (0, 0, 0, 0): F(2, 3),
}
_EXPECTED_4 = {(1, 1, 0): F(0), (1, 0, 1): F(0), (0, 0, 0): F(0)}


def rederive_vertex_minima() -> list[MinimumRow]:
    """Minimum final charge over every admissible local picture, by category.

    Categories are (t, #(5,5,5), #(5,5,4), #(5,4,4)) for 5-vertices and
    (t, #(5,5,4), #(5,4,4)) for 4-vertices.  Where the case analysis names a
    worst situation the minimum must equal it; elsewhere it must be >= 0.
    """
    rows = []
    for degree, expected, big in ((5, _EXPECTED_5, False), (4, _EXPECTED_4, True)):
        best: dict[tuple, tuple[F, Ring]] = {}
        for r in _rings(degree, big):
            if not _ring_cited_ok(r) or ring_violations(r):
                continue
            tri = r.tri()
            if degree == 5:
                cat = (r.t, tri[(5, 5, 5)], tri[(5, 5, 4)], tri[(5, 4, 4)])
            else:
                cat = (r.t, tri[(5, 5, 4)], tri[(5, 4, 4)])
            ch = r.charge()
            if cat not in best or ch < best[cat][0]:
                best[cat] = (ch, r)
        for cat in sorted(set(best) | set(expected)):
            if cat in best:
                rows.append(MinimumRow(degree, cat, best[cat][0], expected.get(cat), best[cat][1]))
            else:
                rows.append(MinimumRow(degree, cat, None, expected.get(cat), None))
    return rows


# ----------------------------------------------------------------------
# audit on concrete graphs

def exclusion_predicates(g: EmbeddedGraph) -> list[PredicateResult]:
    faces = g.faces()
    deg = {v: g.degree(v) for v in g.vertices}
    t = {v: triangle_count(g, v) for v in g.vertices}
    hits: dict[str, list] = {name: [] for name in
                             ["L6", "L10", "L11", "L12", "L13", "L14", "L15", "L16", "L17",
                              "L18", "L19", "L20", "L21", "L22", "L23", "L24", "A.1/1", "A.1/2"]}
    for f in faces:
        if f.degree == 3 and f.signature == (4, 4, 4):
            hits["L6"].append(f.vertices)
        if f.degree == 5 and not f.has_repeated_vertex:
            marks = [i for i, v in enumerate(f.vertices) if deg[v] == 5 and t[v] == 4]
            if len(marks) >= 3:
                hits["L20"].append(f.vertices)
            if any((a + 1) % 5 == b or (b + 1) % 5 == a for a, b in itertools.combinations(marks, 2)):
                hits["L21"].append(f.vertices)
    for v in g.vertices:
        if deg[v] not in (4, 5):
            continue
        for name in ring_violations(ring_of(g, v)):
            hits[name].append(v)
    text = {
        "L6": "no (4,4,4)-face",
        "L10": "5-vertex has t <= 4",
        "L11": "t=4 5-vertex has only 5-neighbours",
        "L12": "t=3, three (5,5,5): not two (5,5,5,3)",
        "L13": "t=3, three (5,5,5) + (5,5,5,3): no (4+)-quad",
        "L14": "t=3, two (5,5,5) + (5,4,4): no 4-face",
        "L15": "t=3, two (5,5,5) + (5,5,4): no (5,5,5,3)",
        "L16": "t=3, two (5,5,5) + (5,5,4): not two (4+)-quads",
        "L17": "t=3, one (5,5,5): no 4-face",
        "L18": "t=2, (5,5,5) + (5,4,4): at most one 4-face",
        "L19": "t=2, two (5,5,4): not two (5,5,5,3)",
        "L20": "at most two t=4 vertices on a 5-face",
        "L21": "t=4 vertices on a 5-face are not adjacent",
        "L22": "4-vertex with t=1: other faces not all 4-faces",
        "L23": "4-vertex on (5,4,4): not two 4-faces + one 5-face",
        "L24": "4-vertex on (5,4,4): not one 4-face + two 5-faces",
        "A.1/1": "t=3: a neighbour off the 3-faces is not a 3-vertex",
        "A.1/2": "t=3: some incident (5,5,5)-face",
    }
    return [PredicateResult(k, text[k], not w, w) for k, w in hits.items()]


def ring_of(g: EmbeddedGraph, v: int) -> Ring:
    hs = g.out_half_edges(v)
    faces = g.faces()
    k = len(hs)
    nd = tuple(g.degree(g.origin(h ^ 1)) for h in hs)
    # face_of(h_i) contains u_{i+1}, v, u_i: it sits between neighbours i and i+1
    fs = tuple(faces[g.face_of(hs[i])].signature for i in range(k))
    return Ring(g.degree(v), nd, fs)


@dataclass
class AuditReport:
    state: ChargeState
    predicates: list[PredicateResult]
    negatives: list[tuple[str, int, F]]
    unexplained: list[tuple[str, int, F]]

    @property
    def failed_predicates(self) -> list[PredicateResult]:
        return [p for p in self.predicates if not p.ok]

    @property
    def disjunction_holds(self) -> bool:
        return bool(self.failed_predicates) or bool(self.negatives)

    @property
    def total_initial(self) -> F:
        return self.state.total_initial

    @property
    def total_final(self) -> F:
        return self.state.total_final


def audit(g: EmbeddedGraph) -> AuditReport:
    if g.max_degree() > 5:
        raise DomainError(f"maximum degree {g.max_degree()} exceeds 5")
    state = apply_rules(g, initial_charges(g))
    preds = structural_predicates(g) + exclusion_predicates(g)
    negs = state.negatives()
    near: set[int] = set()
    adj = g.adjacency()
    for p in preds:
        if p.ok:
            continue
        for w in p.witness_vertices():
            near.add(w)
            for u in adj.get(w, ()):
                near.add(u)
                near |= adj[u]
    faces = g.faces()
    unexplained = []
    for kind, idx, c in negs:
        where = {idx} if kind == "vertex" else set(faces[idx].vertices)
        if not where & near:
            unexplained.append((kind, idx, c))
    return AuditReport(state, preds, negs, unexplained)
