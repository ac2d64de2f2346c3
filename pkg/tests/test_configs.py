import pytest

from d2color import configs
from d2color.configs import (AmbiguousGadget, LocalConfiguration, UnknownConfiguration,
                             check_distance_preservation, check_extension, check_max_degree,
                             exhaustive_extension, forbidden_bound, parse_edits, report,
                             verify_all, verify_lemma)

# (lemma, case) -> stated |C_phi| bound per uncoloured vertex
CLAIMED = {
    ("6", None): {"v": 15, "v1": 15},
    ("10", None): {"v": 15},
    ("11", None): {"v": 16},
    ("12", "1"): {"v": 16, "v6": 13},
    ("12", "2.1"): {"v4": 13},
    ("12", "2.2"): {"v": 16, "v7": 13},
    ("13", "1"): {"v": 16, "v7": 13},
    ("13", "2"): {"v": 16, "v7": 13},
    ("14", None): {"v": 16},
    ("15", "1"): {"v": 16, "v6": 13},
    ("15", "2"): {"v": 16, "v6": 13},
    ("15", "3"): {"v": 16, "v6": 13},
    ("16", "1"): {"v": 16},
    ("16", "2"): {"v": 16},
    ("16", "3"): {"v": 15, "v5": 15},
    ("17", "1"): {"v": 15, "v3": 15},
    ("17", "2"): {"v": 16},
    ("17", "3"): {"v": 16},
    ("17", "4"): {"v": 16},
    ("18", "1"): {"v": 15},
    ("18", "2"): {"v": 16, "v1": 15},
    ("18", "3"): {"v": 16, "v2": 15},
    ("18", "4"): {"v": 16, "v1": 15},
    ("18", "5"): {"v": 16, "v1": 15},
    ("18", "6"): {"v": 16, "v2": 15},
    ("19", "1"): {"v": 14, "v5": 12},
    ("19", "2"): {"v": 16, "v7": 13},
    ("20", "1"): {"v1": 15},
    ("20", "2"): {"v1": 16},
    ("21", None): {"v1": 16},
    ("22", None): {"v": 15},
    ("23", "1"): {"v": 15},
    ("23", "2"): {"v": 15},
    ("23", "3"): {"v": 15},
    ("23", "4"): {"v": 15},
    ("24", "1"): {"v": 16},
    ("24", "2"): {"v": 16},
    ("24", "3"): {"v": 16},
    ("24", "4"): {"v": 16},
    ("A.1", "1"): {"v": 16},
    ("A.1", "2"): {"v": 16},
    ("A.2", "1"): {"v": 16},
    ("A.2", "2"): {"v": 16},
    ("A.3", None): {"v": 17},
}


def test_catalog_covers_table():
    assert {(c.lemma_id, c.case_id) for c in configs.catalog()} == set(CLAIMED)


@pytest.mark.parametrize("key", sorted(CLAIMED, key=str))
def test_counting_bound(key):
    lemma, case = key
    rep = verify_lemma(lemma, case)
    for v, claimed in CLAIMED[key].items():
        computed = rep.bounds[v][1]
        if rep.claim == "eq":
            assert computed == claimed, v
        else:
            assert computed <= claimed, v
    assert rep.verified, rep.problems


def test_verify_all_passes():
    reps = verify_all()
    assert len(reps) == len(CLAIMED)
    assert all(r.verified for r in reps)


def test_unknown_lemma_rejected():
    with pytest.raises(UnknownConfiguration):
        verify_lemma("99")


def test_multi_case_lemma_needs_case():
    with pytest.raises(UnknownConfiguration):
        verify_lemma("12")


def test_parse_edits():
    edits = parse_edits("G - {v,v6} + v1v5 - v2v3")
    assert [(e.kind, e.u, e.v) for e in edits] == [
        ("delete-vertex", "v", None), ("delete-vertex", "v6", None),
        ("add-edge", "v1", "v5"), ("delete-edge", "v2", "v3")]


def test_midpoint_deletion_breaks_preservation():
    cfg = LocalConfiguration("x", None, "path midpoint", (), "G - {v}", ("v",), {"v": 2},
                             neighborhoods={"v": ("a", "b")}, degrees={"a": 1, "b": 1})
    assert forbidden_bound(cfg, "v") == 2
    assert not check_distance_preservation(cfg)
    assert not report(cfg).verified


def _twins(deg_a1):
    return LocalConfiguration(
        "y", None, "adjacent pair", (), "G - {v,w}", ("v", "w"), {"v": 16, "w": 16},
        neighborhoods={"v": ("w", "a1", "a2", "a3"), "w": ("v", "b1", "b2", "b3")},
        degrees={"a1": deg_a1, "a2": 4, "a3": 4, "b1": 5, "b2": 4, "b3": 4})


def test_two_adjacent_slack_one_vertices_cannot_extend():
    cfg = _twins(5)
    assert forbidden_bound(cfg, "v") == forbidden_bound(cfg, "w") == 16
    assert not check_extension(cfg)
    assert not exhaustive_extension(cfg)


def test_extension_order_uses_slack():
    cfg = _twins(4)
    assert forbidden_bound(cfg, "v") == 15
    assert check_extension(cfg)
    assert exhaustive_extension(cfg)


def test_added_edge_exceeding_degree_detected():
    cfg = LocalConfiguration("z", None, "overfull", (), "G - {v} + ab", ("v",), {"v": 10},
                             neighborhoods={"v": ("a", "c")}, degrees={"a": 5, "b": 5, "c": 3})
    assert not check_max_degree(cfg)


def test_inconsistent_degree_rejected():
    cfg = LocalConfiguration("w", None, "bad", ("vab",), "G - {v}", ("v",), {"v": 1},
                             degrees={"v": 1})
    with pytest.raises(AmbiguousGadget):
        cfg.gadget
