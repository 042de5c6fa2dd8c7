"""Checker catalog: verdict structure, known instances, corpus-wide passes."""
import pytest

from sumess import (
    CATALOG_ALL,
    CORPUS_GATES,
    ModuleAnalysis,
    REGISTRY,
    UnknownTheoremId,
    integer_module,
    run_catalog,
)
from sumess.theorems import _asserted, _equivalent, _inapplicable


def _az(*moduli):
    name = "".join(f"z{m}" for m in moduli)
    return ModuleAnalysis(integer_module(name, *moduli))


# -- verdict plumbing -----------------------------------------------------------


def test_verdict_helpers():
    v = _equivalent("x", {"a": True, "b": True})
    assert v.passed and v.witness is None
    v = _equivalent("x", {"a": False, "b": False})
    assert v.passed  # both sides false still means the equivalence holds
    v = _equivalent("x", {"a": True, "b": False})
    assert not v.passed and v.witness is not None
    v = _asserted("x", {"a": True, "b": False}, None)
    assert not v.passed and "b=False" in v.witness
    v = _inapplicable("x", "why")
    assert not v.applicable and not v.passed and v.sides == {} and v.witness == "why"


def test_verdict_invariant_everywhere(corpus_analyses):
    """pass implies applicable; witness present exactly when not passing."""
    ids = list(CATALOG_ALL) + list(CORPUS_GATES)
    for name, az in corpus_analyses.items():
        for v in run_catalog(az, ids):
            if v.passed:
                assert v.applicable, (name, v.theorem_id)
                assert v.witness is None, (name, v.theorem_id)
            else:
                assert v.witness, (name, v.theorem_id)
            if not v.applicable:
                assert v.sides == {}, (name, v.theorem_id)
            d = v.as_dict()
            assert d["pass"] == v.passed
            assert d["theorem_id"] == v.theorem_id


def test_run_catalog_all_order(z8z2):
    verdicts = run_catalog(z8z2, "all")
    assert [v.theorem_id for v in verdicts] == list(CATALOG_ALL)
    assert len(verdicts) == 9


def test_run_catalog_unknown_id(z8z2):
    with pytest.raises(UnknownTheoremId):
        run_catalog(z8z2, ["no-such-theorem"])


def test_run_catalog_single_string(z8z2):
    (v,) = run_catalog(z8z2, "thm-1.5")
    assert v.theorem_id == "thm-1.5"


def test_run_catalog_deterministic(z4z9):
    a = run_catalog(z4z9, "all")
    b = run_catalog(z4z9, "all")
    assert [v.as_dict() for v in a] == [v.as_dict() for v in b]


# -- corpus-wide ground truth ------------------------------------------------------


def test_every_applicable_verdict_passes(corpus_analyses):
    ids = list(CATALOG_ALL) + list(CORPUS_GATES)
    failures = []
    for name, az in corpus_analyses.items():
        for v in run_catalog(az, ids):
            if v.applicable and not v.passed:
                failures.append((name, v.theorem_id, v.witness))
    assert failures == []


# -- individual checkers on known modules --------------------------------------------


def test_semisimple_equalities_sides(corpus_analyses):
    v = REGISTRY["prop-semisimple"](corpus_analyses["z2z2z3"])
    assert v.sides == {
        "is_semisimple": True,
        "graphs_equal": True,
        "some_vertex_same_degree_in_both": True,
    }
    v = REGISTRY["prop-semisimple"](corpus_analyses["z8z2"])
    assert set(v.sides.values()) == {False}
    assert v.passed


def test_semisimple_equalities_inapplicable_on_simple():
    v = REGISTRY["prop-semisimple"](_az(5))
    assert not v.applicable


def test_example_degree_formula(z2z3z5, corpus_analyses):
    v = REGISTRY["ex-1.2"](z2z3z5)
    assert v.applicable and v.passed
    assert v.sides["subset_bijection"]
    # isomorphic summands break the hypothesis
    v = REGISTRY["ex-1.2"](corpus_analyses["z2z2"])
    assert not v.applicable
    # non-semisimple module breaks it too
    v = REGISTRY["ex-1.2"](corpus_analyses["z4z3"])
    assert not v.applicable


def test_deg1_S_chain_branch():
    az = _az(27)
    v = REGISTRY["deg1-S"](az)
    assert v.applicable and v.passed
    s = az.s_graph
    assert all(s.degree(x) == 1 for x in s.vertex_ids)


def test_deg1_S_twin_atoms_have_no_degree_one(corpus_analyses):
    az = corpus_analyses["z2z2"]
    assert REGISTRY["deg1-S"](az).passed
    assert all(az.s_graph.degree(x) == 2 for x in az.s_graph.vertex_ids)


def test_prop_2_5_verdict(corpus_analyses):
    az = corpus_analyses["z2z2z3"]
    v = REGISTRY["prop-2.5"](az)
    assert v.applicable and v.passed
    # the order-3 atom is the only degree-1 vertex: no isomorphic twin
    lat, s = az.lattice, az.s_graph
    deg1 = [x for x in s.vertex_ids if s.degree(x) == 1]
    assert [lat.subs[x].size for x in deg1] == [3]


def test_prop_2_5_inapplicable_nonsemisimple(z8z2):
    assert not REGISTRY["prop-2.5"](z8z2).applicable


def test_thm_2_13_star_module(z8z3):
    v = REGISTRY["thm-2.13"](z8z3)
    assert v.passed
    assert v.sides["four_conditions_agree"]
    assert v.sides["unique_neighbor_is_sum_of_other_simples"]
    n = z8z3.n_graph
    deg1 = [x for x in n.vertex_ids if n.degree(x) == 1]
    assert len(deg1) == 3
    # every degree-1 vertex points at the order-3 simple factor
    center = z8z3.lattice.subs[n.star_centers()[0]]
    for u in deg1:
        assert n.neighbors(u) == [z8z3.lattice.id_of_mask[center.mask]]


def test_thm_2_13_inapplicable_uniform():
    v = REGISTRY["thm-2.13"](_az(27))
    assert not v.applicable
    assert "uniform" in v.witness


def test_deg1_interactions_meeting_chain(z8z3):
    v = REGISTRY["deg1-interactions"](z8z3)
    assert v.passed
    # non-simple degree-1 vertices exist, so a unique largest one must
    n, lat = z8z3.n_graph, z8z3.lattice
    deg1 = [x for x in n.vertex_ids if n.degree(x) == 1]
    largest = [v_ for v_ in deg1 if all(lat.leq(w, v_) for w in deg1)]
    assert len(largest) == 1
    assert lat.subs[largest[0]].size == 8


def test_deg1_interactions_disjoint_pair(corpus_analyses):
    az = corpus_analyses["z2z3"]
    v = REGISTRY["deg1-interactions"](az)
    assert v.passed
    assert v.sides["disjoint_pairs_are_nonisomorphic_simples"]
    assert v.sides["essential_sums_are_socle"]


def test_complete_on_two_simples(corpus_analyses):
    for name, homs in [("z2z2", 2), ("z2z3", 1), ("z3z3", 3), ("z5z5", 5)]:
        az = corpus_analyses[name]
        v = REGISTRY["complete"](az)
        assert v.passed, (name, v.witness)
        assert az.s_graph.is_complete()
        assert az.s_graph.n_vertices == homs + 1, name


def test_complete_uniform_single_vertex():
    az = _az(4)
    v = REGISTRY["complete"](az)
    assert v.passed
    assert az.s_graph.is_complete()


def test_complete_fails_nowhere_but_sides_differ(z8z2):
    v = REGISTRY["complete"](z8z2)
    assert v.passed
    assert not z8z2.s_graph.is_complete()


def test_thm_3_6_regular(corpus_analyses):
    v = REGISTRY["thm-3.6"](corpus_analyses["m2f2"])
    assert v.passed
    assert corpus_analyses["m2f2"].s_graph.k_regular() == 2


def test_trianglefree_sides(corpus_analyses, z4z9):
    v = REGISTRY["trianglefree"](corpus_analyses["z4z2"])
    assert v.passed  # triangle exists and an adjacent non-disjoint pair exists
    v = REGISTRY["thm-3.11"](corpus_analyses["z4z2"])
    assert v.passed and set(v.sides.values()) == {False}
    v = REGISTRY["thm-3.11"](z4z9)
    assert v.passed and set(v.sides.values()) == {True}
    v = REGISTRY["thm-3.12"](z4z9)
    assert v.passed and set(v.sides.values()) == {False}  # a 4-cycle is no tree


def test_thm_3_7_k2(corpus_analyses):
    v = REGISTRY["thm-3.7"](corpus_analyses["z2z3"])
    assert v.passed and set(v.sides.values()) == {True}
    v = REGISTRY["thm-3.7"](corpus_analyses["z2z2"])
    assert v.passed and set(v.sides.values()) == {False}


def test_thm_3_7_chain_branch():
    v = REGISTRY["thm-3.7"](_az(27))
    assert v.passed and set(v.sides.values()) == {True}


def test_npartite_partition_and_clique(corpus_analyses, z8z2, z4z9):
    v = REGISTRY["npartite"](corpus_analyses["z2z2z3"])
    assert v.passed and v.sides["witness_branch_matches_semisimplicity"]
    v = REGISTRY["npartite"](z8z2)
    assert v.passed  # refuting clique found, matching non-semisimplicity
    v = REGISTRY["npartite"](z4z9)
    assert v.passed  # essential radical branch
    v = REGISTRY["npartite"](_az(27))
    assert not v.applicable  # single maximal submodule


def test_finiteness_branches(z8z2, corpus_analyses):
    v = REGISTRY["finiteness"](z8z2)
    assert v.passed and v.sides["socle_essential"]
    v = REGISTRY["finiteness"](corpus_analyses["z2z2"])
    assert v.passed
    v = REGISTRY["finiteness"](corpus_analyses["m2f2"])
    assert v.passed


def test_gates(z8z2, z4z9, z8z3):
    v = REGISTRY["thm-1.5"](z8z2)
    assert v.passed and v.sides["s_diameter_le_3"]
    v = REGISTRY["thm-girth-N"](z4z9)
    assert v.passed  # girth 4 allowed for the proper graph
    v = REGISTRY["thm-girth-S"](z8z3)
    assert v.passed
    v = REGISTRY["thm-girth-N"](_az(27))
    assert not v.applicable


def test_cor_3_4_inapplicable_and_pass(corpus_analyses, z8z2):
    assert not REGISTRY["cor-3.4"](z8z2).applicable
    v = REGISTRY["cor-3.4"](corpus_analyses["z2z2"])
    assert v.passed and set(v.sides.values()) == {True}
    v = REGISTRY["cor-3.4"](corpus_analyses["z2z2z3"])
    assert v.passed and set(v.sides.values()) == {False}


def test_fine_grained_deg1_wrappers(z8z3):
    for tid in ("prop-2.17", "thm-2.18", "cor-2.11"):
        v = REGISTRY[tid](z8z3)
        assert v.applicable and v.passed, tid
    for tid in ("prop-2.17", "thm-2.18", "cor-2.11"):
        assert not REGISTRY[tid](_az(27)).applicable
