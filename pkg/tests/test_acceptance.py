"""Acceptance criteria: one test per criterion, one recorded line each.

Criterion 1 pins two reference degree values for the order-16 module Z8+Z2.
The computed graph has degree 4 at the Z8 factor (its sum with each of
<(0,1)>, <(4,1)>, <(2,1)>, and the socle is essential), so the pinned value 3
is unattainable and that test fails by design; the discrepancy is documented
in the project notes. The other nine criteria pass.
"""
import math
import time

import pytest

from sumess import (
    CATALOG_ALL,
    CorpusSpec,
    ModuleAnalysis,
    count_homs,
    integer_module,
    run_corpus,
)
from sumess.cli import main

from conftest import ACCEPTANCE_LINES

INF = float("inf")


def _record(num: int, ok: bool, detail: str) -> bool:
    status = "PASS" if ok else "FAIL"
    line = f"criterion {num:02d}: {status} - {detail}"
    ACCEPTANCE_LINES.append(line)
    print(line)
    return ok


@pytest.fixture(scope="module")
def default_corpus_run():
    """One fresh single-threaded default corpus run, with wall time."""
    t0 = time.monotonic()
    result = run_corpus(CorpusSpec(), jobs=1)
    elapsed = time.monotonic() - t0
    return result, elapsed


def _deg(az, g, coords) -> int:
    lid = az.lattice.id_of_mask[az.module.cyclic_mask(az.module.encode(coords))]
    return g.degree(lid)


def test_criterion_01_reference_degrees(z8z2):
    n = z8z2.n_graph
    d_socle_half = _deg(z8z2, n, (4, 0))
    d_factor = _deg(z8z2, n, (1, 0))
    ok = d_socle_half == 2 and d_factor == 3
    _record(
        1,
        ok,
        f"deg(<(4,0)>)={d_socle_half} (want 2), deg(<(1,0)>)={d_factor} "
        "(pinned reference says 3; the graph genuinely has 4, see notes)",
    )
    assert ok, "pinned reference degree 3 is not attainable; computed degree is 4"


def test_criterion_02_degree_one_vertices(z4z3):
    n = z4z3.n_graph
    lat = z4z3.lattice
    deg1 = sorted(lat.subs[v].label for v in n.vertex_ids if n.degree(v) == 1)
    want = sorted(["<(1,0)>", "<(2,0)>"])
    d3 = _deg(z4z3, n, (0, 1))
    ok = deg1 == want and d3 == 2
    _record(2, ok, f"degree-1 vertices {deg1}, deg(<(0,1)>)={d3}")
    assert ok


def test_criterion_03_powerset_degrees(z2z3z5):
    s = z2z3z5.s_graph
    lat = z2z3z5.lattice
    ok = True
    for v in s.vertex_ids:
        k = len(lat.atoms_below(v))
        if s.degree(v) != 2**k - 1:
            ok = False
    rep = s.report()
    ok = ok and rep.max_degree == 3 and rep.min_degree == 1
    _record(3, ok, f"degrees follow 2^k-1; max={rep.max_degree}, min={rep.min_degree}")
    assert ok


def test_criterion_04_complete_on_square_of_simple():
    details = []
    ok = True
    for p in (2, 3, 5):
        az = ModuleAnalysis(integer_module(f"z{p}z{p}", p, p))
        s = az.s_graph
        lat = az.lattice
        homs = count_homs(lat.sub(lat.atoms[0]), lat.sub(lat.atoms[1]))
        good = s.is_complete() and s.n_vertices == p + 1 == homs + 1
        ok = ok and good
        details.append(f"p={p}: {s.n_vertices} vertices, {homs} maps")
    _record(4, ok, "; ".join(details))
    assert ok


def test_criterion_05_girth_instances(z4z9, z8z3):
    g49 = z4z9.n_graph.girth()
    g83 = z8z3.n_graph.girth()
    star = z8z3.n_graph.is_star()
    ok = g49 == 4 and g83 == INF and star
    _record(5, ok, f"girth(N)={g49} for z4z9; girth(N)={g83}, star={star} for z8z3")
    assert ok


def test_criterion_06_connectivity_and_time(default_corpus_run):
    result, elapsed = default_corpus_run
    rows = [r for r in result.rows if r.theorem_id == "thm-1.5"]
    violations = [r for r in rows if r.applicable and not r.passed]
    mods = {r.module for r in result.rows}
    ok = not violations and elapsed < 300 and not result.skipped and len(mods) == 51
    _record(
        6,
        ok,
        f"{len(mods)} modules, {len(rows)} connectivity verdicts, "
        f"0 violations, {elapsed:.1f}s",
    )
    assert ok


def test_criterion_07_girth_membership(default_corpus_run):
    result, _ = default_corpus_run
    rows = [r for r in result.rows if r.theorem_id in ("thm-girth-S", "thm-girth-N")]
    violations = [r for r in rows if r.applicable and not r.passed]
    ok = not violations and len(rows) > 0
    _record(7, ok, f"{len(rows)} girth verdicts, {len(violations)} violations")
    assert ok


def test_criterion_08_equivalence_suites(default_corpus_run):
    result, _ = default_corpus_run
    suites = (
        "deg1-S",
        "thm-2.13",
        "deg1-interactions",
        "complete",
        "trianglefree",
        "npartite",
        "prop-semisimple",
    )
    rows = [r for r in result.rows if r.theorem_id in suites]
    failures = [r for r in rows if r.applicable and not r.passed]
    ok = not failures and len(rows) == 51 * len(suites)
    _record(8, ok, f"{len(rows)} suite verdicts, {len(failures)} failures")
    assert ok


def test_criterion_09_oracle_equivalences(corpus_analyses):
    essential_checked = 0
    disjoint_checked = 0
    disagreements = 0
    for name, az in corpus_analyses.items():
        lat = az.lattice
        for i in range(lat.count):
            essential_checked += 1
            if lat.is_essential(i) != lat.is_essential_definitional(i):
                disagreements += 1
        if az.module.n <= 24:
            for i in range(lat.count):
                for j in range(i, lat.count):
                    disjoint_checked += 1
                    if not lat.strongly_disjoint(i, j).agree:
                        disagreements += 1
    ok = disagreements == 0 and essential_checked > 0 and disjoint_checked > 0
    _record(
        9,
        ok,
        f"{essential_checked} essentiality checks, {disjoint_checked} "
        f"disjointness pairs, {disagreements} disagreements",
    )
    assert ok


def test_criterion_10_byte_identical_outputs(tmp_path, capsys):
    outs = []
    for tag in ("a", "b"):
        csv_path = tmp_path / f"{tag}.csv"
        dot_dir = tmp_path / f"dots_{tag}"
        code = main(
            ["corpus", "--out", str(csv_path), "--dot-dir", str(dot_dir), "--jobs", "2"]
        )
        assert code == 0
        dots = {
            f.name: f.read_bytes() for f in sorted(dot_dir.iterdir())
        }
        outs.append((csv_path.read_bytes(), dots))
    capsys.readouterr()
    same_csv = outs[0][0] == outs[1][0]
    same_dots = outs[0][1] == outs[1][1]
    ok = same_csv and same_dots and len(outs[0][1]) == 102
    _record(
        10,
        ok,
        f"csv identical={same_csv}, {len(outs[0][1])} dot files identical={same_dots}",
    )
    assert ok
