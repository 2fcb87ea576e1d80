import itertools
import os
import subprocess

import pytest

import hypercol as hc


def test_base_case():
    g = hc.build_base(3)
    assert (g.n, g.num_edges, g.r) == (6, 4, 3)
    assert g.edges == [[0, 1, 2], [1, 2, 3], [2, 3, 4], [3, 4, 5]]
    assert hc.degeneracy(g)[0] == 1
    assert hc.find_triangle(g) is None
    assert hc.chromatic_number(g, 4) == 2
    assert hc.min_color_class_size(g, 2) == 2


def test_g2_r2_matches_brute_force():
    g = hc.build(2, 2)
    assert g.to_hgr().startswith("p hgr 8 10 2\n")
    assert hc.k_colorable(g, 2) is None
    colors = hc.k_colorable(g, 3)
    assert hc.is_proper(g, colors)
    brute = [c for c in itertools.product(range(3), repeat=8) if hc.is_proper(g, list(c))]
    assert brute and min(min(c.count(x) for x in range(3)) for c in brute) == hc.min_color_class_size(g, 3)


def test_sizes_are_exact_python_ints():
    assert hc.predict_sizes(3, 2) == {"V": 1368, "E": 2712, "numS": 675}
    assert hc.predict_sizes(3, 3)["numS"] == 4 * (1368 * 1367 // 2) ** 3
    with pytest.raises(hc.SizeRefused):
        hc.build(3, 3)


def test_provenance_and_new_vertex_degree():
    g, prov = hc.build_with_provenance(2, 3)
    assert (g.n, g.num_edges) == (536, 1566)
    new = [v for v, p in enumerate(prov) if p[0] == "NEW"]
    assert len(new) == 512
    assert all(g.degree(v) == 3 for v in new)
    colors = hc.greedy_color(g)
    assert hc.is_proper(g, colors) and max(colors) + 1 <= 4


def test_triangle_and_errors():
    (edges, verts) = hc.find_triangle(hc.complete_uniform(4, 3))
    assert edges == (0, 1, 2) and verts == [0, 1, 2, 3]
    with pytest.raises(ValueError):
        hc.Hypergraph(3, 2, [[0, 1, 2]])
    with pytest.raises(ValueError):
        hc.Hypergraph.from_hgr("p hgr 3 1 2\n1 7\n")
    with pytest.raises(hc.BudgetExceeded):
        hc.k_colorable(hc.complete_uniform(7, 2), 6, budget=5)


def test_cnf_round_trip():
    g = hc.Hypergraph(2, 2, [[0, 1]])
    assert hc.encode_k_coloring(g, 2) == "p cnf 4 4\n1 2 0\n3 4 0\n-1 -3 0\n-2 -4 0\n"
    status, model = hc.parse_solver_output("s SATISFIABLE\nv 1 -2 -3 4 0\n")
    assert status == "SAT"
    assert hc.decode(model, g, 2) == [0, 1]


@pytest.mark.skipif(not os.environ.get("HYPERCOL_CLI"), reason="CLI path not provided")
def test_cli_stats():
    out = subprocess.run([os.environ["HYPERCOL_CLI"], "stats", "--r", "2", "--d", "3"],
                         capture_output=True, text=True, check=True)
    assert out.stdout == "stats V=536 E=1566 numS=512\n"
