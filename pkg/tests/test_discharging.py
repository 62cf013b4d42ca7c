from fractions import Fraction

import pytest

from conftest import cycle, cycle_embedding
from pcfcolor import discharging
from pcfcolor.discharging import HALF, THIRD, apply_rules, audit, classify_3vertex, initial_charges
from pcfcolor.errors import Disconnected, NonPlanarEmbedding, NotA3Vertex
from pcfcolor.generator import corpus, generate, GenSpec, planar_corpus
from pcfcolor.graph import Embedding, Graph


def test_classify_examples():
    cube, _ = corpus("cube")
    assert all(classify_3vertex(cube, v) == "bad" for v in range(8))
    dodec, _ = corpus("dodecahedron")
    assert all(classify_3vertex(dodec, v) == "good" for v in range(20))
    grid, _ = corpus("grid(3,3)")
    with pytest.raises(NotA3Vertex):
        classify_3vertex(grid, 4)


def test_prism_vertices_are_bad():
    # every prism vertex sits on a rung 4-cycle
    g, _ = corpus("prism(5)")
    assert all(classify_3vertex(g, v) == "bad" for v in range(g.n))


def test_initial_charges_examples():
    cube, emb = corpus("cube")
    led = initial_charges(cube, emb)
    assert led.vertices == (Fraction(-1),) * 8 and led.faces == (Fraction(0),) * 6
    assert led.total == -8
    dodec, emb = corpus("dodecahedron")
    led = initial_charges(dodec, emb)
    assert set(led.vertices) == {-1} and set(led.faces) == {1} and len(led.faces) == 12
    c5 = initial_charges(cycle(5), cycle_embedding(5))
    assert c5.vertices == (Fraction(-2),) * 5 and c5.faces == (Fraction(1),) * 2 and c5.total == -8


def test_rules_examples():
    cube, emb = corpus("cube")
    init = initial_charges(cube, emb)
    final, flows = apply_rules(cube, emb, init)
    assert final.vertices == init.vertices and final.faces == init.faces and flows == []
    dodec, emb = corpus("dodecahedron")
    final, flows = apply_rules(dodec, emb, initial_charges(dodec, emb))
    assert set(final.vertices) == {0}
    assert set(final.faces) == {Fraction(-2, 3)}
    assert all(f.rule == "R1" and f.amount == THIRD for f in flows) and len(flows) == 60
    c5, e5 = cycle(5), cycle_embedding(5)
    final, flows = apply_rules(c5, e5, initial_charges(c5, e5))
    assert flows == [] and final.total == -8


def test_rules_r2_r3():
    # prism(5): two 5-faces, each with five bad 3-vertices
    g, emb = corpus("prism(5)")
    _, flows = apply_rules(g, emb, initial_charges(g, emb))
    assert {f.rule for f in flows} == {"R2"} and all(f.amount == HALF for f in flows) and len(flows) == 10
    g, emb = corpus("prism(6)")
    _, flows = apply_rules(g, emb, initial_charges(g, emb))
    assert {f.rule for f in flows} == {"R3"} and len(flows) == 12


def test_rules_need_initial_ledger():
    g, emb = corpus("cube")
    final, _ = apply_rules(g, emb, initial_charges(g, emb))
    with pytest.raises(ValueError):
        apply_rules(g, emb, final)


def test_audit_cube():
    g, emb = corpus("cube")
    rep = audit(g, emb)
    item3 = {w for i, w in rep.lemma_violations if i == 3}
    assert item3 == set(range(8))
    assert rep.negative_elements and all(e[0] == "vertex" for e, _ in rep.negative_elements)


def test_audit_dodecahedron():
    g, emb = corpus("dodecahedron")
    rep = audit(g, emb)
    assert {w for i, w in rep.lemma_violations if i == 5} == set(range(12))
    assert all(e[0] == "face" and c == Fraction(-2, 3) for e, c in rep.negative_elements)
    assert rep.total == -8 and not rep.bound_violations
    doc = rep.to_json()
    assert doc["total"] == {"num": -8, "den": 1}
    assert set(doc["bound_checks"]) == set("abcdef")


def test_every_plane_graph_violates_some_item():
    graphs = [(n, g, e) for n, g, e in planar_corpus()]
    graphs += [(s, *generate(GenSpec(s, 30 + s % 20, ("tree-plus-edges", "grid-perturb")[s % 2]))) for s in range(100)]
    for name, g, emb in graphs:
        rep = audit(g, emb)
        assert rep.lemma_violations, name
        assert rep.initial.total == rep.final.total == -8
        assert not rep.bound_violations, name


def test_repeated_incidence_paid_per_occurrence():
    # the claw has a single 6-face whose walk meets the center three times
    star = Graph.from_edges(4, [(0, 1), (0, 2), (0, 3)])
    emb = Embedding.from_lists([[1, 2, 3], [0], [0], [0]])
    rep = audit(star, emb)
    assert rep.repeated_incidences == [(0, 0)]
    assert [f.amount for f in rep.rule_flows] == [HALF] * 3
    assert rep.final.vertices[0] == Fraction(-1) + 3 * HALF
    assert rep.total == -8


def test_table_output():
    g, emb = corpus("cube")
    text = audit(g, emb).table()
    assert "total" in text and "lemma items violated: 1" not in text
    assert text.strip().splitlines()[-1] == "conditional bound violations: 0"


def test_errors():
    g = Graph.from_edges(4, [(0, 1), (2, 3)])
    emb = Embedding.from_lists([[1], [0], [3], [2]])
    with pytest.raises(Disconnected):
        initial_charges(g, emb)
    with pytest.raises(Disconnected):
        audit(g, emb)
    k4, e = corpus("k4")
    rots = [list(r) for r in e.rotations]
    rots[0].reverse()
    with pytest.raises(NonPlanarEmbedding):
        audit(k4, Embedding.from_lists(rots))


def test_bounds_constant():
    assert discharging.BOUNDS == ("a", "b", "c", "d", "e", "f")
