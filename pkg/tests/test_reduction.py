import itertools
from collections import Counter

import networkx as nx
import pytest

from conftest import cycle, from_nx, load_fixture
from pcfcolor.errors import ExtensionUnsound, NoConfigurationFound, NotOnBoundary, SReductionPrecondition
from pcfcolor.generator import GenSpec, corpus, generate, planar_corpus, seeded_instance
from pcfcolor.graph import Graph
from pcfcolor.oracle import exists_h_pcf_k
from pcfcolor.pcf import is_h_pcf
from pcfcolor.reduction import (
    KINDS,
    ROLE_ORDER,
    ConfigKind,
    ConfigMatch,
    boundary_palette,
    extend,
    find_configuration,
    find_kind,
    forbidden_base,
    lift,
    kinds_present,
    matches,
    reduce,
    removed_roles,
    s_reduced,
    solve,
)
from pcfcolor.reduction.scripts import touched


def reference_s_reduced(g: Graph, S) -> nx.Graph:
    """The S-reduced graph built straight from its definition with networkx."""
    S = set(S)
    h = nx.Graph()
    h.add_nodes_from(v for v in range(g.n) if v not in S)
    h.add_edges_from((u, v) for u, v in g.edges() if u not in S and v not in S)
    for u, v in itertools.combinations(sorted(h.nodes), 2):
        if any(s in S for s in g.nbrs(u) & g.nbrs(v)):
            h.add_edge(u, v)
    return h


def as_nx(plan) -> nx.Graph:
    h = nx.Graph()
    h.add_nodes_from(plan.kept)
    h.add_edges_from((plan.kept[a], plan.kept[b]) for a, b in plan.reduced.edges())
    return h


def same_graph(a: nx.Graph, b: nx.Graph) -> bool:
    return set(a.nodes) == set(b.nodes) and {frozenset(e) for e in a.edges} == {frozenset(e) for e in b.edges}


# detection


def test_find_configuration_examples():
    m = find_configuration(cycle(5))
    assert m.kind is ConfigKind.K1 and m["v"] == 0
    assert find_configuration(corpus("k4")[0]).kind is ConfigKind.K2
    assert find_configuration(corpus("cube")[0]).kind is ConfigKind.K5


def test_priority_and_lexicographic_order():
    for name in ("grid(4,4)", "prism(6)", "rhombic-dodecahedron", "octahedron"):
        g, _ = corpus(name)
        m = find_configuration(g)
        earlier = KINDS[: KINDS.index(m.kind)]
        assert all(find_kind(g, k) is None for k in earlier), name
        assert m.key == min(x.key for x in matches(g, m.kind))


def test_no_configuration_on_4_regular_triangle_free():
    torus = from_nx(nx.grid_2d_graph(5, 5, periodic=True))
    assert find_configuration(torus) is None


def _check_match_shape(g: Graph, m: ConfigMatch) -> None:
    r = m.role_map
    d = g.degree
    k = m.kind
    assert tuple(r) == ROLE_ORDER[k]
    if k is ConfigKind.K1:
        assert d(r["v"]) <= 2
    elif k is ConfigKind.K2:
        x, y, z = r["x"], r["y"], r["z"]
        assert g.has_edge(x, y) and g.has_edge(y, z) and g.has_edge(x, z) and d(x) == 3
    elif k is ConfigKind.K3:
        x, y, z = r["x"], r["y"], r["z"]
        assert g.has_edge(x, y) and g.has_edge(y, z) and g.has_edge(x, z)
        assert d(x) == d(y) == d(z) == 4
    elif k is ConfigKind.K4:
        assert g.has_edge(r["x"], r["y"]) and g.has_edge(r["y"], r["z"])
        assert d(r["x"]) == d(r["y"]) == d(r["z"]) == 3 and d(r["y1"]) == 4
        assert g.has_edge(r["y"], r["y1"])
    elif k is ConfigKind.K5:
        p = [r["x"], r["y"], r["z"], r["w"]]
        assert len(set(p)) == 4 and all(d(v) == 3 for v in p)
        assert all(g.has_edge(a, b) for a, b in zip(p, p[1:]))
    elif k is ConfigKind.K6:
        c = [r["x"], r["y"], r["z"], r["w"]]
        assert len(set(c)) == 4 and all(g.has_edge(a, b) for a, b in zip(c, c[1:] + c[:1]))
        assert d(r["x"]) == d(r["y"]) == 3
    elif k is ConfigKind.K7:
        assert d(r["v"]) == 3
        for cyc in ((r["x"], r["y"], r["z"], r["v"]), (r["u"], r["w"], r["z"], r["v"])):
            assert all(g.has_edge(a, b) for a, b in zip(cyc, cyc[1:] + cyc[:1]))
    else:
        c = [r[x] for x in ("x", "y", "z", "u", "v")]
        assert len(set(c)) == 5 and all(g.has_edge(a, b) for a, b in zip(c, c[1:] + c[:1]))
        if k is ConfigKind.K8:
            assert [d(v) for v in c] == [4, 3, 3, 3, 4]
        else:
            assert [d(v) for v in c] == [3, 4, 3, 4, 3]
        if k is ConfigKind.K9:
            assert d(r["z1"]) == 3 and g.has_edge(r["z"], r["z1"]) and r["z1"] not in c


# kinds whose auxiliary roles may name the same vertex (outer neighbors of a triangle, z1 in K10)
SHARED_ROLES_OK = {ConfigKind.K2, ConfigKind.K3, ConfigKind.K10}


def test_match_shapes_on_generated_graphs():
    seen = Counter()
    for seed in range(1, 120):
        g, _ = generate(GenSpec(seed, 40, ("tree-plus-edges", "grid-perturb")[seed % 2]))
        for kind in KINDS:
            for m in itertools.islice(matches(g, kind), 3):
                _check_match_shape(g, m)
                if kind not in SHARED_ROLES_OK:
                    assert len(m.vertices()) == sum(1 for _, v in m.roles if v is not None)
                seen[kind] += 1
    assert len(seen) >= 5


def test_distribution_sanity():
    present = set()
    for seed in range(200):
        g, _ = generate(GenSpec(seed, 40, ("tree-plus-edges", "grid-perturb")[seed % 2]))
        present |= kinds_present(g)
    assert len(present) >= 5


def test_k9_keys_on_z1():
    g, _, meta = load_fixture("k9.json")
    for m in matches(g, ConfigKind.K9):
        assert g.degree(m["z1"]) == 3


# S-reduced graphs


def test_c5_k1_reduces_to_c4():
    plan = reduce(cycle(5), find_configuration(cycle(5)))
    assert plan.S == (0,)
    assert same_graph(as_nx(plan), nx.relabel_nodes(nx.cycle_graph(4), {0: 1, 1: 2, 2: 3, 3: 4}))
    assert plan.added_edges == ((1, 4),)


def test_cube_k5_reduction_matches_definition():
    g, _ = corpus("cube")
    plan = reduce(g, find_configuration(g))
    assert plan.reduced.n == 4
    assert same_graph(as_nx(plan), reference_s_reduced(g, plan.S))


def test_grid_k6_reduction_matches_definition():
    g, _ = corpus("grid(4,4)")
    m = find_kind(g, ConfigKind.K6)
    assert m is not None
    plan = reduce(g, m)
    assert set(plan.S) == {m["x"], m["y"], m["z"], m["w"]}
    assert same_graph(as_nx(plan), reference_s_reduced(g, plan.S))


def test_reductions_match_definition_along_solver_runs():
    for seed in range(1, 60):
        g, _ = generate(seeded_instance(seed))
        cur = g
        while cur.n > 9:
            m = find_configuration(cur)
            plan = reduce(cur, m)
            assert plan.reduced.n < cur.n
            assert plan.reduced.max_degree <= cur.max_degree
            if m.kind is not ConfigKind.K7:
                assert set(plan.S) == {m[r] for r in removed_roles(m)}
                assert all(sum(1 for w in cur.adj[s] if w not in plan.S) <= 2 for s in plan.S)
                assert same_graph(as_nx(plan), reference_s_reduced(cur, plan.S))
            else:
                assert plan.S == (m["v"],)
                assert plan.reduced.has_edge(plan.kept.index(m["x"]), plan.kept.index(m["u"]))
            cur = plan.reduced


def test_s_reduced_precondition():
    g, _ = corpus("octahedron")
    with pytest.raises(SReductionPrecondition):
        s_reduced(g, [0])


# boundary palette and forbidden sets


def _palette_instance():
    # s=3 is removed; u=0 has neighbors s, a=1, b=2; s's other neighbor is t=4; 5 hangs off a
    g = Graph.from_edges(6, [(0, 3), (0, 1), (0, 2), (3, 4), (1, 5)])
    return g, {3}


def test_boundary_palette_distinct_branch():
    g, S = _palette_instance()
    phi = [1, 4, 5, None, 6, 2]
    # in the reduced graph u sees 4, 5 and 6; the colors on u's own outside neighbors come first
    assert boundary_palette(g, S, phi, 0) == {1, 4, 5}


def test_boundary_palette_repeated_branch():
    g, S = _palette_instance()
    phi = [2, 4, 4, None, 6, 1]
    assert boundary_palette(g, S, phi, 0) == {2, 4}


def test_forbidden_base_examples():
    g, S = _palette_instance()
    phi = [1, 4, 5, None, 6, 2]
    c = forbidden_base(g, S, phi, 3)
    assert c == boundary_palette(g, S, phi, 0) | boundary_palette(g, S, phi, 4)
    assert len(c) <= 6
    lone = Graph.from_edges(2, [(0, 1)])
    assert forbidden_base(lone, {0, 1}, [None, None], 0) == frozenset()
    with pytest.raises(NotOnBoundary):
        boundary_palette(g, S, phi, 5)


def test_palette_bounds_during_solves():
    for seed in range(1, 80):
        # the first few reductions of each graph, checked against a real coloring of the reduced graph
        cur = generate(seeded_instance(seed))[0]
        for _ in range(3):
            plan = reduce(cur, find_configuration(cur))
            if plan.kind is not ConfigKind.K7:
                phi_h = solve(plan.reduced).coloring
                lifted = lift(plan, cur.n, phi_h)
                S = set(plan.S)
                for v in S:
                    outside = [u for u in cur.adj[v] if u not in S]
                    assert len(forbidden_base(cur, S, lifted, v)) <= 3 * len(outside)
                    for u in outside:
                        assert len(boundary_palette(cur, S, lifted, u)) <= 3
            cur = plan.reduced
            if cur.n <= 9:
                break


# extension


def test_c5_k1_extension():
    g = cycle(5)
    plan = reduce(g, find_configuration(g))
    phi_h = exists_h_pcf_k(plan.reduced, 2, 9).coloring
    steps = []
    phi = extend(g, plan, phi_h, log=steps)
    assert is_h_pcf(g, phi, 2).valid
    assert len(steps) == 1 and steps[0].forbidden <= 6 and steps[0].bound == 6


def test_cube_k5_extension():
    g, _ = corpus("cube")
    plan = reduce(g, find_configuration(g))
    phi = extend(g, plan, exists_h_pcf_k(plan.reduced, 2, 9).coloring)
    assert is_h_pcf(g, phi, 2).valid and max(phi) <= 9


def test_extension_only_touches_script_vertices():
    for seed in range(1, 80):
        g, _ = generate(seeded_instance(seed))
        plan = reduce(g, find_configuration(g))
        phi_h = solve(plan.reduced).coloring
        phi = extend(g, plan, phi_h)
        allowed = touched(plan)
        for i, v in enumerate(plan.kept):
            if v not in allowed:
                assert phi[v] == phi_h[i]


@pytest.mark.parametrize("name", ["k1", "k2", "k3", "k4", "k5", "k6", "k7", "k8", "k9", "k10z", "k10v"])
def test_fixture_is_a_match(name):
    g, emb, meta = load_fixture(f"{name}.json")
    m = ConfigMatch.make(ConfigKind(meta["kind"]), meta["roles"], meta.get("subcase"))
    assert m in set(matches(g, m.kind))
    _check_match_shape(g, m)
    if meta["first_in_priority"]:
        assert find_configuration(g) == m


# solver


def test_small_graphs_get_distinct_colors():
    for n in range(1, 10):
        g = cycle(n) if n >= 3 else Graph.from_edges(n, [(0, 1)] if n == 2 else [])
        res = solve(g)
        assert list(res.coloring) == list(range(1, n + 1))
        assert res.trace == []


def test_cube_is_base_case():
    g, _ = corpus("cube")
    res = solve(g)
    assert is_h_pcf(g, res.coloring, 2).valid and res.trace == []


def test_grid_10x10():
    g, _ = corpus("grid(10,10)")
    res = solve(g)
    assert is_h_pcf(g, res.coloring, 2).valid
    assert res.coloring.num_colors <= 9
    assert 10 <= len(res.trace) <= 100


def test_disconnected_input():
    a, _ = corpus("grid(4,4)")
    b = cycle(5)
    g = Graph(a.n + b.n, list(a.adj) + [[w + a.n for w in row] for row in b.adj])
    res = solve(g)
    assert is_h_pcf(g, res.coloring, 2).valid


def test_oracle_agreement_small_corpus():
    for name, g, _ in planar_corpus():
        if g.n > 12:
            continue
        assert exists_h_pcf_k(g, 2, 9).feasible, name
        assert is_h_pcf(g, solve(g).coloring, 2).valid, name


def test_determinism():
    for seed in (3, 17, 400):
        g, _ = generate(seeded_instance(seed))
        a, b = solve(g), solve(g)
        assert a.coloring == b.coloring
        assert a.trace_json() == b.trace_json()


def test_dodecahedron_k5_step_needs_search():
    # x and w of the matched path share an outside neighbor; the script leaves it one unique color
    g, _ = corpus("dodecahedron")
    res = solve(g)
    assert is_h_pcf(g, res.coloring, 2).valid
    assert [s.extension for s in res.trace].count("search") == 1
    assert res.trace[0].plan.kind is ConfigKind.K5 and res.trace[0].extension == "search"
    with pytest.raises(ExtensionUnsound):
        solve(g, fallback=False)


def test_oracle_fallback_and_failure():
    torus4 = from_nx(nx.grid_2d_graph(4, 4, periodic=True))
    res = solve(torus4)
    assert res.oracle_components == [list(range(16))]
    assert is_h_pcf(torus4, res.coloring, 2).valid
    with pytest.raises(NoConfigurationFound):
        solve(torus4, oracle_bound=15)
    with pytest.raises(NoConfigurationFound):
        solve(from_nx(nx.grid_2d_graph(5, 5, periodic=True)))


def test_trace_json_shape():
    g, _ = generate(GenSpec(11, 40))
    res = solve(g)
    doc = res.trace_json()
    assert doc and all({"kind", "S", "added_edges", "roles", "extension"} <= set(s) for s in doc)
    coloring, trace = res
    assert coloring == res.coloring and trace is res.trace
