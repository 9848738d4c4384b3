import splitgraph as sg

GA_TEXT = """graph G_A
vertex w
vertex v
edge e w w
edge f w v
edge g v w
edge h v w
"""

A = [[1, 1], [2, 0]]
B = [[1, 0, 1], [1, 0, 1], [1, 1, 0]]


def ga():
    return sg.Graph.parse(GA_TEXT)


def test_graph_basics():
    g = ga()
    assert g.vertices == ["w", "v"]
    assert g.adjacency() == A
    assert sg.Graph.parse(g.to_text()) == g
    assert len(g.dual().edges) == 8
    assert g.power(3).adjacency() == [[5, 3], [6, 2]]
    assert "digraph" in g.to_dot()


def test_in_split_and_witness():
    g = ga()
    spec = "insplit\npartition w { e h } { g }\n"
    split = sg.split(g, spec)
    assert split.adjacency() == B
    assert split == sg.in_split_partition(g, "w", [["e", "h"], ["g"]])
    w = sg.witness(g, spec)
    assert w["roles"] == "B=RS,A=SR"
    assert sg.check_sse(A, B, w["R"], w["S"], w["roles"])["passed"]
    bad = sg.check_sse(A, B, [[1, 0], [1, 0], [1, 1]], [[1, 0, 1], [0, 1, 0]], "B=RS,A=SR")
    assert not bad["passed"] and "(3,3)" in bad["report"]


def test_out_split():
    g = ga()
    split = sg.out_split_partition(g, "w", [["e"], ["f"]])
    assert split.adjacency() == [[1, 1, 0], [0, 0, 1], [2, 2, 0]]
    assert sg.is_isomorphic(sg.split(g, "outsplit\npartition w { e } { f }\n"), split)


def test_invariants_and_search():
    assert sg.traces(A, 4) == sg.traces(B, 4)
    assert sg.char_poly(A) == [1, -1, -2]
    assert sg.bowen_franks(A)["torsion"] == [2]
    found = sg.search_sse(A, B, 2, 10.0)
    assert found["status"] == "found"
    assert sg.check_sse(A, B, found["witness"]["R"], found["witness"]["S"])["passed"]
    assert sg.search_sse([[2]], [[3]])["status"] == "rejected-by-invariant"


def test_certificates_and_correspondences():
    g = ga()
    spec = "insplit\npartition w { e h } { g }\n"
    cert = sg.conjugacy_certificate(g, spec, 4)
    assert cert["passed"] and cert["source_paths"] == 64 and cert["target_paths"] == 48
    corr = sg.correspondence_check(g, spec)
    assert corr["passed"] and corr["dimension"] == 6


def test_circle():
    assert sg.component_count(4, 6) == 2
    c = sg.circle_split(2, 2, 1, 2, grid=24)
    assert c["components"] == 2
    assert c["grid_passed"]
    assert [e for e, _ in c["r"]] == [1, 1]


def test_errors_and_cli():
    try:
        sg.Graph.parse("graph g\nvertex a\nedge e a b\n")
    except ValueError as exc:
        assert ":3:" in str(exc)
    else:
        raise AssertionError("expected a parse error")
    code, out, _ = sg.run_cli(["circle", "-m", "2", "-n", "2", "-a", "1", "-b", "2"])
    assert code == 0 and "NOTE" in out
    assert sg.run_cli(["nonsense"])[0] == 2
