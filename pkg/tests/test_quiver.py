"""Core quiver type: construction, classification, JSON and DOT."""

import json
import random

import pytest

from tauroot.errors import (
    DanglingArrow,
    DuplicateArrowRecord,
    DuplicateVertex,
    NonPositiveMult,
    NotABijection,
    ParseError,
    SchemaError,
)
from tauroot.quiver import (
    Arrow,
    ColoredQuiver,
    arrow_bundles,
    deserialize,
    dynkin_classify,
    dynkin_quiver,
    graph_automorphism_extends,
    parse_dot,
    quiver,
    quiver_from_obj,
    serialize,
    to_dot,
)


def random_quiver(rng, max_vertices=6, colored=True, acyclic=False):
    nv = rng.randint(0, max_vertices)
    vs = [f"v{i}" for i in range(nv)]
    arrows = []
    seen = set()
    for _ in range(rng.randint(0, 2 * nv)):
        if not vs:
            break
        i = rng.randrange(nv)
        j = rng.randrange(nv)
        if acyclic:
            if i == j:
                continue
            i, j = min(i, j), max(i, j)
        color = rng.choice([None, 0, 1, 2]) if colored else None
        key = (vs[i], vs[j], color)
        if key in seen:
            continue
        seen.add(key)
        arrows.append(Arrow(vs[i], vs[j], color, rng.randint(1, 3)))
    return ColoredQuiver(vs, arrows)


class TestConstruction:
    def test_tuple_coercion(self):
        q = quiver(["a", "b"], [("a", "b"), ("a", "b", 1), ("b", "a", None, 2)])
        assert q.vertices == ("a", "b")
        assert Arrow("a", "b", None, 1) in q.arrows
        assert Arrow("a", "b", 1, 1) in q.arrows
        assert Arrow("b", "a", None, 2) in q.arrows

    def test_duplicate_vertex(self):
        with pytest.raises(DuplicateVertex):
            quiver(["a", "a"], [])

    def test_dangling_arrow(self):
        with pytest.raises(DanglingArrow):
            quiver(["a"], [("a", "b")])

    def test_nonpositive_mult(self):
        with pytest.raises(NonPositiveMult):
            quiver(["a", "b"], [("a", "b", None, 0)])

    def test_duplicate_record(self):
        with pytest.raises(DuplicateArrowRecord):
            quiver(["a", "b"], [("a", "b", 0, 1), ("a", "b", 0, 2)])

    def test_parallel_records_with_distinct_colors_ok(self):
        q = quiver(["a", "b"], [("a", "b", 0), ("a", "b", 1), ("a", "b")])
        assert len(q.arrows) == 3

    def test_equality_ignores_order(self):
        q1 = quiver(["a", "b"], [("a", "b", 0), ("a", "b", 1)])
        q2 = ColoredQuiver(("a", "b"), (Arrow("a", "b", 1), Arrow("a", "b", 0)))
        assert q1 == q2
        assert hash(q1) == hash(q2)
        reordered = quiver(["b", "a"], [("a", "b", 0), ("a", "b", 1)])
        assert q1 == reordered  # same multisets
        assert serialize(q1) != serialize(reordered)  # but order is kept in output
        assert q1 != quiver(["a", "b"], [("a", "b", 0), ("a", "b", 2)])

    def test_arrow_bundles_merge_colors(self):
        q = quiver(["a", "b"], [("a", "b", 0, 2), ("a", "b", 1, 3)])
        assert arrow_bundles(q) == {("a", "b"): 5}


class TestGraphs:
    def test_acyclicity(self):
        assert quiver(["a", "b"], [("a", "b")]).is_acyclic()
        assert not quiver(["a"], [("a", "a")]).is_acyclic()
        assert not quiver(["a", "b"], [("a", "b"), ("b", "a")]).is_acyclic()

    def test_induced_and_uncolored(self):
        q = quiver(["a", "b", "c"], [("a", "b", 0), ("a", "b", 1), ("b", "c", 2)])
        sub = q.induced(["a", "b"])
        assert sub.vertices == ("a", "b") and len(sub.arrows) == 2
        flat = q.uncolored()
        assert arrow_bundles(flat) == {("a", "b"): 2, ("b", "c"): 1}
        assert all(a.color is None for a in flat.arrows)

    def test_degree_counts_loops_twice(self):
        g = quiver(["a"], [("a", "a")]).underlying_graph()
        assert g.degree("a") == 2

    def test_components_deterministic(self):
        q = quiver(["c", "a", "b"], [("a", "b")])
        comps = q.underlying_graph().components()
        assert comps == [("c",), ("a", "b")]


class TestDynkin:
    @pytest.mark.parametrize("name", ["A1", "A2", "A5", "D4", "D7", "E6", "E7", "E8"])
    def test_reference_orientations_classify(self, name):
        labels = dynkin_classify(dynkin_quiver(name))
        assert [l.name for l in labels] == [name]
        assert labels[0].is_finite_dynkin

    def test_bad_names(self):
        for bad in ("D3", "E5", "E9", "B2", "A0", "A", "x7"):
            with pytest.raises(SchemaError):
                dynkin_quiver(bad)

    def test_orientation_does_not_matter(self):
        zigzag = quiver(["1", "2", "3", "4"], [("1", "2"), ("3", "2"), ("3", "4")])
        assert dynkin_classify(zigzag)[0].name == "A4"

    def test_extended_a(self):
        hexagon = quiver(
            ["1", "2", "3", "4", "5", "6"],
            [("1", "2"), ("2", "3"), ("3", "4"), ("4", "5"), ("5", "6"), ("1", "6")],
        )
        label = dynkin_classify(hexagon)[0]
        assert label.name == "~A5" and not label.is_finite_dynkin
        double = quiver(["a", "b"], [("a", "b", None, 2)])
        assert dynkin_classify(double)[0].name == "~A1"

    def test_extended_d_and_e(self):
        star4 = quiver(["c", "1", "2", "3", "4"], [("c", str(i)) for i in range(1, 5)])
        assert dynkin_classify(star4)[0].name == "~D4"
        # two branch vertices with two leaves each
        d6 = quiver(
            ["l1", "l2", "c1", "m", "c2", "l3", "l4"],
            [("l1", "c1"), ("l2", "c1"), ("c1", "m"), ("m", "c2"), ("c2", "l3"), ("c2", "l4")],
        )
        assert dynkin_classify(d6)[0].name == "~D6"

        def branch(arms):
            vs, arrows = ["c"], []
            for i, length in enumerate(arms):
                prev = "c"
                for j in range(length):
                    v = f"a{i}_{j}"
                    vs.append(v)
                    arrows.append((prev, v))
                    prev = v
            return quiver(vs, arrows)

        assert dynkin_classify(branch([2, 2, 2]))[0].name == "~E6"
        assert dynkin_classify(branch([1, 3, 3]))[0].name == "~E7"
        assert dynkin_classify(branch([1, 2, 5]))[0].name == "~E8"
        assert dynkin_classify(branch([1, 2, 4]))[0].name == "E8"
        assert dynkin_classify(branch([1, 1, 4]))[0].name == "D7"

    def test_other(self):
        assert dynkin_classify(quiver(["a"], [("a", "a")]))[0].name == "other"
        triple = quiver(["a", "b"], [("a", "b", None, 3)])
        assert dynkin_classify(triple)[0].name == "other"
        star5 = quiver(["c"] + [str(i) for i in range(5)], [("c", str(i)) for i in range(5)])
        assert dynkin_classify(star5)[0].name == "other"

    def test_multiple_components(self):
        q = quiver(["1", "2", "x"], [("1", "2")])
        assert [l.name for l in dynkin_classify(q)] == ["A2", "A1"]


class TestAutomorphismCheck:
    def test_path_swap(self):
        path = dynkin_quiver("A3")
        assert graph_automorphism_extends(path, {"1": "3", "2": "2", "3": "1"})
        assert not graph_automorphism_extends(path, {"1": "2", "2": "1", "3": "3"})

    def test_rejects_non_bijection(self):
        path = dynkin_quiver("A2")
        with pytest.raises(NotABijection):
            graph_automorphism_extends(path, {"1": "1"})
        with pytest.raises(NotABijection):
            graph_automorphism_extends(path, {"1": "1", "2": "1"})

    def test_respects_multiplicity(self):
        q = quiver(["a", "b", "c"], [("a", "b", None, 2), ("b", "c", None, 1)])
        assert not graph_automorphism_extends(q, {"a": "c", "b": "b", "c": "a"})


class TestJson:
    def test_schema(self):
        q = quiver(["a", "b"], [("a", "b", 0, 2)])
        obj = json.loads(serialize(q))
        assert obj == {
            "vertices": [{"id": "a"}, {"id": "b"}],
            "arrows": [{"src": "a", "dst": "b", "color": 0, "mult": 2}],
        }

    def test_round_trip(self):
        rng = random.Random(2024)
        for _ in range(100):
            q = random_quiver(rng)
            assert deserialize(serialize(q)) == q

    def test_mult_defaults_to_one(self):
        q = quiver_from_obj(
            {"vertices": [{"id": "a"}, {"id": "b"}], "arrows": [{"src": "a", "dst": "b", "color": None}]}
        )
        assert q.arrows[0].mult == 1

    def test_schema_errors_carry_paths(self):
        with pytest.raises(SchemaError, match=r"missing field 'vertices'"):
            quiver_from_obj({"arrows": []})
        with pytest.raises(SchemaError, match=r"\$\.arrows\[0\]\.mult"):
            quiver_from_obj(
                {"vertices": [{"id": "a"}], "arrows": [{"src": "a", "dst": "a", "mult": True}]}
            )

    def test_parse_error_position(self):
        with pytest.raises(ParseError, match="line"):
            deserialize('{"vertices": [}')


class TestDot:
    def test_output_shape(self):
        q = quiver(["a b", "c"], [("a b", "c", 1, 2)])
        text = to_dot(q, name="demo")
        assert text.splitlines()[0] == 'digraph "demo" {'
        assert '"a b" -> "c" [label="×2", color="c1"];' in text

    def test_repeat_edges(self):
        q = quiver(["a", "b"], [("a", "b", None, 3)])
        text = to_dot(q, repeat_edges=True)
        assert text.count('"a" -> "b";') == 3
        assert parse_dot(text) == q

    def test_round_trip(self):
        rng = random.Random(7)
        for _ in range(100):
            q = random_quiver(rng)
            assert parse_dot(to_dot(q)) == q
            assert parse_dot(to_dot(q, repeat_edges=True)) == q

    def test_tolerates_noise(self):
        text = """
        // a comment
        # another
        digraph "Q" {
          graph [rankdir=LR]; node [shape=circle];
          subgraph cluster_0 { "a"; "b"; }
          "a" -> "b" [label="×2"]; /* inline */
          "long " + "name";
          "a":n -> "long name";
        }
        """
        q = parse_dot(text)
        assert set(q.vertices) == {"a", "b", "long name"}
        assert arrow_bundles(q) == {("a", "b"): 2, ("a", "long name"): 1}

    def test_parallel_edges_accumulate(self):
        q = parse_dot('digraph { a -> b; a -> b; }')
        assert arrow_bundles(q) == {("a", "b"): 2}

    def test_rejects_undirected_and_junk(self):
        with pytest.raises(ParseError):
            parse_dot("graph { a -- b; }")
        with pytest.raises(ParseError):
            parse_dot("digraph { a -> ; }")
        with pytest.raises(ParseError):
            parse_dot("digraph { a -- b; }")
        with pytest.raises(ParseError):
            parse_dot("digraph { a -> b ")
