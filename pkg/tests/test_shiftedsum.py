"""Builders for quivers of shifted sums from middle-term multiplicities."""

import random

import pytest

from tauroot.errors import (
    BadRange,
    CyclicGenerator,
    MissingB,
    SchemaError,
    SymmetryViolated,
)
from tauroot.quiver import arrow_bundles, dynkin_classify, quiver
from tauroot.shiftedsum import (
    ARSummandData,
    build_even_quiver,
    build_odd_quiver,
    star_quiver,
    validate_ar_symmetry,
)

BASE = quiver(["1", "2", "3"], [("1", "2")])  # an arrow plus an isolated vertex
POINT = quiver(["x"], [])


def two_a3_data():
    return ARSummandData(BASE, {"2": {"3": 1}, "3": {"2": 1}})


class TestData:
    def test_validation(self):
        two_a3_data().validate()
        with pytest.raises(SchemaError):
            ARSummandData(BASE, {"9": {"1": 1}}).validate()
        with pytest.raises(SchemaError):
            ARSummandData(BASE, {"1": {"9": 1}}).validate()
        with pytest.raises(SchemaError):
            ARSummandData(BASE, {"1": {"2": -1}}).validate()
        with pytest.raises(SchemaError):
            ARSummandData(quiver(["a", "b"], [("a", "b", 0)]), {}).validate()
        with pytest.raises(CyclicGenerator):
            ARSummandData(quiver(["a"], [("a", "a")]), {}).validate()

    def test_json_round_trip(self):
        data = two_a3_data()
        obj = data.to_obj()
        assert obj["B"] is None
        back = ARSummandData.from_obj(obj)
        assert back.base_quiver == data.base_quiver and back.to_obj() == obj
        with pytest.raises(SchemaError):
            ARSummandData.from_obj({"A": {}})


class TestSymmetry:
    def test_odd(self):
        validate_ar_symmetry(two_a3_data(), "odd")
        validate_ar_symmetry(ARSummandData(BASE, {}), "odd")
        with pytest.raises(SymmetryViolated, match=r"A\[1\]\[2\]"):
            validate_ar_symmetry(ARSummandData(BASE, {"1": {"2": 1}}), "odd")

    def test_even(self):
        validate_ar_symmetry(ARSummandData(BASE, {"1": {"2": 1}}, {"2": {"1": 1}}), "even")
        with pytest.raises(MissingB):
            validate_ar_symmetry(ARSummandData(BASE, {"1": {"2": 1}}), "even")
        with pytest.raises(SymmetryViolated, match="B"):
            validate_ar_symmetry(
                ARSummandData(BASE, {"1": {"2": 1}}, {"1": {"2": 1}}), "even"
            )

    def test_bad_mode(self):
        with pytest.raises(SchemaError):
            validate_ar_symmetry(two_a3_data(), "sideways")


class TestOddBuilder:
    def test_two_a3_components(self):
        q = build_odd_quiver(two_a3_data())
        assert q.vertices == ("(1,0)", "(2,0)", "(3,0)", "(1,-1)", "(2,-1)", "(3,-1)")
        got = sorted((a.src, a.dst, a.mult) for a in q.arrows)
        assert got == sorted(
            [
                ("(1,0)", "(2,0)", 1),
                ("(1,-1)", "(2,-1)", 1),
                ("(2,0)", "(3,-1)", 1),
                ("(3,0)", "(2,-1)", 1),
            ]
        )
        assert sorted(lbl.name for lbl in dynkin_classify(q)) == ["A3", "A3"]

    def test_kronecker(self):
        q = build_odd_quiver(ARSummandData(POINT, {"x": {"x": 3}}))
        assert [(a.src, a.dst, a.mult) for a in q.arrows] == [("(x,0)", "(x,-1)", 3)]

    def test_zero_data_doubles(self):
        q = build_odd_quiver(ARSummandData(BASE, {}), copies=2)
        assert len(q.vertices) == 12 and sum(a.mult for a in q.arrows) == 4

    def test_copies_are_disjoint_blocks(self):
        q = build_odd_quiver(two_a3_data(), copies=2)
        assert sorted(lbl.name for lbl in dynkin_classify(q)) == ["A3"] * 4
        # block 0 pairs level 0 with level -2
        assert q.vertices[:6] == (
            "(1,0)", "(2,0)", "(3,0)", "(1,-2)", "(2,-2)", "(3,-2)"
        )

    def test_symmetry_enforced(self):
        with pytest.raises(SymmetryViolated):
            build_odd_quiver(ARSummandData(BASE, {"1": {"2": 1}}))
        with pytest.raises(BadRange):
            build_odd_quiver(two_a3_data(), copies=0)


class TestEvenBuilder:
    def test_level_pattern(self):
        data = ARSummandData(POINT, {"x": {"x": 2}}, {"x": {"x": 2}})
        q = build_even_quiver(data, 2)
        assert len(q.vertices) == 5
        diffs = sorted(
            (-int(a.dst.rsplit(",", 1)[1][:-1])) - (-int(a.src.rsplit(",", 1)[1][:-1]))
            for a in q.arrows
        )
        assert diffs == [2, 2, 2, 3, 3]

    def test_nine_vertex_non_example(self):
        data = ARSummandData(BASE, {"3": {"2": 1}, "1": {"3": 1}}, {})
        with pytest.raises(SymmetryViolated):
            build_even_quiver(data, 1)
        q = build_even_quiver(data, 1, validate=False)
        assert len(q.vertices) == 9
        got = sorted((a.src, a.dst) for a in q.arrows)
        assert got == sorted(
            [
                ("(1,0)", "(2,0)"),
                ("(1,-1)", "(2,-1)"),
                ("(1,-2)", "(2,-2)"),
                ("(2,0)", "(3,-1)"),
                ("(2,-1)", "(3,-2)"),
                ("(3,0)", "(1,-1)"),
                ("(3,-1)", "(1,-2)"),
            ]
        )

    def test_b_is_required_even_without_validation(self):
        data = ARSummandData(BASE, {"3": {"2": 1}}, None)
        with pytest.raises(MissingB):
            build_even_quiver(data, 1, validate=False)

    def test_bad_range(self):
        data = ARSummandData(POINT, {"x": {"x": 1}}, {"x": {"x": 1}})
        with pytest.raises(BadRange):
            build_even_quiver(data, 0)

    def test_level_differences_bounded(self):
        rng = random.Random(5)
        for _ in range(40):
            nv = rng.randint(1, 4)
            vs = [chr(97 + i) for i in range(nv)]
            arrows = [
                (vs[i], vs[j])
                for i in range(nv)
                for j in range(i + 1, nv)
                if rng.random() < 0.4
            ]
            a_table = {a: {b: rng.randint(0, 2) for b in vs} for a in vs}
            b_table = {a: {b: a_table[b][a] for b in vs} for a in vs}
            data = ARSummandData(quiver(vs, arrows), a_table, b_table)
            n = rng.randint(1, 3)
            q = build_even_quiver(data, n)
            assert len(q.vertices) == (2 * n + 1) * nv

            def level(name):
                return -int(name.rsplit(",", 1)[1][:-1])

            assert {level(x.dst) - level(x.src) for x in q.arrows} <= {0, n, n + 1}


class TestStar:
    def test_triangle(self):
        q = star_quiver(1, 4)
        assert q.vertices == ("0", "1", "2")
        assert sorted((a.src, a.dst, a.mult) for a in q.arrows) == [
            ("0", "1", 4),
            ("0", "2", 4),
            ("1", "2", 4),
        ]

    def test_n2(self):
        q = star_quiver(2, 1)
        assert len(q.vertices) == 5
        assert sorted((a.src, a.dst) for a in q.arrows) == [
            ("0", "2"), ("0", "3"), ("1", "3"), ("1", "4"), ("2", "4"),
        ]

    def test_bundle_count(self):
        for n in range(1, 7):
            q = star_quiver(n, 2)
            assert len(arrow_bundles(q)) == 2 * n + 1
            assert all(a.mult == 2 for a in q.arrows)

    def test_bad_m(self):
        with pytest.raises(BadRange):
            star_quiver(2, 0)
