"""McKay quivers of cyclic weight systems and their hereditary quotients."""

import itertools
import pathlib
import random

import pytest

from tauroot.errors import (
    DanglingArrow,
    NotHereditary,
    NotSemisimple,
    NotSL,
    SchemaError,
    VertexNotKept,
    WrongDimension,
)
from tauroot.mckay import (
    CyclicWeights,
    ar_angle,
    h_quiver_d3,
    h_quiver_d4,
    is_hereditary_quotient,
    mckay_quiver,
    normalize_kept,
    subset_sum_count,
)
from tauroot.quiver import quiver, serialize

GOLDEN = pathlib.Path(__file__).parent / "golden"

W5 = CyclicWeights(5, (1, 3, 3, 3))
W6 = CyclicWeights(6, (1, 1, 1, 4, 5))


def golden_text(name: str) -> str:
    return (GOLDEN / f"{name}.json").read_text(encoding="utf-8")


def random_sl(rng, n_max=12, d_max=5):
    n = rng.randint(2, n_max)
    d = rng.randint(2, d_max)
    while True:
        weights = [rng.randrange(n) for _ in range(d)]
        last = (-sum(weights)) % n
        weights.append(last)
        rng.shuffle(weights)
        return CyclicWeights(n, tuple(weights))


class TestWeights:
    def test_reduction_and_sl(self):
        w = CyclicWeights(5, (6, 8, -2, 3))
        assert w.weights == (1, 3, 3, 3)
        assert w.d == 3
        assert w.is_sl
        assert not CyclicWeights(5, (1, 3, 3, 4)).is_sl

    def test_require_sl(self):
        with pytest.raises(NotSL):
            CyclicWeights(5, (1, 3, 3, 4)).require_sl()

    def test_bad_n(self):
        with pytest.raises(SchemaError):
            CyclicWeights(0, (1,))

    def test_json(self):
        w = CyclicWeights(6, (1, 1, 1, 4, 5))
        assert CyclicWeights.from_obj(w.to_obj()) == w

    def test_normalize_kept(self):
        assert normalize_kept(W6, ["3", 9, -3]) == (3,)
        with pytest.raises(SchemaError):
            normalize_kept(W6, ["x"])


class TestMcKay:
    def test_goldens(self):
        assert serialize(mckay_quiver(W5)) + "\n" == golden_text("mckay-5-1333")
        assert serialize(mckay_quiver(W6)) + "\n" == golden_text("mckay-6-11145")

    def test_not_sl(self):
        with pytest.raises(NotSL):
            mckay_quiver(CyclicWeights(5, (1, 3, 3, 4)))

    def test_arrow_rule(self):
        q = mckay_quiver(CyclicWeights(3, (1, 2)))
        assert sorted((a.src, a.dst, a.color) for a in q.arrows) == [
            ("0", "1", 0), ("0", "2", 1),
            ("1", "0", 1), ("1", "2", 0),
            ("2", "0", 0), ("2", "1", 1),
        ]


class TestHereditaryQuotient:
    def test_semisimple_and_hereditary(self):
        q = mckay_quiver(W6)
        assert is_hereditary_quotient(q, ["0", "3"])
        assert not mckay_quiver(W6).induced(["0", "3"]).arrows
        assert is_hereditary_quotient(mckay_quiver(W5), ["1", "2"])

    def test_monochrome_cycle_fails(self):
        # weight 0 gives a loop of one color at every vertex
        q = mckay_quiver(CyclicWeights(2, (0, 1, 1, 0)))
        assert not is_hereditary_quotient(q, ["0"])

    def test_color_clash_fails(self):
        # at vertex 1 an incoming color-0 arrow meets an outgoing color-1 arrow
        q = mckay_quiver(CyclicWeights(6, (1, 1, 1, 3)))
        assert not is_hereditary_quotient(q, ["0", "1", "2"])

    def test_unknown_vertex(self):
        with pytest.raises(DanglingArrow):
            is_hereditary_quotient(mckay_quiver(W5), ["7"])


class TestSubsetSums:
    def test_small_case_by_hand(self):
        # pairs from (1,3,3,3): 1+3 three times, 3+3 three times
        assert subset_sum_count(W5, 2, 4) == 3
        assert subset_sum_count(W5, 2, 1) == 3
        assert subset_sum_count(W5, 2, 0) == 0
        assert subset_sum_count(W5, 0, 0) == 1
        assert subset_sum_count(W5, 5, 0) == 0  # size exceeds d+1

    def test_matches_enumeration(self):
        rng = random.Random(77)
        for _ in range(50):
            w = random_sl(rng, n_max=9, d_max=4)
            for k in range(w.d + 2):
                for s in range(w.n):
                    direct = sum(
                        1
                        for sub in itertools.combinations(w.weights, k)
                        if sum(sub) % w.n == s
                    )
                    assert subset_sum_count(w, k, s) == direct

    def test_complement_symmetry(self):
        rng = random.Random(78)
        for _ in range(30):
            w = random_sl(rng)
            for k in range(w.d + 2):
                for s in range(w.n):
                    assert subset_sum_count(w, k, s) == subset_sum_count(
                        w, w.d + 1 - k, (-s) % w.n
                    )


class TestARAngle:
    def test_structure(self):
        angle = ar_angle(W5, [1, 2], 1)
        assert angle.source == 1
        assert len(angle.terms) == W5.d
        # middle term of size 2 next to the source: counts into the kept set
        assert angle.terms[1] == {2: 3}

    def test_kept_filtering(self):
        full = ar_angle(W6, range(6), 0)
        sparse = ar_angle(W6, [0, 3], 0)
        for t_full, t_sparse in zip(full.terms, sparse.terms):
            assert t_sparse == {l: m for l, m in t_full.items() if l in (0, 3)}

    def test_vertex_not_kept(self):
        with pytest.raises(VertexNotKept):
            ar_angle(W5, [1, 2], 0)

    def test_json(self):
        obj = ar_angle(W5, [1, 2], 1).to_obj()
        assert obj["source"] == 1
        assert all(isinstance(k, str) for t in obj["terms"] for k in t)

    def test_self_duality(self):
        rng = random.Random(79)
        for _ in range(20):
            w = random_sl(rng, n_max=10, d_max=4)
            kept = list(range(w.n))
            j = rng.randrange(w.n)
            angle = ar_angle(w, kept, j)
            for k in range(1, w.d + 1):
                term_k = angle.terms[w.d - k]
                dual = angle.terms[k - 1]
                assert term_k == {(2 * j - l) % w.n: m for l, m in dual.items()}


class TestHQuivers:
    def test_d3_golden(self):
        assert serialize(h_quiver_d3(W5, [1, 2])) + "\n" == golden_text(
            "hquiver-d3-5-1333-kept12"
        )

    def test_d4_goldens(self):
        assert serialize(h_quiver_d4(W6, [0])) + "\n" == golden_text(
            "hquiver-d4-6-11145-kept0"
        )
        assert serialize(h_quiver_d4(W6, [0, 3])) + "\n" == golden_text(
            "hquiver-d4-6-11145-kept03"
        )

    def test_wrong_dimension(self):
        with pytest.raises(WrongDimension):
            h_quiver_d3(W6, [0])
        with pytest.raises(WrongDimension):
            h_quiver_d4(W5, [1, 2])

    def test_d3_requires_hereditary_quotient(self):
        w = CyclicWeights(6, (1, 1, 1, 3))
        with pytest.raises(NotHereditary):
            h_quiver_d3(w, [0, 1, 2])

    def test_d4_requires_semisimple_quotient(self):
        with pytest.raises(NotSemisimple):
            h_quiver_d4(W6, [0, 1])

    def test_d3_cross_matches_ar_angle(self):
        kept = [1, 2]
        h = h_quiver_d3(W5, kept)
        for j in kept:
            angle = ar_angle(W5, kept, j)
            mid = angle.terms[1]  # size-2 term
            for l in kept:
                cross = sum(
                    a.mult
                    for a in h.arrows
                    if a.src == f"({j},0)" and a.dst == f"({l},-1)"
                )
                assert cross == mid.get(l, 0)

    def test_d4_cross_matches_ar_angle(self):
        for kept in ([0], [0, 3]):
            h = h_quiver_d4(W6, kept)
            for j in kept:
                angle = ar_angle(W6, kept, j)
                size3 = angle.terms[1]
                size2 = angle.terms[2]
                for l in kept:
                    down1 = sum(
                        a.mult
                        for a in h.arrows
                        if a.src == f"({j},0)" and a.dst == f"({l},-1)"
                    )
                    down2 = sum(
                        a.mult
                        for a in h.arrows
                        if a.src == f"({j},0)" and a.dst == f"({l},-2)"
                    )
                    assert down1 == size3.get(l, 0)
                    assert down2 == size2.get(l, 0)
