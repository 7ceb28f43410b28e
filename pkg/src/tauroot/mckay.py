"""McKay quivers of cyclic subgroups of SL, and their hereditary quotients.

A cyclic subgroup of SL_{d+1} generated by the diagonal matrix with
eigenvalues ζ^{a_0}, …, ζ^{a_d} (ζ a primitive n-th root of unity) is
recorded as the modulus n together with the weight list (a_0, …, a_d);
membership in SL means the weights sum to 0 mod n.

The McKay quiver has vertex set ℤ/n and, for every vertex j and weight
index i, one arrow j → j + a_i of color i.  Cutting down to a subset of
"kept" vertices gives the quiver of an idempotent quotient; that quotient
is hereditary exactly when the kept part has no monochromatic directed
cycle and no composable pair of arrows with different colors.

On the Koszul side, the middle terms of the AR (d+2)-angle at a kept
vertex j are controlled by counts of k-element weight subsets with a given
sum; those counts also give the arrow multiplicities of the hereditary
algebras H built from shifted sums, for which the two small-dimension
builders (d=3 and d=4) are provided here.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import (
    DanglingArrow,
    NotHereditary,
    NotSemisimple,
    NotSL,
    SchemaError,
    VertexNotKept,
    WrongDimension,
)
from .quiver import Arrow, ColoredQuiver

__all__ = [
    "CyclicWeights",
    "ARAngle",
    "mckay_quiver",
    "is_hereditary_quotient",
    "subset_sum_count",
    "ar_angle",
    "h_quiver_d3",
    "h_quiver_d4",
    "normalize_kept",
]


@dataclass(frozen=True)
class CyclicWeights:
    """The group 1/n(a_0, …, a_d): modulus and weights, reduced mod n."""

    n: int
    weights: tuple[int, ...]

    def __init__(self, n: int, weights: Iterable[int]):
        if not isinstance(n, int) or n < 1:
            raise SchemaError(f"the modulus must be a positive integer, got {n!r}")
        ws = tuple(w % n for w in weights)
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "weights", ws)

    @property
    def d(self) -> int:
        """One less than the matrix size: weights are (a_0, …, a_d)."""
        return len(self.weights) - 1

    @property
    def is_sl(self) -> bool:
        return sum(self.weights) % self.n == 0

    def require_sl(self) -> None:
        if not self.is_sl:
            raise NotSL(
                f"the weights {self.weights} sum to {sum(self.weights) % self.n} mod"
                f" {self.n}; membership in SL requires sum 0"
            )

    def to_obj(self) -> dict:
        return {"n": self.n, "weights": list(self.weights)}

    @classmethod
    def from_obj(cls, obj) -> "CyclicWeights":
        if (
            not isinstance(obj, dict)
            or not isinstance(obj.get("n"), int)
            or not isinstance(obj.get("weights"), list)
            or not all(isinstance(w, int) and not isinstance(w, bool) for w in obj["weights"])
        ):
            raise SchemaError('weights objects look like {"n": int, "weights": [int, ...]}')
        return cls(obj["n"], obj["weights"])


def normalize_kept(w: CyclicWeights, kept: Iterable) -> tuple[int, ...]:
    """Coerce a kept set to sorted canonical residues; reject junk."""
    out = set()
    for k in kept:
        if isinstance(k, str):
            if not k.lstrip("-").isdigit():
                raise SchemaError(f"kept vertices must be residues mod {w.n}, got {k!r}")
            k = int(k)
        if not isinstance(k, int) or isinstance(k, bool):
            raise SchemaError(f"kept vertices must be residues mod {w.n}, got {k!r}")
        out.add(k % w.n)
    return tuple(sorted(out))


def mckay_quiver(w: CyclicWeights) -> ColoredQuiver:
    """The McKay quiver on ℤ/n: arrows j → j+a_i of color i for every j."""
    w.require_sl()
    vertices = [str(j) for j in range(w.n)]
    arrows = []
    for j in range(w.n):
        for i, a in enumerate(w.weights):
            arrows.append(Arrow(str(j), str((j + a) % w.n), i, 1))
    q = ColoredQuiver(vertices, arrows)
    q.validate()
    return q


def is_hereditary_quotient(q: ColoredQuiver, kept: Iterable[str]) -> bool:
    """Hereditariness test for the idempotent quotient on the kept vertices.

    True iff the induced subquiver has no monochromatic directed cycle
    (loops included) and no vertex with an incoming and an outgoing arrow
    of different colors.
    """
    kept = list(kept)
    vset = set(q.vertices)
    for v in kept:
        if v not in vset:
            raise DanglingArrow(f"kept vertex {v!r} is not a vertex of the quiver")
    sub = q.induced(kept)

    colors = {a.color for a in sub.arrows}
    for c in colors:
        mono = ColoredQuiver(sub.vertices, [a for a in sub.arrows if a.color == c])
        if not mono.is_acyclic():
            return False

    for v in sub.vertices:
        in_colors = {a.color for a in sub.in_arrows(v)}
        out_colors = {a.color for a in sub.out_arrows(v)}
        if any(ci != co for ci in in_colors for co in out_colors):
            return False
    return True


def subset_sum_count(w: CyclicWeights, k: int, s: int) -> int:
    """Number of k-element weight-index subsets whose weights sum to s mod n.

    Computed by dynamic programming over the weight list; out-of-range k
    yields 0.
    """
    if k < 0 or k > w.d + 1:
        return 0
    n = w.n
    dp = [[0] * n for _ in range(k + 1)]
    dp[0][0] = 1
    for a in w.weights:
        for c in range(k - 1, -1, -1):
            row, nxt = dp[c], dp[c + 1]
            for r in range(n):
                if row[r]:
                    nxt[(r + a) % n] += row[r]
    return dp[k][s % n]


@dataclass(frozen=True)
class ARAngle:
    """Middle-term multiplicities of the AR (d+2)-angle at a kept vertex.

    ``terms[0]`` corresponds to subset size d (next to the source map) and
    ``terms[-1]`` to subset size 1 (next to the sink map); each term maps a
    kept vertex to a positive multiplicity, omitting zeros.
    """

    source: int
    terms: tuple[dict[int, int], ...]

    def to_obj(self) -> dict:
        return {
            "source": self.source,
            "terms": [{str(v): m for v, m in sorted(t.items())} for t in self.terms],
        }


def ar_angle(w: CyclicWeights, kept: Iterable, j: int) -> ARAngle:
    """Middle terms of the AR (d+2)-angle at vertex j of the quotient.

    The term of subset size k sends a kept vertex l to the number of
    k-element weight subsets S with j − Σ_{i∈S} a_i ≡ l (mod n); vertices
    outside the kept set are dropped.  Computed by explicit subset
    enumeration, independently of the dynamic-programming counter.
    """
    w.require_sl()
    kept_t = normalize_kept(w, kept)
    j = j % w.n
    if j not in kept_t:
        raise VertexNotKept(f"vertex {j} is not in the kept set {list(kept_t)}")
    kept_set = set(kept_t)
    terms = []
    for k in range(w.d, 0, -1):
        counts: dict[int, int] = {}
        for subset in itertools.combinations(range(w.d + 1), k):
            l = (j - sum(w.weights[i] for i in subset)) % w.n
            if l in kept_set:
                counts[l] = counts.get(l, 0) + 1
        terms.append(counts)
    return ARAngle(j, tuple(terms))


def _level_name(j: int, level: int) -> str:
    return f"({j},{level})"


def h_quiver_d3(w: CyclicWeights, kept: Iterable) -> ColoredQuiver:
    """Quiver of H = End(N ⊕ N[−1]) for a 3-dimensional quotient.

    Vertices are kept×{0,−1}; both levels carry the (uncolored) quotient
    quiver, and there are subset_sum_count(w, 2, l−j) arrows (j,0)→(l,−1).
    """
    if w.d != 3:
        raise WrongDimension(f"this builder needs 4 weights (d=3), got d={w.d}")
    mq = mckay_quiver(w)
    kept_t = normalize_kept(w, kept)
    names = [str(j) for j in kept_t]
    if not is_hereditary_quotient(mq, names):
        raise NotHereditary(
            "the quotient on the kept vertices is not hereditary; the shifted-sum"
            " quiver rule does not apply"
        )
    induced = mq.induced(names).uncolored()
    vertices = [_level_name(j, 0) for j in kept_t] + [_level_name(j, -1) for j in kept_t]
    arrows: list[Arrow] = []
    for level in (0, -1):
        for a in induced.arrows:
            arrows.append(
                Arrow(_level_name(int(a.src), level), _level_name(int(a.dst), level), None, a.mult)
            )
    for j in kept_t:
        for l in kept_t:
            m = subset_sum_count(w, 2, (l - j) % w.n)
            if m:
                arrows.append(Arrow(_level_name(j, 0), _level_name(l, -1), None, m))
    q = ColoredQuiver(vertices, arrows)
    q.validate()
    return q


def h_quiver_d4(w: CyclicWeights, kept: Iterable) -> ColoredQuiver:
    """Quiver of H = End(N ⊕ N[−1] ⊕ N[−2]) for a 4-dimensional quotient.

    Requires the quotient on the kept vertices to be semisimple (no arrows
    at all between kept vertices).  With m_jl = subset_sum_count(w, 2, l−j):
    m_jl arrows (j,0)→(l,−1) and (j,−1)→(l,−2), and m_lj arrows (j,0)→(l,−2).
    """
    if w.d != 4:
        raise WrongDimension(f"this builder needs 5 weights (d=4), got d={w.d}")
    mq = mckay_quiver(w)
    kept_t = normalize_kept(w, kept)
    names = [str(j) for j in kept_t]
    if mq.induced(names).arrows:
        raise NotSemisimple(
            "the quotient on the kept vertices has arrows; this builder needs a"
            " semisimple quotient (no two kept vertices may differ by a weight)"
        )
    vertices = [_level_name(j, lv) for lv in (0, -1, -2) for j in kept_t]
    arrows: list[Arrow] = []
    for j in kept_t:
        for l in kept_t:
            m_jl = subset_sum_count(w, 2, (l - j) % w.n)
            m_lj = subset_sum_count(w, 2, (j - l) % w.n)
            if m_jl:
                arrows.append(Arrow(_level_name(j, 0), _level_name(l, -1), None, m_jl))
                arrows.append(Arrow(_level_name(j, -1), _level_name(l, -2), None, m_jl))
            if m_lj:
                arrows.append(Arrow(_level_name(j, 0), _level_name(l, -2), None, m_lj))
    q = ColoredQuiver(vertices, arrows)
    q.validate()
    return q
