"""Translation quivers ℤQ, their automorphisms, and l-th roots of τ⁻¹.

For an acyclic quiver Q the translation quiver ℤQ has vertices Q₀ × ℤ and,
for every arrow x→y of Q with multiplicity m, arrows

    (x,k) → (y,k)     and     (y,k) → (x,k+1)        (each with mult m)

for all k.  The translation is τ(x,k) = (x,k−1).  Only finite level windows
are ever materialized; all global questions reduce to vertex arithmetic.

Automorphisms are encoded as pairs (σ,δ) acting by F(x,k) = (σx, k+δx);
every automorphism commuting with τ is of this shape, and the encoding is
double-checked pointwise on windows.  The module provides:

* window construction and sections of ℤQ,
* validation of (σ,δ) automorphisms,
* the l-th root test F^l = τ⁻¹ (algebraic and pointwise routes),
* F-sections: verification and canonical construction,
* exhaustive root search with a bounded offset range,
* the block normal form for quivers that carry a canonical root, with
  verification, root extraction, and a brute-force partition finder.
"""

from __future__ import annotations

import itertools
from collections import Counter
from dataclasses import dataclass
from typing import Iterable, Mapping, NamedTuple, Sequence

from .errors import (
    ArrowNotPreserved,
    BadPartition,
    BadRange,
    CyclicGenerator,
    DanglingArrow,
    MarginTooSmall,
    NormalFormViolated,
    NotARoot,
    QuiverError,
    SchemaError,
    SigmaNotBijective,
)
from .quiver import Arrow, ColoredQuiver, arrow_bundles, graph_automorphism_extends

__all__ = [
    "ZQVertex",
    "ZWindow",
    "TQAutomorphism",
    "NormalFormPartition",
    "zq_name",
    "as_zq_vertex",
    "build_window",
    "tau_inverse",
    "validate_autom",
    "is_valid_autom",
    "is_root_of_tau",
    "is_section",
    "is_F_section",
    "construct_F_section",
    "no_backward_arrows",
    "find_tau_roots",
    "sigma_orbits",
    "check_root_normal_form",
    "root_from_normal_form",
    "find_normal_form_partition",
    "section_quiver",
    "autom_to_obj",
    "autom_from_obj",
]


class ZQVertex(NamedTuple):
    """A vertex (base, level) of ℤQ."""

    base: str
    level: int


def zq_name(v: ZQVertex) -> str:
    """Printable id used when a window or section becomes a plain quiver."""
    return f"({v.base},{v.level})"


def as_zq_vertex(x) -> ZQVertex:
    """Coerce a ZQVertex, a (base, level) pair, or {"base":…,"level":…}."""
    if isinstance(x, ZQVertex):
        return x
    if isinstance(x, Mapping):
        try:
            base, level = x["base"], x["level"]
        except KeyError as e:
            raise SchemaError(f"vertex object is missing field {e.args[0]!r}") from None
    elif isinstance(x, (tuple, list)) and len(x) == 2:
        base, level = x
    else:
        raise SchemaError(f"cannot interpret {x!r} as a vertex of ℤQ")
    if not isinstance(base, str) or not isinstance(level, int) or isinstance(level, bool):
        raise SchemaError(f"bad vertex data {x!r}: need a string base and an integer level")
    return ZQVertex(base, level)


def _zq_arrow_mult(
    bundles: Mapping[tuple[str, str], int], u: ZQVertex, v: ZQVertex
) -> int:
    """Multiplicity of the ℤQ arrow u → v (0 if there is none)."""
    if v.level == u.level:
        return bundles.get((u.base, v.base), 0)
    if v.level == u.level + 1:
        return bundles.get((v.base, u.base), 0)
    return 0


# ---------------------------------------------------------------------------
# windows
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class ZWindow:
    """The finite part of ℤQ between two levels (both inclusive)."""

    generator: ColoredQuiver
    k_min: int
    k_max: int
    quiver: ColoredQuiver

    def vertex(self, base: str, level: int) -> ZQVertex:
        v = ZQVertex(base, level)
        if not self.contains(v):
            raise BadRange(f"{zq_name(v)} is outside the window [{self.k_min}, {self.k_max}]")
        return v

    def contains(self, v: ZQVertex) -> bool:
        return v.base in set(self.generator.vertices) and self.k_min <= v.level <= self.k_max


def build_window(q: ColoredQuiver, k_min: int, k_max: int) -> ZWindow:
    """Materialize the levels [k_min, k_max] of ℤQ as a plain quiver.

    The generator must be acyclic; colors, if any, are forgotten and merged
    into total multiplicities (ℤQ is an uncolored construction).  Vertices
    are named ``(base,level)`` and ordered level-major.
    """
    q.validate()
    if not q.is_acyclic():
        raise CyclicGenerator("the generating quiver must be acyclic")
    if k_min > k_max:
        raise BadRange(f"empty level range [{k_min}, {k_max}]")
    bundles = arrow_bundles(q)
    vertices = [
        zq_name(ZQVertex(x, k))
        for k in range(k_min, k_max + 1)
        for x in q.vertices
    ]
    arrows: list[Arrow] = []
    for (x, y), m in bundles.items():
        for k in range(k_min, k_max + 1):
            arrows.append(Arrow(zq_name(ZQVertex(x, k)), zq_name(ZQVertex(y, k)), None, m))
            if k + 1 <= k_max:
                arrows.append(
                    Arrow(zq_name(ZQVertex(y, k)), zq_name(ZQVertex(x, k + 1)), None, m)
                )
    w = ColoredQuiver(vertices, arrows)
    w.validate()
    return ZWindow(q, k_min, k_max, w)


# ---------------------------------------------------------------------------
# automorphisms
# ---------------------------------------------------------------------------


def sigma_orbits(sigma: Mapping[str, str], order: Sequence[str]) -> list[list[str]]:
    """Orbits of a permutation, each starting at its first vertex in ``order``."""
    seen: set[str] = set()
    orbits: list[list[str]] = []
    for v in order:
        if v in seen:
            continue
        orbit = [v]
        seen.add(v)
        w = sigma[v]
        while w != v:
            orbit.append(w)
            seen.add(w)
            w = sigma[w]
        orbits.append(orbit)
    return orbits


@dataclass
class TQAutomorphism:
    """A level-equivariant map F(x,k) = (sigma(x), k + delta(x)) of ℤQ."""

    sigma: dict[str, str]
    delta: dict[str, int]

    def apply(self, v: ZQVertex) -> ZQVertex:
        v = as_zq_vertex(v)
        return ZQVertex(self.sigma[v.base], v.level + self.delta[v.base])

    def inverse(self) -> "TQAutomorphism":
        sigma_inv = {w: v for v, w in self.sigma.items()}
        delta_inv = {w: -self.delta[v] for v, w in self.sigma.items()}
        return TQAutomorphism(sigma_inv, delta_inv)

    def apply_power(self, v: ZQVertex, n: int) -> ZQVertex:
        f = self if n >= 0 else self.inverse()
        v = as_zq_vertex(v)
        for _ in range(abs(n)):
            v = f.apply(v)
        return v

    def orbits(self, order: Sequence[str]) -> list[list[str]]:
        return sigma_orbits(self.sigma, order)


def tau_inverse(q: ColoredQuiver) -> TQAutomorphism:
    """τ⁻¹ itself: the identity permutation with every offset equal to 1."""
    return TQAutomorphism({v: v for v in q.vertices}, {v: 1 for v in q.vertices})


def autom_to_obj(f: TQAutomorphism) -> dict:
    return {"sigma": dict(f.sigma), "delta": dict(f.delta)}


def autom_from_obj(obj) -> TQAutomorphism:
    if not isinstance(obj, dict) or "sigma" not in obj or "delta" not in obj:
        raise SchemaError("an automorphism object needs the fields 'sigma' and 'delta'")
    sigma, delta = obj["sigma"], obj["delta"]
    if not isinstance(sigma, dict) or not all(
        isinstance(k, str) and isinstance(v, str) for k, v in sigma.items()
    ):
        raise SchemaError("'sigma' must map vertex ids to vertex ids")
    if not isinstance(delta, dict) or not all(
        isinstance(k, str) and isinstance(v, int) and not isinstance(v, bool)
        for k, v in delta.items()
    ):
        raise SchemaError("'delta' must map vertex ids to integers")
    return TQAutomorphism(dict(sigma), dict(delta))


def validate_autom(q: ColoredQuiver, f: TQAutomorphism) -> None:
    """Check that (σ,δ) really defines an automorphism of ℤQ.

    Two routes are taken and both must pass:

    1. the arrow-bundle condition on Q itself — per bundle x→y of total
       multiplicity m, exactly one of
         * δ(y) = δ(x)   and σx→σy is a bundle of multiplicity m, or
         * δ(y) = δ(x)+1 and σy→σx is a bundle of multiplicity m;
    2. pointwise on a window [−2m, 2m] (m = max(1, max|δ|)): the image of
       every window arrow under F, and under F⁻¹, is an arrow of ℤQ of the
       same multiplicity.

    Raises SigmaNotBijective or ArrowNotPreserved; returns None on success.
    """
    vs = list(q.vertices)
    vset = set(vs)
    if set(f.sigma.keys()) != vset or set(f.sigma.values()) != vset:
        raise SigmaNotBijective("sigma must be a bijection of the vertex set onto itself")
    if set(f.delta.keys()) != vset:
        raise SchemaError("delta must assign an integer offset to every vertex")
    if not q.is_acyclic():
        raise CyclicGenerator("the generating quiver must be acyclic")

    bundles = arrow_bundles(q)
    for (x, y), m in bundles.items():
        flat_ok = f.delta[y] == f.delta[x] and bundles.get((f.sigma[x], f.sigma[y]), 0) == m
        up_ok = f.delta[y] == f.delta[x] + 1 and bundles.get((f.sigma[y], f.sigma[x]), 0) == m
        if not (flat_ok or up_ok):
            raise ArrowNotPreserved(
                f"the image of the arrow bundle {x!r} -> {y!r} (mult {m}) is not an"
                f" arrow bundle of ℤQ under sigma={f.sigma[x]!r}->{f.sigma[y]!r},"
                f" delta=({f.delta[x]}, {f.delta[y]})"
            )

    # pointwise double check on a window
    m_max = max([1] + [abs(d) for d in f.delta.values()])
    lo, hi = -2 * m_max, 2 * m_max
    f_inv = f.inverse()
    for (x, y), m in bundles.items():
        for k in range(lo, hi + 1):
            pairs = [(ZQVertex(x, k), ZQVertex(y, k))]
            if k + 1 <= hi:
                pairs.append((ZQVertex(y, k), ZQVertex(x, k + 1)))
            for (u, v) in pairs:
                for g in (f, f_inv):
                    if _zq_arrow_mult(bundles, g.apply(u), g.apply(v)) != m:
                        raise ArrowNotPreserved(
                            f"window arrow {zq_name(u)} -> {zq_name(v)} (mult {m})"
                            f" maps to {zq_name(g.apply(u))} -> {zq_name(g.apply(v))},"
                            " which is not an arrow of ℤQ with that multiplicity"
                        )


def is_valid_autom(q: ColoredQuiver, f: TQAutomorphism) -> bool:
    try:
        validate_autom(q, f)
    except QuiverError:
        return False
    return True


# ---------------------------------------------------------------------------
# the root test
# ---------------------------------------------------------------------------


def _root_algebraic(q: ColoredQuiver, f: TQAutomorphism, l: int) -> bool:
    """F^l = τ⁻¹ iff every σ-orbit has length exactly l and its δ-sum is 1."""
    for orbit in f.orbits(q.vertices):
        if len(orbit) != l:
            return False
        if sum(f.delta[x] for x in orbit) != 1:
            return False
    return True


def _root_pointwise(q: ColoredQuiver, f: TQAutomorphism, l: int) -> bool:
    """Brute force: apply F l times on every vertex of the window [−l, l]."""
    for x in q.vertices:
        for k in range(-l, l + 1):
            if f.apply_power(ZQVertex(x, k), l) != ZQVertex(x, k + 1):
                return False
    return True


def is_root_of_tau(q: ColoredQuiver, f: TQAutomorphism, l: int) -> bool:
    """Is F an l-th root of τ⁻¹, i.e. F^l = τ⁻¹ on ℤQ?

    F is validated first (the usual validation errors propagate).  The orbit
    characterization and the pointwise window check are both evaluated; they
    are equivalent, and a disagreement would be an internal error.
    """
    validate_autom(q, f)
    algebraic = _root_algebraic(q, f, l)
    pointwise = _root_pointwise(q, f, l)
    if algebraic != pointwise:  # pragma: no cover - the two routes are equivalent
        raise QuiverError(
            "internal inconsistency: the orbit test and the pointwise window test disagree"
        )
    return algebraic


# ---------------------------------------------------------------------------
# sections and F-sections
# ---------------------------------------------------------------------------


def _check_bases(q: ColoredQuiver, vs: Iterable[ZQVertex]) -> list[ZQVertex]:
    out = []
    vset = set(q.vertices)
    for v in vs:
        v = as_zq_vertex(v)
        if v.base not in vset:
            raise DanglingArrow(f"{zq_name(v)} refers to an unknown base vertex")
        out.append(v)
    return out


def is_section(w: ZWindow, s: Iterable) -> bool:
    """Is S a section of ℤQ (checked inside the window)?

    True iff every base vertex occurs in S at exactly one level (S meets
    every τ-orbit exactly once) and, for every arrow s→y of ℤQ with s ∈ S,
    either y ∈ S or τy ∈ S.  The window must extend at least one level
    beyond S on both sides, so that all arrows out of S are visible;
    otherwise MarginTooSmall is raised.
    """
    q = w.generator
    vertices = _check_bases(q, s)
    if vertices:
        lo = min(v.level for v in vertices)
        hi = max(v.level for v in vertices)
        if lo - 1 < w.k_min or hi + 1 > w.k_max:
            raise MarginTooSmall(
                f"S spans levels [{lo}, {hi}]; the window [{w.k_min}, {w.k_max}]"
                " must extend at least one level beyond S on both sides"
            )
    sset = set(vertices)
    if len(sset) != len(vertices):
        return False
    levels_per_base: dict[str, int] = {}
    for v in sset:
        levels_per_base[v.base] = levels_per_base.get(v.base, 0) + 1
    if any(levels_per_base.get(x, 0) != 1 for x in q.vertices):
        return False
    bundles = arrow_bundles(q)
    for v in sset:
        targets = [ZQVertex(y, v.level) for (x, y) in bundles if x == v.base]
        targets += [ZQVertex(z, v.level + 1) for (z, x) in bundles if x == v.base]
        for y in targets:
            if y not in sset and ZQVertex(y.base, y.level - 1) not in sset:
                return False
    return True


def is_F_section(q: ColoredQuiver, f: TQAutomorphism, l: int, t: Iterable) -> bool:
    """Is T a transversal of the F-orbits satisfying the arrow condition?

    Requires F to be an l-th root of τ⁻¹ (NotARoot otherwise).  Because the
    orbit sums are 1, the F-orbit of (x,k) consists of *all* levels over the
    σ-orbit of x, so condition (a) is: the bases of T meet every σ-orbit
    exactly once.  Condition (b): for every arrow t→x of ℤQ with t ∈ T,
    x lies in T ∪ F(T) ∪ … ∪ F^{l−1}(T) or τx lies in T.
    """
    if not is_root_of_tau(q, f, l):
        raise NotARoot(f"the automorphism is not an {l}-th root of τ⁻¹")
    vertices = _check_bases(q, t)
    orbit_of = {}
    for i, orbit in enumerate(f.orbits(q.vertices)):
        for x in orbit:
            orbit_of[x] = i
    hit: dict[int, int] = {}
    for v in vertices:
        hit[orbit_of[v.base]] = hit.get(orbit_of[v.base], 0) + 1
    n_orbits = len(set(orbit_of.values()))
    if len(vertices) != n_orbits or any(c != 1 for c in hit.values()) or len(hit) != n_orbits:
        return False

    tset = set(vertices)
    forward = {f.apply_power(v, i) for v in tset for i in range(l)}
    bundles = arrow_bundles(q)
    for v in tset:
        targets = [ZQVertex(y, v.level) for (x, y) in bundles if x == v.base]
        targets += [ZQVertex(z, v.level + 1) for (z, x) in bundles if x == v.base]
        for y in targets:
            if y not in forward and ZQVertex(y.base, y.level - 1) not in tset:
                return False
    return True


def construct_F_section(q: ColoredQuiver, f: TQAutomorphism, l: int) -> tuple[ZQVertex, ...]:
    """The canonical F-section: minimal-exponent level-0 vertices per orbit.

    For a σ-orbit with first vertex t (in Q's vertex order) let
    s_a = Σ_{i<a} δ(σ^i t); then (σ^a t, 0) = F^{e_a}(t, 0) with
    e_a = a − l·s_a.  The exponents are distinct (e_a ≡ a mod l), and from
    each orbit the vertex with the minimal exponent is selected.
    """
    if not is_root_of_tau(q, f, l):
        raise NotARoot(f"the automorphism is not an {l}-th root of τ⁻¹")
    chosen: list[ZQVertex] = []
    for orbit in f.orbits(q.vertices):
        t = orbit[0]
        best: tuple[int, str] | None = None
        s_a = 0
        x = t
        for a in range(l):
            e_a = a - l * s_a
            if best is None or e_a < best[0]:
                best = (e_a, x)
            s_a += f.delta[x]
            x = f.sigma[x]
        assert best is not None
        chosen.append(ZQVertex(best[1], 0))
    order = {v: i for i, v in enumerate(q.vertices)}
    chosen.sort(key=lambda v: order[v.base])
    return tuple(chosen)


def no_backward_arrows(q: ColoredQuiver, f: TQAutomorphism, l: int, t: Iterable) -> bool:
    """No arrow F^a s → t' for s, t' ∈ T and a > 0.

    An arrow u→v of ℤQ forces level(u) ∈ {level(v)−1, level(v)}, and
    level(F^{ql+r} s) = level(s) + s_r + q, so for each pair (s, t') and
    each residue r only two values of q can matter; they are enumerated
    exactly — no truncation is involved.
    """
    if not is_root_of_tau(q, f, l):
        raise NotARoot(f"the automorphism is not an {l}-th root of τ⁻¹")
    vertices = _check_bases(q, t)
    bundles = arrow_bundles(q)
    for s in vertices:
        partial = 0
        x = s.base
        sums = []
        for _ in range(l):
            sums.append(partial)
            partial += f.delta[x]
            x = f.sigma[x]
        for tp in vertices:
            for r, s_r in enumerate(sums):
                for target_level in (tp.level - 1, tp.level):
                    qq = target_level - s.level - s_r
                    a = qq * l + r
                    if a <= 0:
                        continue
                    u = f.apply_power(s, a)
                    if _zq_arrow_mult(bundles, u, tp) > 0:
                        return False
    return True


# ---------------------------------------------------------------------------
# exhaustive root search
# ---------------------------------------------------------------------------


def _all_l_orbit_perms(vertices: Sequence[str], l: int):
    """All permutations of ``vertices`` whose cycles all have length exactly l.

    Cycles are anchored at their smallest-index element, which makes the
    enumeration order deterministic.
    """
    vs = list(vertices)

    def rec(unused: list[str], acc: dict[str, str]):
        if not unused:
            yield dict(acc)
            return
        anchor = unused[0]
        rest = unused[1:]
        for body in itertools.permutations(rest, l - 1):
            cycle = [anchor, *body]
            for i, v in enumerate(cycle):
                acc[v] = cycle[(i + 1) % l]
            remaining = [v for v in rest if v not in set(body)]
            yield from rec(remaining, acc)
            for v in cycle:
                del acc[v]

    yield from rec(vs, {})


def find_tau_roots(
    q: ColoredQuiver, l: int, offset_bound: int | None = None
) -> list[TQAutomorphism]:
    """All l-th roots of τ⁻¹ with offsets bounded by ``offset_bound``.

    Equivalent to brute force over every permutation σ whose orbits all have
    length l and every offset family δ with |δ(x)| ≤ B and δ-sum 1 on each
    orbit, keeping the pairs that define automorphisms.  The search itself
    propagates constraints: given σ, acyclicity forces the difference
    δ(y) − δ(x) ∈ {0, 1} on every arrow bundle (or rules σ out), so δ is
    determined per connected component up to one additive constant, and only
    those constants are enumerated.  B defaults to the number of vertices.
    Results come in canonical lexicographic order (σ images, then offsets,
    read along the vertex order).
    """
    q.validate()
    if not q.is_acyclic():
        raise CyclicGenerator("the generating quiver must be acyclic")
    vs = list(q.vertices)
    n = len(vs)
    b = offset_bound if offset_bound is not None else n
    if l < 1 or (l and n % l != 0):
        return []
    bundles = arrow_bundles(q)

    # undirected bundle graph for the offset components
    nbrs: dict[str, list[tuple[str, tuple[str, str], bool]]] = {v: [] for v in vs}
    for (x, y) in bundles:
        nbrs[x].append((y, (x, y), True))   # forward: diff applies as delta[y]-delta[x]
        nbrs[y].append((x, (x, y), False))  # backward

    roots: list[TQAutomorphism] = []
    for sigma in _all_l_orbit_perms(vs, l):
        # forced offset differences per bundle
        diff: dict[tuple[str, str], int] = {}
        ok = True
        for (x, y), m in bundles.items():
            flat = bundles.get((sigma[x], sigma[y]), 0) == m
            up = bundles.get((sigma[y], sigma[x]), 0) == m
            # acyclicity of Q makes flat and up mutually exclusive
            if flat:
                diff[(x, y)] = 0
            elif up:
                diff[(x, y)] = 1
            else:
                ok = False
                break
        if not ok:
            continue

        # relative offsets per connected component of the bundle graph
        comp_id: dict[str, int] = {}
        rel: dict[str, int] = {}
        comps: list[list[str]] = []
        for v in vs:
            if v in comp_id:
                continue
            cid = len(comps)
            comp: list[str] = []
            stack = [v]
            comp_id[v] = cid
            rel[v] = 0
            consistent = True
            while stack:
                u = stack.pop()
                comp.append(u)
                for (w2, key, fwd) in nbrs[u]:
                    d = diff[key] if fwd else -diff[key]
                    val = rel[u] + d
                    if w2 in rel:
                        if rel[w2] != val:
                            consistent = False
                            break
                    else:
                        rel[w2] = val
                        comp_id[w2] = cid
                        stack.append(w2)
                if not consistent:
                    break
            if not consistent:
                ok = False
                break
            comps.append(comp)
        if not ok:
            continue

        orbits = sigma_orbits(sigma, vs)
        # which components feed which orbits, and the fixed part of each sum
        orbit_consts = [sum(rel[x] for x in orbit) for orbit in orbits]
        orbit_comp_count: list[dict[int, int]] = []
        for orbit in orbits:
            cnt: dict[int, int] = {}
            for x in orbit:
                cnt[comp_id[x]] = cnt.get(comp_id[x], 0) + 1
            orbit_comp_count.append(cnt)
        # an orbit's sum constraint becomes checkable once its last component
        # constant (the one with the largest id) has been assigned
        close_at: dict[int, list[int]] = {}
        for oi, cnt in enumerate(orbit_comp_count):
            close_at.setdefault(max(cnt), []).append(oi)

        lo_t, hi_t = [], []
        for comp in comps:
            lo_t.append(max(-b - rel[x] for x in comp))
            hi_t.append(min(b - rel[x] for x in comp))

        t_assign: dict[int, int] = {}

        def backtrack(cid: int):
            if cid == len(comps):
                delta = {x: rel[x] + t_assign[comp_id[x]] for x in vs}
                roots.append(TQAutomorphism(dict(sigma), delta))
                return
            for t_val in range(lo_t[cid], hi_t[cid] + 1):
                t_assign[cid] = t_val
                feasible = True
                for oi in close_at.get(cid, ()):
                    cnt = orbit_comp_count[oi]
                    total = orbit_consts[oi] + sum(cnt[c] * t_assign[c] for c in cnt)
                    if total != 1:
                        feasible = False
                        break
                if feasible:
                    backtrack(cid + 1)
            t_assign.pop(cid, None)

        if comps:
            backtrack(0)
        elif not vs:
            roots.append(TQAutomorphism({}, {}))

    order = {v: i for i, v in enumerate(vs)}
    roots.sort(
        key=lambda f: (
            tuple(f.sigma[v] for v in vs),
            tuple(f.delta[v] for v in vs),
        )
    )
    # every constructed candidate satisfies the bundle condition by design;
    # the assertion guards the constraint propagation itself
    for f in roots:
        assert is_valid_autom(q, f)
    return roots


# ---------------------------------------------------------------------------
# the block normal form
# ---------------------------------------------------------------------------


@dataclass
class NormalFormPartition:
    """An ordered partition V₀,…,V_{l−1} with bijections φ_i: V_i → V_{i+1}.

    When ``phi`` is omitted, consecutive blocks are paired positionally
    (the j-th vertex of block i maps to the j-th vertex of block i+1).
    """

    blocks: tuple[tuple[str, ...], ...]
    phi: tuple[dict[str, str], ...]

    def __init__(self, blocks: Iterable[Iterable[str]], phi=None):
        blocks_t = tuple(tuple(b) for b in blocks)
        if phi is None:
            phi_t = []
            for i in range(len(blocks_t) - 1):
                if len(blocks_t[i]) != len(blocks_t[i + 1]):
                    raise BadPartition(
                        f"blocks {i} and {i + 1} have different sizes; positional"
                        " pairing needs equal-sized blocks"
                    )
                phi_t.append(dict(zip(blocks_t[i], blocks_t[i + 1])))
            phi = tuple(phi_t)
        else:
            phi = tuple(dict(m) for m in phi)
        self.blocks = blocks_t
        self.phi = phi

    def to_obj(self) -> dict:
        return {
            "blocks": [list(b) for b in self.blocks],
            "phi": [dict(m) for m in self.phi],
        }

    @classmethod
    def from_obj(cls, obj) -> "NormalFormPartition":
        if not isinstance(obj, dict) or "blocks" not in obj:
            raise SchemaError("a partition object needs the field 'blocks'")
        blocks = obj["blocks"]
        if not isinstance(blocks, list) or not all(
            isinstance(b, list) and all(isinstance(v, str) for v in b) for b in blocks
        ):
            raise SchemaError("'blocks' must be a list of lists of vertex ids")
        phi = obj.get("phi")
        if phi is not None and not (
            isinstance(phi, list)
            and all(
                isinstance(m, dict)
                and all(isinstance(k, str) and isinstance(v, str) for k, v in m.items())
                for m in phi
            )
        ):
            raise SchemaError("'phi' must be a list of vertex-id mappings")
        return cls(blocks, phi)


def _partition_wrap_map(qp: ColoredQuiver, l: int, p: NormalFormPartition) -> dict[str, str]:
    """Validate the partition shape and build the wrap-around permutation F̂."""
    if len(p.blocks) != l:
        raise BadPartition(f"expected {l} blocks, got {len(p.blocks)}")
    flat: list[str] = [v for b in p.blocks for v in b]
    if len(set(flat)) != len(flat) or set(flat) != set(qp.vertices):
        raise BadPartition("the blocks must partition the vertex set")
    if len(p.phi) != max(l - 1, 0):
        raise BadPartition(f"expected {max(l - 1, 0)} bijections in phi, got {len(p.phi)}")
    for i, m in enumerate(p.phi):
        if set(m.keys()) != set(p.blocks[i]) or set(m.values()) != set(p.blocks[i + 1]) or len(
            set(m.values())
        ) != len(p.blocks[i + 1]):
            raise BadPartition(f"phi[{i}] is not a bijection from block {i} to block {i + 1}")
    wrap: dict[str, str] = {}
    for m in p.phi:
        wrap.update(m)
    if l >= 2:
        # compose the chain to map block 0 to block l-1, then invert it
        chain = {v: v for v in p.blocks[0]}
        for m in p.phi:
            chain = {v: m[w] for v, w in chain.items()}
        for v0, vlast in chain.items():
            wrap[vlast] = v0
    else:
        wrap = {v: v for v in qp.vertices}
    return wrap


def check_root_normal_form(qp: ColoredQuiver, l: int, p: NormalFormPartition) -> bool:
    """Does (blocks, φ) exhibit the quiver in block normal form?

    Three conditions: (a) the induced subquivers on the blocks are pairwise
    isomorphic via the φ chain (matching colors and multiplicities); (b)
    arrows between distinct blocks only go from block i to block j with
    i < j; (c) the wrap-around permutation (φ on blocks 0..l−2, the inverse
    of the composed chain on the last block) is an automorphism of the
    underlying graph.  Malformed partitions raise BadPartition.
    """
    qp.validate()
    wrap = _partition_wrap_map(qp, l, p)
    block_of = {}
    for i, b in enumerate(p.blocks):
        for v in b:
            block_of[v] = i

    # (b) cross arrows go strictly forward
    for a in qp.arrows:
        if block_of[a.src] != block_of[a.dst] and block_of[a.src] > block_of[a.dst]:
            return False

    # (a) blocks are isomorphic via phi
    for i, m in enumerate(p.phi):
        here = qp.induced(p.blocks[i])
        there = qp.induced(p.blocks[i + 1])
        mapped = Counter(
            Arrow(m[a.src], m[a.dst], a.color, a.mult) for a in here.arrows
        )
        if mapped != Counter(there.arrows):
            return False

    # (c) the wrap extends to a graph automorphism
    return graph_automorphism_extends(qp, wrap)


def root_from_normal_form(qp: ColoredQuiver, l: int, p: NormalFormPartition) -> TQAutomorphism:
    """The canonical root carried by a quiver in block normal form.

    σ is the wrap-around permutation; δ is 0 on blocks 0..l−2 and 1 on the
    last block.  The result is returned only after passing the root test.
    """
    if not check_root_normal_form(qp, l, p):
        raise NormalFormViolated("the partition does not satisfy the normal-form conditions")
    wrap = _partition_wrap_map(qp, l, p)
    last = set(p.blocks[-1]) if p.blocks else set()
    delta = {v: (1 if v in last else 0) for v in qp.vertices}
    f = TQAutomorphism(wrap, delta)
    if not is_root_of_tau(qp, f, l):  # pragma: no cover - guaranteed by the checks
        raise NormalFormViolated("internal: the canonical candidate failed the root test")
    return f


def find_normal_form_partition(qp: ColoredQuiver, l: int) -> NormalFormPartition | None:
    """Brute-force search for a partition passing check_root_normal_form.

    Enumerates permutations with all orbits of length l that are graph
    automorphisms, then all l ways per orbit of rotating its block offsets.
    Deliberately limited to quivers with at most 10 vertices (BadRange);
    returns the first partition found in enumeration order, or None.
    """
    qp.validate()
    n = len(qp.vertices)
    if n > 10:
        raise BadRange("the brute-force partition search is limited to 10 vertices")
    if l < 1 or (n % l != 0):
        return None
    for wrap in _all_l_orbit_perms(list(qp.vertices), l):
        if not graph_automorphism_extends(qp, wrap):
            continue
        orbits = sigma_orbits(wrap, qp.vertices)
        for offsets in itertools.product(range(l), repeat=len(orbits)):
            blocks: list[list[str]] = [[] for _ in range(l)]
            phi: list[dict[str, str]] = [{} for _ in range(max(l - 1, 0))]
            for orbit, off in zip(orbits, offsets):
                x = orbit[0]
                for j in range(l):
                    blocks[(off + j) % l].append(_perm_power(wrap, x, j))
            for i in range(l - 1):
                for v in blocks[i]:
                    phi[i][v] = wrap[v]
            # phi must actually land in the next block
            if any(set(phi[i].values()) != set(blocks[i + 1]) for i in range(l - 1)):
                continue
            p = NormalFormPartition(blocks, phi)
            try:
                if check_root_normal_form(qp, l, p):
                    return p
            except BadPartition:
                continue
    return None


def _perm_power(perm: Mapping[str, str], v: str, j: int) -> str:
    for _ in range(j):
        v = perm[v]
    return v


def section_quiver(
    q: ColoredQuiver, f: TQAutomorphism, l: int
) -> tuple[ColoredQuiver, NormalFormPartition]:
    """The full subquiver of ℤQ on Σ = T ∪ F(T) ∪ … ∪ F^{l−1}(T).

    T is the canonical F-section.  Vertices are named ``(base,level)``,
    grouped block by block (block i is F^i(T)), and the returned partition
    pairs them along F — so the result is ready for the normal-form check.
    """
    t = construct_F_section(q, f, l)
    blocks: list[list[ZQVertex]] = [
        [f.apply_power(v, i) for v in t] for i in range(l)
    ]
    names = [[zq_name(v) for v in block] for block in blocks]
    all_vs = [v for block in blocks for v in block]
    bundles = arrow_bundles(q)
    arrows = [
        Arrow(zq_name(u), zq_name(v), None, _zq_arrow_mult(bundles, u, v))
        for u in all_vs
        for v in all_vs
        if _zq_arrow_mult(bundles, u, v) > 0
    ]
    sub = ColoredQuiver([zq_name(v) for v in all_vs], arrows)
    sub.validate()
    phi = [dict(zip(names[i], names[i + 1])) for i in range(l - 1)]
    return sub, NormalFormPartition(names, phi)
