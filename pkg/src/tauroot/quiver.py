"""Finite colored multidigraphs ("quivers") with arrow multiplicities.

This is the shared data model of the package.  A quiver has

* a finite ordered list of vertices, identified by opaque strings, and
* a finite list of arrow records ``src -> dst`` with an optional integer
  ``color`` and a positive integer multiplicity ``mult``.

Two records may share ``(src, dst)`` as long as their colors differ; a
bundle of parallel same-colored arrows is stored as one record with
``mult > 1``.  Equality of quivers is order-insensitive: two quivers are
equal when they have the same vertex set and the same multiset of
``(src, dst, color, mult)`` records.

The module also provides the underlying (undirected) graph, connected
components, Dynkin / extended-Dynkin recognition, a permutation test for
underlying-graph automorphisms, and JSON / DOT serialization.  The DOT
reader is a small strict parser following the published DOT grammar, so it
can also be used to *check* that emitted DOT is grammatical.
"""

from __future__ import annotations

import json
import re
from collections import Counter, deque
from dataclasses import dataclass, field
from typing import Iterable, Iterator, Mapping, Sequence

from .errors import (
    DanglingArrow,
    DuplicateArrowRecord,
    DuplicateVertex,
    NonPositiveMult,
    NotABijection,
    ParseError,
    SchemaError,
)

__all__ = [
    "Arrow",
    "ColoredQuiver",
    "UnderlyingGraph",
    "DynkinLabel",
    "quiver",
    "arrow_bundles",
    "dynkin_classify",
    "dynkin_quiver",
    "graph_automorphism_extends",
    "serialize",
    "deserialize",
    "to_dot",
    "parse_dot",
]


@dataclass(frozen=True)
class Arrow:
    """One arrow record.  ``color=None`` means "uncolored"."""

    src: str
    dst: str
    color: int | None = None
    mult: int = 1

    def key(self) -> tuple[str, str, int | None]:
        return (self.src, self.dst, self.color)

    def sort_key(self):
        # None colors sort before integer colors; mult breaks remaining ties.
        return (self.src, self.dst, self.color is not None, self.color or 0, self.mult)


def _as_arrow(a) -> Arrow:
    if isinstance(a, Arrow):
        return a
    if isinstance(a, (tuple, list)):
        if len(a) == 2:
            return Arrow(a[0], a[1])
        if len(a) == 3:
            return Arrow(a[0], a[1], a[2])
        if len(a) == 4:
            return Arrow(a[0], a[1], a[2], a[3])
    raise TypeError(f"cannot interpret {a!r} as an arrow")


@dataclass(frozen=True, eq=False)
class ColoredQuiver:
    """A finite quiver.  See the module docstring for the data model."""

    vertices: tuple[str, ...]
    arrows: tuple[Arrow, ...]

    # -- construction ---------------------------------------------------------

    def __init__(self, vertices: Iterable[str], arrows: Iterable = ()):
        object.__setattr__(self, "vertices", tuple(vertices))
        object.__setattr__(self, "arrows", tuple(_as_arrow(a) for a in arrows))

    # -- equality is order-insensitive ---------------------------------------

    def __eq__(self, other) -> bool:
        if not isinstance(other, ColoredQuiver):
            return NotImplemented
        return (
            Counter(self.vertices) == Counter(other.vertices)
            and Counter(self.arrows) == Counter(other.arrows)
        )

    def __hash__(self) -> int:
        return hash(
            (
                tuple(sorted(self.vertices)),
                tuple(sorted(self.arrows, key=Arrow.sort_key)),
            )
        )

    def __repr__(self) -> str:
        return f"ColoredQuiver({len(self.vertices)} vertices, {len(self.arrows)} arrow records)"

    # -- validation -----------------------------------------------------------

    def validate(self) -> None:
        """Raise a :class:`~tauroot.errors.QuiverError` subclass on bad data.

        Checks: vertex ids pairwise distinct, every arrow endpoint declared,
        multiplicities positive, and no two records with the same
        ``(src, dst, color)``.
        """
        seen: set[str] = set()
        for v in self.vertices:
            if v in seen:
                raise DuplicateVertex(f"vertex id {v!r} declared twice")
            seen.add(v)
        keys: set[tuple[str, str, int | None]] = set()
        for a in self.arrows:
            if a.src not in seen:
                raise DanglingArrow(f"arrow {a.src!r} -> {a.dst!r}: unknown source")
            if a.dst not in seen:
                raise DanglingArrow(f"arrow {a.src!r} -> {a.dst!r}: unknown target")
            if not isinstance(a.mult, int) or a.mult < 1:
                raise NonPositiveMult(
                    f"arrow {a.src!r} -> {a.dst!r}: mult must be a positive integer, got {a.mult!r}"
                )
            k = a.key()
            if k in keys:
                raise DuplicateArrowRecord(
                    f"two records for arrow {a.src!r} -> {a.dst!r} with color {a.color!r};"
                    " merge them into one record with a larger mult"
                )
            keys.add(k)

    # -- basic structure --------------------------------------------------------

    def vertex_index(self) -> dict[str, int]:
        return {v: i for i, v in enumerate(self.vertices)}

    def is_acyclic(self) -> bool:
        """Kahn's algorithm on the directed simple graph (colors/mults ignored)."""
        succ: dict[str, set[str]] = {v: set() for v in self.vertices}
        indeg: dict[str, int] = {v: 0 for v in self.vertices}
        for a in self.arrows:
            if a.dst not in succ[a.src]:
                succ[a.src].add(a.dst)
                indeg[a.dst] += 1
        ready = deque(v for v in self.vertices if indeg[v] == 0)
        emitted = 0
        while ready:
            v = ready.popleft()
            emitted += 1
            for w in succ[v]:
                indeg[w] -= 1
                if indeg[w] == 0:
                    ready.append(w)
        return emitted == len(self.vertices)

    def induced(self, keep: Iterable[str]) -> "ColoredQuiver":
        """Full subquiver on the given vertices (kept in this quiver's order)."""
        keep_set = set(keep)
        verts = tuple(v for v in self.vertices if v in keep_set)
        arrows = tuple(a for a in self.arrows if a.src in keep_set and a.dst in keep_set)
        return ColoredQuiver(verts, arrows)

    def uncolored(self) -> "ColoredQuiver":
        """Forget colors, merging parallel records into multiplicities."""
        merged: dict[tuple[str, str], int] = {}
        order: list[tuple[str, str]] = []
        for a in self.arrows:
            k = (a.src, a.dst)
            if k not in merged:
                merged[k] = 0
                order.append(k)
            merged[k] += a.mult
        return ColoredQuiver(
            self.vertices, tuple(Arrow(s, d, None, merged[(s, d)]) for s, d in order)
        )

    def out_arrows(self, v: str) -> tuple[Arrow, ...]:
        return tuple(a for a in self.arrows if a.src == v)

    def in_arrows(self, v: str) -> tuple[Arrow, ...]:
        return tuple(a for a in self.arrows if a.dst == v)

    def underlying_graph(self) -> "UnderlyingGraph":
        return UnderlyingGraph.of(self)


def quiver(vertices: Iterable[str], arrows: Iterable = ()) -> ColoredQuiver:
    """Convenience constructor; arrows may be tuples ``(src, dst[, color[, mult]])``."""
    q = ColoredQuiver(vertices, arrows)
    q.validate()
    return q


def arrow_bundles(q: ColoredQuiver) -> dict[tuple[str, str], int]:
    """Total multiplicity between each ordered vertex pair, summed over colors."""
    out: dict[tuple[str, str], int] = {}
    for a in q.arrows:
        out[(a.src, a.dst)] = out.get((a.src, a.dst), 0) + a.mult
    return out


# ---------------------------------------------------------------------------
# underlying graphs and Dynkin recognition
# ---------------------------------------------------------------------------


@dataclass
class UnderlyingGraph:
    """Undirected multigraph obtained by forgetting directions and colors.

    Edges are stored as a map from a canonical vertex pair (ordered by the
    vertex list) to the total multiplicity of all arrows between the pair,
    in either direction.  A loop is the pair ``(v, v)``.
    """

    vertices: tuple[str, ...]
    edges: dict[tuple[str, str], int]
    _index: dict[str, int] = field(repr=False, default_factory=dict)

    @classmethod
    def of(cls, q: ColoredQuiver) -> "UnderlyingGraph":
        index = {v: i for i, v in enumerate(q.vertices)}
        edges: dict[tuple[str, str], int] = {}
        for a in q.arrows:
            pair = cls._canon(a.src, a.dst, index)
            edges[pair] = edges.get(pair, 0) + a.mult
        return cls(tuple(q.vertices), edges, index)

    @staticmethod
    def _canon(u: str, v: str, index: Mapping[str, int]) -> tuple[str, str]:
        return (u, v) if index[u] <= index[v] else (v, u)

    def edge_mult(self, u: str, v: str) -> int:
        return self.edges.get(self._canon(u, v, self._index), 0)

    def neighbors(self, v: str) -> list[str]:
        out = []
        for (a, b) in self.edges:
            if a == v and b != v:
                out.append(b)
            elif b == v and a != v:
                out.append(a)
        return out

    def degree(self, v: str) -> int:
        # a loop contributes 2 to the degree, as usual
        deg = 0
        for (a, b), m in self.edges.items():
            if a == v:
                deg += m
            if b == v:
                deg += m
        return deg

    def components(self) -> list[tuple[str, ...]]:
        """Connected components, each ordered by the vertex list; deterministic."""
        adj: dict[str, set[str]] = {v: set() for v in self.vertices}
        for (a, b) in self.edges:
            if a != b:
                adj[a].add(b)
                adj[b].add(a)
        seen: set[str] = set()
        comps: list[tuple[str, ...]] = []
        for v in self.vertices:
            if v in seen:
                continue
            stack = [v]
            comp = set()
            while stack:
                x = stack.pop()
                if x in comp:
                    continue
                comp.add(x)
                stack.extend(adj[x] - comp)
            seen |= comp
            comps.append(tuple(u for u in self.vertices if u in comp))
        return comps


@dataclass(frozen=True)
class DynkinLabel:
    """Classification of one connected component of an underlying graph.

    ``family`` is ``"A"``, ``"D"``, ``"E"`` or ``"other"``; ``extended``
    distinguishes the affine (extended) diagram from the finite one.  For
    extended A/D types ``rank`` is the affine rank, i.e. vertices minus one.
    """

    family: str
    rank: int | None
    extended: bool
    vertices: tuple[str, ...]

    @property
    def is_finite_dynkin(self) -> bool:
        return self.family in ("A", "D", "E") and not self.extended

    @property
    def name(self) -> str:
        if self.family == "other":
            return "other"
        prefix = "~" if self.extended else ""
        return f"{prefix}{self.family}{self.rank}"

    def __str__(self) -> str:
        return self.name


def _arm_lengths(adj: dict[str, set[str]], center: str) -> list[int] | None:
    """Lengths of the simple paths hanging off ``center`` in a tree where all
    non-center degrees are <= 2.  Returns None if a branch vertex is met."""
    arms = []
    for start in sorted(adj[center]):
        length = 1
        prev, cur = center, start
        while True:
            nxt = [w for w in adj[cur] if w != prev]
            if not nxt:
                break
            if len(nxt) > 1:
                return None
            prev, cur = cur, nxt[0]
            length += 1
        arms.append(length)
    return sorted(arms)


def _classify_component(g: UnderlyingGraph, comp: tuple[str, ...]) -> DynkinLabel:
    n_vert = len(comp)
    comp_set = set(comp)
    edges = {
        (a, b): m for (a, b), m in g.edges.items() if a in comp_set
    }
    other = DynkinLabel("other", None, False, comp)

    if any(a == b for (a, b) in edges):
        return other
    if any(m > 1 for m in edges.values()):
        # the double bond on two vertices is the affine cycle of length 2
        if n_vert == 2 and len(edges) == 1 and next(iter(edges.values())) == 2:
            return DynkinLabel("A", 1, True, comp)
        return other

    n_edge = len(edges)
    adj: dict[str, set[str]] = {v: set() for v in comp}
    for (a, b) in edges:
        adj[a].add(b)
        adj[b].add(a)
    degrees = sorted(len(adj[v]) for v in comp)

    if n_edge == n_vert and all(d == 2 for d in degrees):
        # simple cycle: the affine A diagram on n_vert vertices
        return DynkinLabel("A", n_vert - 1, True, comp)
    if n_edge != n_vert - 1:
        return other

    # tree cases
    branch = [v for v in comp if len(adj[v]) >= 3]
    if not branch:
        return DynkinLabel("A", n_vert, False, comp)
    if len(branch) == 1:
        center = branch[0]
        if len(adj[center]) == 4 and n_vert == 5:
            return DynkinLabel("D", 4, True, comp)
        if len(adj[center]) != 3:
            return other
        arms = _arm_lengths(adj, center)
        if arms is None:
            return other
        a1, a2, a3 = arms
        if (a1, a2) == (1, 1):
            return DynkinLabel("D", a3 + 3, False, comp)
        if (a1, a2) == (1, 2) and a3 in (2, 3, 4):
            return DynkinLabel("E", {2: 6, 3: 7, 4: 8}[a3], False, comp)
        if arms == [2, 2, 2]:
            return DynkinLabel("E", 6, True, comp)
        if arms == [1, 3, 3]:
            return DynkinLabel("E", 7, True, comp)
        if arms == [1, 2, 5]:
            return DynkinLabel("E", 8, True, comp)
        return other
    if len(branch) == 2:
        # the affine D diagram: two trivalent nodes, two pendant leaves each
        b1, b2 = branch
        if len(adj[b1]) == 3 and len(adj[b2]) == 3:
            leaves1 = [w for w in adj[b1] if len(adj[w]) == 1]
            leaves2 = [w for w in adj[b2] if len(adj[w]) == 1]
            if len(leaves1) == 2 and len(leaves2) == 2:
                if all(len(adj[v]) <= 2 for v in comp if v not in branch):
                    return DynkinLabel("D", n_vert - 1, True, comp)
        return other
    return other


def dynkin_classify(g: UnderlyingGraph | ColoredQuiver) -> tuple[DynkinLabel, ...]:
    """Classify each connected component as (extended) A/D/E or "other"."""
    if isinstance(g, ColoredQuiver):
        g = g.underlying_graph()
    return tuple(_classify_component(g, comp) for comp in g.components())


_DYNKIN_NAME = re.compile(r"^([ADE])(\d+)$")


def dynkin_quiver(name: str) -> ColoredQuiver:
    """A reference orientation of the finite Dynkin quiver ``name``.

    ``A<n>`` is the linearly oriented path ``1 -> 2 -> ... -> n``;
    ``D<n>`` (n >= 4) forks at vertex ``n-2``; ``E6``/``E7``/``E8``
    attach vertex ``2`` to the fourth vertex of the path on the rest.
    The output satisfies ``dynkin_classify(dynkin_quiver(x))[0].name == x``.
    """
    m = _DYNKIN_NAME.match(name.strip())
    if not m:
        raise SchemaError(f"not a Dynkin diagram name: {name!r}")
    family, rank = m.group(1), int(m.group(2))
    if family == "A" and rank >= 1:
        verts = [str(i) for i in range(1, rank + 1)]
        return ColoredQuiver(verts, [(str(i), str(i + 1)) for i in range(1, rank)])
    if family == "D" and rank >= 4:
        verts = [str(i) for i in range(1, rank + 1)]
        arrows = [(str(i), str(i + 1)) for i in range(1, rank - 1)]
        arrows.append((str(rank - 2), str(rank)))
        return ColoredQuiver(verts, arrows)
    if family == "E" and rank in (6, 7, 8):
        verts = [str(i) for i in range(1, rank + 1)]
        path = ["1", "3", "4", "5", "6", "7", "8"][: rank - 1]
        arrows = list(zip(path, path[1:]))
        arrows.append(("2", "4"))
        return ColoredQuiver(verts, arrows)
    raise SchemaError(f"not a Dynkin diagram name: {name!r}")


def graph_automorphism_extends(q: ColoredQuiver, perm: Mapping[str, str]) -> bool:
    """Does the vertex permutation preserve the underlying edge multiset?

    ``perm`` must be a bijection of q's vertex set onto itself, otherwise
    :class:`~tauroot.errors.NotABijection` is raised.  Directions, colors and
    the grouping of parallel arrows into records are all ignored; only the
    total multiplicity between each unordered vertex pair must be invariant.
    """
    vs = set(q.vertices)
    if set(perm.keys()) != vs or set(perm.values()) != vs:
        raise NotABijection(
            "the map must be a bijection of the quiver's vertex set onto itself"
        )
    g = q.underlying_graph()
    index = {v: i for i, v in enumerate(q.vertices)}

    def canon(u: str, v: str) -> tuple[str, str]:
        return (u, v) if index[u] <= index[v] else (v, u)

    for (a, b), m in g.edges.items():
        if g.edges.get(canon(perm[a], perm[b]), 0) != m:
            return False
    return True


# ---------------------------------------------------------------------------
# JSON serialization
# ---------------------------------------------------------------------------


def serialize(q: ColoredQuiver) -> str:
    """Canonical JSON text for a quiver (stored order; 2-space indent)."""
    payload = {
        "vertices": [{"id": v} for v in q.vertices],
        "arrows": [
            {"src": a.src, "dst": a.dst, "color": a.color, "mult": a.mult}
            for a in q.arrows
        ],
    }
    return json.dumps(payload, indent=2, ensure_ascii=False)


def _expect(cond: bool, where: str, what: str):
    if not cond:
        raise SchemaError(f"{where}: {what}")


def quiver_from_obj(obj, where: str = "$") -> ColoredQuiver:
    """Build a quiver from already-parsed JSON data, validating the schema."""
    _expect(isinstance(obj, dict), where, "expected an object")
    _expect("vertices" in obj, where, "missing field 'vertices'")
    _expect("arrows" in obj, where, "missing field 'arrows'")
    _expect(isinstance(obj["vertices"], list), f"{where}.vertices", "expected a list")
    _expect(isinstance(obj["arrows"], list), f"{where}.arrows", "expected a list")
    vertices = []
    for i, rec in enumerate(obj["vertices"]):
        loc = f"{where}.vertices[{i}]"
        _expect(isinstance(rec, dict), loc, "expected an object")
        _expect("id" in rec, loc, "missing field 'id'")
        _expect(isinstance(rec["id"], str), f"{loc}.id", "expected a string")
        vertices.append(rec["id"])
    arrows = []
    for i, rec in enumerate(obj["arrows"]):
        loc = f"{where}.arrows[{i}]"
        _expect(isinstance(rec, dict), loc, "expected an object")
        for fieldname in ("src", "dst"):
            _expect(fieldname in rec, loc, f"missing field '{fieldname}'")
            _expect(
                isinstance(rec[fieldname], str), f"{loc}.{fieldname}", "expected a string"
            )
        color = rec.get("color")
        _expect(
            color is None or (isinstance(color, int) and not isinstance(color, bool)),
            f"{loc}.color",
            "expected an integer or null",
        )
        mult = rec.get("mult", 1)
        _expect(
            isinstance(mult, int) and not isinstance(mult, bool),
            f"{loc}.mult",
            "expected an integer",
        )
        arrows.append(Arrow(rec["src"], rec["dst"], color, mult))
    q = ColoredQuiver(vertices, arrows)
    q.validate()
    return q


def deserialize(text: str) -> ColoredQuiver:
    """Parse quiver JSON; raises ParseError (with position) or SchemaError."""
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as e:
        raise ParseError(
            f"invalid JSON at line {e.lineno} column {e.colno} (char {e.pos}): {e.msg}"
        ) from None
    return quiver_from_obj(obj)


# ---------------------------------------------------------------------------
# DOT output and a strict DOT reader
# ---------------------------------------------------------------------------


def _dot_quote(s: str) -> str:
    return '"' + s.replace("\\", "\\\\").replace('"', '\\"') + '"'


def to_dot(q: ColoredQuiver, name: str = "Q", repeat_edges: bool = False) -> str:
    """Render as a DOT digraph.

    By default a bundle of parallel arrows becomes one edge with a ``×m``
    label; with ``repeat_edges=True`` it becomes ``m`` separate edge lines.
    A color ``k`` is rendered as the attribute ``color="ck"``.
    """
    lines = [f"digraph {_dot_quote(name)} {{"]
    for v in q.vertices:
        lines.append(f"  {_dot_quote(v)};")
    for a in q.arrows:
        attrs = []
        if a.color is not None:
            attrs.append(f'color={_dot_quote(f"c{a.color}")}')
        if repeat_edges:
            suffix = f" [{', '.join(attrs)}]" if attrs else ""
            for _ in range(a.mult):
                lines.append(f"  {_dot_quote(a.src)} -> {_dot_quote(a.dst)}{suffix};")
        else:
            if a.mult > 1:
                attrs.insert(0, f'label={_dot_quote(f"×{a.mult}")}')
            suffix = f" [{', '.join(attrs)}]" if attrs else ""
            lines.append(f"  {_dot_quote(a.src)} -> {_dot_quote(a.dst)}{suffix};")
    lines.append("}")
    return "\n".join(lines)


# tokenizer for the DOT grammar ------------------------------------------------

_DOT_TOKEN = re.compile(
    r"""
    (?P<ws>\s+|//[^\n]*|\#[^\n]*|/\*.*?\*/)
  | (?P<punct>->|--|[{}\[\];,=:+])
  | (?P<quoted>"(?:[^"\\]|\\.)*")
  | (?P<html><[^<>]*>)
  | (?P<name>[A-Za-z_\200-\377][A-Za-z_0-9\200-\377]*)
  | (?P<number>-?(?:\.[0-9]+|[0-9]+(?:\.[0-9]*)?))
    """,
    re.VERBOSE | re.DOTALL,
)


class _DotTokens:
    def __init__(self, text: str):
        self.text = text
        self.toks: list[tuple[str, str, int]] = []
        pos = 0
        while pos < len(text):
            m = _DOT_TOKEN.match(text, pos)
            if not m:
                raise ParseError(f"DOT: unexpected character {text[pos]!r} at offset {pos}")
            pos = m.end()
            kind = m.lastgroup
            if kind == "ws":
                continue
            self.toks.append((kind, m.group(), m.start()))
        self.i = 0

    def peek(self) -> tuple[str, str, int]:
        if self.i >= len(self.toks):
            return ("eof", "", len(self.text))
        return self.toks[self.i]

    def next(self) -> tuple[str, str, int]:
        t = self.peek()
        self.i += 1
        return t

    def expect_punct(self, value: str):
        kind, tok, off = self.next()
        if kind != "punct" or tok != value:
            raise ParseError(f"DOT: expected {value!r} at offset {off}, found {tok!r}")

    def fail(self, msg: str):
        _, tok, off = self.peek()
        raise ParseError(f"DOT: {msg} at offset {off} (near {tok!r})")


def _unquote(tok: str) -> str:
    body = tok[1:-1]
    return re.sub(r"\\(.)", lambda m: m.group(1), body)


class _DotParser:
    """Recursive-descent parser for the DOT grammar (digraphs).

    Grammar productions implemented: graph, stmt_list, node_stmt, edge_stmt,
    attr_stmt, assignment, subgraph, attr_list, a_list, node_id with optional
    port.  The parser is strict: anything outside the grammar raises
    :class:`~tauroot.errors.ParseError` with an offset.
    """

    def __init__(self, text: str):
        self.t = _DotTokens(text)
        self.nodes: list[str] = []
        self._node_seen: set[str] = set()
        self.edges: list[tuple[str, str, dict[str, str]]] = []
        self.directed = True

    # ID : name | number | quoted (with +-concatenation) | html
    def parse_id(self) -> str:
        kind, tok, off = self.t.next()
        if kind == "name" or kind == "number":
            return tok
        if kind == "quoted":
            value = _unquote(tok)
            while self.t.peek()[:2] == ("punct", "+"):
                self.t.next()
                kind2, tok2, off2 = self.t.next()
                if kind2 != "quoted":
                    raise ParseError(
                        f"DOT: expected a quoted string after '+' at offset {off2}"
                    )
                value += _unquote(tok2)
            return value
        if kind == "html":
            return tok
        raise ParseError(f"DOT: expected an ID at offset {off}, found {tok!r}")

    def parse(self) -> "_DotParser":
        kind, tok, off = self.t.peek()
        if kind == "name" and tok.lower() == "strict":
            self.t.next()
            kind, tok, off = self.t.peek()
        if kind == "name" and tok.lower() in ("graph", "digraph"):
            self.directed = tok.lower() == "digraph"
            self.t.next()
        else:
            self.t.fail("expected 'graph' or 'digraph'")
        if self.t.peek()[0] != "punct" or self.t.peek()[1] != "{":
            self.parse_id()  # optional graph name
        self.t.expect_punct("{")
        self.parse_stmt_list()
        self.t.expect_punct("}")
        if self.t.peek()[0] != "eof":
            self.t.fail("trailing input after closing '}'")
        return self

    def parse_stmt_list(self):
        while True:
            kind, tok, _ = self.t.peek()
            if kind == "eof" or (kind == "punct" and tok == "}"):
                return
            self.parse_stmt()
            if self.t.peek()[:2] == ("punct", ";"):
                self.t.next()

    def _register_node(self, name: str):
        if name not in self._node_seen:
            self._node_seen.add(name)
            self.nodes.append(name)

    def parse_stmt(self):
        kind, tok, off = self.t.peek()
        if kind == "name" and tok.lower() in ("graph", "node", "edge"):
            # attr_stmt
            self.t.next()
            self.parse_attr_list(required=True)
            return
        if kind == "punct" and tok == "{" or (kind == "name" and tok.lower() == "subgraph"):
            self.parse_subgraph()
            # a subgraph may start an edge statement
            if self.t.peek()[:2] in (("punct", "->"), ("punct", "--")):
                self.parse_edge_rhs(None)
                self.parse_attr_list(required=False)
            return
        name = self.parse_id()
        nxt = self.t.peek()
        if nxt[:2] == ("punct", "="):
            self.t.next()
            self.parse_id()
            return
        port_names = self.parse_port()
        nxt = self.t.peek()
        if nxt[:2] in (("punct", "->"), ("punct", "--")):
            self._register_node(name)
            attrs_targets = self.parse_edge_rhs(name)
            attrs = self.parse_attr_list(required=False)
            for (s, d) in attrs_targets:
                self.edges.append((s, d, attrs))
            return
        # plain node statement
        self._register_node(name)
        self.parse_attr_list(required=False)

    def parse_port(self) -> None:
        # ports are accepted and discarded
        while self.t.peek()[:2] == ("punct", ":"):
            self.t.next()
            self.parse_id()

    def parse_subgraph(self):
        kind, tok, _ = self.t.peek()
        if kind == "name" and tok.lower() == "subgraph":
            self.t.next()
            if self.t.peek()[:2] != ("punct", "{"):
                self.parse_id()
        self.t.expect_punct("{")
        self.parse_stmt_list()
        self.t.expect_punct("}")

    def parse_edge_rhs(self, first: str | None) -> list[tuple[str, str]]:
        pairs: list[tuple[str, str]] = []
        prev = first
        while self.t.peek()[:2] in (("punct", "->"), ("punct", "--")):
            op = self.t.next()[1]
            if (op == "->") != self.directed:
                self.t.fail(f"edge operator {op!r} does not match the graph kind")
            kind, tok, _ = self.t.peek()
            if kind == "punct" and tok == "{" or (kind == "name" and tok.lower() == "subgraph"):
                self.parse_subgraph()
                prev = None  # endpoints inside subgraphs are not tracked
                continue
            name = self.parse_id()
            self.parse_port()
            self._register_node(name)
            if prev is not None:
                pairs.append((prev, name))
            prev = name
        return pairs

    def parse_attr_list(self, required: bool) -> dict[str, str]:
        attrs: dict[str, str] = {}
        seen_any = False
        while self.t.peek()[:2] == ("punct", "["):
            seen_any = True
            self.t.next()
            while True:
                kind, tok, _ = self.t.peek()
                if kind == "punct" and tok == "]":
                    break
                key = self.parse_id()
                self.t.expect_punct("=")
                value = self.parse_id()
                attrs[key] = value
                if self.t.peek()[:2] in (("punct", ","), ("punct", ";")):
                    self.t.next()
            self.t.expect_punct("]")
        if required and not seen_any:
            self.t.fail("expected an attribute list")
        return attrs


_MULT_LABEL = re.compile(r"^×(\d+)$")
_COLOR_ATTR = re.compile(r"^c(\d+)$")


def parse_dot(text: str) -> ColoredQuiver:
    """Parse the DOT dialect written by :func:`to_dot` back into a quiver.

    The full DOT grammar is accepted syntactically; for the conversion the
    reader uses node statements, edge statements, ``label="×m"`` for
    multiplicities (repeated parallel edges accumulate), and ``color="ck"``
    for colors.  The graph must be a digraph.
    """
    p = _DotParser(text).parse()
    if not p.directed:
        raise ParseError("DOT: expected a digraph, found an undirected graph")
    merged: dict[tuple[str, str, int | None], int] = {}
    order: list[tuple[str, str, int | None]] = []
    for (src, dst, attrs) in p.edges:
        color: int | None = None
        cm = _COLOR_ATTR.match(attrs.get("color", ""))
        if cm:
            color = int(cm.group(1))
        mult = 1
        lm = _MULT_LABEL.match(attrs.get("label", ""))
        if lm:
            mult = int(lm.group(1))
        key = (src, dst, color)
        if key not in merged:
            merged[key] = 0
            order.append(key)
        merged[key] += mult
    q = ColoredQuiver(
        p.nodes, tuple(Arrow(s, d, c, merged[(s, d, c)]) for (s, d, c) in order)
    )
    q.validate()
    return q
