"""Quivers of endomorphism algebras of shifted sums.

Given the (uncolored, acyclic) quiver of a base algebra together with
middle-term multiplicities of its almost-split angles, build the quiver
of the endomorphism algebra of the sum of shifted copies of the
generator.  Two layouts exist:

* the *odd* layout pairs levels ``i`` and ``i + n`` and produces ``n``
  disjoint two-level blocks,
* the *even* layout stacks levels ``0 .. 2n`` and connects them by
  level-shift ``n`` and ``n + 1`` arrows.

Multiplicity data is a pair of mappings ``A`` (and optionally ``B``)
where ``A[a][b]`` is the number of summands of type ``b`` in the middle
term attached to ``a``.  The symmetry each layout requires can be
checked separately via :func:`validate_ar_symmetry`.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Mapping, Optional

from .errors import (
    BadRange,
    CyclicGenerator,
    MissingB,
    SchemaError,
    SymmetryViolated,
)
from .quiver import Arrow, ColoredQuiver, quiver_from_obj, serialize

__all__ = [
    "ARSummandData",
    "validate_ar_symmetry",
    "build_odd_quiver",
    "build_even_quiver",
    "star_quiver",
]

CountTable = Mapping[str, Mapping[str, int]]


def _freeze_table(table: Optional[CountTable]) -> Optional[dict]:
    if table is None:
        return None
    if not isinstance(table, Mapping):
        raise SchemaError("summand counts must be a mapping of mappings")
    out: dict[str, dict[str, int]] = {}
    for a, row in table.items():
        if not isinstance(row, Mapping):
            raise SchemaError(f"summand counts for {a!r} must be a mapping")
        out[str(a)] = {str(b): m for b, m in row.items()}
    return out


@dataclass(frozen=True)
class ARSummandData:
    """Base quiver plus middle-term multiplicities.

    ``A[a][b]`` counts the summands of type ``b`` in the middle term
    attached to vertex ``a``; missing entries mean zero.  ``B`` is a
    second table of the same shape used by the even layout only.
    """

    base_quiver: ColoredQuiver
    A: CountTable
    B: Optional[CountTable] = None

    def __init__(self, base_quiver, A, B=None):
        object.__setattr__(self, "base_quiver", base_quiver)
        object.__setattr__(self, "A", _freeze_table(A) or {})
        object.__setattr__(self, "B", _freeze_table(B))

    def validate(self) -> None:
        self.base_quiver.validate()
        if any(a.color is not None for a in self.base_quiver.arrows):
            raise SchemaError("the base quiver must be uncolored")
        if not self.base_quiver.is_acyclic():
            raise CyclicGenerator("the base quiver has an oriented cycle")
        known = set(self.base_quiver.vertices)
        for label, table in (("A", self.A), ("B", self.B)):
            if table is None:
                continue
            for a, row in table.items():
                if a not in known:
                    raise SchemaError(f"{label} mentions unknown vertex {a!r}")
                for b, m in row.items():
                    if b not in known:
                        raise SchemaError(f"{label}[{a!r}] mentions unknown vertex {b!r}")
                    if not isinstance(m, int) or isinstance(m, bool) or m < 0:
                        raise SchemaError(
                            f"{label}[{a!r}][{b!r}] must be a count, got {m!r}"
                        )

    def count(self, table: str, a: str, b: str) -> int:
        """Entry ``table[a][b]`` with missing entries read as zero."""
        t = self.A if table == "A" else self.B
        if t is None:
            return 0
        return t.get(a, {}).get(b, 0)

    def to_obj(self) -> dict:
        obj: dict = {"base": json.loads(serialize(self.base_quiver)), "A": {}}
        for a, row in self.A.items():
            kept = {b: m for b, m in row.items() if m}
            if kept:
                obj["A"][a] = kept
        if self.B is None:
            obj["B"] = None
        else:
            obj["B"] = {}
            for a, row in self.B.items():
                kept = {b: m for b, m in row.items() if m}
                if kept:
                    obj["B"][a] = kept
        return obj

    @classmethod
    def from_obj(cls, obj) -> "ARSummandData":
        if not isinstance(obj, dict) or "base" not in obj:
            raise SchemaError("summand data needs the field 'base'")
        base = quiver_from_obj(obj["base"], where="$.base")
        data = cls(base, obj.get("A") or {}, obj.get("B"))
        data.validate()
        return data


def validate_ar_symmetry(data: ARSummandData, mode: str) -> None:
    """Check the multiplicity symmetry the given layout relies on.

    ``mode="odd"`` requires ``A`` to be symmetric; ``mode="even"``
    requires ``B`` to be present and equal to the transpose of ``A``.
    Raises :class:`SymmetryViolated` naming the first offending pair.
    """
    data.validate()
    if mode not in ("odd", "even"):
        raise SchemaError(f"mode must be 'odd' or 'even', got {mode!r}")
    verts = data.base_quiver.vertices
    if mode == "odd":
        for a in verts:
            for b in verts:
                x, y = data.count("A", a, b), data.count("A", b, a)
                if x != y:
                    raise SymmetryViolated(
                        f"A[{a}][{b}] = {x} but A[{b}][{a}] = {y}"
                    )
        return
    if data.B is None:
        raise MissingB("the even layout needs the second multiplicity table B")
    for a in verts:
        for b in verts:
            x, y = data.count("A", b, a), data.count("B", a, b)
            if x != y:
                raise SymmetryViolated(
                    f"A[{b}][{a}] = {x} but B[{a}][{b}] = {y}"
                )


def _level_name(base: str, level: int) -> str:
    return f"({base},{-level})"


def _flat_arrows(data: ARSummandData, level: int) -> list[Arrow]:
    return [
        Arrow(_level_name(a.src, level), _level_name(a.dst, level), None, a.mult)
        for a in data.base_quiver.arrows
    ]


def build_odd_quiver(data: ARSummandData, copies: int = 1) -> ColoredQuiver:
    """Quiver of the shifted sum in the odd layout.

    Levels ``0 .. 2*copies - 1`` each carry the base quiver; block ``c``
    consists of levels ``c`` and ``c + copies`` joined by cross arrows
    ``(b, c) -> (a, c + copies)`` with multiplicity ``A[a][b]``.  The
    blocks are pairwise disconnected and the vertex order groups them,
    so the product structure is visible in the output.
    """
    validate_ar_symmetry(data, "odd")
    if copies < 1:
        raise BadRange(f"need at least one copy, got {copies}")
    verts: list[str] = []
    arrows: list[Arrow] = []
    base_verts = data.base_quiver.vertices
    for c in range(copies):
        for level in (c, c + copies):
            verts.extend(_level_name(x, level) for x in base_verts)
        arrows.extend(_flat_arrows(data, c))
        arrows.extend(_flat_arrows(data, c + copies))
        for b in base_verts:
            for a in base_verts:
                m = data.count("A", a, b)
                if m:
                    arrows.append(
                        Arrow(_level_name(b, c), _level_name(a, c + copies), None, m)
                    )
    return ColoredQuiver(verts, arrows)


def build_even_quiver(data: ARSummandData, n: int, validate: bool = True) -> ColoredQuiver:
    """Quiver of the shifted sum in the even layout.

    Levels ``0 .. 2n`` each carry the base quiver.  On top of that there
    are arrows ``(a, i) -> (b, i + n)`` with multiplicity ``A[b][a]``
    for ``0 <= i <= n`` and ``(a, i) -> (b, i + n + 1)`` with
    multiplicity ``B[b][a]`` for ``0 <= i <= n - 1``; no other level
    differences occur.  ``validate=False`` skips the symmetry check
    (table ``B`` is still required).
    """
    data.validate()
    if n < 1:
        raise BadRange(f"need n >= 1, got {n}")
    if data.B is None:
        raise MissingB("the even layout needs the second multiplicity table B")
    if validate:
        validate_ar_symmetry(data, "even")
    base_verts = data.base_quiver.vertices
    verts = [_level_name(x, i) for i in range(2 * n + 1) for x in base_verts]
    arrows: list[Arrow] = []
    for i in range(2 * n + 1):
        arrows.extend(_flat_arrows(data, i))
    for i in range(n + 1):
        for a in base_verts:
            for b in base_verts:
                m = data.count("A", b, a)
                if m:
                    arrows.append(
                        Arrow(_level_name(a, i), _level_name(b, i + n), None, m)
                    )
    for i in range(n):
        for a in base_verts:
            for b in base_verts:
                m = data.count("B", b, a)
                if m:
                    arrows.append(
                        Arrow(_level_name(a, i), _level_name(b, i + n + 1), None, m)
                    )
    return ColoredQuiver(verts, arrows)


def star_quiver(n: int, m: int) -> ColoredQuiver:
    """Even-layout quiver over a single vertex, relabelled ``0 .. 2n``.

    Every arrow bundle has multiplicity ``m``; for ``n = 1`` this is the
    triangle with ``m``-fold sides.
    """
    if m < 1:
        raise BadRange(f"need m >= 1, got {m}")
    point = ColoredQuiver(["0"], [])
    data = ARSummandData(point, {"0": {"0": m}}, {"0": {"0": m}})
    q = build_even_quiver(data, n)
    names = {_level_name("0", i): str(i) for i in range(2 * n + 1)}
    return ColoredQuiver(
        [names[v] for v in q.vertices],
        [Arrow(names[a.src], names[a.dst], a.color, a.mult) for a in q.arrows],
    )
