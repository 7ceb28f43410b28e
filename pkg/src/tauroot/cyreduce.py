"""Doubling a presented algebra into the hereditary quiver of A ⊕ A[−1].

Input: an acyclic quiver Q with a minimal set of relations R (recorded by
their endpoint pairs, optionally with the set of vertices their paths run
through), plus a set E of vertices to remove.  Output: the quiver Q̃ on two
copies of Q∖E — every surviving arrow appears on both copies, and every
surviving relation a⇝b contributes the two cross arrows a→b′ and b→a′.

The quotient-hereditariness hypothesis behind the construction cannot be
decided from endpoints alone; `hereditary_proxy_check` reports the cheap
combinatorial obstructions instead, and `reduction_report` bundles the
quiver with a normal-form check, a Dynkin classification per component,
and the resulting applicability verdict.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Iterable

from .errors import BadRemovedSet, SchemaError
from .quiver import (
    Arrow,
    ColoredQuiver,
    DynkinLabel,
    dynkin_classify,
    quiver_from_obj,
    serialize,
)
from .ztranslation import NormalFormPartition, check_root_normal_form

__all__ = [
    "Relation",
    "AlgebraPresentation",
    "ReductionReport",
    "cy_reduce_quiver",
    "hereditary_proxy_check",
    "reduction_report",
    "prime",
]


def prime(v: str) -> str:
    """Name of the second-copy vertex."""
    return v + "'"


@dataclass(frozen=True)
class Relation:
    """A relation with source/target vertices and an optional support set.

    The support lists the vertices the relation's paths pass through; when
    known it lets the proxy check decide exactly whether removing E kills
    the relation.
    """

    src: str
    dst: str
    support: tuple[str, ...] | None = None


@dataclass(frozen=True)
class AlgebraPresentation:
    """An acyclic quiver with a minimal set of relations."""

    quiver: ColoredQuiver
    relations: tuple[Relation, ...]

    def __init__(self, quiver: ColoredQuiver, relations: Iterable = ()):
        rels = []
        for r in relations:
            if isinstance(r, Relation):
                rels.append(r)
            elif isinstance(r, (tuple, list)) and len(r) == 2:
                rels.append(Relation(r[0], r[1]))
            else:
                raise SchemaError(f"cannot interpret {r!r} as a relation")
        object.__setattr__(self, "quiver", quiver)
        object.__setattr__(self, "relations", tuple(rels))

    def validate(self) -> None:
        self.quiver.validate()
        vset = set(self.quiver.vertices)
        for r in self.relations:
            for v in (r.src, r.dst):
                if v not in vset:
                    raise SchemaError(f"relation endpoint {v!r} is not a vertex")
            if r.support is not None:
                for v in r.support:
                    if v not in vset:
                        raise SchemaError(f"relation support vertex {v!r} is not a vertex")

    def to_obj(self) -> dict:
        return {
            "quiver": json.loads(serialize(self.quiver)),
            "relations": [
                {
                    "src": r.src,
                    "dst": r.dst,
                    "support": list(r.support) if r.support is not None else None,
                }
                for r in self.relations
            ],
        }

    @classmethod
    def from_obj(cls, obj) -> "AlgebraPresentation":
        if not isinstance(obj, dict) or "quiver" not in obj:
            raise SchemaError("a presentation object needs the field 'quiver'")
        q = quiver_from_obj(obj["quiver"], where="$.quiver")
        rels = []
        for i, rec in enumerate(obj.get("relations", [])):
            loc = f"$.relations[{i}]"
            if not isinstance(rec, dict) or "src" not in rec or "dst" not in rec:
                raise SchemaError(f"{loc}: expected an object with 'src' and 'dst'")
            support = rec.get("support")
            if support is not None:
                if not isinstance(support, list) or not all(isinstance(v, str) for v in support):
                    raise SchemaError(f"{loc}.support: expected a list of vertex ids or null")
                support = tuple(support)
            rels.append(Relation(rec["src"], rec["dst"], support))
        p = cls(q, rels)
        p.validate()
        return p


def _check_removed(p: AlgebraPresentation, removed: Iterable[str]) -> set[str]:
    p.validate()
    removed = set(removed)
    unknown = removed - set(p.quiver.vertices)
    if unknown:
        raise BadRemovedSet(f"not vertices of the quiver: {sorted(unknown)}")
    return removed


def cy_reduce_quiver(p: AlgebraPresentation, removed: Iterable[str]) -> ColoredQuiver:
    """Two copies of Q∖E plus a pair of cross arrows per surviving relation.

    Copy-0 vertices keep their names; copy-1 vertices get a prime suffix.
    A relation (a, b) with both endpoints surviving adds one arrow a→b′ and
    one arrow b→a′; several relations on the same endpoints accumulate.
    """
    e = _check_removed(p, removed)
    kept = [v for v in p.quiver.vertices if v not in e]
    sub = p.quiver.induced(kept).uncolored()
    vertices = kept + [prime(v) for v in kept]
    merged: dict[tuple[str, str], int] = {}
    order: list[tuple[str, str]] = []

    def add(src: str, dst: str, m: int) -> None:
        k = (src, dst)
        if k not in merged:
            merged[k] = 0
            order.append(k)
        merged[k] += m

    for a in sub.arrows:
        add(a.src, a.dst, a.mult)
    for a in sub.arrows:
        add(prime(a.src), prime(a.dst), a.mult)
    for r in p.relations:
        if r.src not in e and r.dst not in e:
            add(r.src, prime(r.dst), 1)
            add(r.dst, prime(r.src), 1)
    q = ColoredQuiver(vertices, [Arrow(s, d, None, merged[(s, d)]) for (s, d) in order])
    q.validate()
    return q


def hereditary_proxy_check(p: AlgebraPresentation, removed: Iterable[str]) -> list[str]:
    """Warnings for relations that may survive into the quotient.

    A relation whose support set is given is cleared exactly when the
    support meets the removed set.  Without a support set, a warning is
    emitted when a directed path from its source to its target still exists
    in Q∖E — a proxy: the real hereditariness hypothesis is about the
    algebra, not just the quiver, and stays the caller's responsibility.
    """
    e = _check_removed(p, removed)
    kept = [v for v in p.quiver.vertices if v not in e]
    sub = p.quiver.induced(kept)
    succ: dict[str, set[str]] = {v: set() for v in kept}
    for a in sub.arrows:
        succ[a.src].add(a.dst)

    def reachable(a: str, b: str) -> bool:
        seen, stack = set(), [a]
        while stack:
            x = stack.pop()
            for y in succ[x]:
                if y == b:
                    return True
                if y not in seen:
                    seen.add(y)
                    stack.append(y)
        return False

    warnings = []
    for r in p.relations:
        if r.src in e or r.dst in e:
            continue
        if r.support is not None:
            if not (set(r.support) & e):
                warnings.append(
                    f"relation {r.src} -> {r.dst}: its support {sorted(r.support)} does"
                    " not meet the removed set, so it survives the quotient"
                )
        elif reachable(r.src, r.dst):
            warnings.append(
                f"relation {r.src} -> {r.dst}: a directed path between its endpoints"
                " survives the vertex removal, so it may survive the quotient"
            )
    return warnings


@dataclass(frozen=True)
class ReductionReport:
    """Everything the doubling rule can say about one input."""

    quiver: ColoredQuiver
    warnings: tuple[str, ...]
    normal_form_l2: bool
    components: tuple[DynkinLabel, ...]
    equivalence_statement_applies: bool
    empty: bool

    def to_obj(self) -> dict:
        return {
            "quiver": json.loads(serialize(self.quiver)),
            "warnings": list(self.warnings),
            "normal_form_l2": self.normal_form_l2,
            "components": [
                {
                    "vertices": list(lbl.vertices),
                    "label": lbl.name,
                    "finite_dynkin": lbl.is_finite_dynkin,
                }
                for lbl in self.components
            ],
            "equivalence_statement_applies": self.equivalence_statement_applies,
            "empty": self.empty,
        }


def reduction_report(p: AlgebraPresentation, removed: Iterable[str]) -> ReductionReport:
    """Build Q̃ and classify it.

    The verdict field is true exactly when no connected component of Q̃ is
    a finite Dynkin diagram (extended diagrams do not count as Dynkin); an
    empty Q̃ is flagged and passes vacuously.
    """
    e = _check_removed(p, removed)
    q = cy_reduce_quiver(p, e)
    warnings = tuple(hereditary_proxy_check(p, e))
    kept = [v for v in p.quiver.vertices if v not in e]
    if kept:
        part = NormalFormPartition([kept, [prime(v) for v in kept]])
        nf = check_root_normal_form(q, 2, part)
    else:
        nf = True
    labels = dynkin_classify(q)
    applies = all(not lbl.is_finite_dynkin for lbl in labels)
    return ReductionReport(
        quiver=q,
        warnings=warnings,
        normal_form_l2=nf,
        components=labels,
        equivalence_statement_applies=applies,
        empty=not kept,
    )
