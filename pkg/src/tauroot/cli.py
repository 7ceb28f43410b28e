"""Command line driver.

Each subcommand prints one deterministic payload to stdout — JSON in the
library schemas, or DOT where ``--dot`` applies — so identical flags and
files always give byte-identical output.  Exit codes: 0 on success, 1
when the library rejects the input (any :class:`QuiverError`), 2 for
usage problems (bad flags, unreadable files).
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from typing import Optional, Sequence

from .cyreduce import AlgebraPresentation, reduction_report
from .errors import ParseError, QuiverError, SchemaError
from .mckay import (
    CyclicWeights,
    ar_angle,
    h_quiver_d3,
    h_quiver_d4,
    is_hereditary_quotient,
    mckay_quiver,
    normalize_kept,
)
from .quiver import ColoredQuiver, deserialize, dynkin_quiver, parse_dot, serialize, to_dot
from .shiftedsum import star_quiver
from .ztranslation import (
    NormalFormPartition,
    autom_from_obj,
    autom_to_obj,
    build_window,
    check_root_normal_form,
    construct_F_section,
    find_tau_roots,
    is_section,
    no_backward_arrows,
    root_from_normal_form,
)

OFFSET_BOUND_ENV = "TAUROOT_OFFSET_BOUND"


def _emit_json(obj) -> str:
    return json.dumps(obj, indent=2, ensure_ascii=False)


def _quiver_obj(q: ColoredQuiver) -> dict:
    return json.loads(serialize(q))


def _read_text(path: str) -> str:
    with open(path, "r", encoding="utf-8") as fh:
        return fh.read()


def _load_json(path: str):
    text = _read_text(path)
    try:
        return json.loads(text)
    except json.JSONDecodeError as e:
        raise ParseError(f"{path}: line {e.lineno} column {e.colno}: {e.msg}") from None


def _load_quiver(path: str) -> ColoredQuiver:
    return deserialize(_read_text(path))


def _int_list(text: str) -> list[int]:
    return [int(part) for part in text.split(",") if part != ""]


def _str_list(text: str) -> list[str]:
    return [part for part in text.split(",") if part != ""]


def _weights(args) -> CyclicWeights:
    return CyclicWeights(args.n, tuple(args.weights))


def _offset_bound(args) -> Optional[int]:
    if args.offset_bound is not None:
        return args.offset_bound
    env = os.environ.get(OFFSET_BOUND_ENV)
    if env is None or env == "":
        return None
    try:
        return int(env)
    except ValueError:
        raise SchemaError(f"{OFFSET_BOUND_ENV} must be an integer, got {env!r}") from None


def _vertex_obj(v) -> dict:
    return {"base": v.base, "level": v.level}


# --------------------------------------------------------------------------
# subcommands
# --------------------------------------------------------------------------


def _cmd_mckay(args) -> str:
    w = _weights(args)
    q = mckay_quiver(w)
    if args.kept is None:
        return to_dot(q, name="mckay") if args.dot else serialize(q)
    kept = [str(k) for k in normalize_kept(w, args.kept)]
    quotient = q.induced(kept)
    if not is_hereditary_quotient(q, kept):
        verdict = "not hereditary"
    elif not quotient.arrows:
        verdict = "semisimple hereditary"
    else:
        verdict = "hereditary"
    if args.dot:
        return f"// verdict: {verdict}\n" + to_dot(quotient, name="quotient")
    return _emit_json(
        {
            "quiver": _quiver_obj(q),
            "kept": kept,
            "verdict": verdict,
            "quotient": _quiver_obj(quotient),
        }
    )


def _cmd_hquiver(args) -> str:
    w = _weights(args)
    build = h_quiver_d3 if args.dim == 3 else h_quiver_d4
    q = build(w, args.kept)
    return to_dot(q, name="H") if args.dot else serialize(q)


def _cmd_ar_angle(args) -> str:
    w = _weights(args)
    return _emit_json(ar_angle(w, args.kept, args.j).to_obj())


def _cmd_cy_reduce(args) -> str:
    p = AlgebraPresentation.from_obj(_load_json(args.presentation))
    report = reduction_report(p, args.removed)
    if args.dot:
        return to_dot(report.quiver, name="reduced")
    return _emit_json(report.to_obj())


def _cmd_root_search(args) -> str:
    q = _load_quiver(args.quiver)
    roots = find_tau_roots(q, args.l, offset_bound=_offset_bound(args))
    return _emit_json([autom_to_obj(f) for f in roots])


def _cmd_f_section(args) -> str:
    q = _load_quiver(args.quiver)
    f = autom_from_obj(_load_json(args.autom))
    l = args.l
    t = construct_F_section(q, f, l)
    span = [f.apply_power(v, i) for i in range(l) for v in t]
    levels = [v.level for v in span]
    w = build_window(q, min(levels) - 2, max(levels) + 2)
    return _emit_json(
        {
            "T": [_vertex_obj(v) for v in t],
            "section": [_vertex_obj(v) for v in span],
            "is_section": is_section(w, span),
            "no_backward_arrows": no_backward_arrows(q, f, l, t),
        }
    )


def _cmd_normal_form(args) -> str:
    q = _load_quiver(args.quiver)
    p = NormalFormPartition.from_obj(_load_json(args.partition))
    valid = check_root_normal_form(q, args.l, p)
    root = autom_to_obj(root_from_normal_form(q, args.l, p)) if valid else None
    return _emit_json({"valid": valid, "root": root})


def _cmd_star(args) -> str:
    q = star_quiver(args.n, args.m)
    return to_dot(q, name="star") if args.dot else serialize(q)


def _cmd_dynkin_survey(args) -> str:
    rows = []
    for name in args.family:
        q = dynkin_quiver(name)
        for l in range(2, args.lmax + 1):
            roots = find_tau_roots(q, l, offset_bound=_offset_bound(args))
            rows.append(
                {
                    "family": name,
                    "l": l,
                    "root_exists": bool(roots),
                    "count": len(roots),
                }
            )
    return _emit_json(rows)


def _cmd_convert(args) -> str:
    text = _read_text(args.quiver)
    if text.lstrip().startswith("{"):
        return to_dot(deserialize(text), name=args.name)
    return serialize(parse_dot(text))


# --------------------------------------------------------------------------
# parser
# --------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="tauroot",
        description="Translation quivers, roots of their translation, and "
        "quivers of shifted-sum endomorphism algebras.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def weights_flags(p):
        p.add_argument("--n", type=int, required=True, help="order of the cyclic group")
        p.add_argument(
            "--weights",
            type=_int_list,
            required=True,
            help="comma-separated weights, e.g. 1,3,3,3",
        )

    p = sub.add_parser("mckay", help="McKay quiver of a cyclic weight system")
    weights_flags(p)
    p.add_argument("--kept", type=_int_list, help="vertices of the idempotent quotient")
    p.add_argument("--dot", action="store_true", help="emit DOT instead of JSON")
    p.set_defaults(func=_cmd_mckay)

    p = sub.add_parser("hquiver", help="two- or three-level endomorphism quiver")
    weights_flags(p)
    p.add_argument("--kept", type=_int_list, required=True)
    p.add_argument("--dim", type=int, choices=(3, 4), required=True)
    p.add_argument("--dot", action="store_true")
    p.set_defaults(func=_cmd_hquiver)

    p = sub.add_parser("ar-angle", help="middle terms of the AR angle at a vertex")
    weights_flags(p)
    p.add_argument("--kept", type=_int_list, required=True)
    p.add_argument("--j", type=int, required=True, help="source vertex")
    p.set_defaults(func=_cmd_ar_angle)

    p = sub.add_parser("cy-reduce", help="double a presented algebra and report")
    p.add_argument("--presentation", required=True, metavar="FILE")
    p.add_argument("--removed", type=_str_list, default=[], help="vertices to delete")
    p.add_argument("--dot", action="store_true")
    p.set_defaults(func=_cmd_cy_reduce)

    p = sub.add_parser("root-search", help="all l-th roots of the inverse translation")
    p.add_argument("--quiver", required=True, metavar="FILE")
    p.add_argument("--l", type=int, required=True)
    p.add_argument("--offset-bound", type=int, help=f"overrides ${OFFSET_BOUND_ENV}")
    p.set_defaults(func=_cmd_root_search)

    p = sub.add_parser("f-section", help="canonical slice of a root and its checks")
    p.add_argument("--quiver", required=True, metavar="FILE")
    p.add_argument("--autom", required=True, metavar="FILE")
    p.add_argument("--l", type=int, required=True)
    p.set_defaults(func=_cmd_f_section)

    p = sub.add_parser("normal-form", help="verify a cyclic normal form partition")
    p.add_argument("--quiver", required=True, metavar="FILE")
    p.add_argument("--l", type=int, required=True)
    p.add_argument("--partition", required=True, metavar="FILE")
    p.set_defaults(func=_cmd_normal_form)

    p = sub.add_parser("star", help="cyclic one-vertex shifted-sum quiver")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--m", type=int, required=True, help="bundle multiplicity")
    p.add_argument("--dot", action="store_true")
    p.set_defaults(func=_cmd_star)

    p = sub.add_parser("dynkin-survey", help="root existence across Dynkin quivers")
    p.add_argument(
        "--family",
        type=_str_list,
        required=True,
        help="comma-separated diagram names, e.g. A2,A3,D4",
    )
    p.add_argument("--lmax", type=int, required=True)
    p.add_argument("--offset-bound", type=int, help=f"overrides ${OFFSET_BOUND_ENV}")
    p.set_defaults(func=_cmd_dynkin_survey)

    p = sub.add_parser("convert", help="JSON quiver to DOT, or DOT to JSON")
    p.add_argument("--quiver", required=True, metavar="FILE")
    p.add_argument("--name", default="Q", help="graph name for DOT output")
    p.set_defaults(func=_cmd_convert)

    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        payload = args.func(args)
    except QuiverError as e:
        print(f"error: {e}", file=sys.stderr)
        return 1
    except OSError as e:
        print(f"error: {e}", file=sys.stderr)
        return 2
    if not payload.endswith("\n"):
        payload += "\n"
    sys.stdout.write(payload)
    return 0


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
