"""Command line interface.

Subcommands: len, factor, split, window, nullity, genfun, render-svg,
oracle.  Exit codes: 0 success, 2 bad input, 3 unsupported type,
4 budget exceeded.

Element grammar (for --element):

  "lambda=(1,-1,0); word=s1 s2"   translation by lambda, then the word
                                  in simple reflections (either part
                                  may be omitted)
  "refl(2,0) refl(1,1)"           product of affine reflections, i-th
                                  positive root line (1-based) at the
                                  given integer level

Vectors are comma-separated rationals in parentheses; windows are
comma-separated integers in brackets.
"""

from __future__ import annotations

import argparse
import json
import os
import re
import sys
from fractions import Fraction as Q

from .errors import BudgetExceeded, ParseError, UnsupportedTypeError
from .linalg import Vec, vec
from .rootsys import RootSystem, root_system
from .affgroup import (
    AffineElement,
    AffineReflection,
    compose,
    identity_element,
    product,
    require_group_element,
    translation_element,
)
from .reflen import (
    DEFAULT_HURWITZ_BUDGET,
    dimension_report,
    min_factorization,
    translation_elliptic_split,
)
from .affsym import (
    Window,
    cycles,
    good_origin_split,
    minimal_null_blocks,
    null_complex,
    nullity,
    proper_basic_null_block_count,
    reflection_length,
    relative_nullity,
)
from .genfun import classify_coroots, local_genfun
from .oracle import brute_nullity, brute_reflection_length
from .render import render_alcoves, render_classes


def _default_budget() -> int:
    raw = os.environ.get("COXLEN_BUDGET")
    if raw is None:
        return DEFAULT_HURWITZ_BUDGET
    try:
        return int(raw)
    except ValueError as ex:
        raise ParseError(f"COXLEN_BUDGET must be an integer, got {raw!r}") from ex


def parse_vector(text: str) -> Vec:
    m = re.fullmatch(r"\s*\(([^()]*)\)\s*", text)
    if not m:
        raise ParseError(f"expected a vector like (1,-1,0), got {text!r}")
    entries = [p.strip() for p in m.group(1).split(",") if p.strip()]
    if not entries:
        raise ParseError("empty vector")
    out = []
    for p in entries:
        try:
            out.append(Q(p))
        except (ValueError, ZeroDivisionError) as ex:
            raise ParseError(f"bad vector entry {p!r}") from ex
    return vec(out)


def parse_window_text(text: str) -> Window:
    m = re.fullmatch(r"\s*\[([^\[\]]*)\]\s*", text)
    if not m:
        raise ParseError(f"expected a window like [4,2,0], got {text!r}")
    entries = [p.strip() for p in m.group(1).split(",") if p.strip()]
    if not entries:
        raise ParseError("empty window")
    try:
        values = tuple(int(p) for p in entries)
    except ValueError as ex:
        raise ParseError(f"window entries must be integers: {text!r}") from ex
    return Window(values)


def parse_element(rs: RootSystem, text: str) -> AffineElement:
    text = text.strip()
    if not text:
        raise ParseError("empty element")
    if text.startswith("refl"):
        return _parse_reflection_product(rs, text)
    lam = None
    word: list[int] = []
    for part in text.split(";"):
        part = part.strip()
        if not part:
            continue
        key, _, value = part.partition("=")
        key = key.strip()
        if key == "lambda":
            lam = parse_vector(value)
            if len(lam) != rs.ambient_dim:
                raise ParseError(
                    f"lambda has {len(lam)} coordinates, {rs.spec} lives in "
                    f"dimension {rs.ambient_dim}"
                )
        elif key == "word":
            for tok in value.split():
                m = re.fullmatch(r"s(\d+)", tok)
                if not m or not 1 <= int(m.group(1)) <= rs.rank:
                    raise ParseError(
                        f"word letters are s1..s{rs.rank}, got {tok!r}"
                    )
                word.append(int(m.group(1)) - 1)
        else:
            raise ParseError(f"unknown element field {key!r}")
    el = identity_element(rs.ambient_dim)
    for i in word:
        el = compose(el, AffineReflection.make(rs.simple_roots[i], 0).to_element())
    if lam is not None:
        el = compose(translation_element(lam), el)
    return el


def _parse_reflection_product(rs: RootSystem, text: str) -> AffineElement:
    tokens = text.split()
    factors = []
    for tok in tokens:
        m = re.fullmatch(r"refl\(\s*(-?\d+)\s*,\s*(-?\d+)\s*\)", tok)
        if not m:
            raise ParseError(f"expected refl(i,j), got {tok!r}")
        i, j = int(m.group(1)), int(m.group(2))
        if not 1 <= i <= len(rs.positive_roots):
            raise ParseError(
                f"root index {i} out of range 1..{len(rs.positive_roots)} for {rs.spec}"
            )
        factors.append(AffineReflection.make(rs.positive_roots[i - 1], j))
    return product(factors)


def _q_str(x: Q) -> str:
    return str(x)


def _vec_json(v: Vec) -> list[str]:
    return [_q_str(x) for x in v]


def _vec_str(v: Vec) -> str:
    return "(" + ", ".join(_q_str(x) for x in v) + ")"


def _refl_strs(factors) -> list[str]:
    return [f"root={_vec_str(r.root)} level={r.level}" for r in factors]


def cmd_len(args) -> int:
    rs = root_system(args.type)
    w = parse_element(rs, args.element)
    require_group_element(rs, w)
    rep = dimension_report(rs, w)
    payload = {
        "type": str(rs.spec),
        "e": rep.e,
        "d": rep.d,
        "dim": rep.dim,
        "length": rep.length,
        "witness_roots": [_vec_json(r) for r in rep.witness_roots],
    }
    if args.verify:
        res = brute_reflection_length(rs, w)
        payload["oracle_length"] = res.length
        payload["oracle_certified"] = res.certified
        payload["oracle_agrees"] = res.length == rep.length
    if args.json:
        print(json.dumps(payload))
    else:
        print(f"type {payload['type']}")
        print(f"e = {rep.e}  d = {rep.d}  dim = {rep.dim}")
        print(f"reflection length = {rep.length}")
        print("witness roots: " + ", ".join(_vec_str(r) for r in rep.witness_roots))
        if args.verify:
            tag = "agrees" if payload["oracle_agrees"] else "DISAGREES"
            cert = "certified" if res.certified else "uncertified"
            print(f"oracle: {res.length} ({cert}, {tag})")
    if args.verify and not payload["oracle_agrees"]:
        return 1
    return 0


def cmd_factor(args) -> int:
    rs = root_system(args.type)
    w = parse_element(rs, args.element)
    f = min_factorization(rs, w)
    payload = {
        "type": str(rs.spec),
        "length": len(f.factors),
        "factors": [
            {"root": _vec_json(r.root), "level": r.level} for r in f.factors
        ],
    }
    if args.json:
        print(json.dumps(payload))
    else:
        print(f"type {payload['type']}: {len(f.factors)} reflections")
        for line in _refl_strs(f.factors):
            print("  " + line)
    return 0


def cmd_split(args) -> int:
    rs = root_system(args.type)
    w = parse_element(rs, args.element)
    t, u = translation_elliptic_split(rs, w, budget=args.budget)
    rep_t = dimension_report(rs, t)
    rep_u = dimension_report(rs, u)
    payload = {
        "type": str(rs.spec),
        "translation": _vec_json(t.translation),
        "translation_length": rep_t.length,
        "elliptic_length": rep_u.length,
        "elliptic_factors": [
            {"root": _vec_json(r.root), "level": r.level}
            for r in min_factorization(rs, u).factors
        ],
    }
    if args.json:
        print(json.dumps(payload))
    else:
        print(f"type {payload['type']}")
        print(f"translation part {_vec_str(t.translation)} of length {rep_t.length}")
        print(f"elliptic part of length {rep_u.length}, factors:")
        for line in _refl_strs(min_factorization(rs, u).factors):
            print("  " + line)
    return 0


def cmd_window(args) -> int:
    win = parse_window_text(args.window)
    lam, pi = win.normal_form()
    n = len(win.values)
    origin, (t, u) = good_origin_split(win, budget=args.budget)
    rep_len = reflection_length(win)
    cyc = [sorted(b) for b in cycles(pi).blocks]
    payload = {
        "n": n,
        "lambda": list(lam),
        "permutation": list(pi),
        "cycles": cyc,
        "relative_nullity": relative_nullity(lam, pi),
        "length": rep_len,
        "good_origin": _vec_json(origin),
        "translation_part": _vec_json(t.translation),
    }
    if args.json:
        print(json.dumps(payload))
    else:
        print(f"n = {n}")
        print(f"normal form: lambda = {tuple(lam)}, permutation = {tuple(pi)}")
        print(f"cycles: {cyc}")
        print(f"relative nullity = {payload['relative_nullity']}")
        print(f"reflection length = {rep_len}")
        print(f"good origin = {_vec_str(origin)}")
        print(f"translation part = {_vec_str(t.translation)}")
    return 0


def cmd_nullity(args) -> int:
    v = parse_vector(args.vector)
    if any(x.denominator != 1 for x in v):
        raise ParseError("nullity vectors must have integer entries")
    iv = tuple(int(x) for x in v)
    blocks = minimal_null_blocks(iv)
    cx = null_complex(iv)
    payload = {
        "vector": list(iv),
        "minimal_null_blocks": [sorted(b) for b in blocks],
        "proper_basic_null_blocks": proper_basic_null_block_count(iv),
        "complex_vertices": len(cx.vertices),
        "complex_edges": len(cx.edges),
        "maximal_cliques": [
            [sorted(b) for b in c] for c in cx.maximal_cliques
        ],
        "nullity": nullity(iv),
    }
    if args.verify:
        payload["oracle_nullity"] = brute_nullity(iv)
        payload["oracle_agrees"] = payload["oracle_nullity"] == payload["nullity"]
    if args.json:
        print(json.dumps(payload))
    else:
        print(f"vector {iv}")
        print(f"minimal null blocks ({len(blocks)}): "
              + " ".join("{" + ",".join(map(str, sorted(b))) + "}" for b in blocks))
        print(f"proper basic null blocks: {payload['proper_basic_null_blocks']}")
        print(f"disjointness complex: {len(cx.vertices)} vertices, {len(cx.edges)} edges")
        print(f"maximal cliques: {payload['maximal_cliques']}")
        print(f"nullity = {payload['nullity']}")
        if args.verify:
            tag = "agrees" if payload["oracle_agrees"] else "DISAGREES"
            print(f"oracle nullity = {payload['oracle_nullity']} ({tag})")
    if args.verify and not payload["oracle_agrees"]:
        return 1
    return 0


def cmd_genfun(args) -> int:
    rs = root_system(args.type)
    if args.classify is not None:
        classes = classify_coroots(rs, args.classify)
        payload = {
            "type": str(rs.spec),
            "radius": args.classify,
            "classes": [
                {
                    "polynomial": f.format(),
                    "terms": f.to_json_terms(),
                    "points": len(pts),
                    "sample": _vec_json(pts[0]),
                }
                for f, pts in classes.items()
            ],
        }
        if args.json:
            print(json.dumps(payload))
        else:
            print(f"type {payload['type']}, radius {args.classify}: "
                  f"{len(classes)} classes")
            for entry in payload["classes"]:
                print(f"  [{entry['points']:4d} points] {entry['polynomial']}")
        return 0
    if args.lam is None:
        raise ParseError("genfun needs either --lambda or --classify")
    lam = parse_vector(args.lam)
    if len(lam) != rs.ambient_dim:
        raise ParseError(
            f"lambda has {len(lam)} coordinates, {rs.spec} lives in "
            f"dimension {rs.ambient_dim}"
        )
    f = local_genfun(rs, lam)
    payload = {
        "type": str(rs.spec),
        "lambda": _vec_json(lam),
        "polynomial": f.format(),
        "terms": f.to_json_terms(),
        "specialized": list(f.specialize()),
    }
    if args.json:
        print(json.dumps(payload))
    else:
        print(f"f_lambda(s,t) = {f.format()}")
        print(f"f_lambda(t^2,t) coefficients: {list(f.specialize())}")
    return 0


def cmd_render(args) -> int:
    rs = root_system(args.type)
    if args.mode == "alcoves":
        svg = render_alcoves(rs, args.radius)
    else:
        svg = render_classes(rs, int(args.radius))
    if args.out == "-":
        sys.stdout.write(svg)
    else:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(svg)
        print(f"wrote {args.out}")
    return 0


def cmd_oracle(args) -> int:
    rs = root_system(args.type)
    w = parse_element(rs, args.element)
    res = brute_reflection_length(
        rs, w, level_bound=args.level_bound, depth_bound=args.depth_bound
    )
    payload = {
        "type": str(rs.spec),
        "length": res.length,
        "certified": res.certified,
        "level_bound": res.level_bound,
        "depth_bound": res.depth_bound,
    }
    if args.json:
        print(json.dumps(payload))
    else:
        state = "certified" if res.certified else "uncertified"
        print(f"oracle length = {res.length} ({state}, levels up to "
              f"{res.level_bound}, depth up to {res.depth_bound})")
    return 0


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="coxlen",
        description="Reflection length in affine Coxeter groups: exact "
        "lengths, factorisations, splits, null statistics, generating "
        "functions, renderings, and brute-force certification.",
    )
    sub = ap.add_subparsers(dest="command", required=True)

    def add_common(p, element=True):
        if element:
            p.add_argument("--type", required=True, help="root system, e.g. A2, B3, G2")
            p.add_argument("--element", required=True, help="see module docstring")
        p.add_argument("--json", action="store_true", help="machine-readable output")

    p = sub.add_parser("len", help="reflection length and dimensions")
    add_common(p)
    p.add_argument("--verify", action="store_true", help="cross-check with the oracle")
    p.set_defaults(func=cmd_len)

    p = sub.add_parser("factor", help="minimum-length reflection factorisation")
    add_common(p)
    p.set_defaults(func=cmd_factor)

    p = sub.add_parser("split", help="translation * elliptic splitting")
    add_common(p)
    p.add_argument("--budget", type=int, default=None, help="Hurwitz search cap")
    p.set_defaults(func=cmd_split)

    p = sub.add_parser("window", help="affine permutation from window notation")
    p.add_argument("--window", required=True, help="e.g. [4,2,0]")
    p.add_argument("--budget", type=int, default=None)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_window)

    p = sub.add_parser("nullity", help="null partition statistics of a vector")
    p.add_argument("--vector", required=True, help="e.g. (-3,-2,-2,-1,1,2,5)")
    p.add_argument("--verify", action="store_true")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_nullity)

    p = sub.add_parser("genfun", help="local generating function at lambda")
    p.add_argument("--type", required=True)
    p.add_argument("--lambda", dest="lam", default=None, help="vector in the coroot lattice")
    p.add_argument("--classify", type=int, default=None, metavar="RADIUS",
                   help="classify the whole coefficient box instead")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_genfun)

    p = sub.add_parser("render-svg", help="deterministic SVG picture")
    p.add_argument("--type", required=True)
    p.add_argument("--mode", choices=["alcoves", "classes"], default="alcoves")
    p.add_argument("--radius", type=float, default=3.0,
                   help="Euclidean radius (alcoves) or coefficient radius (classes)")
    p.add_argument("--out", required=True, help="output path, or - for stdout")
    p.set_defaults(func=cmd_render)

    p = sub.add_parser("oracle", help="brute-force certified length")
    add_common(p)
    p.add_argument("--level-bound", type=int, default=None)
    p.add_argument("--depth-bound", type=int, default=None)
    p.set_defaults(func=cmd_oracle)

    return ap


def main(argv=None) -> int:
    ap = build_parser()
    args = ap.parse_args(argv)
    try:
        if hasattr(args, "budget") and args.budget is None:
            args.budget = _default_budget()
        if hasattr(args, "radius") and args.radius <= 0:
            raise ParseError("radius must be positive")
        return args.func(args)
    except ParseError as ex:
        print(f"error: {ex}", file=sys.stderr)
        return 2
    except UnsupportedTypeError as ex:
        print(f"error: {ex}", file=sys.stderr)
        return 3
    except BudgetExceeded as ex:
        print(f"error: {ex}", file=sys.stderr)
        return 4
    except ValueError as ex:
        print(f"error: {ex}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
