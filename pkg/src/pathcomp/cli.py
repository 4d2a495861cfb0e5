"""Command-line interface: ``pathcomp <subcommand> ...``.

Results go to stdout as JSON.  Exit status is 0 on success, 1 on domain
errors (with the error name and any witness in the JSON body) and 2 on
usage errors.
"""

from __future__ import annotations

import argparse
import json
import os
import random
import sys

from . import approx, freegroup, product_realize, space_k, ternary
from .errors import PathCompError
from .render import RenderSpec, check_k_render, render


class UsageError(Exception):
    pass


def _point(text: str) -> space_k.PointK:
    return space_k.PointK.parse(text)


def _load_json(arg: str):
    """Inline JSON, or ``@path`` / an existing file path to read it from."""
    source = arg[1:] if arg.startswith("@") else arg
    if arg.startswith("@") or os.path.isfile(source):
        try:
            with open(source, encoding="utf-8") as fh:
                return json.load(fh)
        except OSError as exc:
            raise UsageError(f"cannot read {source}: {exc}") from exc
        except json.JSONDecodeError as exc:
            raise UsageError(f"{source}: invalid JSON: {exc}") from exc
    try:
        return json.loads(arg)
    except json.JSONDecodeError as exc:
        raise UsageError(f"invalid JSON argument: {exc}") from exc


def cmd_classify(args):
    x = ternary.as_rational(args.x)
    out = {"x": ternary.format_rational(x)}
    out.update(ternary.classify(x).to_json())
    out["ternary"] = str(ternary.ternary_expand(x))
    out["cantor"] = ternary.format_rational(ternary.cantor_function(x))
    return out


def cmd_member(args):
    x, _, y = args.point.partition(",")
    if not y:
        raise UsageError(f"point: expected 'x,y', got {args.point!r}")
    return {"x": x, "y": y, "member": space_k.member_k(x, y)}


def cmd_component(args):
    p = _point(args.point)
    return {"point": p.to_json(), "component": space_k.component_of(p).to_json(), "q": str(space_k.q_k(p))}


def cmd_path(args):
    p, q = _point(args.source), _point(args.target)
    return {"path": space_k.path(p, q).to_json()}


def cmd_witness(args):
    p, q = _point(args.source), _point(args.target)
    odd, even = space_k.separation_witness(p, q)
    return {"odd": odd.to_json(), "even": even.to_json()}


def cmd_fiber(args):
    ts = [ternary.as_rational(t) for t in args.t.split(",")]
    if len(ts) == 1:
        return {"fiber": space_k.fiber_k(ts[0]).to_json()}
    return {"fibers": product_realize.fiber_kd(ts).to_json()}


def cmd_approx(args):
    return approx.model_report(args.level, max_level=args.max_level)


def cmd_trace(args):
    return approx.trace_of_k(args.level, max_level=args.max_level).to_json()


def cmd_realize(args):
    region = product_realize.BoxRegion.from_json(_load_json(args.region))
    report = product_realize.realize_report(region, args.samples, random.Random(args.seed))
    out = report.to_json()
    out["seed"] = args.seed
    if not args.verbose:
        out.pop("outcomes")
    return out


def _word(args) -> freegroup.GroupWord:
    if args.word is None:
        raise UsageError("--word is required")
    return freegroup.GroupWord.from_json(_load_json(args.word))


def _basepoint(text: str | None, dim: int):
    if text is None:
        return (ternary.as_rational(0),) * dim
    return freegroup.letter(*text.split(","))


def cmd_word(args):
    op = args.op
    if op == "loop":
        if args.loop is None:
            raise UsageError("--loop is required for 'word loop'")
        loop = freegroup.CombinatorialLoop.from_json(_load_json(args.loop))
        out = {"markov": freegroup.loop_image(loop).to_json()}
        if args.basepoint is not None:
            base = _basepoint(args.basepoint, 0)
            out["graev"] = freegroup.suspension_image(loop, base).to_json()
        return out
    w = _word(args)
    dim = len(w.syllables[0][0]) if w.syllables else 1
    if op == "reduce":
        return {"word": freegroup.reduce(w).to_json()}
    if op == "graev":
        return {"word": freegroup.graev_reduce(w, _basepoint(args.basepoint, dim)).to_json()}
    if args.t is None:
        raise UsageError("--t is required for 'word contract'")
    return {"word": freegroup.contract(w, args.t).to_json(), "t": args.t}


def cmd_render(args):
    kwargs = {"output_path": args.out, "scale": args.scale, "level": args.level, "max_level": args.max_level}
    if args.subject == "path":
        if not (args.source and args.target):
            raise UsageError("render path needs --from and --to")
        kwargs["path"] = space_k.path(_point(args.source), _point(args.target))
    elif args.subject == "fiber":
        if args.t is None:
            raise UsageError("render fiber needs --t")
        kwargs["fiber"] = space_k.fiber_k(args.t)
    spec = RenderSpec(args.subject, **kwargs)
    text = render(spec)
    out = {"subject": args.subject, "out": args.out, "bytes": len(text)}
    if args.subject != "d":
        out["level"] = args.level
        out["problems"] = check_k_render(text, args.level)
    if not args.out:
        out["svg"] = text
    return out


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action=argparse.BooleanOptionalAction, default=True, help="emit JSON (default)")
    common.add_argument("--seed", type=int, default=0)
    common.add_argument("--max-level", type=int, default=approx.MAX_LEVEL)

    parser = argparse.ArgumentParser(prog="pathcomp", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("classify", parents=[common], help="classify a rational against the Cantor set")
    p.add_argument("x")
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("member", parents=[common], help="membership of x,y in K")
    p.add_argument("point")
    p.set_defaults(func=cmd_member)

    p = sub.add_parser("component", parents=[common], help="path component of a point of K")
    p.add_argument("point")
    p.set_defaults(func=cmd_component)

    for name, func, text in (
        ("path", cmd_path, "piecewise-linear path between two points of K"),
        ("witness", cmd_witness, "odd/even gap pair separating two components"),
    ):
        p = sub.add_parser(name, parents=[common], help=text)
        p.add_argument("--from", dest="source", required=True)
        p.add_argument("--to", dest="target", required=True)
        p.set_defaults(func=func)

    p = sub.add_parser("fiber", parents=[common], help="fiber of t (comma-separated for K^d)")
    p.add_argument("t")
    p.set_defaults(func=cmd_fiber)

    for name, func, text in (
        ("approx", cmd_approx, "homology and cell counts of the approximant K_n"),
        ("trace", cmd_trace, "grid cells meeting K and their connectivity"),
    ):
        p = sub.add_parser(name, parents=[common], help=text)
        p.add_argument("--level", type=int, required=True)
        p.set_defaults(func=func)

    p = sub.add_parser("realize", parents=[common], help="verify Y = Q^-1(X) for a box region")
    p.add_argument("--region", required=True, help="BoxRegion JSON, inline or @file")
    p.add_argument("--samples", type=int, default=10)
    p.add_argument("--verbose", action="store_true", help="include per-sample outcomes")
    p.set_defaults(func=cmd_realize)

    p = sub.add_parser("word", parents=[common], help="free group word operations")
    p.add_argument("op", choices=("reduce", "graev", "contract", "loop"))
    p.add_argument("--word", help="GroupWord JSON, inline or @file")
    p.add_argument("--loop", help="CombinatorialLoop JSON, inline or @file")
    p.add_argument("--basepoint", help="basepoint letter, comma-separated (default: origin)")
    p.add_argument("--t")
    p.set_defaults(func=cmd_word)

    p = sub.add_parser("render", parents=[common], help="write an SVG figure")
    p.add_argument("subject", choices=("k", "d", "path", "fiber"))
    p.add_argument("--out")
    p.add_argument("--level", type=int, default=3)
    p.add_argument("--scale", type=float, default=400.0)
    p.add_argument("--from", dest="source")
    p.add_argument("--to", dest="target")
    p.add_argument("--t")
    p.set_defaults(func=cmd_render)
    return parser


def _emit(payload, as_json: bool) -> None:
    if as_json:
        print(json.dumps(payload, indent=2))
        return
    for key, value in payload.items():
        print(f"{key}: {json.dumps(value) if isinstance(value, (dict, list)) else value}")


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        payload = args.func(args)
    except UsageError as exc:
        parser.print_usage(sys.stderr)
        print(f"pathcomp {args.command}: error: {exc}", file=sys.stderr)
        return 2
    except PathCompError as exc:
        _emit(exc.to_json(), args.json)
        return 1
    except (ValueError, TypeError) as exc:
        parser.print_usage(sys.stderr)
        print(f"pathcomp {args.command}: error: {exc}", file=sys.stderr)
        return 2
    _emit(payload, args.json)
    return 0


if __name__ == "__main__":
    sys.exit(main())
