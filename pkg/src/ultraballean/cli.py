"""Command-line entry point.

Exit status: 0 on success, 1 on a domain error or a failed check (a JSON
error document ``{code, message, witness?}`` is emitted), 2 on I/O or
parse errors.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import io
from .ballean import (
    add_leaf_transform,
    ballean_diametrical_check,
    ballean_space,
    hausdorff,
    hausdorff_fast,
    iterate_ballean,
)
from .core import diam, format_dist, validate
from .errors import SchemaError, UltrametricError
from .gen import DEFAULT_LABELS, random_space
from .iso import canonical_form, is_isometric
from .laminar import family_of, reconstruct, validate_family
from .tree import build_tree, check_tree, tree_distance


class CheckFailed(Exception):
    def __init__(self, doc: dict):
        super().__init__(doc["message"])
        self.doc = doc


def _load(path: str):
    if path == "-":
        return json.load(sys.stdin)
    with open(path) as fh:
        return json.load(fh)


def _load_tree_or_space(path: str):
    doc = _load(path)
    if isinstance(doc, dict) and "matrix" in doc:
        return build_tree(io.space_from_json(doc))
    return io.tree_from_json(doc)


def _subset(space, spec: str):
    """A subset given as a JSON array, a path to one, or comma-separated names."""
    spec = spec.strip()
    if spec.startswith("["):
        names = json.loads(spec)
    elif Path(spec).is_file():
        names = _load(spec)
    else:
        names = [s for s in spec.split(",") if s]
    if not isinstance(names, list) or not all(isinstance(n, str) for n in names):
        raise SchemaError("subset must be an array of point names")
    return space.indices(names)


def _tree_out(tree, args):
    if args.format == "dot":
        return io.tree_to_dot(tree)
    return io.tree_to_json(tree)


def cmd_validate(args):
    space = io.space_from_json(_load(args.input))
    rep = validate(space)
    doc = {
        "is_metric": rep.is_metric,
        "is_ultrametric": rep.is_ultrametric,
        "witness": space.names(rep.witness) if rep.witness else None,
    }
    if not rep.is_ultrametric:
        raise CheckFailed({
            "code": "not-metric" if not rep.is_metric else "not-ultrametric",
            "message": "triangle inequality fails" if not rep.is_metric
            else "strong triangle inequality fails",
            "witness": doc["witness"],
            "report": doc,
        })
    return doc


def cmd_tree(args):
    return _tree_out(build_tree(io.space_from_json(_load(args.input))), args)


def cmd_dist(args):
    space = io.space_from_json(_load(args.input))
    if len(args.points) == 2:
        x, y = (space.index(p) for p in args.points)
        return {"x": args.points[0], "y": args.points[1],
                "distance": format_dist(tree_distance(build_tree(space), x, y))}
    idx = space.indices(args.points) if args.points else range(len(space))
    return {"subset": space.names(sorted(idx)), "diam": format_dist(diam(space, idx))}


def cmd_ballean(args):
    return io.ballean_to_json(ballean_space(io.space_from_json(_load(args.input))))


def cmd_hausdorff(args):
    space = io.space_from_json(_load(args.input))
    a, b = _subset(space, args.a), _subset(space, args.b)
    value = hausdorff_fast(space, a, b) if args.fast else hausdorff(space, a, b)
    return {"a": space.names(a), "b": space.names(b), "distance": format_dist(value)}


def cmd_iterate(args):
    space = io.space_from_json(_load(args.input))
    out = iterate_ballean(space, args.n)
    if args.stats:
        return {
            "n": args.n,
            "points": len(out),
            "diam": format_dist(diam(out, range(len(out)))),
            "tree_vertices": len(build_tree(out)),
        }
    if args.format == "dot":
        return io.tree_to_dot(build_tree(out))
    return io.space_to_json(out)


def cmd_transform(args):
    return _tree_out(add_leaf_transform(_load_tree_or_space(args.input)), args)


def cmd_check_tree(args):
    tree = _load_tree_or_space(args.input)
    rep = check_tree(tree, args.n)
    doc = {
        "n": rep.n,
        "passed": rep.passed,
        "violations": [{"vertex": v, "rule": r, "detail": d} for v, r, d in rep.violations],
    }
    if not rep.passed:
        v, rule, detail = rep.violations[0]
        raise CheckFailed({"code": "check-failed", "message": f"vertex {v}: {detail}",
                           "witness": {"vertex": v, "rule": rule}, "report": doc})
    return doc


def cmd_validate_family(args):
    f = io.family_from_json(_load(args.input))
    rep = validate_family(f)
    doc = {
        "is_ballean": rep.is_ballean,
        "missing_singletons": [f.names(m) for m in rep.missing_singletons],
        "missing_universe": rep.missing_universe,
        "crossing_pair": [f.names(m) for m in rep.crossing_pair] if rep.crossing_pair else None,
    }
    if not rep.is_ballean:
        raise CheckFailed({"code": "not-ballean", "message": "family is not a ballean",
                           "witness": doc["crossing_pair"] or doc["missing_singletons"]
                           or "missing universe", "report": doc})
    return doc


def cmd_reconstruct(args):
    return io.space_to_json(reconstruct(io.family_from_json(_load(args.input))))


def cmd_family(args):
    return io.family_to_json(family_of(io.space_from_json(_load(args.input))))


def cmd_isometric(args):
    if len(args.input) != 2:
        raise SchemaError("isometric needs exactly two --in spaces")
    s1, s2 = (io.space_from_json(_load(p)) for p in args.input)
    return {"isometric": is_isometric(s1, s2)}


def cmd_canon(args):
    form = canonical_form(_load_tree_or_space(args.input), labeled=args.labeled)
    doc = {"labeled": form.labeled, "digest": form.digest}
    if args.full:
        doc["encoding"] = form.encoding
    return doc


def cmd_diametrical(args):
    rep = ballean_diametrical_check(io.space_from_json(_load(args.input)))
    return {"passed": rep.passed, "parts": [list(p) for p in rep.parts],
            "expected": [list(p) for p in rep.expected]}


def cmd_gen(args):
    labels = args.labels.split(",") if args.labels else DEFAULT_LABELS
    return io.space_to_json(random_space(args.n, labels, seed=args.seed))


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="ultraballean", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, func, help, inp=True, fmt=False):
        p = sub.add_parser(name, help=help)
        if inp:
            p.add_argument("--in", dest="input", required=True, metavar="PATH")
        p.add_argument("--out", metavar="PATH")
        if fmt:
            p.add_argument("--format", choices=["json", "dot"], default="json")
        p.set_defaults(func=func)
        return p

    add("validate", cmd_validate, "check (ultra)metric axioms")
    add("tree", cmd_tree, "representing tree", fmt=True)
    p = add("dist", cmd_dist, "distance via the tree (two points) or diameter")
    p.add_argument("points", nargs="*")
    add("ballean", cmd_ballean, "all balls with the Hausdorff matrix")
    p = add("hausdorff", cmd_hausdorff, "Hausdorff distance of two subsets")
    p.add_argument("--a", required=True)
    p.add_argument("--b", required=True)
    p.add_argument("--fast", action="store_true", help="diameter of the union (balls only)")
    p = add("iterate", cmd_iterate, "n-th iterated ballean", fmt=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--stats", action="store_true")
    add("transform", cmd_transform, "add a leaf to every internal vertex", fmt=True)
    p = add("check-tree", cmd_check_tree, "realizability conditions for level n")
    p.add_argument("--n", type=int, default=0)
    add("validate-family", cmd_validate_family, "is a set family a ballean")
    add("reconstruct", cmd_reconstruct, "ultrametric realizing a family")
    add("family", cmd_family, "ballean of a space as a set family")
    p = sub.add_parser("isometric", help="decide isometry of two spaces")
    p.add_argument("--in", dest="input", action="append", required=True, metavar="PATH")
    p.add_argument("--out", metavar="PATH")
    p.set_defaults(func=cmd_isometric)
    p = add("canon", cmd_canon, "canonical form digest")
    p.add_argument("--labeled", action="store_true")
    p.add_argument("--full", action="store_true", help="include the full encoding")
    add("diametrical", cmd_diametrical, "diametrical partition of the ballean")
    p = add("gen", cmd_gen, "random ultrametric space", inp=False)
    p.add_argument("--n", type=int, required=True, help="number of points")
    p.add_argument("--seed", type=int)
    p.add_argument("--labels", help="comma-separated label values")
    return parser


def _emit(result, out) -> None:
    text = result if isinstance(result, str) else io.dumps(result)
    if out:
        Path(out).write_text(text)
    else:
        sys.stdout.write(text)


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        result = args.func(args)
    except CheckFailed as e:
        _emit(e.doc, None)
        return 1
    except UltrametricError as e:
        _emit(e.to_dict(), None)
        return 1
    except (OSError, json.JSONDecodeError, SchemaError) as e:
        _emit({"code": "bad-input", "message": str(e)}, None)
        return 2
    _emit(result, getattr(args, "out", None))
    return 0


if __name__ == "__main__":
    sys.exit(main())
