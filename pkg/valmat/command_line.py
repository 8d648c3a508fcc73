#!/usr/bin/env python3
"""
Command line utilities
======================

The ``valmat`` command. Every subcommand reads an instance document (from
``--input`` or stdin), writes one JSON object (or DOT source for
``export-dot``) and exits with

- ``0`` on success
- ``1`` when a precondition fails (invalid valuation, non member point...)
- ``2`` when the input cannot be parsed
- ``3`` when an identity guaranteed by the theory fails (a bug)
"""
import argparse
import logging
import sys

from . import __version__
from .ends import (
    delta,
    dress_terhalle_metric,
    matroid_at_infinity,
    ultrametric_matrix,
)
from .errors import DomainError, ParseError, ValmatError
from .export import export_dot
from .generators import (
    TreeInstance,
    gen_perturbed,
    gen_representable,
    gen_tree_metric,
    gen_uniform_zero,
    random_pairs,
    random_poly_matrix,
    random_tree,
)
from .io import (
    dumps,
    emit_instance,
    format_value,
    instance_to_dict,
    parse_document,
    parse_labels,
    parse_matrix,
    parse_point,
    point_to_dict,
    read_text,
    write_text,
)
from .lattice import (
    certify,
    cocovers,
    covers,
    find_point,
    interval,
    is_segment,
    join,
    meet,
)
from .reconstruct import (
    modular_check,
    omega_from_lattice,
    project_xb,
    roundtrip_check,
    skeleton_member,
)
from .tropical import (
    decompose,
    floor_point,
    is_member,
    is_member_tw,
    restrict_point,
    tight_span_point,
)
from .util import Caps, get_caps, vshift
from .valuation import simplify

logger = logging.getLogger(__name__)


def add_caps_args(parser, new_group=True):
    """Adds enumeration caps command line arguments to an
    :py:class:`argparse.ArgumentParser`

    Each cap ``name`` gets a ``--caps-name`` option overriding the value from
    the environment (``VALMAT_CAPS``).

    Args:
        parser (:py:class:`argparse.ArgumentParser`): Your argument parser.
        new_group (bool, optional): Add the arguments in a specific argument
            group (default: `True`)
    """
    if new_group:
        parser = parser.add_argument_group("Enumeration caps")
    for name in Caps.names():
        parser.add_argument(
            f"--caps-{name.replace('_', '-')}",
            dest=f"caps_{name}",
            type=int,
            metavar="N",
        )


def caps_from_args(args, environ=None):
    """Caps from the environment, overridden by the command line"""
    overrides = {
        name: getattr(args, f"caps_{name}", None) for name in Caps.names()
    }
    return get_caps(environ).updated(**overrides)


# Helpers


def _load(args):
    """Read and validate the input valuation"""
    if args.input is None or args.input == "-":
        text = sys.stdin.read()
    else:
        text = read_text(args.input)
    valuation, _ = parse_document(text)
    return valuation.validate()


def _point(args, v, name="point", rational=False, required=False):
    """Parse ``--point`` / ``--point2`` (``None`` if not given)"""
    text = getattr(args, name, None)
    if text is None:
        if required:
            raise ParseError(f"--{name} is required by {args.command}")
        return None
    return parse_point(text, v.ground, rational=rational)


def _two_points(args, v):
    return (_point(args, v, required=True),
            _point(args, v, "point2", required=True))


def _rational_point(args, v):
    return _point(args, v, rational=True, required=True)


def _pair(v, text):
    labels = parse_labels(text, v.ground)
    if len(labels) != 2:
        raise ParseError(f"Expected two labels, got \"{text}\"")
    return labels


def _base(v, text):
    labels = parse_labels(text, v.ground)
    base = v.ground.subset(labels)
    if base not in v.family:
        raise DomainError(f"{v.ground.describe(base)} is not a base")
    return base


def _simple(args, v):
    """Simplified valuation, with the point options restricted to it"""
    if v.family.is_simple():
        return v, _point(args, v)
    logger.warning("The valuation is not simple, simplifying it first")
    simplification = simplify(v)
    point = _point(args, v)
    if point is not None:
        point = restrict_point(simplification, point)
    return simplification.valuation, point


def _lattice_point(v, point):
    return certify(v, point) if point is not None else find_point(v)


def _points(v, points):
    return [point_to_dict(v.ground, z) for z in points]


# Commands


def validate(args, caps):
    v = _load(args)
    return {
        "valid": True,
        "elements": list(v.ground),
        "rank": v.rank,
        "bases": len(v.bases),
        "simple": v.family.is_simple(),
    }


def maximize(args, caps):
    v = _load(args)
    point = _point(args, v)
    if point is not None:
        v = v.translate(point)
    start = _base(v, args.start) if args.start else v.bases[0]
    base, value = v.maximize(start)
    return {"base": v.ground.labels_of(base), "value": value}


def member(args, caps):
    v = _load(args)
    point = _rational_point(args, v)
    return {
        "point": point_to_dict(v.ground, point),
        "member": is_member(v, point),
        "member_tw": is_member_tw(v, point, caps=caps),
    }


def height(args, caps):
    v = _load(args)
    x = certify(v, _point(args, v, required=True))
    return {"point": point_to_dict(v.ground, x), "height": x.height}


def covers_command(args, caps):
    v = _load(args)
    x = certify(v, _point(args, v, required=True))
    return {"point": point_to_dict(v.ground, x),
            "covers": _points(v, covers(v, x))}


def cocovers_command(args, caps):
    v = _load(args)
    x = certify(v, _point(args, v, required=True))
    return {"point": point_to_dict(v.ground, x),
            "cocovers": _points(v, cocovers(v, x))}


def meet_command(args, caps):
    v = _load(args)
    x, y = _two_points(args, v)
    z = meet(v, x, y)
    return {"meet": point_to_dict(v.ground, z), "height": z.height}


def join_command(args, caps):
    v = _load(args)
    x, y = _two_points(args, v)
    z = join(v, x, y)
    return {"join": point_to_dict(v.ground, z), "height": z.height}


def interval_command(args, caps):
    v = _load(args)
    x, y = _two_points(args, v)
    members = interval(v, x, y, caps=caps)
    return {"size": len(members), "points": _points(v, members)}


def segment(args, caps):
    v = _load(args)
    chain = [parse_point(text, v.ground) for text in args.chain.split(";")]
    return {"segment": is_segment(v, chain, caps=caps)}


def find_point_command(args, caps):
    v = _load(args)
    x = find_point(v)
    return {"point": point_to_dict(v.ground, x), "height": x.height}


def floor(args, caps):
    v = _load(args)
    return {"floor": point_to_dict(
        v.ground, floor_point(v, _rational_point(args, v), caps=caps)
    )}


def decompose_command(args, caps):
    v = _load(args)
    decomposition = decompose(v, _rational_point(args, v), caps=caps)
    return {
        "base": point_to_dict(v.ground, decomposition.base),
        "chain": [
            {"flat": v.ground.labels_of(flat),
             "coefficient": format_value(coefficient)}
            for flat, coefficient in decomposition.chain
        ],
    }


def delta_command(args, caps):
    v, point = _simple(args, v=_load(args))
    x = _lattice_point(v, point)
    e, f = _pair(v, args.pair)
    return {"point": point_to_dict(v.ground, x), "pair": [e, f],
            "delta": delta(v, x, e, f)}


def metric(args, caps):
    v, point = _simple(args, v=_load(args))
    x = _lattice_point(v, point)
    matrix = ultrametric_matrix(v, x)
    p = tight_span_point(v, x)
    labels = list(v.ground)
    return {
        "point": point_to_dict(v.ground, x),
        "labels": labels,
        "delta": [
            [None if e == f else matrix[e, f] for f in labels]
            for e in labels
        ],
        "tight_span_point": point_to_dict(v.ground, p),
        "dress_terhalle": [
            [None if e == f else
             format_value(dress_terhalle_metric(v, p, e, f))
             for f in labels]
            for e in labels
        ],
    }


def xb(args, caps):
    v, point = _simple(args, v=_load(args))
    x = _lattice_point(v, point)
    base = _base(v, args.base)
    projected = project_xb(v, x, base)
    return {
        "point": point_to_dict(v.ground, x),
        "base": v.ground.labels_of(base),
        "x_B": point_to_dict(v.ground, projected),
        "omega": projected.height - x.height,
    }


def reconstruct(args, caps):
    v, point = _simple(args, v=_load(args))
    x = _lattice_point(v, point)
    return {"point": point_to_dict(v.ground, x),
            "instance": instance_to_dict(omega_from_lattice(v, x))}


def roundtrip(args, caps):
    v, point = _simple(args, v=_load(args))
    result = roundtrip_check(v, _lattice_point(v, point))
    return {
        "result": "equivalent",
        "point": point_to_dict(v.ground, result.point),
        "witness": point_to_dict(v.ground, result.witness),
        "bases": [
            {"base": v.ground.labels_of(base), "shifted": shifted,
             "height_x_B": projected, "reconstructed": value}
            for base, shifted, projected, value in result.rows
        ],
    }


def skeleton(args, caps):
    v, point = _simple(args, v=_load(args))
    x = _lattice_point(v, point)
    base = _base(v, args.base)
    return {"point": point_to_dict(v.ground, x),
            "base": v.ground.labels_of(base),
            "member": skeleton_member(v, base, x)}


def infinity(args, caps):
    v, _ = _simple(args, v=_load(args))
    family = matroid_at_infinity(v)
    return {"bases": family.describe_bases(),
            "equals_underlying": family == v.family}


def modular_check_command(args, caps):
    v = _load(args)
    if args.point is not None:
        pairs = [_two_points(args, v)]
    else:
        pairs = random_pairs(v, args.pairs, args.seed)
    report = modular_check(v, pairs)
    return {
        "checked": report.checked,
        "modular": report.modular,
        "violations": [
            {"x": point_to_dict(v.ground, x), "y": point_to_dict(v.ground, y),
             "sum": lhs, "meet_join_sum": rhs}
            for x, y, lhs, rhs in report.violations
        ],
    }


def gen_tree(args, caps):
    if args.random:
        tree = random_tree(args.seed, max_leaves=args.max_leaves)
    elif args.tree:
        tree = TreeInstance.from_string(args.tree)
    else:
        raise ParseError("gen-tree needs --tree or --random")
    if args.leaves or args.root:
        leaves = parse_labels(args.leaves) if args.leaves else tree.leaves
        tree = TreeInstance(tree.graph.edges, leaves, args.root or tree.root)
    provenance = {"generator": "gen-tree", "tree": str(tree),
                  "root": tree.root}
    return emit_instance(gen_tree_metric(tree), provenance=provenance)


def gen_poly(args, caps):
    if args.random:
        matrix = random_poly_matrix(args.seed, num_rows=args.rank,
                                    num_columns=args.size,
                                    degree=args.degree)
    elif args.matrix:
        matrix = parse_matrix(read_text(args.matrix))
    else:
        raise ParseError("gen-poly needs --matrix or --random")
    provenance = {"generator": "gen-poly", "matrix": matrix.to_dict()}
    return emit_instance(gen_representable(matrix), provenance=provenance)


def gen_uniform(args, caps):
    v = gen_uniform_zero(parse_labels(args.labels), args.rank)
    provenance = {"generator": "gen-uniform"}
    if args.perturb_seed is not None:
        v = gen_perturbed(v, args.perturb_seed)
        provenance["perturb_seed"] = args.perturb_seed
    return emit_instance(v, provenance=provenance)


def export_dot_command(args, caps):
    v = _load(args)
    x = _lattice_point(v, _point(args, v))
    y = _point(args, v, "point2")
    if y is None:
        y = vshift(x.point, 1)
    return export_dot(v, x, y, caps=caps)


# Parser


def _add_point_args(parser, second=False):
    parser.add_argument("--point", type=str, default=None,
                        help="Point as label=value pairs (omitted labels "
                        "are 0)")
    if second:
        parser.add_argument("--point2", type=str, default=None,
                            help="Second point")


COMMANDS = {}


def _command(subparsers, common, name, function, help_text):
    parser = subparsers.add_parser(name, parents=[common], help=help_text)
    parser.set_defaults(function=function)
    COMMANDS[name] = function
    return parser


def build_parser():
    """The ``valmat`` argument parser"""
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--input", "-i", type=str, default=None,
                        help="Instance document (default: stdin)")
    common.add_argument("--output", "-o", type=str, default=None,
                        help="Output file (default: stdout)")
    common.add_argument("--verbose", "-v", action="store_true",
                        help="Debug logging")
    add_caps_args(common)

    parser = argparse.ArgumentParser(
        prog="valmat",
        description="Valuated matroids and uniform semimodular lattices",
    )
    parser.add_argument("--version", action="version",
                        version=f"%(prog)s {__version__}")
    subparsers = parser.add_subparsers(dest="command", metavar="COMMAND")
    subparsers.required = True

    _command(subparsers, common, "validate", validate,
             "Check the exchange axiom")
    p = _command(subparsers, common, "maximize", maximize,
                 "Maximize omega (+ point) by local search")
    _add_point_args(p)
    p.add_argument("--start", type=str, default=None,
                   help="Starting base (comma separated labels)")
    p = _command(subparsers, common, "member", member,
                 "Tropical linear space membership")
    _add_point_args(p)
    for name, function, help_text in [
        ("height", height, "Height of a lattice point"),
        ("covers", covers_command, "Covers of a lattice point"),
        ("cocovers", cocovers_command, "Points covered by a lattice point"),
        ("floor", floor, "Floor of a rational member"),
        ("decompose", decompose_command,
         "Flat chain decomposition of a rational member"),
    ]:
        _add_point_args(_command(subparsers, common, name, function,
                                 help_text))
    for name, function, help_text in [
        ("meet", meet_command, "Meet of two lattice points"),
        ("join", join_command, "Join of two lattice points"),
        ("interval", interval_command, "Lattice points between two points"),
    ]:
        _add_point_args(_command(subparsers, common, name, function,
                                 help_text), second=True)
    p = _command(subparsers, common, "segment", segment,
                 "Whether a cover chain is a segment")
    p.add_argument("--chain", type=str, required=True,
                   help="Points separated by \";\"")
    _command(subparsers, common, "find-point", find_point_command,
             "Some lattice point")
    p = _command(subparsers, common, "delta", delta_command,
                 "Number of common ray steps of two elements")
    _add_point_args(p)
    p.add_argument("--pair", type=str, required=True,
                   help="Two labels, comma separated")
    _add_point_args(_command(subparsers, common, "metric", metric,
                             "Ultrametric exponents at a point"))
    for name, function, help_text in [
        ("xb", xb, "Projection of a point on the skeleton of a base"),
        ("skeleton", skeleton, "Skeleton membership"),
    ]:
        p = _command(subparsers, common, name, function, help_text)
        _add_point_args(p)
        p.add_argument("--base", type=str, required=True,
                       help="Base (comma separated labels)")
    for name, function, help_text in [
        ("reconstruct", reconstruct, "Valuation read off the lattice"),
        ("roundtrip", roundtrip, "Check the reconstruction identity"),
    ]:
        _add_point_args(_command(subparsers, common, name, function,
                                 help_text))
    _command(subparsers, common, "infinity", infinity,
             "Matroid at infinity")
    p = _command(subparsers, common, "modular-check", modular_check_command,
                 "Check modularity on sample pairs")
    _add_point_args(p, second=True)
    p.add_argument("--pairs", type=int, default=20)
    p.add_argument("--seed", type=int, default=0)
    p = _command(subparsers, common, "gen-tree", gen_tree,
                 "Valuation of a tree metric")
    p.add_argument("--tree", type=str, default=None,
                   help="Linearized tree, e.g. \"(z (a u u') v)\"")
    p.add_argument("--leaves", type=str, default=None,
                   help="Leaves (default: childless vertices)")
    p.add_argument("--root", type=str, default=None,
                   help="Root vertex (default: first label)")
    p.add_argument("--random", action="store_true")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--max-leaves", type=int, default=6)
    p = _command(subparsers, common, "gen-poly", gen_poly,
                 "Valuation of a polynomial matrix")
    p.add_argument("--matrix", type=str, default=None,
                   help="JSON matrix file")
    p.add_argument("--random", action="store_true")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--rank", type=int, default=2)
    p.add_argument("--size", type=int, default=4)
    p.add_argument("--degree", type=int, default=2)
    p = _command(subparsers, common, "gen-uniform", gen_uniform,
                 "Zero valuation on a uniform matroid")
    p.add_argument("--labels", type=str, required=True)
    p.add_argument("--rank", type=int, required=True)
    p.add_argument("--perturb-seed", type=int, default=None)
    _add_point_args(_command(subparsers, common, "export-dot",
                             export_dot_command,
                             "Hasse diagram of an interval"), second=True)
    return parser


def main(argv=None):
    """Entry point, returns the exit code"""
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as error:
        return error.code
    logging.basicConfig(
        stream=sys.stderr,
        level=logging.DEBUG if args.verbose else logging.WARNING,
        format="%(levelname)s %(name)s: %(message)s",
    )
    try:
        caps = caps_from_args(args)
        result = args.function(args, caps)
    except ValmatError as error:
        print(f"valmat {args.command}: {error}", file=sys.stderr)
        return error.exit_code
    except OSError as error:
        print(f"valmat {args.command}: {error}", file=sys.stderr)
        return ParseError.exit_code
    output = result if isinstance(result, str) else dumps(result)
    if args.output is not None:
        write_text(args.output, output)
    else:
        sys.stdout.write(output)
    return 0


__all__ = ["add_caps_args", "caps_from_args", "build_parser", "main"]
