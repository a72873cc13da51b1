"""Command-line front end.

Subcommands::

    prism show <space>                     describe a space
    prism heights <space>                  height table
    prism check-dispersion <space> <file>  test a candidate dispersion
    prism closed-sets <space>              clopen down-set classes
    prism noetherian <group>               Noetherian verdict for a group
    prism cube <group>                     decomposition diagram
    prism isomax <n>                       isomax dimension table
    prism oracle <suite>                   run brute-force cross-checks

A ``<space>`` is a group identifier (``circle``, ``torus:<r>``, ``o2``,
``so3``, ``nsu3t``, ``finite:<path.json>``, ``semidirect:<path.json>``)
drawn at ``--bound``, or a path to a flagged-priestley/v1 JSON file.
Every command is a thin adapter over the library: resolve inputs, call
one operation, format.  Output collections are ordered lexicographically
by key string so identical invocations produce identical bytes.

Exit codes: 0 success, 1 domain error (the error class name is printed
on stderr), 2 usage error.
"""

import argparse
import json
import sys
from math import inf

from .errors import PrismError
from . import dispersion
from . import liegroups
from . import oracles
from . import priestley
from .cube import build_decomposition, cube_to_dot, cube_to_json, cube_to_text, isomax_table


def _is_group_spec(spec):
    return spec in ("circle", "o2", "so3", "nsu3t") or spec.startswith(
        ("torus:", "finite:", "semidirect:")
    )


def _resolve_space(spec, bound):
    if _is_group_spec(spec):
        return liegroups.flagged_snapshot(liegroups.group_from_spec(spec), bound)
    with open(spec, encoding="utf-8") as fh:
        return priestley.flagged_from_json(fh.read())


def _height_value(v):
    return "inf" if v == inf else v


def _emit(text, out):
    if out:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _cmd_show(args):
    space = _resolve_space(args.space, args.bound)
    lines = ["points:"]
    for p in sorted(space.concrete):
        lines.append("  %s" % p)
    lines.append("order:")
    for a, b in sorted(space.order):
        if a != b:
            lines.append("  %s < %s" % (a, b))
    lines.append("families:")
    for f in space.families:
        lines.append(
            "  %s: limit=%s order=%s lt={%s} gt={%s} hint=%s"
            % (
                f.id,
                f.limit,
                f.member_order,
                ", ".join(sorted(f.member_lt)),
                ", ".join(sorted(f.member_gt)),
                f.member_height_hint,
            )
        )
    _emit("\n".join(lines) + "\n", args.out)
    return 0


def heights_table(space):
    """The height report both as a dict (heights/v1) and as text lines."""
    ha = dispersion.thomason_heights(space)
    flat = {}
    for name, v in ha.heights.items():
        flat[name] = _height_value(v)
    for name, v in ha.family_heights.items():
        flat[name] = _height_value(v)
    lines = ["%s %s" % (name, flat[name]) for name in sorted(flat)]
    return flat, lines


def _cmd_heights(args):
    space = _resolve_space(args.space, args.bound)
    flat, lines = heights_table(space)
    if args.format == "json":
        _emit(json.dumps(flat, indent=2, sort_keys=True) + "\n", args.out)
    else:
        _emit("\n".join(lines) + "\n", args.out)
    return 0


def _cmd_check_dispersion(args):
    space = _resolve_space(args.space, args.bound)
    with open(args.candidate, encoding="utf-8") as fh:
        values = json.loads(fh.read())
    candidate = dispersion.DispersionCandidate(
        {k: int(v) for k, v in values.items()}
    )
    ok, witness = dispersion.is_dispersion(space, candidate)
    if ok:
        _emit("true\n", args.out)
    else:
        _emit("false witness=%s\n" % (witness,), args.out)
    return 0


def _cmd_closed_sets(args):
    space = _resolve_space(args.space, args.bound)
    classes = priestley.clopen_down_sets(space)
    lines = ["%d clopen down-set classes" % len(classes)]
    for i, cls in enumerate(
        sorted(classes, key=lambda c: (sorted(c.required), c.family_tags))
    ):
        lines.append("class %d: %s" % (i, cls.describe()))
    _emit("\n".join(lines) + "\n", args.out)
    return 0


def _cmd_noetherian(args):
    group = liegroups.group_from_spec(args.group)
    _emit(
        ("true" if liegroups.spectrum_is_noetherian(group) else "false") + "\n",
        args.out,
    )
    return 0


def _cmd_cube(args):
    group = liegroups.group_from_spec(args.group)
    diagram = build_decomposition(group, args.bound)
    if args.format == "dot":
        _emit(cube_to_dot(diagram), args.out)
    elif args.format == "json":
        _emit(cube_to_json(diagram) + "\n", args.out)
    else:
        _emit(cube_to_text(diagram), args.out)
    return 0


def _cmd_isomax(args):
    _emit(isomax_table(args.n), args.out)
    return 0


def _cmd_oracle(args):
    lines = []
    for name, cases in oracles.run_suite(args.suite):
        lines.append("ok %s (%d cases)" % (name, cases))
    _emit("\n".join(lines) + "\n", args.out)
    return 0


def build_parser():
    parser = argparse.ArgumentParser(
        prog="prism",
        description="exact order-topology toolkit for subgroup spectra",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, space_arg=None, fmt=None):
        if space_arg:
            p.add_argument(space_arg)
        p.add_argument("--bound", type=int, default=4)
        if fmt:
            p.add_argument("--format", choices=fmt, default="text")
        p.add_argument("--out", default=None)

    common(sub.add_parser("show", help="describe a space"), "space")
    common(
        sub.add_parser("heights", help="Thomason height table"),
        "space",
        fmt=("text", "json"),
    )
    p = sub.add_parser("check-dispersion", help="test a candidate dispersion")
    p.add_argument("space")
    p.add_argument("candidate")
    p.add_argument("--bound", type=int, default=4)
    p.add_argument("--out", default=None)
    common(sub.add_parser("closed-sets", help="clopen down-set classes"), "space")
    p = sub.add_parser("noetherian", help="Noetherian verdict for a group")
    p.add_argument("group")
    p.add_argument("--out", default=None)
    common(
        sub.add_parser("cube", help="decomposition diagram"),
        None,
        fmt=("text", "dot", "json"),
    )
    sub.choices["cube"].add_argument("group")
    p = sub.add_parser("isomax", help="isomax dimension table")
    p.add_argument("n", type=int)
    p.add_argument("--out", default=None)
    p = sub.add_parser("oracle", help="run brute-force cross-checks")
    p.add_argument("suite", choices=sorted(oracles.SUITES) + ["all"])
    p.add_argument("--out", default=None)

    handlers = {
        "show": _cmd_show,
        "heights": _cmd_heights,
        "check-dispersion": _cmd_check_dispersion,
        "closed-sets": _cmd_closed_sets,
        "noetherian": _cmd_noetherian,
        "cube": _cmd_cube,
        "isomax": _cmd_isomax,
        "oracle": _cmd_oracle,
    }
    return parser, handlers


def main(argv=None):
    parser, handlers = build_parser()
    args = parser.parse_args(argv)
    try:
        return handlers[args.command](args)
    except PrismError as err:
        sys.stderr.write("%s: %s\n" % (type(err).__name__, err))
        return 1
    except (OSError, ValueError, json.JSONDecodeError) as err:
        sys.stderr.write("%s: %s\n" % (type(err).__name__, err))
        return 1


if __name__ == "__main__":
    sys.exit(main())
