"""``dtcohom`` command line.

Exit codes: 0 ok, 1 domain invariant violated, 2 parse or usage error,
3 resource cap hit.  Output is deterministic; numbers are integers or
reduced fractions ``p/q``.
"""
from __future__ import annotations

import argparse
import sys
from dataclasses import dataclass, field
from pathlib import Path

from . import formats
from .actions import ActionTable, DTPantsAction, DEFAULT_MAX_POINTS, orbit_ball, schreier_loops
from .cohomology import h1_finite, restriction_iso_check, shapiro_verify
from .colorings import invariance_report, is_trivial
from .errors import DomainError, ParseError, ResourceCapExceeded, StructuralError
from .modules import (
    check_cocycle,
    coboundary,
    is_coboundary,
    lemma1_diagnostic,
    restriction_hom,
)
from .presentations import (
    Word,
    braid_relator,
    chain_relator,
    commuting_presentation,
    commuting_relator,
    free_reduce,
)
from .surface import primitive, scale, twist, validate_multicurve

OK, VIOLATION, USAGE, RESOURCE = 0, 1, 2, 3


@dataclass
class CommandResult:
    code: int
    text: str = ""
    machine: dict = field(default_factory=dict)

    def render(self) -> str:
        out = self.text
        if self.machine:
            out += "".join(f"{k}={v}\n" for k, v in self.machine.items())
        return out


class UsageError(ParseError):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.prog}: {message}\n{self.format_usage()}")


def _b(x: bool) -> str:
    return "true" if x else "false"


def _read(path: str) -> str:
    try:
        return Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}") from None


def _need(args, *names):
    missing = [f"--{n}" for n in names if getattr(args, n, None) is None]
    if missing:
        raise UsageError(f"missing required option(s): {' '.join(missing)}")


def _context(args):
    """The action a cocycle or coloring lives over: a multicurve orbit
    (``--surface`` + ``--mc``) or a permutation table (``--action``)."""
    if getattr(args, "action", None):
        table = formats.parse_action(_read(args.action))
        base = args.base if args.base is not None else 1
        table.check_point(base)
        return table, base
    _need(args, "surface", "mc")
    pants = formats.parse_surface(_read(args.surface))
    D = formats.parse_multicurve(_read(args.mc))
    return DTPantsAction(pants, D), D


def _radius(args, action):
    if args.radius is not None:
        return args.radius
    if isinstance(action, ActionTable):
        return action.n_points
    raise UsageError("--radius is required for multicurve orbits")


def _window(args, action, base):
    return orbit_ball(action, base, _radius(args, action), args.max_points)


# -- surface / mc -----------------------------------------------------------

def cmd_surface_validate(args):
    pants = formats.parse_surface(_read(args.surface))
    return CommandResult(
        OK,
        formats.format_surface(pants),
        {"curves": pants.n_curves, "pants": len(pants.pants), "valid": "true"},
    )


def _surface_mc(args):
    _need(args, "surface", "mc")
    return formats.parse_surface(_read(args.surface)), formats.parse_multicurve(_read(args.mc))


def cmd_mc_validate(args):
    pants, D = _surface_mc(args)
    problems = validate_multicurve(pants, D.m, D.t)
    text = formats.format_multicurve(D) + "\n" + "".join(f"violation: {p}\n" for p in problems)
    return CommandResult(VIOLATION if problems else OK, text, {"valid": _b(not problems)})


def cmd_mc_twist(args):
    pants, D = _surface_mc(args)
    return CommandResult(OK, formats.format_multicurve(twist(pants, D, args.curve, args.power)) + "\n")


def cmd_mc_scale(args):
    pants, D = _surface_mc(args)
    validate = validate_multicurve(pants, D.m, D.t)
    if validate:
        raise DomainError("; ".join(validate))
    return CommandResult(OK, formats.format_multicurve(scale(D, args.factor)) + "\n")


def cmd_mc_primitive(args):
    pants, D = _surface_mc(args)
    validate = validate_multicurve(pants, D.m, D.t)
    if validate:
        raise DomainError("; ".join(validate))
    p = primitive(D)
    return CommandResult(
        OK, formats.format_multicurve(p.reduced) + "\n", {"d": p.d, "empty": _b(p.empty)}
    )


def cmd_mc_orbit(args):
    pants, D = _surface_mc(args)
    action = DTPantsAction(pants, D)
    ball = _window(args, action, D)
    text = "".join(formats.format_multicurve(p) + "\n" for p in ball.points)
    return CommandResult(
        OK, text, {"radius": ball.radius, "size": len(ball), "closed": _b(ball.complete)}
    )


# -- group ------------------------------------------------------------------

def cmd_group_reduce(args):
    return CommandResult(OK, f"{free_reduce(Word.parse(args.word))}\n")


def cmd_group_relator(args):
    if args.commute:
        w = commuting_relator(*args.commute)
    elif args.braid:
        w = braid_relator(*args.braid)
    elif args.chain:
        w = chain_relator(*args.chain)
    else:
        raise UsageError("one of --commute, --braid, --chain is required")
    return CommandResult(OK, f"rel {w}\n", {"length": len(w)})


# -- cocycles ---------------------------------------------------------------

def _cocycle(args):
    _need(args, "cocycle")
    return formats.parse_cocycle(_read(args.cocycle))


def cmd_cocycle_check(args):
    action, _ = _context(args)
    u = _cocycle(args)
    if args.pres:
        pres = formats.parse_presentation(_read(args.pres))
    elif isinstance(action, DTPantsAction):
        pres = commuting_presentation(action.generators)
    else:
        raise UsageError("--pres is required with --action")
    defects = check_cocycle(action, u, pres)
    text = "".join(f"defect [{r}] := {formats.format_element(d)}\n" for r, d in defects)
    return CommandResult(
        VIOLATION if defects else OK,
        text,
        {"relators": len(pres.relators), "defects": len(defects), "cocycle": _b(not defects)},
    )


def cmd_cocycle_coboundary(args):
    action, _ = _context(args)
    _need(args, "element")
    v = formats.parse_element(args.element)
    return CommandResult(OK, formats.format_cocycle(coboundary(action, v)))


def cmd_cocycle_iscob(args):
    action, base = _context(args)
    u = _cocycle(args)
    ball = _window(args, action, base)
    res = is_coboundary(action, u, ball)
    if res.found:
        text = f"witness := {formats.format_element(res.witness)}\n"
    else:
        text = f"none within window: {res.reason}\n"
    return CommandResult(OK, text, {"radius": ball.radius, "coboundary": _b(res.found)})


def cmd_cocycle_restrict(args):
    action, base = _context(args)
    u = _cocycle(args)
    stab = schreier_loops(_window(args, action, base))
    values = restriction_hom(action, u, stab)
    text = "".join(f"[{w}] -> {formats.fmt_q(x)}\n" for w, x in values.items())
    nonzero = sum(1 for x in values.values() if x)
    return CommandResult(
        OK, text, {"loops": len(values), "nonzero": nonzero, "approximate": _b(stab.approximate)}
    )


def cmd_cocycle_lemma1(args):
    action, base = _context(args)
    if not isinstance(action, DTPantsAction):
        raise UsageError("lemma1 needs a multicurve orbit (--surface, --mc)")
    u = _cocycle(args)
    if not 1 <= args.curve <= len(action.generators):
        raise UsageError(f"--curve must be in 1..{len(action.generators)}")
    rep = lemma1_diagnostic(action, u, args.curve, _window(args, action, base))
    lines = [
        f"ladder {d.fixed_generator} fixes {formats.format_point(d.start)}; "
        f"{d.mover}^-{d.n} -> {formats.format_point(d.point)} "
        f"forced={formats.fmt_q(d.forced)} actual={formats.fmt_q(d.actual)}\n"
        for d in rep.defects
    ]
    lines += [
        f"inconclusive {g} from {formats.format_point(E)} after {n} steps\n"
        for E, g, n in rep.inconclusive
    ]
    return CommandResult(
        VIOLATION if rep.status == "defect" else OK, "".join(lines), {"status": rep.status}
    )


# -- cohomology -------------------------------------------------------------

def cmd_cohom_h1(args):
    _need(args, "pres", "action")
    pres = formats.parse_presentation(_read(args.pres))
    table = formats.parse_action(_read(args.action))
    rep = h1_finite(pres, table)
    d = rep.as_dict()
    width = max(len(k) for k in d)
    text = "".join(f"{k.ljust(width)}  {v:>4}\n" for k, v in d.items())
    return CommandResult(OK, text + "\n", d)


def cmd_cohom_shapiro(args):
    _need(args, "action")
    table = formats.parse_action(_read(args.action))
    res = shapiro_verify(args.rank, table)
    iso = restriction_iso_check(args.rank, table)
    text = (
        f"lhs={res.lhs} rhs={res.rhs} pass={_b(res.passed)}\n"
        f"restriction_rank={iso.rank} loops={iso.n_loops} iso={_b(iso.passed)}\n"
    )
    return CommandResult(OK if res.passed and iso.passed else VIOLATION, text)


# -- colorings --------------------------------------------------------------

def cmd_coloring_check(args):
    action, base = _context(args)
    _need(args, "coloring", "generator")
    c = formats.parse_coloring(_read(args.coloring))
    rep = invariance_report(action, c, args.generator, _window(args, action, base))
    text = "".join(f"violation {formats.format_point(x)}\n" for x in rep.violations)
    return CommandResult(
        VIOLATION if rep.violations else OK,
        text,
        {"generator": rep.generator, "violations": len(rep.violations), "complete": _b(rep.complete)},
    )


def cmd_coloring_classify(args):
    _need(args, "coloring")
    c = formats.parse_coloring(_read(args.coloring))
    v = is_trivial(c)
    return CommandResult(
        OK,
        formats.format_coloring(v.normalized),
        {"trivial": _b(v.trivial), "witness": v.witness, "window_scoped": _b(v.window_scoped)},
    )


COMMANDS = {
    ("surface", "validate"): cmd_surface_validate,
    ("mc", "validate"): cmd_mc_validate,
    ("mc", "twist"): cmd_mc_twist,
    ("mc", "scale"): cmd_mc_scale,
    ("mc", "primitive"): cmd_mc_primitive,
    ("mc", "orbit"): cmd_mc_orbit,
    ("group", "reduce"): cmd_group_reduce,
    ("group", "relator"): cmd_group_relator,
    ("cocycle", "check"): cmd_cocycle_check,
    ("cocycle", "coboundary"): cmd_cocycle_coboundary,
    ("cocycle", "iscob"): cmd_cocycle_iscob,
    ("cocycle", "restrict"): cmd_cocycle_restrict,
    ("cocycle", "lemma1"): cmd_cocycle_lemma1,
    ("cohom", "h1"): cmd_cohom_h1,
    ("cohom", "shapiro"): cmd_cohom_shapiro,
    ("coloring", "check"): cmd_coloring_check,
    ("coloring", "classify"): cmd_coloring_classify,
}


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="dtcohom", description="Dehn-Thurston coordinates and orbit cohomology.")
    p.add_argument("group")
    p.add_argument("command")
    p.add_argument("--surface")
    p.add_argument("--mc")
    p.add_argument("--pres")
    p.add_argument("--action")
    p.add_argument("--base", type=int, help="base point of --action (default 1)")
    p.add_argument("--cocycle")
    p.add_argument("--coloring")
    p.add_argument("--element", help="module element literal")
    p.add_argument("--radius", "--window", dest="radius", type=int)
    p.add_argument("--max-points", type=int, default=DEFAULT_MAX_POINTS)
    p.add_argument("--curve", type=int, default=1)
    p.add_argument("--power", type=int, default=1)
    p.add_argument("--factor", type=int, default=1)
    p.add_argument("--rank", type=int, default=2)
    p.add_argument("--generator")
    p.add_argument("--word", default="")
    p.add_argument("--commute", nargs=2, metavar=("A", "B"))
    p.add_argument("--braid", nargs=2, metavar=("A", "B"))
    p.add_argument("--chain", nargs=5, metavar=("A", "B", "C", "D", "E"))
    return p


def usage() -> str:
    cmds = "\n".join(f"  {a} {b}" for a, b in COMMANDS)
    return f"usage: dtcohom <group> <command> [options]\ncommands:\n{cmds}\n"


def run(argv) -> CommandResult:
    try:
        args = build_parser().parse_args(list(argv))
        fn = COMMANDS.get((args.group, args.command))
        if fn is None:
            return CommandResult(USAGE, f"error: unknown command {args.group} {args.command}\n" + usage())
        return fn(args)
    except ResourceCapExceeded as exc:
        return CommandResult(RESOURCE, f"error: {exc}\n")
    except (ParseError, StructuralError, IndexError) as exc:
        return CommandResult(USAGE, f"error: {exc}\n")
    except DomainError as exc:
        return CommandResult(VIOLATION, f"error: {exc}\n")
    except ValueError as exc:
        return CommandResult(USAGE, f"error: {exc}\n")


def main(argv=None) -> int:
    argv = sys.argv[1:] if argv is None else argv
    if not argv or argv[0] in ("-h", "--help"):
        sys.stdout.write(usage())
        return OK if argv else USAGE
    res = run(argv)
    stream = sys.stdout if res.code in (OK, VIOLATION) else sys.stderr
    stream.write(res.render())
    return res.code


if __name__ == "__main__":
    sys.exit(main())
