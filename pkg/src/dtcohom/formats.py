"""Line-oriented text formats.

Every input format allows ``#`` comments and blank lines.  Printers emit
exactly what the parsers accept, so ``parse(print(x)) == x``.

surface::

    surface g=2 r=0
    curves g1 g2 g3          # optional; default: labels used twice, in order
    pants P1: g1 g2 g3
    pants P2: g1 g2 g3

multicurve::

    mc m=1,1,0 t=0,0,0

presentation::

    gens a b
    rel a b a^-1 b^-1

action table::

    points 3
    act a: 2 1 3

module element (``P{...}`` holds a multicurve or a table point)::

    3/2*ONE + 1*T1 + 2*P{m=1,1,0;t=0,0,0} - 1*P{m=1,1,0;t=1,0,0}

cocycle::

    tau1 := 1*P{m=1,1,0;t=0,0,0}

coloring::

    default red
    except m=1,1,0;t=2,0,0 -> blue
    colors red blue          # optional color domain

A coloring file with ``at <point> -> <color>`` lines instead is a window
table; ``default`` is then the declared default and ``threshold <n>`` the
inference threshold.
"""
from __future__ import annotations

import re
from fractions import Fraction

from .actions import ActionTable
from .colorings import Coloring, WindowColoring
from .errors import ParseError
from .modules import GeneratorCocycle, ModuleElement
from .presentations import Presentation, Word
from .surface import DTMulticurve, PantsDecomposition, SurfaceSpec, standard_pants


def _lines(text: str):
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if line:
            yield lineno, line


def fmt_q(x) -> str:
    x = Fraction(x)
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def parse_q(s: str) -> Fraction:
    try:
        return Fraction(s.strip())
    except (ValueError, ZeroDivisionError):
        raise ParseError(f"bad rational {s!r}") from None


def _ints(s: str, what: str) -> tuple[int, ...]:
    try:
        return tuple(int(x) for x in s.split(","))
    except ValueError:
        raise ParseError(f"bad integer list for {what}: {s!r}") from None


# -- surfaces ---------------------------------------------------------------

def parse_surface(text: str) -> PantsDecomposition:
    spec = None
    curves = None
    pants = []
    for lineno, line in _lines(text):
        head, _, rest = line.partition(" ")
        if head == "surface":
            kv = dict(item.split("=", 1) for item in rest.split() if "=" in item)
            try:
                spec = SurfaceSpec(int(kv["g"]), int(kv.get("r", 0)))
            except (KeyError, ValueError):
                raise ParseError(f"line {lineno}: expected 'surface g=<int> r=<int>'") from None
        elif head == "curves":
            curves = tuple(rest.split())
        elif head == "pants":
            name, sep, slots = rest.partition(":")
            slots = tuple(slots.split())
            if not sep or len(slots) != 3:
                raise ParseError(f"line {lineno}: expected 'pants <name>: <a> <b> <c>'")
            pants.append((name.strip(), slots))
        else:
            raise ParseError(f"line {lineno}: unknown directive {head!r}")
    if spec is None:
        raise ParseError("missing 'surface' line")
    if not pants:
        return standard_pants(spec.genus, spec.boundary_count)
    if curves is None:
        counts: dict[str, int] = {}
        for _, slots in pants:
            for s in slots:
                counts[s] = counts.get(s, 0) + 1
        curves = tuple(s for s in counts if counts[s] == 2)
    return PantsDecomposition(spec, curves, tuple(pants))


def format_surface(pants: PantsDecomposition) -> str:
    s = pants.surface
    out = [f"surface g={s.genus} r={s.boundary_count}", "curves " + " ".join(pants.curves)]
    out += [f"pants {name}: {' '.join(slots)}" for name, slots in pants.pants]
    return "\n".join(out) + "\n"


# -- multicurves and points -------------------------------------------------

_MC_RE = re.compile(r"^m=(\S+)\s*[; ]\s*t=(\S+)$")


def parse_point_literal(s: str):
    s = s.strip()
    if re.fullmatch(r"-?\d+", s):
        return int(s)
    m = _MC_RE.match(s)
    if not m:
        raise ParseError(f"bad point {s!r}")
    return DTMulticurve(_ints(m.group(1), "m"), _ints(m.group(2), "t"))


def format_point(p) -> str:
    if isinstance(p, DTMulticurve):
        return f"m={','.join(map(str, p.m))};t={','.join(map(str, p.t))}"
    return str(p)


def parse_multicurve(text: str) -> DTMulticurve:
    found = None
    for lineno, line in _lines(text):
        head, _, rest = line.partition(" ")
        if head != "mc":
            raise ParseError(f"line {lineno}: expected 'mc m=... t=...'")
        if found is not None:
            raise ParseError(f"line {lineno}: more than one multicurve")
        parts = dict(item.split("=", 1) for item in rest.split() if "=" in item)
        if set(parts) != {"m", "t"}:
            raise ParseError(f"line {lineno}: expected 'mc m=<ints> t=<ints>'")
        found = DTMulticurve(_ints(parts["m"], "m"), _ints(parts["t"], "t"))
    if found is None:
        raise ParseError("no 'mc' line")
    return found


def format_multicurve(D: DTMulticurve) -> str:
    return f"mc m={','.join(map(str, D.m))} t={','.join(map(str, D.t))}"


# -- presentations and tables -----------------------------------------------

def parse_presentation(text: str) -> Presentation:
    gens = None
    rels = []
    for lineno, line in _lines(text):
        head, _, rest = line.partition(" ")
        if head == "gens":
            gens = tuple(rest.split())
        elif head == "rel":
            rels.append(Word.parse(rest))
        else:
            raise ParseError(f"line {lineno}: unknown directive {head!r}")
    if gens is None:
        raise ParseError("missing 'gens' line")
    return Presentation(gens, tuple(rels))


def format_presentation(p: Presentation) -> str:
    out = ["gens " + " ".join(p.generators)] + [f"rel {r}" for r in p.relators]
    return "\n".join(out) + "\n"


def parse_action(text: str) -> ActionTable:
    n = None
    images = {}
    for lineno, line in _lines(text):
        head, _, rest = line.partition(" ")
        if head == "points":
            try:
                n = int(rest)
            except ValueError:
                raise ParseError(f"line {lineno}: expected 'points <n>'") from None
        elif head == "act":
            g, sep, img = rest.partition(":")
            if not sep:
                raise ParseError(f"line {lineno}: expected 'act <gen>: <images>'")
            try:
                images[g.strip()] = [int(x) for x in img.split()]
            except ValueError:
                raise ParseError(f"line {lineno}: bad image list") from None
        else:
            raise ParseError(f"line {lineno}: unknown directive {head!r}")
    if n is None:
        raise ParseError("missing 'points' line")
    return ActionTable(n, images)


def format_action(t: ActionTable) -> str:
    out = [f"points {t.n_points}"]
    out += [f"act {g}: {' '.join(map(str, t.image_list(g)))}" for g in t.generators]
    return "\n".join(out) + "\n"


# -- module elements and cocycles -------------------------------------------

def _split_terms(s: str) -> list[tuple[int, str]]:
    """Split on top-level ``+``/``-``; signs inside ``P{...}`` belong to the point."""
    terms, sign, buf, depth = [], 1, "", 0
    for ch in s:
        if ch == "{":
            depth += 1
        elif ch == "}":
            depth -= 1
        if depth == 0 and ch in "+-":
            if buf.strip():
                terms.append((sign, buf.strip()))
                sign = 1
            if ch == "-":
                sign = -sign
            buf = ""
            continue
        buf += ch
    if depth:
        raise ParseError(f"unbalanced braces in {s!r}")
    if buf.strip():
        terms.append((sign, buf.strip()))
    return terms


def parse_element(s: str) -> ModuleElement:
    s = s.strip()
    if s in ("", "0"):
        return ModuleElement()
    aff: dict = {}
    fin: dict = {}
    const = Fraction(0)
    for sign, term in _split_terms(s):
        coef_s, star, atom = term.partition("*")
        if not star:
            coef_s, atom = "1", term
        coef = sign * parse_q(coef_s)
        atom = atom.strip()
        if atom == "ONE":
            const += coef
        elif re.fullmatch(r"T\d+", atom):
            k = int(atom[1:])
            aff[k] = aff.get(k, 0) + coef
        elif atom.startswith("P{") and atom.endswith("}"):
            p = parse_point_literal(atom[2:-1])
            fin[p] = fin.get(p, 0) + coef
        else:
            raise ParseError(f"bad term {term!r}")
    return ModuleElement(aff, const, fin)


def format_element(v: ModuleElement) -> str:
    terms = []
    if v.constant:
        terms.append((v.constant, "ONE"))
    terms += [(a, f"T{k}") for k, a in v.affine]
    terms += [(c, f"P{{{format_point(p)}}}") for p, c in v.finite]
    if not terms:
        return "0"
    out = []
    for i, (c, atom) in enumerate(terms):
        body = f"{fmt_q(abs(c))}*{atom}"
        if i == 0:
            out.append(body if c > 0 else "-" + body)
        else:
            out.append(("+ " if c > 0 else "- ") + body)
    return " ".join(out)


def parse_cocycle(text: str) -> GeneratorCocycle:
    vals = {}
    for lineno, line in _lines(text):
        g, sep, rest = line.partition(":=")
        if not sep:
            raise ParseError(f"line {lineno}: expected '<gen> := <element>'")
        g = g.strip()
        if g in vals:
            raise ParseError(f"line {lineno}: generator {g} given twice")
        vals[g] = parse_element(rest)
    return GeneratorCocycle(vals)


def format_cocycle(u) -> str:
    return "".join(f"{g} := {format_element(u[g])}\n" for g in u)


# -- colorings --------------------------------------------------------------

def parse_coloring(text: str):
    default = None
    exceptions = {}
    window = {}
    domain = None
    threshold = None
    for lineno, line in _lines(text):
        head, _, rest = line.partition(" ")
        if head == "default":
            default = rest.strip()
        elif head == "colors":
            domain = frozenset(rest.split())
        elif head == "threshold":
            try:
                threshold = int(rest)
            except ValueError:
                raise ParseError(f"line {lineno}: bad threshold") from None
        elif head in ("except", "at"):
            pt, sep, color = rest.partition("->")
            if not sep or not color.strip():
                raise ParseError(f"line {lineno}: expected '{head} <point> -> <color>'")
            target = exceptions if head == "except" else window
            target[parse_point_literal(pt)] = color.strip()
        else:
            raise ParseError(f"line {lineno}: unknown directive {head!r}")
    if window:
        if exceptions:
            raise ParseError("mixing 'except' and 'at' lines")
        return WindowColoring(window, default, threshold, domain)
    if default is None:
        raise ParseError("missing 'default' line")
    return Coloring(default, exceptions, domain)


def format_coloring(c) -> str:
    out = []
    if isinstance(c, WindowColoring):
        if c.declared_default is not None:
            out.append(f"default {c.declared_default}")
        if c.threshold is not None:
            out.append(f"threshold {c.threshold}")
        if c.domain is not None:
            out.append("colors " + " ".join(sorted(c.domain)))
        out += [f"at {format_point(p)} -> {c.colors[p]}" for p in sorted(c.colors)]
    else:
        out.append(f"default {c.default}")
        if c.domain is not None:
            out.append("colors " + " ".join(sorted(c.domain)))
        out += [f"except {format_point(p)} -> {col}" for p, col in c.exceptions]
    return "\n".join(out) + "\n"
