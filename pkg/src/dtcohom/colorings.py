"""Colorings of orbits that are constant away from finitely many points.

A normalized ``Coloring`` is a default color plus finitely many exceptions,
which makes invariance, equivalence and triviality exactly decidable on an
infinite orbit.  Raw per-point tables read from files are ``WindowColoring``
objects; they only say something about the window they cover.
"""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Hashable, Iterable, Mapping

from .actions import Action, DTPantsAction, OrbitBall
from .errors import DomainError, WindowError
from .modules import ModuleElement, reduce_element


@dataclass(frozen=True)
class Coloring:
    default: Hashable
    exceptions: tuple = ()
    domain: frozenset | None = None

    def __post_init__(self):
        exc = dict(self.exceptions) if not isinstance(self.exceptions, Mapping) else self.exceptions
        exc = {p: c for p, c in exc.items() if c != self.default}
        if self.domain is not None:
            object.__setattr__(self, "domain", frozenset(self.domain))
            bad = [c for c in [self.default, *exc.values()] if c not in self.domain]
            if bad:
                raise DomainError(f"color {bad[0]!r} is not in the color domain")
        object.__setattr__(self, "exceptions", tuple(sorted(exc.items(), key=lambda kv: kv[0])))

    @property
    def exception_map(self) -> dict:
        return dict(self.exceptions)

    def __call__(self, point):
        return self.exception_map.get(point, self.default)


@dataclass(frozen=True)
class WindowColoring:
    """Colors listed point by point over a finite window."""

    colors: Mapping
    declared_default: Hashable | None = None
    threshold: int | None = None
    domain: frozenset | None = None

    def __call__(self, point):
        return self.colors[point]


@dataclass(frozen=True)
class InvarianceReport:
    generator: str
    violations: tuple
    complete: bool


def _window_points(window) -> set:
    if isinstance(window, OrbitBall):
        return set(window.points)
    return set(window)


def invariance_report(action: Action, c, g: str, window) -> InvarianceReport:
    """Points ``x`` of the window where ``c(x) != c(g^-1 x)``, i.e. the support
    of ``c - g.c``.

    For a normalized coloring violations can only sit on the exceptions or
    their ``g``-images; the window must cover that set, and then the report
    is the complete violation set on the whole orbit.
    """
    action.check_generator(g)
    pts = _window_points(window)
    if isinstance(c, WindowColoring):
        found = [
            x for x in pts
            if x in c.colors and action.apply(g, -1, x) in c.colors
            and c(x) != c(action.apply(g, -1, x))
        ]
        return InvarianceReport(g, tuple(sorted(found)), complete=False)
    region = set()
    for p, _ in c.exceptions:
        region.add(p)
        region.add(action.apply(g, 1, p))
    missing = sorted(region - pts)
    if missing:
        raise WindowError(
            f"window does not contain {missing[0]}, where {g} may change the coloring"
        )
    found = [x for x in pts if c(x) != c(action.apply(g, -1, x))]
    return InvarianceReport(g, tuple(sorted(found)), complete=True)


def are_equivalent(c1: Coloring, c2: Coloring, infinite_orbit: bool = True) -> bool:
    """Do the colorings differ at only finitely many points?"""
    if c1.domain != c2.domain:
        raise DomainError("colorings have different color domains")
    if not infinite_orbit:
        return True
    # with equal defaults the disagreements lie among the exceptions;
    # with different defaults they are cofinite
    return c1.default == c2.default


@dataclass(frozen=True)
class TrivialityVerdict:
    trivial: bool
    witness: Hashable
    window_scoped: bool
    normalized: Coloring = field(repr=False, default=None)


def infer_default(c: WindowColoring):
    if c.declared_default is not None:
        return c.declared_default
    counts = Counter(c.colors.values())
    if not counts:
        raise DomainError("default ambiguous within window: empty table")
    (top, n_top), *rest = counts.most_common()
    if rest and rest[0][1] == n_top:
        raise DomainError("default ambiguous within window: tied colors")
    limit = c.threshold if c.threshold is not None else len(c.colors) // 4
    others = len(c.colors) - n_top
    if others > limit:
        raise DomainError(
            f"default ambiguous within window: {others} points off the majority color "
            f"{top!r}, threshold {limit}"
        )
    return top


def is_trivial(c) -> TrivialityVerdict:
    """Classify a coloring as equivalent to a constant one.

    Normalized colorings always are, witnessed by their default.  A window
    table is normalized first using its declared or inferred default.
    """
    if isinstance(c, Coloring):
        return TrivialityVerdict(True, c.default, False, c)
    default = infer_default(c)
    norm = Coloring(default, dict(c.colors), c.domain)
    return TrivialityVerdict(True, default, True, norm)


@dataclass(frozen=True)
class PipelineResult:
    accepted: bool
    z: Fraction | None = None
    correction: ModuleElement | None = None
    rejected_generator: str | None = None
    rejected_curve: int | None = None
    reason: str = ""


def invariant_class_pipeline(action: DTPantsAction, v: ModuleElement, gens: Iterable[str] | None = None) -> PipelineResult:
    """Decide whether ``v`` is invariant modulo finitely supported elements,
    and if so split it as ``z * 1 + correction`` with finite ``correction``.

    Over the slice, ``v - tau_j.v`` is the constant ``a_j * m_j`` plus a
    finite part, so the test is ``a_j * m_j == 0`` for every generator.
    """
    gens = action.generators if gens is None else tuple(gens)
    red = reduce_element(action, v)
    aff = red.affine_map
    for g in gens:
        j = action.curve_of(g)
        if aff.get(j, 0) * action.m[j - 1] != 0:
            return PipelineResult(
                False,
                rejected_generator=g,
                rejected_curve=j,
                reason=f"v - {g}.v has constant part {aff[j] * action.m[j - 1]}, infinite support",
            )
    if aff:
        k = min(aff)
        return PipelineResult(
            False, rejected_curve=k, reason=f"T{k} is unbounded on the orbit but not tested by {gens}"
        )
    return PipelineResult(True, red.constant, ModuleElement(finite=red.finite_map))


def coloring_from_element(action: Action, v: ModuleElement) -> Coloring:
    """Read an almost constant element as a Q-coloring: default ``z``,
    exceptions where the finite correction is nonzero."""
    red = reduce_element(action, v)
    if red.affine:
        raise DomainError("element has an unbounded coordinate part; not almost constant")
    return Coloring(red.constant, {p: red.constant + x for p, x in red.finite})
