"""Orbit modules: finitely supported combinations of orbit points, and a
computable slice of all functions on the orbit.

A ``ModuleElement`` is the function

    E  |->  sum_k a_k * t_k(E)  +  c  +  finite(E)

on the orbit.  Finitely supported elements (``a = 0``, ``c = 0``) are the
finite-support module; the coordinate functions ``t_k`` and the constant
only make sense in the larger module of all functions.  The slice is
closed under the pants twists because the twists act affinely on ``t``.

Conventions: groups act on the left, ``(g.v)(E) = v(g^-1 E)``, so
``g . delta_E = delta_{gE}``; coboundaries are ``u_v(g) = v - g.v``.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Mapping

from . import linalg
from .actions import Action, DTPantsAction, OrbitBall, StabilizerWitness, apply_word
from .errors import DomainError, UnknownGenerator, WindowError
from .presentations import Presentation, Word
from .surface import DTMulticurve


def _clean(items) -> tuple:
    return tuple(sorted((k, Fraction(v)) for k, v in items if v != 0))


@dataclass(frozen=True)
class ModuleElement:
    affine: tuple = ()
    constant: Fraction = Fraction(0)
    finite: tuple = ()

    def __post_init__(self):
        aff = dict(self.affine) if not isinstance(self.affine, Mapping) else self.affine
        fin = dict(self.finite) if not isinstance(self.finite, Mapping) else self.finite
        object.__setattr__(self, "affine", _clean(aff.items()))
        object.__setattr__(self, "constant", Fraction(self.constant))
        object.__setattr__(self, "finite", _clean(fin.items()))

    @classmethod
    def zero(cls) -> "ModuleElement":
        return cls()

    @classmethod
    def one(cls, c=1) -> "ModuleElement":
        return cls(constant=c)

    @classmethod
    def delta(cls, point, c=1) -> "ModuleElement":
        return cls(finite={point: c})

    @classmethod
    def coord(cls, k: int, c=1) -> "ModuleElement":
        return cls(affine={k: c})

    @property
    def affine_map(self) -> dict:
        return dict(self.affine)

    @property
    def finite_map(self) -> dict:
        return dict(self.finite)

    @property
    def support(self) -> tuple:
        return tuple(p for p, _ in self.finite)

    @property
    def is_finitely_supported(self) -> bool:
        return not self.affine and self.constant == 0

    def coefficient(self, point) -> Fraction:
        """Coefficient of ``delta_point`` in the finite part."""
        return dict(self.finite).get(point, Fraction(0))

    def __bool__(self):
        return bool(self.affine or self.constant or self.finite)

    def __add__(self, other: "ModuleElement") -> "ModuleElement":
        aff = dict(self.affine)
        for k, v in other.affine:
            aff[k] = aff.get(k, 0) + v
        fin = dict(self.finite)
        for p, v in other.finite:
            fin[p] = fin.get(p, 0) + v
        return ModuleElement(aff, self.constant + other.constant, fin)

    def __neg__(self):
        return self.scaled(-1)

    def __sub__(self, other):
        return self + (-other)

    def scaled(self, s) -> "ModuleElement":
        s = Fraction(s)
        return ModuleElement(
            {k: s * v for k, v in self.affine}, s * self.constant, {p: s * v for p, v in self.finite}
        )

    __rmul__ = scaled

    def __call__(self, point) -> Fraction:
        return evaluate(self, point)


def evaluate(v: ModuleElement, point) -> Fraction:
    total = v.constant + v.coefficient(point)
    if v.affine:
        if not isinstance(point, DTMulticurve):
            raise DomainError("coordinate functions t_k are only defined on multicurves")
        for k, a in v.affine:
            total += a * point.t[k - 1]
    return total


def reduce_element(action: Action, v: ModuleElement) -> ModuleElement:
    """Canonical representative of ``v`` as a function on the orbit.

    Coordinates that are constant along the orbit are folded into the
    constant, and on a finite orbit everything is folded into point masses.
    Two elements agree as functions iff their reductions are equal.
    """
    if isinstance(action, DTPantsAction):
        aff = {}
        const = v.constant
        for k, a in v.affine:
            if action.m[k - 1]:
                aff[k] = a
            else:
                const += a * action.base.t[k - 1]
        v = ModuleElement(aff, const, v.finite_map)
    elif v.affine:
        raise DomainError("affine part over a finite action table")
    pts = action.finite_points()
    if pts is not None and v.constant:
        fin = v.finite_map
        for p in pts:
            fin[p] = fin.get(p, 0) + v.constant
        v = ModuleElement(v.affine, 0, fin)
    return v


def is_zero(action: Action, v: ModuleElement) -> bool:
    return not reduce_element(action, v)


def act_letter(action: Action, g: str, e: int, v: ModuleElement) -> ModuleElement:
    action.check_generator(g)
    const = v.constant
    if v.affine:
        if not isinstance(action, DTPantsAction):
            raise DomainError("affine part over a finite action table")
        j = action.curve_of(g)
        const -= e * v.affine_map.get(j, 0) * action.m[j - 1]
    fin: dict = {}
    for p, c in v.finite:
        q = action.apply(g, e, p)
        fin[q] = fin.get(q, 0) + c
    return ModuleElement(v.affine, const, fin)


def act(action: Action, w: Word, v: ModuleElement) -> ModuleElement:
    """``w . v``; the rightmost letter acts first."""
    for g, _ in w:
        action.check_generator(g)
    for g, e in reversed(w.letters):
        v = act_letter(action, g, e, v)
    return v


class GeneratorCocycle(Mapping):
    """Values of a 1-cochain on generators; extended to words by the
    crossed-homomorphism rule in ``extend_cocycle``."""

    def __init__(self, values: Mapping[str, ModuleElement]):
        self._values = dict(values)

    def __getitem__(self, g):
        try:
            return self._values[g]
        except KeyError:
            raise UnknownGenerator(g) from None

    def __iter__(self):
        return iter(self._values)

    def __len__(self):
        return len(self._values)

    def __eq__(self, other):
        return isinstance(other, GeneratorCocycle) and self._values == other._values

    def __repr__(self):
        return f"GeneratorCocycle({self._values!r})"

    @property
    def generators(self) -> tuple[str, ...]:
        return tuple(self._values)

    def values_dict(self) -> dict:
        return dict(self._values)


def zero_cocycle(generators: Iterable[str]) -> GeneratorCocycle:
    return GeneratorCocycle({g: ModuleElement() for g in generators})


def extend_cocycle(action: Action, u: Mapping[str, ModuleElement], w: Word) -> ModuleElement:
    """``u(w)`` via ``u(g h) = u(g) + g.u(h)`` and ``u(g^-1) = -g^-1.u(g)``."""
    acc = ModuleElement()
    for g, e in reversed(w.letters):
        if g not in u:
            raise UnknownGenerator(g)
        if e == 1:
            term = u[g]
        else:
            term = -act_letter(action, g, -1, u[g])
        acc = term + act_letter(action, g, e, acc)
    return acc


def check_cocycle(action: Action, u: Mapping[str, ModuleElement], presentation: Presentation) -> list:
    """``[(relator, defect), ...]`` for every relator with ``u(r) != 0``;
    an empty list means ``u`` is a cocycle for the presentation."""
    missing = set(presentation.generators) - set(u)
    if missing:
        raise UnknownGenerator(sorted(missing)[0])
    out = []
    for r in presentation.relators:
        d = reduce_element(action, extend_cocycle(action, u, r))
        if d:
            out.append((r, d))
    return out


def coboundary(action: Action, v: ModuleElement, gens: Iterable[str] | None = None) -> GeneratorCocycle:
    gens = action.generators if gens is None else tuple(gens)
    return GeneratorCocycle({g: v - act_letter(action, g, 1, v) for g in gens})


def cocycles_equal(action: Action, u1: Mapping, u2: Mapping) -> bool:
    if set(u1) != set(u2):
        return False
    return all(is_zero(action, u1[g] - u2[g]) for g in u1)


@dataclass(frozen=True)
class CoboundarySearch:
    witness: ModuleElement | None
    reason: str = ""
    certificate: tuple = field(default=(), repr=False)

    @property
    def found(self) -> bool:
        return self.witness is not None


def is_coboundary(action: Action, u: Mapping[str, ModuleElement], window: OrbitBall) -> CoboundarySearch:
    """Look for ``v`` with ``u(g) = v - g.v`` for every generator.

    ``v`` ranges over coordinate functions of the moving curves plus point
    masses on the window; invariant parts (constants, coordinates of curves
    the orbit does not move) are set to zero.  Either a verified witness is
    returned, or a certificate: a rational combination of the equations
    whose left sides cancel but whose right sides do not.
    """
    interior = set(window.interior())
    reduced = {g: reduce_element(action, u[g]) for g in action.generators}
    for g, val in reduced.items():
        outside = [p for p in val.support if p not in interior]
        if outside:
            raise WindowError(
                f"u({g}) has support at {outside[0]}, outside the window interior"
            )
    dt = isinstance(action, DTPantsAction) and action.finite_points() is None
    moving = action.moving_curves() if dt else ()
    for g, val in reduced.items():
        for k, a in val.affine:
            return CoboundarySearch(
                None,
                f"u({g}) has T{k} coefficient {a}; v - g.v never has an unbounded part",
                ((("affine", g, k), Fraction(1)),),
            )
    points = list(window.points)
    cols = {("a", k): i for i, k in enumerate(moving)}
    for p in points:
        cols[("x", p)] = len(cols)
    n = len(cols)
    rows, rhs, labels = [], [], []
    for g in action.generators:
        val = reduced[g]
        if dt:
            j = action.curve_of(g)
            row = [Fraction(0)] * n
            if action.m[j - 1]:
                row[cols[("a", j)]] = Fraction(action.m[j - 1])
            rows.append(row)
            rhs.append(val.constant)
            labels.append(("constant", g))
        targets = set(points) | {action.apply(g, 1, p) for p in points} | set(val.support)
        for q in sorted(targets):
            row = [Fraction(0)] * n
            if ("x", q) in cols:
                row[cols[("x", q)]] += 1
            src = action.apply(g, -1, q)
            if ("x", src) in cols:
                row[cols[("x", src)]] -= 1
            rows.append(row)
            rhs.append(val.coefficient(q))
            labels.append(("at", g, q))
    x, y = linalg.solve(rows, rhs, n)
    if x is None:
        cert = tuple((labels[i], c) for i, c in enumerate(y) if c != 0)
        return CoboundarySearch(None, "no solution with support in the window", cert)
    aff = {k: x[cols[("a", k)]] for k in moving}
    fin = {p: x[cols[("x", p)]] for p in points}
    v = ModuleElement(aff, 0, fin)
    if not cocycles_equal(action, coboundary(action, v), reduced):
        raise AssertionError("coboundary witness failed verification")
    return CoboundarySearch(v, "witness found")


def include_into_hat(v: ModuleElement) -> ModuleElement:
    """The inclusion of finitely supported elements into all functions."""
    if not v.is_finitely_supported:
        raise DomainError("element has a coordinate or constant part; it is not finitely supported")
    return v


def restriction_hom(
    action: Action,
    u: Mapping[str, ModuleElement],
    stab: StabilizerWitness | Iterable[Word],
    base=None,
) -> dict:
    """Coefficient of the base point in ``u(w)`` for each stabilizer word.

    Equivalently ``u(w)`` evaluated at the base point, which also covers the
    coordinate and constant parts.
    """
    if isinstance(stab, StabilizerWitness):
        words, base = stab.loops, stab.base
    else:
        words = tuple(stab)
        if base is None:
            raise ValueError("base point required when passing bare words")
    out = {}
    for w in words:
        if apply_word(action, w, base) != base:
            raise DomainError(f"word {w} does not fix the base point {base}")
        out[w] = evaluate(extend_cocycle(action, u, w), base)
    return out


@dataclass(frozen=True)
class LadderDefect:
    start: object
    fixed_generator: str
    mover: str
    n: int
    point: object
    forced: Fraction
    actual: Fraction


@dataclass(frozen=True)
class Lemma1Report:
    status: str  # "ok" | "defect" | "inconclusive"
    defects: tuple = ()
    inconclusive: tuple = ()

    @property
    def ok(self) -> bool:
        return self.status == "ok"


def lemma1_diagnostic(action: DTPantsAction, u: Mapping[str, ModuleElement], k: int, window: OrbitBall) -> Lemma1Report:
    """Hunt for nonzero coefficients of ``u(tau_k)`` at points fixed by ``tau_k``.

    If ``u`` satisfies ``[tau_k, tau_j] = 1`` then
    ``(1 - tau_j) u(tau_k) = (1 - tau_k) u(tau_j)``; at a ``tau_k``-fixed
    point the right side vanishes, so a coefficient ``x`` at ``E`` forces
    the same coefficient at ``tau_j^-1 E``, ``tau_j^-2 E``, ...  The first
    rung where the forced term is missing certifies that ``u`` breaks the
    commuting relator.
    """
    gk = action.generators[k - 1]
    uk = reduce_element(action, u[gk])
    if not uk.is_finitely_supported:
        raise DomainError(f"u({gk}) is not finitely supported")
    defects, stuck = [], []
    for E in window.points:
        if action.apply(gk, 1, E) != E:
            continue
        x = uk.coefficient(E)
        if x == 0:
            continue
        for gj in action.generators:
            if gj == gk or action.apply(gj, 1, E) == E:
                continue
            if action.apply(gj, 1, action.apply(gk, 1, E)) != action.apply(gk, 1, action.apply(gj, 1, E)):
                continue
            F, n = E, 0
            while True:
                n += 1
                F = action.apply(gj, -1, F)
                if F not in window:
                    stuck.append((E, gj, n))
                    break
                y = uk.coefficient(F)
                if y != x:
                    defects.append(LadderDefect(E, gk, gj, n, F, x, y))
                    break
    if defects:
        status = "defect"
    elif stuck:
        status = "inconclusive"
    else:
        status = "ok"
    return Lemma1Report(status, tuple(defects), tuple(stuck))
