"""Group actions on point sets, orbit balls and Schreier loops.

Two kinds of action are supported:

* ``DTPantsAction``: the pants twists ``tau1 .. tauN`` acting on the twist
  orbit of a base multicurve.  This is only the sub-orbit under the twists
  in the pants curves, never the full mapping class group orbit.
* ``ActionTable``: a finite permutation action given by image lists, points
  labelled ``1 .. n``.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Hashable, Iterable, Mapping, Sequence

from .errors import (
    InvalidMulticurve,
    ResourceCapExceeded,
    StructuralError,
    UnknownGenerator,
    UnknownPoint,
)
from .presentations import Word, free_reduce
from .surface import DTMulticurve, PantsDecomposition, _twist_unchecked, multicurve_violations

Point = Hashable

DEFAULT_MAX_POINTS = 200_000


class Action:
    generators: tuple[str, ...] = ()

    def check_generator(self, g: str):
        if g not in self.generators:
            raise UnknownGenerator(g)

    def check_point(self, x):
        raise NotImplementedError

    def apply(self, g: str, e: int, x):
        raise NotImplementedError

    def finite_points(self) -> tuple | None:
        """All points, if the orbit is finite."""
        return None

    def letters(self) -> list[tuple[str, int]]:
        """Generator letters in canonical exploration order."""
        return [(g, e) for g in self.generators for e in (1, -1)]


class DTPantsAction(Action):
    """Pants twists acting on the orbit of ``base``.

    The orbit is ``{t : t_k - base.t_k in m_k * Z}`` with ``m`` fixed, so
    membership is decidable exactly.
    """

    def __init__(self, pants: PantsDecomposition, base: DTMulticurve):
        problems = multicurve_violations(pants, base.m, base.t)
        if problems:
            raise InvalidMulticurve(problems)
        self.pants = pants
        self.base = base
        self.generators = pants.generator_names()
        self._index = {g: k for k, g in enumerate(self.generators, start=1)}

    @property
    def m(self) -> tuple[int, ...]:
        return self.base.m

    def curve_of(self, g: str) -> int:
        try:
            return self._index[g]
        except KeyError:
            raise UnknownGenerator(g) from None

    def contains(self, x) -> bool:
        if not isinstance(x, DTMulticurve) or x.m != self.base.m or len(x.t) != len(self.base.t):
            return False
        for mk, a, b in zip(self.base.m, x.t, self.base.t):
            if mk == 0 and a != b:
                return False
            if mk and (a - b) % mk:
                return False
        return True

    def check_point(self, x):
        if not self.contains(x):
            raise UnknownPoint(x)

    def apply(self, g, e, x):
        return _twist_unchecked(x, self.curve_of(g), e)

    def finite_points(self):
        if any(self.base.m):
            return None
        return (self.base,)

    def moving_curves(self) -> tuple[int, ...]:
        return tuple(k for k, mk in enumerate(self.base.m, start=1) if mk)

    def __repr__(self):
        return f"DTPantsAction(base={self.base})"


class ActionTable(Action):
    """Finite permutation action; ``images[g][i-1]`` is the image of point i."""

    def __init__(self, n_points: int, images: Mapping[str, Sequence[int]]):
        self.n_points = int(n_points)
        self.generators = tuple(images)
        self._fwd: dict[str, tuple[int, ...]] = {}
        self._inv: dict[str, tuple[int, ...]] = {}
        for g, img in images.items():
            img = tuple(int(i) for i in img)
            if len(img) != self.n_points or sorted(img) != list(range(1, self.n_points + 1)):
                raise StructuralError(f"generator {g} is not a permutation of 1..{self.n_points}")
            self._fwd[g] = img
            inv = [0] * self.n_points
            for i, j in enumerate(img, start=1):
                inv[j - 1] = i
            self._inv[g] = tuple(inv)

    @classmethod
    def from_cycles(cls, n_points: int, cycles: Mapping[str, Iterable[Sequence[int]]]):
        """``from_cycles(3, {"a": [(1, 2)], "b": [(2, 3)]})``."""
        images = {}
        for g, cyc in cycles.items():
            img = list(range(1, n_points + 1))
            for c in cyc:
                for i, p in enumerate(c):
                    img[p - 1] = c[(i + 1) % len(c)]
            images[g] = img
        return cls(n_points, images)

    def image_list(self, g: str) -> tuple[int, ...]:
        self.check_generator(g)
        return self._fwd[g]

    def check_point(self, x):
        if not (isinstance(x, int) and 1 <= x <= self.n_points):
            raise UnknownPoint(x)

    def apply(self, g, e, x):
        self.check_generator(g)
        return (self._fwd if e == 1 else self._inv)[g][x - 1]

    def finite_points(self):
        return tuple(range(1, self.n_points + 1))

    def evaluate(self, w: Word) -> tuple[int, ...]:
        """The permutation of ``w`` as an image list."""
        return tuple(apply_word(self, w, x) for x in range(1, self.n_points + 1))

    def is_identity(self, w: Word) -> bool:
        return self.evaluate(w) == tuple(range(1, self.n_points + 1))

    def orbits(self) -> list[list[int]]:
        seen: set[int] = set()
        out = []
        for x in range(1, self.n_points + 1):
            if x in seen:
                continue
            orb = sorted(orbit_ball(self, x, self.n_points).points)
            seen.update(orb)
            out.append(orb)
        return out

    def is_transitive(self) -> bool:
        return len(self.orbits()) == 1

    def __repr__(self):
        return f"ActionTable({self.n_points}, {dict(self._fwd)})"


def apply_word(action: Action, w: Word, x):
    """Left action: the rightmost letter acts first."""
    action.check_point(x)
    for g, _ in w.letters:
        action.check_generator(g)
    for g, e in reversed(w.letters):
        x = action.apply(g, e, x)
    return x


@dataclass(frozen=True)
class OrbitBall:
    base: Point
    radius: int
    points: tuple
    distance: Mapping
    edges: tuple
    complete: bool
    tree: Mapping = field(repr=False)
    action: Action = field(repr=False, compare=False)

    def __len__(self):
        return len(self.points)

    def __contains__(self, x):
        return x in self.distance

    def interior(self) -> tuple:
        """Points all of whose generator images stay inside the ball."""
        inside = set(self.points)
        return tuple(
            p for p in self.points
            if all(self.action.apply(g, e, p) in inside for g, e in self.action.letters())
        )

    def tree_word(self, x) -> Word:
        """Word ``T(x)`` with ``T(x) . base == x`` along the BFS tree."""
        letters = []
        while self.tree[x] is not None:
            parent, letter = self.tree[x]
            letters.append(letter)
            x = parent
        return Word(tuple(letters))


def orbit_ball(action: Action, base, radius: int, max_points: int = DEFAULT_MAX_POINTS) -> OrbitBall:
    """All points within word distance ``radius`` of ``base``.

    Exploration is breadth first with each level processed in canonical
    point order and letters in generator order, so the result, including the
    BFS tree, depends only on the inputs.
    """
    if radius < 0:
        raise ValueError("radius must be non-negative")
    action.check_point(base)
    letters = action.letters()
    distance = {base: 0}
    tree = {base: None}
    frontier = [base]
    for r in range(1, radius + 1):
        nxt = []
        for p in sorted(frontier):
            for g, e in letters:
                q = action.apply(g, e, p)
                if q not in distance:
                    distance[q] = r
                    tree[q] = (p, (g, e))
                    nxt.append(q)
                    if len(distance) > max_points:
                        raise ResourceCapExceeded(
                            f"ball truncated: more than {max_points} points within radius {r}"
                        )
        if not nxt:
            break
        frontier = nxt
    points = tuple(sorted(distance))
    edges = []
    complete = True
    for p in points:
        for g, e in letters:
            q = action.apply(g, e, p)
            if q in distance:
                edges.append((p, (g, e), q))
            else:
                complete = False
    return OrbitBall(base, radius, points, distance, tuple(edges), complete, tree, action)


@dataclass(frozen=True)
class StabilizerWitness:
    base: Point
    tree: Mapping = field(repr=False)
    loops: tuple[Word, ...] = ()
    approximate: bool = False


def schreier_loops(ball: OrbitBall) -> StabilizerWitness:
    """Schreier generators ``T(q)^-1 g T(p)`` for every non-tree edge
    ``p --g--> q`` of the ball.

    When the ball is the whole (finite) orbit these generate the stabilizer
    of the base point; otherwise the witness is flagged approximate.
    """
    loops = []
    for p, (g, e), q in ball.edges:
        if e != 1:
            continue
        w = free_reduce(ball.tree_word(q).inverse() * Word(((g, 1),)) * ball.tree_word(p))
        if len(w):
            loops.append(w)
    for w in loops:
        if apply_word(ball.action, w, ball.base) != ball.base:
            raise AssertionError(f"loop {w} does not fix the base point")
    return StabilizerWitness(ball.base, ball.tree, tuple(loops), approximate=not ball.complete)
