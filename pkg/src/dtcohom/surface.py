"""Surfaces, pants decompositions and Dehn-Thurston coordinates.

A multicurve is stored as two integer vectors ``m`` (intersection numbers
with the pants curves) and ``t`` (twisting numbers).  The twist in the
k-th pants curve only ever touches ``t[k]``::

    t_k(tau_k^n D) = t_k(D) + n * m_k(D)

Curve indices are 1-based in the public API, matching the ``tau1 .. tauN``
generator names used everywhere else.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import reduce
from math import gcd
from typing import Sequence

from .errors import InvalidMulticurve, InvalidSurface, StructuralError


@dataclass(frozen=True)
class SurfaceSpec:
    genus: int
    boundary_count: int = 0

    def __post_init__(self):
        if self.genus < 0 or self.boundary_count < 0:
            raise InvalidSurface("genus and boundary count must be non-negative")
        if self.n_curves < 1:
            raise InvalidSurface(
                f"surface g={self.genus} r={self.boundary_count} has no pants curves "
                "(need 3g + r - 3 >= 1)"
            )

    @property
    def n_curves(self) -> int:
        return 3 * self.genus + self.boundary_count - 3

    @property
    def n_pants(self) -> int:
        return 2 * self.genus - 2 + self.boundary_count


@dataclass(frozen=True)
class PantsDecomposition:
    """Purely combinatorial pants decomposition.

    ``pants`` maps each pair of pants (by name) to its three slot labels.  A
    label that is listed in ``curves`` is a pants curve and must fill exactly
    two slots; every other label is a surface boundary and fills one.
    """

    surface: SurfaceSpec
    curves: tuple[str, ...]
    pants: tuple[tuple[str, tuple[str, str, str]], ...]

    def __post_init__(self):
        problems = []
        if len(self.curves) != self.surface.n_curves:
            problems.append(
                f"expected {self.surface.n_curves} pants curves, got {len(self.curves)}"
            )
        if len(set(self.curves)) != len(self.curves):
            problems.append("duplicate pants-curve labels")
        if len(self.pants) != self.surface.n_pants:
            problems.append(f"expected {self.surface.n_pants} pants, got {len(self.pants)}")
        names = [name for name, _ in self.pants]
        if len(set(names)) != len(names):
            problems.append("duplicate pants names")
        counts: dict[str, int] = {}
        for name, slots in self.pants:
            if len(slots) != 3:
                problems.append(f"pants {name} has {len(slots)} slots, expected 3")
            for label in slots:
                counts[label] = counts.get(label, 0) + 1
        for label in self.curves:
            if counts.get(label, 0) != 2:
                problems.append(
                    f"pants curve {label} occurs in {counts.get(label, 0)} slots, expected 2"
                )
        boundary = [label for label in counts if label not in self.curves]
        for label in boundary:
            if counts[label] != 1:
                problems.append(f"boundary {label} occurs in {counts[label]} slots, expected 1")
        if len(boundary) != self.surface.boundary_count:
            problems.append(
                f"expected {self.surface.boundary_count} boundary labels, got {len(boundary)}"
            )
        if problems:
            raise InvalidSurface("; ".join(problems))

    @property
    def n_curves(self) -> int:
        return len(self.curves)

    @property
    def boundary_labels(self) -> tuple[str, ...]:
        seen = []
        for _, slots in self.pants:
            for label in slots:
                if label not in self.curves and label not in seen:
                    seen.append(label)
        return tuple(seen)

    def curve_index(self, label: str) -> int:
        return self.curves.index(label) + 1

    def generator_names(self) -> tuple[str, ...]:
        return tuple(f"tau{k}" for k in range(1, self.n_curves + 1))


def theta_genus2() -> PantsDecomposition:
    """Closed genus 2 cut along three non-separating curves into two pants,
    each bounded by g1, g2, g3."""
    return PantsDecomposition(
        SurfaceSpec(2, 0),
        ("g1", "g2", "g3"),
        (("P1", ("g1", "g2", "g3")), ("P2", ("g1", "g2", "g3"))),
    )


def standard_pants(genus: int, boundary_count: int = 0) -> PantsDecomposition:
    """A caterpillar decomposition: pants P1..Pn glued in a path, with the
    leftover slots paired into ``genus`` extra curves and the rest left as
    boundary."""
    surface = SurfaceSpec(genus, boundary_count)
    n = surface.n_pants
    slots: list[list[str | None]] = [[None, None, None] for _ in range(n)]
    curves = []
    for i in range(n - 1):
        label = f"g{len(curves) + 1}"
        curves.append(label)
        slots[i][2] = label
        slots[i + 1][0] = label
    free = [(i, j) for i in range(n) for j in range(3) if slots[i][j] is None]
    for p in range(genus):
        label = f"g{len(curves) + 1}"
        curves.append(label)
        for i, j in free[2 * p: 2 * p + 2]:
            slots[i][j] = label
    for b, (i, j) in enumerate(free[2 * genus:], start=1):
        slots[i][j] = f"b{b}"
    pants = tuple((f"P{i + 1}", tuple(s)) for i, s in enumerate(slots))
    return PantsDecomposition(surface, tuple(curves), pants)


@dataclass(frozen=True, order=True)
class DTMulticurve:
    """Dehn-Thurston coordinates ``(m, t)``.  Ordering is lexicographic on
    ``(m, t)``, which is the canonical point order for orbit output."""

    m: tuple[int, ...]
    t: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "m", tuple(int(x) for x in self.m))
        object.__setattr__(self, "t", tuple(int(x) for x in self.t))
        if len(self.m) != len(self.t):
            raise StructuralError(
                f"m has length {len(self.m)} but t has length {len(self.t)}"
            )

    def __len__(self):
        return len(self.m)

    @property
    def is_empty(self) -> bool:
        return not any(self.m) and not any(self.t)

    def __str__(self):
        return f"(({','.join(map(str, self.m))}),({','.join(map(str, self.t))}))"


def multicurve_violations(pants: PantsDecomposition, m: Sequence[int], t: Sequence[int]) -> list[str]:
    """Every violated coordinate condition, as readable strings.

    Raises ``StructuralError`` when the vectors have the wrong length; that
    is a usage problem, not an invariant violation.
    """
    n = pants.n_curves
    if len(m) != n or len(t) != n:
        raise StructuralError(
            f"coordinate vectors must have length {n}, got m:{len(m)} t:{len(t)}"
        )
    out = []
    for k, mk in enumerate(m, start=1):
        if mk < 0:
            out.append(f"m_{k} = {mk} is negative")
    for name, slots in pants.pants:
        total = sum(m[pants.curves.index(s)] for s in slots if s in pants.curves)
        if total % 2:
            out.append(f"odd m-sum {total} at pants {name}")
    for k, (mk, tk) in enumerate(zip(m, t), start=1):
        if mk == 0 and tk < 0:
            out.append(f"t_{k} = {tk} < 0 while m_{k} = 0")
    return out


def validate_multicurve(pants: PantsDecomposition, m: Sequence[int], t: Sequence[int]) -> list[str]:
    """Empty list means the coordinates describe a multicurve."""
    return multicurve_violations(pants, m, t)


def make_multicurve(pants: PantsDecomposition, m: Sequence[int], t: Sequence[int]) -> DTMulticurve:
    problems = multicurve_violations(pants, m, t)
    if problems:
        raise InvalidMulticurve(problems)
    return DTMulticurve(tuple(m), tuple(t))


def _check(pants: PantsDecomposition, D: DTMulticurve, k: int | None = None):
    problems = multicurve_violations(pants, D.m, D.t)
    if problems:
        raise InvalidMulticurve(problems)
    if k is not None and not 1 <= k <= pants.n_curves:
        raise IndexError(f"curve index {k} out of range 1..{pants.n_curves}")


def twist(pants: PantsDecomposition, D: DTMulticurve, k: int, n: int = 1) -> DTMulticurve:
    """Apply ``tau_k ** n``."""
    _check(pants, D, k)
    return _twist_unchecked(D, k, n)


def _twist_unchecked(D: DTMulticurve, k: int, n: int) -> DTMulticurve:
    if n == 0 or D.m[k - 1] == 0:
        return D
    t = list(D.t)
    t[k - 1] += n * D.m[k - 1]
    return DTMulticurve(D.m, tuple(t))


def intersection_with_pants_curve(D: DTMulticurve, k: int) -> int:
    if not 1 <= k <= len(D):
        raise IndexError(f"curve index {k} out of range 1..{len(D)}")
    return D.m[k - 1]


def scale(D: DTMulticurve, n: int) -> DTMulticurve:
    """``D**n``: every component replaced by n parallel copies."""
    if n <= 0:
        raise ValueError(f"scale factor must be positive, got {n}")
    return DTMulticurve(tuple(n * x for x in D.m), tuple(n * x for x in D.t))


@dataclass(frozen=True)
class Primitive:
    d: int
    reduced: DTMulticurve
    empty: bool = False


def primitive(D: DTMulticurve) -> Primitive:
    """Split off the gcd of the coordinates so that ``D == scale(reduced, d)``."""
    coords = [abs(x) for x in D.m + D.t if x]
    if not coords:
        return Primitive(1, D, empty=True)
    d = reduce(gcd, coords)
    return Primitive(d, DTMulticurve(tuple(x // d for x in D.m), tuple(x // d for x in D.t)))
