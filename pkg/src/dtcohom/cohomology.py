"""First cohomology of finitely presented groups with coefficients in a
finite permutation module, computed exactly.

A 1-cochain assigns a vector in Q^points to every generator, so cochains
are vectors indexed by ``(generator, point)``.  Cocycles are the kernel of
the map ``u -> (u(r))_r`` over the relators; coboundaries are the image of
``v -> (v - g.v)_g``.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import permutations
from math import factorial

from . import linalg
from .actions import ActionTable, orbit_ball, schreier_loops
from .errors import DomainError, PresentationMismatch
from .modules import (
    GeneratorCocycle,
    ModuleElement,
    coboundary,
    extend_cocycle,
    reduce_element,
    restriction_hom,
)
from .presentations import Presentation, free_presentation


@dataclass(frozen=True)
class CohomologyReport:
    dim_Z1: int
    dim_B1: int
    dim_H1: int
    dim_H0: int
    n_orbits: int
    coordinates: tuple  # (generator, point) labels of cochain vectors
    z1_basis: tuple
    b1_basis: tuple

    def as_dict(self) -> dict:
        return {
            "dim_Z1": self.dim_Z1,
            "dim_B1": self.dim_B1,
            "dim_H1": self.dim_H1,
            "dim_H0": self.dim_H0,
            "orbits": self.n_orbits,
        }


def _coords(presentation: Presentation, table: ActionTable) -> list:
    return [(g, p) for g in presentation.generators for p in range(1, table.n_points + 1)]


def vector_to_cocycle(coords, vec) -> GeneratorCocycle:
    vals: dict = {}
    for (g, p), c in zip(coords, vec):
        vals.setdefault(g, {})[p] = c
    return GeneratorCocycle({g: ModuleElement(finite=f) for g, f in vals.items()})


def cocycle_to_vector(table: ActionTable, coords, u) -> list[Fraction]:
    red = {g: reduce_element(table, u[g]) for g in {g for g, _ in coords}}
    return [red[g].coefficient(p) for g, p in coords]


def check_relators(presentation: Presentation, table: ActionTable):
    for g in presentation.generators:
        table.check_generator(g)
    for r in presentation.relators:
        if not table.is_identity(r):
            raise PresentationMismatch(
                f"presentation/action mismatch: relator {r} acts as {table.evaluate(r)}"
            )


def h1_finite(presentation: Presentation, table: ActionTable) -> CohomologyReport:
    check_relators(presentation, table)
    coords = _coords(presentation, table)
    ncols = len(coords)
    points = range(1, table.n_points + 1)

    # relator-defect map, one column per basis cochain
    columns = []
    for c in range(ncols):
        unit = [Fraction(int(i == c)) for i in range(ncols)]
        u = vector_to_cocycle(coords, unit)
        col = []
        for r in presentation.relators:
            d = reduce_element(table, extend_cocycle(table, u, r))
            col.extend(d.coefficient(q) for q in points)
        columns.append(col)
    nrows = len(presentation.relators) * table.n_points
    defect = [[columns[c][i] for c in range(ncols)] for i in range(nrows)]
    z1 = linalg.nullspace(defect, ncols)
    dim_z1 = ncols - linalg.rank(defect, ncols) if defect else ncols
    assert dim_z1 == len(z1)

    gens = presentation.generators
    cob_rows = [
        cocycle_to_vector(table, coords, coboundary(table, ModuleElement.delta(p), gens))
        for p in points
    ]
    dim_b1 = linalg.rank(cob_rows, ncols)
    b1 = linalg.row_basis(cob_rows, ncols)
    assert dim_b1 == len(b1)
    n_orbits = len(table.orbits())
    dim_h0 = table.n_points - dim_b1
    if dim_h0 != n_orbits:
        raise AssertionError(f"H0 dimension {dim_h0} differs from orbit count {n_orbits}")
    return CohomologyReport(
        dim_z1,
        dim_b1,
        dim_z1 - dim_b1,
        dim_h0,
        n_orbits,
        tuple(coords),
        tuple(tuple(v) for v in z1),
        tuple(tuple(v) for v in b1),
    )


def _free_transitive(n: int, table: ActionTable):
    if len(table.generators) != n:
        raise DomainError(f"table has {len(table.generators)} generators, rank is {n}")
    if not table.is_transitive():
        raise DomainError("action table is not transitive")


@dataclass(frozen=True)
class ShapiroResult:
    lhs: int
    rhs: int
    n_loops: int
    passed: bool


def shapiro_verify(n: int, table: ActionTable) -> ShapiroResult:
    """Compare ``dim H^1(F_n, Q[points])`` with the rank ``e(n-1)+1`` of
    the point stabilizer, which is free by Nielsen-Schreier."""
    _free_transitive(n, table)
    e = table.n_points
    lhs = h1_finite(free_presentation(table.generators), table).dim_H1
    rhs = e * (n - 1) + 1
    loops = schreier_loops(orbit_ball(table, 1, e)).loops
    return ShapiroResult(lhs, rhs, len(loops), lhs == rhs == len(loops))


@dataclass(frozen=True)
class RestrictionIsoResult:
    dim_H1: int
    n_loops: int
    rank: int
    coboundaries_vanish: bool
    passed: bool


def restriction_iso_check(n: int, table: ActionTable) -> RestrictionIsoResult:
    """Check that restricting cocycles to the stabilizer of point 1 (the
    coefficient of the base point on each Schreier loop) induces an
    isomorphism from H^1 onto Hom(stabilizer, Q)."""
    _free_transitive(n, table)
    pres = free_presentation(table.generators)
    report = h1_finite(pres, table)
    stab = schreier_loops(orbit_ball(table, 1, table.n_points))
    coords = report.coordinates

    def restrict(vec):
        vals = restriction_hom(table, vector_to_cocycle(coords, vec), stab)
        return [vals[w] for w in stab.loops]

    images = [restrict(v) for v in report.z1_basis]
    r = linalg.rank(images, len(stab.loops)) if images else 0
    vanish = all(not any(restrict(v)) for v in report.b1_basis)
    injective = vanish and r == report.dim_H1
    surjective = r == len(stab.loops)
    return RestrictionIsoResult(report.dim_H1, len(stab.loops), r, vanish, injective and surjective)


def transitive_pairs(e: int):
    """All ordered pairs of permutations of 1..e generating a transitive
    action, in lexicographic order.  ``(e!)^2`` candidates, so keep e small."""
    perms = [tuple(p) for p in permutations(range(1, e + 1))]
    assert len(perms) == factorial(e)
    for a in perms:
        for b in perms:
            t = ActionTable(e, {"a": a, "b": b})
            if t.is_transitive():
                yield t
