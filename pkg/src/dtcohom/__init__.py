"""Exact computations with multicurves in Dehn-Thurston coordinates and the
first cohomology of groups acting on their orbits."""
from .actions import (
    ActionTable,
    DTPantsAction,
    OrbitBall,
    StabilizerWitness,
    apply_word,
    orbit_ball,
    schreier_loops,
)
from .cohomology import (
    CohomologyReport,
    h1_finite,
    restriction_iso_check,
    shapiro_verify,
)
from .colorings import (
    Coloring,
    WindowColoring,
    are_equivalent,
    invariance_report,
    invariant_class_pipeline,
    is_trivial,
)
from .modules import (
    GeneratorCocycle,
    ModuleElement,
    act,
    check_cocycle,
    coboundary,
    extend_cocycle,
    include_into_hat,
    is_coboundary,
    lemma1_diagnostic,
    restriction_hom,
)
from .presentations import (
    Presentation,
    Word,
    braid_relator,
    chain_relator,
    commuting_relator,
    free_reduce,
)
from .surface import (
    DTMulticurve,
    PantsDecomposition,
    SurfaceSpec,
    intersection_with_pants_curve,
    primitive,
    scale,
    standard_pants,
    theta_genus2,
    twist,
    validate_multicurve,
)

__version__ = "0.1.0"
