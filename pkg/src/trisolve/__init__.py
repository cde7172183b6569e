"""Triangle solving from two sides and the included angle (SAS), built on a
Law-of-Sines tangent half-angle pipeline, with a Law-of-Cosines cross-check,
an extended-precision reference, and accuracy-measurement tooling."""

from .errors import DomainError
from .family import FamilySample, family_point, family_sweep, trinomial_f
from .harness import (
    REGIMES,
    ComparisonRecord,
    ComparisonReport,
    CorpusSpec,
    MethodErrors,
    compare_methods,
    compare_regimes,
    generate_corpus,
    reference_solution,
)
from .ratio import componendo, lemma_equivalence_check
from .solver import (
    HalfAngleState,
    SasProblem,
    TriangleSolution,
    angles_from_t,
    half_angle_state,
    nu_from,
    solve_sas_cosines,
    solve_sas_sines,
    t45_omega,
    t_from_nu,
    third_side,
)
from .trig import (
    DegAngle,
    addition_formula_residual,
    angle_from_half_tangent,
    arctan_deg,
    cofunction_residual,
    cos_deg,
    cot_deg,
    sin_deg,
    sum_to_product_residual,
    tan_deg,
)

__all__ = [
    "DegAngle",
    "DomainError",
    "SasProblem",
    "HalfAngleState",
    "TriangleSolution",
    "FamilySample",
    "CorpusSpec",
    "MethodErrors",
    "ComparisonRecord",
    "ComparisonReport",
    "REGIMES",
    "sin_deg",
    "cos_deg",
    "tan_deg",
    "cot_deg",
    "arctan_deg",
    "angle_from_half_tangent",
    "sum_to_product_residual",
    "cofunction_residual",
    "addition_formula_residual",
    "componendo",
    "lemma_equivalence_check",
    "nu_from",
    "t_from_nu",
    "half_angle_state",
    "angles_from_t",
    "third_side",
    "solve_sas_sines",
    "solve_sas_cosines",
    "t45_omega",
    "trinomial_f",
    "family_point",
    "family_sweep",
    "generate_corpus",
    "reference_solution",
    "compare_methods",
    "compare_regimes",
]

__version__ = "0.1.0"
