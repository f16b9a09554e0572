"""Point sets on S^d from quadratic forms over finite fields.

Construction: enumerate the solutions of x_1^2 + ... + x_{d+1}^2 = 1 over
F_q (q an odd prime power), center the coordinates around zero, and divide
each integer vector by its Euclidean norm.  The package verifies the
spherical-design strength of these sets with exact rational arithmetic and
computes their Riesz s-energy diagnostics against embedded published tables.
"""

__version__ = "1.0.0"

from .designs import (
    DesignReport,
    HarmonicPolynomial,
    design_strength,
    harmonic_basis,
    harmonic_dim,
    harmonic_sum,
    index_check,
    monomial_point_average,
    monomial_sphere_average,
    monomial_sum,
)
from .energy import (
    EnergyReport,
    SpacingReport,
    conjectured_R_constant,
    energy_integral_constant,
    limit_constant_s_eq_d,
    normalized_report,
    pair_energy,
    pair_energy_many,
    separation_bound_report,
)
from .errors import (
    BudgetError,
    DegeneratePairError,
    FFSphereError,
    PointCollisionError,
    ZeroVectorError,
)
from .fields import (
    ExtensionField,
    FieldElement,
    PrimeField,
    build_extension,
    quadratic_character,
)
from .kernels import backend_name
from .pointset import (
    PointSet,
    SpherePoint,
    build_pointset,
    min_separation,
    orbit_decompose,
)
from .quadform import (
    SolutionSet,
    center_coordinate,
    count_solutions_formula,
    enumerate_solutions,
)
from .reference_tables import (
    ComparisonReport,
    ReferenceRow,
    compare,
    load_appendix,
    reproduce_appendix,
)

__all__ = [
    "BudgetError",
    "ComparisonReport",
    "DegeneratePairError",
    "DesignReport",
    "EnergyReport",
    "ExtensionField",
    "FFSphereError",
    "FieldElement",
    "HarmonicPolynomial",
    "PointCollisionError",
    "PointSet",
    "PrimeField",
    "ReferenceRow",
    "SolutionSet",
    "SpacingReport",
    "SpherePoint",
    "ZeroVectorError",
    "backend_name",
    "build_extension",
    "build_pointset",
    "center_coordinate",
    "compare",
    "conjectured_R_constant",
    "count_solutions_formula",
    "design_strength",
    "energy_integral_constant",
    "enumerate_solutions",
    "harmonic_basis",
    "harmonic_dim",
    "harmonic_sum",
    "index_check",
    "limit_constant_s_eq_d",
    "load_appendix",
    "min_separation",
    "monomial_point_average",
    "monomial_sphere_average",
    "monomial_sum",
    "normalized_report",
    "orbit_decompose",
    "pair_energy",
    "pair_energy_many",
    "quadratic_character",
    "reproduce_appendix",
    "separation_bound_report",
]
