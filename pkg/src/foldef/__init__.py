"""foldef: exact first-order deformation spaces of homogeneous polynomial one-forms.

Core objects: exact scalars (Q and Q(i)), sparse polynomials, alternating
polynomial forms with wedge / exterior derivative / interior product, the
rational / logarithmic / exact foliation classes, deformation and
relative-cohomology kernels as canonical echelon bases, and the
projectivization bridge.
"""

from .scalars import GaussianRational, Scalar, make_scalar, render_scalar
from .poly import DEGREE_OF_ZERO, Monomial, Poly, monomials_of_degree
from .forms import (
    Form,
    VectorField,
    cartan_check,
    contract,
    ext_d,
    lie_radial,
    radial_field,
    wedge,
)
from .foliations import (
    AffineLogarithmic,
    AffineRational,
    Exact,
    FoliationSpec,
    GenericityReport,
    IntegrationDecomposition,
    Raw,
    degree_of,
    eigenvalue_list,
    genericity_check,
    integrating_factor,
    integration_lemma_decompose,
    is_integrable,
    mu_of,
    realize,
)
from .deformation import (
    DeformOperator,
    DeformationReport,
    DicriticalClassification,
    RelCohomOperator,
    deform_operator,
    dicritical_classify,
    different_degree_solutions,
    eigen_perturbation_space,
    kernel_space,
    param_perturbation_space,
    relcohom_operator,
    verify_coro1,
    verify_decomposition,
)
from .projective import (
    ProjectivizedParameters,
    dehomogenize,
    descends,
    projective_deformation_space,
    projectivize,
    projectivized_log_parameters,
    verify_affine_def_lemma,
)
from .spaces import SubspaceBasis, one_form_coordinates, span_of_forms
from .expressions import (
    ExpressionError,
    default_variables,
    parse_form,
    parse_poly,
    parse_scalar,
    render_form,
    render_poly,
)

__version__ = "0.1.0"

__all__ = [
    "AffineLogarithmic",
    "AffineRational",
    "DEGREE_OF_ZERO",
    "DeformOperator",
    "DeformationReport",
    "DicriticalClassification",
    "Exact",
    "ExpressionError",
    "FoliationSpec",
    "Form",
    "GaussianRational",
    "GenericityReport",
    "IntegrationDecomposition",
    "Monomial",
    "Poly",
    "ProjectivizedParameters",
    "Raw",
    "RelCohomOperator",
    "Scalar",
    "SubspaceBasis",
    "VectorField",
    "cartan_check",
    "contract",
    "deform_operator",
    "degree_of",
    "dehomogenize",
    "descends",
    "dicritical_classify",
    "different_degree_solutions",
    "default_variables",
    "eigen_perturbation_space",
    "eigenvalue_list",
    "ext_d",
    "genericity_check",
    "integrating_factor",
    "integration_lemma_decompose",
    "is_integrable",
    "kernel_space",
    "lie_radial",
    "make_scalar",
    "monomials_of_degree",
    "mu_of",
    "one_form_coordinates",
    "param_perturbation_space",
    "parse_form",
    "parse_poly",
    "parse_scalar",
    "projective_deformation_space",
    "projectivize",
    "projectivized_log_parameters",
    "radial_field",
    "realize",
    "relcohom_operator",
    "render_form",
    "render_poly",
    "render_scalar",
    "span_of_forms",
    "verify_affine_def_lemma",
    "verify_coro1",
    "verify_decomposition",
    "wedge",
]
