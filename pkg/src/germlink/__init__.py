"""Local invariants of map germs (C^2, 0) -> (C^3, 0) and a linking-number verifier."""

__version__ = "0.1.0"

from .scalar import Scalar, scalar_arith  # noqa: E402
from .poly import Ideal, Poly, Ring, conjugate_poly, divided_difference, partial_derivative, poly_arith, substitute  # noqa: E402
from .orders import MonomialOrder  # noqa: E402
from .gb import Codim, INFINITE, eliminate, groebner_basis, local_codim, standard_basis_local  # noqa: E402
from .oracle import OracleUnstable, macaulay_codim_oracle  # noqa: E402
from .algebra import resultant, squarefree_test  # noqa: E402
from .germ import MapGerm  # noqa: E402
from .parse import parse_germ, parse_poly  # noqa: E402
from .syzygy import syzygy_relations  # noqa: E402
from .invariants import (  # noqa: E402
    InvariantReport,
    PresentationMatrix,
    corank,
    double_curve,
    double_space_ideals,
    finite_determinacy_verdict,
    fitting_ideal,
    full_report,
    invariant_C,
    invariant_L,
    invariant_T_fitting,
    invariant_T_triple_space,
    normalize_corank1,
    presentation_matrix,
    ramification_ideal,
)
from .membrane import (  # noqa: E402
    MembranePatch,
    NormalFieldData,
    SignTable,
    intersect_curve_surface,
    orientation_sign,
    pushforward_sum_field,
    shift_membrane,
    verify_lemma_triple_L1,
    verify_lemma_umbrella_L1,
    verify_umbrella_L2,
)
