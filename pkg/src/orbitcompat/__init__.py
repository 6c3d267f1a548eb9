"""orbitcompat: exact computer algebra for compactified adjoint orbits.

Groebner bases over Q, ideal homogenisation and saturation, Hilbert series,
adjoint-orbit and fibre ideals, Chern-class Euler characteristics and
Hodge-diamond bookkeeping, all with exact rational arithmetic.
"""

from ._kernel import BACKEND as kernel_backend
from .polyring import (
    GREVLEX,
    LEX,
    ContextMismatch,
    MonomialOrder,
    MultiPoly,
    PolyError,
    VarContext,
    dehomogenise_poly,
    elimination,
    homogenise_poly,
    order_from_name,
)
from .parsing import ParseError, parse_poly, poly_to_string
from .errors import ResourceLimitExceeded
from .groebner import (
    GBLimits,
    IdealPresentation,
    ReducedGB,
    buchberger,
    dehomogenise_ideal,
    eliminate,
    homogenise_ideal,
    homogenise_naive,
    ideal_contains,
    ideal_equal,
    normal_form,
    saturate,
)
from .hilbert import HilbertData, hilbert
from .orbits import (
    DiagSpec,
    GenericMatrix,
    OrbitIdeal,
    fibre_ideal,
    generic_matrix,
    orbit_ideal_charvalues,
    orbit_ideal_minpoly,
    potential,
    vertical_fibre_closure,
    weyl_critical,
)
from .chern import (
    CompleteIntersectionSpec,
    TruncatedSeries,
    chern_series,
    degree_product,
    expected_euler,
)
from .diamonds import (
    FIXTURES,
    HodgeDiamond,
    IncompleteDiamondError,
    diamond_pn_pn_dual,
    euler_from_diamond,
    fixture,
    lefschetz_restrict,
    render_diamond,
    vanishing_cycle_obstruction,
)

__version__ = "0.1.0"
