"""Power-sum decompositions of the Klein quartic and the structures around them.

The package computes six-term decompositions into fourth powers of linear
forms from a single apolar pair, verifies the conic-bundle geometry of the
pair/triple loci, enumerates the quotient covers between the decomposition
varieties, and works out the finite symplectic orbit data behind the two
parity covers.
"""

from .apolarity import (
    catalecticant4,
    contraction_pair,
    klein_pair,
    klein_quartic,
    nullspace,
    omega_matrix,
    power_vec,
)
from .covers import (
    Bipartition,
    PointedDecomposition,
    alpha_fiber_check,
    canonical_key,
    f2_fiber_count,
    f3_fiber_count,
    orderings_count,
    orderings_iter,
    to_bipartitions,
    to_pointed,
    vsp6_chart,
)
from .decompose import (
    Decomposition,
    intersect_conics,
    pair_coefficients,
    reconstruct,
    remainder_pencil,
    split_conic,
    tangent_nullity,
    verify,
)
from .poly import (
    DualPoint,
    Form,
    chordal_distance,
    coefficient_vector,
    evaluate,
    form_from_text,
    form_to_text,
    multinomial_basis,
    partial,
    pow_linear,
    space_dim,
)
from .symplectic import (
    Characteristic,
    QuadFormF2,
    SympMatrixF2,
    act,
    arf,
    cover_report,
    enumerate_characteristics,
    orbits,
    parity,
    perm_representation,
    quadratic_forms,
    sp4_group,
    stabilizer_order,
)
from .varieties import (
    discriminant_sextic,
    fiber_conic,
    g3_fiber_probe,
    membership_p2,
    membership_p3,
    parametrize_fiber,
    sample_p2,
    sample_p3,
)

__version__ = "0.1.0"
