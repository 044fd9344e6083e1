"""Exact boson-fermion correspondence: power sums, Schur functions, alternants, wedges."""

from .asymm import (
    AsymmVector,
    S,
    apply_J,
    apply_J_inverse,
    asymm_inner,
    truncate_S,
    vandermonde,
    verify_J_oracle,
)
from .boson import (
    BosonPolynomial,
    ZMonomial,
    boson_add,
    boson_inner,
    boson_mul,
    boson_scale,
    z,
)
from .bridge import IsometryReport, boson_to_fermion, fermion_to_boson, verify_isometry
from .combinatorics import (
    MayaIndex,
    Partition,
    maya_to_partition,
    partition_to_maya,
    partitions_of,
    z_mu,
)
from .fermion import (
    ChargeError,
    FockVector,
    WedgeMonomial,
    asymm_to_fermion,
    fermion_to_asymm,
    fock_inner,
    normalize_wedge,
    wedge,
)
from .symm import (
    SchurExpansion,
    SymmElement,
    TruncatedPolynomial,
    apply_I,
    apply_I_inverse,
    character_table,
    hall_inner,
    mn_character,
    p,
    power_to_schur,
    schur,
    schur_to_power,
    truncate_symm,
)

__version__ = "0.1.0"
