"""Exact tropical (max-plus) eigenpairs and their combinatorial types."""

from .combinat import (
    ConnectedFunction,
    count_connected,
    count_kites,
    cycle_of,
    enumerate_connected,
    enumerate_kites,
    is_connected_function,
    is_kite,
    sigma_fvector,
)
from .cones import (
    classify,
    cone_inequalities,
    fan_failure_witness,
    in_lineality,
    lambda_phi,
    lineality_basis,
    member_closure,
    member_interior,
    realize,
    x_phi,
)
from .core import TropMatrix, kleene_star, trop_apply, trop_mat_mul
from .skewrank import SkewMatrix, classify_skew, rank, realize_kite, skew_cone_structure, validate_skew
from .spectral import (
    critical_data,
    eigenspace,
    eigenvalue,
    eigenvalue_oracle,
    eigenvector,
    maximal_path,
    normalize,
)

__version__ = "0.1.0"
