"""Exact lattice computations on the numerical K-group of bielliptic surfaces."""

from .delta import (
    DeltaModel,
    default_delta,
    delta_basis,
    enumerate_admissible_models,
    in_delta,
    is_admissible,
)
from .errors import DomainError, PreconditionError
from .factorization import (
    Decomposition,
    GeneratorWord,
    decompose,
    factor_point_image,
    is_in_image,
    verify_word,
)
from .isometries import NumIsometry, UIsometry, block, image_index, is_isometry, preserves_delta
from .lattice import (
    BASIS,
    E1,
    E2,
    GRAM,
    P0,
    P4,
    DivisorClass,
    NumClass,
    SurfaceProfile,
    euler_pairing,
    intersect,
    is_isotropic,
    is_primitive,
    line_bundle_class,
    surface_profile,
)
from .letters import RelFMA, RelFMB, Shift, TensorLB, compose, letter_action, psi_B, psi_hat

__version__ = "0.1.0"
