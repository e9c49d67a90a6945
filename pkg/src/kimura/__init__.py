"""Exact Kimura-finiteness calculus: symmetric group idempotents, Schur
functors on super-objects, formal motives, orbit categories and quadric
fibrations over curves."""

from .partitions import Partition, conjugate, enumerate_partitions, fits_hook, irrep_dimension
from .symmetric_group import (
    GroupAlgebraElement,
    Permutation,
    character,
    ga_multiply,
    lr_coefficient,
    verify_idempotent_system,
    young_idempotent,
)
from .schur import SuperDim, kim_stats, power_dims, schur_dims, schur_sdim_character
from .motives import FormalMotive, MotiveAtom, euler_char, kim, sdim_of_motive, tate_twist
from .orbit import GradedObject, OrbitMorphism, compose, project, unfold_summand
from .fibration import (
    FibrationSpec,
    kim_fibration,
    motivic_decomposition,
    nc_decompose,
    riemann_hurwitz_cover_genus,
    root_stack_decompose,
)

__version__ = "0.1.0"
