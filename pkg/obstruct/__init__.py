from __future__ import absolute_import, division, print_function

__version__ = '0.1.0'

from .simplicial import (
    SimplicialComplex,
    SimplicialPair,
    SimplicialMap,
    build_complex,
    boundary_matrix,
    induced_chain_map,
)
from .linalg import (
    SparseIntMatrix,
    SmithDecomposition,
    smith_normal_form,
    solve_integer,
    reduce_mod_p,
)
from .cohomology import (
    HomologyGroup,
    CohomologyClass,
    homology,
    cohomology,
    pullback,
    is_cohomologous,
    degree,
)
from .operations import (
    CohomologyOperation,
    cup,
    cup_i,
    steenrod_sq,
    apply_theta,
    mapping_cone,
    hopf_invariant,
)
from .manifolds import (
    ThomModel,
    IntersectionForm,
    fundamental_class,
    intersection_form,
    self_intersection,
    thom_square,
    sq2_thom,
)
from .defects import (
    FibrationProfile,
    SurfaceDefect,
    DefectConfiguration,
    VerificationReport,
    verify_prop1,
    verify_prop2,
    theorem_instance_check,
    infer_sign,
    local_index,
)

__all__ = [
    'SimplicialComplex',
    'SimplicialPair',
    'SimplicialMap',
    'build_complex',
    'boundary_matrix',
    'induced_chain_map',
    'SparseIntMatrix',
    'SmithDecomposition',
    'smith_normal_form',
    'solve_integer',
    'reduce_mod_p',
    'HomologyGroup',
    'CohomologyClass',
    'homology',
    'cohomology',
    'pullback',
    'is_cohomologous',
    'degree',
    'CohomologyOperation',
    'cup',
    'cup_i',
    'steenrod_sq',
    'apply_theta',
    'mapping_cone',
    'hopf_invariant',
    'ThomModel',
    'IntersectionForm',
    'fundamental_class',
    'intersection_form',
    'self_intersection',
    'thom_square',
    'sq2_thom',
    'FibrationProfile',
    'SurfaceDefect',
    'DefectConfiguration',
    'VerificationReport',
    'verify_prop1',
    'verify_prop2',
    'theorem_instance_check',
    'infer_sign',
    'local_index',
]
