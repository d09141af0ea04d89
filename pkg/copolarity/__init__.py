"""
Copolarity-Verify Package - Case analysis for abstract copolarity 7, 8 and 9

This package reproduces, as exhaustive exact searches, the case analysis
showing that a non-polar irreducible representation of abstract copolarity
7, 8 or 9 is toric, quaternion-toric, or quotient-equivalent to U(3)xSp(2)
acting on C^3 (x) C^4.

Main Components:
    - weights: Cartan data, weights, Weyl group of A1/A2 products with an optional circle
    - irreps: Weyl dimension, Freudenthal multiplicities, Weyl character, SU(3) shells
    - fixed_space: Fixed-space dimensions of circles, torus elements and involutions
    - certificates: Soundness certificates for finite scans
    - cases: The nine case searches and the aggregate theorem check
    - report / cli: Canonical JSON and Markdown output, baselines, exit codes

Author: Copolarity-Verify
"""

from .axioms import Axiom, axiom_ledger
from .cases import (
    CASE_IDS,
    BoundaryDatum,
    CaseReport,
    FixedDim,
    ScanBounds,
    TheoremReport,
    boundary_dim_bound,
    solve_case,
    theorem_main,
)
from .certificates import Certificate, DiophantineConstraint, diophantine_empty
from .config import Config, get_config, reset_config
from .errors import ArithmeticOverflowError, ComputationError, CopolarityError, InputError
from .fixed_space import (
    BoundMode,
    InvolutionKind,
    InvolutionType,
    TorusElement,
    annihilator_fixed_dim,
    element_fixed_dim,
    element_fixed_dim_oracle,
    involution_fixed_dim,
    max_circle_fixed_dim,
)
from .irreps import (
    IrrepDescriptor,
    Reality,
    WeightDiagram,
    character_polynomial,
    freudenthal_diagram,
    su3_shells,
    weyl_dim,
)
from .logging_config import setup_logging, get_logger
from .weights import GroupType, RationalDirection, Weight

__all__ = [
    'Axiom',
    'axiom_ledger',
    'CASE_IDS',
    'BoundaryDatum',
    'CaseReport',
    'FixedDim',
    'ScanBounds',
    'TheoremReport',
    'boundary_dim_bound',
    'solve_case',
    'theorem_main',
    'Certificate',
    'DiophantineConstraint',
    'diophantine_empty',
    'Config',
    'get_config',
    'reset_config',
    'ArithmeticOverflowError',
    'ComputationError',
    'CopolarityError',
    'InputError',
    'BoundMode',
    'InvolutionKind',
    'InvolutionType',
    'TorusElement',
    'annihilator_fixed_dim',
    'element_fixed_dim',
    'element_fixed_dim_oracle',
    'involution_fixed_dim',
    'max_circle_fixed_dim',
    'IrrepDescriptor',
    'Reality',
    'WeightDiagram',
    'character_polynomial',
    'freudenthal_diagram',
    'su3_shells',
    'weyl_dim',
    'setup_logging',
    'get_logger',
    'GroupType',
    'RationalDirection',
    'Weight',
]
