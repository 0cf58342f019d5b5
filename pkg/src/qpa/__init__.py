"""Exact and asymptotic calculator for optimal quantum purity amplification."""

from .asymptotics import (
    concentration_bound,
    depolarized_spectrum,
    extensive_fidelity,
    intensive_risk,
    nonasymptotic_all_bound,
    nonasymptotic_one_bound,
    one_site_risk_asymptotic,
    optimality_threshold,
    phase_diagram,
)
from .dense2 import dense_two_copy_fidelity
from .fidelity import (
    FidelityReport,
    f_symbol_sq,
    loss_transforms,
    optimal_sector_channel,
    overall_fidelity,
    sector_fidelity_all,
    sector_fidelity_one,
    utility_component,
)
from .protocol import (
    RemovalVector,
    enumerate_environments,
    overhang_removal,
    reindex_spectrum,
    terminal_index,
)
from .tableaux import (
    GTPattern,
    Spectrum,
    YoungDiagram,
    enumerate_diagrams,
    enumerate_gt_patterns,
    parse_diagram,
    parse_spectrum,
    rsk_shape,
    sample_sw,
    schur_polynomial,
    specht_dim,
    sw_distribution,
    sw_mass,
    weyl_dim,
)

__version__ = "0.1.0"
