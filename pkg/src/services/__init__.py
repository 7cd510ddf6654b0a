"""
Módulo de servicios del toolkit.
"""

from .multicomplex_service import build_view, facets, irreducible_decomposition, maximal_faces
from .homology_service import depth_report
from .hilbert_service import hilbert_series, interval_series, series_equal
from .partition_service import verify
from .sdepth_solver import nice_partition, solve_sdepth
from .polarization_service import polarize_ideal, polarize_partition

__all__ = [
    'build_view',
    'facets',
    'irreducible_decomposition',
    'maximal_faces',
    'depth_report',
    'hilbert_series',
    'interval_series',
    'series_equal',
    'verify',
    'nice_partition',
    'solve_sdepth',
    'polarize_ideal',
    'polarize_partition'
]
