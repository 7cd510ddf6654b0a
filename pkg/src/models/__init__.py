"""
Módulo de modelos del toolkit.
"""

from .core_model import INF, Face, Interval, Monomial, MonomialIdeal, RingContext
from .partition_model import Partition, VerificationReport
from .series_model import RationalSeries
from .settings_model import SettingsModel

__all__ = [
    'INF',
    'Face',
    'Interval',
    'Monomial',
    'MonomialIdeal',
    'RingContext',
    'Partition',
    'VerificationReport',
    'RationalSeries',
    'SettingsModel'
]
