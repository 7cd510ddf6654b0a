"""
Módulo de gestión de datos.
"""

from .ideal_loader import load_ideal, load_partition

__all__ = [
    'load_ideal',
    'load_partition'
]
