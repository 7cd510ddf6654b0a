"""
Módulo de utilidades del toolkit.
Errores, álgebra lineal exacta, parser y codec JSON.
"""

from .errors import ToolkitError

__all__ = [
    'ToolkitError'
]
