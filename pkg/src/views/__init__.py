"""
Módulo de vistas del toolkit.
"""

from .console_view import ConsoleView

__all__ = [
    'ConsoleView'
]
