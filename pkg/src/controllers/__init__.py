"""
Módulo de controladores del toolkit.
Despacho de comandos siguiendo el patrón MVC.
"""

from .toolkit_controller import ToolkitController

__all__ = [
    'ToolkitController'
]
