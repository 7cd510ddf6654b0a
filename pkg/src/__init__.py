"""
Toolkit de multicomplejos para ideales monomiales
Paquete principal del código fuente.
"""

__version__ = "0.1.0"
__author__ = "Multicomplex Toolkit Team"
__description__ = "Multicomplejos, profundidad de Stanley y polarización de ideales monomiales"
