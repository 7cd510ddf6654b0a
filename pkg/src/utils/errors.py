"""
Excepciones del toolkit.

Todas heredan de ValueError: la entrada inválida se reporta como ValueError
y el CLI traduce cada familia a su código de salida.
"""

from typing import Any, Optional


class ToolkitError(ValueError):
    """Error base del toolkit."""


class DimensionMismatchError(ToolkitError):
    """Caras, intervalos o ideales de anillos con distinto número de variables."""


class UnitIdealError(ToolkitError):
    """Se detectó un generador con todos los exponentes en cero."""


class ZeroIdealError(ToolkitError):
    """El ideal cero no tiene descomposición irreducible (por convención)."""


class ExponentCapError(ToolkitError):
    """Exponente por encima del límite documentado (2^32)."""


class PreconditionError(ToolkitError):
    """No se cumple la precondición de una operación."""


class ParseError(ToolkitError):
    """
    Error de sintaxis en la gramática de ideales o en un documento JSON.

    Attributes:
        position: Posición (0-based) del carácter problemático, o None
    """

    def __init__(self, message: str, position: Optional[int] = None):
        if position is not None:
            message = f"{message} (posición {position})"
        super().__init__(message)
        self.position = position


class CapExceededError(ToolkitError):
    """
    Se superó un límite de recursos.

    Attributes:
        cap_name: Nombre del límite
        limit: Valor configurado
        requested: Tamaño que se habría necesitado
    """

    def __init__(self, cap_name: str, limit: int, requested: Any = None):
        detalle = f" (requerido: {requested})" if requested is not None else ""
        super().__init__(f"Límite '{cap_name}' superado: {limit}{detalle}")
        self.cap_name = cap_name
        self.limit = limit
        self.requested = requested


class SearchCapExceeded(CapExceededError):
    """
    El solver agotó su presupuesto de nodos.

    Attributes:
        best: Mejor resultado encontrado (SolverResult) o None
        unknown_above: Valor d0 tal que no se sabe si existe partición con d > d0
    """

    def __init__(self, limit: int, best: Any = None, unknown_above: Optional[int] = None):
        super().__init__("cap_nodes", limit)
        self.best = best
        self.unknown_above = unknown_above


class VerificationFailure(ToolkitError):
    """El verificador independiente rechazó un artefacto construido por el pipeline."""
