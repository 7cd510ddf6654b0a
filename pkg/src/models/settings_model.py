"""
Modelo para Settings (Configuración del toolkit).
Gestiona el cuerpo de coeficientes, los límites de recursos y las opciones del solver.
"""

from typing import Any, Dict
import logging

from config import (
    DEFAULT_BOX_CAP,
    DEFAULT_CANDIDATE_CAP,
    DEFAULT_FIELD,
    DEFAULT_GENERATOR_CAP,
    DEFAULT_MATRIX_CAP,
    DEFAULT_NODE_CAP,
)


logger = logging.getLogger("SettingsModel")


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    k = 2
    while k * k <= p:
        if p % k == 0:
            return False
        k += 1
    return True


class SettingsModel:
    """
    Modelo de datos para la configuración del toolkit.

    Responsabilidades:
    - Gestionar el cuerpo K (característica 0 para ℚ o un primo p)
    - Gestionar los límites de recursos de cada algoritmo
    - Gestionar el reintento g + 1 del solver
    """

    def __init__(self):
        self._field_char: int = 0
        self._caps: Dict[str, int] = {
            "cap_candidates": DEFAULT_CANDIDATE_CAP,
            "cap_generators": DEFAULT_GENERATOR_CAP,
            "cap_box": DEFAULT_BOX_CAP,
            "cap_nodes": DEFAULT_NODE_CAP,
            "cap_matrix": DEFAULT_MATRIX_CAP,
        }
        self._g_bump: bool = False
        self.set_field(DEFAULT_FIELD)

    # === Cuerpo ===

    def set_field(self, spec: str) -> None:
        """
        Establece el cuerpo a partir de "q" o "fp:<p>".

        Raises:
            ValueError: Si el texto no es válido o p no es primo
        """
        texto = str(spec).strip().lower()
        if texto == "q":
            car = 0
        elif texto.startswith("fp:"):
            try:
                car = int(texto[3:])
            except ValueError:
                raise ValueError(f"Característica inválida: {spec!r}") from None
            if not _is_prime(car):
                raise ValueError(f"La característica debe ser un primo: {car}")
            if car >= 2 ** 31:
                raise ValueError(f"Primo demasiado grande (máximo 2^31): {car}")
        else:
            raise ValueError(f"Cuerpo inválido: {spec!r} (use q o fp:<p>)")
        if car != self._field_char:
            self._field_char = car
            logger.info(f"Cuerpo actualizado: {self.field_label()}")

    def field_char(self) -> int:
        return self._field_char

    def field_label(self) -> str:
        return "Q" if self._field_char == 0 else f"GF({self._field_char})"

    # === Límites ===

    def set_cap(self, name: str, value: Any) -> None:
        """
        Establece un límite. Acepta int o string.

        Raises:
            KeyError: Si el límite no existe
            ValueError: Si el valor no es un entero positivo
        """
        if name not in self._caps:
            raise KeyError(f"Límite desconocido: {name}")
        try:
            val = int(value)
        except (TypeError, ValueError):
            raise ValueError(f"Valor inválido para {name}: {value!r}") from None
        if val < 1:
            raise ValueError(f"El límite {name} debe ser positivo: {val}")
        if val != self._caps[name]:
            self._caps[name] = val
            logger.info(f"{name} actualizado: {val:,}")

    def cap(self, name: str) -> int:
        return self._caps[name]

    def caps(self) -> Dict[str, int]:
        return dict(self._caps)

    def set_node_cap(self, value: Any) -> None:
        self.set_cap("cap_nodes", value)

    def set_candidate_cap(self, value: Any) -> None:
        self.set_cap("cap_candidates", value)

    # === Solver ===

    def set_g_bump(self, enabled: bool) -> None:
        self._g_bump = bool(enabled)

    def g_bump(self) -> bool:
        return self._g_bump
