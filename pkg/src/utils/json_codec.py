"""
Codificación JSON de caras, intervalos, ideales, particiones y series.

∞ se escribe como la cadena "inf"; el resto son enteros. Las salidas usan
orden canónico para que sean estables entre ejecuciones.
"""

from typing import Any, Dict, List, Optional, Sequence
import json

from config import INF_TOKEN
from src.models.core_model import INF, ExtNat, Face, Interval, Monomial, MonomialIdeal, RingContext
from src.models.partition_model import Partition
from src.utils.errors import ParseError


def ext_to_json(value: ExtNat):
    return INF_TOKEN if value is INF else int(value)


def ext_from_json(value: Any) -> ExtNat:
    if value == INF_TOKEN:
        return INF
    if isinstance(value, bool) or not isinstance(value, int):
        raise ParseError(f"Coordenada inválida: {value!r}")
    return value


def face_to_json(face: Face) -> List:
    return [ext_to_json(c) for c in face.coords]


def face_from_json(data: Sequence) -> Face:
    if not isinstance(data, list):
        raise ParseError(f"Se esperaba una lista de coordenadas: {data!r}")
    try:
        return Face(tuple(ext_from_json(c) for c in data))
    except ParseError:
        raise
    except ValueError as exc:
        raise ParseError(str(exc)) from exc


def interval_to_json(iv: Interval) -> Dict[str, List]:
    return {"lo": face_to_json(iv.lo), "hi": face_to_json(iv.hi)}


def interval_from_json(data: Dict) -> Interval:
    if not isinstance(data, dict) or "lo" not in data or "hi" not in data:
        raise ParseError(f"Intervalo sin 'lo'/'hi': {data!r}")
    return Interval(face_from_json(data["lo"]), face_from_json(data["hi"]))


def ideal_to_json(ideal: MonomialIdeal) -> Dict[str, List]:
    return {
        "vars": list(ideal.ring.var_names),
        "gens": [list(g.exponents) for g in ideal.gens],
    }


def ideal_from_json(data: Dict) -> MonomialIdeal:
    """
    {"vars": ["x1", …], "gens": [[e11, …, e1n], …]}.

    Raises:
        ParseError: Documento mal formado o lista de generadores vacía
    """
    if not isinstance(data, dict) or "vars" not in data or "gens" not in data:
        raise ParseError("El ideal debe tener las claves 'vars' y 'gens'")
    if not data["gens"]:
        raise ParseError("Lista de generadores vacía")
    ring = RingContext(len(data["vars"]), tuple(data["vars"]))
    gens = []
    for fila in data["gens"]:
        if not isinstance(fila, list) or len(fila) != ring.n:
            raise ParseError(f"Generador con longitud distinta de {ring.n}: {fila!r}")
        gens.append(Monomial(tuple(fila)))
    return MonomialIdeal(ring, tuple(gens))


def partition_to_json(partition: Partition) -> Dict[str, Any]:
    """Intervalos en orden canónico (Interval.sort_key)."""
    return {
        "ideal": ideal_to_json(partition.ideal),
        "intervals": [interval_to_json(iv) for iv in sorted(partition.intervals, key=Interval.sort_key)],
    }


def partition_from_json(data: Dict, ideal: Optional[MonomialIdeal] = None) -> Partition:
    """Si el documento no trae "ideal" debe pasarse uno."""
    if not isinstance(data, dict) or "intervals" not in data:
        raise ParseError("La partición debe tener la clave 'intervals'")
    if "ideal" in data:
        ideal = ideal_from_json(data["ideal"])
    if ideal is None:
        raise ParseError("La partición no trae ideal y no se proporcionó uno")
    return Partition(ideal, tuple(interval_from_json(d) for d in data["intervals"]))


def dumps(payload: Any) -> str:
    """JSON estable: claves en el orden de construcción, sin espacios finales."""
    return json.dumps(payload, ensure_ascii=False, indent=2)
