"""
Módulo para cargar ideales y particiones desde archivos JSON.

Lee el documento con encoding UTF-8 (fallback a latin-1) y delega la
validación de estructura en el codec JSON.
"""

from pathlib import Path
from typing import Any, Optional
import json
import logging

from src.models.core_model import MonomialIdeal
from src.models.partition_model import Partition
from src.utils.errors import ParseError
from src.utils.ideal_parser import parse_ideal
from src.utils.json_codec import ideal_from_json, partition_from_json


logger = logging.getLogger("IdealLoader")


def _read_json(file_path: str) -> Any:
    """
    Raises:
        FileNotFoundError: Si el archivo no existe
        ParseError: Si el contenido no es JSON válido
    """
    ruta = Path(file_path)
    if not ruta.exists():
        raise FileNotFoundError(f"No existe el archivo: {file_path}")
    try:
        texto = ruta.read_text(encoding="utf-8")
    except UnicodeDecodeError:
        texto = ruta.read_text(encoding="latin-1")
    try:
        return json.loads(texto)
    except json.JSONDecodeError as exc:
        raise ParseError(f"JSON inválido en {file_path}: {exc.msg}", exc.pos) from exc


def load_ideal(source: str) -> MonomialIdeal:
    """
    Carga un ideal desde una expresión en línea o desde la ruta de un JSON.

    Se interpreta como archivo si termina en .json o si existe en disco.

    Args:
        source: "x1^2, x1*x2" o "ideal.json"

    Returns:
        Ideal minimalizado
    """
    if source.endswith(".json") or Path(source).is_file():
        ideal = ideal_from_json(_read_json(source))
        logger.info(f"Ideal cargado desde {source}: ({ideal})")
        return ideal
    return parse_ideal(source)


def load_partition(file_path: str, ideal: Optional[MonomialIdeal] = None) -> Partition:
    """Carga una partición; si el archivo no trae ideal se usa el dado."""
    particion = partition_from_json(_read_json(file_path), ideal)
    logger.info(f"Partición cargada desde {file_path}: {len(particion)} intervalos")
    return particion
