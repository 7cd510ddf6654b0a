"""
Vista de consola del toolkit.

Tablas legibles con pandas por defecto y documentos JSON con --json.
Todo va a la salida estándar; los logs van a stderr.
"""

from typing import Any, Dict, Iterable, List, Sequence, TextIO
import sys

import pandas as pd

from src.models.core_model import Face, Interval, RingContext
from src.models.partition_model import VerificationReport
from src.utils.json_codec import dumps


class ConsoleView:
    """
    Vista de texto.

    Responsabilidades:
    - Renderizar tablas (caras, intervalos, reportes, ledger)
    - Emitir documentos JSON estables
    - Emitir mensajes y diagnósticos
    """

    def __init__(self, stream: TextIO = None, as_json: bool = False):
        self.stream = stream if stream is not None else sys.stdout
        self.as_json = as_json

    def _write(self, text: str) -> None:
        self.stream.write(text.rstrip("\n") + "\n")

    # === Primitivas ===

    def show_json(self, payload: Any) -> None:
        self._write(dumps(payload))

    def show_table(self, df: pd.DataFrame, title: str = "") -> None:
        if title:
            self._write(title)
        if df.empty:
            self._write("(vacío)")
            return
        self._write(df.to_string(index=False))

    def show_message(self, text: str) -> None:
        self._write(text)

    # === Tablas de dominio ===

    @staticmethod
    def faces_frame(ring: RingContext, faces: Sequence[Face]) -> pd.DataFrame:
        """Una fila por cara, una columna por variable, más |infpt|."""
        filas = [[str(c) for c in f.coords] + [len(f.infpt())] for f in faces]
        return pd.DataFrame(filas, columns=list(ring.var_names) + ["|infpt|"])

    @staticmethod
    def intervals_frame(intervals: Iterable[Interval]) -> pd.DataFrame:
        filas = [
            {"lo": str(iv.lo), "hi": str(iv.hi), "|infpt(hi)|": len(iv.hi.infpt())}
            for iv in sorted(intervals, key=Interval.sort_key)
        ]
        return pd.DataFrame(filas, columns=["lo", "hi", "|infpt(hi)|"])

    @staticmethod
    def record_frame(record: Dict[str, Any]) -> pd.DataFrame:
        return pd.DataFrame({"campo": list(record.keys()), "valor": [str(v) for v in record.values()]})

    def show_report(self, report: VerificationReport) -> None:
        if self.as_json:
            self.show_json(report.to_json())
            return
        datos = report.to_json()
        fallas: List[str] = datos.pop("failures")
        self.show_table(self.record_frame(datos), "Verificación")
        for f in fallas:
            self._write(f"  ✗ {f}")
