"""
Controlador del toolkit.
Despacha cada comando del CLI a los servicios y entrega el resultado a la vista.
"""

from typing import Any, Callable, Dict, Mapping, Optional
import json
import logging

import pandas as pd

from config import (
    DEFAULT_CORPUS_NODE_CAP,
    DEFAULT_CORPUS_SIZE,
    DEFAULT_MAX_EXP,
    DEFAULT_MAX_GENS,
    DEFAULT_MAX_N,
    DEFAULT_SEED,
)
from data.ideal_loader import load_ideal, load_partition
from src.models.core_model import MonomialIdeal
from src.models.partition_model import Partition
from src.models.settings_model import SettingsModel
from src.services.corpus_service import corpus_ledger, generate_corpus
from src.services.hilbert_service import hilbert_series
from src.services.homology_service import betti_total, depth_report
from src.services.multicomplex_service import (
    assoc_primes,
    build_view,
    irreducible_decomposition,
)
from src.services.partition_service import classify, refine_to_facets, verify
from src.services.polarization_service import polarize_ideal, polarize_partition
from src.services.sdepth_solver import SolverResult, nice_partition, solve_sdepth
from src.utils.errors import CapExceededError, PreconditionError, SearchCapExceeded, VerificationFailure
from src.utils.json_codec import face_to_json, ideal_to_json, partition_to_json
from src.views.console_view import ConsoleView


logger = logging.getLogger("ToolkitController")

EXIT_OK = 0
EXIT_NEGATIVE = 1
EXIT_USAGE = 2
EXIT_CAP = 3


class ToolkitController:
    """
    Controlador de comandos.

    Responsabilidades:
    - Cargar ideales y particiones (inline o JSON)
    - Invocar los servicios con los límites de SettingsModel
    - Traducir errores a códigos de salida (0, 1, 2, 3)
    """

    def __init__(self, settings: Optional[SettingsModel] = None, view: Optional[ConsoleView] = None):
        self._settings = settings if settings is not None else SettingsModel()
        self._view = view if view is not None else ConsoleView()
        self._commands: Dict[str, Callable[[Mapping[str, Any]], int]] = {
            "decompose": self._decompose,
            "facets": self._facets,
            "depth": self._depth,
            "sdepth": self._sdepth,
            "hilbert": self._hilbert,
            "polarize": self._polarize,
            "partition": self._partition,
            "verify": self._verify,
            "transfer": self._transfer,
            "corpus": self._corpus,
        }

    @property
    def commands(self):
        return sorted(self._commands)

    def run(self, command: str, flags: Mapping[str, Any]) -> int:
        """
        Ejecuta un comando.

        Args:
            command: Nombre del comando
            flags: Argumentos (ideal, json, partition, depth, refine, size, csv, …)

        Returns:
            Código de salida
        """
        if command not in self._commands:
            self._view.show_message(f"Comando desconocido: {command}")
            return EXIT_USAGE
        self._view.as_json = bool(flags.get("json", False))
        try:
            return self._commands[command](flags)
        except SearchCapExceeded as exc:
            self._view.show_message(f"Error: {exc}")
            if exc.best is not None:
                self._view.show_message(f"Desconocido por encima de d = {exc.unknown_above}; mejor testigo:")
                self._show_solver(exc.best, exc.best.lifted.ideal)
            return EXIT_CAP
        except CapExceededError as exc:
            self._view.show_message(f"Error: {exc}")
            return EXIT_CAP
        except VerificationFailure as exc:
            logger.error(f"Fallo de verificación: {exc}")
            self._view.show_message(f"Fallo de verificación: {exc}")
            return EXIT_NEGATIVE
        except (ValueError, FileNotFoundError) as exc:
            self._view.show_message(f"Error: {exc}")
            return EXIT_USAGE

    # === Utilidades ===

    def _ideal(self, flags: Mapping[str, Any]) -> MonomialIdeal:
        fuente = flags.get("ideal")
        if not fuente:
            raise ValueError("Falta el ideal")
        return load_ideal(fuente)

    def _caps(self) -> Dict[str, int]:
        return self._settings.caps()

    def _depth_of(self, ideal: MonomialIdeal):
        caps = self._caps()
        return depth_report(ideal, self._settings.field_char(),
                            caps["cap_generators"], caps["cap_matrix"])

    def _solve(self, ideal: MonomialIdeal) -> SolverResult:
        caps = self._caps()
        return solve_sdepth(ideal, caps["cap_box"], caps["cap_nodes"], self._settings.g_bump())

    def _show_solver(self, result: SolverResult, ideal: MonomialIdeal, depth: Optional[int] = None) -> None:
        if self._view.as_json:
            self._view.show_json({
                "sdepth": result.sdepth,
                "depth": depth,
                "partition": partition_to_json(result.lifted),
                "verified": True,
                "field_char": self._settings.field_char(),
            })
            return
        self._view.show_message(f"sdepth(S/I) = {result.sdepth}" + ("" if result.exact else " (cota inferior)"))
        if depth is not None:
            self._view.show_message(f"depth(S/I) = {depth}")
        self._view.show_table(self._view.intervals_frame(result.lifted.intervals), "Partición")

    # === Comandos ===

    def _decompose(self, flags) -> int:
        ideal = self._ideal(flags)
        componentes = irreducible_decomposition(ideal)
        if self._view.as_json:
            self._view.show_json({
                "ideal": ideal_to_json(ideal),
                "components": [[list(p) for p in q.pure_powers] for q in componentes],
                "maximal_faces": [face_to_json(q.maximal_face(ideal.n)) for q in componentes],
            })
            return EXIT_OK
        df = pd.DataFrame({
            "componente": [q.to_string(ideal.ring) for q in componentes],
            "cara maximal": [str(q.maximal_face(ideal.n)) for q in componentes],
        })
        self._view.show_table(df, f"I = ({ideal})")
        primos = ["(" + ", ".join(ideal.ring.var_names[i] for i in sorted(p)) + ")" for p in assoc_primes(ideal)]
        self._view.show_message("Ass(S/I): " + ", ".join(primos))
        return EXIT_OK

    def _facets(self, flags) -> int:
        ideal = self._ideal(flags)
        vista = build_view(ideal, self._caps()["cap_candidates"])
        if self._view.as_json:
            self._view.show_json({
                "ideal": ideal_to_json(ideal),
                "maximal_faces": [face_to_json(m) for m in vista.maximal_faces],
                "facets": [face_to_json(b) for b in vista.facets],
            })
            return EXIT_OK
        self._view.show_table(self._view.faces_frame(ideal.ring, vista.facets), "Facetas")
        return EXIT_OK

    def _depth(self, flags) -> int:
        ideal = self._ideal(flags)
        reporte = self._depth_of(ideal)
        caps = self._caps()
        betti = betti_total(ideal, reporte.field_char, caps["cap_generators"], caps["cap_matrix"])
        if self._view.as_json:
            payload = reporte.to_json()
            payload["betti"] = {str(i): b for i, b in betti.items()}
            self._view.show_json(payload)
            return EXIT_OK
        datos = reporte.to_json()
        datos["betti"] = betti
        self._view.show_table(self._view.record_frame(datos), f"S/I con I = ({ideal}) sobre {self._settings.field_label()}")
        return EXIT_OK

    def _sdepth(self, flags) -> int:
        ideal = self._ideal(flags)
        resultado = self._solve(ideal)
        self._show_solver(resultado, ideal, self._depth_of(ideal).depth)
        return EXIT_OK

    def _hilbert(self, flags) -> int:
        ideal = self._ideal(flags)
        serie = hilbert_series(ideal, self._caps()["cap_generators"])
        if self._view.as_json:
            self._view.show_json(serie.to_json())
        else:
            self._view.show_message(f"H(S/I) = {serie}")
        return EXIT_OK

    def _polarize(self, flags) -> int:
        ideal = self._ideal(flags)
        polarizado, pm = polarize_ideal(ideal)
        if self._view.as_json:
            self._view.show_json({
                "ideal": ideal_to_json(ideal),
                "polarized_ideal": ideal_to_json(polarizado),
                "n1": pm.n1,
            })
        else:
            self._view.show_message(f"I^p = ({polarizado})")
            self._view.show_message(f"n1 = {pm.n1}")
        return EXIT_OK

    def _nice(self, ideal: MonomialIdeal, depth: int) -> Optional[Partition]:
        caps = self._caps()
        resultado = nice_partition(ideal, self._settings.field_char(), caps["cap_box"],
                                   caps["cap_nodes"], self._settings.g_bump(), depth=depth)
        if resultado.partition is None:
            self._view.show_message(f"Hallazgo: {resultado.finding}")
        return resultado.partition

    def _partition(self, flags) -> int:
        ideal = self._ideal(flags)
        depth = self._depth_of(ideal).depth
        particion = self._nice(ideal, depth)
        if particion is None:
            return EXIT_NEGATIVE
        if flags.get("refine"):
            facetas = build_view(ideal, self._caps()["cap_candidates"]).facets
            particion = refine_to_facets(particion, facetas)
        if self._view.as_json:
            self._view.show_json(partition_to_json(particion))
        else:
            self._view.show_table(self._view.intervals_frame(particion.intervals), f"Partición buena (depth = {depth})")
        return EXIT_OK

    def _verify(self, flags) -> int:
        ruta = flags.get("partition")
        if not ruta:
            raise ValueError("verify requiere --partition FILE")
        ideal = load_ideal(flags["ideal"]) if flags.get("ideal") else None
        particion = load_partition(ruta, ideal)
        depth = flags.get("depth")
        if depth is None:
            depth = self._depth_of(particion.ideal).depth
        reporte = verify(particion, int(depth))
        self._view.show_report(reporte)
        return EXIT_OK if reporte.all_ok else EXIT_NEGATIVE

    def _transfer(self, flags) -> int:
        ideal = self._ideal(flags)
        depth = self._depth_of(ideal).depth
        particion = self._nice(ideal, depth)
        if particion is None:
            return EXIT_NEGATIVE

        vista = build_view(ideal, self._caps()["cap_candidates"])
        try:
            if set(particion.tops()) != set(vista.facets):
                particion = refine_to_facets(particion, vista.facets)
            if set(particion.tops()) != set(vista.facets):
                raise PreconditionError("Los topes refinados no son F(Γ)")
        except PreconditionError as exc:
            self._view.show_message(f"Sin transferencia: {exc}")
            return EXIT_NEGATIVE

        polarizado, pm = polarize_ideal(ideal)
        depth_p = self._depth_of(polarizado).depth
        salida = polarize_partition(particion, vista.facets, depth_p=depth_p)
        clasificacion = classify(particion, depth, vista.facets, vista.maximal_faces)

        if self._view.as_json:
            self._view.show_json({
                "ideal": ideal_to_json(ideal),
                "polarized_ideal": ideal_to_json(polarizado),
                "n1": pm.n1,
                "input_partition": partition_to_json(particion),
                "output_partition": partition_to_json(salida),
                "input_depth": depth,
                "output_depth": depth_p,
                "verified": True,
            })
            return EXIT_OK
        self._view.show_message(f"I^p = ({polarizado}), n1 = {pm.n1}")
        self._view.show_message(f"depth(S/I) = {depth}, depth(T/I^p) = {depth_p}")
        self._view.show_table(self._view.record_frame(clasificacion.to_json()), "Clasificación")
        self._view.show_table(self._view.intervals_frame(particion.intervals), "Partición de Γ")
        self._view.show_table(self._view.intervals_frame(salida.intervals), "Partición de Γ^p (verificada)")
        return EXIT_OK

    def _corpus(self, flags) -> int:
        ideales = generate_corpus(
            seed=int(flags.get("seed") if flags.get("seed") is not None else DEFAULT_SEED),
            size=int(flags.get("size") or DEFAULT_CORPUS_SIZE),
            max_n=int(flags.get("max_n") or DEFAULT_MAX_N),
            max_exp=int(flags.get("max_exp") or DEFAULT_MAX_EXP),
            max_gens=int(flags.get("max_gens") or DEFAULT_MAX_GENS),
        )
        node_cap = min(self._caps()["cap_nodes"], DEFAULT_CORPUS_NODE_CAP)
        df = corpus_ledger(ideales, self._settings.field_char(), node_cap)
        if flags.get("csv"):
            df.to_csv(flags["csv"], index=False)
            logger.info(f"Ledger escrito en {flags['csv']} ✓")
        if self._view.as_json:
            self._view.show_json(json.loads(df.to_json(orient="records")))
        else:
            self._view.show_table(df, f"Corpus: {len(df)} ideales")
        return EXIT_OK
