"""
Punto de entrada principal del toolkit de multicomplejos.
Inicializa la configuración, el controlador y la vista, y despacha el comando.
"""

from pathlib import Path
from typing import List, Optional
import argparse
import logging
import sys

# Agregar la raíz del repositorio al path
sys.path.insert(0, str(Path(__file__).parent))

from config import DEFAULT_FIELD, LOG_FORMAT
from src.controllers.toolkit_controller import EXIT_USAGE, ToolkitController
from src.models.settings_model import SettingsModel
from src.views.console_view import ConsoleView


COMMANDS_WITH_IDEAL = ["decompose", "facets", "depth", "sdepth", "hilbert", "polarize", "partition", "transfer"]


def build_parser() -> argparse.ArgumentParser:
    """Parser de argumentos con un subcomando por operación."""
    comunes = argparse.ArgumentParser(add_help=False)
    comunes.add_argument("--field", default=DEFAULT_FIELD, help="q (racionales) o fp:<p>")
    comunes.add_argument("--json", action="store_true", help="Salida JSON")
    comunes.add_argument("--seed", type=int, default=None)
    comunes.add_argument("--max-n", dest="max_n", type=int, default=None)
    comunes.add_argument("--max-exp", dest="max_exp", type=int, default=None)
    comunes.add_argument("--max-gens", dest="max_gens", type=int, default=None)
    comunes.add_argument("--cap-nodes", dest="cap_nodes", type=int, default=None)
    comunes.add_argument("--g-bump", dest="g_bump", action="store_true",
                         help="Reintentar el solver con g + 1 si el levantamiento no verifica")
    comunes.add_argument("--verbose", action="store_true", help="Logs INFO en stderr")

    parser = argparse.ArgumentParser(
        prog="multicomplex-toolkit",
        description="Multicomplejos, profundidad de Stanley y polarización de ideales monomiales",
    )
    sub = parser.add_subparsers(dest="command", required=True)
    for nombre in COMMANDS_WITH_IDEAL:
        p = sub.add_parser(nombre, parents=[comunes])
        p.add_argument("ideal", help='"x1^2, x1*x2, x3^2" o ruta a un JSON')
        if nombre == "partition":
            p.add_argument("--refine", action="store_true", help="Refinar a facetas")

    p = sub.add_parser("verify", parents=[comunes])
    p.add_argument("ideal", nargs="?", default=None)
    p.add_argument("--partition", required=True, help="Archivo JSON de la partición")
    p.add_argument("--depth", type=int, default=None)

    p = sub.add_parser("corpus", parents=[comunes])
    p.add_argument("--size", type=int, default=None)
    p.add_argument("--csv", default=None, help="Escribir el ledger en CSV")
    return parser


class ToolkitApp:
    """
    Clase principal de la aplicación.

    Responsabilidades:
    - Configurar logging
    - Crear SettingsModel, ConsoleView y ToolkitController
    - Ejecutar el comando y devolver el código de salida
    """

    def __init__(self, args: argparse.Namespace):
        self.args = args
        self.settings = SettingsModel()
        self.view = ConsoleView(as_json=args.json)
        self.controller: Optional[ToolkitController] = None
        self._initialize_application()

    def _initialize_application(self) -> None:
        logging.basicConfig(
            level=logging.INFO if self.args.verbose else logging.WARNING,
            format=LOG_FORMAT,
            stream=sys.stderr,
        )
        logging.getLogger("App").info(f"Comando: {self.args.command}")
        self.settings.set_field(self.args.field)
        if self.args.cap_nodes is not None:
            self.settings.set_node_cap(self.args.cap_nodes)
        self.settings.set_g_bump(self.args.g_bump)
        self.controller = ToolkitController(settings=self.settings, view=self.view)

    def run(self) -> int:
        return self.controller.run(self.args.command, vars(self.args))


def main(argv: Optional[List[str]] = None) -> int:
    """Función principal de entrada."""
    args = build_parser().parse_args(argv)
    try:
        app = ToolkitApp(args)
    except ValueError as exc:
        print(f"Error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    return app.run()


if __name__ == "__main__":
    sys.exit(main())
