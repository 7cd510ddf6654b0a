"""
Pruebas del controlador, la configuración y el punto de entrada del CLI.
"""

import io
import json
import sys
import tempfile
from pathlib import Path

sys.path.insert(0, str(Path(__file__).parent))

import pytest

from main import build_parser, main as cli_main
from src.controllers.toolkit_controller import (
    EXIT_CAP,
    EXIT_NEGATIVE,
    EXIT_OK,
    EXIT_USAGE,
    ToolkitController,
)
from src.models.core_model import INF, Face, Interval, MonomialIdeal, RingContext
from src.models.partition_model import Partition
from src.models.settings_model import SettingsModel
from src.services.sdepth_solver import nice_partition
from src.utils.ideal_parser import parse_ideal
from src.utils.json_codec import dumps, partition_to_json
from src.views.console_view import ConsoleView


WORKED = "x1^2, x1*x2, x3^2"


def crear_controlador(settings: SettingsModel = None):
    salida = io.StringIO()
    vista = ConsoleView(stream=salida)
    return ToolkitController(settings=settings or SettingsModel(), view=vista), salida


def ejecutar(command: str, settings: SettingsModel = None, **flags):
    controlador, salida = crear_controlador(settings)
    codigo = controlador.run(command, flags)
    return codigo, salida.getvalue()


def worked_partition() -> Partition:
    ideal = MonomialIdeal.from_exponents(RingContext.standard(3), [(2, 0, 0), (1, 1, 0), (0, 0, 2)])
    return Partition(ideal, (
        Interval(Face((0, 0, 0)), Face((0, INF, 0))),
        Interval(Face((0, 0, 1)), Face((0, INF, 1))),
        Interval(Face((1, 0, 0)), Face((1, 0, 0))),
        Interval(Face((1, 0, 1)), Face((1, 0, 1))),
    ))


def test_settings_model():
    """Cuerpo y límites validados."""
    print("\n" + "=" * 70)
    print("TEST: SettingsModel")
    print("=" * 70)

    settings = SettingsModel()
    assert settings.field_char() == 0 and settings.field_label() == "Q"
    settings.set_field("fp:7")
    assert settings.field_char() == 7 and settings.field_label() == "GF(7)"
    for invalido in ("fp:8", "fp:x", "r"):
        with pytest.raises(ValueError):
            settings.set_field(invalido)
    assert settings.field_char() == 7

    settings.set_cap("cap_nodes", "500")
    assert settings.cap("cap_nodes") == 500
    with pytest.raises(KeyError):
        settings.set_cap("cap_desconocido", 1)
    with pytest.raises(KeyError):
        settings.set_cap("cap_split", 1)
    with pytest.raises(ValueError):
        settings.set_cap("cap_nodes", 0)
    assert not settings.g_bump()
    settings.set_g_bump(True)
    assert settings.g_bump()
    print("[OK] Configuración validada")


def test_facets_command_json():
    codigo, salida = ejecutar("facets", ideal=WORKED, json=True)
    assert codigo == EXIT_OK
    datos = json.loads(salida)
    assert datos["facets"] == [[0, "inf", 0], [0, "inf", 1], [1, 0, 0], [1, 0, 1]]
    assert datos["maximal_faces"] == [[0, "inf", 1], [1, 0, 1]]


def test_text_commands():
    print("\n" + "=" * 70)
    print("TEST: Comandos en modo texto")
    print("=" * 70)

    codigo, salida = ejecutar("decompose", ideal=WORKED)
    assert codigo == EXIT_OK
    assert "(x1, x3^2)" in salida and "(x1^2, x2, x3^2)" in salida

    codigo, salida = ejecutar("hilbert", ideal="x1*x2")
    assert codigo == EXIT_OK and "(1 + t)/(1-t)" in salida

    codigo, salida = ejecutar("polarize", ideal=WORKED)
    assert codigo == EXIT_OK and "x1_1*x1_2" in salida and "n1 = 2" in salida

    codigo, salida = ejecutar("facets", ideal=WORKED)
    assert codigo == EXIT_OK and "|infpt|" in salida
    print("[OK] decompose, hilbert, polarize, facets")


def test_depth_and_sdepth_json():
    codigo, salida = ejecutar("depth", ideal=WORKED, json=True)
    assert codigo == EXIT_OK
    datos = json.loads(salida)
    assert (datos["depth"], datos["dim"], datos["cohen_macaulay"]) == (0, 1, False)
    assert datos["betti"]["0"] == 3

    codigo, salida = ejecutar("sdepth", ideal="x1*x2", json=True)
    assert codigo == EXIT_OK
    datos = json.loads(salida)
    assert datos["sdepth"] == 1 and datos["depth"] == 1 and datos["verified"]
    assert datos["partition"]["intervals"][0] == {"lo": [0, 0], "hi": ["inf", 0]}

    codigo, salida = ejecutar("sdepth", ideal=WORKED, json=True)
    los = [x["lo"] for x in json.loads(salida)["partition"]["intervals"]]
    assert los == [[0, 0, 0], [0, 0, 1], [1, 0, 0], [1, 0, 1]]


def test_transfer_certificate():
    """Transferencia en el ejemplo CM (x1², x1x2, x2²)."""
    print("\n" + "=" * 70)
    print("TEST: Certificado de transferencia")
    print("=" * 70)

    codigo, salida = ejecutar("transfer", ideal="x1^2, x1*x2, x2^2", json=True)
    assert codigo == EXIT_OK
    datos = json.loads(salida)
    assert datos["verified"] and datos["n1"] == 2
    assert (datos["input_depth"], datos["output_depth"]) == (0, 2)
    assert datos["output_partition"]["ideal"]["vars"] == ["x1_1", "x1_2", "x2_1", "x2_2"]
    assert datos["input_partition"]["intervals"] == [
        {"lo": [0, 0], "hi": [0, 0]},
        {"lo": [0, 1], "hi": [0, 1]},
        {"lo": [1, 0], "hi": [1, 0]},
    ]
    assert datos["output_partition"]["intervals"][0] == {"lo": [0, 0, 0, 0], "hi": [0, "inf", 0, "inf"]}

    codigo, _ = ejecutar("transfer", ideal=WORKED)
    assert codigo == EXIT_OK
    print("[OK] Certificado verificado")


def test_transfer_with_free_variable():
    """x3 no aparece en los generadores: se conserva como ∞ en toda la salida."""
    ruta = Path(tempfile.mkdtemp()) / "libre.json"
    ruta.write_text(json.dumps({"vars": ["x1", "x2", "x3"], "gens": [[2, 0, 0], [1, 1, 0]]}), encoding="utf-8")

    codigo, salida = ejecutar("transfer", ideal=str(ruta), json=True)
    assert codigo == EXIT_OK
    datos = json.loads(salida)
    assert datos["n1"] == 1
    assert (datos["input_depth"], datos["output_depth"]) == (1, 2)
    assert datos["polarized_ideal"]["vars"] == ["x1_1", "x1_2", "x2_1", "x3_1"]
    assert all(iv["hi"][3] == "inf" for iv in datos["output_partition"]["intervals"])

    codigo, salida = ejecutar("polarize", ideal=str(ruta))
    assert codigo == EXIT_OK and "n1 = 1" in salida


def test_partition_and_verify_commands():
    directorio = Path(tempfile.mkdtemp())
    codigo, salida = ejecutar("partition", ideal=WORKED, json=True)
    assert codigo == EXIT_OK
    esperada = nice_partition(parse_ideal(WORKED)).partition
    assert json.loads(salida) == partition_to_json(esperada)

    codigo, salida = ejecutar("partition", ideal=WORKED, json=True, refine=True)
    assert codigo == EXIT_OK
    ruta = directorio / "particion.json"
    ruta.write_text(salida, encoding="utf-8")
    codigo, salida = ejecutar("verify", partition=str(ruta), depth=0, json=True)
    assert codigo == EXIT_OK and json.loads(salida)["covers"]

    incompleta = Partition(worked_partition().ideal, worked_partition().intervals[:3])
    mala = directorio / "mala.json"
    mala.write_text(dumps(partition_to_json(incompleta)), encoding="utf-8")
    codigo, salida = ejecutar("verify", partition=str(mala))
    assert codigo == EXIT_NEGATIVE
    assert "Cobertura" in salida


def test_exit_codes():
    assert ejecutar("desconocido")[0] == EXIT_USAGE
    assert ejecutar("depth", ideal="x1^0")[0] == EXIT_USAGE
    assert ejecutar("depth", ideal="x1^")[0] == EXIT_USAGE
    assert ejecutar("facets")[0] == EXIT_USAGE
    assert ejecutar("verify", partition="no_existe.json")[0] == EXIT_USAGE

    settings = SettingsModel()
    settings.set_node_cap(1)
    assert ejecutar("sdepth", settings, ideal=WORKED)[0] == EXIT_CAP

    settings = SettingsModel()
    settings.set_candidate_cap(5)
    assert ejecutar("facets", settings, ideal=WORKED)[0] == EXIT_CAP


def test_cli_entry_point(capsys):
    assert cli_main(["hilbert", "x1*x2"]) == EXIT_OK
    assert "(1 + t)/(1-t)" in capsys.readouterr().out
    assert cli_main(["depth", "x1", "--field", "fp:4"]) == EXIT_USAGE
    assert cli_main(["facets", WORKED, "--json"]) == EXIT_OK
    assert json.loads(capsys.readouterr().out)["facets"][0] == [0, "inf", 0]

    args = build_parser().parse_args(["verify", "--partition", "p.json", "--depth", "1"])
    assert args.ideal is None and args.depth == 1
    args = build_parser().parse_args(["corpus", "--size", "3", "--seed", "5"])
    assert (args.size, args.seed) == (3, 5)


def main():
    pruebas = [
        test_settings_model,
        test_facets_command_json,
        test_text_commands,
        test_depth_and_sdepth_json,
        test_transfer_certificate,
        test_transfer_with_free_variable,
        test_partition_and_verify_commands,
        test_exit_codes,
    ]
    fallidas = 0
    for prueba in pruebas:
        try:
            prueba()
            print(f"[OK] {prueba.__name__}")
        except AssertionError as exc:
            fallidas += 1
            print(f"[FAIL] {prueba.__name__}: {exc}")
    print(f"\nResultado: {len(pruebas) - fallidas}/{len(pruebas)} pruebas pasaron")
    return 0 if fallidas == 0 else 1


if __name__ == "__main__":
    sys.exit(main())
