"""
Pruebas de polarización: ideales, mapas β y γ, biyección de facetas y
transferencia de particiones buenas.
"""

import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).parent))

import pytest
from hypothesis import assume, given, settings, strategies as st

from src.models.core_model import INF, Face, Interval, Monomial, MonomialIdeal, RingContext
from src.models.partition_model import Partition
from src.services.hilbert_service import (
    hilbert_series,
    partition_series,
    polarization_identity_check,
    series_equal,
)
from src.services.multicomplex_service import build_view, facets, ideal_of_union
from src.services.polarization_service import (
    PolarizationMap,
    beta,
    check_facet_bijection,
    gamma,
    polarization_report,
    polarize_components,
    polarize_ideal,
    polarize_monomial,
    polarize_partition,
)
from src.utils.errors import PreconditionError


R1 = RingContext.standard(1)
R2 = RingContext.standard(2)
R3 = RingContext.standard(3)


def iv(lo, hi=None) -> Interval:
    return Interval(Face(lo), Face(hi if hi is not None else lo))


def worked_ideal() -> MonomialIdeal:
    return MonomialIdeal.from_exponents(R3, [(2, 0, 0), (1, 1, 0), (0, 0, 2)])


def worked_partition() -> Partition:
    return Partition(worked_ideal(), (
        iv((0, 0, 0), (0, INF, 0)),
        iv((0, 0, 1), (0, INF, 1)),
        iv((1, 0, 0)),
        iv((1, 0, 1)),
    ))


def cm_ideal() -> MonomialIdeal:
    return MonomialIdeal.from_exponents(R2, [(2, 0), (1, 1), (0, 2)])


def test_polarize_worked_example():
    """I^p = (x1_1·x1_2, x1_1·x2_1, x3_1·x3_2) en 5 variables."""
    print("\n" + "=" * 70)
    print("TEST: Polarización del ejemplo")
    print("=" * 70)

    polarizado, pm = polarize_ideal(worked_ideal())
    assert pm.target.var_names == ("x1_1", "x1_2", "x2_1", "x3_1", "x3_2")
    assert pm.n1 == 2
    assert pm.pairs() == [(0, 1), (0, 2), (1, 1), (2, 1), (2, 2)]
    assert str(polarizado) == "x1_1*x1_2, x1_1*x2_1, x3_1*x3_2"
    assert polarizado.is_squarefree()
    print(f"[OK] I^p = ({polarizado})")


def test_polarize_small_cases():
    polarizado, pm = polarize_ideal(MonomialIdeal.from_exponents(R1, [(2,)]))
    assert str(polarizado) == "x1_1*x1_2" and pm.n1 == 1

    libre_de_cuadrados = MonomialIdeal.from_exponents(R2, [(1, 1)])
    polarizado, pm = polarize_ideal(libre_de_cuadrados)
    assert pm.n1 == 0
    assert [g.exponents for g in polarizado.gens] == [(1, 1)]

    pm = PolarizationMap.for_ideal(MonomialIdeal.from_exponents(R2, [(1, 0)]))
    assert pm.target.var_names == ("x1_1", "x2_1") and pm.n1 == 0


def free_ideal() -> MonomialIdeal:
    """(x1², x1·x2) en K[x1, x2, x3]: x3 no aparece en ningún generador."""
    return MonomialIdeal.from_exponents(R3, [(2, 0, 0), (1, 1, 0)])


def test_polarize_with_free_variable():
    """La variable libre pasa a T como una sola variable con ∞ en β y 0 en γ."""
    print("\n" + "=" * 70)
    print("TEST: Polarización con variable libre")
    print("=" * 70)

    ideal = free_ideal()
    polarizado, pm = polarize_ideal(ideal)
    assert pm.target.var_names == ("x1_1", "x1_2", "x2_1", "x3_1")
    assert pm.n1 == 1
    assert str(polarizado) == "x1_1*x1_2, x1_1*x2_1"

    assert facets(ideal) == [Face((0, INF, INF)), Face((1, 0, INF))]
    assert beta(Face((0, INF, INF)), pm) == Face((0, INF, INF, INF))
    assert beta(Face((1, 0, INF)), pm) == Face((INF, 0, 0, INF))
    assert gamma(Face((1, 0, 0)), pm) == Face((1, 0, 0, 0))
    with pytest.raises(PreconditionError):
        beta(Face((0, INF, 0)), pm)
    with pytest.raises(PreconditionError):
        gamma(Face((0, 0, 1)), pm)

    assert check_facet_bijection(ideal)
    assert polarization_identity_check(ideal)
    reporte = polarization_report(ideal)
    assert (reporte.depth, reporte.depth_p, reporte.dim, reporte.dim_p) == (1, 2, 2, 3)
    assert reporte.shifts_hold()

    particion = Partition(ideal, (
        iv((0, 0, 0), (0, INF, INF)),
        iv((1, 0, 0), (1, 0, INF)),
    ))
    salida = polarize_partition(particion, depth_p=2)
    assert salida.intervals == (
        iv((0, 0, 0, 0), (0, INF, INF, INF)),
        iv((1, 0, 0, 0), (INF, 0, 0, INF)),
    )
    componentes = polarize_components(ideal)
    assert ideal_of_union([build_view(q) for q in componentes]) == polarizado
    print(f"[OK] I^p = ({polarizado}) con x3 conservada")


def test_polarize_monomial_range():
    pm = PolarizationMap.for_ideal(worked_ideal())
    assert polarize_monomial(Monomial((1, 1, 2)), pm) == Monomial((1, 0, 1, 1, 1))
    with pytest.raises(PreconditionError):
        polarize_monomial(Monomial((3, 0, 0)), pm)


def test_beta_and_gamma():
    pm = PolarizationMap.for_ideal(worked_ideal())
    assert beta(Face((0, INF, 1)), pm) == Face((0, INF, INF, INF, 0))
    assert beta(Face((1, 0, 0)), pm) == Face((INF, 0, 0, 0, INF))
    assert gamma(Face((1, 0, 1)), pm) == Face((1, 0, 0, 1, 0))
    assert gamma(Face((2, 1, 2)), pm) == Face((1, 1, 1, 1, 1))
    with pytest.raises(PreconditionError):
        beta(Face((2, 0, 0)), pm)
    with pytest.raises(PreconditionError):
        gamma(Face((3, 0, 0)), pm)
    with pytest.raises(PreconditionError):
        gamma(Face((0, INF, 0)), pm)


def test_facet_bijection():
    """β: F(Γ) → F(Γ^p) es biyectiva."""
    pm = PolarizationMap.for_ideal(worked_ideal())
    polarizado, _ = polarize_ideal(worked_ideal())
    imagenes = {beta(b, pm) for b in facets(worked_ideal())}
    assert imagenes == set(facets(polarizado))
    assert check_facet_bijection(worked_ideal())
    assert check_facet_bijection(cm_ideal())
    assert check_facet_bijection(MonomialIdeal.from_exponents(R2, [(1, 1)]))


def test_polarize_partition_worked_example():
    print("\n" + "=" * 70)
    print("TEST: Transferencia de la partición del ejemplo")
    print("=" * 70)

    salida = polarize_partition(worked_partition(), depth_p=2)
    assert salida.intervals == (
        iv((0, 0, 0, 0, 0), (0, INF, INF, 0, INF)),
        iv((0, 0, 0, 1, 0), (0, INF, INF, INF, 0)),
        iv((1, 0, 0, 0, 0), (INF, 0, 0, 0, INF)),
        iv((1, 0, 0, 1, 0), (INF, 0, 0, INF, 0)),
    )
    assert min(len(i.hi.infpt()) for i in salida.intervals) == 2
    assert series_equal(partition_series(list(salida.intervals)), hilbert_series(salida.ideal))
    print("[OK] Partición polarizada verificada con depth = 2")


def test_polarize_partition_cohen_macaulay_example():
    puntos = Partition(cm_ideal(), (iv((0, 0)), iv((1, 0)), iv((0, 1))))
    salida = polarize_partition(puntos, depth_p=2)
    assert salida.intervals == (
        iv((0, 0, 0, 0), (0, INF, 0, INF)),
        iv((1, 0, 0, 0), (INF, 0, 0, INF)),
        iv((0, 0, 1, 0), (0, INF, INF, 0)),
    )
    esperado = hilbert_series(cm_ideal()).divide_by_one_minus_t(2)
    assert series_equal(partition_series(list(salida.intervals)), esperado)


def test_polarize_partition_preconditions():
    principal = MonomialIdeal.from_exponents(R2, [(1, 1)])
    mala = Partition(principal, (iv((0, 0)), iv((1, 0), (INF, 0)), iv((0, 1), (0, INF))))
    with pytest.raises(PreconditionError):
        polarize_partition(mala)


def test_polarize_components():
    componentes = polarize_components(worked_ideal())
    assert [str(q) for q in componentes] == ["x1_1, x3_1*x3_2", "x2_1, x1_1*x1_2, x3_1*x3_2"]
    polarizado, _ = polarize_ideal(worked_ideal())
    assert ideal_of_union([build_view(q) for q in componentes]) == polarizado


def test_polarization_report():
    reporte = polarization_report(worked_ideal())
    assert reporte.to_json() == {
        "n1": 2, "depth": 0, "depth_p": 2, "dim": 1, "dim_p": 3, "cm": False, "cm_p": False,
    }
    assert reporte.shifts_hold()
    assert polarization_report(cm_ideal()).shifts_hold()


def _small_ideals():
    def construir(n):
        vector = st.lists(st.integers(0, 2), min_size=n, max_size=n)
        return st.lists(vector, min_size=1, max_size=4).map(
            lambda vs: MonomialIdeal.from_exponents(RingContext.standard(n), [v for v in vs if any(v)])
        )
    return st.integers(1, 3).flatmap(construir)


@settings(max_examples=30, deadline=None)
@given(_small_ideals())
def test_polarization_invariants(ideal):
    """I^p libre de cuadrados, biyección de facetas y corrimientos de depth/dim."""
    assume(not ideal.is_zero())
    polarizado, pm = polarize_ideal(ideal)
    assert polarizado.is_squarefree()
    assert len(polarizado.gens) == len(ideal.gens)
    assert check_facet_bijection(ideal)
    assert polarization_report(ideal).shifts_hold()


def main():
    pruebas = [
        test_polarize_worked_example,
        test_polarize_small_cases,
        test_polarize_with_free_variable,
        test_polarize_monomial_range,
        test_beta_and_gamma,
        test_facet_bijection,
        test_polarize_partition_worked_example,
        test_polarize_partition_cohen_macaulay_example,
        test_polarize_partition_preconditions,
        test_polarize_components,
        test_polarization_report,
        test_polarization_invariants,
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
