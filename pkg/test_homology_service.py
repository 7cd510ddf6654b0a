"""
Pruebas de homología reducida, números de Betti y profundidad exacta.
"""

import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).parent))

import pytest
from hypothesis import assume, given, settings, strategies as st

from src.models.core_model import Monomial, MonomialIdeal, RingContext
from src.services.homology_service import (
    SimplicialComplexExplicit,
    betti_total,
    depth_report,
    lcm_degrees,
    reduced_homology_ranks,
    upper_koszul_complex,
)
from src.utils.errors import CapExceededError, PreconditionError
from src.utils.exact_linalg import matrix_rank, rank_fraction_free, rank_mod_p


R1 = RingContext.standard(1)
R2 = RingContext.standard(2)
R3 = RingContext.standard(3)


def worked_ideal() -> MonomialIdeal:
    return MonomialIdeal.from_exponents(R3, [(2, 0, 0), (1, 1, 0), (0, 0, 2)])


def complejo(*caras) -> SimplicialComplexExplicit:
    vertices = sorted({v for c in caras for v in c})
    return SimplicialComplexExplicit(tuple(vertices), tuple(frozenset(c) for c in caras))


def test_exact_ranks():
    """Rango sobre ℚ (Bareiss) y sobre GF(p) (numpy)."""
    print("\n" + "=" * 70)
    print("TEST: Rangos exactos")
    print("=" * 70)

    m = [[2, 0], [0, 1]]
    assert rank_fraction_free(m) == 2
    assert rank_mod_p(m, 2) == 1
    assert matrix_rank(m, 0) == 2
    assert matrix_rank(m, 3) == 2
    assert rank_fraction_free([[1, 2, 3], [2, 4, 6], [1, 0, 1]]) == 2
    assert rank_fraction_free([]) == 0
    assert rank_mod_p([[0, 0], [0, 0]], 5) == 0
    with pytest.raises(ValueError):
        rank_mod_p(m, 2 ** 31 + 11)
    print("[OK] Rangos sobre ℚ y GF(p)")


matrices = st.integers(1, 5).flatmap(
    lambda filas: st.integers(1, 5).flatmap(
        lambda cols: st.lists(
            st.lists(st.integers(-3, 3), min_size=cols, max_size=cols),
            min_size=filas, max_size=filas,
        )
    )
)


@settings(max_examples=80, deadline=None)
@given(matrices)
def test_rational_rank_matches_large_prime(m):
    # con entradas pequeñas ningún menor no nulo es múltiplo de 1000003
    assert rank_fraction_free(m) == rank_mod_p(m, 1_000_003)


def test_lcm_degrees():
    ideal = worked_ideal()
    grados = lcm_degrees(ideal)
    assert len(grados) == 7
    assert set(grados) == {
        Monomial((2, 0, 0)), Monomial((1, 1, 0)), Monomial((0, 0, 2)),
        Monomial((2, 1, 0)), Monomial((2, 0, 2)), Monomial((1, 1, 2)), Monomial((2, 1, 2)),
    }
    pares = MonomialIdeal.from_exponents(R2, [(2, 0), (1, 1)])
    assert set(lcm_degrees(pares)) == {Monomial((2, 0)), Monomial((1, 1)), Monomial((2, 1))}
    with pytest.raises(CapExceededError):
        lcm_degrees(ideal, generator_cap=2)


def test_upper_koszul_complexes():
    """K^a(I) = {τ ⊆ supp(a) : x^{a-τ} ∈ I}."""
    x1 = MonomialIdeal.from_exponents(R1, [(1,)])
    assert upper_koszul_complex(x1, Monomial((1,))).is_empty_complex()

    maximal = MonomialIdeal.from_exponents(R2, [(1, 0), (0, 1)])
    dos_puntos = upper_koszul_complex(maximal, Monomial((1, 1)))
    assert set(dos_puntos.facet_list) == {frozenset({0}), frozenset({1})}

    principal = MonomialIdeal.from_exponents(R2, [(1, 1)])
    assert upper_koszul_complex(principal, Monomial((1, 1))).is_empty_complex()

    with pytest.raises(PreconditionError):
        upper_koszul_complex(principal, Monomial((1, 0)))


def test_reduced_homology_small_complexes():
    print("\n" + "=" * 70)
    print("TEST: Homología reducida")
    print("=" * 70)

    assert reduced_homology_ranks(complejo({0}, {1})) == {-1: 0, 0: 1}
    # borde del triángulo: se calcula por el nervio
    assert reduced_homology_ranks(complejo({0, 1}, {0, 2}, {1, 2})) == {-1: 0, 0: 0, 1: 1}
    simplex = reduced_homology_ranks(complejo({0, 1, 2}))
    assert all(rk == 0 for rk in simplex.values())
    assert reduced_homology_ranks(SimplicialComplexExplicit((), ())) == {}
    assert reduced_homology_ranks(SimplicialComplexExplicit((), (frozenset(),))) == {-1: 1}
    print("[OK] Puntos, círculo, símplex, void y {∅}")


def test_homology_over_prime_field():
    cuadrado = complejo({0, 1}, {1, 2}, {2, 3}, {0, 3})
    assert reduced_homology_ranks(cuadrado, field_char=2)[1] == 1
    assert reduced_homology_ranks(cuadrado, field_char=0)[1] == 1


def test_complex_keeps_maximal_facets_only():
    c = complejo({0}, {0, 1}, {1})
    assert c.facet_list == (frozenset({0, 1}),)
    assert c.vertex_count == 2
    assert not c.is_void()


def test_matrix_cap():
    with pytest.raises(CapExceededError):
        reduced_homology_ranks(complejo({0}, {1}, {2}), matrix_cap=2)


def test_betti_numbers():
    assert betti_total(MonomialIdeal.from_exponents(R2, [(1, 1)])) == {0: 1}
    assert betti_total(MonomialIdeal.from_exponents(R2, [(1, 0), (0, 1)])) == {0: 2, 1: 1}
    betti = betti_total(worked_ideal())
    assert betti[0] == 3
    assert max(betti) == 2
    assert betti_total(MonomialIdeal.zero(R2)) == {}


def test_depth_reports():
    """Profundidad por Auslander–Buchsbaum y test CM."""
    print("\n" + "=" * 70)
    print("TEST: Profundidad, dimensión y Cohen-Macaulay")
    print("=" * 70)

    r = depth_report(worked_ideal())
    assert (r.depth, r.dim, r.cohen_macaulay) == (0, 1, False)
    assert r.projective_dimension == 3

    r = depth_report(MonomialIdeal.from_exponents(R2, [(2, 0), (1, 1), (0, 2)]))
    assert (r.depth, r.dim, r.cohen_macaulay) == (0, 0, True)

    r = depth_report(MonomialIdeal.from_exponents(R2, [(1, 1)]))
    assert (r.depth, r.dim, r.cohen_macaulay) == (1, 1, True)

    r = depth_report(MonomialIdeal.zero(R3))
    assert (r.depth, r.projective_dimension, r.dim, r.cohen_macaulay) == (3, 0, 3, True)

    r = depth_report(worked_ideal(), field_char=2)
    assert r.to_json() == {
        "depth": 0, "projective_dimension": 3, "dim": 1,
        "cohen_macaulay": False, "field_char": 2,
    }
    print("[OK] Reportes de profundidad")


def _ideals():
    def construir(n):
        vector = st.lists(st.integers(0, 2), min_size=n, max_size=n)
        return st.lists(vector, min_size=1, max_size=4).map(
            lambda vs: MonomialIdeal.from_exponents(RingContext.standard(n), [v for v in vs if any(v)])
        )
    return st.integers(1, 3).flatmap(construir)


@settings(max_examples=40, deadline=None)
@given(_ideals())
def test_depth_bounds(ideal):
    """β_0 = número de generadores minimales y 0 ≤ depth ≤ dim."""
    assume(not ideal.is_zero())
    betti = betti_total(ideal)
    assert betti[0] == len(ideal.gens)
    r = depth_report(ideal)
    assert 0 <= r.depth <= r.dim
    assert r.projective_dimension <= ideal.n


def main():
    pruebas = [
        test_exact_ranks,
        test_rational_rank_matches_large_prime,
        test_lcm_degrees,
        test_upper_koszul_complexes,
        test_reduced_homology_small_complexes,
        test_homology_over_prime_field,
        test_complex_keeps_maximal_facets_only,
        test_matrix_cap,
        test_betti_numbers,
        test_depth_reports,
        test_depth_bounds,
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
