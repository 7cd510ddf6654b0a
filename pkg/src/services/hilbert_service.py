"""
Servicio de series de Hilbert.

Series de S/I por inclusión-exclusión, series de intervalos y las igualdades
exactas que certifican cobertura de particiones y la identidad de polarización.
"""

from typing import Dict, List, Tuple
import logging

import sympy as sp

from config import DEFAULT_GENERATOR_CAP
from src.models.core_model import INF, Interval, Monomial, MonomialIdeal
from src.models.series_model import T, RationalSeries, from_poly, to_poly
from src.utils.errors import CapExceededError, PreconditionError


logger = logging.getLogger("HilbertService")


def _lcm_terms(gens: List[Monomial]) -> Dict[int, int]:
    """
    Σ_{σ ⊆ gens} (-1)^{|σ|} t^{deg lcm(σ)} agrupado por grado.

    Los subconjuntos se generan duplicando la lista de (lcm, signo) con cada
    generador nuevo.
    """
    terminos: List[Tuple[Monomial, int]] = [(Monomial.one(gens[0].n), 1)] if gens else []
    for g in gens:
        terminos += [(m.lcm(g), -s) for m, s in terminos]
    por_grado: Dict[int, int] = {}
    for m, s in terminos:
        d = m.degree()
        por_grado[d] = por_grado.get(d, 0) + s
    return por_grado


def hilbert_series(ideal: MonomialIdeal, generator_cap: int = DEFAULT_GENERATOR_CAP) -> RationalSeries:
    """
    H(S/I) independiente de cualquier descomposición.

    Args:
        ideal: Ideal monomial (el cero da 1/(1-t)^n)
        generator_cap: Máximo de generadores (2^s términos)

    Returns:
        Serie canónica

    Raises:
        CapExceededError: Si hay más de generator_cap generadores
    """
    n = ideal.n
    if ideal.is_zero():
        return RationalSeries.canonical((1,), n)
    if len(ideal.gens) > generator_cap:
        raise CapExceededError("cap_generators", generator_cap, len(ideal.gens))
    por_grado = _lcm_terms(list(ideal.gens))
    numerador = [0] * (max(por_grado) + 1)
    for d, c in por_grado.items():
        numerador[d] += c
    serie = RationalSeries.canonical(numerador, n)
    logger.info(f"H(S/({ideal})) = {serie}")
    return serie


def interval_series(iv: Interval) -> RationalSeries:
    """
    Serie del intervalo [lo, hi]:
    t^{|lo|} · Π_{hi(i) finito} (1 + t + … + t^{hi(i)-lo(i)}) / (1-t)^{|infpt(hi)|}.

    Raises:
        PreconditionError: Si lo tiene coordenadas infinitas
    """
    if not iv.lo.is_finite():
        raise PreconditionError(f"Extremo inferior infinito en {iv}")
    poly = sp.Poly(T ** iv.lo.degree(), T, domain=sp.ZZ)
    for a, b in zip(iv.lo.coords, iv.hi.coords):
        if b is INF:
            continue
        poly = poly * to_poly([1] * (b - a + 1))
    return RationalSeries.canonical(from_poly(poly), len(iv.hi.infpt()))


def partition_series(intervals: List[Interval]) -> RationalSeries:
    """Σ de las series de los intervalos."""
    return sum((interval_series(iv) for iv in intervals), RationalSeries.zero())


def series_equal(x: RationalSeries, y: RationalSeries) -> bool:
    """Igualdad exacta como funciones racionales (multiplicación cruzada)."""
    e = max(x.denom_power, y.denom_power)
    return x.lifted_numerator(e) == y.lifted_numerator(e)


def polarization_identity_check(ideal: MonomialIdeal) -> bool:
    """H(T/I^p) = H(S/I) / (1-t)^{n1}."""
    from src.services.polarization_service import polarize_ideal

    polarizado, pm = polarize_ideal(ideal)
    izquierda = hilbert_series(polarizado)
    derecha = hilbert_series(ideal).divide_by_one_minus_t(pm.n1)
    ok = series_equal(izquierda, derecha)
    if not ok:
        logger.warning(f"Identidad de polarización falla para ({ideal}): {izquierda} vs {derecha}")
    return ok
