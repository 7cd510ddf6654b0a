"""
Servicio de polarización.

Polarización de monomios e ideales, los mapas β (caras de 𝓑) y γ (caras de
𝓐), la biyección de facetas y la transferencia de particiones buenas de Γ(I)
a Γ(I^p).
"""

from dataclasses import dataclass
from typing import Dict, List, Optional, Sequence, Tuple
import logging

from config import DEFAULT_CANDIDATE_CAP
from src.models.core_model import INF, Face, Interval, Monomial, MonomialIdeal, RingContext
from src.models.partition_model import Partition
from src.services.homology_service import depth_report
from src.services.multicomplex_service import facets, irreducible_decomposition
from src.services.partition_service import lower_bounds_within_r, verify
from src.utils.errors import PreconditionError, VerificationFailure


logger = logging.getLogger("PolarizationService")


@dataclass(frozen=True)
class PolarizationMap:
    """
    Datos de la polarización de un ideal.

    Una variable libre (r_i = 0) pasa a T como una sola variable x{i}_1 que
    ningún generador usa: β le asigna ∞ y γ le asigna 0.

    Attributes:
        source: Anillo S con n variables
        r: r_i = máximo exponente de x_i en los generadores (0 si x_i es libre)
        target: Anillo T con Σ max(r_i, 1) variables x{i}_{j}, en orden lex por (i, j)
    """

    source: RingContext
    r: Tuple[int, ...]
    target: RingContext

    @classmethod
    def for_ideal(cls, ideal: MonomialIdeal) -> "PolarizationMap":
        r = ideal.r_vector()
        libres = [ideal.ring.var_names[i] for i, ri in enumerate(r) if ri == 0]
        if libres:
            logger.info(f"Variables libres conservadas como ∞: {libres}")
        nombres = tuple(
            f"{name}_{j}"
            for name, ri in zip(ideal.ring.var_names, r)
            for j in range(1, max(ri, 1) + 1)
        )
        return cls(source=ideal.ring, r=r, target=RingContext(len(nombres), nombres))

    @property
    def n1(self) -> int:
        """Pasos de polarización: Σ (r_i - 1) sobre las variables no libres."""
        return self.target.n - self.source.n

    def pairs(self) -> List[Tuple[int, int]]:
        """Pares (i, j), i en base 0 y j en base 1, en el orden de las variables de T."""
        return [(i, j) for i, ri in enumerate(self.r) for j in range(1, max(ri, 1) + 1)]


def polarize_monomial(u: Monomial, pm: PolarizationMap) -> Monomial:
    """
    u^p = Π_i Π_{j ≤ a_i} x_{ij}.

    Raises:
        PreconditionError: Si algún exponente supera r_i
    """
    if u.n != pm.source.n or any(e > ri for e, ri in zip(u.exponents, pm.r)):
        raise PreconditionError(f"Exponentes de {u.exponents} fuera de r = {pm.r}")
    return Monomial(tuple(1 if j <= u.exponents[i] else 0 for i, j in pm.pairs()))


def polarize_ideal(ideal: MonomialIdeal) -> Tuple[MonomialIdeal, PolarizationMap]:
    """I^p = (u_1^p, …, u_s^p) en el anillo T."""
    pm = PolarizationMap.for_ideal(ideal)
    polarizado = MonomialIdeal(pm.target, tuple(polarize_monomial(u, pm) for u in ideal.gens))
    logger.info(f"I^p = ({polarizado}), n1 = {pm.n1}")
    return polarizado, pm


def beta(b: Face, pm: PolarizationMap) -> Face:
    """
    β(b)(ij) = 0 si b(i) es finito y j = b(i) + 1; ∞ en otro caso.

    Raises:
        PreconditionError: Si b ∉ 𝓑 (alguna coordenada finita ≥ r_i)
    """
    if b.n != pm.source.n:
        raise PreconditionError(f"Cara {b} de longitud {b.n}, se esperaba {pm.source.n}")
    for c, ri in zip(b.coords, pm.r):
        if c is not INF and c >= ri:
            raise PreconditionError(f"β no está definida fuera de 𝓑: {b} con r = {pm.r}")
    return Face(tuple(
        0 if b[i] is not INF and j == b[i] + 1 else INF
        for i, j in pm.pairs()
    ))


def gamma(a: Face, pm: PolarizationMap) -> Face:
    """
    γ(a)(ij) = 1 si j ≤ a(i); 0 en otro caso.

    Raises:
        PreconditionError: Si a no es finita o alguna coordenada supera r_i
    """
    if a.n != pm.source.n or not a.is_finite():
        raise PreconditionError(f"γ requiere una cara finita de longitud {pm.source.n}: {a}")
    if any(c > ri for c, ri in zip(a.coords, pm.r)):
        raise PreconditionError(f"γ no está definida fuera de 𝓐: {a} con r = {pm.r}")
    return Face(tuple(1 if j <= a[i] else 0 for i, j in pm.pairs()))


def check_facet_bijection(ideal: MonomialIdeal, candidate_cap: int = DEFAULT_CANDIDATE_CAP) -> bool:
    """β restringida a F(Γ) es una biyección sobre F(Γ^p)."""
    polarizado, pm = polarize_ideal(ideal)
    origen = facets(ideal, candidate_cap)
    destino = set(facets(polarizado, candidate_cap))
    imagenes = [beta(b, pm) for b in origen]
    ok = len(set(imagenes)) == len(imagenes) and set(imagenes) == destino
    if not ok:
        logger.warning(f"β no es biyección de facetas para ({ideal})")
    return ok


def polarize_partition(partition: Partition, facet_list: Optional[Sequence[Face]] = None,
                       depth_p: Optional[int] = None,
                       candidate_cap: int = DEFAULT_CANDIDATE_CAP) -> Partition:
    """
    {[γ(lo_i), β(hi_i)]}: partición de Γ(I^p) con los mismos índices.

    Requiere que los topes sean exactamente F(Γ) y que los extremos inferiores
    estén en 𝓐. El resultado se certifica con el verificador independiente;
    si se da depth_p también se exige que sea buena para esa profundidad.

    Raises:
        PreconditionError: Si no se cumplen las precondiciones
        VerificationFailure: Si el resultado no verifica
    """
    ideal = partition.ideal
    polarizado, pm = polarize_ideal(ideal)
    facetas = set(facet_list) if facet_list is not None else set(facets(ideal, candidate_cap))
    if set(partition.tops()) != facetas:
        raise PreconditionError("Los topes de la partición no son exactamente F(Γ)")
    if not lower_bounds_within_r(partition):
        raise PreconditionError("Algún extremo inferior no cumple lo(i) ≤ r_i")

    resultado = Partition(polarizado, tuple(
        Interval(gamma(iv.lo, pm), beta(iv.hi, pm)) for iv in partition.intervals
    ))
    reporte = verify(resultado, depth=depth_p if depth_p is not None else 0)
    if not reporte.is_partition or (depth_p is not None and not reporte.nice):
        raise VerificationFailure(f"La partición polarizada no verifica: {reporte.failures}")
    logger.info(f"Partición polarizada de {len(resultado)} intervalos verificada ✓")
    return resultado


def polarize_components(ideal: MonomialIdeal) -> List[MonomialIdeal]:
    """Q_i^p para cada componente irreducible Q_i; su intersección es I^p."""
    pm = PolarizationMap.for_ideal(ideal)
    return [
        MonomialIdeal(pm.target, tuple(polarize_monomial(u, pm) for u in q.as_ideal(ideal.ring).gens))
        for q in irreducible_decomposition(ideal)
    ]


@dataclass(frozen=True)
class PolarizationReport:
    """Transferencia de profundidad, dimensión y CM de S/I a T/I^p."""

    n1: int
    depth: int
    depth_p: int
    dim: int
    dim_p: int
    cm: bool
    cm_p: bool

    def shifts_hold(self) -> bool:
        return (
            self.depth_p == self.depth + self.n1
            and self.dim_p == self.dim + self.n1
            and self.cm == self.cm_p
        )

    def to_json(self) -> Dict[str, object]:
        return {
            "n1": self.n1,
            "depth": self.depth,
            "depth_p": self.depth_p,
            "dim": self.dim,
            "dim_p": self.dim_p,
            "cm": self.cm,
            "cm_p": self.cm_p,
        }


def polarization_report(ideal: MonomialIdeal, field_char: int = 0) -> PolarizationReport:
    polarizado, pm = polarize_ideal(ideal)
    base = depth_report(ideal, field_char)
    pol = depth_report(polarizado, field_char)
    return PolarizationReport(
        n1=pm.n1,
        depth=base.depth,
        depth_p=pol.depth,
        dim=base.dim,
        dim_p=pol.dim,
        cm=base.cohen_macaulay,
        cm_p=pol.cohen_macaulay,
    )
