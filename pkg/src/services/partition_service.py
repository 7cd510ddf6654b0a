"""
Servicio de particiones en intervalos.

Condiciones de espacio de Stanley, división en intervalos de Stanley,
criterio de disjunción por cajas, verificador de particiones, refinamiento
a facetas, clasificación CM y el diccionario partición ↔ descomposición.
"""

from itertools import combinations, product
from typing import FrozenSet, Iterable, List, Optional, Sequence, Tuple
import logging

from config import DEFAULT_CANDIDATE_CAP, DEFAULT_SPLIT_CAP
from src.models.core_model import INF, ExtNat, Face, Interval, Monomial, MonomialIdeal, face_leq
from src.models.partition_model import Classification, Partition, VerificationReport
from src.services.hilbert_service import hilbert_series, partition_series, series_equal
from src.services.multicomplex_service import facets as compute_facets, maximal_faces
from src.utils.errors import (
    CapExceededError,
    DimensionMismatchError,
    PreconditionError,
    VerificationFailure,
)


logger = logging.getLogger("PartitionService")


def is_stanley_interval(iv: Interval) -> bool:
    """lo finito y hi(i) = lo(i) en toda coordenada finita de hi."""
    if not iv.lo.is_finite():
        return False
    return all(b is INF or a == b for a, b in zip(iv.lo.coords, iv.hi.coords))


def split_to_stanley(iv: Interval, split_cap: int = DEFAULT_SPLIT_CAP) -> List[Interval]:
    """
    Divide [lo, hi] en intervalos de Stanley disjuntos: uno por cada elección
    lo(k) ≤ c(k) ≤ hi(k) de las coordenadas finitas de hi.

    Raises:
        PreconditionError: Si lo tiene coordenadas infinitas
        CapExceededError: Si el número de piezas supera split_cap
    """
    if not iv.lo.is_finite():
        raise PreconditionError(f"Extremo inferior infinito en {iv}")
    total = 1
    for a, b in zip(iv.lo.coords, iv.hi.coords):
        if b is not INF:
            total *= b - a + 1
    if total > split_cap:
        raise CapExceededError("cap_split", split_cap, total)

    ejes = [[a] if b is INF else list(range(a, b + 1)) for a, b in zip(iv.lo.coords, iv.hi.coords)]
    piezas = []
    for c in product(*ejes):
        tope = tuple(INF if b is INF else ck for ck, b in zip(c, iv.hi.coords))
        piezas.append(Interval(Face(c), Face(tope)))
    return piezas


def i_subinterval(iv: Interval, i: int) -> Tuple[ExtNat, ExtNat]:
    """[lo(i), hi(i)] con i en base 0."""
    if not 0 <= i < iv.n:
        raise PreconditionError(f"Índice {i} fuera de rango para intervalo de longitud {iv.n}")
    return iv.lo[i], iv.hi[i]


def intervals_disjoint(iv1: Interval, iv2: Interval) -> bool:
    """
    Dos intervalos son disjuntos si y solo si alguna coordenada tiene
    subintervalos disjuntos: max(lo1(i), lo2(i)) > min(hi1(i), hi2(i)).

    Raises:
        DimensionMismatchError: Si las longitudes difieren
    """
    if iv1.n != iv2.n:
        raise DimensionMismatchError(f"Intervalos de longitudes {iv1.n} y {iv2.n}")
    return any(
        max(iv1.lo[i], iv2.lo[i]) > min(iv1.hi[i], iv2.hi[i])
        for i in range(iv1.n)
    )


def partition_sdepth(partition: Partition) -> int:
    """min |infpt(hi)| sobre los intervalos."""
    if not partition.intervals:
        raise PreconditionError("Partición vacía")
    return min(len(iv.hi.infpt()) for iv in partition.intervals)


def lower_bounds_within_r(partition: Partition) -> bool:
    """Todo extremo inferior cumple lo(i) ≤ r_i."""
    r = partition.ideal.r_vector()
    return all(
        iv.lo.is_finite() and all(c <= ri for c, ri in zip(iv.lo.coords, r))
        for iv in partition.intervals
    )


def verify(partition: Partition, depth: int,
           maximals: Optional[Sequence[Face]] = None) -> VerificationReport:
    """
    Verificador independiente de particiones.

    contained: extremos inferiores finitos y cada hi en Γ.
    disjoint: pares disjuntos por el criterio de cajas.
    covers: Σ series de intervalos = H(S/I), evaluado solo con contained y disjoint.
    nice: todo |infpt(hi)| ≥ depth.

    Nunca lanza por fallos matemáticos: todo queda en el reporte.
    """
    ideal = partition.ideal
    ivs = partition.intervals
    fallas: List[str] = []
    maxs = list(maximals) if maximals is not None else maximal_faces(ideal)

    contained = True
    for k, iv in enumerate(ivs):
        if not iv.lo.is_finite():
            contained = False
            fallas.append(f"Intervalo {k} {iv}: extremo inferior infinito")
            break
        if not any(face_leq(iv.hi, m) for m in maxs):
            contained = False
            fallas.append(f"Intervalo {k} {iv}: el tope no está en el multicomplejo")
            break

    disjoint = True
    for (j, a), (k, b) in combinations(enumerate(ivs), 2):
        if not intervals_disjoint(a, b):
            disjoint = False
            fallas.append(f"Intervalos {j} {a} y {k} {b} se intersecan")
            break

    covers = False
    if contained and disjoint:
        suma = partition_series(list(ivs))
        objetivo = hilbert_series(ideal)
        covers = series_equal(suma, objetivo)
        if not covers:
            fallas.append(f"Cobertura: Σ series = {suma}, H(S/I) = {objetivo}")

    min_inf = min((len(iv.hi.infpt()) for iv in ivs), default=ideal.n)
    nice = min_inf >= depth
    if not nice:
        k = next(k for k, iv in enumerate(ivs) if len(iv.hi.infpt()) < depth)
        fallas.append(f"Intervalo {k} {ivs[k]}: |infpt(hi)| < depth = {depth}")

    reporte = VerificationReport(
        contained=contained, disjoint=disjoint, covers=covers, nice=nice,
        min_inf=min_inf, depth_used=depth, failures=fallas,
    )
    if reporte.all_ok:
        logger.info(f"Partición de {len(ivs)} intervalos verificada ✓")
    else:
        logger.info(f"Verificación con fallas: {fallas[0]}")
    return reporte


def refine_to_facets(partition: Partition, facet_list: Sequence[Face]) -> Partition:
    """
    Reemplaza cada [a, b] por la familia [c_e, e] sobre las facetas e ∈ [a, b],
    con c_e = e en las coordenadas finitas de b y c_e = a en las demás.

    Raises:
        PreconditionError: Si algún tope no es faceta
        VerificationFailure: Si el resultado no es partición de Γ
    """
    facetas = set(facet_list)
    for iv in partition.intervals:
        if iv.hi not in facetas:
            raise PreconditionError(f"El tope {iv.hi} no es una faceta")

    nuevos: List[Interval] = []
    for iv in partition.intervals:
        dentro = sorted((e for e in facetas if iv.contains(e)), key=Face.sort_key)
        for e in dentro:
            c = tuple(
                a if b is INF else ec
                for a, b, ec in zip(iv.lo.coords, iv.hi.coords, e.coords)
            )
            nuevos.append(Interval(Face(c), e))

    refinada = Partition(partition.ideal, tuple(nuevos))
    reporte = verify(refinada, depth=0)
    if not reporte.is_partition:
        raise VerificationFailure(f"El refinamiento a facetas no es partición: {reporte.failures}")
    return refinada


def classify(partition: Partition, depth: int,
             facet_list: Optional[Sequence[Face]] = None,
             maximals: Optional[Sequence[Face]] = None,
             candidate_cap: int = DEFAULT_CANDIDATE_CAP) -> Classification:
    """
    Condiciones (a) buena, (b) topes ⊆ F(Γ), (c) M(Γ) ⊆ topes ⊆ F(Γ),
    calculadas por separado.

    Raises:
        PreconditionError: Si la partición no verifica
    """
    ideal = partition.ideal
    maxs = list(maximals) if maximals is not None else maximal_faces(ideal)
    reporte = verify(partition, depth, maximals=maxs)
    if not reporte.is_partition:
        raise PreconditionError(f"Partición no verificada: {reporte.failures}")
    facetas = set(facet_list) if facet_list is not None else set(
        compute_facets(ideal, candidate_cap, maximals=maxs)
    )
    topes = set(partition.tops())
    return Classification(
        nice=reporte.nice,
        tops_subset_of_facets=topes <= facetas,
        tops_contain_all_maximal=set(maxs) <= topes <= facetas,
    )


def partition_to_decomposition(partition: Partition) -> List[Tuple[Monomial, FrozenSet[int]]]:
    """
    Espacios de Stanley x^{lo}·K[Z] con Z = infpt(hi).

    Raises:
        PreconditionError: Si algún intervalo no es de Stanley
    """
    pares = []
    for iv in partition.intervals:
        if not is_stanley_interval(iv):
            raise PreconditionError(f"{iv} no es un intervalo de Stanley")
        pares.append((Monomial.from_face(iv.lo), iv.hi.infpt()))
    return pares


def decomposition_to_partition(ideal: MonomialIdeal,
                               pairs: Iterable[Tuple[Monomial, Iterable[int]]]) -> Partition:
    """b(j) = ∞ si j ∈ Z, b(j) = a(j) en otro caso."""
    intervalos = []
    for u, z in pairs:
        lo = u.as_face()
        intervalos.append(Interval(lo, lo.with_inf(z)))
    return Partition(ideal, tuple(intervalos))
