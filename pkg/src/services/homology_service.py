"""
Servicio de profundidad exacta.

Números de Betti multigraduados vía homología reducida de los complejos de
Koszul superiores, dimensión proyectiva, profundidad y test Cohen-Macaulay.
"""

from dataclasses import dataclass
from itertools import combinations
from typing import Dict, FrozenSet, List, Sequence, Set, Tuple
import logging

from config import DEFAULT_GENERATOR_CAP, DEFAULT_MATRIX_CAP
from src.models.core_model import Monomial, MonomialIdeal
from src.services.multicomplex_service import krull_dim
from src.utils.errors import CapExceededError, PreconditionError
from src.utils.exact_linalg import matrix_rank


logger = logging.getLogger("HomologyService")


@dataclass(frozen=True)
class SimplicialComplexExplicit:
    """
    Complejo simplicial dado por sus facetas (la clausura hacia abajo es implícita).

    Attributes:
        vertices: Vértices (índices de variables)
        facet_list: Facetas, incomparables dos a dos. () es el complejo vacío
            (void); (frozenset(),) es el complejo {∅}.
    """

    vertices: Tuple[int, ...]
    facet_list: Tuple[FrozenSet[int], ...]

    def __post_init__(self):
        unicas = {frozenset(f) for f in self.facet_list}
        maximales = [f for f in unicas if not any(f < g for g in unicas)]
        object.__setattr__(self, "vertices", tuple(sorted(self.vertices)))
        object.__setattr__(
            self, "facet_list", tuple(sorted(maximales, key=lambda f: (len(f), sorted(f))))
        )

    @property
    def vertex_count(self) -> int:
        return len(self.vertices)

    def is_void(self) -> bool:
        return not self.facet_list

    def is_empty_complex(self) -> bool:
        return self.facet_list == (frozenset(),)


@dataclass(frozen=True)
class DepthReport:
    """Profundidad, dimensión proyectiva, dimensión y CM de S/I sobre un cuerpo."""

    depth: int
    projective_dimension: int
    dim: int
    cohen_macaulay: bool
    field_char: int

    def to_json(self) -> Dict[str, object]:
        return {
            "depth": self.depth,
            "projective_dimension": self.projective_dimension,
            "dim": self.dim,
            "cohen_macaulay": self.cohen_macaulay,
            "field_char": self.field_char,
        }


def lcm_degrees(ideal: MonomialIdeal, generator_cap: int = DEFAULT_GENERATOR_CAP) -> List[Monomial]:
    """
    Mínimos comunes múltiplos de subconjuntos no vacíos de generadores.

    Raises:
        CapExceededError: Si hay más de generator_cap generadores
    """
    if len(ideal.gens) > generator_cap:
        raise CapExceededError("cap_generators", generator_cap, len(ideal.gens))
    grados: Set[Monomial] = set()
    for g in ideal.gens:
        grados |= {g.lcm(h) for h in grados}
        grados.add(g)
    return sorted(grados, key=Monomial.graded_lex_key)


def upper_koszul_complex(ideal: MonomialIdeal, a: Monomial) -> SimplicialComplexExplicit:
    """
    Complejo de Koszul superior K^a(I) = {τ ⊆ supp(a) : x^{a-τ} ∈ I}.

    x^{a-τ} ∈ I si y solo si algún generador g | x^a cumple τ ⊆ {i : g_i < a_i},
    así que las facetas se leen directamente de los generadores.

    Raises:
        PreconditionError: Si x^a ∉ I
    """
    if not ideal.contains(a):
        raise PreconditionError(f"x^a = {a.to_string(ideal.ring)} no está en el ideal")
    facetas = [
        frozenset(i for i in a.support() if g.exponents[i] < a.exponents[i])
        for g in ideal.gens
        if g.divides(a)
    ]
    return SimplicialComplexExplicit(vertices=a.support(), facet_list=tuple(facetas))


def _direct_faces(facet_list: Sequence[FrozenSet[int]]) -> Set[Tuple[int, ...]]:
    caras: Set[Tuple[int, ...]] = set()
    for f in facet_list:
        elems = sorted(f)
        for k in range(len(elems) + 1):
            caras.update(combinations(elems, k))
    return caras


def _nerve_faces(facet_list: Sequence[FrozenSet[int]]) -> Set[Tuple[int, ...]]:
    """Nervio del cubrimiento por facetas: subconjuntos con intersección no vacía."""
    caras: Set[Tuple[int, ...]] = {()}
    m = len(facet_list)

    def extender(actual: Tuple[int, ...], inter: FrozenSet[int]) -> None:
        inicio = actual[-1] + 1 if actual else 0
        for j in range(inicio, m):
            nueva = inter & facet_list[j] if actual else facet_list[j]
            if nueva:
                sigma = actual + (j,)
                caras.add(sigma)
                extender(sigma, nueva)

    extender((), frozenset())
    return caras


def _all_faces(complex_: SimplicialComplexExplicit) -> Set[Tuple[int, ...]]:
    """
    Caras de un complejo homotópicamente equivalente a complex_.

    Si el complejo tiene al menos un vértice, el nervio de sus facetas tiene la
    misma homología reducida; se usa el que tenga menos caras.
    """
    facetas = complex_.facet_list
    directo = sum(2 ** len(f) for f in facetas)
    nervio = 2 ** len(facetas)
    if nervio < directo:
        return _nerve_faces(facetas)
    return _direct_faces(facetas)


def _boundary_matrix(dom: List[Tuple[int, ...]], cod: List[Tuple[int, ...]]) -> List[List[int]]:
    """Matriz de ∂: C_k → C_{k-1} (filas = cod, columnas = dom)."""
    pos = {s: i for i, s in enumerate(cod)}
    matriz = [[0] * len(dom) for _ in cod]
    for col, sigma in enumerate(dom):
        for j in range(len(sigma)):
            cara = sigma[:j] + sigma[j + 1:]
            matriz[pos[cara]][col] = -1 if j % 2 else 1
    return matriz


def reduced_homology_ranks(complex_: SimplicialComplexExplicit, field_char: int = 0,
                           matrix_cap: int = DEFAULT_MATRIX_CAP) -> Dict[int, int]:
    """
    Rangos de la homología reducida H̃_k, k = -1 … dim.

    Convenciones: el complejo void tiene todos los rangos en 0 (diccionario
    vacío); el complejo {∅} tiene rango 1 en dimensión -1.

    Args:
        complex_: Complejo simplicial
        field_char: 0 para ℚ, p primo para GF(p)
        matrix_cap: Máximo de filas/columnas de una matriz de borde

    Returns:
        {k: rango de H̃_k}

    Raises:
        CapExceededError: Si una matriz de borde supera matrix_cap
    """
    if complex_.is_void():
        return {}
    if complex_.is_empty_complex():
        return {-1: 1}

    por_dim: Dict[int, List[Tuple[int, ...]]] = {}
    for s in _all_faces(complex_):
        por_dim.setdefault(len(s) - 1, []).append(s)
    for k in por_dim:
        por_dim[k].sort()
    top = max(por_dim)

    rangos_borde: Dict[int, int] = {}
    for k in range(0, top + 1):
        dom, cod = por_dim.get(k, []), por_dim.get(k - 1, [])
        if not dom or not cod:
            rangos_borde[k] = 0
            continue
        if len(dom) > matrix_cap or len(cod) > matrix_cap:
            raise CapExceededError("cap_matrix", matrix_cap, max(len(dom), len(cod)))
        rangos_borde[k] = matrix_rank(_boundary_matrix(dom, cod), field_char)

    return {
        k: len(por_dim.get(k, [])) - rangos_borde.get(k, 0) - rangos_borde.get(k + 1, 0)
        for k in range(-1, top + 1)
    }


def betti_total(ideal: MonomialIdeal, field_char: int = 0,
                generator_cap: int = DEFAULT_GENERATOR_CAP,
                matrix_cap: int = DEFAULT_MATRIX_CAP) -> Dict[int, int]:
    """
    β_i(I) = Σ_a rango H̃_{i-1}(K^a(I)) sobre los grados lcm.

    Returns:
        {i: β_i} sin entradas nulas
    """
    if ideal.is_zero():
        return {}
    betti: Dict[int, int] = {}
    for a in lcm_degrees(ideal, generator_cap):
        ranks = reduced_homology_ranks(upper_koszul_complex(ideal, a), field_char, matrix_cap)
        for k, rk in ranks.items():
            if rk:
                betti[k + 1] = betti.get(k + 1, 0) + rk
    return dict(sorted(betti.items()))


def depth_report(ideal: MonomialIdeal, field_char: int = 0,
                 generator_cap: int = DEFAULT_GENERATOR_CAP,
                 matrix_cap: int = DEFAULT_MATRIX_CAP) -> DepthReport:
    """
    Profundidad de S/I por Auslander–Buchsbaum: depth = n - pd(S/I),
    con pd(S/I) = 1 + max{i : β_i(I) ≠ 0}.
    """
    n = ideal.n
    if ideal.is_zero():
        return DepthReport(depth=n, projective_dimension=0, dim=n,
                           cohen_macaulay=True, field_char=field_char)
    betti = betti_total(ideal, field_char, generator_cap, matrix_cap)
    pd = 1 + max(betti)
    depth = n - pd
    dim = krull_dim(ideal)
    logger.info(f"depth(S/({ideal})) = {depth}, dim = {dim}, car = {field_char} ✓")
    return DepthReport(depth=depth, projective_dimension=pd, dim=dim,
                       cohen_macaulay=(depth == dim), field_char=field_char)
