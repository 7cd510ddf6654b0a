"""
Solver de profundidad de Stanley de S/I.

Reduce Γ(I) al poset característico finito {a ≤ g : x^a ∉ I}, decide por
backtracking, para cada d, si existe una partición en intervalos [a, b] con
|{i : b(i) = g_i}| ≥ d, y levanta el testigo a una partición de Γ(I) que se
valida con el verificador independiente.
"""

from dataclasses import dataclass, field
from itertools import product
from typing import Dict, List, Optional, Sequence, Set, Tuple
import logging

from config import DEFAULT_BOX_CAP, DEFAULT_NODE_CAP
from src.models.core_model import Face, Interval, Monomial, MonomialIdeal
from src.models.partition_model import NicePartitionOutcome, Partition
from src.services.homology_service import depth_report
from src.services.multicomplex_service import maximal_faces
from src.services.partition_service import partition_sdepth, verify
from src.utils.errors import CapExceededError, SearchCapExceeded, VerificationFailure


logger = logging.getLogger("SdepthSolver")

Point = Tuple[int, ...]


def _graded_lex(p: Point) -> Tuple:
    return (sum(p), tuple(-c for c in p))


@dataclass(frozen=True)
class CharacteristicPoset:
    """
    Poset característico de S/I.

    Attributes:
        ideal: Ideal I
        g: Cota (por defecto r)
        elements: Los a ≤ g con x^a ∉ I, en orden graded-lex
    """

    ideal: MonomialIdeal
    g: Tuple[int, ...]
    elements: Tuple[Point, ...]

    def __len__(self) -> int:
        return len(self.elements)

    def saturated(self, b: Point) -> frozenset:
        """Z_b = {i : b(i) = g_i}."""
        return frozenset(i for i, (c, gi) in enumerate(zip(b, self.g)) if c == gi)


@dataclass
class SolverResult:
    """
    Testigo del solver.

    Attributes:
        sdepth: Máximo d alcanzado (= min |infpt| de los topes levantados)
        poset_partition: Intervalos (lo, hi) del poset característico
        lifted: Partición de Γ(I) ya verificada
        exact: False si algún nivel superior quedó sin decidir por el tope de nodos
        g: Cota usada (r, o r+1 tras un reintento)
        nodes: Nodos explorados en total
    """

    sdepth: int
    poset_partition: List[Tuple[Point, Point]]
    lifted: Partition
    exact: bool = True
    g: Tuple[int, ...] = field(default_factory=tuple)
    nodes: int = 0


def characteristic_poset(ideal: MonomialIdeal, g: Optional[Sequence[int]] = None,
                         box_cap: int = DEFAULT_BOX_CAP) -> CharacteristicPoset:
    """
    {a ≤ g : x^a ∉ I} en orden graded-lex.

    Raises:
        CapExceededError: Si la caja [0, g] supera box_cap puntos
    """
    cota = tuple(g) if g is not None else ideal.r_vector()
    total = 1
    for gi in cota:
        total *= gi + 1
    if total > box_cap:
        raise CapExceededError("cap_box", box_cap, total)
    puntos = [
        p for p in product(*(range(gi + 1) for gi in cota))
        if not ideal.contains(Monomial(p))
    ]
    puntos.sort(key=_graded_lex)
    return CharacteristicPoset(ideal=ideal, g=cota, elements=tuple(puntos))


class _IntervalSearch:
    """
    Búsqueda de cubrimiento exacto por intervalos con |Z_b| ≥ d.

    El menor elemento no cubierto en orden graded-lex es necesariamente el
    mínimo de su intervalo, así que cada nodo decide solo su tope. Los
    elementos se indexan en orden graded-lex y cada intervalo [a, b] es la
    máscara arriba(a) & abajo(b).
    """

    def __init__(self, poset: CharacteristicPoset, node_cap: int):
        self.poset = poset
        self.node_cap = node_cap
        self.nodes = 0
        elementos = poset.elements
        self._up = [0] * len(elementos)
        self._down = [0] * len(elementos)
        for i, p in enumerate(elementos):
            for j, q in enumerate(elementos):
                if all(x <= y for x, y in zip(p, q)):
                    self._up[i] |= 1 << j
                    self._down[j] |= 1 << i
        self._sat = [len(poset.saturated(p)) for p in elementos]
        self._tops: Dict[int, List[Tuple[int, int, int]]] = {}

    def _above(self, k: int) -> List[int]:
        mascara = self._up[k]
        return [j for j in range(len(self._sat)) if mascara >> j & 1]

    def _candidates(self, k: int) -> List[Tuple[int, int, int]]:
        """(índice de b, |Z_b|, máscara de [a, b]) para todo b ≥ a, ordenados."""
        if k not in self._tops:
            salida = [(j, self._sat[j], self._up[k] & self._down[j]) for j in self._above(k)]
            salida.sort(key=lambda t: (-t[1], t[0]))
            self._tops[k] = salida
        return self._tops[k]

    def _feasible_bound(self, d: int) -> bool:
        """Todo elemento necesita algún b ≥ él con |Z_b| ≥ d."""
        return all(
            max(self._sat[j] for j in self._above(k)) >= d
            for k in range(len(self._sat))
        )

    def solve(self, d: int) -> Optional[List[Tuple[Point, Point]]]:
        """Primer testigo en el orden canónico, o None si no existe."""
        if not self._feasible_bound(d):
            return None
        elementos = self.poset.elements
        completo = (1 << len(elementos)) - 1
        fallidos: Set[int] = set()
        elegidos: List[Tuple[Point, Point]] = []

        def buscar(cubierto: int) -> bool:
            if cubierto == completo:
                return True
            if cubierto in fallidos:
                return False
            self.nodes += 1
            if self.nodes > self.node_cap:
                raise SearchCapExceeded(self.node_cap)
            libre = (~cubierto) & completo
            k = (libre & -libre).bit_length() - 1
            for j, z, mascara in self._candidates(k):
                if z < d:
                    break
                if mascara & cubierto:
                    continue
                elegidos.append((elementos[k], elementos[j]))
                if buscar(cubierto | mascara):
                    return True
                elegidos.pop()
            fallidos.add(cubierto)
            return False

        return list(elegidos) if buscar(0) else None


def lift(poset_partition: Sequence[Tuple[Point, Point]], poset: CharacteristicPoset) -> Partition:
    """
    [a, b] del poset ↦ intervalos de Stanley [c, c con ∞ en Z_b] para
    c ∈ [a, b] con c = a en Z_b.

    Raises:
        VerificationFailure: Si el levantamiento no es partición de Γ(I)
    """
    intervalos: List[Interval] = []
    for a, b in poset_partition:
        z = poset.saturated(b)
        ejes = [[ai] if i in z else list(range(ai, bi + 1)) for i, (ai, bi) in enumerate(zip(a, b))]
        for c in product(*ejes):
            lo = Face(c)
            intervalos.append(Interval(lo, lo.with_inf(z)))
    particion = Partition(poset.ideal, tuple(intervalos))
    reporte = verify(particion, depth=0)
    if not reporte.is_partition:
        raise VerificationFailure(f"Levantamiento con g = {poset.g} no verifica: {reporte.failures}")
    return particion


def _upper_bound(ideal: MonomialIdeal) -> int:
    """min |infpt(m)| sobre M(Γ): cota superior de sdepth(S/I)."""
    return min(len(m.infpt()) for m in maximal_faces(ideal))


def _solve_with_g(ideal: MonomialIdeal, g: Optional[Sequence[int]],
                  box_cap: int, node_cap: int) -> SolverResult:
    poset = characteristic_poset(ideal, g, box_cap)
    cota = _upper_bound(ideal)
    total_nodos = 0
    sin_decidir: Optional[int] = None

    for d in range(cota, -1, -1):
        busqueda = _IntervalSearch(poset, node_cap)
        try:
            testigo = busqueda.solve(d)
        except SearchCapExceeded:
            total_nodos += busqueda.nodes
            logger.warning(f"Tope de nodos alcanzado en d = {d}")
            if sin_decidir is None:
                sin_decidir = d
            continue
        total_nodos += busqueda.nodes
        if testigo is None:
            continue
        levantada = lift(testigo, poset)
        resultado = SolverResult(
            sdepth=partition_sdepth(levantada),
            poset_partition=testigo,
            lifted=levantada,
            exact=sin_decidir is None,
            g=poset.g,
            nodes=total_nodos,
        )
        if sin_decidir is not None:
            raise SearchCapExceeded(node_cap, best=resultado, unknown_above=resultado.sdepth)
        logger.info(f"sdepth(S/({ideal})) = {resultado.sdepth} con g = {poset.g} ✓")
        return resultado

    # d = 0 siempre admite la partición en puntos
    raise SearchCapExceeded(node_cap, best=None, unknown_above=0)


def solve_sdepth(ideal: MonomialIdeal, box_cap: int = DEFAULT_BOX_CAP,
                 node_cap: int = DEFAULT_NODE_CAP, g_bump: bool = False) -> SolverResult:
    """
    Profundidad de Stanley exacta de S/I con testigo verificado.

    Recorre d desde min |infpt(m)| hacia abajo; el primer d factible es el
    máximo. Si el levantamiento con g = r no verifica y g_bump está activo,
    se reintenta con g = r + 1.

    Raises:
        CapExceededError: Caja del poset demasiado grande
        SearchCapExceeded: Tope de nodos (con el mejor testigo hallado)
        VerificationFailure: Levantamiento inválido sin reintento posible
    """
    try:
        return _solve_with_g(ideal, None, box_cap, node_cap)
    except VerificationFailure as exc:
        if not g_bump:
            raise
        logger.warning(f"{exc}; reintentando con g + 1")
        g = tuple(ri + 1 for ri in ideal.r_vector())
        return _solve_with_g(ideal, g, box_cap, node_cap)


def nice_partition(ideal: MonomialIdeal, field_char: int = 0, box_cap: int = DEFAULT_BOX_CAP,
                   node_cap: int = DEFAULT_NODE_CAP, g_bump: bool = False,
                   depth: Optional[int] = None) -> NicePartitionOutcome:
    """
    Partición buena de Γ(I) si sdepth(S/I) ≥ depth(S/I).

    Si no existe se devuelve el hallazgo sin partición; nunca se afirma la
    conjetura. depth se calcula si no se pasa.
    """
    if depth is None:
        depth = depth_report(ideal, field_char).depth
    resultado = solve_sdepth(ideal, box_cap, node_cap, g_bump)
    if resultado.sdepth >= depth:
        return NicePartitionOutcome(partition=resultado.lifted, depth=depth, sdepth=resultado.sdepth)
    hallazgo = f"sdepth = {resultado.sdepth} < depth = {depth} para ({ideal})"
    logger.warning(hallazgo)
    return NicePartitionOutcome(partition=None, depth=depth, sdepth=resultado.sdepth, finding=hallazgo)


def lifted_tops(result: SolverResult) -> List[Face]:
    return sorted({iv.hi for iv in result.lifted.intervals}, key=Face.sort_key)
