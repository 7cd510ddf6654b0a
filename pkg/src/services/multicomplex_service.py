"""
Servicio del diccionario ideal ↔ multicomplejo.

Descomposición irreducible irredundante, caras maximales, facetas,
pertenencia, dimensión de Krull y primos asociados.
"""

from dataclasses import dataclass
from itertools import product
from typing import Dict, FrozenSet, List, Optional, Sequence, Tuple
import logging

from config import DEFAULT_CANDIDATE_CAP
from src.models.core_model import (
    INF,
    Face,
    Monomial,
    MonomialIdeal,
    RingContext,
    face_leq,
    minimalize,
    sorted_faces,
)
from src.utils.errors import CapExceededError, DimensionMismatchError, ZeroIdealError


logger = logging.getLogger("MulticomplexService")


@dataclass(frozen=True)
class IrreducibleComponent:
    """
    Ideal irreducible Q = (x_i^{e_i} : i ∈ A), generado por potencias puras.

    Attributes:
        pure_powers: Pares (i, e_i) ordenados por índice, A no vacío
    """

    pure_powers: Tuple[Tuple[int, int], ...]

    def __post_init__(self):
        pares = tuple(sorted(self.pure_powers))
        if not pares:
            raise ValueError("Una componente irreducible necesita al menos una potencia pura")
        if any(e < 1 for _, e in pares):
            raise ValueError(f"Exponentes de potencias puras deben ser positivos: {pares}")
        if len({i for i, _ in pares}) != len(pares):
            raise ValueError(f"Variable repetida en componente: {pares}")
        object.__setattr__(self, "pure_powers", pares)

    def as_dict(self) -> Dict[int, int]:
        return dict(self.pure_powers)

    def radical(self) -> FrozenSet[int]:
        """Conjunto de variables del primo P = √Q."""
        return frozenset(i for i, _ in self.pure_powers)

    def contains_component(self, other: "IrreducibleComponent") -> bool:
        """True si other ⊆ self (cada x_k^{e} de other está en self)."""
        mine = self.as_dict()
        return all(k in mine and mine[k] <= e for k, e in other.pure_powers)

    def as_ideal(self, ring: RingContext) -> MonomialIdeal:
        gens = []
        for i, e in self.pure_powers:
            exps = [0] * ring.n
            exps[i] = e
            gens.append(Monomial(tuple(exps)))
        return MonomialIdeal(ring, tuple(gens))

    def maximal_face(self, n: int) -> Face:
        """m(i) = e_i - 1 si x_i^{e_i} es generador, ∞ en otro caso."""
        powers = self.as_dict()
        return Face(tuple(powers[i] - 1 if i in powers else INF for i in range(n)))

    def to_string(self, ring: RingContext) -> str:
        partes = []
        for i, e in self.pure_powers:
            name = ring.var_names[i]
            partes.append(name if e == 1 else f"{name}^{e}")
        return "(" + ", ".join(partes) + ")"


@dataclass(frozen=True)
class MulticomplexView:
    """
    Multicomplejo Γ(I) ya calculado (solo lectura).

    Attributes:
        ideal: Ideal I
        maximal_faces: M(Γ), antichain ordenada
        facets: F(Γ), lista finita ordenada
    """

    ideal: MonomialIdeal
    maximal_faces: Tuple[Face, ...]
    facets: Tuple[Face, ...]

    @property
    def n(self) -> int:
        return self.ideal.n


# ---------------------------------------------------------------------------
# Descomposición irreducible
# ---------------------------------------------------------------------------

def _split_generators(gens: Tuple[Tuple[int, ...], ...], memo: Dict) -> List[Tuple[Tuple[int, ...], ...]]:
    """
    División recursiva: si u = x_i^{e}·v con v ≠ 1, entonces
    (J, u) = (J, x_i^e) ∩ (J, v). Termina cuando todos los generadores son
    potencias puras.
    """
    if gens in memo:
        return memo[gens]
    mixto = next((g for g in gens if sum(1 for e in g if e > 0) >= 2), None)
    if mixto is None:
        memo[gens] = [gens]
        return memo[gens]
    i = next(k for k, e in enumerate(mixto) if e > 0)
    pura = tuple(e if k == i else 0 for k, e in enumerate(mixto))
    resto = tuple(0 if k == i else e for k, e in enumerate(mixto))
    otros = [g for g in gens if g != mixto]
    hojas = []
    for nuevo in (pura, resto):
        mins = minimalize([Monomial(g) for g in otros + [nuevo]])
        hojas.extend(_split_generators(tuple(m.exponents for m in mins), memo))
    memo[gens] = hojas
    return hojas


def irreducible_decomposition(ideal: MonomialIdeal) -> List[IrreducibleComponent]:
    """
    Presentación irredundante de I como intersección de ideales irreducibles.

    Args:
        ideal: Ideal propio no nulo

    Returns:
        Componentes ordenadas canónicamente (por su cara maximal)

    Raises:
        ZeroIdealError: Si I = 0
    """
    if ideal.is_zero():
        raise ZeroIdealError("El ideal cero no tiene componentes irreducibles")

    hojas = _split_generators(tuple(g.exponents for g in ideal.gens), {})
    componentes = set()
    for hoja in hojas:
        pares = []
        for g in hoja:
            i = next(k for k, e in enumerate(g) if e > 0)
            pares.append((i, g[i]))
        componentes.add(IrreducibleComponent(tuple(pares)))

    n = ideal.n
    candidatas = sorted(componentes, key=lambda q: q.maximal_face(n).sort_key())
    # Las componentes irreducibles son inescindibles: ∩_{j≠i} Q_j ⊆ Q_i
    # sucede exactamente cuando algún Q_j ⊆ Q_i.
    irredundantes = [
        q for q in candidatas
        if not any(p != q and q.contains_component(p) for p in candidatas)
    ]
    logger.info(f"Descomposición de ({ideal}): {len(irredundantes)} componentes ✓")
    return irredundantes


# ---------------------------------------------------------------------------
# Caras maximales, pertenencia y facetas
# ---------------------------------------------------------------------------

def maximal_faces(ideal: MonomialIdeal) -> List[Face]:
    """
    M(Γ(I)): una cara maximal por componente irreducible.

    El ideal cero tiene la única cara maximal (∞,…,∞).
    """
    if ideal.is_zero():
        return [Face.infinite(ideal.n)]
    return sorted_faces(q.maximal_face(ideal.n) for q in irreducible_decomposition(ideal))


def member(view: MulticomplexView, a: Face) -> bool:
    """
    a ∈ Γ si a ≤ m para alguna cara maximal m.

    Raises:
        DimensionMismatchError: Si a no tiene longitud n
    """
    if a.n != view.n:
        raise DimensionMismatchError(f"Cara de longitud {a.n} en anillo de {view.n} variables")
    return any(face_leq(a, m) for m in view.maximal_faces)


def candidate_count(ideal: MonomialIdeal) -> int:
    """Tamaño de 𝓑 = Π (r_i + 1)."""
    total = 1
    for ri in ideal.r_vector():
        total *= ri + 1
    return total


def facets(ideal: MonomialIdeal, candidate_cap: int = DEFAULT_CANDIDATE_CAP,
           maximals: Optional[Sequence[Face]] = None) -> List[Face]:
    """
    F(Γ(I)) por enumeración de 𝓑 = {b : b(i) < r_i si b(i) ≠ ∞}.

    Una variable libre (r_i = 0) solo admite ∞ en 𝓑, lo que reinserta
    automáticamente esas coordenadas como ∞ en todas las facetas.

    Args:
        ideal: Ideal propio
        candidate_cap: Máximo de candidatos a revisar
        maximals: Caras maximales ya calculadas (opcional)

    Returns:
        Facetas en orden canónico

    Raises:
        CapExceededError: Si |𝓑| supera candidate_cap
    """
    total = candidate_count(ideal)
    if total > candidate_cap:
        raise CapExceededError("cap_candidates", candidate_cap, total)
    maxs = list(maximals) if maximals is not None else maximal_faces(ideal)
    ejes = [list(range(ri)) + [INF] for ri in ideal.r_vector()]

    resultado = []
    for coords in product(*ejes):
        b = Face(coords)
        encima = [m for m in maxs if face_leq(b, m)]
        if not encima:
            continue
        inf_b = b.infpt()
        if all(m.infpt() == inf_b for m in encima):
            resultado.append(b)
    logger.info(f"Facetas: {len(resultado)} de {total} candidatos ✓")
    return sorted_faces(resultado)


def build_view(ideal: MonomialIdeal, candidate_cap: int = DEFAULT_CANDIDATE_CAP) -> MulticomplexView:
    """Construye la vista (ideal, M(Γ), F(Γ))."""
    maxs = maximal_faces(ideal)
    return MulticomplexView(
        ideal=ideal,
        maximal_faces=tuple(maxs),
        facets=tuple(facets(ideal, candidate_cap, maximals=maxs)),
    )


def krull_dim(ideal: MonomialIdeal) -> int:
    """dim S/I = max |infpt(m)| sobre las caras maximales."""
    return max(len(m.infpt()) for m in maximal_faces(ideal))


def assoc_primes(ideal: MonomialIdeal) -> List[FrozenSet[int]]:
    """
    Ass(S/I): los radicales de las componentes irreducibles, sin repetir.

    Se leen de las caras maximales: P = {i : m(i) finito}.
    """
    n = ideal.n
    primos = {frozenset(i for i in range(n) if m[i] is not INF) for m in maximal_faces(ideal)}
    return sorted(primos, key=lambda p: (len(p), sorted(p)))


def facet_infpt_bounds(ideal: MonomialIdeal, candidate_cap: int = DEFAULT_CANDIDATE_CAP) -> Tuple[int, int]:
    """
    (min |infpt| sobre F(Γ), min |infpt| sobre M(Γ)); ambos coinciden.
    """
    view = build_view(ideal, candidate_cap)
    return (
        min(len(b.infpt()) for b in view.facets),
        min(len(m.infpt()) for m in view.maximal_faces),
    )


# ---------------------------------------------------------------------------
# Reglas (a) y (b) del diccionario
# ---------------------------------------------------------------------------

def ideal_of_face(ring: RingContext, m: Face) -> MonomialIdeal:
    """I(Γ(m)) = (x_i^{m(i)+1} : m(i) finito)."""
    if m.n != ring.n:
        raise DimensionMismatchError(f"Cara de longitud {m.n} en anillo de {ring.n} variables")
    gens = []
    for i, c in enumerate(m.coords):
        if c is INF:
            continue
        exps = [0] * ring.n
        exps[i] = c + 1
        gens.append(Monomial(tuple(exps)))
    return MonomialIdeal(ring, tuple(gens))


def cone_view(ring: RingContext, m: Face) -> MulticomplexView:
    """Γ(m): el menor multicomplejo que contiene a m."""
    return MulticomplexView(ideal=ideal_of_face(ring, m), maximal_faces=(m,), facets=(m,))


def _intersect(a: MonomialIdeal, b: MonomialIdeal) -> MonomialIdeal:
    if a.is_zero() or b.is_zero():
        return MonomialIdeal.zero(a.ring)
    return MonomialIdeal(a.ring, tuple(g.lcm(h) for g in a.gens for h in b.gens))


def _common_ring(views: Sequence[MulticomplexView]) -> RingContext:
    if not views:
        raise ValueError("Se requiere al menos un multicomplejo")
    ring = views[0].ideal.ring
    for v in views[1:]:
        if v.ideal.ring != ring:
            raise DimensionMismatchError("Los multicomplejos no comparten anillo")
    return ring


def ideal_of_union(views: Sequence[MulticomplexView]) -> MonomialIdeal:
    """Regla (b): I(⋃Γ_j) = ⋂ I(Γ_j) (lista finita, no vacía)."""
    _common_ring(views)
    resultado = views[0].ideal
    for v in views[1:]:
        resultado = _intersect(resultado, v.ideal)
    return resultado


def ideal_of_intersection(views: Sequence[MulticomplexView]) -> MonomialIdeal:
    """Regla (a): I(⋂Γ_j) = Σ I(Γ_j)."""
    ring = _common_ring(views)
    return MonomialIdeal(ring, tuple(g for v in views for g in v.ideal.gens))
