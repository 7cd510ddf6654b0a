"""
Modelo central: naturales extendidos, caras, monomios, ideales monomiales e intervalos.

Todas las clases son inmutables (dataclasses congeladas) y todas las operaciones
son funciones puras. Los índices de coordenadas son 0-based internamente; la
variable de índice i se llama ring.var_names[i].
"""

from dataclasses import dataclass, field
from typing import FrozenSet, Iterable, Iterator, List, Sequence, Tuple, Union
import re

from config import EXPONENT_CAP
from src.utils.errors import (
    DimensionMismatchError,
    ExponentCapError,
    PreconditionError,
    UnitIdealError,
)


class _Infinity:
    """
    Símbolo distinguido ∞ de ℕ∞ = ℕ ∪ {∞}.

    Es un singleton: n < INF para todo natural n, e INF + n = INF.
    Nunca se representa con un entero centinela.
    """

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __reduce__(self):
        return (_Infinity, ())

    def __repr__(self) -> str:
        return "INF"

    def __str__(self) -> str:
        return "∞"

    def __hash__(self) -> int:
        return hash("ExtNat.INF")

    def __eq__(self, other) -> bool:
        return other is self

    def __lt__(self, other) -> bool:
        if other is self or _is_natural(other):
            return False
        return NotImplemented

    def __le__(self, other) -> bool:
        if other is self:
            return True
        if _is_natural(other):
            return False
        return NotImplemented

    def __gt__(self, other) -> bool:
        if other is self:
            return False
        if _is_natural(other):
            return True
        return NotImplemented

    def __ge__(self, other) -> bool:
        if other is self or _is_natural(other):
            return True
        return NotImplemented

    def __add__(self, other):
        if other is self or _is_natural(other):
            return self
        return NotImplemented

    __radd__ = __add__


INF = _Infinity()

ExtNat = Union[int, _Infinity]


def _is_natural(value) -> bool:
    return isinstance(value, int) and not isinstance(value, bool) and value >= 0


def is_inf(value: ExtNat) -> bool:
    """True si el valor es ∞."""
    return value is INF


def ext_add(x: ExtNat, y: ExtNat) -> ExtNat:
    """Suma en ℕ∞ (total: ∞ absorbe)."""
    if x is INF or y is INF:
        return INF
    return check_ext_nat(x + y)


def check_ext_nat(value) -> ExtNat:
    """
    Valida un natural extendido.

    Args:
        value: Entero no negativo o INF

    Returns:
        El mismo valor validado

    Raises:
        ExponentCapError: Si el entero supera EXPONENT_CAP
        ValueError: Si no es natural ni INF
    """
    if value is INF:
        return value
    if not isinstance(value, int) or isinstance(value, bool):
        raise ValueError(f"Valor no natural: {value!r}")
    if value < 0:
        raise ValueError(f"Exponente negativo: {value}")
    if value > EXPONENT_CAP:
        raise ExponentCapError(f"Exponente {value} supera el límite {EXPONENT_CAP}")
    return value


_VAR_NAME = re.compile(r"^[A-Za-z][A-Za-z0-9_]*$")


@dataclass(frozen=True)
class RingContext:
    """
    Anillo de polinomios S = K[x_1,…,x_n] (solo los nombres de variables;
    el cuerpo K se elige en la configuración).
    """

    n: int
    var_names: Tuple[str, ...]

    def __post_init__(self):
        object.__setattr__(self, "var_names", tuple(self.var_names))
        if not isinstance(self.n, int) or self.n < 1:
            raise ValueError(f"El número de variables debe ser positivo: {self.n!r}")
        if len(self.var_names) != self.n:
            raise DimensionMismatchError(
                f"Se esperaban {self.n} nombres de variables, hay {len(self.var_names)}"
            )
        if len(set(self.var_names)) != self.n:
            raise ValueError(f"Nombres de variables repetidos: {list(self.var_names)}")
        for name in self.var_names:
            if not _VAR_NAME.match(name):
                raise ValueError(f"Nombre de variable inválido: {name!r}")

    @classmethod
    def standard(cls, n: int) -> "RingContext":
        """Anillo con variables x1,…,xn."""
        return cls(n, tuple(f"x{i + 1}" for i in range(n)))

    def index_of(self, name: str) -> int:
        try:
            return self.var_names.index(name)
        except ValueError:
            raise ValueError(f"Variable desconocida: {name!r}") from None


@dataclass(frozen=True)
class Face:
    """
    Vector de (ℕ∪{∞})ⁿ: el elemento universal de multicomplejos e intervalos.

    La parte infinita infpt se deriva de las coordenadas, nunca se guarda.
    """

    coords: Tuple[ExtNat, ...]

    def __post_init__(self):
        object.__setattr__(self, "coords", tuple(check_ext_nat(c) for c in self.coords))

    @classmethod
    def zeros(cls, n: int) -> "Face":
        return cls((0,) * n)

    @classmethod
    def infinite(cls, n: int) -> "Face":
        return cls((INF,) * n)

    @property
    def n(self) -> int:
        return len(self.coords)

    def __len__(self) -> int:
        return len(self.coords)

    def __iter__(self) -> Iterator[ExtNat]:
        return iter(self.coords)

    def __getitem__(self, i: int) -> ExtNat:
        return self.coords[i]

    def infpt(self) -> FrozenSet[int]:
        return frozenset(i for i, c in enumerate(self.coords) if c is INF)

    def is_finite(self) -> bool:
        return all(c is not INF for c in self.coords)

    def degree(self) -> int:
        """Suma de las coordenadas finitas (|a| para caras finitas)."""
        return sum(c for c in self.coords if c is not INF)

    def with_inf(self, indices: Iterable[int]) -> "Face":
        """Copia con ∞ en los índices dados."""
        idx = set(indices)
        return Face(tuple(INF if i in idx else c for i, c in enumerate(self.coords)))

    def sort_key(self) -> Tuple[Tuple[int, int], ...]:
        """Orden lexicográfico con ∞ como máximo."""
        return tuple((1, 0) if c is INF else (0, c) for c in self.coords)

    def __str__(self) -> str:
        return "(" + ",".join(str(c) for c in self.coords) + ")"


@dataclass(frozen=True)
class Monomial:
    """Monomio x^a con a ∈ ℕⁿ (una cara finita)."""

    exponents: Tuple[int, ...]

    def __post_init__(self):
        exps = tuple(self.exponents)
        for e in exps:
            if e is INF:
                raise ValueError("Un monomio no puede tener coordenadas infinitas")
            check_ext_nat(e)
        object.__setattr__(self, "exponents", exps)

    @classmethod
    def one(cls, n: int) -> "Monomial":
        return cls((0,) * n)

    @classmethod
    def from_face(cls, face: Face) -> "Monomial":
        if not face.is_finite():
            raise PreconditionError(f"La cara {face} no es finita")
        return cls(tuple(face.coords))

    @property
    def n(self) -> int:
        return len(self.exponents)

    def __len__(self) -> int:
        return len(self.exponents)

    def __getitem__(self, i: int) -> int:
        return self.exponents[i]

    def degree(self) -> int:
        return sum(self.exponents)

    def support(self) -> Tuple[int, ...]:
        return tuple(i for i, e in enumerate(self.exponents) if e > 0)

    def is_one(self) -> bool:
        return all(e == 0 for e in self.exponents)

    def divides(self, other: "Monomial") -> bool:
        _check_same_n(self.n, other.n)
        return all(a <= b for a, b in zip(self.exponents, other.exponents))

    def lcm(self, other: "Monomial") -> "Monomial":
        _check_same_n(self.n, other.n)
        return Monomial(tuple(max(a, b) for a, b in zip(self.exponents, other.exponents)))

    def as_face(self) -> Face:
        return Face(self.exponents)

    def graded_lex_key(self) -> Tuple:
        """Grado total primero; dentro del grado, x1 > x2 > … (lex)."""
        return (self.degree(), tuple(-e for e in self.exponents))

    def to_string(self, ring: RingContext) -> str:
        if self.is_one():
            return "1"
        partes = []
        for name, e in zip(ring.var_names, self.exponents):
            if e == 1:
                partes.append(name)
            elif e > 1:
                partes.append(f"{name}^{e}")
        return "*".join(partes)


def _check_same_n(n1: int, n2: int) -> None:
    if n1 != n2:
        raise DimensionMismatchError(f"Dimensiones distintas: {n1} vs {n2}")


def minimalize(gens: Sequence[Monomial]) -> List[Monomial]:
    """
    Sistema minimal de generadores, en orden graded-lex.

    Args:
        gens: Lista no vacía de monomios

    Returns:
        Sublista minimal por divisibilidad, sin duplicados y ordenada

    Raises:
        UnitIdealError: Si algún generador es 1
    """
    unicos = {g.exponents: g for g in gens}
    ordenados = sorted(unicos.values(), key=Monomial.graded_lex_key)
    minimales: List[Monomial] = []
    for g in ordenados:
        if g.is_one():
            raise UnitIdealError("El ideal unidad no está permitido (generador 1)")
        # en orden graded-lex un divisor propio siempre aparece antes
        if not any(m.divides(g) for m in minimales):
            minimales.append(g)
    return minimales


@dataclass(frozen=True)
class MonomialIdeal:
    """
    Ideal monomial I = (u_1,…,u_s) ⊂ S.

    Los generadores se canonizan al construir (minimales, graded-lex).
    Sin generadores representa el ideal cero.
    """

    ring: RingContext
    gens: Tuple[Monomial, ...] = field(default_factory=tuple)

    def __post_init__(self):
        for g in self.gens:
            _check_same_n(self.ring.n, g.n)
        object.__setattr__(self, "gens", tuple(minimalize(list(self.gens))))

    @classmethod
    def from_exponents(cls, ring: RingContext, vectors: Iterable[Sequence[int]]) -> "MonomialIdeal":
        return cls(ring, tuple(Monomial(tuple(v)) for v in vectors))

    @classmethod
    def zero(cls, ring: RingContext) -> "MonomialIdeal":
        return cls(ring, ())

    @property
    def n(self) -> int:
        return self.ring.n

    def is_zero(self) -> bool:
        return not self.gens

    def contains(self, m: Monomial) -> bool:
        """x^a ∈ I si algún generador divide a x^a."""
        return any(g.divides(m) for g in self.gens)

    def contains_face(self, face: Face) -> bool:
        """
        x^a ∈ I para una cara (las coordenadas ∞ se truncan al exponente máximo
        de los generadores, que es suficiente para decidir divisibilidad).
        """
        r = self.r_vector()
        exps = tuple(r[i] if c is INF else c for i, c in enumerate(face.coords))
        return self.contains(Monomial(exps))

    def r_vector(self) -> Tuple[int, ...]:
        """r_i = máximo exponente de x_i entre los generadores (0 si x_i es libre)."""
        return tuple(
            max((g.exponents[i] for g in self.gens), default=0) for i in range(self.n)
        )

    def free_variables(self) -> FrozenSet[int]:
        """Variables que no dividen a ningún generador."""
        r = self.r_vector()
        return frozenset(i for i, ri in enumerate(r) if ri == 0)

    def is_squarefree(self) -> bool:
        return all(e <= 1 for g in self.gens for e in g.exponents)

    def __str__(self) -> str:
        if self.is_zero():
            return "0"
        return ", ".join(g.to_string(self.ring) for g in self.gens)


@dataclass(frozen=True)
class Interval:
    """Intervalo [lo, hi] = {c : lo ≤ c ≤ hi} de caras."""

    lo: Face
    hi: Face

    def __post_init__(self):
        _check_same_n(self.lo.n, self.hi.n)
        if not face_leq(self.lo, self.hi):
            raise PreconditionError(f"Intervalo inválido: {self.lo} no es ≤ {self.hi}")

    @property
    def n(self) -> int:
        return self.lo.n

    def stanley_set(self) -> FrozenSet[int]:
        """Z = {i : hi(i) = ∞}."""
        return self.hi.infpt()

    def contains(self, face: Face) -> bool:
        return face_leq(self.lo, face) and face_leq(face, self.hi)

    def sort_key(self) -> Tuple:
        return (self.lo.sort_key(), self.hi.sort_key())

    def __str__(self) -> str:
        if self.lo == self.hi:
            return f"[{self.lo}]"
        return f"[{self.lo},{self.hi}]"


def face_leq(a: Face, b: Face) -> bool:
    """
    Orden parcial componente a componente de ℕ∞ⁿ.

    Raises:
        DimensionMismatchError: Si las caras tienen distinta longitud
    """
    _check_same_n(a.n, b.n)
    return all(x <= y for x, y in zip(a.coords, b.coords))


def infpt(a: Face) -> FrozenSet[int]:
    """Parte infinita {i : a(i) = ∞}."""
    return a.infpt()


def sorted_faces(faces: Iterable[Face]) -> List[Face]:
    """Caras sin duplicados en orden canónico."""
    return sorted(set(faces), key=Face.sort_key)
