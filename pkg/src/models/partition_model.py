"""
Modelos de particiones de multicomplejos y de sus reportes de verificación.
"""

from dataclasses import dataclass, field
from typing import Dict, List, Optional, Tuple

from src.models.core_model import Interval, MonomialIdeal
from src.utils.errors import DimensionMismatchError


@dataclass(frozen=True)
class Partition:
    """
    Presentación candidata de Γ(I) como unión disjunta finita de intervalos.

    La disjunción y la cobertura no se suponen: las certifica el verificador.
    """

    ideal: MonomialIdeal
    intervals: Tuple[Interval, ...]

    def __post_init__(self):
        ivs = tuple(self.intervals)
        for iv in ivs:
            if iv.n != self.ideal.n:
                raise DimensionMismatchError(
                    f"Intervalo {iv} de longitud {iv.n} en anillo de {self.ideal.n} variables"
                )
        object.__setattr__(self, "intervals", ivs)

    def __len__(self) -> int:
        return len(self.intervals)

    def tops(self):
        return [iv.hi for iv in self.intervals]


@dataclass
class VerificationReport:
    """
    Resultado del verificador independiente.

    Attributes:
        contained: Todo intervalo está en Γ y tiene extremo inferior finito
        disjoint: Los intervalos son disjuntos dos a dos
        covers: La suma de series coincide con H(S/I) (solo si contained y disjoint)
        nice: min_inf ≥ depth_used
        min_inf: min |infpt(hi)| sobre los intervalos
        depth_used: Profundidad contra la que se evaluó nice
        failures: Diagnósticos, el primero señala el primer intervalo o par culpable
    """

    contained: bool
    disjoint: bool
    covers: bool
    nice: bool
    min_inf: int
    depth_used: int
    failures: List[str] = field(default_factory=list)

    @property
    def is_partition(self) -> bool:
        return self.contained and self.disjoint and self.covers

    @property
    def all_ok(self) -> bool:
        return self.is_partition and self.nice

    def to_json(self) -> Dict[str, object]:
        return {
            "contained": self.contained,
            "disjoint": self.disjoint,
            "covers": self.covers,
            "nice": self.nice,
            "min_inf": self.min_inf,
            "depth_used": self.depth_used,
            "failures": list(self.failures),
        }


@dataclass(frozen=True)
class Classification:
    """Las tres condiciones de la caracterización CM de particiones buenas."""

    nice: bool
    tops_subset_of_facets: bool
    tops_contain_all_maximal: bool

    def all_equal(self) -> bool:
        return self.nice == self.tops_subset_of_facets == self.tops_contain_all_maximal

    def to_json(self) -> Dict[str, bool]:
        return {
            "nice": self.nice,
            "tops_subset_of_facets": self.tops_subset_of_facets,
            "tops_contain_all_maximal": self.tops_contain_all_maximal,
        }


@dataclass(frozen=True)
class NicePartitionOutcome:
    """Resultado de buscar una partición buena: la partición o un hallazgo."""

    partition: Optional[Partition]
    depth: int
    sdepth: int
    finding: Optional[str] = None
