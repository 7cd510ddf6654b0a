"""
Servicio de corpus aleatorio.

Genera ideales monomiales reproducibles a partir de una semilla y arma el
ledger por ideal (profundidad, dimensión, CM, transferencia por polarización
y el estado sdepth ≥ depth) como DataFrame de pandas.
"""

from dataclasses import asdict, dataclass
from typing import List, Optional
import logging

import numpy as np
import pandas as pd

from config import (
    DEFAULT_CORPUS_NODE_CAP,
    DEFAULT_CORPUS_SIZE,
    DEFAULT_MAX_EXP,
    DEFAULT_MAX_GENS,
    DEFAULT_MAX_N,
    DEFAULT_SEED,
)
from src.models.core_model import Monomial, MonomialIdeal, RingContext
from src.services.hilbert_service import polarization_identity_check
from src.services.partition_service import partition_sdepth
from src.services.polarization_service import check_facet_bijection, polarization_report
from src.services.sdepth_solver import solve_sdepth
from src.utils.errors import SearchCapExceeded


logger = logging.getLogger("CorpusService")

LEDGER_COLUMNS = [
    "ideal", "n", "n1", "depth", "dim", "cm", "depth_p", "dim_p", "cm_p",
    "facet_bijection", "hilbert_identity", "sdepth", "sdepth_ge_depth",
    "witness_min_inf", "exact",
]


def _random_ideal(rng: np.random.Generator, max_n: int, max_exp: int, max_gens: int) -> Optional[MonomialIdeal]:
    n = int(rng.integers(1, max_n + 1))
    k = int(rng.integers(1, max_gens + 1))
    filas = rng.integers(0, max_exp + 1, size=(k, n))
    gens = [Monomial(tuple(int(e) for e in fila)) for fila in filas if fila.any()]
    if not gens:
        return None
    ideal = MonomialIdeal(RingContext.standard(n), tuple(gens))
    # toda variable debe dividir a algún generador minimal
    if ideal.free_variables():
        return None
    return ideal


def generate_corpus(seed: int = DEFAULT_SEED, size: int = DEFAULT_CORPUS_SIZE,
                    max_n: int = DEFAULT_MAX_N, max_exp: int = DEFAULT_MAX_EXP,
                    max_gens: int = DEFAULT_MAX_GENS) -> List[MonomialIdeal]:
    """
    Lista reproducible de ideales propios, no nulos, sin variables libres.

    Args:
        seed: Semilla de numpy.random.default_rng
        size: Número de ideales
        max_n: Máximo de variables
        max_exp: Máximo exponente
        max_gens: Máximo de generadores antes de minimalizar
    """
    if size < 0 or min(max_n, max_exp, max_gens) < 1:
        raise ValueError("Los parámetros del corpus deben ser positivos")
    rng = np.random.default_rng(seed)
    corpus: List[MonomialIdeal] = []
    while len(corpus) < size:
        ideal = _random_ideal(rng, max_n, max_exp, max_gens)
        if ideal is not None:
            corpus.append(ideal)
    logger.info(f"Corpus generado: {size} ideales (semilla {seed}) ✓")
    return corpus


@dataclass
class LedgerRow:
    ideal: str
    n: int
    n1: int
    depth: int
    dim: int
    cm: bool
    depth_p: int
    dim_p: int
    cm_p: bool
    facet_bijection: bool
    hilbert_identity: bool
    sdepth: int
    sdepth_ge_depth: bool
    witness_min_inf: int
    exact: bool


def ledger_row(ideal: MonomialIdeal, field_char: int = 0,
               node_cap: int = DEFAULT_CORPUS_NODE_CAP) -> LedgerRow:
    """Fila del ledger; el solver acotado registra exact = False en vez de fallar."""
    reporte = polarization_report(ideal, field_char)
    try:
        resultado = solve_sdepth(ideal, node_cap=node_cap)
    except SearchCapExceeded as exc:
        if exc.best is None:
            raise
        resultado = exc.best
    return LedgerRow(
        ideal=str(ideal),
        n=ideal.n,
        n1=reporte.n1,
        depth=reporte.depth,
        dim=reporte.dim,
        cm=reporte.cm,
        depth_p=reporte.depth_p,
        dim_p=reporte.dim_p,
        cm_p=reporte.cm_p,
        facet_bijection=check_facet_bijection(ideal),
        hilbert_identity=polarization_identity_check(ideal),
        sdepth=resultado.sdepth,
        sdepth_ge_depth=resultado.sdepth >= reporte.depth,
        witness_min_inf=partition_sdepth(resultado.lifted),
        exact=resultado.exact,
    )


def corpus_ledger(ideals: List[MonomialIdeal], field_char: int = 0,
                  node_cap: int = DEFAULT_CORPUS_NODE_CAP) -> pd.DataFrame:
    """Ledger por ideal como DataFrame (una fila por ideal, columnas LEDGER_COLUMNS)."""
    filas = []
    for k, ideal in enumerate(ideals):
        filas.append(asdict(ledger_row(ideal, field_char, node_cap)))
        if (k + 1) % 50 == 0:
            logger.info(f"Ledger: {k + 1}/{len(ideals)} ideales")
    df = pd.DataFrame(filas, columns=LEDGER_COLUMNS)
    hallazgos = int((~df["sdepth_ge_depth"]).sum()) if len(df) else 0
    if hallazgos:
        logger.warning(f"{hallazgos} ideales con sdepth < depth")
    return df
