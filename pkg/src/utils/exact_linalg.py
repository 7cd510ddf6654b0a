"""
Utilidades de álgebra lineal exacta para rangos de matrices de borde.

- Racionales: eliminación libre de fracciones (Bareiss) sobre enteros de Python.
- GF(p): eliminación gaussiana vectorizada con numpy (p < 2^31).
"""

from typing import List, Sequence

import numpy as np


MAX_PRIME = 2 ** 31


def rank_fraction_free(rows: Sequence[Sequence[int]]) -> int:
    """
    Rango sobre ℚ de una matriz entera por eliminación de Bareiss.

    Cada entrada intermedia es un menor de la matriz original, por lo que
    las divisiones son exactas y no aparecen fracciones.

    Args:
        rows: Matriz como lista de filas de enteros

    Returns:
        Rango de la matriz
    """
    m = [list(int(x) for x in r) for r in rows]
    if not m or not m[0]:
        return 0
    n_rows, n_cols = len(m), len(m[0])
    rank = 0
    prev = 1
    for col in range(n_cols):
        piv_row = next((r for r in range(rank, n_rows) if m[r][col] != 0), None)
        if piv_row is None:
            continue
        if piv_row != rank:
            m[rank], m[piv_row] = m[piv_row], m[rank]
        piv = m[rank][col]
        fila_piv = m[rank]
        for r in range(rank + 1, n_rows):
            fila = m[r]
            factor = fila[col]
            for c in range(col + 1, n_cols):
                fila[c] = (piv * fila[c] - factor * fila_piv[c]) // prev
            fila[col] = 0
        prev = piv
        rank += 1
        if rank == n_rows:
            break
    return rank


def rank_mod_p(rows: Sequence[Sequence[int]], p: int) -> int:
    """
    Rango sobre GF(p).

    Args:
        rows: Matriz entera
        p: Primo menor que 2^31 (los productos caben en int64)

    Returns:
        Rango de la matriz reducida módulo p
    """
    if p >= MAX_PRIME:
        raise ValueError(f"Primo demasiado grande para eliminación en int64: {p}")
    a = np.array(rows, dtype=np.int64)
    if a.size == 0:
        return 0
    a %= p
    n_rows, n_cols = a.shape
    rank = 0
    for col in range(n_cols):
        nz = np.nonzero(a[rank:, col])[0]
        if nz.size == 0:
            continue
        piv = rank + int(nz[0])
        if piv != rank:
            a[[rank, piv]] = a[[piv, rank]]
        inv = pow(int(a[rank, col]), p - 2, p)
        a[rank] = (a[rank] * inv) % p
        factores = a[:, col].copy()
        factores[rank] = 0
        a = (a - np.outer(factores, a[rank]) % p) % p
        rank += 1
        if rank == n_rows:
            break
    return rank


def matrix_rank(rows: List[List[int]], field_char: int) -> int:
    """Rango sobre ℚ (field_char = 0) o sobre GF(field_char)."""
    if field_char == 0:
        return rank_fraction_free(rows)
    return rank_mod_p(rows, field_char)
