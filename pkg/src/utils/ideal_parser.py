"""
Parser de la gramática en línea de ideales monomiales.

    ideal := mono ("," mono)*
    mono  := term ("*" term)*
    term  := var ("^" posint)?
    var   := letter (letter | digit | "_")*      (solo ASCII)

Sin anillo explícito las variables se ordenan por nombre con orden natural
(x2 < x10), de modo que parse_ideal(format_ideal(I)) == I cuando todas las
variables de I aparecen en algún generador. Con anillo explícito las
variables desconocidas se rechazan.
"""

from typing import List, Optional, Tuple
import re

from src.models.core_model import Monomial, MonomialIdeal, RingContext
from src.utils.errors import ParseError, UnitIdealError


_IDENT = re.compile(r"[A-Za-z][A-Za-z0-9_]*")
_DIGITS = re.compile(r"[0-9]+")
_CHUNKS = re.compile(r"(\d+)")


class _Scanner:
    def __init__(self, text: str):
        self.text = text
        self.pos = 0

    def skip_spaces(self) -> None:
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self) -> str:
        self.skip_spaces()
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def expect(self, char: str) -> None:
        if self.peek() != char:
            encontrado = self.peek() or "fin de texto"
            raise ParseError(f"Se esperaba '{char}', se encontró '{encontrado}'", self.pos)
        self.pos += 1

    def identifier(self) -> str:
        self.skip_spaces()
        m = _IDENT.match(self.text, self.pos)
        if m is None:
            encontrado = self.text[self.pos] if self.pos < len(self.text) else "fin de texto"
            raise ParseError(f"Se esperaba una variable, se encontró '{encontrado}'", self.pos)
        self.pos = m.end()
        return m.group()

    def natural(self) -> Tuple[int, int]:
        """Entero sin signo y su posición."""
        self.skip_spaces()
        m = _DIGITS.match(self.text, self.pos)
        if m is None:
            raise ParseError("Se esperaba un exponente entero", self.pos)
        self.pos = m.end()
        return int(m.group()), m.start()


def _parse_terms(text: str) -> List[List[Tuple[str, int, int]]]:
    """Lista de monomios, cada uno como [(variable, exponente, posición)]."""
    sc = _Scanner(text)
    if not sc.peek():
        raise ParseError("Lista de generadores vacía", 0)
    monomios = []
    while True:
        terminos = []
        ceros = []
        while True:
            sc.skip_spaces()
            pos = sc.pos
            var = sc.identifier()
            exp = 1
            if sc.peek() == "^":
                sc.pos += 1
                exp, pos_exp = sc.natural()
                if exp == 0:
                    ceros.append(pos_exp)
            terminos.append((var, exp, pos))
            if sc.peek() != "*":
                break
            sc.pos += 1
        # "x1^0" solo es el ideal unidad; un ^0 junto a otros factores es sintaxis inválida
        if ceros and len(ceros) < len(terminos):
            raise ParseError("El exponente debe ser un entero positivo", ceros[0])
        monomios.append(terminos)
        if sc.peek() == "":
            return monomios
        sc.expect(",")


def _natural_key(name: str) -> Tuple:
    return tuple(int(c) if c.isdigit() else c for c in _CHUNKS.split(name))


def parse_ideal(text: str, ring: Optional[RingContext] = None) -> MonomialIdeal:
    """
    Parsea "x1^2, x1*x2, x3^2".

    Args:
        text: Expresión en la gramática en línea
        ring: Anillo explícito (opcional)

    Returns:
        Ideal minimalizado

    Raises:
        ParseError: Sintaxis inválida o variable desconocida
        UnitIdealError: Algún generador es 1 (p. ej. "x1^0")
    """
    monomios = _parse_terms(text)
    if ring is None:
        nombres = sorted({var for terminos in monomios for var, _, _ in terminos}, key=_natural_key)
        ring = RingContext(len(nombres), tuple(nombres))
    gens = []
    for terminos in monomios:
        exps = [0] * ring.n
        for var, exp, pos in terminos:
            if var not in ring.var_names:
                raise ParseError(f"Variable desconocida '{var}'", pos)
            exps[ring.index_of(var)] += exp
        gens.append(Monomial(tuple(exps)))
    if any(g.is_one() for g in gens):
        raise UnitIdealError(f"El ideal ({text}) es el ideal unidad")
    return MonomialIdeal(ring, tuple(gens))


def format_ideal(ideal: MonomialIdeal) -> str:
    """Texto que parse_ideal devuelve como el mismo ideal si las variables del anillo
    están en orden natural y todas aparecen en algún generador."""
    return str(ideal)
