"""
Series de Hilbert racionales N(t)/(1-t)^e con numerador entero.

La aritmética de polinomios se delega en sympy (dominio ZZ), por lo que
todo es exacto: no hay punto flotante en ninguna parte.
"""

from dataclasses import dataclass
from math import comb
from typing import Dict, List, Sequence, Tuple

import sympy as sp


T = sp.Symbol("t")
_ONE_MINUS_T = sp.Poly(1 - T, T, domain=sp.ZZ)


def to_poly(coeffs: Sequence[int]) -> sp.Poly:
    """Coeficientes c0, c1, … (grado ascendente) a Poly de sympy."""
    if not coeffs:
        return sp.Poly(0, T, domain=sp.ZZ)
    return sp.Poly(list(reversed([int(c) for c in coeffs])), T, domain=sp.ZZ)


def from_poly(poly: sp.Poly) -> Tuple[int, ...]:
    if poly.is_zero:
        return (0,)
    return tuple(int(c) for c in reversed(poly.all_coeffs()))


@dataclass(frozen=True)
class RationalSeries:
    """
    Serie racional N(t)/(1-t)^e en forma canónica.

    Attributes:
        numerator: Coeficientes enteros de N en grado ascendente
        denom_power: Potencia e del denominador
    """

    numerator: Tuple[int, ...]
    denom_power: int

    @classmethod
    def canonical(cls, numerator: Sequence[int], denom_power: int) -> "RationalSeries":
        """
        Canoniza: cancela factores (1-t) del numerador y elimina ceros finales.
        """
        if denom_power < 0:
            raise ValueError(f"Potencia de denominador negativa: {denom_power}")
        poly = to_poly(numerator)
        e = denom_power
        if poly.is_zero:
            return cls((0,), 0)
        while e > 0 and poly.eval(1) == 0:
            poly = poly.exquo(_ONE_MINUS_T)
            e -= 1
        return cls(from_poly(poly), e)

    @classmethod
    def zero(cls) -> "RationalSeries":
        return cls((0,), 0)

    @classmethod
    def monomial(cls, degree: int, denom_power: int = 0) -> "RationalSeries":
        """t^degree / (1-t)^denom_power."""
        return cls.canonical((0,) * degree + (1,), denom_power)

    def numerator_poly(self) -> sp.Poly:
        return to_poly(self.numerator)

    def is_zero(self) -> bool:
        return all(c == 0 for c in self.numerator)

    def lifted_numerator(self, power: int) -> sp.Poly:
        """Numerador llevado al denominador (1-t)^power (power ≥ denom_power)."""
        return self.numerator_poly() * _ONE_MINUS_T ** (power - self.denom_power)

    def __add__(self, other: "RationalSeries") -> "RationalSeries":
        if not isinstance(other, RationalSeries):
            return NotImplemented
        e = max(self.denom_power, other.denom_power)
        return RationalSeries.canonical(from_poly(self.lifted_numerator(e) + other.lifted_numerator(e)), e)

    def __radd__(self, other):
        # permite sum(series) con el 0 inicial
        if other == 0:
            return self
        return self.__add__(other)

    def __mul__(self, other: "RationalSeries") -> "RationalSeries":
        if not isinstance(other, RationalSeries):
            return NotImplemented
        poly = self.numerator_poly() * other.numerator_poly()
        return RationalSeries.canonical(from_poly(poly), self.denom_power + other.denom_power)

    def divide_by_one_minus_t(self, power: int) -> "RationalSeries":
        """Divide la serie por (1-t)^power."""
        return RationalSeries.canonical(self.numerator, self.denom_power + power)

    def coefficients(self, count: int) -> List[int]:
        """
        Primeros `count` coeficientes de la expansión en serie de potencias.

        Usa [t^k] 1/(1-t)^e = C(k+e-1, e-1).
        """
        e = self.denom_power
        out = []
        for k in range(count):
            total = 0
            for j, c in enumerate(self.numerator):
                if c == 0 or j > k:
                    continue
                m = k - j
                total += c * (comb(m + e - 1, e - 1) if e > 0 else int(m == 0))
            out.append(total)
        return out

    def to_json(self) -> Dict[str, object]:
        return {"numerator": list(self.numerator), "denom_power": self.denom_power}

    def __str__(self) -> str:
        terms = []
        for j, c in enumerate(self.numerator):
            if c == 0:
                continue
            mono = "" if j == 0 else ("t" if j == 1 else f"t^{j}")
            mag = abs(c)
            cuerpo = f"{mag}{mono}" if (mag != 1 or not mono) else mono
            signo = "-" if c < 0 else "+"
            terms.append((signo, cuerpo))
        if not terms:
            num = "0"
        else:
            num = ("-" if terms[0][0] == "-" else "") + terms[0][1]
            for signo, cuerpo in terms[1:]:
                num += f" {signo} {cuerpo}"
        if self.denom_power == 0:
            return num
        den = "(1-t)" if self.denom_power == 1 else f"(1-t)^{self.denom_power}"
        return f"({num})/{den}"
