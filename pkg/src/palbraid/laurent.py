"""Exact integer Laurent polynomials in one variable.

Exponents are :class:`fractions.Fraction` so that Jones polynomials of links
with an even number of components (half-integer powers of t) fit in the same
type.  Coefficients are Python ints; nothing here ever touches floats.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Mapping, Union

from .errors import NonExactDivision

__all__ = ["LaurentPoly"]

Exp = Union[int, Fraction]


class LaurentPoly:
    __slots__ = ("_terms", "var")

    def __init__(self, terms: Mapping[Exp, int] | Iterable[tuple[Exp, int]] = (), var: str = "t"):
        items = terms.items() if isinstance(terms, Mapping) else terms
        acc: dict[Fraction, int] = {}
        for e, c in items:
            e = Fraction(e)
            acc[e] = acc.get(e, 0) + int(c)
        self._terms = {e: c for e, c in acc.items() if c}
        self.var = var

    @classmethod
    def constant(cls, c: int, var: str = "t") -> LaurentPoly:
        return cls({0: c}, var)

    @classmethod
    def monomial(cls, e: Exp, c: int = 1, var: str = "t") -> LaurentPoly:
        return cls({e: c}, var)

    @property
    def terms(self) -> dict[Fraction, int]:
        return dict(self._terms)

    def items(self):
        return sorted(self._terms.items())

    def is_zero(self) -> bool:
        return not self._terms

    def min_exp(self) -> Fraction:
        return min(self._terms)

    def max_exp(self) -> Fraction:
        return max(self._terms)

    def coeff(self, e: Exp) -> int:
        return self._terms.get(Fraction(e), 0)

    def has_integer_exponents(self) -> bool:
        return all(e.denominator == 1 for e in self._terms)

    # arithmetic -------------------------------------------------------

    def _coerce(self, other) -> LaurentPoly:
        if isinstance(other, LaurentPoly):
            return other
        if isinstance(other, int):
            return LaurentPoly.constant(other, self.var)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out = dict(self._terms)
        for e, c in other._terms.items():
            out[e] = out.get(e, 0) + c
        return LaurentPoly(out, self.var)

    __radd__ = __add__

    def __neg__(self):
        return LaurentPoly({e: -c for e, c in self._terms.items()}, self.var)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out: dict[Fraction, int] = {}
        for e1, c1 in self._terms.items():
            for e2, c2 in other._terms.items():
                e = e1 + e2
                out[e] = out.get(e, 0) + c1 * c2
        return LaurentPoly(out, self.var)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            if len(self._terms) != 1:
                raise ValueError("only monomials have Laurent inverses")
            (e, c), = self._terms.items()
            if abs(c) != 1:
                raise ValueError("monomial with non-unit coefficient is not invertible")
            return LaurentPoly({e * k: 1 if k % 2 == 0 else c}, self.var)
        result = LaurentPoly.constant(1, self.var)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __eq__(self, other):
        if isinstance(other, int):
            other = LaurentPoly.constant(other)
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self):
        return hash(frozenset(self._terms.items()))

    def __bool__(self):
        return bool(self._terms)

    # transformations --------------------------------------------------

    def substitute_power(self, r: Exp, var: str | None = None) -> LaurentPoly:
        """Replace the variable v by v**r (e.g. r = -1 mirrors a Jones polynomial)."""
        r = Fraction(r)
        return LaurentPoly({e * r: c for e, c in self._terms.items()}, var or self.var)

    def shift(self, k: Exp) -> LaurentPoly:
        k = Fraction(k)
        return LaurentPoly({e + k: c for e, c in self._terms.items()}, self.var)

    def at_one(self) -> int:
        return sum(self._terms.values())

    def divmod(self, divisor: LaurentPoly) -> tuple[LaurentPoly, LaurentPoly]:
        """Long division from the top degree; integer exponents only.

        Raises :class:`NonExactDivision` if a leading coefficient does not divide.
        """
        if divisor.is_zero():
            raise ZeroDivisionError("division by the zero polynomial")
        if not (self.has_integer_exponents() and divisor.has_integer_exponents()):
            raise ValueError("division needs integer exponents")
        rem = dict(self._terms)
        quot: dict[Fraction, int] = {}
        d_top = divisor.max_exp()
        d_lead = divisor._terms[d_top]
        d_span = d_top - divisor.min_exp()
        while rem:
            top = max(rem)
            if top - min(rem) < d_span:
                break
            c = rem[top]
            if c % d_lead:
                raise NonExactDivision(f"{c} is not divisible by {d_lead}")
            q = c // d_lead
            shift = top - d_top
            quot[shift] = q
            for e, dc in divisor._terms.items():
                k = e + shift
                v = rem.get(k, 0) - q * dc
                if v:
                    rem[k] = v
                else:
                    rem.pop(k, None)
        return LaurentPoly(quot, self.var), LaurentPoly(rem, self.var)

    def exact_div(self, divisor: LaurentPoly) -> LaurentPoly:
        if self.is_zero():
            return LaurentPoly((), self.var)
        q, r = self.divmod(divisor)
        if not r.is_zero():
            raise NonExactDivision(f"({self}) / ({divisor}) leaves remainder {r}")
        return q

    def __floordiv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self.exact_div(other)

    # printing -----------------------------------------------------------

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        parts = []
        for i, (e, c) in enumerate(self.items()):
            sign = "-" if c < 0 else "+"
            mag = abs(c)
            if e == 0:
                body = str(mag)
            else:
                power = self.var if e == 1 else f"{self.var}^{_fmt_exp(e)}"
                body = power if mag == 1 else f"{mag}*{power}"
            if i == 0:
                parts.append(body if sign == "+" else f"-{body}")
            else:
                parts.append(f" {sign} {body}")
        return "".join(parts)

    def __repr__(self) -> str:
        return f"LaurentPoly({str(self)!r}, var={self.var!r})"


def _fmt_exp(e: Fraction) -> str:
    if e.denominator == 1:
        return str(e.numerator)
    return f"{e.numerator}/{e.denominator}"
