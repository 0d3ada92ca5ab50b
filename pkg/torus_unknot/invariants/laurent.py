"""
Exact single variable Laurent polynomials with integer coefficients and
rational exponents (the Jones polynomial needs half-integer powers of t).
"""
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, Iterable, Tuple, Union

import sympy as sp


__all__ = [
    'LaurentPolynomial',
]

Exponent = Union[int, Fraction]


def _exponent(value) -> Fraction:
    return Fraction(value)


@dataclass(frozen=True, eq=False)
class LaurentPolynomial:
    """
    Sum of coeff * variable^exponent, stored as sorted (exponent, coeff)
    pairs without zero coefficients.

    >>> t = LaurentPolynomial.monomial(1, 1)
    >>> print(1 - t + t ** 2)
    1 - t + t^2
    >>> print((t - 1) * (t + 1))
    -1 + t^2
    >>> LaurentPolynomial.from_dict({0: 1, 1: 0}) == 1
    True
    """
    terms: Tuple[Tuple[Fraction, int], ...] = ()
    variable: str = 't'

    def __post_init__(self):
        merged: Dict[Fraction, int] = {}
        for exponent, coeff in self.terms:
            exponent = _exponent(exponent)
            if int(coeff) != coeff:
                raise ValueError(f'Coefficients must be integers, not {coeff}')
            merged[exponent] = merged.get(exponent, 0) + int(coeff)
        object.__setattr__(self, 'terms', tuple(sorted(
            (e, c) for e, c in merged.items() if c != 0
        )))

    @classmethod
    def from_dict(cls, mapping: Dict[Exponent, int], variable: str = 't'):
        return cls(tuple(mapping.items()), variable)

    @classmethod
    def constant(cls, value: int, variable: str = 't'):
        return cls(((0, value),), variable)

    @classmethod
    def monomial(cls, coeff: int, exponent: Exponent, variable: str = 't'):
        return cls(((exponent, coeff),), variable)

    @property
    def coefficients(self) -> Dict[Fraction, int]:
        return dict(self.terms)

    def is_zero(self) -> bool:
        return len(self.terms) == 0

    @property
    def min_exponent(self) -> Fraction:
        assert self.terms, 'The zero polynomial has no exponents'
        return self.terms[0][0]

    @property
    def max_exponent(self) -> Fraction:
        assert self.terms, 'The zero polynomial has no exponents'
        return self.terms[-1][0]

    def _coerce(self, other) -> 'LaurentPolynomial':
        if isinstance(other, LaurentPolynomial):
            if other.variable != self.variable and not (
                    other.is_constant() or self.is_constant()):
                raise ValueError(
                    f'Cannot combine polynomials in {self.variable} and '
                    f'{other.variable}'
                )
            return other
        if isinstance(other, int):
            return LaurentPolynomial.constant(other, self.variable)
        return NotImplemented

    def is_constant(self) -> bool:
        return all(e == 0 for e, _ in self.terms)

    def _variable_with(self, other):
        if self.is_constant():
            return other.variable
        return self.variable

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return LaurentPolynomial(
            self.terms + other.terms, self._variable_with(other))

    __radd__ = __add__

    def __neg__(self):
        return LaurentPolynomial(
            tuple((e, -c) for e, c in self.terms), self.variable)

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
        return LaurentPolynomial(
            tuple(
                (e1 + e2, c1 * c2)
                for e1, c1 in self.terms
                for e2, c2 in other.terms
            ),
            self._variable_with(other),
        )

    __rmul__ = __mul__

    def __pow__(self, power: int):
        if power < 0:
            if len(self.terms) != 1 or abs(self.terms[0][1]) != 1:
                raise ValueError(
                    f'Only unit monomials have inverses, not {self}')
            (e, c), = self.terms
            return LaurentPolynomial(((e * power, c ** -power),), self.variable)
        result = LaurentPolynomial.constant(1, self.variable)
        base = self
        while power:
            if power & 1:
                result = result * base
            base = base * base
            power >>= 1
        return result

    def __eq__(self, other):
        if isinstance(other, int):
            other = LaurentPolynomial.constant(other, self.variable)
        if not isinstance(other, LaurentPolynomial):
            return NotImplemented
        if self.terms != other.terms:
            return False
        return self.is_constant() or self.variable == other.variable

    def __hash__(self):
        if self.is_constant():
            return hash(self.terms)
        return hash((self.terms, self.variable))

    def shift(self, exponent: Exponent) -> 'LaurentPolynomial':
        """Multiplication by variable^exponent."""
        exponent = _exponent(exponent)
        return LaurentPolynomial(
            tuple((e + exponent, c) for e, c in self.terms), self.variable)

    def scale_exponents(self, factor, variable: str = None):
        """Substitutes variable -> new_variable^factor."""
        factor = _exponent(factor)
        return LaurentPolynomial(
            tuple((e * factor, c) for e, c in self.terms),
            variable or self.variable,
        )

    def substitute_inverse(self) -> 'LaurentPolynomial':
        return self.scale_exponents(-1)

    def normalized(self) -> 'LaurentPolynomial':
        """
        Shifted to lowest exponent 0 and signed so that the lowest
        coefficient is positive. The zero polynomial stays zero.

        >>> t = LaurentPolynomial.monomial(1, 1)
        >>> print((-t ** -1 + 1 - t).normalized())
        1 - t + t^2
        """
        if self.is_zero():
            return self
        result = self.shift(-self.min_exponent)
        if result.terms[0][1] < 0:
            result = -result
        return result

    def to_sympy(self, symbol: sp.Symbol = None) -> sp.Expr:
        if symbol is None:
            symbol = sp.Symbol(self.variable)
        return sp.Add(*[
            sp.Integer(c) * symbol ** sp.Rational(e.numerator, e.denominator)
            for e, c in self.terms
        ])

    @classmethod
    def from_sympy(cls, expr, symbol: sp.Symbol = None, variable: str = None):
        if symbol is None:
            free = sp.sympify(expr).free_symbols
            assert len(free) <= 1, ('Expected a single variable', free)
            symbol = free.pop() if free else sp.Symbol(variable or 't')
        terms = []
        for monomial, coeff in sp.expand(expr).as_coefficients_dict().items():
            if monomial == 1:
                exponent = sp.Integer(0)
            else:
                base, exponent = monomial.as_base_exp()
                assert base == symbol, ('Not a monomial in', symbol, monomial)
            assert coeff.is_integer, ('Non integer coefficient', coeff, expr)
            terms.append((Fraction(int(exponent.p), int(exponent.q)), int(coeff)))
        return cls(tuple(terms), variable or symbol.name)

    def to_json(self):
        return [
            [int(e) if e.denominator == 1 else float(e), c]
            for e, c in self.terms
        ]

    @classmethod
    def from_json(cls, pairs: Iterable, variable: str = 't'):
        return cls(
            tuple((Fraction(e).limit_denominator(4), c) for e, c in pairs),
            variable,
        )

    def _format_power(self, exponent: Fraction) -> str:
        if exponent == 0:
            return ''
        if exponent == 1:
            return self.variable
        if exponent.denominator == 1:
            return f'{self.variable}^{exponent.numerator}'
        return f'{self.variable}^({exponent})'

    def __str__(self):
        if self.is_zero():
            return '0'
        parts = []
        for e, c in self.terms:
            power = self._format_power(e)
            magnitude = abs(c)
            if power and magnitude == 1:
                text = power
            elif power:
                text = f'{magnitude}*{power}'
            else:
                text = str(magnitude)
            if not parts:
                parts.append(f'-{text}' if c < 0 else text)
            else:
                parts.append(f'- {text}' if c < 0 else f'+ {text}')
        return ' '.join(parts)

    def __repr__(self):
        return f'LaurentPolynomial({self})'
