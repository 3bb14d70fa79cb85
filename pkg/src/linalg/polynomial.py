"""
Integer polynomials with coefficients in ascending degree.
"""
from dataclasses import dataclass
from typing import Iterable, Sequence, Tuple


def _normalize(coefficients: Iterable[int]) -> Tuple[int, ...]:
    """Strip trailing zero coefficients."""
    coeffs = list(coefficients)
    while coeffs and coeffs[-1] == 0:
        coeffs.pop()
    return tuple(coeffs)


@dataclass(frozen=True)
class IntPolynomial:
    """
    Polynomial with arbitrary-precision integer coefficients.

    Attributes:
        coefficients: Ascending degree; empty for the zero polynomial
    """
    coefficients: Tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, 'coefficients', _normalize(int(c) for c in self.coefficients))

    @classmethod
    def constant(cls, value: int) -> 'IntPolynomial':
        return cls((value,))

    @classmethod
    def monomial(cls, degree: int, coefficient: int = 1) -> 'IntPolynomial':
        return cls((0,) * degree + (coefficient,))

    @classmethod
    def linear_factor(cls, root: int) -> 'IntPolynomial':
        """The polynomial t - root."""
        return cls((-root, 1))

    @classmethod
    def from_roots(cls, roots: Sequence[int], leading: int = 1) -> 'IntPolynomial':
        """leading * prod (t - root)."""
        result = cls.constant(leading)
        for root in roots:
            result = result * cls.linear_factor(root)
        return result

    @property
    def degree(self) -> int:
        """Degree; -1 for the zero polynomial."""
        return len(self.coefficients) - 1

    @property
    def leading_coefficient(self) -> int:
        return self.coefficients[-1] if self.coefficients else 0

    def is_zero(self) -> bool:
        return not self.coefficients

    def __add__(self, other: 'IntPolynomial') -> 'IntPolynomial':
        n = max(len(self.coefficients), len(other.coefficients))
        a = self.coefficients + (0,) * (n - len(self.coefficients))
        b = other.coefficients + (0,) * (n - len(other.coefficients))
        return IntPolynomial(tuple(x + y for x, y in zip(a, b)))

    def __neg__(self) -> 'IntPolynomial':
        return IntPolynomial(tuple(-c for c in self.coefficients))

    def __sub__(self, other: 'IntPolynomial') -> 'IntPolynomial':
        return self + (-other)

    def __mul__(self, other: 'IntPolynomial') -> 'IntPolynomial':
        if self.is_zero() or other.is_zero():
            return IntPolynomial(())
        product = [0] * (len(self.coefficients) + len(other.coefficients) - 1)
        for i, a in enumerate(self.coefficients):
            if a:
                for j, b in enumerate(other.coefficients):
                    product[i + j] += a * b
        return IntPolynomial(tuple(product))

    def __pow__(self, exponent: int) -> 'IntPolynomial':
        if exponent < 0:
            raise ValueError("negative exponent")
        result = IntPolynomial.constant(1)
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            base = base * base
            exponent >>= 1
        return result

    def __call__(self, t: int) -> int:
        """Evaluate at an integer point by Horner's rule."""
        value = 0
        for c in reversed(self.coefficients):
            value = value * t + c
        return value

    def __str__(self) -> str:
        if self.is_zero():
            return "0"
        terms = []
        for degree in range(self.degree, -1, -1):
            c = self.coefficients[degree]
            if not c:
                continue
            magnitude = abs(c)
            if degree == 0:
                body = str(magnitude)
            else:
                power = "t" if degree == 1 else f"t^{degree}"
                body = power if magnitude == 1 else f"{magnitude}*{power}"
            sign = "-" if c < 0 else "+"
            terms.append((sign, body))
        first_sign, first_body = terms[0]
        text = ("-" if first_sign == "-" else "") + first_body
        for sign, body in terms[1:]:
            text += f" {sign} {body}"
        return text

    def to_list(self) -> list:
        """Coefficient list, ascending degree (the JSON emission form)."""
        return list(self.coefficients)
