"""Exact sparse Laurent polynomials in one variable ``t``."""
from __future__ import annotations

from fractions import Fraction
from numbers import Rational
from typing import Iterable, Mapping, Union

Coeff = Union[int, Fraction]


def _normalize(c: Coeff) -> Coeff:
    if isinstance(c, Fraction) and c.denominator == 1:
        return c.numerator
    return c


class LaurentPoly:
    """A Laurent polynomial stored as ``{exponent: coefficient}``.

    Coefficients are ints or ``Fraction``; zero coefficients are never stored,
    so equality is equality of the term maps. Instances are immutable.
    """

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping[int, Coeff] | None = None):
        clean = {}
        if terms:
            for e, c in terms.items():
                if not isinstance(c, Rational):
                    raise TypeError(f"coefficient must be exact, got {type(c).__name__}")
                if c:
                    clean[int(e)] = _normalize(c)
        self._terms = clean
        self._hash = None

    @classmethod
    def monomial(cls, exponent: int = 0, coeff: Coeff = 1) -> "LaurentPoly":
        return cls({exponent: coeff})

    @classmethod
    def constant(cls, c: Coeff) -> "LaurentPoly":
        return cls({0: c})

    @property
    def terms(self) -> dict[int, Coeff]:
        return dict(self._terms)

    def items(self):
        return sorted(self._terms.items())

    def exponents(self) -> list[int]:
        return sorted(self._terms)

    def coeff(self, e: int) -> Coeff:
        return self._terms.get(e, 0)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, LaurentPoly):
            return self._terms == other._terms
        if isinstance(other, Rational):
            return self._terms == ({0: other} if other else {})
        return NotImplemented

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    def __repr__(self) -> str:
        return f"LaurentPoly({self})"

    def __str__(self) -> str:
        return render(self)

    # ring operations

    def __add__(self, other: "LaurentPoly | Coeff") -> "LaurentPoly":
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        out = dict(self._terms)
        for e, c in other._terms.items():
            out[e] = out.get(e, 0) + c
        return LaurentPoly(out)

    __radd__ = __add__

    def __neg__(self) -> "LaurentPoly":
        return LaurentPoly({e: -c for e, c in self._terms.items()})

    def __sub__(self, other: "LaurentPoly | Coeff") -> "LaurentPoly":
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other: "LaurentPoly | Coeff") -> "LaurentPoly":
        return (-self) + other

    def __mul__(self, other: "LaurentPoly | Coeff") -> "LaurentPoly":
        if isinstance(other, Rational):
            return self.scale(other)
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        out: dict[int, Coeff] = {}
        for e1, c1 in self._terms.items():
            for e2, c2 in other._terms.items():
                out[e1 + e2] = out.get(e1 + e2, 0) + c1 * c2
        return LaurentPoly(out)

    __rmul__ = __mul__

    def scale(self, c: Coeff) -> "LaurentPoly":
        if not c:
            return ZERO
        return LaurentPoly({e: v * c for e, v in self._terms.items()})

    def __pow__(self, n: int) -> "LaurentPoly":
        if n < 0:
            if len(self._terms) == 1:
                (e, c), = self._terms.items()
                return LaurentPoly({e * n: Fraction(1) / Fraction(c) ** (-n)})
            raise ValueError("only monomials can be inverted")
        out, base = ONE, self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def shift(self, n: int) -> "LaurentPoly":
        """Multiply by ``t**n``."""
        return LaurentPoly({e + n: c for e, c in self._terms.items()})

    # substitutions

    def bar(self) -> "LaurentPoly":
        """Substitute ``t -> 1/t``."""
        return LaurentPoly({-e: c for e, c in self._terms.items()})

    def substitute_power(self, n: int) -> "LaurentPoly":
        """Substitute ``t -> t**n``."""
        return LaurentPoly({e * n: c for e, c in self._terms.items()})

    def substitute_t_squared(self) -> "LaurentPoly":
        return self.substitute_power(2)

    def eval_at_one(self) -> Coeff:
        return _normalize(sum(self._terms.values(), 0))

    def __call__(self, x: Coeff) -> Coeff:
        x = Fraction(x)
        return _normalize(sum((c * x**e for e, c in self._terms.items()), Fraction(0)))

    # integrality

    def is_integral(self) -> bool:
        return all(isinstance(c, int) for c in self._terms.values())

    def to_integral(self) -> "LaurentPoly":
        """Return self, asserting every coefficient is an integer."""
        if not self.is_integral():
            raise ArithmeticError(f"expected integer coefficients, got {self}")
        return self

    def min_exponent(self) -> int | None:
        return min(self._terms) if self._terms else None

    def max_exponent(self) -> int | None:
        return max(self._terms) if self._terms else None

    # serialization

    def to_json(self) -> dict[str, str]:
        return {str(e): str(c) for e, c in sorted(self._terms.items())}

    @classmethod
    def from_json(cls, obj: Mapping[str, str]) -> "LaurentPoly":
        return cls({int(e): _normalize(Fraction(c)) for e, c in obj.items()})


def _coerce(x) -> LaurentPoly:
    if isinstance(x, LaurentPoly):
        return x
    if isinstance(x, Rational):
        return LaurentPoly.constant(x)
    return NotImplemented


ZERO = LaurentPoly()
ONE = LaurentPoly.constant(1)
T = LaurentPoly.monomial(1)


def render(f: LaurentPoly) -> str:
    """Canonical text: ascending exponents, ``c*t^e``, negative ``e`` parenthesized.

    >>> render(LaurentPoly({0: 2, 1: 5, 2: 7, -1: -1}))
    '-t^(-1) + 2 + 5*t + 7*t^2'
    """
    if not f:
        return "0"
    out = []
    for i, (e, c) in enumerate(f.items()):
        neg = c < 0
        mag = -c if neg else c
        if e == 0:
            body = str(mag)
        else:
            power = "t" if e == 1 else (f"t^{e}" if e > 0 else f"t^({e})")
            body = power if mag == 1 else f"{mag}*{power}"
        if i == 0:
            out.append(f"-{body}" if neg else body)
        else:
            out.append(f"- {body}" if neg else f"+ {body}")
    return " ".join(out)


def poly(coeffs: Iterable[Coeff], low: int = 0) -> LaurentPoly:
    """Dense constructor: ``poly([2, 5, 7])`` is ``2 + 5t + 7t^2``."""
    return LaurentPoly({low + i: c for i, c in enumerate(coeffs)})


def geometric(step: int, count: int) -> LaurentPoly:
    """``1 + t^step + ... + t^((count-1)*step)``."""
    return LaurentPoly({i * step: 1 for i in range(count)})


def balanced_geometric(step: int, count: int) -> LaurentPoly:
    """``t^((1-count)*step) + t^((3-count)*step) + ... + t^((count-1)*step)``."""
    return LaurentPoly({(2 * i + 1 - count) * step: 1 for i in range(count)})


def gaussian_binomial(x: int, y: int) -> LaurentPoly:
    """One-sided Gaussian binomial ``[x choose y]`` in ``t``, constant term 1."""
    if x < 0 or y < 0:
        raise ValueError("arguments must be nonnegative")
    if y > x:
        raise ValueError(f"need y <= x, got ({x}, {y})")
    # Pascal: [x, y] = [x-1, y-1] + t^y [x-1, y]
    row = [ONE]
    for n in range(1, x + 1):
        new = [ONE] * (n + 1)
        for j in range(1, n):
            new[j] = row[j - 1] + row[j].shift(j)
        row = new
    return row[y]


def quantum_binomial(x: int, y: int) -> LaurentPoly:
    """Bar-invariant quantum binomial, e.g. ``(4, 2) -> t^-4 + t^-2 + 2 + t^2 + t^4``."""
    return gaussian_binomial(x, y).substitute_t_squared().shift(-y * (x - y))


def is_symmetric_unimodal(f: LaurentPoly) -> bool:
    """Bar-invariant, one parity class, coefficients weakly increasing toward the center.

    The zero polynomial counts as symmetric unimodal.
    """
    if not f:
        return True
    if f != f.bar():
        return False
    top = f.max_exponent()
    if any((e - top) % 2 for e in f.exponents()):
        return False
    coeffs = [f.coeff(e) for e in range(-top, 1, 2)]
    return all(a <= b for a, b in zip(coeffs, coeffs[1:]))
