"""Exact polynomial algebra over the rationals.

Rationals are :class:`fractions.Fraction` (always reduced, positive
denominator).  ``UniPoly`` is a dense univariate polynomial, ``BiPoly`` a
sparse bivariate one.  Both are immutable and hashable.
"""

from __future__ import annotations

from fractions import Fraction
from numbers import Rational as _RationalABC
from typing import Iterable, Mapping, Sequence, Tuple, Union

Scalar = Union[int, Fraction]


def as_rational(value) -> Fraction:
    if isinstance(value, Fraction):
        return value
    if isinstance(value, (int, _RationalABC)):
        return Fraction(value)
    if isinstance(value, str):
        return Fraction(value)
    raise TypeError(f"not an exact rational: {value!r}")


def _trim(coeffs: list[Fraction]) -> tuple[Fraction, ...]:
    while coeffs and coeffs[-1] == 0:
        coeffs.pop()
    return tuple(coeffs)


class UniPoly:
    """Dense univariate polynomial; ``coeffs[i]`` is the coefficient of t^i."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable = ()):
        object.__setattr__(self, "coeffs", _trim([as_rational(c) for c in coeffs]))

    def __setattr__(self, name, value):
        raise AttributeError("UniPoly is immutable")

    @classmethod
    def constant(cls, c: Scalar) -> "UniPoly":
        return cls([c])

    @classmethod
    def monomial(cls, degree: int, c: Scalar = 1) -> "UniPoly":
        return cls([0] * degree + [c])

    @classmethod
    def linear(cls, slope: Scalar, intercept: Scalar) -> "UniPoly":
        return cls([intercept, slope])

    @property
    def degree(self) -> int:
        """Degree; -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    @property
    def leading(self) -> Fraction:
        return self.coeffs[-1] if self.coeffs else Fraction(0)

    def is_zero(self) -> bool:
        return not self.coeffs

    def __getitem__(self, i: int) -> Fraction:
        if 0 <= i < len(self.coeffs):
            return self.coeffs[i]
        return Fraction(0)

    def __iter__(self):
        return iter(self.coeffs)

    def __len__(self):
        return len(self.coeffs)

    def __eq__(self, other) -> bool:
        if isinstance(other, UniPoly):
            return self.coeffs == other.coeffs
        if isinstance(other, (int, Fraction)):
            return self == UniPoly([other])
        return NotImplemented

    def __hash__(self):
        return hash(("UniPoly", self.coeffs))

    def __add__(self, other) -> "UniPoly":
        if isinstance(other, (int, Fraction)):
            other = UniPoly([other])
        if not isinstance(other, UniPoly):
            return NotImplemented
        n = max(len(self.coeffs), len(other.coeffs))
        return UniPoly([self[i] + other[i] for i in range(n)])

    __radd__ = __add__

    def __neg__(self) -> "UniPoly":
        return UniPoly([-c for c in self.coeffs])

    def __sub__(self, other) -> "UniPoly":
        if isinstance(other, (int, Fraction)):
            other = UniPoly([other])
        if not isinstance(other, UniPoly):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> "UniPoly":
        return (-self) + other

    def __mul__(self, other) -> "UniPoly":
        if isinstance(other, (int, Fraction)):
            return UniPoly([c * other for c in self.coeffs])
        if not isinstance(other, UniPoly):
            return NotImplemented
        if self.is_zero() or other.is_zero():
            return UniPoly()
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return UniPoly(out)

    __rmul__ = __mul__

    def __pow__(self, e: int) -> "UniPoly":
        if e < 0:
            raise ValueError("negative exponent")
        result = UniPoly([1])
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def __call__(self, x):
        return self.evaluate(x)

    def evaluate(self, x) -> Fraction:
        x = as_rational(x)
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def has_integer_coeffs(self) -> bool:
        return all(c.denominator == 1 for c in self.coeffs)

    def int_coeffs(self) -> tuple[int, ...]:
        if not self.has_integer_coeffs():
            raise ValueError(f"non-integer coefficients in {self}")
        return tuple(int(c) for c in self.coeffs)

    def format(self, var: str = "t") -> str:
        """Render with descending powers; unit coefficients elided except constants."""
        if not self.coeffs:
            return "0"
        parts = []
        for i in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[i]
            if c == 0:
                continue
            sign = "-" if c < 0 else "+"
            mag = -c if c < 0 else c
            if i == 0:
                body = str(mag)
            else:
                power = var if i == 1 else f"{var}^{i}"
                if mag == 1:
                    body = power
                elif mag.denominator == 1:
                    body = f"{mag}{power}"
                else:
                    body = f"({mag}){power}"
            parts.append((sign, body))
        first_sign, first_body = parts[0]
        out = ("-" if first_sign == "-" else "") + first_body
        for sign, body in parts[1:]:
            out += sign + body
        return out

    def __str__(self):
        return self.format()

    def __repr__(self):
        return f"UniPoly({[str(c) for c in self.coeffs]})"


Monomial = Tuple[int, int]


class BiPoly:
    """Sparse polynomial in x and y: a map (i, j) -> coefficient of x^i y^j."""

    __slots__ = ("terms",)

    def __init__(self, terms: Mapping[Monomial, Scalar] | Iterable[tuple[Monomial, Scalar]] = ()):
        acc: dict[Monomial, Fraction] = {}
        items = terms.items() if isinstance(terms, Mapping) else terms
        for (i, j), c in items:
            if i < 0 or j < 0:
                raise ValueError("negative exponent")
            acc[(i, j)] = acc.get((i, j), Fraction(0)) + as_rational(c)
        object.__setattr__(
            self, "terms", {k: v for k, v in sorted(acc.items()) if v != 0}
        )

    def __setattr__(self, name, value):
        raise AttributeError("BiPoly is immutable")

    @classmethod
    def x(cls) -> "BiPoly":
        return cls({(1, 0): 1})

    @classmethod
    def y(cls) -> "BiPoly":
        return cls({(0, 1): 1})

    @classmethod
    def constant(cls, c: Scalar) -> "BiPoly":
        return cls({(0, 0): c})

    def is_zero(self) -> bool:
        return not self.terms

    def coeff(self, i: int, j: int) -> Fraction:
        return self.terms.get((i, j), Fraction(0))

    @property
    def total_degree(self) -> int:
        return max((i + j for i, j in self.terms), default=-1)

    def __eq__(self, other) -> bool:
        if isinstance(other, BiPoly):
            return self.terms == other.terms
        if isinstance(other, (int, Fraction)):
            return self == BiPoly.constant(other)
        return NotImplemented

    def __hash__(self):
        return hash(("BiPoly", tuple(self.terms.items())))

    def __add__(self, other) -> "BiPoly":
        if isinstance(other, (int, Fraction)):
            other = BiPoly.constant(other)
        if not isinstance(other, BiPoly):
            return NotImplemented
        return BiPoly(list(self.terms.items()) + list(other.terms.items()))

    __radd__ = __add__

    def __neg__(self) -> "BiPoly":
        return BiPoly({k: -v for k, v in self.terms.items()})

    def __sub__(self, other) -> "BiPoly":
        if isinstance(other, (int, Fraction)):
            other = BiPoly.constant(other)
        if not isinstance(other, BiPoly):
            return NotImplemented
        return self + (-other)

    def __mul__(self, other) -> "BiPoly":
        if isinstance(other, (int, Fraction)):
            return BiPoly({k: v * other for k, v in self.terms.items()})
        if not isinstance(other, BiPoly):
            return NotImplemented
        out: dict[Monomial, Fraction] = {}
        for (i1, j1), a in self.terms.items():
            for (i2, j2), b in other.terms.items():
                key = (i1 + i2, j1 + j2)
                out[key] = out.get(key, Fraction(0)) + a * b
        return BiPoly(out)

    __rmul__ = __mul__

    def __pow__(self, e: int) -> "BiPoly":
        if e < 0:
            raise ValueError("negative exponent")
        result = BiPoly.constant(1)
        for _ in range(e):
            result = result * self
        return result

    def swap(self) -> "BiPoly":
        """Exchange the roles of x and y."""
        return BiPoly({(j, i): c for (i, j), c in self.terms.items()})

    def evaluate(self, x, y) -> Fraction:
        x, y = as_rational(x), as_rational(y)
        return sum((c * x**i * y**j for (i, j), c in self.terms.items()), Fraction(0))

    def __call__(self, x, y):
        return self.evaluate(x, y)

    def has_integer_coeffs(self) -> bool:
        return all(c.denominator == 1 for c in self.terms.values())

    def format(self) -> str:
        if not self.terms:
            return "0"

        def power(var, e):
            return "" if e == 0 else (var if e == 1 else f"{var}^{e}")

        # descending total degree, then descending x-degree
        keys = sorted(self.terms, key=lambda k: (-(k[0] + k[1]), -k[0]))
        out = ""
        for n, (i, j) in enumerate(keys):
            c = self.terms[(i, j)]
            sign = "-" if c < 0 else "+"
            mag = -c if c < 0 else c
            mono = power("x", i) + ("*" if i and j else "") + power("y", j)
            if not mono:
                body = str(mag)
            elif mag == 1:
                body = mono
            elif mag.denominator == 1:
                body = f"{mag}{mono}"
            else:
                body = f"({mag}){mono}"
            if n == 0:
                out = ("-" if sign == "-" else "") + body
            else:
                out += sign + body
        return out

    def __str__(self):
        return self.format()

    def __repr__(self):
        return f"BiPoly({ {k: str(v) for k, v in self.terms.items()} })"


def evaluate(p: UniPoly, x) -> Fraction:
    return p.evaluate(x)


def evaluate2(p: BiPoly, x, y) -> Fraction:
    return p.evaluate(x, y)


def interpolate(values: Sequence[tuple]) -> UniPoly:
    """Unique polynomial of degree < len(values) through the given points.

    Uses Newton divided differences; raises ``ValueError`` on repeated nodes.
    """
    pts = [(as_rational(x), as_rational(y)) for x, y in values]
    if not pts:
        return UniPoly()
    xs = [p[0] for p in pts]
    if len(set(xs)) != len(xs):
        raise ValueError("degenerate interpolation: repeated node")
    table = [p[1] for p in pts]
    newton = [table[0]]
    for level in range(1, len(pts)):
        table = [
            (table[i + 1] - table[i]) / (xs[i + level] - xs[i])
            for i in range(len(table) - 1)
        ]
        newton.append(table[0])
    # Horner-style expansion of the Newton form
    poly = UniPoly([newton[-1]])
    for k in range(len(newton) - 2, -1, -1):
        poly = poly * UniPoly([-xs[k], 1]) + newton[k]
    return poly


def binomial_poly(top: UniPoly, k: int) -> UniPoly:
    """The polynomial C(top, k) = top (top-1) ... (top-k+1) / k!."""
    if k < 0:
        return UniPoly()
    result = UniPoly([1])
    for i in range(k):
        result = result * (top - i) * Fraction(1, i + 1)
    return result
