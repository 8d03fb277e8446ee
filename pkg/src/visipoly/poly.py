"""Univariate polynomials with exact integer coefficients."""

from __future__ import annotations

from itertools import zip_longest
from math import comb
from typing import Iterable, Sequence


class Polynomial:
    """Immutable polynomial; ``coeffs[i]`` is the coefficient of ``x**i``.

    Coefficients are Python ints, so arithmetic never overflows.  Trailing
    zeros are stripped; the zero polynomial has ``coeffs == (0,)``.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[int] = (0,)):
        cs = [int(c) for c in coeffs]
        while len(cs) > 1 and cs[-1] == 0:
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs) or (0,))

    def __setattr__(self, name, value):
        raise AttributeError("Polynomial is immutable")

    def __reduce__(self):
        return Polynomial, (self.coeffs,)

    @classmethod
    def one(cls) -> Polynomial:
        return cls((1,))

    @classmethod
    def monomial(cls, k: int, c: int = 1) -> Polynomial:
        return cls([0] * k + [c])

    @property
    def degree(self) -> int:
        """Degree; ``-1`` for the zero polynomial."""
        return -1 if self.is_zero() else len(self.coeffs) - 1

    @property
    def leading_coefficient(self) -> int:
        return self.coeffs[-1]

    def is_zero(self) -> bool:
        return self.coeffs == (0,)

    def is_nonnegative(self) -> bool:
        return all(c >= 0 for c in self.coeffs)

    def __getitem__(self, k: int) -> int:
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else 0

    def __eq__(self, other):
        if isinstance(other, Polynomial):
            return self.coeffs == other.coeffs
        if isinstance(other, int):
            return self.coeffs == (other,)
        return NotImplemented

    def __hash__(self):
        return hash(self.coeffs)

    def __add__(self, other: Polynomial | int) -> Polynomial:
        other = _coerce(other)
        return Polynomial(a + b for a, b in zip_longest(self.coeffs, other.coeffs, fillvalue=0))

    __radd__ = __add__

    def __neg__(self) -> Polynomial:
        return Polynomial(-c for c in self.coeffs)

    def __sub__(self, other: Polynomial | int) -> Polynomial:
        return self + -_coerce(other)

    def __rsub__(self, other: int) -> Polynomial:
        return _coerce(other) - self

    def __mul__(self, other: Polynomial | int) -> Polynomial:
        other = _coerce(other)
        if self.is_zero() or other.is_zero():
            return Polynomial()
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return Polynomial(out)

    __rmul__ = __mul__

    def shift(self, k: int) -> Polynomial:
        """Multiply by ``x**k``."""
        if k < 0:
            raise ValueError(f"shift must be nonnegative, got {k}")
        if self.is_zero():
            return self
        return Polynomial((0,) * k + self.coeffs)

    def __call__(self, x):
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def __str__(self) -> str:
        if self.is_zero():
            return "0"
        terms = []
        for k, c in enumerate(self.coeffs):
            if c == 0:
                continue
            if k == 0:
                terms.append(str(c))
                continue
            mono = "x" if k == 1 else f"x^{k}"
            if c == 1:
                body = mono
            elif c == -1:
                body = f"-{mono}"
            else:
                body = f"{c}*{mono}"
            terms.append(body)
        text = terms[0]
        for t in terms[1:]:
            text += f" - {t[1:]}" if t.startswith("-") else f" + {t}"
        return text

    def __repr__(self) -> str:
        return f"Polynomial({list(self.coeffs)})"

    def to_json(self) -> list[str]:
        """Decimal-string coefficients, index = degree."""
        return [str(c) for c in self.coeffs]

    @classmethod
    def from_json(cls, data: Sequence[str]) -> Polynomial:
        return cls(int(c) for c in data)


def _coerce(p: Polynomial | int) -> Polynomial:
    if isinstance(p, Polynomial):
        return p
    if isinstance(p, int):
        return Polynomial((p,))
    raise TypeError(f"cannot combine Polynomial with {type(p).__name__}")


def poly_combine(op: str, a: Polynomial, b: Polynomial | int) -> Polynomial:
    """Apply ``op`` in {"add", "sub", "mul", "shift"}; for shift ``b`` is the exponent."""
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    if op == "shift":
        return a.shift(b)
    raise ValueError(f"unknown polynomial operation {op!r}")


def binomial_power(k: int) -> Polynomial:
    """``(1 + x)**k``."""
    if k < 0:
        raise ValueError(f"exponent must be nonnegative, got {k}")
    return Polynomial(comb(k, i) for i in range(k + 1))
