"""Dense univariate polynomials in the spectral parameter with exact coefficients."""
from __future__ import annotations

import re
from fractions import Fraction
from typing import Iterable

from .transform import as_rational

_SUPERSCRIPTS = str.maketrans("⁰¹²³⁴⁵⁶⁷⁸⁹", "0123456789")
_TO_SUPERSCRIPT = str.maketrans("0123456789", "⁰¹²³⁴⁵⁶⁷⁸⁹")
MINUS = "−"


class LambdaPoly:
    """``coeffs[i]`` multiplies lambda**i.  Trailing zeros are stripped."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable = ()):
        cs = [as_rational(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs: tuple[Fraction, ...] = tuple(cs)

    @classmethod
    def monomial(cls, power: int, coeff=1) -> "LambdaPoly":
        return cls([0] * power + [coeff])

    @property
    def degree(self) -> int:
        """Degree, with -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def __eq__(self, other):
        if isinstance(other, LambdaPoly):
            return self.coeffs == other.coeffs
        if isinstance(other, (int, Fraction)):
            return self.coeffs == LambdaPoly([other]).coeffs
        return NotImplemented

    def __hash__(self):
        return hash(self.coeffs)

    def __repr__(self):
        return f"LambdaPoly({[str(c) for c in self.coeffs]})"

    def __add__(self, other):
        other = _coerce(other)
        n = max(len(self.coeffs), len(other.coeffs))
        a = self.coeffs + (Fraction(0),) * (n - len(self.coeffs))
        b = other.coeffs + (Fraction(0),) * (n - len(other.coeffs))
        return LambdaPoly(x + y for x, y in zip(a, b))

    __radd__ = __add__

    def __neg__(self):
        return LambdaPoly(-c for c in self.coeffs)

    def __sub__(self, other):
        return self + (-_coerce(other))

    def __rsub__(self, other):
        return _coerce(other) - self

    def __mul__(self, other):
        other = _coerce(other)
        if self.is_zero() or other.is_zero():
            return LambdaPoly()
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return LambdaPoly(out)

    __rmul__ = __mul__

    def __truediv__(self, scalar):
        if isinstance(scalar, LambdaPoly):
            return NotImplemented
        c = as_rational(scalar)
        return LambdaPoly(x / c for x in self.coeffs)

    def __call__(self, lam):
        """Horner evaluation; exact for rational input, float for float input."""
        if isinstance(lam, float):
            cs = [float(c) for c in self.coeffs]
            zero = 0.0
        else:
            cs = self.coeffs
            zero = Fraction(0)
        acc = zero
        for c in reversed(cs):
            acc = acc * lam + c
        return acc

    def to_floats(self) -> list[float]:
        return [float(c) for c in self.coeffs]

    def format(self, var: str = "λ", ascii: bool = False) -> str:
        """Render as e.g. ``−1 − 1/6·λ + 11/120·λ²``.

        With ``ascii=True`` the output uses ``-``, ``*`` and ``^``.
        """
        if self.is_zero():
            return "0"
        minus, times = ("-", "*") if ascii else (MINUS, "·")
        parts = []
        for i, c in enumerate(self.coeffs):
            if c == 0:
                continue
            mag = abs(c)
            if i == 0:
                term = str(mag)
            else:
                power = var if i == 1 else (f"{var}^{i}" if ascii else var + str(i).translate(_TO_SUPERSCRIPT))
                term = power if mag == 1 else f"{mag}{times}{power}"
            if not parts:
                parts.append(f"{minus}{term}" if c < 0 else term)
            else:
                parts.append(f" {minus} {term}" if c < 0 else f" + {term}")
        return "".join(parts)

    def __str__(self):
        return self.format()

    @classmethod
    def parse(cls, text: str, var: str = "λ") -> "LambdaPoly":
        """Inverse of :meth:`format`; accepts both the Unicode and ASCII forms."""
        s = text.replace(MINUS, "-").replace("·", "*").translate(_SUPERSCRIPTS)
        s = re.sub(r"\s+", "", s)
        if s == "0":
            return cls()
        names = {var, "λ", "lambda", "x"}
        terms = re.findall(r"[+-]?[^+-]+", s)
        if "".join(terms) != s or not terms:
            raise ValueError(f"cannot parse polynomial {text!r}")
        coeffs: dict[int, Fraction] = {}
        for term in terms:
            sign = -1 if term.startswith("-") else 1
            body = term.lstrip("+-")
            m = re.fullmatch(r"(?:([0-9/]+)\*?)?([^\^0-9/*]+)?(?:\^?([0-9]+))?", body)
            if not m:
                raise ValueError(f"cannot parse term {term!r}")
            num, name, power = m.groups()
            if name is None:
                if power is not None and num is None:
                    num, power = power, None
                if num is None or power is not None:
                    raise ValueError(f"cannot parse term {term!r}")
                k = 0
            else:
                if name not in names:
                    raise ValueError(f"unknown variable {name!r} in {text!r}")
                k = int(power) if power else 1
            c = Fraction(num) if num else Fraction(1)
            coeffs[k] = coeffs.get(k, Fraction(0)) + sign * c
        top = max(coeffs)
        return cls(coeffs.get(i, 0) for i in range(top + 1))


def _coerce(x) -> LambdaPoly:
    return x if isinstance(x, LambdaPoly) else LambdaPoly([x])
