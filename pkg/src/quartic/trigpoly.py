"""Exact algebra of finite cosine series with amplitude-polynomial coefficients.

The perturbation engine manipulates objects of the form

    sum_n c_n(A) * cos(n*T)

where each coefficient ``c_n`` is a polynomial in the oscillation amplitude
``A`` with exact rational coefficients.  Everything here is ``Fraction``
arithmetic: resonance cancellation has to be exact, not approximate, for the
frequency corrections to come out as certified rationals.  Floats only appear
when :meth:`TrigSeries.evaluate` substitutes numbers.

Only cosine harmonics are represented.  The oscillator equation contains x,
x**3 and the second derivative, all of which map even series to even series,
and the initial data (maximum displacement, zero velocity) are even, so no
sine channel can ever be excited.
"""

from __future__ import annotations

import math
from fractions import Fraction

from .errors import ResidualSecularity

__all__ = ["AmpPoly", "TrigSeries", "solve_particular"]


def _as_fraction(value) -> Fraction:
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    raise TypeError(f"expected an exact rational, got {type(value).__name__}")


class AmpPoly:
    """Polynomial in the amplitude A with exact rational coefficients.

    Stored sparsely as ``{power: Fraction}`` with no zero entries, so equal
    polynomials always have identical representations.
    """

    __slots__ = ("_coeffs",)

    def __init__(self, coeffs=None):
        data = {}
        if coeffs:
            for power, value in coeffs.items():
                power = int(power)
                if power < 0:
                    raise ValueError("amplitude powers must be nonnegative")
                q = _as_fraction(value)
                if q:
                    data[power] = q
        self._coeffs = data

    @classmethod
    def zero(cls) -> "AmpPoly":
        return cls()

    @classmethod
    def term(cls, value, power: int = 0) -> "AmpPoly":
        """Single monomial ``value * A**power`` (exact rationals only)."""
        return cls({power: _as_fraction(value)})

    @property
    def is_zero(self) -> bool:
        return not self._coeffs

    @property
    def degree(self) -> int:
        """Highest amplitude power present; -1 for the zero polynomial."""
        return max(self._coeffs) if self._coeffs else -1

    def coefficient(self, power: int) -> Fraction:
        return self._coeffs.get(power, Fraction(0))

    def items(self):
        """Pairs ``(power, coefficient)`` in increasing power order."""
        return sorted(self._coeffs.items())

    def __add__(self, other: "AmpPoly") -> "AmpPoly":
        data = dict(self._coeffs)
        for power, q in other._coeffs.items():
            data[power] = data.get(power, Fraction(0)) + q
        return AmpPoly(data)

    def __neg__(self) -> "AmpPoly":
        return AmpPoly({p: -q for p, q in self._coeffs.items()})

    def __sub__(self, other: "AmpPoly") -> "AmpPoly":
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, AmpPoly):
            data = {}
            for p1, q1 in self._coeffs.items():
                for p2, q2 in other._coeffs.items():
                    p = p1 + p2
                    data[p] = data.get(p, Fraction(0)) + q1 * q2
            return AmpPoly(data)
        if isinstance(other, (int, Fraction)):
            return AmpPoly({p: c * other for p, c in self._coeffs.items()})
        return NotImplemented

    __rmul__ = __mul__

    def __truediv__(self, other) -> "AmpPoly":
        q = _as_fraction(other)
        return AmpPoly({p: c / q for p, c in self._coeffs.items()})

    def shift_down(self, powers: int) -> "AmpPoly":
        """Divide by ``A**powers``; every stored power must allow it."""
        if any(p < powers for p in self._coeffs):
            raise ValueError(f"polynomial is not divisible by A**{powers}")
        return AmpPoly({p - powers: c for p, c in self._coeffs.items()})

    def evaluate(self, amplitude: float) -> float:
        return math.fsum(float(c) * amplitude**p for p, c in self.items())

    def evaluate_exact(self, amplitude: Fraction) -> Fraction:
        amplitude = _as_fraction(amplitude)
        total = Fraction(0)
        for p, c in self._coeffs.items():
            total += c * amplitude**p
        return total

    def __eq__(self, other) -> bool:
        if not isinstance(other, AmpPoly):
            return NotImplemented
        return self._coeffs == other._coeffs

    def __hash__(self):
        return hash(frozenset(self._coeffs.items()))

    def __str__(self) -> str:
        if not self._coeffs:
            return "0"
        parts = []
        for power, coeff in self.items():
            if power == 0:
                text = str(coeff)
            else:
                var = "A" if power == 1 else f"A^{power}"
                if coeff == 1:
                    text = var
                elif coeff == -1:
                    text = f"-{var}"
                else:
                    text = f"{coeff}*{var}"
            parts.append(text)
        out = parts[0]
        for text in parts[1:]:
            out += f" - {text[1:]}" if text.startswith("-") else f" + {text}"
        return out

    def __repr__(self) -> str:
        return f"AmpPoly({dict(self.items())!r})"


class TrigSeries:
    """Finite cosine series ``sum_n c_n(A) cos(n*T)`` with AmpPoly coefficients.

    Harmonic indices are nonnegative integers; n = 0 is the constant term.
    Instances are canonical (no zero coefficient polynomials) and treated as
    immutable values.
    """

    __slots__ = ("_terms",)

    def __init__(self, terms=None):
        data = {}
        if terms:
            for harmonic, poly in terms.items():
                harmonic = int(harmonic)
                if harmonic < 0:
                    raise ValueError("harmonic indices must be nonnegative")
                if not isinstance(poly, AmpPoly):
                    poly = AmpPoly.term(poly)
                if not poly.is_zero:
                    data[harmonic] = poly
        self._terms = data

    @classmethod
    def zero(cls) -> "TrigSeries":
        return cls()

    @classmethod
    def cosine(cls, harmonic: int = 1, coeff=1) -> "TrigSeries":
        """Series ``coeff * cos(harmonic*T)``; coeff may be AmpPoly or rational."""
        if not isinstance(coeff, AmpPoly):
            coeff = AmpPoly.term(coeff)
        return cls({harmonic: coeff})

    @property
    def is_zero(self) -> bool:
        return not self._terms

    def harmonics(self):
        return tuple(sorted(self._terms))

    @property
    def max_harmonic(self) -> int:
        return max(self._terms) if self._terms else 0

    def coefficient(self, harmonic: int) -> AmpPoly:
        return self._terms.get(harmonic, AmpPoly.zero())

    def __add__(self, other: "TrigSeries") -> "TrigSeries":
        data = dict(self._terms)
        for n, poly in other._terms.items():
            data[n] = data[n] + poly if n in data else poly
        return TrigSeries(data)

    def __neg__(self) -> "TrigSeries":
        return TrigSeries({n: -poly for n, poly in self._terms.items()})

    def __sub__(self, other: "TrigSeries") -> "TrigSeries":
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, TrigSeries):
            # cos(a)cos(b) = (cos(a-b) + cos(a+b)) / 2, cos(-n) folded to cos(n)
            half = Fraction(1, 2)
            data = {}
            for n1, p1 in self._terms.items():
                for n2, p2 in other._terms.items():
                    prod = p1 * p2 * half
                    for n in (abs(n1 - n2), n1 + n2):
                        data[n] = data[n] + prod if n in data else prod
            return TrigSeries(data)
        if isinstance(other, (int, Fraction)):
            other = AmpPoly.term(other)
        if not isinstance(other, AmpPoly):
            return NotImplemented
        return TrigSeries({n: poly * other for n, poly in self._terms.items()})

    __rmul__ = __mul__

    def second_derivative(self) -> "TrigSeries":
        """d2/dT2, i.e. cos(n*T) -> -n**2 cos(n*T); constants drop out."""
        return TrigSeries(
            {n: poly * Fraction(-n * n) for n, poly in self._terms.items() if n}
        )

    def without_harmonic(self, harmonic: int) -> "TrigSeries":
        data = {n: p for n, p in self._terms.items() if n != harmonic}
        return TrigSeries(data)

    def value_at_origin(self) -> AmpPoly:
        """Value at T = 0 as a polynomial in A (cosines all equal one there)."""
        total = AmpPoly.zero()
        for poly in self._terms.values():
            total = total + poly
        return total

    def evaluate(self, amplitude: float, phase: float) -> float:
        """Numeric value at amplitude A and scaled time T = phase."""
        return math.fsum(
            poly.evaluate(amplitude) * math.cos(n * phase)
            for n, poly in sorted(self._terms.items())
        )

    def to_json_obj(self):
        """Canonical JSON form: harmonics ascending, powers ascending."""
        return [
            {
                "harmonic": n,
                "coefficients": [
                    [p, c.numerator, c.denominator] for p, c in poly.items()
                ],
            }
            for n, poly in sorted(self._terms.items())
        ]

    @classmethod
    def from_json_obj(cls, obj) -> "TrigSeries":
        data = {}
        for entry in obj:
            poly = AmpPoly(
                {p: Fraction(num, den) for p, num, den in entry["coefficients"]}
            )
            data[entry["harmonic"]] = poly
        return cls(data)

    def __eq__(self, other) -> bool:
        if not isinstance(other, TrigSeries):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self):
        return hash(frozenset(self._terms.items()))

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        parts = []
        for n, poly in sorted(self._terms.items()):
            coeff = str(poly)
            if len(poly.items()) > 1:
                coeff = f"({coeff})"
            if n == 0:
                parts.append(coeff)
            else:
                angle = "T" if n == 1 else f"{n}T"
                parts.append(f"{coeff}*cos({angle})")
        out = parts[0]
        for text in parts[1:]:
            out += f" - {text[1:]}" if text.startswith("-") else f" + {text}"
        return out

    def __repr__(self) -> str:
        ordered = dict(sorted(self._terms.items()))
        return f"TrigSeries({ordered!r})"


def solve_particular(rhs: TrigSeries) -> TrigSeries:
    """Particular solution of y'' + y = rhs for a nonresonant cosine series.

    Each forcing harmonic cos(n*T), n != 1, responds with amplitude
    1/(1 - n**2).  A nonzero cos(T) component would force the secularly
    growing T*sin(T) mode, which has no place in a periodic solution, so it
    is rejected.

    Raises
    ------
    ResidualSecularity
        If the cos(T) coefficient of ``rhs`` is not identically zero.
    """
    resonant = rhs.coefficient(1)
    if not resonant.is_zero:
        raise ResidualSecularity(
            f"resonant cos(T) forcing with coefficient {resonant} must be "
            "removed before solving"
        )
    data = {}
    for n in rhs.harmonics():
        data[n] = rhs.coefficient(n) / Fraction(1 - n * n)
    return TrigSeries(data)
