"""Exact multivariate polynomial scalars on named coordinate charts.

A scalar is stored sparsely as a map from exponent multi-indices to
``Fraction`` coefficients.  Every operation in this layer is exact; floats
only appear in the dedicated grid-evaluation helpers used by the numeric
layers above.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping, Sequence, Union

import numpy as np

from .errors import ChartMismatchError, UnknownCoordinateError

RatLike = Union[int, Fraction]

# dx3 / e3 style names are wired to basis symbols in the input language.
_RESERVED = re.compile(r"^(dx|e)[0-9]+$")
_IDENT = re.compile(r"^[A-Za-z_][A-Za-z_0-9]*$")


@dataclass(frozen=True)
class Chart:
    """An ordered tuple of coordinate names, e.g. (x, y, z)."""

    name: str
    coords: tuple[str, ...]

    def __post_init__(self):
        if not self.coords:
            raise ValueError("chart needs at least one coordinate")
        if len(set(self.coords)) != len(self.coords):
            raise ValueError(f"duplicate coordinate names in chart {self.name!r}")
        for c in self.coords:
            if not _IDENT.match(c):
                raise ValueError(f"invalid coordinate name {c!r}")
            if _RESERVED.match(c):
                raise ValueError(f"coordinate name {c!r} clashes with basis symbols")

    @property
    def dim(self) -> int:
        return len(self.coords)

    def axis(self, coord: str) -> int:
        try:
            return self.coords.index(coord)
        except ValueError:
            raise UnknownCoordinateError(
                f"chart {self.name!r} has no coordinate {coord!r}"
            ) from None


def _as_fraction(value: RatLike) -> Fraction:
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    raise TypeError(f"expected an exact rational, got {type(value).__name__}")


def grlex_key(exponents: tuple[int, ...]) -> tuple:
    """Graded lexicographic sort key (total degree first)."""
    return (sum(exponents), exponents)


class ChartScalar:
    """Polynomial function on a chart with exact rational coefficients."""

    __slots__ = ("chart", "_terms")

    def __init__(self, chart: Chart, terms: Mapping[tuple[int, ...], RatLike]):
        clean: dict[tuple[int, ...], Fraction] = {}
        for exps, coeff in terms.items():
            exps = tuple(exps)
            if len(exps) != chart.dim or any(e < 0 for e in exps):
                raise ValueError(f"bad exponent tuple {exps} for chart {chart.name!r}")
            c = _as_fraction(coeff)
            if c:
                clean[exps] = clean.get(exps, Fraction(0)) + c
        object.__setattr__(self, "chart", chart)
        object.__setattr__(self, "_terms", {e: c for e, c in clean.items() if c})

    def __setattr__(self, *_):
        raise AttributeError("ChartScalar is immutable")

    # -- constructors -------------------------------------------------

    @classmethod
    def zero(cls, chart: Chart) -> "ChartScalar":
        return cls(chart, {})

    @classmethod
    def const(cls, chart: Chart, value: RatLike) -> "ChartScalar":
        return cls(chart, {(0,) * chart.dim: _as_fraction(value)})

    @classmethod
    def coordinate(cls, chart: Chart, which: Union[int, str]) -> "ChartScalar":
        axis = which if isinstance(which, int) else chart.axis(which)
        if not 0 <= axis < chart.dim:
            raise UnknownCoordinateError(f"axis {axis} out of range")
        exps = tuple(1 if i == axis else 0 for i in range(chart.dim))
        return cls(chart, {exps: Fraction(1)})

    # -- inspection ---------------------------------------------------

    def terms(self) -> dict[tuple[int, ...], Fraction]:
        return dict(self._terms)

    def sorted_terms(self) -> list[tuple[tuple[int, ...], Fraction]]:
        return sorted(self._terms.items(), key=lambda t: grlex_key(t[0]), reverse=True)

    def is_zero(self) -> bool:
        return not self._terms

    def is_constant(self) -> bool:
        return all(sum(e) == 0 for e in self._terms)

    def constant_value(self) -> Fraction:
        if not self.is_constant():
            raise ValueError("scalar is not constant")
        return next(iter(self._terms.values()), Fraction(0))

    def total_degree(self) -> int:
        return max((sum(e) for e in self._terms), default=0)

    # -- ring operations ----------------------------------------------

    def _check_chart(self, other: "ChartScalar"):
        if self.chart != other.chart:
            raise ChartMismatchError(
                f"charts {self.chart.name!r} and {other.chart.name!r} differ"
            )

    def __add__(self, other):
        if isinstance(other, (int, Fraction)):
            other = ChartScalar.const(self.chart, other)
        if not isinstance(other, ChartScalar):
            return NotImplemented
        self._check_chart(other)
        out = dict(self._terms)
        for e, c in other._terms.items():
            out[e] = out.get(e, Fraction(0)) + c
        return ChartScalar(self.chart, out)

    __radd__ = __add__

    def __neg__(self):
        return ChartScalar(self.chart, {e: -c for e, c in self._terms.items()})

    def __sub__(self, other):
        if isinstance(other, (int, Fraction)):
            other = ChartScalar.const(self.chart, other)
        if not isinstance(other, ChartScalar):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            c = _as_fraction(other)
            return ChartScalar(self.chart, {e: c * v for e, v in self._terms.items()})
        if not isinstance(other, ChartScalar):
            return NotImplemented
        self._check_chart(other)
        out: dict[tuple[int, ...], Fraction] = {}
        for ea, ca in self._terms.items():
            for eb, cb in other._terms.items():
                key = tuple(x + y for x, y in zip(ea, eb))
                out[key] = out.get(key, Fraction(0)) + ca * cb
        return ChartScalar(self.chart, out)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if not isinstance(n, int) or n < 0:
            raise ValueError("only nonnegative integer powers are defined")
        result = ChartScalar.const(self.chart, 1)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = ChartScalar.const(self.chart, other)
        if not isinstance(other, ChartScalar):
            return NotImplemented
        return self.chart == other.chart and self._terms == other._terms

    def __hash__(self):
        return hash((self.chart, tuple(self.sorted_terms())))

    # -- calculus -----------------------------------------------------

    def derivative(self, which: Union[int, str]) -> "ChartScalar":
        axis = which if isinstance(which, int) else self.chart.axis(which)
        out: dict[tuple[int, ...], Fraction] = {}
        for exps, coeff in self._terms.items():
            k = exps[axis]
            if k == 0:
                continue
            reduced = tuple(e - 1 if i == axis else e for i, e in enumerate(exps))
            out[reduced] = out.get(reduced, Fraction(0)) + coeff * k
        return ChartScalar(self.chart, out)

    def substitute(self, values: Sequence["ChartScalar"]) -> "ChartScalar":
        """Compose with a polynomial map: coordinate i becomes values[i]."""
        if len(values) != self.chart.dim:
            raise ValueError("substitution needs one value per coordinate")
        target = values[0].chart
        for v in values:
            if v.chart != target:
                raise ChartMismatchError("substitution values on mixed charts")
        acc = ChartScalar.zero(target)
        for exps, coeff in self._terms.items():
            term = ChartScalar.const(target, coeff)
            for i, e in enumerate(exps):
                if e:
                    term = term * (values[i] ** e)
            acc = acc + term
        return acc

    # -- evaluation ---------------------------------------------------

    def evaluate(self, point: Sequence[RatLike]) -> Fraction:
        if len(point) != self.chart.dim:
            raise ValueError("point dimension mismatch")
        pt = [_as_fraction(x) for x in point]
        total = Fraction(0)
        for exps, coeff in self._terms.items():
            v = coeff
            for x, e in zip(pt, exps):
                if e:
                    v *= x**e
            total += v
        return total

    def evaluate_float(self, point: Sequence[float]) -> float:
        total = 0.0
        for exps, coeff in self._terms.items():
            v = float(coeff)
            for x, e in zip(point, exps):
                if e:
                    v *= float(x) ** e
            total += v
        return total

    def evaluate_grid(self, points: np.ndarray) -> np.ndarray:
        """Vectorized evaluation on an (N, dim) float array."""
        points = np.asarray(points, dtype=float)
        out = np.zeros(points.shape[0])
        for exps, coeff in self._terms.items():
            t = np.full(points.shape[0], float(coeff))
            for i, e in enumerate(exps):
                if e:
                    t *= points[:, i] ** e
            out += t
        return out

    # -- formatting ---------------------------------------------------

    def to_text(self) -> str:
        """Render in the input-language polynomial syntax."""
        if self.is_zero():
            return "0"
        pieces: list[str] = []
        for exps, coeff in self.sorted_terms():
            factors: list[str] = []
            mag = abs(coeff)
            monomial = [
                f"{self.chart.coords[i]}^{e}" if e > 1 else self.chart.coords[i]
                for i, e in enumerate(exps)
                if e
            ]
            if mag != 1 or not monomial:
                factors.append(str(mag))
            factors.extend(monomial)
            text = "*".join(factors)
            if not pieces:
                pieces.append(text if coeff > 0 else f"-{text}")
            else:
                pieces.append(f"+ {text}" if coeff > 0 else f"- {text}")
        return " ".join(pieces)

    def __repr__(self):
        return f"ChartScalar({self.chart.name}: {self.to_text()})"
