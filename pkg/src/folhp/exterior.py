"""Graded exterior calculus on a chart: differential forms and multivectors.

Components are indexed by strictly increasing tuples of 0-based axes and
valued in exact polynomial scalars.  Conventions, fixed once here:

* wedge is graded commutative with the usual shuffle signs;
* contraction is the adjoint of left wedge for the duality pairing that
  gives ``<e_I, dx_I> = 1`` on matching increasing index tuples;
* the Schouten bracket restricts to the Lie bracket on vector fields and
  satisfies ``[a, b] = -(-1)^((|a|-1)(|b|-1)) [b, a]``; on a bivector it
  returns twice the Jacobiator of the induced bracket on functions.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import combinations
from typing import Mapping, Sequence, Union

from .errors import ChartMismatchError, DegreeError
from .scalars import Chart, ChartScalar, RatLike

Index = tuple[int, ...]


def _merge_indices(left: Index, right: Index) -> tuple[int, Index] | None:
    """Merge two increasing tuples; return (sign, merged) or None on overlap."""
    if set(left) & set(right):
        return None
    merged = tuple(sorted(left + right))
    concat = left + right
    inversions = 0
    for i in range(len(concat)):
        for j in range(i + 1, len(concat)):
            if concat[i] > concat[j]:
                inversions += 1
    return (-1 if inversions % 2 else 1, merged)


def _subset_sign(inner: Index, outer: Index) -> int | None:
    """Sign of the permutation sorting (inner, outer minus inner) into outer."""
    if not set(inner) <= set(outer):
        return None
    rest = tuple(i for i in outer if i not in inner)
    merged = _merge_indices(inner, rest)
    assert merged is not None and merged[1] == outer
    return merged[0]


class _Alternating:
    """Shared machinery for forms and multivectors."""

    KIND = "?"
    BASIS = "?"

    __slots__ = ("chart", "degree", "comps")

    def __init__(
        self,
        chart: Chart,
        degree: int,
        comps: Mapping[Index, ChartScalar],
    ):
        if degree < 0:
            raise DegreeError("degree must be nonnegative")
        clean: dict[Index, ChartScalar] = {}
        for idx, coeff in comps.items():
            idx = tuple(idx)
            if len(idx) != degree:
                raise DegreeError(f"index {idx} does not have degree {degree}")
            if any(not 0 <= i < chart.dim for i in idx):
                raise DegreeError(f"index {idx} out of range for chart {chart.name!r}")
            if any(idx[i] >= idx[i + 1] for i in range(len(idx) - 1)):
                raise DegreeError(f"index {idx} is not strictly increasing")
            if coeff.chart != chart:
                raise ChartMismatchError("component scalar on a different chart")
            if not coeff.is_zero():
                clean[idx] = coeff
        if degree > chart.dim and clean:
            raise DegreeError("nonzero component beyond the chart dimension")
        object.__setattr__(self, "chart", chart)
        object.__setattr__(self, "degree", degree)
        object.__setattr__(self, "comps", clean)

    def __setattr__(self, *_):
        raise AttributeError(f"{type(self).__name__} is immutable")

    # -- constructors ---------------------------------------------------

    @classmethod
    def zero(cls, chart: Chart, degree: int):
        return cls(chart, degree, {})

    @classmethod
    def from_scalar(cls, scalar: ChartScalar):
        return cls(scalar.chart, 0, {(): scalar})

    @classmethod
    def basis(cls, chart: Chart, axes: Sequence[int]):
        """Unit decomposable element on the given increasing axes."""
        return cls(chart, len(axes), {tuple(axes): ChartScalar.const(chart, 1)})

    # -- inspection -------------------------------------------------------

    def component(self, axes: Sequence[int]) -> ChartScalar:
        return self.comps.get(tuple(axes), ChartScalar.zero(self.chart))

    def is_zero(self) -> bool:
        return not self.comps

    def scalar_part(self) -> ChartScalar:
        if self.degree != 0:
            raise DegreeError("scalar_part needs a degree-0 object")
        return self.component(())

    def sorted_comps(self) -> list[tuple[Index, ChartScalar]]:
        return sorted(self.comps.items())

    # -- linear structure --------------------------------------------------

    def _check_compatible(self, other):
        if type(self) is not type(other):
            raise DegreeError(f"cannot combine {self.KIND} with {other.KIND}")
        if self.chart != other.chart:
            raise ChartMismatchError("operands on different charts")

    def __add__(self, other):
        self._check_compatible(other)
        if self.degree != other.degree:
            raise DegreeError("cannot add different degrees")
        out = dict(self.comps)
        for idx, c in other.comps.items():
            s = out.get(idx)
            out[idx] = c if s is None else s + c
        return type(self)(self.chart, self.degree, out)

    def __neg__(self):
        return type(self)(self.chart, self.degree, {i: -c for i, c in self.comps.items()})

    def __sub__(self, other):
        return self + (-other)

    def scale(self, factor: Union[ChartScalar, RatLike]):
        if isinstance(factor, (int, Fraction)):
            factor = ChartScalar.const(self.chart, factor)
        return type(self)(
            self.chart, self.degree, {i: factor * c for i, c in self.comps.items()}
        )

    def __mul__(self, factor):
        if isinstance(factor, (int, Fraction, ChartScalar)):
            return self.scale(factor)
        return NotImplemented

    __rmul__ = __mul__

    def __eq__(self, other):
        if type(self) is not type(other):
            return NotImplemented
        return (
            self.chart == other.chart
            and self.degree == other.degree
            and self.comps == other.comps
        )

    def __hash__(self):
        return hash((type(self).__name__, self.chart, self.degree, tuple(self.sorted_comps())))

    # -- formatting --------------------------------------------------------

    def to_text(self) -> str:
        if self.is_zero():
            return "0"
        pieces = []
        for idx, coeff in self.sorted_comps():
            basis = "^".join(f"{self.BASIS}{i + 1}" for i in idx) or "1"
            pieces.append(f"({coeff.to_text()})*{basis}")
        return " + ".join(pieces)

    def __repr__(self):
        return f"{type(self).__name__}({self.chart.name}: {self.to_text()})"


class DiffForm(_Alternating):
    KIND = "form"
    BASIS = "dx"


class Multivector(_Alternating):
    KIND = "multivector"
    BASIS = "e"


def wedge(a: _Alternating, b: _Alternating) -> _Alternating:
    """Graded product of two forms or two multivectors.

    Overflow past the chart dimension yields the zero element of the
    combined degree rather than an error.
    """
    if type(a) is not type(b):
        raise DegreeError("wedge needs two forms or two multivectors")
    if a.chart != b.chart:
        raise ChartMismatchError("wedge operands on different charts")
    degree = a.degree + b.degree
    out: dict[Index, ChartScalar] = {}
    if degree <= a.chart.dim:
        for ia, ca in a.comps.items():
            for ib, cb in b.comps.items():
                merged = _merge_indices(ia, ib)
                if merged is None:
                    continue
                sign, idx = merged
                term = ca * cb if sign > 0 else -(ca * cb)
                acc = out.get(idx)
                out[idx] = term if acc is None else acc + term
    return type(a)(a.chart, degree, out)


def exterior_derivative(a: DiffForm) -> DiffForm:
    """d on forms; returns the zero top+1 collapse as zero for top forms."""
    if not isinstance(a, DiffForm):
        raise DegreeError("exterior derivative acts on forms")
    chart = a.chart
    if a.degree >= chart.dim:
        return DiffForm.zero(chart, a.degree + 1)
    out: dict[Index, ChartScalar] = {}
    for idx, coeff in a.comps.items():
        for axis in range(chart.dim):
            if axis in idx:
                continue
            d = coeff.derivative(axis)
            if d.is_zero():
                continue
            merged = _merge_indices((axis,), idx)
            assert merged is not None
            sign, key = merged
            term = d if sign > 0 else -d
            acc = out.get(key)
            out[key] = term if acc is None else acc + term
    return DiffForm(chart, a.degree + 1, out)


def contract(x: Multivector, a: DiffForm) -> DiffForm:
    """Contraction of a k-multivector into a p-form (adjoint of left wedge).

    For matching increasing tuples the pairing is +1, so a full
    contraction recovers the alternating evaluation of the form on the
    factors of the multivector in order.
    """
    if not isinstance(x, Multivector) or not isinstance(a, DiffForm):
        raise DegreeError("contract takes (multivector, form)")
    if x.chart != a.chart:
        raise ChartMismatchError("contract operands on different charts")
    if x.degree > a.degree:
        raise DegreeError("multivector degree exceeds form degree")
    out: dict[Index, ChartScalar] = {}
    for ix, cx in x.comps.items():
        for ia, ca in a.comps.items():
            sign = _subset_sign(ix, ia)
            if sign is None:
                continue
            rest = tuple(i for i in ia if i not in ix)
            term = cx * ca if sign > 0 else -(cx * ca)
            acc = out.get(rest)
            out[rest] = term if acc is None else acc + term
    return DiffForm(a.chart, a.degree - x.degree, out)


def _odd_partial(a: Multivector, axis: int) -> Multivector:
    """Left derivative with respect to the odd generator of the given axis."""
    out: dict[Index, ChartScalar] = {}
    for idx, coeff in a.comps.items():
        if axis not in idx:
            continue
        pos = idx.index(axis)
        rest = idx[:pos] + idx[pos + 1 :]
        term = coeff if pos % 2 == 0 else -coeff
        acc = out.get(rest)
        out[rest] = term if acc is None else acc + term
    return Multivector(a.chart, a.degree - 1, out)


def _coeff_partial(a: Multivector, axis: int) -> Multivector:
    return Multivector(
        a.chart, a.degree, {i: c.derivative(axis) for i, c in a.comps.items()}
    )


def _interchange(a: Multivector, b: Multivector) -> Multivector:
    chart = a.chart
    degree = a.degree + b.degree - 1
    acc = Multivector.zero(chart, degree)
    if a.degree == 0:
        return acc
    for axis in range(chart.dim):
        da = _odd_partial(a, axis)
        if da.is_zero():
            continue
        db = _coeff_partial(b, axis)
        if db.is_zero():
            continue
        acc = acc + wedge(da, db)
    return acc


def schouten_bracket(a: Multivector, b: Multivector) -> Multivector:
    """Schouten bracket of multivector fields.

    Normalized so that for a bivector ``pi`` and coordinate functions
    f, g, h the trivector ``[pi, pi]`` evaluates on (df, dg, dh) to twice
    the Jacobiator of the bracket {f, g} = pi(df, dg).
    """
    if not isinstance(a, Multivector) or not isinstance(b, Multivector):
        raise DegreeError("schouten_bracket takes two multivectors")
    if a.chart != b.chart:
        raise ChartMismatchError("operands on different charts")
    ka, kb = a.degree, b.degree
    if ka + kb < 1:
        raise DegreeError("bracket of two functions is undefined")
    first = _interchange(a, b)
    second = _interchange(b, a)
    sign = -1 if ((ka - 1) * (kb - 1)) % 2 else 1
    return first - second if sign > 0 else first + second


def lie_bracket(x: Multivector, y: Multivector) -> Multivector:
    """Coordinate Lie bracket of two vector fields."""
    if x.degree != 1 or y.degree != 1:
        raise DegreeError("lie_bracket takes two vector fields")
    if x.chart != y.chart:
        raise ChartMismatchError("operands on different charts")
    chart = x.chart
    out: dict[Index, ChartScalar] = {}
    for j in range(chart.dim):
        total = ChartScalar.zero(chart)
        yj = y.component((j,))
        xj = x.component((j,))
        for i in range(chart.dim):
            xi = x.component((i,))
            yi = y.component((i,))
            if not xi.is_zero():
                total = total + xi * yj.derivative(i)
            if not yi.is_zero():
                total = total - yi * xj.derivative(i)
        if not total.is_zero():
            out[(j,)] = total
    return Multivector(chart, 1, out)


def bivector_matrix(pi: Multivector) -> list[list[ChartScalar]]:
    """Full skew coefficient matrix of a bivector."""
    if pi.degree != 2:
        raise DegreeError("bivector expected")
    n = pi.chart.dim
    zero = ChartScalar.zero(pi.chart)
    mat = [[zero for _ in range(n)] for _ in range(n)]
    for (i, j), coeff in pi.comps.items():
        mat[i][j] = coeff
        mat[j][i] = -coeff
    return mat


def bivector_from_matrix(chart: Chart, mat: Sequence[Sequence[ChartScalar]]) -> Multivector:
    """Bivector from the upper triangle of a skew coefficient matrix."""
    comps: dict[Index, ChartScalar] = {}
    n = chart.dim
    for i, j in combinations(range(n), 2):
        c = mat[i][j]
        if not c.is_zero():
            comps[(i, j)] = c
    return Multivector(chart, 2, comps)
