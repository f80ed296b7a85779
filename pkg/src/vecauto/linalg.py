"""Exact rational row vectors and square matrices.

Everything here uses the row-vector convention: a vector ``v`` is
multiplied on the right by a matrix ``M`` and ``(v @ M)[j] = sum_i v[i] * M[i][j]``.
There is deliberately no matrix-times-column-vector entry point.

Scalars are :class:`fractions.Fraction`, which is always stored reduced
with a positive denominator, so structural equality is value equality.
"""
from __future__ import annotations

import math
from fractions import Fraction
from numbers import Rational as _RationalABC
from typing import Iterable, Sequence, Union

Rational = Fraction
RationalLike = Union[Fraction, int, str]

_ZERO = Fraction(0)
_ONE = Fraction(1)


class DimensionError(ValueError):
    """Operands have incompatible dimensions."""


def rat(value: RationalLike, denominator: int | None = None) -> Fraction:
    """Build an exact rational from an int, a Fraction or a ``"p/q"`` string.

    Floats are refused: they would smuggle binary rounding into exact code.
    """
    if isinstance(value, float) or isinstance(denominator, float):
        raise TypeError("floats are not exact; pass ints, Fractions or 'p/q' strings")
    if denominator is not None:
        if not isinstance(value, int):
            raise TypeError("numerator must be an int when a denominator is given")
        return Fraction(value, denominator)
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise TypeError("booleans are not rationals")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        return parse_rational(value)
    if isinstance(value, _RationalABC):
        return Fraction(value.numerator, value.denominator)
    raise TypeError(f"cannot interpret {value!r} as a rational")


def parse_rational(text: str) -> Fraction:
    """Parse ``"p/q"`` or ``"p"``; decimals and floats are rejected."""
    s = text.strip()
    num, sep, den = s.partition("/")
    try:
        p = int(num)
        q = int(den) if sep else 1
    except ValueError:
        raise ValueError(f"not a rational literal: {text!r}") from None
    if q == 0:
        raise ZeroDivisionError(f"zero denominator in {text!r}")
    return Fraction(p, q)


def format_rational(x: Fraction | int) -> str:
    x = Fraction(x)
    if x.denominator == 1:
        return str(x.numerator)
    return f"{x.numerator}/{x.denominator}"


def bits(x: Fraction) -> int:
    """Largest bit length of the numerator and denominator."""
    return max(abs(x.numerator).bit_length(), x.denominator.bit_length())


class RowVector:
    """Immutable k-dimensional row vector of rationals."""

    __slots__ = ("_entries", "_hash")

    def __init__(self, entries: Iterable[RationalLike]):
        vals = tuple(rat(e) for e in entries)
        if not vals:
            raise DimensionError("a vector needs at least one entry")
        self._entries = vals
        self._hash: int | None = None

    @classmethod
    def _raw(cls, entries: tuple) -> "RowVector":
        obj = cls.__new__(cls)
        obj._entries = entries
        obj._hash = None
        return obj

    @classmethod
    def unit(cls, i: int, k: int) -> "RowVector":
        """Unit vector with a 1 at 1-based position ``i``."""
        _check_index(i, k)
        return cls._raw(tuple(_ONE if j == i - 1 else _ZERO for j in range(k)))

    @classmethod
    def zeros(cls, k: int) -> "RowVector":
        return cls._raw((_ZERO,) * k)

    @property
    def dim(self) -> int:
        return len(self._entries)

    @property
    def entries(self) -> tuple:
        return self._entries

    def __len__(self) -> int:
        return len(self._entries)

    def __getitem__(self, j: int) -> Fraction:
        return self._entries[j]

    def __iter__(self):
        return iter(self._entries)

    def entry(self, i: int) -> Fraction:
        """1-based entry access, matching the indexing used for check entries."""
        _check_index(i, self.dim)
        return self._entries[i - 1]

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, RowVector):
            return NotImplemented
        return self._entries == other._entries

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(self._entries)
        return self._hash

    def __matmul__(self, other: "SquareMatrix") -> "RowVector":
        if not isinstance(other, SquareMatrix):
            return NotImplemented
        return vec_mat_mul(self, other)

    def dot(self, column: Sequence[Fraction]) -> Fraction:
        """Inner product with a column given as a plain sequence."""
        if len(column) != self.dim:
            raise DimensionError(f"dot of dim {self.dim} with length {len(column)}")
        total = _ZERO
        for a, b in zip(self._entries, column):
            if a and b:
                total += a * b
        return total

    def max_bits(self) -> int:
        return max(bits(e) for e in self._entries)

    def to_json(self) -> list[str]:
        return [format_rational(e) for e in self._entries]

    def __repr__(self) -> str:
        return f"RowVector([{', '.join(format_rational(e) for e in self._entries)}])"


class SquareMatrix:
    """Immutable k-by-k rational matrix, row-major."""

    __slots__ = ("_rows", "_cols_nz", "_int_cols", "_hash")

    def __init__(self, rows: Iterable[Iterable[RationalLike]]):
        grid = tuple(tuple(rat(e) for e in row) for row in rows)
        k = len(grid)
        if k == 0:
            raise DimensionError("a matrix needs at least one row")
        if any(len(row) != k for row in grid):
            raise DimensionError("matrix is not square")
        self._init(grid)

    def _init(self, grid: tuple) -> None:
        self._rows = grid
        k = len(grid)
        # sparse columns drive vec_mat_mul; zoo matrices are mostly zeros
        self._cols_nz = tuple(
            tuple((i, grid[i][j]) for i in range(k) if grid[i][j]) for j in range(k)
        )
        integral = all(c.denominator == 1 for col in self._cols_nz for _, c in col)
        self._int_cols = (
            tuple(tuple((i, c.numerator) for i, c in col) for col in self._cols_nz)
            if integral
            else None
        )
        self._hash = None

    @classmethod
    def _raw(cls, grid: tuple) -> "SquareMatrix":
        obj = cls.__new__(cls)
        obj._init(grid)
        return obj

    @classmethod
    def identity(cls, k: int) -> "SquareMatrix":
        return cls._raw(
            tuple(tuple(_ONE if i == j else _ZERO for j in range(k)) for i in range(k))
        )

    @classmethod
    def diagonal(cls, values: Sequence[RationalLike]) -> "SquareMatrix":
        vals = [rat(v) for v in values]
        k = len(vals)
        return cls._raw(
            tuple(tuple(vals[i] if i == j else _ZERO for j in range(k)) for i in range(k))
        )

    @classmethod
    def scalar(cls, value: RationalLike) -> "SquareMatrix":
        """1x1 matrix, the multiplier of a one-dimensional machine."""
        return cls._raw(((rat(value),),))

    @property
    def dim(self) -> int:
        return len(self._rows)

    @property
    def rows(self) -> tuple:
        return self._rows

    def __getitem__(self, ij: tuple[int, int]) -> Fraction:
        i, j = ij
        return self._rows[i][j]

    def column(self, j: int) -> tuple:
        return tuple(row[j] for row in self._rows)

    def is_identity(self) -> bool:
        return all(
            e == (1 if i == j else 0)
            for i, row in enumerate(self._rows)
            for j, e in enumerate(row)
        )

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, SquareMatrix):
            return NotImplemented
        return self._rows == other._rows

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(self._rows)
        return self._hash

    def __matmul__(self, other: "SquareMatrix") -> "SquareMatrix":
        if isinstance(other, RowVector):
            raise TypeError("matrix @ vector is not supported; use vector @ matrix")
        if not isinstance(other, SquareMatrix):
            return NotImplemented
        return mat_mul(self, other)

    def entries(self) -> Iterable[Fraction]:
        for row in self._rows:
            yield from row

    def extend(self, extra: int = 1) -> "SquareMatrix":
        """Block extension ``diag(self, I_extra)``."""
        k = self.dim
        n = k + extra
        grid = tuple(
            tuple(
                self._rows[i][j] if i < k and j < k else (_ONE if i == j else _ZERO)
                for j in range(n)
            )
            for i in range(n)
        )
        return SquareMatrix._raw(grid)

    def to_json(self) -> list[list[str]]:
        return [[format_rational(e) for e in row] for row in self._rows]

    def __repr__(self) -> str:
        body = "; ".join(" ".join(format_rational(e) for e in row) for row in self._rows)
        return f"SquareMatrix([{body}])"


def _check_index(i: int, k: int) -> None:
    if not 1 <= i <= k:
        raise IndexError(f"index {i} outside 1..{k}")


def vec_mat_mul(v: RowVector, m: SquareMatrix) -> RowVector:
    if v.dim != m.dim:
        raise DimensionError(f"vector of dim {v.dim} times matrix of dim {m.dim}")
    ve = v.entries
    out = []
    if m._int_cols is not None and all(x.denominator == 1 for x in ve):
        # integer fast path; Fraction arithmetic dominates nondeterministic runs
        nums = [x.numerator for x in ve]
        for col in m._int_cols:
            out.append(Fraction(sum(nums[i] * c for i, c in col)))
        return RowVector._raw(tuple(out))
    for col in m._cols_nz:
        total = _ZERO
        for i, c in col:
            x = ve[i]
            if x:
                total += x * c
        out.append(total)
    return RowVector._raw(tuple(out))


def mat_mul(a: SquareMatrix, b: SquareMatrix) -> SquareMatrix:
    if a.dim != b.dim:
        raise DimensionError(f"matrix of dim {a.dim} times matrix of dim {b.dim}")
    rows = tuple(vec_mat_mul(RowVector._raw(row), b).entries for row in a.rows)
    return SquareMatrix._raw(rows)


def elementary_matrix(i: int, k: int, c: RationalLike) -> SquareMatrix:
    """Identity with the (i, 1) entry set to ``c``.

    Right-multiplying a row vector by it adds ``c`` times entry ``i`` to
    entry 1, or scales entry 1 by ``c`` when ``i == 1``.
    """
    _check_index(i, k)
    c = rat(c)
    grid = [[_ONE if r == s else _ZERO for s in range(k)] for r in range(k)]
    grid[i - 1][0] = c
    return SquareMatrix._raw(tuple(tuple(row) for row in grid))


def swap_matrix(i: int, k: int) -> SquareMatrix:
    """Permutation matrix exchanging coordinates 1 and ``i``."""
    _check_index(i, k)
    perm = list(range(k))
    perm[0], perm[i - 1] = perm[i - 1], perm[0]
    return SquareMatrix._raw(
        tuple(tuple(_ONE if perm[r] == s else _ZERO for s in range(k)) for r in range(k))
    )


def common_form(values: Iterable[Fraction]) -> tuple[int, int]:
    """(max |numerator|, common denominator) when writing values over one denominator."""
    vals = list(values)
    den = math.lcm(*(v.denominator for v in vals)) if vals else 1
    num = max((abs(v.numerator * (den // v.denominator)) for v in vals), default=0)
    return num, den
