from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
import logging
import re
from typing import Any, Iterable, List, Sequence, Tuple

from errors import DimensionError, ParseError

log = logging.getLogger(__name__)

ExactScalar = Fraction

_SCALAR_RE = re.compile(r"^([+-]?\d+)(?:/(\d+))?$")


def scalar_parse(text: str) -> Fraction:
    """Parse "p" or "p/q" into a canonical Fraction."""
    if isinstance(text, Fraction):
        return text
    if isinstance(text, int) and not isinstance(text, bool):
        return Fraction(text)
    if not isinstance(text, str):
        raise ParseError(f"expected rational text, got {type(text).__name__}")
    m = _SCALAR_RE.match(text.strip())
    if not m:
        raise ParseError(f"malformed rational: {text!r}")
    num = int(m.group(1))
    den = int(m.group(2)) if m.group(2) is not None else 1
    if den == 0:
        raise ParseError(f"zero denominator: {text!r}")
    return Fraction(num, den)


def scalar_format(value: Fraction) -> str:
    return str(Fraction(value))


def to_scalar(value: Any) -> Fraction:
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int) and not isinstance(value, bool):
        return Fraction(value)
    return scalar_parse(value)


def is_scalar(value: Any) -> bool:
    return isinstance(value, (Fraction, int)) and not isinstance(value, bool)


@dataclass(frozen=True)
class ExactMatrix:
    rows: int
    cols: int
    entries: Tuple[Any, ...]

    def __post_init__(self) -> None:
        if self.rows < 0 or self.cols < 0 or len(self.entries) != self.rows * self.cols:
            raise DimensionError(
                f"{self.rows}x{self.cols} matrix needs {self.rows * self.cols} entries, got {len(self.entries)}"
            )

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[Any]], cols: int = -1) -> "ExactMatrix":
        rows = [list(r) for r in rows]
        if cols < 0:
            cols = len(rows[0]) if rows else 0
        for r in rows:
            if len(r) != cols:
                raise DimensionError(f"ragged row of length {len(r)}, expected {cols}")
        flat: List[Any] = []
        for r in rows:
            flat.extend(r)
        return cls(len(rows), cols, tuple(flat))

    @classmethod
    def identity(cls, n: int) -> "ExactMatrix":
        return cls.from_rows([[Fraction(int(i == j)) for j in range(n)] for i in range(n)], cols=n)

    def at(self, i: int, j: int) -> Any:
        return self.entries[i * self.cols + j]

    def row(self, i: int) -> List[Any]:
        return list(self.entries[i * self.cols:(i + 1) * self.cols])

    def to_rows(self) -> List[List[Any]]:
        return [self.row(i) for i in range(self.rows)]

    @property
    def is_square(self) -> bool:
        return self.rows == self.cols


def matmul(a: ExactMatrix, b: ExactMatrix) -> ExactMatrix:
    if a.cols != b.rows:
        raise DimensionError(f"cannot multiply {a.rows}x{a.cols} by {b.rows}x{b.cols}")
    out = []
    for i in range(a.rows):
        out.append([sum((a.at(i, k) * b.at(k, j) for k in range(a.cols)), Fraction(0)) for j in range(b.cols)])
    return ExactMatrix.from_rows(out, cols=b.cols)


def _det_bareiss(rows: List[List[Fraction]]) -> Fraction:
    n = len(rows)
    m = [list(r) for r in rows]
    sign = 1
    prev = Fraction(1)
    for k in range(n - 1):
        if m[k][k] == 0:
            for i in range(k + 1, n):
                if m[i][k] != 0:
                    m[k], m[i] = m[i], m[k]
                    sign = -sign
                    break
            else:
                return Fraction(0)
        pivot = m[k][k]
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = (m[i][j] * pivot - m[i][k] * m[k][j]) / prev
            m[i][k] = Fraction(0)
        prev = pivot
    return sign * m[n - 1][n - 1]


def _det_cofactor(rows: List[List[Any]]) -> Any:
    n = len(rows)
    if n == 1:
        return rows[0][0]
    if n == 2:
        return rows[0][0] * rows[1][1] - rows[0][1] * rows[1][0]
    total: Any = 0
    for j, entry in enumerate(rows[0]):
        if entry == 0:
            continue
        minor = [r[:j] + r[j + 1:] for r in rows[1:]]
        term = entry * _det_cofactor(minor)
        total = total + term if j % 2 == 0 else total - term
    return total


def det_cofactor(m: ExactMatrix) -> Any:
    if not m.is_square:
        raise DimensionError(f"determinant of a non-square {m.rows}x{m.cols} matrix")
    if m.rows == 0:
        return Fraction(1)
    return _det_cofactor(m.to_rows())


def det_exact(m: ExactMatrix) -> Any:
    """Exact determinant; Bareiss elimination for rationals, cofactor expansion otherwise."""
    if not m.is_square:
        raise DimensionError(f"determinant of a non-square {m.rows}x{m.cols} matrix")
    if m.rows == 0:
        return Fraction(1)
    if all(is_scalar(e) for e in m.entries):
        rows = [[Fraction(e) for e in r] for r in m.to_rows()]
        return _det_bareiss(rows)
    return _det_cofactor(m.to_rows())


def det_rows(rows: Sequence[Sequence[Any]]) -> Any:
    n = len(rows)
    return det_exact(ExactMatrix.from_rows(rows, cols=n))


def exact_sum(values: Iterable[Any]) -> Any:
    total: Any = Fraction(0)
    for v in values:
        total = total + v
    return total


def exact_prod(values: Iterable[Any]) -> Any:
    total: Any = Fraction(1)
    for v in values:
        total = total * v
    return total
