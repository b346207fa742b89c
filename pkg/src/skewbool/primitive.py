"""Finite primitive skew Boolean algebras encoded as rectangles with an adjoined zero.

A primitive algebra is a ``left_width x right_width`` rectangle of nonzero elements
over a zero element.  Elements are plain integer codes: ``0`` is zero and
``1 + row * right_width + col`` is the nonzero element at ``(row, col)``.  This makes
the canonical element order (zero first, then row-major) the natural integer order,
and for one-sided algebras the codes coincide with the usual atom labels 1, 2, ...
"""

from __future__ import annotations

import re
from dataclasses import dataclass

import numpy as np

__all__ = [
    "PrimitiveShape", "parse_shape", "format_shape",
    "prim_meet", "prim_join", "prim_diff", "cayley_table", "op_tables",
]


@dataclass(frozen=True)
class PrimitiveShape:
    """Rectangle widths of the nonzero D-class; (1, 1) is the Boolean algebra 2,
    (n-1, 1) is n_L, (1, n-1) is n_R and (m-1, n-1) the fibered product mL*nR."""

    left_width: int
    right_width: int

    def __post_init__(self):
        if self.left_width < 1 or self.right_width < 1:
            raise ValueError(f"widths must be >= 1, got {self}")

    @property
    def size(self) -> int:
        return 1 + self.left_width * self.right_width

    @property
    def class_size(self) -> int:
        return self.left_width * self.right_width

    def element(self, row: int, col: int) -> int:
        if not (0 <= row < self.left_width and 0 <= col < self.right_width):
            raise ValueError(f"coordinates ({row}, {col}) out of range for {self}")
        return 1 + row * self.right_width + col

    def row_of(self, code: int) -> int:
        return (code - 1) // self.right_width

    def col_of(self, code: int) -> int:
        return (code - 1) % self.right_width

    def check(self, code: int) -> None:
        if not (0 <= code < self.size):
            raise ValueError(f"element code {code} out of range for shape {format_shape(self)}")

    def __str__(self):
        return format_shape(self)


_SHAPE_RE = re.compile(r"^(?:(\d+)|(\d+)L|(\d+)R|(\d+)L\*(\d+)R)$")


def parse_shape(token: str) -> PrimitiveShape:
    """Parse a shape token: ``2``, ``nL``, ``nR`` or ``mL*nR``."""
    m = _SHAPE_RE.match(token)
    if not m:
        raise ValueError(f"malformed shape token: {token!r}")
    if m.group(1):
        if int(m.group(1)) != 2:
            raise ValueError(f"bare numeric shape must be 2, got {token!r}")
        return PrimitiveShape(1, 1)
    if m.group(2):
        n = int(m.group(2))
        if n < 2:
            raise ValueError(f"one-sided shape needs n >= 2, got {token!r}")
        return PrimitiveShape(n - 1, 1)
    if m.group(3):
        n = int(m.group(3))
        if n < 2:
            raise ValueError(f"one-sided shape needs n >= 2, got {token!r}")
        return PrimitiveShape(1, n - 1)
    mm, nn = int(m.group(4)), int(m.group(5))
    if mm < 2 or nn < 2:
        raise ValueError(f"fibered shape needs m, n >= 2, got {token!r}")
    return PrimitiveShape(mm - 1, nn - 1)


def format_shape(shape: PrimitiveShape) -> str:
    a, b = shape.left_width, shape.right_width
    if a == 1 and b == 1:
        return "2"
    if b == 1:
        return f"{a + 1}L"
    if a == 1:
        return f"{b + 1}R"
    return f"{a + 1}L*{b + 1}R"


def prim_meet(shape: PrimitiveShape, x: int, y: int) -> int:
    shape.check(x)
    shape.check(y)
    if x == 0 or y == 0:
        return 0
    return shape.element(shape.row_of(x), shape.col_of(y))


def prim_join(shape: PrimitiveShape, x: int, y: int) -> int:
    shape.check(x)
    shape.check(y)
    if y == 0:
        return x
    if x == 0:
        return y
    return shape.element(shape.row_of(y), shape.col_of(x))


def prim_diff(shape: PrimitiveShape, x: int, y: int) -> int:
    shape.check(x)
    shape.check(y)
    return x if y == 0 else 0


_OPS = {"meet": prim_meet, "join": prim_join, "diff": prim_diff}


def cayley_table(shape: PrimitiveShape, op: str) -> list[list[int]]:
    """Full operation table in canonical element order (zero first, then row-major)."""
    fn = _OPS[op]
    s = shape.size
    return [[fn(shape, x, y) for y in range(s)] for x in range(s)]


def op_tables(shape: PrimitiveShape) -> dict[str, np.ndarray]:
    """The three Cayley tables as int64 arrays, for the vectorized kernels."""
    return {op: np.array(cayley_table(shape, op), dtype=np.int64) for op in _OPS}
