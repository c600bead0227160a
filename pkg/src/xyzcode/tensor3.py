"""Binary 3-tensors with per-axis matrix action.

Entry (i, j, k) of a tensor with shape (a, b, c) sits at flat index
i*b*c + j*c + k.  The flat form is an int bitset, matching f2core.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

import numpy as np

from .f2core import BitMatrix, BitVector, bits_of

Shape = tuple[int, int, int]


def flat_index(shape: Shape, i: int, j: int, k: int) -> int:
    return (i * shape[1] + j) * shape[2] + k


def cell_of(shape: Shape, idx: int) -> tuple[int, int, int]:
    ij, k = divmod(idx, shape[2])
    i, j = divmod(ij, shape[1])
    return i, j, k


@dataclass(frozen=True)
class Tensor3:
    shape: Shape
    bits: int = 0

    def __post_init__(self) -> None:
        if len(self.shape) != 3 or any(s < 0 for s in self.shape):
            raise ValueError(f"bad shape {self.shape}")
        if self.bits < 0 or self.bits >> self.size:
            raise ValueError("bits beyond tensor size")

    @property
    def size(self) -> int:
        a, b, c = self.shape
        return a * b * c

    @classmethod
    def zeros(cls, shape: Shape) -> "Tensor3":
        return cls(tuple(shape))

    @classmethod
    def from_cells(cls, shape: Shape, cells: Iterable[tuple[int, int, int]]) -> "Tensor3":
        shape = tuple(shape)
        bits = 0
        for i, j, k in cells:
            if not (0 <= i < shape[0] and 0 <= j < shape[1] and 0 <= k < shape[2]):
                raise ValueError(f"cell {(i, j, k)} outside shape {shape}")
            bits ^= 1 << flat_index(shape, i, j, k)
        return cls(shape, bits)

    @classmethod
    def from_array(cls, arr) -> "Tensor3":
        arr = np.asarray(arr, dtype=np.uint8) & 1
        if arr.ndim != 3:
            raise ValueError("expected a 3-dimensional array")
        bits = 0
        for idx in np.flatnonzero(arr.reshape(-1)):
            bits |= 1 << int(idx)
        return cls(tuple(int(s) for s in arr.shape), bits)

    def to_array(self) -> np.ndarray:
        n = self.size
        out = np.zeros(n, dtype=np.uint8)
        for idx in bits_of(self.bits):
            out[idx] = 1
        return out.reshape(self.shape)

    def cells(self) -> list[tuple[int, int, int]]:
        return [cell_of(self.shape, idx) for idx in bits_of(self.bits)]

    def weight(self) -> int:
        return self.bits.bit_count()

    def __getitem__(self, cell: tuple[int, int, int]) -> int:
        return (self.bits >> flat_index(self.shape, *cell)) & 1

    def __add__(self, other: "Tensor3") -> "Tensor3":
        if self.shape != other.shape:
            raise ValueError(f"shape mismatch {self.shape} vs {other.shape}")
        return Tensor3(self.shape, self.bits ^ other.bits)

    __xor__ = __add__

    def __and__(self, other: "Tensor3") -> "Tensor3":
        if self.shape != other.shape:
            raise ValueError(f"shape mismatch {self.shape} vs {other.shape}")
        return Tensor3(self.shape, self.bits & other.bits)

    def __or__(self, other: "Tensor3") -> "Tensor3":
        if self.shape != other.shape:
            raise ValueError(f"shape mismatch {self.shape} vs {other.shape}")
        return Tensor3(self.shape, self.bits | other.bits)


def flatten(t: Tensor3) -> BitVector:
    return BitVector(t.size, t.bits)


def unflatten(v: BitVector, shape: Shape) -> Tensor3:
    shape = tuple(shape)
    if v.length != shape[0] * shape[1] * shape[2]:
        raise ValueError(f"length {v.length} does not fit shape {shape}")
    return Tensor3(shape, v.bits)


def axis_images(h: BitMatrix) -> list[list[int]]:
    """For each column c of h, the rows r with h[r, c] = 1."""
    cols: list[list[int]] = [[] for _ in range(h.ncols)]
    for r, row in enumerate(h.rows):
        for c in bits_of(row):
            cols[c].append(r)
    return cols


def apply_axis(h: BitMatrix, t: Tensor3, axis: int) -> Tensor3:
    """Apply h along one axis, i.e. (h x 1 x 1), (1 x h x 1) or (1 x 1 x h)."""
    if axis not in (0, 1, 2):
        raise ValueError(f"axis must be 0, 1 or 2, got {axis}")
    if h.ncols != t.shape[axis]:
        raise ValueError(f"matrix has {h.ncols} columns but axis {axis} has length {t.shape[axis]}")
    a, b, c = t.shape
    out_shape = list(t.shape)
    out_shape[axis] = h.nrows
    out_shape = tuple(out_shape)
    cols = axis_images(h)
    out = 0
    if axis == 0:
        # slices along axis 0 are contiguous blocks of b*c bits
        blk = b * c
        mask = (1 << blk) - 1
        for col in range(a):
            sl = (t.bits >> (col * blk)) & mask
            if sl:
                for r in cols[col]:
                    out ^= sl << (r * blk)
    elif axis == 1:
        mask = (1 << c) - 1
        for i in range(a):
            for col in range(b):
                sl = (t.bits >> ((i * b + col) * c)) & mask
                if sl:
                    for r in cols[col]:
                        out ^= sl << ((i * h.nrows + r) * c)
    else:
        m = h.nrows
        for idx in bits_of(t.bits):
            ij, col = divmod(idx, c)
            base = ij * m
            for r in cols[col]:
                out ^= 1 << (base + r)
    return Tensor3(out_shape, out)


def plane_tensor(shape: Shape, fixed_axis: int, index: int) -> Tensor3:
    """All-ones on the plane where coordinate ``fixed_axis`` equals ``index``."""
    shape = tuple(shape)
    if fixed_axis not in (0, 1, 2):
        raise ValueError(f"axis must be 0, 1 or 2, got {fixed_axis}")
    if not 0 <= index < shape[fixed_axis]:
        raise ValueError(f"index {index} out of range for axis of length {shape[fixed_axis]}")
    a, b, c = shape
    cells = []
    for i in range(a):
        for j in range(b):
            for k in range(c):
                if (i, j, k)[fixed_axis] == index:
                    cells.append((i, j, k))
    return Tensor3.from_cells(shape, cells)


def line_tensor(shape: Shape, free_axis: int, fixed: tuple[int, int]) -> Tensor3:
    """All-ones along one axis with the other two coordinates fixed."""
    cells = []
    for t in range(shape[free_axis]):
        cell = list(fixed)
        cell.insert(free_axis, t)
        cells.append(tuple(cell))
    return Tensor3.from_cells(shape, cells)


__all__ = [
    "Tensor3",
    "apply_axis",
    "axis_images",
    "cell_of",
    "flat_index",
    "flatten",
    "line_tensor",
    "plane_tensor",
    "unflatten",
]
