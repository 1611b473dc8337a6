"""Exact truth tables of small unsigned multipliers.

Input assignments are encoded as a single integer ``x = a | (b << w_a)``, so
input bit 0 is ``a[0]`` and input bit ``w_a`` is ``b[0]``.  Output bit 0 is the
least significant bit of the product.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass
from functools import cached_property

import numpy as np

MAX_BLOCK_WIDTH = 8


class ArithMode(enum.Enum):
    """Result width of a multiplication."""

    FULL_WIDTH = "full"
    LOW_HALF = "lowhalf"

    @classmethod
    def parse(cls, value: "str | ArithMode") -> "ArithMode":
        if isinstance(value, cls):
            return value
        return cls(value)


@dataclass(frozen=True, eq=False)
class TruthFunction:
    """A completely specified multi-output Boolean function.

    ``table[x]`` holds the output word for input assignment ``x``; bit ``t`` of
    the word is output ``t``.  The ON-set of output ``t`` is every ``x`` whose
    word has bit ``t`` set.
    """

    n_in: int
    n_out: int
    table: np.ndarray

    def __post_init__(self):
        if self.table.shape != (1 << self.n_in,):
            raise ValueError(f"table must have {1 << self.n_in} rows")
        if self.n_out < 64 and np.any(self.table >> np.uint64(self.n_out)):
            raise ValueError("table has bits above n_out")

    def onset(self, t: int) -> np.ndarray:
        """Sorted input assignments for which output ``t`` is 1."""
        if not 0 <= t < self.n_out:
            raise IndexError(t)
        return np.flatnonzero((self.table >> np.uint64(t)) & np.uint64(1))

    @cached_property
    def onsets(self) -> list[np.ndarray]:
        return [self.onset(t) for t in range(self.n_out)]

    def output_bits(self, t: int) -> np.ndarray:
        """Boolean column of output ``t`` over all assignments."""
        return ((self.table >> np.uint64(t)) & np.uint64(1)).astype(bool)

    def __eq__(self, other):
        if not isinstance(other, TruthFunction):
            return NotImplemented
        return (self.n_in, self.n_out) == (other.n_in, other.n_out) and bool(
            np.array_equal(self.table, other.table))

    __hash__ = None


def _check_width(name: str, w: int) -> None:
    if not 1 <= w <= MAX_BLOCK_WIDTH:
        raise ValueError(f"{name}={w} outside supported block widths 1..{MAX_BLOCK_WIDTH}")


def block_truth_table(w_a: int, w_b: int, out_width: int) -> TruthFunction:
    """Truth table of ``(a * b) mod 2**out_width`` for ``w_a``x``w_b``-bit operands.

    ``out_width`` may be anything from 1 to ``w_a + w_b``; narrower values give
    the truncated blocks used when only the low bits of a product are kept.
    """
    _check_width("w_a", w_a)
    _check_width("w_b", w_b)
    if not 1 <= out_width <= w_a + w_b:
        raise ValueError(f"out_width={out_width} must be in 1..{w_a + w_b}")
    x = np.arange(1 << (w_a + w_b), dtype=np.uint64)
    a = x & np.uint64((1 << w_a) - 1)
    b = x >> np.uint64(w_a)
    prod = (a * b) & np.uint64((1 << out_width) - 1)
    return TruthFunction(w_a + w_b, out_width, prod)


def gen_truth_table(w_a: int, w_b: int, mode: ArithMode | str) -> TruthFunction:
    """Truth table of a ``w_a``x``w_b`` multiplier in the given arithmetic mode.

    LOW_HALF keeps the ``w`` least significant product bits and needs equal
    operand widths.
    """
    mode = ArithMode.parse(mode)
    _check_width("w_a", w_a)
    _check_width("w_b", w_b)
    if mode is ArithMode.FULL_WIDTH:
        return block_truth_table(w_a, w_b, w_a + w_b)
    if w_a != w_b:
        raise ValueError("LOW_HALF mode requires equal operand widths")
    return block_truth_table(w_a, w_b, w_a)


def dnf_disjunction_count(f: TruthFunction) -> int:
    """Number of minterm disjunctions in the full DNF, summed over outputs."""
    total = 0
    for t in range(f.n_out):
        total += int(np.count_nonzero((f.table >> np.uint64(t)) & np.uint64(1)))
    return total
