"""Operand splitting and partial-product planning for wide multipliers.

Groups and terms use 1-based indices, group 1 being the least significant.
"""
from __future__ import annotations

from dataclasses import dataclass

from .tables import ArithMode

MIN_GROUP, MAX_GROUP = 2, 8
MAX_OPERAND = 32

BlockShape = tuple[int, int, int]


@dataclass(frozen=True)
class SplitPlan:
    n: int
    m: int
    group_widths: tuple[int, ...]

    @property
    def k(self) -> int:
        return len(self.group_widths)

    @property
    def offsets(self) -> tuple[int, ...]:
        return tuple(self.m * i for i in range(self.k))

    def groups(self, x: int) -> list[int]:
        """Slice an operand into its groups, least significant first."""
        return [(x >> off) & ((1 << w) - 1) for off, w in zip(self.offsets, self.group_widths)]

    def join(self, groups) -> int:
        return sum(g << off for g, off in zip(groups, self.offsets))


@dataclass(frozen=True)
class PartialTerm:
    i: int
    j: int
    w_i: int
    w_j: int
    shift: int
    eff_width: int

    @property
    def shape(self) -> BlockShape:
        return (self.w_i, self.w_j, self.eff_width)

    @property
    def span(self) -> tuple[int, int]:
        """Half-open range of result bits the term occupies."""
        return (self.shift, self.shift + self.eff_width)

    @property
    def label(self) -> str:
        return f"{self.i}_{self.j}"


@dataclass(frozen=True)
class MulPlan:
    mode: ArithMode
    split: SplitPlan
    terms: tuple[PartialTerm, ...]
    output_width: int

    @property
    def n(self) -> int:
        return self.split.n

    @property
    def m(self) -> int:
        return self.split.m

    @property
    def k(self) -> int:
        return self.split.k

    @property
    def padded_width(self) -> int:
        """``m * k``, the operand width rounded up to whole groups."""
        return self.split.m * self.split.k

    @property
    def name(self) -> str:
        return f"mul_{self.n}x{self.n}_{self.mode.value}_m{self.m}"

    def term_values(self, a: int, b: int) -> list[int]:
        """Shifted, truncated value of every term for operands ``a`` and ``b``."""
        ga, gb = self.split.groups(a), self.split.groups(b)
        return [((ga[t.i - 1] * gb[t.j - 1]) & ((1 << t.eff_width) - 1)) << t.shift
                for t in self.terms]


def default_group_width(n: int) -> int:
    """5 when it divides ``n``, otherwise 4 (capped at ``n`` for tiny operands)."""
    m = 5 if n % 5 == 0 else 4
    return min(m, n)


def split_operand(n: int, m: int) -> SplitPlan:
    """Split an ``n``-bit operand into ``ceil(n/m)`` groups; the top group may be narrower."""
    if not MIN_GROUP <= m <= MAX_GROUP:
        raise ValueError(f"group width m={m} outside {MIN_GROUP}..{MAX_GROUP}")
    if m > n:
        raise ValueError(f"group width m={m} exceeds operand width n={n}")
    if n > MAX_OPERAND:
        raise ValueError(f"operand width n={n} above supported maximum {MAX_OPERAND}")
    k = -(-n // m)
    widths = (m,) * (k - 1) + (n - m * (k - 1),)
    return SplitPlan(n, m, widths)


def plan_partial_products(n_bits: int, m: int, mode: ArithMode | str) -> MulPlan:
    """Enumerate the block products ``A_i * B_j << m*(i+j-2)``.

    In LOW_HALF mode terms shifted past the result are dropped and the rest
    keep only the bits below ``n``.
    """
    mode = ArithMode.parse(mode)
    split = split_operand(n_bits, m)
    w = split.group_widths
    terms = []
    for i in range(1, split.k + 1):
        for j in range(1, split.k + 1):
            shift = m * (i + j - 2)
            eff = w[i - 1] + w[j - 1]
            if mode is ArithMode.LOW_HALF:
                if shift >= n_bits:
                    continue
                eff = min(eff, n_bits - shift)
            terms.append(PartialTerm(i, j, w[i - 1], w[j - 1], shift, eff))
    out_w = 2 * n_bits if mode is ArithMode.FULL_WIDTH else n_bits
    return MulPlan(mode, split, tuple(terms), out_w)


def block_requirements(plan: MulPlan) -> set[BlockShape]:
    """Distinct ``(w_a, w_b, out_width)`` block shapes the plan instantiates."""
    return {t.shape for t in plan.terms}
