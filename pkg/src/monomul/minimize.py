"""Two-level (sum-of-products) covers and their minimization.

A cube is stored as integers: ``care`` has a bit set for every input that
appears as a literal, ``value`` gives the polarity of those literals and
``outputs`` is the set of output bits the product term feeds.  Textually the
input part is written with column ``j`` holding input bit ``j``.
"""
from __future__ import annotations

import enum
import heapq
from dataclasses import dataclass, field
from functools import cached_property, lru_cache

import numpy as np
from scipy.optimize import Bounds, LinearConstraint, milp
from scipy.sparse import coo_matrix

from .tables import TruthFunction

EXACT_MAX_INPUTS = 8
HEURISTIC_MAX_INPUTS = 16


class ArityError(ValueError):
    """Raised when a function is too wide for the requested minimizer."""


class Provenance(enum.Enum):
    FULL_DNF = "full-dnf"
    EXACT = "exact"
    HEURISTIC = "heuristic"


@dataclass(frozen=True, order=True)
class Cube:
    care: int
    value: int
    outputs: int

    def __post_init__(self):
        if self.value & ~self.care:
            raise ValueError("cube value has bits outside its care mask")
        if self.outputs <= 0:
            raise ValueError("cube must feed at least one output")

    def literals(self, n_in: int) -> str:
        return "".join(
            "-" if not (self.care >> j) & 1 else "01"[(self.value >> j) & 1]
            for j in range(n_in))

    def output_string(self, n_out: int) -> str:
        return "".join("01"[(self.outputs >> t) & 1] for t in range(n_out))

    @classmethod
    def from_strings(cls, inputs: str, outputs: str) -> "Cube":
        care = value = out = 0
        for j, ch in enumerate(inputs):
            if ch == "1":
                care |= 1 << j
                value |= 1 << j
            elif ch == "0":
                care |= 1 << j
            elif ch != "-":
                raise ValueError(f"bad input literal {ch!r}")
        for t, ch in enumerate(outputs):
            if ch == "1":
                out |= 1 << t
            elif ch != "0":
                raise ValueError(f"bad output symbol {ch!r}")
        return cls(care, value, out)

    def covers(self, x: int) -> bool:
        return (x & self.care) == self.value

    def minterms(self, n_in: int) -> np.ndarray:
        free = ((1 << n_in) - 1) & ~self.care
        return self.value | _submasks(free)


@dataclass(frozen=True)
class Cover:
    """A multi-output sum-of-products implementation."""

    n_in: int
    n_out: int
    cubes: tuple[Cube, ...]
    provenance: Provenance = field(default=Provenance.HEURISTIC, compare=False)

    def __post_init__(self):
        object.__setattr__(self, "cubes", tuple(self.cubes))
        in_mask = (1 << self.n_in) - 1
        out_mask = (1 << self.n_out) - 1
        for c in self.cubes:
            if c.care & ~in_mask or c.outputs & ~out_mask:
                raise ValueError(f"cube {c} does not fit {self.n_in} inputs / {self.n_out} outputs")

    @property
    def cube_count(self) -> int:
        return len(self.cubes)

    @property
    def disjunctions(self) -> int:
        """Product terms counted once per output they feed."""
        return sum(c.outputs.bit_count() for c in self.cubes)

    def evaluate(self, x: int) -> int:
        out = 0
        for c in self.cubes:
            if (x & c.care) == c.value:
                out |= c.outputs
        return out

    @cached_property
    def truth_table(self) -> np.ndarray:
        """Output word for every input assignment, as ``uint64``."""
        n = self.n_in
        out = np.zeros((2,) * n, dtype=np.uint64)
        for c in self.cubes:
            idx = tuple(
                (c.value >> (n - 1 - k)) & 1 if (c.care >> (n - 1 - k)) & 1 else slice(None)
                for k in range(n))
            out[idx] |= np.uint64(c.outputs)
        return out.reshape(-1)

    def function(self) -> TruthFunction:
        return TruthFunction(self.n_in, self.n_out, self.truth_table.copy())

    def without(self, index: int) -> "Cover":
        cubes = self.cubes[:index] + self.cubes[index + 1:]
        return Cover(self.n_in, self.n_out, cubes, self.provenance)


@lru_cache(maxsize=None)
def _submasks(mask: int) -> np.ndarray:
    out = np.zeros(1, dtype=np.int64)
    bit = 0
    while mask >> bit:
        if (mask >> bit) & 1:
            out = np.concatenate([out, out | (1 << bit)])
        bit += 1
    out.setflags(write=False)
    return out


def check_equivalence(c: Cover, f: TruthFunction) -> bool:
    """True iff ``c`` implements ``f`` on all ``2**n_in`` assignments."""
    if (c.n_in, c.n_out) != (f.n_in, f.n_out):
        raise ValueError(
            f"arity mismatch: cover {c.n_in}->{c.n_out}, function {f.n_in}->{f.n_out}")
    return bool(np.array_equal(c.truth_table, f.table))


def full_dnf(f: TruthFunction) -> Cover:
    """One fully specified cube per assignment with a nonzero output word."""
    care = (1 << f.n_in) - 1
    xs = np.flatnonzero(f.table)
    cubes = [Cube(care, int(x), int(f.table[x])) for x in xs]
    return Cover(f.n_in, f.n_out, cubes, Provenance.FULL_DNF)


# -- prime implicants -------------------------------------------------------
#
# Implicants sharing a set of free inputs M live in one array shaped like the
# truth table with the axes in M collapsed to length 1.  Axis k stands for
# input bit n-1-k.  Entries hold the AND of the output words over the cube, so
# a nonzero entry is an implicant of every output in that word.

def _implicant_lattice(n: int, words: np.ndarray) -> dict[int, np.ndarray]:
    lattice = {0: words.reshape((2,) * n)}
    frontier = [0]
    while frontier:
        nxt = []
        for free in frontier:
            arr = lattice[free]
            for bit in range(n):
                grown = free | (1 << bit)
                if free & (1 << bit) or grown in lattice:
                    continue
                axis = n - 1 - bit
                lo = [slice(None)] * n
                hi = [slice(None)] * n
                lo[axis] = slice(0, 1)
                hi[axis] = slice(1, 2)
                merged = arr[tuple(lo)] & arr[tuple(hi)]
                if merged.any():
                    lattice[grown] = merged
                    nxt.append(grown)
        frontier = nxt
    return lattice


def prime_implicants(n: int, words: np.ndarray):
    """Multi-output prime implicants of a word table.

    Returns ``(care, value, outputs)`` arrays.  A cube is prime when no cube
    with one more free input implies every output it implies.
    """
    lattice = _implicant_lattice(n, words)
    full = (1 << n) - 1
    weights = np.array([1 << (n - 1 - k) for k in range(n)], dtype=np.int64)
    cares, values, outs = [], [], []
    for free, arr in lattice.items():
        ok = arr != 0
        for bit in range(n):
            grown = free | (1 << bit)
            if free & (1 << bit) or grown not in lattice:
                continue
            bigger = lattice[grown]
            ok &= (bigger & arr) != arr
        coords = np.nonzero(ok)
        if not len(coords[0]):
            continue
        vals = np.zeros(len(coords[0]), dtype=np.int64)
        for k, cidx in enumerate(coords):
            vals += cidx.astype(np.int64) * weights[k]
        cares.append(np.full(len(vals), full & ~free, dtype=np.int64))
        values.append(vals)
        outs.append(arr[ok].astype(np.int64))
    if not cares:
        empty = np.zeros(0, dtype=np.int64)
        return empty, empty, empty
    return np.concatenate(cares), np.concatenate(values), np.concatenate(outs)


def _order_keys(n: int, care: np.ndarray, value: np.ndarray) -> np.ndarray:
    # Base-3 encoding of the literal string, column 0 most significant and
    # '-' < '0' < '1' as in ASCII.
    key = np.zeros(len(care), dtype=np.int64)
    for j in range(n):
        digit = np.where((care >> j) & 1, 1 + ((value >> j) & 1), 0)
        key = key * 3 + digit
    return key


def _incidence(n: int, care, value, index_of):
    rows, lengths = [], []
    full = (1 << n) - 1
    for c, v in zip(care.tolist(), value.tolist()):
        r = index_of[v | _submasks(full & ~c)]
        rows.append(r)
        lengths.append(len(r))
    return rows, np.array(lengths, dtype=np.int64)


def _expand_to_prime(cube: Cube, n: int, table: np.ndarray) -> Cube:
    care, value = cube.care, cube.value
    o = np.uint64(cube.outputs)
    for j in range(n):
        bit = 1 << j
        if not care & bit:
            continue
        trial_care, trial_value = care & ~bit, value & ~bit
        pts = trial_value | _submasks(((1 << n) - 1) & ~trial_care)
        if np.all((table[pts] & o) == o):
            care, value = trial_care, trial_value
    return Cube(care, value, cube.outputs)


# -- exact ------------------------------------------------------------------

def minimize_exact(f: TruthFunction, time_limit: float | None = None) -> Cover:
    """Minimum multi-output cover.

    The primary objective is the number of per-output disjunctions, the
    secondary one the number of distinct cubes.  Candidates are all
    multi-output primes; the covering problem is solved as a 0/1 program.
    """
    n = f.n_in
    if n > EXACT_MAX_INPUTS:
        raise ArityError(
            f"exact minimization supports at most {EXACT_MAX_INPUTS} inputs "
            f"(got {n}); use minimize_heuristic")
    if not f.table.any():
        return Cover(n, f.n_out, (), Provenance.EXACT)
    care, value, outs = prime_implicants(n, f.table)
    n_primes = len(care)

    # row numbering of (minterm, output) pairs
    index_of = []
    n_rows = 0
    for t in range(f.n_out):
        idx = np.full(1 << n, -1, dtype=np.int64)
        on = f.onset(t)
        idx[on] = n_rows + np.arange(len(on))
        n_rows += len(on)
        index_of.append(idx)

    y_prime, y_out = [], []
    for p in range(n_primes):
        for t in range(f.n_out):
            if (outs[p] >> t) & 1:
                y_prime.append(p)
                y_out.append(t)
    n_y = len(y_prime)
    n_var = n_primes + n_y

    cov_r, cov_c = [], []
    full = (1 << n) - 1
    for k, (p, t) in enumerate(zip(y_prime, y_out)):
        pts = int(value[p]) | _submasks(full & ~int(care[p]))
        r = index_of[t][pts]
        cov_r.append(r)
        cov_c.append(np.full(len(r), n_primes + k))
    cov_r = np.concatenate(cov_r)
    cov_c = np.concatenate(cov_c)
    a_cov = coo_matrix((np.ones(len(cov_r)), (cov_r, cov_c)), shape=(n_rows, n_var)).tocsr()

    link_r = np.concatenate([np.arange(n_y), np.arange(n_y)])
    link_c = np.concatenate([n_primes + np.arange(n_y), np.array(y_prime, dtype=np.int64)])
    link_v = np.concatenate([np.ones(n_y), -np.ones(n_y)])
    a_link = coo_matrix((link_v, (link_r, link_c)), shape=(n_y, n_var)).tocsr()

    weight = n_primes + 1
    cost = np.concatenate([np.ones(n_primes), np.full(n_y, float(weight))])
    options = {} if time_limit is None else {"time_limit": time_limit}
    res = milp(cost,
               constraints=[LinearConstraint(a_cov, 1, np.inf),
                            LinearConstraint(a_link, -np.inf, 0)],
               integrality=np.ones(n_var), bounds=Bounds(0, 1), options=options)
    if res.status != 0:
        raise RuntimeError(f"exact covering did not reach optimality: {res.message}")
    chosen = res.x > 0.5
    masks: dict[int, int] = {}
    for k in np.flatnonzero(chosen[n_primes:]):
        p = y_prime[k]
        masks[p] = masks.get(p, 0) | (1 << y_out[k])
    cubes = [_expand_to_prime(Cube(int(care[p]), int(value[p]), o), n, f.table)
             for p, o in masks.items()]
    return Cover(n, f.n_out, sorted(cubes), Provenance.EXACT)


# -- heuristic --------------------------------------------------------------

def _greedy_cover(n, onset, care, value, keys):
    index_of = np.full(1 << n, -1, dtype=np.int64)
    index_of[onset] = np.arange(len(onset))
    rows, lengths = _incidence(n, care, value, index_of)
    n_primes = len(rows)
    flat = np.concatenate(rows)
    owner = np.repeat(np.arange(n_primes), lengths)
    hits = np.bincount(flat, minlength=len(onset))

    selected = np.zeros(n_primes, dtype=bool)
    selected[np.unique(owner[hits[flat] == 1])] = True
    covered = np.zeros(len(onset), dtype=bool)
    for p in np.flatnonzero(selected):
        covered[rows[p]] = True

    heap = [(-int(lengths[p]), int(keys[p]), int(p))
            for p in range(n_primes) if not selected[p]]
    heapq.heapify(heap)
    remaining = int((~covered).sum())
    while remaining:
        neg_gain, key, p = heapq.heappop(heap)
        gain = int((~covered[rows[p]]).sum())
        if gain == 0:
            continue
        if gain < -neg_gain:
            heapq.heappush(heap, (-gain, key, p))
            continue
        selected[p] = True
        covered[rows[p]] = True
        remaining -= gain

    # irredundant pass: drop cubes whose minterms are all covered elsewhere,
    # smallest cubes first
    count = np.zeros(len(onset), dtype=np.int64)
    for p in np.flatnonzero(selected):
        count[rows[p]] += 1
    for p in sorted(np.flatnonzero(selected).tolist(), key=lambda q: (lengths[q], -keys[q])):
        if np.all(count[rows[p]] >= 2):
            count[rows[p]] -= 1
            selected[p] = False
    return np.flatnonzero(selected)


def minimize_heuristic(f: TruthFunction) -> Cover:
    """Prime generation per output, greedy covering, irredundant pass.

    Cubes chosen for several outputs are merged into one shared product term.
    The result is deterministic.
    """
    n = f.n_in
    if n > HEURISTIC_MAX_INPUTS:
        raise ArityError(f"heuristic minimization supports at most {HEURISTIC_MAX_INPUTS} inputs")
    shared: dict[tuple[int, int], int] = {}
    for t in range(f.n_out):
        column = f.output_bits(t).astype(np.uint8)
        onset = np.flatnonzero(column)
        if not len(onset):
            continue
        care, value, _ = prime_implicants(n, column)
        keys = _order_keys(n, care, value)
        for p in _greedy_cover(n, onset, care, value, keys):
            cv = (int(care[p]), int(value[p]))
            shared[cv] = shared.get(cv, 0) | (1 << t)
    cubes = sorted(Cube(c, v, o) for (c, v), o in shared.items())
    return Cover(n, f.n_out, cubes, Provenance.HEURISTIC)


METHODS = ("auto", "exact", "heuristic", "none")


def minimize(f: TruthFunction, method: str = "auto") -> Cover:
    """Dispatch to a minimizer; ``auto`` is exact up to ``EXACT_MAX_INPUTS``."""
    if method == "auto":
        method = "exact" if f.n_in <= EXACT_MAX_INPUTS else "heuristic"
    if method == "exact":
        return minimize_exact(f)
    if method == "heuristic":
        return minimize_heuristic(f)
    if method == "none":
        return full_dnf(f)
    raise ValueError(f"unknown minimizer {method!r}; expected one of {METHODS}")
