"""Oracle checks of generated netlists and reproduction of reference counts."""
from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field

import numpy as np

from . import reference
from .compose import BlockShape, default_group_width
from .emit import StatsReport, stats_for
from .netlist import Netlist, evaluate_many
from .pipeline import build
from .tables import ArithMode

EXHAUSTIVE_MAX_INPUT_BITS = 24
MISMATCH_LIMIT = 16
_CHUNK = 1 << 20


@dataclass(frozen=True)
class VerifyConfig:
    n: int
    m: int
    mode: ArithMode
    strategy: str = "random"
    trials: int = 10**6
    seed: int = 0
    boundary: bool = True
    workers: int = 1

    def __post_init__(self):
        object.__setattr__(self, "mode", ArithMode.parse(self.mode))
        if self.strategy not in ("exhaustive", "random"):
            raise ValueError(f"unknown strategy {self.strategy!r}")
        if self.strategy == "exhaustive" and 2 * self.n > EXHAUSTIVE_MAX_INPUT_BITS:
            raise ValueError(
                f"exhaustive verification limited to 2n <= {EXHAUSTIVE_MAX_INPUT_BITS} (n={self.n})")


@dataclass(frozen=True)
class VerifyResult:
    cases: int
    mismatches: tuple = field(default=())

    @property
    def passed(self) -> bool:
        return not self.mismatches


def boundary_values(n: int) -> np.ndarray:
    vals = {0, 1, (1 << n) - 1}
    for i in range(n):
        vals.update((1 << i, (1 << i) - 1))
    return np.array(sorted(vals), dtype=np.uint64)


def _check_chunk(nl: Netlist, a: np.ndarray, b: np.ndarray, low_mask):
    got = evaluate_many(nl, a, b)
    want = a * b
    if low_mask is not None:
        want &= low_mask
    bad = np.flatnonzero(got != want)
    return len(a), [(int(a[i]), int(b[i]), int(got[i]), int(want[i]))
                    for i in bad[:MISMATCH_LIMIT]]


def _chunks(cfg: VerifyConfig):
    n = cfg.n
    if cfg.strategy == "exhaustive":
        total = 1 << (2 * n)
        for start in range(0, total, _CHUNK):
            x = np.arange(start, min(start + _CHUNK, total), dtype=np.uint64)
            yield x & np.uint64((1 << n) - 1), x >> np.uint64(n)
    else:
        rng = np.random.default_rng(cfg.seed)
        left = cfg.trials
        while left > 0:
            size = min(left, _CHUNK)
            yield (rng.integers(0, 1 << n, size=size, dtype=np.uint64),
                   rng.integers(0, 1 << n, size=size, dtype=np.uint64))
            left -= size
    if cfg.boundary and cfg.strategy == "random":
        v = boundary_values(n)
        yield np.repeat(v, len(v)), np.tile(v, len(v))


def run_verify(nl: Netlist, cfg: VerifyConfig) -> VerifyResult:
    """Compare the netlist against ``a*b`` (mod ``2**n`` in LOW_HALF mode)."""
    plan = nl.plan
    if (plan.n, plan.m, plan.mode) != (cfg.n, cfg.m, cfg.mode):
        raise ValueError(
            f"netlist is {plan.n}x{plan.n} m={plan.m} {plan.mode.value}, "
            f"config asks for {cfg.n}x{cfg.n} m={cfg.m} {cfg.mode.value}")
    low_mask = np.uint64((1 << cfg.n) - 1) if cfg.mode is ArithMode.LOW_HALF else None
    if cfg.workers > 1:
        with ThreadPoolExecutor(cfg.workers) as pool:
            parts = list(pool.map(lambda ab: _check_chunk(nl, *ab, low_mask), _chunks(cfg)))
    else:
        parts = [_check_chunk(nl, a, b, low_mask) for a, b in _chunks(cfg)]
    cases = sum(p[0] for p in parts)
    mismatches = sorted({m for p in parts for m in p[1]})[:MISMATCH_LIMIT]
    return VerifyResult(cases, tuple(mismatches))


def drop_cube(nl: Netlist, shape: BlockShape, index: int) -> Netlist:
    """Fault injection: the netlist with one cube removed from a block cover."""
    return nl.replace_cover(shape, nl.covers[shape].without(index))


# -- reference count reproduction ------------------------------------------------

MATCH = "MATCH"
TOLERANCE = "TOLERANCE"
KNOWN = "KNOWN-DISCREPANCY"


@dataclass(frozen=True)
class TableDiff:
    table: str
    mode: str
    row: int
    column: str
    computed: int
    published: int
    status: str
    note: str = ""


def _parse_rows(rows) -> set[int] | None:
    if rows is None:
        return None
    out = set()
    for r in rows:
        if isinstance(r, int):
            out.add(r)
            continue
        left, _, right = str(r).lower().partition("x")
        if not left.isdigit() or (right and right != left):
            raise ValueError(f"bad row {r!r}; expected e.g. '14x14'")
        out.add(int(left))
    return out


def _status_exact(key, computed, published):
    if computed == published:
        return MATCH, ""
    return KNOWN, reference.KNOWN_DISCREPANCIES.get(key, "differs from published value")


def _status_bound(key, computed, published):
    if computed == published:
        return MATCH, ""
    if computed < published:
        return TOLERANCE, "below the published value"
    return KNOWN, reference.KNOWN_DISCREPANCIES.get(key, "above the published value")


def reproduce_tables(rows=None, minimized: bool = True, minimizer: str = "auto"):
    """Recompute block and adder counts and diff them against the published ones.

    Returns ``(reports, diffs)``.  ``rows`` restricts to operand widths such as
    ``["14x14"]``; ``minimized=False`` skips minimizing the large blocks.
    """
    wanted = _parse_rows(rows)
    reports: list[StatsReport] = []
    diffs: list[TableDiff] = []
    for mode in ("full", "lowhalf"):
        for w, published in reference.BLOCK_DNF[mode].items():
            if wanted is not None and w not in wanted:
                continue
            design = build(w, w, mode, minimizer=minimizer if minimized else "none")
            rep = stats_for(design)
            reports.append(rep)
            status, note = _status_exact(("blocks", mode, w, "dnf"), rep.dnf_count, published)
            diffs.append(TableDiff("blocks", mode, w, "dnf", rep.dnf_count, published, status, note))
            if minimized:
                got = rep.minimized_count["disjunctions"]
                ref = reference.BLOCK_MINIMIZED[mode][w]
                if got == ref:
                    status, note = MATCH, ""
                elif got <= ref * reference.MINIMIZED_TOLERANCE:
                    status, note = TOLERANCE, f"within {reference.MINIMIZED_TOLERANCE}x"
                else:
                    status, note = KNOWN, f"above {reference.MINIMIZED_TOLERANCE}x"
                diffs.append(TableDiff("blocks", mode, w, "minimized", got, ref, status, note))
    for mode in ("full", "lowhalf"):
        for n, (common, reduced) in reference.ADDERS[mode].items():
            if wanted is not None and n not in wanted:
                continue
            design = build(n, default_group_width(n), mode, minimizer=minimizer)
            rep = stats_for(design)
            reports.append(rep)
            status, note = _status_exact(("adders", mode, n, "common"), rep.common_adders, common)
            diffs.append(TableDiff("adders", mode, n, "common", rep.common_adders, common, status, note))
            status, note = _status_bound(("adders", mode, n, "reduced"), rep.reduced_adders, reduced)
            diffs.append(TableDiff("adders", mode, n, "reduced", rep.reduced_adders, reduced, status, note))
    return reports, diffs
