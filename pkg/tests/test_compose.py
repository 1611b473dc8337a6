import numpy as np
import pytest
from hypothesis import given, strategies as st

from monomul.compose import (block_requirements, default_group_width, plan_partial_products,
                             split_operand)
from monomul.tables import ArithMode


def term_sum(plan, a, b):
    """Vectorized sum of the planned terms (uint64; exact for n <= 32)."""
    u = np.uint64
    total = np.zeros_like(a)
    offs = plan.split.offsets
    w = plan.split.group_widths
    for t in plan.terms:
        ga = (a >> u(offs[t.i - 1])) & u((1 << w[t.i - 1]) - 1)
        gb = (b >> u(offs[t.j - 1])) & u((1 << w[t.j - 1]) - 1)
        total += ((ga * gb) & u((1 << t.eff_width) - 1)) << u(t.shift)
    if plan.mode is ArithMode.LOW_HALF:
        total &= u((1 << plan.n) - 1)
    return total


@pytest.mark.parametrize("n, m, widths", [
    (14, 4, (4, 4, 4, 2)),
    (8, 4, (4, 4)),
    (30, 5, (5, 5, 5, 5, 5, 5)),
])
def test_split_examples(n, m, widths):
    s = split_operand(n, m)
    assert s.group_widths == widths
    assert s.k == len(widths)


@pytest.mark.parametrize("n, m", [(3, 4), (12, 1), (12, 9), (40, 5)])
def test_split_errors(n, m):
    with pytest.raises(ValueError):
        split_operand(n, m)


@given(st.integers(2, 32).flatmap(lambda n: st.tuples(
    st.just(n), st.integers(2, min(8, n)), st.integers(0, 2**n - 1))))
def test_split_join_roundtrip(args):
    n, m, x = args
    s = split_operand(n, m)
    assert sum(s.group_widths) == n
    assert all(w <= m for w in s.group_widths)
    assert all(w == m for w in s.group_widths[:-1])
    assert s.join(s.groups(x)) == x


def test_default_group_width():
    assert [default_group_width(n) for n in (10, 20, 30, 14, 32, 3)] == [5, 5, 5, 4, 4, 3]


def test_plan_14_full():
    p = plan_partial_products(14, 4, "full")
    assert len(p.terms) == 16
    assert sorted({t.shift for t in p.terms}) == [0, 4, 8, 12, 16, 20, 24]
    assert len(p.terms) - 1 == 15
    assert [(t.i, t.j) for t in p.terms] == sorted((t.i, t.j) for t in p.terms)
    assert p.output_width == 28 and p.padded_width == 16


def test_plan_14_lowhalf():
    p = plan_partial_products(14, 4, ArithMode.LOW_HALF)
    assert len(p.terms) == 10
    kept = {(t.i, t.j) for t in p.terms}
    all_pairs = {(i, j) for i in range(1, 5) for j in range(1, 5)}
    assert all_pairs - kept == {(2, 4), (3, 3), (3, 4), (4, 2), (4, 3), (4, 4)}
    by = {(t.i, t.j): t for t in p.terms}
    assert by[1, 4].eff_width == 2
    assert by[1, 3].eff_width == 6
    assert p.output_width == 14


def test_plan_32_lowhalf():
    p = plan_partial_products(32, 4, "lowhalf")
    assert len(p.terms) == 36


def test_block_requirements():
    assert block_requirements(plan_partial_products(14, 4, "full")) == {
        (4, 4, 8), (4, 2, 6), (2, 4, 6), (2, 2, 4)}
    assert block_requirements(plan_partial_products(8, 4, "full")) == {(4, 4, 8)}
    assert (4, 2, 2) in block_requirements(plan_partial_products(14, 4, "lowhalf"))


@pytest.mark.parametrize("n", range(6, 33, 2))
@pytest.mark.parametrize("m", [3, 4, 5])
def test_term_count_formulas(n, m):
    full = plan_partial_products(n, m, "full")
    low = plan_partial_products(n, m, "lowhalf")
    k = full.k
    assert len(full.terms) == k * k
    assert all(t.eff_width == t.w_i + t.w_j for t in full.terms)
    assert all(t.shift < n and t.eff_width == min(t.w_i + t.w_j, n - t.shift) for t in low.terms)
    if n % m == 0:
        assert len(full.terms) - len(low.terms) == k * (k - 1) // 2


@pytest.mark.parametrize("n", range(2, 13))
@pytest.mark.parametrize("mode", list(ArithMode))
def test_value_identity_exhaustive(n, mode):
    # n >= 11 takes seconds per m; the netlist and acceptance suites cover m=5 there
    for m in sorted(({2, 3, 4, 5} if n <= 10 else {4}) & set(range(2, n + 1))):
        plan = plan_partial_products(n, m, mode)
        x = np.arange(1 << (2 * n), dtype=np.uint64)
        a, b = x & np.uint64((1 << n) - 1), x >> np.uint64(n)
        want = a * b if mode is ArithMode.FULL_WIDTH else (a * b) & np.uint64((1 << n) - 1)
        assert np.array_equal(term_sum(plan, a, b), want)


@pytest.mark.parametrize("n", range(14, 33, 2))
@pytest.mark.parametrize("mode", list(ArithMode))
def test_value_identity_random(n, mode):
    rng = np.random.default_rng(n)
    for m in (4, 5):
        plan = plan_partial_products(n, m, mode)
        a = rng.integers(0, 1 << n, 10**6, dtype=np.uint64)
        b = rng.integers(0, 1 << n, 10**6, dtype=np.uint64)
        want = a * b if mode is ArithMode.FULL_WIDTH else (a * b) & np.uint64((1 << n) - 1)
        assert np.array_equal(term_sum(plan, a, b), want)
        # wide-integer spot check against Python ints
        for ai, bi in zip(a[:200].tolist(), b[:200].tolist()):
            r = sum(plan.term_values(ai, bi))
            assert r % (1 << plan.output_width) == (ai * bi) % (1 << plan.output_width)
