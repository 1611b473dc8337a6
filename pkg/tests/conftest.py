import itertools

import pytest

ACCEPTANCE_LINES = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)


def brute_force_primes(n, on):
    """Single-output primes by enumerating every cube over n inputs."""
    on = set(on)
    cubes = []
    for lits in itertools.product("01-", repeat=n):
        pts = [0]
        for j, ch in enumerate(lits):
            if ch == "1":
                pts = [p | (1 << j) for p in pts]
            elif ch == "-":
                pts = pts + [p | (1 << j) for p in pts]
        if all(p in on for p in pts):
            cubes.append((lits, frozenset(pts)))
    return [(lits, pts) for lits, pts in cubes
            if not any(pts < other for _, other in cubes)]


def brute_force_min_cover(n, on):
    """Smallest number of cubes covering ``on`` exactly, by subset enumeration."""
    if not on:
        return 0
    primes = brute_force_primes(n, on)
    target = frozenset(on)
    for size in range(1, len(primes) + 1):
        for combo in itertools.combinations(primes, size):
            if frozenset().union(*(p for _, p in combo)) == target:
                return size
    raise AssertionError("no cover found")


@pytest.fixture
def popcount_oracle():
    def oracle(w_a, w_b, out_width):
        total = 0
        for a in range(1 << w_a):
            for b in range(1 << w_b):
                total += bin((a * b) % (1 << out_width)).count("1")
        return total
    return oracle
