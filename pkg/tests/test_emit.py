import json

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

import verilog_sim
from monomul.emit import PlaParseError, read_pla, stats_for, write_pla, write_stats, write_verilog
from monomul.minimize import Cover, Cube, full_dnf
from monomul.pipeline import block_cover, build
from monomul.tables import block_truth_table


@st.composite
def covers(draw, max_in=10, max_out=6):
    n_in = draw(st.integers(1, max_in))
    n_out = draw(st.integers(1, max_out))
    cubes = []
    for _ in range(draw(st.integers(0, 12))):
        care = draw(st.integers(0, (1 << n_in) - 1))
        value = draw(st.integers(0, (1 << n_in) - 1)) & care
        out = draw(st.integers(1, (1 << n_out) - 1))
        cubes.append(Cube(care, value, out))
    return Cover(n_in, n_out, cubes)


def test_pla_and_gate():
    c = full_dnf(block_truth_table(1, 1, 1))
    assert write_pla(c) == ".i 2\n.o 1\n.p 1\n11 1\n.e"


def test_pla_2x2_exact():
    text = write_pla(block_cover(2, 2, 4, "exact"))
    body = [line for line in text.splitlines() if not line.startswith(".")]
    assert len(body) == 7
    assert sum(line.split()[1].count("1") for line in body) == 8


@settings(max_examples=200, deadline=None)
@given(covers())
def test_pla_roundtrip(c):
    assert read_pla(write_pla(c)) == c


@pytest.mark.parametrize("text, lineno", [
    (".i 2\n.o 1\n11 2\n.e", 3),
    (".i 3\n.o 1\n11 1\n.e", 3),
    (".i 2\n.o 1\n1x 1\n.e", 3),
    (".i 2\n.o 1\n.ilb x y\n11 1\n.e", 3),
    (".i 2\n.o 1\n.type fr\n", 3),
    ("11 1\n", 1),
    (".i 2\n.o 2\n11 1\n", 3),
])
def test_pla_errors(text, lineno):
    with pytest.raises(PlaParseError) as err:
        read_pla(text)
    assert err.value.lineno == lineno
    assert f"line {lineno}" in str(err.value)


def test_pla_accepts_comments_and_type():
    c = read_pla("# and gate\n.i 2\n.o 1\n.type f\n.p 1\n11 1\n.e\n")
    assert c.cubes == (Cube(3, 3, 1),)


def test_verilog_14x14_first_summand():
    text = write_verilog(build(14, 4, "full").netlist)
    s0 = next(line for line in text.splitlines() if " s0 = " in line)
    assert s0.count("pp_") == 4
    assert "{pp_4_4, 2'b0, pp_2_4, pp_1_3, pp_1_1}" in s0


def test_verilog_8x8_single_block_module():
    text = write_verilog(build(8, 4, "full").netlist)
    assert text.count("\nmodule mono_mul_") == 1
    assert "module mono_mul_4x4_8 (" in text
    assert "module mul_8x8_full_m4 (" in text


def test_verilog_single_block_has_no_adders():
    text = write_verilog(build(4, 4, "full").netlist)
    assert " + " not in text
    assert "mono_mul_4x4_8 u_pp_1_1" in text


def test_verilog_deterministic():
    d = build(14, 4, "lowhalf", pre_adds=True)
    assert write_verilog(d.netlist) == write_verilog(build(14, 4, "lowhalf", pre_adds=True).netlist)


@pytest.mark.parametrize("n, m, mode, pre", [
    (8, 4, "full", False), (10, 5, "lowhalf", False), (14, 4, "full", True),
    (14, 4, "lowhalf", True), (4, 4, "full", False)])
def test_verilog_simulates_correctly(n, m, mode, pre):
    nl = build(n, m, mode, pre_adds=pre).netlist
    modules = verilog_sim.parse(write_verilog(nl))
    rng = np.random.default_rng(0)
    pairs = [(0, 0), (2**n - 1, 2**n - 1)] + [tuple(map(int, rng.integers(0, 2**n, 2))) for _ in range(60)]
    for a, b in pairs:
        assert verilog_sim.run(modules, nl.name, a, b) == (a * b) % (1 << nl.width_r)


def test_verilog_block_module_is_exact():
    nl = build(6, 3, "full").netlist
    modules = verilog_sim.parse(write_verilog(nl))
    for shape in nl.covers:
        w_a, w_b, out_w = shape
        name = f"mono_mul_{w_a}x{w_b}_{out_w}"
        for a in range(1 << w_a):
            for b in range(1 << w_b):
                assert verilog_sim.run(modules, name, a, b) == (a * b) % (1 << out_w)


def test_stats_empty():
    assert write_stats([]) == "[]"


def test_stats_14x14_both_modes():
    data = json.loads(write_stats([stats_for(build(14, 4, "full")), stats_for(build(14, 4, "lowhalf"))]))
    assert [(r["common_adders"], r["reduced_adders"]) for r in data] == [(15, 6), (9, 6)]
    assert list(data[0]) == ["n", "m", "mode", "dnf_count", "minimized_count", "common_adders",
                             "reduced_adders", "pre_adds", "tree_depth", "block_shapes"]
    assert data[0]["tree_depth"] == 3


def test_stats_block_dnf_column():
    reports = [stats_for(build(w, w, "full", minimizer="none")) for w in range(2, 9)]
    assert [r.dnf_count for r in reports] == [14, 111, 678, 3733, 18953, 92334, 434660]
    assert all(r.minimized_count["disjunctions"] == r.dnf_count for r in reports)


def test_stats_csv():
    text = write_stats([stats_for(build(8, 4, "full"))], "csv")
    header, row = text.splitlines()
    assert header.split(",")[:5] == ["n", "m", "mode", "dnf_count", "minimized_count_cubes"]
    assert row.endswith("4x4x8")
    with pytest.raises(ValueError):
        write_stats([], "xml")
