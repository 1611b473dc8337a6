"""Interpreter for the small Verilog subset produced by ``write_verilog``."""
import re

_MODULE = re.compile(r"module (\w+) \((.*?)\);(.*?)endmodule", re.S)
_PORT = re.compile(r"(input|output)\s+wire\s+(?:\[(\d+):0\]\s+)?(\w+)")
_DECL = re.compile(r"wire\s+(?:\[(\d+):0\]\s+)?(\w+)(?:\s*=\s*(.*))?$")
_INST = re.compile(r"(\w+) (\w+) \(\.a\((.*?)\), \.b\((.*?)\), \.r\((\w+)\)\)$")
_ASSIGN = re.compile(r"assign (\w+)(?:\[(\d+)\])? = (.*)$")


class Module:
    def __init__(self, name, ports, body):
        self.name = name
        self.widths = {}
        for _, msb, pname in _PORT.findall(ports):
            self.widths[pname] = int(msb) + 1 if msb else 1
        self.stmts = [s.strip() for s in body.split(";") if s.strip()]


def parse(text):
    return {m.group(1): Module(m.group(1), m.group(2), m.group(3)) for m in _MODULE.finditer(text)}


def _eval(expr, env, widths):
    expr = expr.strip()
    if expr.startswith("{"):
        val = 0
        for part in [p.strip() for p in expr[1:-1].split(",")]:
            v, w = _operand(part, env, widths)
            val = (val << w) | v
        return val
    if "+" in expr:
        return sum(_operand(p, env, widths)[0] for p in expr.split("+"))
    if "|" in expr:
        return int(any(_operand(p, env, widths)[0] for p in expr.split("|")))
    if "&" in expr:
        return int(all(_operand(p, env, widths)[0] for p in expr.split("&")))
    return _operand(expr, env, widths)[0]


def _operand(tok, env, widths):
    tok = tok.strip()
    m = re.fullmatch(r"(\d+)'b([01]+)", tok)
    if m:
        return int(m.group(2), 2), int(m.group(1))
    if tok.startswith("~"):
        v, _ = _operand(tok[1:], env, widths)
        return 1 - v, 1
    m = re.fullmatch(r"(\w+)\[(\d+)(?::(\d+))?\]", tok)
    if m:
        hi, lo = int(m.group(2)), int(m.group(3) if m.group(3) else m.group(2))
        return (env[m.group(1)] >> lo) & ((1 << (hi - lo + 1)) - 1), hi - lo + 1
    return env[tok], widths[tok]


def run(modules, name, a, b):
    mod = modules[name]
    env = {"a": a, "b": b}
    widths = dict(mod.widths)
    r_bits = {}
    for st in mod.stmts:
        st = " ".join(st.split())
        if st.startswith("input") or st.startswith("output"):
            continue
        m = _DECL.match(st)
        if m and st.startswith("wire"):
            w = int(m.group(1)) + 1 if m.group(1) else 1
            widths[m.group(2)] = w
            if m.group(3) is not None:
                env[m.group(2)] = _eval(m.group(3), env, widths) & ((1 << w) - 1)
            continue
        m = _INST.match(st)
        if m:
            sub, _, ea, eb, out = m.groups()
            env[out] = run(modules, sub, _eval(ea, env, widths), _eval(eb, env, widths))
            continue
        m = _ASSIGN.match(st)
        if m:
            target, bit, expr = m.groups()
            if bit is None:
                return _eval(expr, env, widths) & ((1 << mod.widths["r"]) - 1)
            r_bits[int(bit)] = _eval(expr, env, widths)
            continue
        raise ValueError(f"unparsed statement: {st}")
    return sum(v << t for t, v in r_bits.items())
