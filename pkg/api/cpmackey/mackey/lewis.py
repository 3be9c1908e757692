# Plain-text Lewis diagrams: fixed level on top, underlying level below,
# followed by the structure matrices.
from typing import List, Optional

from cpmackey.abgrp import FgAbGroup, format_matrix
from cpmackey.mackey.functor import CpMackeyFunctor, MackeyHom


def describe_group(g: FgAbGroup) -> str:
    factors = g.invariant_factors()
    if not factors:
        return "0"
    return " + ".join("Z" if d == 0 else f"Z/{d}" for d in factors)


def _presentation(g: FgAbGroup) -> str:
    rels = g.relations
    if rels.cols == 0:
        return f"Z^{g.generator_count}" if g.generator_count else "0"
    return "cokernel " + format_matrix(rels).replace("\n", "\n" + " " * 9)


def _block(label: str, body: str) -> List[str]:
    return [f"{label}:"] + ["    " + line for line in body.splitlines()]


def render_functor(m: CpMackeyFunctor, name: Optional[str] = None) -> str:
    fixed = describe_group(m.fixed)
    underlying = describe_group(m.underlying)
    width = max(len(fixed), len(underlying))
    lines = [f"C_{m.prime}-Mackey functor" + (f" {name}" if name else "")]
    lines.append(f"  C_{m.prime}/C_{m.prime} : {fixed.ljust(width)}")
    lines.append("   res |  ^ tr")
    lines.append("       v  |")
    lines.append(f"  C_{m.prime}/e   : {underlying.ljust(width)}  (conj)")
    lines.append("")
    lines += _block("fixed", _presentation(m.fixed))
    lines += _block("underlying", _presentation(m.underlying))
    lines += _block("res", format_matrix(m.res.matrix))
    lines += _block("tr", format_matrix(m.tr.matrix))
    lines += _block("conj", format_matrix(m.conj.matrix))
    return "\n".join(lines)


def render_hom(f: MackeyHom) -> str:
    lines = [
        f"C_{f.prime}-Mackey homomorphism "
        f"{describe_group(f.source.fixed)} / {describe_group(f.source.underlying)}"
        f" -> {describe_group(f.target.fixed)} / {describe_group(f.target.underlying)}"
    ]
    lines += _block("fix", format_matrix(f.fixed_map.matrix))
    lines += _block("und", format_matrix(f.underlying_map.matrix))
    return "\n".join(lines)


def format_invariants(m: CpMackeyFunctor) -> str:
    """Single machine-readable line: `fixed: d1,d2 / underlying: d1,...`."""
    fixed = ",".join(str(d) for d in m.fixed.invariant_factors())
    underlying = ",".join(str(d) for d in m.underlying.invariant_factors())
    return f"fixed: {fixed} / underlying: {underlying}"
