import logging
from typing import List

from cpmackey.abgrp import (
    AbHom,
    FgAbGroup,
    IntegerMatrix,
    block_diagonal,
    direct_sum_ab,
    tensor_ab,
)
from cpmackey.mackey import (
    CpMackeyFunctor,
    MackeyHom,
    burnside,
    make_cp_mackey_functor,
    make_mackey_hom,
)
from cpmackey.mackey.functor import check_same_prime

logger = logging.getLogger(__name__)


def _fixed_level(m: CpMackeyFunctor, n: CpMackeyFunctor) -> FgAbGroup:
    """(F(M) (x) F(N)) + (U(M) (x) U(N)) modulo Frobenius reciprocity and the orbit relation.

    Generators: the fixed-tensor-fixed block first, then the
    underlying-tensor-underlying block, each in Kronecker order.
    """
    ff = tensor_ab(m.fixed, n.fixed)
    uu = tensor_ab(m.underlying, n.underlying)
    base = direct_sum_ab(ff, uu)
    f_m, f_n = m.fixed.generator_count, n.fixed.generator_count
    u_m, u_n = m.underlying.generator_count, n.underlying.generator_count

    # (tr x (x) b, 0) - (0, x (x) res b)
    rel_tr_left = m.tr.matrix.kron(IntegerMatrix.identity(f_n)).vstack(
        -IntegerMatrix.identity(u_m).kron(n.res.matrix)
    )
    # (a (x) tr y, 0) - (0, res a (x) y)
    rel_tr_right = IntegerMatrix.identity(f_m).kron(n.tr.matrix).vstack(
        -m.res.matrix.kron(IntegerMatrix.identity(u_n))
    )
    # (0, x (x) y) - (0, conj x (x) conj y)
    rel_orbit = IntegerMatrix.zero(f_m * f_n, u_m * u_n).vstack(
        IntegerMatrix.identity(u_m * u_n) - m.conj.matrix.kron(n.conj.matrix)
    )
    rels = base.relations.hstack(rel_tr_left, rel_tr_right, rel_orbit)
    return FgAbGroup(base.generator_count, rels)


def box_product(m: CpMackeyFunctor, n: CpMackeyFunctor) -> CpMackeyFunctor:
    check_same_prime(m.prime, n.prime)
    fixed = _fixed_level(m, n)
    underlying = tensor_ab(m.underlying, n.underlying)
    uu = underlying.generator_count
    ff = fixed.generator_count - uu

    orbit_sum = IntegerMatrix.zero(uu, uu)
    for cm, cn in zip(m.conj_powers, n.conj_powers):
        orbit_sum = orbit_sum + cm.matrix.kron(cn.matrix)
    res = m.res.matrix.kron(n.res.matrix).hstack(orbit_sum)
    tr = IntegerMatrix.zero(ff, uu).vstack(IntegerMatrix.identity(uu))
    conj = m.conj.matrix.kron(n.conj.matrix)
    logger.debug(
        f"box product: fixed level on {fixed.generator_count} generators, "
        f"underlying on {uu}"
    )
    return make_cp_mackey_functor(
        m.prime,
        AbHom(fixed, underlying, res),
        AbHom(underlying, fixed, tr),
        AbHom(underlying, underlying, conj),
    )


def _identity(k: int) -> IntegerMatrix:
    return IntegerMatrix.identity(k)


def box_hom(f: MackeyHom, n: CpMackeyFunctor) -> MackeyHom:
    """f (x) id_N : src(f) [x] N -> tgt(f) [x] N."""
    check_same_prime(f.prime, n.prime)
    fixed = block_diagonal(
        f.fixed_map.matrix.kron(_identity(n.fixed.generator_count)),
        f.underlying_map.matrix.kron(_identity(n.underlying.generator_count)),
    )
    und = f.underlying_map.matrix.kron(_identity(n.underlying.generator_count))
    return make_mackey_hom(
        box_product(f.source, n), box_product(f.target, n), fixed, und
    )


def box_hom_right(m: CpMackeyFunctor, g: MackeyHom) -> MackeyHom:
    """id_M (x) g : M [x] src(g) -> M [x] tgt(g)."""
    check_same_prime(m.prime, g.prime)
    fixed = block_diagonal(
        _identity(m.fixed.generator_count).kron(g.fixed_map.matrix),
        _identity(m.underlying.generator_count).kron(g.underlying_map.matrix),
    )
    und = _identity(m.underlying.generator_count).kron(g.underlying_map.matrix)
    return make_mackey_hom(
        box_product(m, g.source), box_product(m, g.target), fixed, und
    )


def _swap_permutation(a: int, b: int) -> List[List[int]]:
    """Rows of the permutation sending index i*b + j to j*a + i."""
    rows = [[0] * (a * b) for _ in range(a * b)]
    for i in range(a):
        for j in range(b):
            rows[j * a + i][i * b + j] = 1
    return rows


def box_symmetry(m: CpMackeyFunctor, n: CpMackeyFunctor) -> MackeyHom:
    """The swap M [x] N -> N [x] M; composed with the reverse swap it is the identity."""
    f_m, f_n = m.fixed.generator_count, n.fixed.generator_count
    u_m, u_n = m.underlying.generator_count, n.underlying.generator_count
    und = IntegerMatrix.from_rows(_swap_permutation(u_m, u_n), cols=u_m * u_n)
    fixed = block_diagonal(
        IntegerMatrix.from_rows(_swap_permutation(f_m, f_n), cols=f_m * f_n), und
    )
    return make_mackey_hom(box_product(m, n), box_product(n, m), fixed, und)


def left_unitor(m: CpMackeyFunctor) -> MackeyHom:
    """A [x] M -> M: 1 (x) x -> x, t (x) x -> tr res x, [0, 1 (x) u] -> tr u."""
    a = burnside(m.prime)
    tr_res = m.tr.matrix @ m.res.matrix
    fixed = IntegerMatrix.identity(m.fixed.generator_count).hstack(tr_res, m.tr.matrix)
    und = IntegerMatrix.identity(m.underlying.generator_count)
    return make_mackey_hom(box_product(a, m), m, fixed, und)


def right_unitor(m: CpMackeyFunctor) -> MackeyHom:
    """M [x] A -> M, the mirror image of left_unitor."""
    a = burnside(m.prime)
    tr_res = m.tr.matrix @ m.res.matrix
    f_m = m.fixed.generator_count
    cols = []
    for beta in range(f_m):
        cols.append(tuple(int(i == beta) for i in range(f_m)))
        cols.append(tr_res.column(beta))
    cols += m.tr.matrix.columns()
    fixed = (
        IntegerMatrix.from_columns(cols, rows=f_m)
        if cols
        else IntegerMatrix.zero(f_m, 0)
    )
    und = IntegerMatrix.identity(m.underlying.generator_count)
    return make_mackey_hom(box_product(m, a), m, fixed, und)
