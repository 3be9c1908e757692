import logging
from dataclasses import dataclass
from functools import lru_cache
from typing import List, Sequence

from cpmackey.abgrp import (
    AbHom,
    FgAbGroup,
    HomGroup,
    IntegerMatrix,
    compose_ab,
    direct_sum_ab,
    hom_group_ab,
    kernel_ab,
    lift_through_ab,
    solve_column,
)
from cpmackey.abgrp.matrix import Vector
from cpmackey.exceptions import LiftError, PreconditionError
from cpmackey.mackey import (
    CpMackeyFunctor,
    MackeyHom,
    burnside,
    make_cp_mackey_functor,
    make_mackey_hom,
)
from cpmackey.mackey.functor import check_same_prime

logger = logging.getLogger(__name__)


def _columns_to_matrix(cols: Sequence[Sequence[int]], rows: int) -> IntegerMatrix:
    return IntegerMatrix.from_columns(cols, rows=rows) if cols else IntegerMatrix.zero(rows, 0)


@dataclass(frozen=True)
class InternalHom:
    """[M, N] together with the hom-group bookkeeping behind its two levels.

    The fixed level is a subgroup of Hom(F(M), F(N)) + Hom(U(M), U(N)),
    embedded through `inclusion`.
    """

    source: CpMackeyFunctor
    target: CpMackeyFunctor
    functor: CpMackeyFunctor
    fixed_homs: HomGroup
    underlying_homs: HomGroup
    ambient: FgAbGroup
    inclusion: AbHom

    def split(self, s: Sequence[int]):
        k = self.fixed_homs.group.generator_count
        return (
            self.fixed_homs.element_to_hom(s[:k]),
            self.underlying_homs.element_to_hom(s[k:]),
        )

    def ambient_element(self, fixed_map: AbHom, underlying_map: AbHom) -> Vector:
        return self.fixed_homs.hom_to_element(fixed_map) + self.underlying_homs.hom_to_element(
            underlying_map
        )

    def element_to_hom(self, v: Sequence[int]) -> MackeyHom:
        """Fixed-level element of [M, N] as a homomorphism M -> N."""
        f, u = self.split(self.inclusion.apply(v))
        return MackeyHom(self.source, self.target, f, u)

    def hom_to_element(self, h: MackeyHom) -> Vector:
        if h.source != self.source or h.target != self.target:
            raise PreconditionError("homomorphism does not belong to this hom group")
        s = self.ambient_element(h.fixed_map, h.underlying_map)
        k = self.functor.fixed.generator_count
        x = solve_column(self.inclusion.matrix.hstack(self.ambient.relations), s)
        if x is None:
            raise LiftError(0)
        return x[:k]

    def lift(self, cols: List[Vector], source: FgAbGroup) -> AbHom:
        """Lift ambient elements (one per generator of `source`) into the fixed level."""
        ambient_map = AbHom(source, self.ambient, _columns_to_matrix(cols, self.ambient.generator_count))
        return lift_through_ab(ambient_map, self.inclusion, check=False)


def _conj_action(m: CpMackeyFunctor, n: CpMackeyFunctor, h: AbHom, times: int = 1) -> AbHom:
    """conj_N^t o h o conj_M^(-t)."""
    t = times % m.prime
    return compose_ab(n.conj_powers[t], compose_ab(h, m.conj_powers[(-t) % m.prime]))


@lru_cache(maxsize=256)
def internal_hom_data(m: CpMackeyFunctor, n: CpMackeyFunctor) -> InternalHom:
    check_same_prime(m.prime, n.prime)
    p = m.prime
    hf = hom_group_ab(m.fixed, n.fixed)
    hu = hom_group_ab(m.underlying, n.underlying)
    h_res = hom_group_ab(m.fixed, n.underlying)
    h_tr = hom_group_ab(m.underlying, n.fixed)
    ambient = direct_sum_ab(hf.group, hu.group)
    k_f = hf.group.generator_count

    # linearized conj, res and tr squares, one column per ambient generator
    conditions = []
    for s in range(ambient.generator_count):
        e = ambient.basis_vector(s)
        phi_f = hf.element_to_hom(e[:k_f])
        phi_u = hu.element_to_hom(e[k_f:])
        conj_sq = compose_ab(phi_u, m.conj) - compose_ab(n.conj, phi_u)
        res_sq = compose_ab(phi_u, m.res) - compose_ab(n.res, phi_f)
        tr_sq = compose_ab(phi_f, m.tr) - compose_ab(n.tr, phi_u)
        conditions.append(
            hu.hom_to_element(conj_sq)
            + h_res.hom_to_element(res_sq)
            + h_tr.hom_to_element(tr_sq)
        )
    checks = direct_sum_ab(hu.group, h_res.group, h_tr.group)
    linear = AbHom(ambient, checks, _columns_to_matrix(conditions, checks.generator_count))
    fixed, incl = kernel_ab(linear)

    underlying = hu.group
    res = AbHom(fixed, underlying, incl.matrix.submatrix(row_idx=range(k_f, ambient.generator_count)))

    conj_cols, tr_cols = [], []
    for k in range(underlying.generator_count):
        h = hu.element_to_hom(underlying.basis_vector(k))
        conj_cols.append(hu.hom_to_element(_conj_action(m, n, h)))
        tr_f = compose_ab(n.tr, compose_ab(h, m.res))
        tr_u = h
        for i in range(1, p):
            tr_u = tr_u + _conj_action(m, n, h, i)
        tr_cols.append(hf.hom_to_element(tr_f) + hu.hom_to_element(tr_u))
    conj = AbHom(underlying, underlying, _columns_to_matrix(conj_cols, underlying.generator_count))
    partial = InternalHom(m, n, None, hf, hu, ambient, incl)
    tr = partial.lift(tr_cols, underlying)
    functor = make_cp_mackey_functor(p, res, tr, conj)
    logger.debug(
        f"internal hom: fixed level on {fixed.generator_count} generators, "
        f"underlying on {underlying.generator_count}"
    )
    return InternalHom(m, n, functor, hf, hu, ambient, incl)


def internal_hom(m: CpMackeyFunctor, n: CpMackeyFunctor) -> CpMackeyFunctor:
    return internal_hom_data(m, n).functor


class HomMackGroup:
    """Hom_Mack(M, N) as a finitely generated abelian group with translations."""

    def __init__(self, source: CpMackeyFunctor, target: CpMackeyFunctor):
        self.data = internal_hom_data(source, target)
        self.source = source
        self.target = target

    @property
    def group(self) -> FgAbGroup:
        return self.data.functor.fixed

    def element_to_hom(self, v: Sequence[int]) -> MackeyHom:
        return self.data.element_to_hom(v)

    def hom_to_element(self, h: MackeyHom) -> Vector:
        return self.data.hom_to_element(h)

    def elements(self) -> List[Vector]:
        return self.group.elements()


def internal_hom_map(f: MackeyHom, n: CpMackeyFunctor) -> MackeyHom:
    """[f, N] : [tgt f, N] -> [src f, N], precomposition with f."""
    check_same_prime(f.prime, n.prime)
    big = internal_hom_data(f.target, n)
    small = internal_hom_data(f.source, n)

    und_cols = []
    for k in range(big.functor.underlying.generator_count):
        h = big.underlying_homs.element_to_hom(big.functor.underlying.basis_vector(k))
        und_cols.append(small.underlying_homs.hom_to_element(compose_ab(h, f.underlying_map)))
    fixed_cols = []
    for k in range(big.functor.fixed.generator_count):
        g = big.element_to_hom(big.functor.fixed.basis_vector(k))
        fixed_cols.append(
            small.ambient_element(
                compose_ab(g.fixed_map, f.fixed_map),
                compose_ab(g.underlying_map, f.underlying_map),
            )
        )
    fixed = small.lift(fixed_cols, big.functor.fixed)
    und = _columns_to_matrix(und_cols, small.functor.underlying.generator_count)
    return make_mackey_hom(big.functor, small.functor, fixed.matrix, und)


def internal_hom_map_right(m: CpMackeyFunctor, g: MackeyHom) -> MackeyHom:
    """[M, g] : [M, src g] -> [M, tgt g], postcomposition with g."""
    check_same_prime(m.prime, g.prime)
    before = internal_hom_data(m, g.source)
    after = internal_hom_data(m, g.target)

    und_cols = []
    for k in range(before.functor.underlying.generator_count):
        h = before.underlying_homs.element_to_hom(before.functor.underlying.basis_vector(k))
        und_cols.append(after.underlying_homs.hom_to_element(compose_ab(g.underlying_map, h)))
    fixed_cols = []
    for k in range(before.functor.fixed.generator_count):
        x = before.element_to_hom(before.functor.fixed.basis_vector(k))
        fixed_cols.append(
            after.ambient_element(
                compose_ab(g.fixed_map, x.fixed_map),
                compose_ab(g.underlying_map, x.underlying_map),
            )
        )
    fixed = after.lift(fixed_cols, before.functor.fixed)
    und = _columns_to_matrix(und_cols, after.functor.underlying.generator_count)
    return make_mackey_hom(before.functor, after.functor, fixed.matrix, und)


def burnside_internal_hom_iso(m: CpMackeyFunctor) -> MackeyHom:
    """[A, M] -> M, evaluation at the generator 1 on both levels."""
    data = internal_hom_data(burnside(m.prime), m)
    fixed_cols = [
        data.element_to_hom(data.functor.fixed.basis_vector(k)).fixed_map.matrix.column(0)
        for k in range(data.functor.fixed.generator_count)
    ]
    und_cols = [
        data.underlying_homs.element_to_hom(data.functor.underlying.basis_vector(k)).matrix.column(0)
        for k in range(data.functor.underlying.generator_count)
    ]
    return make_mackey_hom(
        data.functor,
        m,
        _columns_to_matrix(fixed_cols, m.fixed.generator_count),
        _columns_to_matrix(und_cols, m.underlying.generator_count),
    )
