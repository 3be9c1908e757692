"""Abelian-category structure on C_p-Mackey functors: biproducts, kernels,
cokernels, pruned presentations and a few predicates built on them."""

import logging
from dataclasses import dataclass
from typing import List, Sequence, Tuple

from cpmackey.abgrp import (
    AbHom,
    IntegerMatrix,
    cokernel_ab,
    compose_ab,
    direct_sum_ab,
    direct_sum_hom,
    kernel_ab,
    lift_through_ab,
    make_ab_hom,
    minimal_presentation_ab,
)
from cpmackey.exceptions import PreconditionError
from cpmackey.mackey.functor import (
    CpMackeyFunctor,
    MackeyHom,
    check_same_prime,
    identity_mackey,
    make_cp_mackey_functor,
)

logger = logging.getLogger(__name__)

Invariants = Tuple[List[int], List[int]]


@dataclass(frozen=True)
class Biproduct:
    functor: CpMackeyFunctor
    summands: Tuple[CpMackeyFunctor, ...]
    injections: Tuple[MackeyHom, ...]
    projections: Tuple[MackeyHom, ...]


def _block_selector(sizes: Sequence[int], k: int, transpose: bool = False) -> IntegerMatrix:
    """Projection of Z^(sum sizes) onto block k (or the injection if transposed)."""
    total = sum(sizes)
    start = sum(sizes[:k])
    rows = [[int(j == start + i) for j in range(total)] for i in range(sizes[k])]
    m = IntegerMatrix.from_rows(rows, cols=total)
    return m.transpose() if transpose else m


def direct_sum_mackey(*functors: CpMackeyFunctor) -> Biproduct:
    if not functors:
        raise PreconditionError("direct sum of no functors needs a prime; use zero_functor")
    p = functors[0].prime
    for m in functors[1:]:
        check_same_prime(p, m.prime)
    res = direct_sum_hom(*(m.res for m in functors))
    tr = direct_sum_hom(*(m.tr for m in functors))
    conj = direct_sum_hom(*(m.conj for m in functors))
    total = make_cp_mackey_functor(p, res, tr, conj)

    fixed_sizes = [m.fixed.generator_count for m in functors]
    und_sizes = [m.underlying.generator_count for m in functors]
    injections, projections = [], []
    for k, m in enumerate(functors):
        injections.append(
            MackeyHom(
                m,
                total,
                AbHom(m.fixed, total.fixed, _block_selector(fixed_sizes, k, True)),
                AbHom(m.underlying, total.underlying, _block_selector(und_sizes, k, True)),
            )
        )
        projections.append(
            MackeyHom(
                total,
                m,
                AbHom(total.fixed, m.fixed, _block_selector(fixed_sizes, k)),
                AbHom(total.underlying, m.underlying, _block_selector(und_sizes, k)),
            )
        )
    return Biproduct(total, tuple(functors), tuple(injections), tuple(projections))


def copair(source: Biproduct, homs: Sequence[MackeyHom]) -> MackeyHom:
    """The map out of a direct sum restricting to homs[k] on summand k."""
    if len(homs) != len(source.summands):
        raise PreconditionError("one homomorphism per summand is required")
    if not homs:
        raise PreconditionError("copair of an empty direct sum needs a target")
    target = homs[0].target
    for h, m in zip(homs, source.summands):
        if h.source != m or h.target != target:
            raise PreconditionError("copair components do not match the summands")
    fixed = homs[0].fixed_map.matrix.hstack(*(h.fixed_map.matrix for h in homs[1:]))
    und = homs[0].underlying_map.matrix.hstack(
        *(h.underlying_map.matrix for h in homs[1:])
    )
    s = source.functor
    return MackeyHom(
        s,
        target,
        AbHom(s.fixed, target.fixed, fixed),
        AbHom(s.underlying, target.underlying, und),
    )


def kernel_mackey(f: MackeyHom) -> Tuple[CpMackeyFunctor, MackeyHom]:
    m = f.source
    kf, incl_f = kernel_ab(f.fixed_map)
    ku, incl_u = kernel_ab(f.underlying_map)
    res = lift_through_ab(compose_ab(m.res, incl_f), incl_u, check=False)
    tr = lift_through_ab(compose_ab(m.tr, incl_u), incl_f, check=False)
    conj = lift_through_ab(compose_ab(m.conj, incl_u), incl_u, check=False)
    k = make_cp_mackey_functor(m.prime, res, tr, conj)
    return k, MackeyHom(k, m, incl_f, incl_u)


def cokernel_mackey(f: MackeyHom) -> Tuple[CpMackeyFunctor, MackeyHom]:
    n = f.target
    cf, proj_f = cokernel_ab(f.fixed_map)
    cu, proj_u = cokernel_ab(f.underlying_map)
    c = make_cp_mackey_functor(
        n.prime,
        make_ab_hom(cf, cu, n.res.matrix),
        make_ab_hom(cu, cf, n.tr.matrix),
        make_ab_hom(cu, cu, n.conj.matrix),
    )
    return c, MackeyHom(n, c, proj_f, proj_u)


@dataclass(frozen=True)
class Pruned:
    functor: CpMackeyFunctor
    to_pruned: MackeyHom
    from_pruned: MackeyHom


def prune_mackey(m: CpMackeyFunctor) -> Pruned:
    """Replace both levels by minimal presentations and transport the structure maps."""
    sf, to_f, from_f = minimal_presentation_ab(m.fixed)
    su, to_u, from_u = minimal_presentation_ab(m.underlying)
    res = compose_ab(to_u, compose_ab(m.res, from_f)).reduced()
    tr = compose_ab(to_f, compose_ab(m.tr, from_u)).reduced()
    conj = compose_ab(to_u, compose_ab(m.conj, from_u)).reduced()
    small = make_cp_mackey_functor(m.prime, res, tr, conj)
    return Pruned(
        small,
        MackeyHom(m, small, to_f, to_u),
        MackeyHom(small, m, from_f, from_u),
    )


def prune(m: CpMackeyFunctor) -> CpMackeyFunctor:
    return prune_mackey(m).functor


def prune_hom(f: MackeyHom) -> MackeyHom:
    """f transported to the pruned presentations of its source and target."""
    src = prune_mackey(f.source)
    tgt = prune_mackey(f.target)
    fixed = compose_ab(
        tgt.to_pruned.fixed_map, compose_ab(f.fixed_map, src.from_pruned.fixed_map)
    )
    und = compose_ab(
        tgt.to_pruned.underlying_map,
        compose_ab(f.underlying_map, src.from_pruned.underlying_map),
    )
    return MackeyHom(src.functor, tgt.functor, fixed.reduced(), und.reduced())


def invariants(m: CpMackeyFunctor) -> Invariants:
    """Invariant factors of (fixed, underlying); 0 stands for a free summand."""
    return m.fixed.invariant_factors(), m.underlying.invariant_factors()


def is_cohomological(m: CpMackeyFunctor) -> bool:
    return compose_ab(m.tr, m.res).equals(
        AbHom(m.fixed, m.fixed, IntegerMatrix.identity(m.fixed.generator_count).scale(m.prime))
    )


def is_zero_mackey(m: CpMackeyFunctor) -> bool:
    return m.fixed.is_trivial() and m.underlying.is_trivial()


def is_zero_hom(f: MackeyHom) -> bool:
    return f.is_zero()


def is_isomorphism_mackey(f: MackeyHom) -> bool:
    return is_zero_mackey(kernel_mackey(f)[0]) and is_zero_mackey(cokernel_mackey(f)[0])


def is_identity(f: MackeyHom) -> bool:
    return f.source == f.target and f.equals(identity_mackey(f.source))
