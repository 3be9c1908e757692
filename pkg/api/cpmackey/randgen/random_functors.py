"""Seeded random Mackey functors and homomorphisms.

Randomness comes from numpy's PCG64 bit generator. A seed is expanded with
SeedSequence and split into independent child streams, one per kind of draw,
so adding a draw of one kind never shifts the values of another.
"""

import logging
from typing import List, Sequence

import numpy as np
from pydantic import BaseModel, Field

from cpmackey.abgrp import AbHom, FgAbGroup, IntegerMatrix, block_diagonal, direct_sum_ab
from cpmackey.homalg.covers import (
    assemble_cover,
    hom_from_fixed_element,
    hom_from_underlying_element,
)
from cpmackey.mackey import (
    CpMackeyFunctor,
    MackeyHom,
    burnside,
    cokernel_mackey,
    direct_sum_mackey,
    fixed_point,
    orbit,
    underlying_free,
    zero_on_underlying,
)
from cpmackey.mackey.constructors import cyclic_permutation
from cpmackey.mackey.functor import check_prime, check_same_prime, validate_mackey_hom
from cpmackey.monoidal import HomMackGroup

logger = logging.getLogger(__name__)


class RandomSpec(BaseModel):
    prime: int = Field(description="Prime order of the group")
    seed: int = Field(default=0, ge=0, lt=2**64, description="64-bit seed")
    max_free: int = Field(default=2, ge=0, description="Bound on the free summand counts")
    max_rel: int = Field(default=2, ge=0, description="Bound on the relation counts")
    coef_bound: int = Field(default=9, ge=0, description="Bound on element coefficients")


def streams(seed: int, count: int) -> List[np.random.Generator]:
    """`count` independent PCG64 generators derived from one seed."""
    children = np.random.SeedSequence(seed).spawn(count)
    return [np.random.Generator(np.random.PCG64(child)) for child in children]


def _vector(rng: np.random.Generator, length: int, bound: int) -> tuple:
    return tuple(int(x) for x in rng.integers(-bound, bound + 1, size=length))


def random_mackey_functor(spec: RandomSpec) -> CpMackeyFunctor:
    """Cokernel of a random map A^k1 + B^k2 -> A^l1 + B^l2."""
    p = check_prime(spec.prime)
    shape_rng, fixed_rng, und_rng = streams(spec.seed, 3)
    l1, l2 = (int(x) for x in shape_rng.integers(0, spec.max_free + 1, size=2))
    if l1 == 0 and l2 == 0:
        l1 = 1
    k1, k2 = (int(x) for x in shape_rng.integers(0, spec.max_rel + 1, size=2))
    summands = [burnside(p)] * l1 + [underlying_free(p)] * l2
    target = direct_sum_mackey(*summands).functor

    homs = [
        hom_from_fixed_element(
            target, _vector(fixed_rng, target.fixed.generator_count, spec.coef_bound)
        )
        for _ in range(k1)
    ]
    homs += [
        hom_from_underlying_element(
            target, _vector(und_rng, target.underlying.generator_count, spec.coef_bound)
        )
        for _ in range(k2)
    ]
    logger.debug(f"random functor seed={spec.seed}: l=({l1}, {l2}) k=({k1}, {k2})")
    return cokernel_mackey(assemble_cover(target, homs))[0]


def random_mackey_hom(
    m: CpMackeyFunctor, n: CpMackeyFunctor, seed: int, coef_bound: int = 9
) -> MackeyHom:
    """A random element of Hom_Mack(M, N), translated into a homomorphism."""
    check_same_prime(m.prime, n.prime)
    homs = HomMackGroup(m, n)
    (rng,) = streams(seed, 1)
    v = _vector(rng, homs.group.generator_count, coef_bound)
    return validate_mackey_hom(homs.element_to_hom(v))


def random_cp_module(p: int, seed: int, max_summands: int = 2) -> AbHom:
    """A random C_p-module (X, c): trivial cyclic summands plus at most one
    copy of the regular representation, plus the sign representation at p = 2."""
    check_prime(p)
    (rng,) = streams(seed, 1)
    groups: List[FgAbGroup] = []
    actions: List[IntegerMatrix] = []
    for _ in range(int(rng.integers(0, max_summands + 1))):
        order = int(rng.choice([0, 2, 3, 4, p]))
        groups.append(FgAbGroup.cyclic(order))
        actions.append(IntegerMatrix.identity(1))
    if p <= 3 and rng.integers(0, 2):
        groups.append(FgAbGroup.free(p))
        actions.append(cyclic_permutation(p))
    if p == 2 and rng.integers(0, 2):
        groups.append(FgAbGroup.free(1))
        actions.append(IntegerMatrix.from_rows([[-1]]))
    x = direct_sum_ab(*groups)
    c = block_diagonal(*actions) if actions else IntegerMatrix.zero(0, 0)
    return AbHom(x, x, c)


def elementary_abelian(p: int, rank: int) -> FgAbGroup:
    return FgAbGroup.from_invariants([p] * rank)


def random_cohomological_functor(p: int, seed: int) -> CpMackeyFunctor:
    """A cohomological functor from the fixed-point, orbit or zero-on-underlying constructors."""
    kind_rng, module_rng = streams(seed, 2)
    kind = int(kind_rng.integers(0, 3))
    module_seed = int(module_rng.integers(0, 2**62))
    if kind == 0:
        return fixed_point(p, random_cp_module(p, module_seed))
    if kind == 1:
        return orbit(p, random_cp_module(p, module_seed))
    return zero_on_underlying(p, elementary_abelian(p, 1 + int(module_rng.integers(0, 2))))


def random_functors(p: int, seeds: Sequence[int], **spec_args) -> List[CpMackeyFunctor]:
    return [random_mackey_functor(RandomSpec(prime=p, seed=s, **spec_args)) for s in seeds]
