import logging
from dataclasses import dataclass
from functools import partial
from typing import List, Optional, Tuple

from cpmackey.abgrp import lift_through_ab
from cpmackey.exceptions import PreconditionError
from cpmackey.homalg.covers import Cover, CoverStrategy, cohomological_cover, free_cover
from cpmackey.mackey import (
    CpMackeyFunctor,
    MackeyHom,
    cokernel_mackey,
    compose_mackey,
    is_zero_mackey,
    kernel_mackey,
    prune_mackey,
)

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class MackeyComplex:
    """d0 : P0 -> M, d1 : P1 -> P0, ..., dn : Pn -> P(n-1)."""

    augmentation_target: CpMackeyFunctor
    differentials: Tuple[MackeyHom, ...]

    def __len__(self) -> int:
        return len(self.differentials)

    def module(self, i: int) -> CpMackeyFunctor:
        return self.differentials[i].source

    def ranks(self) -> List[tuple]:
        """(fixed, underlying) generator counts of P0, P1, ..."""
        return [
            (d.source.fixed.generator_count, d.source.underlying.generator_count)
            for d in self.differentials
        ]

    def homology(self, i: int) -> CpMackeyFunctor:
        """ker d_i / im d_(i+1) for 0 < i < len - 1."""
        if not 0 < i < len(self.differentials) - 1:
            raise PreconditionError(f"no homology position {i} in a complex of length {len(self)}")
        return homology_at(self.differentials[i + 1], self.differentials[i])

    def is_complex(self) -> bool:
        return all(
            compose_mackey(self.differentials[i], self.differentials[i + 1]).is_zero()
            for i in range(len(self.differentials) - 1)
        )

    def is_augmented(self) -> bool:
        return is_zero_mackey(cokernel_mackey(self.differentials[0])[0])


def homology_at(f: MackeyHom, g: MackeyHom) -> CpMackeyFunctor:
    """ker g / im f for composable f, g with g o f = 0."""
    if not compose_mackey(g, f).is_zero():
        raise PreconditionError("homology needs g o f = 0")
    k, incl = kernel_mackey(g)
    lifted = MackeyHom(
        f.source,
        k,
        lift_through_ab(f.fixed_map, incl.fixed_map, check=False),
        lift_through_ab(f.underlying_map, incl.underlying_map, check=False),
    )
    return cokernel_mackey(lifted)[0]


def cover_for(cohomological: bool, strategy: CoverStrategy) -> Cover:
    base = cohomological_cover if cohomological else free_cover
    return partial(base, strategy=strategy)


def resolution(
    m: CpMackeyFunctor,
    n: int,
    prune: bool = True,
    strategy: CoverStrategy = "minimal",
    cohomological: bool = False,
    cover: Optional[Cover] = None,
) -> MackeyComplex:
    """The first n + 1 differentials d0, ..., dn of a projective resolution of M.

    With prune set, each kernel is replaced by its minimal presentation before
    it is covered.
    """
    if n < 0:
        raise PreconditionError("resolution length must be nonnegative")
    cover = cover or cover_for(cohomological, strategy)
    current = cover(m)
    differentials = [current]
    for stage in range(1, n + 1):
        k, incl = kernel_mackey(current)
        if prune:
            pruned = prune_mackey(k)
            k, incl = pruned.functor, compose_mackey(incl, pruned.from_pruned)
        current = compose_mackey(incl, cover(k))
        differentials.append(current)
        logger.debug(
            f"resolution stage {stage}: P{stage} has ranks "
            f"({current.source.fixed.generator_count}, "
            f"{current.source.underlying.generator_count})"
        )
    return MackeyComplex(m, tuple(differentials))
