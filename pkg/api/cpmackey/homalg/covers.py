import logging
import math
from typing import Callable, List, Literal, Sequence, Tuple

from cpmackey.abgrp import FgAbGroup, IntegerMatrix, minimal_presentation_ab
from cpmackey.abgrp.matrix import Vector
from cpmackey.exceptions import NotCohomologicalError, PreconditionError
from cpmackey.mackey import (
    CpMackeyFunctor,
    MackeyHom,
    burnside,
    copair,
    direct_sum_mackey,
    is_cohomological,
    make_mackey_hom,
    underlying_free,
    z_underline,
    zero_functor,
    zero_mackey_hom,
)

logger = logging.getLogger(__name__)

CoverStrategy = Literal["minimal", "levelwise"]
Cover = Callable[[CpMackeyFunctor], MackeyHom]


def _check_length(v: Sequence[int], g: FgAbGroup, level: str):
    if len(v) != g.generator_count:
        raise PreconditionError(
            f"{level} element of length {len(v)} for {g.generator_count} generators"
        )


def _col(v: Sequence[int]) -> IntegerMatrix:
    return IntegerMatrix.column_vector(v)


def hom_from_fixed_element(m: CpMackeyFunctor, x: Sequence[int]) -> MackeyHom:
    """The hom A -> M sending the fixed generator 1 to x."""
    _check_length(x, m.fixed, "fixed")
    res_x = m.res.apply(x)
    fixed = _col(x).hstack(_col(m.tr.apply(res_x)))
    return make_mackey_hom(burnside(m.prime), m, fixed, _col(res_x))


def hom_from_underlying_element(m: CpMackeyFunctor, u: Sequence[int]) -> MackeyHom:
    """The hom B -> M sending the underlying generator to u."""
    _check_length(u, m.underlying, "underlying")
    orbit = [c.apply(u) for c in m.conj_powers]
    und = IntegerMatrix.from_columns(orbit, rows=m.underlying.generator_count)
    return make_mackey_hom(underlying_free(m.prime), m, _col(m.tr.apply(u)), und)


def hom_from_fixed_element_coh(m: CpMackeyFunctor, x: Sequence[int]) -> MackeyHom:
    """The hom Z-underline -> M sending 1 to x; needs tr(res(x)) = p x."""
    _check_length(x, m.fixed, "fixed")
    return make_mackey_hom(z_underline(m.prime), m, _col(x), _col(m.res.apply(x)))


def _quotient(g: FgAbGroup, vectors: List[Vector]) -> FgAbGroup:
    if not vectors:
        return g
    extra = IntegerMatrix.from_columns(vectors, rows=g.generator_count)
    return FgAbGroup(g.generator_count, g.relations.hstack(extra))


def _size(q: FgAbGroup) -> Tuple[int, int]:
    return q.free_rank(), math.prod(d for d in q.invariant_factors() if d)


def _greedy_generators(
    g: FgAbGroup,
    spread: Callable[[Vector], List[Vector]],
    seed: List[Vector],
) -> List[Vector]:
    """Pick elements whose spreads, together with `seed`, generate g.

    Each round tries the minimal-presentation generators of the current
    quotient and their pairwise sums and keeps the one leaving the smallest
    quotient (free rank first, then torsion order).
    """
    span = list(seed)
    chosen: List[Vector] = []
    q = _quotient(g, span)
    while not q.is_trivial():
        _, _, back = minimal_presentation_ab(q)
        basics = back.matrix.columns()
        candidates = list(basics)
        for i in range(len(basics)):
            for j in range(i + 1, len(basics)):
                candidates.append(tuple(a + b for a, b in zip(basics[i], basics[j])))
        best = min(candidates, key=lambda c: _size(_quotient(g, span + spread(c))))
        chosen.append(best)
        span += spread(best)
        q = _quotient(g, span)
    return chosen


def assemble_cover(m: CpMackeyFunctor, homs: List[MackeyHom]) -> MackeyHom:
    if not homs:
        return zero_mackey_hom(zero_functor(m.prime), m)
    bp = direct_sum_mackey(*(h.source for h in homs))
    return copair(bp, homs)


def free_cover(m: CpMackeyFunctor, strategy: CoverStrategy = "minimal") -> MackeyHom:
    """Surjection onto M from a sum of copies of A and B.

    "levelwise" uses one B per underlying generator and one A per fixed
    generator of the presentation. "minimal" picks fewer summands: B for
    underlying generators up to conjugation, then A only for the fixed
    classes that transfers do not already reach. The two give different
    resolutions but the same derived functors.
    """
    if strategy == "levelwise":
        und = [m.underlying.basis_vector(k) for k in range(m.underlying.generator_count)]
        fix = [m.fixed.basis_vector(k) for k in range(m.fixed.generator_count)]
    elif strategy == "minimal":
        und = _greedy_generators(
            m.underlying, lambda u: [c.apply(u) for c in m.conj_powers], []
        )
        fix = _greedy_generators(
            m.fixed,
            lambda x: [x, m.tr.apply(m.res.apply(x))],
            [m.tr.apply(u) for u in und],
        )
    else:
        raise PreconditionError(f"unknown cover strategy {strategy!r}")
    logger.debug(f"free cover: {len(und)} copies of B, {len(fix)} copies of A")
    homs = [hom_from_underlying_element(m, u) for u in und]
    homs += [hom_from_fixed_element(m, x) for x in fix]
    return assemble_cover(m, homs)


def cohomological_cover(m: CpMackeyFunctor, strategy: CoverStrategy = "minimal") -> MackeyHom:
    """Surjection onto a cohomological M from copies of Z-underline and B."""
    if not is_cohomological(m):
        raise NotCohomologicalError("cohomological cover of a functor with tr o res != p")
    if strategy == "levelwise":
        und = [m.underlying.basis_vector(k) for k in range(m.underlying.generator_count)]
        fix = [m.fixed.basis_vector(k) for k in range(m.fixed.generator_count)]
    elif strategy == "minimal":
        und = _greedy_generators(
            m.underlying, lambda u: [c.apply(u) for c in m.conj_powers], []
        )
        fix = _greedy_generators(m.fixed, lambda x: [x], [m.tr.apply(u) for u in und])
    else:
        raise PreconditionError(f"unknown cover strategy {strategy!r}")
    homs = [hom_from_underlying_element(m, u) for u in und]
    homs += [hom_from_fixed_element_coh(m, x) for x in fix]
    return assemble_cover(m, homs)
