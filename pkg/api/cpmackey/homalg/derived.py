"""Ext and Tor of C_p-Mackey functors, plus their cohomological variants."""

import logging
from typing import Dict, Iterable, List

from cpmackey.exceptions import NotCohomologicalError, PreconditionError
from cpmackey.homalg.covers import CoverStrategy
from cpmackey.homalg.resolution import MackeyComplex, homology_at, resolution
from cpmackey.mackey import (
    CpMackeyFunctor,
    MackeyHom,
    cokernel_mackey,
    is_cohomological,
    is_zero_mackey,
    kernel_mackey,
    zero_functor,
)
from cpmackey.mackey.functor import check_same_prime
from cpmackey.monoidal import box_hom, internal_hom_map

logger = logging.getLogger(__name__)


def _check_degree(i: int):
    if i < 0:
        raise PreconditionError(f"degree must be nonnegative, got {i}")


def _require_cohomological(*functors: CpMackeyFunctor):
    for m in functors:
        if not is_cohomological(m):
            raise NotCohomologicalError(
                "cohomological Ext/Tor needs tr o res = p on every argument"
            )


def _ext_from_cochain(i: int, cochain: List[MackeyHom]) -> CpMackeyFunctor:
    """cochain[k] = [d_(k+1), N] : [P_k, N] -> [P_(k+1), N]."""
    if i == 0:
        return kernel_mackey(cochain[0])[0]
    return homology_at(cochain[i - 1], cochain[i])


def _tor_from_chain(i: int, chain: List[MackeyHom]) -> CpMackeyFunctor:
    """chain[k] = d_(k+1) [x] N : P_(k+1) [x] N -> P_k [x] N."""
    if i == 0:
        return cokernel_mackey(chain[0])[0]
    return homology_at(chain[i], chain[i - 1])


def ext_series(
    degrees: Iterable[int],
    m: CpMackeyFunctor,
    n: CpMackeyFunctor,
    cohomological: bool = False,
    prune: bool = True,
    strategy: CoverStrategy = "minimal",
) -> Dict[int, CpMackeyFunctor]:
    """Ext^i(M, N) for several degrees from a single resolution of M."""
    check_same_prime(m.prime, n.prime)
    degrees = sorted(set(degrees))
    for i in degrees:
        _check_degree(i)
    if cohomological:
        _require_cohomological(m, n)
    if not degrees:
        return {}
    if is_zero_mackey(m):
        return {i: zero_functor(m.prime) for i in degrees}
    complex_ = resolution(
        m, degrees[-1] + 1, prune=prune, strategy=strategy, cohomological=cohomological
    )
    cochain = [internal_hom_map(d, n) for d in complex_.differentials[1:]]
    out = {}
    for i in degrees:
        logger.debug(f"computing Ext^{i}")
        out[i] = _ext_from_cochain(i, cochain)
    return out


def tor_series(
    degrees: Iterable[int],
    m: CpMackeyFunctor,
    n: CpMackeyFunctor,
    cohomological: bool = False,
    prune: bool = True,
    strategy: CoverStrategy = "minimal",
) -> Dict[int, CpMackeyFunctor]:
    """Tor_i(M, N) for several degrees from a single resolution of M."""
    check_same_prime(m.prime, n.prime)
    degrees = sorted(set(degrees))
    for i in degrees:
        _check_degree(i)
    if cohomological:
        _require_cohomological(m, n)
    if not degrees:
        return {}
    if is_zero_mackey(m):
        return {i: zero_functor(m.prime) for i in degrees}
    complex_ = resolution(
        m, degrees[-1] + 1, prune=prune, strategy=strategy, cohomological=cohomological
    )
    chain = [box_hom(d, n) for d in complex_.differentials[1:]]
    out = {}
    for i in degrees:
        logger.debug(f"computing Tor_{i}")
        out[i] = _tor_from_chain(i, chain)
    return out


def ext(i: int, m: CpMackeyFunctor, n: CpMackeyFunctor, **kwargs) -> CpMackeyFunctor:
    return ext_series([i], m, n, **kwargs)[i]


def tor(i: int, m: CpMackeyFunctor, n: CpMackeyFunctor, **kwargs) -> CpMackeyFunctor:
    return tor_series([i], m, n, **kwargs)[i]


def ext_coh(i: int, m: CpMackeyFunctor, n: CpMackeyFunctor, **kwargs) -> CpMackeyFunctor:
    return ext(i, m, n, cohomological=True, **kwargs)


def tor_coh(i: int, m: CpMackeyFunctor, n: CpMackeyFunctor, **kwargs) -> CpMackeyFunctor:
    return tor(i, m, n, cohomological=True, **kwargs)


def ext_from_resolution(i: int, complex_: MackeyComplex, n: CpMackeyFunctor) -> CpMackeyFunctor:
    if len(complex_) < i + 2:
        raise PreconditionError(f"Ext^{i} needs a resolution with at least {i + 2} differentials")
    cochain = [internal_hom_map(d, n) for d in complex_.differentials[1 : i + 2]]
    return _ext_from_cochain(i, cochain)
