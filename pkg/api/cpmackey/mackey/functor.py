from __future__ import annotations

import logging
from dataclasses import dataclass
from functools import cached_property
from typing import List

from sympy import isprime

from cpmackey.abgrp import (
    AbHom,
    FgAbGroup,
    IntegerMatrix,
    compose_ab,
    identity_hom,
    make_ab_hom,
    zero_hom,
)
from cpmackey.exceptions import (
    AxiomViolationError,
    PreconditionError,
    PrimeMismatchError,
    SquareViolationError,
)

logger = logging.getLogger(__name__)


def check_prime(p: int) -> int:
    if not isinstance(p, int) or not isprime(p):
        raise PreconditionError(f"{p} is not a prime")
    return p


def check_same_prime(p: int, q: int, what: str = "functors"):
    if p != q:
        raise PrimeMismatchError(p, q, what)


@dataclass(frozen=True)
class CpMackeyFunctor:
    """A Mackey functor for the cyclic group of prime order.

    `fixed` is the value on C_p/C_p, `underlying` the value on C_p/e.
    Instances are only produced through make_cp_mackey_functor (or the
    constructors built on it), so the Mackey axioms always hold.
    """

    prime: int
    fixed: FgAbGroup
    underlying: FgAbGroup
    res: AbHom
    tr: AbHom
    conj: AbHom

    @cached_property
    def conj_powers(self) -> List[AbHom]:
        powers = [identity_hom(self.underlying)]
        for _ in range(1, self.prime):
            powers.append(compose_ab(self.conj, powers[-1]))
        return powers

    @cached_property
    def norm(self) -> AbHom:
        """Sum of conj^i for i in 0..p-1."""
        total = zero_hom(self.underlying, self.underlying)
        for c in self.conj_powers:
            total = total + c
        return total

    def conj_inverse(self) -> AbHom:
        return self.conj_powers[self.prime - 1]


def make_cp_mackey_functor(p: int, res: AbHom, tr: AbHom, conj: AbHom) -> CpMackeyFunctor:
    """Assemble a functor from its structure maps and validate every axiom."""
    check_prime(p)
    fixed, underlying = res.source, res.target
    if tr.source != underlying or tr.target != fixed:
        raise PreconditionError("transfer must map the underlying level to the fixed level")
    if conj.source != underlying or conj.target != underlying:
        raise PreconditionError("conjugation must be an endomorphism of the underlying level")
    for hom in (res, tr, conj):
        make_ab_hom(hom.source, hom.target, hom.matrix)

    m = CpMackeyFunctor(p, fixed, underlying, res, tr, conj)
    if not compose_ab(conj, res).equals(res):
        raise AxiomViolationError("conj o res = res")
    if not compose_ab(tr, conj).equals(tr):
        raise AxiomViolationError("tr o conj = tr")
    if not compose_ab(conj, m.conj_powers[-1]).equals(identity_hom(underlying)):
        raise AxiomViolationError("conj^p = identity")
    if not compose_ab(res, tr).equals(m.norm):
        raise AxiomViolationError("res o tr = sum of conj^i")
    return m


def mackey_from_matrices(
    p: int,
    fixed: FgAbGroup,
    underlying: FgAbGroup,
    res: IntegerMatrix,
    tr: IntegerMatrix,
    conj: IntegerMatrix,
) -> CpMackeyFunctor:
    return make_cp_mackey_functor(
        p,
        AbHom(fixed, underlying, res),
        AbHom(underlying, fixed, tr),
        AbHom(underlying, underlying, conj),
    )


@dataclass(frozen=True)
class MackeyHom:
    source: CpMackeyFunctor
    target: CpMackeyFunctor
    fixed_map: AbHom
    underlying_map: AbHom

    @property
    def prime(self) -> int:
        return self.source.prime

    def _check_parallel(self, other: "MackeyHom"):
        if self.source != other.source or self.target != other.target:
            raise PreconditionError("Mackey homomorphisms have different source or target")

    def __add__(self, other: "MackeyHom") -> "MackeyHom":
        return add_mackey(self, other)

    def __neg__(self) -> "MackeyHom":
        return self.scale(-1)

    def __sub__(self, other: "MackeyHom") -> "MackeyHom":
        return add_mackey(self, other.scale(-1))

    def scale(self, k: int) -> "MackeyHom":
        return MackeyHom(
            self.source, self.target, self.fixed_map.scale(k), self.underlying_map.scale(k)
        )

    def __matmul__(self, other: "MackeyHom") -> "MackeyHom":
        return compose_mackey(self, other)

    def is_zero(self) -> bool:
        return self.fixed_map.is_zero() and self.underlying_map.is_zero()

    def equals(self, other: "MackeyHom") -> bool:
        self._check_parallel(other)
        return (self - other).is_zero()


def make_mackey_hom(
    source: CpMackeyFunctor,
    target: CpMackeyFunctor,
    fixed_map: IntegerMatrix,
    underlying_map: IntegerMatrix,
) -> MackeyHom:
    """Validate both level maps and the three commuting squares."""
    check_same_prime(source.prime, target.prime)
    f = make_ab_hom(source.fixed, target.fixed, fixed_map)
    u = make_ab_hom(source.underlying, target.underlying, underlying_map)
    if not compose_ab(u, source.conj).equals(compose_ab(target.conj, u)):
        raise SquareViolationError("conj")
    if not compose_ab(u, source.res).equals(compose_ab(target.res, f)):
        raise SquareViolationError("res")
    if not compose_ab(f, source.tr).equals(compose_ab(target.tr, u)):
        raise SquareViolationError("tr")
    return MackeyHom(source, target, f, u)


def validate_mackey_hom(h: MackeyHom) -> MackeyHom:
    return make_mackey_hom(h.source, h.target, h.fixed_map.matrix, h.underlying_map.matrix)


def identity_mackey(m: CpMackeyFunctor) -> MackeyHom:
    return MackeyHom(m, m, identity_hom(m.fixed), identity_hom(m.underlying))


def zero_mackey_hom(source: CpMackeyFunctor, target: CpMackeyFunctor) -> MackeyHom:
    check_same_prime(source.prime, target.prime)
    return MackeyHom(
        source,
        target,
        zero_hom(source.fixed, target.fixed),
        zero_hom(source.underlying, target.underlying),
    )


def compose_mackey(g: MackeyHom, f: MackeyHom) -> MackeyHom:
    """g after f."""
    if f.target != g.source:
        raise PreconditionError("composition through different functors")
    return MackeyHom(
        f.source,
        g.target,
        compose_ab(g.fixed_map, f.fixed_map),
        compose_ab(g.underlying_map, f.underlying_map),
    )


def add_mackey(f: MackeyHom, g: MackeyHom) -> MackeyHom:
    f._check_parallel(g)
    return MackeyHom(
        f.source,
        f.target,
        f.fixed_map + g.fixed_map,
        f.underlying_map + g.underlying_map,
    )
