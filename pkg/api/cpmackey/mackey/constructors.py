import logging
from typing import Optional

from cpmackey.abgrp import (
    AbHom,
    FgAbGroup,
    IntegerMatrix,
    cokernel_ab,
    identity_hom,
    kernel_ab,
    lift_through_ab,
    make_ab_hom,
    zero_hom,
)
from cpmackey.exceptions import AxiomViolationError, PreconditionError
from cpmackey.mackey.functor import (
    CpMackeyFunctor,
    check_prime,
    make_cp_mackey_functor,
    mackey_from_matrices,
)

logger = logging.getLogger(__name__)

CANONICAL_KINDS = (
    "zero",
    "burnside",
    "underlying_free",
    "zero_on_underlying",
    "real_rep",
    "complex_rep",
)


def zero_functor(p: int) -> CpMackeyFunctor:
    t = FgAbGroup.trivial()
    return make_cp_mackey_functor(p, zero_hom(t, t), zero_hom(t, t), zero_hom(t, t))


def burnside(p: int) -> CpMackeyFunctor:
    """The unit A: fixed level spanned by 1 and t = [C_p], res(a + bt) = a + bp."""
    check_prime(p)
    return mackey_from_matrices(
        p,
        FgAbGroup.free(2),
        FgAbGroup.free(1),
        IntegerMatrix.from_rows([[1, p]]),
        IntegerMatrix.from_rows([[0], [1]]),
        IntegerMatrix.identity(1),
    )


def cyclic_permutation(p: int) -> IntegerMatrix:
    """Sends generator i to generator i + 1 mod p."""
    rows = [[0] * p for _ in range(p)]
    for i in range(p):
        rows[(i + 1) % p][i] = 1
    return IntegerMatrix.from_rows(rows, cols=p)


def underlying_free(p: int) -> CpMackeyFunctor:
    """B, free on one underlying generator; its C_p-orbit spans Z^p."""
    check_prime(p)
    return mackey_from_matrices(
        p,
        FgAbGroup.free(1),
        FgAbGroup.free(p),
        IntegerMatrix.from_rows([[1]] * p),
        IntegerMatrix.from_rows([[1] * p]),
        cyclic_permutation(p),
    )


def zero_on_underlying(p: int, group: FgAbGroup) -> CpMackeyFunctor:
    t = FgAbGroup.trivial()
    return make_cp_mackey_functor(
        p, zero_hom(group, t), zero_hom(t, group), zero_hom(t, t)
    )


def complex_rep(p: int) -> CpMackeyFunctor:
    check_prime(p)
    return mackey_from_matrices(
        p,
        FgAbGroup.free(p),
        FgAbGroup.free(1),
        IntegerMatrix.from_rows([[1] * p]),
        IntegerMatrix.from_rows([[1]] * p),
        IntegerMatrix.identity(1),
    )


def real_rep(p: int) -> CpMackeyFunctor:
    check_prime(p)
    if p == 2:
        return complex_rep(p)
    k = (p + 1) // 2
    return mackey_from_matrices(
        p,
        FgAbGroup.free(k),
        FgAbGroup.free(1),
        IntegerMatrix.from_rows([[1] + [2] * (k - 1)]),
        IntegerMatrix.from_rows([[1]] * k),
        IntegerMatrix.identity(1),
    )


def _power_sum(p: int, c: AbHom) -> AbHom:
    """Checks c^p == id and returns the norm sum of c^i."""
    if c.source != c.target:
        raise PreconditionError("conjugation must be an endomorphism")
    power = identity_hom(c.source)
    total = zero_hom(c.source, c.source)
    for _ in range(p):
        total = total + power
        power = c @ power
    if not power.equals(identity_hom(c.source)):
        raise AxiomViolationError("conj^p = identity")
    return total


def fixed_point(p: int, c: AbHom) -> CpMackeyFunctor:
    """Fixed-point functor of the C_p-module (X, c): invariants on top, res the inclusion."""
    check_prime(p)
    norm = _power_sum(p, c)
    fixed, incl = kernel_ab(c - identity_hom(c.source))
    tr = lift_through_ab(norm, incl)
    return make_cp_mackey_functor(p, incl, tr, c)


def orbit(p: int, c: AbHom) -> CpMackeyFunctor:
    """Orbit functor of (X, c): coinvariants on top, tr the quotient map."""
    check_prime(p)
    norm = _power_sum(p, c)
    fixed, proj = cokernel_ab(c - identity_hom(c.source))
    res = make_ab_hom(fixed, c.source, norm.matrix)
    return make_cp_mackey_functor(p, res, proj, c)


def z_underline(p: int) -> CpMackeyFunctor:
    """Fixed-point functor of Z with trivial action: res = 1, tr = p."""
    return fixed_point(p, identity_hom(FgAbGroup.free(1)))


def make_canonical(kind: str, p: int, extra: Optional[FgAbGroup] = None) -> CpMackeyFunctor:
    kind = kind.replace("-", "_")
    if kind == "zero":
        return zero_functor(p)
    if kind == "burnside":
        return burnside(p)
    if kind == "underlying_free":
        return underlying_free(p)
    if kind == "zero_on_underlying":
        return zero_on_underlying(p, extra if extra is not None else FgAbGroup.free(1))
    if kind == "real_rep":
        return real_rep(p)
    if kind == "complex_rep":
        return complex_rep(p)
    raise PreconditionError(
        f"unknown functor kind {kind!r}; expected one of {', '.join(CANONICAL_KINDS)}"
    )
