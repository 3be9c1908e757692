from __future__ import annotations

import itertools
import logging
import math
from dataclasses import dataclass
from typing import List, Optional, Sequence, Tuple

from cpmackey.abgrp.matrix import IntegerMatrix, Vector, block_diagonal
from cpmackey.abgrp.smith import (
    SmithDecomposition,
    column_basis,
    integer_nullspace,
    smith_normal_form,
    solve_column,
    solve_columns,
)
from cpmackey.exceptions import IllDefinedMapError, LiftError, PreconditionError

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class FgAbGroup:
    """Cokernel of `relations`: Z^generator_count modulo the span of its columns."""

    generator_count: int
    relations: IntegerMatrix

    def __post_init__(self):
        if self.relations.rows != self.generator_count:
            raise PreconditionError(
                f"relation matrix has {self.relations.rows} rows "
                f"for {self.generator_count} generators"
            )

    @classmethod
    def free(cls, rank: int) -> "FgAbGroup":
        return cls(rank, IntegerMatrix.zero(rank, 0))

    @classmethod
    def trivial(cls) -> "FgAbGroup":
        return cls.free(0)

    @classmethod
    def cyclic(cls, order: int) -> "FgAbGroup":
        """Z/order on one generator; order 0 gives Z."""
        if order == 0:
            return cls.free(1)
        return cls(1, IntegerMatrix.from_rows([[order]]))

    @classmethod
    def from_invariants(cls, factors: Sequence[int]) -> "FgAbGroup":
        """Direct sum of cyclic groups Z/d, with d == 0 meaning a free summand."""
        return direct_sum_ab(*(cls.cyclic(d) for d in factors))

    @property
    def snf(self) -> SmithDecomposition:
        return smith_normal_form(self.relations)

    def invariant_factors(self) -> List[int]:
        return self.snf.invariant_factors()

    def free_rank(self) -> int:
        return self.generator_count - self.snf.rank

    def order(self) -> Optional[int]:
        """Number of elements, None when the group is infinite."""
        if self.free_rank():
            return None
        return math.prod(self.invariant_factors())

    def is_trivial(self) -> bool:
        return not self.invariant_factors()

    def zero(self) -> Vector:
        return (0,) * self.generator_count

    def basis_vector(self, i: int) -> Vector:
        return tuple(int(k == i) for k in range(self.generator_count))

    def contains(self, v: Sequence[int]) -> bool:
        """True when v represents the zero element."""
        return solve_column(self.relations, v) is not None

    def equal_elements(self, a: Sequence[int], b: Sequence[int]) -> bool:
        return self.contains(tuple(x - y for x, y in zip(a, b)))

    def moduli(self) -> Optional[Tuple[int, ...]]:
        """Per-generator moduli when every relation touches a single generator."""
        mods = [0] * self.generator_count
        for col in self.relations.columns():
            nz = [i for i, x in enumerate(col) if x]
            if len(nz) > 1:
                return None
            if nz:
                mods[nz[0]] = math.gcd(mods[nz[0]], col[nz[0]])
        return tuple(mods)

    def reduce(self, v: Sequence[int]) -> Vector:
        """Canonical representative when the presentation is diagonal, else v."""
        mods = self.moduli()
        if mods is None:
            return tuple(v)
        return tuple(x % m if m else x for x, m in zip(v, mods))

    def elements(self) -> List[Vector]:
        """All elements of a finite group, as vectors on the given generators."""
        if self.free_rank():
            raise PreconditionError("cannot enumerate an infinite group")
        small, _, back = minimal_presentation_ab(self)
        mods = small.moduli()
        return [
            back.apply(coords)
            for coords in itertools.product(*(range(m) for m in mods))
        ]


@dataclass(frozen=True)
class AbHom:
    source: FgAbGroup
    target: FgAbGroup
    matrix: IntegerMatrix

    def __post_init__(self):
        if self.matrix.shape != (self.target.generator_count, self.source.generator_count):
            raise PreconditionError(
                f"matrix of shape {self.matrix.shape} for a map from "
                f"{self.source.generator_count} to {self.target.generator_count} generators"
            )

    def apply(self, v: Sequence[int]) -> Vector:
        return self.matrix.apply(v)

    def __call__(self, v: Sequence[int]) -> Vector:
        return self.apply(v)

    def _check_parallel(self, other: "AbHom"):
        if self.source != other.source or self.target != other.target:
            raise PreconditionError("homomorphisms have different source or target")

    def __add__(self, other: "AbHom") -> "AbHom":
        self._check_parallel(other)
        return AbHom(self.source, self.target, self.matrix + other.matrix)

    def __sub__(self, other: "AbHom") -> "AbHom":
        self._check_parallel(other)
        return AbHom(self.source, self.target, self.matrix - other.matrix)

    def __neg__(self) -> "AbHom":
        return self.scale(-1)

    def scale(self, k: int) -> "AbHom":
        return AbHom(self.source, self.target, self.matrix.scale(k))

    def __matmul__(self, other: "AbHom") -> "AbHom":
        return compose_ab(self, other)

    def is_zero(self) -> bool:
        return solve_columns(self.target.relations, self.matrix) is not None

    def equals(self, other: "AbHom") -> bool:
        self._check_parallel(other)
        return (self - other).is_zero()

    def reduced(self) -> "AbHom":
        """Same map with generator images reduced modulo diagonal target relations."""
        cols = [self.target.reduce(c) for c in self.matrix.columns()]
        if not cols:
            return self
        return AbHom(
            self.source,
            self.target,
            IntegerMatrix.from_columns(cols, rows=self.target.generator_count),
        )


def _first_unsolvable(relations: IntegerMatrix, rhs: IntegerMatrix) -> Optional[int]:
    if solve_columns(relations, rhs) is not None:
        return None
    for j in range(rhs.cols):
        if solve_column(relations, rhs.column(j)) is None:
            return j
    return None


def make_ab_hom(source: FgAbGroup, target: FgAbGroup, m: IntegerMatrix) -> AbHom:
    """Build an AbHom after checking that source relations land in target relations."""
    hom = AbHom(source, target, m)
    bad = _first_unsolvable(target.relations, m @ source.relations)
    if bad is not None:
        raise IllDefinedMapError(bad)
    return hom


def validate_ab_hom(hom: AbHom) -> AbHom:
    return make_ab_hom(hom.source, hom.target, hom.matrix)


def zero_hom(source: FgAbGroup, target: FgAbGroup) -> AbHom:
    return AbHom(
        source,
        target,
        IntegerMatrix.zero(target.generator_count, source.generator_count),
    )


def identity_hom(g: FgAbGroup) -> AbHom:
    return AbHom(g, g, IntegerMatrix.identity(g.generator_count))


def compose_ab(g: AbHom, f: AbHom) -> AbHom:
    """g after f."""
    if f.target != g.source:
        raise PreconditionError("composition through different presentations")
    return AbHom(f.source, g.target, g.matrix @ f.matrix)


def kernel_ab(f: AbHom) -> Tuple[FgAbGroup, AbHom]:
    n = f.source.generator_count
    block = f.matrix.hstack(f.target.relations)
    preimage = integer_nullspace(block).submatrix(row_idx=range(n))
    basis = column_basis(preimage)
    rels = solve_columns(basis, f.source.relations)
    if rels is None:
        raise IllDefinedMapError(
            _first_unsolvable(basis, f.source.relations) or 0,
            "source relations escape the preimage lattice",
        )
    k = FgAbGroup(basis.cols, rels)
    return k, AbHom(k, f.source, basis)


def cokernel_ab(f: AbHom) -> Tuple[FgAbGroup, AbHom]:
    t = f.target
    c = FgAbGroup(t.generator_count, t.relations.hstack(f.matrix))
    return c, AbHom(t, c, IntegerMatrix.identity(t.generator_count))


def direct_sum_ab(*groups: FgAbGroup) -> FgAbGroup:
    if not groups:
        return FgAbGroup.trivial()
    rels = block_diagonal(*(g.relations for g in groups))
    return FgAbGroup(rels.rows, rels)


def direct_sum_hom(*homs: AbHom) -> AbHom:
    return AbHom(
        direct_sum_ab(*(h.source for h in homs)),
        direct_sum_ab(*(h.target for h in homs)),
        block_diagonal(*(h.matrix for h in homs)),
    )


def tensor_ab(g: FgAbGroup, h: FgAbGroup) -> FgAbGroup:
    """Generator (i, j) sits at index i * h.generator_count + j."""
    ig = IntegerMatrix.identity(g.generator_count)
    ih = IntegerMatrix.identity(h.generator_count)
    rels = g.relations.kron(ih).hstack(ig.kron(h.relations))
    return FgAbGroup(g.generator_count * h.generator_count, rels)


def tensor_hom(f1: AbHom, f2: AbHom) -> AbHom:
    return AbHom(
        tensor_ab(f1.source, f2.source),
        tensor_ab(f1.target, f2.target),
        f1.matrix.kron(f2.matrix),
    )


def minimal_presentation_ab(g: FgAbGroup) -> Tuple[FgAbGroup, AbHom, AbHom]:
    """(g', to, from): g' presented by diag(d1, ..., dk) with every di >= 2 plus free generators."""
    snf = g.snf
    diag = snf.diagonal
    rank = snf.rank
    torsion = [i for i in range(rank) if diag[i] > 1]
    keep = torsion + list(range(rank, g.generator_count))
    moduli = [diag[i] for i in torsion]
    small = FgAbGroup(
        len(keep), IntegerMatrix.diagonal(moduli, rows=len(keep), cols=len(moduli))
    )
    to_rows = []
    for pos, i in enumerate(keep):
        row = snf.U.row(i)
        if pos < len(moduli):
            row = tuple(x % moduli[pos] for x in row)
        to_rows.append(row)
    to = AbHom(g, small, IntegerMatrix.from_rows(to_rows, cols=g.generator_count))
    back = AbHom(small, g, snf.U_inv.submatrix(col_idx=keep))
    return small, to, back


def lift_through_ab(f: AbHom, incl: AbHom, check: bool = True) -> AbHom:
    """u with incl @ u == f; raises LiftError when a generator image misses the image of incl."""
    if f.target != incl.target:
        raise PreconditionError("lift target differs from the inclusion's target")
    k = incl.source.generator_count
    system = incl.matrix.hstack(incl.target.relations)
    x = solve_columns(system, f.matrix)
    if x is None:
        raise LiftError(_first_unsolvable(system, f.matrix) or 0)
    u = AbHom(f.source, incl.source, x.submatrix(row_idx=range(k)))
    return validate_ab_hom(u) if check else u
