import logging
import math
from dataclasses import dataclass
from typing import List, Sequence, Tuple

from cpmackey.abgrp.groups import AbHom, FgAbGroup
from cpmackey.abgrp.matrix import IntegerMatrix, Vector
from cpmackey.exceptions import PreconditionError

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class _Slot:
    """Cyclic summand of Hom sitting at (row i, column j) in Smith coordinates."""

    i: int
    j: int
    step: int
    order: int  # 0 for a free summand


def _moduli(g: FgAbGroup) -> List[int]:
    diag = g.snf.diagonal
    return [diag[k] if k < len(diag) else 0 for k in range(g.generator_count)]


@dataclass(frozen=True)
class HomGroup:
    """Presentation of the group of homomorphisms source -> target.

    In Smith coordinates of both groups a homomorphism is a matrix whose
    (i, j) entry lives in a cyclic group; `group` has one generator per
    non-trivial such slot.
    """

    source: FgAbGroup
    target: FgAbGroup
    group: FgAbGroup
    slots: Tuple[_Slot, ...]

    def element_to_hom(self, v: Sequence[int]) -> AbHom:
        if len(v) != self.group.generator_count:
            raise PreconditionError(
                f"element of length {len(v)} for a hom group on "
                f"{self.group.generator_count} generators"
            )
        n, m = self.target.generator_count, self.source.generator_count
        phi = [[0] * m for _ in range(n)]
        for coef, slot in zip(v, self.slots):
            phi[slot.i][slot.j] += coef * slot.step
        phi_m = IntegerMatrix.from_rows(phi, cols=m)
        matrix = self.target.snf.U_inv @ phi_m @ self.source.snf.U
        return AbHom(self.source, self.target, matrix)

    def hom_to_element(self, hom: AbHom) -> Vector:
        if hom.source != self.source or hom.target != self.target:
            raise PreconditionError("homomorphism does not belong to this hom group")
        phi = self.target.snf.U @ hom.matrix @ self.source.snf.U_inv
        tgt_mod = _moduli(self.target)
        coords = []
        for slot in self.slots:
            a = phi[slot.i, slot.j]
            if tgt_mod[slot.i]:
                a %= tgt_mod[slot.i]
            q = a // slot.step
            coords.append(q % slot.order if slot.order else q)
        return tuple(coords)

    def elements(self) -> List[Vector]:
        return self.group.elements()


def hom_group_ab(g: FgAbGroup, h: FgAbGroup) -> HomGroup:
    """Hom(g, h) via the Smith forms of both presentations."""
    src_mod = _moduli(g)
    tgt_mod = _moduli(h)
    slots = []
    for i, f in enumerate(tgt_mod):
        for j, e in enumerate(src_mod):
            if f == 0:
                if e == 0:
                    slots.append(_Slot(i, j, 1, 0))
                continue
            order = math.gcd(e, f)
            if order > 1:
                slots.append(_Slot(i, j, f // order, order))
    torsion = [s.order for s in slots if s.order]
    positions = [k for k, s in enumerate(slots) if s.order]
    rels = IntegerMatrix.zero(len(slots), len(torsion)).to_rows()
    for col, (k, order) in enumerate(zip(positions, torsion)):
        rels[k][col] = order
    group = FgAbGroup(len(slots), IntegerMatrix.from_rows(rels, cols=len(torsion)))
    return HomGroup(g, h, group, tuple(slots))
