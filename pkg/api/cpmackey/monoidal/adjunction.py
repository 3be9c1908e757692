import logging
from dataclasses import dataclass

from cpmackey.abgrp import AbHom, IntegerMatrix
from cpmackey.mackey import CpMackeyFunctor, MackeyHom
from cpmackey.mackey.functor import check_same_prime
from cpmackey.monoidal.box import box_product
from cpmackey.monoidal.internal_hom import (
    HomMackGroup,
    _columns_to_matrix,
    internal_hom_data,
)

logger = logging.getLogger(__name__)


@dataclass
class AdjunctionWitness:
    """Hom(M [x] N, P) ~ Hom(M, [N, P]), realized on homomorphisms and on
    elements of the two hom groups."""

    m: CpMackeyFunctor
    n: CpMackeyFunctor
    p: CpMackeyFunctor

    def __post_init__(self):
        check_same_prime(self.m.prime, self.n.prime)
        check_same_prime(self.m.prime, self.p.prime)
        self.box = box_product(self.m, self.n)
        self.inner = internal_hom_data(self.n, self.p)
        self.left = HomMackGroup(self.box, self.p)
        self.right = HomMackGroup(self.m, self.inner.functor)

    def forward(self, phi: MackeyHom) -> MackeyHom:
        """phi : M [x] N -> P  to  psi : M -> [N, P]."""
        m, n, inner = self.m, self.n, self.inner
        f_n, u_n = n.fixed.generator_count, n.underlying.generator_count
        phi_f, phi_u = phi.fixed_map.matrix, phi.underlying_map.matrix

        und_cols = []
        for a in range(m.underlying.generator_count):
            block = phi_u.submatrix(col_idx=range(a * u_n, (a + 1) * u_n))
            und_cols.append(
                inner.underlying_homs.hom_to_element(AbHom(n.underlying, self.p.underlying, block))
            )
        ambient_cols = []
        for alpha in range(m.fixed.generator_count):
            fixed_part = phi_f.submatrix(col_idx=range(alpha * f_n, (alpha + 1) * f_n))
            res_col = IntegerMatrix.column_vector(m.res.matrix.column(alpha))
            und_part = phi_u @ res_col.kron(IntegerMatrix.identity(u_n))
            ambient_cols.append(
                inner.ambient_element(
                    AbHom(n.fixed, self.p.fixed, fixed_part),
                    AbHom(n.underlying, self.p.underlying, und_part),
                )
            )
        fixed = inner.lift(ambient_cols, m.fixed)
        und = _columns_to_matrix(und_cols, inner.functor.underlying.generator_count)
        return MackeyHom(
            m,
            inner.functor,
            fixed,
            AbHom(m.underlying, inner.functor.underlying, und),
        )

    def backward(self, psi: MackeyHom) -> MackeyHom:
        """psi : M -> [N, P]  to  phi : M [x] N -> P."""
        m, n, inner = self.m, self.n, self.inner
        und_cols = []
        for a in range(m.underlying.generator_count):
            h = inner.underlying_homs.element_to_hom(psi.underlying_map.matrix.column(a))
            und_cols += h.matrix.columns()
        fixed_cols = []
        for alpha in range(m.fixed.generator_count):
            g = inner.element_to_hom(psi.fixed_map.matrix.column(alpha))
            fixed_cols += g.fixed_map.matrix.columns()
        und = _columns_to_matrix(und_cols, self.p.underlying.generator_count)
        fixed_cols += (self.p.tr.matrix @ und).columns()
        fixed = _columns_to_matrix(fixed_cols, self.p.fixed.generator_count)
        return MackeyHom(
            self.box,
            self.p,
            AbHom(self.box.fixed, self.p.fixed, fixed),
            AbHom(self.box.underlying, self.p.underlying, und),
        )

    def forward_element(self, v):
        return self.right.hom_to_element(self.forward(self.left.element_to_hom(v)))

    def backward_element(self, w):
        return self.left.hom_to_element(self.backward(self.right.element_to_hom(w)))


def adjunction_witness(m: CpMackeyFunctor, n: CpMackeyFunctor, p: CpMackeyFunctor) -> AdjunctionWitness:
    return AdjunctionWitness(m, n, p)
