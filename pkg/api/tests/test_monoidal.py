import pytest

from cpmackey.abgrp import AbHom, FgAbGroup, IntegerMatrix, hom_group_ab, identity_hom
from cpmackey.homalg import homology_at
from cpmackey.mackey import (
    burnside,
    cokernel_mackey,
    compose_mackey,
    fixed_point,
    identity_mackey,
    invariants,
    is_isomorphism_mackey,
    is_zero_mackey,
    kernel_mackey,
    make_mackey_hom,
    prune,
    underlying_free,
    zero_functor,
    zero_on_underlying,
)
from cpmackey.mackey.abelian import is_identity
from cpmackey.monoidal import (
    AdjunctionWitness,
    HomMackGroup,
    box_hom,
    box_hom_right,
    box_product,
    box_symmetry,
    burnside_internal_hom_iso,
    internal_hom,
    internal_hom_map,
    internal_hom_map_right,
    left_unitor,
    right_unitor,
)
from cpmackey.randgen import RandomSpec, random_cp_module, random_mackey_functor, random_mackey_hom

PRIMES = [2, 3, pytest.param(5, marks=pytest.mark.slow)]


def test_box_with_underlying_free_is_free_on_underlying_level(o2):
    b = box_product(underlying_free(2), o2)
    assert b.underlying.invariant_factors() == [0, 0]


def test_box_with_zero_is_zero(o2):
    assert is_zero_mackey(box_product(o2, zero_functor(2)))


def test_unitors_are_isomorphisms(small_functors):
    for m in small_functors:
        assert is_isomorphism_mackey(left_unitor(m))
        assert is_isomorphism_mackey(right_unitor(m))


def test_symmetry_is_an_involution(o2):
    a = burnside(2)
    there = box_symmetry(a, o2)
    back = box_symmetry(o2, a)
    assert is_identity(compose_mackey(back, there))


def test_box_hom_is_functorial(o2):
    double = make_mackey_hom(o2, o2, IntegerMatrix.from_rows([[2]]), IntegerMatrix.from_rows([[2]]))
    n = burnside(2)
    assert is_identity(box_hom(identity_mackey(o2), n))
    squared = compose_mackey(box_hom(double, n), box_hom(double, n))
    assert squared.equals(box_hom(compose_mackey(double, double), n))


def test_internal_hom_from_burnside(small_functors):
    for m in small_functors:
        assert invariants(internal_hom(burnside(2), m)) == invariants(m)
        assert is_isomorphism_mackey(burnside_internal_hom_iso(m))


def test_internal_hom_into_zero(small_functors):
    for m in small_functors:
        assert is_zero_mackey(internal_hom(m, zero_functor(2)))


def test_hom_group_of_o2(o2):
    homs = HomMackGroup(o2, o2)
    assert homs.group.invariant_factors() == [0]
    ident = identity_mackey(o2)
    v = homs.hom_to_element(ident)
    assert homs.element_to_hom(v).equals(ident)


def test_hom_group_from_torsion():
    m = zero_on_underlying(3, FgAbGroup.cyclic(3))
    n = zero_on_underlying(3, FgAbGroup.cyclic(9))
    homs = HomMackGroup(m, n)
    assert homs.group.invariant_factors() == [3]
    assert len(homs.elements()) == 3


def test_internal_hom_maps_preserve_identities(o2):
    a = burnside(2)
    assert is_identity(internal_hom_map(identity_mackey(o2), a))
    assert is_identity(internal_hom_map_right(a, identity_mackey(o2)))


def test_internal_hom_map_reverses_composition(o2):
    double = make_mackey_hom(o2, o2, IntegerMatrix.from_rows([[2]]), IntegerMatrix.from_rows([[2]]))
    triple = make_mackey_hom(o2, o2, IntegerMatrix.from_rows([[3]]), IntegerMatrix.from_rows([[3]]))
    n = underlying_free(2)
    lhs = internal_hom_map(compose_mackey(triple, double), n)
    rhs = compose_mackey(internal_hom_map(double, n), internal_hom_map(triple, n))
    assert lhs.equals(rhs)


def test_adjunction_round_trip(o2):
    witness = AdjunctionWitness(o2, burnside(2), o2)
    left, right = witness.left.group, witness.right.group
    for k in range(left.generator_count):
        v = left.basis_vector(k)
        assert left.equal_elements(witness.backward_element(witness.forward_element(v)), v)
    for k in range(right.generator_count):
        w = right.basis_vector(k)
        assert right.equal_elements(witness.forward_element(witness.backward_element(w)), w)


def test_box_hom_right_is_box_hom_conjugated_by_symmetry(o2):
    a = burnside(2)
    double = make_mackey_hom(o2, o2, IntegerMatrix.from_rows([[2]]), IntegerMatrix.from_rows([[2]]))
    assert is_identity(box_hom_right(a, identity_mackey(o2)))
    swapped = compose_mackey(
        box_symmetry(o2, a), compose_mackey(box_hom(double, a), box_symmetry(a, o2))
    )
    assert box_hom_right(a, double).equals(swapped)


def test_stored_pair_box_and_internal_hom(stored_pair):
    rand1, rand2 = stored_pair
    box = prune(box_product(rand1, rand2))
    ihom = prune(internal_hom(rand1, rand2))
    for m in (box, ihom):
        assert invariants(m) == ([5], [5])
        res, tr, conj = (x.matrix.to_rows()[0][0] for x in (m.res, m.tr, m.conj))
        # res o tr is a scalar on Z/5, independent of the chosen generators
        assert (res * tr) % 5 == 3
        assert conj % 5 == 1
    assert (ihom.res.matrix.to_rows()[0][0] % 5, ihom.tr.matrix.to_rows()[0][0] % 5) == (2, 4)


def _module_internal_hom(p: int, x: AbHom, y: AbHom) -> AbHom:
    """Hom(X, Y) with the generator acting by h -> y h x^(p-1)."""
    homs = hom_group_ab(x.source, y.source)
    x_inv = identity_hom(x.source)
    for _ in range(p - 1):
        x_inv = x @ x_inv
    columns = [
        homs.hom_to_element(y @ homs.element_to_hom(homs.group.basis_vector(k)) @ x_inv)
        for k in range(homs.group.generator_count)
    ]
    action = IntegerMatrix.from_columns(columns, rows=homs.group.generator_count)
    return AbHom(homs.group, homs.group, action)


@pytest.mark.parametrize("p", [2, 3])
@pytest.mark.parametrize("seed", range(10))
def test_internal_hom_of_fixed_point_functors(p, seed):
    x = random_cp_module(p, 2 * seed, max_summands=1)
    y = random_cp_module(p, 2 * seed + 1, max_summands=1)
    ihom = internal_hom(fixed_point(p, x), fixed_point(p, y))
    assert invariants(ihom) == invariants(fixed_point(p, _module_internal_hom(p, x, y)))


@pytest.mark.slow
@pytest.mark.parametrize("p", [2, 3])
@pytest.mark.parametrize("seed", range(10))
def test_internal_hom_is_left_exact(p, seed, random_pair):
    m, n = random_pair(p, seed)
    target = random_mackey_functor(RandomSpec(prime=p, seed=1000 + seed))
    f = random_mackey_hom(m, n, seed)
    _, incl = kernel_mackey(f)
    _, quotient = cokernel_mackey(incl)
    first = internal_hom_map(quotient, target)
    second = internal_hom_map(incl, target)
    assert is_zero_mackey(kernel_mackey(first)[0])
    assert is_zero_mackey(homology_at(first, second))


@pytest.mark.parametrize("p", PRIMES)
@pytest.mark.parametrize("seed", range(20))
def test_monoidal_properties_on_random_functors(p, seed):
    m = random_mackey_functor(RandomSpec(prime=p, seed=seed))
    assert is_isomorphism_mackey(left_unitor(m))
    assert is_isomorphism_mackey(right_unitor(m))
    assert invariants(internal_hom(burnside(p), m)) == invariants(m)
    assert is_zero_mackey(internal_hom(m, zero_functor(p)))


@pytest.mark.parametrize("p", PRIMES)
@pytest.mark.parametrize("seed", range(20))
def test_box_symmetry_on_random_pairs(p, seed, random_pair):
    m, n = random_pair(p, seed)
    assert invariants(box_product(m, n)) == invariants(box_product(n, m))
    assert is_identity(compose_mackey(box_symmetry(n, m), box_symmetry(m, n)))


@pytest.mark.parametrize("p", PRIMES)
@pytest.mark.parametrize("seed", range(20))
def test_adjunction_round_trip_on_random_functors(p, seed, random_pair):
    m, n = random_pair(p, seed)
    witness = AdjunctionWitness(m, n, zero_on_underlying(p, FgAbGroup.cyclic(p)))
    left, right = witness.left.group, witness.right.group
    if left.order() is not None and left.order() <= 64:
        samples = left.elements()
    else:
        samples = [left.basis_vector(k) for k in range(left.generator_count)]
    for v in samples:
        assert left.equal_elements(witness.backward_element(witness.forward_element(v)), v)
    for k in range(right.generator_count):
        w = right.basis_vector(k)
        assert right.equal_elements(witness.forward_element(witness.backward_element(w)), w)
