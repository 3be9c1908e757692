import pytest

from cpmackey.abgrp import AbHom, FgAbGroup, IntegerMatrix
from cpmackey.exceptions import NotCohomologicalError, PreconditionError
from cpmackey.homalg import (
    cohomological_cover,
    ext,
    ext_coh,
    ext_from_resolution,
    ext_series,
    free_cover,
    hom_from_fixed_element,
    hom_from_underlying_element,
    resolution,
    tor,
    tor_coh,
)
from cpmackey.mackey import (
    burnside,
    cokernel_mackey,
    fixed_point,
    invariants,
    is_cohomological,
    is_zero_mackey,
    make_cp_mackey_functor,
    orbit,
    prune,
    underlying_free,
    zero_functor,
    zero_on_underlying,
)
from cpmackey.monoidal import box_product, internal_hom
from cpmackey.randgen import random_cohomological_functor

PRIMES = [2, 3, pytest.param(5, marks=pytest.mark.slow)]


def test_hom_from_fixed_element(o2):
    f = hom_from_fixed_element(o2, (1,))
    assert f.fixed_map.matrix.to_rows() == [[1, 2]]
    assert f.underlying_map.matrix.to_rows() == [[1]]


def test_hom_from_underlying_element(o2):
    f = hom_from_underlying_element(o2, (1,))
    assert f.fixed_map.matrix.to_rows() == [[2]]
    assert f.underlying_map.matrix.to_rows() == [[1, 1]]


def test_element_length_is_checked(o2):
    with pytest.raises(PreconditionError):
        hom_from_fixed_element(o2, (1, 0))


@pytest.mark.parametrize("strategy", ["minimal", "levelwise"])
def test_free_cover_is_surjective(small_functors, strategy):
    for m in small_functors:
        cover = free_cover(m, strategy=strategy)
        assert cover.target == m
        assert is_zero_mackey(cokernel_mackey(cover)[0])


def test_free_cover_of_zero():
    cover = free_cover(zero_functor(3))
    assert is_zero_mackey(cover.source)


def test_cohomological_cover(o2):
    cover = cohomological_cover(o2)
    assert is_zero_mackey(cokernel_mackey(cover)[0])
    assert is_cohomological(cover.source)
    with pytest.raises(NotCohomologicalError):
        cohomological_cover(burnside(2))


def test_resolution_of_o2_without_pruning(o2):
    complex_ = resolution(o2, 2, prune=False)
    assert len(complex_) == 3
    assert complex_.ranks() == [(3, 3), (3, 3), (1, 2)]
    assert complex_.differentials[0].fixed_map.matrix.to_rows() == [[2, 1, 2]]
    assert complex_.is_complex()
    assert complex_.is_augmented()
    assert is_zero_mackey(complex_.homology(1))


def test_resolution_length_zero(o2):
    complex_ = resolution(o2, 0)
    assert len(complex_) == 1
    with pytest.raises(PreconditionError):
        resolution(o2, -1)


@pytest.mark.parametrize("p", PRIMES)
@pytest.mark.parametrize("seed", range(20))
def test_random_functors_satisfy_axioms_and_are_covered(random_pair, p, seed):
    m, _ = random_pair(p, seed)
    assert make_cp_mackey_functor(p, m.res, m.tr, m.conj) == m
    cover = free_cover(m)
    assert is_zero_mackey(cokernel_mackey(cover)[0])


@pytest.mark.parametrize("p", PRIMES)
@pytest.mark.parametrize("seed", range(20))
def test_resolutions_of_random_functors_are_exact(random_pair, p, seed):
    m, _ = random_pair(p, seed)
    complex_ = resolution(m, 4)
    assert complex_.is_complex()
    assert complex_.is_augmented()
    for i in (1, 2, 3):
        assert is_zero_mackey(complex_.homology(i))


@pytest.mark.parametrize("p", PRIMES)
@pytest.mark.parametrize("seed", range(20))
def test_degree_zero_ext_and_tor_on_random_pairs(random_pair, p, seed):
    m, n = random_pair(p, seed)
    assert invariants(ext(0, m, n)) == invariants(internal_hom(m, n))
    assert invariants(tor(0, m, n)) == invariants(box_product(m, n))


@pytest.mark.parametrize("p", PRIMES)
@pytest.mark.parametrize("seed", range(20))
def test_projectives_have_no_higher_ext_into_random_functors(random_pair, p, seed):
    _, n = random_pair(p, seed)
    for p_module in (burnside(p), underlying_free(p)):
        series = ext_series([1, 2, 3], p_module, n)
        assert all(is_zero_mackey(v) for v in series.values())


def test_degree_zero_ext_and_tor(o2):
    a = burnside(2)
    assert invariants(ext(0, o2, a)) == invariants(internal_hom(o2, a))
    assert invariants(tor(0, o2, a)) == invariants(box_product(o2, a))
    assert invariants(ext(0, a, o2)) == invariants(o2)


def test_projective_arguments_have_no_higher_ext(o2):
    for p_module in (burnside(2), underlying_free(2)):
        series = ext_series([1, 2, 3], p_module, o2)
        assert all(is_zero_mackey(v) for v in series.values())
        for i in (1, 2):
            assert is_zero_mackey(tor(i, p_module, o2))


def test_ext_from_resolution_matches_ext(o2):
    complex_ = resolution(o2, 3)
    assert invariants(ext_from_resolution(1, complex_, o2)) == invariants(ext(1, o2, o2))
    with pytest.raises(PreconditionError):
        ext_from_resolution(3, complex_, o2)


def test_zero_first_argument_short_circuits(o2):
    assert is_zero_mackey(ext(5, zero_functor(2), o2))
    assert is_zero_mackey(tor(5, zero_functor(2), o2))


def test_invalid_arguments(o2):
    with pytest.raises(PreconditionError):
        ext(-1, o2, o2)
    with pytest.raises(PreconditionError):
        tor(0, o2, burnside(3))
    with pytest.raises(NotCohomologicalError):
        ext_coh(0, burnside(2), o2)


@pytest.mark.slow
def test_tor_one_and_ext_four_of_o2(o2):
    t1 = prune(tor(1, o2, o2))
    assert invariants(t1) == ([2], [])
    e4 = prune(ext(4, o2, o2))
    assert invariants(e4) == ([2], [])
    assert e4.res.is_zero() and e4.tr.is_zero() and e4.conj.is_zero()


@pytest.mark.slow
@pytest.mark.parametrize("p,q,i", [(5, 7, 2), (3, 2, 1), (2, 3, 1)])
@pytest.mark.parametrize("group", [FgAbGroup.free(1), FgAbGroup.cyclic(4)], ids=["Z", "Z4"])
def test_orbit_functor_ext_vanishing(p, q, i, group):
    order = q ** (i * p) - 1
    x = FgAbGroup.cyclic(order)
    r = orbit(p, AbHom(x, x, IntegerMatrix.from_rows([[q**i]])))
    z = zero_on_underlying(p, group)
    assert is_zero_mackey(prune(ext(1, r, z)))
    assert is_zero_mackey(prune(ext(1, z, r)))


@pytest.mark.slow
def test_cohomological_ext_with_z_underline():
    p = 11
    b1 = zero_on_underlying(p, FgAbGroup.cyclic(p))
    zu = fixed_point(p, AbHom(FgAbGroup.free(1), FgAbGroup.free(1), IntegerMatrix.identity(1)))
    for i in range(3):
        assert is_zero_mackey(prune(ext_coh(i, b1, zu)))
    assert invariants(prune(ext_coh(3, b1, zu))) == ([p], [])


@pytest.mark.slow
def test_cohomological_tor_of_b1():
    p = 11
    b1 = zero_on_underlying(p, FgAbGroup.cyclic(p))
    for i in (0, 3):
        assert invariants(prune(tor_coh(i, b1, b1))) == ([p], [])
    for i in (1, 2):
        assert is_zero_mackey(prune(tor_coh(i, b1, b1)))


@pytest.mark.slow
@pytest.mark.parametrize("p", [2, 3])
@pytest.mark.parametrize("seed", range(20))
def test_cohomological_global_dimension(p, seed):
    m = random_cohomological_functor(p, 2 * seed)
    n = random_cohomological_functor(p, 2 * seed + 1)
    for i in (4, 5):
        assert is_zero_mackey(ext_coh(i, m, n))
