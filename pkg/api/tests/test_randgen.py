import pytest
from pydantic import ValidationError

from cpmackey.mackey import is_cohomological
from cpmackey.mackey.functor import validate_mackey_hom
from cpmackey.randgen import (
    RandomSpec,
    random_cohomological_functor,
    random_cp_module,
    random_functors,
    random_mackey_functor,
    random_mackey_hom,
    streams,
)


def test_streams_are_reproducible():
    a = [int(g.integers(0, 1000)) for g in streams(42, 3)]
    b = [int(g.integers(0, 1000)) for g in streams(42, 3)]
    assert a == b


@pytest.mark.parametrize("p", [2, 3, 5])
def test_random_functors_are_deterministic(p):
    spec = RandomSpec(prime=p, seed=11)
    assert random_mackey_functor(spec) == random_mackey_functor(spec)
    assert random_functors(p, [1, 2]) == random_functors(p, [1, 2])


def test_random_functor_has_a_generator():
    for seed in range(10):
        m = random_mackey_functor(RandomSpec(prime=2, seed=seed, max_free=0, max_rel=0))
        assert m.fixed.generator_count == 2
        assert m.underlying.generator_count == 1


def test_random_spec_validation():
    with pytest.raises(ValidationError):
        RandomSpec(prime=2, seed=-1)
    with pytest.raises(ValidationError):
        RandomSpec(prime=2, seed=2**64)


@pytest.mark.parametrize("seed", range(4))
def test_random_hom_is_valid(seed):
    m = random_mackey_functor(RandomSpec(prime=2, seed=seed))
    n = random_mackey_functor(RandomSpec(prime=2, seed=seed + 100))
    f = random_mackey_hom(m, n, seed)
    validate_mackey_hom(f)
    assert f == random_mackey_hom(m, n, seed)


@pytest.mark.parametrize("p", [2, 3, 5])
@pytest.mark.parametrize("seed", range(6))
def test_random_cohomological_functors(p, seed):
    assert is_cohomological(random_cohomological_functor(p, seed))
    c = random_cp_module(p, seed)
    assert (c @ c).source == c.source
