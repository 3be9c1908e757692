from pathlib import Path

import pytest

from cpmackey.abgrp import FgAbGroup, IntegerMatrix
from cpmackey.mackey import (
    CpMackeyFunctor,
    burnside,
    mackey_from_matrices,
    underlying_free,
    zero_on_underlying,
)
from cpmackey.models import MackeyDocument
from cpmackey.randgen import RandomSpec, random_mackey_functor

FIXTURES = Path(__file__).parent / "fixtures"


def o2_functor() -> CpMackeyFunctor:
    """Z on both levels, p = 2, res = 1, tr = 2, conj = 1."""
    return mackey_from_matrices(
        2,
        FgAbGroup.free(1),
        FgAbGroup.free(1),
        IntegerMatrix.from_rows([[1]]),
        IntegerMatrix.from_rows([[2]]),
        IntegerMatrix.identity(1),
    )


@pytest.fixture
def o2():
    return o2_functor()


@pytest.fixture
def small_functors(o2):
    return [
        burnside(2),
        underlying_free(2),
        o2,
        zero_on_underlying(2, FgAbGroup.cyclic(2)),
    ]


@pytest.fixture
def write_functor(tmp_path):
    def _write(m: CpMackeyFunctor, name: str) -> str:
        path = tmp_path / f"{name}.json"
        path.write_text(MackeyDocument.from_functor(m, name=name).dump())
        return str(path)

    return _write


@pytest.fixture
def stored_pair():
    """The stored p = 3 pair rand1, rand2."""
    return tuple(
        MackeyDocument.model_validate_json((FIXTURES / f"{name}.json").read_text()).to_functor()
        for name in ("rand1", "rand2")
    )


@pytest.fixture
def random_pair():
    """Seeded (M, N); at p = 5 each has at most one free summand of each kind."""

    def _pair(p: int, seed: int):
        bounds = {"max_free": 1} if p >= 5 else {}
        return tuple(
            random_mackey_functor(RandomSpec(prime=p, seed=s, **bounds))
            for s in (2 * seed, 2 * seed + 1)
        )

    return _pair
