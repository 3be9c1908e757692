#!/usr/bin/env python3
"""
Worked computations with C_p-Mackey functors

This script walks through the standard examples step by step:
1. Building functors - the Burnside functor, the free functor on an
   underlying generator and a functor given by explicit matrices
2. A projective resolution without pruning, printed level by level
3. Tor and Ext of that functor with itself
4. Cohomological Ext and Tor for p = 11
5. Vanishing of Ext between an orbit functor and a functor concentrated
   on the fixed level

Prerequisites:
- Install the cpmackey package: cd .. && pip3 install -e .
"""
import argparse
import sys
import time
from pathlib import Path

# Setup paths
script_dir = Path(__file__).parent
api_dir = script_dir.parent

# Add API directory to path
if str(api_dir) not in sys.path:
    sys.path.insert(0, str(api_dir))

from dotenv import load_dotenv  # noqa: E402

load_dotenv(api_dir.parent / ".env")

from cpmackey.abgrp import AbHom, FgAbGroup, IntegerMatrix  # noqa: E402
from cpmackey.homalg import ext, ext_coh, resolution, tor, tor_coh  # noqa: E402
from cpmackey.mackey import (  # noqa: E402
    burnside,
    fixed_point,
    format_invariants,
    mackey_from_matrices,
    orbit,
    prune,
    render_functor,
    render_hom,
    underlying_free,
    zero_on_underlying,
)


def banner(title: str):
    print(f"\n{'=' * 70}")
    print(title)
    print(f"{'=' * 70}")


def step(title: str):
    print(f"\n{'=' * 50}")
    print(title)
    print(f"{'=' * 50}")


def o2_functor():
    return mackey_from_matrices(
        2,
        FgAbGroup.free(1),
        FgAbGroup.free(1),
        IntegerMatrix.from_rows([[1]]),
        IntegerMatrix.from_rows([[2]]),
        IntegerMatrix.identity(1),
    )


def run_constructors():
    step("STEP 1: BUILDING FUNCTORS")
    print(render_functor(burnside(2), name="A"))
    print()
    print(render_functor(underlying_free(3), name="B"))
    print()
    print(render_functor(o2_functor(), name="M"))


def run_resolution(length: int):
    step(f"STEP 2: RESOLUTION OF M, {length + 1} DIFFERENTIALS, NO PRUNING")
    complex_ = resolution(o2_functor(), length, prune=False)
    for i, (d, ranks) in enumerate(zip(complex_.differentials, complex_.ranks())):
        print(f"\nd{i}: P{i} has ranks (fixed {ranks[0]}, underlying {ranks[1]})")
        print(render_hom(d))
    print(f"\nd o d = 0: {complex_.is_complex()}")
    print(f"d0 surjective: {complex_.is_augmented()}")


def run_tor_ext(degree: int):
    step("STEP 3: TOR AND EXT OF M WITH ITSELF")
    m = o2_functor()
    for i in range(degree + 1):
        start = time.time()
        t = prune(tor(i, m, m))
        e = prune(ext(i, m, m))
        print(f"\nTor_{i}(M, M)  {format_invariants(t)}")
        print(f"Ext^{i}(M, M)  {format_invariants(e)}")
        print(f"  ({time.time() - start:.2f}s)")


def run_cohomological(p: int):
    step(f"STEP 4: COHOMOLOGICAL EXT AND TOR FOR p = {p}")
    b1 = zero_on_underlying(p, FgAbGroup.cyclic(p))
    zu = fixed_point(p, AbHom(FgAbGroup.free(1), FgAbGroup.free(1), IntegerMatrix.identity(1)))
    for i in range(4):
        print(f"\nExtCoh^{i}(B1, Z)   {format_invariants(prune(ext_coh(i, b1, zu)))}")
        print(f"TorCoh_{i}(B1, B1)  {format_invariants(prune(tor_coh(i, b1, b1)))}")


def run_orbit_vanishing(p: int, q: int, i: int):
    step(f"STEP 5: ORBIT FUNCTOR OF x{q ** i} ON Z/({q}^{i * p} - 1), p = {p}")
    x = FgAbGroup.cyclic(q ** (i * p) - 1)
    r = orbit(p, AbHom(x, x, IntegerMatrix.from_rows([[q**i]])))
    z = zero_on_underlying(p, FgAbGroup.free(1))
    print(render_functor(prune(r), name="R"))
    print(f"\nExt^1(R, Z)  {format_invariants(prune(ext(1, r, z)))}")
    print(f"Ext^1(Z, R)  {format_invariants(prune(ext(1, z, r)))}")


def main():
    parser = argparse.ArgumentParser(description="Worked Mackey functor computations")
    parser.add_argument("--length", type=int, default=2, help="Resolution length")
    parser.add_argument("--degree", type=int, default=4, help="Highest Tor/Ext degree")
    parser.add_argument("--skip-slow", action="store_true", help="Skip steps 4 and 5")
    args = parser.parse_args()

    banner("C_p-MACKEY FUNCTOR COMPUTATIONS")
    run_constructors()
    run_resolution(args.length)
    run_tor_ext(args.degree)
    if not args.skip_slow:
        run_cohomological(11)
        run_orbit_vanishing(5, 7, 2)


if __name__ == "__main__":
    main()
