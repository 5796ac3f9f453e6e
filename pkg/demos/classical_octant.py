#!/usr/bin/env python3
"""Probability vectors live on a sphere octant.

The map p -> sqrt(p) sends the simplex to the positive octant of the unit
sphere, and the statistical distance between distributions is exactly the
great-circle arc between their images.  This demo walks through the basic
facts: the closed form for binary distributions, contraction under
coarse-graining, how the naive flat distance gets it wrong, and the
Jeffreys density that the round geometry induces.
"""

import math

import numpy as np

from statgeom import (
    apply_stochastic,
    euclidean_distance,
    fr_geodesic_distance,
    jeffreys_density,
    sphere_embed,
    stochastic_matrix,
)


def arc_versus_formula():
    print("== arc length on the octant ==")
    alpha = 0.9
    p = np.array([np.cos(alpha) ** 2, np.sin(alpha) ** 2])
    uniform = np.array([0.5, 0.5])
    d = fr_geodesic_distance(p, uniform)
    print(f"p = {p}")
    print(f"distance to uniform      : {d:.12f}")
    print(f"closed form |alpha - pi/4|: {abs(alpha - np.pi / 4):.12f}")

    x, y = sphere_embed(p), sphere_embed(uniform)
    print(f"sqrt embeddings are unit vectors: {np.dot(x, x):.15f}, {np.dot(y, y):.15f}")
    print(f"arccos of their dot product      : {np.arccos(np.dot(x, y)):.12f}")
    print()


def coarse_graining_contracts():
    print("== merging outcomes can only shrink the distance ==")
    t = stochastic_matrix(np.array([[1.0, 0.0, 0.0], [0.0, 1.0, 1.0]]))
    p = np.array([0.1, 0.5, 0.4])
    q = np.array([0.4, 0.2, 0.4])
    before = fr_geodesic_distance(p, q)
    after = fr_geodesic_distance(apply_stochastic(t, p), apply_stochastic(t, q))
    print(f"three outcomes : {before:.12f}")
    print(f"merged to two  : {after:.12f}  (smaller)")
    print()

    print("the flat distance has no such guarantee:")
    p = np.array([1.0, 0.0, 0.0])
    q = np.array([0.0, 0.5, 0.5])
    before = euclidean_distance(p, q)
    after = euclidean_distance(apply_stochastic(t, p), apply_stochastic(t, q))
    print(f"  |p - q|  before merging: {before:.12f}  (= sqrt 1.5)")
    print(f"  |p - q|  after merging : {after:.12f}  (= sqrt 2, stretched!)")
    print()


def jeffreys_round_volume():
    print("== the round volume element, normalized ==")
    print("density at the uniform point:")
    d2 = jeffreys_density(np.array([0.5, 0.5]))
    d3 = jeffreys_density(np.array([1 / 3, 1 / 3, 1 / 3]))
    print(f"  N=2: {d2:.12f}   (2/pi       = {2 / np.pi:.12f})")
    print(f"  N=3: {d3:.12f}   (3 sqrt3/2pi = {3 * np.sqrt(3) / (2 * np.pi):.12f})")

    # Monte Carlo consistency: sampling from the density itself and
    # averaging (flat density / jeffreys density) must give exactly 1.
    rng = np.random.default_rng(2)
    n = 4
    flat = float(math.factorial(n - 1))
    draws = rng.dirichlet([0.5] * n, size=20000)
    vals = [flat / jeffreys_density(p) for p in draws]
    print(f"  N=4 importance-sampling check (should be ~1): {np.mean(vals):.4f}")
    print()


if __name__ == "__main__":
    np.set_printoptions(precision=6, suppress=True)
    arc_versus_formula()
    coarse_graining_contracts()
    jeffreys_round_volume()
