"""Shared builders for the test suite."""

import random

from schurcx import FreeComplex, PolyMatrix, PolyRing, RATIONALS


def partitions(r, cap=None):
    """All partitions of r with parts bounded by cap, largest part first."""
    if r == 0:
        yield ()
        return
    cap = cap or r
    for first in range(min(r, cap), 0, -1):
        for rest in partitions(r - first, first):
            yield (first,) + rest


def generic_matrix_complex(nrows, ncols, field=RATIONALS):
    """Two-term complex whose differential is a matrix of indeterminates."""
    names = tuple("x%d%d" % (i, j)
                  for i in range(1, nrows + 1) for j in range(1, ncols + 1))
    ring = PolyRing(field, names)
    rows = [[ring.variable("x%d%d" % (i, j)) for j in range(1, ncols + 1)]
            for i in range(1, nrows + 1)]
    return FreeComplex(ring, 0, (nrows, ncols), (PolyMatrix(ring, rows),))


def _random_poly(ring, rng):
    p = ring.zero()
    for _ in range(rng.randint(0, 2)):
        exps = tuple(rng.randint(0, 1) for _ in ring.variables)
        c = rng.choice([-2, -1, 1, 2, 3])
        p = p + ring.polynomial({exps: ring.field.coerce(c)})
    return p


def random_three_term(seed, field=RATIONALS, max_rank=3):
    """Random complex F0 <- F1 <- F2 with d1.d2 = 0 by construction.

    d2 hits only the first k coordinates of F1 and d1 kills them, then both
    are sheared by a unimodular change of basis of F1 to hide the block
    structure.
    """
    rng = random.Random(seed)
    ring = PolyRing(field, ("s", "t"))
    r0 = rng.randint(1, max_rank)
    r1 = rng.randint(1, max_rank)
    r2 = rng.randint(1, max_rank)
    k = rng.randint(0, r1)
    d2 = [[_random_poly(ring, rng) if i < k else ring.zero()
           for _ in range(r2)] for i in range(r1)]
    d1 = [[_random_poly(ring, rng) if j >= k else ring.zero()
           for j in range(r1)] for _ in range(r0)]
    for _ in range(2 * r1):
        i, j = rng.randrange(r1), rng.randrange(r1)
        if i == j:
            continue
        c = ring.constant(ring.field.coerce(rng.choice([-1, 1, 2])))
        # d2 <- U d2 and d1 <- d1 U^{-1} with U = I + c E_{ij}
        for col in range(r2):
            d2[i][col] = d2[i][col] + c * d2[j][col]
        for row in range(r0):
            d1[row][j] = d1[row][j] + (ring.zero() - c) * d1[row][i]
    return FreeComplex(
        ring, 0, (r0, r1, r2),
        (PolyMatrix(ring, d1, shape=(r0, r1)),
         PolyMatrix(ring, d2, shape=(r1, r2))))
