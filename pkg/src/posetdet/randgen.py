"""Deterministic random instances for the verification campaigns.

Posets are random DAGs where each forward pair becomes a cover with
probability 1/2, then transitively closed; incidence values are uniform
integers in [-5, 5].  Everything is reproducible from the seed alone.
"""

from __future__ import annotations

import random

from .arith import divisors
from .lgv import WeightedDigraph, nonintersecting_families
from .poset import IncidenceFunction, Poset, divisor_poset
from .ring import Int


def random_poset(rng: random.Random, n: int) -> Poset:
    covers = [
        (i, j)
        for i in range(n)
        for j in range(i + 1, n)
        if rng.random() < 0.5
    ]
    return Poset.from_covers(n, covers)


def random_incidence(
    rng: random.Random, p: Poset, lo: int = -5, hi: int = 5
) -> IncidenceFunction:
    values = {}
    for a in range(p.n):
        for b in sorted(p.above(a)):
            values[(a, b)] = Int(rng.randint(lo, hi))
    return IncidenceFunction(p, values, zero=Int(0))


def random_weights(
    rng: random.Random, n: int, lo: int = -5, hi: int = 5
) -> list[Int]:
    return [Int(rng.randint(lo, hi)) for _ in range(n)]


def random_meet_semilattice(
    rng: random.Random, n: int, max_tries: int = 5000
) -> Poset:
    """Random poset with a forced bottom element, resampled until every
    pair has a meet."""
    if n == 1:
        return Poset.from_covers(1, [])
    for _ in range(max_tries):
        covers = [(0, j) for j in range(1, n)]
        covers += [
            (i, j)
            for i in range(1, n)
            for j in range(i + 1, n)
            if rng.random() < 0.5
        ]
        p = Poset.from_covers(n, covers)
        if p.is_meet_semilattice():
            return p
    raise RuntimeError("could not sample a meet semilattice")


def random_factor_closed_set(
    rng: random.Random, max_seed: int = 60, max_seeds: int = 3
) -> list[int]:
    """Divisor closure of a few random seeds, sorted ascending."""
    k = rng.randint(1, max_seeds)
    seeds = [rng.randint(1, max_seed) for _ in range(k)]
    return sorted({d for a in seeds for d in divisors(a)})


def random_meet_closed_instance(
    rng: random.Random, max_int: int = 60
) -> tuple[Poset, list[int]]:
    """Divisor lattice of a random integer plus a random gcd-closed subset
    of it (closed by saturating under pairwise meets)."""
    m = rng.randint(2, max_int)
    vals = divisors(m)
    lattice = divisor_poset(vals)
    k = rng.randint(1, len(vals))
    chosen = set(rng.sample(range(len(vals)), k))
    changed = True
    while changed:
        changed = False
        for a in sorted(chosen):
            for b in sorted(chosen):
                c = lattice.meet(a, b)
                if c not in chosen:
                    chosen.add(c)
                    changed = True
    return lattice, sorted(chosen)


def random_symmetric_pair(
    rng: random.Random, p: Poset, force_zero_diag: bool = False
) -> tuple[IncidenceFunction, IncidenceFunction]:
    """Pair (f, g) with g equal to f rescaled by a random sign at each
    source element, which keeps the product matrix symmetric while letting
    the diagonal products take either sign."""
    values = {}
    for a in range(p.n):
        for b in sorted(p.above(a)):
            values[(a, b)] = Int(rng.randint(-4, 4))
    if force_zero_diag:
        dead = rng.randrange(p.n)
        values[(dead, dead)] = Int(0)
    f = IncidenceFunction(p, values, zero=Int(0))
    signs = [rng.choice((-1, 1)) for _ in range(p.n)]
    g = IncidenceFunction(
        p,
        {(a, b): v.scale(signs[a]) for (a, b), v in values.items()},
        zero=Int(0),
    )
    return f, g


def random_hypothesis_digraph(
    rng: random.Random, max_tries: int = 2000
) -> WeightedDigraph:
    """Small random DAG whose designated terminals satisfy the
    only-the-identity-permutation hypothesis, checked by enumeration."""
    for _ in range(max_tries):
        n = rng.randint(2, 10)
        k = rng.randint(1, min(3, n // 2))
        arcs = [
            (u, v, Int(rng.randint(-3, 3)))
            for u in range(n)
            for v in range(u + 1, n)
            if rng.random() < 0.4
        ]
        d = WeightedDigraph(
            n,
            arcs,
            sources=tuple(range(k)),
            sinks=tuple(range(n - k, n)),
        )
        identity = tuple(range(k))
        if all(f.perm == identity for f in nonintersecting_families(d)):
            return d
    raise RuntimeError("could not sample a digraph satisfying the hypothesis")
