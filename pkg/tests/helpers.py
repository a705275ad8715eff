"""Shared generators and brute-force oracles for the test suite."""

import random
from itertools import combinations, permutations

import hypothesis.strategies as st

from lapspec.expr import Complete, Complement, Join, Repeat, Union, order
from lapspec.realize import DenseGraph


def random_expr(rng: random.Random, max_depth: int):
    if max_depth == 0 or rng.random() < 0.3:
        return Complete(rng.randint(1, 4))
    pick = rng.randrange(4)
    if pick == 0:
        return Union(random_expr(rng, max_depth - 1), random_expr(rng, max_depth - 1))
    if pick == 1:
        return Join(random_expr(rng, max_depth - 1), random_expr(rng, max_depth - 1))
    if pick == 2:
        return Repeat(rng.randint(1, 3), random_expr(rng, max_depth - 1))
    return Complement(random_expr(rng, max_depth - 1))


def random_expr_with_order(rng: random.Random, max_depth: int = 5, max_order: int = 12):
    while True:
        e = random_expr(rng, max_depth)
        if order(e) <= max_order:
            return e


def random_graph(rng: random.Random, n: int) -> DenseGraph:
    edges = [e for e in combinations(range(n), 2) if rng.random() < 0.5]
    return DenseGraph.from_edges(n, edges)


def expr_strategy(max_leaves: int = 8):
    atoms = st.integers(1, 4).map(Complete)

    def extend(children):
        return st.one_of(
            st.tuples(children, children).map(lambda ab: Union(*ab)),
            st.tuples(children, children).map(lambda ab: Join(*ab)),
            st.tuples(st.integers(1, 3), children).map(lambda ma: Repeat(*ma)),
            children.map(Complement),
        )

    return st.recursive(atoms, extend, max_leaves=max_leaves)


def graph_classes(n: int) -> list[DenseGraph]:
    """All isomorphism classes of simple graphs on n vertices, by brute force.

    Canonical form is the minimum edge bitmask over all vertex relabelings;
    fine for the desk-scale n used in tests.
    """
    pairs = list(combinations(range(n), 2))
    index = {p: k for k, p in enumerate(pairs)}
    seen = set()
    reps = []
    for mask in range(1 << len(pairs)):
        canon = min(_relabeled(mask, pairs, index, perm) for perm in permutations(range(n)))
        if canon in seen:
            continue
        seen.add(canon)
        edges = [pairs[k] for k in range(len(pairs)) if (mask >> k) & 1]
        reps.append(DenseGraph.from_edges(n, edges))
    return reps


def _relabeled(mask: int, pairs, index, perm) -> int:
    out = 0
    for k, (u, v) in enumerate(pairs):
        if (mask >> k) & 1:
            pu, pv = perm[u], perm[v]
            out |= 1 << index[(pu, pv) if pu < pv else (pv, pu)]
    return out
