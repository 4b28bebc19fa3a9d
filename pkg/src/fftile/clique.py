"""Exact maximum clique by branch and bound with a greedy colouring bound.

Vertex sets are Python ints used as bitsets.  The search order is fixed
(degree-descending relabelling, then colour order), so the first optimum
found, and therefore the returned witness, is deterministic.
"""

from __future__ import annotations

import os
from typing import Sequence

from .errors import BudgetExceeded

DEFAULT_NODE_BUDGET = 10 ** 8


def node_budget(budget: int | None = None) -> int:
    if budget is not None:
        return int(budget)
    env = os.environ.get("FFTILE_NODE_BUDGET")
    return int(env) if env else DEFAULT_NODE_BUDGET


def _bits(x: int):
    while x:
        low = x & -x
        yield low.bit_length() - 1
        x ^= low


def _colour_order(P: int, adj: Sequence[int]) -> list:
    """Greedy sequential colouring of P; returns [(vertex, colour)] sorted by colour."""
    order = []
    uncoloured = P
    colour = 0
    while uncoloured:
        colour += 1
        Q = uncoloured
        while Q:
            low = Q & -Q
            v = low.bit_length() - 1
            Q &= ~adj[v] & ~low
            uncoloured &= ~low
            order.append((v, colour))
    return order


def max_clique(adj: Sequence[int], candidates: int | None = None, *, target: int | None = None,
               lower: int = 0, budget: int | None = None) -> list:
    """Largest clique inside ``candidates`` (all vertices by default).

    ``adj[v]`` is the neighbour bitset of v.  With ``target`` the search stops
    once a clique of that size exists.  ``lower`` prunes branches that cannot
    beat it; if no clique larger than ``lower`` exists the result is the best
    clique seen, possibly empty.
    """
    n = len(adj)
    budget = node_budget(budget)
    if candidates is None:
        candidates = (1 << n) - 1
    # relabel by degree inside the candidate set, descending, ties by index
    verts = list(_bits(candidates))
    verts.sort(key=lambda v: (-bin(adj[v] & candidates).count("1"), v))
    pos = {v: i for i, v in enumerate(verts)}
    radj = [0] * len(verts)
    for v in verts:
        bits = 0
        for u in _bits(adj[v] & candidates):
            bits |= 1 << pos[u]
        radj[pos[v]] = bits

    best: list = []
    best_size = lower
    nodes = 0
    stop = False

    def expand(P: int, C: list):
        nonlocal best, best_size, nodes, stop
        nodes += 1
        if nodes > budget:
            raise BudgetExceeded(f"clique search exceeded {budget} nodes")
        order = _colour_order(P, radj)
        for v, colour in reversed(order):
            if len(C) + colour <= best_size:
                return
            C.append(v)
            if len(C) > best_size:
                best = list(C)
                best_size = len(C)
                if target is not None and best_size >= target:
                    stop = True
            nP = P & radj[v]
            if nP and not stop:
                expand(nP, C)
            C.pop()
            if stop:
                return
            P &= ~(1 << v)

    full = (1 << len(verts)) - 1
    if full:
        expand(full, [])
    return sorted(verts[i] for i in best)


def first_clique(adj: Sequence[int], candidates: int, k: int, budget: int | None = None) -> list | None:
    """Lexicographically first k-clique inside ``candidates`` (by vertex index), or None.

    Plain index-order backtracking; the colouring bound only prunes.
    """
    budget = node_budget(budget)
    nodes = 0

    def extend(P: int, C: list):
        nonlocal nodes
        nodes += 1
        if nodes > budget:
            raise BudgetExceeded(f"clique search exceeded {budget} nodes")
        if len(C) == k:
            return list(C)
        need = k - len(C)
        if bin(P).count("1") < need:
            return None
        order = _colour_order(P, adj)
        if order[-1][1] < need:
            return None
        for v in _bits(P):
            C.append(v)
            got = extend(P & adj[v], C)
            C.pop()
            if got is not None:
                return got
            P &= ~(1 << v)
            if bin(P).count("1") < need:
                return None
        return None

    if k <= 0:
        return []
    return extend(candidates, [])
