"""Invariants shared by every algebra in a variety.

All of them depend only on the tip set: the nontip basis, the Cartan
matrix, the tip chains ``T^n`` counting Ext groups between simples, and the
projective, injective and global dimensions.  Two automata on the arrows
drive everything:

* nontip transitions ``a -> b`` when ``ab`` is a path that is not a tip;
* tip-chain transitions ``a -> b`` when ``ab`` is a tip.

A path lies in the nontip basis iff it is a walk of the first automaton,
and ``T^n`` is the set of walks with ``n`` states in the second.
"""

from __future__ import annotations

import math
from collections import defaultdict
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Union

import numpy as np
import sympy

from .quiver import Path
from .variety import QuadraticScheme

Dimension = Union[int, float]  # math.inf for infinite dimension


class InfiniteDimensionError(ValueError):
    pass


def _nontip_successors(scheme: QuadraticScheme) -> dict[str, list[str]]:
    q = scheme.quiver
    tipset = {t.arrows for t in scheme.tips}
    return {a.name: [b.name for b in q.arrows_from(a.target) if (a.name, b.name) not in tipset]
            for a in q.arrows}


def _chain_successors(scheme: QuadraticScheme) -> dict[str, list[str]]:
    q = scheme.quiver
    out: dict[str, list[str]] = {a.name: [] for a in q.arrows}
    for t in scheme.tips:
        out[t.arrows[0]].append(t.arrows[1])
    return out


def _has_cycle(succ: dict[str, list[str]], starts=None) -> bool:
    """Iterative three-colour DFS; only states reachable from ``starts``."""
    WHITE, GREY, BLACK = 0, 1, 2
    colour = dict.fromkeys(succ, WHITE)
    for s in (succ if starts is None else starts):
        if colour[s] != WHITE:
            continue
        stack = [(s, iter(succ[s]))]
        colour[s] = GREY
        while stack:
            node, it = stack[-1]
            nxt = next(it, None)
            if nxt is None:
                colour[node] = BLACK
                stack.pop()
            elif colour[nxt] == GREY:
                return True
            elif colour[nxt] == WHITE:
                colour[nxt] = GREY
                stack.append((nxt, iter(succ[nxt])))
    return False


@dataclass
class NontipBasis:
    """Nontip paths grouped by length.

    When ``finite`` is true, ``by_length`` holds every nontip; otherwise it
    stops at the requested maximum length.
    """

    by_length: list[list[Path]]
    finite: bool

    @property
    def total(self) -> Union[int, None]:
        return sum(len(ps) for ps in self.by_length) if self.finite else None

    def paths(self) -> list[Path]:
        return [p for ps in self.by_length for p in ps]

    def __len__(self) -> int:
        if not self.finite:
            raise InfiniteDimensionError("infinite-dimensional algebra")
        return self.total


def is_finite_dimensional(scheme: QuadraticScheme) -> bool:
    return not _has_cycle(_nontip_successors(scheme))


def enumerate_nontips(scheme: QuadraticScheme, max_length: int = 8) -> NontipBasis:
    if max_length < 0:
        raise ValueError("max_length must be nonnegative")
    q = scheme.quiver
    succ = _nontip_successors(scheme)
    finite = not _has_cycle(succ)
    levels = [[Path.trivial(v) for v in q.vertices]]
    frontier = [Path((a.name,), a.source, a.target) for a in q.arrows]
    k = 1
    while frontier and (finite or k <= max_length):
        levels.append(frontier)
        frontier = [Path(p.arrows + (b,), p.source, q.arrow(b).target)
                    for p in frontier for b in succ[p.arrows[-1]]]
        k += 1
    return NontipBasis(levels, finite)


def cartan_matrix(scheme: QuadraticScheme) -> np.ndarray:
    """Entry (i, j) counts nontip paths from vertex i to vertex j."""
    if not is_finite_dimensional(scheme):
        raise InfiniteDimensionError("infinite-dimensional algebra")
    idx = {v: i for i, v in enumerate(scheme.quiver.vertices)}
    c = np.zeros((len(idx), len(idx)), dtype=np.int64)
    for p in enumerate_nontips(scheme).paths():
        c[idx[p.source], idx[p.target]] += 1
    return c


def cartan_determinant(scheme: QuadraticScheme) -> int:
    return int(sympy.Matrix(cartan_matrix(scheme).tolist()).det())


def resolution_tips(scheme: QuadraticScheme, n: int) -> dict[tuple[str, str], list[Path]]:
    """``T^n`` grouped by (start vertex, end vertex).

    ``T^0`` are the vertices, ``T^1`` the arrows and ``T^n`` the arrow
    sequences whose consecutive pairs are tips.
    """
    if n < 0:
        raise ValueError("n must be nonnegative")
    q = scheme.quiver
    if n == 0:
        chains = [Path.trivial(v) for v in q.vertices]
    else:
        succ = _chain_successors(scheme)
        chains = [Path((a.name,), a.source, a.target) for a in q.arrows]
        for _ in range(n - 1):
            chains = [Path(p.arrows + (b,), p.source, q.arrow(b).target)
                      for p in chains for b in succ[p.arrows[-1]]]
    grouped: dict[tuple[str, str], list[Path]] = defaultdict(list)
    for p in chains:
        grouped[(p.source, p.target)].append(p)
    return dict(grouped)


def _chain_counts(scheme: QuadraticScheme, n: int) -> dict[tuple[str, str], int]:
    """|v T^n w| without listing the chains (counts per ending arrow)."""
    q = scheme.quiver
    if n == 0:
        return {(v, v): 1 for v in q.vertices}
    succ = _chain_successors(scheme)
    # counts[(start vertex, last arrow)]
    counts = {(a.source, a.name): 1 for a in q.arrows}
    for _ in range(n - 1):
        nxt: dict = defaultdict(int)
        for (v, a), c in counts.items():
            for b in succ[a]:
                nxt[(v, b)] += c
        counts = nxt
    out: dict = defaultdict(int)
    for (v, a), c in counts.items():
        out[(v, q.arrow(a).target)] += c
    return dict(out)


def betti(scheme: QuadraticScheme, v: str, w: str, n: int) -> int:
    """dim Ext^n(S_v, S_w), the same for every algebra in the variety."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    return _chain_counts(scheme, n).get((v, w), 0)


def betti_table(scheme: QuadraticScheme, max_degree: int) -> np.ndarray:
    """Array indexed ``[n, i, j]`` of Betti numbers for vertices i, j."""
    verts = scheme.quiver.vertices
    idx = {v: i for i, v in enumerate(verts)}
    table = np.zeros((max_degree + 1, len(verts), len(verts)), dtype=np.int64)
    for n in range(max_degree + 1):
        for (v, w), c in _chain_counts(scheme, n).items():
            table[n, idx[v], idx[w]] = c
    return table


def _longest_chain(succ: dict[str, list[str]], start: str) -> int:
    """Number of states on the longest walk from ``start`` in an acyclic automaton."""

    @lru_cache(maxsize=None)
    def depth(a: str) -> int:
        return 1 + max((depth(b) for b in succ[a]), default=0)

    return depth(start)


def projective_dimension(scheme: QuadraticScheme, v: str) -> Dimension:
    """Largest n with ``v T^n`` nonempty (``math.inf`` if unbounded)."""
    q = scheme.quiver
    starts = [a.name for a in q.arrows_from(v)]
    if not starts:
        return 0
    succ = _chain_successors(scheme)
    if _has_cycle(succ, starts):
        return math.inf
    return max(_longest_chain(succ, a) for a in starts)


def injective_dimension(scheme: QuadraticScheme, v: str) -> Dimension:
    """Computed as the projective dimension of the simple over the opposite scheme."""
    from .constructions import opposite_scheme

    return projective_dimension(opposite_scheme(scheme), v)


def global_dimension(scheme: QuadraticScheme) -> Dimension:
    """Maximum projective dimension of the simples; needs a finite nontip basis."""
    if not is_finite_dimensional(scheme):
        raise InfiniteDimensionError("infinite-dimensional algebra")
    return max((projective_dimension(scheme, v) for v in scheme.quiver.vertices), default=0)


def has_finite_global_dimension(scheme: QuadraticScheme) -> bool:
    return not _has_cycle(_chain_successors(scheme))
