"""Finite quivers and their paths.

Paths are immutable values; composition and subpath search never need the
owning quiver, so a `Path` only records its arrow names and endpoints.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterable, Iterator, Optional, Sequence

_RESERVED = re.compile(r"[\s.,:\->#=|\[\]]")


@dataclass(frozen=True)
class Arrow:
    name: str
    source: str
    target: str


@dataclass(frozen=True)
class Path:
    """A trivial path at a vertex (``arrows == ()``) or a sequence of arrows."""

    arrows: tuple[str, ...]
    source: str
    target: str

    @classmethod
    def trivial(cls, vertex: str) -> "Path":
        return cls((), vertex, vertex)

    def __len__(self) -> int:
        return len(self.arrows)

    @property
    def is_trivial(self) -> bool:
        return not self.arrows

    def __str__(self) -> str:
        if not self.arrows:
            return f"e[{self.source}]"
        return ".".join(self.arrows)

    def __repr__(self) -> str:
        return f"Path({self})"

    def __mul__(self, other: "Path") -> Optional["Path"]:
        return compose(self, other)


def compose(p: Path, q: Path) -> Optional[Path]:
    """Return ``pq`` or None when the target of p is not the source of q."""
    if p.target != q.source:
        return None
    return Path(p.arrows + q.arrows, p.source, q.target)


def is_parallel(p: Path, q: Path) -> bool:
    return p.source == q.source and p.target == q.target


def find_subpath_occurrences(p: Path, t: Path) -> list[tuple[Path, Path]]:
    """All factorizations ``p = q t r``, left to right by start index."""
    if not t.arrows:
        raise ValueError("subpath search needs a path of length >= 1")
    n, m = len(p.arrows), len(t.arrows)
    found = []
    for i in range(n - m + 1):
        if p.arrows[i:i + m] == t.arrows:
            # the occurrence pins the inner endpoints: prefix ends where t starts
            found.append((Path(p.arrows[:i], p.source, t.source),
                          Path(p.arrows[i + m:], t.target, p.target)))
    return found


class Quiver:
    """A finite quiver with ordered vertices and arrows."""

    def __init__(self, vertices: Iterable[str], arrows: Iterable[tuple[str, str, str] | Arrow]):
        self.vertices: tuple[str, ...] = tuple(vertices)
        self.arrows: tuple[Arrow, ...] = tuple(
            a if isinstance(a, Arrow) else Arrow(*a) for a in arrows
        )
        if len(set(self.vertices)) != len(self.vertices):
            raise ValueError("vertex identifiers must be distinct")
        names = [a.name for a in self.arrows]
        if len(set(names)) != len(names):
            raise ValueError("arrow identifiers must be distinct")
        vs = set(self.vertices)
        for a in self.arrows:
            if a.source not in vs or a.target not in vs:
                raise ValueError(f"arrow {a.name} uses an undeclared vertex")
        self._arrow = {a.name: a for a in self.arrows}
        self._out = {v: [a for a in self.arrows if a.source == v] for v in self.vertices}

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Quiver):
            return NotImplemented
        return self.vertices == other.vertices and self.arrows == other.arrows

    def __hash__(self) -> int:
        return hash((self.vertices, self.arrows))

    def __repr__(self) -> str:
        return f"Quiver({len(self.vertices)} vertices, {len(self.arrows)} arrows)"

    def arrow(self, name: str) -> Arrow:
        try:
            return self._arrow[name]
        except KeyError:
            raise KeyError(f"unknown arrow {name!r}") from None

    def has_arrow(self, name: str) -> bool:
        return name in self._arrow

    def trivial(self, vertex: str) -> Path:
        if vertex not in self.vertices:
            raise KeyError(f"unknown vertex {vertex!r}")
        return Path.trivial(vertex)

    def path(self, *names: str | Sequence[str]) -> Path:
        """Build a path from arrow names; ``q.path("a", "b")`` or ``q.path("a.b")``."""
        flat: list[str] = []
        for n in names:
            if isinstance(n, str):
                flat.extend(x for x in n.split(".") if x)
            else:
                flat.extend(n)
        if not flat:
            raise ValueError("use Quiver.trivial for paths of length 0")
        arrows = [self.arrow(n) for n in flat]
        for a, b in zip(arrows, arrows[1:]):
            if a.target != b.source:
                raise ValueError(f"non-composable path: {a.name}.{b.name}")
        return Path(tuple(flat), arrows[0].source, arrows[-1].target)

    def subpath(self, p: Path, start: int, stop: int) -> Path:
        """The path of arrows ``p.arrows[start:stop]`` with correct endpoints."""
        if start == stop:
            if start == 0:
                return Path.trivial(p.source)
            return Path.trivial(self.arrow(p.arrows[start - 1]).target)
        return Path(p.arrows[start:stop], self.arrow(p.arrows[start]).source,
                    self.arrow(p.arrows[stop - 1]).target)

    def arrows_from(self, vertex: str) -> list[Arrow]:
        """Arrows starting at ``vertex``, in declaration order."""
        return self._out[vertex]

    def paths_of_length(self, k: int) -> Iterator[Path]:
        """Every path of length k (brute force; exponential in k)."""
        if k == 0:
            for v in self.vertices:
                yield Path.trivial(v)
            return
        frontier = [Path((a.name,), a.source, a.target) for a in self.arrows]
        for _ in range(k - 1):
            frontier = [Path(p.arrows + (a.name,), p.source, a.target)
                        for p in frontier for a in self.arrows_from(p.target)]
        yield from frontier


def valid_identifier(token: str) -> bool:
    return bool(token) and not _RESERVED.search(token)
