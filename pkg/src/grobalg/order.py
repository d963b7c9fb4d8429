"""Length-admissible well-orders on the paths of a quiver.

Every order exposes a sort key: ``p > q`` in the order exactly when
``order.key(p) > order.key(q)``.  Keys are plain tuples so that reduction
code can sort and heap-order paths without calling back into the order.
"""

from __future__ import annotations

from abc import ABC, abstractmethod
from typing import Callable, Iterable, Optional, Sequence

from .quiver import Path, Quiver

GREATER, EQUAL, LESS = 1, 0, -1


class PathOrder(ABC):
    """A length-admissible order on the paths of ``quiver``."""

    quiver: Quiver

    @abstractmethod
    def key(self, path: Path) -> tuple:
        ...

    def compare(self, p: Path, q: Path) -> int:
        kp, kq = self.key(p), self.key(q)
        return GREATER if kp > kq else LESS if kp < kq else EQUAL

    def greater(self, p: Path, q: Path) -> bool:
        return self.key(p) > self.key(q)

    def max(self, paths: Iterable[Path]) -> Path:
        return max(paths, key=self.key)

    def sorted(self, paths: Iterable[Path], descending: bool = True) -> list[Path]:
        return sorted(paths, key=self.key, reverse=descending)


class LengthLeftLex(PathOrder):
    """Longer paths are greater; equal lengths compare left-lexicographically.

    ``arrow_precedence`` and ``vertex_precedence`` list identifiers from the
    greatest to the smallest and default to declaration order.  Trivial
    paths compare by vertex precedence and sit below every arrow.
    """

    def __init__(self, quiver: Quiver, arrow_precedence: Optional[Sequence[str]] = None,
                 vertex_precedence: Optional[Sequence[str]] = None):
        self.quiver = quiver
        arrows = list(arrow_precedence) if arrow_precedence is not None else [
            a.name for a in quiver.arrows]
        vertices = list(vertex_precedence) if vertex_precedence is not None else list(
            quiver.vertices)
        if sorted(arrows) != sorted(a.name for a in quiver.arrows):
            raise ValueError("arrow precedence must list every arrow exactly once")
        if sorted(vertices) != sorted(quiver.vertices):
            raise ValueError("vertex precedence must list every vertex exactly once")
        self.arrow_precedence = tuple(arrows)
        self.vertex_precedence = tuple(vertices)
        self._arank = {a: len(arrows) - i for i, a in enumerate(arrows)}
        self._vrank = {v: len(vertices) - i for i, v in enumerate(vertices)}

    def key(self, path: Path) -> tuple:
        if not path.arrows:
            return (0, (self._vrank[path.source],))
        return (len(path.arrows), tuple(self._arank[a] for a in path.arrows))

    def __eq__(self, other: object) -> bool:
        return (isinstance(other, LengthLeftLex) and self.quiver == other.quiver
                and self.arrow_precedence == other.arrow_precedence
                and self.vertex_precedence == other.vertex_precedence)

    def __hash__(self) -> int:
        return hash((self.arrow_precedence, self.vertex_precedence))

    def __repr__(self) -> str:
        return "LengthLeftLex(" + " > ".join(self.arrow_precedence) + ")"


class OppositeOrder(PathOrder):
    """``p^op > q^op`` exactly when ``p > q`` in the base order.

    ``to_base`` carries a path of the opposite quiver back to the base
    quiver (reversing it and renaming arrows).
    """

    def __init__(self, quiver: Quiver, base: PathOrder, to_base: Callable[[Path], Path]):
        self.quiver = quiver
        self.base = base
        self.to_base = to_base

    def key(self, path: Path) -> tuple:
        return self.base.key(self.to_base(path))

    def __eq__(self, other: object) -> bool:
        return isinstance(other, OppositeOrder) and self.base == other.base

    def __hash__(self) -> int:
        return hash(("op", self.base))

    def __repr__(self) -> str:
        return f"OppositeOrder({self.base!r})"
