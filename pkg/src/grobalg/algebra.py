"""Elements of a path algebra and reduction by quadratic rewrite rules.

Coefficients are either Fractions (concrete algebras) or :class:`Poly`
(the symbolic algebra over the coordinate ring of the variety); the code
only relies on ``+``, ``*``, negation and truthiness.
"""

from __future__ import annotations

import heapq
from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Iterable, Mapping, NamedTuple, Optional

from .coefficients import format_rational, Poly
from .order import PathOrder
from .quiver import compose, is_parallel, Path


class Element:
    """A finite linear combination of paths with nonzero coefficients."""

    __slots__ = ("_terms",)

    def __init__(self, terms: Optional[Mapping[Path, Any] | Iterable[tuple[Path, Any]]] = None):
        items = terms.items() if isinstance(terms, Mapping) else (terms or ())
        out: dict = {}
        for p, c in items:
            s = out.get(p, 0) + c
            if s:
                out[p] = s
            else:
                out.pop(p, None)
        self._terms = out

    @classmethod
    def of(cls, path: Path, coeff: Any = 1) -> "Element":
        return cls({path: coeff})

    def items(self):
        return self._terms.items()

    def support(self) -> list[Path]:
        return list(self._terms)

    def coefficient(self, path: Path) -> Any:
        return self._terms.get(path, 0)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __len__(self) -> int:
        return len(self._terms)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, Element):
            return self._terms == other._terms
        if other == 0:
            return not self._terms
        return NotImplemented

    def __hash__(self) -> int:
        return hash(frozenset(self._terms.items()))

    def __add__(self, other: "Element") -> "Element":
        out = dict(self._terms)
        for p, c in other._terms.items():
            s = out.get(p, 0) + c
            if s:
                out[p] = s
            else:
                out.pop(p, None)
        e = Element()
        e._terms = out
        return e

    def __neg__(self) -> "Element":
        e = Element()
        e._terms = {p: -c for p, c in self._terms.items()}
        return e

    def __sub__(self, other: "Element") -> "Element":
        return self + (-other)

    def scale(self, c: Any) -> "Element":
        return Element((p, c * x) for p, x in self._terms.items())

    def left(self, q: Path) -> "Element":
        """``q * self``; non-composable terms vanish."""
        return Element((pq, c) for p, c in self._terms.items()
                       if (pq := compose(q, p)) is not None)

    def right(self, r: Path) -> "Element":
        """``self * r``; non-composable terms vanish."""
        return Element((pr, c) for p, c in self._terms.items()
                       if (pr := compose(p, r)) is not None)

    def map_coefficients(self, f) -> "Element":
        return Element((p, f(c)) for p, c in self._terms.items())

    def is_homogeneous(self) -> bool:
        return len({len(p) for p in self._terms}) <= 1

    def to_text(self, order: Optional[PathOrder] = None, names=None) -> str:
        if not self._terms:
            return "0"
        paths = order.sorted(self._terms) if order else sorted(self._terms, key=str)
        parts = []
        for i, p in enumerate(paths):
            c = self._terms[p]
            if isinstance(c, Poly):
                sign = "-" if c == -1 else "+"
                body = str(p) if c in (1, -1) else f"({c.to_text(names)})*{p}"
            else:
                c = Fraction(c)
                sign = "-" if c < 0 else "+"
                a = abs(c)
                body = str(p) if a == 1 else f"{format_rational(a)}*{p}"
            if i == 0:
                parts.append(body if sign == "+" else f"-{body}")
            else:
                parts.append(f"{sign} {body}")
        return " ".join(parts)

    def __str__(self) -> str:
        return self.to_text()

    def __repr__(self) -> str:
        return f"Element({self.to_text()})"


def tip(x: Element, order: PathOrder) -> Path:
    if not x:
        raise ValueError("the zero element has no tip")
    return order.max(x.support())


def is_uniform(x: Element) -> bool:
    if not x:
        raise ValueError("uniformity is undefined for the zero element")
    paths = x.support()
    return all(is_parallel(paths[0], p) for p in paths[1:])


class RewriteSystem:
    """Quadratic rules ``t -> rhs_t`` read as relations ``g_t = t - rhs_t``.

    Tips keep their insertion order, which fixes the order in which overlap
    relations are listed.
    """

    def __init__(self, order: PathOrder, rules: Mapping[Path, Element] | Iterable[tuple[Path, Element]]):
        self.order = order
        items = list(rules.items() if isinstance(rules, Mapping) else rules)
        self.rules: dict[Path, Element] = {}
        for t, rhs in items:
            if t in self.rules:
                raise ValueError(f"duplicate tip {t}")
            if len(t) != 2:
                raise ValueError(f"tip {t} does not have length 2")
            tkey = order.key(t)
            for n in rhs.support():
                if not is_parallel(n, t):
                    raise ValueError(f"{n} is not parallel to the tip {t}")
                if not order.key(n) < tkey:
                    raise ValueError(f"{n} is not smaller than the tip {t}")
            self.rules[t] = rhs
        self._by_window = {t.arrows: t for t in self.rules}

    @property
    def tips(self) -> list[Path]:
        return list(self.rules)

    def relation(self, t: Path) -> Element:
        return Element.of(t) - self.rules[t]

    def relations(self) -> list[Element]:
        return [self.relation(t) for t in self.rules]

    def first_occurrence(self, p: Path) -> Optional[tuple[int, Path]]:
        """Leftmost tip occurring in ``p`` as ``(start index, tip)``."""
        arrows = p.arrows
        for i in range(len(arrows) - 1):
            t = self._by_window.get(arrows[i:i + 2])
            if t is not None:
                return i, t
        return None

    def is_irreducible(self, p: Path) -> bool:
        return self.first_occurrence(p) is None

    def map_coefficients(self, f) -> "RewriteSystem":
        return RewriteSystem(self.order, [(t, rhs.map_coefficients(f)) for t, rhs in self.rules.items()])


class ReductionStep(NamedTuple):
    path: Path
    prefix: Path
    tip: Path
    suffix: Path
    coefficient: Any


def _split(p: Path, i: int, t: Path) -> tuple[Path, Path]:
    return (Path(p.arrows[:i], p.source, t.source),
            Path(p.arrows[i + 2:], t.target, p.target))


def _replacement(p: Path, i: int, t: Path, rhs: Element) -> list[tuple[Path, Any]]:
    q, r = _split(p, i, t)
    out = []
    for n, c in rhs.items():
        out.append((Path(q.arrows + n.arrows + r.arrows, p.source, p.target), c))
    return out


def simple_reduce(F: Element, H: RewriteSystem) -> Optional[tuple[Element, ReductionStep]]:
    """One reduction step on the greatest reducible support path, leftmost tip."""
    for p in H.order.sorted(F.support()):
        occ = H.first_occurrence(p)
        if occ is None:
            continue
        i, t = occ
        f = F.coefficient(p)
        q, r = _split(p, i, t)
        new = [(p, -f)] + [(m, f * c) for m, c in _replacement(p, i, t, H.rules[t])]
        return F + Element(new), ReductionStep(p, q, t, r, f)
    return None


class _Desc:
    """Heap entry ordering paths from greatest to smallest."""

    __slots__ = ("key", "path")

    def __init__(self, key, path):
        self.key = key
        self.path = path

    def __lt__(self, other: "_Desc") -> bool:
        return self.key > other.key


def complete_reduce(F: Element, H: RewriteSystem, trace: bool = False) -> tuple[Element, list[ReductionStep]]:
    """Reduce until no support path contains a tip.

    Steps are taken in the same sequence as repeated :func:`simple_reduce`:
    each step creates only paths smaller than the one it rewrites, so
    popping paths greatest-first visits every reducible path exactly once.
    Polynomial coefficients are accumulated in place, which matters once
    they grow to many thousands of terms.
    """
    symbolic = any(isinstance(c, Poly) for _, c in F.items()) or any(
        isinstance(c, Poly) for rhs in H.rules.values() for _, c in rhs.items())
    if symbolic:
        return _reduce_symbolic(F, H, trace)
    key = H.order.key
    terms: dict = dict(F.items())
    heap = [_Desc(key(p), p) for p in terms]
    heapq.heapify(heap)
    queued = set(terms)
    steps: list[ReductionStep] = []
    while heap:
        p = heapq.heappop(heap).path
        f = terms.get(p)
        if not f:
            continue
        occ = H.first_occurrence(p)
        if occ is None:
            continue
        i, t = occ
        del terms[p]
        if trace:
            q, r = _split(p, i, t)
            steps.append(ReductionStep(p, q, t, r, f))
        for m, c in _replacement(p, i, t, H.rules[t]):
            s = terms.get(m, 0) + f * c
            if s:
                terms[m] = s
            else:
                terms.pop(m, None)
            if m not in queued:
                queued.add(m)
                heapq.heappush(heap, _Desc(key(m), m))
    return Element(terms), steps


def _reduce_symbolic(F: Element, H: RewriteSystem, trace: bool) -> tuple[Element, list[ReductionStep]]:
    """Same strategy as :func:`complete_reduce`; coefficients are mutable term dicts.

    Variables are interned as integers ranked like the originals, so that
    monomials stay sorted and hash cheaply; they are decoded at the end.
    """
    polys = [Poly._coerce(c) for _, c in F.items()]
    polys += [c for rhs in H.rules.values() for _, c in rhs.items() if isinstance(c, Poly)]
    names = sorted({v for p in polys for v in p.variables()})
    index = {v: i for i, v in enumerate(names)}

    def encode(c) -> dict:
        return {tuple((index[v], e) for v, e in m): k for m, k in Poly._coerce(c).items()}

    seen: dict = {}

    def decode(d: dict) -> Poly:
        out = {}
        for m, k in d.items():
            dm = seen.get(m)
            if dm is None:
                dm = seen[m] = tuple([(names[i], e) for i, e in m])
            out[dm] = k
        return Poly._raw(out)

    rules = {t: [(n, Poly._raw(encode(c))) for n, c in rhs.items()] for t, rhs in H.rules.items()}
    key = H.order.key
    acc: dict = {p: encode(c) for p, c in F.items()}
    heap = [_Desc(key(p), p) for p in acc]
    heapq.heapify(heap)
    queued = set(acc)
    steps: list[ReductionStep] = []
    while heap:
        p = heapq.heappop(heap).path
        f = acc.get(p)
        if not f:
            continue
        occ = H.first_occurrence(p)
        if occ is None:
            continue
        i, t = occ
        del acc[p]
        q, r = _split(p, i, t)
        if trace:
            steps.append(ReductionStep(p, q, t, r, decode(f)))
        for n, c in rules[t]:
            m = Path(q.arrows + n.arrows + r.arrows, p.source, p.target)
            Poly.accumulate(acc.setdefault(m, {}), f, c)
            if m not in queued:
                queued.add(m)
                heapq.heappush(heap, _Desc(key(m), m))
    return Element({p: decode(d) for p, d in acc.items() if d}), steps


def normal_form(x: Element, G: RewriteSystem) -> Element:
    """The nontip part of ``x`` modulo the ideal generated by ``G``.

    Only canonical when ``G`` is a Groebner basis; otherwise it is the
    answer of the fixed reduction strategy.
    """
    return complete_reduce(x, G)[0]
