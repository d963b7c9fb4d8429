"""Opposite schemes, tensor products and enveloping algebras.

The tensor product of two algebras given by quadratic Groebner bases is
presented on the product quiver: vertices ``(v|w')``, arrows ``(a|w')``
for arrows ``a`` of the first quiver and ``(v|b')`` for arrows ``b'`` of
the second.  Its Groebner basis consists of the lifted rules of both
factors plus the commutativity relations
``(u|b')(a|x') - (a|w')(v|b')``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Mapping, Optional

from .algebra import Element, RewriteSystem
from .invariants import enumerate_nontips
from .order import LengthLeftLex, OppositeOrder, PathOrder
from .quiver import Arrow, Path, Quiver
from .variety import check_rules, CheckResult, QuadraticScheme

OP_SUFFIX = "^op"


def op_name(name: str) -> str:
    return name[:-len(OP_SUFFIX)] if name.endswith(OP_SUFFIX) else name + OP_SUFFIX


def op_path(p: Path) -> Path:
    """Reverse ``p`` and rename its arrows; an involution."""
    return Path(tuple(op_name(a) for a in reversed(p.arrows)), p.target, p.source)


def opposite_quiver(q: Quiver) -> Quiver:
    return Quiver(q.vertices, [Arrow(op_name(a.name), a.target, a.source) for a in q.arrows])


def opposite_order(order: PathOrder, quiver_op: Quiver) -> PathOrder:
    if isinstance(order, OppositeOrder):
        return order.base
    return OppositeOrder(quiver_op, order, op_path)


def opposite_scheme(scheme: QuadraticScheme) -> QuadraticScheme:
    """Reverse arrows and tips; the order compares reversed paths."""
    qop = opposite_quiver(scheme.quiver)
    return QuadraticScheme(qop, opposite_order(scheme.order, qop),
                           [op_path(t) for t in scheme.tips])


def opposite_point(scheme: QuadraticScheme, X: Mapping) -> dict:
    """Carry a point along the bijection ``y[t|n] -> y[t^op|n^op]``."""
    scheme.check_point(X)
    opp = opposite_scheme(scheme)
    return opp.point({(op_path(v.tip), op_path(v.nontip)): c for v, c in X.items()}, default=None)


def tensor_vertex(v: str, w: str) -> str:
    return f"({v}|{w})"


class BlockTensorOrder(PathOrder):
    """Product order used when a factor order is not length-left-lex.

    Compares total length, then the second-factor projection by the second
    order, then the first-factor projection by the first order, then the
    placement pattern with second-factor arrows ranking higher.  It restricts
    to the factor orders on lifted paths and puts the second-factor arrow
    first in the tip of every commutativity relation.
    """

    def __init__(self, quiver: Quiver, first: PathOrder, second: PathOrder,
                 kinds: Mapping[str, tuple[int, str]], vertex_parts: Mapping[str, tuple[str, str]]):
        self.quiver = quiver
        self.first = first
        self.second = second
        self.kinds = dict(kinds)
        self.vertex_parts = dict(vertex_parts)

    def key(self, path: Path) -> tuple:
        if not path.arrows:
            v, w = self._split_vertex(path.source)
            return (0, self.second.key(Path.trivial(w)), self.first.key(Path.trivial(v)), ())
        p_arrows, q_arrows, pattern = [], [], []
        for name in path.arrows:
            kind, factor_arrow = self.kinds[name]
            (q_arrows if kind else p_arrows).append(factor_arrow)
            pattern.append(kind)
        v0, w0 = self._split_vertex(path.source)
        v1, w1 = self._split_vertex(path.target)
        pq = Path(tuple(q_arrows), w0, w1) if q_arrows else Path.trivial(w0)
        pp = Path(tuple(p_arrows), v0, v1) if p_arrows else Path.trivial(v0)
        return (len(path.arrows), self.second.key(pq), self.first.key(pp), tuple(pattern))

    def _split_vertex(self, name: str) -> tuple[str, str]:
        return self.vertex_parts[name]


@dataclass
class TensorProduct:
    """The product quiver, its order, and the combined rule system."""

    quiver: Quiver
    order: PathOrder
    rules: RewriteSystem
    lifted_first: list[Path]
    lifted_second: list[Path]
    commutativity: list[Path]

    def scheme(self) -> QuadraticScheme:
        return QuadraticScheme(self.quiver, self.order, self.rules.tips)

    def point(self) -> dict:
        """The rules read as a point of :meth:`scheme`."""
        s = self.scheme()
        values = {}
        for t, rhs in self.rules.rules.items():
            allowed = set(s.candidates[t])
            for n, c in rhs.items():
                if n not in allowed:
                    raise ValueError(f"{n} is not a candidate nontip for {t}")
                values[(t, n)] = c
        return s.point(values)

    def check(self) -> CheckResult:
        return check_rules(self.rules)

    def is_reduced(self) -> bool:
        """No tip divides a nontip term of any rule, and tips are distinct."""
        tips = self.rules.tips
        if len(set(tips)) != len(tips):
            return False
        return all(self.rules.is_irreducible(n)
                   for rhs in self.rules.rules.values() for n in rhs.support())

    def nontip_count(self) -> Optional[int]:
        return enumerate_nontips(self.scheme()).total


def _lift_element(x: Element, f) -> Element:
    return Element((f(p), c) for p, c in x.items())


def tensor_scheme(s: QuadraticScheme, X: Mapping, s2: QuadraticScheme, X2: Mapping) -> TensorProduct:
    """Tensor product of the algebras at point ``X`` of ``s`` and ``X2`` of ``s2``."""
    G = s.rules_at(X)
    G2 = s2.rules_at(X2)
    q, q2 = s.quiver, s2.quiver

    vertices = [tensor_vertex(v, w) for w in _vertex_desc(s2.order, q2) for v in _vertex_desc(s.order, q)]
    parts = {tensor_vertex(v, w): (v, w) for v in q.vertices for w in q2.vertices}
    first_arrows = [Arrow(f"({a.name}|{w})", tensor_vertex(a.source, w), tensor_vertex(a.target, w))
                    for a in q.arrows for w in q2.vertices]
    second_arrows = [Arrow(f"({v}|{b.name})", tensor_vertex(v, b.source), tensor_vertex(v, b.target))
                     for v in q.vertices for b in q2.arrows]
    qstar = Quiver(vertices, first_arrows + second_arrows)
    kinds = {f"({a.name}|{w})": (0, a.name) for a in q.arrows for w in q2.vertices}
    kinds.update({f"({v}|{b.name})": (1, b.name) for v in q.vertices for b in q2.arrows})

    if isinstance(s.order, LengthLeftLex) and isinstance(s2.order, LengthLeftLex):
        order = _case_order(qstar, s.order, s2.order)
    else:
        order = BlockTensorOrder(qstar, s.order, s2.order, kinds, parts)

    def lift1(p: Path, w: str) -> Path:
        return Path(tuple(f"({a}|{w})" for a in p.arrows),
                    tensor_vertex(p.source, w), tensor_vertex(p.target, w))

    def lift2(v: str, p: Path) -> Path:
        return Path(tuple(f"({v}|{b})" for b in p.arrows),
                    tensor_vertex(v, p.source), tensor_vertex(v, p.target))

    rules: list[tuple[Path, Element]] = []
    lifted_first, lifted_second, comm = [], [], []
    for t, rhs in G.rules.items():
        for w in q2.vertices:
            tt = lift1(t, w)
            rules.append((tt, _lift_element(rhs, lambda p, w=w: lift1(p, w))))
            lifted_first.append(tt)
    for t, rhs in G2.rules.items():
        for v in q.vertices:
            tt = lift2(v, t)
            rules.append((tt, _lift_element(rhs, lambda p, v=v: lift2(v, p))))
            lifted_second.append(tt)
    for a in q.arrows:
        u, v = a.source, a.target
        for b in q2.arrows:
            w, x = b.source, b.target
            lhs = Path((f"({u}|{b.name})", f"({a.name}|{x})"), tensor_vertex(u, w), tensor_vertex(v, x))
            rhs = Path((f"({a.name}|{w})", f"({v}|{b.name})"), tensor_vertex(u, w), tensor_vertex(v, x))
            rules.append((lhs, Element({rhs: Fraction(1)})))
            comm.append(lhs)
    return TensorProduct(qstar, order, RewriteSystem(order, rules), lifted_first, lifted_second, comm)


def _vertex_desc(order: PathOrder, q: Quiver) -> list[str]:
    return [p.source for p in order.sorted(Path.trivial(v) for v in q.vertices)]


def _case_order(qstar: Quiver, first: LengthLeftLex, second: LengthLeftLex) -> LengthLeftLex:
    """Length-left-lex on the product quiver with the induced arrow ranking.

    Second-factor arrows outrank first-factor arrows; among themselves
    ``(v|b')`` arrows compare by ``b'`` and ``(a|w')`` arrows by ``a`` then
    by ``w'``.  Vertices compare by the second coordinate first.
    """
    seconds = [f"({v}|{b})" for b in second.arrow_precedence for v in first.vertex_precedence]
    firsts = [f"({a}|{w})" for a in first.arrow_precedence for w in second.vertex_precedence]
    verts = [tensor_vertex(v, w) for w in second.vertex_precedence for v in first.vertex_precedence]
    return LengthLeftLex(qstar, seconds + firsts, verts)


def enveloping_scheme(s: QuadraticScheme, X: Mapping) -> TensorProduct:
    """``A (x) A^op`` for the algebra ``A`` at point ``X``."""
    return tensor_scheme(s, X, opposite_scheme(s), opposite_point(s, X))
