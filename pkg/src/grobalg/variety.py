"""The affine variety of quadratic Groebner bases with a prescribed tip set.

A :class:`QuadraticScheme` fixes a quiver, a length-admissible order and a
set ``T`` of length-2 tips.  Its coordinates are the indeterminates
``y[t|n]`` for ``n`` ranging over the length-2 nontips parallel to and
smaller than ``t``.  Reducing every overlap relation of the generic rules
``t - sum y[t|n] n`` produces the polynomials cutting out the variety.
"""

from __future__ import annotations

import gc
from concurrent.futures import ThreadPoolExecutor
from contextlib import contextmanager
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Iterable, Mapping, Optional, Sequence, Union

from .algebra import complete_reduce, Element, RewriteSystem
from .coefficients import CoeffVar, Poly
from .order import PathOrder
from .quiver import is_parallel, Path, Quiver

VarKey = Union[CoeffVar, tuple[Path, Path]]


def is_nontip(p: Path, tips: Iterable[Path]) -> bool:
    """True when no tip occurs as a subpath of ``p``."""
    for t in tips:
        m = len(t.arrows)
        if m == 0:
            raise ValueError("tips must have positive length")
        if any(p.arrows[i:i + m] == t.arrows for i in range(len(p.arrows) - m + 1)):
            return False
    return True


class QuadraticScheme:
    """Quiver, order and length-2 tip set with the derived coordinate data.

    Attributes
    ----------
    tips : tuple of Path
        The tip set in declaration order (this fixes variable order).
    n2 : tuple of Path
        Length-2 nontips, greatest first.
    candidates : dict
        For each tip the nontips parallel to it and smaller, greatest first.
    variables : tuple of CoeffVar
        Coordinates in canonical order: by tip, then by nontip.
    """

    def __init__(self, quiver: Quiver, order: PathOrder, tips: Sequence[Path]):
        if order.quiver != quiver:
            raise ValueError("order belongs to a different quiver")
        tips = tuple(tips)
        if len(set(tips)) != len(tips):
            raise ValueError("tips must be pairwise distinct")
        for t in tips:
            if not isinstance(t, Path) or len(t) != 2:
                raise ValueError(f"tip {t} is not a path of length 2")
            # revalidates composability and membership in this quiver
            quiver.path(*t.arrows)
        self.quiver = quiver
        self.order = order
        self.tips = tips
        self._tipset = frozenset(t.arrows for t in tips)
        self.n2 = tuple(order.sorted(p for p in quiver.paths_of_length(2)
                                     if p.arrows not in self._tipset))
        self.candidates: dict[Path, tuple[Path, ...]] = {}
        for t in tips:
            tk = order.key(t)
            self.candidates[t] = tuple(n for n in self.n2
                                       if is_parallel(n, t) and order.key(n) < tk)
        self.variables = tuple(CoeffVar(t, n) for t in tips for n in self.candidates[t])
        self._varset = frozenset(self.variables)

    @property
    def D(self) -> int:
        return len(self.variables)

    def __repr__(self) -> str:
        return f"QuadraticScheme(tips={[str(t) for t in self.tips]}, D={self.D})"

    def __eq__(self, other: object) -> bool:
        return (isinstance(other, QuadraticScheme) and self.quiver == other.quiver
                and self.order == other.order and self.tips == other.tips)

    def __hash__(self) -> int:
        return hash((self.quiver, self.tips))

    def is_nontip(self, p: Path) -> bool:
        a = p.arrows
        return not any(a[i:i + 2] in self._tipset for i in range(len(a) - 1))

    def var(self, t: Path | str, n: Path | str) -> CoeffVar:
        t = self._as_path(t)
        n = self._as_path(n)
        v = CoeffVar(t, n)
        if v not in self._varset:
            raise TypeError(f"{v} is not a coordinate of this scheme")
        return v

    def _as_path(self, p: Path | str) -> Path:
        return p if isinstance(p, Path) else self.quiver.path(p)

    def _resolve(self, k: VarKey) -> CoeffVar:
        if isinstance(k, CoeffVar):
            if k not in self._varset:
                raise TypeError(f"{k} is not a coordinate of this scheme")
            return k
        t, n = k
        return self.var(t, n)

    def point(self, values: Optional[Mapping[VarKey, Any]] = None, default: Any = 0) -> dict:
        """A total point; coordinates missing from ``values`` get ``default``.

        Pass ``default=None`` to require every coordinate explicitly.
        """
        given = {self._resolve(k): Fraction(v) for k, v in (values or {}).items()}
        out = {}
        for v in self.variables:
            if v in given:
                out[v] = given[v]
            elif default is None:
                raise ValueError(f"no value for {v}")
            else:
                out[v] = Fraction(default)
        return out

    def zero_point(self) -> dict:
        return self.point()

    def check_point(self, X: Mapping) -> None:
        extra = [k for k in X if k not in self._varset]
        if extra:
            raise TypeError(f"{extra[0]} is not a coordinate of this scheme")
        missing = [v for v in self.variables if v not in X]
        if missing:
            raise ValueError(f"point has no value for {missing[0]}")

    def rules(self, coefficient) -> RewriteSystem:
        """Rules ``t -> sum coefficient(var) n`` for an arbitrary coefficient map."""
        return RewriteSystem(self.order, [
            (t, Element((n, coefficient(CoeffVar(t, n))) for n in self.candidates[t]))
            for t in self.tips])

    def symbolic_rules(self) -> RewriteSystem:
        return self.rules(Poly.var)

    def rules_at(self, X: Mapping) -> RewriteSystem:
        self.check_point(X)
        return self.rules(lambda v: Fraction(X[v]))


def build_scheme(quiver: Quiver, order: PathOrder, tips: Iterable[Path | str]) -> QuadraticScheme:
    paths = [t if isinstance(t, Path) else quiver.path(t) for t in tips]
    return QuadraticScheme(quiver, order, paths)


@dataclass(frozen=True)
class Overlap:
    tip: Path
    tip2: Path
    element: Element


def overlap_relations(H: RewriteSystem) -> list[Overlap]:
    """``g_t c - a g_t'`` for every ordered pair ``t = ab``, ``t' = bc``."""
    out = []
    for t in H.tips:
        for t2 in H.tips:
            if t.arrows[1] != t2.arrows[0]:
                continue
            a = Path(t.arrows[:1], t.source, t2.source)
            c = Path(t2.arrows[1:], t.target, t2.target)
            el = H.relation(t).right(c) - H.relation(t2).left(a)
            out.append(Overlap(t, t2, el))
    return out


def overlaps(scheme: QuadraticScheme) -> list[Overlap]:
    return overlap_relations(scheme.symbolic_rules())


@dataclass(frozen=True)
class IdealEntry:
    tip: Path
    tip2: Path
    nhat: Path
    poly: Poly


@dataclass
class VarietyIdeal:
    """Coefficient polynomials of reduced overlaps and their normalized set.

    ``entries`` keeps the raw coefficients keyed by (t, t', n-hat);
    ``generators`` is the normalized, deduplicated list in entry order and
    ``origins`` gives the first entry that produced each generator.
    """

    variables: tuple
    entries: list[IdealEntry]
    generators: list[Poly] = field(default_factory=list)
    origins: list[IdealEntry] = field(default_factory=list)

    def __post_init__(self):
        if not self.generators:
            seen = set()
            for e in self.entries:
                g = e.poly.normalize()
                if g not in seen:
                    seen.add(g)
                    self.generators.append(g)
                    self.origins.append(e)

    def __len__(self) -> int:
        return len(self.generators)

    def is_member(self, X: Mapping) -> bool:
        return all(g.evaluate(X) == 0 for g in self.generators)


@contextmanager
def _gc_paused():
    """Suspend cyclic GC; reduction allocates millions of acyclic tuples and
    the collector would otherwise rescan the growing heap over and over."""
    was = gc.isenabled()
    gc.disable()
    try:
        yield
    finally:
        if was:
            gc.enable()


def _collect(H: RewriteSystem, jobs: int) -> list[IdealEntry]:
    with _gc_paused():
        return _collect_entries(H, jobs)


def _collect_entries(H: RewriteSystem, jobs: int) -> list[IdealEntry]:
    ovs = overlap_relations(H)

    def reduce(ov: Overlap) -> list[IdealEntry]:
        res, _ = complete_reduce(ov.element, H)
        return [IdealEntry(ov.tip, ov.tip2, n, res.coefficient(n))
                for n in H.order.sorted(res.support())]

    if jobs > 1 and len(ovs) > 1:
        with ThreadPoolExecutor(max_workers=jobs) as pool:
            chunks = list(pool.map(reduce, ovs))
    else:
        chunks = [reduce(ov) for ov in ovs]
    return [e for chunk in chunks for e in chunk]


def variety_ideal(scheme: QuadraticScheme, jobs: int = 1) -> VarietyIdeal:
    """Polynomials whose common zero set is the variety of the scheme."""
    entries = _collect(scheme.symbolic_rules(), jobs)
    with _gc_paused():
        return VarietyIdeal(scheme.variables, entries)


@dataclass
class CheckResult:
    groebner: bool
    certificate: Optional[Overlap] = None

    def __bool__(self) -> bool:
        return self.groebner


def check_rules(G: RewriteSystem) -> CheckResult:
    """Buchberger's criterion: every overlap must reduce to zero."""
    for ov in overlap_relations(G):
        res, _ = complete_reduce(ov.element, G)
        if res:
            return CheckResult(False, Overlap(ov.tip, ov.tip2, res))
    return CheckResult(True)


def buchberger_check(scheme: QuadraticScheme, X: Mapping) -> CheckResult:
    return check_rules(scheme.rules_at(X))


def is_member(ideal: VarietyIdeal, X: Mapping) -> bool:
    known = set(ideal.variables)
    extra = [k for k in X if k not in known]
    if extra:
        raise TypeError(f"{extra[0]} is not a coordinate of this variety")
    missing = [v for v in ideal.variables if v not in X]
    if missing:
        raise ValueError(f"point has no value for {missing[0]}")
    return ideal.is_member(X)


@dataclass
class Specialization:
    """Result of freezing some coordinates: ideal in the free variables."""

    fixed: dict
    ideal: VarietyIdeal
    distinguished: RewriteSystem

    @property
    def free_variables(self) -> tuple:
        return self.ideal.variables

    @property
    def generators(self) -> list[Poly]:
        return self.ideal.generators


def specialize(scheme: QuadraticScheme, psi: Mapping[VarKey, Any] | Iterable[tuple[VarKey, Any]],
               jobs: int = 1) -> Specialization:
    """Reduce overlaps with the coordinates in ``psi`` frozen to constants."""
    pairs = psi.items() if isinstance(psi, Mapping) else psi
    fixed: dict = {}
    for k, val in pairs:
        v = scheme._resolve(k)
        if v in fixed:
            raise ValueError(f"{v} is assigned twice")
        fixed[v] = Fraction(val)
    free = tuple(v for v in scheme.variables if v not in fixed)
    H = scheme.rules(lambda v: Poly.const(fixed[v]) if v in fixed else Poly.var(v))
    ideal = VarietyIdeal(free, _collect(H, jobs))
    distinguished = scheme.rules(lambda v: fixed.get(v, 0))
    return Specialization(fixed, ideal, distinguished)
