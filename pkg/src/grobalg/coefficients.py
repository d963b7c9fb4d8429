"""Exact coefficients: rationals and sparse commutative polynomials over them.

Rationals are :class:`fractions.Fraction`.  Polynomial variables may be any
hashable, totally ordered value; the scheme code uses :class:`CoeffVar`,
plain strings are handy for renamed presentations and tests.
"""

from __future__ import annotations

import math
import re
from fractions import Fraction
from typing import Any, Callable, Iterable, Mapping, Optional, Union

from .quiver import Path

Scalar = Union[int, Fraction]
Monomial = tuple  # sorted tuple of (variable, exponent) pairs


class UnboundVariableError(KeyError):
    pass


class CoeffVar(str):
    """The indeterminate attached to a tip and one of its candidate nontips.

    A ``str`` subclass holding its display name ``y[t|n]``, so hashing,
    equality and ordering run at C speed; monomials hash their variables
    constantly.
    """

    tip: Path
    nontip: Path

    def __new__(cls, tip: Path, nontip: Path):
        self = super().__new__(cls, f"y[{tip}|{nontip}]")
        self.tip = tip
        self.nontip = nontip
        return self

    @property
    def name(self) -> str:
        return str.__str__(self)

    def __reduce__(self):
        return (CoeffVar, (self.tip, self.nontip))

    def __repr__(self) -> str:
        return self.name


def parse_rational(text: str) -> Fraction:
    """Strict ``[+-]int[/int]`` parsing; raises ValueError otherwise."""
    m = re.fullmatch(r"\s*([+-]?\d+)(?:/(\d+))?\s*", text)
    if not m or (m.group(2) is not None and int(m.group(2)) == 0):
        raise ValueError(f"malformed rational: {text!r}")
    return Fraction(int(m.group(1)), int(m.group(2) or 1))


def format_rational(c: Fraction) -> str:
    return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"


def _mono_mul(m1: Monomial, m2: Monomial) -> Monomial:
    if not m1:
        return m2
    if not m2:
        return m1
    if len(m2) == 1:
        # the common case in reduction: times a single variable power
        (v, e), = m2
        for i, (w, k) in enumerate(m1):
            if w is v or w == v:
                return m1[:i] + ((v, k + e),) + m1[i + 1:]
            if v < w:
                return m1[:i] + ((v, e),) + m1[i:]
        return m1 + ((v, e),)
    d = dict(m1)
    for v, e in m2:
        d[v] = d.get(v, 0) + e
    return tuple(sorted(d.items()))


def _mono_flat(m: Monomial) -> tuple:
    return tuple(v for v, e in m for _ in range(e))


def monomial_sort_key(m: Monomial) -> tuple:
    """Ascending sort puts the canonically greatest monomial first.

    Graded first, then lexicographic with the alphabetically smallest
    variable most significant.
    """
    flat = _mono_flat(m)
    return (-len(flat), flat)


def _scalar(c) -> Scalar:
    """Integers stay ints (much faster); everything else becomes a Fraction."""
    if isinstance(c, int):
        return int(c)
    c = Fraction(c)
    return c.numerator if c.denominator == 1 else c


class Poly:
    """A sparse polynomial with rational coefficients; immutable.

    Coefficients are stored as int when integral and as Fraction otherwise.
    """

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Optional[Mapping[Monomial, Scalar]] = None):
        clean = {}
        for m, c in (terms or {}).items():
            if c:
                clean[m] = _scalar(c)
        self._terms: dict = clean
        self._hash = None

    @classmethod
    def _raw(cls, terms: dict) -> "Poly":
        """Wrap a dict already free of zero coefficients, without copying."""
        p = cls.__new__(cls)
        p._terms = terms
        p._hash = None
        return p

    @staticmethod
    def accumulate(acc: dict, f: Mapping, g: "Poly | Scalar") -> None:
        """``acc += f * g`` in place, with ``acc`` and ``f`` raw term dicts."""
        g_terms = g._terms if isinstance(g, Poly) else {(): g}
        for m2, c2 in g_terms.items():
            for m1, c1 in f.items():
                m = _mono_mul(m1, m2)
                s = acc.get(m, 0) + c1 * c2
                if s:
                    acc[m] = s
                else:
                    acc.pop(m, None)

    @classmethod
    def var(cls, v: Any) -> "Poly":
        return cls({((v, 1),): 1})

    @classmethod
    def const(cls, c: Scalar) -> "Poly":
        return cls({(): c})

    @classmethod
    def zero(cls) -> "Poly":
        return cls()

    @property
    def terms(self) -> dict:
        return dict(self._terms)

    def items(self):
        return self._terms.items()

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __len__(self) -> int:
        return len(self._terms)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, Poly):
            return self._terms == other._terms
        if isinstance(other, (int, Fraction)):
            return self._terms == ({(): other} if other else {})
        return NotImplemented

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    @staticmethod
    def _coerce(x) -> "Poly":
        if isinstance(x, Poly):
            return x
        if isinstance(x, (int, Fraction)):
            return Poly.const(x)
        raise TypeError(f"cannot combine Poly with {type(x).__name__}")

    def __add__(self, other) -> "Poly":
        other = self._coerce(other)
        out = dict(self._terms)
        for m, c in other._terms.items():
            s = out.get(m, 0) + c
            if s:
                out[m] = s
            else:
                out.pop(m, None)
        return Poly._raw(out)

    __radd__ = __add__

    def __neg__(self) -> "Poly":
        return Poly({m: -c for m, c in self._terms.items()})

    def __sub__(self, other) -> "Poly":
        return self + (-self._coerce(other))

    def __rsub__(self, other) -> "Poly":
        return self._coerce(other) - self

    def __mul__(self, other) -> "Poly":
        if isinstance(other, (int, Fraction)):
            return Poly({m: c * other for m, c in self._terms.items()}) if other else Poly()
        other = self._coerce(other)
        out: dict = {}
        for m1, c1 in self._terms.items():
            for m2, c2 in other._terms.items():
                m = _mono_mul(m1, m2)
                out[m] = out.get(m, 0) + c1 * c2
        return Poly(out)

    __rmul__ = __mul__

    def degree(self) -> int:
        return max((sum(e for _, e in m) for m in self._terms), default=-1)

    def constant_term(self) -> Fraction:
        return self._terms.get((), Fraction(0))

    def variables(self) -> set:
        return {v for m in self._terms for v, _ in m}

    def sorted_terms(self) -> list[tuple[Monomial, Fraction]]:
        return sorted(self._terms.items(), key=lambda mc: monomial_sort_key(mc[0]))

    def leading_monomial(self) -> Monomial:
        if not self._terms:
            raise ValueError("zero polynomial has no leading monomial")
        top = self.degree()
        return min((m for m in self._terms if sum(e for _, e in m) == top), key=_mono_flat)

    def evaluate(self, point: Mapping) -> Fraction:
        values: dict = {}
        total: Scalar = 0
        for m, c in self._terms.items():
            val = c
            for v, e in m:
                x = values.get(v)
                if x is None:
                    try:
                        x = values[v] = _scalar(point[v])
                    except KeyError:
                        raise UnboundVariableError(f"unbound variable {v}") from None
                if not x:
                    val = 0
                    break
                val *= x if e == 1 else x ** e
            total += val
        return Fraction(total)

    def substitute(self, values: Mapping) -> "Poly":
        """Replace the variables present in ``values`` by constants."""
        out: dict = {}
        for m, c in self._terms.items():
            rest = []
            for v, e in m:
                if v in values:
                    c = c * Fraction(values[v]) ** e
                else:
                    rest.append((v, e))
            if c:
                key = tuple(rest)
                out[key] = out.get(key, 0) + c
        return Poly(out)

    def rename(self, mapping: Callable[[Any], Any] | Mapping) -> "Poly":
        """Rename variables; a mapping leaves unlisted variables alone."""
        f = mapping if callable(mapping) else (lambda v: mapping.get(v, v))
        out: dict = {}
        for m, c in self._terms.items():
            key = tuple(sorted(_merge((f(v), e) for v, e in m)))
            out[key] = out.get(key, 0) + c
        return Poly(out)

    def normalize(self) -> "Poly":
        """Divide by the content and make the leading coefficient positive."""
        if not self._terms:
            raise ValueError("cannot normalize the zero polynomial")
        coeffs = self._terms.values()
        sign = -1 if self._terms[self.leading_monomial()] < 0 else 1
        if all(isinstance(c, int) for c in coeffs):
            g = math.gcd(*coeffs) * sign
            return Poly._raw({m: c // g for m, c in self._terms.items()})
        nums = [c.numerator for c in coeffs]
        dens = [c.denominator for c in coeffs]
        content = Fraction(math.gcd(*nums), math.lcm(*dens)) * sign
        return Poly({m: c / content for m, c in self._terms.items()})

    def to_text(self, names: Optional[Callable[[Any], str]] = None) -> str:
        if not self._terms:
            return "0"
        if names is not None:
            # order the terms by the displayed names
            return self.rename(names).to_text()
        name = str
        parts = []
        for i, (m, c) in enumerate(self.sorted_terms()):
            sign = "-" if c < 0 else "+"
            a = abs(c)
            factors = [name(v) if e == 1 else f"{name(v)}^{e}" for v, e in m]
            if not factors:
                body = format_rational(a)
            elif a == 1:
                body = "*".join(factors)
            else:
                body = "*".join([format_rational(a)] + factors)
            if i == 0:
                parts.append(body if sign == "+" else f"-{body}")
            else:
                parts.append(f"{sign} {body}")
        return " ".join(parts)

    def to_json(self, names: Optional[Callable[[Any], str]] = None) -> list[dict]:
        name = names or str
        return [{"coeff": format_rational(c), "vars": [name(v) for v in _mono_flat(m)]}
                for m, c in self.sorted_terms()]

    def __str__(self) -> str:
        return self.to_text()

    def __repr__(self) -> str:
        return f"Poly({self.to_text()})"


def _merge(pairs: Iterable[tuple]) -> list[tuple]:
    d: dict = {}
    for v, e in pairs:
        d[v] = d.get(v, 0) + e
    return list(d.items())


def normalize(f: Poly) -> Poly:
    return f.normalize()


def evaluate(f: Poly, point: Mapping) -> Fraction:
    return f.evaluate(point)


def symbols(names: str) -> tuple[Poly, ...]:
    """``A, B = symbols("A B")`` for tests and demos."""
    return tuple(Poly.var(n) for n in names.split())
