"""The line-oriented scheme file format.

::

    # comment
    vertices: v1 v2
    arrow a: v1 -> v2
    order: a b            # optional, greatest first; defaults to declaration order
    tips: a.b, b.a
    set a.b -> b.a = 1/2  # optional coordinate value

Identifiers must be declared before they are used.  Parse errors carry the
1-based line and column of the offending token.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from fractions import Fraction
from importlib import resources
from typing import Optional

from .coefficients import format_rational, parse_rational
from .order import LengthLeftLex
from .quiver import Path, Quiver, valid_identifier
from .variety import QuadraticScheme

Assignment = tuple[tuple[str, ...], tuple[str, ...], Fraction]


class SchemeFileError(ValueError):
    def __init__(self, message: str, line: int = 0, column: int = 0):
        self.message = message
        self.line = line
        self.column = column
        where = f"line {line}, column {column}: " if line else ""
        super().__init__(where + message)


@dataclass
class SchemeFile:
    vertices: list[str] = field(default_factory=list)
    arrows: list[tuple[str, str, str]] = field(default_factory=list)
    order: Optional[list[str]] = None
    tips: list[tuple[str, ...]] = field(default_factory=list)
    sets: list[Assignment] = field(default_factory=list)

    def quiver(self) -> Quiver:
        return Quiver(self.vertices, self.arrows)

    def scheme(self) -> QuadraticScheme:
        q = self.quiver()
        order = LengthLeftLex(q, self.order)
        return QuadraticScheme(q, order, [q.path(*t) for t in self.tips])

    def assignments(self, scheme: Optional[QuadraticScheme] = None) -> list[tuple[tuple[Path, Path], Fraction]]:
        """The ``set`` entries as ((tip, nontip), value) pairs of paths."""
        q = scheme.quiver if scheme is not None else self.quiver()
        return [((q.path(*t), q.path(*n)), v) for t, n, v in self.sets]

    def with_sets(self, extra: list[Assignment]) -> "SchemeFile":
        return SchemeFile(list(self.vertices), list(self.arrows),
                          None if self.order is None else list(self.order),
                          list(self.tips), list(self.sets) + list(extra))


_ARROW = re.compile(r"arrow\s+(\S+?)\s*:\s*(\S+)\s*->\s*(\S+)\s*$")
_SET = re.compile(r"(\S+)\s*->\s*(\S+)\s*=\s*(.+?)\s*$")


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.sf = SchemeFile()
        self.seen: set[str] = set()
        self.arrow_ends: dict[str, tuple[str, str]] = {}

    def error(self, msg: str, lineno: int, line: str, token: Optional[str] = None) -> SchemeFileError:
        # search after the directive keyword so "x" in "tips: x" is not found in "tips"
        start = line.find(":") + 1
        col = line.find(token, start) + 1 if token and token in line[start:] else 1
        return SchemeFileError(msg, lineno, col)

    def once(self, directive: str, lineno: int, line: str) -> None:
        if directive in self.seen:
            raise self.error(f"duplicate directive {directive!r}", lineno, line, directive)
        self.seen.add(directive)

    def path(self, token: str, lineno: int, line: str) -> tuple[str, ...]:
        names = tuple(token.split("."))
        for n in names:
            if n not in self.arrow_ends:
                raise self.error(f"unknown identifier {n!r}", lineno, line, n or token)
        for a, b in zip(names, names[1:]):
            if self.arrow_ends[a][1] != self.arrow_ends[b][0]:
                raise self.error(f"non-composable path {token!r}", lineno, line, token)
        return names

    def parse(self) -> SchemeFile:
        for lineno, raw in enumerate(self.text.splitlines(), start=1):
            line = raw.split("#", 1)[0].rstrip()
            body = line.strip()
            if not body:
                continue
            if body.startswith("vertices:"):
                self.vertices(body[len("vertices:"):], lineno, line)
            elif body.startswith("arrow "):
                self.arrow(body, lineno, line)
            elif body.startswith("order:"):
                self.order(body[len("order:"):], lineno, line)
            elif body.startswith("tips:"):
                self.tips(body[len("tips:"):], lineno, line)
            elif body.startswith("set "):
                self.sf.sets.append(parse_assignment(body[4:], lineno, line, self))
            else:
                raise self.error(f"unrecognized directive {body.split()[0]!r}", lineno, line,
                                 body.split()[0])
        if "vertices" not in self.seen:
            raise SchemeFileError("missing 'vertices:' directive")
        return self.sf

    def vertices(self, rest: str, lineno: int, line: str) -> None:
        self.once("vertices", lineno, line)
        names = rest.split()
        if not names:
            raise self.error("no vertices declared", lineno, line)
        for v in names:
            if not valid_identifier(v):
                raise self.error(f"invalid identifier {v!r}", lineno, line, v)
            if v in self.sf.vertices:
                raise self.error(f"duplicate vertex {v!r}", lineno, line, v)
            self.sf.vertices.append(v)

    def arrow(self, body: str, lineno: int, line: str) -> None:
        if "vertices" not in self.seen:
            raise self.error("arrows must follow 'vertices:'", lineno, line)
        if "order" in self.seen or "tips" in self.seen:
            raise self.error("arrows must precede 'order:' and 'tips:'", lineno, line)
        m = _ARROW.match(body)
        if not m:
            raise self.error("expected 'arrow NAME: SOURCE -> TARGET'", lineno, line)
        name, src, tgt = m.groups()
        if not valid_identifier(name):
            raise self.error(f"invalid identifier {name!r}", lineno, line, name)
        if name in self.arrow_ends or name in self.sf.vertices:
            raise self.error(f"duplicate identifier {name!r}", lineno, line, name)
        for v in (src, tgt):
            if v not in self.sf.vertices:
                raise self.error(f"unknown identifier {v!r}", lineno, line, v)
        self.arrow_ends[name] = (src, tgt)
        self.sf.arrows.append((name, src, tgt))

    def order(self, rest: str, lineno: int, line: str) -> None:
        self.once("order", lineno, line)
        names = rest.split()
        for n in names:
            if n not in self.arrow_ends:
                raise self.error(f"unknown identifier {n!r}", lineno, line, n)
        if len(set(names)) != len(names) or len(names) != len(self.arrow_ends):
            raise self.error("'order:' must list every arrow exactly once", lineno, line)
        self.sf.order = names

    def tips(self, rest: str, lineno: int, line: str) -> None:
        self.once("tips", lineno, line)
        for token in (t.strip() for t in rest.split(",")):
            if not token:
                continue
            names = self.path(token, lineno, line)
            if len(names) != 2:
                raise self.error(f"tip {token!r} is not a path of length 2", lineno, line, token)
            if names in self.sf.tips:
                raise self.error(f"duplicate tip {token!r}", lineno, line, token)
            self.sf.tips.append(names)


def parse_assignment(text: str, lineno: int = 0, line: str = "", parser: Optional[_Parser] = None) -> Assignment:
    """Parse ``t1.t2 -> n1.n2 = p/q`` (also used for ``--set`` flags)."""
    line = line or text
    m = _SET.match(text.strip())
    if not m:
        raise SchemeFileError("expected 'TIP -> NONTIP = VALUE'", lineno, 1)
    t, n, val = m.groups()
    if parser is not None:
        tp, np_ = parser.path(t, lineno, line), parser.path(n, lineno, line)
    else:
        tp, np_ = tuple(t.split(".")), tuple(n.split("."))
    try:
        value = parse_rational(val)
    except ValueError:
        col = line.find(val) + 1 if val in line else 1
        raise SchemeFileError(f"malformed rational {val!r}", lineno, col) from None
    return tp, np_, value


def parse(text: str) -> SchemeFile:
    return _Parser(text).parse()


def render(sf: SchemeFile) -> str:
    lines = ["vertices: " + " ".join(sf.vertices)]
    lines += [f"arrow {a}: {s} -> {t}" for a, s, t in sf.arrows]
    if sf.order is not None:
        lines.append("order: " + " ".join(sf.order))
    if sf.tips:
        lines.append("tips: " + ", ".join(".".join(t) for t in sf.tips))
    lines += [f"set {'.'.join(t)} -> {'.'.join(n)} = {format_rational(v)}" for t, n, v in sf.sets]
    return "\n".join(lines) + "\n"


def from_scheme(scheme: QuadraticScheme, sets: Optional[list[Assignment]] = None) -> SchemeFile:
    """Describe a length-left-lex scheme as a file (order written out explicitly)."""
    q = scheme.quiver
    order = scheme.order
    if not isinstance(order, LengthLeftLex):
        arrows = [p.arrows[0] for p in order.sorted(Path((a.name,), a.source, a.target) for a in q.arrows)]
    else:
        arrows = list(order.arrow_precedence)
    return SchemeFile(list(q.vertices), [(a.name, a.source, a.target) for a in q.arrows],
                      arrows, [t.arrows for t in scheme.tips], list(sets or []))


def load_fixture(name: str) -> SchemeFile:
    """Load one of the bundled example files, e.g. ``load_fixture("example51")``."""
    text = resources.files("grobalg.data").joinpath(f"{name}.scheme").read_text(encoding="utf-8")
    return parse(text)


FIXTURES = ("example51", "example52", "example53", "example54", "example61")
