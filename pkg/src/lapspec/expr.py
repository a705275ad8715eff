"""Graph expressions built from complete-graph atoms.

An expression denotes a finite simple graph assembled from complete graphs
``K<n>`` by four operations:

    ``a + b``   disjoint union
    ``a * b``   join (every vertex of one side adjacent to every vertex of the other)
    ``<m>a``    disjoint union of m copies of an atom
    ``~a``      complement

Repetition binds tightest, then ``*``, then ``+``; both binary operators
associate to the left and parentheses group as usual.  ``3K1 * K1`` is
therefore the join of three isolated vertices with a single vertex, i.e.
the star on four vertices.
"""

from __future__ import annotations

from dataclasses import dataclass

__all__ = [
    "GraphExpr",
    "Complete",
    "Union",
    "Join",
    "Repeat",
    "Complement",
    "ParseError",
    "LiteralOverflowError",
    "MAX_LITERAL",
    "parse",
    "render",
    "order",
    "edge_count",
]

MAX_LITERAL = 10**9


class ParseError(ValueError):
    """Malformed expression text; ``pos`` is the 0-based offset of the fault."""

    def __init__(self, message: str, pos: int):
        super().__init__(f"{message} (at offset {pos})")
        self.pos = pos


class LiteralOverflowError(ParseError):
    """Integer literal larger than ``MAX_LITERAL``."""


class GraphExpr:
    """Base class of all expression nodes.  Nodes are immutable values."""


@dataclass(frozen=True)
class Complete(GraphExpr):
    """Complete graph on ``n`` vertices."""

    n: int

    def __post_init__(self):
        if self.n < 1:
            raise ValueError("a complete graph needs at least one vertex")


@dataclass(frozen=True)
class Union(GraphExpr):
    """Disjoint union of two graphs."""

    left: GraphExpr
    right: GraphExpr


@dataclass(frozen=True)
class Join(GraphExpr):
    """Join of two graphs: their union plus all edges across the two sides."""

    left: GraphExpr
    right: GraphExpr


@dataclass(frozen=True)
class Repeat(GraphExpr):
    """Disjoint union of ``m`` copies of ``inner``."""

    m: int
    inner: GraphExpr

    def __post_init__(self):
        if self.m < 1:
            raise ValueError("repetition count must be at least 1")


@dataclass(frozen=True)
class Complement(GraphExpr):
    """Complement of ``inner`` (off-diagonal adjacency flipped)."""

    inner: GraphExpr


# --- parsing -----------------------------------------------------------------

_KINDS = {"K": "K", "+": "PLUS", "*": "STAR", "~": "TILDE", "(": "LPAREN", ")": "RPAREN"}

_DESCRIBE = {
    "INT": "an integer",
    "K": "'K'",
    "PLUS": "'+'",
    "STAR": "'*'",
    "TILDE": "'~'",
    "LPAREN": "'('",
    "RPAREN": "')'",
    "END": "end of input",
}


def _tokenize(text: str) -> list[tuple[str, object, int]]:
    tokens: list[tuple[str, object, int]] = []
    i, n = 0, len(text)
    while i < n:
        ch = text[i]
        if ch.isspace():
            i += 1
            continue
        if ch.isdigit():
            j = i
            while j < n and text[j].isdigit():
                j += 1
            value = int(text[i:j])
            if value > MAX_LITERAL:
                raise LiteralOverflowError(f"integer literal {text[i:j]} exceeds {MAX_LITERAL}", i)
            if value < 1:
                raise ParseError("integer literals must be at least 1", i)
            tokens.append(("INT", value, i))
            i = j
            continue
        kind = _KINDS.get(ch)
        if kind is None:
            raise ParseError(f"unexpected character {ch!r}", i)
        tokens.append((kind, ch, i))
        i += 1
    tokens.append(("END", "", n))
    return tokens


def _show(token: tuple[str, object, int]) -> str:
    kind, value, _ = token
    return "end of input" if kind == "END" else repr(str(value))


class _Parser:
    def __init__(self, text: str):
        self.tokens = _tokenize(text)
        self.k = 0

    def peek(self) -> tuple[str, object, int]:
        return self.tokens[self.k]

    def take(self, kind: str) -> tuple[str, object, int]:
        token = self.tokens[self.k]
        if token[0] != kind:
            raise ParseError(f"expected {_DESCRIBE[kind]}, found {_show(token)}", token[2])
        self.k += 1
        return token

    def union(self) -> GraphExpr:
        e = self.join()
        while self.peek()[0] == "PLUS":
            self.k += 1
            e = Union(e, self.join())
        return e

    def join(self) -> GraphExpr:
        e = self.rep()
        while self.peek()[0] == "STAR":
            self.k += 1
            e = Join(e, self.rep())
        return e

    def rep(self) -> GraphExpr:
        if self.peek()[0] == "INT":
            m = self.take("INT")[1]
            return Repeat(m, self.atom())  # type: ignore[arg-type]
        return self.atom()

    def atom(self) -> GraphExpr:
        kind, _, pos = self.peek()
        if kind == "K":
            self.k += 1
            return Complete(self.take("INT")[1])  # type: ignore[arg-type]
        if kind == "TILDE":
            self.k += 1
            return Complement(self.atom())
        if kind == "LPAREN":
            self.k += 1
            e = self.union()
            self.take("RPAREN")
            return e
        raise ParseError(f"expected 'K', '~', '(' or an integer, found {_show(self.peek())}", pos)


def parse(text: str) -> GraphExpr:
    """Parse expression text into its unique AST under the declared precedence."""
    parser = _Parser(text)
    e = parser.union()
    parser.take("END")
    return e


# --- printing ----------------------------------------------------------------


def render(expr: GraphExpr) -> str:
    """Canonical, fully parenthesized text; ``parse(render(e)) == e``."""
    match expr:
        case Complete(n):
            return f"K{n}"
        case Union(left, right):
            return f"({render(left)} + {render(right)})"
        case Join(left, right):
            return f"({render(left)} * {render(right)})"
        case Repeat(m, inner):
            return f"{m}{_atom_text(inner)}"
        case Complement(inner):
            return f"~{_atom_text(inner)}"
    raise TypeError(f"not a GraphExpr: {expr!r}")


def _atom_text(expr: GraphExpr) -> str:
    # Repeat is the one node whose rendering is not itself an atom.
    text = render(expr)
    return f"({text})" if isinstance(expr, Repeat) else text


# --- structural counts ---------------------------------------------------------


def order(expr: GraphExpr) -> int:
    """Number of vertices of the denoted graph."""
    match expr:
        case Complete(n):
            return n
        case Union(left, right) | Join(left, right):
            return order(left) + order(right)
        case Repeat(m, inner):
            return m * order(inner)
        case Complement(inner):
            return order(inner)
    raise TypeError(f"not a GraphExpr: {expr!r}")


def edge_count(expr: GraphExpr) -> int:
    """Number of edges of the denoted graph."""
    match expr:
        case Complete(n):
            return n * (n - 1) // 2
        case Union(left, right):
            return edge_count(left) + edge_count(right)
        case Join(left, right):
            return edge_count(left) + edge_count(right) + order(left) * order(right)
        case Repeat(m, inner):
            return m * edge_count(inner)
        case Complement(inner):
            n = order(inner)
            return n * (n - 1) // 2 - edge_count(inner)
    raise TypeError(f"not a GraphExpr: {expr!r}")
