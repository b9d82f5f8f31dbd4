"""Immutable tree values, exhaustive generators, canonical text format, validation.

Two families live here: complete binary trees (every vertex has 0 or 2
children) and colored complete ternary trees (0 or 3 children, every vertex
carries a color >= 0).  The deterministic generators below are the
enumeration oracles the closed-form counts in :mod:`fussforest.exact` are
checked against.

Canonical text format (bit-exact, one tree per line in files):
  binary          L                    leaf
                  (<left> <right>)     internal, single space separator
  colored ternary <c>                  leaf with color c (decimal, no sign)
                  (<c>: <t1> <t2> <t3>)   internal vertex with color c
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from typing import Iterator, Sequence

DEFAULT_MAX_N = 12
MAX_N_ENV = "FUSS_FOREST_MAX_N"

BINARY = "binary"
COLORED_TERNARY = "colored-ternary"
FAMILIES = (BINARY, COLORED_TERNARY)


class SizeCapError(ValueError):
    """Refused an enumeration whose size parameter exceeds the configured cap."""


@dataclass(frozen=True)
class BinaryTree:
    """A complete binary tree; a leaf has both children None."""

    left: BinaryTree | None = None
    right: BinaryTree | None = None

    @property
    def is_leaf(self) -> bool:
        return self.left is None and self.right is None


LEAF = BinaryTree()


@dataclass(frozen=True)
class ColoredTernaryTree:
    """A complete ternary tree vertex with a nonnegative color; leaves have no children."""

    color: int = 0
    children: tuple[ColoredTernaryTree, ...] = ()

    @property
    def is_leaf(self) -> bool:
        return not self.children


def leaf(color: int = 0) -> ColoredTernaryTree:
    return ColoredTernaryTree(color)


def node(color: int, first: ColoredTernaryTree, second: ColoredTernaryTree,
         third: ColoredTernaryTree) -> ColoredTernaryTree:
    return ColoredTernaryTree(color, (first, second, third))


# ---------------------------------------------------------------------------
# Vertex statistics
# ---------------------------------------------------------------------------

def internal_count(tree: BinaryTree | ColoredTernaryTree) -> int:
    """Number of vertices that have children."""
    if isinstance(tree, BinaryTree):
        if tree.is_leaf:
            return 0
        return 1 + internal_count(tree.left) + internal_count(tree.right)
    if tree.is_leaf:
        return 0
    return 1 + sum(internal_count(c) for c in tree.children)


def leaf_count(tree: BinaryTree | ColoredTernaryTree) -> int:
    if isinstance(tree, BinaryTree):
        return internal_count(tree) + 1
    return 2 * internal_count(tree) + 1


def color_sum(tree: ColoredTernaryTree) -> int:
    """Sum of the colors over all vertices."""
    return tree.color + sum(color_sum(c) for c in tree.children)


def ternary_weight(tree: ColoredTernaryTree) -> int:
    """The n for which this tree belongs to the weight-n colored family.

    A colored ternary tree with p internal vertices and color sum s has
    weight n = 2p + s; the bijection sends it to a binary tree with n
    internal vertices.
    """
    return 2 * internal_count(tree) + color_sum(tree)


# ---------------------------------------------------------------------------
# Deterministic exhaustive generators
# ---------------------------------------------------------------------------

def _enumeration_cap(max_n: int | None) -> int:
    if max_n is not None:
        return max_n
    env = os.environ.get(MAX_N_ENV)
    if env is not None:
        try:
            return int(env)
        except ValueError:
            raise ValueError(f"{MAX_N_ENV} must be an integer, got {env!r}") from None
    return DEFAULT_MAX_N


def _check_cap(n: int, max_n: int | None) -> None:
    cap = _enumeration_cap(max_n)
    if n > cap:
        raise SizeCapError(
            f"n={n} exceeds the enumeration cap {cap}; pass max_n or set {MAX_N_ENV} to override"
        )


def _gen_binary(n: int) -> Iterator[BinaryTree]:
    if n == 0:
        yield LEAF
        return
    for left_size in range(n):
        for left in _gen_binary(left_size):
            for right in _gen_binary(n - 1 - left_size):
                yield BinaryTree(left, right)


def enumerate_binary(n: int, max_n: int | None = None) -> Iterator[BinaryTree]:
    """Yield every complete binary tree with n internal vertices exactly once.

    Order is fixed: left subtree internal size ascending 0..n-1, recursively.
    Total count equals k_catalan(n, 2).
    """
    if n < 0:
        raise ValueError(f"enumerate_binary requires n >= 0, got n={n}")
    _check_cap(n, max_n)
    return _gen_binary(n)


def _weak_compositions(total: int, parts: int) -> Iterator[tuple[int, ...]]:
    """All tuples of `parts` nonnegative ints summing to total, lexicographically ascending."""
    if parts == 0:
        if total == 0:
            yield ()
        return
    if parts == 1:
        yield (total,)
        return
    for head in range(total + 1):
        for rest in _weak_compositions(total - head, parts - 1):
            yield (head,) + rest


def _gen_ternary_shapes(p: int) -> Iterator[ColoredTernaryTree]:
    """All uncolored ternary shapes (colors 0) with p internal vertices."""
    if p == 0:
        yield ColoredTernaryTree()
        return
    for i in range(p):
        for j in range(p - i):
            for first in _gen_ternary_shapes(i):
                for second in _gen_ternary_shapes(j):
                    for third in _gen_ternary_shapes(p - 1 - i - j):
                        yield ColoredTernaryTree(0, (first, second, third))


def _paint(shape: ColoredTernaryTree, colors: Iterator[int]) -> ColoredTernaryTree:
    # Colors are consumed in preorder: vertex first, then children left to right.
    color = next(colors)
    if shape.is_leaf:
        return ColoredTernaryTree(color)
    return ColoredTernaryTree(color, tuple(_paint(c, colors) for c in shape.children))


def _gen_colored_ternary(n: int, p: int) -> Iterator[ColoredTernaryTree]:
    if 2 * p > n:
        return
    for shape in _gen_ternary_shapes(p):
        for composition in _weak_compositions(n - 2 * p, 3 * p + 1):
            yield _paint(shape, iter(composition))


def enumerate_colored_ternary(n: int, p: int | None = None,
                              max_n: int | None = None) -> Iterator[ColoredTernaryTree]:
    """Yield the weight-n colored ternary trees exactly once, in fixed order.

    With p given, restricts to trees with p internal vertices (color sum
    n-2p); an out-of-range p yields nothing.  With p None, runs p ascending
    from 0 to floor(n/2).  Shapes are enumerated recursively (child sizes
    ascending lexicographically) and colors as weak compositions of n-2p
    assigned to vertices in preorder.
    """
    if n < 0:
        raise ValueError(f"enumerate_colored_ternary requires n >= 0, got n={n}")
    if p is not None and p < 0:
        raise ValueError(f"enumerate_colored_ternary requires p >= 0, got p={p}")
    _check_cap(n, max_n)
    if p is not None:
        return _gen_colored_ternary(n, p)

    def all_p() -> Iterator[ColoredTernaryTree]:
        for q in range(n // 2 + 1):
            yield from _gen_colored_ternary(n, q)

    return all_p()


def enumerate_forests(family: str, n: int, m: int,
                      max_n: int | None = None) -> Iterator[tuple]:
    """Yield every ordered m-tuple of trees with total weight n, exactly once.

    Weight is internal-vertex count for binary components and
    :func:`ternary_weight` for colored ternary components.  Outer order is
    the weak composition of n into m component weights (lexicographic
    ascending), inner order the per-component generators.
    """
    if family not in FAMILIES:
        raise ValueError(f"unknown family {family!r}; expected one of {FAMILIES}")
    if m < 1:
        raise ValueError(f"enumerate_forests requires m >= 1, got m={m}")
    if n < 0:
        raise ValueError(f"enumerate_forests requires n >= 0, got n={n}")
    _check_cap(n, max_n)

    def component(weight: int) -> Iterator:
        if family == BINARY:
            return _gen_binary(weight)

        def colored() -> Iterator[ColoredTernaryTree]:
            for q in range(weight // 2 + 1):
                yield from _gen_colored_ternary(weight, q)

        return colored()

    def tuples(weights: tuple[int, ...]) -> Iterator[tuple]:
        if not weights:
            yield ()
            return
        for head in component(weights[0]):
            for rest in tuples(weights[1:]):
                yield (head,) + rest

    def forests() -> Iterator[tuple]:
        for weights in _weak_compositions(n, m):
            yield from tuples(weights)

    return forests()


# ---------------------------------------------------------------------------
# Validation
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class ValidationReport:
    """Outcome of structural validation; `path` locates the first violation."""

    ok: bool
    path: tuple[int, ...] | None = None
    message: str | None = None

    def __str__(self) -> str:
        if self.ok:
            return "valid"
        where = "/".join(str(i) for i in self.path) if self.path else "root"
        return f"invalid at {where}: {self.message}"


def _validate_binary(tree, path) -> ValidationReport:
    if not isinstance(tree, BinaryTree):
        return ValidationReport(False, path, f"expected a BinaryTree node, got {type(tree).__name__}")
    if (tree.left is None) != (tree.right is None):
        return ValidationReport(False, path, "binary vertex must have 0 or 2 children")
    if tree.left is None:
        return ValidationReport(True)
    for index, child in enumerate((tree.left, tree.right)):
        report = _validate_binary(child, path + (index,))
        if not report.ok:
            return report
    return ValidationReport(True)


def _validate_ternary(tree, path) -> ValidationReport:
    if not isinstance(tree, ColoredTernaryTree):
        return ValidationReport(False, path, f"expected a ColoredTernaryTree node, got {type(tree).__name__}")
    if not isinstance(tree.color, int) or isinstance(tree.color, bool):
        return ValidationReport(False, path, f"color must be an int, got {type(tree.color).__name__}")
    if tree.color < 0:
        return ValidationReport(False, path, f"color must be >= 0, got {tree.color}")
    if len(tree.children) not in (0, 3):
        return ValidationReport(False, path, f"ternary vertex must have 0 or 3 children, has {len(tree.children)}")
    for index, child in enumerate(tree.children):
        report = _validate_ternary(child, path + (index,))
        if not report.ok:
            return report
    return ValidationReport(True)


def validate(obj, family: str) -> ValidationReport:
    """Check completeness (0-or-2 / 0-or-3 children) and color nonnegativity.

    `obj` may be a single tree or a forest (sequence of trees); for forests
    the first path component is the component index.  Never raises; the
    report carries the first violation in preorder.
    """
    if family not in FAMILIES:
        raise ValueError(f"unknown family {family!r}; expected one of {FAMILIES}")
    check = _validate_binary if family == BINARY else _validate_ternary
    if isinstance(obj, (BinaryTree, ColoredTernaryTree)):
        return check(obj, ())
    if isinstance(obj, Sequence):
        if len(obj) == 0:
            return ValidationReport(False, (), "a forest needs at least one component")
        for index, tree in enumerate(obj):
            report = check(tree, (index,))
            if not report.ok:
                return report
        return ValidationReport(True)
    return ValidationReport(False, (), f"expected a tree or forest, got {type(obj).__name__}")


# ---------------------------------------------------------------------------
# Canonical text format
# ---------------------------------------------------------------------------

class ParseError(ValueError):
    """Malformed tree text; carries the byte offset and what was expected there."""

    def __init__(self, offset: int, expected: str, found: str):
        self.offset = offset
        self.expected = expected
        self.found = found
        super().__init__(f"offset {offset}: expected {expected}, found {found}")


def serialize(tree: BinaryTree | ColoredTernaryTree) -> str:
    """Canonical single-line text for one tree of either family."""
    if isinstance(tree, BinaryTree):
        if tree.is_leaf:
            return "L"
        return f"({serialize(tree.left)} {serialize(tree.right)})"
    if tree.is_leaf:
        return str(tree.color)
    inner = " ".join(serialize(c) for c in tree.children)
    return f"({tree.color}: {inner})"


def serialize_forest(forest: Sequence) -> str:
    """One tree per line, trailing newline included."""
    return "".join(serialize(t) + "\n" for t in forest)


class _Cursor:
    __slots__ = ("text", "pos")

    def __init__(self, text: str):
        self.text = text
        self.pos = 0

    def skip_spaces(self) -> None:
        while self.pos < len(self.text) and self.text[self.pos] in " \t":
            self.pos += 1

    def peek(self) -> str:
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def take(self) -> str:
        ch = self.peek()
        self.pos += 1
        return ch

    def expect(self, ch: str, expected: str) -> None:
        if self.peek() != ch:
            raise ParseError(self.pos, expected, _describe(self.peek()))
        self.pos += 1

    def number(self) -> int:
        start = self.pos
        while self.peek().isdigit():
            self.pos += 1
        if self.pos == start:
            raise ParseError(start, "an unsigned decimal color", _describe(self.peek()))
        return int(self.text[start:self.pos])


def _describe(ch: str) -> str:
    return "end of input" if ch == "" else repr(ch)


def _finish(cursor: _Cursor, value):
    cursor.skip_spaces()
    if cursor.pos != len(cursor.text):
        raise ParseError(cursor.pos, "end of input", _describe(cursor.peek()))
    return value


def parse_binary(text: str) -> BinaryTree:
    """Parse one canonical binary tree; inverse of :func:`serialize`."""
    cursor = _Cursor(text)
    return _finish(cursor, _parse_binary(cursor))


def _parse_binary(cursor: _Cursor) -> BinaryTree:
    cursor.skip_spaces()
    ch = cursor.peek()
    if ch == "L":
        cursor.take()
        return LEAF
    if ch == "(":
        cursor.take()
        left = _parse_binary(cursor)
        cursor.skip_spaces()
        right = _parse_binary(cursor)
        cursor.skip_spaces()
        cursor.expect(")", "')'")
        return BinaryTree(left, right)
    raise ParseError(cursor.pos, "'L' or '('", _describe(ch))


def parse_ternary(text: str) -> ColoredTernaryTree:
    """Parse one canonical colored ternary tree; inverse of :func:`serialize`."""
    cursor = _Cursor(text)
    return _finish(cursor, _parse_ternary(cursor))


def _parse_ternary(cursor: _Cursor) -> ColoredTernaryTree:
    cursor.skip_spaces()
    ch = cursor.peek()
    if ch.isdigit():
        return ColoredTernaryTree(cursor.number())
    if ch == "(":
        cursor.take()
        cursor.skip_spaces()
        color = cursor.number()
        cursor.expect(":", "':' after the color")
        children = []
        for _ in range(3):
            cursor.skip_spaces()
            children.append(_parse_ternary(cursor))
        cursor.skip_spaces()
        cursor.expect(")", "')'")
        return ColoredTernaryTree(color, tuple(children))
    raise ParseError(cursor.pos, "a color digit or '('", _describe(ch))


def parse_forest(text: str, family: str) -> tuple:
    """Parse one tree per line; ParseError offsets are relative to the whole text."""
    if family not in FAMILIES:
        raise ValueError(f"unknown family {family!r}; expected one of {FAMILIES}")
    parse_one = parse_binary if family == BINARY else parse_ternary
    trees = []
    offset = 0
    lines = text.split("\n")
    if lines and lines[-1] == "":
        lines.pop()
    for line in lines:
        try:
            trees.append(parse_one(line))
        except ParseError as err:
            raise ParseError(offset + err.offset, err.expected, err.found) from None
        offset += len(line) + 1
    return tuple(trees)


# ---------------------------------------------------------------------------
# DOT export
# ---------------------------------------------------------------------------

def to_dot(tree: BinaryTree | ColoredTernaryTree, index: int = 0) -> str:
    """One digraph per tree: circles for internal vertices, points for leaves.

    Colors label the vertices (xlabel for point-shaped leaves); child order is
    preserved through ordinal edge labels 1, 2, 3 left to right.
    """
    lines = [f"digraph tree{index} {{"]
    counter = [0]

    def emit(sub) -> str:
        name = f"v{counter[0]}"
        counter[0] += 1
        color = getattr(sub, "color", None)
        is_leaf = sub.is_leaf
        if is_leaf:
            label = "" if color is None else f', xlabel="{color}"'
            lines.append(f'  {name} [shape=point{label}];')
        else:
            label = "" if color is None else str(color)
            lines.append(f'  {name} [shape=circle, label="{label}"];')
        children = (sub.left, sub.right) if isinstance(sub, BinaryTree) else sub.children
        if is_leaf:
            return name
        for ordinal, child in enumerate(children, start=1):
            child_name = emit(child)
            lines.append(f'  {name} -> {child_name} [label="{ordinal}"];')
        return name

    emit(tree)
    lines.append("}")
    return "\n".join(lines) + "\n"
