"""Domain types for the combinatorial object families, with predicates.

The families:

* ordered partitions of [n] (disjoint nonempty blocks, block order matters),
* signed permutations of [n],
* build-tree codes (incremental construction records),
* rooted plane trees and their increasing labelings,
* drawings (growth sequences of plane trees, one leaf added per step).

Text grammar, used by the CLI and fixtures:

* ordered partition   ``15|246|3`` — blocks joined by ``|``, elements of a
  block ascending; once values reach 10, elements are comma-separated
  (``1,15|2``),
* signed permutation  ``5+ 1+ 4- 3- 6+ 2+``,
* build-tree code     ``0+ 1- 1+ 1+ 0+ 3+``,
* plane tree          ``(()())`` — balanced parentheses, preorder,
* labeled tree        ``0(5() 1(3(6()) 2()) 4())`` — preorder nested form,
* drawing             plane-tree encodings joined by ``;``.

Empty objects (n = 0) serialize to the empty string, except the one-vertex
labeled tree ``0()`` and the one-tree drawing ``()``.

All types are immutable values and all operations are pure functions, so
everything here is safe to use concurrently.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterator, Literal, Optional

from .errors import NotLeafRemoval, SizeMismatch

Sign = Literal[1, -1]

#: Path of a vertex inside a tree: child indices from the root (root = ()).
VertexPath = tuple[int, ...]

_TOKEN_RE = re.compile(r"^(\d+)([+-])$")


def _sign_char(sign: Sign) -> str:
    return "+" if sign > 0 else "-"


def _parse_signed_token(token: str) -> tuple[int, Sign]:
    m = _TOKEN_RE.match(token)
    if m is None:
        raise ValueError(f"bad token {token!r}: expected digits followed by + or -")
    return int(m.group(1)), 1 if m.group(2) == "+" else -1


def _blocks_to_text(blocks: tuple[frozenset[int], ...]) -> str:
    multi = any(e >= 10 for block in blocks for e in block)
    sep = "," if multi else ""
    return "|".join(sep.join(str(e) for e in sorted(block)) for block in blocks)


def _blocks_from_text(text: str) -> tuple[frozenset[int], ...]:
    text = text.strip()
    if not text:
        return ()
    tokens = text.split("|")
    if "," in text:
        return tuple(frozenset(int(e) for e in tok.split(",")) for tok in tokens)
    blocks = tuple(frozenset(int(ch) for ch in tok) for tok in tokens)
    if any(0 in block for block in blocks):
        # Digit-juxtaposed form cannot contain 0; the writer must have meant
        # multi-digit singletons like "10".
        return tuple(frozenset([int(tok)]) for tok in tokens)
    return blocks


@dataclass(frozen=True)
class OrderedPartition:
    """Ordered sequence of disjoint nonempty blocks whose union is [n]."""

    blocks: tuple[frozenset[int], ...]

    def __post_init__(self) -> None:
        seen: set[int] = set()
        total = 0
        for block in self.blocks:
            if not block:
                raise ValueError("ordered partition has an empty block")
            if block & seen:
                raise ValueError("ordered partition has overlapping blocks")
            seen |= block
            total += len(block)
        if seen and seen != set(range(1, total + 1)):
            raise ValueError(f"blocks must partition [n], got union {sorted(seen)}")

    @property
    def n(self) -> int:
        return sum(len(block) for block in self.blocks)

    def to_text(self) -> str:
        return _blocks_to_text(self.blocks)

    @classmethod
    def from_text(cls, text: str) -> "OrderedPartition":
        return cls(_blocks_from_text(text))

    def __str__(self) -> str:
        return self.to_text()


@dataclass(frozen=True)
class SignedPermutation:
    """Permutation of [n] with a sign attached to each value."""

    entries: tuple[tuple[int, Sign], ...]

    def __post_init__(self) -> None:
        values = [v for v, _ in self.entries]
        if sorted(values) != list(range(1, len(values) + 1)):
            raise ValueError(f"values must be a permutation of [n], got {values}")
        if any(s not in (1, -1) for _, s in self.entries):
            raise ValueError("signs must be +1 or -1")

    @property
    def n(self) -> int:
        return len(self.entries)

    @property
    def values(self) -> tuple[int, ...]:
        return tuple(v for v, _ in self.entries)

    def sign_of(self, value: int) -> Sign:
        for v, s in self.entries:
            if v == value:
                return s
        raise KeyError(value)

    def to_text(self) -> str:
        return " ".join(f"{v}{_sign_char(s)}" for v, s in self.entries)

    @classmethod
    def from_text(cls, text: str) -> "SignedPermutation":
        return cls(tuple(_parse_signed_token(t) for t in text.split()))

    def __str__(self) -> str:
        return self.to_text()


@dataclass(frozen=True)
class BuildTreeCode:
    """Sequence of (numeral, sign) pairs recording an incremental build.

    The i-th numeral (1-based) lies in 0..i-1 and the pair (0, -) never
    occurs.
    """

    entries: tuple[tuple[int, Sign], ...]

    def __post_init__(self) -> None:
        for i, (a, s) in enumerate(self.entries, start=1):
            if s not in (1, -1):
                raise ValueError("signs must be +1 or -1")
            if not 0 <= a <= i - 1:
                raise ValueError(f"numeral {a} at position {i} outside 0..{i - 1}")
            if a == 0 and s < 0:
                raise ValueError(f"entry 0- at position {i} is forbidden")

    @property
    def n(self) -> int:
        return len(self.entries)

    def to_text(self) -> str:
        return " ".join(f"{a}{_sign_char(s)}" for a, s in self.entries)

    @classmethod
    def from_text(cls, text: str) -> "BuildTreeCode":
        return cls(tuple(_parse_signed_token(t) for t in text.split()))

    def __str__(self) -> str:
        return self.to_text()


@dataclass(frozen=True)
class PlaneTree:
    """Rooted plane tree; child order is significant."""

    children: tuple["PlaneTree", ...] = ()

    @property
    def size(self) -> int:
        return 1 + sum(c.size for c in self.children)

    def encoding(self) -> str:
        """Balanced-parentheses preorder encoding.

        Two plane trees are structurally equal iff their encodings are equal,
        so this doubles as a canonical deduplication key.
        """
        return "(" + "".join(c.encoding() for c in self.children) + ")"

    @classmethod
    def from_text(cls, text: str) -> "PlaneTree":
        tree, pos = _parse_plane(text, _skip_ws(text, 0))
        if _skip_ws(text, pos) != len(text):
            raise ValueError(f"trailing input after plane tree: {text[pos:]!r}")
        return tree

    def __str__(self) -> str:
        return self.encoding()


def _skip_ws(text: str, pos: int) -> int:
    while pos < len(text) and text[pos].isspace():
        pos += 1
    return pos


def _parse_plane(text: str, pos: int) -> tuple[PlaneTree, int]:
    if pos >= len(text) or text[pos] != "(":
        raise ValueError(f"expected '(' at position {pos} in {text!r}")
    pos += 1
    children = []
    pos = _skip_ws(text, pos)
    while pos < len(text) and text[pos] == "(":
        child, pos = _parse_plane(text, pos)
        children.append(child)
        pos = _skip_ws(text, pos)
    if pos >= len(text) or text[pos] != ")":
        raise ValueError(f"expected ')' at position {pos} in {text!r}")
    return PlaneTree(tuple(children)), pos + 1


@dataclass(frozen=True)
class LabeledTree:
    """Rooted plane tree whose vertices carry an increasing labeling.

    A tree with n+1 vertices is labeled bijectively by 0..n, the root by 0,
    and every child by a larger label than its parent.  Single nodes of this
    class are also used as subtrees, so the global invariants are enforced
    by :meth:`validate`, which parsing and the enumeration code apply to
    whole trees.
    """

    label: int
    children: tuple["LabeledTree", ...] = ()

    @property
    def size(self) -> int:
        return 1 + sum(c.size for c in self.children)

    @property
    def n(self) -> int:
        return self.size - 1

    def validate(self) -> "LabeledTree":
        if self.label != 0:
            raise ValueError(f"root label must be 0, got {self.label}")
        labels = sorted(lbl for _, lbl in self.iter_labels())
        if labels != list(range(self.size)):
            raise ValueError(f"labels must be exactly 0..n, got {labels}")
        stack = [self]
        while stack:
            node = stack.pop()
            for child in node.children:
                if child.label <= node.label:
                    raise ValueError(
                        f"label {child.label} not above parent {node.label}"
                    )
                stack.append(child)
        return self

    def iter_labels(self) -> Iterator[tuple[VertexPath, int]]:
        """Yield (path, label) pairs in preorder."""
        stack: list[tuple[VertexPath, LabeledTree]] = [((), self)]
        while stack:
            path, node = stack.pop()
            yield path, node.label
            for i in range(len(node.children) - 1, -1, -1):
                stack.append((path + (i,), node.children[i]))

    def node_at(self, path: VertexPath) -> "LabeledTree":
        node = self
        for i in path:
            node = node.children[i]
        return node

    def path_of_label(self, label: int) -> VertexPath:
        for path, lbl in self.iter_labels():
            if lbl == label:
                return path
        raise KeyError(label)

    def shape(self) -> PlaneTree:
        return PlaneTree(tuple(c.shape() for c in self.children))

    def to_text(self) -> str:
        inner = " ".join(c.to_text() for c in self.children)
        return f"{self.label}({inner})"

    @classmethod
    def from_text(cls, text: str) -> "LabeledTree":
        tree, pos = _parse_labeled(text, _skip_ws(text, 0))
        if _skip_ws(text, pos) != len(text):
            raise ValueError(f"trailing input after labeled tree: {text[pos:]!r}")
        return tree.validate()

    def __str__(self) -> str:
        return self.to_text()


def _parse_labeled(text: str, pos: int) -> tuple[LabeledTree, int]:
    start = pos
    while pos < len(text) and text[pos].isdigit():
        pos += 1
    if pos == start:
        raise ValueError(f"expected a label at position {pos} in {text!r}")
    label = int(text[start:pos])
    if pos >= len(text) or text[pos] != "(":
        raise ValueError(f"expected '(' after label {label} in {text!r}")
    pos = _skip_ws(text, pos + 1)
    children = []
    while pos < len(text) and text[pos].isdigit():
        child, pos = _parse_labeled(text, pos)
        children.append(child)
        pos = _skip_ws(text, pos)
    if pos >= len(text) or text[pos] != ")":
        raise ValueError(f"expected ')' at position {pos} in {text!r}")
    return LabeledTree(label, tuple(children)), pos + 1


@dataclass(frozen=True)
class Drawing:
    """Growth sequence of plane trees T_0, ..., T_n.

    Construction performs no checking; :func:`validate_drawing` verifies the
    invariants (T_0 is the bare root, each T_i arises from T_{i+1} by
    removing one leaf).
    """

    trees: tuple[PlaneTree, ...]

    @property
    def n(self) -> int:
        return len(self.trees) - 1

    def to_text(self) -> str:
        return ";".join(t.encoding() for t in self.trees)

    @classmethod
    def from_text(cls, text: str) -> "Drawing":
        if not text.strip():
            raise ValueError("empty drawing text")
        return cls(tuple(PlaneTree.from_text(part) for part in text.split(";")))

    def __str__(self) -> str:
        return self.to_text()


# ---------------------------------------------------------------------------
# Predicates on ordered partitions and signed permutations


def ltr_minima_partition(p: OrderedPartition) -> list[tuple[int, int]]:
    """Distinct left-to-right minima of a partition as (value, block index).

    The minimum of the union of the first i blocks is tracked as i grows;
    each time it drops, the new value is recorded with the 1-based index of
    the block where it first appears.
    """
    out: list[tuple[int, int]] = []
    current: Optional[int] = None
    for idx, block in enumerate(p.blocks, start=1):
        m = min(block)
        if current is None or m < current:
            current = m
            out.append((m, idx))
    return out


def all_minima_at_odd_locations(p: OrderedPartition) -> bool:
    return all(idx % 2 == 1 for _, idx in ltr_minima_partition(p))


def ltr_minima_signed(s: SignedPermutation) -> list[tuple[int, int, Sign]]:
    """Distinct left-to-right minima as (value, 1-based position, sign)."""
    out: list[tuple[int, int, Sign]] = []
    current: Optional[int] = None
    for pos, (v, sign) in enumerate(s.entries, start=1):
        if current is None or v < current:
            current = v
            out.append((v, pos, sign))
    return out


def all_minima_positive(s: SignedPermutation) -> bool:
    return all(sign > 0 for _, _, sign in ltr_minima_signed(s))


def has_decreasing_blocks(s: SignedPermutation) -> bool:
    """True iff adjacent same-sign entries strictly decrease."""
    for (v1, s1), (v2, s2) in zip(s.entries, s.entries[1:]):
        if s1 == s2 and v1 <= v2:
            return False
    return True


# ---------------------------------------------------------------------------
# Predicates on build-tree codes


def code_class_after(c: BuildTreeCode) -> bool:
    """True iff every entry v- is followed (not necessarily adjacently) by v+."""
    for i, (a, sign) in enumerate(c.entries):
        if sign < 0 and not any(
            b == a and t > 0 for b, t in c.entries[i + 1:]
        ):
            return False
    return True


def code_class_before(c: BuildTreeCode) -> bool:
    """True iff every entry v- is preceded (not necessarily adjacently) by v+."""
    for i, (a, sign) in enumerate(c.entries):
        if sign < 0 and not any(b == a and t > 0 for b, t in c.entries[:i]):
            return False
    return True


# ---------------------------------------------------------------------------
# Right associates and the Klazar condition


def _right_associate_index(labels: list[int], idx: int) -> Optional[int]:
    """Index of the right associate within a sibling label list, if any.

    Candidates are siblings right of position ``idx`` whose label exceeds
    ``labels[idx]`` and is below every label strictly between; the candidate
    with the smallest label wins.  This coincides with the first vertex ever
    inserted as the immediate right neighbor during the incremental build.
    """
    v = labels[idx]
    best_label: Optional[int] = None
    best_k: Optional[int] = None
    min_between: Optional[int] = None
    for k in range(idx + 1, len(labels)):
        u = labels[k]
        if u > v and (min_between is None or u < min_between):
            if best_label is None or u < best_label:
                best_label, best_k = u, k
        min_between = u if min_between is None else min(min_between, u)
    return best_k


def right_associate(t: LabeledTree, v: VertexPath) -> Optional[VertexPath]:
    """Path of the right associate of the vertex at ``v``, or None."""
    if not v:
        return None
    parent = t.node_at(v[:-1])
    labels = [c.label for c in parent.children]
    k = _right_associate_index(labels, v[-1])
    if k is None:
        return None
    return v[:-1] + (k,)


def is_klazar(t: LabeledTree) -> bool:
    """True iff every vertex with a right associate is internal and the
    associate's label exceeds the smallest child label."""
    stack = [t]
    while stack:
        node = stack.pop()
        labels = [c.label for c in node.children]
        for idx, child in enumerate(node.children):
            k = _right_associate_index(labels, idx)
            if k is not None:
                if not child.children:
                    return False
                if labels[k] < min(gc.label for gc in child.children):
                    return False
        stack.extend(node.children)
    return True


# ---------------------------------------------------------------------------
# Drawings


def leaf_removals(t: PlaneTree) -> list[tuple[VertexPath, PlaneTree]]:
    """All (leaf path, resulting tree) pairs, leaves in preorder.

    The root of a one-vertex tree is not removable (no tree would remain).
    """
    out: list[tuple[VertexPath, PlaneTree]] = []
    for path in _leaf_paths(t):
        out.append((path, _remove_at(t, path)))
    return out


def _leaf_paths(t: PlaneTree) -> Iterator[VertexPath]:
    stack: list[tuple[VertexPath, PlaneTree]] = [((), t)]
    order: list[VertexPath] = []
    while stack:
        path, node = stack.pop()
        if not node.children and path:
            order.append(path)
        for i in range(len(node.children) - 1, -1, -1):
            stack.append((path + (i,), node.children[i]))
    return iter(order)


def _remove_at(t: PlaneTree, path: VertexPath) -> PlaneTree:
    idx = path[0]
    if len(path) == 1:
        return PlaneTree(t.children[:idx] + t.children[idx + 1:])
    replaced = _remove_at(t.children[idx], path[1:])
    return PlaneTree(t.children[:idx] + (replaced,) + t.children[idx + 1:])


def validate_drawing(d: Drawing) -> None:
    """Raise unless ``d`` is a valid growth sequence.

    SizeMismatch fires when the sequence is empty or does not start at the
    bare root; any later defect (including a wrongly sized tree, which no
    single leaf removal can repair) surfaces as NotLeafRemoval on the first
    offending step.
    """
    if not d.trees:
        raise SizeMismatch("drawing has no trees")
    if d.trees[0].size != 1:
        raise SizeMismatch(
            f"first tree has {d.trees[0].size} vertices, expected the bare root"
        )
    for i in range(len(d.trees) - 1):
        want = d.trees[i].encoding()
        if not any(
            result.encoding() == want for _, result in leaf_removals(d.trees[i + 1])
        ):
            raise NotLeafRemoval(
                f"no leaf removal of tree {i + 1} yields tree {i} ({want})"
            )
