"""Bijections between the object families, each with its inverse.

The chain of constrained families

    odd-minima partitions <-> decreasing-block signed permutations
                          <-> codes with v+ after each v-
                          <-> codes with v+ before each v-
                          <-> Klazar trees
                          <-> drawings

is realized by composable atomic maps; :func:`convert` routes any object to
any family through the code classes as the hub representation.  The signed
permutation and tree maps are defined on the unconstrained supersets and
restrict to the families above.
"""

from __future__ import annotations

import copy
from enum import Enum
from typing import Optional, Union

from .errors import NotInClass, NotInImage, SignPatternInvalid
from .objects import (
    BuildTreeCode,
    Drawing,
    LabeledTree,
    OrderedPartition,
    PlaneTree,
    Sign,
    SignedPermutation,
    all_minima_at_odd_locations,
    all_minima_positive,
    code_class_after,
    code_class_before,
    has_decreasing_blocks,
    is_klazar,
    leaf_removals,
    validate_drawing,
)


def partition_to_signed(p: OrderedPartition) -> SignedPermutation:
    """Write each block in decreasing order, concatenate, alternate signs.

    Elements of the i-th block carry sign (-1)^(i-1), so the output always
    has decreasing blocks and starts positive.
    """
    entries: list[tuple[int, Sign]] = []
    for idx, block in enumerate(p.blocks):
        sign: Sign = 1 if idx % 2 == 0 else -1
        entries.extend((v, sign) for v in sorted(block, reverse=True))
    return SignedPermutation(tuple(entries))


def signed_to_partition(
    s: SignedPermutation, strict: bool = False
) -> OrderedPartition:
    """Group maximal runs of equal sign into blocks, in order.

    With ``strict=True`` the input must start with a positive entry (the
    image of :func:`partition_to_signed` always does).
    """
    if strict and s.entries and s.entries[0][1] < 0:
        raise SignPatternInvalid("first entry is negative")
    blocks: list[frozenset[int]] = []
    run: list[int] = []
    run_sign: Optional[Sign] = None
    for v, sign in s.entries:
        if sign != run_sign and run:
            blocks.append(frozenset(run))
            run = []
        run.append(v)
        run_sign = sign
    if run:
        blocks.append(frozenset(run))
    return OrderedPartition(tuple(blocks))


def code_to_signed(c: BuildTreeCode) -> SignedPermutation:
    """Replay a code as insertions into a signed permutation.

    Step i reads entry (a_i, sigma_i): 0+ prepends i with positive sign;
    j+ inserts i right after j with the sign opposite to j's; j- inserts i
    right after j with j's sign.  Every left-to-right minimum of the result
    is positive (new minima only arise from 0+ steps).
    """
    seq: list[tuple[int, Sign]] = []
    for i, (a, sign) in enumerate(c.entries, start=1):
        if a == 0:
            seq.insert(0, (i, 1))
        else:
            pos = next(k for k, (v, _) in enumerate(seq) if v == a)
            neighbor_sign = seq[pos][1]
            new_sign: Sign = neighbor_sign if sign < 0 else -neighbor_sign
            seq.insert(pos + 1, (i, new_sign))
    return SignedPermutation(tuple(seq))


def signed_to_code(s: SignedPermutation) -> BuildTreeCode:
    """Invert :func:`code_to_signed` by deleting n, n-1, ..., 1 in turn.

    When i is deleted, its entry is 0+ if i stands first; otherwise j- or
    j+ with j the immediate left neighbor, minus when their signs agree.
    Inputs with a negative left-to-right minimum are outside the image.
    """
    if not all_minima_positive(s):
        raise NotInImage("a left-to-right minimum has negative sign")
    seq = list(s.entries)
    out: list[tuple[int, Sign]] = [(0, 1)] * s.n
    for i in range(s.n, 0, -1):
        pos = next(k for k, (v, _) in enumerate(seq) if v == i)
        if pos > 0:
            j, j_sign = seq[pos - 1]
            out[i - 1] = (j, -1) if seq[pos][1] == j_sign else (j, 1)
        del seq[pos]
    return BuildTreeCode(tuple(out))


def code_to_tree(c: BuildTreeCode) -> LabeledTree:
    """Replay a code as leaf insertions into an increasingly labeled tree.

    Step i: 0+ adds i as the leftmost child of the root; j+ as the leftmost
    child of vertex j; j- as the immediate right neighbor of vertex j.
    """
    children: dict[int, list[int]] = {0: []}
    parent: dict[int, int] = {}
    for i, (a, sign) in enumerate(c.entries, start=1):
        children[i] = []
        if sign > 0:
            children[a].insert(0, i)
            parent[i] = a
        else:
            p = parent[a]
            sibs = children[p]
            sibs.insert(sibs.index(a) + 1, i)
            parent[i] = p

    def build(label: int) -> LabeledTree:
        return LabeledTree(label, tuple(build(ch) for ch in children[label]))

    return build(0)


def tree_to_code(t: LabeledTree) -> BuildTreeCode:
    """Invert :func:`code_to_tree`.

    Entry i is read off the subtree induced by labels <= i: if vertex i is
    then the leftmost child of its parent p, the entry is p+; otherwise it
    is j- with j the nearest left sibling of smaller label.
    """
    out: list[tuple[int, Sign]] = [(0, 1)] * t.n
    stack = [t]
    while stack:
        node = stack.pop()
        labels = [c.label for c in node.children]
        for idx, child in enumerate(node.children):
            smaller_left = [l for l in labels[:idx] if l < child.label]
            if smaller_left:
                out[child.label - 1] = (smaller_left[-1], -1)
            else:
                out[child.label - 1] = (node.label, 1)
            stack.append(child)
    return BuildTreeCode(tuple(out))


def reverse_signs(c: BuildTreeCode) -> BuildTreeCode:
    """Reverse the order of the signs over each fixed numeral (an involution).

    Restricted to the constrained classes, this swaps codes with v+ after
    each v- and codes with v+ before each v-.
    """
    by_numeral: dict[int, list[int]] = {}
    for idx, (a, _) in enumerate(c.entries):
        by_numeral.setdefault(a, []).append(idx)
    out = list(c.entries)
    for a, idxs in by_numeral.items():
        signs = [c.entries[i][1] for i in idxs]
        for i, sign in zip(idxs, reversed(signs)):
            out[i] = (a, sign)
    return BuildTreeCode(tuple(out))


def tree_to_drawing(t: LabeledTree) -> Drawing:
    """Shapes of the subtrees induced by labels <= i, for i = 0..n."""

    def prefix_shape(node: LabeledTree, i: int) -> PlaneTree:
        return PlaneTree(
            tuple(prefix_shape(c, i) for c in node.children if c.label <= i)
        )

    return Drawing(tuple(prefix_shape(t, i) for i in range(t.size)))


def drawing_to_tree(d: Drawing) -> LabeledTree:
    """Reconstruct the unique Klazar labeling that produces a drawing.

    Working from the last tree down, label n is assigned to the leftmost
    (first in preorder) leaf whose removal yields the previous shape, that
    leaf is removed, and so on; the root receives 0.
    """
    validate_drawing(d)
    n = len(d.trees) - 1

    counter = [0]

    def mirror(pt: PlaneTree) -> list:
        vid = counter[0]
        counter[0] += 1
        return [vid, [mirror(c) for c in pt.children]]

    full = mirror(d.trees[n])
    work = copy.deepcopy(full)
    labels: dict[int, int] = {}

    def enc(node: list) -> str:
        return "(" + "".join(enc(c) for c in node[1]) + ")"

    def leaves(node: list, acc: list) -> None:
        for idx, child in enumerate(node[1]):
            if not child[1]:
                acc.append((node, idx))
            else:
                leaves(child, acc)

    for i in range(n, 0, -1):
        target = d.trees[i - 1].encoding()
        found: list[tuple[list, int]] = []
        leaves(work, found)
        for parent, idx in found:
            child = parent[1].pop(idx)
            if enc(work) == target:
                labels[child[0]] = i
                break
            parent[1].insert(idx, child)
        else:  # pragma: no cover - validate_drawing guarantees a match
            raise AssertionError("validated drawing lost its removable leaf")
    labels[full[0]] = 0

    def build(node: list) -> LabeledTree:
        return LabeledTree(labels[node[0]], tuple(build(c) for c in node[1]))

    return build(full)


# ---------------------------------------------------------------------------
# Generic conversion through the code hub


class ClassId(Enum):
    """The six object families of the bijection chain."""

    ORDERED_PARTITION = "ordered-partition"
    SIGNED_PERM = "signed-perm"
    CODE_AFTER = "code-after"
    CODE_BEFORE = "code-before"
    KLAZAR_TREE = "klazar-tree"
    DRAWING = "drawing"


ClassObject = Union[
    OrderedPartition, SignedPermutation, BuildTreeCode, LabeledTree, Drawing
]

_DEFAULT_CLASS = {
    OrderedPartition: ClassId.ORDERED_PARTITION,
    SignedPermutation: ClassId.SIGNED_PERM,
    BuildTreeCode: ClassId.CODE_AFTER,
    LabeledTree: ClassId.KLAZAR_TREE,
    Drawing: ClassId.DRAWING,
}

_EXPECTED_TYPE = {
    ClassId.ORDERED_PARTITION: OrderedPartition,
    ClassId.SIGNED_PERM: SignedPermutation,
    ClassId.CODE_AFTER: BuildTreeCode,
    ClassId.CODE_BEFORE: BuildTreeCode,
    ClassId.KLAZAR_TREE: LabeledTree,
    ClassId.DRAWING: Drawing,
}


def in_class(x: ClassObject, cls: ClassId) -> bool:
    """Membership test for a family, including the class-specific predicate."""
    if not isinstance(x, _EXPECTED_TYPE[cls]):
        return False
    if cls is ClassId.ORDERED_PARTITION:
        return all_minima_at_odd_locations(x)
    if cls is ClassId.SIGNED_PERM:
        return has_decreasing_blocks(x) and all_minima_positive(x)
    if cls is ClassId.CODE_AFTER:
        return code_class_after(x)
    if cls is ClassId.CODE_BEFORE:
        return code_class_before(x)
    if cls is ClassId.KLAZAR_TREE:
        try:
            x.validate()
        except ValueError:
            return False
        return is_klazar(x)
    try:
        validate_drawing(x)
    except ValueError:
        return False
    return True


def _to_hub(x: ClassObject, source: ClassId) -> BuildTreeCode:
    if source is ClassId.ORDERED_PARTITION:
        return signed_to_code(partition_to_signed(x))
    if source is ClassId.SIGNED_PERM:
        return signed_to_code(x)
    if source is ClassId.CODE_AFTER:
        return x
    if source is ClassId.CODE_BEFORE:
        return reverse_signs(x)
    if source is ClassId.KLAZAR_TREE:
        return reverse_signs(tree_to_code(x))
    return reverse_signs(tree_to_code(drawing_to_tree(x)))


def _from_hub(code: BuildTreeCode, target: ClassId) -> ClassObject:
    if target is ClassId.ORDERED_PARTITION:
        return signed_to_partition(code_to_signed(code), strict=True)
    if target is ClassId.SIGNED_PERM:
        return code_to_signed(code)
    if target is ClassId.CODE_AFTER:
        return code
    if target is ClassId.CODE_BEFORE:
        return reverse_signs(code)
    if target is ClassId.KLAZAR_TREE:
        return code_to_tree(reverse_signs(code))
    return tree_to_drawing(code_to_tree(reverse_signs(code)))


def convert(
    x: ClassObject, target: ClassId, source: Optional[ClassId] = None
) -> ClassObject:
    """Route an object to the requested family along the bijection chain.

    ``source`` defaults to the family matching the object's type; codes
    default to the v+-after class.  Objects failing their source predicate
    are rejected rather than coerced.
    """
    if source is None:
        try:
            source = _DEFAULT_CLASS[type(x)]
        except KeyError:
            raise NotInClass(f"{type(x).__name__} is not a convertible object")
    if not in_class(x, source):
        raise NotInClass(f"{x!r} is not in class {source.value}")
    if source is target:
        return x
    return _from_hub(_to_hub(x, source), target)
