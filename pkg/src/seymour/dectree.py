"""Decomposition trees: complete homogeneous construction, validation,
recomposition, and leaf extraction.

A tree node stores (code, perm, sum).  Leaves carry no permutation and
the marker sum "leaf"; at a non-leaf the stored permutation applied to
(left.code SUM right.code) reproduces the node's code, and both children
are equivalent to proper minors of it.

The builder peels separations in a fixed order: any 1-separation gives a
direct-sum node; otherwise any exact 2-separation gives a 2-sum node;
otherwise any exact non-minimal 3-separation gives a 3-sum or 3-bar-sum
node depending on the requested homogeneity mode; otherwise the code is
3-connected and internally 4-connected and becomes a leaf.  The
deterministic separation witness makes the whole tree reproducible.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Callable, Iterable, Literal, Sequence

from .codes import LinearCode, direct_sum
from .connectivity import DEFAULT_SEARCH_BOUND, find_k_separation
from .errors import ContractError
from .sums import SumKind, compose, decompose_three_bar_sum, decompose_three_sum, decompose_two_sum

Mode = Literal["three_homogeneous", "three_bar_homogeneous"]

_LEAF = "leaf"
_SUM_TAGS = {_LEAF, "direct", "2sum", "3sum", "3barsum"}


@dataclass(frozen=True)
class DecompNode:
    """One node of a code-decomposition tree."""

    code: LinearCode
    perm: tuple[int, ...] | None
    sum: str
    left: "DecompNode | None" = None
    right: "DecompNode | None" = None

    def __post_init__(self) -> None:
        if self.sum not in _SUM_TAGS:
            raise ContractError(f"unknown sum tag {self.sum!r}")

    @property
    def is_leaf(self) -> bool:
        return self.left is None and self.right is None


def build_complete_tree(
    c: LinearCode,
    mode: Mode = "three_bar_homogeneous",
    bound: int = DEFAULT_SEARCH_BOUND,
) -> DecompNode:
    """Build a complete decomposition tree with every leaf 3-connected and
    internally 4-connected, using only the 3-sum variant selected by
    ``mode``."""
    if mode not in ("three_homogeneous", "three_bar_homogeneous"):
        raise ContractError(f"unknown mode {mode!r}")

    one_sep = find_k_separation(c, 1, 1, bound=bound) if c.n >= 2 else None
    if one_sep is not None:
        j = list(one_sep.J)
        jc = [x for x in range(1, c.n + 1) if x not in set(j)]
        c1 = c.restrict(j)
        c2 = c.restrict(jc)
        pi = tuple(j + jc)
        assert direct_sum(c1, c2).permute(pi) == c
        return DecompNode(
            c,
            pi,
            "direct",
            build_complete_tree(c1, mode, bound),
            build_complete_tree(c2, mode, bound),
        )

    two_sep = find_k_separation(c, 2, 2, bound=bound) if c.n >= 4 else None
    if two_sep is not None:
        # no 1-separation exists, so any 2-separation here is exact
        result = decompose_two_sum(c, two_sep.J)
        return DecompNode(
            c,
            result.pi,
            result.kind.value,
            build_complete_tree(result.c1, mode, bound),
            build_complete_tree(result.c2, mode, bound),
        )

    three_sep = find_k_separation(c, 3, 4, bound=bound) if c.n >= 8 else None
    if three_sep is not None:
        # the code is 3-connected here, so the separation is exact
        if mode == "three_homogeneous":
            result = decompose_three_sum(c, three_sep.J)
        else:
            result = decompose_three_bar_sum(c, three_sep.J)
        return DecompNode(
            c,
            result.pi,
            result.kind.value,
            build_complete_tree(result.c1, mode, bound),
            build_complete_tree(result.c2, mode, bound),
        )

    return DecompNode(c, None, _LEAF)


def validate(
    t: DecompNode, minor_check_bound: int = 14
) -> tuple[bool, list[str]]:
    """Check the tree rules; violations come back as messages, not errors.

    Rule coverage: perm exactly on non-leaves, the leaf marker exactly on
    leaves, recomposition at every non-leaf, and (within the search bound)
    children being equivalent to proper minors of their parent.
    """
    from .classify import has_minor  # local import to avoid a cycle

    violations: list[str] = []

    def walk(node: DecompNode, path: str) -> None:
        leafish = node.is_leaf
        if (node.left is None) != (node.right is None):
            violations.append(f"{path}: exactly one child present")
        if (node.perm is None) != leafish:
            violations.append(f"{path}: perm must be absent exactly on leaves (R2)")
        if (node.sum == _LEAF) != leafish:
            violations.append(f"{path}: sum tag 'leaf' must mark exactly the leaves (R3)")
        if leafish:
            return
        assert node.left is not None and node.right is not None
        try:
            kind = SumKind(node.sum)
            recomposed = compose(node.left.code, kind, node.right.code)
            if node.perm is None or recomposed.permute(node.perm) != node.code:
                violations.append(f"{path}: permuted sum of children differs from node code (R4-ii)")
        except (ContractError, ValueError) as exc:
            violations.append(f"{path}: children cannot be composed: {exc} (R4-ii)")
        for label, child in (("left", node.left), ("right", node.right)):
            if child.code.n >= node.code.n:
                violations.append(f"{path}.{label}: child is not a proper minor (R4-i)")
            elif node.code.n <= minor_check_bound:
                if has_minor(node.code, child.code) is None:
                    violations.append(
                        f"{path}.{label}: child is not equivalent to a minor of the node code (R4-i)"
                    )
            walk(child, f"{path}.{label}")

    walk(t, "root")
    return not violations, violations


def recompose(t: DecompNode) -> LinearCode:
    """Recombine the tree bottom-up, asserting every node's stored code."""

    def walk(node: DecompNode) -> LinearCode:
        if node.is_leaf:
            return node.code
        assert node.left is not None and node.right is not None
        left = walk(node.left)
        right = walk(node.right)
        combined = compose(left, SumKind(node.sum), right)
        if node.perm is None:
            raise ContractError("non-leaf node without permutation")
        result = combined.permute(node.perm)
        if result != node.code:
            raise ContractError("recomposition mismatch at an inner node")
        return result

    return walk(t)


def leaves(t: DecompNode) -> list[LinearCode]:
    """Leaf codes in left-to-right order."""
    if t.is_leaf:
        return [t.code]
    assert t.left is not None and t.right is not None
    return leaves(t.left) + leaves(t.right)


def iter_nodes(t: DecompNode) -> Iterable[DecompNode]:
    yield t
    if not t.is_leaf:
        assert t.left is not None and t.right is not None
        yield from iter_nodes(t.left)
        yield from iter_nodes(t.right)


def is_unary(
    t: DecompNode,
    catalog: Sequence[LinearCode],
    is_graphic: Callable[[LinearCode], bool] | None = None,
) -> bool:
    """True when every non-leaf's left child is a leaf that is graphic or
    equivalent to a catalog code.

    Graphicness defaults to a realization search from the graphs module;
    pass ``is_graphic`` to substitute (e.g. the excluded-minor test).
    """
    from .classify import equivalent
    from .graphs import realize_graph

    if is_graphic is None:
        is_graphic = lambda code: realize_graph(code) is not None  # noqa: E731

    def member(code: LinearCode) -> bool:
        if any(equivalent(code, d) is not None for d in catalog):
            return True
        return is_graphic(code)

    for node in iter_nodes(t):
        if node.is_leaf:
            continue
        assert node.left is not None
        if not node.left.is_leaf or not member(node.left.code):
            return False
    return True


# -- JSON serialization ----------------------------------------------------


def tree_to_dict(t: DecompNode) -> dict:
    doc: dict = {"sum": t.sum, "code": t.code.gen.to_strings(), "n": t.code.n}
    if not t.is_leaf:
        assert t.left is not None and t.right is not None and t.perm is not None
        doc["perm"] = list(t.perm)
        doc["children"] = [tree_to_dict(t.left), tree_to_dict(t.right)]
    return doc


def tree_from_dict(doc: dict) -> DecompNode:
    n = int(doc["n"])
    rows = [r for r in doc["code"]]
    code = (
        LinearCode.from_strings(rows)
        if rows
        else LinearCode.from_generator([], n)
    )
    if code.n != n:
        raise ContractError("tree code rows do not match declared length")
    if doc["sum"] == _LEAF:
        return DecompNode(code, None, _LEAF)
    children = doc.get("children")
    if not children or len(children) != 2:
        raise ContractError("non-leaf tree node needs exactly two children")
    return DecompNode(
        code,
        tuple(int(x) for x in doc["perm"]),
        doc["sum"],
        tree_from_dict(children[0]),
        tree_from_dict(children[1]),
    )


def tree_to_json(t: DecompNode, indent: int | None = 2) -> str:
    return json.dumps(tree_to_dict(t), indent=indent, sort_keys=True)


def tree_from_json(text: str) -> DecompNode:
    return tree_from_dict(json.loads(text))
