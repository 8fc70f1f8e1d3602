"""
Text and JSON codecs for paths, trees, profiles and degree multisets.

Formats
-------
- Path text : tokens "D" / "U<k>" separated by single spaces, e.g. "U1 U0 D D".
- Path JSON : array of integers, -1 for D and k >= 0 for U_k.
- Tree text : leaf "()", internal node "(" + children joined by spaces + ")".
- Tree JSON : leaf [], internal node = array of child trees.
- Multiset  : comma-separated "k:mult" pairs sorted by k ("" is empty).
- Profile   : comma-separated degrees ("" is the empty profile).

Parsers accept either encoding of a path or tree and raise FormatError
(TokenError for bad path tokens) on malformed input; path invariants are
checked by `validator.validate_steps`.
"""

from __future__ import annotations

import json
import re
from typing import Any, Dict, List, Optional, Tuple, Union

from ..dto import DegreeMultiset, LukasPath, PlaneTree, Profile, Step
from ..errors import FormatError, TokenError
from .validator import validate_steps

_UP_TOKEN_RE = re.compile(r"U([0-9]+)")
_MULTISET_PAIR_RE = re.compile(r"([0-9]+):([0-9]+)")
_DECIMAL_RE = re.compile(r"[0-9]+")

JsonTree = List[Any]


# --- Paths -------------------------------------------------------------------


def parse_path(text: str) -> LukasPath:
    """Parse a path from its token or JSON encoding and validate it."""
    stripped = text.strip()
    if stripped.startswith("["):
        return validate_steps(_steps_from_json(stripped))
    return validate_steps(_step_from_token(tok, pos) for pos, tok in enumerate(stripped.split(), start=1))


def format_path(path: LukasPath) -> str:
    return str(path)


def path_to_json(path: LukasPath) -> List[int]:
    return list(path.degrees)


def _step_from_token(token: str, position: int) -> Step:
    if token == "D":
        return Step.down()
    m = _UP_TOKEN_RE.fullmatch(token)
    if m is None:
        raise TokenError(token, position)
    return Step.up(int(m.group(1)))


def _load_json(text: str, what: str) -> Any:
    try:
        return json.loads(text)
    except json.JSONDecodeError as e:
        raise FormatError(f"{what} JSON is not valid JSON: {e.msg}") from e
    except RecursionError as e:
        raise FormatError(f"{what} JSON is nested too deeply") from e


def _steps_from_json(text: str) -> List[Step]:
    raw = _load_json(text, "path")
    if not isinstance(raw, list):
        raise FormatError("path JSON must be an array of integers")

    steps: List[Step] = []
    for pos, value in enumerate(raw, start=1):
        # bool is an int subclass; reject it explicitly
        if isinstance(value, bool) or not isinstance(value, int) or value < -1:
            raise TokenError(json.dumps(value), pos)
        steps.append(Step(value))
    return steps


# --- Trees -------------------------------------------------------------------


def parse_tree(text: str) -> PlaneTree:
    """Parse a plane tree from its parenthesis or JSON encoding."""
    stripped = text.strip()
    if stripped.startswith("["):
        return tree_from_json(_load_json(stripped, "tree"))
    return _parse_tree_text(stripped)


def _parse_tree_text(text: str) -> PlaneTree:
    stack: List[List[PlaneTree]] = []
    root: Optional[PlaneTree] = None
    for pos, ch in enumerate(text):
        if ch.isspace():
            continue
        if root is not None:
            raise FormatError(f"trailing input after tree at offset {pos}")
        if ch == "(":
            stack.append([])
        elif ch == ")":
            if not stack:
                raise FormatError(f"unbalanced ')' at offset {pos}")
            node = PlaneTree(tuple(stack.pop()))
            if stack:
                stack[-1].append(node)
            else:
                root = node
        else:
            raise FormatError(f"unexpected character {ch!r} at offset {pos}")
    if stack or root is None:
        raise FormatError("unbalanced or empty tree text")
    return root


def tree_from_json(raw: Any) -> PlaneTree:
    if not isinstance(raw, list):
        raise FormatError("tree JSON nodes must be arrays")
    # post-order over (array, expanded); finished subtrees collect on `built`
    built: List[PlaneTree] = []
    work: List[Tuple[List[Any], bool]] = [(raw, False)]
    while work:
        node, expanded = work.pop()
        if expanded:
            arity = len(node)
            kids = tuple(built[len(built) - arity :])
            del built[len(built) - arity :]
            built.append(PlaneTree(kids))
            continue
        work.append((node, True))
        for child in reversed(node):
            if not isinstance(child, list):
                raise FormatError("tree JSON nodes must be arrays")
            work.append((child, False))
    return built[0]


def tree_to_json(tree: PlaneTree) -> JsonTree:
    root: JsonTree = []
    stack: List[Tuple[PlaneTree, JsonTree]] = [(tree, root)]
    while stack:
        node, out = stack.pop()
        for child in node.children:
            slot: JsonTree = []
            out.append(slot)
            stack.append((child, slot))
    return root


def _render_tree(tree: PlaneTree, opening: str, closing: str, separator: str) -> str:
    out: List[str] = []
    stack: List[Union[PlaneTree, str]] = [tree]
    while stack:
        item = stack.pop()
        if isinstance(item, str):
            out.append(item)
            continue
        out.append(opening)
        stack.append(closing)
        for idx in range(len(item.children) - 1, -1, -1):
            stack.append(item.children[idx])
            if idx > 0:
                stack.append(separator)
    return "".join(out)


def format_tree(tree: PlaneTree) -> str:
    """Parenthesis encoding; iterative so deep trees do not hit the recursion limit."""
    return _render_tree(tree, "(", ")", " ")


def dump_tree_json(tree: PlaneTree) -> str:
    """Same text as json.dumps(tree_to_json(tree)), without the encoder's nesting limit."""
    return _render_tree(tree, "[", "]", ", ")


# --- Multisets and profiles --------------------------------------------------


def parse_multiset(text: str) -> DegreeMultiset:
    stripped = text.strip()
    if not stripped:
        return DegreeMultiset()

    counts: Dict[int, int] = {}
    for chunk in stripped.split(","):
        m = _MULTISET_PAIR_RE.fullmatch(chunk.strip())
        if m is None:
            raise FormatError(f"multiset entry {chunk!r} is not of the form k:mult")
        k, mult = int(m.group(1)), int(m.group(2))
        if mult == 0:
            raise FormatError(f"multiset entry {chunk!r} has zero multiplicity")
        if k in counts:
            raise FormatError(f"degree {k} listed twice in multiset")
        counts[k] = mult
    return DegreeMultiset.from_mapping(counts)


def format_multiset(multiset: DegreeMultiset) -> str:
    return str(multiset)


def parse_profile(text: str) -> Profile:
    stripped = text.strip()
    if not stripped:
        return ()
    degrees = []
    for chunk in stripped.split(","):
        chunk = chunk.strip()
        if _DECIMAL_RE.fullmatch(chunk) is None:
            raise FormatError(f"profile entry {chunk!r} is not a nonnegative integer")
        degrees.append(int(chunk))
    return tuple(degrees)
