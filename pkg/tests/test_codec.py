from __future__ import annotations

import json

import pytest
from hypothesis import given

from lukas_qt.dto import DegreeMultiset, PlaneTree
from lukas_qt.errors import FormatError, InvalidPath, LukasError, TokenError
from lukas_qt.intake import codec
from lukas_qt.intake.codec import (
    dump_tree_json,
    format_multiset,
    format_path,
    format_tree,
    parse_multiset,
    parse_path,
    parse_profile,
    parse_tree,
    path_to_json,
    tree_from_json,
    tree_to_json,
)
from lukas_qt.trees.structure import node_count

from .strategies import paths, trees


def test_token_and_json_encodings_agree():
    assert parse_path("U1 U0 D D") == parse_path("[1, 0, -1, -1]")
    assert path_to_json(parse_path("U1 U0 D D")) == [1, 0, -1, -1]
    assert format_path(parse_path("  U1   D D ")) == "U1 D D"


@pytest.mark.parametrize(
    "text, token, position",
    [
        ("U1 X D", "X", 2),
        ("U-1 D", "U-1", 1),
        ("u1 D D", "u1", 1),
        ("[1, -2, -1]", "-2", 2),
        ("[1, true, -1]", "true", 2),
        ('[1, "D", -1]', '"D"', 2),
    ],
)
def test_bad_tokens(text, token, position):
    with pytest.raises(TokenError) as info:
        parse_path(text)
    assert info.value.token == token
    assert info.value.position == position


@pytest.mark.parametrize("text", ["U1 D D D", "U1 D", "", "U0"])
def test_invalid_paths(text):
    with pytest.raises(InvalidPath):
        parse_path(text)


def test_errors_share_a_base():
    for exc in (FormatError, TokenError, InvalidPath):
        assert issubclass(exc, LukasError)
    assert issubclass(LukasError, ValueError)


@given(paths)
def test_path_text_is_stable(path):
    assert parse_path(format_path(path)) == path


# --- trees --------------------------------------------------------------------


def test_tree_text():
    tree = parse_tree("((()) ())")
    assert tree.degree == 2
    assert tree.children[0].degree == 1
    assert tree.children[1].is_leaf
    assert format_tree(tree) == "((()) ())"
    assert str(tree) == "((()) ())"
    assert format_tree(parse_tree("( ( ) ( ( ) ) )")) == "(() (()))"


def test_tree_json():
    tree = parse_tree("((()) ())")
    assert tree_to_json(tree) == [[[]], []]
    assert parse_tree("[[[]], []]") == tree
    assert tree_from_json([]) == PlaneTree()


@pytest.mark.parametrize("text", ["", "(", ")", "(()", "(()))", "() ()", "(x)", "[[], 1]", "[[]"])
def test_malformed_trees(text):
    with pytest.raises(FormatError):
        parse_tree(text)


@given(trees)
def test_tree_text_is_stable(tree):
    assert parse_tree(format_tree(tree)) == tree
    assert tree_from_json(tree_to_json(tree)) == tree


def test_deep_tree_text_does_not_recurse():
    text = "(" * 5000 + ")" * 5000
    tree = parse_tree(text)
    assert format_tree(tree) == text


# --- multisets and profiles ---------------------------------------------------


def test_multiset_text():
    assert parse_multiset("") == DegreeMultiset()
    assert parse_multiset("1:3") == DegreeMultiset.of([1, 1, 1])
    assert parse_multiset("1:2, 0:1") == DegreeMultiset.from_mapping({0: 1, 1: 2})
    assert format_multiset(DegreeMultiset.of([1, 0, 1])) == "0:1,1:2"


@pytest.mark.parametrize("text", ["1", "1:0", "a:1", "1:2,1:1", "-1:1", "1:2,"])
def test_malformed_multisets(text):
    with pytest.raises(FormatError):
        parse_multiset(text)


def test_profile_text():
    assert parse_profile("") == ()
    assert parse_profile("1, 0,2") == (1, 0, 2)
    with pytest.raises(FormatError):
        parse_profile("1,-1")


def test_deep_tree_json_is_built_without_recursion():
    raw: list = []
    for _ in range(5000):
        raw = [raw]
    tree = tree_from_json(raw)
    assert node_count(tree) == 5001
    assert dump_tree_json(tree) == "[" * 5001 + "]" * 5001
    assert format_tree(tree) == "(" * 5001 + ")" * 5001


def test_json_nesting_beyond_the_decoder_is_a_format_error(monkeypatch):
    def too_deep(text):
        raise RecursionError("maximum recursion depth exceeded")

    monkeypatch.setattr(codec.json, "loads", too_deep)
    with pytest.raises(FormatError):
        parse_tree("[[[]]]")
    with pytest.raises(FormatError):
        parse_path("[0, -1]")


def test_dump_tree_json_matches_json_module():
    tree = parse_tree("((()) () (() ()))")
    assert dump_tree_json(tree) == json.dumps(tree_to_json(tree))


@pytest.mark.parametrize(
    "parser, text",
    [
        (parse_profile, "²"),
        (parse_profile, "1,١"),
        (parse_multiset, "١:1"),
        (parse_multiset, "1:٢"),
    ],
)
def test_only_ascii_digits_are_decimal(parser, text):
    with pytest.raises(FormatError):
        parser(text)


def test_up_token_needs_ascii_digits():
    with pytest.raises(TokenError):
        parse_path("U١ D D")
