"""Structured vertex labels.

Three kinds of vertex appear in every construction: vertices of the source
graph, internal vertices of a subdivided edge, and apex vertices.  Labels
carry that provenance so certificates can be read back without guessing.

All labels share one deterministic total order (see :func:`sort_key`) and a
compact text form used in JSON and DOT output::

    v7              Original(7)
    a2              Apex(2)
    s(v0,v5,3)      Subdiv((Original(0), Original(5)), 3)
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Tuple, Union


@dataclass(frozen=True)
class Original:
    id: int

    def __str__(self) -> str:
        return f"v{self.id}"


@dataclass(frozen=True)
class Subdiv:
    # the source edge is ordered: index 1 is adjacent to edge[0]
    edge: Tuple["Label", "Label"]
    index: int

    def __str__(self) -> str:
        return f"s({self.edge[0]},{self.edge[1]},{self.index})"


@dataclass(frozen=True)
class Apex:
    i: int

    def __str__(self) -> str:
        return f"a{self.i}"


Label = Union[Original, Subdiv, Apex]


def sort_key(label: Label) -> tuple:
    if isinstance(label, Original):
        return (0, label.id)
    if isinstance(label, Subdiv):
        return (1, sort_key(label.edge[0]), sort_key(label.edge[1]), label.index)
    if isinstance(label, Apex):
        return (2, label.i)
    raise TypeError(f"not a vertex label: {label!r}")


def sorted_labels(labels) -> list:
    return sorted(labels, key=sort_key)


def parse_label(text: str) -> Label:
    label, pos = _parse(text.strip(), 0)
    if pos != len(text.strip()):
        raise ValueError(f"trailing characters in label {text!r}")
    return label


def _parse_int(text: str, pos: int) -> tuple[int, int]:
    end = pos
    while end < len(text) and text[end].isdigit():
        end += 1
    if end == pos:
        raise ValueError(f"expected integer at offset {pos} in {text!r}")
    return int(text[pos:end]), end


def _parse(text: str, pos: int) -> tuple[Label, int]:
    if pos >= len(text):
        raise ValueError(f"unexpected end of label {text!r}")
    head = text[pos]
    if head == "v":
        value, pos = _parse_int(text, pos + 1)
        return Original(value), pos
    if head == "a":
        value, pos = _parse_int(text, pos + 1)
        return Apex(value), pos
    if head == "s" and text.startswith("s(", pos):
        u, pos = _parse(text, pos + 2)
        pos = _expect(text, pos, ",")
        v, pos = _parse(text, pos)
        pos = _expect(text, pos, ",")
        index, pos = _parse_int(text, pos)
        pos = _expect(text, pos, ")")
        return Subdiv((u, v), index), pos
    raise ValueError(f"cannot parse label {text!r} at offset {pos}")


def _expect(text: str, pos: int, char: str) -> int:
    if pos >= len(text) or text[pos] != char:
        raise ValueError(f"expected {char!r} at offset {pos} in {text!r}")
    return pos + 1
