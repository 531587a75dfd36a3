"""Frame inventory: frames, their evoking lexical units, and inter-frame relations.

The inventory is read from the line-oriented FIV1 format (tab-separated,
UTF-8, ``#`` comments):

    F<TAB>name                  declares a frame
    L<TAB>lemma<TAB>pos         attaches a lexical unit to the most recent frame
    R<TAB>from<TAB>type<TAB>to  declares a relation between two known frames

All F/L blocks come first, then R lines.  Frame names are case-normalized to
lowercase with underscores at load time; lemmas and pos tags are lowercased.
The relation graph doubles as a proxy for conceptual-domain structure: frames
connected by any relation, in either direction, count as neighbors.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from typing import IO, Iterable

from .errors import FormatError, IntegrityError, UnknownFrameError

_WS = re.compile(r"\s+")


def normalize_frame_name(name: str) -> str:
    """Lowercase a frame name and replace whitespace runs with underscores."""
    return _WS.sub("_", name.strip().lower())


@dataclass
class Frame:
    """A frame plus the (lemma, pos) lexical units that evoke it."""

    name: str
    lexical_units: set[tuple[str, str]] = field(default_factory=set)


@dataclass
class FrameRelation:
    from_frame: str
    relation_type: str
    to_frame: str


@dataclass
class FrameInventory:
    """Immutable-after-construction collection of frames and relations.

    Relation direction is preserved in ``relations`` but ignored by
    ``neighbors``: neighborhood is symmetric by construction.
    """

    frames: dict[str, Frame]
    relations: list[FrameRelation]
    _adjacency: dict[str, set[str]] = field(default_factory=dict, repr=False, compare=False)

    def __post_init__(self):
        for rel in self.relations:
            for endpoint in (rel.from_frame, rel.to_frame):
                if endpoint not in self.frames:
                    raise IntegrityError(
                        f"relation references unknown frame {endpoint!r}"
                    )
        adjacency: dict[str, set[str]] = {name: set() for name in self.frames}
        for rel in self.relations:
            if rel.from_frame != rel.to_frame:
                adjacency[rel.from_frame].add(rel.to_frame)
                adjacency[rel.to_frame].add(rel.from_frame)
        self._adjacency = adjacency

    def frame_names(self) -> list[str]:
        return sorted(self.frames)


def _require_frame(inv: FrameInventory, frame: str) -> str:
    name = normalize_frame_name(frame)
    if name not in inv.frames:
        raise UnknownFrameError(f"unknown frame {name!r}")
    return name


def neighbors(inv: FrameInventory, frame: str) -> set[str]:
    """All frames connected to ``frame`` by any relation, either direction.

    Never contains ``frame`` itself.
    """
    return set(inv._adjacency[_require_frame(inv, frame)])


def lexical_units_of(inv: FrameInventory, frame: str, pos: str | None = None) -> set[str]:
    """Lemma set of a frame, optionally filtered by coarse pos tag."""
    frame_obj = inv.frames[_require_frame(inv, frame)]
    if pos is None:
        return {lemma for lemma, _ in frame_obj.lexical_units}
    wanted = pos.strip().lower()
    return {lemma for lemma, p in frame_obj.lexical_units if p == wanted}


def load_inventory(source: IO[str] | Iterable[str]) -> FrameInventory:
    """Parse FIV1 text into a FrameInventory.

    Raises FormatError (with line number) on a malformed line, IntegrityError
    when a relation references an undeclared frame.
    """
    frames: dict[str, Frame] = {}
    relations: list[FrameRelation] = []
    current: Frame | None = None
    for lineno, raw in enumerate(source, start=1):
        line = raw.rstrip("\n")
        if not line.strip() or line.startswith("#"):
            continue
        fields = line.split("\t")
        kind = fields[0]
        if kind == "F":
            if len(fields) != 2 or not fields[1].strip():
                raise FormatError("expected F<TAB>name", line=lineno)
            name = normalize_frame_name(fields[1])
            if name in frames:
                raise FormatError(f"duplicate frame {name!r}", line=lineno)
            current = Frame(name=name)
            frames[name] = current
        elif kind == "L":
            if len(fields) != 3:
                raise FormatError("expected L<TAB>lemma<TAB>pos", line=lineno)
            if current is None:
                raise FormatError("lexical unit before any frame", line=lineno)
            lemma = fields[1].strip().lower()
            if not lemma:
                raise FormatError("empty lemma", line=lineno)
            current.lexical_units.add((lemma, fields[2].strip().lower()))
        elif kind == "R":
            if len(fields) != 4:
                raise FormatError("expected R<TAB>from<TAB>type<TAB>to", line=lineno)
            src = normalize_frame_name(fields[1])
            dst = normalize_frame_name(fields[3])
            for endpoint in (src, dst):
                if endpoint not in frames:
                    raise IntegrityError(
                        f"line {lineno}: relation references unknown frame {endpoint!r}"
                    )
            relations.append(FrameRelation(src, fields[2].strip().lower(), dst))
        else:
            raise FormatError(f"unknown record type {kind!r}", line=lineno)
    return FrameInventory(frames=frames, relations=relations)


def save_inventory(inv: FrameInventory, sink: IO[str]) -> None:
    """Write FIV1 text; ``load_inventory`` of the result reproduces ``inv``."""
    for name in sorted(inv.frames):
        sink.write(f"F\t{name}\n")
        for lemma, pos in sorted(inv.frames[name].lexical_units):
            sink.write(f"L\t{lemma}\t{pos}\n")
    for rel in inv.relations:
        sink.write(f"R\t{rel.from_frame}\t{rel.relation_type}\t{rel.to_frame}\n")
