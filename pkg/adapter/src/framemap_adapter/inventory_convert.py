"""Convert a raw FrameNet-style XML release into FIV1 text.

Expects the standard release layout: a ``frame/`` directory of per-frame XML
files (``<frame name="...">`` with ``<lexUnit name="lemma.pos">`` children)
and an optional ``frRelation.xml`` listing ``<frameRelation>`` entries under
``<frameRelationType>`` groups.  XML namespaces are stripped, unknown
elements ignored.  Relations whose endpoints are not among the converted
frames are dropped (and counted in a header comment) so the output always
satisfies FIV1's integrity rule.
"""

from __future__ import annotations

import xml.etree.ElementTree as ET
from pathlib import Path


def _local(tag: str) -> str:
    return tag.rsplit("}", 1)[-1]


def _norm(name: str) -> str:
    return "_".join(name.strip().lower().split())


def _parse_frame_file(path: Path):
    root = ET.parse(path).getroot()
    if _local(root.tag) != "frame":
        return None
    name = root.get("name")
    if not name:
        return None
    units = set()
    for node in root.iter():
        if _local(node.tag) != "lexUnit":
            continue
        lu_name = node.get("name", "")
        if "." in lu_name:
            lemma, pos = lu_name.rsplit(".", 1)
        else:
            lemma, pos = lu_name, node.get("POS", "")
        lemma = lemma.strip().lower()
        if lemma:
            units.add((lemma, pos.strip().lower()))
    return _norm(name), units


def _parse_relations(path: Path):
    relations = []
    root = ET.parse(path).getroot()
    for group in root.iter():
        if _local(group.tag) != "frameRelationType":
            continue
        rel_type = _norm(group.get("name", "related"))
        for rel in group:
            if _local(rel.tag) != "frameRelation":
                continue
            sup = rel.get("superFrameName")
            sub = rel.get("subFrameName")
            if sup and sub:
                relations.append((_norm(sub), rel_type, _norm(sup)))
    return relations


def convert_inventory(release_dir: str, sink) -> None:
    release = Path(release_dir)
    frame_dir = release / "frame"
    if not frame_dir.is_dir():
        raise FileNotFoundError(f"no frame/ directory under {release_dir}")
    frames = {}
    for path in sorted(frame_dir.glob("*.xml")):
        parsed = _parse_frame_file(path)
        if parsed is not None:
            frames[parsed[0]] = parsed[1]

    relations = []
    rel_file = release / "frRelation.xml"
    if rel_file.exists():
        relations = _parse_relations(rel_file)
    kept = [r for r in relations if r[0] in frames and r[2] in frames]

    sink.write(f"# converted from {release_dir}\n")
    sink.write(f"# frames={len(frames)} relations={len(kept)} dropped_relations={len(relations) - len(kept)}\n")
    for name in sorted(frames):
        sink.write(f"F\t{name}\n")
        for lemma, pos in sorted(frames[name]):
            sink.write(f"L\t{lemma}\t{pos}\n")
    for sub, rel_type, sup in kept:
        sink.write(f"R\t{sub}\t{rel_type}\t{sup}\n")
