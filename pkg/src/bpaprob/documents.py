"""BPA documents: a line-oriented text format and a JSON interchange format.

Text format::

    # comments start with '#'; '# name: <text>' before the frame sets the name
    frame: w1 w2 w3
    w1: 0.4
    w1 w2: 0.1
    w1 w2 w3: 0.5

JSON format::

    {"name": "...", "frame": ["w1", "w2"],
     "masses": [{"subset": ["w1"], "mass": 0.4}, ...]}
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass
from pathlib import Path
from typing import Optional, Union

from .errors import (
    DuplicateSubsetError,
    EmptySetMassError,
    EvidenceError,
    NegativeMassError,
    ParseError,
    ValidationError,
)
from .evidence import Frame, MassFunction, make_frame, make_mass

_NUMBER = re.compile(r"[+-]?(?:\d+(?:\.\d*)?|\.\d+)(?:[eE][+-]?\d+)?\Z")
_FORBIDDEN = re.compile(r"[\s:#]")


@dataclass(frozen=True)
class BpaDocument:
    frame: Frame
    mass: MassFunction
    name: Optional[str] = None


def _parse_frame_line(body: str, lineno: int, offset: int) -> Frame:
    labels = body.split()
    if not labels:
        raise ParseError("frame declaration lists no labels", lineno, offset + 1)
    try:
        return make_frame(labels)
    except EvidenceError as exc:
        raise exc.at(lineno, offset + 1)


def parse_document(text: str) -> BpaDocument:
    name = None
    frame = None
    entries = []
    lines_of: dict[int, int] = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        stripped = raw.strip()
        if stripped.startswith("#"):
            meta = stripped[1:].strip()
            if frame is None and meta.lower().startswith("name:"):
                name = meta[5:].strip() or None
            continue
        line = raw.split("#", 1)[0]
        if not line.strip():
            continue
        colon = line.find(":")
        if colon < 0:
            raise ParseError("expected '<labels>: <value>'", lineno, len(line.rstrip()) + 1)
        head, body = line[:colon], line[colon + 1 :]
        if frame is None:
            if head.strip() != "frame":
                raise ParseError(
                    "first statement must be 'frame: <label> ...'",
                    lineno,
                    len(line) - len(line.lstrip()) + 1,
                )
            frame = _parse_frame_line(body, lineno, colon + 1)
            continue
        labels = []
        for tok in re.finditer(r"\S+", head):
            if tok.group() not in frame:
                raise ParseError(f"unknown label {tok.group()!r}", lineno, tok.start() + 1)
            labels.append(tok.group())
        token = body.strip()
        mass_col = colon + 2 + (len(body) - len(body.lstrip()))
        if not _NUMBER.match(token):
            raise ParseError(f"mass {token!r} is not a decimal literal", lineno, mass_col)
        if not labels:
            raise EmptySetMassError("mass assigned to the empty set").at(lineno, 1)
        mask = frame.subset(labels).mask
        if mask in lines_of:
            raise DuplicateSubsetError(
                f"subset already assigned on line {lines_of[mask]}"
            ).at(lineno, 1)
        lines_of[mask] = lineno
        entries.append((labels, float(token), lineno, mass_col))
    if frame is None:
        raise ParseError("missing 'frame:' declaration", 1, 1)
    for _, value, lineno, col in entries:
        if value < 0:
            raise NegativeMassError(f"mass must be non-negative, got {value!r}").at(lineno, col)
    mass = make_mass(frame, [(labels, value) for labels, value, _, _ in entries])
    return BpaDocument(frame, mass, name)


def parse_bpa(text: str) -> tuple[Frame, MassFunction]:
    doc = parse_document(text)
    return doc.frame, doc.mass


def _ordered(m: MassFunction):
    return sorted(m.focal, key=lambda fm: (fm[0].cardinality, fm[0].members()))


def emit_bpa(m: MassFunction, name: Optional[str] = None) -> str:
    frame = m.frame
    for lab in frame.labels:
        if _FORBIDDEN.search(lab):
            raise ValidationError(
                f"label {lab!r} cannot be written in the text format; use JSON"
            )
    out = []
    if name:
        out.append(f"# name: {name}")
    out.append("frame: " + " ".join(frame.labels))
    for fs, v in _ordered(m):
        out.append(f"{' '.join(frame.labels_of(fs))}: {v!r}")
    return "\n".join(out) + "\n"


def parse_json(text: str) -> BpaDocument:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(exc.msg, exc.lineno, exc.colno) from None
    if not isinstance(data, dict):
        raise ParseError("top-level JSON value must be an object", 1, 1)
    labels = data.get("frame")
    masses = data.get("masses")
    if not isinstance(labels, list) or not isinstance(masses, list):
        raise ParseError("JSON document needs 'frame' and 'masses' arrays", 1, 1)
    frame = make_frame(labels)
    entries = []
    for k, item in enumerate(masses):
        if not isinstance(item, dict) or "subset" not in item or "mass" not in item:
            raise ParseError(f"masses[{k}] must have 'subset' and 'mass'", 1, 1)
        subset, value = item["subset"], item["mass"]
        if not isinstance(subset, list) or isinstance(value, bool) or not isinstance(
            value, (int, float)
        ):
            raise ParseError(f"masses[{k}] has the wrong field types", 1, 1)
        for lab in subset:
            if lab not in frame:
                raise ParseError(f"unknown label {lab!r} in masses[{k}]", 1, 1)
        entries.append((subset, value))
    name = data.get("name")
    return BpaDocument(frame, make_mass(frame, entries), name if isinstance(name, str) else None)


def emit_json(m: MassFunction, name: Optional[str] = None) -> str:
    frame = m.frame
    data = {}
    if name:
        data["name"] = name
    data["frame"] = list(frame.labels)
    data["masses"] = [
        {"subset": list(frame.labels_of(fs)), "mass": v} for fs, v in _ordered(m)
    ]
    return json.dumps(data, indent=2) + "\n"


def load_document(source: Union[str, Path]) -> BpaDocument:
    """Read a BPA file; JSON is detected by extension or a leading ``{``."""
    path = Path(source)
    text = path.read_text(encoding="utf-8")
    if path.suffix.lower() == ".json" or text.lstrip().startswith("{"):
        return parse_json(text)
    return parse_document(text)
