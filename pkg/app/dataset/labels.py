"""YOLO label and prediction files.

Label line:       ``<class_id> <cx> <cy> <w> <h>``
Prediction line:  ``<class_id> <cx> <cy> <w> <h> <conf>``

Coordinates are written with 6 decimal places.
"""

import math
from pathlib import Path

from app.core.exceptions import NotFoundError, ParseError, ValidationError
from app.dataset.types import ClassTable, NormBox, Prediction
from app.utils.files import read_utf8


def _parse_box(parts: list[str], classes: ClassTable, line_no: int) -> NormBox:
    try:
        class_id = int(parts[0])
    except ValueError:
        raise ParseError(f"invalid class id {parts[0]!r}", line_no) from None
    if not 0 <= class_id < len(classes):
        raise ParseError(f"class id {class_id} out of range for {len(classes)} classes", line_no)

    values: list[float] = []
    for label, token in zip(("cx", "cy", "w", "h"), parts[1:5]):
        try:
            value = float(token)
        except ValueError:
            raise ParseError(f"malformed {label} {token!r}", line_no) from None
        if not math.isfinite(value) or not 0.0 <= value <= 1.0:
            raise ParseError(f"{label}={token} outside [0,1]", line_no)
        values.append(value)
    cx, cy, w, h = values
    if w <= 0.0 or h <= 0.0:
        raise ParseError("zero-size box", line_no)
    try:
        return NormBox.clamped(class_id, cx, cy, w, h)
    except ValidationError as e:
        raise ParseError(str(e), line_no) from None


def _records(text: str) -> list[tuple[int, list[str]]]:
    out = []
    for line_no, line in enumerate(text.splitlines(), start=1):
        if not line.strip():
            continue
        out.append((line_no, line.split()))
    return out


def parse_label_file(text: str, classes: ClassTable) -> list[NormBox]:
    """Parse a label file body into boxes, in file order."""
    boxes: list[NormBox] = []
    for line_no, parts in _records(text):
        if len(parts) != 5:
            raise ParseError(f"expected 5 fields, got {len(parts)}", line_no)
        boxes.append(_parse_box(parts, classes, line_no))
    return boxes


def parse_prediction_file(text: str, classes: ClassTable) -> list[Prediction]:
    """Parse a prediction file body (label format plus a confidence column)."""
    preds: list[Prediction] = []
    for line_no, parts in _records(text):
        if len(parts) == 5:
            raise ParseError("missing confidence", line_no)
        if len(parts) != 6:
            raise ParseError(f"expected 6 fields, got {len(parts)}", line_no)
        box = _parse_box(parts, classes, line_no)
        try:
            conf = float(parts[5])
        except ValueError:
            raise ParseError(f"malformed confidence {parts[5]!r}", line_no) from None
        if not math.isfinite(conf) or not 0.0 <= conf <= 1.0:
            raise ParseError(f"confidence={parts[5]} outside [0,1]", line_no)
        preds.append(Prediction(box=box, confidence=conf))
    return preds


def _format_box(b: NormBox) -> str:
    return f"{b.class_id} {b.cx:.6f} {b.cy:.6f} {b.w:.6f} {b.h:.6f}"


def write_label_file(boxes: list[NormBox]) -> str:
    return "".join(_format_box(b) + "\n" for b in boxes)


def write_prediction_file(preds: list[Prediction]) -> str:
    return "".join(f"{_format_box(p.box)} {p.confidence:.6f}\n" for p in preds)


def read_labels(path: Path | None, classes: ClassTable) -> list[NormBox]:
    """Read a label file; a missing file (None) means an image without objects."""
    if path is None:
        return []
    try:
        text = read_utf8(path)
    except FileNotFoundError:
        raise NotFoundError(f"label file not found: {path}") from None
    try:
        return parse_label_file(text, classes)
    except ParseError as e:
        raise ParseError(e.reason, e.line, path) from None


def read_predictions(path: Path, classes: ClassTable) -> list[Prediction]:
    """Read a prediction file; a missing file means no detections."""
    if not path.exists():
        return []
    try:
        return parse_prediction_file(read_utf8(path), classes)
    except ParseError as e:
        raise ParseError(e.reason, e.line, path) from None
