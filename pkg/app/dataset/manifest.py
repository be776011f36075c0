"""Dataset manifest (data.yaml) and split directory scanning.

Manifest grammar::

    path: <dir>
    train: <relative dir>
    val: <relative dir>
    test: <relative dir>
    names:
      - <name0>
      - <name1>

The file is YAML restricted to exactly these five keys; ``names`` may also be
a flow list (``names: [a, b]``) or an index mapping (``names: {0: a, 1: b}``).
Unknown, duplicate or missing keys are errors. ``path`` is resolved against
the manifest directory, the split dirs against ``path``. Each split dir holds
``images/<stem>.<ext>`` and ``labels/<stem>.txt``.
"""

from pathlib import Path

import yaml

from app.core.exceptions import NotFoundError, ParseError, ValidationError
from app.dataset.types import ClassTable, DatasetManifest, SampleRef
from app.utils.files import read_utf8
from app.utils.logging import get_logger

logger = get_logger(__name__)

IMAGE_SUFFIXES = (".png", ".ppm", ".jpg", ".jpeg", ".bmp")
SPLITS = ("train", "val", "test")
_SCALAR_KEYS = ("path", *SPLITS)


def _line(node: yaml.Node) -> int:
    return node.start_mark.line + 1


def _names(node: yaml.Node) -> list[str]:
    """A block or flow list of names, or the ``{0: a, 1: b}`` index mapping."""
    if isinstance(node, yaml.ScalarNode):
        if node.value.strip():
            raise ParseError("names must be a list", _line(node))
        return []
    if isinstance(node, yaml.SequenceNode):
        items = node.value
    elif isinstance(node, yaml.MappingNode):
        items = []
        for expected, (index_node, item) in enumerate(node.value):
            if index_node.value != str(expected):
                raise ParseError(f"names index {index_node.value!r}, expected {expected}", _line(index_node))
            items.append(item)
    else:
        raise ParseError("names must be a list", _line(node))
    names = []
    for item in items:
        if not isinstance(item, yaml.ScalarNode) or not item.value.strip():
            raise ParseError("class names must be non-empty strings", _line(item))
        names.append(item.value.strip())
    return names


def parse_manifest(text: str) -> tuple[dict[str, str], list[str]]:
    """Parse manifest text into scalar keys and the names list.

    The document is composed into a YAML node tree rather than loaded, so
    duplicate keys and their line numbers survive to be reported.
    """
    try:
        root = yaml.compose(text, Loader=yaml.SafeLoader)
    except yaml.MarkedYAMLError as e:
        mark = e.problem_mark or e.context_mark
        raise ParseError(e.problem or "invalid YAML", mark.line + 1 if mark else 1) from None
    except yaml.YAMLError as e:
        raise ParseError(str(e), 1) from None
    if root is None:
        raise ValidationError("empty manifest")
    if not isinstance(root, yaml.MappingNode):
        raise ParseError("manifest must be a mapping of 'key: value' lines", _line(root))

    scalars: dict[str, str] = {}
    names: list[str] | None = None
    for key_node, value_node in root.value:
        key = key_node.value if isinstance(key_node, yaml.ScalarNode) else None
        if key == "names":
            if names is not None:
                raise ParseError("duplicate key names", _line(key_node))
            names = _names(value_node)
        elif key in _SCALAR_KEYS:
            if key in scalars:
                raise ParseError(f"duplicate key {key}", _line(key_node))
            if not isinstance(value_node, yaml.ScalarNode):
                raise ParseError(f"{key} must be a single value", _line(value_node))
            scalars[key] = value_node.value.strip()
        else:
            raise ParseError(f"unknown key {key!r}", _line(key_node))

    for key in _SCALAR_KEYS:
        if key not in scalars:
            raise ValidationError(f"missing key {key}")
    if names is None:
        raise ValidationError("missing key names")
    if not names:
        raise ValidationError("empty names list")
    return scalars, names


def load_manifest(path: Path) -> DatasetManifest:
    """Load and validate a manifest file."""
    path = Path(path)
    if not path.is_file():
        raise NotFoundError(f"manifest not found: {path}")
    try:
        scalars, names = parse_manifest(read_utf8(path))
    except ParseError as e:
        raise ParseError(e.reason, e.line, path) from None

    root = Path(scalars["path"])
    if not root.is_absolute():
        root = (path.parent / root).resolve()
    manifest = DatasetManifest(
        root_path=root,
        train=scalars["train"],
        val=scalars["val"],
        test=scalars["test"],
        classes=ClassTable.of(names),
    )
    validate_manifest(manifest)
    logger.debug("manifest_loaded", extra={"path": str(path), "classes": len(names)})
    return manifest


def validate_manifest(manifest: DatasetManifest) -> None:
    """Check split directories exist and no stem appears in two splits."""
    owner: dict[str, str] = {}
    for split in SPLITS:
        split_dir = manifest.split_dir(split)
        if not split_dir.is_dir():
            raise NotFoundError(f"{split} directory not found: {split_dir}")
        for sample in scan_split(split_dir):
            if sample.stem in owner and owner[sample.stem] != split:
                raise ValidationError(
                    f"stem {sample.stem!r} appears in both {owner[sample.stem]} and {split}"
                )
            owner[sample.stem] = split


def format_manifest(
    classes: ClassTable,
    root: str = ".",
    train: str = "train",
    val: str = "val",
    test: str = "test",
) -> str:
    lines = [
        f"path: {root}",
        f"train: {train}",
        f"val: {val}",
        f"test: {test}",
        "names:",
        *(f"  - {name}" for name in classes.names),
    ]
    return "\n".join(lines) + "\n"


def write_manifest(path: Path, classes: ClassTable, **dirs: str) -> None:
    Path(path).write_text(format_manifest(classes, **dirs), encoding="utf-8")


def scan_split(split_dir: Path) -> list[SampleRef]:
    """Pair images/<stem>.<ext> with labels/<stem>.txt, sorted by stem."""
    images_dir = Path(split_dir) / "images"
    labels_dir = Path(split_dir) / "labels"
    images: dict[str, Path] = {}
    if images_dir.is_dir():
        for p in sorted(images_dir.iterdir()):
            if not p.is_file() or p.suffix.lower() not in IMAGE_SUFFIXES:
                continue
            if p.stem in images:
                raise ValidationError(f"duplicate image stem {p.stem!r} in {images_dir}")
            images[p.stem] = p

    labels: dict[str, Path] = {}
    if labels_dir.is_dir():
        for p in labels_dir.glob("*.txt"):
            if p.stem in images:
                labels[p.stem] = p
            else:
                logger.warning("orphan_label", extra={"path": str(p)})

    return [SampleRef(stem, images[stem], labels.get(stem)) for stem in sorted(images)]


def load_class_table(path: Path) -> ClassTable:
    """Read one class name per line (classes.txt)."""
    path = Path(path)
    if not path.is_file():
        raise NotFoundError(f"class list not found: {path}")
    names = [line.strip() for line in read_utf8(path).splitlines() if line.strip()]
    return ClassTable.of(names)
