"""Text file reading shared by the label, manifest and spec loaders."""

from pathlib import Path

from app.core.exceptions import ParseError


def decode_utf8(data: bytes, path: Path | str | None = None) -> str:
    """Decode bytes as UTF-8; undecodable input is a ParseError at the offending line."""
    try:
        return data.decode("utf-8")
    except UnicodeDecodeError as e:
        line = data[: e.start].count(b"\n") + 1
        raise ParseError(f"not valid UTF-8 text (byte 0x{data[e.start]:02x})", line, path) from None


def read_utf8(path: Path) -> str:
    """Read a text file as UTF-8. Missing files raise FileNotFoundError as usual."""
    path = Path(path)
    return decode_utf8(path.read_bytes(), path)
