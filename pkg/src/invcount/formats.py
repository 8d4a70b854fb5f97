"""Key-sequence file formats used by the command line tools.

Text: whitespace-separated decimal signed 64-bit integers; blank lines are
ignored.  Binary: magic b"AINV", one version byte 0x01, an unsigned 64-bit
little-endian count m, then m little-endian signed 64-bit keys; anything after
the last key is an error.
"""

from __future__ import annotations

import struct

import numpy as np

__all__ = [
    "FormatError",
    "MAGIC",
    "VERSION",
    "parse_text",
    "render_text",
    "parse_binary",
    "render_binary",
]

MAGIC = b"AINV"
VERSION = 1

_I64_MIN = -(1 << 63)
_I64_MAX = (1 << 63) - 1


class FormatError(ValueError):
    """Malformed input; the message names the offending line or byte offset."""


def parse_text(text: str) -> list[int]:
    tokens = text.split()
    if not tokens:
        return []
    try:
        return [int(x) for x in np.array(tokens, dtype=np.int64)]
    except (ValueError, OverflowError):
        pass
    # slow path only to produce a precise diagnostic
    for lineno, line in enumerate(text.splitlines(), 1):
        for token in line.split():
            try:
                value = int(token, 10)
            except ValueError:
                raise FormatError(
                    f"line {lineno}: invalid integer token {token!r}"
                ) from None
            if not _I64_MIN <= value <= _I64_MAX:
                raise FormatError(
                    f"line {lineno}: value {token} outside signed 64-bit range"
                )
    raise FormatError("malformed text input")  # pragma: no cover


def render_text(keys) -> str:
    return " ".join(str(int(k)) for k in keys) + "\n"


def parse_binary(data: bytes) -> list[int]:
    if len(data) < 4 or data[:4] != MAGIC:
        raise FormatError("byte 0: bad magic, expected b'AINV'")
    if len(data) < 5:
        raise FormatError("byte 4: missing version byte")
    if data[4] != VERSION:
        raise FormatError(f"byte 4: unsupported version {data[4]}, expected {VERSION}")
    if len(data) < 13:
        raise FormatError("byte 5: truncated count field")
    (m,) = struct.unpack_from("<Q", data, 5)
    expected = 13 + 8 * m
    if len(data) < expected:
        raise FormatError(
            f"byte {len(data)}: truncated payload, expected {expected} bytes total"
        )
    if len(data) > expected:
        raise FormatError(f"byte {expected}: trailing bytes after {m} keys")
    arr = np.frombuffer(data, dtype="<i8", count=m, offset=13)
    return [int(x) for x in arr]


def render_binary(keys) -> bytes:
    arr = np.asarray(keys, dtype=np.int64)
    header = MAGIC + bytes([VERSION]) + struct.pack("<Q", arr.size)
    return header + arr.astype("<i8").tobytes()
