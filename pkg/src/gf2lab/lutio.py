"""Reading and writing lookup-table files.

The exchange format is plain text: a header line ``n=<degree> poly=<hex>``
followed by exactly 2^n whitespace-separated hexadecimal values (lowercase,
no prefix), the i-th value being the image of the element with integer
encoding i.  Hexadecimal keeps the files bit-exact and readable at n <= 16.
"""

from __future__ import annotations

import hashlib
import re
from pathlib import Path

import numpy as np

from .field import field_make
from .spectra import FunctionTable, lut_from_values

__all__ = ["LutParseError", "read_lut", "write_lut", "lut_digest"]

_HEADER = re.compile(r"^n=(\d+)\s+poly=([0-9a-f]+)\s*$")


class LutParseError(ValueError):
    """Malformed lookup-table file; carries the 1-based offending line."""

    def __init__(self, line: int, detail: str):
        self.line = line
        super().__init__(f"line {line}: {detail}")


def read_lut(path: str | Path) -> tuple[FunctionTable, str]:
    """Parse a lookup-table file.

    Returns
    -------
    (table, digest)
        The validated FunctionTable and the sha256 hex digest of the raw
        file bytes (used as the map descriptor in reports).
    """
    raw = Path(path).read_bytes()
    digest = hashlib.sha256(raw).hexdigest()
    lines = raw.decode("ascii", errors="replace").splitlines()
    if not lines:
        raise LutParseError(1, "empty file, expected 'n=<degree> poly=<hex>' header")
    m = _HEADER.match(lines[0].strip())
    if not m:
        raise LutParseError(1, f"bad header {lines[0]!r}, expected 'n=<degree> poly=<hex>'")
    n = int(m.group(1))
    poly = int(m.group(2), 16)
    spec = field_make(n, poly)  # propagates construction errors
    values = []
    expected = spec.size
    for line_no, line in enumerate(lines[1:], start=2):
        for tok in line.split():
            try:
                v = int(tok, 16)
            except ValueError:
                raise LutParseError(line_no, f"not a hexadecimal value: {tok!r}") from None
            if v >= spec.size:
                raise LutParseError(line_no, f"value {tok} out of range for GF(2^{n})")
            values.append(v)
            if len(values) > expected:
                raise LutParseError(line_no, f"more than {expected} values")
    if len(values) < expected:
        raise LutParseError(len(lines), f"expected {expected} values, found {len(values)}")
    return lut_from_values(spec, values), digest


def write_lut(path: str | Path, f: FunctionTable, per_line: int = 16) -> None:
    """Write a FunctionTable in the exchange format (16 values per line)."""
    s = f.spec
    out = [f"n={s.n} poly={s.poly:x}"]
    vals = [format(int(v), "x") for v in f.lut]
    for i in range(0, len(vals), per_line):
        out.append(" ".join(vals[i:i + per_line]))
    Path(path).write_text("\n".join(out) + "\n", encoding="ascii")


def lut_digest(f: FunctionTable) -> str:
    """sha256 of the canonical serialized form (stable across rewrites)."""
    s = f.spec
    h = hashlib.sha256()
    h.update(f"n={s.n} poly={s.poly:x}\n".encode())
    h.update(np.asarray(f.lut, dtype=np.int64).tobytes())
    return h.hexdigest()
