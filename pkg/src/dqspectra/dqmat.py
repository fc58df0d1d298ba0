"""The ``DQMAT`` text format.

::

    DQMAT <m> <n>
    <st.w> <st.x> <st.y> <st.z> <inf.w> <inf.x> <inf.y> <inf.z>
    ...

One record per entry in row-major order.  Lines starting with ``#`` are
comments; blank lines are ignored.  Values are written with 17 significant
digits, so a write/parse round trip is bit-exact.
"""

import io

import numpy as np

from .errors import DimensionError, ParseError
from .linalg import DQMatrix


def format_float(x):
    return format(float(x), ".17g")


def parse_dqmat(text, comments=None):
    """Parse a ``DQMAT`` document.  Comment lines (without ``#``) are appended
    to ``comments`` when a list is given."""
    if hasattr(text, "read"):
        text = text.read()
    header = None
    records = []
    for lineno, raw in enumerate(text.split("\n"), start=1):
        line = raw.rstrip("\r")
        if line.startswith("#"):
            if comments is not None:
                comments.append(line[1:].strip())
            continue
        if not line.strip():
            continue
        fields = line.split()
        if header is None:
            if len(fields) != 3 or fields[0] != "DQMAT":
                raise ParseError("expected header 'DQMAT <m> <n>'", lineno)
            try:
                m, n = int(fields[1]), int(fields[2])
            except ValueError:
                raise ParseError("dimensions must be integers", lineno) from None
            if m < 0 or n < 0:
                raise ParseError("dimensions must be nonnegative", lineno)
            header = (m, n)
            continue
        if len(fields) != 8:
            raise ParseError(f"expected 8 values, found {len(fields)}", lineno)
        try:
            values = [float(f) for f in fields]
        except ValueError:
            raise ParseError("malformed number", lineno) from None
        if any(v != v for v in values):
            raise ParseError("NaN is not allowed", lineno)
        records.append(values)
    if header is None:
        raise ParseError("missing 'DQMAT <m> <n>' header")
    m, n = header
    if len(records) != m * n:
        raise DimensionError(f"header declares {m}x{n} = {m * n} records, found {len(records)}")
    data = np.array(records, dtype=float).reshape(m, n, 8)
    return DQMatrix(data[..., :4], data[..., 4:])


def write_dqmat(A, stream=None, comments=()):
    """Serialize ``A``; returns the text when ``stream`` is None."""
    out = io.StringIO() if stream is None else stream
    m, n = A.shape
    for c in comments:
        out.write(f"# {c}\n")
    out.write(f"DQMAT {m} {n}\n")
    for i in range(m):
        for j in range(n):
            vals = list(A.st[i, j]) + list(A.inf[i, j])
            out.write(" ".join(format_float(v) for v in vals) + "\n")
    if stream is None:
        return out.getvalue()
    return None


def read_dqmat(path, comments=None):
    with open(path, encoding="utf-8", newline="") as f:
        return parse_dqmat(f.read(), comments)


def save_dqmat(A, path, comments=()):
    with open(path, "w", encoding="utf-8", newline="\n") as f:
        write_dqmat(A, f, comments)
