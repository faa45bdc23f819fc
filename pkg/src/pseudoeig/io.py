"""Matrix files (Matrix Market array format, CSV) and JSON reports.

Numbers are written with ``repr``, the shortest decimal string that
round-trips to the same double, so write/read cycles are exact.
"""

import hashlib
import json
import math
from pathlib import Path

import numpy as np

from .exceptions import DimensionError, MatrixParseError

FORMATS = ("mm", "csv")


def _float(token, line):
    try:
        return float(token)
    except ValueError:
        raise MatrixParseError(f"not a number: {token!r}", line) from None


def parse_matrix_market(text):
    lines = text.splitlines()
    if not lines or not lines[0].startswith("%%MatrixMarket"):
        raise MatrixParseError("missing %%MatrixMarket header", 1)
    head = lines[0].split()
    if len(head) != 5 or head[1].lower() != "matrix":
        raise MatrixParseError(f"malformed header: {lines[0]!r}", 1)
    layout, field, symmetry = (h.lower() for h in head[2:])
    if layout != "array":
        raise MatrixParseError(f"only the array layout is supported, got {layout!r}", 1)
    if field not in ("real", "integer", "complex"):
        raise MatrixParseError(f"unsupported field {field!r}", 1)
    if symmetry != "general":
        raise MatrixParseError(f"only general symmetry is supported, got {symmetry!r}", 1)
    body = [(i + 1, ln.strip()) for i, ln in enumerate(lines) if i > 0]
    body = [(i, ln) for i, ln in body if ln and not ln.startswith("%")]
    if not body:
        raise MatrixParseError("missing size line", len(lines))
    size_line, size = body[0]
    parts = size.split()
    if len(parts) != 2 or not all(p.isdigit() for p in parts):
        raise MatrixParseError(f"bad size line {size!r}", size_line)
    rows, cols = int(parts[0]), int(parts[1])
    entries = body[1:]
    if len(entries) != rows * cols:
        line = entries[-1][0] if entries else size_line
        raise MatrixParseError(
            f"header declares {rows}x{cols} = {rows * cols} entries, found {len(entries)}", line
        )
    width = 2 if field == "complex" else 1
    values = np.empty(rows * cols, dtype=complex)
    for idx, (line, ln) in enumerate(entries):
        tok = ln.split()
        if len(tok) != width:
            raise MatrixParseError(f"expected {width} value(s), got {len(tok)}", line)
        re_ = _float(tok[0], line)
        im = _float(tok[1], line) if width == 2 else 0.0
        values[idx] = complex(re_, im)
    # array format is column-major
    return values.reshape(cols, rows).T.copy()


def _is_real(A):
    return not np.any(np.imag(A))


def format_matrix_market(A):
    A = np.asarray(A)
    if A.ndim != 2:
        raise DimensionError(f"expected a 2-D matrix, got shape {A.shape}")
    real = _is_real(A)
    out = [f"%%MatrixMarket matrix array {'real' if real else 'complex'} general", f"{A.shape[0]} {A.shape[1]}"]
    for z in A.T.ravel():
        z = complex(z)
        out.append(repr(z.real) if real else f"{z.real!r} {z.imag!r}")
    return "\n".join(out) + "\n"


def parse_complex(token, line=None):
    """Parse ``a``, ``a+bi``, ``a-bi``, ``bi`` (``j`` is accepted for ``i``)."""
    tok = token.strip().replace(" ", "")
    if tok.endswith("i"):
        tok = tok[:-1] + "j"
    if not tok or tok.startswith("("):
        raise MatrixParseError(f"not a number: {token!r}", line)
    try:
        return complex(tok)
    except ValueError:
        raise MatrixParseError(f"not a number: {token!r}", line) from None


def parse_csv(text):
    rows = []
    for i, ln in enumerate(text.splitlines(), start=1):
        if not ln.strip():
            continue
        rows.append((i, [parse_complex(tok, i) for tok in ln.split(",")]))
    if not rows:
        raise MatrixParseError("empty CSV", 1)
    width = len(rows[0][1])
    for i, r in rows:
        if len(r) != width:
            raise MatrixParseError(f"row has {len(r)} entries, expected {width}", i)
    return np.array([r for _, r in rows], dtype=complex)


def format_complex(z):
    z = complex(z)
    if z.imag == 0 and not math.copysign(1.0, z.imag) < 0:
        return repr(z.real)
    sign = "-" if math.copysign(1.0, z.imag) < 0 else "+"
    return f"{z.real!r}{sign}{abs(z.imag)!r}i"


def format_csv(A):
    A = np.asarray(A)
    real = _is_real(A)
    fmt = (lambda z: repr(float(np.real(z)))) if real else format_complex
    return "".join(",".join(fmt(z) for z in row) + "\n" for row in A)


def detect_format(path):
    return "csv" if str(path).lower().endswith(".csv") else "mm"


def read_matrix(path, fmt=None):
    """Read a matrix file; ``fmt`` is 'mm' or 'csv' (default: by extension)."""
    fmt = fmt or detect_format(path)
    if fmt not in FORMATS:
        raise ValueError(f"unknown format {fmt!r}")
    text = Path(path).read_text()
    return parse_csv(text) if fmt == "csv" else parse_matrix_market(text)


def write_matrix(path, A, fmt=None):
    fmt = fmt or detect_format(path)
    text = format_csv(A) if fmt == "csv" else format_matrix_market(A)
    Path(path).write_text(text)


def file_digest(path):
    return hashlib.sha256(Path(path).read_bytes()).hexdigest()


# ---- JSON ----


def _real(x):
    x = float(x)
    return None if math.isnan(x) else x


def encode_complex(z):
    z = complex(z)
    return {"re": _real(z.real), "im": _real(z.imag)}


def decode_complex(obj):
    return complex(obj["re"], obj["im"])


def encode_matrix(A):
    return [[encode_complex(z) for z in row] for row in np.asarray(A)]


def decode_matrix(rows):
    return np.array([[decode_complex(z) for z in row] for row in rows], dtype=complex)


def solution_dict(sol):
    return {
        "lambda_hat": encode_complex(sol.lambda_hat),
        "residual": _real(sol.residual),
        "backward_error": _real(sol.backward_error),
        "condition": _real(sol.condition),
        "iterations": int(sol.iterations),
        "converged": bool(sol.converged),
        "message": sol.message,
        "X": encode_matrix(sol.X_hat),
        "S": encode_matrix(sol.S),
    }


def certificate_dict(cert):
    return {
        "perturbation_norm": _real(cert.perturbation_norm),
        "eigen_residual": _real(cert.eigen_residual),
        "kernel_dims": [int(d) for d in cert.kernel_dims],
        "jordan_block_verified": bool(cert.jordan_block_verified),
    }


def diagnostics_list(diag):
    return [
        {
            "k": r.k,
            "lambda": encode_complex(r.lambda_),
            "condition": _real(r.condition),
            "residual": _real(r.residual),
            "verdict": r.verdict,
        }
        for r in diag.rows
    ]


def error_dict(kind, message):
    return {"error": {"kind": kind, "message": str(message)}}


def dumps(report):
    """Deterministic JSON; an infinite condition is written as ``Infinity``."""
    return json.dumps(report, indent=2, sort_keys=True)


def loads(text):
    return json.loads(text)
