"""
Plain-text matrix files.

Layout: the first line holds the dimension ``n``; each of the next ``n``
lines holds ``n`` whitespace-separated complex literals of the form
``a``, ``a+bi``, ``a-bi`` or ``bi``, with ``a`` and ``b`` decimal reals
(an exponent suffix such as ``1.5e-07`` is allowed).  Values are written
with 17 significant digits, so writing then reading is lossless.  Lines
starting with ``#`` are comments and are skipped on reading.
"""
from __future__ import annotations

import os
import re
from typing import Union

import numpy as np

from .errors import GenPowError
from .linalg import CMatrix, as_cmatrix

__all__ = ["MatrixFileError", "parse_complex", "format_complex", "parse", "render", "read", "write"]

_REAL = r"[+-]?(?:\d+\.?\d*|\.\d+)(?:[eE][+-]?\d+)?"
_UREAL = r"(?:\d+\.?\d*|\.\d+)(?:[eE][+-]?\d+)?"
_LITERAL = re.compile(
    rf"(?P<re>{_REAL})"
    rf"|(?P<im>{_REAL})i"
    rf"|(?P<re2>{_REAL})(?P<sign>[+-])(?P<im2>{_UREAL})i"
)


class MatrixFileError(GenPowError, ValueError):
    """Malformed matrix text."""


def parse_complex(token: str) -> complex:
    m = _LITERAL.fullmatch(token)
    if m is None:
        raise MatrixFileError(f"bad complex literal {token!r}")
    if m["re"] is not None:
        return complex(float(m["re"]), 0.0)
    if m["im"] is not None:
        return complex(0.0, float(m["im"]))
    imag = float(m["im2"])
    return complex(float(m["re2"]), -imag if m["sign"] == "-" else imag)


def _fmt(x: float) -> str:
    return "%.17g" % x


def format_complex(z: complex) -> str:
    if not (np.isfinite(z.real) and np.isfinite(z.imag)):
        raise MatrixFileError(f"cannot write non-finite entry {z!r}")
    if z.imag == 0:
        return _fmt(z.real)
    sign = "-" if np.signbit(z.imag) else "+"
    return f"{_fmt(z.real)}{sign}{_fmt(abs(z.imag))}i"


def parse(text: str) -> CMatrix:
    lines = [ln.strip() for ln in text.splitlines()]
    lines = [ln for ln in lines if ln and not ln.startswith("#")]
    if not lines:
        raise MatrixFileError("empty matrix file")
    try:
        n = int(lines[0])
    except ValueError:
        raise MatrixFileError(f"first line must be the dimension, got {lines[0]!r}") from None
    if n < 1:
        raise MatrixFileError(f"dimension must be positive, got {n}")
    rows = lines[1:]
    if len(rows) != n:
        raise MatrixFileError(f"expected {n} rows, found {len(rows)}")
    out = np.empty((n, n), dtype=np.complex128)
    for i, row in enumerate(rows):
        tokens = row.split()
        if len(tokens) != n:
            raise MatrixFileError(f"row {i + 1}: expected {n} entries, found {len(tokens)}")
        out[i] = [parse_complex(t) for t in tokens]
    return out


def render(a: CMatrix) -> str:
    a = as_cmatrix(a)
    lines = [str(a.shape[0])]
    lines += [" ".join(format_complex(z) for z in row) for row in a]
    return "\n".join(lines) + "\n"


def read(path: Union[str, os.PathLike]) -> CMatrix:
    with open(path, encoding="utf-8") as fh:
        return parse(fh.read())


def write(path: Union[str, os.PathLike], a: CMatrix) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(render(a))
