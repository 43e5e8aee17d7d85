"""Plain-text matrices, pencils and resolutions.

A matrix block is::

    field Q            (or: field Fp 101)
    3 3
    1 0 1/2
    ...

Blank lines and lines starting with # are ignored.  A pencil is three blocks,
each preceded by ``slice P``, ``slice Q``, ``slice R``.
"""

from __future__ import annotations

from typing import Iterator

from .errors import ShapeError
from .fields import QQ, GF, Field
from .linalg import DenseMatrix
from .monad import MonadResolution, PencilTensor


def _lines(text: str) -> Iterator[str]:
    for line in text.splitlines():
        line = line.strip()
        if line and not line.startswith("#"):
            yield line


def _field_line(line: str) -> Field:
    words = line.split()
    if words[:1] != ["field"]:
        raise ValueError(f"expected a field line, got {line!r}")
    if words[1:] == ["Q"]:
        return QQ
    if len(words) == 3 and words[1] == "Fp":
        return GF(int(words[2]))
    raise ValueError(f"unknown field {' '.join(words[1:])!r}")


def _read_matrix(it: Iterator[str]) -> DenseMatrix:
    F = _field_line(next(it))
    m, n = (int(x) for x in next(it).split())
    rows = []
    for _ in range(m):
        row = next(it).split()
        if len(row) != n:
            raise ShapeError(f"expected {n} entries, got {len(row)}")
        rows.append([F(x) for x in row])
    return DenseMatrix(rows, F) if m else DenseMatrix.zeros(0, n, F)


def _write_matrix(M: DenseMatrix) -> list[str]:
    F = M.field
    return [f"field {F.name}", f"{M.nrows} {M.ncols}"] + [" ".join(F.fmt(x) for x in r) for r in M.rows]


def read_matrix(text: str) -> DenseMatrix:
    return _read_matrix(_lines(text))


def write_matrix(M: DenseMatrix) -> str:
    return "\n".join(_write_matrix(M)) + "\n"


def read_pencil(text: str) -> PencilTensor:
    it = _lines(text)
    slices = {}
    for _ in range(3):
        head = next(it).split()
        if len(head) != 2 or head[0] != "slice" or head[1] not in "PQR" or head[1] in slices:
            raise ValueError(f"bad slice header {' '.join(head)!r}")
        slices[head[1]] = _read_matrix(it)
    return PencilTensor(slices["P"], slices["Q"], slices["R"])


def write_pencil(f: PencilTensor) -> str:
    out = []
    for name, M in zip("PQR", f.slices):
        out.append(f"slice {name}")
        out += _write_matrix(M)
    return "\n".join(out) + "\n"


def write_resolution(res: MonadResolution) -> str:
    out = []
    for label, mats in (("alpha", res.alpha), ("beta", res.beta)):
        for k, M in enumerate(mats):
            out.append(f"{label} x{k}")
            out += _write_matrix(M)
    return "\n".join(out) + "\n"


def read_resolution(text: str) -> MonadResolution:
    it = _lines(text)
    blocks: dict[str, dict[int, DenseMatrix]] = {"alpha": {}, "beta": {}}
    for _ in range(6):
        label, var = next(it).split()
        blocks[label][int(var.removeprefix("x"))] = _read_matrix(it)
    alpha = tuple(blocks["alpha"][k] for k in range(3))
    beta = tuple(blocks["beta"][k] for k in range(3))
    return MonadResolution(alpha, beta, alpha[0].ncols)
