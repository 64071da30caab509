"""Line-oriented matrix documents, one file per expert.

Layout::

    # free comment (dropped)
    #! annotation (kept; used for known-typo notes)
    kind=fcm
    scale=[0,1]
    rows=3
    cols=3
    id=M1                      (optional)
    row_labels=C1 C2 C3        (optional)
    col_labels=C1 C2 C3        (optional)
    0    0.5  0
    0.3  0    I
    0    0.2  0

The header ends at the first line without ``=``; the remaining non-comment
lines form the grid of scalar tokens.
"""

from __future__ import annotations

import os
from dataclasses import dataclass, field
from importlib import resources
from pathlib import Path
from typing import Optional

from .errors import (DocumentSyntaxError, DomainViolation, InputError, ShapeError,
                     ShapeMismatch, TokenError)
from .interval import check_zero_diagonal
from .matrix import Domain, ModelMatrix
from .scalar import format_token, parse_token

KINDS = ("fcm", "ncm", "frm", "nrm", "fam", "bam", "nbam", "fre")
FIXTURE_ENV = "NEUTROMAPS_FIXTURES"
_HEADER_KEYS = ("kind", "scale", "rows", "cols", "id", "row_labels", "col_labels")


@dataclass(frozen=True)
class MatrixDocument:
    kind: str
    matrix: ModelMatrix
    member_id: Optional[str] = None
    annotations: tuple = field(default=())

    @property
    def scale(self) -> Domain:
        return self.matrix.domain


def _split_tokens(line: str):
    """Yield ``(column, token)`` pairs (1-based columns)."""
    col = 0
    for part in line.split():
        col = line.index(part, col)
        yield col + 1, part
        col += len(part)


def parse_document(text: str) -> MatrixDocument:
    header = {}
    annotations = []
    grid_lines = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if line.startswith("#!"):
            annotations.append(line[2:].strip())
            continue
        if not line or line.startswith("#"):
            continue
        if "#" in line:
            line = line[: line.index("#")].rstrip()
        if not grid_lines and "=" in line:
            key, _, value = line.partition("=")
            key = key.strip()
            if key not in _HEADER_KEYS:
                raise DocumentSyntaxError(lineno, 1, f"unknown header key {key!r}")
            if key in header:
                raise DocumentSyntaxError(lineno, 1, f"duplicate header key {key!r}")
            header[key] = (lineno, value.strip())
            continue
        grid_lines.append((lineno, raw))

    for key in ("kind", "scale", "rows", "cols"):
        if key not in header:
            raise DocumentSyntaxError(1, 1, f"missing header key {key!r}")
    kind = header["kind"][1].lower()
    if kind not in KINDS:
        raise DocumentSyntaxError(header["kind"][0], 1, f"kind must be one of {', '.join(KINDS)}")
    try:
        domain = Domain.parse(header["scale"][1])
    except ValueError as exc:
        raise DocumentSyntaxError(header["scale"][0], 1, str(exc)) from None
    dims = {}
    for key in ("rows", "cols"):
        lineno, value = header[key]
        if not value.isdigit() or int(value) < 1:
            raise DocumentSyntaxError(lineno, 1, f"{key} must be a positive integer")
        dims[key] = int(value)

    grid = []
    for r, (lineno, raw) in enumerate(grid_lines, start=1):
        row = []
        for col, tok in _split_tokens(raw.split("#")[0]):
            try:
                row.append(parse_token(tok))
            except TokenError as exc:
                raise DocumentSyntaxError(lineno, col + exc.column - 1, str(exc)) from None
        if len(row) != dims["cols"]:
            raise ShapeError(r, f"has {len(row)} entries, expected {dims['cols']} (line {lineno})")
        grid.append(tuple(row))
    if len(grid) != dims["rows"]:
        raise ShapeError(len(grid), f"grid has {len(grid)} rows, header declares {dims['rows']}")

    labels = {}
    for key in ("row_labels", "col_labels"):
        if key in header:
            labels[key] = tuple(header[key][1].split())
    try:
        matrix = ModelMatrix(tuple(grid), domain, labels.get("row_labels"), labels.get("col_labels"))
    except ShapeMismatch as exc:
        raise ShapeError(0, str(exc)) from None
    if kind in ("fcm", "ncm"):
        check_zero_diagonal(matrix)
    if kind in ("fcm", "frm", "fam", "bam", "fre"):
        for i, row in enumerate(grid):
            for j, x in enumerate(row):
                if x.indet != 0:
                    raise DomainViolation((i, j), x, reason=f"carries I in a {kind} document")
    member_id = header["id"][1] if "id" in header else None
    return MatrixDocument(kind, matrix, member_id, tuple(annotations))


def parse_matrix_document(text: str) -> ModelMatrix:
    return parse_document(text).matrix


def print_document(doc: MatrixDocument) -> str:
    m = doc.matrix
    lines = [f"#! {note}" for note in doc.annotations]
    lines += [f"kind={doc.kind}", f"scale={m.domain}", f"rows={m.rows}", f"cols={m.cols}"]
    if doc.member_id:
        lines.append(f"id={doc.member_id}")
    if m.row_labels:
        lines.append("row_labels=" + " ".join(m.row_labels))
    if m.col_labels:
        lines.append("col_labels=" + " ".join(m.col_labels))
    grid = [[format_token(x) for x in row] for row in m.entries]
    width = max(len(t) for row in grid for t in row)
    lines += [" ".join(t.ljust(width) for t in row).rstrip() for row in grid]
    return "\n".join(lines) + "\n"


def print_matrix_document(m: ModelMatrix, kind: str, member_id=None, annotations=()) -> str:
    return print_document(MatrixDocument(kind, m, member_id, tuple(annotations)))


# ---------------------------------------------------------------- fixtures


def fixture_dir() -> Path:
    """Bundled fixture directory, overridable through ``NEUTROMAPS_FIXTURES``."""
    override = os.environ.get(FIXTURE_ENV)
    if override:
        return Path(override)
    return Path(str(resources.files("neutromaps") / "fixtures"))


def resolve_path(name, base: Optional[Path] = None) -> Path:
    """Find ``name`` as given, under ``base``, or under the fixture directory."""
    path = Path(name)
    candidates = [path] if path.is_absolute() else [
        *([Path(base) / path] if base is not None else []), path, fixture_dir() / path]
    for cand in candidates:
        if cand.is_file():
            return cand
    raise InputError(f"cannot find {name} (looked in {', '.join(str(c) for c in candidates)})")


def load_document(name, base: Optional[Path] = None) -> MatrixDocument:
    path = resolve_path(name, base)
    try:
        doc = parse_document(path.read_text(encoding="utf-8"))
    except InputError as exc:
        raise _with_path(exc, path) from None
    if doc.member_id is None:
        doc = MatrixDocument(doc.kind, doc.matrix, path.stem, doc.annotations)
    return doc


def _with_path(exc: InputError, path: Path) -> InputError:
    exc.args = (f"{path}: {exc}",)
    return exc
