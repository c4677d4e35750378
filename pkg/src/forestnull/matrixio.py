"""Reading and writing matrices, bases and vectors.

Two interchangeable formats:

* Matrix-Market-style coordinate text: a banner line
  ``%%MatrixMarket matrix coordinate <real|integer|rational> general``,
  an optional ``% field: rational`` / ``% field: gf <p>`` comment, a
  size line, then 1-based ``row col value`` lines.
* JSON: ``{"n": ..., "field": ..., "entries": [[u, v, "value"], ...]}``
  for matrices; basis and vector files carry sparse ``{vertex: value}``
  maps so the sparsity of the output stays visible.

Writers emit canonical text (sorted entries, canonical scalar strings,
trailing newline), so fixed inputs always produce identical bytes.
"""

from __future__ import annotations

import json

from .errors import ParseError
from .fields import Field, QQ, parse_field_spec
from .matrix import AcyclicMatrix, Basis, SparseVector

_BANNER_FIELDS = ("real", "integer", "rational")


def _banner_qualifier(field: Field) -> str:
    return "rational" if field == QQ else "integer"


def format_matrix(m: AcyclicMatrix, fmt: str = "mm") -> str:
    if fmt == "mm":
        lines = [
            "%%MatrixMarket matrix coordinate " + _banner_qualifier(m.field) + " general",
            "% field: " + m.field.name,
            "%d %d %d" % (m.n, m.n, m.nnz()),
        ]
        fmt_scalar = m.field.format
        for u, v, x in _row_major(m):
            lines.append("%d %d %s" % (u + 1, v + 1, fmt_scalar(x)))
        return "\n".join(lines) + "\n"
    if fmt == "json":
        entries = [[u + 1, v + 1, m.field.format(x)] for u, v, x in _row_major(m)]
        doc = {"n": m.n, "field": m.field.name, "entries": entries}
        return json.dumps(doc, indent=2) + "\n"
    raise ParseError("unknown format %r (use 'mm' or 'json')" % fmt)


def _row_major(m: AcyclicMatrix):
    for u in range(m.n):
        yield from ((u, v, x) for v, x in m.row_items(u))


def parse_matrix(text: str) -> AcyclicMatrix:
    stripped = text.lstrip()
    if stripped.startswith("{"):
        return _parse_matrix_json(text)
    return _parse_matrix_mm(text)


def _parse_matrix_mm(text: str) -> AcyclicMatrix:
    lines = text.splitlines()
    if not lines or not lines[0].startswith("%%MatrixMarket"):
        raise ParseError("missing %%MatrixMarket banner", line=1)
    tokens = lines[0].split()
    if (len(tokens) != 5 or tokens[1] != "matrix" or tokens[2] != "coordinate"
            or tokens[3] not in _BANNER_FIELDS or tokens[4] != "general"):
        raise ParseError("unsupported banner %r (expected 'matrix coordinate "
                         "<real|integer|rational> general')" % lines[0], line=1)
    field = None
    size = None
    triples = []
    for idx, raw in enumerate(lines[1:], start=2):
        line = raw.strip()
        if not line:
            continue
        if line.startswith("%"):
            body = line.lstrip("%").strip()
            if body.lower().startswith("field:"):
                try:
                    field = parse_field_spec(body[len("field:"):])
                except Exception as exc:
                    raise ParseError(str(exc), line=idx)
            continue
        parts = line.split()
        if size is None:
            if len(parts) != 3:
                raise ParseError("size line must be 'rows cols nnz'", line=idx)
            try:
                rows, cols, nnz = (int(p) for p in parts)
            except ValueError:
                raise ParseError("size line must hold three integers", line=idx)
            if rows != cols:
                raise ParseError("matrix must be square, got %d x %d" % (rows, cols),
                                 line=idx)
            if field is None:
                field = QQ
            size = (rows, nnz)
            continue
        if len(parts) != 3:
            raise ParseError("entry line must be 'row col value'", line=idx)
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise ParseError("entry indices must be integers", line=idx)
        try:
            value = field.parse(parts[2])
        except Exception as exc:
            raise ParseError(str(exc), line=idx)
        triples.append((u - 1, v - 1, value))
    if size is None:
        raise ParseError("missing size line")
    if len(triples) != size[1]:
        raise ParseError("size line announced %d entries, found %d"
                         % (size[1], len(triples)))
    return AcyclicMatrix.from_entries(size[0], triples, field)


def _parse_matrix_json(text: str) -> AcyclicMatrix:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError("bad JSON: %s" % exc, line=exc.lineno)
    for key in ("n", "entries"):
        if key not in doc:
            raise ParseError("matrix JSON needs a %r key" % key)
    field = parse_field_spec(doc.get("field", "rational"))
    triples = []
    for item in doc["entries"]:
        if not (isinstance(item, list) and len(item) == 3):
            raise ParseError("each entry must be [row, col, value], got %r" % (item,))
        u, v, value = item
        triples.append((int(u) - 1, int(v) - 1, field.coerce(value)))
    return AcyclicMatrix.from_entries(int(doc["n"]), triples, field)


def read_matrix(path) -> AcyclicMatrix:
    with open(path, "r", encoding="ascii") as handle:
        return parse_matrix(handle.read())


def write_matrix(m: AcyclicMatrix, path, fmt: str = "mm"):
    with open(path, "w", encoding="ascii") as handle:
        handle.write(format_matrix(m, fmt))


def format_basis(basis, n: int, field: Field, fmt: str = "mm") -> str:
    """Basis as an n x dimension sparse matrix (one column per vector)."""
    vectors = basis.vectors
    if fmt == "mm":
        nnz = sum(vec.nnz() for vec in vectors)
        lines = [
            "%%MatrixMarket matrix coordinate " + _banner_qualifier(field) + " general",
            "% field: " + field.name,
            "%d %d %d" % (n, len(vectors), nnz),
        ]
        for j, vec in enumerate(vectors, start=1):
            for v in sorted(vec.entries):
                lines.append("%d %d %s" % (v + 1, j, field.format(vec.entries[v])))
        return "\n".join(lines) + "\n"
    if fmt == "json":
        doc = {
            "n": n,
            "field": field.name,
            "dimension": len(vectors),
            "vectors": [_vector_map(vec) for vec in vectors],
        }
        return json.dumps(doc, indent=2) + "\n"
    raise ParseError("unknown format %r (use 'mm' or 'json')" % fmt)


def parse_basis(text: str) -> Basis:
    """Basis files round-trip through the same coordinate/JSON layouts."""
    stripped = text.lstrip()
    if stripped.startswith("{"):
        try:
            doc = json.loads(text)
        except json.JSONDecodeError as exc:
            raise ParseError("bad JSON: %s" % exc, line=exc.lineno)
        field = parse_field_spec(doc.get("field", "rational"))
        n = int(doc["n"])
        vectors = [_vector_from_map(n, field, vec) for vec in doc["vectors"]]
        return Basis(vectors)
    lines = [ln.strip() for ln in text.splitlines()]
    body = [ln for ln in lines if ln and not ln.startswith("%")]
    field = QQ
    for ln in lines:
        if ln.startswith("%") and not ln.startswith("%%"):
            payload = ln.lstrip("%").strip()
            if payload.lower().startswith("field:"):
                field = parse_field_spec(payload[len("field:"):])
    if not body:
        raise ParseError("empty basis file")
    n, dim, _ = (int(p) for p in body[0].split())
    columns = [dict() for _ in range(dim)]
    for ln in body[1:]:
        v, j, value = ln.split()
        columns[int(j) - 1][int(v) - 1] = field.parse(value)
    return Basis([SparseVector(n, field, col) for col in columns])


def _vector_map(vec: SparseVector) -> dict:
    return {str(v + 1): vec.field.format(x) for v, x in sorted(vec.entries.items())}


def _vector_from_map(n: int, field: Field, mapping: dict) -> SparseVector:
    entries = {}
    for key, value in mapping.items():
        entries[int(key) - 1] = field.coerce(value)
    return SparseVector(n, field, entries)


def format_vector(vec: SparseVector) -> str:
    doc = {"n": vec.n, "field": vec.field.name, "vector": _vector_map(vec)}
    return json.dumps(doc, indent=2) + "\n"


def parse_vector(text: str) -> SparseVector:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError("bad JSON: %s" % exc, line=exc.lineno)
    for key in ("n", "vector"):
        if key not in doc:
            raise ParseError("vector JSON needs a %r key" % key)
    field = parse_field_spec(doc.get("field", "rational"))
    return _vector_from_map(int(doc["n"]), field, doc["vector"])


def read_vector(path) -> SparseVector:
    with open(path, "r", encoding="ascii") as handle:
        return parse_vector(handle.read())
