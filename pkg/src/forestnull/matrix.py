"""Zero-diagonal matrices whose nonzero pattern is a forest.

An ``AcyclicMatrix`` stores both orientations of every edge explicitly:
the (u, v) and (v, u) entries are independent values, only the *pattern*
has to be symmetric.  Values live in flat arrays aligned with the
pattern's CSR neighbor array: slot j holds the row-side entry
M[v, neighbors[j]] in ``row_flat`` and the column-side entry
M[neighbors[j], v] in ``col_flat`` for the vertex v owning slot j.
``entries`` offers the same data as a plain (row, col) -> value dict.
Instances are immutable after construction.
"""

from __future__ import annotations

from bisect import bisect_left
from dataclasses import dataclass, field as dc_field

from .errors import ValidationError
from .fields import Field, QQ, require_same_field
from .forest import Forest, build_forest


@dataclass(eq=False)
class SparseVector:
    """Vertex-indexed vector storing only its nonzero coordinates."""

    n: int
    field: Field
    entries: dict  # vertex -> nonzero field element

    def __post_init__(self):
        zero = self.field.zero
        bad = [v for v in self.entries if not (0 <= v < self.n)]
        if bad:
            raise ValidationError("vector index %r out of range for n=%d" % (bad[0], self.n))
        self.entries = {v: x for v, x in self.entries.items() if x != zero}

    def support(self) -> frozenset:
        return frozenset(self.entries)

    def get(self, v: int):
        return self.entries.get(v, self.field.zero)

    def is_zero(self) -> bool:
        return not self.entries

    def nnz(self) -> int:
        return len(self.entries)

    def scale(self, c) -> "SparseVector":
        if c == self.field.zero:
            return SparseVector(self.n, self.field, {})
        mul = self.field.mul
        return SparseVector(self.n, self.field,
                            {v: mul(x, c) for v, x in self.entries.items()})

    def dot(self, other: "SparseVector"):
        require_same_field(self.field, other.field, "vectors")
        if self.n != other.n:
            raise ValidationError("dimension mismatch: %d vs %d" % (self.n, other.n))
        small, big = self.entries, other.entries
        if len(big) < len(small):
            small, big = big, small
        acc = self.field.zero
        add, mul = self.field.add, self.field.mul
        for v, x in small.items():
            y = big.get(v)
            if y is not None:
                acc = add(acc, mul(x, y))
        return acc

    def add(self, other: "SparseVector") -> "SparseVector":
        require_same_field(self.field, other.field, "vectors")
        if self.n != other.n:
            raise ValidationError("dimension mismatch: %d vs %d" % (self.n, other.n))
        out = dict(self.entries)
        addop = self.field.add
        zero = self.field.zero
        for v, y in other.entries.items():
            s = addop(out.get(v, zero), y)
            if s == zero:
                out.pop(v, None)
            else:
                out[v] = s
        return SparseVector(self.n, self.field, out)

    def to_list(self) -> list:
        zero = self.field.zero
        return [self.entries.get(v, zero) for v in range(self.n)]

    def __eq__(self, other):
        return (isinstance(other, SparseVector) and self.n == other.n
                and self.field == other.field and self.entries == other.entries)

    def __repr__(self):
        inside = ", ".join("%d: %s" % (v, self.field.format(x))
                           for v, x in sorted(self.entries.items()))
        return "SparseVector(n=%d, {%s})" % (self.n, inside)


def unit_vector(n: int, field: Field, v: int) -> SparseVector:
    return SparseVector(n, field, {v: field.one})


@dataclass(eq=True)
class Basis:
    """An ordered, linearly independent list of sparse vectors."""

    vectors: list
    dimension: int = dc_field(init=False)
    total_nonzeros: int = dc_field(init=False)

    def __post_init__(self):
        self.dimension = len(self.vectors)
        self.total_nonzeros = sum(vec.nnz() for vec in self.vectors)


class AcyclicMatrix:
    """Square matrix over an exact field, zero diagonal, forest pattern."""

    __slots__ = ("n", "field", "pattern", "row_flat", "col_flat", "_entries",
                 "_null_basis", "_rank_normalization")

    def __init__(self, n: int, field: Field, pattern: Forest,
                 row_flat: list, col_flat: list):
        self.n = n
        self.field = field
        self.pattern = pattern
        self.row_flat = row_flat
        self.col_flat = col_flat
        self._entries = None
        self._null_basis = None          # memoized by scaling.null_basis
        self._rank_normalization = None  # memoized by rank.rank_normalization

    @classmethod
    def from_entries(cls, n: int, triples, field: Field = QQ) -> "AcyclicMatrix":
        """Build and validate a matrix from (row, col, value) triples.

        Rejects diagonal entries, explicit zeros, duplicate positions,
        asymmetric patterns and cyclic patterns.
        """
        coerce = field.coerce
        is_canonical = field.is_canonical
        zero = field.zero
        items = []
        append = items.append
        for t in triples:
            u, v, value = t
            if not (0 <= u < n and 0 <= v < n):
                raise ValidationError("entry (%r, %r) out of range for n=%d" % (u, v, n))
            if u == v:
                raise ValidationError("nonzero diagonal entry at vertex %d" % u)
            if is_canonical(value):
                if value == zero:
                    raise ValidationError("explicit zero entry at (%d, %d)" % (u, v))
                append(t if type(t) is tuple else (u, v, value))
            else:
                x = coerce(value)
                if x == zero:
                    raise ValidationError("explicit zero entry at (%d, %d)" % (u, v))
                append((u, v, x))
        items.sort()
        prev_u = prev_v = -1
        edges = []
        push_edge = edges.append
        for u, v, _ in items:
            if u == prev_u and v == prev_v:
                raise ValidationError("duplicate entry at (%d, %d)" % (u, v))
            prev_u, prev_v = u, v
            if u < v:
                push_edge((u, v))
        if 2 * len(edges) != len(items):
            _raise_asymmetric(items)
        pattern = build_forest(n, edges)

        # items are row-major sorted; if the pattern is symmetric they
        # line up slot for slot with the CSR neighbor array.
        neighbors, offsets = pattern.neighbors, pattern.offsets
        for j, (u, v, _) in enumerate(items):
            if neighbors[j] != v or not (offsets[u] <= j < offsets[u + 1]):
                _raise_asymmetric(items)
        row_flat = [x for _, _, x in items]
        col_flat = [None] * len(items)
        cursor = offsets[:n]
        for j, v in enumerate(neighbors):
            col_flat[cursor[v]] = row_flat[j]
            cursor[v] += 1
        return cls(n, field, pattern, row_flat, col_flat)

    @property
    def entries(self) -> dict:
        """(row, col) -> value view of the stored entries (built lazily)."""
        if self._entries is None:
            neighbors, offsets = self.pattern.neighbors, self.pattern.offsets
            row_flat = self.row_flat
            out = {}
            for u in range(self.n):
                for j in range(offsets[u], offsets[u + 1]):
                    out[(u, neighbors[j])] = row_flat[j]
            self._entries = out
        return self._entries

    def entry(self, u: int, v: int):
        offsets = self.pattern.offsets
        lo, hi = offsets[u], offsets[u + 1]
        nbs = self.pattern.neighbors
        i = bisect_left(nbs, v, lo, hi)
        if i < hi and nbs[i] == v:
            return self.row_flat[i]
        return self.field.zero

    def nnz(self) -> int:
        return len(self.row_flat)

    def apply(self, x: SparseVector) -> SparseVector:
        """Exact product M x; touches only the entries next to supp(x)."""
        require_same_field(self.field, x.field, "matrix and vector")
        if x.n != self.n:
            raise ValidationError("dimension mismatch: matrix is %d, vector is %d"
                                  % (self.n, x.n))
        zero = self.field.zero
        add, mul = self.field.add, self.field.mul
        neighbors, offsets = self.pattern.neighbors, self.pattern.offsets
        col_flat = self.col_flat
        out = {}
        for v, xv in x.entries.items():
            for j in range(offsets[v], offsets[v + 1]):
                u = neighbors[j]
                term = mul(col_flat[j], xv)
                s = add(out.get(u, zero), term)
                if s == zero:
                    out.pop(u, None)
                else:
                    out[u] = s
        return SparseVector(self.n, self.field, out)

    def transpose(self) -> "AcyclicMatrix":
        return AcyclicMatrix(self.n, self.field, self.pattern,
                             list(self.col_flat), list(self.row_flat))

    def row(self, u: int) -> SparseVector:
        lo, hi = self.pattern.offsets[u], self.pattern.offsets[u + 1]
        return SparseVector(self.n, self.field,
                            dict(zip(self.pattern.neighbors[lo:hi],
                                     self.row_flat[lo:hi])))

    def row_items(self, u: int):
        """(column, value) pairs of row u, columns ascending."""
        lo, hi = self.pattern.offsets[u], self.pattern.offsets[u + 1]
        return zip(self.pattern.neighbors[lo:hi], self.row_flat[lo:hi])

    def col_items(self, v: int):
        """(row, value) pairs of column v, rows ascending."""
        lo, hi = self.pattern.offsets[v], self.pattern.offsets[v + 1]
        return zip(self.pattern.neighbors[lo:hi], self.col_flat[lo:hi])

    def __eq__(self, other):
        return (isinstance(other, AcyclicMatrix) and self.n == other.n
                and self.field == other.field
                and self.pattern.edges == other.pattern.edges
                and self.row_flat == other.row_flat)

    def __repr__(self):
        return "AcyclicMatrix(n=%d, nnz=%d, field=%s)" % (self.n, self.nnz(), self.field.name)


def _raise_asymmetric(items):
    lo, hi = set(), set()
    for u, v, _ in items:
        if u < v:
            lo.add((u, v))
        else:
            hi.add((v, u))
    only_lo = lo - hi
    if only_lo:
        a, b = min(only_lo)
    else:
        b, a = min(hi - lo)
    raise ValidationError(
        "asymmetric pattern: entry (%d, %d) present but (%d, %d) missing"
        % (a, b, b, a))


def adjacency_matrix(f: Forest, field: Field = QQ) -> AcyclicMatrix:
    """The matrix with a 1 at both orientations of every edge of f."""
    ones = [field.one] * len(f.neighbors)
    return AcyclicMatrix(f.vertex_count, field, f, ones, list(ones))


def same_pattern(m: AcyclicMatrix, n_mat: AcyclicMatrix) -> bool:
    return m.n == n_mat.n and m.pattern.edges == n_mat.pattern.edges
