"""Brute-force ground truth, algorithmically independent of the fast path.

Exact Gaussian elimination (first-nonzero pivoting, reduced echelon
form), a tree-DP matching number, exhaustive independent-set
enumeration, and a minimum-total-support search over column subsets.
Nothing here shares matching/support/scaling code with the rest of the
package; it exists to catch systematic bugs and is only wired into
tests and the CLI's cross-check paths.

Size caps: the elimination routines refuse instances above the oracle
bound (default 512, overridable through FORESTNULL_ORACLE_BOUND); the
exponential searches have their own hard caps.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from itertools import combinations

from .errors import OracleBoundError
from .forest import Forest
from .matrix import AcyclicMatrix, Basis, SparseVector

DEFAULT_ORACLE_BOUND = 512
MIN_SUPPORT_BOUND = 10
MIS_BOUND = 12


def oracle_bound() -> int:
    value = os.environ.get("FORESTNULL_ORACLE_BOUND")
    if value is None:
        return DEFAULT_ORACLE_BOUND
    try:
        return int(value)
    except ValueError:
        raise OracleBoundError("FORESTNULL_ORACLE_BOUND must be an integer, got %r" % value)


def _check_bound(n: int, cap: int, what: str):
    if n > cap:
        raise OracleBoundError("%s limited to n <= %d, got n = %d" % (what, cap, n))


def _rref(rows, n_cols, field):
    """In-place reduced echelon form of sparse dict rows.

    Pivot choice is "first row with a nonzero in the column", scanning
    columns left to right, i.e. plain dense elimination semantics; the
    dict storage only skips arithmetic on zeros.
    """
    inv, mul, sub = field.inv, field.mul, field.sub
    zero = field.zero
    pivots = []
    piv_r = 0
    n_rows = len(rows)
    for c in range(n_cols):
        hit = -1
        for r in range(piv_r, n_rows):
            if c in rows[r]:
                hit = r
                break
        if hit < 0:
            continue
        rows[piv_r], rows[hit] = rows[hit], rows[piv_r]
        prow = rows[piv_r]
        scale = inv(prow[c])
        for k in list(prow):
            prow[k] = mul(prow[k], scale)
        for r in range(n_rows):
            if r == piv_r:
                continue
            row = rows[r]
            coef = row.get(c)
            if coef is None:
                continue
            for k, v in prow.items():
                s = sub(row.get(k, zero), mul(coef, v))
                if s == zero:
                    row.pop(k, None)
                else:
                    row[k] = s
        pivots.append(c)
        piv_r += 1
    return rows[:piv_r], pivots


def _matrix_rows(m: AcyclicMatrix):
    return [dict(m.row_items(u)) for u in range(m.n)]


@dataclass
class DenseAnalysis:
    null_basis: Basis
    row_basis: Basis
    rank: int
    null_support: frozenset


def dense_analysis(m: AcyclicMatrix) -> DenseAnalysis:
    """One elimination, all the derived data."""
    _check_bound(m.n, oracle_bound(), "dense elimination oracle")
    field = m.field
    rref_rows, pivots = _rref(_matrix_rows(m), m.n, field)
    pivot_set = set(pivots)
    free_cols = [c for c in range(m.n) if c not in pivot_set]
    neg = field.neg
    null_vectors = []
    for fc in free_cols:
        entries = {fc: field.one}
        for r, pc in enumerate(pivots):
            coef = rref_rows[r].get(fc)
            if coef is not None:
                entries[pc] = neg(coef)
        null_vectors.append(SparseVector(m.n, field, entries))
    row_vectors = [SparseVector(m.n, field, dict(row)) for row in rref_rows]
    null_support = frozenset(v for vec in null_vectors for v in vec.entries)
    return DenseAnalysis(Basis(null_vectors), Basis(row_vectors), len(pivots), null_support)


def dense_null_space(m: AcyclicMatrix) -> Basis:
    return dense_analysis(m).null_basis


def dense_row_space(m: AcyclicMatrix) -> Basis:
    return dense_analysis(m).row_basis


def rank(m: AcyclicMatrix) -> int:
    return dense_analysis(m).rank


class _Echelon:
    """Incremental echelon form used for independence and span tests."""

    def __init__(self, field):
        self.field = field
        self.rows = {}  # pivot index -> normalized row dict

    def reduce(self, vec: SparseVector) -> dict:
        field = self.field
        zero = field.zero
        mul, sub = field.mul, field.sub
        work = dict(vec.entries)
        for p in sorted(self.rows):
            coef = work.get(p)
            if coef is None:
                continue
            row = self.rows[p]
            for k, v in row.items():
                s = sub(work.get(k, zero), mul(coef, v))
                if s == zero:
                    work.pop(k, None)
                else:
                    work[k] = s
        return work

    def insert(self, vec: SparseVector) -> bool:
        """Add vec if independent of what is already here."""
        work = self.reduce(vec)
        if not work:
            return False
        p = min(work)
        inv = self.field.inv
        mul = self.field.mul
        scale = inv(work[p])
        self.rows[p] = {k: mul(v, scale) for k, v in work.items()}
        return True

    def contains(self, vec: SparseVector) -> bool:
        return not self.reduce(vec)


def same_span(a: Basis, b: Basis) -> bool:
    """Mutual membership of two bases' span, by exact reduction."""
    if a.dimension != b.dimension:
        return False
    if a.dimension == 0:
        return True
    field = a.vectors[0].field
    ech_a, ech_b = _Echelon(field), _Echelon(field)
    for vec in a.vectors:
        ech_a.insert(vec)
    for vec in b.vectors:
        ech_b.insert(vec)
    return (all(ech_b.contains(vec) for vec in a.vectors)
            and all(ech_a.contains(vec) for vec in b.vectors))


def min_support_total(m: AcyclicMatrix) -> int:
    """Minimum total nonzero count over all bases of the null space.

    Solves the restricted system for every column subset in increasing
    size and greedily keeps independent vectors; by the matroid greedy
    argument the selected basis minimizes the summed support sizes.
    """
    _check_bound(m.n, MIN_SUPPORT_BOUND, "minimum-support search")
    field = m.field
    target = m.n - dense_analysis(m).rank
    if target == 0:
        return 0
    ech = _Echelon(field)
    total = 0
    found = 0
    for size in range(1, m.n + 1):
        for cols in combinations(range(m.n), size):
            rows = [{} for _ in range(m.n)]
            for j, c in enumerate(cols):
                for u, x in m.col_items(c):
                    rows[u][j] = x
            rref_rows, pivots = _rref(rows, size, field)
            pivot_set = set(pivots)
            neg = field.neg
            for fc in range(size):
                if fc in pivot_set:
                    continue
                entries = {cols[fc]: field.one}
                for r, pc in enumerate(pivots):
                    coef = rref_rows[r].get(fc)
                    if coef is not None:
                        entries[cols[pc]] = neg(coef)
                vec = SparseVector(m.n, field, entries)
                if ech.insert(vec):
                    total += vec.nnz()
                    found += 1
                    if found == target:
                        return total
    return total


def _dp_matching_number(f: Forest, skip: int = -1) -> int:
    """Matching number by subtree DP (independent of the greedy code)."""
    n = f.vertex_count
    adjacency = f.adjacency
    state = [0] * n  # 0 new, 1 opened, 2 done
    if skip >= 0:
        state[skip] = 2
    unmatched = [0] * n  # best size with the vertex left unmatched
    best = [0] * n       # best size, vertex free to match a child
    total = 0
    for r in range(n):
        if state[r] != 0:
            continue
        stack = [(r, -1)]
        while stack:
            v, parent = stack[-1]
            if state[v] == 0:
                state[v] = 1
                for c in adjacency[v]:
                    if c != parent and state[c] == 0:
                        stack.append((c, v))
            else:
                stack.pop()
                state[v] = 2
                base = 0
                gain = 0
                for c in adjacency[v]:
                    if c == parent or (skip >= 0 and c == skip):
                        continue
                    base += best[c]
                    g = 1 + unmatched[c] - best[c]
                    if g > gain:
                        gain = g
                unmatched[v] = base
                best[v] = base + gain
        total += best[r]
    return total


def support_by_matching(f: Forest) -> frozenset:
    """{v : deleting v does not drop the matching number}."""
    nu = _dp_matching_number(f)
    return frozenset(v for v in range(f.vertex_count)
                     if _dp_matching_number(f, skip=v) == nu)


def support_by_mis(f: Forest) -> frozenset:
    """Intersection of all maximum independent sets, by exhaustive
    enumeration of the independent sets."""
    n = f.vertex_count
    _check_bound(n, MIS_BOUND, "independent-set enumeration")
    if n == 0:
        return frozenset()
    nbr = [0] * n
    for u, v in f.edges:
        nbr[u] |= 1 << v
        nbr[v] |= 1 << u
    state = {"best": -1, "inter": 0}

    def explore(i, chosen, size):
        if size + (n - i) < state["best"]:
            return
        if i == n:
            if size > state["best"]:
                state["best"] = size
                state["inter"] = chosen
            elif size == state["best"]:
                state["inter"] &= chosen
            return
        if not (chosen & nbr[i]):
            explore(i + 1, chosen | (1 << i), size + 1)
        explore(i + 1, chosen, size)

    explore(0, 0, 0)
    inter = state["inter"]
    return frozenset(v for v in range(n) if inter >> v & 1)
