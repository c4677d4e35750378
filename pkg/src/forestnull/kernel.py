"""Combinatorics on the pattern forest.

Maximum matching, the support of the kernel (vertices that can carry a
nonzero coordinate in a null vector), and the sparsest {-1, 0, +1} basis
of the null space of the forest's adjacency matrix.

Everything here is deterministic: the matching processes vertices in
post-order of a DFS started at the smallest id of each component, with
neighbors visited ascending, so repeated runs produce identical output.
All functions are pure; components could be processed concurrently and
merged in component order without changing any result.
"""

from __future__ import annotations

from dataclasses import dataclass

from .fields import Field, QQ
from .forest import Forest
from .matrix import Basis, SparseVector


@dataclass(eq=True)
class MatchingInfo:
    partner: list   # per-vertex matched partner, or None
    nu: int         # matching number
    exposed: frozenset  # unmatched vertices

    def is_matching_edge(self, u: int, v: int) -> bool:
        return self.partner[u] == v


@dataclass(eq=True)
class SupportInfo:
    supp: frozenset   # vertices with a nonzero coordinate in some null vector
    core: frozenset   # neighbors of supp
    s_set: frozenset  # supp | core


def maximum_matching(f: Forest) -> MatchingInfo:
    """Greedy leaf-first matching; maximum on forests.

    One iterative DFS per component (root = smallest id, children
    ascending); a vertex is matched to its parent at post-visit time
    exactly when both are still free.  The result is deterministic, so
    it is memoized on the forest.
    """
    if f._matching is not None:
        return f._matching
    n = f.vertex_count
    neighbors, offsets = f.neighbors, f.offsets
    parent = [-2] * n  # -2 = unvisited, -1 = root
    partner = [-1] * n
    for r in range(n):
        if parent[r] != -2:
            continue
        parent[r] = -1
        stack = [r]
        cursor = [offsets[r]]
        while stack:
            v = stack[-1]
            j = cursor[-1]
            end = offsets[v + 1]
            child = -1
            while j < end:
                c = neighbors[j]
                j += 1
                if parent[c] == -2:
                    child = c
                    break
            cursor[-1] = j
            if child >= 0:
                parent[child] = v
                stack.append(child)
                cursor.append(offsets[child])
            else:
                stack.pop()
                cursor.pop()
                p = parent[v]
                if p >= 0 and partner[v] < 0 and partner[p] < 0:
                    partner[v] = p
                    partner[p] = v
    exposed = frozenset(v for v in range(n) if partner[v] < 0)
    nu = (n - len(exposed)) // 2
    info = MatchingInfo([p if p >= 0 else None for p in partner], nu, exposed)
    f._matching = info
    return info


def null_dimension(f: Forest) -> int:
    return f.vertex_count - 2 * maximum_matching(f).nu


def support(f: Forest, matching: MatchingInfo = None) -> SupportInfo:
    """Support, core and their union for the forest's null space.

    supp is every vertex reachable from an unmatched vertex by an
    alternating path of even length (non-matching edge first).  This is
    exactly {v : removing v keeps the matching number unchanged}, and
    also the intersection of all maximum independent sets; the test
    suite checks both characterizations against brute force.
    """
    if matching is None:
        matching = maximum_matching(f)
    if f._support is not None and matching is f._matching:
        return f._support
    n = f.vertex_count
    partner = matching.partner
    neighbors, offsets = f.neighbors, f.offsets
    in_supp = bytearray(n)
    queue = sorted(matching.exposed)
    for v in queue:
        in_supp[v] = 1
    head = 0
    push = queue.append
    while head < len(queue):
        w = queue[head]
        head += 1
        pw = partner[w]
        for j in range(offsets[w], offsets[w + 1]):
            a = neighbors[j]
            if a == pw:
                continue
            b = partner[a]
            # a is matched: an unmatched a would extend to an augmenting path.
            if b is not None and not in_supp[b]:
                in_supp[b] = 1
                push(b)
    supp = frozenset(queue)
    core = set()
    core_add = core.add
    for v in queue:
        for j in range(offsets[v], offsets[v + 1]):
            core_add(neighbors[j])
    core -= supp
    info = SupportInfo(supp, frozenset(core), frozenset(supp | core))
    if matching is f._matching:
        f._support = info
    return info


def sparsest_null_basis(f: Forest, field: Field = QQ,
                        matching: MatchingInfo = None) -> Basis:
    """Sparsest basis of the null space of the forest's adjacency matrix.

    One vector per unmatched vertex u (ascending): coordinate +1 at u,
    then walking non-matching edge / matching edge pairs outward flips
    the sign at each step.  Entries stay in {-1, 0, +1}, the vectors are
    an identity pattern on the unmatched vertices, and the total nonzero
    count is minimum over all bases (verified exhaustively in tests).
    """
    if matching is None:
        matching = maximum_matching(f)
    n = f.vertex_count
    partner = matching.partner
    neighbors, offsets = f.neighbors, f.offsets
    one = field.one
    neg = field.neg
    vectors = []
    for u in sorted(matching.exposed):
        coeff = {u: one}
        stack = [u]
        while stack:
            w = stack.pop()
            cw = coeff[w]
            pw = partner[w]
            for j in range(offsets[w], offsets[w + 1]):
                a = neighbors[j]
                if a == pw:
                    continue
                b = partner[a]
                if b is not None and b not in coeff:
                    coeff[b] = neg(cw)
                    stack.append(b)
        vectors.append(SparseVector(n, field, coeff))
    return Basis(vectors)
