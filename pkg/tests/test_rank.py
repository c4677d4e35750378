import random
from fractions import Fraction

import pytest

from forestnull import (PrimeField, QQ, AcyclicMatrix, Basis, ValidationError,
                        adjacency_matrix, build_forest, core_vertices,
                        in_row_space, maximum_matching, rank_basis,
                        rank_normalization, support,
                        supported_neighborhood_vector, transfer_rank,
                        vertex_normalization)
from forestnull.generate import random_matrix
from forestnull import oracle
from conftest import sv
from treegen import free_trees

GF = PrimeField(10007)


def test_supported_neighborhood_vector(m_p3, m_star):
    info = support(m_p3.pattern)
    assert supported_neighborhood_vector(m_p3, info, 1) == sv(3, {0: 3, 2: 5})
    info_s = support(m_star.pattern)
    assert supported_neighborhood_vector(m_star, info_s, 0) == sv(4, {1: 1, 2: 2, 3: 3})
    with pytest.raises(ValidationError, match="support"):
        supported_neighborhood_vector(m_p3, info, 0)


def p4_matrix():
    return AcyclicMatrix.from_entries(
        4, [(0, 1, 2), (1, 0, 3), (1, 2, 5), (2, 1, 7), (2, 3, 4), (3, 2, 9)])


def test_supported_neighborhood_vector_zero_when_no_support():
    p4 = p4_matrix()
    info = support(p4.pattern)
    for v in range(4):
        assert supported_neighborhood_vector(p4, info, v).is_zero()


def test_rank_basis_m_p3(m_p3):
    basis = rank_basis(m_p3)
    assert [v.entries for v in basis.vectors] == [{1: 1}, {0: 3, 2: 5}]
    assert basis.dimension == 2


def test_rank_basis_adjacency(p3):
    basis = rank_basis(adjacency_matrix(p3))
    assert [v.entries for v in basis.vectors] == [{1: 1}, {0: 1, 2: 1}]


def test_rank_basis_zero_matrix():
    m = AcyclicMatrix.from_entries(1, [])
    assert rank_basis(m).vectors == []


def test_rank_basis_spans_row_space():
    for trial in range(25):
        rng = random.Random(trial)
        n = rng.randint(1, 40)
        field = QQ if trial % 2 else GF
        m = random_matrix(n, 71 * trial + 5, field, rng.randint(1, min(3, n)))
        basis = rank_basis(m)
        nu = maximum_matching(m.pattern).nu
        assert basis.dimension == 2 * nu
        reference = oracle.dense_row_space(m)
        assert oracle.same_span(Basis(list(basis.vectors)), reference)
        # complementarity
        assert basis.dimension + oracle.dense_null_space(m).dimension == n


def test_core_vertices(m_p3, m_star):
    assert core_vertices(m_p3) == {1}
    assert core_vertices(m_star) == {0}
    assert core_vertices(p4_matrix()) == frozenset()


def test_vertex_normalization(m_p3, m_star):
    assert vertex_normalization(m_p3, 1).diag == [3, 1, 5]
    assert vertex_normalization(m_star, 0).diag == [1, 1, 2, 3]
    a = adjacency_matrix(m_p3.pattern)
    assert vertex_normalization(a, 1).diag == [1, 1, 1]
    with pytest.raises(ValidationError, match="support"):
        vertex_normalization(m_p3, 0)


def test_rank_normalization(m_p3):
    r = rank_normalization(m_p3)
    assert r.diag == [3, 1, 5]
    assert r.apply(sv(3, {0: 1, 2: 1})) == sv(3, {0: 3, 2: 5})
    a = adjacency_matrix(m_p3.pattern)
    assert rank_normalization(a).diag == [1, 1, 1]


def test_rank_normalization_is_product_of_vertex_normalizations():
    for n in range(2, 7):
        for idx, edges in enumerate(free_trees(n)):
            f = build_forest(n, list(edges))
            triples = []
            rng = random.Random(idx)
            for u, v in f.edges:
                triples.append((u, v, Fraction(rng.randint(1, 9))))
                triples.append((v, u, Fraction(rng.randint(1, 9))))
            m = AcyclicMatrix.from_entries(n, triples, QQ)
            info = support(f)
            expected = [QQ.one] * n
            for v in range(n):
                if v in info.supp:
                    continue
                step = vertex_normalization(m, v, info).diag
                expected = [a * b for a, b in zip(expected, step)]
            assert rank_normalization(m).diag == expected


def test_rank_normalization_carries_pattern_row_space():
    # scaled pattern row basis spans the matrix row space, vector by vector
    for trial in range(15):
        rng = random.Random(trial)
        n = rng.randint(2, 25)
        m = random_matrix(n, 400 + trial, QQ, rng.randint(1, min(3, n)))
        a = adjacency_matrix(m.pattern)
        r = rank_normalization(m)
        info = support(m.pattern)
        scaled = [r.apply(vec) for vec in rank_basis(a).vectors]
        assert oracle.same_span(Basis(scaled), oracle.dense_row_space(m))
        # per-vector: scaled pattern vectors are scalar multiples of the
        # matrix's own structured vectors
        non_supp = [v for v in range(n) if v not in info.supp]
        for v in non_supp:
            sv_m = supported_neighborhood_vector(m, info, v)
            sv_a = r.apply(supported_neighborhood_vector(a, info, v))
            if sv_m.is_zero():
                assert sv_a.is_zero()
                continue
            ratios = {sv_a.entries[w] / sv_m.entries[w] for w in sv_m.entries}
            assert len(ratios) == 1 and 0 not in ratios


def test_in_row_space(m_p3):
    assert in_row_space(m_p3, sv(3, {1: 1}))
    assert in_row_space(m_p3, sv(3, {0: 3, 2: 5}))
    assert not in_row_space(m_p3, sv(3, {0: 1}))
    assert in_row_space(m_p3, sv(3, {}))


def test_transfer_rank(m_p3):
    a = adjacency_matrix(m_p3.pattern)
    assert transfer_rank(a, m_p3, sv(3, {0: 1, 2: 1})) == sv(3, {0: 3, 2: 5})
    assert transfer_rank(m_p3, a, sv(3, {0: 3, 2: 5})) == sv(3, {0: 1, 2: 1})
    x = sv(3, {1: 7})
    assert transfer_rank(m_p3, m_p3, x) == x


def test_transfer_rank_validates(m_p3, m_star):
    with pytest.raises(ValidationError, match="pattern"):
        transfer_rank(m_p3, m_star, sv(3, {1: 1}))
    with pytest.raises(ValidationError, match="row space"):
        transfer_rank(m_p3, m_p3, sv(3, {0: 1}))


def test_transfer_rank_round_trip():
    for trial in range(10):
        rng = random.Random(trial)
        n = rng.randint(2, 20)
        m = random_matrix(n, trial, QQ, rng.randint(1, min(2, n)))
        other = random_matrix(n, 1000 + trial, QQ, 1)
        if m.pattern.edges != other.pattern.edges:
            # rebuild the second matrix on m's pattern
            triples = []
            for u, v in m.pattern.edges:
                triples.append((u, v, Fraction(rng.randint(1, 9))))
                triples.append((v, u, Fraction(rng.randint(1, 9))))
            other = AcyclicMatrix.from_entries(n, triples, QQ)
        for row_vec in oracle.dense_row_space(m).vectors:
            out = transfer_rank(m, other, row_vec)
            assert in_row_space(other, out)
            assert transfer_rank(other, m, out) == row_vec
