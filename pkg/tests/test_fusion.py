"""Fusion-ring oracles.

The recursion tower is held against the Verlinde numbers (an independent
construction through the s matrix), and the q-deformed dimension product
formula against the Perron vector of the generator graph.
"""

import numpy as np
import pytest

from fusioncat import fusion as fr
from fusioncat import modular as md
from fusioncat import weights as wt

A3 = wt.algebra("A", 3)


@pytest.mark.parametrize("k", [1, 2, 3, 4])
def test_tower_matches_verlinde(k):
    data = md.modular_data(A3, k)
    oracle = md.verlinde_matrices(data)
    built = fr.fusion_matrices(A3, k)
    assert set(built) == set(oracle)
    for la in oracle:
        assert np.array_equal(built[la], oracle[la]), la


def test_ring_closure_a3_level4():
    mats = fr.fusion_matrices(A3, 4)
    labels = wt.enumerate_alcove(A3, 4)
    idx = {la: i for i, la in enumerate(labels)}
    rng = np.random.default_rng(7)
    for _ in range(12):
        a, b = (labels[rng.integers(35)] for _ in range(2))
        lhs = mats[a] @ mats[b]
        rhs = sum(int(mats[a][idx[b], idx[c]]) * mats[c] for c in labels)
        assert np.array_equal(lhs, rhs), (a, b)


def test_conjugation_is_transpose():
    mats = fr.fusion_matrices(A3, 4)
    for la, N in mats.items():
        assert np.array_equal(mats[wt.conjugate(A3, la)], N.T)


def test_quantum_dimensions_closed_forms():
    dims = fr.quantum_dimensions(A3, 4)
    labels = wt.enumerate_alcove(A3, 4)
    idx = {la: i for i, la in enumerate(labels)}
    sq2 = np.sqrt(2)
    beta = np.sqrt(2 * (2 + sq2))
    assert abs(dims[idx[(1, 0, 0)]] - beta) < 1e-12
    assert abs(dims[idx[(0, 1, 0)]] - (2 + sq2)) < 1e-12
    assert abs(dims[idx[(0, 0, 1)]] - beta) < 1e-12
    assert abs(dims[idx[(0, 0, 0)]] - 1) < 1e-12
    # total mass of the level-4 ring
    assert abs((dims**2).sum() - 128 * (3 + 2 * sq2)) < 1e-6


def test_quantum_dimensions_match_perron():
    dims = fr.quantum_dimensions(A3, 4)
    mats = fr.fusion_matrices(A3, 4)
    adj = mats[(1, 0, 0)] + mats[(0, 1, 0)] + mats[(0, 0, 1)]
    pf = fr.perron_vector(adj)
    assert np.abs(pf - dims).max() < 1e-9
    # and the generator matrix itself has PF eigenvalue beta
    beta = np.sqrt(2 * (2 + np.sqrt(2)))
    assert np.abs(mats[(1, 0, 0)] @ dims - beta * dims).max() < 1e-9


def test_quantum_dimensions_match_smatrix_row():
    data = md.modular_data(A3, 4)
    dims = fr.quantum_dimensions(A3, 4)
    assert np.abs(data.s[0] / data.s[0, 0] - dims).max() < 1e-9


def test_generator_graph_level1():
    mats = fr.fusion_matrices(A3, 1)
    # at level 1 the generator permutes the four vertices cyclically
    N = mats[(1, 0, 0)]
    assert (N.sum(axis=0) == 1).all() and (N.sum(axis=1) == 1).all()
    assert np.array_equal(np.linalg.matrix_power(N, 4), np.eye(4, dtype=np.int64))
