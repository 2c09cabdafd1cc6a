"""Embedding-scan and invariant-solver oracles.

The rank-1 scan results are classical and fully known; they pin the charge
arithmetic. The rank-2-in-rank-1 branching fixture has a hand-checkable
solution (the even-level diagonal-pair invariant), solved here end to end.
"""

from fractions import Fraction as F

import numpy as np
import pytest

from fusioncat import embedding as emb
from fusioncat import modular as md
from fusioncat import weights as wt


def test_catalog_loads():
    cat = emb.load_catalog()
    names = {a.compact_name for a in cat}
    assert {"SU(2)", "SU(6)", "Spin(15)", "SU(10)", "Spin(20)", "G2", "E8"} <= names
    spin15 = next(a for a in cat if a.compact_name == "Spin(15)")
    assert spin15.dim == 105 and spin15.dual_coxeter == 13


def test_scan_su2():
    sols = emb.scan_embeddings("SU(2)")
    got = {(s.ambient.compact_name, s.level) for s in sols}
    assert got == {("SU(3)", 4), ("Spin(5)", 10), ("G2", 28)}


def test_scan_su3_count():
    sols = emb.scan_embeddings("SU(3)")
    assert len(sols) == 14


def test_scan_su4_count_and_known_entries():
    sols = emb.scan_embeddings("SU(4)")
    got = {(s.ambient.compact_name, s.level) for s in sols}
    assert {("SU(6)", 2), ("Spin(15)", 4), ("SU(10)", 6), ("Spin(20)", 8)} <= got
    assert len(sols) == 19


def test_scan_charges_exact():
    for s in emb.scan_embeddings("SU(4)"):
        cG = wt.central_charge(wt.algebra("A", 3), s.level)
        assert isinstance(s.charge, F)
        assert cG == s.charge
        assert F(s.ambient.dim, 1 + s.ambient.dual_coxeter) == s.charge


def test_branching_su2_in_su3():
    A1, A2 = wt.algebra("A", 1), wt.algebra("A", 2)
    classes = emb.branch_candidates(A1, 4, A2, 1)
    by_label = {c.ambient_label: c.support for c in classes}
    assert by_label[(0, 0)] == ((0,), (4,))
    assert by_label[(1, 0)] == ((2,),)
    assert by_label[(0, 1)] == ((2,),)


def test_branching_su4_in_spin15():
    A3, B7 = wt.algebra("A", 3), wt.algebra("B", 7)
    classes = emb.branch_candidates(A3, 4, B7, 1)
    by_h = {wt.conformal_dimension(B7, 1, c.ambient_label): set(c.support) for c in classes}
    assert by_h[F(0)] == {(0, 0, 0), (2, 1, 0), (0, 1, 2), (0, 4, 0)}
    assert by_h[F(1, 2)] == {(1, 0, 1), (4, 0, 0), (1, 2, 1), (0, 0, 4)}
    assert by_h[F(15, 16)] == {(1, 1, 1)}


def test_solve_invariant_d4_fixture():
    A1, A2 = wt.algebra("A", 1), wt.algebra("A", 2)
    data = md.modular_data(A1, 4)
    classes = emb.branch_candidates(A1, 4, A2, 1)
    sols = emb.solve_invariant(data, classes)
    assert len(sols) == 1
    M = sols[0].matrix
    assert M[0, 0] == 1 and M[2, 2] == 2 and M[0, 4] == 1 and M[4, 0] == 1
    assert M.trace() == 4
    assert (M * M).sum() == 8
    assert np.abs(M @ data.s - data.s @ M).max() < 1e-9
    # the two nontrivial ambient classes each contribute the weight-2 vertex once
    assert list(sols[0].branch_vector((1, 0))) == [0, 0, 1, 0, 0]
    assert list(sols[0].branch_vector((0, 1))) == [0, 0, 1, 0, 0]


def test_solve_invariant_diagonal_when_ambient_equals_base():
    A3 = wt.algebra("A", 3)
    data = md.modular_data(A3, 1)
    classes = emb.branch_candidates(A3, 1, A3, 1)
    sols = emb.solve_invariant(data, classes)
    assert len(sols) == 1
    assert np.array_equal(sols[0].matrix, np.eye(4, dtype=np.int64))


def test_solve_invariant_spin15():
    A3, B7 = wt.algebra("A", 3), wt.algebra("B", 7)
    data = md.modular_data(A3, 4)
    classes = emb.branch_candidates(A3, 4, B7, 1)
    sols = emb.solve_invariant(data, classes)
    assert len(sols) >= 1
    inv = emb.pick_invariant(sols)
    M = inv.matrix
    idx = data.index
    u = [(0, 0, 0), (2, 1, 0), (0, 1, 2), (0, 4, 0)]
    v = [(1, 0, 1), (4, 0, 0), (1, 2, 1), (0, 0, 4)]
    w = [(1, 1, 1)]
    expect = np.zeros((35, 35), dtype=np.int64)
    for block, coef in ((u, 1), (v, 1), (w, 4)):
        for x in block:
            for y in block:
                expect[idx[x], idx[y]] += coef
    assert np.array_equal(M, expect)
    assert M.trace() == 12 and (M * M).sum() == 48
    assert np.abs(M @ data.s - data.s @ M).max() < 1e-7
    assert np.abs(M @ data.t - data.t @ M).max() < 1e-7
    # branch vectors recover the three blocks, spinor with coefficient 2
    assert [data.labels[i] for i in np.nonzero(inv.branch_vector((0,) * 7))[0]] == sorted(
        u, key=data.index.get
    )
    spinor = next(lam for lam, _ in inv.branches if wt.conformal_dimension(B7, 1, lam) == F(15, 16))
    bw = inv.branch_vector(spinor)
    assert bw[idx[(1, 1, 1)]] == 2 and bw.sum() == 2
