"""Modular data of the level-k A-series categories.

The s matrix is the Weyl-alternating Gaussian sum over traceless partial-sum
coordinates, normalized so the vacuum row is positive; t is the diagonal of
conformal dimensions shifted by the central charge. This is the first module
where floats appear. The exact layer feeds it Fractions and every identity
downstream of here carries a tolerance.

The alternating sum is O(r^2 N!) which is perfectly fine for rank <= 3; the
guard below is deliberate, nobody has audited the phase conventions beyond
that.
"""

from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from . import weights as wt

__all__ = ["ModularData", "modular_data", "verlinde_matrices", "verlinde_tensor"]


@dataclass
class ModularData:
    spec: wt.AlgebraSpec
    level: int
    labels: list  # alcove in canonical order
    index: dict  # label -> position
    s: np.ndarray
    t: np.ndarray
    hs: list  # exact conformal dimensions, same order
    central_charge: Fraction
    conj_perm: np.ndarray  # position of the conjugate label


def modular_data(spec: wt.AlgebraSpec, k: int) -> ModularData:
    assert spec.family == "A" and spec.rank <= 3, "phase conventions audited for A1..A3 only"
    N = spec.rank + 1
    kappa = k + spec.dual_coxeter
    labels = wt.enumerate_alcove(spec, k)
    r = len(labels)
    index = {la: i for i, la in enumerate(labels)}

    shifted = [wt.barycentric(tuple(x + 1 for x in la)) for la in labels]
    group = wt.weyl_group(N)
    perms = list(group.items())

    s = np.zeros((r, r), dtype=complex)
    for a in range(r):
        ca = shifted[a]
        for b in range(a + 1):
            cb = shifted[b]
            z = 0j
            for p, sg in perms:
                e = sum(ca[p[i]] * cb[i] for i in range(N))
                z += sg * np.exp(-2j * np.pi * float(e) / kappa)
            s[a, b] = s[b, a] = z
    sigma = (1j) ** (N * (N - 1) // 2) * N ** -0.5 * float(kappa) ** (-spec.rank / 2)
    s *= sigma

    c = wt.central_charge(spec, k)
    hs = [wt.conformal_dimension(spec, k, la) for la in labels]
    t = np.diag([np.exp(2j * np.pi * float(h - c / 24)) for h in hs])

    conj = np.array([index[wt.conjugate(spec, la)] for la in labels])
    return ModularData(spec, k, labels, index, s, t, hs, c, conj)


def verlinde_tensor(data: ModularData) -> np.ndarray:
    """N[l, m, n] = sum_b s[m,b] s[l,b] conj(s[n,b]) / s[0,b], as floats."""
    s = data.s
    ratios = s / s[0]
    return np.einsum("lb,mb,nb->lmn", ratios, s, s.conj()).real


def verlinde_matrices(data: ModularData, tol: float = 1e-6):
    """Fusion matrices keyed by label, rounded to int; raises if any entry
    sits further than tol from an integer."""
    ten = verlinde_tensor(data)
    drift = np.abs(ten - np.round(ten)).max()
    if drift > tol:
        raise ValueError(f"fusion numbers {drift:.3g} away from integers (tol {tol})")
    out = {}
    for i, la in enumerate(data.labels):
        out[la] = np.round(ten[i]).astype(np.int64)
    return out
