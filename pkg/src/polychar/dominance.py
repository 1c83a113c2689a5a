"""Enumeration of dominant weights below a highest weight, the fixed
dominance-compatible total order, and unitriangular integer systems.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction

from .rootsystem import (
    RootSystemData,
    Weight,
    weight_to_root_basis,
)


def dominant_cone_below(rs: RootSystemData, lam) -> tuple[Weight, ...]:
    """All dominant weights mu <= lam, in the fixed dominance-compatible
    order: ascending height of lam - mu, ties broken lexicographically by
    Dynkin labels.  lam itself comes first; mu <= nu implies mu appears
    after nu."""
    r = rs.rank
    lam = tuple(lam)
    if any(x < 0 for x in lam):
        raise ValueError(f"{lam} is not dominant")
    # mu = lam - sum n_i alpha_i with n >= 0; since mu is dominant and the
    # inverse Cartan matrix is positive, n_i <= (lam in root coordinates)_i
    bounds = [int(c) for c in weight_to_root_basis(rs, lam)]
    found = []
    for n in itertools.product(*(range(b + 1) for b in bounds)):
        mu = tuple(lam[i] - sum(n[j] * rs.cartan[j][i] for j in range(r)) for i in range(r))
        if all(x >= 0 for x in mu):
            found.append((sum(n), mu))
    found.sort(key=lambda t: (t[0], t[1]))
    return tuple(mu for _, mu in found)


def height_key(rs: RootSystemData, mu) -> Fraction:
    """Linear functional strictly increasing along dominance: the sum of
    the simple-root coordinates of mu."""
    return sum(Fraction(c) for c in weight_to_root_basis(rs, mu))


@dataclass(frozen=True)
class TriangularSystem:
    """A unitriangular integer matrix over a dominance-ordered index of
    dominant weights.  matrix[i][j] can be nonzero only when
    index[j] <= index[i], i.e. j >= i in the fixed order."""
    index: tuple[Weight, ...]
    matrix: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        n = len(self.index)
        for i in range(n):
            assert self.matrix[i][i] == 1
            for j in range(i):
                assert self.matrix[i][j] == 0

    def entry(self, kappa, mu) -> int:
        i = self.index.index(tuple(kappa))
        j = self.index.index(tuple(mu))
        return self.matrix[i][j]

    def row(self, kappa) -> dict:
        i = self.index.index(tuple(kappa))
        return {mu: v for mu, v in zip(self.index, self.matrix[i]) if v != 0}

    def inverse(self) -> "TriangularSystem":
        """Exact inverse by back substitution; unitriangular again."""
        n = len(self.index)
        m = self.matrix
        inv = [[0] * n for _ in range(n)]
        for i in reversed(range(n)):
            inv[i][i] = 1
            for j in range(i + 1, n):
                s = sum(m[i][k] * inv[k][j] for k in range(i + 1, j + 1))
                inv[i][j] = -s
        out = TriangularSystem(index=self.index, matrix=tuple(tuple(r) for r in inv))
        # exact sanity: M * M^{-1} = identity
        for i in range(n):
            for j in range(n):
                s = sum(m[i][k] * out.matrix[k][j] for k in range(n))
                assert s == int(i == j)
        return out
