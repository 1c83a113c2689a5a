"""Static data of a simple complex Lie algebra: Cartan matrix, roots, inner
product, Weyl vector, dominance order.

Conventions
-----------
Weights are tuples of integer Dynkin labels (fundamental-weight basis).
Roots are tuples of coordinates in the simple-root basis; elements of the
root lattice have integer coordinates, general vectors rational ones.

The Cartan matrix convention is ``C[i][j] = 2 (a_i, a_j) / (a_j, a_j)``,
so the Dynkin labels of the simple root ``a_i`` are row ``i`` of ``C``.
The bilinear form is normalized so long roots have squared length 2.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

Weight = tuple[int, ...]
RootVector = tuple  # rational or integer coordinates in the simple-root basis

SERIES = ("A", "B", "C", "D", "E", "F", "G")

# Number of positive roots, per series, as a function of the rank.
POSITIVE_ROOT_COUNTS = {
    "A": lambda r: r * (r + 1) // 2,
    "B": lambda r: r * r,
    "C": lambda r: r * r,
    "D": lambda r: r * (r - 1),
    "E": lambda r: {6: 36, 7: 63, 8: 120}[r],
    "F": lambda r: 24,
    "G": lambda r: 6,
}

DEFAULT_RANK_CEILING = 6


class InvalidAlgebraError(ValueError):
    """Series/rank combination does not name a simple Lie algebra."""


@dataclass(frozen=True)
class AlgebraId:
    series: str
    rank: int

    def __post_init__(self):
        if self.series not in SERIES:
            raise InvalidAlgebraError(f"unknown series {self.series!r}")
        r = self.rank
        ok = {
            "A": r >= 1,
            "B": r >= 2,
            "C": r >= 2,
            "D": r >= 4,
            "E": r in (6, 7, 8),
            "F": r == 4,
            "G": r == 2,
        }[self.series]
        if not ok:
            raise InvalidAlgebraError(f"invalid rank {r} for series {self.series}")

    def __str__(self):
        return f"{self.series}{self.rank}"


_ALGEBRA_RE = re.compile(r"^([A-Ga-g])\s*(\d+)$")


def parse_algebra(name: str) -> AlgebraId:
    """Parse an algebra name like "A2", "g2" or "D4" (case-insensitive)."""
    m = _ALGEBRA_RE.match(name.strip())
    if not m:
        raise InvalidAlgebraError(f"cannot parse algebra name {name!r}")
    return AlgebraId(m.group(1).upper(), int(m.group(2)))


def _cartan_matrix(aid: AlgebraId) -> tuple[tuple[int, ...], ...]:
    r = aid.rank
    C = [[2 if i == j else 0 for j in range(r)] for i in range(r)]

    def bond(i, j, cij=-1, cji=-1):
        C[i][j] = cij
        C[j][i] = cji

    s = aid.series
    if s in ("A", "B", "C"):
        for i in range(r - 1):
            bond(i, i + 1)
        if s == "B" and r >= 2:
            # last node short: C[r-2][r-1] = -2
            bond(r - 2, r - 1, -2, -1)
        if s == "C" and r >= 2:
            # last node long
            bond(r - 2, r - 1, -1, -2)
    elif s == "D":
        for i in range(r - 2):
            bond(i, i + 1)
        bond(r - 3, r - 1)
    elif s == "E":
        # Bourbaki labels: chain 1-3-4-...-r with node 2 attached to node 4.
        chain = [0] + list(range(2, r))
        for a, b in zip(chain, chain[1:]):
            bond(a, b)
        bond(1, 3)
    elif s == "F":
        bond(0, 1)
        bond(1, 2, -2, -1)  # nodes 1,2 long; 3,4 short
        bond(2, 3)
    elif s == "G":
        bond(0, 1, -1, -3)  # node 1 short
    return tuple(tuple(row) for row in C)


def _invert_rational(mat) -> tuple[tuple[Fraction, ...], ...]:
    """Exact inverse of a square matrix by Gauss-Jordan over Fraction."""
    n = len(mat)
    aug = [[Fraction(mat[i][j]) for j in range(n)] + [Fraction(int(i == j)) for j in range(n)]
           for i in range(n)]
    for col in range(n):
        piv = next(i for i in range(col, n) if aug[i][col] != 0)
        aug[col], aug[piv] = aug[piv], aug[col]
        p = aug[col][col]
        aug[col] = [x / p for x in aug[col]]
        for i in range(n):
            if i != col and aug[i][col] != 0:
                f = aug[i][col]
                aug[i] = [a - f * b for a, b in zip(aug[i], aug[col])]
    return tuple(tuple(row[n:]) for row in aug)


def _symmetrizer(C) -> tuple[Fraction, ...]:
    """Rational d_i with d_j*C[i][j] = d_i*C[j][i], normalized so max(d) = 1.

    (a_i, a_i) = 2*d_i, so long roots get squared length 2.
    """
    r = len(C)
    d = [None] * r
    d[0] = Fraction(1)
    # propagate along Dynkin diagram edges
    changed = True
    while changed:
        changed = False
        for i in range(r):
            for j in range(r):
                if i != j and C[i][j] != 0 and d[i] is not None and d[j] is None:
                    d[j] = d[i] * Fraction(C[j][i], C[i][j])
                    changed = True
    top = max(d)
    return tuple(x / top for x in d)


@dataclass(frozen=True)
class RootSystemData:
    algebra: AlgebraId
    cartan: tuple[tuple[int, ...], ...]
    cartan_inverse: tuple[tuple[Fraction, ...], ...]
    simple_roots: tuple[RootVector, ...]
    positive_roots: tuple[RootVector, ...]
    quadratic_form: tuple[tuple[Fraction, ...], ...]
    rho: Weight
    theta: RootVector

    @property
    def rank(self) -> int:
        return self.algebra.rank

    def __repr__(self):
        return f"RootSystemData({self.algebra})"


def root_to_weight(rs: RootSystemData, gamma: RootVector) -> tuple:
    """Dynkin labels of a vector given in simple-root coordinates."""
    C = rs.cartan
    r = rs.rank
    out = [sum(gamma[j] * C[j][i] for j in range(r)) for i in range(r)]
    return tuple(int(x) if isinstance(x, Fraction) and x.denominator == 1 else x for x in out)


def weight_to_root_basis(rs: RootSystemData, mu) -> RootVector:
    """Simple-root coordinates of a weight given by its Dynkin labels."""
    Cinv = rs.cartan_inverse
    r = rs.rank
    out = []
    for j in range(r):
        x = sum(Fraction(mu[i]) * Cinv[i][j] for i in range(r))
        out.append(int(x) if x.denominator == 1 else x)
    return tuple(out)


def simple_reflection_root(rs: RootSystemData, i: int, gamma: RootVector) -> RootVector:
    """Apply the i-th simple reflection to a vector in root coordinates."""
    label_i = sum(gamma[j] * rs.cartan[j][i] for j in range(rs.rank))
    out = list(gamma)
    out[i] -= label_i
    return tuple(out)


def _positive_roots(rs_cartan, rank) -> tuple[RootVector, ...]:
    """All positive roots, by reflection closure from the simple roots."""
    simple = [tuple(int(i == j) for j in range(rank)) for i in range(rank)]
    roots = set(simple)
    frontier = set(simple)
    while frontier:
        new = set()
        for gamma in frontier:
            for i in range(rank):
                label_i = sum(gamma[j] * rs_cartan[j][i] for j in range(rank))
                img = list(gamma)
                img[i] -= label_i
                img = tuple(img)
                if all(c >= 0 for c in img) and img not in roots:
                    new.add(img)
        roots |= new
        frontier = new
    return tuple(sorted(roots, key=lambda g: (sum(g), g)))


@lru_cache(maxsize=None)
def build_algebra(aid: AlgebraId, rank_ceiling: int = DEFAULT_RANK_CEILING) -> RootSystemData:
    """Construct the full static data of the simple algebra `aid`."""
    if aid.rank > rank_ceiling:
        raise InvalidAlgebraError(
            f"rank {aid.rank} exceeds the configured ceiling {rank_ceiling}")
    C = _cartan_matrix(aid)
    r = aid.rank
    Cinv = _invert_rational(C)
    d = _symmetrizer(C)
    # (mu, nu) = labels(mu)^T . D . (C^T)^{-1} . labels(nu)
    G = tuple(
        tuple(d[i] * Cinv[j][i] for j in range(r))
        for i in range(r)
    )
    # symmetry check on the quadratic form
    for i in range(r):
        for j in range(r):
            assert G[i][j] == G[j][i]
    pos = _positive_roots(C, r)
    assert len(pos) == POSITIVE_ROOT_COUNTS[aid.series](r)
    theta = pos[-1]  # unique root of maximal height
    assert sum(theta) > max((sum(g) for g in pos[:-1]), default=-1) or len(pos) == 1
    rho = tuple([1] * r)
    simple = tuple(tuple(int(i == j) for j in range(r)) for i in range(r))
    rs = RootSystemData(
        algebra=aid,
        cartan=C,
        cartan_inverse=Cinv,
        simple_roots=simple,
        positive_roots=pos,
        quadratic_form=G,
        rho=rho,
        theta=theta,
    )
    # 2*rho equals the sum of all positive roots
    two_rho = tuple(2 * x for x in weight_to_root_basis(rs, rho))
    assert two_rho == tuple(sum(g[j] for g in pos) for j in range(r))
    return rs


def algebra(name: str) -> RootSystemData:
    """Convenience: build from a string name like "A2"."""
    return build_algebra(parse_algebra(name))


def dominance_leq(rs: RootSystemData, mu, lam) -> bool:
    """True iff lam - mu is a non-negative integer sum of simple roots."""
    diff = tuple(a - b for a, b in zip(lam, mu))
    coords = weight_to_root_basis(rs, diff)
    return all(isinstance(c, int) and c >= 0 for c in coords)


def is_dominant(mu) -> bool:
    return all(x >= 0 for x in mu)


def inner_product(rs: RootSystemData, x, y) -> Fraction:
    """Symmetric bilinear form on weight coordinates; long roots have length^2 = 2."""
    G = rs.quadratic_form
    r = rs.rank
    return sum(Fraction(x[i]) * G[i][j] * Fraction(y[j]) for i in range(r) for j in range(r))


def root_height(gamma: RootVector):
    """Sum of simple-root coordinates."""
    return sum(gamma)


def add_weights(a, b) -> tuple:
    return tuple(x + y for x, y in zip(a, b))


def sub_weights(a, b) -> tuple:
    return tuple(x - y for x, y in zip(a, b))
