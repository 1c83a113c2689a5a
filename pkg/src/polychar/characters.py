"""Weight multiplicities and characters.

Two independent routes are provided: the alternating Weyl-group sum over
the Kostant partition function, and the Freudenthal recursion.  They share
no code path and are required to agree; the Freudenthal route serves as
the oracle throughout the test suite.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .dominance import TriangularSystem, dominant_cone_below
from .formal import FormalSum
from .partition import kostant_table
from .rootsystem import (
    RootSystemData,
    Weight,
    add_weights,
    inner_product,
    is_dominant,
    root_height,
    root_to_weight,
    sub_weights,
    weight_to_root_basis,
)
from .weyl import dominant_of, generate_weyl, orbit, shifted_action

__all__ = [
    "DominantMultMap",
    "mult_kostant",
    "mult_freudenthal",
    "dim",
    "full_character",
    "orbit_sum",
    "orbit_decomposition_matrices",
    "reflect_to_dominant_character",
]


@dataclass(frozen=True)
class DominantMultMap:
    highest_weight: Weight
    mults: dict

    def __getitem__(self, mu) -> int:
        return self.mults.get(tuple(mu), 0)


def _integer_root_coords(rs, diff):
    """Root coordinates of a weight difference, or None when they are not
    non-negative integers (i.e. K vanishes)."""
    coords = weight_to_root_basis(rs, diff)
    if all(isinstance(c, int) and c >= 0 for c in coords):
        return coords
    return None


_k_cache: dict = {}


def _full_kostant_table(rs, bound):
    """Kostant table over all positive roots, grown on demand per algebra."""
    cached = _k_cache.get(rs.algebra)
    if cached is None or cached.height_bound < bound:
        cached = kostant_table(rs, rs.positive_roots, bound)
        _k_cache[rs.algebra] = cached
    return cached


def mult_kostant(rs: RootSystemData, lam, mu) -> int:
    """Weight multiplicity by the alternating Kostant-partition sum
    sum_w det(w) K(w.lam - mu)."""
    if not is_dominant(lam):
        raise ValueError(f"{lam} is not dominant")
    W = generate_weyl(rs)
    needed = []
    for w in W:
        coords = _integer_root_coords(rs, sub_weights(shifted_action(rs, w, lam), mu))
        needed.append((w.det, coords))
    bound = max((root_height(c) for _, c in needed if c is not None), default=0)
    K = _full_kostant_table(rs, bound)
    return sum(det * K(c) for det, c in needed if c is not None)


def _casimir_norm(rs, mu):
    """(mu + rho, mu + rho), the quantity whose differences drive the
    Freudenthal recursion."""
    shifted = add_weights(mu, rs.rho)
    return inner_product(rs, shifted, shifted)


def mult_freudenthal(rs: RootSystemData, lam) -> DominantMultMap:
    """Full dominant multiplicity map of L(lam) by the Freudenthal
    recursion, working downward through the dominant cone."""
    if not is_dominant(lam):
        raise ValueError(f"{lam} is not dominant")
    cone = dominant_cone_below(rs, lam)
    pos_weights = [root_to_weight(rs, g) for g in rs.positive_roots]
    mults: dict = {tuple(lam): 1}
    top_norm = _casimir_norm(rs, lam)
    for mu in cone[1:]:
        acc = Fraction(0)
        for alpha in pos_weights:
            k = 1
            while True:
                nu = tuple(m + k * a for m, a in zip(mu, alpha))
                # leave once lam - nu exits the positive root cone
                coords = weight_to_root_basis(rs, sub_weights(lam, nu))
                if any((not isinstance(c, int)) or c < 0 for c in coords):
                    break
                m_nu = mults.get(dominant_of(rs, nu), 0)
                if m_nu:
                    acc += m_nu * inner_product(rs, nu, alpha)
                k += 1
        denom = top_norm - _casimir_norm(rs, mu)
        value = 2 * acc / denom
        assert value.denominator == 1 and value >= 0
        if value:
            mults[mu] = int(value)
    return DominantMultMap(highest_weight=tuple(lam), mults=mults)


def dim(rs: RootSystemData, lam) -> int:
    """Weyl dimension formula, evaluated exactly."""
    if not is_dominant(lam):
        raise ValueError(f"{lam} is not dominant")
    num = Fraction(1)
    lam_rho = add_weights(lam, rs.rho)
    for gamma in rs.positive_roots:
        alpha = root_to_weight(rs, gamma)
        num *= inner_product(rs, lam_rho, alpha) / inner_product(rs, rs.rho, alpha)
    assert num.denominator == 1
    return int(num)


def orbit_sum(rs: RootSystemData, lam) -> FormalSum:
    """The Weyl orbit sum E_lam (every orbit member with coefficient 1)."""
    return FormalSum({mu: 1 for mu in orbit(rs, lam)})


@lru_cache(maxsize=4096)
def full_character(rs: RootSystemData, lam) -> FormalSum:
    """ch_lam as a concrete formal sum, assembled from the dominant
    multiplicities and their Weyl orbits."""
    dm = mult_freudenthal(rs, tuple(lam))
    terms: dict = {}
    for mu, m in dm.mults.items():
        for phi in orbit(rs, mu):
            terms[phi] = m
    return FormalSum(terms)


def reflect_to_dominant_character(rs: RootSystemData, nu):
    """Resolve ch_nu for arbitrary nu in P via ch_{w.lam} = det(w) ch_lam.

    Returns (sign, dominant highest weight), or None when nu + rho lies on
    a chamber wall (the character vanishes).
    """
    shifted = add_weights(nu, rs.rho)
    dom = dominant_of(rs, shifted)
    if any(x == 0 for x in dom):
        return None
    # recover the sign as the parity of the reflection chain
    sign = 1
    cur = tuple(shifted)
    while True:
        i = next((k for k in range(rs.rank) if cur[k] < 0), None)
        if i is None:
            break
        lab = cur[i]
        cur = tuple(cur[j] - lab * rs.cartan[i][j] for j in range(rs.rank))
        sign = -sign
    return sign, sub_weights(dom, rs.rho)


def orbit_decomposition_matrices(rs: RootSystemData, lam):
    """The character-to-orbit system over the dominant cone below lam.

    Returns (M, Minv): M[kappa][mu] = m_kappa(mu) with both the direct
    unitriangular inversion and the closed-form Weyl double sum computed
    for Minv; they are checked against each other.
    """
    cone = dominant_cone_below(rs, lam)
    pos = {mu: i for i, mu in enumerate(cone)}
    n = len(cone)
    rows = [[0] * n for _ in range(n)]
    for i, kappa in enumerate(cone):
        dm = mult_freudenthal(rs, kappa)
        for mu, m in dm.mults.items():
            rows[i][pos[mu]] = m
    M = TriangularSystem(index=cone, matrix=tuple(tuple(r) for r in rows))
    Minv = M.inverse()
    closed = _minv_closed_form(rs, cone)
    assert closed == Minv.matrix, "closed-form M^-1 disagrees with direct inversion"
    return M, Minv


def _minv_closed_form(rs, cone):
    """M^-1 by the Weyl double sum: M^-1[lam][mu] =
    (|W lam| / |W|) * sum_{x,w} det(w) [x lam + w.0 = mu]."""
    W = generate_weyl(rs)
    zero = tuple([0] * rs.rank)
    w_dot_zero = [(w.det, shifted_action(rs, w, zero)) for w in W]
    pos = {mu: i for i, mu in enumerate(cone)}
    n = len(cone)
    out = [[0] * n for _ in range(n)]
    for i, lam in enumerate(cone):
        orb = orbit(rs, lam)
        scale = Fraction(len(orb), len(W))
        acc: dict = {}
        for x in W:
            xlam = x.apply(lam)
            for det, w0 in w_dot_zero:
                key = add_weights(xlam, w0)
                acc[key] = acc.get(key, 0) + det
        for mu, val in acc.items():
            j = pos.get(mu)
            if j is not None and val:
                v = scale * val
                assert v.denominator == 1
                out[i][j] = int(v)
    return tuple(tuple(r) for r in out)
