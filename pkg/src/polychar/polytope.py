"""Polytope expansion of characters: the explicit triangular system for
the expansion coefficients, polytope sums and membership, weight-
multiplicity recovery, and polytope dimensions.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache

from .characters import DominantMultMap, dim
from .dominance import TriangularSystem, dominant_cone_below
from .formal import FormalSum
from .partition import f_table
from .rootsystem import (
    RootSystemData,
    Weight,
    dominance_leq,
    is_dominant,
    root_to_weight,
    sub_weights,
    weight_to_root_basis,
)
from .weyl import cone_data, dominant_of, generate_weyl, orbit, shifted_action

__all__ = [
    "PolytopeMultMap",
    "dominant_cone_below",
    "ainv_matrix",
    "polytope_mults",
    "polytope_sum",
    "membership",
    "brion_check",
    "recover_mults",
    "polytope_dimension",
    "DegenerateDirectionError",
]


class DegenerateDirectionError(ValueError):
    """A vertex-cone denominator factor is numerically too close to zero."""


@dataclass(frozen=True)
class PolytopeMultMap:
    highest_weight: Weight
    polyts: dict

    def __getitem__(self, mu) -> int:
        return self.polyts.get(tuple(mu), 0)


@lru_cache(maxsize=4096)
def ainv_matrix(rs: RootSystemData, lam) -> TriangularSystem:
    """The explicit inverse system: entry (kappa, mu) equals
    sum_w det(w) F(kappa - w.mu), over the dominant cone below lam."""
    lam = tuple(lam)
    cone = dominant_cone_below(rs, lam)
    F = f_table(rs)
    W = generate_weyl(rs)
    n = len(cone)
    rows = [[0] * n for _ in range(n)]
    for j, mu in enumerate(cone):
        shifts = [(w.det, shifted_action(rs, w, mu)) for w in W]
        for i, kappa in enumerate(cone):
            total = 0
            for det, wmu in shifts:
                coords = weight_to_root_basis(rs, sub_weights(kappa, wmu))
                if all(isinstance(c, int) and c >= 0 for c in coords):
                    total += det * F(coords)
            rows[i][j] = total
    return TriangularSystem(index=cone, matrix=tuple(tuple(r) for r in rows))


def polytope_mults(rs: RootSystemData, lam) -> PolytopeMultMap:
    """Expansion coefficients of ch_lam over polytope sums, by inverting
    the explicit triangular system."""
    lam = tuple(lam)
    A = ainv_matrix(rs, lam).inverse()
    row = A.row(lam)
    return PolytopeMultMap(highest_weight=lam, polyts=row)


def polytope_sum(rs: RootSystemData, sigma) -> FormalSum:
    """The multiplicity-1 generating sum over the lattice points of the
    weight polytope of sigma (in the coset sigma + Q): the union of the
    Weyl orbits of all dominant mu <= sigma."""
    if not is_dominant(sigma):
        raise ValueError(f"{sigma} is not dominant")
    terms: dict = {}
    for mu in dominant_cone_below(rs, sigma):
        for phi in orbit(rs, mu):
            terms[phi] = 1
    return FormalSum(terms)


def membership(rs: RootSystemData, sigma, kappa) -> int:
    """1 iff kappa lies in the weight polytope of sigma and is congruent
    to sigma modulo the root lattice; the dominance criterion on the
    dominant representative decides both at once."""
    if not is_dominant(sigma):
        raise ValueError(f"{sigma} is not dominant")
    return int(dominance_leq(rs, dominant_of(rs, kappa), sigma))


def recover_mults(rs: RootSystemData, pm: PolytopeMultMap) -> DominantMultMap:
    """Dominant weight multiplicities as upward partial sums of the
    polytope multiplicities."""
    lam = pm.highest_weight
    cone = dominant_cone_below(rs, lam)
    mults = {}
    for mu in cone:
        s = sum(v for phi, v in pm.polyts.items() if dominance_leq(rs, mu, phi))
        if s:
            mults[mu] = s
    return DominantMultMap(highest_weight=lam, mults=mults)


def polytope_dimension(rs: RootSystemData, lam) -> int:
    """Number of lattice points of the weight polytope, from the explicit
    inverse system paired with the Weyl dimension formula."""
    lam = tuple(lam)
    Ainv = ainv_matrix(rs, lam)
    return sum(v * dim(rs, mu) for mu, v in Ainv.row(lam).items())


DENOMINATOR_FLOOR = 1e-6


def brion_check(rs: RootSystemData, lam, c) -> tuple[float, float]:
    """Evaluate both sides of the vertex-cone identity for the polytope
    sum at a generic real direction c.

    lhs: direct evaluation of the lattice-point sum.  rhs: the sum over
    Weyl elements of e^{w lam} eps(w) e^{-sigma(w)} prod_a (1-e^{-<c,|wa|>})^{-1}.
    """
    lam = tuple(lam)

    def pair(mu):
        return sum(ci * mi for ci, mi in zip(c, mu))

    rhs = 0.0
    for w in generate_weyl(rs):
        cd = cone_data(rs, w)
        term = math.exp(pair(w.apply(lam)))
        term *= cd.epsilon * math.exp(-pair(root_to_weight(rs, cd.sigma)))
        for gamma in cd.abs_wS:
            factor = 1.0 - math.exp(-pair(root_to_weight(rs, gamma)))
            if abs(factor) < DENOMINATOR_FLOOR:
                raise DegenerateDirectionError(
                    f"direction {c} is degenerate for {rs.algebra}")
            term /= factor
        rhs += term
    from .formal import eval_numeric
    lhs = eval_numeric(polytope_sum(rs, lam), c)
    return lhs, rhs
