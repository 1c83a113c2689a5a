"""Tensor product decomposition by three independent routes: brute-force
character multiplication, the Racah-Speiser shift-and-reflect algorithm,
and the polytope-membership route that consumes only polytope
multiplicities.
"""

from __future__ import annotations

from dataclasses import dataclass

from .characters import dim, full_character, mult_freudenthal
from .dominance import height_key
from .formal import FormalSum
from .polytope import membership, polytope_mults, polytope_sum
from .rootsystem import (
    RootSystemData,
    Weight,
    add_weights,
    is_dominant,
    sub_weights,
)
from .weyl import dominant_of, generate_weyl, orbit, shifted_action

__all__ = [
    "TensorDecomposition",
    "tensor_bruteforce",
    "tensor_racah_speiser",
    "tensor_polytope",
]


@dataclass(frozen=True)
class TensorDecomposition:
    left: Weight
    right: Weight
    coeffs: dict

    def __post_init__(self):
        assert all(v > 0 for v in self.coeffs.values())

    def __getitem__(self, nu) -> int:
        return self.coeffs.get(tuple(nu), 0)

    def dimension_check(self, rs: RootSystemData) -> bool:
        lhs = dim(rs, self.left) * dim(rs, self.right)
        rhs = sum(v * dim(rs, nu) for nu, v in self.coeffs.items())
        return lhs == rhs


def _check_dominant_pair(lam, mu):
    for x in (lam, mu):
        if not is_dominant(x):
            raise ValueError(f"{x} is not dominant")


def peel_characters(rs: RootSystemData, fs: FormalSum) -> dict:
    """Decompose a Weyl-invariant formal sum into irreducible characters by
    repeatedly stripping the highest remaining weight."""
    remaining = dict(fs.terms)
    coeffs: dict = {}
    while remaining:
        top = max(remaining, key=lambda m: (height_key(rs, m), m))
        c = remaining[top]
        assert is_dominant(top), f"maximal residual weight {top} is not dominant"
        assert c > 0, f"negative residual coefficient at {top}"
        coeffs[top] = coeffs.get(top, 0) + c
        for nu, m in full_character(rs, top).terms.items():
            v = remaining.get(nu, 0) - c * m
            if v:
                remaining[nu] = v
            else:
                remaining.pop(nu, None)
    return coeffs


def tensor_bruteforce(rs: RootSystemData, lam, mu) -> TensorDecomposition:
    """Oracle route: multiply the two full characters and peel."""
    _check_dominant_pair(lam, mu)
    product = full_character(rs, tuple(lam)) * full_character(rs, tuple(mu))
    return TensorDecomposition(left=tuple(lam), right=tuple(mu),
                               coeffs=peel_characters(rs, product))


def tensor_racah_speiser(rs: RootSystemData, lam, mu) -> TensorDecomposition:
    """Shift every weight of L(mu) by lam, reflect to the dominant chamber
    under the shifted action with sign det(w), and drop terms on chamber
    walls."""
    _check_dominant_pair(lam, mu)
    lam, mu = tuple(lam), tuple(mu)
    coeffs: dict = {}
    dm = mult_freudenthal(rs, mu)
    for sigma, m in dm.mults.items():
        for delta in orbit(rs, sigma):
            shifted = add_weights(add_weights(lam, delta), rs.rho)
            dom = dominant_of(rs, shifted)
            if any(x == 0 for x in dom):
                continue  # det-canceling boundary term
            sign = _reflection_parity(rs, shifted)
            nu = sub_weights(dom, rs.rho)
            coeffs[nu] = coeffs.get(nu, 0) + sign * m
    coeffs = {k: v for k, v in coeffs.items() if v != 0}
    return TensorDecomposition(left=lam, right=mu, coeffs=coeffs)


def _reflection_parity(rs, weight) -> int:
    """det(w) for the chain of simple reflections taking weight dominant."""
    cur = tuple(weight)
    sign = 1
    while True:
        i = next((k for k in range(rs.rank) if cur[k] < 0), None)
        if i is None:
            return sign
        lab = cur[i]
        cur = tuple(cur[j] - lab * rs.cartan[i][j] for j in range(rs.rank))
        sign = -sign


def tensor_polytope(rs: RootSystemData, lam, mu) -> TensorDecomposition:
    """Polytope route: coefficients assembled from the polytope
    multiplicities of mu and 0/1 polytope-membership values only."""
    _check_dominant_pair(lam, mu)
    lam, mu = tuple(lam), tuple(mu)
    pm = polytope_mults(rs, mu)
    W = generate_weyl(rs)
    # candidate highest weights: dominant representatives of lam + delta
    # over the full weight support of L(mu) (every polytope lattice point)
    candidates = set()
    for sigma in pm.polyts:
        for delta in polytope_sum(rs, sigma).terms:
            cand = dominant_of(rs, add_weights(lam, delta))
            candidates.add(cand)
    coeffs: dict = {}
    for nu in candidates:
        total = 0
        for sigma, a in pm.polyts.items():
            u = 0
            for w in W:
                kappa = sub_weights(shifted_action(rs, w, nu), lam)
                member = membership(rs, sigma, kappa)
                assert member in (0, 1)
                u += w.det * member
            total += a * u
        if total:
            coeffs[nu] = total
    return TensorDecomposition(left=lam, right=mu, coeffs=coeffs)
