"""Weyl group generation, orbits, dominant representatives, and the
per-element vertex-cone data (sigma(w), epsilon(w), |wS|) used by the
polytope sum formula.

Elements act on Dynkin-label coordinates as integer matrices.  The group
is generated once per root system by breadth-first closure over the
primitive reflections and memoized; tables are immutable afterwards.
"""

from __future__ import annotations

import threading
from dataclasses import dataclass

from .rootsystem import (
    RootSystemData,
    RootVector,
    Weight,
    add_weights,
    root_to_weight,
    sub_weights,
    weight_to_root_basis,
)

WEYL_SIZE_CAP = 51840  # |W(E6)|


class WeylGroupTooLargeError(RuntimeError):
    pass


@dataclass(frozen=True)
class WeylElement:
    matrix: tuple[tuple[int, ...], ...]
    det: int
    word_length: int

    def apply(self, mu) -> tuple:
        return tuple(sum(row[j] * mu[j] for j in range(len(mu))) for row in self.matrix)


@dataclass(frozen=True)
class ConeData:
    owner: WeylElement
    sigma: RootVector
    epsilon: int
    abs_wS: tuple[RootVector, ...]


def _identity_matrix(r):
    return tuple(tuple(int(i == j) for j in range(r)) for i in range(r))


def simple_reflection_matrix(rs: RootSystemData, i: int):
    """Matrix of r_i on Dynkin labels: (r_i m)_j = m_j - m_i C[i][j]."""
    r = rs.rank
    return tuple(
        tuple(int(j == k) - (rs.cartan[i][j] if k == i else 0) for k in range(r))
        for j in range(r)
    )


def _mat_mul(a, b):
    n = len(a)
    return tuple(
        tuple(sum(a[i][k] * b[k][j] for k in range(n)) for j in range(n))
        for i in range(n)
    )


_group_cache: dict = {}
_group_lock = threading.Lock()


def generate_weyl(rs: RootSystemData, size_cap: int = WEYL_SIZE_CAP) -> tuple[WeylElement, ...]:
    """All Weyl group elements, by BFS over the primitive reflections.

    Each element appears exactly once; word_length is the BFS depth, which
    equals the reduced word length, and det = (-1)^word_length.
    """
    key = (rs.algebra, size_cap)
    with _group_lock:
        cached = _group_cache.get(key)
    if cached is not None:
        return cached
    r = rs.rank
    gens = [simple_reflection_matrix(rs, i) for i in range(r)]
    ident = _identity_matrix(r)
    seen = {ident: 0}
    order = [ident]
    frontier = [ident]
    depth = 0
    while frontier:
        depth += 1
        new = []
        for m in frontier:
            for g in gens:
                prod = _mat_mul(g, m)
                if prod not in seen:
                    seen[prod] = depth
                    order.append(prod)
                    new.append(prod)
                    if len(seen) > size_cap:
                        raise WeylGroupTooLargeError(
                            f"Weyl group of {rs.algebra} exceeds cap {size_cap}")
        frontier = new
    elements = tuple(
        WeylElement(matrix=m, det=(-1) ** seen[m], word_length=seen[m]) for m in order
    )
    with _group_lock:
        _group_cache[key] = elements
    return elements


def identity_element(rs: RootSystemData) -> WeylElement:
    return generate_weyl(rs)[0]


def shifted_action(rs: RootSystemData, w: WeylElement, lam) -> tuple:
    """w.lam = w(lam + rho) - rho."""
    return sub_weights(w.apply(add_weights(lam, rs.rho)), rs.rho)


def orbit(rs: RootSystemData, lam) -> frozenset:
    """The Weyl orbit of lam as a set of weights."""
    seen = {tuple(lam)}
    frontier = [tuple(lam)]
    gens = [simple_reflection_matrix(rs, i) for i in range(rs.rank)]
    while frontier:
        new = []
        for mu in frontier:
            for g in gens:
                img = tuple(sum(row[j] * mu[j] for j in range(len(mu))) for row in g)
                if img not in seen:
                    seen.add(img)
                    new.append(img)
        frontier = new
    return frozenset(seen)


def dominant_representative(rs: RootSystemData, mu) -> tuple[tuple, WeylElement]:
    """The unique dominant weight in W*mu, with an element w such that w(mu)
    is dominant.  Reflects at the lowest-index negative label until done."""
    r = rs.rank
    cur = tuple(mu)
    mat = _identity_matrix(r)
    while True:
        i = next((k for k in range(r) if cur[k] < 0), None)
        if i is None:
            break
        g = simple_reflection_matrix(rs, i)
        cur = tuple(sum(row[j] * cur[j] for j in range(r)) for row in g)
        mat = _mat_mul(g, mat)
    elements = generate_weyl(rs)
    by_matrix = {w.matrix: w for w in elements}
    return cur, by_matrix[mat]


def dominant_of(rs: RootSystemData, mu) -> tuple:
    """dominant_representative without the group element (no group lookup)."""
    r = rs.rank
    cur = tuple(mu)
    while True:
        i = next((k for k in range(r) if cur[k] < 0), None)
        if i is None:
            return cur
        lab = cur[i]
        cur = tuple(cur[j] - lab * rs.cartan[i][j] for j in range(r))


def root_image(rs: RootSystemData, w: WeylElement, gamma: RootVector) -> RootVector:
    """Image of a root (simple-root coordinates) under w."""
    labels = root_to_weight(rs, gamma)
    return weight_to_root_basis(rs, w.apply(labels))


def cone_data(rs: RootSystemData, w: WeylElement) -> ConeData:
    """sigma(w), epsilon(w) and the positive-root set |wS| for the vertex
    cone attached to w in the polytope sum formula."""
    neg = []  # members of wS that are negative roots
    abs_ws = []
    for alpha in rs.simple_roots:
        img = root_image(rs, w, alpha)
        if all(c >= 0 for c in img):
            abs_ws.append(img)
        else:
            neg.append(img)
            abs_ws.append(tuple(-c for c in img))
    sigma = tuple(-sum(g[j] for g in neg) for j in range(rs.rank)) if neg else tuple([0] * rs.rank)
    return ConeData(
        owner=w,
        sigma=sigma,
        epsilon=(-1) ** len(neg),
        abs_wS=tuple(abs_ws),
    )
