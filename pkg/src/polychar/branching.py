"""Subalgebra branching rules by three routes: brute-force projected
character peeling, the orbit-sum route, and the polytope route.

The subalgebra may be a product of simple factors; its weights are the
concatenated Dynkin labels of the factors, and characters, orbit sums and
polytope sums multiply factor by factor.
"""

from __future__ import annotations

import itertools
import json
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from . import characters, polytope
from .dominance import dominant_cone_below, height_key
from .formal import FormalSum
from .rootsystem import (
    SERIES,
    AlgebraId,
    RootSystemData,
    build_algebra,
    is_dominant,
    parse_algebra,
    weight_to_root_basis,
)
from .weyl import dominant_of, generate_weyl, orbit, shifted_action

__all__ = [
    "ChildAlgebra",
    "Embedding",
    "BranchingResult",
    "EmbeddingError",
    "DecompositionError",
    "embedding_principal_a1",
    "embedding_regular_subdiagram",
    "embedding_from_dict",
    "embedding_from_file",
    "parse_embedding_spec",
    "branch_bruteforce",
    "branch_via_orbits",
    "branch_via_polytopes",
]


class EmbeddingError(ValueError):
    pass


class DecompositionError(RuntimeError):
    """A projected multiset failed to decompose into child sums."""


# ---------------------------------------------------------------------------
# product child algebra

@dataclass(frozen=True)
class ChildAlgebra:
    factors: tuple[RootSystemData, ...]

    @property
    def rank(self) -> int:
        return sum(f.rank for f in self.factors)

    def split(self, w) -> tuple:
        parts = []
        i = 0
        for f in self.factors:
            parts.append(tuple(w[i:i + f.rank]))
            i += f.rank
        return tuple(parts)

    def join(self, parts) -> tuple:
        return tuple(x for p in parts for x in p)

    def __str__(self):
        return "x".join(str(f.algebra) for f in self.factors)


def child_is_dominant(child: ChildAlgebra, w) -> bool:
    return all(x >= 0 for x in w)


def child_dominant_of(child: ChildAlgebra, w) -> tuple:
    return child.join(dominant_of(f, p) for f, p in zip(child.factors, child.split(w)))


def child_dim(child: ChildAlgebra, w) -> int:
    out = 1
    for f, p in zip(child.factors, child.split(w)):
        out *= characters.dim(f, p)
    return out


def child_height_key(child: ChildAlgebra, w) -> Fraction:
    return sum((height_key(f, p) for f, p in zip(child.factors, child.split(w))),
               Fraction(0))


def _outer(parts_sums) -> FormalSum:
    """Combine per-factor formal sums over concatenated coordinates."""
    terms = {(): 1}
    for fs in parts_sums:
        new = {}
        for a, ca in terms.items():
            for b, cb in fs.terms.items():
                new[a + b] = ca * cb
        terms = new
    return FormalSum(terms)


def child_character(child: ChildAlgebra, w) -> FormalSum:
    return _outer(characters.full_character(f, p)
                  for f, p in zip(child.factors, child.split(w)))


def child_orbit_sum(child: ChildAlgebra, w) -> FormalSum:
    return _outer(characters.orbit_sum(f, p)
                  for f, p in zip(child.factors, child.split(w)))


def child_polytope_sum(child: ChildAlgebra, w) -> FormalSum:
    return _outer(polytope.polytope_sum(f, p)
                  for f, p in zip(child.factors, child.split(w)))


def child_cone_below(child: ChildAlgebra, w) -> tuple:
    cones = [dominant_cone_below(f, p) for f, p in zip(child.factors, child.split(w))]
    return tuple(child.join(parts) for parts in itertools.product(*cones))


@lru_cache(maxsize=4096)
def _minv_row(rs: RootSystemData, mu) -> tuple:
    """Row of the inverse orbit-decomposition matrix at mu, by the closed
    Weyl double-sum formula."""
    W = generate_weyl(rs)
    zero = tuple([0] * rs.rank)
    w_dot_zero = [(w.det, shifted_action(rs, w, zero)) for w in W]
    orb = orbit(rs, mu)
    scale = Fraction(len(orb), len(W))
    acc: dict = {}
    for x in W:
        xmu = x.apply(mu)
        for det, w0 in w_dot_zero:
            key = tuple(a + b for a, b in zip(xmu, w0))
            acc[key] = acc.get(key, 0) + det
    cone = set(dominant_cone_below(rs, mu))
    out = []
    for key, val in acc.items():
        if key in cone and val:
            v = scale * val
            assert v.denominator == 1
            out.append((key, int(v)))
    return tuple(out)


def child_minv_row(child: ChildAlgebra, mubar) -> dict:
    """M^-1 entries (mubar, .) for the product child, as a Kronecker
    product of factor rows."""
    rows = [dict(_minv_row(f, p)) for f, p in zip(child.factors, child.split(mubar))]
    out = {}
    for combo in itertools.product(*(r.items() for r in rows)):
        key = child.join(k for k, _ in combo)
        val = 1
        for _, v in combo:
            val *= v
        out[key] = val
    return out


def child_ainv_row(child: ChildAlgebra, mubar) -> dict:
    rows = [polytope.ainv_matrix(f, p).row(p)
            for f, p in zip(child.factors, child.split(mubar))]
    out = {}
    for combo in itertools.product(*(r.items() for r in rows)):
        key = child.join(k for k, _ in combo)
        val = 1
        for _, v in combo:
            val *= v
        out[key] = val
    return out


# ---------------------------------------------------------------------------
# embeddings

@dataclass(frozen=True)
class Embedding:
    parent: RootSystemData
    child: ChildAlgebra
    # image of each parent simple root, in child weight coordinates
    simple_root_images: tuple[tuple[Fraction, ...], ...]
    name: str = "custom"

    def project(self, mu) -> tuple:
        """Project a parent weight (Dynkin labels) to child labels."""
        coords = weight_to_root_basis(self.parent, mu)
        out = [Fraction(0)] * self.child.rank
        for c, img in zip(coords, self.simple_root_images):
            if c:
                for j, x in enumerate(img):
                    out[j] += Fraction(c) * x
        res = []
        for x in out:
            if x.denominator != 1:
                raise EmbeddingError(
                    f"projection of {tuple(mu)} has non-integral label {x}")
            res.append(int(x))
        return tuple(res)


def _validate_embedding(emb: Embedding) -> Embedding:
    # projected Dynkin labels of the fundamental weights must be integral
    r = emb.parent.rank
    for j in range(r):
        fund = tuple(int(i == j) for i in range(r))
        emb.project(fund)
    return emb


def embedding_principal_a1(rs: RootSystemData) -> Embedding:
    """The principal A1: every parent simple root maps to the A1 simple
    root (child label 2)."""
    child = ChildAlgebra(factors=(build_algebra(AlgebraId("A", 1)),))
    images = tuple((Fraction(2),) for _ in range(rs.rank))
    return _validate_embedding(Embedding(
        parent=rs, child=child, simple_root_images=images, name="principal-a1"))


def _match_component(parent_cartan, nodes):
    """Identify the sub-Cartan matrix on `nodes` as a standard simple
    algebra; returns (AlgebraId, node order) with node order listing the
    parent nodes in the standard labeling."""
    n = len(nodes)
    for series in SERIES:
        try:
            aid = AlgebraId(series, n)
        except Exception:
            continue
        std = build_algebra(aid).cartan
        for perm in itertools.permutations(nodes):
            if all(parent_cartan[perm[a]][perm[b]] == std[a][b]
                   for a in range(n) for b in range(n)):
                return aid, perm
    raise EmbeddingError(f"sub-diagram on nodes {sorted(nodes)} is not simple")


def embedding_regular_subdiagram(rs: RootSystemData, kept_nodes) -> Embedding:
    """Regular subalgebra from Dynkin-node deletion (1-based node ids);
    the projection restricts Dynkin labels to the kept coordinates."""
    kept = sorted(set(kept_nodes))
    if not kept or any(k < 1 or k > rs.rank for k in kept):
        raise EmbeddingError(f"invalid node set {kept_nodes} for {rs.algebra}")
    idx = [k - 1 for k in kept]
    # connected components of the induced sub-diagram
    remaining = set(idx)
    components = []
    while remaining:
        comp = {remaining.pop()}
        grew = True
        while grew:
            grew = False
            for a in list(remaining):
                if any(rs.cartan[a][b] != 0 for b in comp):
                    comp.add(a)
                    remaining.discard(a)
                    grew = True
        components.append(sorted(comp))
    components.sort()
    factors = []
    child_order = []  # parent node of each child coordinate
    for comp in components:
        aid, perm = _match_component(rs.cartan, comp)
        factors.append(build_algebra(aid))
        child_order.extend(perm)
    child = ChildAlgebra(factors=tuple(factors))
    images = tuple(
        tuple(Fraction(rs.cartan[j][k]) for k in child_order)
        for j in range(rs.rank)
    )
    name = "subdiagram:" + ",".join(str(k) for k in kept)
    return _validate_embedding(Embedding(
        parent=rs, child=child, simple_root_images=images, name=name))


def embedding_from_dict(doc: dict) -> Embedding:
    """Load an embedding from its document form:

    {"parent": "A3", "child": ["A1", "A1"],
     "simple_root_images": [["2", "0"], ["1", "1"], ["0", "2"]]}

    Images are child Dynkin labels of each parent simple root, exact
    rationals as "p/q" strings.
    """
    parent = build_algebra(parse_algebra(doc["parent"]))
    child = ChildAlgebra(factors=tuple(
        build_algebra(parse_algebra(n)) for n in doc["child"]))
    raw = doc["simple_root_images"]
    if len(raw) != parent.rank:
        raise EmbeddingError("need one image per parent simple root")
    images = []
    for img in raw:
        if len(img) != child.rank:
            raise EmbeddingError("image length must equal the child rank")
        images.append(tuple(Fraction(str(x)) for x in img))
    return _validate_embedding(Embedding(
        parent=parent, child=child, simple_root_images=tuple(images)))


def embedding_from_file(path) -> Embedding:
    with open(path) as fh:
        return embedding_from_dict(json.load(fh))


def parse_embedding_spec(rs: RootSystemData, spec: str) -> Embedding:
    """Resolve a CLI embedding spec: "principal-a1", "subdiagram:1,3", or
    a path to an embedding JSON file."""
    if spec == "principal-a1":
        return embedding_principal_a1(rs)
    if spec.startswith("subdiagram:"):
        nodes = [int(x) for x in spec.split(":", 1)[1].split(",")]
        return embedding_regular_subdiagram(rs, nodes)
    emb = embedding_from_file(spec)
    if emb.parent.algebra != rs.algebra:
        raise EmbeddingError(
            f"embedding file parent {emb.parent.algebra} does not match {rs.algebra}")
    return emb


# ---------------------------------------------------------------------------
# branching routes

@dataclass(frozen=True)
class BranchingResult:
    highest_weight: tuple
    coeffs: dict

    def __post_init__(self):
        assert all(v > 0 for v in self.coeffs.values())

    def __getitem__(self, mubar) -> int:
        return self.coeffs.get(tuple(mubar), 0)

    def dimension_check(self, emb: Embedding) -> bool:
        lhs = characters.dim(emb.parent, self.highest_weight)
        rhs = sum(v * child_dim(emb.child, m) for m, v in self.coeffs.items())
        return lhs == rhs


def _project_formal(emb: Embedding, fs: FormalSum) -> dict:
    out: dict = {}
    for mu, c in fs.terms.items():
        key = emb.project(mu)
        out[key] = out.get(key, 0) + c
    return {k: v for k, v in out.items() if v != 0}


def _greedy_decompose(child: ChildAlgebra, multiset: dict, builder,
                      require_nonnegative: bool) -> dict:
    """Peel child sums (characters, orbit sums, or polytope sums) from a
    projected multiset, highest weight first.  The residue must vanish
    exactly; a non-dominant maximal weight or (where required) a negative
    coefficient raises DecompositionError."""
    remaining = dict(multiset)
    coeffs: dict = {}
    while remaining:
        top = max(remaining, key=lambda m: (child_height_key(child, m), m))
        c = remaining[top]
        if not child_is_dominant(child, top):
            raise DecompositionError(
                f"maximal residual weight {top} is not dominant")
        if require_nonnegative and c < 0:
            raise DecompositionError(f"negative residual coefficient at {top}")
        coeffs[top] = coeffs.get(top, 0) + c
        for nu, m in builder(child, top).terms.items():
            v = remaining.get(nu, 0) - c * m
            if v:
                remaining[nu] = v
            else:
                remaining.pop(nu, None)
    return coeffs


def branch_bruteforce(emb: Embedding, lam) -> BranchingResult:
    """Oracle route: project the full parent character and peel child
    characters greedily."""
    if not is_dominant(lam):
        raise ValueError(f"{lam} is not dominant")
    projected = _project_formal(emb, characters.full_character(emb.parent, tuple(lam)))
    coeffs = _greedy_decompose(emb.child, projected, child_character,
                               require_nonnegative=True)
    return BranchingResult(highest_weight=tuple(lam), coeffs=coeffs)


def branch_via_orbits(emb: Embedding, lam) -> BranchingResult:
    """Decompose projected parent orbit sums into child orbit sums, then
    reassemble with the parent orbit multiplicities and the child inverse
    system."""
    if not is_dominant(lam):
        raise ValueError(f"{lam} is not dominant")
    lam = tuple(lam)
    dm = characters.mult_freudenthal(emb.parent, lam)
    acc: dict = {}
    for mu, m in dm.mults.items():
        projected = _project_formal(emb, characters.orbit_sum(emb.parent, mu))
        e = _greedy_decompose(emb.child, projected, child_orbit_sum,
                              require_nonnegative=True)
        for mubar, v in e.items():
            acc[mubar] = acc.get(mubar, 0) + m * v
    return BranchingResult(highest_weight=lam,
                           coeffs=_reassemble(emb.child, acc, child_minv_row))


def branch_via_polytopes(emb: Embedding, lam) -> BranchingResult:
    """Same reassembly with polytope data: parent polytope multiplicities,
    projected polytope sums decomposed into child polytope sums, and the
    child explicit inverse system."""
    if not is_dominant(lam):
        raise ValueError(f"{lam} is not dominant")
    lam = tuple(lam)
    pm = polytope.polytope_mults(emb.parent, lam)
    acc: dict = {}
    for mu, a in pm.polyts.items():
        projected = _project_formal(emb, polytope.polytope_sum(emb.parent, mu))
        p = _greedy_decompose(emb.child, projected, child_polytope_sum,
                              require_nonnegative=False)
        for mubar, v in p.items():
            assert isinstance(v, int)
            acc[mubar] = acc.get(mubar, 0) + a * v
    return BranchingResult(highest_weight=lam,
                           coeffs=_reassemble(emb.child, acc, child_ainv_row))


def _reassemble(child: ChildAlgebra, mult_one_coeffs: dict, inverse_row) -> dict:
    """Convert an expansion over multiplicity-1 child sums into child
    characters using the relevant inverse triangular system."""
    out: dict = {}
    for mubar, c in mult_one_coeffs.items():
        if c == 0:
            continue
        for lambar, v in inverse_row(child, mubar).items():
            out[lambar] = out.get(lambar, 0) + c * v
    return {k: v for k, v in out.items() if v != 0}
