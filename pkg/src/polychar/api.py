"""Command implementations shared by the HTTP service and the CLI.

Each operation returns a plain, JSON-serializable output document:

    {"schema_version": "1", "command": ..., "algebra": ...,
     "inputs": {...}, "result": {...}}

Documents are deterministic: identical inputs produce identical payloads
(weights serialize as comma-separated Dynkin labels, maps are emitted
with sorted keys by the serializer).
"""

from __future__ import annotations

import random

from . import branching, characters, polytope, products
from .polytope import DegenerateDirectionError
from .rootsystem import (
    RootSystemData,
    algebra,
    is_dominant,
    root_height,
    weight_to_root_basis,
)

SCHEMA_VERSION = "1"

BRION_RELATIVE_TOLERANCE = 1e-9
BRION_DEFAULT_DIRECTIONS = 20


class CrossCheckError(RuntimeError):
    """Independent computation routes disagreed."""


def weight_str(w) -> str:
    return ",".join(str(x) for x in w)


def parse_weight(text: str, rank: int) -> tuple:
    try:
        w = tuple(int(x) for x in str(text).split(","))
    except ValueError:
        raise ValueError(f"cannot parse weight {text!r}")
    if len(w) != rank:
        raise ValueError(f"weight {text!r} has {len(w)} labels, expected {rank}")
    return w


def _require_dominant(w):
    if not is_dominant(w):
        raise ValueError(f"weight {weight_str(w)} is not dominant")
    return w


def _document(command, algebra_name, inputs, result) -> dict:
    return {
        "schema_version": SCHEMA_VERSION,
        "command": command,
        "algebra": algebra_name,
        "inputs": inputs,
        "result": result,
    }


def _weight_map(d: dict) -> dict:
    return {weight_str(k): v for k, v in sorted(d.items())}


def _check_height_bound(rs, lam, height_bound):
    """Optional resource guard: reject weights whose weight system is
    deeper than height_bound steps of simple roots."""
    if height_bound is None:
        return
    depth = root_height(weight_to_root_basis(rs, lam))
    if depth > height_bound:
        raise ValueError(
            f"weight {weight_str(lam)} has depth {depth}, "
            f"exceeding --height-bound {height_bound}")


def cmd_mults(algebra_name: str, weight: str, height_bound: int | None = None) -> dict:
    rs = algebra(algebra_name)
    lam = _require_dominant(parse_weight(weight, rs.rank))
    _check_height_bound(rs, lam, height_bound)
    dm = characters.mult_freudenthal(rs, lam)
    return _document("mults", str(rs.algebra), {"weight": weight_str(lam)}, {
        "dim": characters.dim(rs, lam),
        "mults": _weight_map(dm.mults),
    })


def cmd_polytope(algebra_name: str, weight: str, height_bound: int | None = None) -> dict:
    rs = algebra(algebra_name)
    lam = _require_dominant(parse_weight(weight, rs.rank))
    _check_height_bound(rs, lam, height_bound)
    pm = polytope.polytope_mults(rs, lam)
    ainv_row = polytope.ainv_matrix(rs, lam).row(lam)
    recovered = polytope.recover_mults(rs, pm)
    oracle = characters.mult_freudenthal(rs, lam)
    if recovered.mults != oracle.mults:
        raise CrossCheckError(
            "recovered multiplicities disagree with the Freudenthal oracle")
    return _document("polytope", str(rs.algebra), {"weight": weight_str(lam)}, {
        "polytope_mults": _weight_map(pm.polyts),
        "ainv_row": _weight_map(ainv_row),
        "polytope_dimension": polytope.polytope_dimension(rs, lam),
        "recovered_mults": _weight_map(recovered.mults),
    })


TENSOR_METHODS = ("brute", "rs", "polytope", "all")


def cmd_tensor(algebra_name: str, left: str, right: str, method: str = "all") -> dict:
    if method not in TENSOR_METHODS:
        raise ValueError(f"unknown tensor method {method!r}")
    rs = algebra(algebra_name)
    lam = _require_dominant(parse_weight(left, rs.rank))
    mu = _require_dominant(parse_weight(right, rs.rank))
    routes = {
        "brute": products.tensor_bruteforce,
        "rs": products.tensor_racah_speiser,
        "polytope": products.tensor_polytope,
    }
    result: dict = {}
    if method == "all":
        decomps = {name: fn(rs, lam, mu) for name, fn in routes.items()}
        coeff_sets = {name: d.coeffs for name, d in decomps.items()}
        agreement = len({frozenset(c.items()) for c in coeff_sets.values()}) == 1
        chosen = decomps["brute"]
        if not agreement:
            raise CrossCheckError(
                f"tensor routes disagree for {algebra_name} "
                f"{weight_str(lam)} x {weight_str(mu)}")
        result["agreement"] = True
    else:
        chosen = routes[method](rs, lam, mu)
    if not chosen.dimension_check(rs):
        raise CrossCheckError("tensor decomposition fails the dimension sum rule")
    result["decomposition"] = _weight_map(chosen.coeffs)
    result["dim_product"] = characters.dim(rs, lam) * characters.dim(rs, mu)
    inputs = {"left": weight_str(lam), "right": weight_str(mu), "method": method}
    return _document("tensor", str(rs.algebra), inputs, result)


BRANCH_METHODS = ("brute", "orbits", "polytopes", "all")


def cmd_branch(algebra_name: str, embedding_spec, weight: str, method: str = "all") -> dict:
    if method not in BRANCH_METHODS:
        raise ValueError(f"unknown branch method {method!r}")
    rs = algebra(algebra_name)
    if isinstance(embedding_spec, dict):
        emb = branching.embedding_from_dict(embedding_spec)
        if emb.parent.algebra != rs.algebra:
            raise branching.EmbeddingError("embedding parent does not match algebra")
        spec_echo = "inline"
    else:
        emb = branching.parse_embedding_spec(rs, str(embedding_spec))
        spec_echo = str(embedding_spec)
    lam = _require_dominant(parse_weight(weight, rs.rank))
    routes = {
        "brute": branching.branch_bruteforce,
        "orbits": branching.branch_via_orbits,
        "polytopes": branching.branch_via_polytopes,
    }
    result: dict = {}
    if method == "all":
        decomps = {name: fn(emb, lam) for name, fn in routes.items()}
        agreement = len({frozenset(d.coeffs.items()) for d in decomps.values()}) == 1
        if not agreement:
            raise CrossCheckError(
                f"branching routes disagree for {algebra_name} {spec_echo} "
                f"{weight_str(lam)}")
        chosen = decomps["brute"]
        result["agreement"] = True
    else:
        chosen = routes[method](emb, lam)
    if not chosen.dimension_check(emb):
        raise CrossCheckError("branching fails the dimension sum rule")
    result["child"] = str(emb.child)
    result["branching"] = _weight_map(chosen.coeffs)
    inputs = {"embedding": spec_echo, "weight": weight_str(lam), "method": method}
    return _document("branch", str(rs.algebra), inputs, result)


def sample_generic_direction(rs: RootSystemData, rng: random.Random) -> list:
    """Random direction in [0.5, 1.5]^r, rejected while any vertex-cone
    denominator factor is smaller in magnitude than the floor."""
    zero = tuple([0] * rs.rank)
    while True:
        c = [rng.uniform(0.5, 1.5) for _ in range(rs.rank)]
        try:
            polytope.brion_check(rs, zero, c)
        except DegenerateDirectionError:
            continue
        return c


def cmd_brion_check(algebra_name: str, weight: str, seed: int = 0,
                    directions: int = BRION_DEFAULT_DIRECTIONS) -> dict:
    rs = algebra(algebra_name)
    lam = _require_dominant(parse_weight(weight, rs.rank))
    rng = random.Random(seed)
    samples = []
    max_rel = 0.0
    for _ in range(directions):
        c = sample_generic_direction(rs, rng)
        lhs, rhs = polytope.brion_check(rs, lam, c)
        rel = abs(lhs - rhs) / max(abs(lhs), 1.0)
        max_rel = max(max_rel, rel)
        samples.append({"direction": c, "lhs": lhs, "rhs": rhs, "rel_err": rel})
    ok = max_rel < BRION_RELATIVE_TOLERANCE
    if not ok:
        raise CrossCheckError(
            f"vertex-cone identity violated: max relative error {max_rel}")
    inputs = {"weight": weight_str(lam), "seed": seed, "directions": directions}
    return _document("brion-check", str(rs.algebra), inputs, {
        "max_rel_err": max_rel,
        "tolerance": BRION_RELATIVE_TOLERANCE,
        "pass": True,
        "samples": samples,
    })
