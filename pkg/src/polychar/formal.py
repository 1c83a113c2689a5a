"""Finite formal sums of exponentials e^mu with integer coefficients.

Represented as plain weight -> coefficient maps; zero coefficients are
never stored.  Used concretely for characters, Weyl orbit sums, and
polytope sums.
"""

from __future__ import annotations

import math
from dataclasses import dataclass


@dataclass(frozen=True)
class FormalSum:
    terms: dict

    def __post_init__(self):
        object.__setattr__(self, "terms", {
            tuple(k): v for k, v in self.terms.items() if v != 0
        })

    def __getitem__(self, mu) -> int:
        return self.terms.get(tuple(mu), 0)

    def __len__(self):
        return len(self.terms)

    def __add__(self, other: "FormalSum") -> "FormalSum":
        out = dict(self.terms)
        for k, v in other.terms.items():
            out[k] = out.get(k, 0) + v
        return FormalSum(out)

    def __sub__(self, other: "FormalSum") -> "FormalSum":
        return self + other.scale(-1)

    def scale(self, c: int) -> "FormalSum":
        return FormalSum({k: c * v for k, v in self.terms.items()})

    def __mul__(self, other: "FormalSum") -> "FormalSum":
        """Product of exponential sums: e^mu * e^nu = e^(mu+nu)."""
        out: dict = {}
        for a, ca in self.terms.items():
            for b, cb in other.terms.items():
                key = tuple(x + y for x, y in zip(a, b))
                out[key] = out.get(key, 0) + ca * cb
        return FormalSum(out)

    def __eq__(self, other) -> bool:
        return isinstance(other, FormalSum) and self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def total(self) -> int:
        """Sum of all coefficients (the value at the origin direction)."""
        return sum(self.terms.values())


def eval_numeric(fs: FormalSum, c) -> float:
    """Evaluate sum_mu terms(mu) * exp(<c, mu>) at a real direction c,
    pairing c with Dynkin labels by the plain dot product."""
    return sum(v * math.exp(sum(ci * mi for ci, mi in zip(c, mu)))
               for mu, v in fs.terms.items())
