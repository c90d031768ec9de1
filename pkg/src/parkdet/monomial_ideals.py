"""Monomial ideals given by finite generator lists.

A monomial is an exponent tuple; an ideal keeps its minimal generators
only (minimalization is applied eagerly by the constructor). The zero
monomial as a generator denotes the unit ideal. Constructors cover the
parking-function ideal of a rooted multigraph, its k-skeleton subideals,
the ideal of a nonincreasing exponent sequence, a two-level weight
family, and the skeleton-type ideal attached to a symmetric integer
matrix with dominant diagonal.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from itertools import combinations
from typing import Iterable

from .exact_linalg import IntMatrix, has_dominant_diagonal
from .multigraph import Multigraph, _check_subset, degree_outside

Monomial = tuple[int, ...]


def divides(g: Monomial, m: Monomial) -> bool:
    return all(ge <= me for ge, me in zip(g, m))


def _minimalize(gens: Iterable[Monomial]) -> tuple[Monomial, ...]:
    # sort by total degree so any divisor of m precedes m
    ordered = sorted(set(gens), key=lambda g: (sum(g), g))
    kept: list[Monomial] = []
    for g in ordered:
        if not any(divides(h, g) for h in kept):
            kept.append(g)
    return tuple(sorted(kept))


@dataclass(frozen=True)
class MonomialIdeal:
    """nvars and the minimal generators, canonically sorted.

    Equality of two MonomialIdeal values is equality of ideals, since
    minimal generating sets of monomial ideals are unique.
    """

    nvars: int
    gens: tuple[Monomial, ...]

    def __post_init__(self):
        if self.nvars < 0:
            raise ValueError("nvars must be >= 0")
        for g in self.gens:
            if len(g) != self.nvars:
                raise ValueError(f"generator {g} has {len(g)} exponents, expected {self.nvars}")
            if any(e < 0 for e in g):
                raise ValueError(f"negative exponent in generator {g}")
        object.__setattr__(self, "gens", _minimalize(self.gens))

    @property
    def is_unit(self) -> bool:
        return len(self.gens) == 1 and not any(self.gens[0])

    def __contains__(self, m: Monomial) -> bool:
        if len(m) != self.nvars:
            raise ValueError(f"monomial {m} has {len(m)} exponents, expected {self.nvars}")
        return any(divides(g, m) for g in self.gens)


def contains(ideal: MonomialIdeal, m: Monomial) -> bool:
    return m in ideal


def boundary_monomial(g: Multigraph, subset: Iterable[int]) -> Monomial:
    """Exponent of x_i is the number of edges from i to outside the subset
    (0 for vertices not in the subset)."""
    a = _check_subset(g, subset)
    expo = [0] * g.n
    for i in a:
        expo[i - 1] = degree_outside(g, a, i)
    return tuple(expo)


def skeleton_ideal(g: Multigraph, k: int) -> MonomialIdeal:
    """Generated by the boundary monomials of all nonempty subsets of size
    at most k+1."""
    if not 0 <= k <= g.n - 1:
        raise ValueError(f"k must lie in [0, {g.n - 1}], got {k}")
    gens = []
    for size in range(1, k + 2):
        for a in combinations(range(1, g.n + 1), size):
            gens.append(boundary_monomial(g, a))
    return MonomialIdeal(g.n, tuple(gens))


def parking_ideal(g: Multigraph) -> MonomialIdeal:
    """Full ideal: boundary monomials of every nonempty subset."""
    return skeleton_ideal(g, g.n - 1)


def lambda_ideal(lam: tuple[int, ...]) -> MonomialIdeal:
    """For each nonempty subset A, the product of its variables raised to
    lam[|A|-1]; lam must be nonincreasing and positive."""
    n = len(lam)
    if n == 0:
        raise ValueError("empty exponent sequence")
    if any(lam[i] < lam[i + 1] for i in range(n - 1)) or lam[-1] < 1:
        raise ValueError(f"sequence must be nonincreasing and >= 1, got {lam}")
    gens = []
    for size in range(1, n + 1):
        e = lam[size - 1]
        for a in combinations(range(n), size):
            g = [0] * n
            for i in a:
                g[i] = e
            gens.append(tuple(g))
    return MonomialIdeal(n, tuple(gens))


@dataclass(frozen=True)
class StepWeight:
    """Weight a on the first n-r variables, a-1 on the remaining r."""

    n: int
    r: int
    a: int

    def __post_init__(self):
        if not 0 <= self.r <= self.n:
            raise ValueError(f"r must lie in [0, {self.n}], got {self.r}")
        low = self.a if self.r == 0 else self.a - 1
        if low < 1:
            raise ValueError(f"weights must stay >= 1: n={self.n}, r={self.r}, a={self.a}")

    def of(self, i: int) -> int:
        if not 1 <= i <= self.n:
            raise ValueError(f"variable index {i} out of range")
        return self.a if i <= self.n - self.r else self.a - 1


def step_weight_ideal(n: int, r: int, a: int) -> MonomialIdeal:
    """Pure powers x_i^w(i) plus all cross products x_i^{w(i)-1} x_j^{w(j)-1}
    for the step weight w; n = 0 gives the zero ideal in no variables."""
    if n < 0:
        raise ValueError("n must be >= 0")
    if n == 0:
        if r != 0:
            raise ValueError("r must be 0 when n = 0")
        return MonomialIdeal(0, ())
    w = StepWeight(n, r, a)
    gens = []
    for i in range(1, n + 1):
        g = [0] * n
        g[i - 1] = w.of(i)
        gens.append(tuple(g))
    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            g = [0] * n
            g[i - 1] = w.of(i) - 1
            g[j - 1] = w.of(j) - 1
            gens.append(tuple(g))
    return MonomialIdeal(n, tuple(gens))


def matrix_skeleton_ideal(h: IntMatrix) -> MonomialIdeal:
    """Skeleton-type ideal of a symmetric nonnegative matrix whose diagonal
    dominates each row: pure powers x_l^{h_ll} and, for each pair i < j,
    x_i^{h_ii - h_ij} x_j^{h_jj - h_ij}.

    For the truncated signless Laplacian of a multigraph this coincides
    with the 1-skeleton ideal of the graph.
    """
    if not has_dominant_diagonal(h):
        raise ValueError("matrix must be symmetric, nonnegative, with row-dominant diagonal")
    n = h.order
    gens = []
    for l in range(n):
        g = [0] * n
        g[l] = h[l][l]
        gens.append(tuple(g))
    for i in range(n):
        for j in range(i + 1, n):
            g = [0] * n
            g[i] = h[i][i] - h[i][j]
            g[j] = h[j][j] - h[i][j]
            gens.append(tuple(g))
    return MonomialIdeal(n, tuple(gens))


def colon(ideal: MonomialIdeal, m: Monomial) -> MonomialIdeal:
    """Colon ideal (I : m), generated by g / gcd(g, m) over generators g."""
    if len(m) != ideal.nvars:
        raise ValueError(f"monomial {m} has {len(m)} exponents, expected {ideal.nvars}")
    gens = tuple(tuple(max(ge - me, 0) for ge, me in zip(g, m)) for g in ideal.gens)
    return MonomialIdeal(ideal.nvars, gens)


def adjoin_power(ideal: MonomialIdeal, var: int, e: int) -> MonomialIdeal:
    """Ideal generated by I together with x_var^e (var is 1-based);
    e = 0 adjoins 1, giving the unit ideal."""
    if not 1 <= var <= ideal.nvars:
        raise ValueError(f"variable index {var} out of range")
    if e < 0:
        raise ValueError("exponent must be >= 0")
    g = [0] * ideal.nvars
    g[var - 1] = e
    return MonomialIdeal(ideal.nvars, ideal.gens + (tuple(g),))


def ideal_to_text(ideal: MonomialIdeal) -> str:
    """One generator per line, space-separated exponents."""
    return "\n".join(" ".join(str(e) for e in g) for g in ideal.gens) + "\n"


def ideal_to_json(ideal: MonomialIdeal) -> str:
    return json.dumps({"nvars": ideal.nvars, "generators": [[str(e) for e in g] for g in ideal.gens]})


def ideal_from_json(text: str) -> MonomialIdeal:
    data = json.loads(text)
    return MonomialIdeal(int(data["nvars"]), tuple(tuple(int(e) for e in g) for g in data["generators"]))
