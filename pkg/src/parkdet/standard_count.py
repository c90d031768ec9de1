"""Counting and enumerating standard monomials of Artinian quotients.

A monomial ideal is Artinian here when every variable carries a pure
power generator; the pure-power exponents bound the search box. The
primary counter walks that box coordinate by coordinate, dropping a
whole subtree as soon as some generator divides the current prefix (the
two innermost coordinates are folded into closed-form staircase counts,
which visits the same tree without the leaf-level Python loop). An
independent inclusion-exclusion counter over generator subsets serves as
a cross-check oracle, and brute-force parking predicates give a third,
ideal-free route for the graph and sequence cases.

Dimensions are monomial counts, so they are field independent; all
results are Python ints (arbitrary precision).
"""

from __future__ import annotations

from itertools import combinations
from typing import Iterable

from .monomial_ideals import Monomial, MonomialIdeal
from .multigraph import Multigraph

ENUMERATION_GUARD = 10**6
IE_GENERATOR_GUARD = 22


class NonArtinianError(ValueError):
    """Quotient is infinite dimensional; names the unbounded variable."""


def artinian_bounds(ideal: MonomialIdeal) -> tuple[int, ...]:
    """Pure-power exponent per variable (the box); raises NonArtinianError
    naming the first variable without a pure power generator."""
    bounds = []
    for i in range(ideal.nvars):
        bound = None
        for g in ideal.gens:
            if g[i] > 0 and all(e == 0 for k, e in enumerate(g) if k != i):
                bound = g[i]
                break
        if bound is None:
            if ideal.is_unit:
                bound = 0
            else:
                raise NonArtinianError(f"no pure power of x_{i + 1}: quotient is not finite dimensional")
        bounds.append(bound)
    return tuple(bounds)


def count_standard(ideal: MonomialIdeal) -> int:
    """Number of monomials outside the ideal (the quotient dimension)."""
    bounds = artinian_bounds(ideal)
    n = ideal.nvars
    if n == 0:
        return 0 if ideal.gens else 1
    if ideal.is_unit:
        return 0
    return _walk_count(list(ideal.gens), bounds, 0)


def _walk_count(active: list[Monomial], bounds: tuple[int, ...], depth: int) -> int:
    """Count standard monomials extending the current prefix.

    `active` holds the generators compatible with the prefix so far
    (g[i] <= p[i] for all assigned coordinates i < depth).
    """
    n = len(bounds)
    remaining = n - depth
    if remaining == 1:
        cap = bounds[depth]
        for g in active:
            if g[depth] < cap:
                cap = g[depth]
        return cap
    if remaining == 2:
        return _staircase2(active, depth, bounds[depth], bounds[depth + 1])

    total = 0
    order = sorted(active, key=lambda g: g[depth])
    idx = 0
    current: list[Monomial] = []
    for p in range(bounds[depth]):
        while idx < len(order) and order[idx][depth] <= p:
            g = order[idx]
            idx += 1
            if all(e == 0 for e in g[depth + 1:]):
                return total  # g divides the prefix: this p and every later one is inside
            current.append(g)
        total += _walk_count(current, bounds, depth + 1)
    return total


def _staircase2(active: list[Monomial], depth: int, b1: int, b2: int) -> int:
    """Standard pairs (p, q) in a b1 x b2 box avoiding the upper-right
    quadrants of the active generators' last two exponents."""
    pairs = sorted((g[depth], g[depth + 1]) for g in active)
    total = 0
    cap = b2
    idx = 0
    for p in range(b1):
        while idx < len(pairs) and pairs[idx][0] <= p:
            v = pairs[idx][1]
            if v < cap:
                cap = v
            idx += 1
        if cap == 0:
            break
        total += cap
    return total


def count_standard_ie(ideal: MonomialIdeal) -> int:
    """Independent oracle: inclusion-exclusion over generator subsets.

    Each subset contributes (-1)^|S| times the number of box monomials
    divisible by lcm(S); subsets whose lcm already escapes the box are
    pruned together with all their supersets.
    """
    bounds = artinian_bounds(ideal)
    gens = ideal.gens
    if len(gens) > IE_GENERATOR_GUARD:
        raise ValueError(f"inclusion-exclusion guard: {len(gens)} generators exceed {IE_GENERATOR_GUARD}")
    n = ideal.nvars
    if n == 0:
        return 0 if gens else 1

    def box_multiples(lcm: Monomial) -> int:
        vol = 1
        for b, e in zip(bounds, lcm):
            if e >= b:
                return 0
            vol *= b - e
        return vol

    total = 1
    for b in bounds:
        total *= b
    zero = (0,) * n

    def rec(start: int, lcm: Monomial, sign: int):
        nonlocal total
        for k in range(start, len(gens)):
            merged = tuple(max(a, b) for a, b in zip(lcm, gens[k]))
            vol = box_multiples(merged)
            if vol == 0:
                continue
            total += sign * vol
            rec(k + 1, merged, -sign)

    rec(0, zero, -1)
    return total


def enumerate_standard(ideal: MonomialIdeal) -> list[Monomial]:
    """All standard monomials in lexicographic order."""
    count = count_standard(ideal)
    if count > ENUMERATION_GUARD:
        raise ValueError(f"enumeration guard: {count} standard monomials exceed {ENUMERATION_GUARD}")
    bounds = artinian_bounds(ideal)
    n = ideal.nvars
    if n == 0:
        return [] if ideal.gens else [()]
    out: list[Monomial] = []
    prefix = [0] * n

    def rec(depth: int, active: list[Monomial]):
        if depth == n:
            out.append(tuple(prefix))
            return
        order = sorted(active, key=lambda g: g[depth])
        idx = 0
        current: list[Monomial] = []
        for p in range(bounds[depth]):
            while idx < len(order) and order[idx][depth] <= p:
                g = order[idx]
                idx += 1
                if all(e == 0 for e in g[depth + 1:]):
                    return
                current.append(g)
            prefix[depth] = p
            rec(depth + 1, current)
        prefix[depth] = 0

    rec(0, list(ideal.gens))
    return out


def write_standard(ideal: MonomialIdeal, path: str) -> int:
    """Stream the enumeration to a file, one exponent vector per line;
    returns the count."""
    monomials = enumerate_standard(ideal)
    with open(path, "w", encoding="utf-8") as fh:
        for m in monomials:
            fh.write(" ".join(str(e) for e in m) + "\n")
    return len(monomials)


def is_lambda_parking(p: Iterable[int], lam: tuple[int, ...]) -> bool:
    """Sorted rearrangement of p must stay strictly below the reversed
    bound sequence."""
    p = tuple(p)
    n = len(lam)
    if len(p) != n:
        raise ValueError(f"vector length {len(p)} != sequence length {n}")
    if any(lam[i] < lam[i + 1] for i in range(n - 1)) or (n and lam[-1] < 1):
        raise ValueError(f"sequence must be nonincreasing and >= 1, got {lam}")
    ordered = sorted(p)
    return all(ordered[i] < lam[n - 1 - i] for i in range(n))


def count_lambda_parking(lam: tuple[int, ...]) -> int:
    """Brute force over the full box [0, lam[0])^n."""
    n = len(lam)
    if n == 0:
        return 1
    count = 0
    top = lam[0]
    vec = [0] * n

    def rec(i: int):
        nonlocal count
        if i == n:
            if is_lambda_parking(vec, lam):
                count += 1
            return
        for v in range(top):
            vec[i] = v
            rec(i + 1)

    rec(0)
    return count


def is_g_parking(g: Multigraph, p: Iterable[int]) -> bool:
    """Direct subset scan: every nonempty subset A must contain a vertex i
    with p_i strictly below its boundary degree."""
    p = tuple(p)
    if len(p) != g.n:
        raise ValueError(f"vector length {len(p)} != {g.n}")
    verts = range(1, g.n + 1)
    for size in range(1, g.n + 1):
        for a in combinations(verts, size):
            inside = set(a)
            ok = False
            for i in a:
                d = sum(g.adj[i][j] for j in range(g.n + 1) if j not in inside)
                if p[i - 1] < d:
                    ok = True
                    break
            if not ok:
                return False
    return True
