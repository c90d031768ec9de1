"""Named verification suites with seeded instance generation and
structured, replayable reports.

Every suite is deterministic given (parameters, seed). Each trial
records the instance, the two quantities compared (in the `dim` and
`det` slots), an optional third closed-form value, the relation tested
and a pass flag; any failing trial flips the report's exit code to 2.
A failing inequality trial would be a counterexample to the
dimension-determinant conjecture and is reported with the full instance
for replay. Trials that cannot be run on an instance (no root edge, no
admissible permutation) are recorded as skipped, not failed.
"""

from __future__ import annotations

import csv
import io
import json
import time
from dataclasses import dataclass, field
from itertools import permutations

from .exact_linalg import (
    IntMatrix,
    det,
    has_dominant_diagonal,
    is_psd,
    matmul,
    matrix,
    principal_submatrix,
    transpose,
)
from .formulas import (
    parking_dim_complete,
    root_deleted_signless_det,
    step_weight_dim,
)
from .monomial_ideals import (
    MonomialIdeal,
    colon,
    matrix_skeleton_ideal,
    parking_ideal,
    skeleton_ideal,
    step_weight_ideal,
    lambda_ideal,
)
from .multigraph import (
    Multigraph,
    complete_minus_root_edges,
    complete_multigraph,
    delete_root_edge,
    from_edges,
    laplacians,
    merge_into_root,
    random_multigraph,
    random_root_deletion,
    relabel_vertices,
)
from .rng import SplitMix64
from .standard_count import (
    NonArtinianError,
    count_standard,
    count_standard_ie,
    enumerate_standard,
)


@dataclass(frozen=True)
class Trial:
    id: int
    instance: dict
    dim: int
    det: int
    formula: int | None
    relation: str  # "eq" | "geq"
    passed: bool

    def to_dict(self) -> dict:
        return {
            "id": self.id,
            "instance": self.instance,
            "dim": str(self.dim),
            "det": str(self.det),
            "formula": None if self.formula is None else str(self.formula),
            "relation": self.relation,
            "pass": self.passed,
        }


@dataclass
class Report:
    suite: str
    params: dict
    seed: int
    trials: list[Trial] = field(default_factory=list)
    elapsed_ms: int = 0

    @property
    def failed(self) -> list[Trial]:
        return [t for t in self.trials if not t.passed]

    @property
    def exit_code(self) -> int:
        return 0 if not self.failed else 2

    def to_dict(self) -> dict:
        return {
            "suite": self.suite,
            "params": self.params,
            "seed": self.seed,
            "trials": [t.to_dict() for t in self.trials],
            "summary": {
                "total": len(self.trials),
                "failed": len(self.failed),
                "elapsed_ms": self.elapsed_ms,
            },
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2)

    def to_csv(self) -> str:
        buf = io.StringIO()
        writer = csv.writer(buf)
        writer.writerow(["suite", "id", "relation", "pass", "dim", "det", "formula", "instance"])
        for t in self.trials:
            d = t.to_dict()
            writer.writerow([
                self.suite, d["id"], d["relation"], d["pass"],
                d["dim"], d["det"], "" if d["formula"] is None else d["formula"],
                json.dumps(d["instance"]),
            ])
        return buf.getvalue()

    def to_text(self) -> str:
        lines = [f"suite {self.suite}  seed={self.seed}  params={json.dumps(self.params)}"]
        for t in self.trials:
            status = "pass" if t.passed else "FAIL"
            extra = ""
            if t.relation == "geq":
                extra = f"  slack={t.dim - t.det}"
            if t.formula is not None:
                extra += f"  formula={t.formula}"
            label = t.instance.get("label") or t.instance.get("kind", "")
            skipped = t.instance.get("skipped")
            if skipped:
                lines.append(f"  [{t.id:4d}] skip  {label}  ({skipped})")
            else:
                lines.append(f"  [{t.id:4d}] {status}  {t.relation}  dim={t.dim}  det={t.det}{extra}  {label}")
        lines.append(f"summary: {len(self.trials)} trials, {len(self.failed)} failed, {self.elapsed_ms} ms")
        return "\n".join(lines) + "\n"


def _skel1(g: Multigraph) -> MonomialIdeal:
    # for a single non-root vertex the 1-skeleton is already the full ideal
    return skeleton_ideal(g, min(1, g.n - 1))


def _graph_instance(g: Multigraph, label: str = "", **extra) -> dict:
    inst = {"label": label, "n": g.n, "adj": [list(row) for row in g.adj]}
    inst.update(extra)
    return inst


def _matrix_instance(h: IntMatrix, label: str = "", **extra) -> dict:
    inst = {"label": label, "n": h.order, "rows": [list(row) for row in h.rows]}
    inst.update(extra)
    return inst


def _compare(tid: int, instance: dict, dim: int, dt: int, formula: int | None = None,
             relation: str = "eq", passed: bool | None = None) -> Trial:
    if passed is None:
        if relation == "eq":
            passed = dim == dt and (formula is None or formula == dim)
        else:
            passed = dim >= dt
    return Trial(tid, instance, dim, dt, formula, relation, passed)


def _skip(tid: int, instance: dict, reason: str) -> Trial:
    instance = dict(instance)
    instance["skipped"] = reason
    return Trial(tid, instance, 0, 0, None, "eq", True)


def _finish(report: Report, started: float) -> Report:
    report.elapsed_ms = int((time.monotonic() - started) * 1000)
    return report


# --- instance corpora --------------------------------------------------------


def path_graph(m: int) -> Multigraph:
    """Path 0-1-...-m."""
    return from_edges(m, [(i, i + 1, 1) for i in range(m)])


def cycle_graph(m: int) -> Multigraph:
    """Cycle through 0, 1, ..., m and back to 0."""
    return from_edges(m, [(i, i + 1, 1) for i in range(m)] + [(0, m, 1)])


def default_graph_corpus(seed: int = 0) -> list[tuple[str, Multigraph, int | None]]:
    """Deterministic mix of named graphs (with known spanning-tree counts)
    and seeded random multigraphs."""
    corpus: list[tuple[str, Multigraph, int | None]] = []
    for n in range(2, 6):
        corpus.append((f"K{n + 1}", complete_multigraph(n, 1, 1), (n + 1) ** (n - 1)))
    for n, a, b in [(2, 2, 1), (3, 2, 3), (4, 3, 2)]:
        corpus.append((f"K{n + 1}[a={a},b={b}]", complete_multigraph(n, a, b), parking_dim_complete(n, a, b)))
    for m in (2, 3, 4):
        corpus.append((f"P{m + 1}", path_graph(m), 1))
    for m in (3, 4):
        corpus.append((f"C{m + 1}", cycle_graph(m), m + 1))
    for n, r in [(3, 1), (3, 2), (4, 2)]:
        corpus.append((f"K{n + 1}-minus-{r}", complete_minus_root_edges(n, r), None))
    rng = SplitMix64(seed)
    for k in range(5):
        n = rng.randint(2, 4)
        corpus.append((f"random-{k}", random_multigraph(n, 2, rng.next_u64()), None))
    return corpus


def _random_dominant_psd(rng: SplitMix64, n: int, entry_max: int,
                         max_attempts: int = 2000) -> tuple[IntMatrix, int, str]:
    """Seeded PSD matrix in the dominant class with entries <= entry_max.

    Rotates among three strategies (truncated signless Laplacian of a
    random multigraph; diagonally dominant symmetric; Gram matrix with
    the diagonal lifted to row maxima); candidates violating the entry
    cap, the class condition or exact PSD-ness are discarded.
    """
    strategies = ("qtilde", "row-dominant", "gram-lift")
    for attempt in range(1, max_attempts + 1):
        strat = strategies[rng.randint(0, 2)]
        if strat == "qtilde":
            g = random_multigraph(n, 1 if n >= 4 else 2, rng.next_u64())
            h = laplacians(g).qtilde
        elif strat == "row-dominant":
            cap = max(1, entry_max // max(1, n - 1))
            off = [[0] * n for _ in range(n)]
            for i in range(n):
                for j in range(i + 1, n):
                    off[i][j] = off[j][i] = rng.randint(0, cap)
            rows = []
            for i in range(n):
                s = sum(off[i])
                rows.append([s + rng.randint(0, 1) if i == j else off[i][j] for j in range(n)])
            h = matrix(rows)
        else:
            b = matrix([[rng.randint(0, 1) for _ in range(n)] for _ in range(n)])
            h0 = matmul(transpose(b), b)
            rows = [list(r) for r in h0.rows]
            for i in range(n):
                rowmax = max((rows[i][j] for j in range(n) if j != i), default=0)
                if rows[i][i] < rowmax:
                    rows[i][i] = rowmax
            h = matrix(rows)
        if max(max(row) for row in h.rows) > entry_max:
            continue
        if has_dominant_diagonal(h) and is_psd(h):
            return h, attempt, strat
    raise RuntimeError(f"no admissible PSD instance found in {max_attempts} attempts (n={n}, entry_max={entry_max})")


# --- suites -------------------------------------------------------------------


def suite_matrix_tree(graphs: list[tuple[str, Multigraph, int | None]] | None = None,
                      seed: int = 0) -> Report:
    """Quotient dimension of the full parking ideal vs the truncated
    Laplacian determinant (the spanning-tree count)."""
    started = time.monotonic()
    if graphs is None:
        graphs = default_graph_corpus(seed)
    report = Report("matrix-tree", {"graphs": len(graphs)}, seed)
    for tid, (label, g, known) in enumerate(graphs):
        inst = _graph_instance(g, label)
        try:
            dim = count_standard(parking_ideal(g))
        except NonArtinianError as exc:
            inst["error"] = str(exc)
            report.trials.append(Trial(tid, inst, 0, 0, None, "eq", False))
            continue
        dt = det(laplacians(g).ltilde)
        report.trials.append(_compare(tid, inst, dim, dt, known))
    return _finish(report, started)


def suite_rc(n_max: int = 5, a_max: int = 3, b_max: int = 3,
             trials: int = 100, seed: int = 0) -> Report:
    """Dimension = determinant for root-deleted complete multigraphs:
    an exhaustive simple-graph grid checked three ways against the closed
    form, then seeded random root deletions."""
    started = time.monotonic()
    report = Report("rc", {"n_max": n_max, "a_max": a_max, "b_max": b_max, "trials": trials}, seed)
    tid = 0
    for n in range(2, n_max + 1):
        for r in range(0, n + 1):
            g = complete_minus_root_edges(n, r)
            dim = count_standard(skeleton_ideal(g, 1))
            dt = det(laplacians(g).qtilde)
            fo = root_deleted_signless_det(n, r)
            report.trials.append(_compare(tid, _graph_instance(g, f"grid n={n} r={r}"), dim, dt, fo))
            tid += 1
    rng = SplitMix64(seed)
    for _ in range(trials):
        n = rng.randint(1, n_max)
        a = rng.randint(1, a_max)
        b = rng.randint(1, b_max)
        g = random_root_deletion(n, a, b, rng.next_u64())
        inst = _graph_instance(g, f"root-deletion n={n} a={a} b={b}")
        try:
            dim = count_standard(_skel1(g))
        except NonArtinianError as exc:
            inst["error"] = str(exc)
            report.trials.append(Trial(tid, inst, 0, 0, None, "eq", False))
            tid += 1
            continue
        dt = det(laplacians(g).qtilde)
        report.trials.append(_compare(tid, inst, dim, dt))
        tid += 1
    return _finish(report, started)


def suite_ineq(n_max: int = 5, mult_max: int = 3, trials: int = 200, seed: int = 0) -> Report:
    """Dimension >= determinant for arbitrary multigraphs, with the path
    on four vertices as a deterministic strict-inequality witness."""
    started = time.monotonic()
    report = Report("ineq", {"n_max": n_max, "mult_max": mult_max, "trials": trials}, seed)
    p4 = path_graph(3)
    dim = count_standard(skeleton_ideal(p4, 1))
    dt = det(laplacians(p4).qtilde)
    report.trials.append(_compare(0, _graph_instance(p4, "P4"), dim, dt, relation="geq"))
    rng = SplitMix64(seed)
    for tid in range(1, trials + 1):
        n = rng.randint(1, n_max)
        g = random_multigraph(n, mult_max, rng.next_u64())
        inst = _graph_instance(g, f"random n={n}")
        try:
            dim = count_standard(_skel1(g))
        except NonArtinianError as exc:
            inst["error"] = str(exc)
            report.trials.append(Trial(tid, inst, 0, 0, None, "geq", False))
            continue
        dt = det(laplacians(g).qtilde)
        report.trials.append(_compare(tid, inst, dim, dt, relation="geq"))
    return _finish(report, started)


def suite_mt(n_max: int = 5, entry_max: int = 6, trials: int = 100, seed: int = 0) -> Report:
    """Dimension >= determinant for exactly-certified PSD matrices in the
    dominant class."""
    started = time.monotonic()
    report = Report("mt", {"n_max": n_max, "entry_max": entry_max, "trials": trials}, seed)
    rng = SplitMix64(seed)
    for tid in range(trials):
        n = rng.randint(1, n_max)
        h, attempts, strat = _random_dominant_psd(rng, n, entry_max)
        dim = count_standard(matrix_skeleton_ideal(h))
        dt = det(h)
        inst = _matrix_instance(h, f"psd n={n}", strategy=strat, attempts=attempts)
        report.trials.append(_compare(tid, inst, dim, dt, relation="geq"))
    return _finish(report, started)


def suite_recurrence(n_max: int = 5, a_max: int = 5) -> Report:
    """Exhaustive colon identity and dimension recurrence for the
    step-weight family, three-way against the alternating-sum closed form."""
    started = time.monotonic()
    report = Report("recurrence", {"n_max": n_max, "a_max": a_max}, 0)
    tid = 0
    for n in range(1, n_max + 1):
        for r in range(1, n + 1):
            for a in range(2, a_max + 1):
                prev = step_weight_ideal(n, r - 1, a)
                cur = step_weight_ideal(n, r, a)
                x = [0] * n
                x[n - r] = 1  # variable index n-r+1, 1-based
                quot = colon(prev, tuple(x))
                inst = {"label": f"colon n={n} r={r} a={a}", "n": n, "r": r, "a": a, "check": "colon"}
                report.trials.append(_compare(
                    tid, inst, count_standard(quot), count_standard(cur),
                    passed=quot == cur))
                tid += 1

                dims_cur = count_standard(cur)
                dims_prev = count_standard(prev)
                dims_small = count_standard(step_weight_ideal(n - 1, r - 1, a))
                inst = {"label": f"recurrence n={n} r={r} a={a}", "n": n, "r": r, "a": a, "check": "recurrence"}
                report.trials.append(_compare(
                    tid, inst, dims_cur, dims_prev - dims_small, step_weight_dim(n, r, a)))
                tid += 1
    return _finish(report, started)


def _find_pivot_permutation(h: IntMatrix) -> tuple[IntMatrix, int, int] | None:
    """Search all row/column permutations of h for an index r such that
    entries above position r in its column are strictly below the maximal
    off-diagonal entry b while entries to its right equal b. Returns the
    permuted matrix, r, and b, or None."""
    n = h.order
    b = max(h[i][j] for i in range(n) for j in range(n) if i != j)
    for perm in permutations(range(n)):
        hp = principal_submatrix(h, perm)
        for r in range(n - 1):
            if all(hp[i][r] < b for i in range(r)) and all(hp[r][j] == b for j in range(r + 1, n)):
                return hp, r, b
    return None


def suite_decomp(trials: int = 50, seed: int = 0) -> Report:
    """Determinant and dimension splitting identities.

    Per graph instance (root-deleted complete multigraph with a chosen
    root edge 0-j):
      (a) det Q~ of the graph = det Q~ after deleting the edge
                                + det Q~ after merging j into the root;
      (b) the same additivity for the 1-skeleton quotient dimensions.
    Per matrix instance (PSD, dominant class, permuted to a pivot index r
    with off-diagonal maximum b):
      (c) det H = (H_rr - b) det H2 + det T, where T has b at the pivot
          and H2 deletes the pivot row and column;
      (d) dim J_H = prod(H_ll - b, l > r) * dim J_H1 + (H_rr - b) * dim J_H2,
          where H1 is the leading principal block through r with b at the
          pivot.
    """
    started = time.monotonic()
    report = Report("decomp", {"trials": trials}, seed)
    rng = SplitMix64(seed)
    tid = 0
    checked = 0
    attempts = 0
    while checked < trials and attempts < 20 * trials:
        attempts += 1
        n = rng.randint(2, 4)
        a = rng.randint(1, 3)
        b = rng.randint(1, 3)
        g = random_root_deletion(n, a, b, rng.next_u64())
        base = _graph_instance(g, f"split n={n} a={a} b={b}")
        rooted = [j for j in range(1, n + 1) if g.adj[0][j] > 0]
        if not rooted:
            # record the skip, then draw a replacement so every identity
            # still gets `trials` checked instances
            report.trials.append(_skip(tid, {**base, "identity": "a"}, "no root edge"))
            tid += 1
            report.trials.append(_skip(tid, {**base, "identity": "b"}, "no root edge"))
            tid += 1
            continue
        checked += 1
        j = rng.choice(rooted)
        g1 = delete_root_edge(g, j)
        g2 = merge_into_root(g, j)
        lhs = det(laplacians(g).qtilde)
        rhs = det(laplacians(g1).qtilde) + det(laplacians(g2).qtilde)
        report.trials.append(_compare(tid, {**base, "identity": "a", "j": j}, lhs, rhs))
        tid += 1
        dim_lhs = count_standard(_skel1(g))
        dim_rhs = count_standard(_skel1(g1)) + count_standard(_skel1(g2))
        report.trials.append(_compare(tid, {**base, "identity": "b", "j": j}, dim_lhs, dim_rhs))
        tid += 1

    checked = 0
    attempts = 0
    while checked < trials and attempts < 20 * trials:
        attempts += 1
        n = rng.randint(2, 5)
        h, gen_attempts, strat = _random_dominant_psd(rng, n, 6)
        base = _matrix_instance(h, f"pivot-split n={n}", strategy=strat, attempts=gen_attempts)
        found = _find_pivot_permutation(h)
        if found is None:
            report.trials.append(_skip(tid, {**base, "identity": "c"}, "no admissible permutation"))
            tid += 1
            report.trials.append(_skip(tid, {**base, "identity": "d"}, "no admissible permutation"))
            tid += 1
            continue
        checked += 1
        hp, r, b = found
        alpha = hp[r][r]
        keep = [i for i in range(n) if i != r]
        h2 = principal_submatrix(hp, keep)
        t_rows = [list(row) for row in hp.rows]
        t_rows[r][r] = b
        t = matrix(t_rows)
        lhs = det(hp)
        rhs = (alpha - b) * det(h2) + det(t)
        report.trials.append(_compare(tid, {**base, "identity": "c", "r": r, "b": b}, lhs, rhs))
        tid += 1
        h1_rows = [list(row[: r + 1]) for row in hp.rows[: r + 1]]
        h1_rows[r][r] = b
        h1 = matrix(h1_rows)
        tail = 1
        for l in range(r + 1, n):
            tail *= hp[l][l] - b
        dim_lhs = count_standard(matrix_skeleton_ideal(hp))
        dim_rhs = (tail * count_standard(matrix_skeleton_ideal(h1))
                   + (alpha - b) * count_standard(matrix_skeleton_ideal(h2)))
        report.trials.append(_compare(tid, {**base, "identity": "d", "r": r, "b": b}, dim_lhs, dim_rhs))
        tid += 1
    return _finish(report, started)


def _shuffled(rng: SplitMix64, items: list) -> list:
    out = list(items)
    for i in range(len(out) - 1, 0, -1):
        j = rng.randint(0, i)
        out[i], out[j] = out[j], out[i]
    return out


def suite_properties(seed: int = 0) -> Report:
    """Cross-cutting consistency checks on a deterministic corpus:
    agreement of the three counting routes, Hadamard and Fischer bounds
    on PSD matrices, permutation invariance of dimensions and
    determinants, and skeleton monotonicity."""
    started = time.monotonic()
    report = Report("properties", {}, seed)
    corpus = default_graph_corpus(seed)
    rng = SplitMix64(seed)
    tid = 0

    ideals: list[tuple[str, MonomialIdeal]] = []
    for label, g, _ in corpus:
        ideals.append((f"skel1({label})", skeleton_ideal(g, 1)))
        if g.n <= 4:
            ideals.append((f"parking({label})", parking_ideal(g)))
    for lam in [(1, 1), (2, 1), (3, 2, 2), (4, 2, 2, 1)]:
        ideals.append((f"lambda{lam}", lambda_ideal(lam)))
    for n, r, a in [(3, 1, 3), (4, 2, 2), (5, 5, 4)]:
        ideals.append((f"step({n},{r},{a})", step_weight_ideal(n, r, a)))

    for label, ideal in ideals:
        walk = count_standard(ideal)
        inst = {"label": f"oracle {label}", "check": "oracle-agreement", "nvars": ideal.nvars,
                "generators": [list(g) for g in ideal.gens]}
        if len(ideal.gens) <= 22:
            report.trials.append(_compare(tid, {**inst, "oracle": "inclusion-exclusion"},
                                          walk, count_standard_ie(ideal)))
            tid += 1
        if walk <= 100000:
            report.trials.append(_compare(tid, {**inst, "oracle": "enumeration"},
                                          walk, len(enumerate_standard(ideal))))
            tid += 1

    psd_matrices: list[tuple[str, IntMatrix]] = []
    for label, g, _ in corpus:
        lap = laplacians(g)
        psd_matrices.append((f"qtilde({label})", lap.qtilde))
        psd_matrices.append((f"ltilde({label})", lap.ltilde))
    for k in range(4):
        n = rng.randint(2, 5)
        b = matrix([[rng.randint(0, 2) for _ in range(n)] for _ in range(n)])
        psd_matrices.append((f"gram-{k}", matmul(transpose(b), b)))

    for label, m in psd_matrices:
        inst = {"label": f"bounds {label}", "check": "hadamard-fischer",
                "rows": [list(r) for r in m.rows]}
        if not is_psd(m):
            report.trials.append(Trial(tid, {**inst, "error": "expected PSD"}, 0, 0, None, "eq", False))
            tid += 1
            continue
        diag_prod = 1
        for i in range(m.order):
            diag_prod *= m[i][i]
        report.trials.append(_compare(tid, {**inst, "bound": "hadamard"}, diag_prod, det(m), relation="geq"))
        tid += 1
        for k in range(1, m.order):
            a = principal_submatrix(m, range(k))
            c = principal_submatrix(m, range(k, m.order))
            report.trials.append(_compare(tid, {**inst, "bound": f"fischer-{k}"},
                                          det(a) * det(c), det(m), relation="geq"))
            tid += 1

    for label, g, _ in corpus:
        if g.n < 2:
            continue
        perm = _shuffled(rng, list(range(1, g.n + 1)))
        gp = relabel_vertices(g, perm)
        inst = {"label": f"relabel {label}", "check": "permutation-invariance", "perm": perm}
        report.trials.append(_compare(tid, {**inst, "quantity": "skel1-dim"},
                                      count_standard(skeleton_ideal(g, 1)),
                                      count_standard(skeleton_ideal(gp, 1))))
        tid += 1
        report.trials.append(_compare(tid, {**inst, "quantity": "qtilde-det"},
                                      det(laplacians(g).qtilde), det(laplacians(gp).qtilde)))
        tid += 1
        report.trials.append(_compare(tid, {**inst, "quantity": "ltilde-det"},
                                      det(laplacians(g).ltilde), det(laplacians(gp).ltilde)))
        tid += 1

    for label, g, _ in corpus:
        if g.n < 2 or g.n > 4:
            continue
        counts = [count_standard(skeleton_ideal(g, k)) for k in range(g.n)]
        for k in range(g.n - 1):
            inst = {"label": f"monotone {label} k={k}", "check": "skeleton-monotonicity"}
            report.trials.append(_compare(tid, inst, counts[k], counts[k + 1], relation="geq"))
            tid += 1

    return _finish(report, started)


SUITES = {
    "matrix-tree": suite_matrix_tree,
    "rc": suite_rc,
    "ineq": suite_ineq,
    "mt": suite_mt,
    "recurrence": suite_recurrence,
    "decomp": suite_decomp,
    "properties": suite_properties,
}
