"""Exhaustive small-order checks of the extremal and spectral claims.

Each ``verify_*`` function returns a :class:`VerificationReport`.  A
``falsified`` report always carries a witness whose graph6 string is enough
to reproduce the failure.  Reports serialise to one JSON object per line;
see ``docs/report-schema.md``.
"""

from __future__ import annotations

import json
import math
import os
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Any, NamedTuple

import numpy as np

from . import __version__
from .closed_forms import (
    H_THRESHOLD,
    balanced_split,
    broom_argmax_candidates,
    f_a_quartic,
    fa_monotone,
    h_eps_poly,
    h_equality_condition,
    h_least_eigenvalue,
    rho_squared_broom,
)
from .enumerate import free_trees, trees_with_diameter
from .errors import EvenDiameter, ParameterOutOfRange
from .families import double_broom, path, spider_h
from .formats import graph6_decode, graph6_encode
from .graph import Graph, ahu_canonical, distance_profile, graph_from_edges
from .kernels import prufer_decode
from .spectra import eccentricity_matrix_from_profile, eigenvalues_symmetric, support_is_connected

TOL = 1e-8
AMBIGUOUS = 1e-6
GAP = 1e-9
GRID_TOL = 1e-7
MAX_VERIFY_ORDER = 14
LOWER = H_THRESHOLD
UPPER = -2.0 * math.sqrt(2.0)

VERIFIED, FALSIFIED, SKIPPED = "verified", "falsified", "skipped"


def sig12(obj: Any) -> Any:
    """Round every float in a JSON-like structure to 12 significant digits."""
    if isinstance(obj, (float, np.floating)):
        x = float(obj)
        return x if not math.isfinite(x) else float(f"{x:.12g}")
    if isinstance(obj, (np.integer,)):
        return int(obj)
    if isinstance(obj, np.ndarray):
        return [sig12(v) for v in obj.tolist()]
    if isinstance(obj, dict):
        return {str(k): sig12(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [sig12(v) for v in obj]
    return obj


@dataclass
class VerificationReport:
    check_id: str
    parameters: dict[str, Any]
    status: str = VERIFIED
    instances: int = 0
    counts: dict[str, int] = field(default_factory=dict)
    witness: dict[str, Any] | None = None
    notes: list[str] = field(default_factory=list)
    elapsed: float = 0.0
    tool_version: str = __version__

    def fail(self, reason: str, **witness: Any) -> None:
        """Mark falsified; the first witness is kept."""
        if self.status != FALSIFIED:
            self.status = FALSIFIED
            self.witness = {"reason": reason, **witness}
        self.counts["failures"] = self.counts.get("failures", 0) + 1

    @property
    def ok(self) -> bool:
        return self.status != FALSIFIED

    def to_dict(self, timing: bool = True) -> dict[str, Any]:
        out = {
            "check_id": self.check_id,
            "parameters": self.parameters,
            "status": self.status,
            "instances": self.instances,
            "counts": self.counts,
            "witness": self.witness,
            "notes": self.notes,
            "tool_version": self.tool_version,
        }
        if timing:
            out["elapsed"] = self.elapsed
        return sig12(out)

    def to_json(self, timing: bool = True) -> str:
        return json.dumps(self.to_dict(timing), sort_keys=True, separators=(",", ":"))


class TreeSummary(NamedTuple):
    graph6: str
    n: int
    diameter: int
    eps1: float
    eps_n: float
    spectrum_ok: bool
    support_connected: bool


def _spectrum_identities_hold(m: np.ndarray, values: np.ndarray) -> bool:
    fro2 = float(np.sum(m.astype(np.float64) ** 2))
    scale = max(1.0, fro2)
    return abs(float(values.sum())) <= TOL * max(1.0, math.sqrt(fro2)) and abs(float(values @ values) - fro2) <= TOL * scale


def summarize(g6: str) -> TreeSummary:
    g = graph6_decode(g6)
    prof = distance_profile(g)
    em = eccentricity_matrix_from_profile(prof)
    spec = eigenvalues_symmetric(em)
    return TreeSummary(
        g6,
        g.n,
        prof.diameter,
        spec.largest,
        spec.least,
        _spectrum_identities_hold(em.m, spec.values),
        support_is_connected(em) if g.n >= 2 else True,
    )


def default_jobs() -> int:
    try:
        return max(1, int(os.environ.get("ECC_SPECTRA_JOBS", "1")))
    except ValueError:
        return 1


def summarize_all(graphs, jobs: int | None = None) -> list[TreeSummary]:
    """Summaries in input order, independent of the worker count."""
    codes = [graph6_encode(g) for g in graphs]
    jobs = default_jobs() if jobs is None else jobs
    if jobs <= 1 or len(codes) < 64:
        return [summarize(c) for c in codes]
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        return list(pool.map(summarize, codes, chunksize=max(1, len(codes) // (4 * jobs))))


def _spectrum_of(g: Graph) -> np.ndarray:
    return eigenvalues_symmetric(eccentricity_matrix_from_profile(distance_profile(g))).values


def _eps1(g: Graph) -> float:
    return float(_spectrum_of(g)[0])


def _timed(fn):
    def wrapper(*args, **kwargs):
        start = time.perf_counter()
        report = fn(*args, **kwargs)
        report.elapsed = time.perf_counter() - start
        return report

    wrapper.__name__ = fn.__name__
    wrapper.__doc__ = fn.__doc__
    return wrapper


def _check_order_cap(name: str, value: int, lo: int, hi: int) -> None:
    if not lo <= value <= hi:
        raise ParameterOutOfRange(f"{name} must lie in [{lo}, {hi}], got {value}")


# ---------------------------------------------------------------------------
# bounds, irreducibility, domination
# ---------------------------------------------------------------------------


def _random_tree(rng: np.random.Generator, n: int) -> Graph:
    seq = [int(x) for x in rng.integers(0, n, size=n - 2)]
    return graph_from_edges(n, prufer_decode(seq, n))


def _pattern_connected(mask: np.ndarray) -> bool:
    n = mask.shape[0]
    seen = {0}
    stack = [0]
    while stack:
        u = stack.pop()
        for v in np.flatnonzero(mask[u]):
            if v not in seen:
                seen.add(int(v))
                stack.append(int(v))
    return len(seen) == n


def domination_pairs(samples: int, seed: int, n_max: int = 12):
    """Seeded pairs ``(tree, M, N)`` with N <= M entrywise, N != M, both irreducible.

    ``M`` is ε(T) for a random tree; ``N`` lowers one to three of its nonzero
    symmetric entries, dropping an entry to zero only if the support stays
    connected.
    """
    rng = np.random.default_rng(seed)
    out = []
    while len(out) < samples:
        n = int(rng.integers(3, n_max + 1))
        g = _random_tree(rng, n)
        m = np.asarray(eccentricity_matrix_from_profile(distance_profile(g)).m, dtype=np.int64)
        nmat = m.copy()
        iu, ju = np.nonzero(np.triu(m))
        changed = 0
        for _ in range(int(rng.integers(1, 4))):
            k = int(rng.integers(0, len(iu)))
            i, j = iu[k], ju[k]
            if nmat[i, j] == 0:
                continue
            new = int(rng.integers(0, nmat[i, j]))
            trial = nmat.copy()
            trial[i, j] = trial[j, i] = new
            if new == 0 and not _pattern_connected(trial != 0):
                continue
            nmat = trial
            changed += 1
        if changed:
            out.append((g, m, nmat))
    return out


def check_domination(samples: int = 100, seed: int = 0, n_max: int = 12) -> tuple[int, list[dict]]:
    failures = []
    for g, m, nmat in domination_pairs(samples, seed, n_max):
        rho_m = eigenvalues_symmetric(m).largest
        rho_n = eigenvalues_symmetric(nmat).largest
        if not rho_n < rho_m - GAP:
            failures.append({"graph6": graph6_encode(g), "rho_M": rho_m, "rho_N": rho_n, "N": nmat.tolist()})
    return samples, failures


@_timed
def verify_basic_bounds(n_max: int, jobs: int | None = None, domination_samples: int = 100, seed: int = 0) -> VerificationReport:
    """ε1 >= d, ε_n <= -d, ε_n <= -2 with equality exactly on stars, over all
    trees of order 3..n_max; plus irreducibility of ε(T) (from order 2),
    trace/Frobenius identities, and seeded domination samples."""
    _check_order_cap("n_max", n_max, 3, MAX_VERIFY_ORDER)
    rep = VerificationReport("bounds", {"n_max": n_max, "domination_samples": domination_samples, "seed": seed})
    support_checked = 0
    for n in range(2, n_max + 1):
        for s in summarize_all(free_trees(n), jobs):
            support_checked += 1
            if not s.support_connected:
                rep.fail("eccentricity matrix is reducible", graph6=s.graph6)
            if not s.spectrum_ok:
                rep.fail("trace or Frobenius identity violated", graph6=s.graph6)
            if n < 3:
                continue
            rep.instances += 1
            d = s.diameter
            is_star = d == 2
            if s.eps1 < d - TOL:
                rep.fail("eps_1 below diameter", graph6=s.graph6, eps1=s.eps1, diameter=d)
            if s.eps_n > -d + TOL:
                rep.fail("eps_n above -diameter", graph6=s.graph6, eps_n=s.eps_n, diameter=d)
            if s.eps_n > -2 + TOL:
                rep.fail("eps_n above -2", graph6=s.graph6, eps_n=s.eps_n)
            if (abs(s.eps_n + 2) <= TOL) != is_star:
                rep.fail("eps_n = -2 does not coincide with stars", graph6=s.graph6, eps_n=s.eps_n, star=is_star)
            rep.counts["stars"] = rep.counts.get("stars", 0) + int(is_star)
    rep.counts["support_checked"] = support_checked
    if domination_samples:
        checked, failures = check_domination(domination_samples, seed, min(n_max, 12))
        rep.counts["domination_checked"] = checked
        for f in failures:
            rep.fail("domination rho(N) < rho(M) violated", **f)
    return rep


# ---------------------------------------------------------------------------
# maximal spectral radius at fixed odd diameter
# ---------------------------------------------------------------------------


def _ranked(summaries: list[TreeSummary]) -> list[TreeSummary]:
    return sorted(summaries, key=lambda s: -s.eps1)


@_timed
def verify_diam3_max(n: int, jobs: int | None = None) -> VerificationReport:
    """Unique ε1-maximiser over trees of order n and diameter 3 is the balanced broom."""
    _check_order_cap("n", n, 4, MAX_VERIFY_ORDER)
    rep = VerificationReport("diam3-max", {"n": n})
    ranked = _ranked(summarize_all(trees_with_diameter(n, 3), jobs))
    rep.instances = len(ranked)
    a, b = balanced_split(n - 4)
    expected = ahu_canonical(double_broom(n, 3, a, b))
    best = ranked[0]
    got = ahu_canonical(graph6_decode(best.graph6))
    gap = best.eps1 - ranked[1].eps1 if len(ranked) > 1 else math.inf
    info = {"graph6": best.graph6, "eps1": best.eps1, "runner_up_gap": gap if math.isfinite(gap) else None, "expected": f"D_{n},3^{a},{b}"}
    if got != expected:
        rep.fail("maximiser is not the balanced broom", **info)
    elif not gap > GAP:
        rep.fail("maximiser not separated from the runner-up", **info)
    else:
        rep.witness = info
    return rep


@_timed
def verify_odd_diam_max(n: int, d: int, jobs: int | None = None) -> VerificationReport:
    """ε1-maximiser over trees of order n and odd diameter d >= 5 is one of the
    two candidate brooms, and its value is the larger closed-form candidate."""
    if d % 2 == 0:
        raise EvenDiameter(f"diameter must be odd, got {d}")
    _check_order_cap("d", d, 5, 9)
    _check_order_cap("n", n, d + 1, MAX_VERIFY_ORDER)
    rep = VerificationReport("odd-diam-max", {"n": n, "d": d})
    ranked = _ranked(summarize_all(trees_with_diameter(n, d), jobs))
    rep.instances = len(ranked)
    k = n - d - 1
    a, b = balanced_split(k)
    allowed = {ahu_canonical(double_broom(n, d, 0, k)), ahu_canonical(double_broom(n, d, a, b))}
    cand = broom_argmax_candidates(n, d)
    top = [s for s in ranked if s.eps1 >= ranked[0].eps1 - GAP]
    info = {
        "argmax": [s.graph6 for s in top],
        "eps1": ranked[0].eps1,
        "candidates": {"x_low": cand.x_low, "rho_low": cand.rho_low, "x_high": cand.x_high, "rho_high": cand.rho_high},
    }
    rep.counts["argmax_size"] = len(top)
    if any(ahu_canonical(graph6_decode(s.graph6)) not in allowed for s in top):
        rep.fail("maximiser outside the two candidate brooms", **info)
    elif abs(ranked[0].eps1 - cand.best) > GRID_TOL:
        rep.fail("maximum differs from the closed-form candidate", **info)
    else:
        rep.witness = info
    return rep


# ---------------------------------------------------------------------------
# least eigenvalue in [-2-sqrt13, -2sqrt2)
# ---------------------------------------------------------------------------


def least_interval_members() -> list[tuple[str, Graph]]:
    """The eight trees whose least ε-eigenvalue lies in [-2-sqrt(13), -2sqrt(2))."""
    return [
        ("P_4", path(4)),
        ("D_5,3^0,1", double_broom(5, 3, 0, 1)),
        ("H_0,2", spider_h(0, 2)),
        ("H_0,3", spider_h(0, 3)),
        ("H_0,4", spider_h(0, 4)),
        ("H_1,2", spider_h(1, 2)),
        ("H_1,3", spider_h(1, 3)),
        ("H_2,2", spider_h(2, 2)),
    ]


def in_least_interval(eps_n: float) -> bool:
    return LOWER - TOL <= eps_n < UPPER - TOL


@_timed
def verify_least_interval(n_max: int, jobs: int | None = None) -> VerificationReport:
    _check_order_cap("n_max", n_max, 3, MAX_VERIFY_ORDER)
    rep = VerificationReport("least-interval", {"n_max": n_max})
    rep.notes.append("the 5-vertex member D_{n,3}^{0,1} is read as the single tree D_{5,3}^{0,1}")
    expected = {ahu_canonical(g): label for label, g in least_interval_members() if g.n <= n_max}
    found: dict[bytes, TreeSummary] = {}
    for n in range(3, n_max + 1):
        for s in summarize_all(free_trees(n), jobs):
            rep.instances += 1
            if in_least_interval(s.eps_n):
                found[ahu_canonical(graph6_decode(s.graph6))] = s
            elif LOWER - AMBIGUOUS < s.eps_n < LOWER - TOL:
                rep.counts["ambiguous"] = rep.counts.get("ambiguous", 0) + 1
    members = [{"label": expected.get(c, "unexpected"), "graph6": s.graph6, "eps_n": s.eps_n} for c, s in found.items()]
    rep.counts["members"] = len(found)
    extra = [m for m in members if m["label"] == "unexpected"]
    missing = sorted(label for c, label in expected.items() if c not in found)
    if extra or missing:
        rep.fail("member set differs from the classification", extra=extra, missing=missing, members=members)
    else:
        rep.witness = {"members": members}
    return rep


# ---------------------------------------------------------------------------
# branch-moving transformations
# ---------------------------------------------------------------------------


def _path_between(g: Graph, dist: np.ndarray, s: int, t: int) -> list[int]:
    out = [s]
    while out[-1] != t:
        u = out[-1]
        out.append(next(v for v in g.adjacency[u] if dist[v, t] == dist[u, t] - 1))
    return out


def _move_leaf(g: Graph, leaf: int, old: int, new: int) -> Graph:
    edges = [e for e in g.edges if set(e) != {leaf, old}]
    edges.append((leaf, new))
    return graph_from_edges(g.n, edges)


def transform_instances(g: Graph):
    """Yield ``(kind, T_tilde, expect_equal)`` for every diametrical path of ``g``.

    ``kind`` is ``"branch"`` for moving a deepest vertex u1 of a side branch
    T_i (2 <= i <= (d-1)/2, depth >= 2) onto v_1, and ``"pendant"`` for moving
    a pendant edge of v_i onto v_1 in a caterpillar.
    """
    prof = distance_profile(g)
    dist, d = prof.dist, prof.diameter
    half = (d - 1) // 2
    for s in range(g.n):
        for t in range(g.n):
            if s == t or dist[s, t] != d:
                continue
            spine = _path_between(g, dist, s, t)
            on_spine = set(spine)
            home = np.argmin(dist[:, spine], axis=1)
            caterpillar = all(g.degree(x) == 1 for x in range(g.n) if x not in on_spine)
            for i in range(2, half + 1):
                vi = spine[i]
                branch = [x for x in range(g.n) if home[x] == i]
                depth = max(dist[vi, x] for x in branch)
                if depth >= 2:
                    for u1 in branch:
                        if dist[vi, u1] == depth:
                            (u,) = g.adjacency[u1]
                            yield "branch", _move_leaf(g, u1, u, spine[1]), bool(depth == i)
                if caterpillar and g.degree(vi) >= 3:
                    u = next(x for x in g.adjacency[vi] if x not in on_spine)
                    yield "pendant", _move_leaf(g, u, vi, spine[1]), False


@_timed
def verify_transforms(n: int, d: int) -> VerificationReport:
    """ε1 never drops when a deepest side-branch vertex moves onto v_1 (ties
    exactly when the branch reaches depth i), and strictly grows when a
    caterpillar pendant moves onto v_1."""
    if d % 2 == 0:
        raise EvenDiameter(f"diameter must be odd, got {d}")
    _check_order_cap("d", d, 5, 7)
    _check_order_cap("n", n, d + 1, 12)
    rep = VerificationReport("transforms", {"n": n, "d": d})
    rep.notes.append("every diametrical path and both orientations are tried; outcomes deduplicated by canonical code")
    eps_cache: dict[bytes, float] = {}

    def eps1(g: Graph, code: bytes) -> float:
        if code not in eps_cache:
            eps_cache[code] = _eps1(g)
        return eps_cache[code]

    counts = {"trees": 0, "vacuous_trees": 0, "branch_equal": 0, "branch_strict": 0, "pendant_strict": 0, "ambiguous": 0}
    for g in trees_with_diameter(n, d):
        counts["trees"] += 1
        code = ahu_canonical(g)
        seen = set()
        for kind, h, expect_equal in transform_instances(g):
            hcode = ahu_canonical(h)
            key = (kind, hcode, expect_equal)
            if key in seen:
                continue
            seen.add(key)
            rep.instances += 1
            diff = eps1(h, hcode) - eps1(g, code)
            witness = {"kind": kind, "graph6": graph6_encode(g), "transformed": graph6_encode(h), "difference": diff}
            if diff < -GAP:
                rep.fail("transformation decreased eps_1", **witness)
                continue
            if TOL < diff < AMBIGUOUS:
                counts["ambiguous"] += 1
                continue
            equal = diff <= TOL
            if kind == "pendant":
                if equal:
                    rep.fail("pendant move did not strictly increase eps_1", **witness)
                else:
                    counts["pendant_strict"] += 1
            elif equal != expect_equal:
                rep.fail("equality case does not match the depth criterion", expect_equal=expect_equal, **witness)
            else:
                counts["branch_equal" if equal else "branch_strict"] += 1
        if not seen:
            counts["vacuous_trees"] += 1
    rep.counts.update(counts)
    return rep


# ---------------------------------------------------------------------------
# closed forms against the eigensolver
# ---------------------------------------------------------------------------


def multiset_within(sub, sup, tol: float) -> bool:
    """Each value of ``sub`` matched to a distinct value of ``sup`` within ``tol``."""
    pool = sorted(float(x) for x in sup)
    used = [False] * len(pool)
    for x in sorted(float(v) for v in sub):
        best = None
        for k, y in enumerate(pool):
            if not used[k] and abs(x - y) <= tol and (best is None or abs(x - y) < abs(x - pool[best])):
                best = k
        if best is None:
            return False
        used[best] = True
    return True


def fa_grid(n_max: int = 20):
    for n in range(4, n_max + 1):
        for a in range((n - 4) // 2 + 1):
            yield n, a


def h_grid(p_max: int = 6, q_max: int = 6):
    for p in range(p_max + 1):
        for q in range(2, q_max + 1):
            yield p, q


def rho_grid(ds=(3, 5, 7), extra: int = 8):
    for d in ds:
        for n in range(d + 1, d + extra + 1):
            for a in range(n - d):
                yield n, d, a, n - d - 1 - a


EQUALITY_PAIRS = {(0, 2), (0, 3), (0, 4), (1, 2), (1, 3), (2, 2)}


@_timed
def verify_closed_forms() -> VerificationReport:
    rep = VerificationReport("closed-forms", {"fa_n_max": 20, "h_max": 6, "rho_d": [3, 5, 7], "cond_max": 10, "mono_n_max": 30})
    counts = {"fa": 0, "h_poly": 0, "rho": 0, "condition": 0, "monotone_violations": 0}

    for n, a in fa_grid():
        counts["fa"] += 1
        g = double_broom(n, 3, a, n - 4 - a)
        spec = _spectrum_of(g)
        roots = f_a_quartic(n, a).roots()
        if not multiset_within(roots, spec, GRID_TOL) or abs(roots[0] - spec[0]) > GRID_TOL:
            rep.fail("f_a roots disagree with the spectrum", n=n, a=a, graph6=graph6_encode(g), roots=roots, spectrum=spec)

    for p, q in h_grid():
        counts["h_poly"] += 1
        g = spider_h(p, q)
        spec = _spectrum_of(g)
        roots = h_eps_poly(p, q).roots()
        zeros = int(np.sum(np.abs(spec) < GRID_TOL))
        if not multiset_within(roots, spec, GRID_TOL) or len(roots) != len(spec):
            rep.fail("factored polynomial disagrees with the spectrum", p=p, q=q, graph6=graph6_encode(g), roots=roots, spectrum=spec)
        if zeros < p + 1:
            rep.fail("zero eigenvalue multiplicity below p+1", p=p, q=q, graph6=graph6_encode(g), zeros=zeros)

    for n, d, a, b in rho_grid():
        counts["rho"] += 1
        g = double_broom(n, d, a, b)
        rho = rho_squared_broom(n, d, a, b).rho
        eps1 = _eps1(g)
        if abs(rho - eps1) > GRID_TOL:
            rep.fail("rho formula disagrees with eps_1", n=n, d=d, a=a, b=b, graph6=graph6_encode(g), rho=rho, eps1=eps1)

    true_pairs = set()
    for p in range(11):
        for q in range(2, 11):
            counts["condition"] += 1
            least = h_least_eigenvalue(p, q)
            cond = h_equality_condition(p, q)
            if cond:
                true_pairs.add((p, q))
            if cond != (abs(least - H_THRESHOLD) <= 1e-9):
                rep.fail("condition not equivalent to the least eigenvalue", p=p, q=q, least=least)
            g = spider_h(p, q)
            direct = float(_spectrum_of(g)[-1])
            if abs(direct - least) > TOL:
                rep.fail("closed-form least eigenvalue disagrees", p=p, q=q, graph6=graph6_encode(g), least=least, direct=direct)
    if true_pairs != EQUALITY_PAIRS:
        rep.fail("equality pairs differ", pairs=sorted(true_pairs))

    bad = fa_monotone(30)
    counts["monotone_violations"] = len(bad)
    if bad:
        rep.fail("largest f_a root not increasing in a", violations=bad[:5])

    rep.counts.update(counts)
    rep.instances = counts["fa"] + counts["h_poly"] + counts["rho"] + counts["condition"]
    return rep


# ---------------------------------------------------------------------------
# interlacing
# ---------------------------------------------------------------------------


def interlacing_samples(samples: int, seed: int, n_max: int = 12):
    rng = np.random.default_rng(seed)
    for _ in range(samples):
        n = int(rng.integers(2, n_max + 1))
        g = _random_tree(rng, n)
        t = int(rng.integers(1, n + 1))
        subset = sorted(int(x) for x in rng.choice(n, size=t, replace=False))
        yield g, subset


def interlaces(full: np.ndarray, sub: np.ndarray, tol: float = TOL) -> bool:
    s, t = len(full), len(sub)
    return all(full[i] >= sub[i] - tol and sub[i] >= full[s - t + i] - tol for i in range(t))


@_timed
def verify_interlacing(samples: int = 200, seed: int = 0) -> VerificationReport:
    if samples < 1:
        raise ParameterOutOfRange(f"samples must be >= 1, got {samples}")
    rep = VerificationReport("interlacing", {"samples": samples, "seed": seed})
    for g, subset in interlacing_samples(samples, seed):
        rep.instances += 1
        m = eccentricity_matrix_from_profile(distance_profile(g)).m
        full = eigenvalues_symmetric(m).values
        sub = eigenvalues_symmetric(m[np.ix_(subset, subset)]).values
        if not interlaces(full, sub):
            rep.fail("principal submatrix eigenvalues do not interlace", graph6=graph6_encode(g), subset=subset, full=full, sub=sub)
    return rep


CHECK_IDS = ("bounds", "diam3-max", "odd-diam-max", "least-interval", "transforms", "closed-forms", "interlacing")
