"""Exhaustive verification of the entropy extremal claims at small orders.

Every engine streams the isomorph-free enumerator (or the tree generator)
over one order n, checks one claim, and returns a ``VerificationResult``.
Two kinds of claim are treated differently, on purpose:

* proved statements (the H_2 tree extremes, the exact-rational star
  uniqueness, the Renyi maximum bound, the edge-addition lower bound) are
  asserted: any scanned violation raises ``TheoremViolation``, because it
  can only mean an implementation bug;
* open statements (the star minimizes S, the path maximizes S, the star
  minimizes H_alpha for alpha != 2) are scanned for counterexamples, which
  are reported as witnesses, never raised.

Floating-point claims use an asymmetric epsilon of 1e-9: a violation must
exceed it, and a minimizer is called unique only when the runner-up gap
exceeds it. Claims that can be decided in integer arithmetic (anything
reachable through tr2) use exact rationals and no tolerance at all.
"""

from __future__ import annotations

import math
import time
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable

from .entropy import (
    renyi_entropy,
    shannon_entropy,
    star_entropy_closed,
    star_test,
    density_test,
    tr2,
)
from .enumeration import canonical_form, enumerate_graphs, enumerate_trees
from .graphs import (
    Graph,
    degree_sequence,
    diameter,
    matching_number,
    max_degree,
    write_graph6,
)
from .spectral import density_spectrum

EPS = 1e-9
DEFAULT_WITNESS_CAP = 1000


class TheoremViolation(RuntimeError):
    """A proved statement failed on a scanned graph: an implementation bug."""


@dataclass
class VerificationResult:
    """Outcome of one exhaustive claim check at one order."""

    claim: str
    order: int
    universe: str
    holds: bool
    extremal_graphs: list[str]
    witnesses: list[str]
    stats: dict
    runtime: float

    def __post_init__(self) -> None:
        if self.holds != (not self.witnesses):
            raise ValueError("holds must mean exactly: no witnesses")


class _Extremes:
    """Track a running min (or max) plus everything tied within eps."""

    def __init__(self, biggest: bool = False, eps: float = EPS) -> None:
        self.biggest = biggest
        self.eps = eps
        self.value: float | None = None
        self.ties: list[tuple[float, str]] = []

    def offer(self, value: float, tag: str) -> None:
        v = -value if self.biggest else value
        if self.value is None or v < self.value:
            self.value = v
            self.ties = [t for t in self.ties if (-t[0] if self.biggest else t[0]) <= v + self.eps]
        if v <= self.value + self.eps:
            self.ties.append((value, tag))

    def best(self) -> float:
        assert self.value is not None
        return -self.value if self.biggest else self.value

    def tags(self) -> list[str]:
        return [tag for _, tag in self.ties]

    def runner_up_gap(self) -> float:
        """Gap between the best value and the nearest other tracked value."""
        others = [v for v, _ in self.ties if v != self.best()]
        if not others:
            return math.inf
        closest = min(others) if not self.biggest else max(others)
        return abs(closest - self.best())


def _star_rho_probs(n: int) -> list[float]:
    # rho(K_{1,n-1}) spectrum: n/(2n-2) once, 1/(2n-2) with multiplicity n-2, 0
    d = 2 * n - 2
    return [n / d] + [1 / d] * (n - 2) + [0.0]


def _is_star(g: Graph) -> bool:
    return g.m == g.n - 1 and max_degree(g) == g.n - 1


def _is_path(g: Graph) -> bool:
    return g.m == g.n - 1 and max_degree(g) <= 2


def _canon_g6(g: Graph) -> str:
    # the tree generator does not emit canonical labelings; engines report
    # canonical graph6 words so outputs are comparable across engines
    return write_graph6(canonical_form(g).graph())


def verify_star_min_von_neumann(
    n: int, witness_cap: int = DEFAULT_WITNESS_CAP, workers: int = 1
) -> VerificationResult:
    """Does the star minimize S over connected graphs on n vertices?

    Open statement; counterexamples (S(G) < S(star) - 1e-9) become witnesses.
    """
    if n < 2:
        raise ValueError("need n >= 2")
    t0 = time.perf_counter()
    target = star_entropy_closed(n)
    extremes = _Extremes()
    witnesses: list[str] = []
    witness_count = 0
    classes = 0
    for g in enumerate_graphs(n, connected_only=True, workers=workers):
        classes += 1
        s = shannon_entropy(density_spectrum(g).values)
        g6 = write_graph6(g)
        extremes.offer(s, g6)
        if s < target - EPS:
            witness_count += 1
            if len(witnesses) < witness_cap:
                witnesses.append(g6)
    stats = {
        "classes": classes,
        "min_entropy": extremes.best(),
        "star_entropy": target,
        "witness_count": witness_count,
    }
    return VerificationResult(
        claim="star-min-S",
        order=n,
        universe="connected",
        holds=witness_count == 0,
        extremal_graphs=extremes.tags(),
        witnesses=witnesses,
        stats=stats,
        runtime=time.perf_counter() - t0,
    )


def verify_tree_extremes(
    n: int, entropy: str = "S", witness_cap: int = DEFAULT_WITNESS_CAP
) -> VerificationResult:
    """Star-minimum and path-maximum entropy over all trees on n vertices.

    ``entropy="H2"``: exact rational tr2 comparison; star unique minimum and
    path unique maximum are proved, so any failure raises TheoremViolation.
    ``entropy="S"``: floating scan reporting whether the path is the unique
    maximizer (open statement); trees tying or beating the path are
    witnesses.
    """
    if n < 3:
        raise ValueError("need n >= 3")
    if entropy not in ("S", "H2"):
        raise ValueError("entropy must be 'S' or 'H2'")
    t0 = time.perf_counter()
    classes = 0
    if entropy == "H2":
        # smaller tr2 = larger H_2. Star must have the strictly largest tr2,
        # path the strictly smallest, over all trees.
        star_t: Fraction | None = None
        path_t: Fraction | None = None
        best: tuple[Fraction, str] | None = None  # largest tr2
        least: tuple[Fraction, str] | None = None
        best_unique = least_unique = True
        for g in enumerate_trees(n):
            classes += 1
            t = tr2(degree_sequence(g))
            g6 = _canon_g6(g)
            if _is_star(g):
                star_t = t
            if _is_path(g):
                path_t = t
            if best is None or t > best[0]:
                best = (t, g6)
                best_unique = True
            elif t == best[0]:
                best_unique = False
            if least is None or t < least[0]:
                least = (t, g6)
                least_unique = True
            elif t == least[0]:
                least_unique = False
        assert star_t is not None and path_t is not None and best and least
        if not (best[0] == star_t and best_unique):
            raise TheoremViolation(
                f"star is not the unique H_2 minimizer among trees on {n} vertices"
            )
        if not (least[0] == path_t and least_unique):
            raise TheoremViolation(
                f"path is not the unique H_2 maximizer among trees on {n} vertices"
            )
        stats = {
            "classes": classes,
            "star_tr2": str(star_t),
            "path_tr2": str(path_t),
            "exact": True,
        }
        return VerificationResult(
            claim="tree-extremes",
            order=n,
            universe="trees",
            holds=True,
            extremal_graphs=[best[1], least[1]],
            witnesses=[],
            stats=stats,
            runtime=time.perf_counter() - t0,
        )

    # entropy == "S": is the path the unique maximizer of S among trees?
    path_s: float | None = None
    path_g6 = ""
    top = _Extremes(biggest=True)
    bottom = _Extremes()
    rows: list[tuple[float, str]] = []
    for g in enumerate_trees(n):
        classes += 1
        s = shannon_entropy(density_spectrum(g).values)
        g6 = _canon_g6(g)
        if _is_path(g):
            path_s, path_g6 = s, g6
        top.offer(s, g6)
        bottom.offer(s, g6)
        rows.append((s, g6))
    assert path_s is not None
    witnesses = [g6 for s, g6 in rows if g6 != path_g6 and s >= path_s - EPS]
    witnesses = witnesses[:witness_cap]
    holds = not witnesses
    stats = {
        "classes": classes,
        "path_entropy": path_s,
        "max_entropy": top.best(),
        "min_entropy": bottom.best(),
        "min_graphs": bottom.tags(),
    }
    return VerificationResult(
        claim="tree-extremes",
        order=n,
        universe="trees",
        holds=holds,
        extremal_graphs=top.tags(),
        witnesses=witnesses,
        stats=stats,
        runtime=time.perf_counter() - t0,
    )


def verify_renyi_star_min(
    n: int, alpha: float, witness_cap: int = DEFAULT_WITNESS_CAP, workers: int = 1
) -> VerificationResult:
    """Does the star minimize H_alpha over connected graphs on n vertices?

    alpha = 2 is proved with strict uniqueness and is checked in exact
    rational arithmetic (star must have strictly maximal tr2); any failure
    raises TheoremViolation. Other alpha > 1 are open statements scanned in
    floating point.
    """
    if alpha <= 1:
        raise ValueError("need alpha > 1")
    if n < 2:
        raise ValueError("need n >= 2")
    t0 = time.perf_counter()
    classes = 0
    if alpha == 2.0:
        star_t: Fraction | None = None
        best: tuple[Fraction, str] | None = None
        best_unique = True
        for g in enumerate_graphs(n, connected_only=True, workers=workers):
            classes += 1
            t = tr2(degree_sequence(g))
            if _is_star(g):
                star_t = t
            if best is None or t > best[0]:
                best = (t, write_graph6(g))
                best_unique = True
            elif t == best[0]:
                best_unique = False
        assert star_t is not None and best is not None
        if not (best[0] == star_t and best_unique):
            raise TheoremViolation(
                f"star is not the strictly unique tr2 maximum over connected graphs on {n} vertices"
            )
        stats = {
            "classes": classes,
            "alpha": 2.0,
            "star_tr2": str(star_t),
            "exact": True,
            "unique": best_unique,
        }
        return VerificationResult(
            claim="renyi-star-min",
            order=n,
            universe="connected",
            holds=True,
            extremal_graphs=[best[1]],
            witnesses=[],
            stats=stats,
            runtime=time.perf_counter() - t0,
        )

    target = renyi_entropy(_star_rho_probs(n), alpha)
    extremes = _Extremes()
    witnesses: list[str] = []
    witness_count = 0
    for g in enumerate_graphs(n, connected_only=True, workers=workers):
        classes += 1
        h = renyi_entropy(density_spectrum(g).values, alpha)
        g6 = write_graph6(g)
        extremes.offer(h, g6)
        if h < target - EPS:
            witness_count += 1
            if len(witnesses) < witness_cap:
                witnesses.append(g6)
    stats = {
        "classes": classes,
        "alpha": alpha,
        "min_entropy": extremes.best(),
        "star_entropy": target,
        "witness_count": witness_count,
    }
    return VerificationResult(
        claim="renyi-star-min",
        order=n,
        universe="connected",
        holds=witness_count == 0,
        extremal_graphs=extremes.tags(),
        witnesses=witnesses,
        stats=stats,
        runtime=time.perf_counter() - t0,
    )


def verify_renyi_max(
    n: int, alpha: float, witness_cap: int = DEFAULT_WITNESS_CAP, workers: int = 1
) -> VerificationResult:
    """H_alpha(G) <= log2(n-1) over all graphs with an edge, zero only at K2+isolates.

    Both parts are proved, so violations raise TheoremViolation; the result
    always holds when it returns. Edgeless graphs are skipped (no entropy).
    """
    if alpha <= 1:
        raise ValueError("need alpha > 1")
    if n < 2:
        raise ValueError("need n >= 2")
    t0 = time.perf_counter()
    bound = math.log2(n - 1) if n >= 2 else 0.0
    top = _Extremes(biggest=True)
    zero_graphs: list[str] = []
    classes = 0
    skipped = 0
    for g in enumerate_graphs(n, workers=workers):
        if g.m == 0:
            skipped += 1
            continue
        classes += 1
        h = renyi_entropy(density_spectrum(g).values, alpha)
        g6 = write_graph6(g)
        if h > bound + EPS:
            raise TheoremViolation(
                f"H_{alpha}({g6}) = {h} exceeds log2({n}-1) = {bound}"
            )
        top.offer(h, g6)
        if h <= EPS:
            zero_graphs.append(g6)
    # zero entropy forces rank-1 Laplacian, i.e. exactly one edge, and the
    # single-edge graph (K2 plus isolates) is one isomorphism class
    if not (len(zero_graphs) == 1 and _parse(zero_graphs[0]).m == 1):
        raise TheoremViolation(
            f"zero-entropy graphs at n={n} are {zero_graphs}, expected exactly K2 + isolates"
        )
    stats = {
        "classes": classes,
        "skipped_edgeless": skipped,
        "alpha": alpha,
        "bound": bound,
        "max_entropy": top.best(),
        "zero_graphs": zero_graphs,
    }
    return VerificationResult(
        claim="renyi-max",
        order=n,
        universe="all",
        holds=True,
        extremal_graphs=top.tags(),
        witnesses=[],
        stats=stats,
        runtime=time.perf_counter() - t0,
    )


def _parse(g6: str) -> Graph:
    from .graphs import parse_graph6

    return parse_graph6(g6)


_TABLE1_CACHE: dict[int, tuple[int, int, tuple[str, ...]]] = {}


def table1_row(n: int, workers: int = 1) -> tuple[int, int, tuple[str, ...]]:
    """(failures, total, failing graph6 list) for the star test over
    connected graphs on n vertices; decided in exact integer arithmetic."""
    if n < 2:
        raise ValueError("need n >= 2")
    cached = _TABLE1_CACHE.get(n)
    if cached is not None:
        return cached
    failures = 0
    total = 0
    failing: list[str] = []
    for g in enumerate_graphs(n, connected_only=True, workers=workers):
        total += 1
        if not star_test(degree_sequence(g), n):
            failures += 1
            failing.append(write_graph6(g))
    row = (failures, total, tuple(failing))
    _TABLE1_CACHE[n] = row
    return row


def failing_graph_properties(n: int, workers: int = 1) -> dict:
    """Minimum-degree report for the star-test failures at order n.

    Records, per failing graph, its minimum degree and whether it has a
    leaf; the observed pattern (every failure has a leaf) is summarized but
    not asserted, since it is an observation, not a theorem.
    """
    failures, total, failing = table1_row(n, workers=workers)
    records = []
    for g6 in failing:
        g = _parse(g6)
        mind = min(row.bit_count() for row in g.adj)
        records.append({"graph6": g6, "min_degree": mind, "has_leaf": mind == 1})
    return {
        "order": n,
        "failures": failures,
        "total": total,
        "records": records,
        "all_have_leaf": all(r["has_leaf"] for r in records),
    }


def edge_add_decrease_search(
    n: int, witness_cap: int = DEFAULT_WITNESS_CAP, workers: int = 1
) -> VerificationResult:
    """Find all (G, e) with G connected on n vertices and S(G+e) < S(G) - 1e-9.

    Every scanned pair is also checked against the proved lower bound
    S(G+e) >= (d_G/(d_G+2)) S(G) (violation raises TheoremViolation). For
    n >= 5 at least one decrease pair must exist with G = K_{2,n-2} and e
    joining its two high-degree vertices; its absence also raises. The
    decrease pairs are counterexamples to entropy monotonicity and are
    returned as witnesses, so ``holds`` is False exactly when decreases
    exist (expected for n >= 5).
    """
    from .graphs import add_edge

    if n < 3:
        raise ValueError("need n >= 3")
    t0 = time.perf_counter()
    witnesses: list[str] = []
    pairs: list[dict] = []
    pair_count = 0
    classes = 0
    k2n2_found = False
    min_bound_margin = math.inf
    for g in enumerate_graphs(n, connected_only=True, workers=workers):
        classes += 1
        s_before = shannon_entropy(density_spectrum(g).values)
        g6 = write_graph6(g)
        d = 2 * g.m
        degs = degree_sequence(g).degrees
        is_k2n2 = (
            n >= 4
            and g.m == 2 * (n - 2)
            and sorted(degs) == [2] * (n - 2) + [n - 2, n - 2]
        )
        for u, v in g.non_edges():
            h = add_edge(g, u, v)
            s_after = shannon_entropy(density_spectrum(h).values)
            margin = s_after - (d / (d + 2)) * s_before
            if margin < min_bound_margin:
                min_bound_margin = margin
            if margin < -EPS:
                raise TheoremViolation(
                    f"S(G+e) fell below (d/(d+2))S(G) for G={g6}, e=({u},{v})"
                )
            if s_after < s_before - EPS:
                pair_count += 1
                if is_k2n2 and degs[u] == n - 2 and degs[v] == n - 2:
                    k2n2_found = True
                if len(pairs) < witness_cap:
                    pairs.append(
                        {
                            "graph6": g6,
                            "edge": [u, v],
                            "S_before": s_before,
                            "S_after": s_after,
                        }
                    )
                    witnesses.append(g6)
    if n >= 5 and not k2n2_found:
        raise TheoremViolation(
            f"the proved decrease witness (K_{{2,{n-2}}}, e) did not appear at n={n}"
        )
    stats = {
        "classes": classes,
        "decrease_pairs": pair_count,
        "pairs": pairs,
        "k2n2_witness_found": k2n2_found,
        "min_bound_margin": min_bound_margin,
    }
    return VerificationResult(
        claim="edge-add-decrease",
        order=n,
        universe="connected",
        holds=pair_count == 0,
        extremal_graphs=[],
        witnesses=witnesses,
        stats=stats,
        runtime=time.perf_counter() - t0,
    )


@dataclass
class CoentropyGroup:
    """Connected graphs sharing S to 1e-12 without all being cospectral."""

    entropy: float
    members: list[str]
    distinct_spectra: int


def coentropy_search(
    n: int,
    group_tol: float = EPS,
    spectra_tol: float = 1e-7,
    workers: int = 1,
) -> list[CoentropyGroup]:
    """Groups of connected graphs with equal S but different rho-spectra.

    Sort-then-sweep on S: clusters within ``group_tol`` are candidate
    groups; each is re-confirmed at 1e-12 (extended-precision recomputation)
    and kept only if some member pair differs by more than ``spectra_tol``
    in a sorted spectrum entry.
    """
    if n < 2:
        raise ValueError("need n >= 2")
    rows: list[tuple[float, str]] = []
    for g in enumerate_graphs(n, connected_only=True, workers=workers):
        rows.append((shannon_entropy(density_spectrum(g).values), write_graph6(g)))
    rows.sort()
    groups: list[CoentropyGroup] = []
    i = 0
    while i < len(rows):
        j = i + 1
        while j < len(rows) and rows[j][0] - rows[j - 1][0] <= group_tol:
            j += 1
        cluster = rows[i:j]
        i = j
        if len(cluster) < 2:
            continue
        # re-confirm at 1e-12: sub-split the cluster at the tighter tolerance
        k = 0
        while k < len(cluster):
            t = k + 1
            while t < len(cluster) and cluster[t][0] - cluster[t - 1][0] <= 1e-12:
                t += 1
            sub = cluster[k:t]
            k = t
            if len(sub) < 2:
                continue
            specs = [density_spectrum(_parse(g6)).values for _, g6 in sub]
            distinct = _distinct_spectra(specs, spectra_tol)
            if distinct > 1:
                groups.append(
                    CoentropyGroup(
                        entropy=sub[0][0],
                        members=[g6 for _, g6 in sub],
                        distinct_spectra=distinct,
                    )
                )
    return groups


def _distinct_spectra(specs: list[tuple[float, ...]], tol: float) -> int:
    reps: list[tuple[float, ...]] = []
    for s in specs:
        if not any(max(abs(a - b) for a, b in zip(s, r)) <= tol for r in reps):
            reps.append(s)
    return len(reps)


@dataclass
class ParamComparison:
    """Pairs showing a structural parameter and S moving together or apart."""

    param: str
    order: int
    entropy_drops: list[tuple[str, str]] = field(default_factory=list)
    entropy_rises: list[tuple[str, str]] = field(default_factory=list)
    drop_count: int = 0
    rise_count: int = 0


_PARAMS: dict[str, Callable[[Graph], int]] = {
    "matching": matching_number,
    "diameter": diameter,
    "max_degree": max_degree,
}


def param_comparability(
    n: int, param: str, cap: int = 50, workers: int = 1
) -> ParamComparison:
    """All ordered pairs of connected graphs where ``param`` strictly rises.

    ``entropy_drops`` collects pairs (G1, G2) with param(G1) < param(G2) and
    S(G1) > S(G2) + 1e-9; ``entropy_rises`` the pairs with S(G1) < S(G2) -
    1e-9. Both nonempty means the parameter and S are incomparable. Lists
    are capped at ``cap``; counts are exact.
    """
    if param not in _PARAMS:
        raise ValueError(f"param must be one of {sorted(_PARAMS)}")
    f = _PARAMS[param]
    rows = []
    for g in enumerate_graphs(n, connected_only=True, workers=workers):
        rows.append((f(g), shannon_entropy(density_spectrum(g).values), write_graph6(g)))
    out = ParamComparison(param=param, order=n)
    for p1, s1, g1 in rows:
        for p2, s2, g2 in rows:
            if p1 >= p2:
                continue
            if s1 > s2 + EPS:
                out.drop_count += 1
                if len(out.entropy_drops) < cap:
                    out.entropy_drops.append((g1, g2))
            elif s1 < s2 - EPS:
                out.rise_count += 1
                if len(out.entropy_rises) < cap:
                    out.entropy_rises.append((g1, g2))
    return out


def verify_density_implies_star(n: int, workers: int = 1) -> VerificationResult:
    """density_test passing forces star_test passing, on every connected graph.

    Proved implication; a violating graph raises TheoremViolation.
    """
    if n < 2:
        raise ValueError("need n >= 2")
    t0 = time.perf_counter()
    classes = 0
    dense = 0
    star_pass = 0
    converse_fails: list[str] = []
    for g in enumerate_graphs(n, connected_only=True, workers=workers):
        classes += 1
        d_ok = density_test(g.n, g.m)
        s_ok = star_test(degree_sequence(g), n)
        if d_ok:
            dense += 1
            if not s_ok:
                raise TheoremViolation(
                    f"{write_graph6(g)} passes the density test but fails the star test"
                )
        if s_ok:
            star_pass += 1
            if not d_ok and len(converse_fails) < 10:
                converse_fails.append(write_graph6(g))
    stats = {
        "classes": classes,
        "density_pass": dense,
        "star_pass": star_pass,
        "star_pass_without_density": converse_fails,
    }
    return VerificationResult(
        claim="density-implies-star",
        order=n,
        universe="connected",
        holds=True,
        extremal_graphs=[],
        witnesses=[],
        stats=stats,
        runtime=time.perf_counter() - t0,
    )
