"""Entropy of graphs through the scaled Laplacian, in bits.

For a graph G with m >= 1 edges let d_G = 2m and rho(G) = L(G)/d_G. The von
Neumann entropy S(G) is the Shannon entropy of rho's eigenvalues; the Renyi
entropy of order alpha >= 0, alpha != 1, is

    H_alpha(p) = (1/(1-alpha)) * log2(sum_i p_i^alpha),

with H_1 the Shannon limit. H_alpha is non-increasing in alpha, so S >= H_2
always. H_2 is special: sum_i p_i^2 = tr(rho^2) is a rational function of the
degree sequence alone,

    tr2(G) = (sum_i d_i^2 + d_G) / d_G^2,      H_2(G) = -log2(tr2(G)),

which lets several comparisons be decided in exact integer arithmetic with no
floating point at all. This module provides the generic entropies, the closed
forms for stars and complete bipartite graphs, the degree-based H_2 with its
exact-rational core, the star and density decision tests, majorization
helpers, and a small search that looks for edge augmentations reaching a
target entropy.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Iterable, Sequence

from .graphs import DegreeSequence, Graph, add_edges, degree_sequence, write_graph6
from .spectral import DEFAULT_TOL, density_spectrum

DIST_TOL = 1e-9


def _validated(p: Sequence[float]) -> list[float]:
    probs = [float(x) for x in p]
    if not probs:
        raise ValueError("empty distribution")
    if any(x < 0.0 for x in probs):
        raise ValueError("negative probability")
    if abs(math.fsum(probs) - 1.0) > DIST_TOL:
        raise ValueError("probabilities do not sum to 1")
    return probs


def shannon_entropy(p: Sequence[float]) -> float:
    """Shannon entropy in bits; zero entries contribute nothing."""
    probs = _validated(p)
    return math.fsum(-x * math.log2(x) for x in probs if x > 0.0) + 0.0


def renyi_entropy(p: Sequence[float], alpha: float) -> float:
    """Renyi alpha-entropy in bits; alpha = 1 falls back to Shannon."""
    if alpha < 0:
        raise ValueError("alpha must be nonnegative")
    probs = _validated(p)
    if alpha == 1.0:
        return shannon_entropy(probs)
    if alpha == 0.0:
        return math.log2(sum(1 for x in probs if x > 0.0))
    power = math.fsum(x**alpha for x in probs if x > 0.0)
    return math.log2(power) / (1.0 - alpha) + 0.0


def von_neumann_entropy(g: Graph, tol: float = DEFAULT_TOL) -> float:
    """S(G): Shannon entropy of the scaled-Laplacian eigenvalues."""
    return shannon_entropy(density_spectrum(g, tol=tol).values)


def graph_renyi_entropy(g: Graph, alpha: float, tol: float = DEFAULT_TOL) -> float:
    """H_alpha(G) over the scaled-Laplacian eigenvalues."""
    return renyi_entropy(density_spectrum(g, tol=tol).values, alpha)


def star_entropy_closed(n: int) -> float:
    """S(K_{1,n-1}) = log2(2n-2) - (n/(2n-2)) log2 n, for n >= 2."""
    if n < 2:
        raise ValueError("a star needs at least 2 vertices")
    return math.log2(2 * n - 2) - (n / (2 * n - 2)) * math.log2(n)


def bipartite_entropy_closed(a: int, b: int) -> float:
    """S(K_{a,b}) from the known Laplacian spectrum {a+b, b^(a-1), a^(b-1), 0}."""
    if a < 1 or b < 1:
        raise ValueError("both parts must be nonempty")
    return (
        1.0
        + ((b + 1) / (2 * b)) * math.log2(a)
        + ((a + 1) / (2 * a)) * math.log2(b)
        - ((a + b) / (2 * a * b)) * math.log2(a + b)
    )


def tr2(d: DegreeSequence) -> Fraction:
    """tr(rho^2) = (sum d_i^2 + d_G) / d_G^2 as an exact rational."""
    if d.d_sum == 0:
        raise ValueError("tr(rho^2) undefined: graph has no edges")
    return Fraction(d.d_sq_sum + d.d_sum, d.d_sum * d.d_sum)


def h2_degree(d: DegreeSequence) -> float:
    """H_2(G) = log2(d_G^2) - log2(sum d_i^2 + d_G), from degrees alone."""
    if d.d_sum == 0:
        raise ValueError("H_2 undefined: graph has no edges")
    return math.log2(d.d_sum * d.d_sum) - math.log2(d.d_sq_sum + d.d_sum)


def star_test(d: DegreeSequence, n: int) -> bool:
    """Exact decision of d_G^2/(sum d_i^2 + d_G) >= (2n-2) / n^(n/(2n-2)).

    Both sides are positive, so raising to the (2n-2)-th power turns the test
    into the integer comparison N^(2n-2) * n^n >= D^(2n-2) * (2n-2)^(2n-2)
    with N = d_G^2 and D = sum d_i^2 + d_G. Passing is equivalent to
    H_2(G) >= S(K_{1,n-1}) with no rounding; the n = 2 case is an exact tie
    and passes.
    """
    if n < 2:
        raise ValueError("the star threshold needs n >= 2")
    if d.d_sum == 0:
        raise ValueError("star test undefined: graph has no edges")
    big_n = d.d_sum * d.d_sum
    big_d = d.d_sq_sum + d.d_sum
    e = 2 * n - 2
    return big_n**e * n**n >= big_d**e * e**e


def density_test(n: int, m: int) -> bool:
    """Exact decision of m / C(n,2) >= 1/(sqrt(n) - 1).

    Squaring the rearranged inequality m*sqrt(n) >= C(n,2) + m gives the
    integer test m^2 * n >= (C(n,2) + m)^2. Any graph passing this density
    bound passes the star test as well.
    """
    if n < 2:
        raise ValueError("the density threshold needs n >= 2")
    if m < 0 or m > math.comb(n, 2):
        raise ValueError(f"impossible edge count {m} for order {n}")
    return m * m * n >= (math.comb(n, 2) + m) ** 2


def union_entropy(parts: Sequence[tuple[float, int]]) -> float:
    """Entropy of a disjoint union from per-part entropies and edge degrees.

    ``parts`` holds (S(G_i), d_i) with d_i = 2*m_i > 0; writing
    c_i = d_i / sum d_j, the union's entropy is
    sum c_i S(G_i) + sum c_i log2(1/c_i).
    """
    parts = list(parts)
    if not parts:
        raise ValueError("union of no parts")
    if any(d <= 0 for _, d in parts):
        raise ValueError("every part must have at least one edge")
    total = sum(d for _, d in parts)
    mix = [(s, d / total) for s, d in parts]
    return math.fsum(c * s for s, c in mix) + math.fsum(-c * math.log2(c) for _, c in mix)


class Majorization(Enum):
    """Outcome of a majorization comparison between equal-sum sequences."""

    STRICTLY_MAJORIZES = "StrictlyMajorizes"
    WEAKLY_MAJORIZES = "WeaklyMajorizes"
    NO = "No"


def majorizes(c: Sequence[int], b: Sequence[int]) -> Majorization:
    """Whether c majorizes b: every descending prefix sum of c >= that of b.

    Requires equal lengths and equal totals. Returns STRICTLY_MAJORIZES when
    at least one prefix inequality is strict, WEAKLY_MAJORIZES when all are
    ties (the sorted sequences coincide), NO otherwise.
    """
    if len(c) != len(b):
        raise ValueError("sequences must have equal length")
    if sum(c) != sum(b):
        raise ValueError("sequences must have equal sums")
    cs = sorted(c, reverse=True)
    bs = sorted(b, reverse=True)
    strict = False
    pc = pb = 0
    for x, y in zip(cs, bs):
        pc += x
        pb += y
        if pc < pb:
            return Majorization.NO
        if pc > pb:
            strict = True
    return Majorization.STRICTLY_MAJORIZES if strict else Majorization.WEAKLY_MAJORIZES


def sum_squares_monotone_check(c: Sequence[int], b: Sequence[int]) -> bool:
    """Check that majorization pushes up the sum of squares.

    Requires majorizes(c, b) != NO. Returns the truth of
    sum c_i^2 > sum b_i^2 under strict majorization, >= under weak.
    """
    rel = majorizes(c, b)
    if rel is Majorization.NO:
        raise ValueError("precondition failed: c does not majorize b")
    sc = sum(x * x for x in c)
    sb = sum(x * x for x in b)
    return sc > sb if rel is Majorization.STRICTLY_MAJORIZES else sc >= sb


def mediant_bounds(s: Sequence[int], t: Sequence[int]) -> tuple[float, float]:
    """(min, max) of the ratios s_i/t_i; the mediant sum(s)/sum(t) lies between.

    All t_i must be positive.
    """
    if len(s) != len(t) or not s:
        raise ValueError("need two equal-length nonempty sequences")
    if any(x <= 0 for x in t):
        raise ValueError("denominators must be positive")
    ratios = [x / y for x, y in zip(s, t)]
    return min(ratios), max(ratios)


def k2n2_closed(n: int) -> tuple[float, float]:
    """(S(K_{2,n-2}), S(K_{2,n-2}+e)) for n >= 4, where e joins the 2-side.

    K_{2,n-2} has Laplacian spectrum {n, 2^(n-3), n-2, 0} with d_G = 4n-8;
    adding the edge between the two high-degree vertices moves it to
    {n, n, 2^(n-3), 0} with d_G = 4n-6. Both entropies are evaluated from
    those exact spectra.
    """
    if n < 4:
        raise ValueError("K_{2,n-2} with an edge on the 2-side needs n >= 4")
    d0 = 4 * n - 8
    before = math.fsum(
        [
            -(n / d0) * math.log2(n / d0),
            -(n - 3) * (2 / d0) * math.log2(2 / d0),
            -((n - 2) / d0) * math.log2((n - 2) / d0),
        ]
    )
    d1 = 4 * n - 6
    after = math.fsum(
        [
            -2 * (n / d1) * math.log2(n / d1),
            -(n - 3) * (2 / d1) * math.log2(2 / d1),
        ]
    )
    return before, after


def entropy_augmentation(
    g: Graph, k: int, x: float, tol: float = 1e-12
) -> tuple[tuple[int, int], ...] | None:
    """Smallest set A of at most k absent edges with S(G + A) >= x - tol.

    Searches candidate sets in increasing size, lexicographic within a size,
    and returns the first hit (or None). An edgeless candidate graph counts
    as entropy 0 by convention so the search can start from empty graphs.
    Exponential in k; meant for small interactive instances.
    """
    if k < 0:
        raise ValueError("k must be nonnegative")
    missing = g.non_edges()
    if k > len(missing):
        raise ValueError(f"k = {k} exceeds the {len(missing)} absent edges")
    for size in range(k + 1):
        for combo in itertools.combinations(missing, size):
            h = add_edges(g, combo)
            s = von_neumann_entropy(h) if h.m > 0 else 0.0
            if s >= x - tol:
                return combo
    return None


@dataclass(frozen=True)
class EntropyReport:
    """All entropy facts for one graph; None entries mean m = 0."""

    graph6: str
    n: int
    m: int
    S: float | None
    H: dict[float, float]
    tr2: Fraction | None
    star_test: bool | None
    density_test: bool


def entropy_report(g: Graph, alphas: Iterable[float] = ()) -> EntropyReport:
    """Assemble the full report for g; Renyi orders come from ``alphas``."""
    d = degree_sequence(g)
    dens = density_test(g.n, g.m) if g.n >= 2 else False
    if g.m == 0:
        return EntropyReport(write_graph6(g), g.n, g.m, None, {}, None, None, dens)
    spec = density_spectrum(g)
    s = shannon_entropy(spec.values)
    hs = {float(a): renyi_entropy(spec.values, float(a)) for a in alphas}
    for a, h in hs.items():
        if a > 1.0 and s < h - DIST_TOL:
            raise ArithmeticError(f"S < H_{a} beyond tolerance: entropy ordering broken")
    return EntropyReport(
        write_graph6(g), g.n, g.m, s, hs, tr2(d), star_test(d, g.n) if g.n >= 2 else None, dens
    )
