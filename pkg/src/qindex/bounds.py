"""Closed-form extremal bounds for K_{t,s+1}-free graphs, plus the ledger
of numeric inequality steps behind the q(G) < n cap for graphs without a
dominating vertex.

Everything here is pure double-precision arithmetic.  Comparisons against
computed eigenvalues belong to the callers, who must bring an explicit
slack; the only epsilons used internally are the ledger's, documented on
``q_cap_ledger``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

from .errors import (
    DiscriminantNegative,
    HypothesisViolated,
    IsolatedVertex,
    NoEdges,
)
from .graphs import Graph, _bits

DEFAULT_EPS = 1e-7


def adjacency_bound(n: int, s: int, t: int) -> float:
    """Upper bound on the adjacency spectral radius of a K_{s,t}-free graph.

    Requires s >= t >= 2.  The t = 2 form is 1/2 + sqrt((s-1)(n-1) + 1/4);
    for t >= 3 the fractional-power form applies.
    """
    _require_st(s, t)
    if n < 1:
        raise HypothesisViolated(f"order must be >= 1, got {n}")
    if t == 2:
        return 0.5 + math.sqrt((s - 1) * (n - 1) + 0.25)
    return (s - t + 1) ** (1.0 / t) * n ** (1.0 - 1.0 / t) + (t - 1) * n ** (1.0 - 2.0 / t) + (t - 2)


def edge_bound(n: int, s: int, t: int) -> float:
    """Upper bound on the edge count of a K_{s,t}-free graph (s >= t >= 2)."""
    _require_st(s, t)
    if n < 1:
        raise HypothesisViolated(f"order must be >= 1, got {n}")
    if t == 2:
        return (n / 2.0) * math.sqrt((s - 1) * (n - 1) + 0.25) + n / 4.0
    return (
        0.5 * (s - t + 1) ** (1.0 / t) * n ** (2.0 - 1.0 / t)
        + 0.5 * (t - 1) * n ** (2.0 - 2.0 / t)
        + 0.5 * (t - 2) * n
    )


def q_bound_t2(n: int, s: int) -> float:
    """Sharp Q-index cap for K_{2,s+1}-free graphs of order n:
    (n+2s)/2 + sqrt((n-2s)^2 + 8s)/2.
    """
    if s < 1 or n < 1:
        raise HypothesisViolated(f"need s >= 1 and n >= 1, got s={s}, n={n}")
    return (n + 2 * s) / 2.0 + 0.5 * math.sqrt((n - 2 * s) ** 2 + 8 * s)


def q_bound_t2_applicable(n: int, s: int) -> bool:
    """Whether n clears the threshold n >= s^2 + 6s + 6 under which the
    t = 2 cap is proved for all graphs (the closed form itself is defined
    for every n >= 1)."""
    return n >= s * s + 6 * s + 6


def conjecture_bound(n: int, s: int, t: int) -> float:
    """Conjectured Q-index cap for K_{t,s+1}-free graphs, s >= t-1 >= 1.

    Equals the Q-index of the join of a (t-1)-clique with an s-regular
    graph of order n-t+1; reduces to ``q_bound_t2`` at t = 2.
    """
    if not (t >= 2 and s >= t - 1):
        raise HypothesisViolated(f"need s >= t-1 >= 1, got s={s}, t={t}")
    if n < 1:
        raise HypothesisViolated(f"order must be >= 1, got {n}")
    disc = (n - 2 + 2 * s) ** 2 - 8 * s * (n - 2) + 4 * (t - 1) * (n - t + 1)
    if disc < 0:
        raise DiscriminantNegative(f"negative discriminant {disc} at n={n}, s={s}, t={t}")
    return n / 2.0 + s + t - 2 + 0.5 * math.sqrt(disc)


def f_value(g: Graph, u: int) -> float:
    """d(u) + (1/d(u)) * sum of neighbor degrees; u must be nonisolated."""
    d = g.degree(u)
    if d == 0:
        raise IsolatedVertex(f"vertex {u} is isolated")
    return d + sum(g.degree(v) for v in _bits(g.adj[u])) / d


def merris_bound(g: Graph) -> float:
    """Merris-type degree bound: q(G) never exceeds the max of f_value."""
    if g.edge_count() == 0:
        raise NoEdges("Merris bound needs at least one edge")
    return max(f_value(g, u) for u in range(g.n) if g.degree(u) > 0)


def q_bound_window(n: int, s: int) -> tuple[float, float]:
    """Open interval (n, n + 2s/(n-2s)) that strictly brackets the t = 2 cap.

    Requires n > 2s.
    """
    if s < 1:
        raise HypothesisViolated(f"need s >= 1, got {s}")
    if n <= 2 * s:
        raise HypothesisViolated(f"window needs n > 2s, got n={n}, s={s}")
    return (float(n), n + 2.0 * s / (n - 2 * s))


def q_cap_ledger(s: int, n: int, eps: float = 1e-9) -> dict[str, bool]:
    """Named inequality checks certifying q(G) < n for K_{2,s+1}-free graphs
    of order n >= s^2 + 6s + 6 without a dominating vertex.

    The chain splits by maximum degree.  For degrees between s+2 and
    n-s-2, the convex majorant g(x) = x + 1 + (n-1)s/x is evaluated at the
    interval ends; for the near-dominating regime, the two branch values of
    x + 2s/(x - 2s) are compared and the tail terms are relaxed to the
    constants 2/5 and 24/49.  Non-strict steps in the chain attain equality
    at the threshold order, so they are tested with slack ``eps``; the
    strict ``< n`` steps have real margin and are tested as written.
    """
    if s < 1:
        raise HypothesisViolated(f"need s >= 1, got {s}")
    threshold = s * s + 6 * s + 6
    if n < threshold:
        raise HypothesisViolated(f"ledger needs n >= s^2+6s+6 = {threshold}, got n={n}")

    def g_of(x: float) -> float:
        return x + 1 + (n - 1) * s / x

    checks: dict[str, bool] = {}
    checks["majorant_at_low_degree"] = g_of(s + 2) < n
    checks["majorant_at_high_degree"] = g_of(n - s - 2) < n
    branch_max = max(s + 3 + (n - 1) * s / (s + 2), n - s - 1 + (n - 1) * s / (n - s - 2))
    checks["degree_branch_max"] = branch_max < n
    checks["regime_comparison"] = (
        n - s + 2 * s / (n - 3 * s) <= n - 1 + 2 * s / (n - 1 - 2 * s) + eps
    )
    checks["tail_linear"] = 2 * s / (n - 1 - 2 * s) <= 2 / (s + 4 + 5 / s) + eps
    checks["tail_quadratic"] = 24 * s * s / (n * n) <= 24 / (s + 6 + 6 / s) ** 2 + eps
    checks["relax_linear"] = 2 / (s + 4 + 5 / s) <= 2 / 5 + eps
    checks["relax_quadratic"] = 24 / (s + 6 + 6 / s) ** 2 <= 24 / 49 + eps
    checks["final_chain"] = n - 1 + 2 * s / (n - 1 - 2 * s) + 24 * s * s / (n * n) < n
    return checks


@dataclass(frozen=True)
class BoundReport:
    """All closed-form bounds evaluated at one (n, s, t), with the hypothesis
    flags callers need before trusting each value.

    ``adjacency``/``edge`` are None when s < t (their hypothesis); the
    graph-dependent Merris value is attached only when a graph is given.
    """

    n: int
    s: int
    t: int
    adjacency: float | None
    edge: float | None
    q_t2: float
    conjecture: float | None
    merris: float | None
    applicability: dict[str, bool] = field(default_factory=dict)

    def __post_init__(self):
        if self.n > 2 * self.s:
            lo, hi = q_bound_window(self.n, self.s)
            assert lo < self.q_t2 < hi, "t=2 cap escaped its bracketing window"


def bound_report(n: int, s: int, t: int, graph: Graph | None = None) -> BoundReport:
    """Evaluate every bound at (n, s, t); inapplicable ones come back None."""
    if s < 1 or t < 2 or n < 1:
        raise HypothesisViolated(f"need n >= 1, s >= 1, t >= 2; got n={n}, s={s}, t={t}")
    applicability = {
        "adjacency_edge": s >= t,
        "q_t2_proved": q_bound_t2_applicable(n, s),
        "conjecture_shape": s >= t - 1,
    }
    adjacency = edge = conjecture = merris = None
    if s >= t:
        adjacency = adjacency_bound(n, s, t)
        edge = edge_bound(n, s, t)
    if s >= t - 1:
        try:
            conjecture = conjecture_bound(n, s, t)
            applicability["conjecture_discriminant"] = True
        except DiscriminantNegative:
            applicability["conjecture_discriminant"] = False
    if graph is not None and graph.edge_count() > 0:
        merris = merris_bound(graph)
    return BoundReport(n, s, t, adjacency, edge, q_bound_t2(n, s), conjecture, merris, applicability)


def _require_st(s: int, t: int):
    if t < 2:
        raise HypothesisViolated(f"need t >= 2, got {t}")
    if t > s:
        raise HypothesisViolated(f"need s >= t, got s={s}, t={t}")
