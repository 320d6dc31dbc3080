"""Builders for the conjectured extremal graphs K_{t-1} joined with an
s-regular graph, and the recognizer for the strongly regular equality case
of the adjacency bound.

Regularity alone does not make the join K_{t,s+1}-free (pairs inside H may
share too many neighbors once the hub is added), so every build carries an
explicit freeness certificate: the default circulant H is checked, and on
failure random regular graphs are tried under fresh seeds before giving up.
"""

from __future__ import annotations

import random
from dataclasses import dataclass

from .errors import (
    CannotCertifyFreeness,
    GenerationFailed,
    HypothesisViolated,
    InvalidOffsets,
    NoRegularGraphExists,
)
from .forbidden import ForbiddenPattern, Witness, find_kst
from .graphs import Graph, complete_graph, empty_graph, from_edge_list, join

STRATEGIES = ("circulant", "random_regular")


@dataclass(frozen=True)
class ExtremalSpec:
    """Target join: complete part of order t-1, s-regular part of order n-t+1."""

    n: int
    s: int
    t: int
    strategy: str = "circulant"

    def __post_init__(self):
        if self.t < 2:
            raise HypothesisViolated(f"need t >= 2, got {self.t}")
        if self.s < 1:
            raise HypothesisViolated(f"need s >= 1, got {self.s}")
        if self.strategy not in STRATEGIES:
            raise ValueError(f"strategy must be one of {STRATEGIES}")

    @property
    def m(self) -> int:
        """Order of the regular part."""
        return self.n - self.t + 1


@dataclass(frozen=True)
class BuildResult:
    graph: Graph
    free: bool
    witness: Witness | None
    strategy_used: str
    seed_used: int | None
    attempts: int


def circulant(m: int, offsets) -> Graph:
    """Circulant graph: i ~ i +- c (mod m) for each offset c in 1..m//2."""
    offs = sorted(set(int(c) for c in offsets))
    if any(c < 1 or c > m // 2 for c in offs):
        raise InvalidOffsets(f"offsets {offs} outside 1..{m // 2}")
    edges = []
    for c in offs:
        for i in range(m):
            edges.append((i, (i + c) % m))
    return from_edge_list(m, edges)


def random_regular(m: int, s: int, seed: int, restart_cap: int = 200000) -> Graph:
    """Uniform s-regular graph by the pairing model, restarting on any loop
    or repeated pair.  Deterministic for a given seed."""
    if s < 0 or s >= m:
        raise NoRegularGraphExists(f"degree {s} impossible on {m} vertices")
    if (m * s) % 2 != 0:
        raise NoRegularGraphExists(f"parity: {s}-regular on {m} vertices needs s*m even")
    if s == 0:
        return empty_graph(m)
    if s == m - 1:
        return complete_graph(m)
    rng = random.Random(seed)
    stubs = [v for v in range(m) for _ in range(s)]
    for _ in range(restart_cap):
        rng.shuffle(stubs)
        seen = set()
        ok = True
        for i in range(0, len(stubs), 2):
            u, v = stubs[i], stubs[i + 1]
            if u == v or (min(u, v), max(u, v)) in seen:
                ok = False
                break
            seen.add((min(u, v), max(u, v)))
        if ok:
            return from_edge_list(m, sorted(seen))
    raise GenerationFailed(f"no simple {s}-regular pairing on {m} vertices after {restart_cap} restarts")


def _circulant_offsets(m: int, s: int) -> list[int]:
    # s even: offsets 1..s/2; s odd needs the antipodal offset (m even)
    offs = list(range(1, s // 2 + 1))
    if s % 2 == 1:
        offs.append(m // 2)
    return offs


def build_extremal(
    spec: ExtremalSpec,
    seed: int = 0,
    max_attempts: int = 20,
    require_free: bool = True,
) -> BuildResult:
    """Join a (t-1)-clique with an s-regular graph of order n-t+1 and certify
    the result K_{t,s+1}-free.

    Tries the spec's strategy first; if the join contains the pattern,
    retries with random regular graphs under seeds seed, seed+1, ... up to
    ``max_attempts``.  With ``require_free`` (the default) a run that never
    certifies raises CannotCertifyFreeness; otherwise the first attempt is
    returned with its failing certificate.
    """
    m = spec.m
    if m <= spec.s:
        raise NoRegularGraphExists(f"{spec.s}-regular needs order > {spec.s}, H has {m}")
    if (m * spec.s) % 2 != 0:
        raise NoRegularGraphExists(f"parity: {spec.s}-regular on {m} vertices impossible")
    pat = ForbiddenPattern.from_ts(spec.t, spec.s)
    clique = complete_graph(spec.t - 1)

    def assemble(h: Graph) -> Graph:
        assert h.regular_degree() == spec.s, "regular part failed its degree check"
        return join(clique, h)

    attempts = []
    if spec.strategy == "circulant":
        attempts.append(("circulant", None, circulant(m, _circulant_offsets(m, spec.s))))
    for k in range(max_attempts):
        attempts.append(("random_regular", seed + k, None))

    first: BuildResult | None = None
    tried = 0
    for strategy, sd, h in attempts:
        if h is None:
            h = random_regular(m, spec.s, sd)
        g = assemble(h)
        tried += 1
        witness = find_kst(g, pat)
        result = BuildResult(g, witness is None, witness, strategy, sd, tried)
        if first is None:
            first = result
        if result.free:
            return result
    if require_free:
        raise CannotCertifyFreeness(
            f"all {tried} joins for n={spec.n}, s={spec.s}, t={spec.t} contain {pat}"
        )
    return first


def is_design_graph(g: Graph, s: int) -> bool:
    """Whether g is strongly regular with both codegree parameters equal to s.

    Such graphs are exactly the equality case of the t = 2 adjacency bound
    evaluated at forbidden-pattern parameter s+1.  The consistency identity
    k(k-1) = s(n-1) pins the (necessarily integer) degree; complete and
    edgeless graphs are excluded as degenerate.
    """
    if s < 1:
        return False
    n = g.n
    e = g.edge_count()
    if e == 0 or e == n * (n - 1) // 2:
        return False
    k = g.regular_degree()
    if k is None or k * (k - 1) != s * (n - 1):
        return False
    for u in range(n):
        au = g.adj[u]
        for v in range(u + 1, n):
            common = (au & g.adj[v] & ~(1 << u) & ~(1 << v)).bit_count()
            if common != s:
                return False
    return True
