"""The Lee graph, independent-set machinery and the container algorithms.

The graph G on Z_m^n joins words at Lee distance <= 2t, so its independent
sets are exactly the codes of minimum distance >= 2t+1.  Everything here is
exact: independent sets are counted with big integers, algorithm thresholds
are rationals compared by cross-multiplied integer powers, and the
supersaturation report evaluates each inequality against the brute-force
intersection oracle.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Iterator, Sequence

from .config import check_cap
from .core import Space, Word, binom
from .errors import DomainError, InvariantViolation
from .intersections import intersection_size
from .volumes import (
    BRANCH_EVEN,
    BRANCH_ODD_EXCEPTIONAL,
    ball_volume,
    estimate_constant_cm,
    lemma_branch,
)
from .bounds import _distance_ball_adjacency, hamming_bound

ALGORITHM_DEGREE = "algorithm1"
ALGORITHM_COUNT = "algorithm2"


@dataclass(frozen=True)
class LeeGraph:
    """Explicit graph on Z_m^n with edges at Lee distance <= 2t.

    Nodes are integers 0..m^n-1 encoding coordinates base m (most
    significant first), which is also the fixed lexicographic node order
    used for every tie-break.  Vertex-transitive, hence regular of degree
    v(n, 2t) - 1.
    """

    space: Space
    t: int
    adjacency: tuple[int, ...]  # bitmask per node

    @property
    def node_count(self) -> int:
        return self.space.size

    @property
    def degree(self) -> int:
        return self.adjacency[0].bit_count() if self.adjacency else 0

    def neighbors(self, node: int) -> int:
        return self.adjacency[node]

    def is_edge(self, u: int, v: int) -> bool:
        return u != v and bool(self.adjacency[u] >> v & 1)

    def word(self, node: int) -> Word:
        return Word.from_index(self.space, node)

    def index(self, word: Word) -> int:
        if word.space != self.space:
            raise DomainError("word does not belong to this graph's space")
        return word.to_index()

    def node_string(self, node: int) -> str:
        return self.word(node).to_string()

    def words(self, nodes: Iterable[int]) -> frozenset[Word]:
        return frozenset(self.word(v) for v in nodes)


def build_lee_graph(space: Space, t: int) -> LeeGraph:
    """Materialize the Lee graph; degree is checked against v(n,2t) - 1."""
    if t < 0:
        raise DomainError("radius t must be >= 0")
    check_cap("graph_nodes", space.size, f"building the Lee graph on {space}")
    adjacency = tuple(_distance_ball_adjacency(space.m, space.n, 2 * t))
    graph = LeeGraph(space, t, adjacency)
    expected = ball_volume(space, 2 * t) - 1
    for mask in adjacency:
        if mask.bit_count() != expected:
            raise InvariantViolation(
                f"graph is not {expected}-regular; got degree {mask.bit_count()}"
            )
    return graph


def _resolve_nodes(graph: LeeGraph, nodes: Iterable[Word | int]) -> list[int]:
    out = []
    for item in nodes:
        if isinstance(item, Word):
            out.append(graph.index(item))
        else:
            idx = int(item)
            if not 0 <= idx < graph.node_count:
                raise DomainError(f"node index {idx} out of range")
            out.append(idx)
    return out


# ---------------------------------------------------------------------------
# Degree profiles
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class DegreeProfile:
    """Distance-resolved degrees of an induced subgraph.

    per_node[v] is a tuple of deg_r(v) for r = 1..2t, counting members of
    the subset at Lee distance exactly r from v.  edge_counts[r-1] is |E_r|.
    degree_bound_ok reports whether deg_r(v) <= 3^r C(n,r) held for every
    node and every integer r <= n/2.
    """

    t: int
    nodes: tuple[int, ...]
    per_node: dict[int, tuple[int, ...]]
    edge_counts: tuple[int, ...]
    max_degree: int
    degree_bound_ok: bool

    @property
    def edge_total(self) -> int:
        return sum(self.edge_counts)


def degree_profile(graph: LeeGraph, subset: Iterable[Word | int]) -> DegreeProfile:
    nodes = sorted(set(_resolve_nodes(graph, subset)))
    space = graph.space
    m = space.m
    t = graph.t
    rmax = 2 * t
    words = [graph.word(v).coords for v in nodes]
    per_node = {v: [0] * rmax for v in nodes}
    edge_counts = [0] * rmax
    for a in range(len(nodes)):
        xa = words[a]
        for b in range(a + 1, len(nodes)):
            xb = words[b]
            dist = 0
            for ca, cb in zip(xa, xb):
                diff = (ca - cb) % m
                dist += min(diff, m - diff)
                if dist > rmax:
                    break
            if 1 <= dist <= rmax:
                per_node[nodes[a]][dist - 1] += 1
                per_node[nodes[b]][dist - 1] += 1
                edge_counts[dist - 1] += 1
    bound_ok = True
    for v in nodes:
        for r in range(1, rmax + 1):
            if 2 * r <= space.n and per_node[v][r - 1] > 3**r * binom(space.n, r):
                bound_ok = False
    max_degree = max((sum(per_node[v]) for v in nodes), default=0)
    return DegreeProfile(
        t=t,
        nodes=tuple(nodes),
        per_node={v: tuple(c) for v, c in per_node.items()},
        edge_counts=tuple(edge_counts),
        max_degree=max_degree,
        degree_bound_ok=bound_ok,
    )


# ---------------------------------------------------------------------------
# Independent-set counting and enumeration
# ---------------------------------------------------------------------------


class _MaskCounter:
    """Exact independent-set counting on a bitmask-encoded graph, with
    max-degree splitting, connected-component factorization and memoization.
    Results are independent of evaluation order."""

    def __init__(self, masks: Sequence[int]):
        self.masks = list(masks)
        self._count_memo: dict[int, int] = {}
        self._poly_memo: dict[int, tuple[int, ...]] = {}

    def _components(self, mask: int) -> list[int]:
        comps = []
        rest = mask
        while rest:
            seed = rest & -rest
            comp = 0
            frontier = seed
            while frontier:
                comp |= frontier
                nxt = 0
                f = frontier
                while f:
                    v = (f & -f).bit_length() - 1
                    f &= f - 1
                    nxt |= self.masks[v] & mask
                frontier = nxt & ~comp
            comps.append(comp)
            rest &= ~comp
        return comps

    def _split_vertex(self, mask: int) -> int:
        best_v = -1
        best_d = -1
        mm = mask
        while mm:
            v = (mm & -mm).bit_length() - 1
            mm &= mm - 1
            d = (self.masks[v] & mask).bit_count()
            if d > best_d:
                best_v, best_d = v, d
        return best_v

    def count(self, mask: int) -> int:
        if mask == 0:
            return 1
        cached = self._count_memo.get(mask)
        if cached is not None:
            return cached
        total = 1
        for comp in self._components(mask):
            total *= self._count_component(comp)
        self._count_memo[mask] = total
        return total

    def _count_component(self, mask: int) -> int:
        cached = self._count_memo.get(mask)
        if cached is not None:
            return cached
        if mask & (mask - 1) == 0:
            return 2  # single node: empty set or the node
        v = self._split_vertex(mask)
        without = self.count(mask & ~(1 << v))
        with_v = self.count(mask & ~(self.masks[v] | (1 << v)))
        result = without + with_v
        self._count_memo[mask] = result
        return result

    def polynomial(self, mask: int) -> tuple[int, ...]:
        """Coefficients of the independence polynomial: entry k counts the
        independent sets of size k inside `mask`."""
        if mask == 0:
            return (1,)
        cached = self._poly_memo.get(mask)
        if cached is not None:
            return cached
        poly = (1,)
        for comp in self._components(mask):
            poly = _poly_mul(poly, self._poly_component(comp))
        self._poly_memo[mask] = poly
        return poly

    def _poly_component(self, mask: int) -> tuple[int, ...]:
        cached = self._poly_memo.get(mask)
        if cached is not None:
            return cached
        if mask & (mask - 1) == 0:
            return (1, 1)
        v = self._split_vertex(mask)
        without = self.polynomial(mask & ~(1 << v))
        with_v = _poly_mul((0, 1), self.polynomial(mask & ~(self.masks[v] | (1 << v))))
        result = _poly_add(without, with_v)
        self._poly_memo[mask] = result
        return result


def _poly_mul(a: tuple[int, ...], b: tuple[int, ...]) -> tuple[int, ...]:
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] += ai * bj
    return tuple(out)


def _poly_add(a: tuple[int, ...], b: tuple[int, ...]) -> tuple[int, ...]:
    if len(a) < len(b):
        a, b = b, a
    out = list(a)
    for i, bi in enumerate(b):
        out[i] += bi
    return tuple(out)


def _induced_masks(graph: LeeGraph, nodes: Sequence[int]) -> list[int]:
    index_of = {v: i for i, v in enumerate(nodes)}
    masks = []
    for v in nodes:
        mask = 0
        nb = graph.adjacency[v]
        while nb:
            u = (nb & -nb).bit_length() - 1
            nb &= nb - 1
            j = index_of.get(u)
            if j is not None:
                mask |= 1 << j
        masks.append(mask)
    return masks


def _counting_context(
    graph: LeeGraph, induced_on: Iterable[Word | int] | None
) -> tuple[list[int], _MaskCounter]:
    if induced_on is None:
        nodes = list(range(graph.node_count))
    else:
        nodes = sorted(set(_resolve_nodes(graph, induced_on)))
    check_cap("count_nodes", len(nodes), "independent-set counting")
    return nodes, _MaskCounter(_induced_masks(graph, nodes))


def count_independent_sets(
    graph: LeeGraph, induced_on: Iterable[Word | int] | None = None
) -> int:
    """Exact number of independent sets (the empty set included) of the
    graph, or of the subgraph induced on `induced_on`."""
    nodes, counter = _counting_context(graph, induced_on)
    return counter.count((1 << len(nodes)) - 1)


def independence_polynomial(
    graph: LeeGraph, induced_on: Iterable[Word | int] | None = None
) -> tuple[int, ...]:
    """Independent sets counted by size; index k is the number of size-k
    independent sets."""
    nodes, counter = _counting_context(graph, induced_on)
    return counter.polynomial((1 << len(nodes)) - 1)


def enumerate_independent_sets(graph: LeeGraph) -> Iterator[frozenset[Word]]:
    """Every independent set exactly once, in depth-first order over the
    node order (the empty set first)."""
    total = count_independent_sets(graph)
    check_cap("indset_enum", total, "independent-set enumeration")
    n = graph.node_count
    adjacency = graph.adjacency

    def rec(chosen: list[int], candidates: int) -> Iterator[frozenset[Word]]:
        yield graph.words(chosen)
        cand = candidates
        while cand:
            v = (cand & -cand).bit_length() - 1
            cand &= cand - 1
            higher = ~((1 << (v + 1)) - 1)
            chosen.append(v)
            yield from rec(chosen, candidates & higher & ~adjacency[v])
            chosen.pop()

    yield from rec([], (1 << n) - 1)


# ---------------------------------------------------------------------------
# Container algorithms
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class ContainerStep:
    index: int
    node: str | None  # base-m digit string; None for a count-test stop
    degree: int | None
    action: str  # "drop" | "fingerprint" | "stop"


@dataclass(frozen=True)
class ContainerRun:
    """Trace of one container-algorithm execution.

    fingerprint is the certificate set P (a subset of the input independent
    set); container is the final live node set f(P); the union P | f(P) is
    the member this run contributes to a container family.
    """

    variant: str
    epsilon: Fraction
    delta_threshold: Fraction | None
    count_exponent: Fraction | None
    fingerprint: frozenset[Word]
    container: frozenset[Word]
    steps: tuple[ContainerStep, ...]
    containment_ok: bool

    @property
    def covered(self) -> frozenset[Word]:
        return self.fingerprint | self.container

    def to_jsonl(self) -> str:
        """Line-oriented JSON log: one meta line, one line per step, one
        result line."""
        lines = [
            json.dumps(
                {
                    "type": "meta",
                    "variant": self.variant,
                    "epsilon": str(self.epsilon),
                    "delta_threshold": None
                    if self.delta_threshold is None
                    else str(self.delta_threshold),
                    "count_exponent": None
                    if self.count_exponent is None
                    else str(self.count_exponent),
                },
                sort_keys=True,
            )
        ]
        for step in self.steps:
            lines.append(
                json.dumps(
                    {
                        "step": step.index,
                        "node": step.node,
                        "degree": step.degree,
                        "action": step.action,
                    },
                    sort_keys=True,
                )
            )
        lines.append(
            json.dumps(
                {
                    "type": "result",
                    "fingerprint": sorted(w.to_string() for w in self.fingerprint),
                    "container_size": len(self.container),
                    "container": sorted(w.to_string() for w in self.container),
                    "containment_ok": self.containment_ok,
                },
                sort_keys=True,
            )
        )
        return "\n".join(lines)


def _validate_independent(graph: LeeGraph, nodes: Sequence[int]) -> None:
    node_set = set(nodes)
    for v in node_set:
        overlap = graph.adjacency[v]
        for u in node_set:
            if u != v and overlap >> u & 1:
                raise DomainError(
                    f"input set is not independent: nodes {v} and {u} are adjacent"
                )


def _max_degree_node(adjacency: Sequence[int], live: int) -> tuple[int, int]:
    # ties broken by the fixed node order (lowest index)
    best_v = -1
    best_d = -1
    mm = live
    while mm:
        v = (mm & -mm).bit_length() - 1
        mm &= mm - 1
        d = (adjacency[v] & live).bit_count()
        if d > best_d:
            best_v, best_d = v, d
    return best_v, best_d


def degree_threshold(space: Space, t: int, epsilon: Fraction, cm: Fraction | None) -> Fraction:
    """Degree cutoff for the threshold-peeling algorithm: eps*n/(m*t) for
    even m, eps*n/(m*cm) in the odd-exceptional case, else eps*n/(2*m*t)."""
    branch = lemma_branch(space.m, t)
    if branch == BRANCH_EVEN:
        return Fraction(epsilon) * space.n / (space.m * t)
    if branch == BRANCH_ODD_EXCEPTIONAL:
        if cm is None:
            raise DomainError(
                "odd modulus with t = ceil(m/2) needs the constant cm "
                "(supply one or use volumes.estimate_constant_cm)"
            )
        return Fraction(epsilon) * space.n / (space.m * Fraction(cm))
    return Fraction(epsilon) * space.n / (2 * space.m * t)


def run_algorithm1(
    graph: LeeGraph,
    independent_set: Iterable[Word | int],
    epsilon: Fraction,
    cm: Fraction | None = None,
) -> ContainerRun:
    """Threshold-peeling container run.

    Repeatedly takes the maximum-degree live node u (ties by node order):
    drops it if it lies outside the input set I; if u is in I with live
    degree >= Delta, records u in the fingerprint P and drops its closed
    neighborhood; if u is in I with degree < Delta, stops with the live
    nodes as the container f(P).  If the live set empties first the
    container is empty.  Guarantees I is a subset of P | f(P).
    """
    epsilon = Fraction(epsilon)
    if epsilon <= 0:
        raise DomainError("epsilon must be positive")
    if graph.t < 1:
        raise DomainError("the container algorithms need t >= 1")
    nodes = _resolve_nodes(graph, independent_set)
    _validate_independent(graph, nodes)
    in_i = set(nodes)
    delta = degree_threshold(graph.space, graph.t, epsilon, cm)

    adjacency = graph.adjacency
    live = (1 << graph.node_count) - 1
    fingerprint: list[int] = []
    steps: list[ContainerStep] = []
    container_mask = 0
    index = 0
    while live:
        index += 1
        u, deg = _max_degree_node(adjacency, live)
        if u not in in_i:
            live &= ~(1 << u)
            steps.append(ContainerStep(index, graph.node_string(u), deg, "drop"))
        elif deg >= delta:
            fingerprint.append(u)
            live &= ~(adjacency[u] | (1 << u))
            steps.append(ContainerStep(index, graph.node_string(u), deg, "fingerprint"))
        else:
            container_mask = live
            steps.append(ContainerStep(index, graph.node_string(u), deg, "stop"))
            break

    return _finish_run(
        graph,
        ALGORITHM_DEGREE,
        epsilon,
        delta,
        None,
        fingerprint,
        container_mask,
        steps,
        in_i,
    )


def run_algorithm2(
    graph: LeeGraph,
    independent_set: Iterable[Word | int],
    epsilon: Fraction,
    h: Fraction,
) -> ContainerRun:
    """Count-tested peeling container run.

    Before each peel the number of independent sets of the live subgraph is
    computed exactly; once it is at most 2^((1+eps)h) the live nodes become
    the container.  Otherwise the maximum-degree node is dropped, and when
    it lies in the input set it is recorded in the fingerprint and its
    closed neighborhood removed.  The count test is decided exactly:
    i <= 2^(a/b) iff i^b <= 2^a.
    """
    epsilon = Fraction(epsilon)
    if epsilon < 0:
        raise DomainError("epsilon must be nonnegative")
    h = Fraction(h)
    if h <= 0:
        raise DomainError("the count exponent h must be positive")
    if graph.t < 1:
        raise DomainError("the container algorithms need t >= 1")
    nodes = _resolve_nodes(graph, independent_set)
    _validate_independent(graph, nodes)
    in_i = set(nodes)

    check_cap("count_nodes", graph.node_count, "count-tested container run")
    counter = _MaskCounter(list(graph.adjacency))
    exponent = (1 + epsilon) * h
    a, b = exponent.numerator, exponent.denominator

    adjacency = graph.adjacency
    live = (1 << graph.node_count) - 1
    fingerprint: list[int] = []
    steps: list[ContainerStep] = []
    container_mask = 0
    index = 0
    while True:
        index += 1
        count = counter.count(live)
        if count**b <= 2**a:
            container_mask = live
            steps.append(ContainerStep(index, None, None, "stop"))
            break
        u, deg = _max_degree_node(adjacency, live)
        if u not in in_i:
            live &= ~(1 << u)
            steps.append(ContainerStep(index, graph.node_string(u), deg, "drop"))
        else:
            fingerprint.append(u)
            live &= ~(adjacency[u] | (1 << u))
            steps.append(ContainerStep(index, graph.node_string(u), deg, "fingerprint"))

    return _finish_run(
        graph,
        ALGORITHM_COUNT,
        epsilon,
        None,
        exponent,
        fingerprint,
        container_mask,
        steps,
        in_i,
    )


def _finish_run(
    graph: LeeGraph,
    variant: str,
    epsilon: Fraction,
    delta: Fraction | None,
    count_exponent: Fraction | None,
    fingerprint: list[int],
    container_mask: int,
    steps: list[ContainerStep],
    in_i: set[int],
) -> ContainerRun:
    container_nodes = set()
    mm = container_mask
    while mm:
        v = (mm & -mm).bit_length() - 1
        mm &= mm - 1
        container_nodes.add(v)
    covered = set(fingerprint) | container_nodes
    containment_ok = in_i <= covered
    if not containment_ok:
        raise InvariantViolation(
            "container run lost part of the input independent set"
        )
    return ContainerRun(
        variant=variant,
        epsilon=epsilon,
        delta_threshold=delta,
        count_exponent=count_exponent,
        fingerprint=graph.words(fingerprint),
        container=graph.words(container_nodes),
        steps=tuple(steps),
        containment_ok=containment_ok,
    )


@dataclass(frozen=True)
class ContainerFamily:
    """Deduplicated family of P | f(P) members over every independent set."""

    variant: str
    epsilon: Fraction
    members: tuple[frozenset[Word], ...]
    coverage_ok: bool
    counting_ok: bool
    independent_set_count: int
    member_count_sum: int


def build_container_family(
    graph: LeeGraph,
    epsilon: Fraction,
    variant: str = ALGORITHM_DEGREE,
    cm: Fraction | None = None,
    h: Fraction | None = None,
) -> ContainerFamily:
    """Run the chosen algorithm on every independent set and collect the
    deduplicated members P | f(P).

    Verifies both family postconditions exactly: every independent set lies
    inside some member, and i(G) <= sum over members F of i(G[F]).
    """
    if variant not in (ALGORITHM_DEGREE, ALGORITHM_COUNT):
        raise DomainError(f"unknown variant {variant!r}")
    if variant == ALGORITHM_COUNT and h is None:
        h = hamming_bound(graph.space, graph.t)
    members: list[frozenset[Word]] = []
    seen: set[frozenset[Word]] = set()
    coverage_ok = True
    for ind in enumerate_independent_sets(graph):
        if variant == ALGORITHM_DEGREE:
            run = run_algorithm1(graph, ind, epsilon, cm)
        else:
            run = run_algorithm2(graph, ind, epsilon, h)
        member = run.covered
        if not ind <= member:
            coverage_ok = False
        if member not in seen:
            seen.add(member)
            members.append(member)
    members.sort(key=lambda s: sorted(w.coords for w in s))
    total = count_independent_sets(graph)
    member_sum = sum(count_independent_sets(graph, member) for member in members)
    return ContainerFamily(
        variant=variant,
        epsilon=Fraction(epsilon),
        members=tuple(members),
        coverage_ok=coverage_ok,
        counting_ok=total <= member_sum,
        independent_set_count=total,
        member_count_sum=member_sum,
    )


# ---------------------------------------------------------------------------
# Supersaturation diagnostics
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class SupersaturationReport:
    """Exact evaluation of the supersaturation inequalities on a subset.

    Hypothesis flags record whether each statement applies; conclusion
    flags are None when the hypothesis fails (nothing is asserted).  The
    subset need not be a code: the pair-counting arguments behind the
    inequalities apply to arbitrary subsets, and the report treats them
    that way.
    """

    subset_size: int
    branch: str
    hamming: Fraction
    cm_used: Fraction | None
    epsilon: Fraction
    # weighted-pair inequality
    dense_hypothesis: bool  # |C| >= 2 H
    weighted_pair_sum: int
    weighted_pair_lower: Fraction
    weighted_pair_ok: bool | None
    # edge-count inequality
    edge_count: int
    edge_lower: Fraction
    edge_ok: bool | None
    # surplus pair count
    gamma: Fraction  # |C| - H
    surplus_hypothesis: bool  # gamma >= 0
    pair_lower: Fraction
    pair_ok: bool | None
    # low/high local-degree split
    low_degree_size: int
    high_degree_size: int


def supersaturation_report(
    graph: LeeGraph,
    subset: Iterable[Word | int],
    cm: Fraction | None = None,
    epsilon: Fraction = Fraction(1),
) -> SupersaturationReport:
    """Evaluate the supersaturation inequalities for `subset`, exactly.

    The odd-exceptional branch needs a constant; when none is supplied one
    is estimated over lengths 2..max(4, n) via the volume-ratio grid
    search.  Intersection sizes come from the brute-force oracle, never
    from the estimates.
    """
    space = graph.space
    t = graph.t
    if t < 1:
        raise DomainError("supersaturation needs t >= 1")
    epsilon = Fraction(epsilon)
    if epsilon <= 0:
        raise DomainError("epsilon must be positive")
    profile = degree_profile(graph, subset)
    nodes = profile.nodes
    size = len(nodes)
    m, n = space.m, space.n
    volume = ball_volume(space, t)
    h = hamming_bound(space, t)
    branch = lemma_branch(m, t)
    if branch == BRANCH_ODD_EXCEPTIONAL and cm is None:
        cm = estimate_constant_cm(m, range(2, max(4, n) + 1)).value

    weighted_sum = sum(
        intersection_size(space, t, r) * profile.edge_counts[r - 1]
        for r in range(1, 2 * t + 1)
    )
    weighted_lower = Fraction(size * size * volume * volume, 10 * space.size)
    edges = profile.edge_total
    if branch == BRANCH_EVEN:
        edge_lower = Fraction(n * size * size) / (5 * m * t * h)
        pair_rate = Fraction(2 * n, m * t)
    elif branch == BRANCH_ODD_EXCEPTIONAL:
        edge_lower = Fraction(n * size * size) / (10 * m * Fraction(cm) * h)
        pair_rate = Fraction(n) / (m * Fraction(cm))
    else:
        edge_lower = Fraction(n * size * size) / (10 * m * t * h)
        pair_rate = Fraction(n, m * t)

    dense = size >= 2 * h
    gamma = size - h
    surplus = gamma >= 0
    pair_lower = gamma * pair_rate if surplus else Fraction(0)

    # local-degree split over distance range 1..min(20, 2t)
    span = min(20, 2 * t)
    eps_sq = epsilon * epsilon
    low = 0
    high = 0
    log_n = math.log(n) if n > 1 else 0.0
    for v in nodes:
        degs = profile.per_node[v]
        is_low = True
        for r in range(1, span + 1):
            d = degs[r - 1]
            # deg <= eps * n^(ceil(r/2)/2)  <=>  deg^2 <= eps^2 * n^ceil(r/2)
            if Fraction(d * d) > eps_sq * n ** ((r + 1) // 2):
                is_low = False
                break
        if is_low:
            low += 1
        # float comparison is safe: log(n)/eps is irrational for n >= 2
        if n == 1 or float(epsilon * sum(degs[: span])) >= log_n:
            high += 1

    return SupersaturationReport(
        subset_size=size,
        branch=branch,
        hamming=h,
        cm_used=Fraction(cm) if cm is not None else None,
        epsilon=epsilon,
        dense_hypothesis=dense,
        weighted_pair_sum=weighted_sum,
        weighted_pair_lower=weighted_lower,
        weighted_pair_ok=(weighted_sum >= weighted_lower) if dense else None,
        edge_count=edges,
        edge_lower=edge_lower,
        edge_ok=(edges >= edge_lower) if dense else None,
        gamma=gamma,
        surplus_hypothesis=surplus,
        pair_lower=pair_lower,
        pair_ok=(edges >= pair_lower) if surplus else None,
        low_degree_size=low,
        high_degree_size=high,
    )
