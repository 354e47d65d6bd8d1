"""Ant-colony search for a small cluster-head set (a small dominating set).

Each ant incrementally builds a head set: starting from a forced first head,
it repeatedly picks the next head among useful candidates (nodes that would
newly cover at least one node) with probability proportional to

    score(v) = alpha * visibility(v) + beta * pheromone(v)

where visibility(v) is the number of nodes v would newly cover (or the
static weight degree(v) + 1 when dynamic visibility is off). After each
iteration the best ant of the iteration deposits pheromone on its heads;
pheromone evaporates at a fixed rate. The smallest head set seen anywhere
is returned.
"""

from __future__ import annotations

from dataclasses import dataclass, replace

import numpy as np

from .errors import ConfigurationError
from .geomgraph import Topology


@dataclass(frozen=True)
class AcoParams:
    """Tunables for the ant-colony solver.

    alpha scales the visibility term, beta scales the pheromone
    concentration. ``greedy`` switches the per-step choice from
    roulette-wheel sampling to a deterministic argmax, ``dynamic_visibility``
    scores candidates by their current coverage gain (when off, by the
    static weight degree + 1), and ``neighbor_restricted`` prefers
    candidates adjacent to the previous head.
    ``iterations`` defaults to the node count when None. ``final_greedy``
    answers with one last deterministic construction under the final
    pheromone instead of the best set found.
    """

    alpha: float = 9.0
    beta: float = 1.0
    ants: int = 20
    evaporation_rate: float = 0.1
    deposit_quantum: float = 1.0
    greedy: bool = False
    dynamic_visibility: bool = True
    neighbor_restricted: bool = False
    final_greedy: bool = False
    iterations: int | None = None
    seed: int = 0

    def validate(self) -> None:
        if self.alpha < 0 or self.beta < 0:
            raise ConfigurationError(f"alpha and beta must be >= 0, got alpha={self.alpha}, beta={self.beta}")
        if self.alpha + self.beta <= 0:
            raise ConfigurationError("alpha + beta must be > 0")
        if not isinstance(self.ants, int) or self.ants < 1:
            raise ConfigurationError(f"ants must be an integer >= 1, got {self.ants!r}")
        if not 0 <= self.evaporation_rate < 1:
            raise ConfigurationError(f"evaporation_rate must be in [0, 1), got {self.evaporation_rate!r}")
        if self.deposit_quantum <= 0:
            raise ConfigurationError(f"deposit_quantum must be > 0, got {self.deposit_quantum!r}")
        if self.iterations is not None and (not isinstance(self.iterations, int) or self.iterations < 1):
            raise ConfigurationError(f"iterations must be None or an integer >= 1, got {self.iterations!r}")
        if not isinstance(self.seed, int) or self.seed < 0:
            raise ConfigurationError(f"seed must be a non-negative integer, got {self.seed!r}")


class PheromoneState:
    """Per-node pheromone concentrations; starts at zero everywhere."""

    __slots__ = ("_values",)

    def __init__(self, values) -> None:
        arr = np.array(values, dtype=float)
        if arr.ndim != 1:
            raise ConfigurationError("pheromone values must be one-dimensional")
        if (arr < 0).any() or not np.isfinite(arr).all():
            raise ConfigurationError("pheromone values must be finite and >= 0")
        arr.flags.writeable = False
        self._values = arr

    @classmethod
    def zeros(cls, n: int) -> "PheromoneState":
        return cls(np.zeros(n))

    @property
    def values(self) -> np.ndarray:
        return self._values

    def __len__(self) -> int:
        return len(self._values)

    def __getitem__(self, v) -> float:
        return float(self._values[v])

    def as_dict(self) -> dict[int, float]:
        return {i: float(x) for i, x in enumerate(self._values)}


@dataclass(frozen=True)
class AcoSolution:
    heads: frozenset[int]
    iteration_found: int
    head_count_history: list[int]

    @property
    def head_count(self) -> int:
        return len(self.heads)


def node_weight(t: Topology, v) -> float:
    """Static selection weight of a node: degree + 1."""
    return float(t.degree(v) + 1)


def coverage_gain(t: Topology, covered, v) -> int:
    """How many not-yet-covered nodes a head at v would newly cover."""
    v = t._check_id(v)
    return len(t.closed_neighborhood(v) - set(covered))


def selection_probability(t: Topology, ph: PheromoneState, params: AcoParams, candidates) -> dict[int, float]:
    """Normalized selection probabilities over the candidate set.

    P(v) = (weight(v)*alpha + pheromone(v)*beta) / sum over candidates of the same.
    """
    params.validate()
    cand = sorted({t._check_id(v) for v in candidates})
    if not cand:
        raise ValueError("candidates must be non-empty")
    if len(ph) != t.n:
        raise ConfigurationError(f"pheromone state has {len(ph)} entries for a {t.n}-node topology")
    idx = np.array(cand, dtype=np.int64)
    scores = params.alpha * (t.degrees[idx] + 1.0) + params.beta * ph.values[idx]
    total = float(scores.sum())
    if total <= 0:
        raise ValueError("degenerate input: all selection scores are zero")
    return {int(v): float(s) / total for v, s in zip(cand, scores)}


def update_pheromone(ph: PheromoneState, best_heads, params: AcoParams) -> PheromoneState:
    """Evaporate everywhere, then reinforce the given heads.

    Every value is multiplied by (1 - evaporation_rate); each head then
    receives deposit_quantum * n / |best_heads|, so smaller head sets are
    reinforced more strongly per node.
    """
    params.validate()
    heads = sorted({int(v) for v in best_heads})
    if not heads:
        raise ValueError("best_heads must be non-empty")
    n = len(ph)
    if heads[0] < 0 or heads[-1] >= n:
        raise ValueError(f"head ids must be within 0..{n - 1}")
    values = ph.values * (1.0 - params.evaporation_rate)
    values[heads] += params.deposit_quantum * n / len(heads)
    return PheromoneState(values)


def construct_solution(t: Topology, ph: PheromoneState, params: AcoParams, start, rng) -> set[int]:
    """Build one dominating head set, beginning with a forced head at ``start``.

    Candidates at each step are the non-head nodes that would newly cover at
    least one node; every uncovered node qualifies, so the loop always makes
    progress and finishes within n additions.
    """
    params.validate()
    start = t._check_id(start)
    if len(ph) != t.n:
        raise ConfigurationError(f"pheromone state has {len(ph)} entries for a {t.n}-node topology")
    closed = t.closed_neighborhood_matrix
    adj = t.adjacency_matrix
    static_scores = params.alpha * (t.degrees + 1.0)
    ph_scores = params.beta * ph.values

    # gains[v] = how many currently uncovered nodes v would newly cover,
    # maintained incrementally: when w becomes covered, every node that
    # reaches w loses one
    gains = (t.degrees + 1).astype(np.int64)
    covered = np.zeros(t.n, dtype=bool)

    def add_head(v: int) -> None:
        nonlocal gains
        newly = closed[v] & ~covered
        covered[newly] = True
        gains -= closed[np.flatnonzero(newly)].sum(axis=0)

    heads = [start]
    add_head(start)
    last = start
    while not covered.all():
        cand = np.flatnonzero(gains > 0)  # ascending ids: argmax ties go to the lowest id
        if params.neighbor_restricted:
            local = cand[adj[last, cand]]
            if local.size:
                cand = local
        if params.dynamic_visibility:
            scores = params.alpha * gains[cand] + ph_scores[cand]
        else:
            scores = static_scores[cand] + ph_scores[cand]
        if params.greedy:
            pick = int(cand[int(np.argmax(scores))])
        else:
            total = float(scores.sum())
            if total <= 0:
                pick = int(cand[rng.integers(len(cand))])  # all scores zero: fall back to uniform
            else:
                r = rng.random() * total
                pos = int(np.searchsorted(np.cumsum(scores), r, side="right"))
                pick = int(cand[min(pos, len(cand) - 1)])
        heads.append(pick)
        add_head(pick)
        last = pick

    # minimalize: drop heads made redundant by later picks (never the forced
    # start), newest first so early structural picks are kept
    if len(heads) > 1:
        cover_count = closed[heads].sum(axis=0)
        for h in heads[:0:-1]:
            if (cover_count[closed[h]] >= 2).all():
                cover_count[closed[h]] -= 1
                heads.remove(h)
    return set(heads)


def _ant_rng(seed: int, iteration: int, ant: int) -> np.random.Generator:
    # stream derivation keyed on (seed, iteration, ant): concurrent and
    # sequential execution of an iteration's ants give identical results
    return np.random.default_rng((seed, iteration, ant))


def solve(t: Topology, params: AcoParams | None = None) -> AcoSolution:
    """Run the full iterated search and return the smallest head set found.

    Iteration i forces start node i (wrapping past n); each iteration runs
    ``ants`` constructions, the iteration best deposits pheromone, and the
    overall best (earliest on ties) is the answer.
    """
    params = params if params is not None else AcoParams()
    params.validate()
    if t.n < 1:
        raise ConfigurationError("topology must have at least one node")
    iterations = params.iterations if params.iterations is not None else t.n
    # greedy constructions ignore the RNG, so every ant of an iteration
    # would coincide; one construction is enough
    ants = 1 if params.greedy else params.ants

    ph = PheromoneState.zeros(t.n)
    best: set[int] | None = None
    best_iteration = 0
    history: list[int] = []
    for iteration in range(iterations):
        start = iteration % t.n
        iteration_best: set[int] | None = None
        for ant in range(ants):
            heads = construct_solution(t, ph, params, start, _ant_rng(params.seed, iteration, ant))
            if iteration_best is None or len(heads) < len(iteration_best):
                iteration_best = heads
        history.append(len(iteration_best))
        if best is None or len(iteration_best) < len(best):
            best = iteration_best
            best_iteration = iteration
        ph = update_pheromone(ph, iteration_best, params)

    if params.final_greedy:
        scores = params.alpha * (t.degrees + 1.0) + params.beta * ph.values
        start = int(np.argmax(scores))
        final = construct_solution(t, ph, replace(params, greedy=True), start, _ant_rng(params.seed, iterations, 0))
        return AcoSolution(heads=frozenset(final), iteration_found=iterations, head_count_history=history)
    return AcoSolution(heads=frozenset(best), iteration_found=best_iteration, head_count_history=history)
