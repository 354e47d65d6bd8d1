"""Unit-disk topology graphs: node placement, adjacency and neighborhood queries.

Nodes are points in a square; two nodes are linked iff their Euclidean
distance is strictly below the transmission range. Adjacency is always
derived from positions, never stored in files.
"""

from __future__ import annotations

import json
import math
import warnings
from dataclasses import dataclass
from functools import cached_property

import numpy as np

from .errors import ConfigurationError, NodeNotFoundError, ParseError


@dataclass(frozen=True)
class TopologyConfig:
    """Generation parameters: node count, square side, radio range, RNG seed.

    ``seed`` is None for topologies loaded from a file (their positions were
    not generated here).
    """

    n: int
    area_side: float = 1000.0
    range: float = 200.0
    seed: int | None = 0

    def validate(self) -> None:
        if not isinstance(self.n, int) or self.n < 1:
            raise ConfigurationError(f"n must be an integer >= 1, got {self.n!r}")
        if not (isinstance(self.area_side, (int, float)) and math.isfinite(self.area_side) and self.area_side > 0):
            raise ConfigurationError(f"area_side must be a finite positive number, got {self.area_side!r}")
        if not (isinstance(self.range, (int, float)) and math.isfinite(self.range) and self.range > 0):
            raise ConfigurationError(f"range must be a finite positive number, got {self.range!r}")
        if self.seed is not None and (not isinstance(self.seed, int) or self.seed < 0):
            raise ConfigurationError(f"seed must be a non-negative integer or None, got {self.seed!r}")


class Topology:
    """Immutable set of node positions plus the derived strict-range adjacency.

    Node ids are dense 0..n-1. Safe for concurrent read access.
    """

    def __init__(self, config: TopologyConfig, positions) -> None:
        config.validate()
        pts = [(float(x), float(y)) for x, y in positions]
        if len(pts) != config.n:
            raise ConfigurationError(f"n={config.n} but {len(pts)} positions given")
        for i, (x, y) in enumerate(pts):
            if not (math.isfinite(x) and math.isfinite(y)):
                raise ConfigurationError(f"position of node {i} is not finite: ({x!r}, {y!r})")
        self._config = config
        self._positions = tuple(pts)
        arr = np.array(pts, dtype=float).reshape(config.n, 2)
        d2 = ((arr[:, None, :] - arr[None, :, :]) ** 2).sum(axis=2)
        adj = d2 < float(config.range) * float(config.range)
        np.fill_diagonal(adj, False)
        adj.flags.writeable = False
        self._adj = adj
        self._neighbor_cache: dict[int, frozenset[int]] = {}

    # -- basic accessors ---------------------------------------------------

    @property
    def config(self) -> TopologyConfig:
        return self._config

    @property
    def n(self) -> int:
        return self._config.n

    @property
    def positions(self) -> tuple[tuple[float, float], ...]:
        return self._positions

    @property
    def adjacency_matrix(self) -> np.ndarray:
        """Boolean n x n matrix, symmetric, False on the diagonal. Read-only."""
        return self._adj

    @cached_property
    def closed_neighborhood_matrix(self) -> np.ndarray:
        """Adjacency with True on the diagonal (each node covers itself)."""
        m = self._adj.copy()
        np.fill_diagonal(m, True)
        m.flags.writeable = False
        return m

    @cached_property
    def degrees(self) -> np.ndarray:
        d = self._adj.sum(axis=1).astype(np.int64)
        d.flags.writeable = False
        return d

    def _check_id(self, v) -> int:
        if not isinstance(v, (int, np.integer)) or isinstance(v, bool) or not 0 <= v < self.n:
            raise NodeNotFoundError(f"unknown node id {v!r} (valid ids are 0..{self.n - 1})")
        return int(v)

    # -- queries -----------------------------------------------------------

    def neighbors(self, v) -> frozenset[int]:
        """Ids of nodes strictly within range of v, excluding v itself."""
        v = self._check_id(v)
        cached = self._neighbor_cache.get(v)
        if cached is None:
            cached = frozenset(int(u) for u in np.flatnonzero(self._adj[v]))
            self._neighbor_cache[v] = cached
        return cached

    def closed_neighborhood(self, v) -> frozenset[int]:
        """neighbors(v) plus v itself: everything a head at v would cover."""
        v = self._check_id(v)
        return self.neighbors(v) | {v}

    def degree(self, v) -> int:
        v = self._check_id(v)
        return int(self.degrees[v])

    def k_hop_neighborhood(self, v, k: int) -> frozenset[int]:
        """All nodes reachable from v in at most k hops, excluding v."""
        v = self._check_id(v)
        if not isinstance(k, int) or k < 1:
            raise ValueError(f"k must be an integer >= 1, got {k!r}")
        seen = {v}
        frontier = {v}
        for _ in range(k):
            nxt = set()
            for u in frontier:
                nxt |= self.neighbors(u)
            nxt -= seen
            if not nxt:
                break
            seen |= nxt
            frontier = nxt
        return frozenset(seen - {v})

    def edge_count(self) -> int:
        return int(self.degrees.sum()) // 2

    def mean_degree(self) -> float:
        return float(self.degrees.mean())

    def __eq__(self, other) -> bool:
        if not isinstance(other, Topology):
            return NotImplemented
        return (
            self._config.area_side == other._config.area_side
            and self._config.range == other._config.range
            and self._positions == other._positions
        )

    __hash__ = None  # mutable caches inside; identity comparison is never wanted

    def __repr__(self) -> str:
        c = self._config
        return f"Topology(n={c.n}, area_side={c.area_side}, range={c.range}, edges={self.edge_count()})"


def generate(config: TopologyConfig) -> Topology:
    """Place n nodes independently uniformly at random in the square.

    Deterministic: the same config (including seed) always produces the
    identical topology.
    """
    config.validate()
    if config.seed is None:
        raise ConfigurationError("seed must be set to generate a topology")
    rng = np.random.default_rng(config.seed)
    pts = rng.uniform(0.0, config.area_side, size=(config.n, 2))
    return Topology(config, pts)


def save(t: Topology, path) -> None:
    """Write the topology as JSON: area_side, range, and node positions."""
    doc = {
        "area_side": t.config.area_side,
        "range": t.config.range,
        "nodes": [
            {"id": i, "x": x, "y": y} for i, (x, y) in enumerate(t.positions)
        ],
    }
    with open(path, "w", encoding="utf-8") as fh:
        json.dump(doc, fh, indent=2, sort_keys=True)
        fh.write("\n")


def load(path) -> Topology:
    """Read a topology written by save(); adjacency is recomputed, not stored.

    Positions outside [0, area_side]^2 are accepted with a warning. Node ids
    must be exactly 0..n-1.
    """
    try:
        with open(path, "r", encoding="utf-8") as fh:
            doc = json.load(fh)
    except json.JSONDecodeError as exc:
        raise ParseError(f"{path}: not valid JSON: {exc}") from exc
    if not isinstance(doc, dict):
        raise ParseError(f"{path}: top-level value must be an object")
    for field in ("area_side", "range"):
        if field not in doc:
            raise ConfigurationError(f"{path}: missing required field {field!r}")
        if not isinstance(doc[field], (int, float)):
            raise ConfigurationError(f"{path}: field {field!r} must be a number")
    nodes = doc.get("nodes")
    if not isinstance(nodes, list) or not nodes:
        raise ParseError(f"{path}: 'nodes' must be a non-empty list")

    by_id: dict[int, tuple[float, float]] = {}
    for idx, entry in enumerate(nodes):
        if not isinstance(entry, dict):
            raise ParseError(f"{path}: nodes[{idx}] is not an object")
        try:
            nid, x, y = entry["id"], entry["x"], entry["y"]
        except KeyError as exc:
            raise ParseError(f"{path}: nodes[{idx}] is missing field {exc.args[0]!r}") from exc
        if not isinstance(nid, int) or isinstance(nid, bool):
            raise ParseError(f"{path}: nodes[{idx}].id must be an integer, got {nid!r}")
        if nid in by_id:
            raise ParseError(f"{path}: duplicate node id {nid} at nodes[{idx}]")
        if not isinstance(x, (int, float)) or not isinstance(y, (int, float)):
            raise ParseError(f"{path}: nodes[{idx}] coordinates must be numbers")
        if not (math.isfinite(x) and math.isfinite(y)):
            raise ParseError(f"{path}: nodes[{idx}] coordinates must be finite")
        by_id[nid] = (float(x), float(y))

    n = len(by_id)
    if sorted(by_id) != list(range(n)):
        raise ParseError(f"{path}: node ids must be exactly 0..{n - 1}")

    area = float(doc["area_side"])
    out_of_area = [i for i, (x, y) in by_id.items() if not (0 <= x <= area and 0 <= y <= area)]
    if out_of_area:
        warnings.warn(
            f"{path}: {len(out_of_area)} node(s) lie outside [0, {area}]^2 "
            f"(first: id {min(out_of_area)}); keeping them as-is",
            stacklevel=2,
        )

    config = TopologyConfig(n=n, area_side=area, range=float(doc["range"]), seed=None)
    return Topology(config, [by_id[i] for i in range(n)])
