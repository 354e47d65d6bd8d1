"""Clustering solutions: head sets, member assignment, node roles, validity checks.

A head set is valid when it dominates the topology: every node is a head or
has a head within range. Members attach to an adjacent head; a non-head in
range of two or more heads is a gateway, everything else is ordinary.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass, field

import numpy as np

from .errors import NodeNotFoundError, ParseError, ValidityError
from .geomgraph import Topology

HEAD = "head"
GATEWAY = "gateway"
ORDINARY = "ordinary"
ROLES = (HEAD, GATEWAY, ORDINARY)


@dataclass(frozen=True)
class Clustering:
    """A solved clustering: heads, member -> head assignment and node roles.

    ``hops`` is the assignment radius: 1 for one-hop clusterings, k for
    k-hop schemes whose members may sit up to k hops from their head.
    """

    heads: frozenset[int]
    assignment: dict[int, int] = field(default_factory=dict)
    roles: dict[int, str] = field(default_factory=dict)
    hops: int = 1

    @property
    def head_count(self) -> int:
        return len(self.heads)


def _checked_heads(t: Topology, heads) -> list[int]:
    return sorted(t._check_id(v) for v in heads)


def covered_by(t: Topology, heads) -> np.ndarray:
    """Boolean mask of nodes that are heads or adjacent to a head."""
    ids = _checked_heads(t, heads)
    if not ids:
        return np.zeros(t.n, dtype=bool)
    return t.closed_neighborhood_matrix[ids].any(axis=0)


def uncovered_nodes(t: Topology, heads) -> list[int]:
    return [int(v) for v in np.flatnonzero(~covered_by(t, heads))]


def is_dominating(t: Topology, heads) -> bool:
    """True iff every node is in heads or adjacent to at least one head."""
    return bool(covered_by(t, heads).all())


def k_hop_covered_by(t: Topology, heads, k: int) -> set[int]:
    """Nodes within k hops of some head (including the heads), via multi-source BFS."""
    if k < 1:
        raise ValueError(f"k must be >= 1, got {k!r}")
    seen = set(_checked_heads(t, heads))
    frontier = set(seen)
    for _ in range(k):
        nxt = set()
        for u in frontier:
            nxt |= t.neighbors(u)
        nxt -= seen
        if not nxt:
            break
        seen |= nxt
        frontier = nxt
    return seen


def is_k_dominating(t: Topology, heads, k: int) -> bool:
    return len(k_hop_covered_by(t, heads, k)) == t.n


def compute_roles(t: Topology, heads) -> dict[int, str]:
    """Head for heads; gateway for a non-head in range of >= 2 heads; ordinary otherwise."""
    head_set = set(_checked_heads(t, heads))
    roles = {}
    for v in range(t.n):
        if v in head_set:
            roles[v] = HEAD
        elif len(t.neighbors(v) & head_set) >= 2:
            roles[v] = GATEWAY
        else:
            roles[v] = ORDINARY
    return roles


def assign_members(t: Topology, heads) -> Clustering:
    """Attach every non-head to its adjacent head of lowest id.

    Raises ValidityError (listing the uncovered nodes) if the heads do not
    dominate the topology.
    """
    head_set = frozenset(_checked_heads(t, heads))
    missing = uncovered_nodes(t, head_set)
    if missing:
        raise ValidityError(f"heads do not dominate; uncovered nodes: {missing}", uncovered=missing)
    assignment = {}
    for v in range(t.n):
        if v in head_set:
            continue
        assignment[v] = min(t.neighbors(v) & head_set)
    return Clustering(heads=head_set, assignment=assignment, roles=compute_roles(t, head_set), hops=1)


def domination_number_lower_bound(t: Topology) -> int:
    """A valid lower bound on the minimum dominating set size: ceil(n / (1 + max degree))."""
    max_deg = int(t.degrees.max()) if t.n else 0
    return math.ceil(t.n / (1 + max_deg))


# -- validation against a topology ------------------------------------------


def validate_clustering(t: Topology, c: Clustering) -> list[str]:
    """Return a list of violation messages; empty means the clustering is valid."""
    problems: list[str] = []
    try:
        head_set = set(_checked_heads(t, c.heads))
    except NodeNotFoundError as exc:
        return [f"heads: {exc}"]

    if c.hops == 1:
        missing = uncovered_nodes(t, head_set)
    else:
        missing = sorted(set(range(t.n)) - k_hop_covered_by(t, head_set, c.hops))
    if missing:
        problems.append(f"uncovered nodes (no head within {c.hops} hop(s)): {missing}")

    reach: dict[int, set[int]] = {}
    for h in head_set:
        reach[h] = set(t.neighbors(h)) if c.hops == 1 else set(t.k_hop_neighborhood(h, c.hops))

    for member, h in sorted(c.assignment.items()):
        if not (isinstance(member, int) and 0 <= member < t.n):
            problems.append(f"assignment: unknown member id {member!r}")
            continue
        if member in head_set:
            problems.append(f"assignment: node {member} is a head but is assigned to {h}")
            continue
        if h not in head_set:
            problems.append(f"assignment: node {member} is assigned to {h}, which is not a head")
            continue
        if member not in reach[h]:
            problems.append(f"assignment: node {member} is not within {c.hops} hop(s) of its head {h}")

    for v in range(t.n):
        if v not in head_set and v not in c.assignment:
            problems.append(f"assignment: non-head node {v} is not assigned to any head")

    expected_roles = compute_roles(t, head_set)
    for v in range(t.n):
        role = c.roles.get(v)
        if role not in ROLES:
            problems.append(f"roles: node {v} has invalid role {role!r}")
        elif role != expected_roles[v]:
            problems.append(f"roles: node {v} marked {role!r} but is {expected_roles[v]!r}")
    return problems


# -- JSON round trip ---------------------------------------------------------


def clustering_to_dict(c: Clustering) -> dict:
    return {
        "heads": sorted(c.heads),
        "assignment": {str(m): h for m, h in sorted(c.assignment.items())},
        "roles": {str(v): r for v, r in sorted(c.roles.items())},
        "hops": c.hops,
    }


def save_clustering(c: Clustering, path) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        json.dump(clustering_to_dict(c), fh, indent=2, sort_keys=True)
        fh.write("\n")


def load_clustering(path) -> Clustering:
    try:
        with open(path, "r", encoding="utf-8") as fh:
            doc = json.load(fh)
    except json.JSONDecodeError as exc:
        raise ParseError(f"{path}: not valid JSON: {exc}") from exc
    if not isinstance(doc, dict):
        raise ParseError(f"{path}: top-level value must be an object")
    heads = doc.get("heads")
    if not isinstance(heads, list) or not all(isinstance(h, int) for h in heads):
        raise ParseError(f"{path}: 'heads' must be a list of integers")
    assignment_raw = doc.get("assignment", {})
    roles_raw = doc.get("roles", {})
    if not isinstance(assignment_raw, dict) or not isinstance(roles_raw, dict):
        raise ParseError(f"{path}: 'assignment' and 'roles' must be objects")
    hops = doc.get("hops", 1)
    if not isinstance(hops, int) or hops < 1:
        raise ParseError(f"{path}: 'hops' must be an integer >= 1")
    try:
        assignment = {int(m): int(h) for m, h in assignment_raw.items()}
        roles = {int(v): str(r) for v, r in roles_raw.items()}
    except (TypeError, ValueError) as exc:
        raise ParseError(f"{path}: malformed assignment/roles keys: {exc}") from exc
    return Clustering(heads=frozenset(heads), assignment=assignment, roles=roles, hops=hops)
