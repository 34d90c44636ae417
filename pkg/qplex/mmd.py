"""
Mutually maximally distant (MMD) subsets.

A set is MMD when every member has (p, p) = U and every distinct pair has
(p_a, p_b) = L. Candidates whose self-overlap misses U are discarded first;
if at most EXACT_CUTOFF admissible candidates remain, a branch-and-bound
maximum-clique search returns a certified maximum. Beyond that a greedy pass
seeded by the best pair (lowest index on ties) returns a valid but
uncertified MMD set.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import List, Sequence, Tuple

import numpy as np

from errors import DimensionError
from representation import ProbState
from .geometry import QplexGeometry

logger = logging.getLogger(__name__)

EXACT_CUTOFF = 20
DEFAULT_TOL = 1e-9


@dataclass(frozen=True)
class MmdResult:
    indices: Tuple[int, ...]
    certified: bool

    @property
    def size(self) -> int:
        return len(self.indices)

    def to_dict(self) -> dict:
        return {"indices": list(self.indices), "size": self.size, "certified": self.certified}


def _max_clique(adj: np.ndarray) -> List[int]:
    """Largest clique of a small boolean adjacency matrix (lexicographically first among ties)."""
    n = adj.shape[0]
    best: List[int] = []

    def extend(clique: List[int], candidates: List[int]):
        nonlocal best
        if len(clique) > len(best):
            best = list(clique)
        for pos, v in enumerate(candidates):
            # Bound: even taking every remaining candidate cannot beat best
            if len(clique) + len(candidates) - pos <= len(best):
                return
            extend(clique + [v], [u for u in candidates[pos + 1:] if adj[v, u]])

    extend([], list(range(n)))
    return best


def _greedy(adj: np.ndarray, gaps: np.ndarray) -> List[int]:
    n = adj.shape[0]
    if n == 0:
        return []
    pairs = [(gaps[a, b], a, b) for a in range(n) for b in range(a + 1, n) if adj[a, b]]
    if not pairs:
        return [0]
    _, a, b = min(pairs)
    chosen = [a, b]
    for v in range(n):
        if v not in chosen and all(adj[v, u] for u in chosen):
            chosen.append(v)
    return sorted(chosen)


def find_mmd(states: Sequence[ProbState], geom: QplexGeometry, tol: float = DEFAULT_TOL) -> MmdResult:
    if not states:
        return MmdResult(indices=(), certified=True)
    vecs = np.array([s.p for s in states])
    if vecs.shape[1] != geom.N:
        raise DimensionError(f"states have {vecs.shape[1]} entries, geometry has N={geom.N}")

    gram = vecs @ vecs.T
    admissible = np.flatnonzero(np.abs(np.diag(gram) - geom.U) <= tol)
    sub = gram[np.ix_(admissible, admissible)]
    gaps = np.abs(sub - geom.L)
    adj = gaps <= tol
    np.fill_diagonal(adj, False)

    if admissible.size <= EXACT_CUTOFF:
        local, certified = _max_clique(adj), True
    else:
        logger.info("find_mmd: %d admissible candidates > %d, using greedy search",
                    admissible.size, EXACT_CUTOFF)
        local, certified = _greedy(adj, gaps), False

    indices = tuple(int(admissible[k]) for k in local)
    return MmdResult(indices=indices, certified=certified)
