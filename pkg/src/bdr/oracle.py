"""Brute-force ground truth.

Two independent levels: split enumeration times Gale–Ryser (usable up to
the padded-instance scale thanks to value-count enumeration), and raw
bipartite edge-set backtracking that does not trust Gale–Ryser at all.
"""

from __future__ import annotations

from collections import Counter
from functools import lru_cache
from itertools import combinations

from .core import DegreeSequence
from .errors import BudgetExceededError
from .gale_ryser import _gale_ryser_lists


def brute_force_bipartite_realizable(ds: DegreeSequence,
                                     budget: int | None = None) -> bool:
    """True iff some equal-sum split of the degrees is bigraphic.

    Splits are enumerated by count vectors over distinct values, which
    keeps the search small even when the sequence is long but has few
    distinct degrees.  Zero degrees are ignored (they sit on either side).
    """
    sigma = ds.sigma
    if sigma % 2 != 0:
        return False
    target = sigma // 2
    counts = sorted(Counter(ds.nonzero()).items(), reverse=True)
    values = [v for v, _ in counts]
    mult = [c for _, c in counts]
    max_tail = [0] * (len(values) + 1)
    for i in range(len(values) - 1, -1, -1):
        max_tail[i] = max_tail[i + 1] + values[i] * mult[i]

    examined = 0

    def search(i: int, rem: int, chosen: list[int]) -> bool:
        nonlocal examined
        if rem == 0 and i == len(values):
            examined += 1
            if budget is not None and examined > budget:
                raise BudgetExceededError(
                    f"examined more than {budget} split count vectors")
            side1 = [v for v, k in zip(values, chosen) for _ in range(k)]
            side2 = [v for (v, c), k in zip(counts, chosen) for _ in range(c - k)]
            return _gale_ryser_lists(side1, side2)
        if i == len(values) or rem > max_tail[i]:
            return False
        v, c = counts[i]
        for k in range(min(c, rem // v), -1, -1):
            if search(i + 1, rem - k * v, chosen + [k]):
                return True
        return False

    return search(0, target, [])


def _normalized(seq) -> tuple[int, ...]:
    return tuple(sorted((d for d in seq if d > 0), reverse=True))


@lru_cache(maxsize=None)
def _pair_realizable(du: tuple[int, ...], dv: tuple[int, ...]) -> bool:
    # exact bipartite realizability by backtracking over the neighborhoods
    # of the u-vertices; pruning uses only sums and residual counts.
    # inputs are normalized: zero-free, non-increasing
    if sum(du) != sum(dv):
        return False
    if not du:
        return not dv
    d, rest = du[0], du[1:]
    if d > len(dv):
        return False
    for picks in combinations(range(len(dv)), d):
        new_dv = list(dv)
        for j in picks:
            new_dv[j] -= 1
        if _pair_realizable(rest, _normalized(new_dv)):
            return True
    return False


def exhaustive_pair_search(d1, d2) -> bool:
    """Ground truth for a fixed bipartition, independent of Gale–Ryser."""
    return _pair_realizable(_normalized(d1), _normalized(d2))


def exhaustive_graph_search(ds: DegreeSequence) -> bool:
    """True iff some labeled simple bipartite graph realizes the sequence.

    Enumerates every 2-coloring of the vertices, then searches edge sets
    across the cut exactly.  Limited to n <= 8.
    """
    deg = ds.degrees
    n = len(deg)
    if n > 8:
        raise ValueError(f"exhaustive search limited to n <= 8, got {n}")
    sigma = sum(deg)
    if sigma % 2 != 0:
        return False
    if n == 0:
        return True
    # vertex 0 fixed on the U side; complements are symmetric
    for mask in range(1 << (n - 1)):
        du = [deg[0]] + [deg[i] for i in range(1, n) if mask >> (i - 1) & 1]
        dv = [deg[i] for i in range(1, n) if not mask >> (i - 1) & 1]
        if sum(du) != sigma // 2:
            continue
        if _pair_realizable(_normalized(du), _normalized(dv)):
            return True
    return False
