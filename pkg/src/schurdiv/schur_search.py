"""Exact Schur-style numbers by depth-first search with propagation.

`forbidden_triples` enumerates the monochromatic patterns to avoid:
x + y = z with x <= y, optionally strengthened by x | y.  The solver
assigns colors to 1, 2, 3, ... in natural order.  For every future
integer z it keeps a bitmask of colors already excluded because some
pair (x, y) with x + y = z turned monochromatic; assigning a color then
costs only the triples whose middle element is the new integer, and a
future integer with every color banned cuts the branch immediately.

Symmetry breaking: integer 1 always takes color 0, and a new color index
may only be used once all smaller indices appear.  The first witness
found under this fixed branching order is deterministic.

W(l) is the largest n admitting a valid coloring and S(l) = W(l) + 1 the
least n forcing a monochromatic triple; `schur_number` reports exact
values only when the search both produced a witness for W and exhausted
the tree for W + 1.  Node and wall-clock budgets turn into a lower_bound
status, never an error.

Optional multi-process search splits the tree at a fixed prefix depth;
every subtree must be exhausted for a refutation, so exact results are
independent of scheduling.
"""

from __future__ import annotations

import json
import os
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import NamedTuple, Sequence

__all__ = [
    "BudgetExhausted",
    "CACHE_VERSION",
    "ForbiddenTriple",
    "SearchResult",
    "SearchStats",
    "exists_valid_coloring",
    "forbidden_triples",
    "load_search_cache",
    "save_search_cache",
    "schur_number",
    "validate_coloring",
]

CACHE_VERSION = 1

DEFAULT_SPLIT_DEPTH = 8


class ForbiddenTriple(NamedTuple):
    x: int
    y: int
    z: int
    restricted: bool


class BudgetExhausted(Exception):
    """Search stopped by a node or wall-clock budget."""

    def __init__(self, nodes: int):
        self.nodes = nodes
        super().__init__(f"search budget exhausted after {nodes} nodes")


def forbidden_triples(n: int, restricted: bool, allow_equal: bool = True) -> list[ForbiddenTriple]:
    """All triples x + y = z with x <= y <= z <= n to avoid monochromatically,
    restricted ones additionally demanding x | y; sorted by (z, x)."""
    if n < 2:
        raise ValueError(f"n must be >= 2, got {n}")
    out = []
    for z in range(2, n + 1):
        for x in range(1, z // 2 + 1):
            y = z - x
            if restricted and y % x:
                continue
            if not allow_equal and x == y:
                continue
            out.append(ForbiddenTriple(x, y, z, restricted))
    return out


def validate_coloring(
    colors: Sequence[int], restricted: bool, allow_equal: bool = True
) -> list[ForbiddenTriple]:
    """Monochromatic forbidden triples under `colors` (index i colors i+1)."""
    n = len(colors)
    if n < 2:
        return []
    hits = []
    for t in forbidden_triples(n, restricted, allow_equal):
        if colors[t.x - 1] == colors[t.y - 1] == colors[t.z - 1]:
            hits.append(t)
    return hits


def _pair_table(n: int, restricted: bool, allow_equal: bool) -> list[tuple[tuple[int, int], ...]]:
    """table[v] lists (x, z) with x <= v, x + v = z <= n, filtered by the rule;
    coloring v monochromatically with such an x bans that color on z."""
    table: list[tuple[tuple[int, int], ...]] = [()] * (n + 1)
    for v in range(1, n + 1):
        pairs = []
        for x in range(1, min(v, n - v) + 1):
            if restricted and v % x:
                continue
            if not allow_equal and x == v:
                continue
            pairs.append((x, x + v))
        table[v] = tuple(pairs)
    return table


class _Budget:
    __slots__ = ("max_nodes", "deadline")

    def __init__(self, max_nodes: int | None, max_seconds: float | None):
        self.max_nodes = max_nodes
        self.deadline = None if max_seconds is None else time.perf_counter() + max_seconds

    def check(self, nodes: int) -> None:
        if self.max_nodes is not None and nodes > self.max_nodes:
            raise BudgetExhausted(nodes)
        if self.deadline is not None and nodes % 2048 == 0 and time.perf_counter() > self.deadline:
            raise BudgetExhausted(nodes)


class _Searcher:
    """One depth-first search over colorings of {1..n} with l colors."""

    def __init__(self, l: int, n: int, restricted: bool, allow_equal: bool, budget: _Budget):
        self.l = l
        self.n = n
        self.table = _pair_table(n, restricted, allow_equal)
        self.budget = budget
        self.full_mask = (1 << l) - 1
        self.color = [-1] * (n + 1)
        self.banned = [0] * (n + 1)
        self.nodes = 0

    def seed_prefix(self, prefix: Sequence[int]) -> bool:
        """Install a partial coloring of 1..len(prefix); False on conflict."""
        for v, c in enumerate(prefix, start=1):
            if self.banned[v] >> c & 1:
                return False
            self.color[v] = c
            for x, z in self.table[v]:
                if self.color[x] == c:
                    self.banned[z] |= 1 << c
                    if self.banned[z] == self.full_mask:
                        return False
        return True

    def run(self, start_v: int, max_used: int) -> list[int] | None:
        if self._extend(start_v, max_used):
            return self.color[1 : self.n + 1]
        return None

    def _extend(self, v: int, max_used: int) -> bool:
        if v > self.n:
            return True
        color = self.color
        banned = self.banned
        table_v = self.table[v]
        full = self.full_mask
        cap = max_used + 1
        if cap > self.l - 1:
            cap = self.l - 1
        bmask = banned[v]
        for c in range(cap + 1):
            if bmask >> c & 1:
                continue
            self.nodes += 1
            self.budget.check(self.nodes)
            color[v] = c
            bit = 1 << c
            trail = []
            dead = False
            for x, z in table_v:
                if color[x] == c and not banned[z] & bit:
                    banned[z] |= bit
                    trail.append(z)
                    if banned[z] == full:
                        dead = True
                        break
            if not dead and self._extend(v + 1, max_used if c <= max_used else c):
                return True
            for z in trail:
                banned[z] ^= bit
        color[v] = -1
        return False

    def collect_prefixes(self, depth: int) -> list[tuple[int, ...]]:
        """All viable partial colorings of 1..depth under the branching rules."""
        out: list[tuple[int, ...]] = []

        def walk(v: int, max_used: int) -> None:
            if v > depth:
                out.append(tuple(self.color[1 : depth + 1]))
                return
            color = self.color
            banned = self.banned
            cap = min(max_used + 1, self.l - 1)
            bmask = banned[v]
            for c in range(cap + 1):
                if bmask >> c & 1:
                    continue
                color[v] = c
                bit = 1 << c
                trail = []
                dead = False
                for x, z in self.table[v]:
                    if color[x] == c and not banned[z] & bit:
                        banned[z] |= bit
                        trail.append(z)
                        if banned[z] == self.full_mask:
                            dead = True
                            break
                if not dead:
                    walk(v + 1, max_used if c <= max_used else c)
                for z in trail:
                    banned[z] ^= bit
            color[v] = -1

        walk(1, -1)
        return out


def _subtree_worker(args) -> tuple[list[int] | None, int]:
    l, n, restricted, allow_equal, prefix = args
    searcher = _Searcher(l, n, restricted, allow_equal, _Budget(None, None))
    if not searcher.seed_prefix(prefix):
        return None, 0
    witness = searcher.run(len(prefix) + 1, max(prefix))
    return witness, searcher.nodes


def exists_valid_coloring(
    l: int,
    n: int,
    restricted: bool = False,
    *,
    allow_equal: bool = True,
    max_nodes: int | None = None,
    max_seconds: float | None = None,
    threads: int = 1,
    split_depth: int = DEFAULT_SPLIT_DEPTH,
) -> list[int] | None:
    """A coloring of {1..n} with no monochromatic forbidden triple, or None
    once the whole tree is exhausted.  Raises BudgetExhausted if a budget
    cuts the search before either outcome."""
    if l < 1:
        raise ValueError(f"color count must be >= 1, got {l}")
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    if threads > 1 and n > split_depth:
        # Budgets apply to the sequential path only; subtrees run to completion.
        return _exists_parallel(l, n, restricted, allow_equal, threads, split_depth)
    searcher = _Searcher(l, n, restricted, allow_equal, _Budget(max_nodes, max_seconds))
    return searcher.run(1, -1)


def _exists_parallel(
    l: int, n: int, restricted: bool, allow_equal: bool, threads: int, split_depth: int
) -> list[int] | None:
    base = _Searcher(l, n, restricted, allow_equal, _Budget(None, None))
    prefixes = base.collect_prefixes(split_depth)
    jobs = [(l, n, restricted, allow_equal, prefix) for prefix in prefixes]
    with ProcessPoolExecutor(max_workers=threads) as pool:
        for witness, _nodes in pool.map(_subtree_worker, jobs, chunksize=1):
            if witness is not None:
                return witness
    return None


@dataclass(frozen=True)
class SearchStats:
    nodes: int
    wall_time: float


@dataclass(frozen=True)
class SearchResult:
    colors: int
    restricted: bool
    status: str  # "exact" | "lower_bound"
    W: int
    S: int | None
    witness_coloring: list[int] | None
    stats: SearchStats


def schur_number(
    l: int,
    restricted: bool = False,
    *,
    allow_equal: bool = True,
    max_nodes: int | None = None,
    max_seconds: float | None = None,
    max_n: int | None = None,
    threads: int = 1,
    split_depth: int = DEFAULT_SPLIT_DEPTH,
    cache_path: str | None = None,
) -> SearchResult:
    """Largest W with a valid coloring of {1..W}; exact S = W + 1 only when
    {1..W+1} was refuted.  Budgets or max_n produce status="lower_bound".

    With a cache path, previously proven witnesses and refutations for the
    same (l, restricted) pair are reused and new ones recorded.  Cached
    entries assume the default triple convention, so a non-default
    allow_equal bypasses the cache.
    """
    start = time.perf_counter()
    deadline = None if max_seconds is None else start + max_seconds
    nodes_total = 0

    cache = None
    use_cache = cache_path is not None and allow_equal
    if use_cache:
        cache = load_search_cache(cache_path)

    W, witness = 0, []
    refuted_at: int | None = None
    if cache is not None:
        W, witness, refuted_at = _cache_best(cache, l, restricted)

    status = "lower_bound"
    n = W + 1
    while True:
        if refuted_at is not None and n >= refuted_at:
            status = "exact"
            break
        if max_n is not None and n > max_n:
            break
        remaining = None if deadline is None else max(0.0, deadline - time.perf_counter())
        node_room = None if max_nodes is None else max_nodes - nodes_total
        if node_room is not None and node_room <= 0:
            break
        try:
            if threads > 1 and n > split_depth:
                found = _exists_parallel(l, n, restricted, allow_equal, threads, split_depth)
            else:
                searcher = _Searcher(l, n, restricted, allow_equal, _Budget(node_room, remaining))
                found = searcher.run(1, -1)
                nodes_total += searcher.nodes
        except BudgetExhausted as exc:
            nodes_total += exc.nodes
            break
        if found is None:
            status = "exact"
            if cache is not None:
                _cache_record(cache, l, restricted, n, None, "refuted")
            break
        W, witness = n, found
        if cache is not None:
            _cache_record(cache, l, restricted, n, found, "valid")
        n += 1

    if use_cache:
        save_search_cache(cache_path, cache)
    wall = time.perf_counter() - start
    return SearchResult(
        colors=l,
        restricted=restricted,
        status=status,
        W=W,
        S=W + 1 if status == "exact" else None,
        witness_coloring=list(witness) if witness or W == 0 else None,
        stats=SearchStats(nodes=nodes_total, wall_time=wall),
    )


# --- persistent cache -------------------------------------------------------

def load_search_cache(path: str) -> dict:
    """Versioned JSON cache; a missing file is an empty cache."""
    if not os.path.exists(path):
        return {"version": CACHE_VERSION, "entries": []}
    with open(path, "r", encoding="utf-8") as fh:
        cache = json.load(fh)
    if cache.get("version") != CACHE_VERSION:
        raise ValueError(f"cache {path} has version {cache.get('version')}, expected {CACHE_VERSION}")
    if not isinstance(cache.get("entries"), list):
        raise ValueError(f"cache {path} is missing its entries list")
    return cache


def save_search_cache(path: str, cache: dict) -> None:
    tmp = f"{path}.tmp"
    with open(tmp, "w", encoding="utf-8") as fh:
        json.dump(cache, fh, sort_keys=True)
        fh.write("\n")
    os.replace(tmp, path)


def _cache_best(cache: dict, l: int, restricted: bool) -> tuple[int, list[int], int | None]:
    best_n, best_coloring = 0, []
    refuted: int | None = None
    for entry in cache["entries"]:
        if entry.get("l") != l or bool(entry.get("restricted")) != restricted:
            continue
        n = entry.get("n")
        if entry.get("status") == "valid" and n > best_n:
            best_n, best_coloring = n, list(entry.get("coloring") or [])
        if entry.get("status") == "refuted" and (refuted is None or n < refuted):
            refuted = n
    return best_n, best_coloring, refuted


def _cache_record(cache: dict, l: int, restricted: bool, n: int, coloring, status: str) -> None:
    for entry in cache["entries"]:
        if (
            entry.get("l") == l
            and bool(entry.get("restricted")) == restricted
            and entry.get("n") == n
            and entry.get("status") == status
        ):
            return
    cache["entries"].append(
        {
            "l": l,
            "restricted": restricted,
            "n": n,
            "coloring": list(coloring) if coloring is not None else None,
            "status": status,
            "timestamp": time.strftime("%Y-%m-%dT%H:%M:%SZ", time.gmtime()),
        }
    )
