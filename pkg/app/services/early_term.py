"""
Direct construction of maximal cliques for dense candidate graphs.

When the candidate graph of a branch is a t-plex (t <= 3: every vertex misses
at most t-1 other candidates) and the exclusion set is empty, its maximal
cliques can be written down without further branching. The complement of a
2-plex is a perfect matching on its non-full vertices; the complement of a
3-plex is a disjoint union of simple paths and cycles, and a maximal clique
picks one maximal independent set of every component.
"""

from dataclasses import dataclass, field
from itertools import chain, product
from typing import (
    TYPE_CHECKING, Callable, Collection, Dict, List, Mapping, Optional, Sequence, Set, Tuple, Union,
)

from app.services.errors import ContractViolation
from app.services.sink import CliqueSink

if TYPE_CHECKING:
    from app.services.engine_vertex import EnumStats

MAX_PLEX = 3

PartialSolutionSet = List[Tuple[int, ...]]
EdgeCount = Union[int, Callable[[], int], None]


@dataclass(frozen=True)
class PlexStructure:
    """
    Complement decomposition of a candidate graph.

    `full` holds candidates adjacent to every other candidate. For t = 2 the
    remaining vertices form `pairs` (l, r) with l < r; for t = 3 they form
    `paths` and `cycles`, each listed in traversal order.
    """
    t: int
    full: Tuple[int, ...]
    pairs: Tuple[Tuple[int, int], ...] = ()
    paths: Tuple[Tuple[int, ...], ...] = ()
    cycles: Tuple[Tuple[int, ...], ...] = ()
    missing: Dict[int, Tuple[int, ...]] = field(default_factory=dict, compare=False, repr=False)

    @property
    def F(self) -> Tuple[int, ...]:
        return self.full


def plex_degree(size: int, min_degree: int) -> Optional[int]:
    """Smallest t in 1..3 with min_degree >= size - t, or None."""
    for t in range(1, MAX_PLEX + 1):
        if min_degree >= size - t:
            return t
    return None


def detect_plex(candidates: Collection[int], candidate_adjacency: Mapping[int, Collection[int]],
                exclusion: Collection[int], induced_edges: EdgeCount = None,
                min_degree: Optional[int] = None,
                candidate_edges: Optional[int] = None) -> Optional[int]:
    """
    Plex degree of the candidate graph, reported only when the branch may
    terminate early: empty exclusion and no G-edge inside the candidates missing
    from the candidate adjacency.

    `induced_edges` is the number of G-edges among the candidates, or a
    callable producing it on demand; None means the candidate adjacency is
    G's own. `min_degree` and `candidate_edges` skip the degree scan when the
    caller already has them.
    """
    if not candidates:
        return None
    members = set(candidates)
    if min_degree is None or candidate_edges is None:
        degrees = [len(set(candidate_adjacency[v]) & members) for v in members]
        if min_degree is None:
            min_degree = min(degrees)
        if candidate_edges is None:
            candidate_edges = sum(degrees) // 2
    t = plex_degree(len(members), min_degree)
    if t is None or exclusion:
        return None
    if induced_edges is not None:
        expected = induced_edges() if callable(induced_edges) else induced_edges
        if candidate_edges != expected:
            return None
    return t


def build_plex_structure(candidates: Collection[int],
                         candidate_adjacency: Mapping[int, Collection[int]], t: int) -> PlexStructure:
    members = set(candidates)
    missing: Dict[int, Tuple[int, ...]] = {}
    for v in sorted(members):
        gap = members.difference(candidate_adjacency[v])
        gap.discard(v)
        if len(gap) > t - 1:
            raise ContractViolation(f"vertex {v} misses {len(gap)} candidates in a {t}-plex")
        missing[v] = tuple(sorted(gap))

    full = tuple(v for v, gap in missing.items() if not gap)
    if t == 1:
        return PlexStructure(t=1, full=full, missing=missing)

    if t == 2:
        pairs = tuple((v, gap[0]) for v, gap in missing.items() if gap and v < gap[0])
        return PlexStructure(t=2, full=full, pairs=pairs, missing=missing)

    seen: Set[int] = set(full)
    paths: List[Tuple[int, ...]] = []
    cycles: List[Tuple[int, ...]] = []

    # Paths first: every path has a degree-1 endpoint, the smaller one leads.
    for v, gap in missing.items():
        if v in seen or len(gap) != 1:
            continue
        paths.append(_walk(v, gap[0], missing, seen))

    # Whatever is left has complement degree 2 everywhere.
    for v, gap in missing.items():
        if v in seen:
            continue
        cycles.append(_walk(v, gap[0], missing, seen))

    return PlexStructure(t=3, full=full, paths=tuple(paths), cycles=tuple(cycles), missing=missing)


def _walk(start: int, step: int, missing: Mapping[int, Tuple[int, ...]], seen: Set[int]) -> Tuple[int, ...]:
    sequence = [start]
    seen.add(start)
    prev, cur = start, step
    while cur not in seen:
        sequence.append(cur)
        seen.add(cur)
        nxt = [w for w in missing[cur] if w != prev]
        if not nxt:
            break
        prev, cur = cur, nxt[0]
    return tuple(sequence)


def enum_2plex(S: Sequence[int], plex: PlexStructure, sink: CliqueSink) -> int:
    """Binary counter over the pairs: bit i clear takes the left vertex, set takes the right."""
    base = tuple(S) + plex.full
    k = len(plex.pairs)
    for mask in range(1 << k):
        picked = tuple(r if (mask >> i) & 1 else l for i, (l, r) in enumerate(plex.pairs))
        sink.emit(base + picked)
    return 1 << k


def enum_path(path: Sequence[int], seed: Optional[Sequence[int]] = None,
              start: Optional[int] = None) -> PartialSolutionSet:
    """
    Maximal independent sets of a simple path (in path order) containing the
    seed. Without a seed, both the set through path[0] and the set through
    path[1] are collected. `start` is the position of the seed's last vertex.
    """
    length = len(path)
    out: PartialSolutionSet = []

    def extend(solution: Tuple[int, ...], i: int) -> None:
        if i + 2 >= length:
            out.append(solution)
            return
        extend(solution + (path[i + 2],), i + 2)
        if i + 3 < length:
            extend(solution + (path[i + 3],), i + 3)

    if seed is not None:
        extend(tuple(seed), 0 if start is None else start)
        return out

    if length == 0:
        return [()]
    extend((path[0],), 0)
    if length > 1:
        extend((path[1],), 1)
    return out


def enum_cycle(cycle: Sequence[int]) -> PartialSolutionSet:
    c = tuple(cycle)
    size = len(c)
    if size < 3:
        raise ContractViolation(f"a complement cycle needs at least 3 vertices, got {size}")
    if size == 3:
        return [(c[0],), (c[1],), (c[2],)]
    if size == 4:
        return [(c[0], c[2]), (c[1], c[3])]
    if size == 5:
        return [(c[0], c[2]), (c[0], c[3]), (c[1], c[3]), (c[1], c[4]), (c[2], c[4])]

    # Split on c[0] in; c[0] out and c[1] in; both out, which forces c[2] and c[-1] in.
    return (
        enum_path(c[:-1], (c[0],), 0)
        + enum_path(c[1:], (c[1],), 0)
        + enum_path(c[2:-2], (c[-1], c[2]), 0)
    )


def enum_3plex(S: Sequence[int], plex: PlexStructure, sink: CliqueSink) -> int:
    base = tuple(S) + plex.full
    components = [enum_path(p) for p in plex.paths] + [enum_cycle(c) for c in plex.cycles]
    emitted = 0
    for combination in product(*components):
        sink.emit(base + tuple(chain.from_iterable(combination)))
        emitted += 1
    return emitted


def terminate_branch(S: Sequence[int], candidates: Collection[int],
                     candidate_adjacency: Mapping[int, Collection[int]], t: int, sink: CliqueSink) -> int:
    """Emit every maximal clique of an eligible branch; returns the number emitted."""
    if t == 1:
        sink.emit(tuple(S) + tuple(sorted(candidates)))
        return 1
    plex = build_plex_structure(candidates, candidate_adjacency, t)
    if t == 2:
        return enum_2plex(S, plex, sink)
    return enum_3plex(S, plex, sink)


def early_terminate(stats: "EnumStats", S: Sequence[int], candidates: Collection[int],
                    candidate_adjacency: Mapping[int, Collection[int]], exclusion: Collection[int],
                    min_degree: int, candidate_edges: int, induced_edges: EdgeCount,
                    et_threshold: int, sink: CliqueSink) -> bool:
    """
    Shared early-termination step of every engine. Records the plex degree of
    the candidate graph in `stats` and, when the branch is eligible under
    `et_threshold` and passes `detect_plex`, emits its cliques directly.
    """
    t = plex_degree(len(candidates), min_degree)
    if t is None:
        return False
    stats.plex_branches[t] += 1
    if t > et_threshold:
        return False
    stats.et_eligible_branches += 1
    if detect_plex(candidates, candidate_adjacency, exclusion, induced_edges,
                   min_degree=min_degree, candidate_edges=candidate_edges) is None:
        return False
    stats.et_fired_branches += 1
    terminate_branch(S, candidates, candidate_adjacency, t, sink)
    return True
