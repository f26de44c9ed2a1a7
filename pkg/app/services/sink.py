"""
Clique sink: receives every maximal clique an engine emits.

Every mode keeps a count and an order-independent digest. The digest of a
clique is a splitmix64-finalizer chain over its ascending vertex ids, seeded
with the clique size; the digest of a run is the sum of clique digests
modulo 2**64, so engines that emit in different orders agree.
"""

from typing import Callable, Iterable, List, Optional, Tuple

from app.schemas.schemas import OutputMode

MASK64 = (1 << 64) - 1
GAMMA = 0x9E3779B97F4A7C15


def mix64(z: int) -> int:
    z &= MASK64
    z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & MASK64
    z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & MASK64
    return z ^ (z >> 31)


def clique_hash(clique: Iterable[int]) -> int:
    """Hash of a clique given as ascending vertex ids."""
    vertices = tuple(clique)
    h = mix64(len(vertices) + GAMMA)
    for v in vertices:
        h = mix64(h ^ ((v + GAMMA) & MASK64))
    return h


def format_digest(value: int) -> str:
    return f"{value & MASK64:016x}"


class CliqueSink:
    """
    Output contract of every engine. `emit` takes any iterable of distinct
    vertex ids; the clique is canonicalised to an ascending tuple.
    """

    def __init__(self, mode: OutputMode = OutputMode.COUNT,
                 callback: Optional[Callable[[Tuple[int, ...]], None]] = None):
        self.mode = OutputMode(mode)
        self.callback = callback
        self.count = 0
        self.digest = 0
        self.cliques: List[Tuple[int, ...]] = []

    def emit(self, clique: Iterable[int]) -> None:
        ordered = tuple(sorted(clique))
        self.count += 1
        self.digest = (self.digest + clique_hash(ordered)) & MASK64
        if self.mode == OutputMode.LIST:
            self.cliques.append(ordered)
        if self.callback is not None:
            self.callback(ordered)

    @property
    def digest_hex(self) -> str:
        return format_digest(self.digest)

    def sorted_cliques(self) -> List[Tuple[int, ...]]:
        return sorted(self.cliques)

    def has_duplicates(self) -> bool:
        return len(set(self.cliques)) != len(self.cliques)
