"""
Deterministic graph generators: Erdos-Renyi, Barabasi-Albert and a few
structured families used by tests and the `gen` command.

Random draws come from SplitMix64 so that a (model, n, rho, seed) spec
produces the same graph, and the same clique digest, on every platform.
"""

from math import isqrt
from typing import Dict, List, Optional, Set, Tuple
import logging

from pydantic import ValidationError

from app.schemas.schemas import GenModel, GenSpec
from app.services.errors import GeneratorParameterError
from app.services.graph_core import Graph
from app.services.sink import GAMMA, MASK64, mix64

logger = logging.getLogger(__name__)

TWO_64 = 1 << 64


class SplitMix64:
    """SplitMix64 stream: state += golden gamma, output = finalizer(state)."""

    def __init__(self, seed: int):
        self.state = seed & MASK64

    def next_u64(self) -> int:
        self.state = (self.state + GAMMA) & MASK64
        return mix64(self.state)

    def below(self, bound: int) -> int:
        """Uniform integer in [0, bound), unbiased by rejection."""
        if bound <= 0:
            raise GeneratorParameterError(f"bound must be positive, got {bound}")
        limit = TWO_64 - TWO_64 % bound
        while True:
            x = self.next_u64()
            if x < limit:
                return x % bound


def round_half_up(x: float) -> int:
    return int(x + 0.5)


def pair_from_index(k: int) -> Tuple[int, int]:
    """Inverse of k = v(v-1)/2 + u over pairs u < v."""
    v = (1 + isqrt(1 + 8 * k)) // 2
    if v * (v - 1) // 2 > k:
        v -= 1
    return k - v * (v - 1) // 2, v


def gen_er(spec: GenSpec) -> Graph:
    """Exactly m = round(n * rho) distinct edges, chosen by Floyd's sampling over pair indices."""
    n = spec.n
    m = round_half_up(n * spec.rho)
    total = n * (n - 1) // 2
    if m > total:
        raise GeneratorParameterError(f"ER with n={n}, rho={spec.rho} needs {m} edges, at most {total} exist")

    rng = SplitMix64(spec.seed)
    chosen: Set[int] = set()
    for j in range(total - m, total):
        t = rng.below(j + 1)
        chosen.add(j if t in chosen else t)

    graph = Graph.from_edges(n, (pair_from_index(k) for k in chosen))
    logger.debug(f"Generated ER graph: n={n}, m={graph.m}, seed={spec.seed}")
    return graph


def gen_ba(spec: GenSpec) -> Graph:
    """
    Seed clique on k+1 vertices (k = round(rho)); every later vertex attaches to
    k distinct earlier vertices drawn proportionally to degree. Repeated draws
    of the same target are discarded and redrawn.
    """
    n = spec.n
    k = round_half_up(spec.rho)
    if k < 1:
        raise GeneratorParameterError(f"BA needs rho >= 0.5 (attachment count >= 1), got rho={spec.rho}")
    if n <= k:
        raise GeneratorParameterError(f"BA needs n > k, got n={n}, k={k}")

    rng = SplitMix64(spec.seed)
    edges: List[Tuple[int, int]] = []
    endpoints: List[int] = []
    for v in range(k + 1):
        for u in range(v):
            edges.append((u, v))
            endpoints.extend((u, v))

    for x in range(k + 1, n):
        targets: Set[int] = set()
        while len(targets) < k:
            targets.add(endpoints[rng.below(len(endpoints))])
        for t in sorted(targets):
            edges.append((t, x))
            endpoints.extend((t, x))

    graph = Graph.from_edges(n, edges)
    logger.debug(f"Generated BA graph: n={n}, k={k}, m={graph.m}, seed={spec.seed}")
    return graph


def density_for_probability(n: int, p: float) -> float:
    """Edge density rho giving an expected ER edge probability p."""
    return p * (n - 1) / 2


def moon_moser(n: int) -> Graph:
    """Complete multipartite graph with n/3 parts of size 3 (3^(n/3) maximal cliques)."""
    if n % 3:
        raise GeneratorParameterError(f"Moon-Moser graphs need n divisible by 3, got {n}")
    return Graph.from_edges(n, ((u, v) for u in range(n) for v in range(u + 1, n) if u // 3 != v // 3))


def complete_graph(n: int) -> Graph:
    return Graph.from_edges(n, ((u, v) for u in range(n) for v in range(u + 1, n)))


def complete_bipartite(p: int, q: Optional[int] = None) -> Graph:
    q = p if q is None else q
    return Graph.from_edges(p + q, ((u, p + w) for u in range(p) for w in range(q)))


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise GeneratorParameterError(f"a cycle needs at least 3 vertices, got {n}")
    return Graph.from_edges(n, ((i, (i + 1) % n) for i in range(n)))


def path_graph(n: int) -> Graph:
    return Graph.from_edges(n, ((i, i + 1) for i in range(n - 1)))


_ALLOWED_KEYS: Dict[GenModel, Tuple[str, ...]] = {
    GenModel.ER: ("n", "rho", "seed", "prob"),
    GenModel.BA: ("n", "rho", "seed"),
    GenModel.MOON_MOSER: ("n",),
    GenModel.COMPLETE: ("n",),
    GenModel.COMPLETE_BIPARTITE: ("p",),
    GenModel.CYCLE: ("n",),
    GenModel.PATH: ("n",),
}


def parse_gen_spec(text: str) -> GenSpec:
    """
    Parse `model:key=value,...`, e.g. `er:n=1000,rho=5,seed=3`, `mm:n=9`, `kpp:p=3`.
    For ER, `prob=` may replace `rho=` and is mapped through density_for_probability.
    """
    head, _, tail = text.strip().partition(":")
    try:
        model = GenModel(head.strip().lower())
    except ValueError:
        raise GeneratorParameterError(f"unknown generator model {head!r} in {text!r}")

    params: Dict[str, str] = {}
    for item in filter(None, (part.strip() for part in tail.split(","))):
        key, sep, value = item.partition("=")
        key = key.strip().lower()
        if not sep or key not in _ALLOWED_KEYS[model]:
            raise GeneratorParameterError(f"unexpected parameter {item!r} for model {model.value}")
        params[key] = value.strip()

    try:
        if model == GenModel.COMPLETE_BIPARTITE:
            n = int(params["p"])
        else:
            n = int(params["n"])
        rho = float(params.get("rho", 0.0))
        if "prob" in params:
            rho = density_for_probability(n, float(params["prob"]))
        return GenSpec(model=model, n=n, rho=rho, seed=int(params.get("seed", 0)))
    except KeyError as e:
        raise GeneratorParameterError(f"missing parameter {e.args[0]!r} in {text!r}")
    except (ValueError, ValidationError) as e:
        raise GeneratorParameterError(f"invalid generator spec {text!r}: {e}")


def generate(spec: GenSpec) -> Graph:
    builders = {
        GenModel.ER: gen_er,
        GenModel.BA: gen_ba,
        GenModel.MOON_MOSER: lambda s: moon_moser(s.n),
        GenModel.COMPLETE: lambda s: complete_graph(s.n),
        GenModel.COMPLETE_BIPARTITE: lambda s: complete_bipartite(s.n),
        GenModel.CYCLE: lambda s: cycle_graph(s.n),
        GenModel.PATH: lambda s: path_graph(s.n),
    }
    return builders[spec.model](spec)
