"""
Branch and output validators for the enumeration engines.
Checks the branch-state invariants and the maximality of emitted cliques.
"""

from typing import Iterable, List, Optional, Sequence, Tuple

from app.services.graph_core import Graph


class BranchValidator:
    """
    Validates engine states against the graph they run on.

    Every check returns `(is_valid, error_message)`; callers decide whether a
    failure raises.
    """

    def __init__(self, graph: Graph):
        self.graph = graph
        self.nbrs = graph.neighbor_sets

    def is_clique(self, vertices: Sequence[int]) -> bool:
        members = list(vertices)
        for i, u in enumerate(members):
            for v in members[i + 1:]:
                if v not in self.nbrs[u]:
                    return False
        return True

    def common_neighbourhood(self, vertices: Sequence[int]) -> set:
        members = list(vertices)
        if not members:
            return set(range(self.graph.vertex_count))
        common = set(self.nbrs[members[0]])
        for v in members[1:]:
            common &= self.nbrs[v]
        return common

    def is_maximal_clique(self, vertices: Sequence[int]) -> bool:
        return self.is_clique(vertices) and not self.common_neighbourhood(vertices)

    def validate_branch(self, branch) -> Tuple[bool, Optional[str]]:
        """Partial clique, disjoint candidate/exclusion, and C | X = N(S) once S is non-empty."""
        S, C, X = tuple(branch.S), set(branch.C), set(branch.X)

        if not self.is_clique(S):
            return False, f"S={S} is not a clique"
        if C & X:
            return False, f"C and X share {sorted(C & X)}"
        if S:
            expected = self.common_neighbourhood(S)
            if C | X != expected:
                missing = sorted(expected - (C | X))
                extra = sorted((C | X) - expected)
                return False, f"C | X differs from N(S): missing {missing}, extra {extra}"
        return True, None

    def validate_edge_branch(self, branch) -> Tuple[bool, Optional[str]]:
        S, Cv, Xv = tuple(branch.S), set(branch.Cv), set(branch.Xv)

        if len(S) % 2:
            return False, f"edge branch with odd partial clique {S}"
        ok, message = self.validate_branch(_VertexView(S, Cv, Xv))
        if not ok:
            return ok, message
        for eid in branch.Ce:
            u, v = self.graph.edges[eid]
            if u not in Cv or v not in Cv:
                return False, f"candidate edge {(u, v)} leaves the candidate vertex set"
        return True, None

    def validate_edge_aux(self, aux, rank: Sequence[int]) -> Tuple[bool, Optional[str]]:
        """Vplus / Vminus partition each common neighbourhood; Eplus stays inside Vplus above the edge's rank."""
        for eid, (u, v) in enumerate(self.graph.edges):
            common = self.nbrs[u] & self.nbrs[v]
            vplus, vminus = aux.vplus[eid], aux.vminus[eid]
            if vplus & vminus or (vplus | vminus) != common:
                return False, f"edge {(u, v)}: Vplus/Vminus do not partition N(u) & N(v)"
            for other in aux.eplus[eid]:
                a, b = self.graph.edges[other]
                if a not in vplus or b not in vplus or rank[other] <= rank[eid]:
                    return False, f"edge {(u, v)}: Eplus holds {(a, b)}"
        return True, None

    def validate_clique_set(self, cliques: Iterable[Sequence[int]]) -> Tuple[bool, List[str]]:
        """Every reported set is a maximal clique and none is reported twice."""
        errors: List[str] = []
        seen = set()
        for clique in cliques:
            key = tuple(sorted(clique))
            if key in seen:
                errors.append(f"clique {key} reported more than once")
            seen.add(key)
            if not self.is_clique(key):
                errors.append(f"{key} is not a clique")
            elif self.common_neighbourhood(key):
                errors.append(f"clique {key} is not maximal")
        return len(errors) == 0, errors


class _VertexView:
    __slots__ = ("S", "C", "X")

    def __init__(self, S, C, X):
        self.S, self.C, self.X = S, C, X
