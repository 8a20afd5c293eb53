# Copyright (c) 2026 TmaxSoft Co., Ltd.
# All rights reserved.

import logging
from dataclasses import dataclass
from typing import Optional

import networkx as nx
from networkx.algorithms.isomorphism import GraphMatcher

from dlvar.errors import InputError
from dlvar.geometry.fields import Basis, Vec, field
from dlvar.geometry.flags import isotropic_flags_c2
from dlvar.lattice.k3 import gamma_graph

logger = logging.getLogger(__name__)

LINE = "line"
PLANE = "plane"


def line_name(v: Vec) -> str:
    return "L" + "".join(str(x) for x in v)


def plane_name(basis: Basis) -> str:
    return "U" + "|".join("".join(str(x) for x in row) for row in basis)


@dataclass(frozen=True)
class IncidenceGraph:
    graph: nx.Graph

    @property
    def vertices(self) -> list[str]:
        return sorted(self.graph.nodes)

    @property
    def edges(self) -> list[tuple[str, str]]:
        return sorted(tuple(sorted(e)) for e in self.graph.edges)

    @property
    def degrees(self) -> set[int]:
        return {d for _, d in self.graph.degree}

    @property
    def is_bipartite(self) -> bool:
        return nx.is_bipartite(self.graph)

    @property
    def is_connected(self) -> bool:
        return nx.is_connected(self.graph)

    @property
    def girth(self) -> float:
        return nx.girth(self.graph)

    def summary(self) -> dict:
        return {
            "vertices": self.graph.number_of_nodes(),
            "edges": self.graph.number_of_edges(),
            "degrees": sorted(self.degrees),
            "bipartite": self.is_bipartite,
            "connected": self.is_connected,
            "girth": self.girth,
        }


def building_sp4(p: int) -> IncidenceGraph:
    """(F_p^4, J) 의 직선과 등방 평면, 포함 관계를 변으로 하는 이분 그래프."""
    if p not in (2, 3):
        raise InputError(f"building_sp4 supports p in (2, 3), got {p}")
    fld = field(p)
    graph = nx.Graph()
    for v in fld.projective_points(4):
        graph.add_node(line_name(v), kind=LINE)
    for flag in isotropic_flags_c2(fld):
        u = plane_name(flag.plane)
        graph.add_node(u, kind=PLANE)
        graph.add_edge(line_name(flag.line[0]), u)
    building = IncidenceGraph(graph)
    expected_vertices = 2 * (p**4 - 1) // (p - 1)
    expected_edges = (p + 1) * (p**4 - 1) // (p - 1)
    if graph.number_of_nodes() != expected_vertices or graph.number_of_edges() != expected_edges:
        logger.warning(
            "⚠️ Sp4(F_%d) 건물 크기 불일치: %d/%d (기대값 %d/%d)",
            p, graph.number_of_nodes(), graph.number_of_edges(), expected_vertices, expected_edges,
        )
    logger.info("✅ Sp4(F_%d) 건물 생성: 꼭짓점 %d, 변 %d", p, graph.number_of_nodes(), graph.number_of_edges())
    return building


def find_gamma_embedding(g: IncidenceGraph) -> Optional[dict[str, str]]:
    """22개 꼭짓점 나무를 유도 부분그래프로 찾아 나무 꼭짓점 -> 호스트 꼭짓점 사상을 돌려준다."""
    gamma = gamma_graph()
    host = g.graph
    if set(gamma.nodes) <= set(host.nodes):
        induced = {frozenset(e) for e in host.subgraph(gamma.nodes).edges}
        if induced == {frozenset(e) for e in gamma.edges}:
            return {v: v for v in gamma.nodes}
    matcher = GraphMatcher(host, gamma)
    for mapping in matcher.subgraph_isomorphisms_iter():
        logger.info("✅ 나무 임베딩 발견: 호스트 꼭짓점 %d개 중 %d개", host.number_of_nodes(), len(mapping))
        return {tree: vertex for vertex, tree in mapping.items()}
    logger.warning("⚠️ 나무 임베딩을 찾지 못했습니다 (호스트 꼭짓점 %d개)", host.number_of_nodes())
    return None


def to_dot(g: IncidenceGraph, name: str = "building") -> str:
    lines = [f"graph {name} {{"]
    for v in g.vertices:
        kind = g.graph.nodes[v].get("kind", "")
        shape = "box" if kind == PLANE else "ellipse"
        lines.append(f'  "{v}" [shape={shape}];')
    for a, b in g.edges:
        lines.append(f'  "{a}" -- "{b}";')
    lines.append("}")
    return "\n".join(lines) + "\n"


def to_edge_list(g: IncidenceGraph) -> str:
    ordered = nx.Graph()
    ordered.add_nodes_from(g.vertices)
    ordered.add_edges_from(g.edges)
    return "\n".join(nx.generate_edgelist(ordered, data=False)) + "\n"
