"""Cartesian and lexicographic graph products with a row-major vertex encoding."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, NamedTuple, Sequence

from .graphs import Graph

CARTESIAN = "cartesian"
LEXICOGRAPHIC = "lexicographic"


class ProductVertex(NamedTuple):
    g_index: int
    h_index: int


@dataclass(frozen=True)
class ProductGraph:
    """A product graph together with its factor orders and product kind."""

    graph: Graph
    factor_orders: tuple[int, int]
    kind: str

    @property
    def order(self) -> int:
        return self.graph.order

    def encode(self, g_index: int, h_index: int) -> int:
        n, m = self.factor_orders
        if not (0 <= g_index < n and 0 <= h_index < m):
            raise ValueError(f"coordinates ({g_index},{h_index}) outside {n}x{m}")
        return g_index * m + h_index

    def decode(self, vertex: int) -> ProductVertex:
        n, m = self.factor_orders
        if not (0 <= vertex < n * m):
            raise ValueError(f"vertex id {vertex} outside product of order {n * m}")
        return ProductVertex(vertex // m, vertex % m)


def _factor_label(g: Graph, fallback: str) -> str:
    return g.name if g.name else fallback


def cartesian_product(g: Graph, h: Graph) -> ProductGraph:
    """Product whose edges change one coordinate along an edge of that factor."""
    if g.order < 1 or h.order < 1:
        raise ValueError("factors must have order >= 1")
    n, m = g.order, h.order
    edges: list[tuple[int, int]] = []
    for gi in range(n):
        base = gi * m
        for hu, hv in h.edges:
            edges.append((base + hu, base + hv))
    for gu, gv in g.edges:
        for hj in range(m):
            edges.append((gu * m + hj, gv * m + hj))
    name = f"{_factor_label(g, 'G')}□{_factor_label(h, 'H')}"
    return ProductGraph(Graph(n * m, edges, name=name), (n, m), CARTESIAN)


def lexicographic_product(g: Graph, h: Graph) -> ProductGraph:
    """Product substituting a copy of h into each vertex of g; g-edges become complete joins."""
    if g.order < 1 or h.order < 1:
        raise ValueError("factors must have order >= 1")
    n, m = g.order, h.order
    edges: list[tuple[int, int]] = []
    for gi in range(n):
        base = gi * m
        for hu, hv in h.edges:
            edges.append((base + hu, base + hv))
    for gu, gv in g.edges:
        for hi in range(m):
            for hj in range(m):
                edges.append((gu * m + hi, gv * m + hj))
    name = f"{_factor_label(g, 'G')}∘{_factor_label(h, 'H')}"
    return ProductGraph(Graph(n * m, edges, name=name), (n, m), LEXICOGRAPHIC)


def as_pairs(
    product: ProductGraph, vertices: Iterable[int | Sequence[int]]
) -> list[ProductVertex]:
    """Normalize encoded ids or (g,h) pairs to ProductVertex coordinates."""
    pairs = []
    for v in vertices:
        if isinstance(v, int):
            pairs.append(product.decode(v))
        else:
            gi, hj = v
            product.encode(gi, hj)  # range check
            pairs.append(ProductVertex(gi, hj))
    return pairs


def project(
    vertices: Iterable[Sequence[int]], axis: str
) -> list[int]:
    """Coordinate multiset of product vertices along one axis, multiplicities kept."""
    axis = axis.lower()
    if axis not in ("g", "h"):
        raise ValueError("axis must be 'g' or 'h'")
    index = 0 if axis == "g" else 1
    return [v[index] for v in vertices]
