"""Edge-list and graph6 text formats, plus the small-graph catalog."""
from __future__ import annotations

import string
from functools import lru_cache
from pathlib import Path

from .graph import MAX_VERTICES, Graph, build_graph, graph_from_masks


class GraphFormatError(ValueError):
    def __init__(self, message: str, line: int | None = None):
        self.line = line
        super().__init__(f"line {line}: {message}" if line is not None else message)


def parse_edge_list_text(text: str, max_vertices: int = MAX_VERTICES) -> Graph:
    """One edge per line (two labels); a lone label declares a vertex; ``#`` comments.

    Vertex order is first appearance in the text.
    """
    edges, vertices = [], []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if len(parts) == 1:
            vertices.append(parts[0])
        elif len(parts) == 2:
            if parts[0] == parts[1]:
                raise GraphFormatError(f"self-loop on {parts[0]!r}", lineno)
            edges.append((parts[0], parts[1]))
            vertices.extend(parts)
        else:
            raise GraphFormatError(f"expected one or two labels, got {len(parts)}", lineno)
    try:
        return build_graph(edges, vertices, keep_order=True, max_vertices=max_vertices)
    except ValueError as exc:
        raise GraphFormatError(str(exc)) from None


def parse_edge_list(path: str | Path, max_vertices: int = MAX_VERTICES) -> Graph:
    return parse_edge_list_text(Path(path).read_text(), max_vertices)


def format_edge_list(G: Graph) -> str:
    lines = [f"{u} {v}" for u, v in G.edges()]
    lines += list(G.isolated())
    return "\n".join(lines) + "\n"


# -- graph6 ---------------------------------------------------------------

def _default_labels(n: int) -> list[str]:
    if n <= 26:
        return list(string.ascii_lowercase[:n])
    return [f"v{i}" for i in range(n)]


def parse_graph6(line: str, labels: list[str] | None = None) -> Graph:
    data = line.strip()
    if data.startswith(">>graph6<<"):
        data = data[10:]
    vals = [ord(c) - 63 for c in data]
    if not vals or any(v < 0 or v > 63 for v in vals):
        raise GraphFormatError(f"invalid graph6 string {line!r}")
    if vals[0] == 63:
        if len(vals) > 1 and vals[1] == 63:
            n = 0
            for v in vals[2:8]:
                n = n << 6 | v
            body = vals[8:]
        else:
            n = 0
            for v in vals[1:4]:
                n = n << 6 | v
            body = vals[4:]
    else:
        n, body = vals[0], vals[1:]
    need = n * (n - 1) // 2
    if len(body) * 6 < need:
        raise GraphFormatError(f"graph6 string too short for {n} vertices")
    bits = []
    for v in body:
        bits.extend((v >> s) & 1 for s in range(5, -1, -1))
    adj = [0] * n
    k = 0
    for j in range(1, n):
        for i in range(j):
            if bits[k]:
                adj[i] |= 1 << j
                adj[j] |= 1 << i
            k += 1
    labels = labels or _default_labels(n)
    return graph_from_masks(labels, adj, max(n, MAX_VERTICES))


def to_graph6(G: Graph) -> str:
    n = G.n
    if n < 63:
        out = [n]
    elif n < 258048:
        out = [63, n >> 12 & 63, n >> 6 & 63, n & 63]
    else:
        raise ValueError("graph too large for graph6")
    bits = [1 if G.adjacent(i, j) else 0 for j in range(1, n) for i in range(j)]
    bits += [0] * (-len(bits) % 6)
    for k in range(0, len(bits), 6):
        v = 0
        for b in bits[k:k + 6]:
            v = v << 1 | b
        out.append(v)
    return "".join(chr(v + 63) for v in out)


@lru_cache(maxsize=None)
def small_graph_catalog(max_n: int = 6, min_n: int = 1) -> tuple[Graph, ...]:
    """Every isomorphism class of graphs with ``min_n..max_n`` vertices (max 7).

    Backed by the networkx graph atlas; vertices are labelled ``a, b, c, ...``.
    """
    if max_n > 7:
        raise ValueError("the atlas covers graphs with at most 7 vertices")
    from networkx.generators.atlas import graph_atlas_g

    graphs = []
    for H in graph_atlas_g():
        n = H.number_of_nodes()
        if not min_n <= n <= max_n:
            continue
        labels = _default_labels(n)
        nodes = sorted(H.nodes())
        pos = {v: i for i, v in enumerate(nodes)}
        graphs.append(build_graph([(labels[pos[u]], labels[pos[v]]) for u, v in H.edges()], labels))
    return tuple(graphs)


def named_graph(name: str) -> Graph:
    """A few fixtures used throughout: ``C<k>``, ``P<k>``, ``K<k>``, ``K1,<k>``, ``triangle``, ``cricket``."""
    labels = string.ascii_lowercase
    if name == "triangle":
        return named_graph("K3")
    if name == "cricket":
        return build_graph([("a", "c"), ("b", "c"), ("c", "d"), ("c", "e"), ("d", "e")])
    if name.startswith("K1,"):
        k = int(name[3:])
        return build_graph([("a", labels[i]) for i in range(1, k + 1)])
    kind, k = name[0], int(name[1:])
    if kind == "C":
        return build_graph([(labels[i], labels[(i + 1) % k]) for i in range(k)])
    if kind == "P":
        return build_graph([(labels[i], labels[i + 1]) for i in range(k - 1)], labels[:k])
    if kind == "K":
        return build_graph([(labels[i], labels[j]) for i in range(k) for j in range(i + 1, k)], labels[:k])
    raise ValueError(f"unknown graph name {name!r}")
