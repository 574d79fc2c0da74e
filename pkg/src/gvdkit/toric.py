"""Toric ideals of graphs, small connected graph enumeration and the survey table."""

from __future__ import annotations

import re
import string
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from functools import reduce
from math import gcd
from typing import Iterable, Iterator, Sequence

from .ideals import Ideal, saturation
from .poly import Polynomial, Ring


class GraphError(ValueError):
    pass


def default_edge_labels(m: int) -> tuple[str, ...]:
    if m <= 26:
        return tuple(string.ascii_lowercase[:m])
    return tuple(f"e{i + 1}" for i in range(m))


@dataclass(frozen=True)
class Graph:
    """A finite simple graph on vertices ``1..vertex_count`` with labeled edges."""

    vertex_count: int
    edges: tuple[tuple[int, int], ...]
    labels: tuple[str, ...] = ()

    def __post_init__(self):
        edges = tuple((min(u, v), max(u, v)) for u, v in self.edges)
        object.__setattr__(self, "edges", edges)
        if not self.labels:
            object.__setattr__(self, "labels", default_edge_labels(len(edges)))
        if self.vertex_count < 1:
            raise GraphError("a graph needs at least one vertex")
        if len(self.labels) != len(edges) or len(set(self.labels)) != len(self.labels):
            raise GraphError("edge labels must be distinct, one per edge")
        for u, v in edges:
            if u == v:
                raise GraphError(f"loop at vertex {u}")
            if not (1 <= u <= self.vertex_count and 1 <= v <= self.vertex_count):
                raise GraphError(f"edge ({u}, {v}) leaves the vertex range 1..{self.vertex_count}")
        if len(set(edges)) != len(edges):
            raise GraphError("repeated edge")

    @classmethod
    def parse(cls, text: str) -> Graph:
        n = None
        edges, labels = [], []
        for lineno, raw in enumerate(text.splitlines(), 1):
            line = raw.split("#", 1)[0].strip()
            if not line:
                continue
            m = re.fullmatch(r"vertices\s*:\s*(\d+)", line)
            if m and n is None:
                n = int(m.group(1))
                continue
            m = re.fullmatch(r"([A-Za-z][A-Za-z0-9_]*)\s*:\s*(\d+)\s+(\d+)", line)
            if not m or n is None:
                raise GraphError(f"line {lineno}: expected 'vertices: n' then 'label: u v', got {raw!r}")
            labels.append(m.group(1))
            edges.append((int(m.group(2)), int(m.group(3))))
        if n is None:
            raise GraphError("missing 'vertices: n' line")
        return cls(n, tuple(edges), tuple(labels))

    def to_text(self) -> str:
        lines = [f"vertices: {self.vertex_count}"]
        lines += [f"{lab}: {u} {v}" for lab, (u, v) in zip(self.labels, self.edges)]
        return "\n".join(lines) + "\n"

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    def ring(self) -> Ring:
        return Ring(self.labels)

    def degrees(self) -> list[int]:
        deg = [0] * self.vertex_count
        for u, v in self.edges:
            deg[u - 1] += 1
            deg[v - 1] += 1
        return deg

    def is_connected(self) -> bool:
        adj = {i: set() for i in range(1, self.vertex_count + 1)}
        for u, v in self.edges:
            adj[u].add(v)
            adj[v].add(u)
        seen, stack = {1}, [1]
        while stack:
            for w in adj[stack.pop()]:
                if w not in seen:
                    seen.add(w)
                    stack.append(w)
        return len(seen) == self.vertex_count


def incidence_matrix(g: Graph) -> list[list[int]]:
    rows = [[0] * g.edge_count for _ in range(g.vertex_count)]
    for j, (u, v) in enumerate(g.edges):
        rows[u - 1][j] = 1
        rows[v - 1][j] = 1
    return rows


def integer_kernel_basis(A: Sequence[Sequence[int]]) -> list[list[int]]:
    """A basis of the lattice ``{v in Z^m : A v = 0}``.

    Unimodular row reduction of ``[A^T | I]``; rows whose left block vanishes
    give a lattice basis (not merely a rational one).
    """
    n = len(A)
    m = len(A[0]) if A else 0
    rows = [[A[i][j] for i in range(n)] + [int(j == k) for k in range(m)] for j in range(m)]
    r = 0
    for col in range(n):
        while True:
            nz = [i for i in range(r, m) if rows[i][col]]
            if not nz:
                break
            p = min(nz, key=lambda i: abs(rows[i][col]))
            rows[r], rows[p] = rows[p], rows[r]
            done = True
            for i in range(r + 1, m):
                q = rows[i][col] // rows[r][col]
                if q:
                    rows[i] = [a - q * b for a, b in zip(rows[i], rows[r])]
                if rows[i][col]:
                    done = False
            if done:
                r += 1
                break
    basis = []
    for row in rows[r:]:
        v = row[n:]
        c = reduce(gcd, v, 0)
        basis.append([x // c for x in v] if c > 1 else v)
    return basis


def binomial(ring: Ring, v: Sequence[int]) -> Polynomial:
    pos = tuple(max(x, 0) for x in v)
    neg = tuple(max(-x, 0) for x in v)
    return ring.monomial(pos) - ring.monomial(neg)


def toric_ideal_of_graph(g: Graph, ring: Ring | None = None) -> Ideal:
    """Kernel of ``e_i -> x_u x_v``: lattice binomials saturated by the product of all edges."""
    ring = ring or g.ring()
    if tuple(ring.variables) != tuple(g.labels):
        if set(ring.variables) != set(g.labels):
            raise GraphError("ring variables must be the edge labels")
    idx = [ring.index(lab) for lab in g.labels]
    basis = integer_kernel_basis(incidence_matrix(g))
    if not basis:
        return Ideal(ring, [])
    gens = []
    for v in basis:
        w = [0] * ring.nvars
        for j, x in zip(idx, v):
            w[j] = x
        gens.append(binomial(ring, w))
    prod = ring.monomial((1,) * ring.nvars)
    return saturation(Ideal(ring, gens), prod)


# -- enumeration -------------------------------------------------------------------

def _refine(n: int, adj: list[int], colors: list[int]) -> list[int]:
    # colour refinement with label-independent colour names
    while True:
        sig = [(colors[v], tuple(sorted(colors[w] for w in range(n) if adj[v] >> w & 1))) for v in range(n)]
        names = {s: i for i, s in enumerate(sorted(set(sig)))}
        new = [names[s] for s in sig]
        if len(set(new)) == len(set(colors)):
            return new
        colors = new


def _certificate(n: int, adj: list[int], order: list[int]) -> tuple:
    bits = []
    for i in range(n):
        for j in range(i + 1, n):
            bits.append(1 if adj[order[i]] >> order[j] & 1 else 0)
    return tuple(bits)


def graph_canonical_form(g: Graph) -> tuple:
    return canonical_form(g.vertex_count, [(u - 1, v - 1) for u, v in g.edges])


def canonical_form(n: int, edges: Iterable[tuple[int, int]]) -> tuple:
    """Isomorphism invariant: minimal adjacency string over individualisation-refinement leaves."""
    adj = [0] * n
    for u, v in edges:
        adj[u] |= 1 << v
        adj[v] |= 1 << u
    best = None

    def search(colors):
        nonlocal best
        colors = _refine(n, adj, colors)
        cells: dict = {}
        for v, c in enumerate(colors):
            cells.setdefault(c, []).append(v)
        if len(cells) == n:
            order = sorted(range(n), key=lambda v: colors[v])
            cert = _certificate(n, adj, order)
            if best is None or cert < best:
                best = cert
            return
        target = min((c for c in cells if len(cells[c]) > 1), key=lambda c: (len(cells[c]), c))
        for v in cells[target]:
            # individualise v ahead of the rest of its cell
            new = [2 * c + (0 if c != target or w == v else 1) for w, c in enumerate(colors)]
            search(new)

    search([0] * n)
    return (n, best)


MAX_ENUMERATION_EDGES = 9


def _extensions(n: int, edges: frozenset) -> Iterator[tuple[int, frozenset]]:
    for u in range(n):
        for v in range(u + 1, n):
            if (u, v) not in edges:
                yield n, edges | {(u, v)}
        yield n + 1, edges | {(u, n)}


def _connected_classes(e: int) -> list[tuple[int, frozenset]]:
    level = {canonical_form(2, [(0, 1)]): (2, frozenset({(0, 1)}))}
    for _ in range(e - 1):
        nxt = {}
        for n, edges in level.values():
            for n2, edges2 in _extensions(n, edges):
                key = canonical_form(n2, edges2)
                if key not in nxt:
                    nxt[key] = (n2, edges2)
        level = nxt
    return sorted(level.values(), key=lambda item: (item[0], sorted(item[1])))


def enumerate_connected_graphs(edge_count: int, allow_extended: bool = False) -> list[Graph]:
    """One connected simple graph per isomorphism class with ``edge_count`` edges."""
    if edge_count < 1:
        raise GraphError("edge count must be positive")
    if edge_count > MAX_ENUMERATION_EDGES and not allow_extended:
        raise GraphError(f"edge count above {MAX_ENUMERATION_EDGES} needs allow_extended")
    out = []
    for n, edges in _connected_classes(edge_count):
        es = tuple((u + 1, v + 1) for u, v in sorted(edges))
        out.append(Graph(n, es))
    return out


# -- survey ----------------------------------------------------------------------------

@dataclass
class SurveyRow:
    edges: int
    connected: int
    nonzero: int
    weakly_gvd: int
    gvd: int
    weak_unknown: int = 0
    gvd_unknown: int = 0
    # graphs (with their toric ideals) that fail GVD, resp. are weakly GVD but not GVD
    not_gvd: list[dict] = field(default_factory=list)
    weak_not_gvd: list[dict] = field(default_factory=list)

    def counts(self) -> tuple[int, int, int, int]:
        return (self.connected, self.nonzero, self.weakly_gvd, self.gvd)

    def to_json(self) -> dict:
        return {
            "edges": self.edges, "connected": self.connected, "nonzero_toric": self.nonzero,
            "weakly_gvd": self.weakly_gvd, "gvd": self.gvd,
            "weakly_gvd_unknown": self.weak_unknown, "gvd_unknown": self.gvd_unknown,
            "not_gvd": self.not_gvd, "weakly_gvd_not_gvd": self.weak_not_gvd,
        }


def _survey_item(g: Graph, timeout: float | None) -> tuple[bool, str, str, str]:
    from .gvd import is_gvd, is_weakly_gvd

    ideal = toric_ideal_of_graph(g)
    if ideal.is_zero():
        return False, "", "", ""
    weak = is_weakly_gvd(ideal, timeout=timeout).verdict.value
    full = is_gvd(ideal, timeout=timeout).verdict.value
    return True, weak, full, str(ideal)


def survey_row(edge_count: int, jobs: int = 1, timeout: float | None = None,
               allow_extended: bool = False) -> SurveyRow:
    graphs = enumerate_connected_graphs(edge_count, allow_extended)
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            results = list(pool.map(_survey_item, graphs, [timeout] * len(graphs), chunksize=1))
    else:
        results = [_survey_item(g, timeout) for g in graphs]
    row = SurveyRow(edge_count, len(graphs), 0, 0, 0)
    for g, (nonzero, weak, full, text) in zip(graphs, results):
        if not nonzero:
            continue
        row.nonzero += 1
        row.weakly_gvd += weak == "true"
        row.gvd += full == "true"
        row.weak_unknown += weak == "unknown"
        row.gvd_unknown += full == "unknown"
        if full == "false":
            item = {"vertices": g.vertex_count, "edges": [list(e) for e in g.edges], "ideal": text}
            row.not_gvd.append(item)
            if weak == "true":
                row.weak_not_gvd.append(item)
    return row


def survey_table(edge_range: Iterable[int], jobs: int = 1, timeout: float | None = None,
                 allow_extended: bool = False) -> list[SurveyRow]:
    return [survey_row(e, jobs, timeout, allow_extended) for e in edge_range]


def format_table(rows: Sequence[SurveyRow]) -> str:
    head = ["edges", "connected", "nonzero I_G", "weakly GVD", "GVD", "unknown (weak/GVD)"]
    body = [[str(r.edges), str(r.connected), str(r.nonzero), str(r.weakly_gvd), str(r.gvd),
             f"{r.weak_unknown}/{r.gvd_unknown}"] for r in rows]
    widths = [max(len(x) for x in col) for col in zip(head, *body)]
    lines = ["  ".join(x.rjust(w) for x, w in zip(line, widths)) for line in [head] + body]
    return "\n".join(lines)
