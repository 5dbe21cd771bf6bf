"""Bit-packed simple graphs, graph6 I/O, generators and exhaustive streams.

A vertex set is an ``int`` bitmask throughout the solvers; bit ``v`` set means
vertex ``v`` is in the set.  ``Graph`` stores one such mask per vertex.
"""
from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Iterator

import numpy as np

MAX_VERTICES = 64
MAX_STREAM_VERTICES = 7

FAMILIES = ("cycle", "complete", "empty", "kneser", "complete_multipartite", "random")


class Graph6Error(ValueError):
    """Malformed graph6 record."""


def mask_of(vertices: Iterable[int]) -> int:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


def vertices_of(mask: int) -> tuple[int, ...]:
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return tuple(out)


@dataclass(frozen=True)
class Graph:
    """Undirected simple graph on vertices ``0..n-1``.

    ``adj[v]`` is the neighbourhood of ``v`` as a bitmask.  Instances are
    immutable and validated on construction.
    """

    n: int
    adj: tuple[int, ...]

    def __post_init__(self):
        if not 1 <= self.n <= MAX_VERTICES:
            raise ValueError(f"vertex count must be in [1, {MAX_VERTICES}], got {self.n}")
        adj = tuple(self.adj)
        object.__setattr__(self, "adj", adj)
        if len(adj) != self.n:
            raise ValueError("adjacency length does not match n")
        full = (1 << self.n) - 1
        for v, nb in enumerate(adj):
            if nb & ~full:
                raise ValueError(f"vertex {v} has a neighbour outside 0..{self.n - 1}")
            if nb >> v & 1:
                raise ValueError(f"self-loop at vertex {v}")
            for u in vertices_of(nb):
                if not adj[u] >> v & 1:
                    raise ValueError(f"adjacency not symmetric at ({v}, {u})")

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> Graph:
        adj = [0] * n
        for u, v in edges:
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u}, {v}) out of range for n={n}")
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        return cls(n, tuple(adj))

    @property
    def vertex_mask(self) -> int:
        return (1 << self.n) - 1

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def edges(self) -> list[tuple[int, int]]:
        """Edges ``(u, v)`` with ``u < v``, sorted."""
        return [(u, v) for u in range(self.n) for v in vertices_of(self.adj[u] >> (u + 1) << (u + 1))]

    @property
    def num_edges(self) -> int:
        return sum(nb.bit_count() for nb in self.adj) // 2

    def is_independent(self, mask: int) -> bool:
        m = mask
        while m:
            low = m & -m
            if self.adj[low.bit_length() - 1] & mask:
                return False
            m ^= low
        return True

    def is_clique(self, mask: int) -> bool:
        m = mask
        while m:
            low = m & -m
            v = low.bit_length() - 1
            if (mask & ~low) & ~self.adj[v]:
                return False
            m ^= low
        return True

    def __str__(self) -> str:
        return to_graph6(self)


# ---------------------------------------------------------------------------
# graph6

def _pair_order(n: int) -> Iterator[tuple[int, int]]:
    """Upper-triangle pairs in graph6 order: (0,1), (0,2), (1,2), (0,3), ..."""
    for j in range(1, n):
        for i in range(j):
            yield i, j


def parse_graph6(line: str) -> Graph:
    """Decode one headerless graph6 record (n <= 64)."""
    s = line.strip()
    if s.startswith(">>graph6<<"):
        s = s[len(">>graph6<<"):]
    if not s:
        raise Graph6Error("empty record")
    codes = [ord(c) - 63 for c in s]
    for pos, c in enumerate(codes):
        if not 0 <= c <= 63:
            raise Graph6Error(f"character {s[pos]!r} at position {pos} outside [63, 126]")
    if codes[0] == 63:
        if len(codes) >= 2 and codes[1] == 63:
            raise Graph6Error(f"declared vertex count exceeds {MAX_VERTICES}")
        if len(codes) < 4:
            raise Graph6Error("truncated extended vertex count")
        n = (codes[1] << 12) | (codes[2] << 6) | codes[3]
        payload = codes[4:]
    else:
        n = codes[0]
        payload = codes[1:]
    if n > MAX_VERTICES:
        raise Graph6Error(f"declared vertex count {n} exceeds {MAX_VERTICES}")
    if n == 0:
        raise Graph6Error("graphs must have at least one vertex")
    nbits = n * (n - 1) // 2
    need = -(-nbits // 6)
    if len(payload) != need:
        raise Graph6Error(
            f"record length inconsistent: n={n} needs {need} payload characters, got {len(payload)}"
        )
    bits = 0
    for c in payload:
        bits = bits << 6 | c
    pad = need * 6 - nbits
    if bits & ((1 << pad) - 1):
        raise Graph6Error("nonzero padding bits")
    bits >>= pad
    adj = [0] * n
    k = nbits - 1
    for i, j in _pair_order(n):
        if bits >> k & 1:
            adj[i] |= 1 << j
            adj[j] |= 1 << i
        k -= 1
    return Graph(n, tuple(adj))


def to_graph6(g: Graph) -> str:
    n = g.n
    if n <= 62:
        head = chr(n + 63)
    else:
        head = "~" + "".join(chr(((n >> sh) & 63) + 63) for sh in (12, 6, 0))
    bits = 0
    nbits = 0
    for i, j in _pair_order(n):
        bits = bits << 1 | (g.adj[i] >> j & 1)
        nbits += 1
    pad = -nbits % 6
    bits <<= pad
    nchars = (nbits + pad) // 6
    body = "".join(chr(((bits >> (6 * (nchars - 1 - k))) & 63) + 63) for k in range(nchars))
    return head + body


# ---------------------------------------------------------------------------
# derived graphs

def complement(g: Graph) -> Graph:
    full = g.vertex_mask
    return Graph(g.n, tuple(full & ~nb & ~(1 << v) for v, nb in enumerate(g.adj)))


def induced_subgraph(g: Graph, s: int | Iterable[int]) -> Graph:
    """Restrict ``g`` to ``s``, relabelling kept vertices 0.. in ascending order."""
    keep = vertices_of(s) if isinstance(s, int) else tuple(sorted(set(s)))
    if not keep:
        raise ValueError("induced subgraph of an empty vertex set")
    if keep[-1] >= g.n or keep[0] < 0:
        raise ValueError("vertex set not contained in the graph")
    pos = {v: i for i, v in enumerate(keep)}
    adj = []
    for v in keep:
        adj.append(mask_of(pos[u] for u in vertices_of(g.adj[v]) if u in pos))
    return Graph(len(keep), tuple(adj))


def relabel(g: Graph, perm: list[int] | tuple[int, ...]) -> Graph:
    """Image of ``g`` under the vertex map ``v -> perm[v]``."""
    return Graph.from_edges(g.n, ((perm[u], perm[v]) for u, v in g.edges()))


# ---------------------------------------------------------------------------
# generators

@dataclass(frozen=True)
class GeneratorSpec:
    family: str
    params: tuple[int, ...] = ()
    p: Fraction = Fraction(1, 2)
    seed: int = 0

    def __post_init__(self):
        object.__setattr__(self, "params", tuple(int(x) for x in self.params))
        object.__setattr__(self, "p", Fraction(self.p))
        fam, ps = self.family, self.params
        if fam not in FAMILIES:
            raise ValueError(f"unknown family {fam!r}; expected one of {FAMILIES}")
        if fam in ("cycle", "complete", "empty", "random"):
            if len(ps) != 1:
                raise ValueError(f"{fam} takes exactly one parameter n")
            lo = 3 if fam == "cycle" else 1
            if not lo <= ps[0] <= MAX_VERTICES:
                raise ValueError(f"{fam} needs {lo} <= n <= {MAX_VERTICES}")
        elif fam == "kneser":
            if len(ps) != 2:
                raise ValueError("kneser takes parameters m, k")
            m, k = ps
            if not (k >= 1 and m >= 2 * k):
                raise ValueError("kneser requires m >= 2k >= 2")
            if math.comb(m, k) > MAX_VERTICES:
                raise ValueError(f"kneser({m},{k}) has more than {MAX_VERTICES} vertices")
        else:
            if not ps or min(ps) < 1:
                raise ValueError("complete_multipartite needs positive part sizes")
            if sum(ps) > MAX_VERTICES:
                raise ValueError(f"complete_multipartite exceeds {MAX_VERTICES} vertices")
        if fam == "random" and not 0 <= self.p <= 1:
            raise ValueError("edge probability must lie in [0, 1]")
        if not 0 <= self.seed < 2**64:
            raise ValueError("seed must be a 64-bit unsigned integer")


def random_graph(n: int, p: Fraction, rng: np.random.Generator) -> Graph:
    """G(n, p) with the exact rational edge probability ``p``."""
    p = Fraction(p)
    draws = rng.integers(0, p.denominator, size=n * (n - 1) // 2)
    adj = [0] * n
    for (i, j), x in zip(_pair_order(n), draws):
        if x < p.numerator:
            adj[i] |= 1 << j
            adj[j] |= 1 << i
    return Graph(n, tuple(adj))


def generate(spec: GeneratorSpec) -> Graph:
    fam, ps = spec.family, spec.params
    if fam == "cycle":
        n = ps[0]
        return Graph.from_edges(n, ((i, (i + 1) % n) for i in range(n)))
    if fam == "complete":
        n = ps[0]
        full = (1 << n) - 1
        return Graph(n, tuple(full & ~(1 << v) for v in range(n)))
    if fam == "empty":
        return Graph(ps[0], (0,) * ps[0])
    if fam == "kneser":
        m, k = ps
        verts = [frozenset(c) for c in itertools.combinations(range(m), k)]
        return Graph.from_edges(
            len(verts),
            ((a, b) for a, b in itertools.combinations(range(len(verts)), 2) if not verts[a] & verts[b]),
        )
    if fam == "complete_multipartite":
        part = [i for i, size in enumerate(ps) for _ in range(size)]
        return Graph.from_edges(
            len(part), ((a, b) for a, b in itertools.combinations(range(len(part)), 2) if part[a] != part[b])
        )
    return random_graph(ps[0], spec.p, np.random.default_rng(spec.seed))


def random_stream(n: int, p: Fraction, seed: int, count: int) -> Iterator[Graph]:
    """``count`` independent G(n, p) graphs; graph ``i`` depends only on ``(seed, i)``."""
    for i in range(count):
        yield random_graph(n, p, np.random.default_rng([seed, i]))


def all_graphs_stream(n: int) -> Iterator[Graph]:
    """Every labelled graph on ``n`` vertices, by increasing edge mask.

    Bit ``k`` of the edge mask is the ``k``-th vertex pair in graph6 order.
    """
    if not 1 <= n <= MAX_STREAM_VERTICES:
        raise ValueError(f"exhaustive stream supports 1 <= n <= {MAX_STREAM_VERTICES}, got {n}")
    pairs = list(_pair_order(n))
    for mask in range(1 << len(pairs)):
        adj = [0] * n
        m = mask
        while m:
            low = m & -m
            i, j = pairs[low.bit_length() - 1]
            adj[i] |= 1 << j
            adj[j] |= 1 << i
            m ^= low
        yield Graph(n, tuple(adj))
