"""Finite simple graphs with integer-ranked vertices, plus the generators
used throughout the package.

Vertices are always 0..n-1.  For vertex sets that are tuples over an
alphabet of q symbols, the tuple (t_0, ..., t_{d-1}) gets rank
t_0 + t_1*q + ... + t_{d-1}*q^{d-1}: coordinate 0 is least significant.
Every module that mentions a Hamming-type vertex uses this rank as its
identity, so functions, partitions and certificates line up across the
package.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import List, Optional, Sequence, Tuple

from .fields import GF

__all__ = [
    "Graph",
    "SizeCapExceeded",
    "DEFAULT_SIZE_CAP",
    "vertex_rank",
    "vertex_tuple",
    "complete",
    "cycle",
    "complete_bipartite",
    "hamming_graph",
    "folded_cube",
    "cayley_graph",
    "adjacency_matrix",
    "adjacency_plus_identity",
    "closed_neighborhood_sum",
]

DEFAULT_SIZE_CAP = 1 << 21


class SizeCapExceeded(ValueError):
    """Requested graph is larger than the configured vertex cap."""


@dataclass
class Graph:
    n: int
    adjacency: List[List[int]]
    name: str = "graph"

    def validate(self) -> None:
        if self.n < 1 or len(self.adjacency) != self.n:
            raise ValueError("adjacency length does not match vertex count")
        for v, nbrs in enumerate(self.adjacency):
            prev = -1
            for u in nbrs:
                if not 0 <= u < self.n:
                    raise ValueError(f"neighbor {u} of {v} out of range")
                if u == v:
                    raise ValueError(f"loop at vertex {v}")
                if u <= prev:
                    raise ValueError(f"adjacency of {v} not sorted or has repeats")
                prev = u
        for v, nbrs in enumerate(self.adjacency):
            for u in nbrs:
                if not _binary_member(self.adjacency[u], v):
                    raise ValueError(f"edge {v}-{u} not symmetric")

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    def neighbors(self, v: int) -> List[int]:
        return self.adjacency[v]

    def is_regular(self) -> Optional[int]:
        degs = {len(nbrs) for nbrs in self.adjacency}
        return degs.pop() if len(degs) == 1 else None

    def regular_degree(self) -> int:
        r = self.is_regular()
        if r is None:
            raise ValueError(f"{self.name} is not regular")
        return r

    def edges(self) -> List[Tuple[int, int]]:
        """Edge list with u < v, sorted lexicographically."""
        return [(v, u) for v in range(self.n) for u in self.adjacency[v] if v < u]


def _binary_member(seq: List[int], x: int) -> bool:
    lo, hi = 0, len(seq)
    while lo < hi:
        mid = (lo + hi) // 2
        if seq[mid] < x:
            lo = mid + 1
        else:
            hi = mid
    return lo < len(seq) and seq[lo] == x


def _check_cap(n: int, size_cap: int) -> None:
    if n > size_cap:
        raise SizeCapExceeded(f"{n} vertices exceeds the cap of {size_cap}")


def vertex_rank(q: int, tup: Sequence[int]) -> int:
    rank = 0
    for i, t in enumerate(tup):
        if not 0 <= t < q:
            raise ValueError(f"symbol {t} outside [0, {q})")
        rank += t * q ** i
    return rank


def vertex_tuple(q: int, d: int, rank: int) -> Tuple[int, ...]:
    if not 0 <= rank < q ** d:
        raise ValueError(f"rank {rank} outside [0, {q}^{d})")
    out = []
    for _ in range(d):
        out.append(rank % q)
        rank //= q
    return tuple(out)


def complete(n: int) -> Graph:
    if n < 1:
        raise ValueError("complete graph needs n >= 1")
    adj = [[u for u in range(n) if u != v] for v in range(n)]
    return Graph(n, adj, f"K({n})")


def cycle(n: int) -> Graph:
    if n < 3:
        raise ValueError("cycle needs n >= 3")
    adj = [sorted(((v - 1) % n, (v + 1) % n)) for v in range(n)]
    return Graph(n, adj, f"C({n})")


def complete_bipartite(m: int, n: int) -> Graph:
    if m < 1 or n < 1:
        raise ValueError("complete bipartite graph needs both parts nonempty")
    left = list(range(m))
    right = list(range(m, m + n))
    adj = [right[:] for _ in left] + [left[:] for _ in right]
    return Graph(m + n, adj, f"K({m},{n})")


def hamming_graph(q, d: int, size_cap: int = DEFAULT_SIZE_CAP) -> Graph:
    """H(q, d): tuples over q symbols, adjacent when they differ in one slot.

    q may be a plain symbol count or a GF instance (only its order is used).
    """
    if isinstance(q, GF):
        q = q.q
    if q < 2 or d < 1:
        raise ValueError("hamming graph needs q >= 2 and d >= 1")
    n = q ** d
    _check_cap(n, size_cap)
    powers = [q ** i for i in range(d)]
    adj = []
    for v in range(n):
        nbrs = []
        rem = v
        for i in range(d):
            x = rem % q
            rem //= q
            base = v - x * powers[i]
            for s in range(q):
                if s != x:
                    nbrs.append(base + s * powers[i])
        nbrs.sort()
        adj.append(nbrs)
    return Graph(n, adj, f"H({q},{d})")


def folded_cube(d: int, size_cap: int = DEFAULT_SIZE_CAP) -> Graph:
    """F(d): binary (d-1)-tuples, adjacent on one bit flip or full complement."""
    if d < 2:
        raise ValueError("folded cube needs d >= 2")
    n = 1 << (d - 1)
    _check_cap(n, size_cap)
    mask = n - 1
    adj = []
    for v in range(n):
        nbrs = [v ^ (1 << i) for i in range(d - 1)]
        nbrs.append(v ^ mask)
        nbrs = sorted(set(nbrs))
        adj.append(nbrs)
    return Graph(n, adj, f"F({d})")


def cayley_graph(gf: GF, d: int, connection: Sequence[int], size_cap: int = DEFAULT_SIZE_CAP) -> Graph:
    """Cayley graph of the additive group GF(q)^d with the given connection set.

    Connection elements are vertex ranks; the set must exclude 0 and be
    closed under negation.
    """
    q = gf.q
    n = q ** d
    _check_cap(n, size_cap)
    conn = sorted(set(connection))
    if not conn:
        raise ValueError("empty connection set")
    conn_digits = []
    for c in conn:
        if not 0 < c < n:
            raise ValueError(f"connection element {c} outside (0, {n})")
        digs = vertex_tuple(q, d, c)
        neg = vertex_rank(q, tuple(gf.neg(x) for x in digs))
        if neg not in set(conn):
            raise ValueError(f"connection set not closed under negation at {c}")
        conn_digits.append(digs)
    powers = [q ** i for i in range(d)]
    adj = []
    for v in range(n):
        vd = vertex_tuple(q, d, v)
        nbrs = sorted(
            sum(gf.add(a, b) * pw for a, b, pw in zip(vd, cd, powers))
            for cd in conn_digits
        )
        adj.append(nbrs)
    g = Graph(n, adj, f"Cayley({gf!r}^{d})")
    g.validate()
    return g


def adjacency_matrix(x: Graph) -> List[List[int]]:
    m = [[0] * x.n for _ in range(x.n)]
    for v in range(x.n):
        for u in x.adjacency[v]:
            m[v][u] = 1
    return m


def adjacency_plus_identity(x: Graph) -> List[List[int]]:
    m = adjacency_matrix(x)
    for v in range(x.n):
        m[v][v] = 1
    return m


def closed_neighborhood_sum(x: Graph, values: Sequence[int], v: int) -> int:
    s = values[v]
    for u in x.adjacency[v]:
        s += values[u]
    return s
