"""Verification of (j,k)-dominating functions.

A function f: V -> {0, ..., j} is efficiently (j,k)-dominating when the
closed neighborhood sum f(N[v]) equals k at every vertex, and plainly
(j,k)-dominating when every such sum is at least k.  Matrix view: with A
the adjacency matrix, efficiency says (A + I) f = k 1.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Sequence, Set, Tuple

from .graphs import Graph

__all__ = [
    "DominatingFunction",
    "VerificationReport",
    "verify_efficient",
    "verify_dominating",
    "divisibility_feasible",
    "value_bound_holds",
    "complement_dual",
    "two_cell_partition_check",
]


@dataclass(frozen=True)
class DominatingFunction:
    """Vertex values plus the declared parameters j and k.

    The declared j bounds the values but need not be attained; reports
    carry a separate tightness flag.
    """

    values: Tuple[int, ...]
    j: int
    k: int

    def support(self) -> Tuple[int, ...]:
        return tuple(v for v, x in enumerate(self.values) if x)


@dataclass(frozen=True)
class VerificationReport:
    ok: bool
    observed_k: Optional[int]
    violations: Tuple[Tuple[int, int], ...]
    j_tight: bool


def _check_function(x: Graph, f: DominatingFunction) -> None:
    if f.j < 0 or f.k < 0:
        raise ValueError("j and k must be nonnegative")
    if len(f.values) != x.n:
        raise ValueError(f"function has {len(f.values)} values for a graph on {x.n} vertices")
    for v, val in enumerate(f.values):
        if not 0 <= val <= f.j:
            raise ValueError(f"value {val} at vertex {v} outside [0, {f.j}]")


def _closed_sums(x: Graph, values: Sequence[int]) -> list:
    sums = []
    for v, nbrs in enumerate(x.adjacency):
        s = values[v]
        for u in nbrs:
            s += values[u]
        sums.append(s)
    return sums


def verify_efficient(x: Graph, f: DominatingFunction) -> VerificationReport:
    """Report whether every closed neighborhood sums exactly to f.k."""
    _check_function(x, f)
    k = f.k
    violations = tuple(
        (v, s) for v, s in enumerate(_closed_sums(x, f.values)) if s != k
    )
    ok = not violations
    return VerificationReport(
        ok=ok,
        observed_k=k if ok else None,
        violations=violations,
        j_tight=bool(f.values) and max(f.values) == f.j,
    )


def verify_dominating(x: Graph, f: DominatingFunction) -> VerificationReport:
    """Report whether every closed neighborhood sums to at least f.k."""
    _check_function(x, f)
    k = f.k
    violations = tuple(
        (v, s) for v, s in enumerate(_closed_sums(x, f.values)) if s < k
    )
    ok = not violations
    return VerificationReport(
        ok=ok,
        observed_k=k if ok else None,
        violations=violations,
        j_tight=bool(f.values) and max(f.values) == f.j,
    )


def divisibility_feasible(n: int, r: int, k: int) -> bool:
    """Necessary condition on an r-regular graph: (r+1) divides n*k.

    An efficient function of total weight w has w*(r+1) = n*k, so the
    divisibility must hold for any efficient (j,k) to exist.
    """
    if n < 1 or r < 0 or k < 0:
        raise ValueError("need n >= 1, r >= 0, k >= 0")
    return (n * k) % (r + 1) == 0


def value_bound_holds(x: Graph, j: int, k: int) -> bool:
    """k can never exceed j * (1 + minimum degree)."""
    if j < 0 or k < 0:
        raise ValueError("j and k must be nonnegative")
    min_deg = min(len(nbrs) for nbrs in x.adjacency)
    return k <= j * (min_deg + 1)


def complement_dual(x: Graph, f: DominatingFunction) -> DominatingFunction:
    """Complement a 0/1 efficient (1,k) function into an efficient (1, r-k+1).

    On an r-regular graph, flipping every value swaps each closed sum s
    for (r+1) - s, so efficiency is preserved with k replaced by r-k+1.
    """
    r = x.regular_degree()
    if f.j != 1:
        raise ValueError("complement duality needs a 0/1 function (j = 1)")
    report = verify_efficient(x, f)
    if not report.ok:
        raise ValueError("function is not efficient; complement duality does not apply")
    return DominatingFunction(
        values=tuple(1 - v for v in f.values), j=1, k=r - f.k + 1
    )


def two_cell_partition_check(x: Graph, support: Set[int], k: int) -> bool:
    """Support test for 0/1 efficiency on an r-regular graph.

    The indicator of S is efficiently (1,k)-dominating exactly when the
    subgraph induced on S is (k-1)-regular and the one induced on the
    complement is (r-k)-regular; equivalently {S, V-S} is equitable with
    characteristic matrix [[k-1, r-k+1], [k, r-k]].
    """
    r = x.regular_degree()
    if not 1 <= k <= r:
        raise ValueError(f"k = {k} must lie in [1, {r}] for a two-cell check")
    s = set(support)
    for v in s:
        if not 0 <= v < x.n:
            raise ValueError(f"support vertex {v} out of range")
    if not s or len(s) == x.n:
        return False
    for v in range(x.n):
        inside = sum(1 for u in x.adjacency[v] if u in s)
        if v in s:
            if inside != k - 1:
                return False
        elif r - inside != r - k:
            return False
    return True
