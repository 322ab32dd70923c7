"""Efficient (1,k)-dominating functions on Hamming graphs H(q,d) over a
field alphabet, built from Hamming codes.

H(q,d) is (q-1)d-regular.  Write (q-1)d + 1 = q^a * m with q not dividing
m (and = p^{a_p} * m_p for the prime p under q).  Multiples of m_p are the
only k values allowed by divisibility; for every multiple of m the module
constructs an efficient (1,k) function explicitly, and when q is prime the
two families coincide, settling every k.

The construction, with l = (q^a - 1)/(q - 1): split the d coordinates
into S_0 of size (m-1)/(q-1) and blocks S_1..S_l of size m.  The linear
map phi: GF(q)^d -> GF(q)^l sends coordinates in S_i to the i-th unit
vector and S_0 to zero.  Pulling the length-l Hamming code C back through
phi gives a subspace T of dimension d - a whose q^a cosets tile every
closed neighborhood in proportion m: the coset partition is an m-cover of
K_{q^a}, so any union of t cosets is the support of an efficient
(1, t*m) function.  Cosets are labelled by the syndrome (parity check of
phi(v)) read as an integer rank, and construct_function takes the t
fibres with the smallest labels.

Sampled verification uses a splitmix-style generator (increment
0x9E3779B97F4A7C15, mix multipliers 0xBF58476D1CE4E5B9 and
0x94D049BB133111EB) so runs are reproducible bit for bit from the seed.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import List, Optional, Tuple

from .domination import DominatingFunction
from .fields import GF
from .graphs import (
    DEFAULT_SIZE_CAP,
    Graph,
    SizeCapExceeded,
    complete,
    hamming_graph,
    vertex_tuple,
)
from .linalg import field_rank, kernel_basis, mat_vec, solve_affine
from .partitions import CoverCertificate, cells_from_labels, verify_kcover

__all__ = [
    "FeasibilityProfile",
    "InfeasibleK",
    "AuditFailure",
    "CodeSubspace",
    "MCoverPlan",
    "DominatingFunctionWithPlan",
    "BasisAudit",
    "feasibility",
    "hamming_code",
    "build_plan",
    "verify_plan",
    "construct_function",
    "basis_audit",
]


class InfeasibleK(ValueError):
    """k admits no constructed function; reason is "divisibility" or "open"."""

    def __init__(self, k: int, reason: str, message: str):
        super().__init__(message)
        self.k = k
        self.reason = reason


class AuditFailure(AssertionError):
    """A basis identity of the construction failed to check out."""


@dataclass(frozen=True)
class FeasibilityProfile:
    """Factorization data for H(q,d) and the k values it settles."""

    q: int
    p: int
    b: int
    d: int
    r: int
    a_q: int
    m_q: int
    a_p: int
    m_p: int

    @property
    def necessary_k(self) -> Tuple[int, ...]:
        """Multiples of m_p in [0, r+1]: every other k fails divisibility."""
        return tuple(range(0, self.r + 2, self.m_p))

    @property
    def constructed_k(self) -> Tuple[int, ...]:
        """Multiples of m_q in [0, r+1]: these k are realized explicitly."""
        return tuple(range(0, self.r + 2, self.m_q))

    @property
    def open_k(self) -> Tuple[int, ...]:
        """Divisibility-allowed k with no construction (empty for prime q)."""
        built = set(self.constructed_k)
        return tuple(k for k in self.necessary_k if k not in built)

    def partition_descriptor(self) -> str:
        if self.a_q == 0:
            return "no q-power factor"
        base = self.q ** self.a_q
        if self.m_q == 1:
            return f"cover of K_{base}"
        return f"{self.m_q}-cover of K_{base}"


def feasibility(gf: GF, d: int) -> FeasibilityProfile:
    if d < 1:
        raise ValueError("d must be at least 1")
    q, p, b = gf.q, gf.p, gf.b
    r = (q - 1) * d
    a_p = 0
    rest = r + 1
    while rest % p == 0:
        rest //= p
        a_p += 1
    m_p = (r + 1) // p ** a_p
    a_q = a_p // b
    m_q = (r + 1) // q ** a_q
    return FeasibilityProfile(q=q, p=p, b=b, d=d, r=r, a_q=a_q, m_q=m_q, a_p=a_p, m_p=m_p)


@dataclass(frozen=True)
class CodeSubspace:
    """A linear code given by basis and parity check over GF(q)."""

    gf: GF
    length: int
    basis: Tuple[Tuple[int, ...], ...]
    parity_check: Tuple[Tuple[int, ...], ...]

    @property
    def dimension(self) -> int:
        return len(self.basis)


def hamming_code(gf: GF, a: int) -> CodeSubspace:
    """The length-(q^a - 1)/(q - 1) Hamming code over GF(q).

    Parity check columns are the projective representatives of the
    nonzero vectors of GF(q)^a (first nonzero coordinate 1), in
    increasing order of their integer rank.  For a = 1 the code is the
    zero subspace of GF(q)^1 with parity check [[1]].
    """
    if a < 1:
        raise ValueError("a must be at least 1")
    q = gf.q
    if a == 1:
        return CodeSubspace(gf=gf, length=1, basis=(), parity_check=((1,),))
    columns = []
    for rank in range(1, q ** a):
        digs = vertex_tuple(q, a, rank)
        first = next(x for x in digs if x)
        if first == 1:
            columns.append(digs)
    length = (q ** a - 1) // (q - 1)
    assert len(columns) == length
    h = tuple(tuple(col[i] for col in columns) for i in range(a))
    basis = tuple(tuple(v) for v in kernel_basis(gf, [list(row) for row in h]))
    return CodeSubspace(gf=gf, length=length, basis=basis, parity_check=h)


@dataclass(frozen=True)
class MCoverPlan:
    """Coordinate split, projection map and code behind the m-cover of K_{q^a}."""

    gf: GF
    profile: FeasibilityProfile
    s_sets: Tuple[Tuple[int, ...], ...]
    phi: Tuple[Tuple[int, ...], ...]
    code: CodeSubspace
    syndrome_cols: Tuple[Tuple[int, ...], ...]

    @property
    def fibre_count(self) -> int:
        return self.gf.q ** self.profile.a_q

    @property
    def fibre_size(self) -> int:
        return self.gf.q ** (self.profile.d - self.profile.a_q)

    def fibre_of(self, v: int) -> int:
        """Coset label of vertex v: the syndrome of phi(v) as a rank."""
        gf = self.gf
        q = gf.q
        a = self.profile.a_q
        syndrome = [0] * a
        rem = v
        for col in self.syndrome_cols:
            x = rem % q
            rem //= q
            if x:
                for t in range(a):
                    if col[t]:
                        syndrome[t] = gf.add(syndrome[t], gf.mul(x, col[t]))
        rank = 0
        for t in range(a - 1, -1, -1):
            rank = rank * q + syndrome[t]
        return rank


def build_plan(gf: GF, d: int) -> MCoverPlan:
    """Plan the m-cover construction for H(q,d); needs a_q >= 1."""
    profile = feasibility(gf, d)
    q, a, m = profile.q, profile.a_q, profile.m_q
    if a == 0:
        raise ValueError(
            f"(q-1)d+1 = {profile.r + 1} has no factor {q}; only the trivial k are constructible"
        )
    l = (q ** a - 1) // (q - 1)
    s0_size = (m - 1) // (q - 1)
    assert (m - 1) % (q - 1) == 0
    assert l * m + s0_size == d
    assert m * (q ** a - 1) == (q - 1) * d - (m - 1)
    s_sets: List[Tuple[int, ...]] = [tuple(range(s0_size))]
    pos = s0_size
    for _ in range(l):
        s_sets.append(tuple(range(pos, pos + m)))
        pos += m
    block_of = [0] * d
    for i, block in enumerate(s_sets):
        for coord in block:
            block_of[coord] = i
    phi = tuple(
        tuple(1 if block_of[coord] == i + 1 else 0 for coord in range(d))
        for i in range(l)
    )
    code = hamming_code(gf, a)
    h = code.parity_check
    zero_col = tuple(0 for _ in range(a))
    syndrome_cols = tuple(
        tuple(h[t][block_of[coord] - 1] for t in range(a)) if block_of[coord] else zero_col
        for coord in range(d)
    )
    return MCoverPlan(
        gf=gf, profile=profile, s_sets=tuple(s_sets), phi=phi,
        code=code, syndrome_cols=syndrome_cols,
    )


# splitmix-style 64-bit generator for reproducible sampling
_MASK64 = (1 << 64) - 1


def _splitmix64(state: int) -> Tuple[int, int]:
    state = (state + 0x9E3779B97F4A7C15) & _MASK64
    z = state
    z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK64
    z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK64
    return z ^ (z >> 31), state


def verify_plan(
    plan: MCoverPlan,
    sample: Optional[int] = None,
    seed: int = 0,
    size_cap: int = DEFAULT_SIZE_CAP,
    graph: Optional[Graph] = None,
) -> CoverCertificate:
    """Check that the plan's coset partition really is an m-cover of K_{q^a}.

    Full mode (sample=None) materializes H(q,d) and certifies every
    vertex.  Sampled mode draws `sample` vertices from the seeded
    generator and checks their closed neighborhoods against the implicit
    adjacency, never materializing the graph.
    """
    profile = plan.profile
    q, d, m = profile.q, profile.d, profile.m_q
    if sample is None:
        x = graph if graph is not None else hamming_graph(q, d, size_cap=size_cap)
        if x.n != q ** d:
            raise ValueError("supplied graph is not H(q,d) for this plan")
        labels = [plan.fibre_of(v) for v in range(x.n)]
        cells = cells_from_labels(labels)
        cert = verify_kcover(x, cells, complete(plan.fibre_count), m)
        if cert is None:
            raise AssertionError("coset partition failed the m-cover check")
        return cert

    if sample < 1:
        raise ValueError("sample count must be positive")
    n = q ** d
    powers = [q ** i for i in range(d)]
    state = seed & _MASK64
    for _ in range(sample):
        value, state = _splitmix64(state)
        v = value % n
        own = plan.fibre_of(v)
        counts = [0] * plan.fibre_count
        rem = v
        for i in range(d):
            x_dig = rem % q
            rem //= q
            base = v - x_dig * powers[i]
            for s in range(q):
                if s != x_dig:
                    counts[plan.fibre_of(base + s * powers[i])] += 1
        counts[own] += 1
        if any(c != m for c in counts):
            raise AssertionError(
                f"closed neighborhood of vertex {v} meets some coset {counts} != {m} times"
            )
    return CoverCertificate(
        base_size=plan.fibre_count,
        fold=plan.fibre_size if m == 1 else m,
        kind="cover" if m == 1 else "m-cover",
        fibre_map=None,
        mode=f"sampled:{sample}:{seed}",
    )


@dataclass(frozen=True)
class DominatingFunctionWithPlan:
    function: DominatingFunction
    profile: FeasibilityProfile
    plan: Optional[MCoverPlan]


def construct_function(gf: GF, d: int, k: int, size_cap: int = DEFAULT_SIZE_CAP) -> DominatingFunctionWithPlan:
    """Explicit efficient (1,k) function on H(q,d) for any constructible k.

    Raises InfeasibleK with reason "divisibility" for k ruled out by the
    counting argument, and with reason "open" for k that divisibility
    allows but the construction does not reach (possible only for prime
    powers q that are not prime).
    """
    profile = feasibility(gf, d)
    r = profile.r
    if not 0 <= k <= r + 1:
        raise ValueError(f"k = {k} outside [0, {r + 1}]")
    if k % profile.m_p != 0:
        raise InfeasibleK(
            k, "divisibility",
            f"no efficient (1,{k}) on H({profile.q},{d}): (r+1) = {r + 1} does not divide n*k",
        )
    if k % profile.m_q != 0:
        raise InfeasibleK(
            k, "open",
            f"k = {k} passes divisibility but is not a multiple of m = {profile.m_q}; "
            f"no construction is known here",
        )
    n = profile.q ** d
    if n > size_cap:
        raise SizeCapExceeded(f"H({profile.q},{d}) has {n} vertices, above the cap of {size_cap}")
    if k == 0:
        values = (0,) * n
        plan = None
    elif k == r + 1:
        values = (1,) * n
        plan = None
    else:
        plan = build_plan(gf, d)
        t = k // profile.m_q
        values = tuple(1 if plan.fibre_of(v) < t else 0 for v in range(n))
    func = DominatingFunction(values=values, j=1, k=k)
    return DominatingFunctionWithPlan(function=func, profile=profile, plan=plan)


@dataclass(frozen=True)
class BasisAudit:
    """Dimension bookkeeping for the subspace T = phi^{-1}(C)."""

    zero_sum_basis_size: int
    lifted_code_basis_size: int
    total_basis_size: int
    dim_t: int
    checks: Tuple[str, ...]


def basis_audit(plan: MCoverPlan) -> BasisAudit:
    """Rebuild the basis of T coordinate block by coordinate block and
    verify the counting identities; raises AuditFailure on any mismatch.

    B collects, for each block S_i (i >= 1), the m-1 differences of unit
    vectors that sum to zero inside the block, plus the unit vectors of
    S_0; B' adds one phi-preimage for each basis vector of the code.
    """
    gf = plan.gf
    profile = plan.profile
    q, d, a, m = profile.q, profile.d, profile.a_q, profile.m_q
    l = (q ** a - 1) // (q - 1)
    checks: List[str] = []

    big_b: List[List[int]] = []
    s0 = plan.s_sets[0]
    for coord in s0:
        vec = [0] * d
        vec[coord] = 1
        big_b.append(vec)
    for block in plan.s_sets[1:]:
        anchor = block[0]
        for other in block[1:]:
            vec = [0] * d
            vec[anchor] = 1
            vec[other] = gf.neg(1)
            big_b.append(vec)

    expected_b = l * (m - 1) + (m - 1) // (q - 1)
    if len(big_b) != expected_b:
        raise AuditFailure(f"|B| = {len(big_b)} but l(m-1) + (m-1)/(q-1) = {expected_b}")
    checks.append(f"|B| == l(m-1) + (m-1)/(q-1) == {expected_b}")
    alt = q ** a * (m - 1) // (q - 1)
    if expected_b != alt:
        raise AuditFailure(f"basis count {expected_b} != q^a (m-1)/(q-1) = {alt}")
    checks.append(f"|B| == q^a(m-1)/(q-1) == {alt}")

    phi_rows = [list(row) for row in plan.phi]
    for vec in big_b:
        if any(mat_vec(gf, phi_rows, vec)):
            raise AuditFailure("a zero-sum basis vector leaves the kernel of phi")
    checks.append("B inside ker(phi)")
    if big_b and field_rank(gf, big_b) != len(big_b):
        raise AuditFailure("B is linearly dependent")
    checks.append("B linearly independent")

    lifted: List[List[int]] = []
    for bvec in plan.code.basis:
        pre = solve_affine(gf, phi_rows, list(bvec))
        if pre is None:
            raise AuditFailure("a code basis vector has no phi-preimage")
        lifted.append(pre)
    checks.append(f"|B_C| == {len(lifted)}")

    full = big_b + lifted
    if len(full) != d - a:
        raise AuditFailure(f"|B'| = {len(full)} but d - a = {d - a}")
    checks.append(f"|B'| == d - a == {d - a}")
    if full and field_rank(gf, full) != len(full):
        raise AuditFailure("B' is linearly dependent")
    checks.append("B' linearly independent")

    h_phi = [
        [plan.syndrome_cols[coord][t] for coord in range(d)]
        for t in range(a)
    ]
    for vec in full:
        if any(mat_vec(gf, h_phi, vec)):
            raise AuditFailure("a B' vector leaves T = phi^{-1}(C)")
    checks.append("B' inside T")
    dim_t = d - field_rank(gf, h_phi)
    if dim_t != d - a:
        raise AuditFailure(f"dim T = {dim_t} but d - a = {d - a}")
    checks.append(f"dim T == d - a == {d - a}")

    return BasisAudit(
        zero_sum_basis_size=len(big_b),
        lifted_code_basis_size=len(lifted),
        total_basis_size=len(full),
        dim_t=dim_t,
        checks=tuple(checks),
    )
