"""Alternating matrix spaces over F_q and their connectivity parameters.

An alternating matrix space is a subspace of the alternating n x n matrices
over F_q (q odd, so alternating == skew-symmetric).  A graph G on n vertices
maps to the space spanned by the elementary alternating matrices of its
edges; all three graph connectivity parameters have space-level analogues:

* kappa: largest c such that every restriction to a subspace of dimension
  n - c + 1 stays orthogonally indecomposable (computed as the smallest c
  with a decomposable restriction of dimension n - c),
* lambda: smallest c such that some codimension-c subspace of the space
  itself is decomposable, equivalently the minimum over direct sum splits
  U + V = F^n of the dimension of the cut space {T_U A T_V^t : A},
* delta: minimum over nonzero v of deg(v) = dim of the image space A v.

Decomposability reduces to a single-subspace test: the space decomposes iff
some U with 0 < dim U < n satisfies U + U^perp = F^n, where U^perp collects
the vectors orthogonal to U under every matrix of the space.  Restricting to
dim U <= n/2 loses nothing because both sides of a split are candidates.

kappa is computed by a further collapse: a decomposable restriction W built
from U has dim(U + U^perp) = dim U + dim ker M_U - dim(U cap ker M_U) where
M_U stacks the rows u^t A over basis vectors u and basis matrices A, and
every decomposable W arises that way, so

    kappa = min(n - 1,  min over U of rank(M_U) - rank(M_U B_U^t))

subject to ker M_U not contained in U.  The n - 1 term is the degenerate
convention: one-dimensional restrictions are zero spaces and zero spaces
decompose.  A literal restriction-enumeration solver is kept alongside as a
cross-check oracle.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from functools import cached_property
from itertools import combinations
from typing import Optional, Sequence, Tuple

import numpy as np

from . import gf
from .gf import Subspace, field, gaussian_binomial, rank_batched, subspace_matrices
from .graphs import Graph

DEFAULT_GUARD_N = 6
DEFAULT_GUARD_M = 8
_CHUNK = 4096


class GuardExceeded(ValueError):
    """A brute-force solver was asked to exceed its size guard."""


def _check_guard(what: str, value: int, guard: int, force: bool):
    if value > guard and not force:
        raise GuardExceeded(
            f"{what}={value} exceeds the brute-force guard {guard}; pass force=True "
            "(CLI: --force) to run anyway"
        )


def is_alternating(mat: np.ndarray, q: int) -> bool:
    return bool(((mat + mat.T) % q == 0).all() and (np.diag(mat) % q == 0).all())


@dataclass(frozen=True)
class AltMatrixSpace:
    """Subspace of alternating n x n matrices, canonical RREF basis of vecs."""

    n: int
    q: int
    basis: tuple  # tuple of n x n tuples

    def __post_init__(self):
        field(self.q)
        if self.n < 1:
            raise ValueError("ambient dimension must be >= 1")

    @classmethod
    def from_matrices(cls, mats, n: int, q: int) -> "AltMatrixSpace":
        arr = gf.as_residues(mats, q)
        if arr.size == 0:
            arr = arr.reshape(0, n, n)
        if arr.ndim != 3 or arr.shape[1:] != (n, n):
            raise ValueError(f"expected a stack of {n} x {n} matrices")
        for A in arr:
            if not is_alternating(A, q):
                raise ValueError("matrix is not alternating (need A^T = -A mod q)")
        vecs = arr.reshape(len(arr), n * n)
        R, r, _ = gf.rref(vecs, q)
        mats_canon = R[:r].reshape(r, n, n)
        return cls(n, q, tuple(tuple(tuple(int(x) for x in row) for row in A) for A in mats_canon))

    @classmethod
    def zero(cls, n: int, q: int) -> "AltMatrixSpace":
        return cls(n, q, ())

    @property
    def dim(self) -> int:
        return len(self.basis)

    @cached_property
    def tensor(self) -> np.ndarray:
        if not self.basis:
            return np.zeros((0, self.n, self.n), dtype=np.int64)
        t = np.array(self.basis, dtype=np.int64)
        t.setflags(write=False)
        return t

    def contains(self, mat) -> bool:
        A = gf.as_residues(mat, self.q)
        stacked = np.vstack([self.tensor.reshape(self.dim, -1), A.reshape(1, -1)])
        return gf.rank_gf(stacked, self.q) == self.dim

    def image_of(self, v) -> Subspace:
        """The subspace A v over all A in the space (the 'neighbourhood' of v)."""
        v = gf.as_residues(v, self.q)
        cols = (self.tensor @ v) % self.q
        return Subspace.from_vectors(cols.reshape(self.dim, self.n), self.n, self.q)

    def __repr__(self):
        return f"AltMatrixSpace(n={self.n}, q={self.q}, dim={self.dim})"


@dataclass(frozen=True)
class GeneralMatrixSpace:
    """Subspace of s x t matrices over F_q, canonical RREF basis of vecs."""

    s: int
    t: int
    q: int
    basis: tuple

    @classmethod
    def from_matrices(cls, mats, s: int, t: int, q: int) -> "GeneralMatrixSpace":
        arr = gf.as_residues(mats, q)
        if arr.size == 0:
            arr = arr.reshape(0, s, t)
        if arr.ndim != 3 or arr.shape[1:] != (s, t):
            raise ValueError(f"expected a stack of {s} x {t} matrices")
        vecs = arr.reshape(len(arr), s * t)
        R, r, _ = gf.rref(vecs, q)
        mats_canon = R[:r].reshape(r, s, t)
        return cls(s, t, q, tuple(tuple(tuple(int(x) for x in row) for row in A) for A in mats_canon))

    @property
    def dim(self) -> int:
        return len(self.basis)

    @cached_property
    def tensor(self) -> np.ndarray:
        if not self.basis:
            return np.zeros((0, self.s, self.t), dtype=np.int64)
        t = np.array(self.basis, dtype=np.int64)
        t.setflags(write=False)
        return t

    def __repr__(self):
        return f"GeneralMatrixSpace(s={self.s}, t={self.t}, q={self.q}, dim={self.dim})"


@dataclass(frozen=True)
class OrthWitness:
    """A direct sum split F^n = U + V with u^t A v = 0 for the whole space."""

    U: Subspace
    V: Subspace


@dataclass(frozen=True)
class LambdaResult:
    value: int
    U: Optional[Subspace]
    V: Optional[Subspace]
    vanishing: AltMatrixSpace  # the codim-lambda subspace that decomposes via (U, V)


# ---------------------------------------------------------------------------
# Construction


def space_from_graph(g: Graph, q: int) -> AltMatrixSpace:
    """Span of the elementary alternating matrices of the edges of g.

    The canonical basis is exactly the elementary matrices in edge-lex order,
    so dim = number of edges.
    """
    field(q)
    mats = []
    for i, j in g.sorted_edges():
        A = np.zeros((g.n, g.n), dtype=np.int64)
        A[i, j] = 1
        A[j, i] = q - 1
        mats.append(A)
    return AltMatrixSpace.from_matrices(np.array(mats), g.n, q)


def elementary_alt(n: int, i: int, j: int, q: int) -> np.ndarray:
    A = np.zeros((n, n), dtype=np.int64)
    A[i, j] = 1
    A[j, i] = q - 1
    return A


def restrict(space: AltMatrixSpace, W: Subspace) -> AltMatrixSpace:
    """Restriction to W: matrices B A B^t for the RREF basis B of W."""
    if W.q != space.q or W.n != space.n:
        raise ValueError("subspace is incompatible with the matrix space")
    if W.dim == 0:
        raise ValueError("cannot restrict to the zero subspace")
    B = W.mat()
    mats = (B @ space.tensor @ B.T) % space.q
    return AltMatrixSpace.from_matrices(mats, W.dim, space.q)


# ---------------------------------------------------------------------------
# Decomposability


def _dim_scan(space: AltMatrixSpace, b: int):
    """For every b-dim U (canonical order): rank(M_U) and rank(M_U B_U^t).

    M_U stacks the rows u_i^t A_k; its kernel is U^perp.  Returns (r1, r2).
    """
    n, q, m = space.n, space.q, space.dim
    AT = space.tensor
    Us = subspace_matrices(n, b, q)
    N = len(Us)
    r1 = np.zeros(N, dtype=np.int64)
    r2 = np.zeros(N, dtype=np.int64)
    step = max(1, _CHUNK // max(1, b * max(m, 1)))
    for lo in range(0, N, step):
        chunk = Us[lo : lo + step]
        M = np.einsum("ubi,kij->ubkj", chunk, AT).reshape(len(chunk), b * m, n) % q
        r1[lo : lo + step] = rank_batched(M, q)
        MBt = np.einsum("urj,ucj->urc", M, chunk) % q
        r2[lo : lo + step] = rank_batched(MBt, q)
    return r1, r2


def _orth_witness_from_u(space: AltMatrixSpace, u_rows: np.ndarray) -> OrthWitness:
    n, q, m = space.n, space.q, space.dim
    U = Subspace.from_vectors(u_rows, n, q)
    if m == 0:
        V = U.complement_in()
        return OrthWitness(U, V)
    M = np.einsum("bi,kij->bkj", U.mat(), space.tensor).reshape(U.dim * m, n) % q
    perp = Subspace.from_vectors(gf.nullspace(M, q), n, q)
    core = U.intersect(perp)
    V = core.complement_in(perp)
    return OrthWitness(U, V)


def is_orth_decomposable(space: AltMatrixSpace):
    """(flag, witness).  Zero spaces decompose by convention; witness is a
    genuine split when one exists (always for ambient dim >= 2)."""
    n, q = space.n, space.q
    if n == 1:
        return True, None  # the only space is zero; no split of a 1-dim ambient
    for b in range(1, n // 2 + 1):
        r1, r2 = _dim_scan(space, b)
        hits = np.nonzero(r1 == r2)[0]
        if hits.size:
            u_rows = subspace_matrices(n, b, q)[hits[0]]
            return True, _orth_witness_from_u(space, np.array(u_rows))
    return False, None


def orth_decomposable_pairscan(space: AltMatrixSpace):
    """Literal definition: scan splits (U, V) directly.  Validation oracle."""
    n, q = space.n, space.q
    if n == 1:
        return True, None
    AT = space.tensor
    for b in range(1, n):
        for u_rows in subspace_matrices(n, b, q):
            u_rows = np.array(u_rows)
            for v_rows in gf.complement_matrices(u_rows, q):
                cuts = np.einsum("bi,kij,cj->kbc", u_rows, AT, v_rows) % q
                if not cuts.any():
                    return True, OrthWitness(
                        Subspace.from_vectors(u_rows, n, q),
                        Subspace.from_vectors(v_rows, n, q),
                    )
    return False, None


def validate_orth_witness(space: AltMatrixSpace, w: OrthWitness) -> bool:
    U, V = w.U, w.V
    if U.dim == 0 or V.dim == 0 or U.dim + V.dim != space.n:
        return False
    if U.intersect(V).dim != 0:
        return False
    cuts = np.einsum("bi,kij,cj->kbc", U.mat(), space.tensor, V.mat()) % space.q
    return not cuts.any()


# ---------------------------------------------------------------------------
# kappa


def kappa_space(
    space: AltMatrixSpace, *, guard_n: int = DEFAULT_GUARD_N, force: bool = False
) -> Tuple[int, Subspace]:
    """(kappa, W): smallest c with a decomposable restriction, dim W = n - c."""
    n, q = space.n, space.q
    _check_guard("n", n, guard_n, force)
    best = n - 1
    best_u: Optional[np.ndarray] = None
    for b in range(1, n // 2 + 1):
        r1, r2 = _dim_scan(space, b)
        c = r1 - r2
        valid = (n - r1) > (b - r2)  # ker M_U not inside U, so the split is nontrivial
        c = np.where(valid, c, n)
        idx = int(c.argmin())
        if c[idx] < best:
            best = int(c[idx])
            best_u = np.array(subspace_matrices(n, b, q)[idx])
    if best_u is None:
        # degenerate route only: restriction to a line is the zero space
        W = Subspace.from_vectors(np.array(subspace_matrices(n, 1, q)[0]), n, q)
        return n - 1, W
    witness = _orth_witness_from_u(space, best_u)
    W = witness.U.sum_with(witness.V)
    assert W.dim == n - best
    return best, W


def kappa_space_bruteforce(
    space: AltMatrixSpace, *, guard_n: int = 5, force: bool = False
) -> Tuple[int, Subspace]:
    """Literal search: c ascending, restrictions in canonical order."""
    n, q = space.n, space.q
    _check_guard("n", n, guard_n, force)
    for c in range(n):
        for w_rows in subspace_matrices(n, n - c, q):
            W = Subspace.from_vectors(np.array(w_rows), n, q)
            if is_orth_decomposable(restrict(space, W))[0]:
                return c, W
    raise AssertionError("dim-1 restrictions are zero spaces and must decompose")


# ---------------------------------------------------------------------------
# lambda


def cut_dim(space: AltMatrixSpace, U: Subspace, V: Subspace) -> int:
    """dim of {T_U A T_V^t : A in the space} for a direct split U + V = F^n."""
    n, q = space.n, space.q
    if U.n != n or V.n != n or U.q != q or V.q != q:
        raise ValueError("subspaces incompatible with the space")
    if U.dim == 0 or V.dim == 0:
        raise ValueError("cut requires nontrivial U and V")
    if U.dim + V.dim != n or U.intersect(V).dim != 0:
        raise ValueError("U and V must form a direct sum decomposition of F^n")
    if space.dim == 0:
        return 0
    cuts = np.einsum("bi,kij,cj->kbc", U.mat(), space.tensor, V.mat()) % q
    return gf.rank_gf(cuts.reshape(space.dim, -1), q)


def degree_vector(space: AltMatrixSpace, v) -> int:
    """deg(v) = dim of the image space {A v}."""
    v = gf.as_residues(v, space.q)
    if space.dim == 0:
        return 0
    M = (space.tensor @ v) % space.q
    return gf.rank_gf(M, space.q)


def delta_space(space: AltMatrixSpace) -> Tuple[int, np.ndarray]:
    """(delta, v): minimum degree over nonzero vectors, first line rep attaining."""
    n, q, m = space.n, space.q, space.dim
    lines = gf.projective_lines(n, q)
    if m == 0:
        return 0, np.array(lines[0])
    D = np.einsum("kij,vj->vki", space.tensor, lines) % q
    degs = rank_batched(D, q)
    idx = int(degs.argmin())
    return int(degs[idx]), np.array(lines[idx])


def _line_degrees_subspace_order(space: AltMatrixSpace) -> np.ndarray:
    rows = subspace_matrices(space.n, 1, space.q)[:, 0, :]
    if space.dim == 0:
        return np.zeros(len(rows), dtype=np.int64)
    D = np.einsum("kij,vj->vki", space.tensor, rows) % space.q
    return rank_batched(D, space.q)


def _cut_ranks_for_u(space: AltMatrixSpace, u_rows: np.ndarray, cap: int):
    """Ranks of the cut matrices for every complement of U, complement order."""
    n, q, m = space.n, space.q, space.dim
    b = len(u_rows)
    P = np.einsum("kij,bi->kbj", space.tensor, u_rows) % q  # (m, b, n)
    Vs = gf.complement_matrices(u_rows, q)
    NV = len(Vs)
    out = np.zeros(NV, dtype=np.int64)
    step = max(1, _CHUNK // max(1, m))
    for lo in range(0, NV, step):
        chunk = Vs[lo : lo + step]
        cuts = np.einsum("kbj,vcj->vkbc", P, chunk).reshape(len(chunk), m, -1) % q
        out[lo : lo + step] = rank_batched(cuts, q, cap=cap)
    return out


def _degree_code_table(space: AltMatrixSpace) -> np.ndarray:
    """Degree of every nonzero vector, indexed by its base-q digit code."""
    n, q = space.n, space.q
    lines = gf.projective_lines(n, q)
    if space.dim == 0:
        degs = np.zeros(len(lines), dtype=np.int64)
    else:
        D = np.einsum("kij,vj->vki", space.tensor, lines) % q
        degs = rank_batched(D, q)
    powers = q ** np.arange(n - 1, -1, -1, dtype=np.int64)
    table = np.zeros(q**n, dtype=np.int64)
    for a in range(1, q):
        table[((a * lines) % q) @ powers] = degs
    return table


def _level_keep_mask(space: AltMatrixSpace, b: int, best: int, deg_table: np.ndarray) -> np.ndarray:
    """Keep flags for the dim-b subspaces U that could still hold a cut < best.

    Two lower bounds for the cut dimension across any split U + V:
    - a single row u^t A restricted to V loses at most dim(Vperp n uperp) =
      b - 1 dimensions (u is outside V, so Vperp is not inside uperp), hence
      cut >= deg(u) - (b - 1) for every line u in U;
    - summing the same loss over a basis of U, cut >= dim{B_U A} - b(b-1).
    Both are independent of the choice of V, so U is skipped outright when
    either bound reaches best.  Only the strictly-smaller search uses this;
    the witness rescan for equality runs unfiltered.
    """
    n, q, m = space.n, space.q, space.dim
    u_stack = subspace_matrices(n, b, q)
    powers = q ** np.arange(n - 1, -1, -1, dtype=np.int64)
    combos = gf.projective_lines(b, q)
    lines_u = np.einsum("cb,ubn->ucn", combos, u_stack) % q
    max_deg = deg_table[lines_u @ powers].max(axis=1)
    bound = max_deg - (b - 1)
    if m:
        flats = np.einsum("ubi,kij->ukbj", u_stack, space.tensor).reshape(
            len(u_stack), m, b * n
        ) % q
        r_flat = rank_batched(flats, q, cap=best + b * (b - 1))
        bound = np.maximum(bound, r_flat - b * (b - 1))
    return bound < best


def lambda_space(
    space: AltMatrixSpace, *, guard_n: int = DEFAULT_GUARD_N, force: bool = False
) -> LambdaResult:
    """Minimum cut dimension over direct sum splits of F^n.

    Search: splits with dim U = 1 all share cut dimension deg(u) (the cut
    functionals kill u, so restriction to any complement is faithful), hence
    the dim-1 pass contributes exactly delta.  Larger U are scanned with a
    sound lower-bound filter and batched rank computation; the witness pair
    is then re-derived in canonical enumeration order.
    """
    n, q, m = space.n, space.q, space.dim
    if n < 2:
        raise ValueError("lambda needs ambient dimension >= 2")
    _check_guard("n", n, guard_n, force)
    dec, w = is_orth_decomposable(space)
    if dec:
        assert w is not None
        return LambdaResult(0, w.U, w.V, space)
    best = delta_space(space)[0]  # the dim-1 pass
    if best > 1:
        deg_table = _degree_code_table(space)
        for b in range(2, n // 2 + 1):
            keep = _level_keep_mask(space, b, best, deg_table)
            Us = subspace_matrices(n, b, q)
            for u_idx in np.flatnonzero(keep):
                if best <= 1:
                    break
                ranks = _cut_ranks_for_u(space, np.array(Us[u_idx]), cap=best)
                mn = int(ranks.min())
                if mn < best:
                    best = mn
            if best <= 1:
                break
    value = best
    U, V = _lambda_witness(space, value)
    vanishing = _cut_kernel(space, U, V)
    return LambdaResult(value, U, V, vanishing)


def _lambda_witness(space: AltMatrixSpace, value: int):
    """First split (U, V) in canonical order whose cut dimension equals value."""
    n, q = space.n, space.q
    degs = _line_degrees_subspace_order(space)
    hits = np.nonzero(degs == value)[0]
    if hits.size:
        u_rows = np.array(subspace_matrices(n, 1, q)[hits[0]])
        v_rows = gf.complement_matrices(u_rows, q)[0]
        return (
            Subspace.from_vectors(u_rows, n, q),
            Subspace.from_vectors(v_rows, n, q),
        )
    for b in range(2, n // 2 + 1):
        for u_rows in subspace_matrices(n, b, q):
            u_rows = np.array(u_rows)
            ranks = _cut_ranks_for_u(space, u_rows, cap=value + 1)
            hits = np.nonzero(ranks == value)[0]
            if hits.size:
                v_rows = gf.complement_matrices(u_rows, q)[hits[0]]
                return (
                    Subspace.from_vectors(u_rows, n, q),
                    Subspace.from_vectors(v_rows, n, q),
                )
    raise AssertionError("lambda witness must exist at the computed value")


def _cut_kernel(space: AltMatrixSpace, U: Subspace, V: Subspace) -> AltMatrixSpace:
    """Subspace of the space whose members vanish across the split (U, V)."""
    if space.dim == 0:
        return space
    q = space.q
    cuts = np.einsum("bi,kij,cj->kbc", U.mat(), space.tensor, V.mat()) % q
    coeffs = gf.nullspace(cuts.reshape(space.dim, -1).T, q)
    mats = np.einsum("ck,kij->cij", coeffs, space.tensor) % q
    return AltMatrixSpace.from_matrices(mats, space.n, q)


def lambda_space_oracle(
    space: AltMatrixSpace, *, guard_m: int = DEFAULT_GUARD_M - 2, force: bool = False
):
    """Literal definition of lambda: smallest codimension of a decomposable
    subspace of the space itself.  Enumerates coefficient subspaces of F^m.

    Returns (value, vanishing_subspace, witness)."""
    n, q, m = space.n, space.q, space.dim
    if n < 2:
        raise ValueError("lambda needs ambient dimension >= 2")
    _check_guard("m", m, guard_m, force)
    flat = space.tensor.reshape(m, n * n) if m else np.zeros((0, n * n), dtype=np.int64)
    for c in range(m + 1):
        for coeffs in subspace_matrices(m, m - c, q) if m else [np.zeros((0, 0))]:
            mats = (np.array(coeffs, dtype=np.int64) @ flat).reshape(m - c, n, n) % q
            sub = AltMatrixSpace.from_matrices(mats, n, q)
            dec, w = is_orth_decomposable(sub)
            if dec:
                return c, sub, w
    raise AssertionError("the zero subspace always decomposes")


# ---------------------------------------------------------------------------
# Full connectivity and the kappa > lambda construction


def is_fully_connected(space: AltMatrixSpace):
    """(flag, None or a failing pair (u, v)): are all pairs of independent
    vectors connected by some matrix of the space?"""
    n, q = space.n, space.q
    if n == 1:
        return True, None
    lines = gf.projective_lines(n, q)
    if space.dim == 0:
        return False, (np.array(lines[0]), np.array(lines[1]))
    hit = np.zeros((len(lines), len(lines)), dtype=bool)
    for A in space.tensor:
        vals = (lines @ A @ lines.T) % q
        hit |= vals != 0
    np.fill_diagonal(hit, True)
    if hit.all():
        return True, None
    i, j = np.argwhere(~hit)[0]
    return False, (np.array(lines[i]), np.array(lines[j]))


def is_fully_connected_rect(space: GeneralMatrixSpace):
    """Rectangular variant: all pairs of nonzero u in F^s, v in F^t connected."""
    s, t, q = space.s, space.t, space.q
    lu = gf.projective_lines(s, q)
    lv = gf.projective_lines(t, q)
    if space.dim == 0:
        return False, (np.array(lu[0]), np.array(lv[0]))
    hit = np.zeros((len(lu), len(lv)), dtype=bool)
    for B in space.tensor:
        hit |= ((lu @ B @ lv.T) % q) != 0
    if hit.all():
        return True, None
    i, j = np.argwhere(~hit)[0]
    return False, (np.array(lu[i]), np.array(lv[j]))


def _poly_mod(a, b, q):
    """Remainder of polynomial a modulo monic b; coefficients ascending."""
    a = list(a)
    db, da = len(b) - 1, len(a) - 1
    while da >= db and any(a):
        lead = a[da] % q
        if lead:
            shift = da - db
            for i, bc in enumerate(b):
                a[shift + i] = (a[shift + i] - lead * bc) % q
        da -= 1
    return [x % q for x in a[:db]] if db > 0 else []


def _monic_polys(degree, q):
    for tail in np.ndindex(*([q] * degree)):
        yield list(tail[::-1]) + [1]  # ascending coefficients, monic


def least_irreducible(s: int, q: int):
    """Lexicographically least monic irreducible of degree s over F_q.

    Order is over the coefficient tuple (c_{s-1}, ..., c_0), high degree
    first.  Coefficients are returned ascending: [c_0, ..., c_{s-1}, 1].
    """
    field(q)
    if s < 1:
        raise ValueError("degree must be >= 1")
    divisor_degrees = range(1, s // 2 + 1)
    for head in np.ndindex(*([q] * s)):
        coeffs = list(head[::-1]) + [1]  # ascending
        if s == 1:
            return coeffs
        reducible = False
        for d in divisor_degrees:
            for g in _monic_polys(d, q):
                rem = _poly_mod(coeffs, g, q)
                if not any(rem):
                    reducible = True
                    break
            if reducible:
                break
        if not reducible:
            return coeffs
    raise AssertionError("irreducible polynomials of every degree exist")


def companion_matrix(coeffs, q: int) -> np.ndarray:
    """Companion matrix of a monic polynomial, ascending coefficients."""
    s = len(coeffs) - 1
    C = np.zeros((s, s), dtype=np.int64)
    for i in range(s - 1):
        C[i + 1, i] = 1
    for i in range(s):
        C[i, s - 1] = (-coeffs[i]) % q
    return C


def field_ext_full_space(s: int, q: int) -> GeneralMatrixSpace:
    """The regular representation of F_{q^s}: a fully connected s x s space
    of dimension s in which every nonzero member is invertible."""
    field(q)
    if s < 1:
        raise ValueError("extension degree must be >= 1")
    C = companion_matrix(least_irreducible(s, q), q)
    powers = [np.eye(s, dtype=np.int64)]
    for _ in range(s - 1):
        powers.append((powers[-1] @ C) % q)
    # B_i has columns C_1 e_i, ..., C_s e_i
    mats = [np.stack([P[:, i] for P in powers], axis=1) for i in range(s)]
    return GeneralMatrixSpace.from_matrices(np.array(mats), s, s, q)


def _rect_full_space(s: int, t: int, q: int) -> GeneralMatrixSpace:
    """Fully connected s x t space of dimension max(s, t): powers of the
    degree-max(s,t) companion matrix, truncated to the first s rows and
    first t columns."""
    r = max(s, t)
    sq = field_ext_full_space(r, q)
    mats = sq.tensor[:, :s, :t]
    out = GeneralMatrixSpace.from_matrices(mats, s, t, q)
    assert out.dim == r
    return out


def kappa_gt_lambda_instance(s: int, t: int, q: int) -> AltMatrixSpace:
    """Alternating space on n = s + t with kappa = n - 1 but lambda <= max(s, t).

    Block construction: A_i = [[0, B_i], [-B_i^t, 0]] for a fully connected
    s x t space {B_i} of dimension d < s + t - 1, plus all elementary
    alternating matrices inside the top-left s x s and bottom-right t x t
    blocks.  The result is fully connected, so kappa = n - 1, while the cut
    along the block split has dimension d.
    """
    if s < 2 or t < 2:
        raise ValueError("need s, t >= 2 so that dim B < s + t - 1")
    rect = _rect_full_space(s, t, q)
    n = s + t
    mats = []
    for B in rect.tensor:
        A = np.zeros((n, n), dtype=np.int64)
        A[:s, s:] = B
        A[s:, :s] = (-B.T) % q
        mats.append(A)
    for i, j in combinations(range(s), 2):
        mats.append(elementary_alt(n, i, j, q))
    for i, j in combinations(range(t), 2):
        mats.append(elementary_alt(n, s + i, s + j, q))
    return AltMatrixSpace.from_matrices(np.array(mats), n, q)


# ---------------------------------------------------------------------------
# Random instances


def random_alt_space(n: int, m: int, q: int, rng: np.random.Generator) -> AltMatrixSpace:
    """Uniform-ish random alternating space of exact dimension m."""
    limit = n * (n - 1) // 2
    if not 0 <= m <= limit:
        raise ValueError(f"dimension must be in [0, {limit}]")
    while True:
        upper = np.triu(rng.integers(0, q, size=(m, n, n)), k=1)
        mats = (upper - upper.transpose(0, 2, 1)) % q
        space = AltMatrixSpace.from_matrices(mats, n, q)
        if space.dim == m:
            return space


def random_invertible(n: int, q: int, rng: np.random.Generator) -> np.ndarray:
    while True:
        T = rng.integers(0, q, size=(n, n)).astype(np.int64)
        if gf.rank_gf(T, q) == n:
            return T


def random_isometry_image(space: AltMatrixSpace, seed: int):
    """(image, T): the pseudo-isometric space {T^t A T} for a random invertible T."""
    rng = np.random.default_rng(seed)
    T = random_invertible(space.n, space.q, rng)
    mats = (T.T @ space.tensor @ T) % space.q
    return AltMatrixSpace.from_matrices(mats, space.n, space.q), T


# ---------------------------------------------------------------------------
# Serialization


def space_to_json(space: AltMatrixSpace) -> str:
    payload = {
        "q": space.q,
        "n": space.n,
        "matrices": [[list(row) for row in A] for A in space.basis],
    }
    return json.dumps(payload, sort_keys=True, separators=(",", ": "), indent=1) + "\n"


def space_from_json(text: str) -> AltMatrixSpace:
    try:
        payload = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ValueError(f"invalid JSON: {exc}") from None
    for key in ("q", "n", "matrices"):
        if key not in payload:
            raise ValueError(f"matrix-space JSON missing key '{key}'")
    q, n = payload["q"], payload["n"]
    if not (isinstance(q, int) and isinstance(n, int)):
        raise ValueError("'q' and 'n' must be integers")
    field(q)
    mats = payload["matrices"]
    arr = np.array(mats, dtype=np.int64) if mats else np.zeros((0, n, n), dtype=np.int64)
    if arr.ndim != 3 or arr.shape[1:] != (n, n):
        raise ValueError(f"'matrices' must be a list of {n} x {n} integer matrices")
    if (arr < 0).any() or (arr >= q).any():
        raise ValueError(f"matrix entries must be residues in [0, {q})")
    return AltMatrixSpace.from_matrices(arr, n, q)
