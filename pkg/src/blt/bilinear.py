"""Alternating bilinear maps F_q^n x F_q^n -> F_q^m as ordered matrix tuples.

A map phi is stored as the tuple (A_1, ..., A_m) with
phi(v, u) = (v^t A_1 u, ..., v^t A_m u).  Unlike a matrix space, the tuple is
ordered and may be linearly dependent (restrictions of surjective maps
usually are).  Surjectivity is equivalent to linear independence of the
tuple.

kappa and lambda mirror the space-level parameters but are searched through
map operations: kappa restricts the domain to subspaces U (the tuple becomes
(T^t A_k T)), lambda quotients the codomain by subspaces X (the tuple is
rewritten in a basis extending X and the X-coordinates are dropped).  A map
is orthogonally decomposable iff the span of its tuple is, so the space
module's decomposability test is reused as the inner oracle; the searches
above it are independent of the space-level solvers, which is what makes
agreement between the two routes a meaningful check.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from functools import cached_property
from typing import Optional, Sequence, Tuple

import numpy as np

from . import gf
from .altspace import (
    DEFAULT_GUARD_M,
    DEFAULT_GUARD_N,
    AltMatrixSpace,
    _check_guard,
    is_alternating,
    is_orth_decomposable,
)
from .gf import Subspace, field, subspace_matrices


@dataclass(frozen=True)
class AltBilinearMap:
    """Ordered tuple of alternating n x n matrices over F_q; codomain F_q^m."""

    n: int
    q: int
    mats: tuple  # m entries, each an n x n tuple-of-tuples; may be dependent

    def __post_init__(self):
        field(self.q)
        if self.n < 1:
            raise ValueError("domain dimension must be >= 1")

    @classmethod
    def from_matrices(cls, mats, n: int, q: int) -> "AltBilinearMap":
        arr = gf.as_residues(mats, q)
        if arr.size == 0:
            arr = arr.reshape(0, n, n)
        if arr.ndim != 3 or arr.shape[1:] != (n, n):
            raise ValueError(f"expected a stack of {n} x {n} matrices")
        for A in arr:
            if not is_alternating(A, q):
                raise ValueError("matrix is not alternating (need A^T = -A mod q)")
        return cls(n, q, tuple(tuple(tuple(int(x) for x in row) for row in A) for A in arr))

    @property
    def m(self) -> int:
        return len(self.mats)

    @cached_property
    def tensor(self) -> np.ndarray:
        if not self.mats:
            return np.zeros((0, self.n, self.n), dtype=np.int64)
        t = np.array(self.mats, dtype=np.int64)
        t.setflags(write=False)
        return t

    def __call__(self, v, u) -> np.ndarray:
        v = gf.as_residues(v, self.q)
        u = gf.as_residues(u, self.q)
        return np.einsum("i,kij,j->k", v, self.tensor, u) % self.q

    def span(self) -> AltMatrixSpace:
        return AltMatrixSpace.from_matrices(self.tensor, self.n, self.q)

    def __repr__(self):
        return f"AltBilinearMap(n={self.n}, q={self.q}, m={self.m})"


def map_from_space(space: AltMatrixSpace, order: Optional[Sequence] = None) -> AltBilinearMap:
    """The bilinear map of a matrix space, using its canonical basis or a
    supplied basis (which must be an ordered basis of exactly that space)."""
    if order is None:
        return AltBilinearMap.from_matrices(space.tensor, space.n, space.q)
    phi = AltBilinearMap.from_matrices(np.array(order), space.n, space.q)
    if phi.m != space.dim or not is_surjective(phi):
        raise ValueError("supplied matrices are not an ordered basis of the space")
    if phi.span() != space:
        raise ValueError("supplied matrices span a different space")
    return phi


def is_surjective(phi: AltBilinearMap) -> bool:
    """phi hits all of F_q^m iff its matrix tuple is linearly independent."""
    if phi.m == 0:
        return True
    flat = phi.tensor.reshape(phi.m, -1)
    return gf.rank_gf(flat, phi.q) == phi.m


def restrict_map(phi: AltBilinearMap, U: Subspace) -> AltBilinearMap:
    """phi restricted to U x U, in the RREF coordinates of U; codomain kept."""
    if U.n != phi.n or U.q != phi.q:
        raise ValueError("subspace incompatible with the map")
    if U.dim == 0:
        raise ValueError("cannot restrict to the zero subspace")
    B = U.mat()
    mats = (B @ phi.tensor @ B.T) % phi.q
    return AltBilinearMap.from_matrices(mats, U.dim, phi.q)


def quotient_map(phi: AltBilinearMap, X: Subspace) -> AltBilinearMap:
    """phi composed with the projection F_q^m -> F_q^m / X.

    The codomain basis is (complement of X, then X), where the complement is
    the deterministic greedy one; the trailing dim X coordinates are dropped.
    """
    q, m = phi.q, phi.m
    if X.n != m or X.q != q:
        raise ValueError("quotient subspace must live in the codomain")
    comp = X.complement_in()
    W_rows = np.vstack([comp.mat(), X.mat()])  # new basis, X last
    Winv = gf.invert(W_rows.T, q)  # coordinates: y = Winv @ value
    keep = Winv[: m - X.dim]
    mats = np.einsum("kj,jab->kab", keep, phi.tensor) % q
    return AltBilinearMap.from_matrices(mats, phi.n, q)


def is_map_decomposable(phi: AltBilinearMap):
    """A map decomposes iff phi(U, V) = 0 for some split, iff its span does."""
    return is_orth_decomposable(phi.span())


def kappa_map(
    phi: AltBilinearMap, *, guard_n: int = DEFAULT_GUARD_N, force: bool = False
) -> Tuple[int, Subspace]:
    """Smallest c such that phi restricted to some (n-c)-dim U decomposes.

    Literal search: c ascending, U in canonical order.  Restrictions to lines
    are zero maps and decompose by the degenerate convention, so c = n - 1
    always terminates the search.
    """
    n, q = phi.n, phi.q
    _check_guard("n", n, guard_n, force)
    for c in range(n):
        for u_rows in subspace_matrices(n, n - c, q):
            U = Subspace.from_vectors(np.array(u_rows), n, q)
            if is_map_decomposable(restrict_map(phi, U))[0]:
                return c, U
    raise AssertionError("restriction to a line is a zero map and must decompose")


def lambda_map(
    phi: AltBilinearMap, *, guard_m: int = DEFAULT_GUARD_M, force: bool = False
) -> Tuple[int, Subspace]:
    """Smallest c such that phi quotiented by some c-dim X decomposes.

    Quotienting by the full codomain gives the zero map, so c = m terminates.
    """
    m, q = phi.m, phi.q
    _check_guard("m", m, guard_m, force)
    if m == 0:
        ok, _ = is_map_decomposable(phi)
        if not ok:
            raise AssertionError("a zero map must decompose")
        return 0, Subspace.zero(1, q)  # placeholder ambient F_q^1 for the empty codomain
    for c in range(m + 1):
        for x_rows in subspace_matrices(m, c, q):
            X = Subspace.from_vectors(np.array(x_rows), m, q)
            if is_map_decomposable(quotient_map(phi, X))[0]:
                return c, X
    raise AssertionError("quotient by the full codomain is a zero map")


# ---------------------------------------------------------------------------
# Serialization


def map_to_json(phi: AltBilinearMap) -> str:
    payload = {
        "q": phi.q,
        "n": phi.n,
        "codomain_dim": phi.m,
        "matrices": [[list(row) for row in A] for A in phi.mats],
    }
    return json.dumps(payload, sort_keys=True, separators=(",", ": "), indent=1) + "\n"


def map_from_json(text: str) -> AltBilinearMap:
    try:
        payload = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ValueError(f"invalid JSON: {exc}") from None
    for key in ("q", "n", "codomain_dim", "matrices"):
        if key not in payload:
            raise ValueError(f"bilinear-map JSON missing key '{key}'")
    q, n = payload["q"], payload["n"]
    field(q)
    mats = payload["matrices"]
    if len(mats) != payload["codomain_dim"]:
        raise ValueError("codomain_dim does not match the number of matrices")
    arr = np.array(mats, dtype=np.int64) if mats else np.zeros((0, n, n), dtype=np.int64)
    if arr.ndim != 3 or arr.shape[1:] != (n, n):
        raise ValueError(f"'matrices' must be a list of {n} x {n} integer matrices")
    if (arr < 0).any() or (arr >= q).any():
        raise ValueError(f"matrix entries must be residues in [0, {q})")
    return AltBilinearMap.from_matrices(arr, n, q)
