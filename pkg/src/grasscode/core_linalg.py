"""Subspaces of C^n, principal angles, canonical pairs, Haar sampling, Grams.

A subspace is carried by an n x m matrix with orthonormal columns; its
projection matrix is basis @ basis^dagger.  Principal angles between two
subspaces are computed from the singular values of the m x m overlap matrix
basis_a^dagger basis_b (squared cosines), never from the n x n projector
product -- that route only appears as a test oracle.
"""

import numpy as np

from .errors import (DimensionMismatch, DuplicateMember, NumericalHealthError,
                     RankDeficient, RankTooLarge)

ANGLE_SLACK = 1e-8      # certified range for squared cosines is [-slack, 1+slack]
DUP_SLACK = 1e-8        # members with tr(PaPb) > m - DUP_SLACK count as duplicates


class Subspace:
    """An m-dimensional subspace of C^n, held as an orthonormal basis."""

    __slots__ = ("basis",)

    def __init__(self, basis):
        basis = np.ascontiguousarray(basis, dtype=complex)
        if basis.ndim != 2 or basis.shape[0] < basis.shape[1] or basis.shape[1] < 1:
            raise DimensionMismatch("basis must be n x m with 1 <= m <= n, got %r"
                                    % (basis.shape,))
        basis.flags.writeable = False
        self.basis = basis

    @property
    def n(self):
        return self.basis.shape[0]

    @property
    def m(self):
        return self.basis.shape[1]

    def projection(self):
        "the n x n orthogonal projection onto the subspace"
        return self.basis @ self.basis.conj().T

    def validate(self, tol=1e-8):
        g = self.basis.conj().T @ self.basis
        err = np.abs(g - np.eye(self.m)).max()
        if err > tol:
            raise RankDeficient("basis not orthonormal (defect %.3e)" % err)
        return err

    def __repr__(self):
        return "Subspace(n=%d, m=%d)" % (self.n, self.m)


def subspace_from_basis(raw, rank_tol=1e-10):
    """Build a Subspace from a full-rank n x m matrix.

    An already-orthonormal input is kept verbatim; otherwise the columns are
    orthonormalized (QR with a positive-diagonal phase convention), which
    preserves the span.
    """
    raw = np.asarray(raw, dtype=complex)
    if raw.ndim != 2:
        raise DimensionMismatch("expected a matrix, got shape %r" % (raw.shape,))
    n, m = raw.shape
    if not 1 <= m <= n:
        raise DimensionMismatch("need 1 <= m <= n, got n=%d m=%d" % (n, m))
    sv = np.linalg.svd(raw, compute_uv=False)
    if sv[-1] <= rank_tol:
        raise RankDeficient("column rank < m (smallest singular value %.3e)"
                            % sv[-1])
    g = raw.conj().T @ raw
    if np.abs(g - np.eye(m)).max() <= 1e-12:
        return Subspace(raw)
    q, r = np.linalg.qr(raw)
    d = np.diagonal(r).copy()
    d = np.where(np.abs(d) > 0, d / np.abs(d), 1.0)
    return Subspace(q * d)


class AngleVector:
    """Squared cosines y_i = cos^2(theta_i) of the principal angles of a
    subspace pair, sorted descending, clamped to [0, 1]."""

    __slots__ = ("values",)

    def __init__(self, values):
        self.values = tuple(float(v) for v in values)

    def __len__(self):
        return len(self.values)

    def __iter__(self):
        return iter(self.values)

    def __getitem__(self, i):
        return self.values[i]

    def thetas(self):
        "principal angles in radians"
        return tuple(float(np.arccos(np.sqrt(v))) for v in self.values)

    def __repr__(self):
        return "AngleVector(%s)" % (", ".join("%.6g" % v for v in self.values))


def trace_inner_product(a, b):
    "tr(P_a P_b) = squared Frobenius norm of the overlap matrix"
    if a.n != b.n:
        raise DimensionMismatch("ambient dimensions differ: %d vs %d" % (a.n, b.n))
    w = a.basis.conj().T @ b.basis
    return float(np.sum(np.abs(w) ** 2))


def chordal_distance(a, b):
    "sqrt(m - tr(P_a P_b)) for subspaces of equal dimension"
    if a.m != b.m:
        raise DimensionMismatch("subspace dimensions differ: %d vs %d" % (a.m, b.m))
    return float(np.sqrt(max(a.m - trace_inner_product(a, b), 0.0)))


def principal_angles(a, b):
    "squared cosines of the principal angles, descending"
    if a.n != b.n:
        raise DimensionMismatch("ambient dimensions differ: %d vs %d" % (a.n, b.n))
    w = a.basis.conj().T @ b.basis
    sv = np.linalg.svd(w, compute_uv=False)
    y = sv * sv
    if y.size and (y.min() < -ANGLE_SLACK or y.max() > 1.0 + ANGLE_SLACK):
        raise NumericalHealthError(
            "squared cosine outside certified range: [%.3e, %.3e]"
            % (y.min(), y.max()))
    return AngleVector(np.clip(y, 0.0, 1.0))


def canonical_pair(a, b):
    """Rotate a pair into canonical position: returns (A, B) with A = (I_m; 0)
    and B = diag(cos theta) stacked over diag(sin theta) over zeros, both the
    images of the original bases under one ambient unitary."""
    if a.n != b.n:
        raise DimensionMismatch("ambient dimensions differ: %d vs %d" % (a.n, b.n))
    if a.m != b.m:
        raise DimensionMismatch("subspace dimensions differ: %d vs %d" % (a.m, b.m))
    n, m = a.n, a.m
    if 2 * m > n:
        raise RankTooLarge("canonical form needs 2m <= n, got m=%d n=%d" % (m, n))
    w = a.basis.conj().T @ b.basis
    u, _, vh = np.linalg.svd(w)
    ma = a.basis @ u
    mb = b.basis @ vh.conj().T
    # orthonormal basis of the complement of span(a)
    uf = np.linalg.svd(ma, full_matrices=True)[0]
    nc = uf[:, m:]
    q, r = np.linalg.qr(nc.conj().T @ mb, mode="complete")
    # phase-fix so the leading diagonal of r is real nonnegative
    for j in range(m):
        d = r[j, j]
        if abs(d) > 1e-12:
            ph = d / abs(d)
            q[:, j] *= ph
    nc = nc @ q
    ua = np.vstack([ma.conj().T, nc.conj().T])
    return ua @ ma, ua @ mb


class Code:
    """A finite list of equi-dimensional subspaces of a common C^n."""

    __slots__ = ("members", "labels")

    def __init__(self, members, labels=None, check_duplicates=True,
                 dup_tol=DUP_SLACK):
        members = list(members)
        if not members:
            raise DimensionMismatch("a code needs at least one member")
        n, m = members[0].n, members[0].m
        for s in members:
            if (s.n, s.m) != (n, m):
                raise DimensionMismatch(
                    "mixed shapes: (%d,%d) vs (%d,%d)" % (s.n, s.m, n, m))
        if labels is not None:
            labels = list(labels)
            if len(labels) != len(members):
                raise DimensionMismatch("label count != member count")
        self.members = members
        self.labels = labels
        if check_duplicates and len(members) > 1:
            g = gram_matrix(self, _skip_dup_check=True)
            off = g - np.diag(np.diagonal(g))
            hit = off.max()
            if hit > m - dup_tol:
                i, j = np.unravel_index(np.argmax(off), off.shape)
                raise DuplicateMember(
                    "members %d and %d coincide (tr = %.12g)" % (i, j, hit))

    @property
    def n(self):
        return self.members[0].n

    @property
    def m(self):
        return self.members[0].m

    def __len__(self):
        return len(self.members)

    def __iter__(self):
        return iter(self.members)

    def __getitem__(self, i):
        return self.members[i]

    def basis_stack(self):
        "all bases as one (N, n, m) array"
        return np.stack([s.basis for s in self.members])

    def __repr__(self):
        return "Code(N=%d, G(%d,%d))" % (len(self), self.m, self.n)


def gram_matrix(S, _skip_dup_check=False):
    """Symmetric matrix of trace inner products tr(P_a P_b).

    Computed blockwise from the stacked bases; explicitly symmetrized so the
    result equals its transpose exactly.
    """
    if not isinstance(S, Code):
        S = Code(S, check_duplicates=not _skip_dup_check)
    B = S.basis_stack()
    N = B.shape[0]
    X = B.conj().transpose(0, 2, 1)
    out = np.empty((N, N))
    step = max(1, int(2e7) // max(1, N * S.m * S.m))
    for lo in range(0, N, step):
        hi = min(N, lo + step)
        w = np.einsum("iak,jkb->ijab", X[lo:hi], B, optimize=True)
        out[lo:hi] = np.sum(np.abs(w) ** 2, axis=(2, 3))
    return 0.5 * (out + out.T)


def haar_subspace(n, m, seed=0):
    "one Haar-distributed m-dimensional subspace of C^n"
    if not 1 <= m <= n:
        raise DimensionMismatch("need 1 <= m <= n, got n=%d m=%d" % (n, m))
    return Subspace(haar_basis_batch(n, m, 1, seed)[0])


def haar_basis_batch(n, m, samples, seed=0):
    "stacked orthonormal bases of Haar samples, shape (samples, n, m)"
    rng = np.random.default_rng(seed)
    g = rng.standard_normal((samples, n, m)) + 1j * rng.standard_normal((samples, n, m))
    q, r = np.linalg.qr(g, mode="reduced")
    d = np.diagonal(r, axis1=1, axis2=2).copy()
    d = np.where(np.abs(d) > 0, d / np.abs(d), 1.0)
    return q * d[:, None, :]
