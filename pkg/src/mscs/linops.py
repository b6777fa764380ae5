"""Minimal linear-operator algebra with adjoint verification.

Every sensing and analysis operator in the package conforms to
:class:`LinearOperator`: a vector-to-vector map with an explicit adjoint
and shape metadata. The module also provides the universal checks used
throughout the tests: adjoint dot-tests, power-iteration norm estimates
and dense materialization.
"""

from __future__ import annotations

import numpy as np


class LinearOperator:
    """Abstract real linear map with forward and adjoint application."""

    def __init__(self, in_dim, out_dim, tag="dense"):
        self.in_dim = int(in_dim)
        self.out_dim = int(out_dim)
        self.tag = tag

    def apply(self, x):
        raise NotImplementedError

    def adjoint(self, z):
        raise NotImplementedError

    def _check(self, v, dim, what="input"):
        v = np.asarray(v, dtype=np.float64).ravel()
        if v.size != dim:
            raise ValueError(f"{what} length {v.size}, expected {dim}")
        return v

    def adjoint_operator(self):
        return _Adjoint(self)

    def to_dense(self):
        """Materialize as a dense matrix (columns = images of unit vectors)."""
        mat = np.empty((self.out_dim, self.in_dim))
        e = np.zeros(self.in_dim)
        for j in range(self.in_dim):
            e[j] = 1.0
            mat[:, j] = self.apply(e)
            e[j] = 0.0
        return mat

    def save_dense(self, path):
        """Export the dense matrix: "rows cols\\n" then row-major LE float64."""
        mat = self.to_dense()
        with open(path, "wb") as fh:
            fh.write(f"{mat.shape[0]} {mat.shape[1]}\n".encode())
            fh.write(mat.astype("<f8").tobytes())


def load_dense(path):
    with open(path, "rb") as fh:
        header = fh.readline().split()
        rows, cols = int(header[0]), int(header[1])
        return np.frombuffer(fh.read(), dtype="<f8").reshape(rows, cols).copy()


class _Adjoint(LinearOperator):
    def __init__(self, op):
        super().__init__(op.out_dim, op.in_dim, tag=op.tag)
        self._op = op

    def apply(self, x):
        return self._op.adjoint(x)

    def adjoint(self, z):
        return self._op.apply(z)


class Identity(LinearOperator):
    def __init__(self, dim):
        super().__init__(dim, dim, tag="diagonal")

    def apply(self, x):
        return self._check(x, self.in_dim).copy()

    adjoint = apply


class Diagonal(LinearOperator):
    def __init__(self, diag):
        diag = np.asarray(diag, dtype=np.float64).ravel()
        super().__init__(diag.size, diag.size, tag="diagonal")
        self.diag = diag

    def apply(self, x):
        return self.diag * self._check(x, self.in_dim)

    adjoint = apply


class Dense(LinearOperator):
    def __init__(self, mat):
        mat = np.asarray(mat, dtype=np.float64)
        super().__init__(mat.shape[1], mat.shape[0], tag="dense")
        self.mat = mat

    def apply(self, x):
        return self.mat @ self._check(x, self.in_dim)

    def adjoint(self, z):
        return self.mat.T @ self._check(z, self.out_dim)


class Restriction(LinearOperator):
    """Selection of a kept index set; the adjoint zero-pads.

    Satisfies R R* = Id on the restricted space exactly, and together
    with :meth:`complement` the identity R* R + (Rc)* Rc = Id.
    """

    def __init__(self, indices, full_dim):
        indices = np.asarray(indices, dtype=np.int64).ravel()
        if indices.size and (indices.min() < 0 or indices.max() >= full_dim):
            raise ValueError("indices out of range")
        if np.unique(indices).size != indices.size:
            raise ValueError("restriction indices must be distinct")
        super().__init__(full_dim, indices.size, tag="restriction")
        self.indices = indices
        self.full_dim = int(full_dim)

    def apply(self, x):
        return self._check(x, self.in_dim)[self.indices]

    def adjoint(self, z):
        z = self._check(z, self.out_dim)
        out = np.zeros(self.full_dim)
        out[self.indices] = z
        return out

    def complement(self):
        keep = np.ones(self.full_dim, dtype=bool)
        keep[self.indices] = False
        return Restriction(np.nonzero(keep)[0], self.full_dim)


def identity_restriction(dim):
    return Restriction(np.arange(dim), dim)


class Composite(LinearOperator):
    def __init__(self, ops):
        for left, right in zip(ops[:-1], ops[1:]):
            if left.in_dim != right.out_dim:
                raise ValueError(
                    f"cannot compose: {left.in_dim} != {right.out_dim}")
        super().__init__(ops[-1].in_dim, ops[0].out_dim, tag="composite")
        self.ops = tuple(ops)

    def apply(self, x):
        for op in reversed(self.ops):
            x = op.apply(x)
        return x

    def adjoint(self, z):
        for op in self.ops:
            z = op.adjoint(z)
        return z


def compose(*ops):
    """(A o B o ...) acting right to left, with adjoint (... o B* o A*)."""
    return Composite(ops)


class BlockDiagRepeat(LinearOperator):
    """The same operator applied independently to k contiguous segments."""

    def __init__(self, op, k):
        if k < 1:
            raise ValueError("repetition count must be >= 1")
        super().__init__(op.in_dim * k, op.out_dim * k, tag="block-diagonal")
        self.op = op
        self.k = int(k)

    def apply(self, x):
        x = self._check(x, self.in_dim).reshape(self.k, self.op.in_dim)
        return np.concatenate([self.op.apply(row) for row in x])

    def adjoint(self, z):
        z = self._check(z, self.out_dim).reshape(self.k, self.op.out_dim)
        return np.concatenate([self.op.adjoint(row) for row in z])


def block_diag_repeat(op, k):
    return BlockDiagRepeat(op, k)


def adjoint_dot_test(op, trials=10, seed=0):
    """Max normalized adjoint defect |<Ax,z> - <x,A*z>| over random trials.

    Normalization is ||x|| ||z|| times a crude operator-norm estimate, so
    a correct adjoint scores around machine epsilon regardless of scale.
    """
    rng = np.random.default_rng(seed)
    worst = 0.0
    for _ in range(trials):
        x = rng.standard_normal(op.in_dim)
        z = rng.standard_normal(op.out_dim)
        ax = op.apply(x)
        atz = op.adjoint(z)
        defect = abs(float(ax @ z) - float(x @ atz))
        scale = np.linalg.norm(x) * np.linalg.norm(z)
        norm_est = max(np.linalg.norm(ax) / np.linalg.norm(x),
                       np.linalg.norm(atz) / np.linalg.norm(z))
        if norm_est == 0.0:
            worst = max(worst, 0.0 if defect == 0.0 else np.inf)
        else:
            worst = max(worst, defect / (scale * norm_est))
    return worst


def estimate_operator_norm(op, iterations=100, seed=0):
    """Power-iteration estimate of the operator 2-norm; deterministic per seed."""
    rng = np.random.default_rng(seed)
    v = rng.standard_normal(op.in_dim)
    nv = np.linalg.norm(v)
    if nv == 0.0:
        return 0.0
    v /= nv
    sigma = 0.0
    for _ in range(iterations):
        w = op.apply(v)
        nw = np.linalg.norm(w)
        if nw == 0.0:
            return 0.0
        v = op.adjoint(w / nw)
        sigma = np.linalg.norm(v)
        if sigma == 0.0:
            return 0.0
        v /= sigma
    return float(sigma)
