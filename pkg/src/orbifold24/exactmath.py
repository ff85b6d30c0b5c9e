"""Exact numeric substrate: Q(w) arithmetic and dense exact linear algebra.

All exact scalars are either `fractions.Fraction` or `Cyclo3` elements
a + b*w, where w is a fixed primitive cube root of unity (w**2 = -1 - w).
Matrices are dense lists of rows.  The only floating-point entry point is
`float_eigen`, whose output is always re-verified exactly downstream.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction as Q
from typing import List, Optional, Sequence, Tuple, Union

import numpy as np

Scalar = Union[int, Q, "Cyclo3"]

_W_COMPLEX = complex(-0.5, 3.0 ** 0.5 / 2.0)


def _as_q(x: Union[int, Q]) -> Q:
    return x if isinstance(x, Q) else Q(x)


@dataclass(frozen=True)
class Cyclo3:
    """Element a + b*w of Q(w), w a primitive cube root of unity."""

    a: Q
    b: Q

    @staticmethod
    def of(x: Scalar) -> "Cyclo3":
        if isinstance(x, Cyclo3):
            return x
        return Cyclo3(_as_q(x), Q(0))

    @staticmethod
    def omega() -> "Cyclo3":
        return Cyclo3(Q(0), Q(1))

    def __add__(self, other: Scalar) -> "Cyclo3":
        o = Cyclo3.of(other)
        return Cyclo3(self.a + o.a, self.b + o.b)

    __radd__ = __add__

    def __neg__(self) -> "Cyclo3":
        return Cyclo3(-self.a, -self.b)

    def __sub__(self, other: Scalar) -> "Cyclo3":
        return self + (-Cyclo3.of(other))

    def __rsub__(self, other: Scalar) -> "Cyclo3":
        return Cyclo3.of(other) + (-self)

    def __mul__(self, other: Scalar) -> "Cyclo3":
        o = Cyclo3.of(other)
        # (a + bw)(c + dw) with w^2 = -1 - w
        return Cyclo3(
            self.a * o.a - self.b * o.b,
            self.a * o.b + self.b * o.a - self.b * o.b,
        )

    __rmul__ = __mul__

    def conj(self) -> "Cyclo3":
        """Galois conjugate w -> w^2 = -1 - w."""
        return Cyclo3(self.a - self.b, -self.b)

    def norm(self) -> Q:
        """Field norm a^2 - a*b + b^2; zero only at zero."""
        return self.a * self.a - self.a * self.b + self.b * self.b

    def inverse(self) -> "Cyclo3":
        n = self.norm()
        if n == 0:
            raise ZeroDivisionError("inverse of zero in Q(w)")
        c = self.conj()
        return Cyclo3(c.a / n, c.b / n)

    def __truediv__(self, other: Scalar) -> "Cyclo3":
        return self * Cyclo3.of(other).inverse()

    def __rtruediv__(self, other: Scalar) -> "Cyclo3":
        return Cyclo3.of(other) * self.inverse()

    def __bool__(self) -> bool:
        return bool(self.a) or bool(self.b)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, (int, Q, Cyclo3)):
            o = Cyclo3.of(other)
            return self.a == o.a and self.b == o.b
        return NotImplemented

    def __hash__(self) -> int:
        return hash((self.a, self.b))

    def is_rational(self) -> bool:
        return self.b == 0

    def rational(self) -> Q:
        if self.b != 0:
            raise ValueError(f"{self} is not rational")
        return self.a

    def to_complex(self) -> complex:
        return float(self.a) + float(self.b) * _W_COMPLEX

    def __repr__(self) -> str:
        if self.b == 0:
            return f"{self.a}"
        return f"{self.a}+{self.b}w"


OMEGA = Cyclo3.omega()

Row = List[Cyclo3]


class ExactMatrix:
    """Dense matrix over Q(w) (rational entries embed)."""

    def __init__(self, entries: Sequence[Sequence[Scalar]]):
        self.entries: List[Row] = [[Cyclo3.of(x) for x in row] for row in entries]
        self.rows = len(self.entries)
        self.cols = len(self.entries[0]) if self.rows else 0
        if any(len(r) != self.cols for r in self.entries):
            raise ValueError("ragged rows")

    @staticmethod
    def identity(n: int) -> "ExactMatrix":
        return ExactMatrix(
            [[1 if i == j else 0 for j in range(n)] for i in range(n)]
        )

    @staticmethod
    def zero(rows: int, cols: int) -> "ExactMatrix":
        return ExactMatrix([[0] * cols for _ in range(rows)])

    def __getitem__(self, ij: Tuple[int, int]) -> Cyclo3:
        return self.entries[ij[0]][ij[1]]

    def row(self, i: int) -> Row:
        return list(self.entries[i])

    def __add__(self, other: "ExactMatrix") -> "ExactMatrix":
        if (self.rows, self.cols) != (other.rows, other.cols):
            raise ValueError("dimension mismatch")
        return ExactMatrix(
            [
                [self.entries[i][j] + other.entries[i][j] for j in range(self.cols)]
                for i in range(self.rows)
            ]
        )

    def __sub__(self, other: "ExactMatrix") -> "ExactMatrix":
        return self + other.scale(-1)

    def scale(self, c: Scalar) -> "ExactMatrix":
        cc = Cyclo3.of(c)
        return ExactMatrix(
            [[x * cc for x in row] for row in self.entries]
        )

    def __matmul__(self, other: "ExactMatrix") -> "ExactMatrix":
        if self.cols != other.rows:
            raise ValueError("dimension mismatch")
        out = []
        for i in range(self.rows):
            ri = self.entries[i]
            out.append(
                [
                    sum(
                        (ri[k] * other.entries[k][j] for k in range(self.cols)),
                        Cyclo3.of(0),
                    )
                    for j in range(other.cols)
                ]
            )
        return ExactMatrix(out)

    def apply(self, v: Sequence[Scalar]) -> List[Cyclo3]:
        if len(v) != self.cols:
            raise ValueError("dimension mismatch")
        vv = [Cyclo3.of(x) for x in v]
        return [
            sum((row[k] * vv[k] for k in range(self.cols)), Cyclo3.of(0))
            for row in self.entries
        ]

    def transpose(self) -> "ExactMatrix":
        return ExactMatrix(
            [[self.entries[i][j] for i in range(self.rows)] for j in range(self.cols)]
        )

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, ExactMatrix):
            return NotImplemented
        return self.entries == other.entries

    def is_rational(self) -> bool:
        return all(x.is_rational() for row in self.entries for x in row)

    def to_numpy(self) -> np.ndarray:
        return np.array(
            [[x.to_complex() for x in row] for row in self.entries], dtype=complex
        )

    def rref(self) -> Tuple["ExactMatrix", List[int]]:
        """Reduced row echelon form and pivot column indices."""
        m = [list(row) for row in self.entries]
        pivots: List[int] = []
        r = 0
        for c in range(self.cols):
            pivot = next((i for i in range(r, self.rows) if m[i][c]), None)
            if pivot is None:
                continue
            m[r], m[pivot] = m[pivot], m[r]
            inv = m[r][c].inverse()
            m[r] = [x * inv for x in m[r]]
            for i in range(self.rows):
                if i != r and m[i][c]:
                    f = m[i][c]
                    m[i] = [x - f * y for x, y in zip(m[i], m[r])]
            pivots.append(c)
            r += 1
            if r == self.rows:
                break
        return ExactMatrix(m), pivots

    def rank(self) -> int:
        return len(self.rref()[1])

    def det(self) -> Cyclo3:
        if self.rows != self.cols:
            raise ValueError("determinant of non-square matrix")
        m = [list(row) for row in self.entries]
        det = Cyclo3.of(1)
        for c in range(self.cols):
            pivot = next((i for i in range(c, self.rows) if m[i][c]), None)
            if pivot is None:
                return Cyclo3.of(0)
            if pivot != c:
                m[c], m[pivot] = m[pivot], m[c]
                det = -det
            det = det * m[c][c]
            inv = m[c][c].inverse()
            for i in range(c + 1, self.rows):
                if m[i][c]:
                    f = m[i][c] * inv
                    m[i] = [x - f * y for x, y in zip(m[i], m[c])]
        return det

    def inverse(self) -> "ExactMatrix":
        if self.rows != self.cols:
            raise ValueError("inverse of non-square matrix")
        n = self.rows
        aug = ExactMatrix(
            [
                self.row(i) + [Cyclo3.of(1 if j == i else 0) for j in range(n)]
                for i in range(n)
            ]
        )
        red, pivots = aug.rref()
        if pivots[:n] != list(range(n)):
            raise ValueError("matrix is singular")
        return ExactMatrix([red.row(i)[n:] for i in range(n)])


def solve_linear(
    a: ExactMatrix, b: Sequence[Scalar]
) -> Optional[Tuple[List[Cyclo3], List[List[Cyclo3]]]]:
    """Solve a x = b exactly.

    Returns (particular solution, kernel basis), or None when inconsistent.
    """
    if len(b) != a.rows:
        raise ValueError("dimension mismatch")
    aug = ExactMatrix([a.row(i) + [b[i]] for i in range(a.rows)])
    red, pivots = aug.rref()
    if a.cols in pivots:
        return None
    x = [Cyclo3.of(0)] * a.cols
    for r, c in enumerate(pivots):
        x[c] = red[r, a.cols]
    return x, kernel(a)


def kernel(a: ExactMatrix) -> List[List[Cyclo3]]:
    """Exact basis of the null space; len + rank = cols."""
    red, pivots = a.rref()
    free = [c for c in range(a.cols) if c not in pivots]
    basis = []
    for f in free:
        v = [Cyclo3.of(0)] * a.cols
        v[f] = Cyclo3.of(1)
        for r, c in enumerate(pivots):
            v[c] = -red[r, f]
        basis.append(v)
    return basis


class ResidualExceeded(Exception):
    """float_eigen verification failed: input ill-conditioned or defective."""


def float_eigen(
    a: ExactMatrix, tol: Q = Q(1, 10**9)
) -> List[Tuple[complex, np.ndarray]]:
    """Approximate eigenpairs of a square exact matrix.

    Eigenvalues are clustered with gap threshold tol and every eigenvector is
    residual-checked against the exact matrix (evaluated in floats); callers
    must re-verify any integer or rational they round from the output.
    """
    if a.rows != a.cols:
        raise ValueError("eigen-decomposition of non-square matrix")
    mat = a.to_numpy()
    tol_f = float(tol)
    vals, vecs = np.linalg.eig(mat)
    # a defective matrix yields a (nearly) singular eigenvector basis
    if np.linalg.cond(vecs) > 1.0 / tol_f:
        raise ResidualExceeded("eigenvector basis is numerically singular")
    pairs = []
    for k in range(a.rows):
        v = vecs[:, k]
        lam = vals[k]
        resid = np.linalg.norm(mat @ v - lam * v)
        if resid >= tol_f * max(np.linalg.norm(v), 1e-300):
            raise ResidualExceeded(f"residual exceeded: {resid}")
        pairs.append((lam, v))
    # cluster eigenvalues closer than tol to a common representative
    reps: List[complex] = []
    clustered = []
    for lam, v in pairs:
        rep = next((r for r in reps if abs(r - lam) < tol_f), None)
        if rep is None:
            reps.append(lam)
            rep = lam
        clustered.append((rep, v))
    return clustered


def eigenvalues_clustered(a: ExactMatrix, tol: Q = Q(1, 10**9)) -> List[complex]:
    """Distinct clustered eigenvalues of a, in deterministic order."""
    seen: List[complex] = []
    for lam, _ in float_eigen(a, tol):
        if not any(abs(lam - s) < float(tol) for s in seen):
            seen.append(lam)
    return sorted(seen, key=lambda z: (round(z.real, 9), round(z.imag, 9)))
