"""Concrete adjacency matrices, a deterministic eigensolver, exact
characteristic polynomials, and the graph6 codec.

These routes are deliberately independent of the spectrum calculus so they
can cross-check it: the eigensolver runs cyclic Jacobi rotations on the
realized Laplacian, and an integer eigenvalue multiset can be certified
exactly against the characteristic polynomial computed in integer
arithmetic.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

import numpy as np

from .expr import Complement, Complete, GraphExpr, Join, Repeat, Union, order

__all__ = [
    "DenseGraph",
    "GraphTooLargeError",
    "Graph6Error",
    "JacobiConvergenceError",
    "IntPolynomial",
    "DEFAULT_SIZE_CAP",
    "GRAPH6_HEADER",
    "realize",
    "laplacian_matrix",
    "symmetric_eigenvalues",
    "charpoly_exact",
    "certify_integer_spectrum",
    "graph6_decode",
    "graph6_encode",
    "iter_graph6",
]

DEFAULT_SIZE_CAP = 4096

GRAPH6_HEADER = ">>graph6<<"


class GraphTooLargeError(ValueError):
    """Expression order beyond the realization size cap."""


class Graph6Error(ValueError):
    """Malformed graph6 record."""


class JacobiConvergenceError(RuntimeError):
    """Jacobi sweeps exhausted before the off-diagonal norm fell below tol."""

    def __init__(self, residual: float):
        super().__init__(f"Jacobi iteration did not converge; off-diagonal norm {residual:.3e}")
        self.residual = residual


# --- dense graphs ---------------------------------------------------------


class DenseGraph:
    """Symmetric 0/1 adjacency matrix with zero diagonal."""

    def __init__(self, adj):
        a = np.asarray(adj)
        if a.ndim != 2 or a.shape[0] != a.shape[1]:
            raise ValueError("adjacency must be a square matrix")
        if a.size:
            if not np.isin(a, (0, 1)).all():
                raise ValueError("adjacency entries must be 0 or 1")
            if np.diagonal(a).any():
                raise ValueError("adjacency diagonal must be zero")
            if not np.array_equal(a, a.T):
                raise ValueError("adjacency must be symmetric")
        self.adj = a.astype(np.uint8)
        self.n = int(a.shape[0])

    @classmethod
    def complete(cls, n: int) -> "DenseGraph":
        a = np.ones((n, n), dtype=np.uint8)
        np.fill_diagonal(a, 0)
        return cls(a)

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> "DenseGraph":
        a = np.zeros((n, n), dtype=np.uint8)
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n) or u == v:
                raise ValueError(f"bad edge ({u}, {v}) for order {n}")
            a[u, v] = a[v, u] = 1
        return cls(a)

    def edge_count(self) -> int:
        return int(self.adj.sum()) // 2

    def union(self, other: "DenseGraph") -> "DenseGraph":
        n1, n2 = self.n, other.n
        a = np.zeros((n1 + n2, n1 + n2), dtype=np.uint8)
        a[:n1, :n1] = self.adj
        a[n1:, n1:] = other.adj
        return DenseGraph(a)

    def join(self, other: "DenseGraph") -> "DenseGraph":
        n1 = self.n
        combined = self.union(other)
        combined.adj[:n1, n1:] = 1
        combined.adj[n1:, :n1] = 1
        return DenseGraph(combined.adj)

    def complement(self) -> "DenseGraph":
        a = (1 - self.adj).astype(np.uint8)
        np.fill_diagonal(a, 0)
        return DenseGraph(a)

    def repeat(self, m: int) -> "DenseGraph":
        if m < 1:
            raise ValueError("repetition count must be at least 1")
        return DenseGraph(np.kron(np.eye(m, dtype=np.uint8), self.adj))

    def __eq__(self, other) -> bool:
        if not isinstance(other, DenseGraph):
            return NotImplemented
        return self.n == other.n and np.array_equal(self.adj, other.adj)

    def __repr__(self) -> str:
        return f"DenseGraph(n={self.n}, m={self.edge_count()})"


def realize(expr: GraphExpr, size_cap: int = DEFAULT_SIZE_CAP) -> DenseGraph:
    """Adjacency-matrix realization of an expression."""
    n = order(expr)
    if n > size_cap:
        raise GraphTooLargeError(f"expression order {n} exceeds the size cap {size_cap}")
    return _realize(expr)


def _realize(expr: GraphExpr) -> DenseGraph:
    match expr:
        case Complete(n):
            return DenseGraph.complete(n)
        case Union(left, right):
            return _realize(left).union(_realize(right))
        case Join(left, right):
            return _realize(left).join(_realize(right))
        case Repeat(m, inner):
            return _realize(inner).repeat(m)
        case Complement(inner):
            return _realize(inner).complement()
    raise TypeError(f"not a GraphExpr: {expr!r}")


def laplacian_matrix(g: DenseGraph) -> np.ndarray:
    """Degree diagonal minus adjacency; every row sums to zero."""
    adj = g.adj.astype(np.int64)
    return np.diag(adj.sum(axis=1)) - adj


# --- numeric eigensolver -----------------------------------------------------


def _offdiagonal_norm(a: np.ndarray) -> float:
    off = a - np.diag(np.diagonal(a))
    return float(np.sqrt((off * off).sum()))


def symmetric_eigenvalues(matrix, tol: float = 1e-12, max_sweeps: int = 100) -> np.ndarray:
    """All eigenvalues of a symmetric matrix, ascending, by cyclic Jacobi.

    Sweeps run over the fixed pivot order (0,1), (0,2), ..., (n-2,n-1) until
    the off-diagonal Frobenius norm drops below ``tol``; the pivot order makes
    the output reproducible bit-for-bit on one platform.  Raises
    ``JacobiConvergenceError`` with the residual after ``max_sweeps`` sweeps.
    """
    a = np.array(matrix, dtype=np.float64)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise ValueError("matrix must be square")
    if not np.array_equal(a, a.T):
        raise ValueError("matrix must be exactly symmetric")
    n = a.shape[0]
    if n < 2:
        return np.diagonal(a).copy()
    converged = False
    for _ in range(max_sweeps):
        if _offdiagonal_norm(a) < tol:
            converged = True
            break
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = a[p, q]
                if apq == 0.0:
                    continue
                scale = abs(a[p, p]) + abs(a[q, q])
                if scale + 100.0 * abs(apq) == scale:
                    # Negligible against the diagonal; rotating would overflow tau.
                    a[p, q] = a[q, p] = 0.0
                    continue
                tau = (a[q, q] - a[p, p]) / (2.0 * apq)
                if tau >= 0.0:
                    t = 1.0 / (tau + math.sqrt(1.0 + tau * tau))
                else:
                    t = -1.0 / (-tau + math.sqrt(1.0 + tau * tau))
                c = 1.0 / math.sqrt(1.0 + t * t)
                s = t * c
                row_p = c * a[p, :] - s * a[q, :]
                row_q = s * a[p, :] + c * a[q, :]
                a[p, :] = row_p
                a[q, :] = row_q
                col_p = c * a[:, p] - s * a[:, q]
                col_q = s * a[:, p] + c * a[:, q]
                a[:, p] = col_p
                a[:, q] = col_q
                a[p, q] = a[q, p] = 0.0
    if not converged:
        residual = _offdiagonal_norm(a)
        if residual >= tol:
            raise JacobiConvergenceError(residual)
    return np.sort(np.diagonal(a).copy())


# --- exact characteristic polynomial -------------------------------------------


@dataclass(frozen=True)
class IntPolynomial:
    """Integer polynomial; ``coeffs[k]`` is the coefficient of ``x**k``."""

    coeffs: tuple[int, ...]

    def __post_init__(self):
        if not self.coeffs:
            raise ValueError("a polynomial needs at least one coefficient")
        trimmed = self.coeffs
        while len(trimmed) > 1 and trimmed[-1] == 0:
            trimmed = trimmed[:-1]
        object.__setattr__(self, "coeffs", tuple(int(c) for c in trimmed))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @classmethod
    def from_roots(cls, roots: Iterable[int]) -> "IntPolynomial":
        """Monic product of ``x - r`` over the given integer roots."""
        coeffs = [1]
        for root in roots:
            r = int(root)
            nxt = [0] * (len(coeffs) + 1)
            for k, c in enumerate(coeffs):
                nxt[k + 1] += c
                nxt[k] -= r * c
            coeffs = nxt
        return cls(tuple(coeffs))

    def __call__(self, x):
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def __str__(self) -> str:
        terms = []
        for k in range(self.degree, -1, -1):
            c = self.coeffs[k]
            if c == 0 and self.degree > 0:
                continue
            var = "" if k == 0 else ("x" if k == 1 else f"x^{k}")
            terms.append(f"{c:+d}{var}" if var else f"{c:+d}")
        return " ".join(terms) if terms else "0"


def _as_int_rows(matrix) -> list[list[int]]:
    a = np.asarray(matrix)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise ValueError("matrix must be square")
    rows = []
    for row in a.tolist():
        out = []
        for x in row:
            xi = int(x)
            if xi != x:
                raise ValueError("matrix entries must be integers")
            out.append(xi)
        rows.append(out)
    return rows


def _int_matmul(a: list[list[int]], b: list[list[int]]) -> list[list[int]]:
    n = len(a)
    bt = list(zip(*b))
    return [[sum(x * y for x, y in zip(row, col)) for col in bt] for row in a]


def charpoly_exact(matrix) -> IntPolynomial:
    """``det(xI - M)`` with exact integer coefficients.

    Faddeev-LeVerrier recurrence over Python integers; the per-step division
    by k is exact for integer input, and that is asserted.
    """
    rows = _as_int_rows(matrix)
    n = len(rows)
    if n == 0:
        return IntPolynomial((1,))
    coeffs = [0] * (n + 1)
    coeffs[n] = 1
    aux = [[1 if i == j else 0 for j in range(n)] for i in range(n)]
    for k in range(1, n + 1):
        am = _int_matmul(rows, aux)
        t = sum(am[i][i] for i in range(n))
        if t % k:
            raise ArithmeticError("non-integer coefficient; input was not an integer matrix")
        ck = -(t // k)
        coeffs[n - k] = ck
        if k < n:
            for i in range(n):
                am[i][i] += ck
            aux = am
    return IntPolynomial(tuple(coeffs))


def certify_integer_spectrum(matrix, candidate: Sequence[int]) -> bool:
    """Whether the candidate integer multiset is exactly the spectrum of ``matrix``.

    Compares ``charpoly_exact(matrix)`` with the monic product of ``x - k``
    coefficientwise; a wrong candidate is rejected, never silently accepted.
    """
    a = np.asarray(matrix)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise ValueError("matrix must be square")
    cand = []
    for k in candidate:
        ki = int(k)
        if ki != k:
            raise ValueError("candidate eigenvalues must be integers")
        cand.append(ki)
    if len(cand) != a.shape[0]:
        raise ValueError(f"candidate multiset has {len(cand)} values for order {a.shape[0]}")
    return charpoly_exact(matrix) == IntPolynomial.from_roots(cand)


# --- graph6 codec -----------------------------------------------------------


def graph6_decode(text: str) -> DenseGraph:
    """Decode one graph6 record (single-byte order form, n <= 62)."""
    s = text.strip()
    if not s:
        raise Graph6Error("empty graph6 record")
    try:
        data = s.encode("ascii")
    except UnicodeEncodeError as exc:
        raise Graph6Error("non-ASCII character in graph6 record") from exc
    head = data[0]
    if head == 126:
        raise Graph6Error("multi-byte order encoding (n > 62) is not supported")
    if not 63 <= head <= 126:
        raise Graph6Error(f"malformed graph6 byte {head} (must be 63..126)")
    n = head - 63
    nbits = n * (n - 1) // 2
    need = (nbits + 5) // 6
    payload = data[1:]
    if len(payload) < need:
        raise Graph6Error(f"truncated graph6 payload: expected {need} bytes, found {len(payload)}")
    if len(payload) > need:
        raise Graph6Error(f"trailing bytes after graph6 payload of {need} bytes")
    adj = np.zeros((n, n), dtype=np.uint8)
    pairs = [(i, j) for j in range(1, n) for i in range(j)]
    bit = 0
    for byte in payload:
        value = byte - 63
        if not 0 <= value <= 63:
            raise Graph6Error(f"malformed graph6 byte {byte} (must be 63..126)")
        for shift in (5, 4, 3, 2, 1, 0):
            if bit < nbits and (value >> shift) & 1:
                i, j = pairs[bit]
                adj[i, j] = adj[j, i] = 1
            bit += 1
    return DenseGraph(adj)


def graph6_encode(g: DenseGraph) -> str:
    """Encode a graph as one graph6 record (requires n <= 62)."""
    if g.n > 62:
        raise Graph6Error("graph6 single-byte order encoding supports n <= 62 only")
    out = [chr(63 + g.n)]
    value = 0
    filled = 0
    for j in range(1, g.n):
        for i in range(j):
            value = (value << 1) | int(g.adj[i, j])
            filled += 1
            if filled == 6:
                out.append(chr(63 + value))
                value = 0
                filled = 0
    if filled:
        out.append(chr(63 + (value << (6 - filled))))
    return "".join(out)


def iter_graph6(lines: Iterable[str]) -> Iterator[tuple[int, str]]:
    """Yield ``(line_number, record)`` pairs from graph6 text lines.

    Blank lines are skipped and the optional ``>>graph6<<`` header is
    tolerated, either alone on a line or prefixed to the first record.
    """
    for lineno, raw in enumerate(lines, start=1):
        s = raw.strip()
        if s.startswith(GRAPH6_HEADER):
            s = s[len(GRAPH6_HEADER):].strip()
        if not s:
            continue
        yield lineno, s
