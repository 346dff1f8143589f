"""Exact dense linear algebra over prime fields F_p.

Matrices are immutable, entries live in [0, p), and elimination follows a
fixed strategy (leftmost pivot column, first nonzero row) so that ranks,
kernels and every basis derived from them are reproducible run to run.
All higher layers (pattern modules, Cech cohomology, Frobenius pullbacks)
reduce to the rank / kernel / solve routines in this module.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np

from .errors import NoSolution, ZeroValuation

__all__ = [
    "RingSpec",
    "FpMatrix",
    "EchelonData",
    "reduce",
    "solve",
    "binom_profile",
    "p_adic_valuation",
    "is_prime",
    "hstack",
    "vstack",
    "block_diag",
]


def is_prime(p: int) -> bool:
    """Trial-division primality test; adequate for the field sizes used here."""
    if p < 2:
        return False
    d = 2
    while d * d <= p:
        if p % d == 0:
            return False
        d += 1
    return True


def _default_names(n: int) -> tuple[str, ...]:
    return tuple(f"x{i + 1}" for i in range(n))


@dataclass(frozen=True)
class RingSpec:
    """Ambient data of the polynomial ring F_p[x_1, ..., x_n].

    Variables are indexed 0..n-1 throughout the package; ``names`` is
    cosmetic and defaults to x1..xn.
    """

    n: int
    p: int
    names: tuple[str, ...] = ()

    def __post_init__(self) -> None:
        if self.n < 1:
            raise ValueError(f"need at least one variable, got n={self.n}")
        if not is_prime(self.p):
            raise ValueError(f"{self.p} is not prime")
        names = tuple(self.names) or _default_names(self.n)
        if len(names) != self.n:
            raise ValueError("names must match the variable count")
        if len(set(names)) != self.n:
            raise ValueError("variable names must be distinct")
        object.__setattr__(self, "names", names)

    @property
    def variables(self) -> range:
        return range(self.n)


class FpMatrix:
    """Immutable dense matrix with entries reduced modulo a prime."""

    __slots__ = ("data", "p")

    def __init__(self, data, p: int):
        arr = np.asarray(data, dtype=np.int64)
        if arr.ndim != 2:
            raise ValueError(f"matrix data must be 2-dimensional, got shape {arr.shape}")
        arr = np.mod(arr, p)
        arr.setflags(write=False)
        self.data = arr
        self.p = p

    @classmethod
    def zeros(cls, rows: int, cols: int, p: int) -> "FpMatrix":
        return cls(np.zeros((rows, cols), dtype=np.int64), p)

    @classmethod
    def identity(cls, size: int, p: int) -> "FpMatrix":
        return cls(np.eye(size, dtype=np.int64), p)

    @classmethod
    def from_columns(cls, columns: Sequence[np.ndarray], rows: int, p: int) -> "FpMatrix":
        if not columns:
            return cls.zeros(rows, 0, p)
        return cls(np.column_stack(columns), p)

    @property
    def rows(self) -> int:
        return self.data.shape[0]

    @property
    def cols(self) -> int:
        return self.data.shape[1]

    @property
    def T(self) -> "FpMatrix":
        return FpMatrix(self.data.T, self.p)

    def is_zero(self) -> bool:
        return not self.data.any()

    def is_identity(self) -> bool:
        return self.rows == self.cols and bool(np.array_equal(self.data, np.eye(self.rows, dtype=np.int64)))

    def take_columns(self, indices: Sequence[int]) -> "FpMatrix":
        return FpMatrix(self.data[:, list(indices)].reshape(self.rows, len(indices)), self.p)

    def scaled(self, c: int) -> "FpMatrix":
        return FpMatrix(self.data * (c % self.p), self.p)

    def _check_compatible(self, other: "FpMatrix") -> None:
        if self.p != other.p:
            raise ValueError(f"mixed characteristics {self.p} and {other.p}")

    def __matmul__(self, other: "FpMatrix") -> "FpMatrix":
        self._check_compatible(other)
        if self.cols != other.rows:
            raise ValueError(f"shape mismatch {self.data.shape} @ {other.data.shape}")
        k = self.cols
        p = self.p
        if k == 0:
            return FpMatrix.zeros(self.rows, other.cols, p)
        # int64 accumulation is exact as long as k * (p-1)^2 stays below 2^63
        if k * (p - 1) * (p - 1) < 2**62:
            return FpMatrix(self.data @ other.data, p)
        step = max(1, 2**62 // ((p - 1) * (p - 1)))
        acc = np.zeros((self.rows, other.cols), dtype=np.int64)
        for start in range(0, k, step):
            acc = (acc + self.data[:, start : start + step] @ other.data[start : start + step, :]) % p
        return FpMatrix(acc, p)

    def __add__(self, other: "FpMatrix") -> "FpMatrix":
        self._check_compatible(other)
        return FpMatrix(self.data + other.data, self.p)

    def __sub__(self, other: "FpMatrix") -> "FpMatrix":
        self._check_compatible(other)
        return FpMatrix(self.data - other.data, self.p)

    def __neg__(self) -> "FpMatrix":
        return FpMatrix(-self.data, self.p)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, FpMatrix):
            return NotImplemented
        return self.p == other.p and self.data.shape == other.data.shape and bool(np.array_equal(self.data, other.data))

    def __ne__(self, other: object) -> bool:
        eq = self.__eq__(other)
        return NotImplemented if eq is NotImplemented else not eq

    __hash__ = None  # type: ignore[assignment]

    def power(self, e: int) -> "FpMatrix":
        """Matrix power by square-and-multiply, reducing mod p at each step."""
        if self.rows != self.cols:
            raise ValueError("power of a non-square matrix")
        if e < 0:
            raise ValueError("negative matrix power")
        result = FpMatrix.identity(self.rows, self.p)
        base = self
        while e:
            if e & 1:
                result = result @ base
            base = base @ base
            e >>= 1
        return result

    def __repr__(self) -> str:
        return f"FpMatrix(p={self.p}, shape={self.data.shape})"


def hstack(mats: Sequence[FpMatrix], rows: int, p: int) -> FpMatrix:
    if not mats:
        return FpMatrix.zeros(rows, 0, p)
    return FpMatrix(np.hstack([m.data for m in mats]), p)


def vstack(mats: Sequence[FpMatrix], cols: int, p: int) -> FpMatrix:
    if not mats:
        return FpMatrix.zeros(0, cols, p)
    return FpMatrix(np.vstack([m.data for m in mats]), p)


def block_diag(mats: Sequence[FpMatrix], p: int) -> FpMatrix:
    rows = sum(m.rows for m in mats)
    cols = sum(m.cols for m in mats)
    out = np.zeros((rows, cols), dtype=np.int64)
    r = c = 0
    for m in mats:
        out[r : r + m.rows, c : c + m.cols] = m.data
        r += m.rows
        c += m.cols
    return FpMatrix(out, p)


@dataclass(frozen=True)
class EchelonData:
    """Result of row reduction: rank, pivot columns, kernel basis, reduced form.

    The kernel basis is stored column-wise and is itself echelonized (each
    vector monic at its leading position), so identical inputs always yield
    the identical basis.
    """

    rank: int
    pivots: tuple[int, ...]
    kernel: FpMatrix
    rref: FpMatrix


def _row_reduce(arr: np.ndarray, p: int) -> tuple[np.ndarray, list[int]]:
    a = np.array(arr, dtype=np.int64) % p
    rows, cols = a.shape
    pivots: list[int] = []
    r = 0
    for c in range(cols):
        if r == rows:
            break
        nz = np.nonzero(a[r:, c])[0]
        if nz.size == 0:
            continue
        i = r + int(nz[0])
        if i != r:
            a[[r, i]] = a[[i, r]]
        piv = int(a[r, c])
        if piv != 1:
            a[r] = (a[r] * pow(piv, p - 2, p)) % p
        hits = np.nonzero(a[:, c])[0]
        hits = hits[hits != r]
        if hits.size:
            a[hits] = (a[hits] - np.outer(a[hits, c], a[r])) % p
        pivots.append(c)
        r += 1
    return a, pivots


def reduce(A: FpMatrix, p: int | None = None) -> EchelonData:
    """Row-reduce A over F_p, returning rank, pivots, kernel basis and RREF."""
    if p is not None and p != A.p:
        raise ValueError(f"matrix lives over F_{A.p}, not F_{p}")
    p = A.p
    rref_arr, pivots = _row_reduce(A.data, p)
    pivot_set = set(pivots)
    free = [c for c in range(A.cols) if c not in pivot_set]
    raw = np.zeros((A.cols, len(free)), dtype=np.int64)
    for idx, f in enumerate(free):
        raw[f, idx] = 1
        for i, c in enumerate(pivots):
            raw[c, idx] = (-int(rref_arr[i, f])) % p
    # canonicalize: echelonize the kernel vectors so each is monic
    canon, _ = _row_reduce(raw.T, p)
    kernel = FpMatrix(canon[: len(free)].T, p)
    return EchelonData(rank=len(pivots), pivots=tuple(pivots), kernel=kernel, rref=FpMatrix(rref_arr, p))


def solve(A: FpMatrix, B: FpMatrix) -> FpMatrix:
    """Solve A @ X = B exactly over F_p.

    Returns the solution with all free variables set to zero; raises
    NoSolution when the system is inconsistent.
    """
    A._check_compatible(B)
    if A.rows != B.rows:
        raise ValueError(f"row mismatch: {A.rows} vs {B.rows}")
    p = A.p
    aug = np.hstack([A.data, B.data])
    rref_arr, pivots = _row_reduce(aug, p)
    for c in pivots:
        if c >= A.cols:
            raise NoSolution("inconsistent linear system")
    X = np.zeros((A.cols, B.cols), dtype=np.int64)
    for i, c in enumerate(pivots):
        X[c, :] = rref_arr[i, A.cols :]
    return FpMatrix(X, p)


def rank(A: FpMatrix) -> int:
    return reduce(A).rank


def binom_profile(m: int, k: int) -> int:
    """C(m, k) when m >= k >= 0, else 0.

    This is the graded dimension count behind the injective-hull profile:
    the number of monomials x^a with all a_i >= 1 and total degree m+1 in
    k+1 variables, and dually the number with a_i >= 0.
    """
    if k < 0 or m < k:
        return 0
    return math.comb(m, k)


def p_adic_valuation(m: int, p: int) -> int:
    """Largest e with p^e dividing m; m must be nonzero."""
    if m == 0:
        raise ZeroValuation("valuation of zero is undefined")
    m = abs(m)
    e = 0
    while m % p == 0:
        m //= p
        e += 1
    return e


def multidegree_iter(lo: Iterable[int], hi: Iterable[int]):
    """Iterate over integer boxes; used by demos and tests."""
    import itertools

    ranges = [range(a, b + 1) for a, b in zip(lo, hi)]
    return itertools.product(*ranges)
