"""Finite encodings of the Z^n-graded modules arising from monomial localization.

A module here is *straight*: its graded piece at a multidegree a in Z^n
depends only on the negativity pattern of a (the set of coordinates with
a_i < 0), and multiplication by x_i is the identity whenever it does not
change the pattern.  The complete data is one finite-dimensional F_p
space per pattern together with, for each i in a pattern N, a transition
matrix t_i[N] : space(N) -> space(N \\ {i}) realizing multiplication by
x_i across the wall a_i = -1.  Transitions across different walls must
commute.

Localizations of the polynomial ring at squarefree monomials are of this
form, and the class is closed under direct sums, further localization,
and kernels/cokernels of pattern-respecting maps.  These are exactly the
operations the Cech pipeline performs, which is what keeps iterated local
cohomology of monomial ideals finitely computable.

Patterns are ``frozenset`` instances over 0-indexed variables.  The
infinite value of ``hilbert_dimension`` is reported as ``math.inf``
(exported as ``INFINITE``).
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from typing import Iterable, Mapping, Sequence

from .errors import EmptyGenerator, InvalidModule, RingMismatch
from .fp import FpMatrix, RingSpec, binom_profile

__all__ = [
    "Pattern",
    "PatternModule",
    "MonomialIdeal",
    "INFINITE",
    "all_patterns",
    "pattern_of",
    "localized_ring",
    "ring_module",
    "zero_module",
    "direct_sum",
    "direct_sum_many",
    "localize",
    "dim_at",
    "hilbert_dimension",
    "is_zero_dimensional",
    "maximal_ideal",
]

Pattern = frozenset

INFINITE = math.inf


def all_patterns(n: int) -> list[Pattern]:
    """All subsets of {0..n-1} in the fixed order (size, then lexicographic)."""
    out = []
    for size in range(n + 1):
        for combo in itertools.combinations(range(n), size):
            out.append(frozenset(combo))
    return out


def pattern_of(a: Sequence[int]) -> Pattern:
    """Negativity pattern of a multidegree: the coordinates that are < 0."""
    return frozenset(i for i, ai in enumerate(a) if ai < 0)


def _pattern_key(N: Pattern) -> tuple:
    return (len(N), tuple(sorted(N)))


@dataclass(frozen=True)
class PatternModule:
    """A straight Z^n-graded module: spaces per pattern plus transitions.

    ``spaces`` maps each pattern to the dimension of its F_p space;
    ``transitions`` maps (N, i) with i in N to the matrix of
    multiplication by x_i from space(N) to space(N \\ {i}).  Missing
    entries are normalized to zero; every constructed module is validated
    for shape consistency and commuting transition squares.
    """

    ring: RingSpec
    spaces: Mapping[Pattern, int]
    transitions: Mapping[tuple[Pattern, int], FpMatrix]

    def __post_init__(self) -> None:
        n, p = self.ring.n, self.ring.p
        patterns = all_patterns(n)
        spaces: dict[Pattern, int] = {}
        for N in patterns:
            d = int(self.spaces.get(N, 0))
            if d < 0:
                raise InvalidModule(f"negative dimension at pattern {sorted(N)}")
            spaces[N] = d
        transitions: dict[tuple[Pattern, int], FpMatrix] = {}
        for N in patterns:
            for i in sorted(N):
                t = self.transitions.get((N, i))
                target = spaces[N - {i}]
                source = spaces[N]
                if t is None:
                    t = FpMatrix.zeros(target, source, p)
                if t.p != p:
                    raise InvalidModule(f"transition at ({sorted(N)}, {i}) has wrong characteristic")
                if (t.rows, t.cols) != (target, source):
                    raise InvalidModule(
                        f"transition at ({sorted(N)}, {i}) has shape {(t.rows, t.cols)},"
                        f" expected {(target, source)}"
                    )
                transitions[(N, i)] = t
        object.__setattr__(self, "spaces", spaces)
        object.__setattr__(self, "transitions", transitions)
        for N in patterns:
            for i, j in itertools.combinations(sorted(N), 2):
                left = transitions[(N - {i}, j)] @ transitions[(N, i)]
                right = transitions[(N - {j}, i)] @ transitions[(N, j)]
                if left != right:
                    raise InvalidModule(
                        f"transitions out of pattern {sorted(N)} do not commute (walls {i}, {j})"
                    )

    def space(self, N: Iterable[int]) -> int:
        return self.spaces[frozenset(N)]

    def transition(self, N: Iterable[int], i: int) -> FpMatrix:
        return self.transitions[(frozenset(N), i)]

    def is_zero(self) -> bool:
        return all(d == 0 for d in self.spaces.values())

    def full_pattern(self) -> Pattern:
        return frozenset(range(self.ring.n))


def zero_module(ring: RingSpec) -> PatternModule:
    return PatternModule(ring, {}, {})


def localized_ring(ring: RingSpec, W: Iterable[int]) -> PatternModule:
    """The ring with the variables in W inverted, in pattern form.

    space(N) is 1-dimensional exactly when N is contained in W, and all
    transitions between nonzero spaces are the 1x1 identity.
    """
    Wf = frozenset(W)
    if not Wf <= frozenset(range(ring.n)):
        raise ValueError(f"W={sorted(Wf)} is not a subset of the variable set")
    one = FpMatrix.identity(1, ring.p)
    spaces = {N: (1 if N <= Wf else 0) for N in all_patterns(ring.n)}
    transitions = {}
    for N in all_patterns(ring.n):
        if N and N <= Wf:
            for i in N:
                transitions[(N, i)] = one
    return PatternModule(ring, spaces, transitions)


def ring_module(ring: RingSpec) -> PatternModule:
    """The polynomial ring itself (nothing inverted)."""
    return localized_ring(ring, frozenset())


def direct_sum(A: PatternModule, B: PatternModule) -> PatternModule:
    return direct_sum_many(A.ring, [A, B])


def direct_sum_many(ring: RingSpec, mods: Sequence[PatternModule]) -> PatternModule:
    """Patternwise block sum; transitions become block diagonal."""
    import numpy as np

    for M in mods:
        if M.ring != ring:
            raise RingMismatch("direct sum of modules over different rings")
    p = ring.p
    spaces = {N: sum(M.spaces[N] for M in mods) for N in all_patterns(ring.n)}
    transitions: dict[tuple[Pattern, int], FpMatrix] = {}
    for N in all_patterns(ring.n):
        for i in sorted(N):
            rows = spaces[N - {i}]
            cols = spaces[N]
            out = np.zeros((rows, cols), dtype=np.int64)
            r = c = 0
            for M in mods:
                t = M.transitions[(N, i)]
                out[r : r + t.rows, c : c + t.cols] = t.data
                r += t.rows
                c += t.cols
            transitions[(N, i)] = FpMatrix(out, p)
    return PatternModule(ring, spaces, transitions)


def localize(M: PatternModule, V: Iterable[int]) -> PatternModule:
    """Invert the variables in V.

    The localized piece at pattern N is the original piece at N \\ V: on
    the inverted coordinates the negative wall disappears, so crossing it
    becomes the identity, while transitions across the remaining walls
    are inherited unchanged.
    """
    Vf = frozenset(V)
    if not Vf:
        return M
    ring = M.ring
    spaces = {N: M.spaces[N - Vf] for N in all_patterns(ring.n)}
    transitions: dict[tuple[Pattern, int], FpMatrix] = {}
    for N in all_patterns(ring.n):
        for i in sorted(N):
            if i in Vf:
                transitions[(N, i)] = FpMatrix.identity(spaces[N], ring.p)
            else:
                transitions[(N, i)] = M.transitions[(N - Vf, i)]
    return PatternModule(ring, spaces, transitions)


def dim_at(M: PatternModule, a: Sequence[int]) -> int:
    """Dimension of the graded piece at a multidegree in Z^n."""
    if len(a) != M.ring.n:
        raise ValueError(f"multidegree has length {len(a)}, expected {M.ring.n}")
    return M.spaces[pattern_of(a)]


def hilbert_dimension(M: PatternModule, d: int) -> int | float:
    """Total dimension in Z-degree d, or INFINITE.

    The sum over multidegrees of total degree d is finite exactly when
    every strictly intermediate pattern (neither empty nor full) carries
    the zero space; then only the nonnegative orthant (weak compositions)
    and the strictly negative orthant contribute.
    """
    n = M.ring.n
    if any(M.spaces[N] != 0 for N in all_patterns(n) if 0 < len(N) < n):
        return INFINITE
    empty = M.spaces[frozenset()]
    full = M.spaces[frozenset(range(n))]
    return empty * binom_profile(d + n - 1, n - 1) + full * binom_profile(-d - 1, n - 1)


def is_zero_dimensional(M: PatternModule) -> bool:
    """True when the module is supported only at the maximal ideal.

    Equivalent to every localization at a single variable being zero: the
    only pattern allowed to carry a nonzero space is the full one.
    """
    full = M.full_pattern()
    return all(d == 0 for N, d in M.spaces.items() if N != full)


@dataclass(frozen=True)
class MonomialIdeal:
    """A monomial ideal given by exponent vectors of its generators."""

    ring: RingSpec
    generators: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        gens = tuple(tuple(int(e) for e in g) for g in self.generators)
        for idx, g in enumerate(gens):
            if len(g) != self.ring.n:
                raise ValueError(f"generator {idx} has {len(g)} exponents, expected {self.ring.n}")
            if any(e < 0 for e in g):
                raise ValueError(f"generator {idx} has a negative exponent")
            if not any(e > 0 for e in g):
                raise EmptyGenerator("empty monomial generator")
        object.__setattr__(self, "generators", gens)

    @property
    def supports(self) -> tuple[Pattern, ...]:
        return tuple(frozenset(i for i, e in enumerate(g) if e > 0) for g in self.generators)


def maximal_ideal(ring: RingSpec) -> MonomialIdeal:
    """The ideal generated by all the variables."""
    gens = tuple(tuple(1 if j == i else 0 for j in range(ring.n)) for i in range(ring.n))
    return MonomialIdeal(ring, gens)
