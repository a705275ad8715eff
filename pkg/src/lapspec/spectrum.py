"""Exact Laplacian spectra of graph expressions.

Spectra compose structurally, so no matrix is ever diagonalized here:

* a disjoint union concatenates the two eigenvalue multisets;
* the complement of an n-vertex graph drops a single zero and reflects
  every remaining eigenvalue ``mu`` to ``n - mu``;
* a join keeps one zero, shifts the remaining eigenvalues of each side by
  the other side's order, and appends ``n1 + n2``.

Eigenvalues are exact rationals.  Everything an expression can denote is in
fact Laplacian integral, but the energy computation needs a rational mean
anyway and scanned certificates reuse the same type.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable

from .expr import Complement, Complete, GraphExpr, Join, Repeat, Union

__all__ = [
    "Spectrum",
    "spectrum_of",
    "spectrum_of_complete",
    "union_spectra",
    "complement_spectrum",
    "join_spectra",
    "multiplicity_of_zero",
]

Rational = Fraction | int


@dataclass(frozen=True)
class Spectrum:
    """Multiset of Laplacian eigenvalues of a graph on ``n`` vertices.

    ``entries`` holds ``(eigenvalue, multiplicity)`` pairs sorted ascending
    with distinct eigenvalues (equal values merged).
    """

    n: int
    entries: tuple[tuple[Fraction, int], ...]

    def __post_init__(self):
        if self.n < 1:
            raise ValueError("a spectrum needs a positive order")
        total = 0
        prev = None
        for value, mult in self.entries:
            if mult < 1:
                raise ValueError("multiplicities must be positive")
            if prev is not None and value <= prev:
                raise ValueError("entries must be sorted with distinct eigenvalues")
            prev = value
            total += mult
        if total != self.n:
            raise ValueError(f"multiplicities sum to {total}, expected the order {self.n}")
        if self.entries[0][0] != 0:
            raise ValueError("the smallest Laplacian eigenvalue must be exactly 0")
        if self.entries[-1][0] > self.n:
            raise ValueError("Laplacian eigenvalues cannot exceed the order")

    @classmethod
    def from_pairs(cls, n: int, pairs: Iterable[tuple[Rational, int]]) -> "Spectrum":
        """Build a spectrum from possibly unsorted, possibly duplicated pairs.

        Pairs with multiplicity 0 are dropped; equal eigenvalues are merged.
        """
        acc: dict[Fraction, int] = {}
        for value, mult in pairs:
            if mult < 0:
                raise ValueError("multiplicities cannot be negative")
            if mult == 0:
                continue
            v = Fraction(value)
            acc[v] = acc.get(v, 0) + mult
        return cls(n, tuple(sorted(acc.items())))

    def trace(self) -> Fraction:
        """Sum of all eigenvalues with multiplicity (equals twice the edge count)."""
        return sum((value * mult for value, mult in self.entries), Fraction(0))

    def multiplicity(self, value: Rational) -> int:
        v = Fraction(value)
        for entry_value, mult in self.entries:
            if entry_value == v:
                return mult
        return 0

    def expanded(self) -> list[Fraction]:
        """All ``n`` eigenvalues as a flat ascending list."""
        return [value for value, mult in self.entries for _ in range(mult)]

    def to_json_obj(self) -> dict:
        return {
            "n": self.n,
            "eigs": [[v.numerator, v.denominator, m] for v, m in self.entries],
        }

    @classmethod
    def from_json_obj(cls, obj: dict) -> "Spectrum":
        return cls.from_pairs(obj["n"], [(Fraction(p, q), m) for p, q, m in obj["eigs"]])


def spectrum_of_complete(n: int) -> Spectrum:
    """Spectrum of the complete graph: one 0 and ``n`` with multiplicity n-1."""
    if n == 1:
        return Spectrum.from_pairs(1, [(0, 1)])
    return Spectrum.from_pairs(n, [(0, 1), (n, n - 1)])


def union_spectra(s1: Spectrum, s2: Spectrum) -> Spectrum:
    """Spectrum of a disjoint union: the multiset union of the operands."""
    return Spectrum.from_pairs(s1.n + s2.n, list(s1.entries) + list(s2.entries))


def complement_spectrum(s: Spectrum) -> Spectrum:
    """Spectrum of the complement on the same vertex set.

    Exactly one zero is removed (no matter how many the graph has), every
    remaining eigenvalue ``mu`` reflects to ``n - mu``, and a fresh zero is
    added back.  Applied twice this is the identity.
    """
    n = s.n
    pairs: list[tuple[Rational, int]] = [(Fraction(0), 1)]
    for value, mult in s.entries:
        remaining = mult - 1 if value == 0 else mult
        if remaining:
            pairs.append((n - value, remaining))
    return Spectrum.from_pairs(n, pairs)


def join_spectra(s1: Spectrum, s2: Spectrum) -> Spectrum:
    """Spectrum of a join of graphs on ``n1`` and ``n2`` vertices.

    One zero survives; the other eigenvalues of each side shift up by the
    opposite side's order; ``n1 + n2`` joins the multiset once.
    """
    n1, n2 = s1.n, s2.n
    pairs: list[tuple[Rational, int]] = [(Fraction(0), 1), (Fraction(n1 + n2), 1)]
    for value, mult in s1.entries:
        remaining = mult - 1 if value == 0 else mult
        if remaining:
            pairs.append((value + n2, remaining))
    for value, mult in s2.entries:
        remaining = mult - 1 if value == 0 else mult
        if remaining:
            pairs.append((value + n1, remaining))
    return Spectrum.from_pairs(n1 + n2, pairs)


def spectrum_of(expr: GraphExpr) -> Spectrum:
    """Exact Laplacian spectrum of the graph an expression denotes."""
    match expr:
        case Complete(n):
            return spectrum_of_complete(n)
        case Union(left, right):
            return union_spectra(spectrum_of(left), spectrum_of(right))
        case Join(left, right):
            return join_spectra(spectrum_of(left), spectrum_of(right))
        case Repeat(m, inner):
            # m-fold union scales every multiplicity; avoids m-1 recursions.
            s = spectrum_of(inner)
            return Spectrum.from_pairs(m * s.n, [(v, m * k) for v, k in s.entries])
        case Complement(inner):
            return complement_spectrum(spectrum_of(inner))
    raise TypeError(f"not a GraphExpr: {expr!r}")


def multiplicity_of_zero(s: Spectrum) -> int:
    """Multiplicity of eigenvalue 0, i.e. the number of connected components."""
    return s.multiplicity(0)
