"""Mean-centered matrix energies and the L-borderenergetic predicate.

The Laplacian energy of a graph is the sum of ``|mu - dbar|`` over its
Laplacian eigenvalues, where ``dbar`` is the average vertex degree.  For the
complete graph this equals ``2n - 2``; a graph whose Laplacian energy hits
that value exactly is called L-borderenergetic.

Everything here is exact rational arithmetic: there is no epsilon anywhere
in this module, because the predicate is an exact equality.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable

from .spectrum import Rational, Spectrum, spectrum_of_complete

__all__ = [
    "EnergyReport",
    "BorderenergeticVerdict",
    "m_energy",
    "laplacian_energy",
    "is_l_borderenergetic",
    "is_cospectral",
    "energy_report",
]


def m_energy(entries: Iterable[tuple[Rational, int]], trace: Rational, n: int) -> Fraction:
    """Sum of ``|eigenvalue - trace/n|`` over a multiset of ``n`` eigenvalues.

    ``entries`` is any iterable of ``(value, multiplicity)`` pairs; the caller
    guarantees that ``trace`` equals the sum of the eigenvalues.
    """
    if n == 0:
        raise ValueError("the eigenvalue multiset must not be empty")
    pairs = [(Fraction(value), int(mult)) for value, mult in entries]
    total = sum(mult for _, mult in pairs)
    if total != n:
        raise ValueError(f"multiset carries {total} eigenvalues, expected {n}")
    center = Fraction(trace) / n
    return sum((abs(value - center) * mult for value, mult in pairs), Fraction(0))


def laplacian_energy(s: Spectrum) -> Fraction:
    """Exact Laplacian energy; the mean is the spectrum trace over the order."""
    return m_energy(s.entries, s.trace(), s.n)


@dataclass(frozen=True)
class BorderenergeticVerdict:
    """Outcome of the L-borderenergetic test, with the compared quantities."""

    is_l_borderenergetic: bool
    laplacian_energy: Fraction
    target: int

    def __bool__(self) -> bool:
        return self.is_l_borderenergetic


def is_l_borderenergetic(s: Spectrum) -> BorderenergeticVerdict:
    """Whether the Laplacian energy equals ``2n - 2`` exactly."""
    le = laplacian_energy(s)
    target = 2 * s.n - 2
    return BorderenergeticVerdict(le == target, le, target)


def is_cospectral(s1: Spectrum, s2: Spectrum) -> bool:
    """Whether two spectra are identical multisets on the same order."""
    return s1.n == s2.n and s1.entries == s2.entries


@dataclass(frozen=True)
class EnergyReport:
    """Order, size, average degree, Laplacian energy, and the verdict."""

    n: int
    m: int
    avg_degree: Fraction
    laplacian_energy: Fraction
    target: int
    is_l_borderenergetic: bool
    is_complete: bool

    def to_json_obj(self) -> dict:
        return {
            "n": self.n,
            "m": self.m,
            "dbar": [self.avg_degree.numerator, self.avg_degree.denominator],
            "le": [self.laplacian_energy.numerator, self.laplacian_energy.denominator],
            "target": self.target,
            "borderenergetic": self.is_l_borderenergetic,
        }


def energy_report(s: Spectrum) -> EnergyReport:
    """Full report for a spectrum; the edge count is recovered from the trace."""
    trace = s.trace()
    if trace.denominator != 1 or trace.numerator % 2:
        raise ValueError("spectrum trace is not an even integer; not a Laplacian spectrum")
    verdict = is_l_borderenergetic(s)
    return EnergyReport(
        n=s.n,
        m=trace.numerator // 2,
        avg_degree=trace / s.n,
        laplacian_energy=verdict.laplacian_energy,
        target=verdict.target,
        is_l_borderenergetic=verdict.is_l_borderenergetic,
        is_complete=is_cospectral(s, spectrum_of_complete(s.n)),
    )
