"""1-periodization machinery.

Folds interval sets onto the unit torus [0, 1), counts translation
multiplicities exactly, and extracts deterministic transversals (subsets whose
integer translates tile the line with multiplicity one).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .errors import InputError, PreconditionError
from .intervals import Interval, IntervalSet, iset, normalize, rat

ZERO = Fraction(0)
ONE = Fraction(1)
HALF = Fraction(1, 2)


def sweep_weighted(
    fragments: Iterable[tuple[Fraction, Fraction, Fraction]],
    lo: Fraction,
    hi: Fraction,
) -> list[tuple[Fraction, Fraction, Fraction]]:
    """Sum weighted half-open fragments over the window [lo, hi).

    Returns (atom_lo, atom_hi, total) triples covering the window completely,
    with equal-valued adjacent atoms merged.  Exact rational arithmetic.
    """
    deltas: dict[Fraction, Fraction] = {}
    for flo, fhi, val in fragments:
        a, b = max(flo, lo), min(fhi, hi)
        if a < b:
            deltas[a] = deltas.get(a, ZERO) + val
            deltas[b] = deltas.get(b, ZERO) - val
    cuts = sorted(set(deltas) | {lo, hi})
    out: list[tuple[Fraction, Fraction, Fraction]] = []
    level = ZERO
    for a, b in zip(cuts, cuts[1:]):
        level += deltas.get(a, ZERO)
        if out and out[-1][2] == level and out[-1][1] == a:
            out[-1] = (out[-1][0], b, level)
        else:
            out.append((a, b, level))
    return out


@dataclass(frozen=True)
class TorusStep:
    """1-periodic step function represented on [0, 1) by exact breakpoints."""

    breaks: tuple[Fraction, ...]  # 0 = b_0 < ... < b_m = 1
    values: tuple[Fraction, ...]  # one value per piece, len = m

    def __post_init__(self) -> None:
        if len(self.breaks) != len(self.values) + 1:
            raise InputError("breaks/values length mismatch")
        if self.breaks[0] != 0 or self.breaks[-1] != 1:
            raise InputError("torus breakpoints must start at 0 and end at 1")
        if any(a >= b for a, b in zip(self.breaks, self.breaks[1:])):
            raise InputError("torus breakpoints must be strictly increasing")

    @classmethod
    def from_atoms(cls, atoms: Sequence[tuple[Fraction, Fraction, Fraction]]) -> "TorusStep":
        breaks = [atoms[0][0]] + [b for _, b, _ in atoms]
        values = [v for _, _, v in atoms]
        return cls(tuple(breaks), tuple(values))

    def pieces(self) -> Iterable[tuple[Fraction, Fraction, Fraction]]:
        for i, v in enumerate(self.values):
            yield self.breaks[i], self.breaks[i + 1], v

    def integral(self) -> Fraction:
        return sum((v * (b - a) for a, b, v in self.pieces()), ZERO)

    def min_value(self) -> Fraction:
        return min(self.values)

    def max_value(self) -> Fraction:
        return max(self.values)

    def is_constant(self, c) -> bool:
        c = rat(c)
        return all(v == c for v in self.values)

    def value_at(self, xi) -> Fraction:
        """Value at a point of [0, 1) (argument reduced mod 1 first)."""
        xi = rat(xi)
        xi -= math.floor(xi)
        for a, b, v in self.pieces():
            if a <= xi < b:
                return v
        raise AssertionError("unreachable: breakpoints cover [0,1)")

    def where_not(self, c) -> IntervalSet:
        """Subset of [0, 1) where the value differs from c."""
        c = rat(c)
        return normalize(Interval(a, b) for a, b, v in self.pieces() if v != c)


def _unit_fragments(pieces: Iterable[tuple[Interval, Fraction]]):
    """Cut weighted intervals at integers and reduce each cell into [0, 1)."""
    for iv, val in pieces:
        k = math.floor(iv.lo)
        while k < iv.hi:
            a = max(iv.lo, Fraction(k))
            b = min(iv.hi, Fraction(k + 1))
            if a < b:
                yield a - k, b - k, val
            k += 1


def fold_step(pieces: Iterable[tuple[Interval, Fraction]]) -> TorusStep:
    """Exact periodization sum(f(xi + k) for k in Z) of a weighted step function."""
    atoms = sweep_weighted(_unit_fragments(pieces), ZERO, ONE)
    return TorusStep.from_atoms(atoms)


def fold_multiplicity(s: IntervalSet) -> TorusStep:
    """Multiplicity m(xi) = #{k in Z : xi + k in S} on [0, 1)."""
    return fold_step((p, ONE) for p in s.parts)


def fold_to_unit(s: IntervalSet) -> IntervalSet:
    """The folded set {frac(x) : x in S} as a subset of [0, 1) (multiplicity dropped)."""
    return normalize(Interval(a, b) for a, b, _ in _unit_fragments((p, ONE) for p in s.parts))


def check_S3(s: IntervalSet) -> bool:
    """True iff the integer translates of S tile the line with multiplicity one."""
    return fold_multiplicity(s).is_constant(1)


def check_cover_r4(s: IntervalSet) -> bool:
    """True iff the integer translates of S cover the line (multiplicity >= 1)."""
    return not s.is_empty and fold_multiplicity(s).min_value() >= 1


def uncovered_witness(s: IntervalSet) -> Interval | None:
    """A sub-interval of [0, 1) whose residues S misses, or None if S covers."""
    if s.is_empty:
        return Interval(ZERO, ONE)
    for a, b, v in fold_multiplicity(s).pieces():
        if v < 1:
            return Interval(a, b)
    return None


def periodize_window(e: IntervalSet, m: int) -> IntervalSet:
    """The periodization union(E + k for k in Z) clipped to [-M, M)."""
    if m < 1:
        raise InputError("window half-width M must be a positive integer")
    window = iset((-m, m))
    copies: list[Interval] = []
    for p in e.parts:
        k_lo = math.floor(-m - p.hi) + 1
        k_hi = math.ceil(m - p.lo) - 1
        for k in range(k_lo, k_hi + 1):
            copies.append(Interval(p.lo + k, p.hi + k))
    return normalize(copies).intersect(window)


def extract_transversal(sprime: IntervalSet, prefer_window: bool = False) -> IntervalSet:
    """Pick a deterministic subset of S' whose translates tile with multiplicity one.

    Refines [0, 1) by the folded breakpoints of S'; on each atom, among the
    integers k with atom + k inside S', picks the smallest k.  With
    ``prefer_window`` the representative inside [-1/2, 1/2) is preferred when
    one exists (atoms are additionally cut at 1/2 so the preference is
    well defined).

    Raises PreconditionError naming an uncovered sub-interval of [0, 1) when
    the translates of S' fail to cover the line.
    """
    witness = uncovered_witness(sprime)
    if witness is not None:
        raise PreconditionError(
            "r4",
            f"translates of the input do not cover the line; residues {witness} are missed",
            witness=witness,
        )
    cuts = {ZERO, ONE}
    if prefer_window:
        cuts.add(HALF)
    for p in sprime.parts:
        for x in (p.lo, p.hi):
            cuts.add(x - math.floor(x))
    ordered = sorted(cuts)
    span = sprime.span()
    assert span is not None
    chosen: list[Interval] = []
    for u, v in zip(ordered, ordered[1:]):
        k_lo = math.floor(span.lo - u)
        k_hi = math.ceil(span.hi - v)
        candidates = [
            k for k in range(k_lo, k_hi + 1)
            if sprime.contains_interval(Interval(u + k, v + k))
        ]
        # r4 plus refinement by all folded breakpoints guarantees a candidate.
        assert candidates, f"no representative for atom [{u}, {v})"
        pick = candidates[0]
        if prefer_window:
            window_k = 0 if v <= HALF else -1
            if window_k in candidates:
                pick = window_k
        chosen.append(Interval(u + pick, v + pick))
    return normalize(chosen)
