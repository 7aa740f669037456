"""Exact algebra of finite unions of half-open rational intervals.

Endpoints are arbitrary-precision rationals (``fractions.Fraction``) and every
operation is exact; there is no rounding anywhere in this module.  Sets are
kept in one canonical form per null-equivalence class: parts sorted by left
endpoint, with touching or overlapping parts merged.  Two values therefore
compare equal iff they describe the same set modulo null sets.

Half-open ``[lo, hi)`` semantics are used throughout: endpoint membership is
a null-set question, and half-open intervals are closed under disjoint tiling.
"""

from __future__ import annotations

from bisect import bisect_right
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Union

from .errors import InputError

RationalLike = Union[Fraction, int, str]


def rat(x: RationalLike) -> Fraction:
    """Coerce an int, a "p/q" or "n" string, or a Fraction to an exact rational."""
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, str):
        try:
            return Fraction(x.replace("−", "-").strip())
        except ZeroDivisionError:
            raise InputError(f"malformed rational {x!r}: zero denominator") from None
        except ValueError:
            raise InputError(f"malformed rational {x!r}") from None
    if isinstance(x, float):
        raise InputError("floating point values are not accepted; pass Fraction, int or 'p/q'")
    raise InputError(f"cannot interpret {x!r} as a rational")


@dataclass(frozen=True)
class Interval:
    """Nonempty half-open interval [lo, hi); empty intervals are never stored."""

    lo: Fraction
    hi: Fraction

    def __post_init__(self) -> None:
        lo, hi = rat(self.lo), rat(self.hi)
        object.__setattr__(self, "lo", lo)
        object.__setattr__(self, "hi", hi)
        if lo >= hi:
            raise InputError(f"not a nonempty half-open interval: [{lo}, {hi})")

    @property
    def length(self) -> Fraction:
        return self.hi - self.lo

    def __str__(self) -> str:
        return f"[{self.lo}, {self.hi})"


@dataclass(frozen=True)
class IntervalSet:
    """Canonical finite union of half-open rational intervals."""

    parts: tuple[Interval, ...] = ()

    def __post_init__(self) -> None:
        for prev, nxt in zip(self.parts, self.parts[1:]):
            if prev.hi >= nxt.lo:
                raise InputError("parts must be sorted and strictly separated; use normalize()")

    # ------------------------------------------------------------- queries

    @property
    def is_empty(self) -> bool:
        return not self.parts

    def measure(self) -> Fraction:
        return sum((p.length for p in self.parts), Fraction(0))

    def span(self) -> Interval | None:
        """Smallest single interval containing the set, or None if empty."""
        if not self.parts:
            return None
        return Interval(self.parts[0].lo, self.parts[-1].hi)

    def contains_point(self, x: RationalLike) -> bool:
        x = rat(x)
        idx = bisect_right(self._los(), x) - 1
        return idx >= 0 and self.parts[idx].hi > x

    def contains_interval(self, iv: Interval) -> bool:
        """True iff [iv.lo, iv.hi) lies inside a single part."""
        idx = bisect_right(self._los(), iv.lo) - 1
        return idx >= 0 and self.parts[idx].hi >= iv.hi

    def _los(self) -> list[Fraction]:
        return [p.lo for p in self.parts]

    def __str__(self) -> str:
        if not self.parts:
            return "{}"
        return " ∪ ".join(str(p) for p in self.parts)

    # ------------------------------------------------ boolean algebra

    def union(self, other: "IntervalSet") -> "IntervalSet":
        return normalize(self.parts + other.parts)

    def intersect(self, other: "IntervalSet") -> "IntervalSet":
        out: list[Interval] = []
        a, b = self.parts, other.parts
        i = j = 0
        while i < len(a) and j < len(b):
            lo = max(a[i].lo, b[j].lo)
            hi = min(a[i].hi, b[j].hi)
            if lo < hi:
                out.append(Interval(lo, hi))
            if a[i].hi <= b[j].hi:
                i += 1
            else:
                j += 1
        return normalize(out)

    def subtract(self, other: "IntervalSet") -> "IntervalSet":
        out: list[Interval] = []
        b = other.parts
        j = 0
        for p in self.parts:
            lo = p.lo
            while j < len(b) and b[j].hi <= lo:
                j += 1
            jj = j
            while jj < len(b) and b[jj].lo < p.hi and lo < p.hi:
                if b[jj].lo > lo:
                    out.append(Interval(lo, b[jj].lo))
                if b[jj].hi > lo:
                    lo = b[jj].hi
                jj += 1
            if lo < p.hi:
                out.append(Interval(lo, p.hi))
        return normalize(out)

    __or__ = union
    __and__ = intersect
    __sub__ = subtract

    def subset_mod_null(self, other: "IntervalSet") -> bool:
        return self.subtract(other).is_empty

    def sym_diff_measure(self, other: "IntervalSet") -> Fraction:
        return self.subtract(other).measure() + other.subtract(self).measure()

    # ------------------------------------------------ affine images

    def scale(self, s: RationalLike) -> "IntervalSet":
        """Image under x -> s*x; negative s reverses orientation (a null-set change)."""
        s = rat(s)
        if s == 0:
            raise InputError("scale factor must be nonzero")
        if s > 0:
            parts = tuple(Interval(s * p.lo, s * p.hi) for p in self.parts)
        else:
            parts = tuple(Interval(s * p.hi, s * p.lo) for p in reversed(self.parts))
        return IntervalSet(parts)

    def translate(self, t: RationalLike) -> "IntervalSet":
        t = rat(t)
        return IntervalSet(tuple(Interval(p.lo + t, p.hi + t) for p in self.parts))


EMPTY = IntervalSet()


def normalize(raw: Iterable[Interval | tuple[RationalLike, RationalLike]]) -> IntervalSet:
    """Canonicalize an arbitrary collection of intervals.

    Input entries may overlap, touch, or be unsorted; (lo, hi) pairs with
    lo == hi are dropped as empty.  Idempotent.
    """
    items: list[tuple[Fraction, Fraction]] = []
    for entry in raw:
        if isinstance(entry, Interval):
            items.append((entry.lo, entry.hi))
        else:
            lo, hi = rat(entry[0]), rat(entry[1])
            if lo > hi:
                raise InputError(f"inverted interval bounds [{lo}, {hi})")
            if lo < hi:
                items.append((lo, hi))
    items.sort()
    merged: list[Interval] = []
    cur: tuple[Fraction, Fraction] | None = None
    for lo, hi in items:
        if cur is None:
            cur = (lo, hi)
        elif lo <= cur[1]:
            if hi > cur[1]:
                cur = (cur[0], hi)
        else:
            merged.append(Interval(*cur))
            cur = (lo, hi)
    if cur is not None:
        merged.append(Interval(*cur))
    return IntervalSet(tuple(merged))


def iset(*pairs: tuple[RationalLike, RationalLike]) -> IntervalSet:
    """Shorthand constructor: iset((0, 1), ("3/2", 2))."""
    return normalize(pairs)


# Functional aliases mirroring the operation names used across the package.

def union(a: IntervalSet, b: IntervalSet) -> IntervalSet:
    return a.union(b)


def intersect(a: IntervalSet, b: IntervalSet) -> IntervalSet:
    return a.intersect(b)


def subtract(a: IntervalSet, b: IntervalSet) -> IntervalSet:
    return a.subtract(b)


def scale(s: RationalLike, a: IntervalSet) -> IntervalSet:
    return a.scale(s)


def translate(t: RationalLike, a: IntervalSet) -> IntervalSet:
    return a.translate(t)


def measure(a: IntervalSet) -> Fraction:
    return a.measure()


def sym_diff_measure(a: IntervalSet, b: IntervalSet) -> Fraction:
    return a.sym_diff_measure(b)


def subset_mod_null(a: IntervalSet, b: IntervalSet) -> bool:
    return a.subset_mod_null(b)
