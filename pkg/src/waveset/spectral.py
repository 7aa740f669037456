"""Exact step-function spectra and their characterizing checks.

Houses compactly supported piecewise-constant spectra (squared moduli of
scaling functions and wavelets, or real-valued wavelet transforms), the
scaling-spectrum conditions (F1)-(F3), the dyadic Calderon sum, the wavelet
dimension function on an exact torus window, the translation-orthogonality
equations, and the band-pair indicator family psi_b.
"""

from __future__ import annotations

import math
from bisect import bisect_right
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Iterable, Sequence

from .errors import InputError
from .intervals import Interval, IntervalSet, RationalLike, iset, normalize, rat
from .torus import fold_step, fold_to_unit, sweep_weighted

ZERO = Fraction(0)
ONE = Fraction(1)
HALF = Fraction(1, 2)


def pow2(j: int) -> Fraction:
    return Fraction(1 << j) if j >= 0 else Fraction(1, 1 << (-j))


def floor_log2(x: Fraction) -> int:
    """Largest j with 2**j <= x, for rational x > 0."""
    if x <= 0:
        raise InputError("floor_log2 requires a positive argument")
    j = x.numerator.bit_length() - x.denominator.bit_length()
    while pow2(j + 1) <= x:
        j += 1
    while pow2(j) > x:
        j -= 1
    return j


@dataclass(frozen=True)
class StepFn:
    """Compactly supported step function with rational breakpoints and values.

    Canonical form: pieces sorted and disjoint, zero values implicit (never
    stored), touching pieces with equal values merged.
    """

    pieces: tuple[tuple[Interval, Fraction], ...] = ()

    def __post_init__(self) -> None:
        for (a, va), (b, vb) in zip(self.pieces, self.pieces[1:]):
            if a.hi > b.lo:
                raise InputError("step function pieces overlap; use StepFn.build()")
            if a.hi == b.lo and va == vb:
                raise InputError("equal-valued touching pieces must be merged; use StepFn.build()")
        if any(v == 0 for _, v in self.pieces):
            raise InputError("zero values are implicit in a step function")

    @classmethod
    def build(cls, raw: Iterable[tuple[Interval | tuple, RationalLike]]) -> "StepFn":
        items: list[tuple[Interval, Fraction]] = []
        for iv, v in raw:
            if not isinstance(iv, Interval):
                lo, hi = rat(iv[0]), rat(iv[1])
                if lo == hi:
                    continue
                iv = Interval(lo, hi)
            v = rat(v)
            if v != 0:
                items.append((iv, v))
        items.sort(key=lambda p: p[0].lo)
        for (a, _), (b, _) in zip(items, items[1:]):
            if a.hi > b.lo:
                raise InputError(f"overlapping step pieces at {b.lo}")
        merged: list[tuple[Interval, Fraction]] = []
        for iv, v in items:
            if merged and merged[-1][0].hi == iv.lo and merged[-1][1] == v:
                merged[-1] = (Interval(merged[-1][0].lo, iv.hi), v)
            else:
                merged.append((iv, v))
        return cls(tuple(merged))

    @classmethod
    def indicator(cls, s: IntervalSet) -> "StepFn":
        return cls(tuple((p, ONE) for p in s.parts))

    # ---------------------------------------------------------- queries

    @property
    def is_zero(self) -> bool:
        return not self.pieces

    def support(self) -> IntervalSet:
        return normalize(iv for iv, _ in self.pieces)

    def value_at(self, x: RationalLike) -> Fraction:
        x = rat(x)
        los = [iv.lo for iv, _ in self.pieces]
        idx = bisect_right(los, x) - 1
        if idx >= 0 and self.pieces[idx][0].hi > x:
            return self.pieces[idx][1]
        return ZERO

    def integral(self) -> Fraction:
        return sum((v * iv.length for iv, v in self.pieces), ZERO)

    def negative_witness(self) -> tuple[Interval, Fraction] | None:
        for iv, v in self.pieces:
            if v < 0:
                return iv, v
        return None

    # ------------------------------------------------------- transforms

    def map_values(self, fn: Callable[[Fraction], Fraction]) -> "StepFn":
        return StepFn.build((iv, fn(v)) for iv, v in self.pieces)

    def square(self) -> "StepFn":
        return self.map_values(lambda v: v * v)

    def stretch(self, s: RationalLike) -> "StepFn":
        """x -> f(x / s): the graph stretched horizontally by s (s != 0)."""
        s = rat(s)
        if s == 0:
            raise InputError("stretch factor must be nonzero")
        out = []
        for iv, v in self.pieces:
            if s > 0:
                out.append((Interval(s * iv.lo, s * iv.hi), v))
            else:
                out.append((Interval(s * iv.hi, s * iv.lo), v))
        return StepFn.build(out)

    def shift(self, t: RationalLike) -> "StepFn":
        """x -> f(x - t)."""
        t = rat(t)
        return StepFn(tuple((Interval(iv.lo + t, iv.hi + t), v) for iv, v in self.pieces))

    def restrict(self, dom: IntervalSet) -> "StepFn":
        out = []
        for iv, v in self.pieces:
            clipped = iset((iv.lo, iv.hi)).intersect(dom)
            out.extend((p, v) for p in clipped.parts)
        return StepFn.build(out)

    def combine(self, other: "StepFn", op: Callable[[Fraction, Fraction], Fraction]) -> "StepFn":
        """Pointwise binary operation via common refinement (op(0, 0) must be 0)."""
        cuts = sorted(
            {x for iv, _ in self.pieces for x in (iv.lo, iv.hi)}
            | {x for iv, _ in other.pieces for x in (iv.lo, iv.hi)}
        )
        out = []
        for a, b in zip(cuts, cuts[1:]):
            v = op(self.value_at(a), other.value_at(a))
            if v != 0:
                out.append((Interval(a, b), v))
        return StepFn.build(out)

    def __add__(self, other: "StepFn") -> "StepFn":
        return self.combine(other, lambda x, y: x + y)

    def __sub__(self, other: "StepFn") -> "StepFn":
        return self.combine(other, lambda x, y: x - y)

    def __mul__(self, other: "StepFn") -> "StepFn":
        return self.combine(other, lambda x, y: x * y)


def _signed_reach(parts: Sequence[Interval]) -> tuple[Fraction, Fraction]:
    """(r, R) with the parts contained in [-R, -r] u [r, R], all parts 0-separated."""
    r = None
    big = ZERO
    for p in parts:
        d = p.lo if p.lo > 0 else -p.hi
        assert d > 0, "parts must be bounded away from 0"
        r = d if r is None else min(r, d)
        big = max(big, p.hi if p.lo > 0 else -p.lo)
    assert r is not None
    return r, big


def _touches_zero(parts: Sequence[Interval]) -> bool:
    return any(p.lo <= 0 <= p.hi for p in parts)


# ----------------------------------------------------------- (F1)-(F3)


@dataclass(frozen=True)
class SpectrumVerdict:
    passed: bool
    condition: str | None = None
    witness: Interval | None = None
    detail: str = ""


def validate_scaling_spectrum(g: StepFn) -> SpectrumVerdict:
    """Exact check that g is the squared modulus of a scaling function.

    Verifies, in order: the unit periodization (F3), the unit value on a
    punctured neighborhood of 0 (F2), and the existence of a 1-periodic
    filter (F1: support nesting under doubling plus a periodically
    consistent ratio g(2x)/g(x) on the support).
    """
    neg = g.negative_witness()
    if neg is not None:
        raise InputError(f"spectrum must be nonnegative; value {neg[1]} on {neg[0]}")

    # (F3)
    folded = fold_step(g.pieces)
    if not folded.is_constant(1):
        bad = folded.where_not(1)
        return SpectrumVerdict(False, "F3", bad.parts[0],
                               "periodization is not identically 1")

    # (F2)
    left_ok = any(v == 1 and iv.lo < 0 <= iv.hi for iv, v in g.pieces)
    right_ok = any(v == 1 and iv.lo <= 0 < iv.hi for iv, v in g.pieces)
    if not (left_ok and right_ok):
        eps = min((abs(x) for iv, _ in g.pieces for x in (iv.lo, iv.hi) if x != 0),
                  default=ONE)
        witness = Interval(ZERO, eps) if not right_ok else Interval(-eps, ZERO)
        return SpectrumVerdict(False, "F2", witness,
                               "value is not 1 on a punctured neighborhood of 0")

    # (F1): support of g(2 .) inside support of g ...
    supp = g.support()
    half = supp.scale(HALF)
    sticking_out = half.subtract(supp)
    if not sticking_out.is_empty:
        return SpectrumVerdict(False, "F1", sticking_out.parts[0],
                               "support is not nested under doubling")
    # ... and the forced filter modulus g(2x)/g(x) is consistent mod 1.
    doubled = g.stretch(HALF)  # x -> g(2x)
    cuts = sorted(
        {x for iv, _ in g.pieces for x in (iv.lo, iv.hi)}
        | {x for iv, _ in doubled.pieces for x in (iv.lo, iv.hi)}
    )
    frags: list[tuple[Fraction, Fraction, Fraction]] = []
    for a, b in zip(cuts, cuts[1:]):
        den = g.value_at(a)
        if den == 0:
            continue
        ratio = doubled.value_at(a) / den
        k = math.floor(a)
        while k < b:
            lo = max(a, Fraction(k))
            hi = min(b, Fraction(k + 1))
            if lo < hi:
                frags.append((lo - k, hi - k, ratio))
            k += 1
    points = sorted({x for lo, hi, _ in frags for x in (lo, hi)})
    for a, b in zip(points, points[1:]):
        vals = {v for lo, hi, v in frags if lo <= a and hi >= b}
        if len(vals) > 1:
            return SpectrumVerdict(False, "F1", Interval(a, b),
                                   "filter ratio is not 1-periodic on the support")
    return SpectrumVerdict(True)


def psi_spectrum_from_scaling(g: StepFn) -> StepFn:
    """Squared wavelet spectrum h(x) = g(x/2) - g(x) from a scaling spectrum.

    Callers are expected to have validated g; an exact negativity check still
    guards against inconsistent inputs.
    """
    from .errors import InconsistentSpectrumError

    h = g.stretch(2) - g
    neg = h.negative_witness()
    if neg is not None:
        raise InconsistentSpectrumError(
            f"inconsistent spectrum: value {neg[1]} on {neg[0]} "
            "(input does not decrease along doubling)",
            witness=neg[0],
        )
    return h


# --------------------------------------------------------- Calderon sum


@dataclass(frozen=True)
class CalderonResult:
    """Dyadic dilation sum on the annulus [1,2) u [-2,-1), or a divergence flag."""

    diverges: bool
    atoms: tuple[tuple[Interval, Fraction], ...] = ()
    min_value: Fraction | None = None
    max_value: Fraction | None = None
    is_one: bool = False
    divergence_witness: Interval | None = None


ANNULUS = ((Fraction(-2), Fraction(-1)), (Fraction(1), Fraction(2)))


def calderon(h: StepFn) -> CalderonResult:
    """Exact Calderon sum over dyadic dilates, decided on a two-sided annulus.

    The sum is invariant under doubling of the argument, so its values on
    [1,2) u [-2,-1) determine it on all of R minus {0}.  If h is nonzero on a
    piece reaching 0 the sum has infinitely many terms bounded below and
    diverges.
    """
    neg = h.negative_witness()
    if neg is not None:
        raise InputError(f"calderon sum requires a nonnegative input; got {neg[1]} on {neg[0]}")
    if h.is_zero:
        atoms = tuple((Interval(a, b), ZERO) for a, b in ANNULUS)
        return CalderonResult(False, atoms, ZERO, ZERO, False)
    touching = [iv for iv, _ in h.pieces if iv.lo <= 0 <= iv.hi]
    if touching:
        return CalderonResult(True, divergence_witness=touching[0])

    r, big = _signed_reach([iv for iv, _ in h.pieces])
    j_lo = floor_log2(r / 2)
    j_hi = floor_log2(big) + 1
    frags: list[tuple[Fraction, Fraction, Fraction]] = []
    for j in range(j_lo, j_hi + 1):
        term = h.stretch(pow2(-j))  # x -> h(2^j x)
        frags.extend((iv.lo, iv.hi, v) for iv, v in term.pieces)
    atoms: list[tuple[Interval, Fraction]] = []
    for a, b in ANNULUS:
        atoms.extend((Interval(x, y), v) for x, y, v in sweep_weighted(frags, a, b))
    values = [v for _, v in atoms]
    return CalderonResult(
        False,
        tuple(atoms),
        min(values),
        max(values),
        all(v == 1 for v in values),
    )


# ------------------------------------------------- dimension function


@dataclass(frozen=True)
class DimFnWindow:
    """Wavelet dimension function computed exactly on [2^-L, 1 - 2^-L).

    Every dyadic-translate term meeting the window is summed, so values are
    exact there; pieces may accumulate at 0 and 1 outside the window, which
    ``boundary_note`` records.  The source spectrum, when attached, lets the
    limit-condition probes evaluate the function at dyadically small
    arguments by recomputing deeper windows.
    """

    breaks: tuple[Fraction, ...]
    values: tuple[Fraction, ...]
    depth_L: int
    boundary_note: bool
    source: StepFn | None = None

    def window(self) -> tuple[Fraction, Fraction]:
        return self.breaks[0], self.breaks[-1]

    def pieces(self) -> Iterable[tuple[Fraction, Fraction, Fraction]]:
        for i, v in enumerate(self.values):
            yield self.breaks[i], self.breaks[i + 1], v

    def value_at(self, x: RationalLike) -> Fraction:
        x = rat(x)
        wlo, whi = self.window()
        if not wlo <= x < whi:
            raise InputError(f"{x} is outside the computed window [{wlo}, {whi})")
        idx = bisect_right(self.breaks, x) - 1
        return self.values[min(idx, len(self.values) - 1)]

    def is_constant(self, c) -> bool:
        c = rat(c)
        return all(v == c for v in self.values)

    def where_not(self, c) -> IntervalSet:
        c = rat(c)
        return normalize(Interval(a, b) for a, b, v in self.pieces() if v != c)

    def zero_set(self) -> IntervalSet:
        return normalize(Interval(a, b) for a, b, v in self.pieces() if v == 0)


def dimension_function(h: StepFn, depth_L: int = 20) -> DimFnWindow:
    """Sum of h(2^j (x + k)) over j >= 1, k in Z, exact on the depth-L window.

    For x in the window only finitely many (j, k) pairs contribute: level-j
    terms live within 2^-j * max-reach of the integers, hence miss the window
    entirely once that radius drops below 2^-L.
    """
    if depth_L < 2:
        raise InputError("window depth must be at least 2")
    neg = h.negative_witness()
    if neg is not None:
        raise InputError(f"squared spectrum must be nonnegative; got {neg[1]} on {neg[0]}")
    wlo, whi = pow2(-depth_L), 1 - pow2(-depth_L)
    if h.is_zero:
        return DimFnWindow((wlo, whi), (ZERO,), depth_L, False, h)

    reach = max(max(abs(iv.lo), abs(iv.hi)) for iv, _ in h.pieces)
    lo_supp = min(iv.lo for iv, _ in h.pieces)
    hi_supp = max(iv.hi for iv, _ in h.pieces)
    frags: list[tuple[Fraction, Fraction, Fraction]] = []
    j = 1
    while pow2(-j) * reach >= wlo:
        s = pow2(-j)
        k_lo = math.floor(s * lo_supp - whi) + 1
        k_hi = math.ceil(s * hi_supp - wlo) - 1
        for k in range(k_lo, k_hi + 1):
            for iv, v in h.pieces:
                frags.append((s * iv.lo - k, s * iv.hi - k, v))
        j += 1
    atoms = sweep_weighted(frags, wlo, whi)
    breaks = [atoms[0][0]] + [b for _, b, _ in atoms]
    return DimFnWindow(tuple(breaks), tuple(v for _, _, v in atoms), depth_L, True, h)


@dataclass(frozen=True)
class CheckOutcome:
    status: str  # "pass" | "fail" | "no_violation" | "skipped"
    witness: Interval | None = None
    note: str = ""


@dataclass(frozen=True)
class DimConditionsReport:
    d1: CheckOutcome
    d2: CheckOutcome
    d3: CheckOutcome
    d4: CheckOutcome
    depth_L: int


def check_D1_D4(dim: DimFnWindow, depth_L: int, d3_class_depth: int | None = None) -> DimConditionsReport:
    """Check the four dimension-function conditions at depth L.

    Integrality and the doubling identity are exact pass/fail decisions on
    the window.  The two limit conditions are semi-decided: a violation found
    at the declared depth is a certified FAIL, otherwise the status is
    "no violation found" (they are limit statements and cannot be decided by
    any finite computation).
    """
    if dim.depth_L < depth_L + 2:
        raise InputError(
            f"dimension window depth {dim.depth_L} is insufficient; need at least {depth_L + 2}"
        )
    L = depth_L

    # (D1): nonnegative-integer values.
    d1 = CheckOutcome("pass")
    for a, b, v in dim.pieces():
        if v.denominator != 1 or v < 0:
            d1 = CheckOutcome("fail", Interval(a, b), f"value {v} is not a nonnegative integer")
            break

    # (D2): D(x) + D(x + 1/2) = D(2x) + 1 on [2^-L, 1/2 - 2^-L).
    a0, b0 = pow2(-L), HALF - pow2(-L)
    cuts = {a0, b0}
    for br in dim.breaks:
        for cand in (br, br - HALF, br / 2):
            if a0 < cand < b0:
                cuts.add(cand)
    d2 = CheckOutcome("pass", note=f"identity checked exactly on [{a0}, {b0})")
    for a, b in zip(*(lambda xs: (xs, xs[1:]))(sorted(cuts))):
        lhs = dim.value_at(a) + dim.value_at(a + HALF)
        rhs = dim.value_at(2 * a) + 1
        if lhs != rhs:
            d2 = CheckOutcome("fail", Interval(a, b), f"{lhs} != {rhs}")
            break

    d3 = _check_d3(dim, L, d3_class_depth if d3_class_depth is not None else min(L, 8))
    d4 = _check_d4(dim, L)
    return DimConditionsReport(d1, d2, d3, d4, L)


def _check_d3(dim: DimFnWindow, L: int, class_depth: int) -> CheckOutcome:
    """Semi-decide the covering condition via residue classes mod powers of 2.

    The contraction-invariant set is over-approximated by the certified zero
    set of the window: an integer translate x + k is ruled out of it as soon
    as some dyadic contraction of x + k lands entirely on a certified zero of
    the (1-periodic) function.  Contractions by 2^-j depend on k only through
    k mod 2^j, so ruling out every residue class certifies that the covering
    sum is 0; where the window value is >= 1 that is a certified violation.
    """
    zeros = dim.zero_set()
    if zeros.is_empty:
        return CheckOutcome("no_violation", note=f"no certified zeros in the window at depth {L}")
    for a, b, v in dim.pieces():
        if v < 1:
            continue
        atom = iset((a, b))
        survivors = [ZERO]  # residues mod 2^level
        for level in range(1, class_depth + 1):
            mod = pow2(level - 1)
            nxt = []
            for res in survivors:
                for res2 in (res, res + mod):
                    image = fold_to_unit(atom.translate(res2).scale(pow2(-level)))
                    if not image.subset_mod_null(zeros):
                        nxt.append(res2)
            survivors = nxt
            if not survivors:
                return CheckOutcome(
                    "fail", Interval(a, b),
                    f"covering sum is 0 while the value is {v} (all residue classes "
                    f"ruled out at class depth {level})",
                )
    return CheckOutcome("no_violation", note=f"no violation found at class depth {class_depth}")


def _check_d4(dim: DimFnWindow, L: int) -> CheckOutcome:
    """Semi-decide the contraction liminf via a deeper window of the source.

    Certified-fail probe at depth L: the function vanishes at every
    contraction 2^-j x, ceil(L/2) <= j <= L, on a nonnull window subset.  The
    contracted arguments fall below the given window, so they are evaluated
    on a freshly computed window of depth 2L + 2 from the source spectrum.
    """
    if dim.source is None:
        return CheckOutcome("skipped", note="no source spectrum attached; deep window unavailable")
    deep = dimension_function(dim.source, 2 * L + 2)
    deep_zeros = deep.zero_set()
    wlo, whi = dim.window()
    t = iset((max(wlo, pow2(-L)), min(whi, 1 - pow2(-L))))
    j_lo = (L + 1) // 2
    for j in range(j_lo, L + 1):
        t = t.intersect(deep_zeros.scale(pow2(j)))
        if t.is_empty:
            break
    if not t.is_empty:
        return CheckOutcome(
            "fail", t.parts[0],
            f"function vanishes at contractions 2^-j x for all {j_lo} <= j <= {L}",
        )
    return CheckOutcome("no_violation", note=f"no violation found at depth {L}")


# --------------------------------------------------------------- MRA test


@dataclass(frozen=True)
class MraVerdict:
    status: str  # "is_mra" | "not_mra" | "inconclusive"
    witness: Interval | None = None
    note: str = ""
    window: DimFnWindow | None = None


def mra_check(h: StepFn, depth_L: int = 20) -> MraVerdict:
    """Decide MRA membership of a wavelet via its dimension function.

    The window values are exact, so any interior deviation from 1 is a
    certified negative; a window identically 1 yields the positive verdict,
    with the standing note that pieces outside the window (within 2^-L of the
    integers) are not inspected.
    """
    dim = dimension_function(h, depth_L)
    deviations = dim.where_not(1)
    if deviations.is_empty:
        return MraVerdict(
            "is_mra",
            note=f"dimension function is identically 1 on the exact depth-{depth_L} window",
            window=dim,
        )
    return MraVerdict("not_mra", deviations.parts[0],
                      f"dimension function equals {dim.value_at(deviations.parts[0].lo)} there",
                      window=dim)


# ------------------------------------------- translation orthogonality


@dataclass(frozen=True)
class TqResult:
    zero: bool
    witness: Interval | None = None
    fn: StepFn = StepFn()


def tq_check(psi: StepFn, alpha: int) -> TqResult:
    """Exact translation-orthogonality sum t_a(x) = sum(psi(2^m x) psi(2^m (x+a)), m >= 0).

    Defined for real-valued spectra with support bounded away from 0 and odd
    integer shifts a; even shifts reduce to odd ones by a dilation change of
    variable and are rejected.  Only finitely many m contribute: both factors
    are nonzero only while 2^m |a| is at most twice the support reach.
    """
    if not isinstance(alpha, int):
        raise InputError("alpha must be an integer")
    if alpha % 2 == 0:
        raise InputError("alpha must be odd; even shifts reduce to odd ones by dilation")
    if psi.is_zero:
        return TqResult(True)
    if _touches_zero([iv for iv, _ in psi.pieces]):
        raise InputError("support must be bounded away from 0")
    _, big = _signed_reach([iv for iv, _ in psi.pieces])
    total = StepFn()
    m = 0
    while pow2(m) * abs(alpha) <= 2 * big:
        contracted = psi.stretch(pow2(-m))       # x -> psi(2^m x)
        shifted = contracted.shift(-alpha)       # x -> psi(2^m (x + alpha))
        total = total + contracted * shifted
        m += 1
    if total.is_zero:
        return TqResult(True, fn=total)
    return TqResult(False, total.pieces[0][0], total)


@dataclass(frozen=True)
class OrthonormalityReport:
    passed: bool
    norm_sq: Fraction
    calderon: CalderonResult
    tq_failures: tuple[tuple[int, Interval], ...]
    alphas_checked: tuple[int, ...]
    notes: tuple[str, ...] = ()


def orthonormality_check(psi: StepFn) -> OrthonormalityReport:
    """Certify orthonormality of a real-valued step-function wavelet spectrum.

    Passes iff the Calderon sum of psi^2 is identically 1, every
    translation-orthogonality sum vanishes (odd shifts up to twice the
    support reach; negative shifts are equivalent by reflection), and the
    squared norm is exactly 1.
    """
    if psi.is_zero:
        return OrthonormalityReport(False, ZERO, calderon(psi), (), (),
                                    ("spectrum is identically zero",))
    if _touches_zero([iv for iv, _ in psi.pieces]):
        raise InputError("support must be bounded away from 0")
    sq = psi.square()
    norm_sq = sq.integral()
    cal = calderon(sq)
    _, big = _signed_reach([iv for iv, _ in psi.pieces])
    alphas = tuple(range(1, math.floor(2 * big) + 1, 2))
    failures = []
    for a in alphas:
        res = tq_check(psi, a)
        if not res.zero:
            failures.append((a, res.witness))
    passed = (not cal.diverges) and cal.is_one and not failures and norm_sq == 1
    notes = ("shifts -a are equivalent to +a by reflection of the sum",)
    return OrthonormalityReport(passed, norm_sq, cal, tuple(failures), alphas, notes)


# ------------------------------------------------- band-pair family psi_b


PSI_B_ROWS = (
    ("b = 0", "not a frame wavelet"),
    ("0 < b <= 1/8", "frame wavelet (not Riesz)"),
    ("1/8 < b <= 1/6", "open: frame status unknown"),
    ("1/6 < b < 1/3", "not a frame wavelet"),
    ("1/3 <= b < 1/2", "biorthogonal Riesz wavelet"),
    ("b = 1/2", "orthonormal wavelet"),
    ("1/2 < b < 1", "not a frame wavelet"),
)


def psi_b_spectrum(b: RationalLike) -> StepFn:
    """Indicator spectrum on (-1, -b) u (b, 1)."""
    b = rat(b)
    if not 0 <= b < 1:
        raise InputError("b must lie in [0, 1)")
    if b == 0:
        return StepFn.build([((Fraction(-1), ONE), ONE)])
    return StepFn.build([((Fraction(-1), -b), ONE), ((b, ONE), ONE)])


def _psi_b_row(b: Fraction) -> str:
    if b == 0:
        return "not a frame wavelet"
    if b <= Fraction(1, 8):
        return "frame wavelet (not Riesz)"
    if b <= Fraction(1, 6):
        return "open: frame status unknown"
    if b < Fraction(1, 3):
        return "not a frame wavelet"
    if b < HALF:
        return "biorthogonal Riesz wavelet"
    if b == HALF:
        return "orthonormal wavelet"
    return "not a frame wavelet"


@dataclass(frozen=True)
class PsiBReport:
    b: Fraction
    norm_sq: Fraction
    calderon: CalderonResult
    tq_failures: tuple[tuple[int, Interval], ...]
    orthonormal: bool
    table_row: str
    consistent: bool
    notes: tuple[str, ...]


def psi_b_report(b: RationalLike) -> PsiBReport:
    """Computable diagnostics for the band-pair family member at parameter b.

    Reports the squared norm, the Calderon sum, translation-orthogonality
    failures and the orthonormality verdict, then labels whether the known
    classification row for this b is consistent with these necessary
    conditions.  Frame and Riesz claims beyond what the two characterizing
    equations certify are out of scope.
    """
    b = rat(b)
    psi = psi_b_spectrum(b)
    row = _psi_b_row(b)
    notes: list[str] = []
    if b == 0:
        cal = calderon(psi.square())
        report = OrthonormalityReport(False, psi.square().integral(), cal, (), (),
                                      ("orthogonality sums skipped: support touches 0",))
        notes.append("support touches 0: dilation sum diverges, so not a Parseval wavelet")
    else:
        report = orthonormality_check(psi)
        if report.calderon.diverges:
            notes.append("dilation sum diverges: not a Parseval wavelet")
        elif not report.calderon.is_one:
            notes.append(
                f"dilation sum ranges over [{report.calderon.min_value}, "
                f"{report.calderon.max_value}]: not a Parseval wavelet"
            )
        if report.tq_failures:
            notes.append("translation-orthogonality sums are nonzero: not a Parseval wavelet")
        if report.norm_sq != 1:
            notes.append(f"squared norm is {report.norm_sq}, not 1")
    orthonormal = report.passed
    consistent = orthonormal == (row == "orthonormal wavelet")
    if row == "open: frame status unknown":
        notes.append("frame status in this range is an open question; "
                     "only necessary conditions are certified")
    return PsiBReport(
        b=b,
        norm_sq=report.norm_sq,
        calderon=report.calderon,
        tq_failures=report.tq_failures,
        orthonormal=orthonormal,
        table_row=row,
        consistent=consistent,
        notes=tuple(notes + list(report.notes)),
    )
