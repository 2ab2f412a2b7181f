"""Symbolic coding of the logistic invariant Cantor set.

For growth parameter nu > 4 the survivor set of the unit interval is a Cantor
set on which the map is conjugate to the full one-sided 2-shift.  The two
monotone branch domains are

    I1 = [0, (1 - g)/2],   I2 = [(1 + g)/2, 1],   g = sqrt(1 - 4/nu),

labelled 1 = left, 2 = right.  `itinerary` reads symbols off forward
iterates; `decode` realises a finite word as a nested pullback interval whose
midpoint is the canonical point representative (the interval width is a
certified error bound).  `WordTable` does the same for *all* words of a fixed
length at once, realising every period-n point of the shift, and is the
engine behind the pressure and equilibrium-measure computations.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field
from functools import lru_cache

import numpy as np

from .errors import CapacityError, DomainError, EscapedDomain
from .tolerances import DEFAULT, Tolerances

MAX_ENUM_PERIOD = 20

# ---------------------------------------------------------------------------
# Words and cylinders
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class SymbolWord:
    """A finite word over {1, ..., m}, optionally marking periodic extension.

    Periodic words are stored with their minimal period in ``symbols`` and a
    ``repeats`` multiplicity, so (1,2,1,2) periodic is (1,2) with repeats 2.
    """

    symbols: tuple[int, ...]
    periodic: bool = False
    repeats: int = 1
    alphabet_size: int = 2

    def __post_init__(self):
        if not self.symbols:
            raise ValueError("empty word")
        if any(not 1 <= s <= self.alphabet_size for s in self.symbols):
            raise ValueError(f"symbols must lie in 1..{self.alphabet_size}")
        if self.repeats < 1 or (not self.periodic and self.repeats != 1):
            raise ValueError("repeats applies to periodic words only")

    @staticmethod
    def word(symbols) -> "SymbolWord":
        return SymbolWord(tuple(int(s) for s in symbols))

    @staticmethod
    def periodic_word(symbols, alphabet_size: int = 2) -> "SymbolWord":
        """Canonical periodic word: minimal period plus multiplicity."""
        symbols = tuple(int(s) for s in symbols)
        n = len(symbols)
        for p in range(1, n + 1):
            if n % p == 0 and symbols == symbols[:p] * (n // p):
                return SymbolWord(symbols[:p], periodic=True, repeats=n // p,
                                  alphabet_size=alphabet_size)
        raise AssertionError("unreachable")

    @property
    def length(self) -> int:
        return len(self.symbols) * self.repeats

    def expanded(self) -> tuple[int, ...]:
        return self.symbols * self.repeats if self.periodic else self.symbols

    def extended(self, depth: int) -> tuple[int, ...]:
        """First ``depth`` symbols of the (periodic) extension."""
        base = self.expanded()
        if len(base) >= depth:
            return base[:depth]
        if not self.periodic:
            raise ValueError("cannot extend a non-periodic word past its length")
        reps = -(-depth // len(self.symbols))
        return (self.symbols * reps)[:depth]

    def rotated(self, k: int) -> "SymbolWord":
        """Left rotation by k positions (periodic words only)."""
        if not self.periodic:
            raise ValueError("rotation is defined for periodic words")
        s = self.symbols
        k %= len(s)
        return SymbolWord(s[k:] + s[:k], periodic=True, repeats=self.repeats,
                          alphabet_size=self.alphabet_size)

    def digits(self) -> str:
        return "".join(str(s) for s in self.expanded())

    def __str__(self) -> str:
        return self.digits()


@dataclass(frozen=True)
class Cylinder:
    """Set of one-sided sequences with a fixed prefix; depth 0 is everything."""

    prefix: tuple[int, ...] = ()
    alphabet_size: int = 2

    @property
    def depth(self) -> int:
        return len(self.prefix)

    def __str__(self) -> str:
        return "[" + "".join(str(s) for s in self.prefix) + "]"


def bernoulli_cylinder_mass(cyl: Cylinder) -> float:
    """Mass of a cylinder under the fair Bernoulli measure: exactly 2^-depth."""
    if cyl.alphabet_size != 2:
        raise DomainError("fair-coin mass is defined for the 2-symbol alphabet")
    return 0.5 ** cyl.depth


def enumerate_periodic(n: int, m: int = 2) -> list[SymbolWord]:
    """All m**n periodic words of period dividing n, lexicographically.

    Each word is returned in canonical minimal-period form; together they
    realise the fixed points of the n-th shift iterate.
    """
    if n < 1:
        raise ValueError("period must be at least 1")
    if n > MAX_ENUM_PERIOD:
        raise CapacityError(f"period {n} exceeds the enumeration cap {MAX_ENUM_PERIOD}")
    return [
        SymbolWord.periodic_word(w, alphabet_size=m)
        for w in itertools.product(range(1, m + 1), repeat=n)
    ]


# ---------------------------------------------------------------------------
# Branch geometry
# ---------------------------------------------------------------------------


def _require_expanding(nu: float) -> None:
    if nu <= 4.0:
        raise DomainError(f"symbolic coding requires nu > 4, got {nu}")


def branch_gap(nu: float) -> float:
    """Distance sqrt(1 - 4/nu) between the two branch domains."""
    _require_expanding(nu)
    return math.sqrt(1.0 - 4.0 / nu)


def branch_intervals(nu: float) -> tuple[tuple[float, float], tuple[float, float]]:
    """The left and right branch domains I1, I2 of the unit interval."""
    g = branch_gap(nu)
    return (0.0, 0.5 * (1.0 - g)), (0.5 * (1.0 + g), 1.0)


def min_expansion(nu: float) -> float:
    """Infimum of |f'| over the survivor set: nu * sqrt(1 - 4/nu)."""
    return nu * branch_gap(nu)


# ---------------------------------------------------------------------------
# Itinerary and decoding
# ---------------------------------------------------------------------------


def itinerary(nu: float, x: float, depth: int, tol: Tolerances = DEFAULT) -> SymbolWord:
    """Symbol word of the first ``depth`` iterates of x.

    Symbol 1 marks the left branch, 2 the right.  Iterates through order
    ``depth`` must stay inside [0, 1] (up to tol_escape); a point of the
    middle gap is reported as an escape at the iterate that leaves, never
    coerced to a branch.
    """
    _require_expanding(nu)
    if depth < 1:
        raise ValueError("depth must be at least 1")
    symbols = []
    for step in range(depth + 1):
        if x < -tol.tol_escape or x > 1.0 + tol.tol_escape:
            raise EscapedDomain(step, x)
        if step < depth:
            symbols.append(1 if x <= 0.5 else 2)
        x = nu * x * (1.0 - x)
    return SymbolWord(tuple(symbols))


@dataclass(frozen=True)
class DecodedInterval:
    lower: float
    upper: float
    word: SymbolWord
    depth: int

    @property
    def midpoint(self) -> float:
        return 0.5 * (self.lower + self.upper)

    @property
    def width(self) -> float:
        return self.upper - self.lower


def _pullback(nu: float, symbol: int, lo: float, hi: float) -> tuple[float, float]:
    dlo = math.sqrt(max(1.0 - 4.0 * lo / nu, 0.0))
    dhi = math.sqrt(max(1.0 - 4.0 * hi / nu, 0.0))
    if symbol == 1:
        return 0.5 * (1.0 - dlo), 0.5 * (1.0 - dhi)
    return 0.5 * (1.0 + dhi), 0.5 * (1.0 + dlo)


def decode(nu: float, word: SymbolWord, depth: int | None = None) -> DecodedInterval:
    """Realise a word as the nested inverse-branch pullback interval.

    Every word is realised (the coding is the full 2-shift).  Periodic words
    may be decoded at any ``depth``; deeper decodes of a periodic word home in
    on its periodic point.  The midpoint is the canonical representative and
    the width a certified error bound.
    """
    _require_expanding(nu)
    symbols = word.extended(depth) if depth is not None else word.expanded()
    if not symbols:
        raise ValueError("cannot decode an empty word")
    left, right = branch_intervals(nu)
    lo, hi = left if symbols[-1] == 1 else right
    for s in reversed(symbols[:-1]):
        lo, hi = _pullback(nu, s, lo, hi)
    return DecodedInterval(lo, hi, word, len(symbols))


# ---------------------------------------------------------------------------
# Vectorised word tables
# ---------------------------------------------------------------------------


def _vector_pullback(nu: float, two_mask: np.ndarray, lo: np.ndarray, hi: np.ndarray):
    dlo = np.sqrt(np.maximum(1.0 - 4.0 * lo / nu, 0.0))
    dhi = np.sqrt(np.maximum(1.0 - 4.0 * hi / nu, 0.0))
    new_lo = np.where(two_mask, 0.5 * (1.0 + dhi), 0.5 * (1.0 - dlo))
    new_hi = np.where(two_mask, 0.5 * (1.0 + dlo), 0.5 * (1.0 - dhi))
    return new_lo, new_hi


def _realization_extra_depth(nu: float) -> int:
    # Pullback contraction weakens as nu -> 4+, so start deeper there; word
    # tables additionally deepen until the realization width collapses.
    return 48 if nu >= 4.5 else 192


#: Realization intervals are deepened until at most this wide.
REALIZATION_WIDTH_TARGET = 1e-13
_REALIZATION_DEPTH_CAP = 2048


def cylinder_bounds(nu: float, n: int) -> tuple[np.ndarray, np.ndarray]:
    """Lower/upper endpoints of all 2**n depth-n cylinders, code-ordered.

    Code c encodes the word (j_0 ... j_{n-1}) with j_s - 1 the s-th most
    significant bit of c, so code order is lexicographic word order.
    """
    _require_expanding(nu)
    codes = np.arange(1 << n, dtype=np.int64)
    (l1, u1), (l2, u2) = branch_intervals(nu)
    last = (codes & 1).astype(bool)
    lo = np.where(last, l2, l1)
    hi = np.where(last, u2, u1)
    for s in range(n - 2, -1, -1):
        bit = ((codes >> (n - 1 - s)) & 1).astype(bool)
        lo, hi = _vector_pullback(nu, bit, lo, hi)
    return lo, hi


def cylinder_midpoints(nu: float, n: int) -> np.ndarray:
    lo, hi = cylinder_bounds(nu, n)
    return 0.5 * (lo + hi)


def max_cylinder_width(nu: float, n: int) -> float:
    lo, hi = cylinder_bounds(nu, n)
    return float(np.max(hi - lo))


class WordTable:
    """All length-n words at parameter nu, with their periodic points.

    ``points[c]`` is the point whose itinerary repeats the word of code c:
    the word's periodic extension is decoded well past the depth at which the
    pullback interval collapses to machine precision, so the midpoints *are*
    the period-n points of the map (period dividing n).  ``rotate_left`` and
    ``rotate_right`` are the code permutations realising the shift and its
    inverse on periodic words, which makes forward orbits exact lookups
    instead of lossy forward iteration.
    """

    def __init__(self, nu: float, n: int, extra_depth: int | None = None):
        _require_expanding(nu)
        if not 1 <= n <= MAX_ENUM_PERIOD:
            raise CapacityError(f"period {n} outside 1..{MAX_ENUM_PERIOD}")
        self.nu = float(nu)
        self.n = int(n)
        size = 1 << n
        self.size = size
        codes = np.arange(size, dtype=np.int64)
        mask = size - 1
        self.rotate_left = ((codes << 1) & mask) | (codes >> (n - 1))
        self.rotate_right = (codes >> 1) | ((codes & 1) << (n - 1))

        extra = _realization_extra_depth(nu) if extra_depth is None else extra_depth
        while True:
            depth = n + extra
            (l1, u1), (l2, u2) = branch_intervals(nu)
            bit = ((codes >> (n - 1 - ((depth - 1) % n))) & 1).astype(bool)
            lo = np.where(bit, l2, l1)
            hi = np.where(bit, u2, u1)
            for s in range(depth - 2, -1, -1):
                bit = ((codes >> (n - 1 - (s % n))) & 1).astype(bool)
                lo, hi = _vector_pullback(nu, bit, lo, hi)
            width = float(np.max(hi - lo))
            if width <= REALIZATION_WIDTH_TARGET or extra >= _REALIZATION_DEPTH_CAP:
                break
            extra *= 2
        self.points = 0.5 * (lo + hi)
        self.realization_width = width
        self.realization_depth = depth

    def word(self, code: int) -> SymbolWord:
        bits = [(code >> (self.n - 1 - s)) & 1 for s in range(self.n)]
        return SymbolWord.periodic_word(tuple(b + 1 for b in bits))

    def code(self, symbols) -> int:
        value = 0
        for s in symbols:
            value = (value << 1) | (int(s) - 1)
        return value

    def orbit_codes(self, code: int) -> list[int]:
        out, c = [], int(code)
        for _ in range(self.n):
            out.append(c)
            c = int(self.rotate_left[c])
        return out

    def history_matrix(self, depth: int, codes: np.ndarray | None = None) -> np.ndarray:
        """Rows of backward orbits: column i holds the coordinate i steps back."""
        idx = np.arange(self.size, dtype=np.int64) if codes is None else np.asarray(codes)
        out = np.empty((idx.size, depth + 1))
        cur = idx
        for i in range(depth + 1):
            out[:, i] = self.points[cur]
            cur = self.rotate_right[cur]
        return out

    def prefix_codes(self, prefix) -> np.ndarray:
        """Codes of all words starting with the given symbols."""
        k = len(prefix)
        if k > self.n:
            raise ValueError("prefix longer than the word length")
        head = self.code(prefix)
        codes = np.arange(self.size, dtype=np.int64)
        return codes[(codes >> (self.n - k)) == head]


@lru_cache(maxsize=16)
def get_word_table(nu: float, n: int) -> WordTable:
    """Cached word tables; ensembles at one (nu, n) share the decode work."""
    return WordTable(nu, n)


def _realize_point(nu: float, word: SymbolWord) -> float:
    """Periodic point of a periodic word, decoded to machine precision."""
    extra = _realization_extra_depth(nu)
    p = len(word.symbols)
    while True:
        dec = decode(nu, word, depth=p + extra)
        if dec.width <= REALIZATION_WIDTH_TARGET or extra >= _REALIZATION_DEPTH_CAP:
            return dec.midpoint
        extra *= 2


def realize_periodic_states(nu: float, word: SymbolWord, depth: int) -> np.ndarray:
    """Backward orbit (x0, x-1, ..., x-depth) of the periodic point of ``word``."""
    if not word.periodic:
        word = SymbolWord.periodic_word(word.expanded())
    base = word.symbols
    p = len(base)
    states = np.empty(depth + 1)
    cache: dict[int, float] = {}
    for i in range(depth + 1):
        k = (-i) % p
        if k not in cache:
            rotated = SymbolWord(base[k:] + base[:k], periodic=True)
            cache[k] = _realize_point(nu, rotated)
        states[i] = cache[k]
    return states
