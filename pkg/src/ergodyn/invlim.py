"""Truncated inverse-limit points (prehistories) and their metric geometry.

A prehistory is a finite chain (x0, x-1, ..., x-r) of consecutive preimages:
each entry maps forward onto the previous one.  It is the computational
stand-in for a full backward orbit, i.e. for one intertemporal equilibrium of
a backward economic model.  The metric weights coordinate i by 2^-i, so every
truncated distance carries a certified tail bound diam * 2^-depth.

`shadow_specification` is constructive: given spaced time intervals with
periodic symbolic anchors it assembles a single periodic word whose orbit
stays epsilon-close to every anchor on its interval, and then verifies the
claim coordinate by coordinate with certified tails.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import NamedTuple

import numpy as np

from . import symbolic
from .errors import (
    CapacityError,
    DomainError,
    InsufficientDepth,
    ModelMismatch,
    SpacingTooSmall,
)
from .maps import LogisticMap, MapModel, inverse_branches
from .symbolic import SymbolWord, max_cylinder_width, realize_periodic_states
from .tolerances import DEFAULT, DEFAULT_SEED, Tolerances

MAX_TREE_DEPTH = 24

# ---------------------------------------------------------------------------
# Prehistories
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class Prehistory:
    """A consecutive-preimage chain (x0, x-1, ..., x-r) under ``model``.

    ``states[i]`` is the coordinate i steps in the past.  Construction checks
    the chaining residual |f(x_{-i}) - x_{-i+1}| against tol_root.
    """

    model: MapModel
    states: tuple[float, ...]
    tolerances: Tolerances = field(default=DEFAULT, compare=False)

    def __post_init__(self):
        if not self.states:
            raise ValueError("prehistory needs at least the present coordinate")
        residual = self.consistency_residual()
        if residual >= self.tolerances.tol_root:
            raise ValueError(
                f"consecutive-preimage residual {residual:.3e} exceeds "
                f"{self.tolerances.tol_root}"
            )

    @property
    def depth(self) -> int:
        return len(self.states) - 1

    @property
    def present(self) -> float:
        return self.states[0]

    def consistency_residual(self) -> float:
        worst = 0.0
        for i in range(1, len(self.states)):
            worst = max(worst, abs(float(self.model.evaluate(self.states[i])) - self.states[i - 1]))
        return worst

    def csv_row(self) -> list:
        return [self.depth, *self.states, self.consistency_residual()]


def lift_shift(prehistory: Prehistory) -> Prehistory:
    """Shift homeomorphism: prepend f(x0).  Depth grows by one."""
    head = float(prehistory.model.evaluate(prehistory.present))
    return Prehistory(prehistory.model, (head,) + prehistory.states, prehistory.tolerances)


def drop_first(prehistory: Prehistory) -> Prehistory:
    """Inverse of `lift_shift` on its image: forget the present coordinate."""
    if prehistory.depth < 1:
        raise InsufficientDepth("cannot drop the only coordinate")
    return Prehistory(prehistory.model, prehistory.states[1:], prehistory.tolerances)


def periodic_prehistory(model: LogisticMap, word: SymbolWord, depth: int) -> Prehistory:
    """Prehistory of the periodic point of ``word`` under a logistic map."""
    states = realize_periodic_states(model.nu, word, depth)
    return Prehistory(model, tuple(float(s) for s in states))


class TruncatedDistance(NamedTuple):
    value: float
    tail_bound: float

    @property
    def upper(self) -> float:
        return self.value + self.tail_bound


def invlim_distance(a: Prehistory, b: Prehistory) -> TruncatedDistance:
    """Weighted coordinate distance over the common depth plus a tail bound.

    The value sums |x_{-i} - y_{-i}| / 2^i for i up to the common depth; the
    unseen tail is bounded by diam * 2^-common_depth and reported separately
    so callers can certify strict inequalities.
    """
    if a.model != b.model:
        raise ModelMismatch(f"{a.model!r} vs {b.model!r}")
    common = min(a.depth, b.depth)
    value = 0.0
    weight = 1.0
    for i in range(common + 1):
        value += abs(a.states[i] - b.states[i]) * weight
        weight *= 0.5
    # weight is now 2^-(common+1); unseen terms i > common sum below diam * 2 * weight
    tail = a.model.phase_diameter() * 2.0 * weight
    return TruncatedDistance(value, tail)


# ---------------------------------------------------------------------------
# Preimage trees
# ---------------------------------------------------------------------------


def preimage_tree(
    model: MapModel,
    x: float,
    depth: int,
    policy: str = "all",
    max_branches: int | None = None,
    seed: int = DEFAULT_SEED,
    tol: Tolerances = DEFAULT,
) -> list[Prehistory]:
    """Consecutive-preimage chains of length ``depth`` staying in the domain.

    policy "all" returns every chain (capacity-capped), "random" one chain
    with uniformly sampled branches, "max" at most ``max_branches`` chains
    kept in deterministic sorted order at every level.
    """
    if model.dimension != 1:
        raise DomainError("preimage trees are built for 1D maps")
    if policy == "all" and depth > MAX_TREE_DEPTH:
        raise CapacityError(f"full tree of depth {depth} exceeds 2**{MAX_TREE_DEPTH} chains")
    if policy == "max" and (max_branches is None or max_branches < 1):
        raise ValueError("policy 'max' needs a positive max_branches")
    rng = np.random.default_rng(seed)
    interval = model.domain_interval()

    chains: list[tuple[float, ...]] = [(float(x),)]
    for _ in range(depth):
        grown: list[tuple[float, ...]] = []
        for chain in chains:
            branches = inverse_branches(model, chain[-1], interval, tol)
            if policy == "random":
                branches = [branches[int(rng.integers(len(branches)))]] if branches else []
            for px in branches:
                grown.append(chain + (px,))
        grown.sort()
        if policy == "max" and len(grown) > max_branches:
            grown = grown[:max_branches]
        if policy == "all" and len(grown) > (1 << MAX_TREE_DEPTH):
            raise CapacityError("branch count exceeded the tree capacity")
        chains = grown
    return [Prehistory(model, chain, tol) for chain in chains]


# ---------------------------------------------------------------------------
# Bowen balls and expansivity
# ---------------------------------------------------------------------------


def bowen_ball_test(
    a: Prehistory,
    b: Prehistory,
    n: int,
    eps: float,
) -> bool:
    """Certified test that b stays eps-close to a for n shift iterates.

    True only when value + tail < eps at every iterate, so a positive answer
    is a certificate; a negative answer may be a truncation artefact only if
    the tail bound is comparable to eps, which raises InsufficientDepth.
    """
    x, y = a, b
    for _ in range(n):
        d = invlim_distance(x, y)
        if d.tail_bound >= eps:
            raise InsufficientDepth(
                f"metric tail {d.tail_bound} is not below eps={eps}; deepen the prehistories"
            )
        if d.upper >= eps:
            return False
        x, y = lift_shift(x), lift_shift(y)
    return True


@dataclass(frozen=True)
class ExpansivityEstimate:
    separation_scale: float
    trials: int
    confirmed: int
    min_observed_separation: float

    @property
    def all_confirmed(self) -> bool:
        return self.confirmed == self.trials


def expansivity_estimate(
    model: LogisticMap,
    samples: int = 10_000,
    word_length: int = 14,
    seed: int = DEFAULT_SEED,
) -> ExpansivityEstimate:
    """Lower estimate of the expansivity constant of the shift.

    Distinct itineraries must disagree at some position, and at the first
    disagreement the corresponding forward coordinates sit in different
    branch domains, hence at least the branch gap apart.  The gap is returned
    as the separation scale together with a sampled confirmation log.
    """
    nu = model.nu
    gap = symbolic.branch_gap(nu)
    rng = np.random.default_rng(seed)
    lo, hi = symbolic.cylinder_bounds(nu, word_length)
    mids = 0.5 * (lo + hi)
    confirmed = 0
    min_sep = math.inf
    size = mids.size
    for _ in range(samples):
        ca = int(rng.integers(size))
        cb = int(rng.integers(size - 1))
        if cb >= ca:
            cb += 1
        # first index where the words disagree = highest differing bit
        diff = ca ^ cb
        first = word_length - diff.bit_length()
        xa, xb = mids[ca], mids[cb]
        for _ in range(first):
            xa = nu * xa * (1.0 - xa)
            xb = nu * xb * (1.0 - xb)
        sep = abs(xa - xb)
        min_sep = min(min_sep, sep)
        if sep >= gap - 1e-9:
            confirmed += 1
    return ExpansivityEstimate(gap, samples, confirmed, min_sep)


# ---------------------------------------------------------------------------
# Specification shadowing
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class SpecificationTask:
    """Disjoint increasing time intervals with a periodic word anchored at each.

    ``intervals`` are inclusive integer windows [a_i, b_i]; ``anchors[i]`` is
    the word whose periodic orbit must be tracked on the i-th window.
    """

    intervals: tuple[tuple[int, int], ...]
    anchors: tuple[SymbolWord, ...]

    def __post_init__(self):
        if len(self.intervals) != len(self.anchors) or not self.intervals:
            raise ValueError("need one anchor word per interval")
        for a, b in self.intervals:
            if b < a:
                raise ValueError(f"interval [{a}, {b}] is empty")
        for (a1, b1), (a2, _) in zip(self.intervals, self.intervals[1:]):
            if a2 <= b1:
                raise ValueError("intervals must be disjoint and increasing")

    @property
    def spacing(self) -> int:
        """Largest s such that the task is s-spaced (min of a_{i+1} - b_i - 1)."""
        gaps = [a2 - b1 - 1 for (_, b1), (a2, _) in zip(self.intervals, self.intervals[1:])]
        return min(gaps) if gaps else (1 << 30)

    @property
    def span(self) -> int:
        return self.intervals[-1][1] - self.intervals[0][0]


@dataclass(frozen=True)
class ShadowingResult:
    periodic_word: SymbolWord
    period: int
    eps: float
    required_spacing: int
    history_depth: int
    future_depth: int
    log: tuple[tuple[int, float, float], ...]  # (time, distance value, tail bound)

    @property
    def max_distance(self) -> float:
        return max(v + t for _, v, t in self.log)

    @property
    def verified(self) -> bool:
        return self.max_distance < self.eps


def symbol_agreement_depth(nu: float, eps: float, max_depth: int = 20) -> int:
    """Smallest depth at which every cylinder is narrower than eps."""
    for depth in range(1, max_depth + 1):
        if max_cylinder_width(nu, depth) < eps:
            return depth
    raise CapacityError(f"no cylinder depth up to {max_depth} reaches width {eps}")


def required_shadowing_spacing(nu: float, eps: float) -> tuple[int, int, int]:
    """(total spacing, past extension r, future extension M) for accuracy eps.

    r is the metric cut-off with 2^-r < eps/2; M is the symbol-agreement
    depth for eps/4.  The admissible spacing is M + 2r, the larger of the two
    spacings appearing in the underlying argument, adopted uniformly.
    """
    r = 1
    while 2.0 ** (-r) >= eps / 2.0:
        r += 1
    m = symbol_agreement_depth(nu, eps / 4.0)
    return m + 2 * r, r, m


def shadow_specification(
    task: SpecificationTask,
    nu: float,
    eps: float,
    metric_depth: int | None = None,
    tol: Tolerances = DEFAULT,
) -> ShadowingResult:
    """Build and verify a periodic word shadowing every anchored epoch.

    Construction: each anchor word is extended periodically r symbols into
    the past and M symbols into the future, the pieces are laid on a cyclic
    timeline padded with filler symbol 1, and the resulting word of period
    q = span + M + 2r is realised as a periodic orbit.  Verification then
    measures, for every specified time t, the truncated metric distance
    between the orbit of the constructed word and the anchor orbit, with
    certified tails; all distances must come out below eps.
    """
    if metric_depth is None:
        metric_depth = tol.r_metric
    spacing_needed, r, m = required_shadowing_spacing(nu, eps)
    if task.spacing < spacing_needed:
        raise SpacingTooSmall(
            f"task spacing {task.spacing} is below the admissible spacing "
            f"{spacing_needed} for eps={eps}"
        )

    a1 = task.intervals[0][0]
    period = task.span + spacing_needed
    origin = a1 - r  # timeline position of word index 0
    symbols = [1] * period
    for (a, b), anchor in zip(task.intervals, task.anchors):
        base = anchor.symbols if anchor.periodic else anchor.expanded()
        p = len(base)
        for t in range(a - r, b + m + 1):
            symbols[(t - origin) % period] = base[(t - a) % p]
    word = SymbolWord.periodic_word(tuple(symbols))

    model = LogisticMap(nu)
    orbit_states: dict[int, Prehistory] = {}

    def orbit_at(t: int) -> Prehistory:
        k = (t - origin) % period
        if k not in orbit_states:
            rotated = SymbolWord.periodic_word(tuple(symbols[k:] + symbols[:k]))
            orbit_states[k] = periodic_prehistory(model, rotated, metric_depth)
        return orbit_states[k]

    log: list[tuple[int, float, float]] = []
    for (a, b), anchor in zip(task.intervals, task.anchors):
        anchor = anchor if anchor.periodic else SymbolWord.periodic_word(anchor.expanded())
        for t in range(a, b + 1):
            target = periodic_prehistory(model, anchor.rotated(t - a), metric_depth)
            d = invlim_distance(orbit_at(t), target)
            log.append((t, d.value, d.tail_bound))

    return ShadowingResult(
        periodic_word=word,
        period=period,
        eps=eps,
        required_spacing=spacing_needed,
        history_depth=r,
        future_depth=m,
        log=tuple(log),
    )
