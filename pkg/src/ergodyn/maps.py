"""Economic map families: evaluation, derivatives, and chaos detectors.

Each family is an immutable model object.  The module-level functions
(`evaluate_map`, `differentiate_map`, `schwarzian`, ...) are pure functions of
(model, point) and are safe to call concurrently.

Families
--------
LogisticMap        x  ->  nu * x * (1 - x)                       (1D)
CobwebMap          z  ->  (1 - alpha) z + alpha / z**beta_c      (1D, z > 0)
GenericUnimodalMap user-supplied smooth hump on an interval      (1D)
CashInAdvanceMap   piecewise polynomial on an interval           (1D)
OLG2DMap           backward map (z', w') -> (chi(a(1-delta+1/a)z' - a w'), z')
HeteroMarketMap    (z, m) -> (z[(1-a) - a b(1-m)/(2B)], tanh(...))

The OLG2D family is deliberately implemented only in the backward direction:
the forward dynamics is multivalued, which is the whole point of working with
prehistories downstream.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from enum import Enum
from typing import Callable, Sequence

import numpy as np

from .errors import (
    ArityError,
    DomainError,
    NoInteriorFixedPoint,
    NoPreimage,
    NotFixed,
    NotUnimodalError,
    SingularPoint,
    UnsupportedOrder,
)
from .tolerances import DEFAULT, Tolerances

# ---------------------------------------------------------------------------
# Model types
# ---------------------------------------------------------------------------


class MapModel:
    """Base class for all map families.  Subclasses are frozen dataclasses."""

    family: str = "abstract"
    dimension: int = 1

    def evaluate(self, point):
        raise NotImplementedError

    def domain_interval(self) -> tuple[float, float] | None:
        """Natural invariant interval for 1D families, if one is known."""
        return None

    def phase_diameter(self) -> float:
        """Diameter of the phase space, used in metric tail bounds."""
        return 1.0


@dataclass(frozen=True)
class LogisticMap(MapModel):
    """The quadratic family nu * x * (1 - x) on [0, 1]."""

    nu: float
    family: str = field(default="logistic", init=False)
    dimension: int = field(default=1, init=False)

    def __post_init__(self):
        if self.nu <= 0:
            raise DomainError(f"logistic parameter must be positive, got {self.nu}")

    def evaluate(self, x):
        return self.nu * x * (1.0 - x)

    def derivative(self, x, order: int):
        if order == 1:
            return self.nu * (1.0 - 2.0 * x)
        if order == 2:
            return -2.0 * self.nu + 0.0 * x
        return 0.0 * x

    def domain_interval(self):
        return (0.0, 1.0)


@dataclass(frozen=True)
class CobwebMap(MapModel):
    """Adaptive-adjustment supply map (1 - alpha) z + alpha / z**beta_c."""

    alpha: float
    beta_c: float
    family: str = field(default="cobweb", init=False)
    dimension: int = field(default=1, init=False)

    def __post_init__(self):
        if not 0.0 < self.alpha < 1.0:
            raise DomainError(f"cobweb alpha must lie in (0, 1), got {self.alpha}")
        if self.beta_c <= 0.0:
            raise DomainError(f"cobweb beta_c must be positive, got {self.beta_c}")

    def _check(self, z):
        if np.any(np.asarray(z) <= 0.0):
            raise DomainError("cobweb map requires z > 0")

    def evaluate(self, z):
        self._check(z)
        return (1.0 - self.alpha) * z + self.alpha * z ** (-self.beta_c)

    def derivative(self, z, order: int):
        self._check(z)
        a, b = self.alpha, self.beta_c
        if order == 1:
            return (1.0 - a) - a * b * z ** (-b - 1.0)
        if order == 2:
            return a * b * (b + 1.0) * z ** (-b - 2.0)
        return -a * b * (b + 1.0) * (b + 2.0) * z ** (-b - 3.0)


@dataclass(frozen=True)
class GenericUnimodalMap(MapModel):
    """A user-supplied smooth 1D map on a closed interval.

    Derivatives fall back to central finite differences, so the callable
    should be smooth at the sampled scale.  It should also broadcast over
    numpy arrays (plain arithmetic expressions do).
    """

    func: Callable[[float], float]
    interval: tuple[float, float]
    name: str = "generic"
    family: str = field(default="generic_unimodal", init=False)
    dimension: int = field(default=1, init=False)

    def evaluate(self, x):
        return self.func(x)

    def domain_interval(self):
        return self.interval

    def phase_diameter(self):
        return self.interval[1] - self.interval[0]


@dataclass(frozen=True)
class CashInAdvanceMap(MapModel):
    """Piecewise polynomial recursion for real money balances.

    ``breakpoints`` are the piece edges (increasing); piece i applies on
    [breakpoints[i], breakpoints[i+1]] with ascending coefficients
    ``coeffs[i]``.  A single piece is an ordinary polynomial map.
    """

    breakpoints: tuple[float, ...]
    coeffs: tuple[tuple[float, ...], ...]
    family: str = field(default="cash_in_advance", init=False)
    dimension: int = field(default=1, init=False)

    def __post_init__(self):
        if len(self.breakpoints) < 2 or len(self.coeffs) != len(self.breakpoints) - 1:
            raise DomainError("need k+1 breakpoints for k polynomial pieces")
        if any(b2 <= b1 for b1, b2 in zip(self.breakpoints, self.breakpoints[1:])):
            raise DomainError("breakpoints must be strictly increasing")

    @staticmethod
    def from_coeffs(coeffs: Sequence[float], interval=(0.0, 1.0)) -> "CashInAdvanceMap":
        """Single-piece map from ascending polynomial coefficients."""
        return CashInAdvanceMap(
            breakpoints=(float(interval[0]), float(interval[1])),
            coeffs=(tuple(float(c) for c in coeffs),),
        )

    def _piece_index(self, x):
        idx = np.searchsorted(np.asarray(self.breakpoints), x, side="right") - 1
        return np.clip(idx, 0, len(self.coeffs) - 1)

    def _poly(self, piece: int, x, order: int = 0):
        cs = list(self.coeffs[piece])
        for _ in range(order):
            cs = [i * c for i, c in enumerate(cs)][1:] or [0.0]
        acc = 0.0 * x
        for c in reversed(cs):
            acc = acc * x + c
        return acc

    def evaluate(self, x):
        idx = self._piece_index(x)
        if np.ndim(x) == 0:
            return float(self._poly(int(idx), x))
        out = np.empty_like(np.asarray(x, dtype=float))
        for piece in np.unique(idx):
            mask = idx == piece
            out[mask] = self._poly(int(piece), np.asarray(x, dtype=float)[mask])
        return out

    def derivative(self, x, order: int):
        idx = self._piece_index(x)
        if np.ndim(x) == 0:
            return float(self._poly(int(idx), x, order))
        out = np.empty_like(np.asarray(x, dtype=float))
        for piece in np.unique(idx):
            mask = idx == piece
            out[mask] = self._poly(int(piece), np.asarray(x, dtype=float)[mask], order)
        return out

    def domain_interval(self):
        return (self.breakpoints[0], self.breakpoints[-1])

    def phase_diameter(self):
        return self.breakpoints[-1] - self.breakpoints[0]


def representative_cia() -> CashInAdvanceMap:
    """A representative cash-in-advance instance exhibiting a 3-cycle.

    The literature defers the closed form of the recursion to the underlying
    monetary model, so the repo ships one concrete quadratic instance on
    [0, 1] whose period-3 orbit is found by `find_period3`.  It stands in for
    the family; it is not calibrated to any particular economy.
    """
    return CashInAdvanceMap.from_coeffs((0.0, 3.83, -3.83))


@dataclass(frozen=True)
class OLG2DMap(MapModel):
    """Backward two-sector overlapping-generations map.

    Input is time-(t+1) data (z', w'); output is (chi(a(1-delta+1/a) z' - a w'), z').
    The offer curve ``chi`` is an embedded 1D model (logistic by default in
    the CLI).  Forward iteration is multivalued and intentionally absent.
    """

    a: float
    delta: float
    chi: MapModel
    family: str = field(default="olg2d", init=False)
    dimension: int = field(default=2, init=False)

    def __post_init__(self):
        if self.a <= 0:
            raise DomainError(f"capital productivity parameter a must be positive, got {self.a}")
        if not 0.0 < self.delta < 1.0:
            raise DomainError(f"depreciation delta must lie in (0, 1), got {self.delta}")
        if self.chi.dimension != 1:
            raise DomainError("offer curve must be a 1D map")

    def evaluate(self, point):
        z_next, w_next = point
        arg = self.a * (1.0 - self.delta + 1.0 / self.a) * z_next - self.a * w_next
        return (self.chi.evaluate(arg), z_next)


@dataclass(frozen=True)
class HeteroMarketMap(MapModel):
    """Two-dimensional heterogeneous-market map with agent fractions."""

    alpha: float
    b: float
    big_b: float
    beta_h: float
    c1: float
    c2: float
    family: str = field(default="hetero_market", init=False)
    dimension: int = field(default=2, init=False)

    def __post_init__(self):
        if self.big_b == 0.0:
            raise DomainError("parameter B must be nonzero")

    def evaluate(self, point):
        z, m = point
        z_next = z * ((1.0 - self.alpha) - self.alpha * self.b * (1.0 - m) / (2.0 * self.big_b))
        m_next = math.tanh(
            (self.beta_h * self.b / 4.0) * z * z * (self.b * (1.0 - m) / self.big_b + 1.0)
            + (self.beta_h / 2.0) * (self.c2 - self.c1)
        )
        return (z_next, m_next)


# ---------------------------------------------------------------------------
# Reports
# ---------------------------------------------------------------------------


class UnimodalType(Enum):
    A = "A"
    B = "B"
    C = "C"
    NOT_UNIMODAL = "not_unimodal"


class FixedPointClass(Enum):
    SINK = "sink"
    SOURCE = "source"
    SADDLE = "saddle"
    NON_HYPERBOLIC = "non_hyperbolic"


@dataclass(frozen=True)
class UnimodalReport:
    type: UnimodalType
    critical_point: float
    critical_value: float
    fixed_points: tuple[tuple[float, float], ...]  # (location, multiplier)
    schwarzian_negative: str  # "yes" | "no" | "undefined-at-samples"
    interval: tuple[float, float]
    tolerances: Tolerances = DEFAULT


@dataclass(frozen=True)
class SnapBackReport:
    holds: bool
    critical_point: float
    fixed_point: float
    third_iterate_of_critical: float
    tolerances: Tolerances = DEFAULT


@dataclass(frozen=True)
class PeriodThreeOrbit:
    points: tuple[float, float, float]
    residual: float


# ---------------------------------------------------------------------------
# Evaluation and derivatives
# ---------------------------------------------------------------------------


def _check_arity(model: MapModel, point) -> None:
    scalar = np.ndim(point) == 0
    if model.dimension == 1 and not scalar:
        raise ArityError(f"{model.family} is 1-dimensional, got point {point!r}")
    if model.dimension == 2 and (scalar or len(point) != 2):
        raise ArityError(f"{model.family} is 2-dimensional, got point {point!r}")


def evaluate_map(model: MapModel, point):
    """Apply the map once.  Pure function of (model, point)."""
    _check_arity(model, point)
    return model.evaluate(point)


def _fd_1d(model: MapModel, x: float, order: int, h: float) -> float:
    f = model.evaluate
    if order == 1:
        return (f(x + h) - f(x - h)) / (2.0 * h)
    if order == 2:
        return (f(x + h) - 2.0 * f(x) + f(x - h)) / (h * h)
    return (f(x + 2 * h) - 2.0 * f(x + h) + 2.0 * f(x - h) - f(x - 2 * h)) / (2.0 * h ** 3)


def jacobian_2d(model: MapModel, point, h: float = DEFAULT.fd_step) -> np.ndarray:
    """Central finite-difference Jacobian of a 2D family at `point`."""
    _check_arity(model, point)
    x, y = float(point[0]), float(point[1])
    fxp = np.asarray(model.evaluate((x + h, y)), dtype=float)
    fxm = np.asarray(model.evaluate((x - h, y)), dtype=float)
    fyp = np.asarray(model.evaluate((x, y + h)), dtype=float)
    fym = np.asarray(model.evaluate((x, y - h)), dtype=float)
    return np.column_stack(((fxp - fxm) / (2 * h), (fyp - fym) / (2 * h)))


def differentiate_map(model: MapModel, point, order: int = 1, h: float = DEFAULT.fd_step):
    """Derivative of the requested order.

    1D families return a float (closed form where available, otherwise
    central finite differences with step ``h``).  2D families return the
    finite-difference Jacobian for order 1 and the pair of component Hessians
    (shape (2, 2, 2)) for order 2; order 3 is unsupported in 2D.
    """
    if order not in (1, 2, 3):
        raise UnsupportedOrder(f"order must be 1, 2 or 3, got {order}")
    _check_arity(model, point)
    if model.dimension == 2:
        if order == 3:
            raise UnsupportedOrder("order-3 derivatives are not defined for 2D families")
        if order == 1:
            return jacobian_2d(model, point, h)
        x, y = float(point[0]), float(point[1])

        def comp(k):
            f = lambda u, v: np.asarray(model.evaluate((u, v)), dtype=float)[k]
            dxx = (f(x + h, y) - 2 * f(x, y) + f(x - h, y)) / (h * h)
            dyy = (f(x, y + h) - 2 * f(x, y) + f(x, y - h)) / (h * h)
            dxy = (f(x + h, y + h) - f(x + h, y - h) - f(x - h, y + h) + f(x - h, y - h)) / (4 * h * h)
            return np.array([[dxx, dxy], [dxy, dyy]])

        return np.stack([comp(0), comp(1)])
    if hasattr(model, "derivative"):
        return float(model.derivative(point, order))
    return _fd_1d(model, float(point), order, h)


def schwarzian(model: MapModel, x: float, tol: Tolerances = DEFAULT) -> float:
    """Schwarzian derivative f'''/f' - (3/2)(f''/f')^2 at a noncritical point."""
    if model.dimension != 1:
        raise ArityError("schwarzian is defined for 1D maps only")
    d1 = differentiate_map(model, x, 1)
    if abs(d1) < tol.tol_crit:
        raise SingularPoint(f"|f'({x})| < {tol.tol_crit}; Schwarzian undefined at critical points")
    d2 = differentiate_map(model, x, 2)
    d3 = differentiate_map(model, x, 3)
    return d3 / d1 - 1.5 * (d2 / d1) ** 2


# ---------------------------------------------------------------------------
# Unimodal structure
# ---------------------------------------------------------------------------


def _grid_values(model: MapModel, xs: np.ndarray) -> np.ndarray:
    try:
        ys = np.asarray(model.evaluate(xs), dtype=float)
        if ys.shape == xs.shape:
            return ys
    except (TypeError, ValueError):
        pass
    return np.array([float(model.evaluate(float(x))) for x in xs])


def _golden_max(f, lo: float, hi: float, tol: float = 1e-12) -> float:
    invphi = (math.sqrt(5.0) - 1.0) / 2.0
    a, b = lo, hi
    c = b - invphi * (b - a)
    d = a + invphi * (b - a)
    fc, fd = f(c), f(d)
    while b - a > tol:
        if fc > fd:
            b, d, fd = d, c, fc
            c = b - invphi * (b - a)
            fc = f(c)
        else:
            a, c, fc = c, d, fd
            d = a + invphi * (b - a)
            fd = f(d)
    return 0.5 * (a + b)


def _bisect(f, lo: float, hi: float, tol: float = 1e-14, max_iter: int = 200) -> float:
    flo = f(lo)
    for _ in range(max_iter):
        mid = 0.5 * (lo + hi)
        fm = f(mid)
        if hi - lo < tol or fm == 0.0:
            return mid
        if (flo < 0) == (fm < 0):
            lo, flo = mid, fm
        else:
            hi = mid
    return 0.5 * (lo + hi)


def _fixed_points(model: MapModel, xs: np.ndarray, ys: np.ndarray, tol: Tolerances):
    g = ys - xs
    roots: list[float] = []
    scale = max(1.0, float(np.max(np.abs(xs))))
    for i, gi in enumerate(g):
        if abs(gi) < tol.tol_fix and (not roots or abs(xs[i] - roots[-1]) > 1e-9 * scale):
            roots.append(float(xs[i]))
    fg = lambda x: float(model.evaluate(x)) - x
    for i in range(len(xs) - 1):
        if g[i] == 0.0 or g[i + 1] == 0.0:
            continue
        if (g[i] < 0) != (g[i + 1] < 0):
            roots.append(_bisect(fg, float(xs[i]), float(xs[i + 1])))
    roots.sort()
    deduped: list[float] = []
    for r in roots:
        if not deduped or abs(r - deduped[-1]) > 1e-8 * scale:
            deduped.append(r)
    return [(r, differentiate_map(model, r, 1)) for r in deduped if abs(fg(r)) < tol.tol_fix]


def analyze_unimodal(
    model: MapModel,
    interval: tuple[float, float],
    grid_n: int = 256,
    tol: Tolerances = DEFAULT,
) -> UnimodalReport:
    """Locate the hump, classify the boundary behaviour, and list fixed points.

    Classification on [a, b] with critical point c:
      type A:  f(a) = a and f(c) < b
      type B:  f(a) > a and f(b) = a
      type C:  f(a) = f(b) = a and f(c) > b
    Raises NotUnimodalError when the sampled map is monotone (or flat), or
    shows more than one interior extremum.
    """
    if model.dimension != 1:
        raise ArityError("unimodal analysis applies to 1D maps only")
    if grid_n < 64:
        raise ValueError("grid_n must be at least 64")
    a, b = float(interval[0]), float(interval[1])
    xs = np.linspace(a, b, grid_n)
    ys = _grid_values(model, xs)

    diffs = np.diff(ys)
    scale = max(1.0, float(np.max(np.abs(ys))))
    rising = diffs > 1e-14 * scale
    falling = diffs < -1e-14 * scale
    if not rising.any() or not falling.any():
        raise NotUnimodalError("map is monotone or flat on the sampled grid")
    # one sign change rising -> falling; anything else is multimodal
    first_fall = int(np.argmax(falling))
    if rising[first_fall:].any():
        raise NotUnimodalError("multiple interior extrema detected on the grid")
    m = int(np.argmax(ys))
    if m == 0 or m == grid_n - 1:
        raise NotUnimodalError("maximum attained at an endpoint; map is monotone")

    f = lambda x: float(model.evaluate(x))
    x_m = _golden_max(f, float(xs[m - 1]), float(xs[m + 1]))
    f_c = f(x_m)

    fa, fb = float(ys[0]), float(ys[-1])
    if abs(fa - a) < tol.tol_fix and abs(fb - a) < tol.tol_fix and f_c > b:
        kind = UnimodalType.C
    elif abs(fa - a) < tol.tol_fix and f_c < b:
        kind = UnimodalType.A
    elif fa > a + tol.tol_fix and abs(fb - a) < tol.tol_fix:
        kind = UnimodalType.B
    else:
        kind = UnimodalType.NOT_UNIMODAL

    sch = "undefined-at-samples"
    values = []
    for x in xs[1:-1]:
        try:
            values.append(schwarzian(model, float(x), tol))
        except (SingularPoint, UnsupportedOrder, ZeroDivisionError):
            continue
    if values:
        sch = "yes" if all(v < 0 for v in values) else "no"

    return UnimodalReport(
        type=kind,
        critical_point=x_m,
        critical_value=f_c,
        fixed_points=tuple(_fixed_points(model, xs, ys, tol)),
        schwarzian_negative=sch,
        interval=(a, b),
        tolerances=tol,
    )


# ---------------------------------------------------------------------------
# Inverse branches
# ---------------------------------------------------------------------------


def inverse_branches(
    model: MapModel,
    y: float,
    interval: tuple[float, float] | None = None,
    tol: Tolerances = DEFAULT,
) -> list[float]:
    """All preimages of ``y`` inside the interval, sorted ascending.

    Logistic maps use the closed-form quadratic roots; other 1D families
    bisect each monotone branch found by `analyze_unimodal`.  Raises
    NoPreimage when ``y`` exceeds the maximum value on the interval.
    """
    if model.dimension != 1:
        raise ArityError("inverse branches are defined for 1D maps only")
    if interval is None:
        interval = model.domain_interval()
        if interval is None:
            raise ValueError(f"{model.family} needs an explicit interval")
    a, b = interval

    if isinstance(model, LogisticMap):
        nu = model.nu
        if y > nu / 4.0 + tol.tol_root:
            raise NoPreimage(f"{y} exceeds the maximum value {nu / 4.0}")
        disc = math.sqrt(max(1.0 - 4.0 * y / nu, 0.0))
        roots = [0.5 * (1.0 - disc), 0.5 * (1.0 + disc)]
        return sorted(r for r in roots if a - tol.tol_root <= r <= b + tol.tol_root)

    report = analyze_unimodal(model, (a, b), tol=tol)
    x_m, f_c = report.critical_point, report.critical_value
    if y > f_c + tol.tol_root:
        raise NoPreimage(f"{y} exceeds the maximum value {f_c}")
    f = lambda x: float(model.evaluate(x))
    roots = []
    for lo, hi in ((a, x_m), (x_m, b)):
        glo, ghi = f(lo) - y, f(hi) - y
        if glo == 0.0:
            roots.append(lo)
        elif ghi == 0.0:
            roots.append(hi)
        elif (glo < 0) != (ghi < 0):
            roots.append(_bisect(lambda x: f(x) - y, lo, hi))
    roots = sorted(set(roots))
    return [r for r in roots if abs(f(r) - y) < max(tol.tol_root, 1e-11)]


# ---------------------------------------------------------------------------
# Chaos detectors
# ---------------------------------------------------------------------------


def cobweb_repelling_threshold(alpha: float) -> float:
    """Adjustment-elasticity threshold (2 - alpha) / alpha above which z = 1 repels."""
    if not 0.0 < alpha < 1.0:
        raise DomainError(f"alpha must lie in (0, 1), got {alpha}")
    return (2.0 - alpha) / alpha


def is_repelling(alpha: float, beta_c: float) -> bool:
    """True iff the unique cobweb fixed point z = 1 is a repeller."""
    return beta_c > cobweb_repelling_threshold(alpha)


def snap_back_check(
    model: MapModel,
    interval: tuple[float, float],
    grid_n: int = 512,
    tol: Tolerances = DEFAULT,
) -> SnapBackReport:
    """Check the third-iterate criterion for a snap-back repeller.

    Computes the third iterate of the critical point by three exact map
    applications and compares it with the interior fixed point: the
    criterion holds when the iterate falls strictly below it.
    """
    report = analyze_unimodal(model, interval, grid_n, tol)
    a, b = report.interval
    margin = 1e-9 * max(1.0, abs(b - a))
    interior = [p for p, _ in report.fixed_points if a + margin < p < b - margin]
    if not interior:
        raise NoInteriorFixedPoint(f"no fixed point strictly inside {interval}")
    x_star = interior[-1]
    x = report.critical_point
    for _ in range(3):
        x = float(model.evaluate(x))
    return SnapBackReport(
        holds=bool(x < x_star),
        critical_point=report.critical_point,
        fixed_point=x_star,
        third_iterate_of_critical=x,
        tolerances=tol,
    )


def find_period3(
    model: MapModel,
    interval: tuple[float, float],
    grid_n: int = 100_000,
    tol: Tolerances = DEFAULT,
) -> PeriodThreeOrbit | None:
    """Locate a genuine period-3 orbit by sign-change bisection on f^3(x) - x.

    Roots that are fixed points of f are filtered out.  Returns None when no
    non-fixed root exists on the grid (not an error: absence of period 3 is a
    meaningful answer).
    """
    if model.dimension != 1:
        raise ArityError("period-3 search applies to 1D maps only")
    a, b = float(interval[0]), float(interval[1])
    xs = np.linspace(a, b, grid_n)
    y = _grid_values(model, xs)
    y = _grid_values(model, y)
    y = _grid_values(model, y)
    g = y - xs

    def f3(x: float) -> float:
        for _ in range(3):
            x = float(model.evaluate(x))
        return x

    sign_change = (g[:-1] * g[1:]) < 0.0
    for i in np.nonzero(sign_change)[0]:
        p = _bisect(lambda x: f3(x) - x, float(xs[i]), float(xs[i + 1]), tol=1e-15)
        if abs(float(model.evaluate(p)) - p) <= tol.tol_fix:
            continue  # fixed point of f, not period 3
        q = float(model.evaluate(p))
        r = float(model.evaluate(q))
        residual = abs(f3(p) - p)
        if residual < tol.tol_root * max(1.0, abs(p)) * 10 or residual < 1e-10:
            return PeriodThreeOrbit(points=(p, q, r), residual=residual)
    return None


def classify_fixed_point_2d(
    model: MapModel,
    point,
    tol: Tolerances = DEFAULT,
) -> FixedPointClass:
    """Classify a fixed point of a 2D family by its Jacobian eigenvalues."""
    if model.dimension != 2:
        raise ArityError("classification applies to 2D maps only")
    image = model.evaluate(point)
    residual = max(abs(image[0] - point[0]), abs(image[1] - point[1]))
    if residual >= tol.tol_fix:
        raise NotFixed(f"|f(p) - p| = {residual} exceeds {tol.tol_fix}")
    moduli = np.abs(np.linalg.eigvals(jacobian_2d(model, point, tol.fd_step)))
    if np.any(np.abs(moduli - 1.0) <= tol.tol_hyp):
        return FixedPointClass.NON_HYPERBOLIC
    inside = moduli < 1.0 - tol.tol_hyp
    if inside.all():
        return FixedPointClass.SINK
    if not inside.any():
        return FixedPointClass.SOURCE
    return FixedPointClass.SADDLE
