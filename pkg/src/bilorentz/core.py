"""Two-branch generalized boost transformations in 1+1 dimensions.

Events and displacements are pairs (c1, c2) in length units; velocities are
dimensionless (units of c).  Two constructor families exist:

* the symmetric family ``make_lambda(tau, k, v)``, defined for k*v**2 < 1,
  which contains the standard Lorentz boosts at k = 1, and
* the antisymmetric family ``make_l(tau, k, w)``, defined for k*w**2 > 1,
  which for k = 1 equals a coordinate swap composed with a standard boost
  at the inverse velocity 1/w.

All operations are pure functions on immutable values.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum

Mat = tuple[tuple[float, float], tuple[float, float]]

IDENTITY_MAT: Mat = ((1.0, 0.0), (0.0, 1.0))
SWAP_MAT: Mat = ((0.0, 1.0), (1.0, 0.0))
PARITY_MAT: Mat = ((1.0, 0.0), (0.0, -1.0))

#: Absolute comparison tolerance for O(1) matrix entries and interval signs.
DEFAULT_TOL = 1e-12


class DomainError(ValueError):
    """Parameters fall outside the domain of a transformation family."""


class SingularMatrixError(ValueError):
    """A matrix with (near-)zero determinant cannot be inverted."""


class NotDecomposableError(ValueError):
    """The transform does not match the family form a decomposition needs."""


class DegenerateDisplacementError(ValueError):
    """A zero displacement has no coordinate speed."""


class BranchKind(Enum):
    SYMMETRIC_LAMBDA = "lambda"
    ANTISYMMETRIC_L = "l"
    DERIVED = "derived"


class CausalClass(Enum):
    TIMELIKE = "timelike"
    LIGHTLIKE = "lightlike"
    SPACELIKE = "spacelike"


@dataclass(frozen=True)
class TwoVector:
    """An event or displacement (c1, c2); both components in length units."""

    c1: float
    c2: float

    def __post_init__(self):
        object.__setattr__(self, "c1", float(self.c1))
        object.__setattr__(self, "c2", float(self.c2))
        if not (math.isfinite(self.c1) and math.isfinite(self.c2)):
            raise ValueError(
                f"TwoVector components must be finite, got ({self.c1}, {self.c2})"
            )


@dataclass(frozen=True)
class Transform:
    """A 2x2 coordinate transformation plus construction provenance.

    Family-constructed transforms carry (tau, k, vel); transforms produced by
    composition, inversion or conjugation are tagged DERIVED and carry none.
    ``vel`` is ``math.inf`` for the infinite-velocity limit constructor.
    """

    m: Mat
    branch: BranchKind
    tau: int | None = None
    k: float | None = None
    vel: float | None = None


@dataclass(frozen=True)
class Metric:
    """Symmetric non-degenerate quadratic form giving the interval squared."""

    g: Mat

    def __post_init__(self):
        (a, b), (c, d) = self.g
        if b != c:
            raise ValueError("metric matrix must be symmetric")
        if a * d - b * c == 0.0:
            raise ValueError("metric matrix must be non-degenerate")


#: Metric of measurement-induced coordinates: interval = c1**2 - c2**2.
STANDARD_METRIC = Metric(((1.0, 0.0), (0.0, -1.0)))
#: Same form with the roles of the two coordinates exchanged.
SWAPPED_METRIC = Metric(((-1.0, 0.0), (0.0, 1.0)))


@dataclass(frozen=True)
class CoordinateSpeed:
    """Nonnegative |dc2/dc1| in units of c; math.inf for vertical displacements."""

    value: float

    @property
    def superluminal(self) -> bool:
        return self.value > 1.0


@dataclass(frozen=True)
class CausalReport:
    """Joint coordinate-speed and interval-sign classification of a displacement."""

    coord_speed: CoordinateSpeed
    coord_superluminal: bool
    interval_sq: float
    causal_class: CausalClass


# ---------------------------------------------------------------------------
# gamma factors and family constructors
# ---------------------------------------------------------------------------

def gamma_symmetric(k: float, v: float, sign: int = 1) -> float:
    """Even gamma factor sign / sqrt(1 - k*v**2), defined for k*v**2 < 1."""
    if not math.isfinite(v):
        raise DomainError(f"velocity must be finite, got {v}")
    kv2 = k * v * v
    if not kv2 < 1.0:
        raise DomainError(f"symmetric family undefined for k*v**2 = {kv2} >= 1")
    return sign / math.sqrt(1.0 - kv2)


def gamma_antisymmetric(k: float, w: float, sign: int = 1) -> float:
    """Odd gamma factor sign * (w/|w|) / sqrt(k*w**2 - 1), defined for k*w**2 > 1."""
    if not math.isfinite(w):
        raise DomainError(f"velocity must be finite, got {w}")
    if w == 0.0:
        raise DomainError("antisymmetric gamma undefined at w = 0")
    kw2 = k * w * w
    if not kw2 > 1.0:
        raise DomainError(f"antisymmetric family undefined for k*w**2 = {kw2} <= 1")
    return sign * math.copysign(1.0, w) / math.sqrt(kw2 - 1.0)


def _check_tau(tau: int) -> None:
    if tau not in (1, -1):
        raise DomainError(f"tau must be +1 or -1, got {tau}")


def make_lambda(tau: int, k: float, v: float) -> Transform:
    """Symmetric-family transform tau / sqrt(1 - k*v**2) * [[1, -v], [-v, 1]]."""
    _check_tau(tau)
    g = gamma_symmetric(k, v, tau)
    m = ((g, -g * v), (-g * v, g))
    return Transform(m=m, branch=BranchKind.SYMMETRIC_LAMBDA,
                     tau=tau, k=float(k), vel=float(v))


def make_lambda_infinite_limit(tau: int, k: float) -> Transform:
    """Infinite-velocity limit of the symmetric family, tau / sqrt(-k) * [[0, -1], [-1, 0]].

    The limit exists only for k < 0: the diagonal entries vanish while the
    off-diagonal ones tend to -tau/sqrt(-k).  Computed analytically; feeding
    an infinite velocity into make_lambda would give 0 * inf indeterminates.
    """
    _check_tau(tau)
    if not (math.isfinite(k) and k < 0.0):
        raise DomainError(f"infinite-velocity limit diverges for k = {k} >= 0")
    a = -tau / math.sqrt(-k)
    m = ((0.0, a), (a, 0.0))
    return Transform(m=m, branch=BranchKind.SYMMETRIC_LAMBDA,
                     tau=tau, k=float(k), vel=math.inf)


def make_l(tau: int, k: float, w: float) -> Transform:
    """Antisymmetric-family transform tau * (w/|w|) / sqrt(k*w**2 - 1) * [[1, -w], [-w, 1]]."""
    _check_tau(tau)
    g = gamma_antisymmetric(k, w, tau)
    m = ((g, -g * w), (-g * w, g))
    return Transform(m=m, branch=BranchKind.ANTISYMMETRIC_L,
                     tau=tau, k=float(k), vel=float(w))


# ---------------------------------------------------------------------------
# 2x2 matrix plumbing
# ---------------------------------------------------------------------------

def _mat_mul(a: Mat, b: Mat) -> Mat:
    (a00, a01), (a10, a11) = a
    (b00, b01), (b10, b11) = b
    return ((a00 * b00 + a01 * b10, a00 * b01 + a01 * b11),
            (a10 * b00 + a11 * b10, a10 * b01 + a11 * b11))


def _mat_det(m: Mat) -> float:
    (a, b), (c, d) = m
    return a * d - b * c


def _mat_inv(m: Mat, tol: float = DEFAULT_TOL) -> Mat:
    (a, b), (c, d) = m
    det = a * d - b * c
    if abs(det) <= tol:
        raise SingularMatrixError(f"matrix determinant {det} below tolerance {tol}")
    return ((d / det, -b / det), (-c / det, a / det))


def _mat_transpose(m: Mat) -> Mat:
    (a, b), (c, d) = m
    return ((a, c), (b, d))


# ---------------------------------------------------------------------------
# operations on transforms
# ---------------------------------------------------------------------------

def apply(t: Transform, x: TwoVector) -> TwoVector:
    """Matrix-vector product t.m @ (x.c1, x.c2)."""
    (a, b), (c, d) = t.m
    return TwoVector(a * x.c1 + b * x.c2, c * x.c1 + d * x.c2)


def compose(a: Transform, b: Transform) -> Transform:
    """Matrix product a.m @ b.m: the composite applies b first, then a."""
    return Transform(m=_mat_mul(a.m, b.m), branch=BranchKind.DERIVED)


def inverse(t: Transform) -> Transform:
    """Inverse transform; family metadata is not carried over."""
    return Transform(m=_mat_inv(t.m), branch=BranchKind.DERIVED)


def parity_conjugate(t: Transform) -> Transform:
    """Conjugate by the spatial reflection P = diag(1, -1), i.e. P @ t.m @ P.

    Velocity reversal for the symmetric family; the antisymmetric family
    picks up an overall sign on top of the reversal, which is exactly why it
    cannot arise from the parity-covariant construction.
    """
    m = _mat_mul(PARITY_MAT, _mat_mul(t.m, PARITY_MAT))
    return Transform(m=m, branch=BranchKind.DERIVED)


def k_constant(gamma_plus: float, gamma_minus: float, v: float) -> float:
    """Family invariant (g(v)*g(-v) - 1) / (v**2 * g(v)*g(-v))."""
    if v == 0.0:
        raise DomainError("k_constant undefined at v = 0")
    prod = gamma_plus * gamma_minus
    if prod == 0.0:
        raise DomainError("k_constant undefined for a vanishing gamma product")
    return (prod - 1.0) / (v * v * prod)


def swap_decompose(t: Transform) -> tuple[bool, Transform]:
    """Split a (tau=-1, k=1) antisymmetric-family transform into swap and boost.

    Returns (True, lam) with lam = make_lambda(1, 1, 1/w) such that
    SWAP_MAT @ lam.m reproduces t.m.  Raises NotDecomposableError for any
    transform not constructed as make_l(-1, 1, w).
    """
    if (t.branch is not BranchKind.ANTISYMMETRIC_L
            or t.tau != -1 or t.k != 1.0 or t.vel is None):
        raise NotDecomposableError(
            "swap decomposition needs an antisymmetric-family transform "
            "with tau = -1 and k = 1")
    return True, make_lambda(1, 1.0, 1.0 / t.vel)


def refit(t: Transform, k: float = 1.0, tol: float = 1e-9) -> Transform:
    """Match a matrix back onto a family form with the given k.

    Tries the symmetric family, then the antisymmetric one, comparing the
    reconstructed matrix elementwise within tol.  Useful for checking that a
    product of family transforms lands back in a family.  Raises
    NotDecomposableError when the matrix fits neither family at this k.
    """
    (a, b), (c, d) = t.m
    if a == 0.0 or abs(a - d) > tol or abs(b - c) > tol:
        raise NotDecomposableError("matrix is not of the form [[p, q], [q, p]]")
    vel = -b / a
    sign_a = 1 if a > 0 else -1
    candidates = [(make_lambda, sign_a)]
    if vel != 0.0:
        candidates.append((make_l, sign_a * (1 if vel > 0 else -1)))
    for ctor, tau in candidates:
        try:
            cand = ctor(tau, k, vel)
        except DomainError:
            continue
        if all(abs(cand.m[i][j] - t.m[i][j]) <= tol for i in (0, 1) for j in (0, 1)):
            return cand
    raise NotDecomposableError(f"matrix does not fit either family at k = {k}")


# ---------------------------------------------------------------------------
# intervals, metrics and causal classification
# ---------------------------------------------------------------------------

def interval_squared(d: TwoVector, g: Metric) -> float:
    """Quadratic form d^T g d; with STANDARD_METRIC this is c1**2 - c2**2."""
    (g11, g12), (g21, g22) = g.g
    return (g11 * d.c1 + g12 * d.c2) * d.c1 + (g21 * d.c1 + g22 * d.c2) * d.c2


def transform_metric(t: Transform, g: Metric) -> Metric:
    """Metric in the image coordinates: (m^-1)^T g m^-1.

    Chosen so that interval_squared(apply(t, d), transform_metric(t, g))
    always equals interval_squared(d, g); the off-diagonal entries are
    averaged to keep the result exactly symmetric under roundoff.
    """
    inv = _mat_inv(t.m)
    h = _mat_mul(_mat_transpose(inv), _mat_mul(g.g, inv))
    off = 0.5 * (h[0][1] + h[1][0])
    return Metric(((h[0][0], off), (off, h[1][1])))


def classify_coordinate(d: TwoVector) -> CoordinateSpeed:
    """Coordinate speed |c2/c1|, or inf when the displacement is vertical."""
    if d.c1 == 0.0 and d.c2 == 0.0:
        raise DegenerateDisplacementError("zero displacement has no coordinate speed")
    if d.c1 == 0.0:
        return CoordinateSpeed(math.inf)
    return CoordinateSpeed(abs(d.c2 / d.c1))


def classify_geometric(d: TwoVector, g: Metric, tol: float = DEFAULT_TOL) -> CausalReport:
    """Classify a displacement by coordinate speed and by interval sign.

    The interval sign is the coordinate-independent notion: an interval
    above +tol is timelike, below -tol spacelike, lightlike in between.
    """
    speed = classify_coordinate(d)
    s2 = interval_squared(d, g)
    if s2 > tol:
        causal = CausalClass.TIMELIKE
    elif s2 < -tol:
        causal = CausalClass.SPACELIKE
    else:
        causal = CausalClass.LIGHTLIKE
    return CausalReport(coord_speed=speed, coord_superluminal=speed.value > 1.0,
                        interval_sq=s2, causal_class=causal)


def measured_displacement(d_eta: TwoVector) -> TwoVector:
    """Reinterpret a raw transformed displacement by swapping its components.

    The first component of the result is read as c*dt and the second as dx
    by the observer attached to the transformed frame.
    """
    return TwoVector(d_eta.c2, d_eta.c1)
