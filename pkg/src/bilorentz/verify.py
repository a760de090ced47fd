"""Mechanical verification of the transformation-family identities.

Each check reports the maximal residual over a parameter grid or a seeded
fuzz population; a run passes only when every residual stays within its
tolerance.  Grid checks are deterministic; fuzz checks are reproducible
from (seed, trials).
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from . import core
from .core import STANDARD_METRIC, BranchKind, CausalClass, TwoVector


@dataclass(frozen=True)
class CheckResult:
    name: str
    residual: float
    tolerance: float

    @property
    def passed(self) -> bool:
        return self.residual <= self.tolerance


@dataclass(frozen=True)
class VerificationReport:
    seed: int
    trials: int
    checks: tuple[CheckResult, ...]

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)


_K_VALUES = (-1.0, -0.5, 0.5, 1.0)
_SWAP = np.array(core.SWAP_MAT)


def _w_grid() -> np.ndarray:
    half = np.linspace(1.001, 100.0, 200)
    return np.concatenate([half, -half])


def _lambda_domain_velocities(k: float, count: int = 50) -> np.ndarray:
    """Velocities spanning the k*v**2 < 1 domain, both signs, zero excluded."""
    if k > 0:
        half = np.linspace(0.01, 0.99, count) / math.sqrt(k)
    else:
        half = np.linspace(0.1, 10.0, count)
    return np.concatenate([half, -half])


def _l_domain_velocities(k: float, count: int = 50) -> np.ndarray:
    """Velocities spanning the k*w**2 > 1 domain; empty for k <= 0."""
    if k <= 0:
        return np.array([])
    half = np.linspace(1.01, 50.0, count) / math.sqrt(k)
    return np.concatenate([half, -half])


def _sample_family_transforms(rng: np.random.Generator, per_branch: int) -> list:
    ts = []
    for _ in range(per_branch):
        tau = 1 if rng.random() < 0.5 else -1
        ts.append(core.make_lambda(tau, 1.0, float(rng.uniform(-0.95, 0.95))))
    for _ in range(per_branch):
        tau = 1 if rng.random() < 0.5 else -1
        w = float(rng.uniform(1.05, 10.0)) * (1.0 if rng.random() < 0.5 else -1.0)
        ts.append(core.make_l(tau, 1.0, w))
    return ts


def _quad_form(d: np.ndarray, g: np.ndarray) -> np.ndarray:
    return (g[0, 0] * d[:, 0] ** 2
            + (g[0, 1] + g[1, 0]) * d[:, 0] * d[:, 1]
            + g[1, 1] * d[:, 1] ** 2)


def _max_abs_diff(a, b) -> float:
    return max(abs(a[i][j] - b[i][j]) for i in (0, 1) for j in (0, 1))


def check_gamma_parity() -> CheckResult:
    """gamma_symmetric is exactly even, gamma_antisymmetric exactly odd."""
    worst = 0.0
    for k in _K_VALUES:
        for v in _lambda_domain_velocities(k, 25):
            worst = max(worst, abs(core.gamma_symmetric(k, float(v))
                                   - core.gamma_symmetric(k, float(-v))))
        for w in _l_domain_velocities(k, 25):
            worst = max(worst, abs(core.gamma_antisymmetric(k, float(w))
                                   + core.gamma_antisymmetric(k, float(-w))))
    return CheckResult("gamma_parity", worst, 0.0)


def check_k_recovery() -> CheckResult:
    """k_constant applied to constructed gamma pairs gives back the input k."""
    worst = 0.0
    for k in _K_VALUES:
        for v in _lambda_domain_velocities(k):
            v = float(v)
            rec = core.k_constant(core.gamma_symmetric(k, v),
                                  core.gamma_symmetric(k, -v), v)
            worst = max(worst, abs(rec - k))
        for w in _l_domain_velocities(k):
            w = float(w)
            rec = core.k_constant(core.gamma_antisymmetric(k, w),
                                  core.gamma_antisymmetric(k, -w), w)
            worst = max(worst, abs(rec - k))
    return CheckResult("k_recovery", worst, 1e-10)


def check_determinant_law() -> CheckResult:
    """det lambda = (1 - v**2)/(1 - k*v**2); at k = 1 the families have det +1/-1."""
    worst = 0.0
    for k in _K_VALUES:
        for tau in (1, -1):
            for v in _lambda_domain_velocities(k, 25):
                v = float(v)
                (a, b), (c, d) = core.make_lambda(tau, k, v).m
                expected = (1.0 - v * v) / (1.0 - k * v * v)
                worst = max(worst, abs(a * d - b * c - expected))
    for tau in (1, -1):
        for v in np.linspace(-0.9, 0.9, 19):
            (a, b), (c, d) = core.make_lambda(tau, 1.0, float(v)).m
            worst = max(worst, abs(a * d - b * c - 1.0))
        for w in _w_grid():
            (a, b), (c, d) = core.make_l(tau, 1.0, float(w)).m
            worst = max(worst, abs(a * d - b * c + 1.0))
    return CheckResult("determinant_law", worst, 1e-12)


def check_swap_decomposition() -> CheckResult:
    """swap @ make_lambda(1, 1, 1/w) reproduces make_l(-1, 1, w) elementwise."""
    worst = 0.0
    for w in _w_grid():
        w = float(w)
        left = _SWAP @ np.asarray(core.make_lambda(1, 1.0, 1.0 / w).m)
        right = np.asarray(core.make_l(-1, 1.0, w).m)
        worst = max(worst, float(np.max(np.abs(left - right))))
    return CheckResult("swap_decomposition", worst, 1e-12)


def check_inverse_law() -> CheckResult:
    """make_l(-1, 1, w) composed with make_l(-1, 1, -w) is the identity."""
    ident = np.eye(2)
    worst = 0.0
    for w in _w_grid():
        w = float(w)
        prod = (np.asarray(core.make_l(-1, 1.0, w).m)
                @ np.asarray(core.make_l(-1, 1.0, -w).m))
        worst = max(worst, float(np.max(np.abs(prod - ident))))
    return CheckResult("inverse_law", worst, 1e-12)


def check_parity_forcing() -> CheckResult:
    """Parity conjugation reverses velocity; the antisymmetric branch also flips sign."""
    worst = 0.0
    for tau in (1, -1):
        for k in _K_VALUES:
            for v in _lambda_domain_velocities(k, 7):
                v = float(v)
                pc = core.parity_conjugate(core.make_lambda(tau, k, v))
                worst = max(worst, _max_abs_diff(pc.m, core.make_lambda(tau, k, -v).m))
            for w in _l_domain_velocities(k, 7):
                w = float(w)
                pc = core.parity_conjugate(core.make_l(tau, k, w))
                neg = [[-x for x in row] for row in core.make_l(tau, k, -w).m]
                worst = max(worst, _max_abs_diff(pc.m, neg))
    return CheckResult("parity_forcing", worst, 1e-12)


def check_parity_violation_antisymmetric() -> CheckResult:
    """No antisymmetric-family transform satisfies the parity covariance rule.

    The deviation of P L(w) P from L(-w) must stay large (>= 0.5 elementwise
    somewhere) across the whole grid; the residual is how far below that
    margin the smallest deviation falls.
    """
    min_dev = math.inf
    for tau in (1, -1):
        for k in (0.5, 1.0):
            for w in _l_domain_velocities(k, 13):
                w = float(w)
                pc = core.parity_conjugate(core.make_l(tau, k, w))
                dev = _max_abs_diff(pc.m, core.make_l(tau, k, -w).m)
                min_dev = min(min_dev, dev)
    return CheckResult("antisymmetric_parity_violation", max(0.0, 0.5 - min_dev), 0.0)


def check_composition_closure() -> CheckResult:
    """Products of k=1 family transforms refit the symmetric family.

    Two symmetric transforms compose with the relativistic velocity sum;
    two antisymmetric ones also land in the symmetric family, at velocity
    (w1 + w2)/(1 + w1*w2).
    """
    worst = 0.0
    vs = (-0.9, -0.5, -0.1, 0.2, 0.6, 0.8)
    for v1 in vs:
        for v2 in vs:
            prod = core.compose(core.make_lambda(1, 1.0, v1), core.make_lambda(1, 1.0, v2))
            try:
                fitted = core.refit(prod, k=1.0)
            except core.NotDecomposableError:
                return CheckResult("composition_closure", math.inf, 1e-9)
            if fitted.branch is not BranchKind.SYMMETRIC_LAMBDA:
                return CheckResult("composition_closure", math.inf, 1e-9)
            worst = max(worst, abs(fitted.vel - (v1 + v2) / (1.0 + v1 * v2)))
    ws = (-5.0, -2.0, -1.5, 1.2, 3.0, 10.0)
    for w1 in ws:
        for w2 in ws:
            prod = core.compose(core.make_l(-1, 1.0, w1), core.make_l(-1, 1.0, w2))
            try:
                fitted = core.refit(prod, k=1.0)
            except core.NotDecomposableError:
                return CheckResult("composition_closure", math.inf, 1e-9)
            if fitted.branch is not BranchKind.SYMMETRIC_LAMBDA:
                return CheckResult("composition_closure", math.inf, 1e-9)
            worst = max(worst, abs(fitted.vel - (w1 + w2) / (1.0 + w1 * w2)))
    return CheckResult("composition_closure", worst, 1e-9)


def check_interval_invariance(rng: np.random.Generator, trials: int) -> CheckResult:
    """interval_squared is unchanged by (apply, transform_metric) pairs.

    The discrepancy is measured relative to max(|before|, |after|, 1); the
    unit floor keeps near-lightlike displacements from dividing by zero.
    """
    d = rng.uniform(-1.0, 1.0, size=(trials, 2))
    g = np.asarray(STANDARD_METRIC.g, dtype=float)
    s_before = _quad_form(d, g)
    worst = 0.0
    for t in _sample_family_transforms(rng, 10):
        gp = np.asarray(core.transform_metric(t, STANDARD_METRIC).g, dtype=float)
        dp = d @ np.asarray(t.m).T
        s_after = _quad_form(dp, gp)
        denom = np.maximum(1.0, np.maximum(np.abs(s_before), np.abs(s_after)))
        worst = max(worst, float(np.max(np.abs(s_after - s_before) / denom)))
    return CheckResult("interval_invariance", worst, 1e-9)


def check_light_cone_preservation(rng: np.random.Generator, trials: int) -> CheckResult:
    """Lightlike displacements stay lightlike under every family transform."""
    a = rng.uniform(0.01, 1.0, size=trials) * rng.choice([-1.0, 1.0], size=trials)
    d = np.stack([a, a * rng.choice([-1.0, 1.0], size=trials)], axis=1)
    worst = 0.0
    for t in _sample_family_transforms(rng, 5):
        dp = d @ np.asarray(t.m).T
        worst = max(worst, float(np.max(np.abs(np.abs(dp[:, 0]) - np.abs(dp[:, 1])))))
    return CheckResult("light_cone_preservation", worst, 1e-12)


def check_causal_class_absoluteness(rng: np.random.Generator, trials: int) -> CheckResult:
    """The timelike/lightlike/spacelike class never changes across frames."""
    tol = core.DEFAULT_TOL
    d = rng.uniform(-1.0, 1.0, size=(trials, 2))
    g = np.asarray(STANDARD_METRIC.g, dtype=float)
    s_before = _quad_form(d, g)
    cls_before = np.where(s_before > tol, 1, np.where(s_before < -tol, -1, 0))
    mismatches = 0
    for t in _sample_family_transforms(rng, 5):
        gp = np.asarray(core.transform_metric(t, STANDARD_METRIC).g, dtype=float)
        dp = d @ np.asarray(t.m).T
        s_after = _quad_form(dp, gp)
        cls_after = np.where(s_after > tol, 1, np.where(s_after < -tol, -1, 0))
        mismatches += int(np.sum(cls_before != cls_after))
    return CheckResult("causal_class_absoluteness", float(mismatches), 0.0)


def check_measured_speed_bound(rng: np.random.Generator, trials: int) -> CheckResult:
    """Swapped-readout speeds of subluminal worldlines stay strictly below 1."""
    v = rng.uniform(-0.99, 0.99, size=trials)
    worst = 0.0
    for _ in range(5):
        w = float(rng.uniform(1.05, 10.0)) * (1.0 if rng.random() < 0.5 else -1.0)
        m = np.asarray(core.make_l(-1, 1.0, w).m)
        eta1 = m[0, 0] + m[0, 1] * v
        eta2 = m[1, 0] + m[1, 1] * v
        worst = max(worst, float(np.max(np.abs(eta1 / eta2))))
    return CheckResult("measured_speed_bound", worst, 1.0 - 1e-9)


def check_divergence_witness() -> CheckResult:
    """Displacement (2, 1) flips coordinate superluminality under make_l(-1, 1, 2)
    while its interval squared stays 3 and its causal class stays timelike."""
    t = core.make_l(-1, 1.0, 2.0)
    d = TwoVector(2.0, 1.0)
    before = core.classify_geometric(d, STANDARD_METRIC)
    after = core.classify_geometric(core.apply(t, d),
                                    core.transform_metric(t, STANDARD_METRIC))
    worst = max(abs(before.interval_sq - 3.0), abs(after.interval_sq - 3.0),
                abs(before.coord_speed.value - 0.5))
    flipped = (not before.coord_superluminal and after.coord_superluminal
               and math.isinf(after.coord_speed.value)
               and before.causal_class is CausalClass.TIMELIKE
               and after.causal_class is CausalClass.TIMELIKE)
    if not flipped:
        worst = math.inf
    return CheckResult("divergence_witness", worst, 1e-12)


def run_verification(trials: int = 100_000, seed: int = 0) -> VerificationReport:
    """Run every identity check; grid checks ignore the trial count."""
    if trials < 1:
        raise ValueError("trials must be positive")
    rng = np.random.default_rng(seed)
    checks = (
        check_gamma_parity(),
        check_k_recovery(),
        check_determinant_law(),
        check_swap_decomposition(),
        check_inverse_law(),
        check_parity_forcing(),
        check_parity_violation_antisymmetric(),
        check_composition_closure(),
        check_interval_invariance(rng, trials),
        check_light_cone_preservation(rng, trials),
        check_causal_class_absoluteness(rng, trials),
        check_measured_speed_bound(rng, trials),
        check_divergence_witness(),
    )
    return VerificationReport(seed=seed, trials=trials, checks=checks)


def format_report(report: VerificationReport) -> str:
    lines = [f"seed={report.seed} trials={report.trials}"]
    for c in report.checks:
        status = "PASS" if c.passed else "FAIL"
        lines.append(f"{c.name}: max_residual={c.residual:.6e} "
                     f"tol={c.tolerance:.10g} {status}")
    failed = sum(1 for c in report.checks if not c.passed)
    if failed:
        lines.append(f"{failed} of {len(report.checks)} identity checks failed")
    else:
        lines.append(f"all {len(report.checks)} identity checks within tolerance")
    return "\n".join(lines)
