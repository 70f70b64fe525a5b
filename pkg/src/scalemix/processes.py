"""Exact, seed-deterministic simulation of the base sequences, the factor
sequences, and their scale-mixture composition.

Base margins are exact Pareto: F(x) = 1 - x**(-beta) on x >= 1 (the slowly
varying part is fixed to the constant 1), so the stationary closed forms used
elsewhere are exact rather than asymptotic.  Max-autoregressions are started
from the exact stationary law, so paths are stationary from the first index.
"""

from __future__ import annotations

import hashlib
import io
import struct
from dataclasses import dataclass, field
from typing import Optional, Sequence, Union

import numpy as np

__all__ = [
    "ParetoMargin",
    "IIDPareto",
    "ARMAX",
    "PARMAX",
    "MovingMax2",
    "CrossMax2Dep",
    "Degenerate",
    "IIDBernoulli",
    "IIDFrechet",
    "IIDUniform01",
    "BoundedInverseCDF",
    "CommonFactorAcrossMargins",
    "CommonFactorSpec",
    "FactorMoments",
    "SamplePath",
    "sample_pareto",
    "pareto_quantile",
    "armax_innovation_cdf",
    "armax_innovation_quantile",
    "parmax_innovation_cdf",
    "parmax_innovation_pdf",
    "parmax_innovation_quantile",
    "simulate_y",
    "simulate_t",
    "compose_mixture",
    "compose_common_factor",
    "factor_moments",
    "sample_logistic_mev",
    "sample_asym_logistic_mev",
]


# ---------------------------------------------------------------------------
# domain types


@dataclass(frozen=True)
class ParetoMargin:
    """Exact Pareto margin with tail exponent beta: F(x) = 1 - x**(-beta), x >= 1."""

    beta: float

    def __post_init__(self):
        if not self.beta > 0:
            raise ValueError(f"beta must be positive, got {self.beta}")

    def cdf(self, x):
        x = np.asarray(x, dtype=float)
        return np.where(x >= 1.0, 1.0 - x ** (-self.beta), 0.0)

    def quantile(self, u):
        return pareto_quantile(u, self.beta)


@dataclass(frozen=True)
class IIDPareto:
    """Independent draws, one Pareto exponent per margin."""

    betas: tuple

    def __init__(self, betas):
        object.__setattr__(self, "betas", tuple(float(b) for b in np.atleast_1d(betas)))
        if any(b <= 0 for b in self.betas):
            raise ValueError("all betas must be positive")

    @property
    def dimension(self):
        return len(self.betas)


@dataclass(frozen=True)
class ARMAX:
    """Max-autoregression Y_n = c * max(Y_{n-1}, W_n) with Pareto(alpha) margin."""

    c: float
    alpha: float

    def __post_init__(self):
        if not 0.0 < self.c < 1.0:
            raise ValueError(f"c must lie in (0, 1), got {self.c}")
        if not self.alpha > 0:
            raise ValueError(f"alpha must be positive, got {self.alpha}")

    dimension = 1


@dataclass(frozen=True)
class PARMAX:
    """Power max-autoregression Y_n = max(Y_{n-1}**c, W_n) with Pareto(alpha) margin."""

    c: float
    alpha: float

    def __post_init__(self):
        if not 0.0 < self.c < 1.0:
            raise ValueError(f"c must lie in (0, 1), got {self.c}")
        if not self.alpha > 0:
            raise ValueError(f"alpha must be positive, got {self.alpha}")

    dimension = 1


@dataclass(frozen=True)
class MovingMax2:
    """Two-term moving maximum Y_n = max(W_{n+1}, W_n), F_W = (1 - x**(-alpha))**(1/2)."""

    alpha: float

    def __post_init__(self):
        if not self.alpha > 0:
            raise ValueError(f"alpha must be positive, got {self.alpha}")

    dimension = 1


@dataclass(frozen=True)
class CrossMax2Dep:
    """Per-margin independent moving maxima: Y_nj = max(W_{n+1,j}, W_nj).

    Each driver margin has F_W(x) = (1 - x**(-beta_j))**(1/2) so the marginal
    law of Y_j is exactly Pareto(beta_j).  Margins are independent of each
    other; the sequence is 2-dependent in time.
    """

    betas: tuple

    def __init__(self, betas):
        object.__setattr__(self, "betas", tuple(float(b) for b in np.atleast_1d(betas)))
        if any(b <= 0 for b in self.betas):
            raise ValueError("all betas must be positive")

    @property
    def dimension(self):
        return len(self.betas)


YProcessSpec = Union[IIDPareto, ARMAX, PARMAX, MovingMax2, CrossMax2Dep]


@dataclass(frozen=True)
class Degenerate:
    """Factor identically equal to 1."""

    value: float = 1.0

    def __post_init__(self):
        if self.value != 1.0:
            raise ValueError("Degenerate factor is fixed at value 1")


@dataclass(frozen=True)
class IIDBernoulli:
    p: float

    def __post_init__(self):
        if not 0.0 < self.p < 1.0:
            raise ValueError(f"p must lie in (0, 1), got {self.p}")


@dataclass(frozen=True)
class IIDFrechet:
    """Frechet(delta, xi) factor: H(x) = exp(-delta * x**(-xi)), x > 0."""

    delta: float
    xi: float

    def __post_init__(self):
        if not (self.delta > 0 and self.xi > 0):
            raise ValueError("delta and xi must be positive")


@dataclass(frozen=True)
class IIDUniform01:
    pass


@dataclass(frozen=True)
class BoundedInverseCDF:
    """Factor law given by a tabulated quantile function on [0, 1].

    ``u_grid`` must be increasing with endpoints 0 and 1, ``q_grid`` must be
    nondecreasing and strictly positive; draws use linear interpolation
    between grid points.  Support is [q_grid[0], q_grid[-1]].
    """

    u_grid: tuple
    q_grid: tuple

    def __init__(self, u_grid, q_grid):
        u = np.asarray(u_grid, dtype=float)
        q = np.asarray(q_grid, dtype=float)
        if u.ndim != 1 or u.shape != q.shape or len(u) < 2:
            raise ValueError("u_grid and q_grid must be 1-d arrays of equal length >= 2")
        if u[0] != 0.0 or u[-1] != 1.0 or np.any(np.diff(u) <= 0):
            raise ValueError("u_grid must increase strictly from 0 to 1")
        if np.any(np.diff(q) < 0) or q[0] <= 0:
            raise ValueError("q_grid must be nondecreasing with positive lower endpoint")
        object.__setattr__(self, "u_grid", tuple(u))
        object.__setattr__(self, "q_grid", tuple(q))

    @property
    def support(self):
        return self.q_grid[0], self.q_grid[-1]

    def quantile(self, u):
        return np.interp(u, self.u_grid, self.q_grid)

    @staticmethod
    def uniform(a: float, b: float) -> "BoundedInverseCDF":
        """Uniform law on [a, b] as a two-point quantile grid."""
        if not 0 < a <= b:
            raise ValueError("need 0 < a <= b")
        return BoundedInverseCDF((0.0, 1.0), (a, b))


@dataclass(frozen=True)
class CommonFactorAcrossMargins:
    """One factor draw per time step, repeated across the d margins."""

    inner: "TFactorSpec"

    def __post_init__(self):
        if isinstance(self.inner, CommonFactorAcrossMargins):
            raise ValueError("common-factor wrapper cannot be nested")


TFactorSpec = Union[
    Degenerate, IIDBernoulli, IIDFrechet, IIDUniform01, BoundedInverseCDF, CommonFactorAcrossMargins
]


@dataclass(frozen=True)
class CommonFactorSpec:
    """Common"-rescaled-factor model: Y_nj = Y_n**gamma_j, so beta_j = alpha / gamma_j."""

    gamma: tuple
    alpha: float

    def __init__(self, gamma, alpha):
        g = tuple(float(v) for v in np.atleast_1d(gamma))
        if any(v <= 0 for v in g):
            raise ValueError("all gamma_j must be positive")
        if not alpha > 0:
            raise ValueError("alpha must be positive")
        object.__setattr__(self, "gamma", g)
        object.__setattr__(self, "alpha", float(alpha))

    @property
    def betas(self):
        return tuple(self.alpha / g for g in self.gamma)


@dataclass(frozen=True)
class FactorMoments:
    """Per-margin moments r_j = E(T_j**beta_j) with the evaluation method."""

    r: tuple
    method: str = "closed-form"
    stderr: tuple = None

    def __init__(self, r, method="closed-form", stderr=None):
        rr = tuple(float(v) for v in np.atleast_1d(r))
        if any(v <= 0 for v in rr):
            raise ValueError("all r_j must be positive")
        object.__setattr__(self, "r", rr)
        object.__setattr__(self, "method", method)
        object.__setattr__(self, "stderr", None if stderr is None else tuple(stderr))


_BINARY_MAGIC_NOTE = "binary layout: 16-byte header = n, d as little-endian uint64; then row-major float64"


@dataclass(frozen=True)
class SamplePath:
    """Immutable n x d realization with its provenance (seed, spec hash)."""

    values: np.ndarray
    seed: Optional[int] = None
    spec_hash: str = ""

    def __post_init__(self):
        v = np.ascontiguousarray(np.asarray(self.values, dtype=float))
        if v.ndim == 1:
            v = v.reshape(-1, 1)
        if v.ndim != 2 or v.shape[0] < 1:
            raise ValueError("values must be an n x d array with n >= 1")
        if not np.all(np.isfinite(v)):
            raise ValueError("sample path contains non-finite entries")
        if np.any(v < 0):
            raise ValueError("sample path entries must be nonnegative")
        v.setflags(write=False)
        object.__setattr__(self, "values", v)

    @property
    def n(self):
        return self.values.shape[0]

    @property
    def d(self):
        return self.values.shape[1]

    def column(self, j):
        return self.values[:, j]

    def to_csv(self, path):
        with open(path, "w", newline="") as fh:
            self.write_csv(fh)

    def write_csv(self, fh):
        header = "t," + ",".join(f"x{j + 1}" for j in range(self.d))
        fh.write(header + "\n")
        for t in range(self.n):
            row = ",".join(repr(float(v)) for v in self.values[t])
            fh.write(f"{t + 1},{row}\n")

    def to_binary(self, path):
        with open(path, "wb") as fh:
            fh.write(struct.pack("<QQ", self.n, self.d))
            fh.write(self.values.astype("<f8").tobytes())

    @staticmethod
    def from_binary(path) -> "SamplePath":
        with open(path, "rb") as fh:
            header = fh.read(16)
            if len(header) != 16:
                raise ValueError("truncated header")
            n, d = struct.unpack("<QQ", header)
            data = np.frombuffer(fh.read(), dtype="<f8")
        if data.size != n * d:
            raise ValueError("payload size does not match header")
        return SamplePath(data.reshape(n, d).copy())

    @staticmethod
    def from_csv(path) -> "SamplePath":
        data = np.loadtxt(path, delimiter=",", skiprows=1, ndmin=2)
        return SamplePath(data[:, 1:])


def spec_hash(spec) -> str:
    return hashlib.sha1(repr(spec).encode()).hexdigest()[:16]


# ---------------------------------------------------------------------------
# quantile transforms and innovation laws


def pareto_quantile(u, beta):
    """Inverse of F(x) = 1 - x**(-beta): u -> (1 - u)**(-1/beta), u in [0, 1)."""
    if not beta > 0:
        raise ValueError("beta must be positive")
    u = np.asarray(u, dtype=float)
    if np.any(u < 0) or np.any(u >= 1):
        raise ValueError("u must lie in [0, 1)")
    return (1.0 - u) ** (-1.0 / beta)


def sample_pareto(rng, beta, n):
    """n i.i.d. draws with CDF 1 - x**(-beta) on x >= 1 by inverse transform."""
    if not beta > 0:
        raise ValueError("beta must be positive")
    n = int(n)
    if n < 1:
        raise ValueError("n must be at least 1")
    return pareto_quantile(rng.random(n), beta)


def armax_innovation_cdf(x, c, alpha):
    """Innovation CDF F_W(x) = (1 - (c x)**(-alpha)) / (1 - x**(-alpha)), x >= 1/c."""
    x = np.asarray(x, dtype=float)
    out = np.zeros_like(x)
    above = x >= 1.0 / c
    xa = x[above]
    out[above] = (1.0 - (c * xa) ** (-alpha)) / (1.0 - xa ** (-alpha))
    return out if out.ndim else float(out)


def armax_innovation_quantile(u, c, alpha):
    """Inverse of the ARMAX innovation CDF; rejects u outside (0, 1)."""
    u = np.asarray(u, dtype=float)
    if np.any(u <= 0) or np.any(u >= 1):
        raise ValueError("u must lie in the open interval (0, 1)")
    return _armax_innovation_quantile_raw(u, c, alpha)


def _armax_innovation_quantile_raw(u, c, alpha):
    # valid for u in [0, 1); u = 0 gives the support endpoint 1/c
    return ((c ** (-alpha) - u) / (1.0 - u)) ** (1.0 / alpha)


def parmax_innovation_cdf(x, c, alpha):
    """Innovation CDF F_W(x) = (1 - x**(-alpha)) / (1 - x**(-alpha/c)), x > 0.

    The ratio has a removable singularity at x = 1 with limit c.
    """
    x = np.asarray(x, dtype=float)
    if np.any(x <= 0):
        raise ValueError("x must be positive")
    lx = np.log(x)
    num = -np.expm1(-alpha * lx)
    den = -np.expm1(-(alpha / c) * lx)
    with np.errstate(invalid="ignore", divide="ignore"):
        val = num / den
    val = np.where(np.abs(lx) < 1e-12, c, val)
    return val if val.ndim else float(val)


def parmax_innovation_pdf(x, c, alpha):
    """Density of the pARMAX innovation on (0, inf).

    Quotient-rule differentiation of the CDF, with the removable 0/0
    singularity at x = 1 replaced by its limit alpha * (1 - c) / 2.
    """
    x = np.asarray(x, dtype=float)
    if np.any(x <= 0):
        raise ValueError("x must be positive")
    lx = np.log(x)
    ac = alpha / c
    a_ = -np.expm1(-alpha * lx)          # 1 - x**(-alpha)
    b_ = -np.expm1(-ac * lx)             # 1 - x**(-alpha/c)
    da = alpha * np.exp(-(alpha + 1.0) * lx)
    db = ac * np.exp(-(ac + 1.0) * lx)
    with np.errstate(invalid="ignore", divide="ignore"):
        val = (da * b_ - a_ * db) / b_**2
    val = np.where(np.abs(lx) < 1e-6, alpha * (1.0 - c) / 2.0, val)
    return val if val.ndim else float(val)


def parmax_innovation_quantile(u, c, alpha, iterations=60):
    """Inverse of the pARMAX innovation CDF by monotone bisection in log x."""
    u = np.asarray(u, dtype=float)
    if np.any(u <= 0) or np.any(u >= 1):
        raise ValueError("u must lie in the open interval (0, 1)")
    scalar = u.ndim == 0
    u = np.atleast_1d(u)
    # bracket in v = log x: F_W(e^v) is increasing, F_W(1) = c
    lo = np.where(u >= c, 0.0, -(1.0 / (1.0 - c)) * (-np.log(u)) / alpha * c - 1.0)
    # upper-tail expansion 1 - F_W(x) ~ x**(-alpha) gives a starting point
    hi = np.maximum(-np.log1p(-u) / alpha + 2.0, 1.0)
    for arr, grow in ((lo, -1.0), (hi, 1.0)):
        for _ in range(200):
            bad = (parmax_innovation_cdf(np.exp(arr), c, alpha) - u) * grow < 0
            if not np.any(bad):
                break
            arr[bad] += grow * np.maximum(np.abs(arr[bad]), 1.0)
    for _ in range(int(iterations)):
        mid = 0.5 * (lo + hi)
        below = parmax_innovation_cdf(np.exp(mid), c, alpha) < u
        lo = np.where(below, mid, lo)
        hi = np.where(below, hi, mid)
    x = np.exp(0.5 * (lo + hi))
    return float(x[0]) if scalar else x


def _movingmax_driver_quantile(u, beta):
    # F_W(x) = (1 - x**(-beta))**(1/2)  ->  x = (1 - u**2)**(-1/beta)
    return (1.0 - u**2) ** (-1.0 / beta)


# ---------------------------------------------------------------------------
# base-process simulation


def simulate_y(rng, spec: YProcessSpec, n) -> SamplePath:
    """Stationary path of the base process.

    ARMAX and pARMAX are initialized from the exact Pareto(alpha) stationary
    law, so no burn-in is needed.  MovingMax2 and CrossMax2Dep consume one
    extra driver draw per margin.
    """
    n = int(n)
    if n < 1:
        raise ValueError("n must be at least 1")
    if isinstance(spec, IIDPareto):
        cols = [sample_pareto(rng, b, n) for b in spec.betas]
        values = np.column_stack(cols)
    elif isinstance(spec, ARMAX):
        values = _simulate_armax(rng, spec.c, spec.alpha, n).reshape(-1, 1)
    elif isinstance(spec, PARMAX):
        values = _simulate_parmax(rng, spec.c, spec.alpha, n).reshape(-1, 1)
    elif isinstance(spec, MovingMax2):
        w = _movingmax_driver_quantile(rng.random(n + 1), spec.alpha)
        values = np.maximum(w[1:], w[:-1]).reshape(-1, 1)
    elif isinstance(spec, CrossMax2Dep):
        cols = []
        for b in spec.betas:
            w = _movingmax_driver_quantile(rng.random(n + 1), b)
            cols.append(np.maximum(w[1:], w[:-1]))
        values = np.column_stack(cols)
    else:
        raise TypeError(f"unknown Y process spec: {spec!r}")
    return SamplePath(values, spec_hash=spec_hash(spec))


def _simulate_armax(rng, c, alpha, n):
    # Y_k = c * max(Y_{k-1}, W_k); in logs L_k = k*lc + max(L_0, max_{i<=k}(lW_i - (i-1)*lc))
    lc = np.log(c)
    y0 = pareto_quantile(rng.random(), alpha)
    lw = np.log(_armax_innovation_quantile_raw(rng.random(n), c, alpha))
    shifted = lw - np.arange(n) * lc
    running = np.maximum.accumulate(np.maximum(shifted, np.log(y0)))
    return np.exp(np.arange(1, n + 1) * lc + running)


def _parmax_block_length(c):
    # within a block the scan uses weights c**(-i); keep c**(-B) far from overflow
    return max(8, min(65536, int(250.0 / max(-np.log10(c), 1e-8))))


def _simulate_parmax(rng, c, alpha, n):
    # Y_k = max(Y_{k-1}**c, W_k).  Innovations with W < 1 never win against
    # Y_{k-1}**c >= 1, so draws below the support floor are censored to 1.
    u = rng.random(n)
    lw = np.zeros(n)
    active = u > c
    if np.any(active):
        lw[active] = np.log(parmax_innovation_quantile(u[active], c, alpha))
    out = np.empty(n)
    l_prev = np.log(pareto_quantile(rng.random(), alpha))
    block = _parmax_block_length(c)
    for start in range(0, n, block):
        stop = min(start + block, n)
        m = stop - start
        idx = np.arange(1, m + 1, dtype=float)
        scaled = lw[start:stop] * c ** (-idx)
        running = np.maximum.accumulate(np.maximum(scaled, l_prev))
        seg = c**idx * running
        out[start:stop] = seg
        l_prev = seg[-1]
    return np.exp(out)


# ---------------------------------------------------------------------------
# factor simulation


def _factor_support(spec: TFactorSpec):
    """Closed support [a, b] of the scalar factor law (b may be inf)."""
    if isinstance(spec, Degenerate):
        return 1.0, 1.0
    if isinstance(spec, IIDBernoulli):
        return 0.0, 1.0
    if isinstance(spec, IIDFrechet):
        return 0.0, np.inf
    if isinstance(spec, IIDUniform01):
        return 0.0, 1.0
    if isinstance(spec, BoundedInverseCDF):
        return spec.support
    if isinstance(spec, CommonFactorAcrossMargins):
        return _factor_support(spec.inner)
    raise TypeError(f"unknown factor spec: {spec!r}")


def _scalar_factor_draw(rng, spec, n):
    if isinstance(spec, Degenerate):
        return np.ones(n)
    if isinstance(spec, IIDBernoulli):
        return (rng.random(n) < spec.p).astype(float)
    if isinstance(spec, IIDFrechet):
        u = 1.0 - rng.random(n)  # in (0, 1]
        u = np.minimum(u, 1.0 - 1e-16)
        return (-np.log(u) / spec.delta) ** (-1.0 / spec.xi)
    if isinstance(spec, IIDUniform01):
        return rng.random(n)
    if isinstance(spec, BoundedInverseCDF):
        return spec.quantile(rng.random(n))
    raise TypeError(f"unknown scalar factor spec: {spec!r}")


def _check_factor_moment(spec, beta):
    if isinstance(spec, IIDFrechet) and spec.xi <= beta:
        raise ValueError(
            f"Frechet factor needs xi > beta for E(T**beta) < infinity, got xi={spec.xi}, beta={beta}"
        )


def simulate_t(rng, spec: TFactorSpec, n, d, betas=None) -> SamplePath:
    """n x d factor draws; rows are i.i.d. in time.

    A common-factor wrapper repeats a single scalar draw across the d columns
    of each row.  When ``betas`` is supplied the moment condition
    E(T**beta) < infinity is validated per margin (Frechet needs xi > beta).
    """
    n, d = int(n), int(d)
    if n < 1 or d < 1:
        raise ValueError("n and d must be at least 1")
    if betas is not None:
        for b in np.atleast_1d(betas):
            _check_factor_moment(spec.inner if isinstance(spec, CommonFactorAcrossMargins) else spec, b)
    if isinstance(spec, CommonFactorAcrossMargins):
        col = _scalar_factor_draw(rng, spec.inner, n)
        values = np.repeat(col.reshape(-1, 1), d, axis=1)
    else:
        values = _scalar_factor_draw(rng, spec, n * d).reshape(n, d)
    return SamplePath(values, spec_hash=spec_hash(spec))


def compose_mixture(y: SamplePath, t: SamplePath) -> SamplePath:
    """Elementwise product X = Y * T."""
    if y.values.shape != t.values.shape:
        raise ValueError(f"shape mismatch: {y.values.shape} vs {t.values.shape}")
    return SamplePath(y.values * t.values, spec_hash=y.spec_hash + "*" + t.spec_hash)


def compose_common_factor(y_univ, z: SamplePath, gamma) -> SamplePath:
    """Common-factor composition X_nj = (Y_n * Z_nj)**gamma_j."""
    y = np.asarray(y_univ, dtype=float).reshape(-1)
    g = np.asarray(gamma, dtype=float)
    if np.any(g <= 0):
        raise ValueError("all gamma_j must be positive")
    if len(y) != z.n or len(g) != z.d:
        raise ValueError("y length must match z rows and gamma length must match z columns")
    return SamplePath((y[:, None] * z.values) ** g[None, :])


# ---------------------------------------------------------------------------
# factor moments r_j = E(T_j**beta_j)


def _scalar_moment(spec, beta):
    """Closed-form E(T**beta) for the scalar factor laws."""
    _check_factor_moment(spec, beta)
    if isinstance(spec, Degenerate):
        return 1.0
    if isinstance(spec, IIDBernoulli):
        return spec.p
    if isinstance(spec, IIDUniform01):
        return 1.0 / (beta + 1.0)
    if isinstance(spec, IIDFrechet):
        from scipy.special import gamma as gamma_fn

        return spec.delta ** (beta / spec.xi) * gamma_fn(1.0 - beta / spec.xi)
    if isinstance(spec, BoundedInverseCDF):
        from scipy.integrate import quad

        val, _ = quad(lambda u: spec.quantile(u) ** beta, 0.0, 1.0, limit=200)
        return val
    raise TypeError(f"unknown scalar factor spec: {spec!r}")


def factor_moments(spec: TFactorSpec, betas) -> FactorMoments:
    """Per-margin r_j = E(T_j**beta_j), closed form (quadrature for grid laws)."""
    betas = np.atleast_1d(np.asarray(betas, dtype=float))
    inner = spec.inner if isinstance(spec, CommonFactorAcrossMargins) else spec
    method = "quadrature" if isinstance(inner, BoundedInverseCDF) else "closed-form"
    r = [_scalar_moment(inner, b) for b in betas]
    return FactorMoments(r, method=method)


def mc_factor_moment(rng, spec: TFactorSpec, beta, draws=10**6):
    """Monte Carlo E(T**beta) with standard error, for cross-checking."""
    inner = spec.inner if isinstance(spec, CommonFactorAcrossMargins) else spec
    _check_factor_moment(inner, beta)
    t = _scalar_factor_draw(rng, inner, int(draws)) ** beta
    return float(t.mean()), float(t.std(ddof=1) / np.sqrt(len(t)))


# ---------------------------------------------------------------------------
# exact sampler for (asymmetric) logistic max-stable vectors
#
# Used to validate dependence-function estimators against a law whose
# Pickands function is known in closed form.  Positive-stable construction:
# with S alpha-stable (Laplace transform exp(-t**alpha)) and E_i unit
# exponentials, X_i = (S / E_i)**alpha has the symmetric logistic MEV with
# unit Frechet margins.


def _positive_stable(rng, alpha_dep, n):
    theta = rng.random(n) * np.pi
    w = rng.exponential(size=n)
    a = (
        np.sin((1.0 - alpha_dep) * theta)
        * np.sin(alpha_dep * theta) ** (alpha_dep / (1.0 - alpha_dep))
        / np.sin(theta) ** (1.0 / (1.0 - alpha_dep))
    )
    return (a / w) ** ((1.0 - alpha_dep) / alpha_dep)


def sample_logistic_mev(rng, alpha_dep, n, d=2):
    """n draws of the d-variate symmetric logistic MEV with unit Frechet margins."""
    if not 0.0 < alpha_dep <= 1.0:
        raise ValueError("alpha_dep must lie in (0, 1]")
    n = int(n)
    if alpha_dep == 1.0:
        return 1.0 / rng.exponential(size=(n, d))
    s = _positive_stable(rng, alpha_dep, n)
    e = rng.exponential(size=(n, d))
    return (s[:, None] / e) ** alpha_dep


def sample_asym_logistic_mev(rng, pJ: dict, alpha_dep, n, d=2):
    """n draws of the asymmetric logistic MEV induced by Bernoulli-support factors.

    ``pJ`` maps nonempty margin subsets (frozenset/tuple) to probabilities
    summing to 1.  The vector is the componentwise max over subsets J of
    independent symmetric-logistic blocks scaled by w_Ji = p(J) / P(T_i = 1),
    which gives unit Frechet margins.
    """
    weights = normalized_subset_weights(pJ, d)
    n = int(n)
    out = np.zeros((n, d))
    for subset, w in weights.items():
        js = sorted(subset)
        block = sample_logistic_mev(rng, alpha_dep, n, d=len(js))
        for pos, j in enumerate(js):
            out[:, j] = np.maximum(out[:, j], w[j] * block[:, pos])
    return out


def normalized_subset_weights(pJ: dict, d):
    """Validate subset probabilities and return per-subset weights w_Ji = p(J)/p_i."""
    cleaned = {}
    for subset, p in pJ.items():
        key = frozenset(int(i) for i in subset)
        if not key or any(i < 0 or i >= d for i in key):
            raise ValueError("subsets must be nonempty subsets of range(d)")
        if p < 0:
            raise ValueError("subset probabilities must be nonnegative")
        if p > 0:
            cleaned[key] = cleaned.get(key, 0.0) + float(p)
    total = sum(cleaned.values())
    if abs(total - 1.0) > 1e-9:
        raise ValueError(f"subset probabilities must sum to 1, got {total}")
    marg = {i: sum(p for s, p in cleaned.items() if i in s) for i in range(d)}
    if any(marg[i] <= 0 for i in range(d)):
        raise ValueError("every margin needs positive probability of a nonzero factor")
    return {s: {i: p / marg[i] for i in s} for s, p in cleaned.items()}
