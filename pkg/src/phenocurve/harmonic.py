"""Ordinary-least-squares harmonic regression and analytic derivatives.

A harmonic model with period ``L`` and ``p`` frequencies is

    g(t) = theta0 + sum_{j=1}^{p} a_j sin(2 pi j t / L) + b_j cos(2 pi j t / L),

fit by OLS to one season of observations at t = 1..L. Differentiation maps
each frequency-j pair (a_j, b_j) to (-b_j w_j, a_j w_j) with w_j = 2 pi j / L
and zeroes the intercept, so derivatives of any order stay in the same family.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import IdentifiabilityError

__all__ = [
    "HarmonicModel",
    "FitDiagnostics",
    "design_matrix",
    "fit_harmonic",
    "fit_harmonic_at",
    "eval_harmonic",
    "derivative",
]


@dataclass(frozen=True)
class HarmonicModel:
    """Intercept plus ``p`` sine/cosine coefficient pairs with a fixed period."""

    intercept: float
    sin_coefs: np.ndarray
    cos_coefs: np.ndarray
    period: float

    def __post_init__(self):
        object.__setattr__(self, "sin_coefs", np.atleast_1d(np.asarray(self.sin_coefs, dtype=float)))
        object.__setattr__(self, "cos_coefs", np.atleast_1d(np.asarray(self.cos_coefs, dtype=float)))
        if self.sin_coefs.shape != self.cos_coefs.shape or self.sin_coefs.ndim != 1:
            raise ValueError("sin_coefs and cos_coefs must be 1-d arrays of equal length")
        if self.period <= 0:
            raise ValueError("period must be positive")
        if not (np.isfinite(self.intercept) and np.all(np.isfinite(self.sin_coefs)) and np.all(np.isfinite(self.cos_coefs))):
            raise ValueError("harmonic coefficients must be finite")

    @property
    def num_freq(self) -> int:
        return self.sin_coefs.size

    @property
    def amplitudes(self) -> np.ndarray:
        """Per-frequency amplitudes sqrt(a_j^2 + b_j^2)."""
        return np.hypot(self.sin_coefs, self.cos_coefs)

    @classmethod
    def from_cosine(cls, c0: float, c1: float, period: float, phase_deg: float) -> "HarmonicModel":
        """Single-harmonic signal c0 + c1 cos(2 pi t / L - phase)."""
        phi = np.deg2rad(phase_deg)
        return cls(float(c0), np.array([c1 * np.sin(phi)]), np.array([c1 * np.cos(phi)]), float(period))

    def __add__(self, other: "HarmonicModel") -> "HarmonicModel":
        if not isinstance(other, HarmonicModel):
            return NotImplemented
        if other.period != self.period:
            raise ValueError("cannot add harmonic models with different periods")
        p = max(self.num_freq, other.num_freq)

        def pad(v, n):
            return np.pad(v, (0, n - v.size))

        return HarmonicModel(
            self.intercept + other.intercept,
            pad(self.sin_coefs, p) + pad(other.sin_coefs, p),
            pad(self.cos_coefs, p) + pad(other.cos_coefs, p),
            self.period,
        )


@dataclass(frozen=True)
class FitDiagnostics:
    """Residual summary of one OLS harmonic fit."""

    residual_sd: float
    rss: float
    dof: int


def design_matrix(L: int, p: int) -> np.ndarray:
    """Harmonic design at t = 1..L: row t is [1, sin(2 pi t/L), cos(2 pi t/L), ...].

    Raises :class:`IdentifiabilityError` when 2p + 1 > L.
    """
    if p < 1:
        raise ValueError("number of frequencies p must be >= 1")
    if 2 * p + 1 > L:
        raise IdentifiabilityError(f"cannot fit {2 * p + 1} harmonic coefficients to {L} points per season")
    t = np.arange(1, L + 1, dtype=float)
    return _design_at(t, p, float(L))


def _design_at(t: np.ndarray, p: int, period: float) -> np.ndarray:
    t = np.asarray(t, dtype=float)
    X = np.empty((t.size, 2 * p + 1))
    X[:, 0] = 1.0
    for j in range(1, p + 1):
        ang = 2.0 * np.pi * j * t / period
        X[:, 2 * j - 1] = np.sin(ang)
        X[:, 2 * j] = np.cos(ang)
    return X


def _ols(X: np.ndarray, y: np.ndarray, period: float) -> tuple[HarmonicModel, FitDiagnostics]:
    # lstsq uses an orthogonal (SVD) factorization; no normal equations.
    beta, _, rank, _ = np.linalg.lstsq(X, y, rcond=None)
    if rank < X.shape[1]:
        raise IdentifiabilityError(f"rank-deficient harmonic design (rank {rank} < {X.shape[1]})")
    resid = y - X @ beta
    rss = float(resid @ resid)
    dof = X.shape[0] - X.shape[1]
    sd = float(np.sqrt(rss / dof)) if dof > 0 else 0.0
    model = HarmonicModel(float(beta[0]), beta[1::2].copy(), beta[2::2].copy(), period)
    return model, FitDiagnostics(sd, rss, dof)


def fit_harmonic(y: np.ndarray, p: int, L: int | None = None) -> tuple[HarmonicModel, FitDiagnostics]:
    """OLS fit of a p-frequency harmonic to one season observed at t = 1..L."""
    y = np.asarray(y, dtype=float)
    if y.ndim != 1:
        raise ValueError("y must be a 1-d vector")
    if not np.all(np.isfinite(y)):
        raise ValueError("y must be finite")
    if L is None:
        L = y.size
    elif L != y.size:
        raise ValueError(f"y has {y.size} values but L={L}")
    X = design_matrix(L, p)
    return _ols(X, y, float(L))


def fit_harmonic_at(t: np.ndarray, y: np.ndarray, p: int, period: float) -> tuple[HarmonicModel, FitDiagnostics]:
    """OLS harmonic fit at arbitrary sample positions ``t`` with a given period."""
    t = np.asarray(t, dtype=float)
    y = np.asarray(y, dtype=float)
    if t.shape != y.shape or t.ndim != 1:
        raise ValueError("t and y must be 1-d vectors of equal length")
    if 2 * p + 1 > t.size:
        raise IdentifiabilityError(f"cannot fit {2 * p + 1} harmonic coefficients to {t.size} points")
    return _ols(_design_at(t, p, period), y, float(period))


def eval_harmonic(model: HarmonicModel, t) -> np.ndarray | float:
    """Evaluate the model at real t; periodic extension outside [0, L]."""
    t_arr = np.asarray(t, dtype=float)
    j = np.arange(1, model.num_freq + 1)
    ang = 2.0 * np.pi * np.multiply.outer(t_arr, j) / model.period
    out = model.intercept + np.sin(ang) @ model.sin_coefs + np.cos(ang) @ model.cos_coefs
    return float(out) if np.isscalar(t) or t_arr.ndim == 0 else out


def derivative(model: HarmonicModel, order: int) -> HarmonicModel:
    """Analytic derivative of given order (1..4), again a harmonic model.

    One differentiation sends (a_j, b_j) to (-b_j w_j, a_j w_j), w_j = 2 pi j / L,
    and zeroes the intercept; composing twice gives the factor -w_j^2, so for a
    single harmonic the third derivative equals -(2 pi / L)^2 times the first
    and the fourth equals -(2 pi / L)^2 times the second.
    """
    if order not in (1, 2, 3, 4):
        raise ValueError(f"derivative order must be in 1..4, got {order}")
    w = 2.0 * np.pi * np.arange(1, model.num_freq + 1) / model.period
    a, b = model.sin_coefs, model.cos_coefs
    for _ in range(order):
        a, b = -b * w, a * w
    return HarmonicModel(0.0, a, b, model.period)
