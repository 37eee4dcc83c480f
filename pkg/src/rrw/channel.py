"""Channel parameters and the Gaussian capacity function.

Rates are in bits per channel use throughout.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

IDENTITY_TOL = 1e-12


class DomainError(ValueError):
    """Raised when an argument lies outside the mathematical domain of an operation."""


class ChannelParamsError(ValueError):
    """Raised by :func:`validate_params`; ``violations`` lists every failed check."""

    def __init__(self, violations: list[str]):
        self.violations = list(violations)
        super().__init__("invalid channel parameters: " + "; ".join(self.violations))


@dataclass(frozen=True)
class ChannelParams:
    """Transmit power and noise variances of the three receivers, strongest first."""

    P: float
    N1: float
    N2: float
    N3: float

    def __post_init__(self):
        problems = _violations(self.P, self.N1, self.N2, self.N3)
        if problems:
            raise ChannelParamsError(problems)

    @property
    def noises(self) -> tuple[float, float, float]:
        return (self.N1, self.N2, self.N3)

    def noise(self, i: int) -> float:
        """Noise variance of receiver ``i`` (1-based)."""
        return self.noises[i - 1]

    def single_user_capacity(self, i: int) -> float:
        return capacity_fn(self.P / self.noise(i))

    def to_dict(self) -> dict:
        return {"P": self.P, "N": list(self.noises)}


def _violations(P, N1, N2, N3) -> list[str]:
    out, vals = [], {}
    for name, v in (("P", P), ("N1", N1), ("N2", N2), ("N3", N3)):
        try:
            fv = float(v)
        except (TypeError, ValueError):
            out.append(f"{name} is not a number")
            continue
        if not math.isfinite(fv):
            out.append(f"{name} must be finite")
            continue
        vals[name] = fv
        if fv <= 0:
            out.append(f"{name} must be strictly positive (got {fv:g})")
    for a, b in (("N1", "N2"), ("N2", "N3")):
        if a in vals and b in vals and vals[a] > vals[b]:
            out.append(f"ordering violated: {a}={vals[a]:g} > {b}={vals[b]:g}")
    return out


def validate_params(raw) -> ChannelParams:
    """Build :class:`ChannelParams` from ``(P, N1, N2, N3)`` or a ``{"P", "N"}`` mapping.

    Unordered noise variances are rejected, never re-sorted: sorting would
    silently relabel receivers and their side information.
    """
    if isinstance(raw, dict):
        try:
            P = raw["P"]
            N1, N2, N3 = raw["N"]
        except (KeyError, TypeError, ValueError) as exc:
            raise ChannelParamsError([f"malformed channel mapping: {exc!r}"]) from None
    else:
        try:
            P, N1, N2, N3 = raw
        except (TypeError, ValueError):
            raise ChannelParamsError(["expected four numbers (P, N1, N2, N3)"]) from None
    problems = _violations(P, N1, N2, N3)
    if problems:
        raise ChannelParamsError(problems)
    return ChannelParams(float(P), float(N1), float(N2), float(N3))


def capacity_fn(q):
    """C(q) = 1/2 log2(1 + q). Accepts scalars or arrays."""
    arr = np.asarray(q, dtype=float)
    if not np.all(np.isfinite(arr)) or np.any(arr < 0):
        raise DomainError(f"capacity_fn needs finite q >= 0, got {q!r}")
    out = 0.5 * np.log2(1.0 + arr)
    return float(out) if out.ndim == 0 else out


def dpc_coefficient(signal_power: float, noise: float) -> float:
    """Scaling of the known interference in the DPC auxiliary variable U = X + beta*S.

    Pass ``alpha*P`` with N2 for scheme 1 and ``gamma*P`` with N3 for scheme 2.
    Diagnostic only; no rate expression consumes it.
    """
    if not (math.isfinite(noise) and noise > 0):
        raise DomainError("noise variance must be finite and > 0")
    if not (math.isfinite(signal_power) and signal_power >= 0):
        raise DomainError("signal power must be finite and >= 0")
    return signal_power / (signal_power + noise)
