"""Closed-form eigenpairs for the solved oscillator problems.

Three branches:

* ``half_ho``   — single oscillator on the half line; E_n = 2(n+1) hbar omega,
  eigenfunctions x^(3/2) exp(-alpha x^2 / 2) 1F1(-n, 2, alpha x^2) with
  alpha = m omega / hbar.
* ``coupled_y1`` — stiff normal mode of the coupled pair, same shape with
  alpha1 = (m omega / hbar) sqrt(1 + g/(m omega^2)); E_n = (n+1) hbar omega
  sqrt(1 + g/(m omega^2)).
* ``coupled_y2`` — soft normal mode, a full-line oscillator with
  alpha2 = (m omega / hbar) sqrt(1 - g/(m omega^2)); E_n = (n + 1/2)
  (hbar omega / 2) sqrt(1 - g/(m omega^2)).

Quantum numbers start at n = 0 for every branch (the n = 0 state is a valid
normalized ground state in all three families).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable, List

import numpy as np

from .core import PhysicalParams
from .specfun import confluent_1f1_neg, hermite

HALF_HO = "half_ho"
COUPLED_Y1 = "coupled_y1"
COUPLED_Y2 = "coupled_y2"

_HALFLINE_BRANCHES = (HALF_HO, COUPLED_Y1)


@dataclass(frozen=True)
class EigenPair:
    """One bound state: quantum number, energy and an evaluable wavefunction."""

    n: int
    energy: float
    branch: str
    params: PhysicalParams
    wavefunction: Callable[[np.ndarray], np.ndarray]


@dataclass(frozen=True)
class CompositeLevel:
    """A two-mode level E = E_y1(n1) + E_y2(n2)."""

    n1: int
    n2: int
    energy: float


def _check_n(n: int) -> int:
    if n != int(n) or n < 0:
        raise ValueError(f"quantum number must be a nonnegative integer, got {n}")
    return int(n)


def _halfline_wavefunction(n: int, alpha: float):
    """Normalized x^(3/2)-type eigenfunction with scale alpha, zero for x <= 0."""

    def phi(x):
        x = np.asarray(x, dtype=float)
        pos = x > 0
        xp = np.where(pos, x, 1.0)
        val = (
            math.sqrt(2.0 * (n + 1))
            * alpha
            * xp**1.5
            * np.exp(-0.5 * alpha * xp**2)
            * np.asarray(confluent_1f1_neg(n, 2.0, alpha * xp**2))
        )
        out = np.where(pos, val, 0.0)
        return out if out.ndim else float(out)

    return phi


def _hermite_wavefunction(n: int, alpha: float):
    """Standard normalized oscillator eigenfunction with scale alpha."""
    log_norm = 0.25 * math.log(alpha / math.pi) - 0.5 * (
        n * math.log(2.0) + math.lgamma(n + 1)
    )
    norm = math.exp(log_norm)

    def phi(y):
        y = np.asarray(y, dtype=float)
        s = math.sqrt(alpha) * y
        val = norm * np.exp(-0.5 * alpha * y**2) * np.asarray(hermite(n, s))
        return val if val.ndim else float(val)

    return phi


def half_ho_eigen(n: int, params: PhysicalParams) -> EigenPair:
    """Half harmonic oscillator level: E_n = 2(n+1) hbar omega."""
    n = _check_n(n)
    alpha = params.m * params.omega / params.hbar
    return EigenPair(
        n=n,
        energy=2.0 * (n + 1) * params.hbar * params.omega,
        branch=HALF_HO,
        params=params,
        wavefunction=_halfline_wavefunction(n, alpha),
    )


def coupled_y1_eigen(n: int, params: PhysicalParams) -> EigenPair:
    """Stiff-mode level: E_n = (n+1) hbar omega sqrt(1 + g/(m omega^2))."""
    n = _check_n(n)
    params.require_quantum_coupling()
    energy = (n + 1) * params.hbar * params.omega * math.sqrt(1.0 + params.g_ratio)
    return EigenPair(
        n=n,
        energy=energy,
        branch=COUPLED_Y1,
        params=params,
        wavefunction=_halfline_wavefunction(n, params.alpha1),
    )


def coupled_y2_eigen(n: int, params: PhysicalParams) -> EigenPair:
    """Soft-mode level: E_n = (n + 1/2) (hbar omega / 2) sqrt(1 - g/(m omega^2))."""
    n = _check_n(n)
    params.require_quantum_coupling()
    energy = (
        (n + 0.5) * 0.5 * params.hbar * params.omega * math.sqrt(1.0 - params.g_ratio)
    )
    return EigenPair(
        n=n,
        energy=energy,
        branch=COUPLED_Y2,
        params=params,
        wavefunction=_hermite_wavefunction(n, params.alpha2),
    )


def branch_energy(branch: str, n: int, params: PhysicalParams) -> float:
    """Energy formula of a branch without building the wavefunction."""
    if branch == HALF_HO:
        return 2.0 * (n + 1) * params.hbar * params.omega
    if branch == COUPLED_Y1:
        return (n + 1) * params.hbar * params.omega * math.sqrt(1.0 + params.g_ratio)
    if branch == COUPLED_Y2:
        return (n + 0.5) * 0.5 * params.hbar * params.omega * math.sqrt(
            1.0 - params.g_ratio
        )
    raise ValueError(f"unknown branch {branch!r}")


def composite_spectrum(params: PhysicalParams, count: int) -> List[CompositeLevel]:
    """The ``count`` lowest two-mode levels E_y1(n1) + E_y2(n2), ascending.

    Ties are broken lexicographically in (n1, n2).  Any level with
    n1 >= count (or n2 >= count) is dominated by at least ``count`` smaller
    ones, so enumerating the count x count grid is exhaustive.
    """
    if count < 1:
        raise ValueError(f"count must be at least 1, got {count}")
    params.require_quantum_coupling()
    levels = [
        CompositeLevel(
            n1=n1,
            n2=n2,
            energy=branch_energy(COUPLED_Y1, n1, params)
            + branch_energy(COUPLED_Y2, n2, params),
        )
        for n1 in range(count)
        for n2 in range(count)
    ]
    levels.sort(key=lambda lv: (lv.energy, lv.n1, lv.n2))
    return levels[:count]


def eval_wavefunction(pair: EigenPair, x):
    """Pointwise wavefunction value; half-line branches are zero for x <= 0."""
    return pair.wavefunction(x)
