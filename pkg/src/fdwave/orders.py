"""Order parameter of the time-fractional equation and its equivalent forms."""
from __future__ import annotations

from dataclasses import dataclass

from .errors import OutOfRange


@dataclass(frozen=True)
class FractionalOrder:
    """Time-derivative order beta in (0, 2], with nu = beta/2 and gamma = 2 - beta.

    Constructors keep the caller's parameter bit-exact and derive the other two.
    Note for ``from_gamma``: 2 - (2 - gamma) can differ from gamma by one ulp in
    binary64, so ``beta`` is the rounded value of 2 - gamma while ``gamma``
    stays exactly as given.
    """

    beta: float
    nu: float
    gamma: float

    @classmethod
    def from_beta(cls, beta: float) -> "FractionalOrder":
        beta = float(beta)
        if not 0.0 < beta <= 2.0:
            raise OutOfRange(f"beta must be in (0, 2], got {beta}")
        return cls(beta=beta, nu=beta / 2.0, gamma=2.0 - beta)

    @classmethod
    def from_nu(cls, nu: float) -> "FractionalOrder":
        nu = float(nu)
        if not 0.0 < nu <= 1.0:
            raise OutOfRange(f"nu must be in (0, 1], got {nu}")
        beta = 2.0 * nu
        return cls(beta=beta, nu=nu, gamma=2.0 - beta)

    @classmethod
    def from_gamma(cls, gamma: float) -> "FractionalOrder":
        gamma = float(gamma)
        if not 0.0 <= gamma < 2.0:
            raise OutOfRange(f"gamma must be in [0, 2), got {gamma}")
        beta = 2.0 - gamma
        return cls(beta=beta, nu=beta / 2.0, gamma=gamma)
