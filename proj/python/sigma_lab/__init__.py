"""Certified computation of sigma_n, its change points and n_a."""

from ._core import (
    DomainError,
    Interval,
    UndecidableError,
    bracket,
    changepoints,
    first_n_with_sigma,
    ln_factorial,
    n_a,
    sigma,
    t_value,
    verify,
)

__all__ = [
    "DomainError",
    "Interval",
    "UndecidableError",
    "bracket",
    "changepoints",
    "first_n_with_sigma",
    "ln_factorial",
    "n_a",
    "sigma",
    "t_value",
    "verify",
]
