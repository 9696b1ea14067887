"""Thin wrappers around the complementary error function family.

Everything downstream needs ``erfc`` and its scaled variant
``erfcx(x) = exp(x**2) * erfc(x)``.  The scaled form is evaluated directly
(never as the overflowing product) so it stays finite for large positive
arguments, where ``erfcx(x) ~ 1 / (x * sqrt(pi))``.
"""

from __future__ import annotations

import numpy as np
import scipy.special as _sp

__all__ = ["erfc", "erfcx"]


def erfc(x):
    """Complementary error function, elementwise."""
    return _sp.erfc(x)


def erfcx(x):
    """Scaled complementary error function ``exp(x^2) erfc(x)``, elementwise.

    Stable for arbitrarily large positive ``x``; grows like ``2 exp(x^2)``
    for large negative ``x``, so callers must keep negative arguments small
    or rearrange their expressions first.
    """
    return _sp.erfcx(x)


def erfcx_reflect(x):
    """``erfcx`` evaluated via the reflection ``2 exp(x^2) - erfcx(-x)``.

    Only meaningful when the caller has already factored out ``exp(x^2)``;
    exposed for testing the identity, not for general use.
    """
    x = np.asarray(x, dtype=float)
    return 2.0 * np.exp(x * x) - _sp.erfcx(-x)
