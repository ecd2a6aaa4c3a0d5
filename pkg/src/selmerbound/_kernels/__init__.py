"""Hot-loop kernels with a compiled fast path and a pure-Python twin.

The compiled extension (Cython) is optional: if it failed to build, or if
the environment variable SELMERBOUND_PURE=1 is set, the pure implementation
is used instead.  Both expose the same two functions:

``trial_factor(n, primes)``
    exponents of the given primes in n, plus the unfactored cofactor.

``splitting_degrees(coeffs, p)``
    degrees of the irreducible factors of a monic squarefree polynomial
    modulo p, via distinct-degree factorization.
"""

import os

if os.environ.get("SELMERBOUND_PURE") == "1":
    from . import pure as _impl

    BACKEND = "pure"
else:
    try:
        from . import fast as _impl  # type: ignore[attr-defined]

        BACKEND = "fast"
    except ImportError:
        from . import pure as _impl

        BACKEND = "pure"

trial_factor = _impl.trial_factor
splitting_degrees = _impl.splitting_degrees

__all__ = ["trial_factor", "splitting_degrees", "BACKEND"]
