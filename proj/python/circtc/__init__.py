"""Total colorings of circulant graphs."""

from ._circtc import (
    CirctcError,
    degree,
    edges,
    equitable_nsd_power_cycle,
    latin_square,
    one_factorize,
    power_cycle_even,
    power_cycle_odd,
    reproduce,
    thm31,
    thm32,
    thm33,
    thm34,
    total_chromatic,
    verify,
)

__all__ = [
    "CirctcError",
    "degree",
    "edges",
    "equitable_nsd_power_cycle",
    "latin_square",
    "one_factorize",
    "power_cycle_even",
    "power_cycle_odd",
    "reproduce",
    "thm31",
    "thm32",
    "thm33",
    "thm34",
    "total_chromatic",
    "verify",
]
