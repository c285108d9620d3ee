"""
Default limits.
"""

from dataclasses import dataclass


DEFAULT_ELEMENT_CAP = 5_000_000
DEFAULT_SUBSET_LIMIT = 20
DEFAULT_UBM_LIMIT = 10
DEFAULT_SUITE_SEED = 20240229


@dataclass(frozen=True)
class Limits:
    """
    Limits for group enumeration and brute-force sweeps.

    `element_cap` bounds the number of elements of any enumerated group,
    `subset_limit` the state count accepted by the brute-force uniform
    minimality check and `ubm_limit` the state count of each factor in
    boolean sweeps over pairs of subsets.
    """

    element_cap: int = DEFAULT_ELEMENT_CAP
    subset_limit: int = DEFAULT_SUBSET_LIMIT
    ubm_limit: int = DEFAULT_UBM_LIMIT

    def __post_init__(self) -> None:
        for name in ("element_cap", "subset_limit", "ubm_limit"):
            value = getattr(self, name)
            if not (isinstance(value, int) and value > 0):
                raise ValueError(f"{name} must be a positive integer")
