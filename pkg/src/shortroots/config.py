"""Size caps for the exhaustive parts of the library.

All caps live here.  Two of them can be overridden from the environment:

    SHORTROOTS_MAX_W        largest Weyl group order enumerated exhaustively
    SHORTROOTS_MAX_DEGREE   default truncation degree for graded characters
"""

import os
from dataclasses import dataclass, replace

ENV_MAX_WEYL = "SHORTROOTS_MAX_W"
ENV_MAX_DEGREE = "SHORTROOTS_MAX_DEGREE"


@dataclass(frozen=True)
class Limits:
    max_weyl_order: int = 1152      # exhaustive Weyl group work refuses beyond this
    max_series_degree: int = 8      # default graded-character truncation
    max_character_rank: int = 4     # nullcone characters refuse above this rank
    max_closure_size: int = 10 ** 6  # subgroup closure refusal bound
    max_poset_size: int = 64        # antichain brute force refusal bound
    zarhin_coeff_bound: int = 3     # coefficient box for the zero-weight-ratio sweep


def current_limits() -> Limits:
    """Default limits, with the two environment overrides applied."""
    limits = Limits()
    if ENV_MAX_WEYL in os.environ:
        limits = replace(limits, max_weyl_order=int(os.environ[ENV_MAX_WEYL]))
    if ENV_MAX_DEGREE in os.environ:
        limits = replace(limits, max_series_degree=int(os.environ[ENV_MAX_DEGREE]))
    return limits
