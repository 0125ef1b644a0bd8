"""Run counters mirroring the benchmark tables."""

from __future__ import annotations

from dataclasses import dataclass, field, asdict


@dataclass
class RunStats:
    """Counters collected by one engine run.

    ``multiplications`` counts one unit per coefficient-coefficient product
    actually executed while adding a scaled reducer (the convention is one
    count per term of the reducer per reduction step).  ``interred_*`` hold
    the extra work done by interreduction between incremental steps; the
    plain counters never include it.
    """

    zero_reductions: int = 0
    basis_size: int = 0
    syzygy_count: int = 0
    s_reduction_steps: int = 0
    multiplications: int = 0
    interred_reduction_steps: int = 0
    interred_multiplications: int = 0
    wall_time_ms: float = 0.0
    extra: dict = field(default_factory=dict)

    def as_dict(self) -> dict:
        d = asdict(self)
        d.pop("extra")
        return d
