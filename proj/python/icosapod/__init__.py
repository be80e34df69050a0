"""Line-symmetric mobile pods from quartic spectrahedra."""

from ._core import (
    IcosapodError,
    __version__,
    adapt_contain_E,
    build_pod,
    burmester_from_trace,
    compute_type,
    example_legs,
    example_line,
    example_space,
    random_space_with_E,
    stats,
    symmetroid_nodes,
    trace,
    verify_example,
)

__all__ = [
    "IcosapodError",
    "__version__",
    "adapt_contain_E",
    "build_pod",
    "burmester_from_trace",
    "compute_type",
    "example_legs",
    "example_line",
    "example_space",
    "random_space_with_E",
    "stats",
    "symmetroid_nodes",
    "trace",
    "verify_example",
]
