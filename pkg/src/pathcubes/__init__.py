"""Independent subsets of powers of paths and their Hasse diagrams (generalized Fibonacci cubes)."""
from .counting import (
    CountTable,
    PathPower,
    SequenceWindow,
    binomial,
    count_containing,
    count_independent_closed,
    count_independent_k,
    count_independent_recurrence,
    count_table,
    edges_convolution,
    edges_rank_weighted,
    edges_sequence,
    extended_count,
    extended_count_k,
    fibonacci_window,
    h_fibonacci,
    independent_sequence,
    max_independent_size,
)
from .enumeration import (
    ENUMERATION_CAP,
    enumerate_independent,
    enumerate_independent_k,
    is_independent,
)
from .errors import CapacityError
from .hasse import HasseGraph, build_hasse, covers, down_degrees, edge_count

__version__ = "0.1.0"
