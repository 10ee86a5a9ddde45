"""Newton interpolation at extreme degrees on well-ordered nodes.

Node sequences (Chebyshev roots, Leja orderings, Fast Leja points), the
Newton-form interpolant, discrete error norms for a four-function benchmark
suite, and a sweep runner with CSV/plot/library tooling.
"""

from .nodes import (CandidatePool, Interval, NodeSequence, STANDARD_INTERVAL,
                    chebyshev_roots, fast_leja, fast_leja_extend, from_standard,
                    leja_order, log_multiplicative_distance, to_standard)
from .newton import NewtonInterpolant, append_node, evaluate, evaluate_grid, fit
from .testbed import (ErrorRecord, TEST_FUNCTIONS, TestFunction,
                      evaluation_grid, measure, norms, test_function)
from .library import (LibraryFormatError, load_library, precompute_library,
                      read_library, write_library)
from .sweep import (DEFAULT_DEGREES, DEFAULT_FAMILIES, SweepConfig, build_nodes,
                    emit_csv, emit_plot_script, records_to_csv, run_sweep)

__version__ = "0.1.0"

__all__ = [
    "CandidatePool", "Interval", "NodeSequence", "STANDARD_INTERVAL",
    "chebyshev_roots", "fast_leja", "fast_leja_extend", "from_standard",
    "leja_order", "log_multiplicative_distance", "to_standard",
    "NewtonInterpolant", "append_node", "evaluate", "evaluate_grid", "fit",
    "ErrorRecord", "TEST_FUNCTIONS", "TestFunction", "evaluation_grid",
    "measure", "norms", "test_function",
    "LibraryFormatError", "load_library", "precompute_library",
    "read_library", "write_library",
    "DEFAULT_DEGREES", "DEFAULT_FAMILIES", "SweepConfig", "build_nodes",
    "emit_csv", "emit_plot_script", "records_to_csv", "run_sweep",
    "__version__",
]
