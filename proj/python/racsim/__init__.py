"""Trace-driven cache simulation with a decoupled, randomly managed data store.

The heavy lifting lives in the compiled ``_core`` extension; this package
re-exports its public names.
"""

from ._core import (
    Access,
    AccessKind,
    ConfigError,
    SimConfig,
    SplitMix64,
    StatsReport,
    TraceError,
    gen_cyclic,
    gen_single_set,
    gen_uniform,
    gen_zipf,
    read_trace,
    simulate,
)

__all__ = [
    "Access",
    "AccessKind",
    "ConfigError",
    "SimConfig",
    "SplitMix64",
    "StatsReport",
    "TraceError",
    "gen_cyclic",
    "gen_single_set",
    "gen_uniform",
    "gen_zipf",
    "read_trace",
    "simulate",
]
