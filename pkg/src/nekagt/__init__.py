"""Exact low-order checks of the AGT correspondence at central charge one."""
from .checks import CheckReport, CheckSpec, run_check
from .nekrasov import GaugeConfig, W_element, Z_direct, Z_prime, Z_trace
from .virasoro import agt_substitution, block, gram

__version__ = "0.1.0"

__all__ = [
    "CheckReport", "CheckSpec", "GaugeConfig", "W_element", "Z_direct", "Z_prime", "Z_trace",
    "agt_substitution", "block", "gram", "run_check",
]
