"""Precision-aligned tiered reads for fp16 KV caches, simulated bit-exactly."""

__version__ = "0.1.0"

from alignedkv.align_core import AlignConfig, DegenerateInputError, Tier
from alignedkv.kv_store import AccessCounter, KVStore, PlaneTensor

__all__ = [
    "AccessCounter",
    "AlignConfig",
    "DegenerateInputError",
    "KVStore",
    "PlaneTensor",
    "Tier",
    "__version__",
]
