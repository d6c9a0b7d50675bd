"""Bit-level model of IEEE half-precision (binary16) values.

A half word is handled as its raw 16-bit pattern: 1 sign bit, 5 exponent
bits, 10 mantissa bits.  This module provides exact encode/decode, ulp
arithmetic, prefix truncation with midpoint fill, and the 8/4/4-bit chunk
split used by the plane-packed cache storage.

Scalar functions take and return plain ints (bit patterns).  The ``_array``
variants operate on numpy ``uint16`` arrays and are the ones used on hot
paths; both share the same bit definitions.
"""

from __future__ import annotations

import math
from typing import NamedTuple

import numpy as np

SIGN_MASK = 0x8000
EXP_MASK = 0x7C00
MANT_MASK = 0x03FF
EXP_SHIFT = 10
EXP_BIAS = 15
MANT_BITS = 10
EXP_SPECIAL = 31  # biased exponent of inf/NaN

# Spacing of subnormals (and of zero, by convention) is 2^-24.
SUBNORMAL_ULP_EXP = -24


class ChunkTriple(NamedTuple):
    """The three storage chunks of one half word.

    ``head`` carries sign, all 5 exponent bits and the top 2 mantissa bits;
    ``mid`` and ``low`` are the next and last 4 mantissa bits.
    """

    head: int  # 8 bits
    mid: int   # 4 bits
    low: int   # 4 bits


def sign_bit(word: int) -> int:
    return (word >> 15) & 0x1


def biased_exponent(word: int) -> int:
    return (word >> EXP_SHIFT) & 0x1F


def mantissa(word: int) -> int:
    return word & MANT_MASK


def is_finite_word(word: int) -> bool:
    return biased_exponent(word) != EXP_SPECIAL


def finite_mask(words: np.ndarray) -> np.ndarray:
    """Boolean mask of the patterns that denote finite values."""
    return (np.asarray(words, dtype=np.uint16) & EXP_MASK) != EXP_MASK


def decode(word: int) -> float:
    """Exact real value of a bit pattern (inf/NaN come back as float inf/nan)."""
    _check_word(word)
    return float(np.uint16(word).view(np.float16))


def decode_array(words: np.ndarray) -> np.ndarray:
    """Exact float64 values of a uint16 pattern array."""
    return np.asarray(words, dtype=np.uint16).view(np.float16).astype(np.float64)


def encode(value: float) -> int:
    """Round-to-nearest-even half encoding; overflow saturates to +-inf."""
    with np.errstate(over="ignore"):
        return int(np.float16(value).view(np.uint16))


def encode_array(values: np.ndarray) -> np.ndarray:
    """Round-to-nearest-even half encoding of a float array, as uint16 patterns."""
    with np.errstate(over="ignore"):
        return np.asarray(values, dtype=np.float64).astype(np.float16).view(np.uint16)


def ulp_exponent(word: int) -> int:
    """Exponent u of the local spacing 2^u of representable values at ``word``.

    Normals: (biased - 15) - 10.  Subnormals and zeros: -24.
    """
    e = biased_exponent(word)
    if e == EXP_SPECIAL:
        raise ValueError(f"non-finite half word 0x{word:04X}")
    return max(e, 1) - EXP_BIAS - MANT_BITS


def ulp_exponent_array(words: np.ndarray) -> np.ndarray:
    """Vectorized ulp_exponent; caller must pass finite patterns only."""
    w = np.asarray(words, dtype=np.uint16)
    if not finite_mask(w).all():
        raise ValueError("non-finite half word in array")
    e = (w >> EXP_SHIFT).astype(np.int32) & 0x1F
    return np.maximum(e, 1) - EXP_BIAS - MANT_BITS


def magnitude_exponent(word: int) -> int:
    """floor(log2 |value|) of a finite, nonzero half word (subnormal-aware)."""
    e = biased_exponent(word)
    if e == EXP_SPECIAL:
        raise ValueError(f"non-finite half word 0x{word:04X}")
    m = mantissa(word)
    if e == 0:
        if m == 0:
            raise ValueError("zero has no magnitude exponent")
        return (m.bit_length() - 1) + SUBNORMAL_ULP_EXP
    return e - EXP_BIAS


def truncate_fill(word: int, kept_bits: int) -> int:
    """Keep the top ``kept_bits`` mantissa bits, midpoint-fill the rest.

    The dropped field is replaced by 1 followed by zeros, which centers the
    reconstructed value in the truncation interval; sign and exponent are
    untouched.  ``kept_bits`` = 10 is the identity.
    """
    _check_word(word)
    if not 0 <= kept_bits <= MANT_BITS:
        raise ValueError(f"kept mantissa bits must be in [0, 10], got {kept_bits}")
    if not is_finite_word(word):
        raise ValueError(f"non-finite half word 0x{word:04X}")
    if kept_bits == MANT_BITS:
        return word
    dropped = MANT_BITS - kept_bits
    fill = 1 << (dropped - 1)
    return (word & ~((1 << dropped) - 1) & 0xFFFF) | fill


def truncate_fill_array(words: np.ndarray, kept_bits) -> np.ndarray:
    """Vectorized truncate_fill; ``kept_bits`` may be scalar or per-element."""
    w = np.asarray(words, dtype=np.uint16)
    if not finite_mask(w).all():
        raise ValueError("non-finite half word in array")
    t = np.asarray(kept_bits, dtype=np.int64)
    if ((t < 0) | (t > MANT_BITS)).any():
        raise ValueError("kept mantissa bits must be in [0, 10]")
    dropped = MANT_BITS - t
    keep_mask = (0xFFFF << dropped) & 0xFFFF
    fill = np.where(dropped > 0, 1 << np.maximum(dropped - 1, 0), 0)
    return ((w & keep_mask) | fill).astype(np.uint16)


def split_chunks(word: int) -> ChunkTriple:
    """Slice a pattern into its 8-bit head and two 4-bit tail nibbles."""
    _check_word(word)
    return ChunkTriple(head=word >> 8, mid=(word >> 4) & 0xF, low=word & 0xF)


def merge_chunks(head: int, mid: int | None = None, low: int | None = None) -> int:
    """Rebuild a half word from a chunk prefix, midpoint-filling absent chunks.

    Tiers are prefixes: passing ``low`` without ``mid`` is rejected.  With all
    three chunks the original word is reproduced bit-exactly; shorter prefixes
    equal truncate_fill with 2 or 6 kept mantissa bits.
    """
    if not 0 <= head <= 0xFF:
        raise ValueError(f"head chunk out of range: {head}")
    if mid is None:
        if low is not None:
            raise ValueError("non-prefix tier: low nibble without mid nibble")
        return (head << 8) | 0x80
    if not 0 <= mid <= 0xF:
        raise ValueError(f"mid nibble out of range: {mid}")
    if low is None:
        return (head << 8) | (mid << 4) | 0x8
    if not 0 <= low <= 0xF:
        raise ValueError(f"low nibble out of range: {low}")
    return (head << 8) | (mid << 4) | low


def _check_word(word: int) -> None:
    if not 0 <= word <= 0xFFFF:
        raise ValueError(f"half word out of range: {word}")


def float16_round(values: np.ndarray) -> np.ndarray:
    """Round float64 values through fp16 and back (the pipeline output grid)."""
    with np.errstate(over="ignore"):
        return np.asarray(values, dtype=np.float64).astype(np.float16).astype(np.float64)


def frexp_exponents(values: np.ndarray) -> np.ndarray:
    """floor(log2 |x|) per element for nonzero finite float64 inputs."""
    _, e = np.frexp(np.asarray(values, dtype=np.float64))
    return e.astype(np.int64) - 1
