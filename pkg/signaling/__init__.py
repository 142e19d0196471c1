"""Forced-collision signaling codecs"""
from .codec import (
    BitMessage, CodecParams, CodecError,
    float_to_binary, binary_to_float, int_to_binary, binary_to_int,
    bit_arm, encode_schedule, decode_window,
    quantization_bits, decision_bits, one_bit_miss_probability
)

__all__ = [
    'BitMessage',
    'CodecParams',
    'CodecError',
    'float_to_binary',
    'binary_to_float',
    'int_to_binary',
    'binary_to_int',
    'bit_arm',
    'encode_schedule',
    'decode_window',
    'quantization_bits',
    'decision_bits',
    'one_bit_miss_probability'
]
