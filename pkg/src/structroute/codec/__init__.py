"""Huffman block coding and block routing along path flows."""

from .huffman import Codebook, entropy_bits, huffman_codebook
from .prng import Sampler, SplitMix64
from .schedule import (MAX_BLOCK_ALPHABET, Route, RoutingSchedule, ScheduleError, Source,
                       build_schedule, codebook_bound_holds)
from .simulate import ArcStats, Frame, ReconstructionError, SimReport, simulate

__all__ = [
    "ArcStats", "Codebook", "Frame", "MAX_BLOCK_ALPHABET", "ReconstructionError", "Route",
    "RoutingSchedule", "Sampler", "ScheduleError", "SimReport", "Source", "SplitMix64",
    "build_schedule", "codebook_bound_holds", "entropy_bits", "huffman_codebook", "simulate",
]
