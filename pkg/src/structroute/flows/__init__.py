"""Exact multicommodity flows: LP feasibility, max-flow, decomposition and
the sequential construction."""

from .construct import ConstructResult, Step, residual_capacities, sequential_construct
from .decompose import PathDecomposition, decompose_flow
from .maxflow import MaxFlowResult, max_flow, residual_cut
from .mcf import MCFResult, solve_mcf
from .model import FlowError, MultiFlow
from .simplex import LPResult, solve_lp

__all__ = [
    "ConstructResult", "FlowError", "LPResult", "MCFResult", "MaxFlowResult",
    "MultiFlow", "PathDecomposition", "Step", "decompose_flow", "max_flow",
    "residual_capacities", "residual_cut", "sequential_construct", "solve_lp",
    "solve_mcf",
]
