"""High-order finite-difference WENO solver for ideal MHD with constrained transport."""

from .grid import ConfigurationError, Field, Grid, allocate_field
from .physics import (
    GAMMA,
    EigenSystem,
    InvalidStateError,
    PositivityError,
    cons_to_prim,
    eigensystem,
    flux,
    prim_to_cons,
    wave_speeds,
)
from .problems import PROBLEMS, Problem, get_problem
from .timestepper import MHDSystem, SolverConfig, State, advance_to, compute_dt, ssp_rk4_step

__all__ = [
    "ConfigurationError",
    "EigenSystem",
    "Field",
    "GAMMA",
    "Grid",
    "InvalidStateError",
    "MHDSystem",
    "PROBLEMS",
    "PositivityError",
    "Problem",
    "SolverConfig",
    "State",
    "advance_to",
    "allocate_field",
    "compute_dt",
    "cons_to_prim",
    "eigensystem",
    "flux",
    "get_problem",
    "prim_to_cons",
    "ssp_rk4_step",
    "wave_speeds",
]
