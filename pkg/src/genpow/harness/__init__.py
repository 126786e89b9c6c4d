"""Seeded instance generation, theorem verifiers and counterexample hunts."""
from .generate import Kind, MatrixGenSpec, gen, trial_seed
from .hunt import HuntResult, exp_order_gap, hunt_exp_monotonicity_failure
from .report import TheoremReport
from .theorems import (
    DEFAULT_DIMS,
    DEFAULT_SEED,
    DEFAULT_TRIALS,
    GATING,
    REGISTRY,
    verify_adjoint_transfer,
    verify_heinz,
    verify_heinz_noncommuting_probe,
    verify_identities,
    verify_log_product,
    verify_norm_equality,
    verify_two_pi_criterion,
    verify_wermuth,
)

__all__ = [
    "Kind",
    "MatrixGenSpec",
    "gen",
    "trial_seed",
    "HuntResult",
    "exp_order_gap",
    "hunt_exp_monotonicity_failure",
    "TheoremReport",
    "DEFAULT_DIMS",
    "DEFAULT_SEED",
    "DEFAULT_TRIALS",
    "GATING",
    "REGISTRY",
    "verify_adjoint_transfer",
    "verify_heinz",
    "verify_heinz_noncommuting_probe",
    "verify_identities",
    "verify_log_product",
    "verify_norm_equality",
    "verify_two_pi_criterion",
    "verify_wermuth",
]
