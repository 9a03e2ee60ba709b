"""Planar Stark problem: Levi-Civita regularization, period functions and the
concave toric domain bounded by the regularized energy hypersurface."""

from ._core import (
    CollisionError,
    DomainError,
    EscapeError,
    IntegratorSpec,
    NumericalError,
    RegimeError,
    Scheme,
    Selector,
    __version__,
    action_T,
    critical_value,
    ellip_k,
    ellip_k_d1,
    ellip_k_d2,
    ellip_k_oracle,
    flow_equivalence,
    hamiltonian,
    hill_classify,
    hill_components,
    lc_lift,
    log_k_d1,
    log_phi_d1,
    measure_period,
    moment_image,
    period_oracle,
    phi,
    potential,
    profile_sample,
    profile_second_derivative,
    profile_slope,
    regularized_energy,
    tau1,
    tau2,
    torus_act,
    turning_point,
    verify_convexity,
)

__all__ = [name for name in dir() if not name.startswith("_")]
