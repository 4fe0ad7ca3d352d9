"""Direct scattering transform and long-time asymptotics for the coupled
dispersive AB system, with a method-of-lines reference solver."""

from ._core import (  # noqa: F401
    AsymptoticSolution,
    DeltaData,
    EvolveConfig,
    FieldState,
    InitialData,
    LocalModel,
    ModelParameters,
    RayCoordinates,
    ScatteringData,
    build_delta_data,
    build_local_model,
    check_no_discrete_spectrum,
    compare_asymptotics,
    complex_gamma,
    critical_points,
    delta,
    delta_boundary,
    envelope_profile,
    evaluate_asymptotics,
    evolve,
    evolve_scattering,
    leading_A,
    make_initial_data,
    make_z_grid,
    parabolic_cylinder_d,
    ray_from_xt,
    ray_from_z0,
    reflection,
    sobolev_norm_h11,
    theta,
)

__all__ = [n for n in dir() if not n.startswith("_")]
__version__ = "0.1.0"
