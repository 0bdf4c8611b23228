"""Quantum dynamical maps: A/B forms, CP witnesses, Markovianity, concurrence.

Map matrices travel as d^2 x d^2 complex numpy arrays; states as d x d arrays.
"""

from qdmaps._core import (
    ClassificationRecord,
    Error,
    DimensionMismatchError,
    DomainValueError,
    InconsistentFlagsError,
    InvalidStateError,
    MapDiagnostics,
    MapParseError,
    ModelFamily,
    NotCPError,
    NotHermitianError,
    PFunction,
    SingularIntermediateMapError,
    SingularMatrixError,
    Verdict,
    a_to_b,
    apply_amap,
    b_to_a,
    choi_from_action,
    classify,
    compose,
    concurrence,
    concurrence_trajectory,
    diagnose,
    expm_hermitian_generator,
    hermitian_eigs,
    identity_amap,
    intermediate_amap,
    kraus_from_bmap,
    max_entangled_projector,
    min_choi_eigenvalue,
    p_eval,
    partial_trace,
    pauli_x,
    pauli_y,
    pauli_z,
    read_map_file,
    realign,
    scan_divisibility,
    sigmazx_amap,
    sigmazx_amap_dilation,
    sigmazx_intermediate_bmap,
    spinstar_amap,
    spinstar_amap_dilation,
    spinstar_intermediate_bmap,
    werner_amap,
    werner_bmap,
    werner_intermediate_bmap,
    write_map_file,
)

__all__ = [
    "ClassificationRecord",
    "Error",
    "DimensionMismatchError",
    "DomainValueError",
    "InconsistentFlagsError",
    "InvalidStateError",
    "MapDiagnostics",
    "MapParseError",
    "ModelFamily",
    "NotCPError",
    "NotHermitianError",
    "PFunction",
    "SingularIntermediateMapError",
    "SingularMatrixError",
    "Verdict",
    "a_to_b",
    "apply_amap",
    "b_to_a",
    "choi_from_action",
    "classify",
    "compose",
    "concurrence",
    "concurrence_trajectory",
    "diagnose",
    "expm_hermitian_generator",
    "hermitian_eigs",
    "identity_amap",
    "intermediate_amap",
    "kraus_from_bmap",
    "max_entangled_projector",
    "min_choi_eigenvalue",
    "p_eval",
    "partial_trace",
    "pauli_x",
    "pauli_y",
    "pauli_z",
    "read_map_file",
    "realign",
    "scan_divisibility",
    "sigmazx_amap",
    "sigmazx_amap_dilation",
    "sigmazx_intermediate_bmap",
    "spinstar_amap",
    "spinstar_amap_dilation",
    "spinstar_intermediate_bmap",
    "werner_amap",
    "werner_bmap",
    "werner_intermediate_bmap",
    "write_map_file",
]
