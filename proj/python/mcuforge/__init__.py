"""Linear-depth, ancilla-free synthesis of multi-controlled single-qubit gates.

The heavy lifting lives in the C++ extension module; this package re-exports
its public surface.
"""

from mcuforge._core import (  # noqa: F401
    BenchRow,
    Circuit,
    DepthReport,
    EigenForm2,
    ExperimentResult,
    Gate,
    GateKind,
    Histogram,
    MCGateSpec,
    NoiseSpec,
    RootBranch,
    Statevector,
    Unitary2,
    VerifyFailure,
    VerifyOptions,
    VerifyReport,
    ZyzAngles,
    adjoint,
    apply_gate,
    bench_csv,
    build_cnu,
    build_experiment_a,
    build_experiment_b,
    build_p,
    build_p_product,
    build_q,
    circuit_from_json,
    circuit_to_json,
    circuit_unitary,
    cnu_controlled_count,
    compose,
    depth_formula,
    depth_scaling_table,
    distance,
    eigendecompose,
    experiments_csv,
    invert,
    is_lowered,
    lower_controlled,
    make_rx,
    make_ry,
    make_rz,
    oracle_cnu,
    principal_root,
    random_su2,
    run_experiment_a,
    run_experiment_b,
    run_noisy,
    run_statevector,
    schedule_asap,
    to_qasm,
    verify_decomposition,
    zyz_decompose,
)

__version__ = "0.1.0"
