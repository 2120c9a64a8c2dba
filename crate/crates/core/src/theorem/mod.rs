//! The identities tying multiweb traces to Pfaffians, and the experiments
//! built on them.

mod hmatrix;
mod kasteleyn;

pub use hmatrix::{build_h, numeric_weights, sum_traces, symbolic_weights, unit_weights, verify_main, web_weight, HMatrix, MainCheck};
pub use kasteleyn::{dimer_partition, kasteleyn_trace_decomposition, verify_kasteleyn, ColoredDecomposition, KasteleynCheck, TraceDecomposition};
mod spin;
pub use spin::{annulus_parity, annulus_parity_enumerated, double_dimer_expectation, spin_correlation, spin_correlation_enumerated, SpinCorrelation};
mod u2;
pub use u2::{
    cycle_graph, doubled_exterior_trace, extract_ck, raw_loop_trace, rsigns, rsigns_raw, solve_theta, solved_theta, u2_loop_trace, u2_matrix,
    u2_rho, z4, CkFit, U2LoopKind,
};
