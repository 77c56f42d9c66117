//! Length-control gadgets: vertex expansions, window paths, adjusters and
//! exact-length path construction, plus a brute-force exact-length oracle
//! used to cross-check them.

mod adjuster;
mod exact;
mod expansion;
mod oracle;
mod window;

pub use adjuster::{
    build_simple_adjuster, chain_adjusters, find_adjuster_avoiding, validate_adjuster, validate_adjuster_with,
    Adjuster, AdjusterConfig, AdjusterReport, ChainOutcome, DEFAULT_RETRY_BUDGET,
};
pub use exact::{exact_length_path, exact_length_path_between, AdjusterUse, ExactOptions, ExactPathReport, ExactStage};
pub use expansion::{enlarge_expansions, find_vertex_expansions, trim_expansion, VertexExpansion};
pub use oracle::{exact_length_path_oracle, OracleConfig, DEFAULT_ORACLE_BUDGET, DEFAULT_ORACLE_CAP};
pub use window::{pair_window_slack, path_in_window, two_paths_in_window, window_slack};

