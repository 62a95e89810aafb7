//! Separating weightings of edge polytopes and everything derived from them.

mod bipartite;
mod certificate;
mod oracle;
mod partition;
mod report;
mod search;
mod structure;
mod weighting;

pub use bipartite::{bipartite_zero_weighting, convert_type_i_to_ii, zero_out_sides};
pub use certificate::{classify, is_separating, Certificate, Classification};
pub use oracle::{brute_force_certificates, has_four_cycle_on, OracleHit, DEFAULT_ORACLE_CAP};
pub use partition::{
    partition_agrees, partition_view, verify_partition_i, verify_partition_ii, PartitionView,
};
pub use report::{component_reduce, decide, AnalysisReport, ComponentVerdict, Timings, Witness};
pub use search::{search, search_type_i, search_type_ii, DEFAULT_SEARCH_CAP};
pub use structure::{
    structure_check, zero_subgraph, Clause, StructureCheck, ZeroComponent, ZeroSubgraph,
};
pub use weighting::{edge_signs, EdgeSign, Pattern, Sign, Weight, Weighting};
